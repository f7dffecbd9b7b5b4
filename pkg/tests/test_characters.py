"""Dirichlet characters on A/nA, convolutions, Gauss-Thakur sums, and the
power sums s(chi, k)."""

import itertools

import pytest

from drinfeld.algebra import (Pol, factor_squarefree_monic, finite_field,
                              parse_pol, polys_below_degree)
from drinfeld.carlitz import TorsionContext
from drinfeld.characters import (DirichletCharacter, char_sum_s, convolve,
                                 gauss_thakur, jacobi_factor)
from drinfeld.errors import ConductorMismatch, NotPrimitive

F3 = finite_field(3)
TH = Pol.x(F3)


def pol3(text):
    return parse_pol(F3, text)


def all_primitive(npol):
    primes = factor_squarefree_monic(npol)
    q = npol.field.order
    ranges = [range(1, q ** p.degree - 1) for p in primes]
    return [DirichletCharacter(npol.field,
                               [(p, None, e) for p, e in zip(primes, exps)])
            for exps in itertools.product(*ranges)]


class TestCharacter:
    def test_multiplicative(self):
        chi = DirichletCharacter.from_conductor(pol3("t^2+1"), 3)
        big = chi.big
        units = [b for b in polys_below_degree(F3, 2)
                 if b and b.gcd(pol3("t^2+1")).is_one()]
        for a in units:
            for b in units:
                assert chi.eval((a * b) % pol3("t^2+1")) == big.mul(
                    chi.eval(a), chi.eval(b))

    def test_inverse_and_product(self):
        chi = DirichletCharacter.from_conductor(pol3("t^2+1"), 3)
        prod = chi * chi.inverse()
        assert prod.is_trivial()
        assert chi.inverse().inverse() == chi

    def test_vanishing_on_nonunits(self):
        chi = DirichletCharacter.from_conductor(TH, 1)
        assert chi.eval(Pol.zero(F3)) == 0
        assert chi.eval(TH) == 0

    def test_sign_counts(self):
        # at conductor t^2+1 (q=3) the 7 nontrivial characters split by
        # parity of the exponent: 4 odd-sign, 3 even-sign
        chis = all_primitive(pol3("t^2+1"))
        signs = [chi.sign for chi in chis]
        assert signs.count(1) == 4
        assert signs.count(0) == 3

    def test_primitivity(self):
        assert DirichletCharacter.from_conductor(TH, 1).is_primitive()
        assert not DirichletCharacter.trivial(TH).is_primitive()

    def test_conductor_mismatch_on_product(self):
        chi1 = DirichletCharacter.from_conductor(TH, 1)
        chi2 = DirichletCharacter.from_conductor(pol3("t+1"), 1)
        with pytest.raises(ConductorMismatch):
            chi1 * chi2


class TestConvolution:
    def test_lemma_at_linear_conductor(self):
        chis = all_primitive(TH)
        for chi1, chi2 in itertools.product(chis, repeat=2):
            scalar, prod = jacobi_factor(chi1, chi2)
            for delta in polys_below_degree(F3, 1):
                want = chi1.big.mul(prod.eval(delta), scalar)
                assert convolve(chi1, chi2, delta) == want

    def test_known_zero_binomial_case(self):
        # q=5, conductor t^2+2: exponents whose Jacobi binomial C(1,22)
        # vanishes give identically zero convolutions of nontrivial product
        F5 = finite_field(5)
        n = parse_pol(F5, "t^2+2")
        chi1 = DirichletCharacter.from_conductor(n, 2)
        chi2 = DirichletCharacter.from_conductor(n, 1)
        scalar, prod = jacobi_factor(chi1, chi2)
        assert scalar == 0
        for delta in [Pol.one(F5), parse_pol(F5, "t+1")]:
            assert convolve(chi1, chi2, delta) == 0


class TestGaussThakur:
    def test_basic_value(self):
        # q=3, conductor theta: g(chi_zeta) = 2*lambda, g^2 = -theta
        ctx = TorsionContext(TH)
        chi = DirichletCharacter.from_conductor(TH, 1)
        g = gauss_thakur(chi, ctx)
        lam = ctx.gens[0]
        assert g == lam.scale_const(2)
        assert g * g == ctx.lift_poly(TH).scale_const(2)

    def test_trivial_character(self):
        ctx = TorsionContext(TH)
        assert gauss_thakur(DirichletCharacter.trivial(TH), ctx) == ctx.ring.one

    def test_nonprimitive_rejected(self):
        n = TH * pol3("t+1")
        ctx = TorsionContext(n)
        half = DirichletCharacter(F3, [(TH, None, 1), (pol3("t+1"), None, 0)])
        with pytest.raises(NotPrimitive):
            gauss_thakur(half, ctx)

    def test_divisor_conductor_in_joint_ring(self):
        # the sum for a character mod theta embeds consistently in the
        # theta*(theta+1) torsion ring
        chi = DirichletCharacter.from_conductor(TH, 1)
        small = gauss_thakur(chi, TorsionContext(TH))
        joint = gauss_thakur(chi, TorsionContext(TH * pol3("t+1")))
        assert small.format() == joint.format()

    def test_conductor_must_divide(self):
        ctx = TorsionContext(TH)
        chi = DirichletCharacter.from_conductor(pol3("t+1"), 1)
        with pytest.raises(ConductorMismatch):
            gauss_thakur(chi, ctx)


class TestCharSums:
    def test_golden_values(self):
        # q=3, conductor theta, chi = chi_zeta:
        # s(chi,0) = 0, s(chi,1) = 2*lambda, s(chi,2) = 0
        ctx = TorsionContext(TH)
        chi = DirichletCharacter.from_conductor(TH, 1)
        lam = ctx.gens[0]
        assert not char_sum_s(chi, 0, ctx)
        assert char_sum_s(chi, 1, ctx) == lam.scale_const(2)
        assert not char_sum_s(chi, 2, ctx)

    def test_sign_congruence_vanishing(self):
        # s(chi,k) = 0 whenever k is not congruent to s_chi mod q-1
        ctx = TorsionContext(pol3("t^2+1"), ext_degree=2)
        for e in (1, 2, 3):
            chi = DirichletCharacter.from_conductor(pol3("t^2+1"), e,
                                                    big=ctx.big)
            for k in range(0, 7):
                if k == 0 or k % 2 != chi.sign % 2:
                    assert not char_sum_s(chi, k, ctx)

    def test_divisor_conductor(self):
        chi = DirichletCharacter.from_conductor(TH, 1)
        small = char_sum_s(chi, 1, TorsionContext(TH))
        joint = char_sum_s(chi, 1, TorsionContext(TH * pol3("t+1")))
        assert small.format() == joint.format()
