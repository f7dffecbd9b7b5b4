"""Dirichlet characters on A = F_q[theta] with square-free conductor.

A character is determined by one chosen root zeta_i of each prime factor
p_i of the conductor together with an exponent e_i:
chi(a) = a(zeta_1)^{e_1} * ... * a(zeta_r)^{e_r}, with the convention
0^0 = 1 so that exponent-zero factors never kill a value.
"""

from math import gcd

from .algebra import Pol, factor_squarefree_monic, finite_field, lucas_binomial
from .errors import ConductorMismatch, NotPrimitive


def _lcm(values):
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


class DirichletCharacter:
    """factors: tuple of (prime, root code in the big field, exponent)."""

    __slots__ = ("field", "big", "factors", "conductor")

    def __init__(self, field, factors, big=None):
        primes = [f[0] for f in factors]
        if big is None:
            D = _lcm([p.degree for p in primes]) if primes else 1
            big = finite_field(field.p, field.n * D)
        conductor = Pol.one(field)
        seen = set()
        resolved = []
        for item in factors:
            prime, root, e = item
            if prime.c in seen:
                raise ValueError("repeated prime factor")
            seen.add(prime.c)
            size = field.order ** prime.degree
            e = e % (size - 1)
            if root is None:
                roots = prime.roots_in(big)
                if not roots:
                    raise ValueError("no root of %s in the chosen constant field"
                                     % prime.format())
                root = min(roots)
            resolved.append((prime, root, e))
            conductor = conductor * prime
        self.field = field
        self.big = big
        self.factors = tuple(resolved)
        self.conductor = conductor

    @classmethod
    def from_conductor(cls, modulus, exponents, big=None):
        """Character on a square-free monic modulus with auto-chosen roots.

        exponents: int (same for all factors) or list aligned with the
        factorization order of the modulus.
        """
        primes = factor_squarefree_monic(modulus)
        if isinstance(exponents, int):
            exponents = [exponents] * len(primes)
        if len(exponents) != len(primes):
            raise ValueError("need one exponent per prime factor")
        return cls(modulus.field, [(p, None, e) for p, e in zip(primes, exponents)],
                   big=big)

    @classmethod
    def trivial(cls, modulus, big=None):
        return cls.from_conductor(modulus, 0, big=big)

    # -- structure --

    def is_trivial(self):
        return all(e == 0 for _, _, e in self.factors)

    def is_primitive(self):
        return all(e > 0 for _, _, e in self.factors)

    @property
    def sign(self):
        q = self.field.order
        return sum(e for _, _, e in self.factors) % (q - 1)

    def inverse(self):
        field = self.field
        q = field.order
        fac = [(p, r, (q ** p.degree - 1 - e) % (q ** p.degree - 1))
               for p, r, e in self.factors]
        return DirichletCharacter(field, fac, big=self.big)

    def __mul__(self, other):
        if not self.same_roots(other):
            raise ConductorMismatch("characters live on different data")
        q = self.field.order
        fac = [(p, r, (e1 + e2) % (q ** p.degree - 1))
               for (p, r, e1), (_, _, e2) in zip(self.factors, other.factors)]
        return DirichletCharacter(self.field, fac, big=self.big)

    def power(self, k):
        fac = [(p, r, e * k) for p, r, e in self.factors]
        return DirichletCharacter(self.field, fac, big=self.big)

    def same_roots(self, other):
        return (self.big is other.big
                and len(self.factors) == len(other.factors)
                and all(p1 == p2 and r1 == r2 for (p1, r1, _), (p2, r2, _)
                        in zip(self.factors, other.factors)))

    def __eq__(self, other):
        return (isinstance(other, DirichletCharacter) and self.same_roots(other)
                and all(e1 == e2 for (_, _, e1), (_, _, e2)
                        in zip(self.factors, other.factors)))

    def __hash__(self):
        return hash((id(self.big),) + tuple((p.c, r, e) for p, r, e in self.factors))

    # -- evaluation --

    def eval(self, a):
        """chi(a) as a big-field code; 0 exactly when a shares a factor
        with the conductor at which the exponent is positive."""
        big = self.big
        emb = big.embedding(self.field)
        out = 1
        for prime, root, e in self.factors:
            if e == 0:
                continue
            v = a.eval_in(big, root, emb)
            if v == 0:
                return 0
            out = big.mul(out, big.pow(v, e))
        return out

    def eval_inv(self, a):
        v = self.eval(a)
        return self.big.inv(v) if v else 0

    def describe(self, symbol="t"):
        parts = []
        for p, r, e in self.factors:
            parts.append({"prime": p.format(symbol), "zeta": r, "e": e})
        return {"conductor": self.conductor.format(symbol),
                "factors": parts, "sign": self.sign}

    def __repr__(self):
        return "chi{%s}" % "; ".join("%s^%d@%d" % (p.format(), e, r)
                                     for p, r, e in self.factors)


def char_eval(chi, a):
    return chi.eval(a)


def char_sign(chi):
    return chi.sign


def convolve(chi1, chi2, delta):
    """(chi1 * chi2)(delta) = sum over residues a of chi1(a)chi2(delta-a)."""
    _require_pair(chi1, chi2)
    big = chi1.big
    out = 0
    for a in _residues(chi1):
        v1 = chi1.eval(a)
        if v1:
            v2 = chi2.eval(delta - a)
            if v2:
                out = big.add(out, big.mul(v1, v2))
    return out


def jacobi_factor(chi1, chi2):
    """Closed form of the convolution: the constant
    prod_i (-1)^{1-j_i} * binom(k_i, |p_i|-1-j_i) and the product character,
    so that (chi1*chi2)(delta) = factor * (chi1 chi2)(delta)."""
    _require_pair(chi1, chi2)
    field = chi1.field
    q = field.order
    p = field.p
    val = 1
    for (prime, _, k), (_, _, j) in zip(chi1.factors, chi2.factors):
        size = q ** prime.degree
        b = lucas_binomial(k, size - 1 - j, p)
        if (1 - j) % 2:
            b = (-b) % p
        val = val * b % p
    return chi1.big.scalar(val), chi1 * chi2


def _require_pair(chi1, chi2):
    if not chi1.same_roots(chi2):
        raise ConductorMismatch("convolution requires identical conductor data")
    for (prime, _, k), (_, _, j) in zip(chi1.factors, chi2.factors):
        size = chi1.field.order ** prime.degree
        if not (1 <= k <= size - 2 and 1 <= j <= size - 2):
            raise ConductorMismatch("exponents must lie in 1..|p|-2 at every factor")


def _residues(chi):
    from .algebra import polys_below_degree
    return polys_below_degree(chi.field, chi.conductor.degree)


def _basic_gauss_sum(ctx, prime_index, root):
    """g(chi_zeta) = sum_{delta != 0} chi_zeta(delta)^{-1} C_delta(lambda)."""
    field = ctx.field
    big = ctx.big
    emb = big.embedding(field)
    prime = ctx.primes[prime_index]
    out = ctx.ring.zero
    for delta in ctx.residues(prime):
        if not delta:
            continue
        v = delta.eval_in(big, root, emb)
        term = ctx._carlitz_at_gen(delta, prime_index)
        out = out + term.scale_const(big.inv(v))
    return out


def gauss_thakur(chi, ctx):
    """Gauss-Thakur sum g(chi) in the torsion ring of the conductor.

    Each exponent e_i is expanded in base q; g(chi) is the product over
    all digits of the basic sums g(chi_{zeta_i^{q^j}})^{e_ij}.
    """
    if not chi.is_primitive():
        if chi.is_trivial():
            return ctx.ring.one
        raise NotPrimitive("Gauss-Thakur sums need a primitive character")
    if chi.conductor.gcd(ctx.modulus) != chi.conductor:
        raise ConductorMismatch("conductor must divide the context modulus")
    big = ctx.big
    conv = None if big is chi.big else big.embedding(chi.big)
    q = chi.field.order
    out = ctx.ring.one
    for prime, root, e in chi.factors:
        idx = ctx.primes.index(prime)
        r = conv[root] if conv else root
        while e:
            digit = e % q
            if digit:
                basic = _basic_gauss_sum(ctx, idx, r)
                out = out * basic ** digit
            e //= q
            r = big.pow(r, q)
    return out


def char_sum_s(chi, k, ctx):
    """s(chi, k) = sum over residues beta of chi^{-1}(beta) exp(beta/n)^k,
    for n the conductor (a divisor of the context modulus)."""
    n = chi.conductor
    if n.gcd(ctx.modulus) != n:
        raise ConductorMismatch("conductor must divide the context modulus")
    inv = chi.inverse()
    big = ctx.big
    conv = None
    if big is not chi.big:
        conv = big.embedding(chi.big)
    out = ctx.ring.zero
    for beta in ctx.residues(n):
        v = inv.eval(beta)
        if not v:
            continue
        code = conv[v] if conv else v
        if k == 0:
            out = out + ctx.ring.one.scale_const(code)
        else:
            out = out + (ctx.exp_at(beta, n) ** k).scale_const(code)
    return out
