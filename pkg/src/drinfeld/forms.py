"""Catalog of named forms, eigen-system verification, congruence checks,
the Eisenstein rank count, and naive local L-factors.

All Eisenstein objects are stored with the transcendental period factored
out: EHat is the A-expansion sum_c chi^{-1}(c) G_k(u(cz)) and ETilde is the
twisted component object sum_a chi^{-1}(a) E_(0,a); identities originally
stated with period powers are restated with the exactly equivalent scalar
g(chi^{-1})/p at the coefficient level.
"""

import json

from .algebra import Pol, monics_up_to_degree
from .carlitz import TorsionContext
from .characters import DirichletCharacter, gauss_thakur
from .errors import SignMismatch
from .series import (AExpansion, TwistedEisenstein, UExpansion,
                     goss_coeffs_in, moebius_of_series, poly_eval_scalar,
                     poly_eval_series, rescale_arg, u_of_az)
from .operators import hecke_a, hecke_twisted, hecke_u, twist_normalized


def bound_for_precision(field, N, min_exp=1):
    """Smallest degree bound b with min_exp * q^(b+1) >= N, so that terms
    at monics of degree > b cannot touch coefficients below N."""
    q = field.order
    b = 0
    while min_exp * q ** (b + 1) < N:
        b += 1
    return b


# -- catalog builders ------------------------------------------------------

def petrov_fs(ctx, s, bound):
    """The single-power-term cusp form family: c_a = a^(1+s(q-1)),
    weight 2+s(q-1), type 1.  s = 0 is rejected: that degenerate case is
    the quasi-modular false Eisenstein series, not a modular form."""
    if s < 1:
        raise ValueError("s must be >= 1 (s = 0 is only quasi-modular)")
    q = ctx.field.order
    e = 1 + s * (q - 1)
    return AExpansion.from_rule(ctx, "power", 1, 2 + s * (q - 1), 1,
                                lambda a: ctx.lift_poly(a ** e), bound)


def delta(ctx, bound):
    """The discriminant: c_a = a^(q(q-1)), index q-1, weight q^2-1,
    type q-1."""
    q = ctx.field.order
    return AExpansion.from_rule(ctx, "power", q - 1, q * q - 1, q - 1,
                                lambda a: ctx.lift_poly(a ** (q * (q - 1))),
                                bound)


def false_eisenstein(ctx, bound):
    """The quasi-modular series E: c_a = a, weight 2, type 1."""
    return AExpansion.from_rule(ctx, "power", 1, 2, 1,
                                lambda a: ctx.lift_poly(a), bound)


def eisenstein_ep(ctx, ppol, bound):
    """E_p := E(z) - p E(pz) in closed form: c_a = a on monics coprime to p,
    0 on multiples; weight 2, type 1, level p."""
    one = Pol.one(ctx.field)

    def rule(a):
        if a.gcd(ppol) != one:
            return ctx.ring.zero
        return ctx.lift_poly(a)
    return AExpansion.from_rule(ctx, "power", 1, 2, 1, rule, bound)


def fricke_eis(ctx, chi, k, bound):
    """EHat: the Goss-type A-expansion sum_c chi^{-1}(c) G_k(u(cz)) with the
    coefficient vanishing on multiples of the conductor made explicit (the
    trivial character would otherwise contribute there); weight k, type k,
    nebentypus chi^{-1}."""
    q = ctx.field.order
    if (chi.sign + k) % (q - 1) != 0:
        raise SignMismatch("need s_chi = -k mod q-1 (got s=%d, k=%d)"
                           % (chi.sign, k))
    ppol = chi.conductor
    one = Pol.one(ctx.field)
    inv = chi.inverse()
    emb = None if ctx.big is chi.big else ctx.big.embedding(chi.big)

    def rule(c):
        if c.gcd(ppol) != one:
            return ctx.ring.zero
        v = inv.eval(c)
        if not v:
            return ctx.ring.zero
        return ctx.big_const(emb[v] if emb else v)
    return AExpansion.from_rule(ctx, "goss", k, k, k, rule, bound,
                                neben=chi.inverse())


def twisted_eis(ctx, chi, k):
    """ETilde: the component object sum_a chi^{-1}(a) E_(0,a) of weight k."""
    return TwistedEisenstein.build(ctx, k, chi)


def raw_twist(F, chi, ctx, N):
    """Render a catalog form and apply the raw character projection."""
    from .operators import twist_raw
    return twist_raw(F.render(N), chi, ctx)


def normalized_twist(F, chi, ctx, N):
    """Render a catalog form and apply the normalized projection."""
    return twist_normalized(F.render(N), chi, ctx)


# -- reports ---------------------------------------------------------------

class VerificationReport:
    """Outcome of one exact identity check; deterministic per parameters."""

    __slots__ = ("identity", "params", "precision", "passed", "witness")

    def __init__(self, identity, params, precision, passed, witness=None):
        self.identity = identity
        self.params = dict(params)
        self.precision = precision
        self.passed = bool(passed)
        self.witness = witness

    def __bool__(self):
        return self.passed

    def to_dict(self):
        return {"identity": self.identity, "params": self.params,
                "precision": self.precision, "pass": self.passed,
                "witness": self.witness}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def __repr__(self):
        return self.to_json()


# -- constant terms --------------------------------------------------------

def eis_constant_term(chi, k, ctx):
    """sum_a chi^{-1}(a) G_k(1/lambda_a) over units a mod the conductor.

    Asserted nonzero and asserted to span the chi-eigenline of the Galois
    action lambda -> C_b(lambda); either failure is a genuine bug.
    """
    T = TwistedEisenstein.build(ctx, k, chi)
    val = T.constant_term()
    if not val:
        raise RuntimeError("constant term vanished for %r, k=%d" % (chi, k))
    emb = None if ctx.big is chi.big else ctx.big.embedding(chi.big)
    for b in ctx.units(chi.conductor):
        v = chi.eval(b)
        code = emb[v] if emb else v
        if ctx.galois(b)(val) != val.scale_const(code):
            raise RuntimeError("constant term is not a chi-eigenvector "
                               "at b = %s" % b.format())
    return val


# -- eigen-system verification ---------------------------------------------

def verify_eigensystem(form, qlist, expected, N):
    """Check T_q form = expected(q) * form for each q, with the engine
    picked by the object's type (A-expansion, twisted Eisenstein object, or
    u-expansion).  expected maps a monic prime to a ring scalar."""
    params = {"object": type(form).__name__,
              "primes": [q.format() for q in qlist], "N": N}
    witness = None
    passed = True
    for qpol in qlist:
        if isinstance(form, AExpansion):
            got = hecke_a(form, qpol)
            want = form.scaled_by(expected(qpol))
            bad = _first_coeff_mismatch(form.ctx, got, want)
        elif isinstance(form, TwistedEisenstein):
            got = hecke_twisted(form, qpol)
            want = form.scaled_by(expected(qpol))
            bad = None
            for key in want.components:
                if got.components.get(key) != want.components[key]:
                    bad = "component %s" % Pol(form.ctx.field, key).format()
                    break
        elif isinstance(form, UExpansion):
            size = form.ctx.field.order ** qpol.degree
            got = hecke_u(form, qpol, form.ctx)
            want = form.scale(expected(qpol)).truncate(form.prec // size)
            d = got.first_difference(want)
            bad = None if d is None else "u^%d" % d
        else:
            raise TypeError("no Hecke engine for %r" % type(form))
        if bad is not None:
            passed = False
            witness = "q=%s at %s" % (qpol.format(), bad)
            break
    return VerificationReport("eigensystem", params, N, passed, witness)


def _first_coeff_mismatch(ctx, F, G):
    for a in monics_up_to_degree(ctx.field, min(F.bound, G.bound)):
        if F.coefficient(a) != G.coefficient(a):
            return "a = %s" % a.format()
    return None


# -- congruence checks -----------------------------------------------------

def _scalar_divisible(ctx, x, zeta):
    """x must involve no torsion generator and be a polynomial in theta
    vanishing at theta = zeta."""
    if any(not ctx.free_of(i, x) for i in range(len(ctx.gens))):
        return "not free of the torsion generators"
    rf = x.scalar_part()
    if not rf:
        return None
    if not rf.is_pol():
        return "not integral in theta"
    if rf.num.eval(zeta) != 0:
        return "not divisible by (theta - zeta)"
    return None


def congruence_check(kind, ppol, s, N):
    """The weight-(2+s(q-1)) congruences mod (theta - zeta).

    kind "SF":        EHat_{chi_{p,s}}^{(1)} - f_s has every u-coefficient
                      a polynomial in theta divisible by (theta - zeta).
    kind "TwistedSF": (g(chi^{-1})/p)(ETilde(pz) - ETilde(z)) - proj_chi f_s
                      is torsion-free and (theta - zeta)-divisible.
    Here chi_{p,s} = chi_zeta^(|p| - 2 - s(q-1)), requiring |p| > 2+s(q-1).
    """
    field = ppol.field
    q = field.order
    size = q ** ppol.degree
    if size <= 2 + s * (q - 1):
        raise ValueError("need |p| > 2 + s(q-1); got %d <= %d"
                         % (size, 2 + s * (q - 1)))
    ctx = TorsionContext(ppol, ext_degree=ppol.degree)
    e = size - 2 - s * (q - 1)
    chi = DirichletCharacter.from_conductor(ppol, e, big=ctx.big)
    zeta = chi.factors[0][1]
    bound = bound_for_precision(field, N)
    fs = petrov_fs(ctx, s, bound)
    params = {"kind": kind, "p": ppol.format(), "s": s, "N": N, "e": e}
    if kind == "SF":
        diff = fricke_eis(ctx, chi, 1, bound).render(N) - fs.render(N)
    elif kind == "TwistedSF":
        R = twisted_eis(ctx, chi, 1).render(N)
        scalar = (gauss_thakur(chi.inverse(), ctx)
                  * ctx.lift_poly(ppol).invert())
        diff = ((rescale_arg(R, ppol) - R).scale(scalar)
                - twist_normalized(fs.render(N), chi, ctx))
    else:
        raise ValueError("kind must be 'SF' or 'TwistedSF'")
    witness = None
    for n in range(diff.prec):
        why = _scalar_divisible(ctx, diff.coeff(n), zeta)
        if why is not None:
            witness = "u^%d: %s" % (n, why)
            break
    return VerificationReport("congruence", params, N, witness is None,
                              witness)


# -- the EHat twist identity -----------------------------------------------

def ehat_twist_identity(chi, k, ppol, N):
    """proj_chi(EHat^(k)) = (g(chi^{-1})/p) (ETilde^(k)(pz) - ETilde^(k)(z)),
    coefficient-exact in the p-torsion ring."""
    if chi.conductor != ppol:
        raise ValueError("character conductor must be the given prime")
    ctx = TorsionContext(ppol, ext_degree=ppol.degree)
    bound = bound_for_precision(ppol.field, N)
    lhs = twist_normalized(fricke_eis(ctx, chi, k, bound).render(N), chi, ctx)
    R = twisted_eis(ctx, chi, k).render(N)
    scalar = gauss_thakur(chi.inverse(), ctx) * ctx.lift_poly(ppol).invert()
    rhs = (rescale_arg(R, ppol) - R).scale(scalar)
    m = min(lhs.prec, rhs.prec)
    d = lhs.truncate(m).first_difference(rhs.truncate(m))
    params = {"p": ppol.format(), "k": k, "chi": repr(chi), "N": N}
    return VerificationReport("ehat-twist", params, m, d is None,
                              None if d is None else "u^%d" % d)


# -- Eisenstein rank -------------------------------------------------------

def matrix_rank(rows):
    """Rank of a matrix of torsion-ring elements (the ring must be a field)
    by exact Gaussian elimination."""
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    if not rows:
        return 0
    ncols = len(rows[0])
    for col in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][col]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col].invert()
        pivot_row = [x * inv for x in rows[rank]]
        rows[rank] = pivot_row
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], pivot_row)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def eisenstein_rank(ppol, k, N):
    """Rank of the span of {ETilde_chi^(k), EHat_chi^(k)} over all chi with
    the matching sign, from truncated u-expansions; expected value
    2(|p|-1)/(q-1).

    The per-(monic, unit) Goss-polynomial series are character-independent,
    so they are computed once and each character contributes two cheap
    linear combinations.
    """
    field = ppol.field
    q = field.order
    size = q ** ppol.degree
    ctx = TorsionContext(ppol, ext_degree=ppol.degree)
    chis = [DirichletCharacter.from_conductor(ppol, e, big=ctx.big)
            for e in range(size - 1) if (e + k) % (q - 1) == 0]
    gk = goss_coeffs_in(ctx, k)
    units = ctx.units()
    bound = bound_for_precision(field, N)
    one = Pol.one(field)
    buckets = {}
    for a in units:
        lam = ctx.exp_value(a)
        ser = UExpansion.const(
            ctx, poly_eval_scalar(gk, lam.invert(), ctx.ring), N)
        for c0 in monics_up_to_degree(field, bound):
            if q ** c0.degree >= N:
                continue
            U = u_of_az(ctx, c0, N)
            ser = ser - poly_eval_series(gk, moebius_of_series(U, lam))
        buckets[a.c] = ser
    goss_series = {}
    for c in monics_up_to_degree(field, bound):
        if c.gcd(ppol) != one or q ** c.degree >= N:
            continue
        goss_series[c.c] = poly_eval_series(gk, u_of_az(ctx, c, N))
    rows = []
    for chi in chis:
        tilde = UExpansion.zero(ctx, N)
        for a in units:
            tilde = tilde + buckets[a.c].scale_const(chi.eval_inv(a))
        hat = UExpansion.zero(ctx, N)
        for ckey, ser in goss_series.items():
            v = chi.eval_inv(Pol(field, ckey))
            if v:
                hat = hat + ser.scale_const(v)
        rows.append(tilde.coeffs)
        rows.append(hat.coeffs)
    return matrix_rank(rows)


# -- naive local L-factors --------------------------------------------------

def local_l_factor(lam):
    """Coefficients of the inverse local factor 1 - lam*x, constant first."""
    if hasattr(lam, "ring"):
        one = lam.ring.one
    elif isinstance(lam, Pol):
        one = Pol.one(lam.field)
    else:
        one = 1
    if not lam:
        return (one,)
    return (one, -lam)


def local_l_table(ctx, expected, degree_bound):
    """Tabulate the inverse local factors 1 - expected(q)*x over all monic
    primes of degree up to the bound (skipping primes dividing the modulus)."""
    from .algebra import irreducible_monics
    one = Pol.one(ctx.field)
    out = []
    for qpol in irreducible_monics(ctx.field, degree_bound):
        if qpol.gcd(ctx.modulus) != one:
            continue
        out.append((qpol, local_l_factor(expected(qpol))))
    return out
