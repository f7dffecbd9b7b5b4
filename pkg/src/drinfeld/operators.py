"""Character twists, delta-sums, and Hecke operators.

The matrix slash actions never appear at runtime: their scalars are
collapsed into the two hard-coded formulas
    T_q f = psi(q) q^k f(qz) + descend(sum_beta f((z+beta)/q))
    twist_raw(f) = n^(2m-k) sum_beta chi^{-1}(beta) f(z + beta/n).
"""

from .algebra import Pol, lucas_binomial
from .characters import char_sum_s, gauss_thakur
from .errors import LevelPrime, NotPrimitive, Unsupported
from .series import (AExpansion, ModularMeta, TwistedEisenstein, UExpansion,
                     descend, evaluate_at_shift, rescale_arg, shift_by_value)


def _modulus_power(ctx, m, e):
    """m^e as a ring element, with negative exponents via inversion."""
    if e >= 0:
        return ctx.lift_poly(m ** e)
    return ctx.lift_poly(m ** (-e)).invert()


def neben_eval(neben, a, ctx):
    """Evaluate a nebentypus (None, a character, or a product tuple) at a,
    as a constant code in the context's big field."""
    if neben is None:
        return 1
    if isinstance(neben, tuple):
        out = 1
        for part in neben:
            out = ctx.big.mul(out, neben_eval(part, a, ctx))
        return out
    v = neben.eval(a)
    if ctx.big is neben.big:
        return v
    return ctx.big.embedding(neben.big)[v]


def _pol_lcm(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return (a * b) // a.gcd(b)


def twist_raw(f, chi, ctx):
    """The projection pi-hat_chi: n^(2m-k) * sum_beta chi^{-1}(beta) f(z + beta/n)."""
    if f.meta is None:
        raise ValueError("twisting needs weight/type metadata")
    n = chi.conductor
    if n.gcd(ctx.modulus) != n:
        raise ValueError("conductor must divide the context modulus")
    k, m = f.meta.weight, f.meta.type_
    inv = chi.inverse()
    emb = None if ctx.big is chi.big else ctx.big.embedding(chi.big)
    out = UExpansion.zero(ctx, f.prec)
    for beta in ctx.residues(n):
        v = inv.eval(beta)
        if not v:
            continue
        code = emb[v] if emb else v
        out = out + shift_by_value(f, ctx.exp_at(beta, n)).scale_const(code)
    out = out.scale(_modulus_power(ctx, n, 2 * m - k))
    neben = f.meta.neben
    newneben = (neben, chi, chi) if neben is not None else (chi, chi)
    meta = ModularMeta(k, m + chi.sign, _pol_lcm(f.meta.level, n * n), newneben)
    return out.with_meta(meta)


def twist_normalized(f, chi, ctx):
    """pi_chi := n^(k-2m-1) g(chi^{-1}) pi-hat_chi; integral output."""
    if not chi.is_primitive():
        raise NotPrimitive("normalized twists need a primitive character")
    if f.meta is None:
        raise ValueError("twisting needs weight/type metadata")
    k, m = f.meta.weight, f.meta.type_
    raw = twist_raw(f, chi, ctx)
    g = gauss_thakur(chi.inverse(), ctx)
    scalar = _modulus_power(ctx, chi.conductor, k - 2 * m - 1) * g
    return raw.scale(scalar).with_meta(raw.meta)


def twist_monomial_closed(i, chi, ctx, N):
    """Closed form of pi_chi(u^i):
    u^i * sum over l >= 1 congruent to s_chi mod q-1 of
    binom(-i, l) * (g(chi^{-1})/n) * s(chi, l) * u^l."""
    if not chi.is_primitive():
        raise NotPrimitive("closed form needs a primitive character")
    if i < 1:
        raise ValueError("monomial exponent must be positive")
    q = ctx.field.order
    p = ctx.field.p
    s = chi.sign
    g_over_n = (gauss_thakur(chi.inverse(), ctx)
                * ctx.lift_poly(chi.conductor).invert())
    zero = ctx.ring.zero
    out = [zero] * N
    l = s if s else q - 1
    while i + l < N:
        b = lucas_binomial(-i, l, p)
        if b:
            out[i + l] = (g_over_n * char_sum_s(chi, l, ctx)).scale_const(b)
        l += q - 1
    return UExpansion(ctx, out, N)


def hecke_u(f, qpol, ctx):
    """T_q on a u-expansion with metadata; output precision prec // |q|.

    The result is verified free of the q-torsion generator: the beta-sum
    is Galois-invariant, so any residue signals a bug.
    """
    if f.meta is None or f.meta.weight is None:
        raise ValueError("Hecke operators need weight metadata")
    if f.ctx is not ctx:
        raise ValueError("expansion must live in the given torsion ring")
    qidx = ctx.primes.index(qpol)
    size = ctx.field.order ** qpol.degree
    Nout = f.prec // size
    if Nout < 1:
        raise ValueError("precision %d too small for |q| = %d" % (f.prec, size))
    k = f.meta.weight
    psi_q = neben_eval(f.meta.neben, qpol, ctx)
    acc = UExpansion.zero(ctx, f.prec, var="v")
    for beta in ctx.residues(qpol):
        acc = acc + evaluate_at_shift(f, beta, qpol, ctx)
    term2 = descend(acc, qpol)
    term1 = rescale_arg(f, qpol).truncate(Nout).scale(ctx.lift_poly(qpol ** k))
    if psi_q != 1:
        term1 = term1.scale_const(psi_q)
    out = (term1 + term2).with_meta(f.meta)
    for n, c in enumerate(out.coeffs):
        if not ctx.free_of(qidx, c):
            raise RuntimeError("Hecke output not free of the q-torsion "
                               "generator at u^%d" % n)
    return out


def hecke_a(F, qpol):
    """T_q on an A-expansion:
    c'_a = q^g c_a [gcd(a,q)=1] + q^k psi(q) c_{a/q} [q | a],
    with g the Goss index and k the weight."""
    ctx = F.ctx
    g = F.index
    k = F.weight
    qg = ctx.lift_poly(qpol ** g)
    qk = ctx.lift_poly(qpol ** k)
    psi_q = neben_eval(F.neben, qpol, ctx)
    if psi_q != 1:
        qk = qk.scale_const(psi_q)
    newbound = F.bound - qpol.degree
    if newbound < 0:
        raise ValueError("degree bound too small for this Hecke prime")
    one = Pol.one(ctx.field)
    coeffs = {}
    from .algebra import monics_up_to_degree
    for a in monics_up_to_degree(ctx.field, newbound):
        acc = ctx.ring.zero
        if a.gcd(qpol) == one:
            c = F.coeffs.get(a.c)
            if c:
                acc = acc + c * qg
        else:
            quot, rem = divmod(a, qpol)
            if not rem:
                c = F.coeffs.get(quot.c)
                if c:
                    acc = acc + c * qk
        coeffs[a.c] = acc
    return AExpansion(ctx, F.kind, F.index, F.weight, F.type_, coeffs,
                      newbound, F.neben)


def hecke_twisted(T, qpol):
    """T_q on a twisted Eisenstein object: component re-indexing
    a -> qa mod p with scalar q^k."""
    ctx = T.ctx
    ppol = T.level
    if qpol.gcd(ppol) != Pol.one(ctx.field):
        raise LevelPrime("T_q is undefined at the level prime")
    qk = ctx.lift_poly(qpol ** T.k)
    comp = {}
    for akey, c in T.components.items():
        a = Pol(ctx.field, akey)
        target = (a * qpol) % ppol
        comp[target.c] = c * qk
    return TwistedEisenstein(ctx, T.k, T.chi, comp)


def delta_sum(F, npol, ctx):
    """The full residue-sum sum_delta f|[n delta; 0 n] on a power-type
    A-expansion: support moves to a*n (a coprime to n), scaled by n^i."""
    if F.kind != "power" or F.index > ctx.field.order:
        raise Unsupported("delta-sum needs a power-type expansion with i <= q")
    one = Pol.one(ctx.field)
    ni = ctx.lift_poly(npol ** F.index)
    coeffs = {}
    from .algebra import monics_up_to_degree
    for a in monics_up_to_degree(ctx.field, F.bound):
        c = F.coeffs.get(a.c)
        target = a * npol
        if target.degree > F.bound:
            continue
        if c and a.gcd(npol) == one:
            coeffs[target.c] = c * ni
    out = {}
    for a in monics_up_to_degree(ctx.field, F.bound):
        out[a.c] = coeffs.get(a.c, ctx.ring.zero)
    return AExpansion(ctx, "power", F.index, F.weight, F.type_, out,
                      F.bound, F.neben)
