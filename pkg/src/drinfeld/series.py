"""Truncated u-expansions and the substitution calculus.

A UExpansion stores the coefficients of u^0..u^{N-1} exactly, over the
quotient ring of a TorsionContext.  The three substitutions that drive
everything else are u(az) (Carlitz rescaling of the argument),
u(z + beta/n) (fractional-linear shift by a torsion value), and the
sub-parameter v = u(z/q) with its inverse (descend).
"""

from .algebra import RF, Pol, lucas_binomial, monics_up_to_degree
from .carlitz import carlitz_coeffs, goss_polys
from .errors import InsufficientDegreeBound, NotDescendable, SignMismatch


class ModularMeta:
    """Weight, type, level, and nebentypus bookkeeping for a form."""

    __slots__ = ("weight", "type_", "level", "neben")

    def __init__(self, weight, type_, level=None, neben=None):
        self.weight = weight
        self.type_ = type_
        self.level = level
        self.neben = neben

    def __repr__(self):
        return "ModularMeta(k=%r, m=%r)" % (self.weight, self.type_)


class UExpansion:
    """Sum of coeffs[n] * u^n for n < prec, coefficients in ctx.ring."""

    __slots__ = ("ctx", "coeffs", "prec", "meta", "var")

    def __init__(self, ctx, coeffs, prec=None, meta=None, var="u"):
        if prec is None:
            prec = len(coeffs)
        zero = ctx.ring.zero
        coeffs = list(coeffs)[:prec]
        coeffs += [zero] * (prec - len(coeffs))
        self.ctx = ctx
        self.coeffs = tuple(coeffs)
        self.prec = prec
        self.meta = meta
        self.var = var

    @classmethod
    def zero(cls, ctx, prec, meta=None, var="u"):
        return cls(ctx, [], prec, meta, var)

    @classmethod
    def u(cls, ctx, prec, meta=None, var="u"):
        return cls(ctx, [ctx.ring.zero, ctx.ring.one], prec, meta, var)

    @classmethod
    def monomial(cls, ctx, i, prec, meta=None, var="u"):
        zero = ctx.ring.zero
        return cls(ctx, [zero] * i + [ctx.ring.one], prec, meta, var)

    @classmethod
    def const(cls, ctx, value, prec, meta=None, var="u"):
        return cls(ctx, [value], prec, meta, var)

    def __bool__(self):
        return any(self.coeffs)

    def order(self):
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return self.prec

    def coeff(self, n):
        if n >= self.prec:
            raise IndexError("coefficient %d beyond precision %d" % (n, self.prec))
        return self.coeffs[n]

    def truncate(self, N):
        if N > self.prec:
            raise ValueError("cannot extend precision")
        return UExpansion(self.ctx, self.coeffs[:N], N, self.meta, self.var)

    def with_meta(self, meta):
        return UExpansion(self.ctx, self.coeffs, self.prec, meta, self.var)

    def _align(self, other):
        if self.ctx is not other.ctx:
            raise ValueError("expansions live over different rings")
        return min(self.prec, other.prec)

    def __add__(self, other):
        N = self._align(other)
        return UExpansion(self.ctx, [a + b for a, b in
                                     zip(self.coeffs[:N], other.coeffs[:N])],
                          N, self.meta, self.var)

    def __neg__(self):
        return UExpansion(self.ctx, [-a for a in self.coeffs], self.prec,
                          self.meta, self.var)

    def __sub__(self, other):
        N = self._align(other)
        return UExpansion(self.ctx, [a - b for a, b in
                                     zip(self.coeffs[:N], other.coeffs[:N])],
                          N, self.meta, self.var)

    def __mul__(self, other):
        N = self._align(other)
        zero = self.ctx.ring.zero
        out = [zero] * N
        for i, a in enumerate(self.coeffs[:N]):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[:N - i]):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UExpansion(self.ctx, out, N, None, self.var)

    def scale(self, value):
        return UExpansion(self.ctx, [c * value if c else c for c in self.coeffs],
                          self.prec, self.meta, self.var)

    def scale_const(self, code):
        return UExpansion(self.ctx, [c.scale_const(code) for c in self.coeffs],
                          self.prec, self.meta, self.var)

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative series powers unsupported")
        out = UExpansion.const(self.ctx, self.ctx.ring.one, self.prec,
                               var=self.var)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def inverse(self):
        """Series inverse; the constant term must be a unit."""
        c0inv = self.coeffs[0].invert()
        N = self.prec
        zero = self.ctx.ring.zero
        out = [zero] * N
        out[0] = c0inv
        for n in range(1, N):
            acc = zero
            for i in range(1, n + 1):
                if self.coeffs[i] and out[n - i]:
                    acc = acc + self.coeffs[i] * out[n - i]
            out[n] = -(c0inv * acc)
        return UExpansion(self.ctx, out, N, None, self.var)

    def __eq__(self, other):
        if not isinstance(other, UExpansion) or self.ctx is not other.ctx:
            return False
        N = min(self.prec, other.prec)
        return self.coeffs[:N] == other.coeffs[:N] and self.prec == other.prec

    def agrees_with(self, other):
        """Equality of all coefficients up to the shared precision."""
        N = min(self.prec, other.prec)
        return self.coeffs[:N] == other.coeffs[:N]

    def first_difference(self, other):
        N = min(self.prec, other.prec)
        for n in range(N):
            if self.coeffs[n] != other.coeffs[n]:
                return n
        return None

    def format(self, symbol="t"):
        parts = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if n == 0 else (self.var if n == 1 else "%s^%d" % (self.var, n))
            cs = "(%s)" % c.format(symbol)
            parts.append(cs + ("*" + mono if mono else ""))
        body = " + ".join(parts) if parts else "0"
        return "%s + O(%s^%d)" % (body, self.var, self.prec)

    def __repr__(self):
        return self.format()


def lift_rf_to(ctx, rf):
    """An RF over the base field as an RF over the context's big field."""
    emb = ctx.big.embedding(rf.num.field)
    num = rf.num.map_to(ctx.big, emb)
    den = rf.den.map_to(ctx.big, emb)
    return RF(num, den)


def poly_eval_series(coeffs, S):
    """Evaluate a polynomial (list of ring elements, low first) at a series
    of positive order, by accumulating truncated powers."""
    ctx = S.ctx
    N = S.prec
    out = UExpansion.const(ctx, coeffs[0], N, var=S.var) if coeffs else \
        UExpansion.zero(ctx, N, var=S.var)
    power = None
    ordS = S.order()
    for i in range(1, len(coeffs)):
        if i * ordS >= N:
            break
        power = S if power is None else power * S
        if coeffs[i]:
            out = out + power.scale(coeffs[i])
    return out


def poly_eval_scalar(coeffs, x, ring):
    """Evaluate a polynomial (ring-element coefficients) at a ring element."""
    out = ring.zero
    for c in reversed(coeffs):
        out = out * x + c
    return out


def goss_coeffs_in(ctx, k):
    """G_k's coefficients lifted into the context ring (list of REl)."""
    raw = goss_polys(ctx.field, k)[k]
    return [ctx.ring.from_rf(lift_rf_to(ctx, c)) for c in raw]


def u_of_az(ctx, a, N, var="u"):
    """u(az) as a u-series: u^{q^d} / (sum_i [a]_i u^{q^d - q^i})."""
    if not a:
        raise ValueError("a must be nonzero")
    field = ctx.field
    q = field.order
    d = a.degree
    size = q ** d
    ring = ctx.ring
    zero = ring.zero
    den = [zero] * N
    for i, c in enumerate(carlitz_coeffs(a)):
        if c and size - q ** i < N:
            den[size - q ** i] = ctx.lift_poly(c)
    if size >= N:
        # only the constant term of the inverse could matter, and even the
        # leading u^{q^d} is out of range
        return UExpansion.zero(ctx, N, var=var)
    inv = UExpansion(ctx, den, N - size, var=var).inverse()
    out = [zero] * size + list(inv.coeffs)
    return UExpansion(ctx, out, N, var=var)


def shift_by_value(f, lam, var=None):
    """Substitute u -> u/(lam*u + 1) using the closed binomial form:
    out[n] = sum_i c_i * binom(-i, n-i) * lam^(n-i)."""
    ctx = f.ctx
    N = f.prec
    p = ctx.field.p
    ring = ctx.ring
    zero = ring.zero
    pows = [ring.one]
    for _ in range(1, N):
        pows.append(pows[-1] * lam)
    out = [zero] * N
    scalars = ctx.field  # prime subfield codes coincide with integers mod p
    for i, c in enumerate(f.coeffs):
        if not c:
            continue
        if i == 0:
            out[0] = out[0] + c
            continue
        for n in range(i, N):
            b = lucas_binomial(-i, n - i, p)
            if b:
                term = c * pows[n - i] if n != i else c
                out[n] = out[n] + term.scale_const(b % p)
    return UExpansion(ctx, out, N, None, var or f.var)


def moebius_of_series(X, lam):
    """The fractional-linear value X/(lam*X + 1) for a series X of
    positive order — this is u(w + beta/n) when X is the series of u(w)."""
    ctx = X.ctx
    den = X.scale(lam) + UExpansion.const(ctx, ctx.ring.one, X.prec, var=X.var)
    return X * den.inverse()


def shift_by_torsion(f, beta, ctx):
    """f(z + beta/n) for the context modulus n: shift by exp_value(beta)."""
    if f.ctx is not ctx:
        raise ValueError("expansion does not live in the given torsion ring")
    if not beta % ctx.modulus:
        return f
    return shift_by_value(f, ctx.exp_value(beta))


def rescale_arg(f, a, meta=None):
    """f(az): substitute u -> u_of_az(a)."""
    if a.is_one():
        return f if meta is None else f.with_meta(meta)
    U = u_of_az(f.ctx, a, f.prec, var=f.var)
    out = poly_eval_series(list(f.coeffs), U)
    return out if meta is None else out.with_meta(meta)


def to_subparameter(f, qpol, Nv):
    """Express f(z) in v = u(z/q): substitute u -> u_of_az(q) read in v.

    f must carry enough u-precision: coefficients c_i with
    i*|q| >= Nv cannot affect the result.
    """
    U = u_of_az(f.ctx, qpol, Nv, var="v")
    size = f.ctx.field.order ** qpol.degree
    needed = (Nv + size - 1) // size
    if f.prec < needed:
        raise ValueError("need u-precision %d for v-precision %d" % (needed, Nv))
    return poly_eval_series(list(f.coeffs[:needed]), U)


def evaluate_at_shift(f, beta, qpol, ctx):
    """f((z+beta)/q) as a series in v = u(z/q).

    Writing w = z/q, the argument is w + beta/q, so this is the torsion
    shift of f by exp_C(pi*beta/q) read in the sub-parameter.
    """
    lam = ctx.exp_at(beta % qpol, qpol)
    return shift_by_value(f, lam, var="v")


def descend(g, qpol, meta=None):
    """Invert to_subparameter: solve sum_i c_i * U(v)^i = g for the c_i.

    U = u_of_az(q) has order |q| and unit leading coefficient (q monic),
    so the system is triangular.  A nonzero residual means g is not an
    A-periodic u-series and raises NotDescendable.
    """
    ctx = g.ctx
    size = ctx.field.order ** qpol.degree
    Nu = g.prec // size
    if Nu < 1:
        raise NotDescendable("v-precision %d below the order %d" % (g.prec, size))
    U = u_of_az(ctx, qpol, g.prec, var=g.var)
    residual = list(g.coeffs)
    out = []
    power = UExpansion.const(ctx, ctx.ring.one, g.prec, var=g.var)
    lead = ctx.lift_const(qpol.leading()).invert()
    for i in range(Nu):
        ci = residual[i * size]
        if i:
            # divide by the leading coefficient of U^i
            ci = ci * (lead ** i)
        out.append(ci)
        if ci:
            for n, c in enumerate(power.coeffs):
                if c:
                    residual[n] = residual[n] - ci * c
        if i + 1 < Nu:
            power = power * U
    limit = Nu * size
    for n in range(limit):
        if residual[n]:
            raise NotDescendable("residual coefficient at v^%d" % n)
    return UExpansion(ctx, out, Nu, meta, "u")


class AExpansion:
    """Sum over monic a of c_a * u(az)^i (power type) or c_a * G_k(u(az))
    (goss type), stored as an explicit coefficient map up to a degree bound."""

    __slots__ = ("kind", "index", "weight", "type_", "neben", "coeffs",
                 "bound", "ctx")

    def __init__(self, ctx, kind, index, weight, type_, coeffs, bound,
                 neben=None):
        if kind not in ("power", "goss"):
            raise ValueError("kind must be 'power' or 'goss'")
        self.ctx = ctx
        self.kind = kind
        self.index = index
        self.weight = weight
        self.type_ = type_
        self.neben = neben
        self.coeffs = dict(coeffs)
        self.bound = bound

    @classmethod
    def from_rule(cls, ctx, kind, index, weight, type_, rule, bound,
                  neben=None):
        coeffs = {}
        for a in monics_up_to_degree(ctx.field, bound):
            coeffs[a.c] = rule(a)
        return cls(ctx, kind, index, weight, type_, coeffs, bound, neben)

    def coefficient(self, a):
        return self.coeffs.get(a.c, self.ctx.ring.zero)

    def meta(self):
        return ModularMeta(self.weight, self.type_, neben=self.neben)

    def map_coeffs(self, fn):
        return AExpansion(self.ctx, self.kind, self.index, self.weight,
                          self.type_, {k: fn(Pol(self.ctx.field, k), v)
                                       for k, v in self.coeffs.items()},
                          self.bound, self.neben)

    def __eq__(self, other):
        return (isinstance(other, AExpansion) and self.ctx is other.ctx
                and self.kind == other.kind and self.index == other.index
                and self.bound == other.bound and self.coeffs == other.coeffs)

    def scaled_by(self, value):
        return self.map_coeffs(lambda a, c: c * value)

    def render(self, N):
        """Truncated u-expansion; the omitted degrees must start beyond N."""
        q = self.ctx.field.order
        min_exp = self.index if self.kind == "power" else 1
        if min_exp * q ** (self.bound + 1) < N:
            raise InsufficientDegreeBound(
                "degree bound %d cannot reach precision %d" % (self.bound, N))
        ctx = self.ctx
        out = UExpansion.zero(ctx, N)
        gk = goss_coeffs_in(ctx, self.index) if self.kind == "goss" else None
        for a in monics_up_to_degree(ctx.field, self.bound):
            c = self.coeffs.get(a.c)
            if not c:
                continue
            if self.index * q ** a.degree >= N and self.kind == "power":
                continue
            if q ** a.degree >= N:
                continue
            U = u_of_az(ctx, a, N)
            if self.kind == "power":
                term = U ** self.index
            else:
                term = poly_eval_series(gk, U)
            out = out + term.scale(c)
        return out.with_meta(self.meta())


class TwistedEisenstein:
    """The weight-k Eisenstein object sum_a comp(a) * E~_{(0,a)} where
    E~_{(0,a)} := (p^k / pi^k) E_{(0,a)} = sum_{c in A} G_k(u(cz + a/p)).

    components maps unit residues a mod p to coefficients; the canonical
    chi-average has comp(a) = chi^{-1}(a).
    """

    __slots__ = ("ctx", "k", "chi", "components")

    def __init__(self, ctx, k, chi, components):
        self.ctx = ctx
        self.k = k
        self.chi = chi
        self.components = dict(components)

    @property
    def level(self):
        """The level, i.e. the conductor of the character (which must
        divide the context modulus)."""
        return self.chi.conductor

    @classmethod
    def build(cls, ctx, k, chi):
        q = ctx.field.order
        if (chi.sign + k) % (q - 1) != 0:
            raise SignMismatch("need s_chi = -k mod q-1 (got s=%d, k=%d)"
                               % (chi.sign, k))
        if chi.conductor.gcd(ctx.modulus) != chi.conductor:
            raise ValueError("conductor must divide the context modulus")
        emb = None
        if ctx.big is not chi.big:
            emb = ctx.big.embedding(chi.big)
        comp = {}
        for a in ctx.units(chi.conductor):
            v = chi.inverse().eval(a)
            code = emb[v] if emb else v
            comp[a.c] = ctx.ring.one.scale_const(code)
        return cls(ctx, k, chi, comp)

    def meta(self):
        return ModularMeta(self.k, 0, level=self.level, neben=self.chi)

    def __eq__(self, other):
        return (isinstance(other, TwistedEisenstein) and self.ctx is other.ctx
                and self.k == other.k and self.components == other.components)

    def scaled_by(self, value):
        return TwistedEisenstein(self.ctx, self.k, self.chi,
                                 {a: c * value for a, c in self.components.items()})

    def _chi_multiple(self):
        """If components = alpha * chi^{-1}(a) for a single alpha, return
        alpha; else None."""
        ctx = self.ctx
        emb = None
        if ctx.big is not self.chi.big:
            emb = ctx.big.embedding(self.chi.big)
        chi = self.chi
        alpha = None
        for a in ctx.units(self.level):
            v = chi.eval(a)
            code = emb[v] if emb else v
            # alpha = comp(a) * chi(a)
            cand = self.components[a.c].scale_const(code)
            if alpha is None:
                alpha = cand
            elif alpha != cand:
                return None
        return alpha

    def constant_term(self):
        ctx = self.ctx
        gk = goss_coeffs_in(ctx, self.k)
        out = ctx.ring.zero
        for a in ctx.units(self.level):
            x = ctx.exp_at(a, self.level).invert()
            out = out + poly_eval_scalar(gk, x, ctx.ring) * self.components[a.c]
        return out

    def render(self, N, bound=None):
        """Truncated u-expansion.

        When the component weights are a single multiple of chi^{-1}, the
        xi-sum over F_q^* collapses (s_chi = -k mod q-1) to
        alpha*(const - sum_{c monic} sum_a chi^{-1}(a) G_k(shift)); in
        general each of the q-1 leading-coefficient classes is summed.
        """
        ctx = self.ctx
        q = ctx.field.order
        if bound is None:
            bound = 0
            while q ** (bound + 1) < N:
                bound += 1
        if q ** (bound + 1) < N:
            raise InsufficientDegreeBound(
                "degree bound %d cannot reach precision %d" % (bound, N))
        gk = goss_coeffs_in(ctx, self.k)
        out = UExpansion.const(ctx, self.constant_term(), N)
        alpha = self._chi_multiple()
        units = ctx.units(self.level)
        lam = {a.c: ctx.exp_at(a, self.level) for a in units}
        emb = None
        if ctx.big is not self.chi.big:
            emb = ctx.big.embedding(self.chi.big)
        for c0 in monics_up_to_degree(ctx.field, bound):
            if q ** c0.degree >= N:
                continue
            U = u_of_az(ctx, c0, N)
            if alpha is not None:
                acc = UExpansion.zero(ctx, N)
                for a in units:
                    v = self.chi.eval_inv(a)
                    code = emb[v] if emb else v
                    shifted = moebius_of_series(U, lam[a.c])
                    acc = acc + poly_eval_series(gk, shifted).scale_const(code)
                out = out - acc.scale(alpha)
            else:
                for xi in ctx.field.units():
                    Uxi = U.scale_const(ctx.field.inv(xi))
                    for a in units:
                        shifted = moebius_of_series(Uxi, lam[a.c])
                        term = poly_eval_series(gk, shifted)
                        out = out + term.scale(self.components[a.c])
        return out.with_meta(self.meta())


def render_twisted_eisenstein(T, N, bound=None):
    return T.render(N, bound)
