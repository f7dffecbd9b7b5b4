"""Carlitz module, cyclotomic torsion rings, and Goss polynomials.

The Carlitz module is the F_q[theta]-module structure on any F_q[theta]
algebra given by C_theta(x) = theta*x + x^q.  Its n-torsion generates the
cyclotomic rings in which every expansion coefficient of this package
lives.  No period or exponential is ever represented analytically: the
torsion value playing the role of exp(pi*beta/n) is the algebraic element
C_beta(lambda_n).
"""

from .algebra import (RF, Pol, QuotientRing, factor_squarefree_monic,
                      finite_field, polys_below_degree)
from .errors import Unsupported


def carlitz_coeffs(a):
    """Coefficients [a]_0..[a]_{deg a} with C_a(x) = sum [a]_i x^(q^i).

    Built from C_theta(x) = theta*x + x^q by F_q-linearity and Horner
    composition; each [a]_i lies in A = F_q[theta].
    """
    field = a.field
    qexp = field.n  # q = p^n, so the q-power Frobenius is frob_power(n)
    cur = [Pol.zero(field)]
    theta = Pol.x(field)
    for code in reversed(a.c) if a.c else [0]:
        # cur <- theta*cur + frob(cur) + code  (i.e. C_{theta*b + c})
        nxt = [theta * cur[0] + Pol.const(field, code)]
        for i in range(1, len(cur)):
            nxt.append(theta * cur[i] + cur[i - 1].frob_power(qexp))
        nxt.append(cur[-1].frob_power(qexp))
        while len(nxt) > 1 and not nxt[-1]:
            nxt.pop()
        cur = nxt
    return cur


def carlitz_action(a, x):
    """C_a(x) for x a polynomial or a quotient-ring element."""
    q = a.field.order
    lift = None
    if not isinstance(x, Pol):
        ring = x.ring
        emb = ring.field.embedding(a.field)
        lift = lambda c: ring.from_rf(RF.from_pol(c.map_to(ring.field, emb)))
    result = None
    for i, c in enumerate(carlitz_coeffs(a)):
        if not c:
            continue
        term = (x ** (q ** i)) * (c if lift is None else lift(c))
        result = term if result is None else result + term
    return result if result is not None else x - x


class TorsionContext:
    """Carlitz n-torsion ring for a square-free monic modulus.

    One ring generator lambda_i per prime factor p_i, with relation
    Phi_{p_i}(x) = C_{p_i}(x)/x; the composite generator lambda_n is
    assembled by partial fractions.  An optional constant-field extension
    degree D replaces F_q by F_{q^D} (needed once character roots enter).
    """

    __slots__ = ("field", "big", "emb", "modulus", "primes", "ring",
                 "gens", "lam", "_exp_cache", "_qpow_cache", "qexp")

    def __init__(self, modulus, ext_degree=1):
        field = modulus.field
        if not modulus.is_monic() or modulus.degree < 1:
            raise ValueError("modulus must be monic and nonconstant")
        self.field = field
        self.qexp = field.n
        big = finite_field(field.p, field.n * ext_degree)
        self.big = big
        self.emb = big.embedding(field)
        self.modulus = modulus
        self.primes = factor_squarefree_monic(modulus)
        gens = []
        for i, prime in enumerate(self.primes):
            coeffs = carlitz_coeffs(prime)
            q = field.order
            deg = q ** prime.degree - 1
            rel = [RF.zero(big)] * (deg + 1)
            for j, c in enumerate(coeffs):
                rel[q ** j - 1] = RF.from_pol(c.map_to(big, self.emb))
            gens.append(("l%d" % (i + 1), rel))
        self.ring = QuotientRing(big, gens)
        self.gens = tuple(self.ring.gen(i) for i in range(len(self.primes)))
        self._exp_cache = {}
        self._qpow_cache = [
            {0: g} for g in self.gens
        ]
        # partial fractions: sum c_i * (n/p_i) = 1 in A
        if len(self.primes) == 1:
            cofs = [Pol.one(field)]
        else:
            cofs = []
            for prime in self.primes:
                other = modulus // prime
                g, s, t = other.xgcd(prime)
                # s*other + t*prime = 1, so c_i = s mod prime
                cofs.append(s % prime)
        lam = self.ring.zero
        for i, c in enumerate(cofs):
            lam = lam + self._carlitz_at_gen(c, i)
        self.lam = lam

    def _gen_qpow(self, i, j):
        """lambda_i ** (q ** j), cached."""
        cache = self._qpow_cache[i]
        if j not in cache:
            prev = self._gen_qpow(i, j - 1)
            cache[j] = prev ** self.field.order
        return cache[j]

    def _carlitz_at_gen(self, a, i):
        """C_a(lambda_i), with a reduced modulo p_i first."""
        a = a % self.primes[i]
        out = self.ring.zero
        for j, c in enumerate(carlitz_coeffs(a)):
            if c:
                out = out + self._gen_qpow(i, j).scale_rf(self.lift_rf(c))
        return out

    def lift_rf(self, p):
        """A polynomial over the base field as an RF over the big field."""
        return RF.from_pol(p.map_to(self.big, self.emb))

    def lift_poly(self, p):
        """A polynomial in theta as a scalar ring element."""
        return self.ring.from_rf(self.lift_rf(p))

    def lift_const(self, code):
        """A base-field constant as a scalar ring element."""
        return self.ring.from_const(self.emb[code])

    def big_const(self, code):
        """A big-field constant as a scalar ring element."""
        return self.ring.from_const(code)

    def exp_value(self, beta):
        """The torsion value standing for exp_C(pi*beta/n): C_beta(lambda_n).

        Computed componentwise through the partial fractions, so each term
        only involves its own generator.
        """
        beta = beta % self.modulus
        key = beta.c
        cached = self._exp_cache.get(key)
        if cached is not None:
            return cached
        if len(self.primes) == 1:
            out = self._carlitz_at_gen(beta, 0)
        else:
            out = self.ring.zero
            for i, prime in enumerate(self.primes):
                other = self.modulus // prime
                g, s, t = other.xgcd(prime)
                out = out + self._carlitz_at_gen(beta * s, i)
        self._exp_cache[key] = out
        return out

    def exp_at(self, beta, divisor):
        """Torsion value for a divisor modulus: exp_C(pi*beta/divisor)."""
        cof, rem = divmod(self.modulus, divisor)
        if rem:
            raise ValueError("divisor does not divide the ring modulus")
        return self.exp_value(beta * cof)

    def galois(self, b):
        """The ring endomorphism lambda_i -> C_b(lambda_i) applied pointwise.

        For b prime to the modulus this is the Galois action sending
        exp_value(beta) to exp_value(b*beta).
        """
        images = [self._carlitz_at_gen(b, i) for i in range(len(self.gens))]
        return _GaloisMap(self, images)

    def free_of(self, i, x):
        """True when x involves no positive power of generator i."""
        return x.exponent_free(i)

    def residues(self, modulus=None):
        """All beta in A with deg beta < deg modulus, in canonical order."""
        m = modulus if modulus is not None else self.modulus
        return polys_below_degree(self.field, m.degree)

    def units(self, modulus=None):
        """Residues coprime to the modulus."""
        m = modulus if modulus is not None else self.modulus
        one = Pol.one(self.field)
        return [b for b in self.residues(m) if b and b.gcd(m) == one]

    def describe(self):
        return self.ring.describe()


class _GaloisMap:
    __slots__ = ("ctx", "images", "_powcache")

    def __init__(self, ctx, images):
        self.ctx = ctx
        self.images = images
        self._powcache = [{1: im} for im in images]

    def _impow(self, i, e):
        cache = self._powcache[i]
        if e not in cache:
            cache[e] = self._impow(i, e - 1) * self.images[i]
        return cache[e]

    def __call__(self, x):
        ring = self.ctx.ring
        out = ring.zero
        for idx, c in enumerate(x.coords):
            if not c:
                continue
            term = ring.from_rf(c)
            for i, e in enumerate(ring._exps[idx]):
                if e:
                    term = term * self._impow(i, e)
            out = out + term
        return out


def carlitz_factorials(field, count):
    """D_0..D_{count-1} with D_0 = 1, D_i = (theta^{q^i} - theta)*D_{i-1}^q."""
    q = field.order
    theta = Pol.x(field)
    out = [Pol.one(field)]
    for i in range(1, count):
        out.append((theta ** (q ** i) - theta) * out[-1] ** q)
    return out


def _goss_recursion(field, N):
    """G_1..G_N as RF-coefficient lists (low degree first) via the recursion
    G_k = X*(G_{k-1} + sum_i G_{k-q^i}/D_i), with G_k = X^k for k <= q."""
    q = field.order
    imax = 1
    while q ** (imax + 1) <= N:
        imax += 1
    D = carlitz_factorials(field, imax + 1)
    alpha = [RF.from_pol(d).inverse() for d in D]
    zero = RF.zero(field)
    one = RF.one(field)
    polys = [None]  # 1-indexed
    for k in range(1, N + 1):
        if k <= q:
            polys.append([zero] * k + [one])
            continue
        acc = list(polys[k - 1])
        i = 1
        while q ** i < k:
            prev = polys[k - q ** i]
            a = alpha[i]
            for j, c in enumerate(prev):
                if c:
                    acc[j] = acc[j] + c * a
            i += 1
        polys.append([zero] + acc)
    return polys


def _goss_generating(field, N):
    """G_1..G_N via the exponential generating identity:
    G_k(X) = X * sum_j X^j * [y^(k-1)] e(y)^j, e(y) = sum y^(q^i)/D_i."""
    q = field.order
    imax = 1
    while q ** (imax + 1) <= N:
        imax += 1
    D = carlitz_factorials(field, imax + 1)
    zero = RF.zero(field)
    one = RF.one(field)
    # e(y) truncated to degree N-1 in y
    e = [zero] * N
    for i in range(imax + 1):
        if q ** i <= N - 1:
            e[q ** i] = RF.from_pol(D[i]).inverse()
    powers = [[one] + [zero] * (N - 1)]  # e^0
    # e^j has lowest term y^j, so j <= k-1 <= N-1 suffices
    for j in range(1, N):
        prev = powers[-1]
        cur = [zero] * N
        for a, ca in enumerate(prev):
            if not ca:
                continue
            for b, cb in enumerate(e):
                if a + b >= N:
                    break
                if cb:
                    cur[a + b] = cur[a + b] + ca * cb
        powers.append(cur)
    out = [None]
    for k in range(1, N + 1):
        coeffs = [zero]
        for j in range(0, k):
            c = powers[j][k - 1] if k - 1 < N else zero
            coeffs.append(c)
        while len(coeffs) > 1 and not coeffs[-1]:
            coeffs.pop()
        out.append(coeffs)
    return out


_goss_cache = {}


def goss_polys(field, N):
    """G_1..G_N for the Carlitz lattice, cross-checked two ways.

    Returns a list indexed 1..N of RF coefficient lists.  The recursion
    and the generating-identity construction must agree; a mismatch means
    the arithmetic layer is broken and raises RuntimeError.
    """
    if N < 1:
        raise ValueError("k must be positive")
    key = (id(field), N)
    cached = _goss_cache.get(key)
    if cached is not None:
        return cached
    rec = _goss_recursion(field, N)
    gen = _goss_generating(field, N)
    for k in range(1, N + 1):
        if rec[k] != gen[k]:
            raise RuntimeError("Goss polynomial constructions disagree at k=%d" % k)
    _goss_cache[key] = rec
    return rec


def goss_poly(field, k):
    """The k-th Goss polynomial as an RF coefficient list (low first)."""
    return goss_polys(field, k)[k]


def goss_poly_torsion(modulus, i):
    """Torsion-lattice Goss polynomial: X^i for 1 <= i <= q, else unsupported."""
    field = modulus.field
    q = field.order
    if not 1 <= i <= q:
        raise Unsupported("torsion Goss polynomial only known in closed form for 1 <= i <= q")
    zero = RF.zero(field)
    return [zero] * i + [RF.one(field)]
