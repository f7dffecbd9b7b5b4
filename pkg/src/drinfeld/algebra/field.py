"""Small finite fields F_{p^n} with fully tabulated arithmetic.

Elements of F_{p^n} are plain ints in range(p**n).  The int encodes the
coefficient vector of the element with respect to the power basis of
y = class of the variable in F_p[y]/(f): element k has digits
k = d_0 + d_1*p + ... + d_{n-1}*p^{n-1}, representing d_0 + d_1*y + ...

The defining polynomial f is chosen deterministically: the monic
irreducible of degree n whose coefficient vector (c_0, ..., c_{n-1}),
read as a base-p integer, is smallest.  This makes every field, every
embedding and every root choice reproducible across runs.
"""

import functools


def _poly_mul_mod_p(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_mod(a, m, p):
    # a, m lists of ints mod p, m monic
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1] % p
        if c:
            off = len(a) - 1 - dm
            for j in range(dm):
                a[off + j] = (a[off + j] - c * m[j]) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _is_irreducible(f, p):
    """Trial division by all monic polynomials of degree <= deg(f)//2."""
    n = len(f) - 1
    if n <= 0:
        return False
    for d in range(1, n // 2 + 1):
        for idx in range(p ** d):
            g = []
            k = idx
            for _ in range(d):
                g.append(k % p)
                k //= p
            g.append(1)  # monic of degree d
            if not _poly_mod(f, g, p):
                return False
    return True


def _min_irreducible(p, n):
    """Monic irreducible of degree n with smallest coefficient code."""
    if n == 1:
        return [0, 1]
    for idx in range(p ** n):
        c = []
        k = idx
        for _ in range(n):
            c.append(k % p)
            k //= p
        f = c + [1]
        if _is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible found")  # pragma: no cover


class FiniteField:
    """F_{p^n} with precomputed add/mul/inv tables.

    Intended for the small constant fields of this library (order a few
    hundred at most); construction cost is O(order^2).
    """

    __slots__ = (
        "p", "n", "order", "modulus", "digits", "add_table", "mul_table",
        "neg_table", "inv_table", "ypow_red", "_emb_cache",
    )

    def __init__(self, p, n):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError("p must be prime")
        if n < 1:
            raise ValueError("n must be positive")
        order = p ** n
        if order > 4096:
            raise ValueError("field too large for tabulated arithmetic")
        self.p = p
        self.n = n
        self.order = order
        self.modulus = tuple(_min_irreducible(p, n)[:-1])  # c_0..c_{n-1}

        digits = []
        for k in range(order):
            d = []
            t = k
            for _ in range(n):
                d.append(t % p)
                t //= p
            digits.append(tuple(d))
        self.digits = digits

        # reduction vectors for y^m, n <= m <= 2n-2
        red = {}
        cur = [(-c) % p for c in self.modulus]  # y^n
        for m in range(n, 2 * n - 1):
            red[m] = tuple(cur)
            nxt = [0] * n
            for i, c in enumerate(cur):
                if c:
                    if i + 1 < n:
                        nxt[i + 1] = (nxt[i + 1] + c) % p
                    else:
                        for j, r in enumerate(red[n]):
                            nxt[j] = (nxt[j] + c * r) % p
            cur = nxt
        self.ypow_red = red

        self.add_table = [
            [self._from_digits([(x + y) % p for x, y in zip(digits[a], digits[b])])
             for b in range(order)]
            for a in range(order)
        ]
        self.neg_table = [self._from_digits([(-x) % p for x in digits[a]])
                          for a in range(order)]
        self.mul_table = [[self._mul_raw(a, b) for b in range(order)]
                          for a in range(order)]
        inv = [0] * order
        for a in range(1, order):
            row = self.mul_table[a]
            inv[a] = row.index(1)
        self.inv_table = inv
        self._emb_cache = {}

    def _from_digits(self, d):
        k = 0
        for x in reversed(d):
            k = k * self.p + (x % self.p)
        return k

    def _mul_raw(self, a, b):
        da, db = self.digits[a], self.digits[b]
        prod = _poly_mul_mod_p(list(da), list(db), self.p)
        out = list(prod[: self.n]) + [0] * max(0, self.n - len(prod))
        for m in range(self.n, len(prod)):
            c = prod[m]
            if c:
                for j, r in enumerate(self.ypow_red[m]):
                    out[j] = (out[j] + c * r) % self.p
        return self._from_digits(out)

    # -- element operations (elements are ints) --

    def add(self, a, b):
        return self.add_table[a][b]

    def sub(self, a, b):
        return self.add_table[a][self.neg_table[b]]

    def neg(self, a):
        return self.neg_table[a]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return self.inv_table[a]

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul_table[r][a]
            a = self.mul_table[a][a]
            e >>= 1
        return r

    def frobenius(self, a):
        return self.pow(a, self.p)

    def scalar(self, k):
        """Image of the integer k under Z -> F_p -> F_{p^n}."""
        return k % self.p

    def gen(self):
        """The class of y (for n == 1 this is just 1)."""
        return self.p % self.order if self.n > 1 else 1

    def elements(self):
        return range(self.order)

    def units(self):
        return range(1, self.order)

    def embedding(self, sub):
        """Embedding table of a subfield into this field.

        Returns a list t with t[a] the image of a; the image of the
        subfield generator is the root of the subfield's defining
        polynomial with smallest code.
        """
        if sub.order == self.order:
            return list(range(self.order))
        key = (sub.p, sub.n)
        if key in self._emb_cache:
            return self._emb_cache[key]
        if sub.p != self.p or self.n % sub.n != 0:
            raise ValueError("not a subfield")
        # find smallest root z of sub's defining polynomial in self
        modpoly = list(sub.modulus) + [1]
        z = None
        for cand in range(self.order):
            acc = 0
            for c in reversed(modpoly):
                acc = self.add(self.mul(acc, cand), self.scalar(c))
            if acc == 0:
                z = cand
                break
        if z is None:
            raise AssertionError("subfield root not found")  # pragma: no cover
        zpow = [1]
        for _ in range(sub.n - 1):
            zpow.append(self.mul(zpow[-1], z))
        table = []
        for a in range(sub.order):
            acc = 0
            for d, zp in zip(sub.digits[a], zpow):
                acc = self.add(acc, self.mul(self.scalar(d), zp))
            table.append(acc)
        self._emb_cache[key] = table
        return table

    def __repr__(self):
        return "GF(%d^%d)" % (self.p, self.n) if self.n > 1 else "GF(%d)" % self.p


@functools.lru_cache(maxsize=None)
def _finite_field(p, n):
    return FiniteField(p, n)


def finite_field(p, n=1):
    """Cached constructor for F_{p^n}; the same (p, n) is the same object."""
    return _finite_field(p, n)
