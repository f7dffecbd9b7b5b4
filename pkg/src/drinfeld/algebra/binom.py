"""Binomial coefficients modulo a prime, including negative upper index."""


def lucas_binomial(n, k, p):
    """binom(n, k) mod p via Lucas' theorem.

    Negative n is handled by the reflection
    binom(-n, k) = (-1)^k * binom(n + k - 1, k).
    """
    if k < 0:
        return 0
    if n < 0:
        val = lucas_binomial(-n + k - 1, k, p)
        return val if k % 2 == 0 else (-val) % p
    result = 1
    while k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        num = den = 1
        for i in range(ki):
            num = num * (ni - i) % p
            den = den * (i + 1) % p
        result = result * num * pow(den, p - 2, p) % p
        n //= p
        k //= p
    return result
