"""Slow, obviously-correct reference computations used to check the library."""

from fractions import Fraction


def is_prime_naive(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factor_naive(n):
    n = abs(n)
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def int_valuation(n, p):
    if n == 0:
        raise ValueError
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def rational_valuation(x, p):
    x = Fraction(x)
    return int_valuation(x.numerator, p) - int_valuation(x.denominator, p)


def order_naive(a, m):
    a %= m
    x, n = a, 1
    while x != 1:
        x = x * a % m
        n += 1
        if n > m:
            raise ValueError("not a unit")
    return n


def squares_mod(p):
    return {x * x % p for x in range(1, p)}


def legendre_naive(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if a in squares_mod(p) else -1


def jacobi_naive(a, n):
    result = 1
    for p, e in factor_naive(n).items():
        result *= legendre_naive(a, p) ** e
    return result


def kernel_naive(x):
    x = Fraction(x)
    d = -1 if x < 0 else 1
    for part in (x.numerator, x.denominator):
        for p, e in factor_naive(part).items():
            if e % 2:
                d *= p
    return d


def census_values(n):
    return [x for x in range(-n, n + 1) if abs(x) > 1]


def nonspecial_count_naive(n):
    vals = census_values(n)
    ker = {x: kernel_naive(x) for x in vals}
    return sum(1 for a in vals for b in vals if ker[a] == 1 or ker[a] == ker[b])


def special_at_prime_naive(alpha, beta, p):
    """Conditions (a)-(c) at p by enumeration over k."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    for x in (alpha, beta):
        if x.numerator % p == 0 or x.denominator % p == 0:
            return None
    a = alpha.numerator * pow(alpha.denominator, -1, p) % p
    b = beta.numerator * pow(beta.denominator, -1, p) % p
    if a in squares_mod(p):
        return None
    for k in range(p - 1):
        if pow(a, 2 * k, p) == b:
            return k
    return None
