"""Quadratic residue symbols: Legendre, Jacobi, Kronecker, and the symbol (d/gamma) over Q^x."""

from __future__ import annotations

import math

from .arith import (
    INFINITY,
    NotInvertibleError,
    PreconditionError,
    RationalLike,
    _require_prime,
    as_rational,
    factorize,
    reduce_mod,
    vp,
)


def legendre(a: RationalLike, p: int) -> int:
    """Legendre symbol (a/p) of a p-integral rational, by Euler's criterion."""
    _require_prime(p)
    if p == 2:
        raise ValueError("Legendre symbol needs an odd prime")
    a = as_rational(a)
    if a.denominator % p == 0:
        raise NotInvertibleError(f"denominator of {a} is divisible by {p}")
    r = reduce_mod(a, p)
    if r == 0:
        return 0
    return 1 if pow(r, (p - 1) // 2, p) == 1 else -1


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), defined for all integers a and n."""
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -1
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    return result * jacobi(a, n)


def _require_unit_at_2d(d: int, gamma) -> None:
    bad = math.gcd(gamma.numerator * gamma.denominator, 2 * d)
    if bad != 1:
        p = factorize(bad).factors[0].p
        raise PreconditionError(f"v_{p}(gamma) != 0 for the prime {p} dividing 2d")


def gen_jacobi(d: int, gamma: RationalLike) -> int:
    """The product of (d/p)**v_p(gamma) over primes p in the support of gamma.

    gamma must be a unit at every prime dividing 2d.
    """
    if d == 0:
        raise ValueError("d must be nonzero")
    gamma = as_rational(gamma)
    if gamma == 0:
        raise ValueError("gamma must be nonzero")
    _require_unit_at_2d(d, gamma)
    result = 1
    for part in (gamma.numerator, gamma.denominator):
        # (d/p)**(-e) == (d/p)**e
        for p, e in factorize(part).factors:
            if e % 2:
                result *= legendre(d, p)
    return result


def _val(x, p: int) -> float | int:
    return INFINITY if x == 0 else vp(x, p)


def lemma3_hypotheses_hold(d: int, eta: RationalLike) -> bool:
    """True iff v_p(eta - 1) >= 1 for every odd p | d and v_2(eta - 1) >= 3.

    eta = 1 satisfies both conditions vacuously.
    """
    eta = as_rational(eta)
    if eta <= 0:
        raise ValueError("eta must be positive")
    if d == 0:
        raise ValueError("d must be nonzero")
    _require_unit_at_2d(d, eta)
    odd_primes = [f.p for f in factorize(d).factors if f.p != 2]
    if any(_val(eta - 1, p) < 1 for p in odd_primes):
        return False
    return _val(eta - 1, 2) >= 3
