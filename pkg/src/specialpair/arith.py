"""Exact arithmetic substrate: rationals, valuations, prime powers, factoring.

Rationals are :class:`fractions.Fraction` values; every function accepting a
rational also accepts an ``int`` or an ``"a/b"`` string.
"""

from __future__ import annotations

import math
import random
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

TRIAL_DIVISION_CUTOFF = 10**6
RHO_ITERATION_CAP = 10**7
MR_ROUNDS = 64
VALUATION_CAP = 64
BSGS_THRESHOLD = 1000
INFINITY = math.inf  # valuation of 0


class FactorizationLimitError(ArithmeticError):
    """Raised when the factoring budget is exhausted; ``cofactor`` is left unsplit."""

    def __init__(self, cofactor: int):
        super().__init__(f"could not factor {cofactor} within the effort budget")
        self.cofactor = cofactor


class NotInvertibleError(ValueError):
    """A denominator is not invertible modulo the requested prime power."""


class PreconditionError(ValueError):
    """An operation was called outside its mathematical domain."""


class PrimePower(NamedTuple):
    p: int
    e: int = 1

    @property
    def value(self) -> int:
        return self.p**self.e


class Factorization(NamedTuple):
    sign: int
    factors: tuple[PrimePower, ...]

    def value(self) -> int:
        n = self.sign
        for p, e in self.factors:
            n *= p**e
        return n

    def as_dict(self) -> dict[int, int]:
        return {p: e for p, e in self.factors}


# ---------------------------------------------------------------------------
# Rational parsing and coercion

_RATIONAL_RE = re.compile(r"^\s*([+\-−]?)(\d+)(?:/(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"a"`` or ``"a/b"`` with an optional leading ``-`` (ASCII or U+2212)."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational number: {text!r}")
    sign, num, den = m.groups()
    den_i = int(den) if den is not None else 1
    if den_i == 0:
        raise ValueError(f"zero denominator: {text!r}")
    value = Fraction(int(num), den_i)
    return -value if sign in ("-", "−") else value


def format_rational(x: RationalLike) -> str:
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational number")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as a rational number")


# ---------------------------------------------------------------------------
# Primes


@lru_cache(maxsize=None)
def small_primes(limit: int = TRIAL_DIVISION_CUTOFF) -> tuple[int, ...]:
    """All primes <= ``limit`` (sieve of Eratosthenes, cached)."""
    if limit < 2:
        return ()
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, limit + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_DETERMINISTIC_LIMIT = 3317044064679887385961981


def _mr_composite_witness(a: int, d: int, s: int, n: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


@lru_cache(maxsize=1 << 16)
def is_prime(n: int) -> bool:
    """Miller-Rabin; deterministic below 3.3e24, else ``MR_ROUNDS`` seeded rounds."""
    if n < 2:
        return False
    for p in _DETERMINISTIC_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _DETERMINISTIC_LIMIT:
        bases = _DETERMINISTIC_BASES
    else:
        rng = random.Random(n)
        bases = tuple(rng.randrange(2, n - 1) for _ in range(MR_ROUNDS))
    return not any(_mr_composite_witness(a, d, s, n) for a in bases)


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")


def primes_in_range(lo: int, hi: int, segment: int = 1 << 16) -> Iterator[int]:
    """Yield the primes in the half-open interval ``(lo, hi]`` in ascending order.

    Uses a segmented sieve so memory stays at ``O(sqrt(hi) + segment)``.
    """
    if lo < 2 or hi < lo:
        raise ValueError(f"need 2 <= lo <= hi, got lo={lo}, hi={hi}")
    base = small_primes(math.isqrt(hi))
    start = lo + 1
    while start <= hi:
        stop = min(start + segment, hi + 1)
        flags = bytearray([1]) * (stop - start)
        for p in base:
            if p * p >= stop:
                break
            first = max(p * p, -(-start // p) * p)
            if first < stop:
                flags[first - start :: p] = bytes(len(range(first, stop, p)))
        for i, flag in enumerate(flags):
            if flag and start + i >= 2:
                yield start + i
        start = stop


# ---------------------------------------------------------------------------
# Factorization


def _pollard_brent(n: int, budget: list[int], rng: random.Random) -> int | None:
    """Return a nontrivial factor of composite ``n`` or None if the budget runs out."""
    if n % 2 == 0:
        return 2
    while budget[0] > 0:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            budget[0] -= r
            r *= 2
            if budget[0] <= 0 and g == 1:
                return None
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    return None


@lru_cache(maxsize=1 << 15)
def _factor_positive(n: int) -> tuple[tuple[int, int], ...]:
    counts: dict[int, int] = {}
    for p in small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            counts[p] = e
    if n > 1:
        stack = [n]
        budget = [RHO_ITERATION_CAP]
        rng = random.Random(n)
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if m <= TRIAL_DIVISION_CUTOFF**2 or is_prime(m):
                # survivors of trial division below cutoff**2 are prime
                counts[m] = counts.get(m, 0) + 1
                continue
            f = _pollard_brent(m, budget, rng)
            if f is None:
                raise FactorizationLimitError(m)
            stack.extend((f, m // f))
    return tuple(sorted(counts.items()))


def factorize(n: int) -> Factorization:
    """Complete factorization of a nonzero integer.

    >>> factorize(287)
    Factorization(sign=1, factors=(PrimePower(p=7, e=1), PrimePower(p=41, e=1)))
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    pairs = _factor_positive(abs(n)) if abs(n) > 1 else ()
    return Factorization(sign, tuple(PrimePower(p, e) for p, e in pairs))


def prime_support(x: RationalLike) -> list[int]:
    """Primes dividing the numerator or denominator, ascending."""
    x = as_rational(x)
    ps = {f.p for f in factorize(x.numerator).factors}
    ps.update(f.p for f in factorize(x.denominator).factors)
    return sorted(ps)


# ---------------------------------------------------------------------------
# Valuations and residues


def _int_val(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp(gamma: RationalLike, p: int) -> int:
    """p-adic valuation of a nonzero rational (negative when p divides the denominator)."""
    _require_prime(p)
    gamma = as_rational(gamma)
    if gamma == 0:
        raise ValueError("valuation of 0 is infinite")
    return _int_val(gamma.numerator, p) - _int_val(gamma.denominator, p)


def reduce_mod(gamma: RationalLike, p: int, e: int = 1) -> int:
    """Image of ``gamma`` in Z/p^e, as an integer in ``[0, p**e)``."""
    gamma = as_rational(gamma)
    m = p**e
    if gamma.denominator % p == 0:
        raise NotInvertibleError(f"denominator of {gamma} is divisible by {p}")
    if gamma.denominator == 1:
        return gamma.numerator % m
    return gamma.numerator * pow(gamma.denominator, -1, m) % m


def mult_order(a: int, p: int, e: int = 1) -> int:
    """Multiplicative order of ``a`` modulo ``p**e`` by divisor descent."""
    m = p**e
    a %= m
    if a % p == 0:
        raise ValueError(f"{a} is not a unit modulo {p}^{e}")
    order = p ** (e - 1) * (p - 1)
    phi = factorize(p - 1).as_dict()
    if e > 1:
        phi[p] = phi.get(p, 0) + e - 1
    for r in phi:
        while order % r == 0 and pow(a, order // r, m) == 1:
            order //= r
    return order


def val_of_power_minus_one(
    alpha: RationalLike, n: int, q: int, cap: int = VALUATION_CAP
) -> int:
    """v_q(alpha**n - 1) without forming the power.

    Raises the exponent T until ``alpha**n`` is no longer 1 modulo ``q**(T+1)``.
    """
    alpha = as_rational(alpha)
    if n < 1:
        raise ValueError("n must be positive")
    if pow(reduce_mod(alpha, q), n, q) != 1:
        raise PreconditionError(f"alpha^{n} is not 1 mod {q}")
    T = 1
    while T <= cap:
        m = q ** (T + 1)
        if pow(reduce_mod(alpha, q, T + 1), n, m) != 1:
            return T
        T += 1
    raise RuntimeError(f"valuation search exceeded cap {cap} (alpha={alpha}, n={n}, q={q})")


def lte_valuation(A: RationalLike, n: int, p: int) -> int | float:
    """v_p(A**n - 1) for A = 1 mod p: additive formula at odd p, direct search at 2.

    Returns :data:`INFINITY` when A**n == 1.
    """
    _require_prime(p)
    A = as_rational(A)
    if n == 0:
        raise ValueError("n must be nonzero")
    if A == 1 or (A == -1 and n % 2 == 0):
        return INFINITY
    t = vp(A - 1, p)
    if t < 1:
        raise PreconditionError(f"v_{p}(A - 1) = {t} < 1")
    if p != 2:
        return t + _int_val(abs(n), p)
    if A == -1:
        return 1
    # v_2 is bounded by v(A-1) + v(A+1) + v(n)
    bound = t + vp(A + 1, 2) + _int_val(abs(n), 2) + 1
    return val_of_power_minus_one(A, abs(n), 2, cap=bound)


def solve_power_congruence(A: RationalLike, B: RationalLike, p: int, T: int) -> int:
    """Smallest n >= 0 with A**n = B mod p**T, lifting one p-adic digit at a time.

    Requires p odd, t = v_p(A - 1) >= 1, T >= t and B = 1 mod p**t; the answer
    lies in ``[0, p**(T - t))``.
    """
    _require_prime(p)
    if p == 2:
        raise NotImplementedError("p = 2 is not supported")
    A, B = as_rational(A), as_rational(B)
    if A == 1:
        raise PreconditionError("A = 1 generates the trivial group")
    t = vp(A - 1, p)
    if t < 1:
        raise PreconditionError(f"v_{p}(A - 1) = {t} < 1")
    if T < t:
        raise PreconditionError(f"T = {T} < t = {t}")
    if B - 1 != 0 and vp(B - 1, p) < t:
        raise PreconditionError(f"B is not 1 mod {p}^{t}: no solution")
    mod = p**T
    a, b = reduce_mod(A, p, T), reduce_mod(B, p, T)
    n = 0
    a_pj = a  # a^(p^j)
    for j in range(T - t):
        level = p ** (t + j)
        c = b * pow(pow(a, n, mod), -1, mod) % mod
        # c = 1 + c1*level, a^(p^j) = 1 + u*level  (mod level*p)
        c1 = (c - 1) // level % p
        u = (a_pj - 1) // level % p
        n += c1 * pow(u, -1, p) % p * p**j
        a_pj = pow(a_pj, p, mod)
    return n


def squarefree_kernel(alpha: RationalLike) -> int:
    """Squarefree integer d with alpha / d a rational square.

    >>> squarefree_kernel(-8)
    -2
    """
    alpha = as_rational(alpha)
    if alpha == 0:
        raise ValueError("0 has no squarefree kernel")
    d = -1 if alpha < 0 else 1
    for part in (alpha.numerator, alpha.denominator):
        for p, e in factorize(part).factors:
            if e % 2:
                d *= p
    return d


def discrete_log(target: int, base: int, order: int, modulus: int) -> int | None:
    """k in ``[0, order)`` with base**k = target mod modulus, or None.

    ``order`` must be the order of ``base``. Brute force below
    ``BSGS_THRESHOLD``, baby-step giant-step above.
    """
    target %= modulus
    base %= modulus
    if order < BSGS_THRESHOLD:
        x = 1
        for k in range(order):
            if x == target:
                return k
            x = x * base % modulus
        return None
    m = math.isqrt(order - 1) + 1
    baby = {}
    x = 1
    for j in range(m):
        baby.setdefault(x, j)
        x = x * base % modulus
    giant = pow(base, -m, modulus)
    y = target
    for i in range(m):
        j = baby.get(y)
        if j is not None:
            k = i * m + j
            if k < order:
                return k
        y = y * giant % modulus
    return None
