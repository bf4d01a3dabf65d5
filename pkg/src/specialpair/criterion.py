"""Deciding whether a pair alpha, beta is special.

A pair is special when infinitely many odd primes p have alpha, beta units
at p, beta = alpha**(2k) mod p for some k, and alpha a non-residue mod p.
One odd prime q with

    (i)   v_q(alpha) = v_q(beta) = 0,
    (ii)  (alpha/q) = -1,
    (iii) v_q(alpha**(2k) - beta) >= v_q(alpha**(q-1) - 1) for some k,

is enough to certify this.  Condition (iii) is tested as a membership
question: with e = v_q(alpha**(q-1) - 1) and l = ord_q(alpha**2), the
element alpha**2 has order exactly l modulo q**e, so (iii) holds iff
beta**l = 1 mod q**e in the cyclic group (Z/q**e)^x.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

from .arith import (
    RationalLike,
    _require_prime,
    as_rational,
    discrete_log,
    mult_order,
    primes_in_range,
    reduce_mod,
    squarefree_kernel,
    val_of_power_minus_one,
)
from .symbols import legendre

DEFAULT_Q_BOUND = 10**4

SPECIAL = "special"
NONSPECIAL_SQUARE = "nonspecial_square"
NONSPECIAL_SAMEFIELD = "nonspecial_samefield"
UNDETERMINED = "undetermined"
CLASS_NAMES = (SPECIAL, NONSPECIAL_SQUARE, NONSPECIAL_SAMEFIELD, UNDETERMINED)


@dataclass(frozen=True)
class CriterionWitness:
    """A prime q certifying the pair, with alpha**(2k) = beta mod q**e and l = ord_q(alpha**2)."""

    q: int
    k: int
    e: int
    ell: int

    def verify(self, alpha: RationalLike, beta: RationalLike) -> bool:
        alpha, beta = as_rational(alpha), as_rational(beta)
        q, e = self.q, self.e
        if alpha.numerator * alpha.denominator * beta.numerator * beta.denominator % q == 0:
            return False
        if legendre(alpha, q) != -1:
            return False
        if val_of_power_minus_one(alpha, q - 1, q) != e:
            return False
        m = q**e
        return pow(reduce_mod(alpha, q, e), 2 * self.k, m) == reduce_mod(beta, q, e)


@dataclass(frozen=True)
class PairClass:
    """Outcome of :func:`classify_pair`.

    ``kind`` is one of :data:`CLASS_NAMES`.  ``witness`` is set for special
    pairs, ``d`` (the shared squarefree kernel) for same-field pairs.
    ``primes_tried`` counts odd primes examined in the search, ``q_bound``
    records the search limit.
    """

    kind: str
    witness: Optional[CriterionWitness] = None
    d: Optional[int] = None
    q_bound: Optional[int] = None
    primes_tried: int = 0

    @property
    def is_special(self) -> bool:
        return self.kind == SPECIAL

    def to_dict(self) -> dict:
        out: dict = {"class": self.kind}
        if self.witness is not None:
            w = self.witness
            out["witness"] = {"q": w.q, "k": w.k, "e": w.e, "ell": w.ell}
        if self.d is not None:
            out["d"] = self.d
        if self.q_bound is not None:
            out["q_bound"] = self.q_bound
        out["primes_tried"] = self.primes_tried
        return out


@dataclass(frozen=True)
class SpecialPrimeWitness:
    p: int
    ord_alpha: int
    ord_beta: int
    k: int

    @property
    def ratio(self) -> int:
        return self.ord_alpha // self.ord_beta


@dataclass(frozen=True)
class OrderReport:
    ord_alpha: int
    ord_beta: int
    dominant: bool
    ratio_even: Optional[bool]


def _check_pair(alpha: RationalLike, beta: RationalLike) -> tuple[Fraction, Fraction]:
    alpha, beta = as_rational(alpha), as_rational(beta)
    for name, x in (("alpha", alpha), ("beta", beta)):
        if x == 0 or abs(x) == 1:
            raise ValueError(f"{name} must not be 0 or +-1, got {x}")
    return alpha, beta


def _is_unit(x: Fraction, q: int) -> bool:
    return x.numerator % q != 0 and x.denominator % q != 0


@lru_cache(maxsize=8)
def odd_primes_upto(bound: int) -> tuple[int, ...]:
    if bound < 3:
        return ()
    return tuple(primes_in_range(2, bound))


def _alpha_data(alpha: Fraction, q: int) -> Optional[tuple[int, int]]:
    """(e, l) when alpha is a q-unit non-residue, else None."""
    if not _is_unit(alpha, q) or legendre(alpha, q) != -1:
        return None
    e = val_of_power_minus_one(alpha, q - 1, q)
    ell = mult_order(reduce_mod(alpha, q) ** 2, q)
    return e, ell


def theorem1_check(alpha: RationalLike, beta: RationalLike, q: int) -> Optional[CriterionWitness]:
    """Witness if q satisfies conditions (i)-(iii) for the pair, else None."""
    alpha, beta = _check_pair(alpha, beta)
    _require_prime(q)
    if q == 2:
        raise ValueError("q must be an odd prime")
    if not _is_unit(beta, q):
        return None
    data = _alpha_data(alpha, q)
    if data is None:
        return None
    e, ell = data
    m = q**e
    b = reduce_mod(beta, q, e)
    if pow(b, ell, m) != 1:
        return None
    a2 = pow(reduce_mod(alpha, q, e), 2, m)
    k = discrete_log(b, a2, ell, m)
    if k is None:  # cannot happen in a cyclic group
        raise AssertionError(f"membership test passed but no discrete log for {alpha}, {beta}, q={q}")
    return CriterionWitness(q=q, k=k, e=e, ell=ell)


def condition_iii_bruteforce(alpha: RationalLike, beta: RationalLike, q: int) -> bool:
    """Condition (iii) by enumerating k over one period of alpha**2 mod q**e.

    Test oracle: e comes from the exact rational alpha**(q-1) - 1, not from
    the modular search used by :func:`theorem1_check`.
    """
    alpha, beta = _check_pair(alpha, beta)
    _require_prime(q)
    if not (_is_unit(alpha, q) and _is_unit(beta, q)):
        raise ValueError(f"alpha and beta must be units at {q}")
    diff = alpha ** (q - 1) - 1
    num = diff.numerator
    if diff == 0:
        raise ValueError("alpha**(q-1) == 1")
    e = 0
    while num % q == 0:
        num //= q
        e += 1
    m = q**e  # e >= 1 by Fermat
    target = beta.numerator * pow(beta.denominator, -1, m) % m
    a2 = alpha.numerator**2 * pow(alpha.denominator**2, -1, m) % m
    x = 1
    while True:
        if x == target:
            return True
        x = x * a2 % m
        if x == 1:
            return False


class PairClassifier:
    """Classifies pairs (alpha, beta) for a fixed alpha.

    Per-prime data for alpha (Legendre symbol, e, l) is computed once and
    reused across betas, which is what makes a census row cheap.
    """

    def __init__(self, alpha: RationalLike, q_bound: int = DEFAULT_Q_BOUND):
        if q_bound < 3:
            raise ValueError("q_bound must be at least 3")
        self.alpha = as_rational(alpha)
        if self.alpha == 0 or abs(self.alpha) == 1:
            raise ValueError(f"alpha must not be 0 or +-1, got {self.alpha}")
        self.q_bound = q_bound
        self.kernel = squarefree_kernel(self.alpha)
        self._primes = odd_primes_upto(q_bound)
        self._scanned = 0
        # (index, q, e, ell, q**e, alpha**2 mod q**e)
        self._plan: list[tuple[int, int, int, int, int, int]] = []

    def _candidates(self) -> Iterator[tuple[int, int, int, int, int, int]]:
        i = 0
        while True:
            if i < len(self._plan):
                yield self._plan[i]
                i += 1
                continue
            if self._scanned >= len(self._primes):
                return
            idx = self._scanned
            q = self._primes[idx]
            self._scanned += 1
            data = _alpha_data(self.alpha, q)
            if data is not None:
                e, ell = data
                m = q**e
                self._plan.append((idx, q, e, ell, m, pow(reduce_mod(self.alpha, q, e), 2, m)))

    def classify(self, beta: RationalLike) -> PairClass:
        beta = as_rational(beta)
        if beta == 0 or abs(beta) == 1:
            raise ValueError(f"beta must not be 0 or +-1, got {beta}")
        if self.kernel == 1:
            return PairClass(NONSPECIAL_SQUARE)
        if squarefree_kernel(beta) == self.kernel:
            return PairClass(NONSPECIAL_SAMEFIELD, d=self.kernel)
        bn, bd = beta.numerator, beta.denominator
        for idx, q, e, ell, m, a2 in self._candidates():
            if bn % q == 0 or bd % q == 0:
                continue
            b = bn % m if bd == 1 else bn * pow(bd, -1, m) % m
            if pow(b, ell, m) == 1:
                k = discrete_log(b, a2, ell, m)
                if k is None:
                    raise AssertionError(f"no discrete log for beta={beta} at q={q}")
                return PairClass(
                    SPECIAL,
                    witness=CriterionWitness(q=q, k=k, e=e, ell=ell),
                    q_bound=self.q_bound,
                    primes_tried=idx + 1,
                )
        return PairClass(UNDETERMINED, q_bound=self.q_bound, primes_tried=len(self._primes))


def classify_pair(alpha: RationalLike, beta: RationalLike, q_bound: int = DEFAULT_Q_BOUND) -> PairClass:
    """Classify a pair, returning the smallest witness prime q <= q_bound if any.

    Square alpha and alpha, beta with the same squarefree kernel are never
    special; anything else without a witness up to ``q_bound`` is
    reported undetermined.
    """
    alpha, beta = _check_pair(alpha, beta)
    return PairClassifier(alpha, q_bound).classify(beta)


def find_special_primes(
    alpha: RationalLike, beta: RationalLike, p_bound: int, max_count: int
) -> list[SpecialPrimeWitness]:
    """Odd primes p <= p_bound, ascending, at which the pair is units, beta is in
    <alpha**2 mod p> and alpha is a non-residue; at most ``max_count`` of them."""
    alpha, beta = _check_pair(alpha, beta)
    found: list[SpecialPrimeWitness] = []
    if max_count <= 0 or p_bound < 3:
        return found
    for p in primes_in_range(2, p_bound):
        if not (_is_unit(alpha, p) and _is_unit(beta, p)):
            continue
        if legendre(alpha, p) != -1:
            continue
        a, b = reduce_mod(alpha, p), reduce_mod(beta, p)
        a2 = a * a % p
        ell = mult_order(a2, p)
        if pow(b, ell, p) != 1:
            continue
        k = discrete_log(b, a2, ell, p)
        ord_a, ord_b = mult_order(a, p), mult_order(b, p)
        if ord_a % ord_b or (ord_a // ord_b) % 2:
            raise AssertionError(
                f"order ratio {ord_a}/{ord_b} at p={p} is not an even integer"
            )
        found.append(SpecialPrimeWitness(p=p, ord_alpha=ord_a, ord_beta=ord_b, k=k))
        if len(found) >= max_count:
            break
    return found


def order_dominance_check(alpha: RationalLike, beta: RationalLike, p: int) -> OrderReport:
    alpha, beta = as_rational(alpha), as_rational(beta)
    _require_prime(p)
    if p == 2:
        raise ValueError("p must be odd")
    if not (_is_unit(alpha, p) and _is_unit(beta, p)):
        raise ValueError(f"alpha and beta must be units at {p}")
    oa = mult_order(reduce_mod(alpha, p), p)
    ob = mult_order(reduce_mod(beta, p), p)
    dominant = oa > ob
    ratio_even = (oa % ob == 0 and (oa // ob) % 2 == 0) if dominant else None
    return OrderReport(oa, ob, dominant, ratio_even)
