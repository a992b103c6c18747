"""Frameproof codes by random draw plus expurgation.

Draw a t x (n + ell) matrix of i.i.d. symbols, ell = floor(n/k), with t
chosen so the expected number of "bad events" (a column framed by k others)
is below 1.  By Markov's inequality a draw with at most ell bad events
appears quickly; deleting one involved column per bad event leaves at
least n columns forming a k-frameproof code.

The symbol distribution mu is uniform when q > k.  When q <= k a uniform
draw is too collision-prone, so symbol 0 gets probability 1-(q-1)/(k+1)
and each nonzero symbol 1/(k+1), which maximizes the per-row survival
probability p of a fixed column against k fixed others.
"""

from __future__ import annotations

import bisect
import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import CapacityError, CodeMatrix, ConstructionError, ParameterError

MAX_REDRAWS = 50
EVENT_BUDGET = 100_000_000


@dataclass(frozen=True)
class ExpurgationParams:
    """Resolved parameters of one expurgation run.

    ell is the column surplus, t the derived length, mu the symbol
    distribution (index = symbol).
    """

    k: int
    q: int
    n: int
    ell: int
    t: int
    mu: tuple[float, ...]
    seed: int

    def __post_init__(self):
        if self.k < 2:
            raise ParameterError(f"k={self.k} must be at least 2")
        if self.q < 2:
            raise ParameterError(f"q={self.q} must be at least 2")
        if self.n < self.k:
            raise ParameterError(f"need n >= k, got n={self.n}, k={self.k}")
        if len(self.mu) != self.q:
            raise ParameterError(f"mu must have q={self.q} entries, got {len(self.mu)}")
        if any(p < 0 for p in self.mu) or abs(sum(self.mu) - 1.0) > 1e-12:
            raise ParameterError("mu must be a probability distribution")


def _p_fraction(q: int, k: int) -> Fraction:
    if q > k:
        return (Fraction(q - 1, q)) ** k
    a = Fraction(q - 1, k + 1)  # total nonzero mass
    return (1 - a) * a**k + a * (1 - Fraction(1, k + 1)) ** k


def p_qk(q: int, k: int) -> float:
    """Per-row probability that a fixed column separates from k fixed others.

    For q > k this is (1-1/q)^k under the uniform draw; for q <= k it is
    the biased-draw value
      (1 - (q-1)/(k+1)) ((q-1)/(k+1))^k + ((q-1)/(k+1)) (1 - 1/(k+1))^k,
    evaluated exactly in rationals before conversion to float.
    """
    if k < 2:
        raise ParameterError(f"k={k} must be at least 2")
    if q < 2:
        raise ParameterError(f"q={q} must be at least 2")
    return float(_p_fraction(q, k))


def symbol_distribution(q: int, k: int) -> tuple[float, ...]:
    """Draw distribution mu over {0, ..., q-1}: uniform iff q > k."""
    if k < 2 or q < 2:
        raise ParameterError(f"need k >= 2 and q >= 2, got k={k}, q={q}")
    if q > k:
        return tuple([1.0 / q] * q)
    head = 1.0 - (q - 1) / (k + 1)
    return (head,) + tuple([1.0 / (k + 1)] * (q - 1))


def expurgation_length(q: int, k: int, n: int) -> int:
    """Smallest t with (k+1) C(n+ell, k) (1-p)^t <= 1, ell = floor(n/k).

    Evaluated in exact rational arithmetic so the returned t is the true
    minimum, not a float approximation.
    """
    if k < 2:
        raise ParameterError(f"k={k} must be at least 2")
    if q < 2:
        raise ParameterError(f"q={q} must be at least 2")
    if n < k:
        raise ParameterError(f"need n >= k, got n={n}, k={k}")
    ell = n // k
    count = (k + 1) * math.comb(n + ell, k)
    base = 1 - _p_fraction(q, k)
    if not 0 < base < 1:
        raise ParameterError(f"degenerate survival probability for q={q}, k={k}")
    num, den = base.numerator, base.denominator

    def holds(t: int) -> bool:
        return count * num**t <= den**t

    guess = max(1, math.ceil(math.log(count) / -math.log1p(-float(base.numerator) / base.denominator)))
    t = max(1, guess - 2)
    while not holds(t):
        t += 1
    while t > 1 and holds(t - 1):
        t -= 1
    return t


def corollary_length(q: int, k: int, n: int) -> float:
    """Closed-form length estimate ln(n^k (k+1)/k! * ((k+1)/k)^k) / -ln(1-p).

    Real-valued; callers that need an integer length take the ceiling.
    """
    if k < 2:
        raise ParameterError(f"k={k} must be at least 2")
    if q < 2:
        raise ParameterError(f"q={q} must be at least 2")
    if n < k:
        raise ParameterError(f"need n >= k, got n={n}, k={k}")
    p = p_qk(q, k)
    log_count = k * math.log(n * (k + 1) / k) + math.log(k + 1) - math.lgamma(k + 1)
    return log_count / -math.log1p(-p)


def expurgation_params(q: int, k: int, n: int, seed: int = 0) -> ExpurgationParams:
    """Resolve (q, k, n, seed) into a full parameter record."""
    return ExpurgationParams(
        k=k,
        q=q,
        n=n,
        ell=n // k,
        t=expurgation_length(q, k, n),
        mu=symbol_distribution(q, k),
        seed=seed,
    )


def draw_matrix(params: ExpurgationParams, attempt: int = 0) -> np.ndarray:
    """i.i.d. t x (n+ell) symbol matrix for the given attempt number.

    Symbols are drawn row-major by inverse CDF, so the matrix for
    (seed, attempt) is reproducible and distinct attempts are fresh draws.
    """
    if attempt < 0:
        raise ParameterError(f"attempt={attempt} must be nonnegative")
    rng = random.Random(params.seed + attempt)
    cum = list(itertools.accumulate(params.mu))
    cum[-1] = 1.0
    width = params.n + params.ell
    flat = [bisect.bisect_right(cum, rng.random()) for _ in range(params.t * width)]
    return np.array(flat, dtype=np.uint16).reshape(params.t, width)


def enumerate_bad_events(entries: np.ndarray, k: int) -> list[tuple[int, tuple[int, ...]]]:
    """All (i, B): column i agrees with some member of B in every row, |B| = k.

    Zero symbols count as agreement here, matching the framing notion.
    Pairs are reported with B in lexicographic order for each i.
    """
    t, m = entries.shape
    if not 1 <= k <= m - 1:
        raise ParameterError(f"need 1 <= k <= {m - 1}, got k={k}")
    full = (1 << t) - 1
    masks = _agreement_masks(entries)
    events = []
    for i in range(m):
        row = masks[i]
        others = [j for j in range(m) if j != i]
        for group in itertools.combinations(others, k):
            acc = 0
            for j in group:
                acc |= row[j]
                if acc == full:
                    break
            if acc == full:
                events.append((i, group))
    return events


def _agreement_masks(entries: np.ndarray) -> list[list[int]]:
    # masks[a][b] = bitmask over rows where columns a and b hold equal symbols
    t, m = entries.shape
    eq = entries[:, :, None] == entries[:, None, :]
    packed = np.packbits(eq, axis=0, bitorder="little")
    nb = packed.shape[0]
    flat = np.ascontiguousarray(np.moveaxis(packed, 0, 2)).tobytes()
    out = []
    for a in range(m):
        base = a * m * nb
        out.append(
            [int.from_bytes(flat[base + b * nb : base + (b + 1) * nb], "little") for b in range(m)]
        )
    return out


def expurgate_run(q: int, k: int, n: int, seed: int = 0):
    """Full pipeline with diagnostics: (matrix, params, info).

    info records the accepted attempt number, its bad-event count, and how
    many columns the events removed.  Redraws with the next attempt number
    when more than ell bad events occur, up to MAX_REDRAWS attempts; the
    derived t keeps the expected event count below ell + 1, so acceptable
    draws recur.
    """
    params = expurgation_params(q, k, n, seed)
    m = n + params.ell
    if math.comb(m - 1, k) * m > EVENT_BUDGET:
        raise CapacityError(
            f"event enumeration needs {math.comb(m - 1, k) * m} coalition checks, "
            f"over the {EVENT_BUDGET} budget"
        )
    for attempt in range(MAX_REDRAWS):
        drawn = draw_matrix(params, attempt)
        bad = enumerate_bad_events(drawn, k)
        if len(bad) > params.ell:
            continue
        doomed = {i for i, _ in bad}
        keep = [j for j in range(m) if j not in doomed][:n]
        info = {"attempt": attempt, "bad_events": len(bad), "deleted_columns": len(doomed)}
        return CodeMatrix(q, drawn[:, keep]), params, info
    raise ConstructionError(
        f"no draw with at most {params.ell} bad events in {MAX_REDRAWS} attempts"
    )


def build_expurgated(q: int, k: int, n: int, seed: int = 0) -> CodeMatrix:
    """Draw, count bad events, delete one column per event, keep n columns."""
    return expurgate_run(q, k, n, seed)[0]
