"""Brute-force Wick-contraction enumeration: the exact ground truth.

The Gaussian expectation of a bubble polynomial at unit covariance is the
sum over pairings pi in S_n of prod_c N^{#cycles(tau_c pi^{-1})}.  The
enumeration streams a histogram of per-color cycle counts, so symbolic
results, per-color numeric dimensions and dominant-contraction counts all
come from one pass.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import permutations as _perms
from typing import Sequence

from .algebra import LaurentPoly
from .bubbles import Bubble

DEFAULT_N_MAX = 9


class BubbleTooLarge(Exception):
    def __init__(self, n: int, d: int, n_max: int):
        self.n, self.d, self.n_max = n, d, n_max
        cost = math.factorial(n) * n * (d + 1)
        super().__init__(
            f"n={n} exceeds n_max={n_max}: ~{cost:.2e} elementary steps; "
            "use the Monte Carlo estimator instead"
        )


@dataclass(frozen=True)
class ExpectationResult:
    """Raw (covariance 1) and rescaled expectation of a bubble."""

    raw: LaurentPoly
    alpha: int
    n: int

    @property
    def scaled(self) -> LaurentPoly:
        return self.raw.shift(-self.alpha * self.n)

    def to_json(self) -> dict:
        exp, coeff = self.scaled.leading_term()
        return {
            "raw": self.raw.to_records(),
            "alpha": self.alpha,
            "scaled": self.scaled.to_records(),
            "leading": {"exp": exp, "coeff": str(coeff)},
        }


def _check_size(b: Bubble, n_max: int) -> None:
    if b.n > n_max:
        raise BubbleTooLarge(b.n, b.d, n_max)


def _chunk_histogram(taus: Sequence[Sequence[int]], n: int, first_image: int):
    """Histogram of per-color cycle-count tuples over pairings with
    pi(0) = first_image (0-indexed)."""
    hist: dict[tuple[int, ...], int] = {}
    rest = [x for x in range(n) if x != first_image]
    d = len(taus)
    for tail in _perms(rest):
        images = (first_image,) + tail
        pinv = [0] * n
        for i, img in enumerate(images):
            pinv[img] = i
        key = []
        for c in range(d):
            tau = taus[c]
            seen = [False] * n
            count = 0
            for start in range(n):
                if seen[start]:
                    continue
                count += 1
                i = start
                while not seen[i]:
                    seen[i] = True
                    i = tau[pinv[i]]
            key.append(count)
        tkey = tuple(key)
        hist[tkey] = hist.get(tkey, 0) + 1
    return hist


def wick_histogram(b: Bubble, threads: int = 1) -> dict[tuple[int, ...], int]:
    """Map (cycles per color) -> number of Wick pairings realizing it."""
    n = b.n
    # 0-indexed image tables
    taus = [[img - 1 for img in b.tau(c).images] for c in range(1, b.d + 1)]
    if n == 0:
        return {(): 1}
    if threads <= 1:
        chunks = [_chunk_histogram(taus, n, f) for f in range(n)]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [
                pool.submit(_chunk_histogram, taus, n, f) for f in range(n)
            ]
            chunks = [f.result() for f in futures]
    total: dict[tuple[int, ...], int] = {}
    for chunk in chunks:
        for key, cnt in chunk.items():
            total[key] = total.get(key, 0) + cnt
    return total


def gaussian_expectation(
    b: Bubble, n_max: int = DEFAULT_N_MAX, threads: int = 1
) -> LaurentPoly:
    """Exact unit-covariance expectation of the bubble polynomial."""
    _check_size(b, n_max)
    hist = wick_histogram(b, threads=threads)
    terms: dict[int, int] = {}
    for key, cnt in hist.items():
        e = sum(key)
        terms[e] = terms.get(e, 0) + cnt
    return LaurentPoly(terms)


def expectation(
    b: Bubble, alpha: int = 0, n_max: int = DEFAULT_N_MAX, threads: int = 1
) -> ExpectationResult:
    """Expectation with covariance N^{-alpha} (applied as N^{-alpha n})."""
    return ExpectationResult(
        raw=gaussian_expectation(b, n_max=n_max, threads=threads),
        alpha=alpha,
        n=b.n,
    )


def dominant_contractions(
    b: Bubble, n_max: int = DEFAULT_N_MAX, threads: int = 1
) -> tuple[int, int]:
    """(leading exponent, number of pairings achieving it)."""
    poly = gaussian_expectation(b, n_max=n_max, threads=threads)
    exp, coeff = poly.leading_term()
    assert coeff.denominator == 1
    return exp, coeff.numerator


def per_color_dimensions(
    b: Bubble, dims: Sequence[int], n_max: int = DEFAULT_N_MAX, threads: int = 1
) -> int:
    """Exact expectation with a separate numeric dimension per color."""
    if len(dims) != b.d:
        raise ValueError(f"need {b.d} dimensions, got {len(dims)}")
    if any(x < 1 for x in dims):
        raise ValueError("dimensions must be positive")
    _check_size(b, n_max)
    hist = wick_histogram(b, threads=threads)
    total = 0
    for key, cnt in hist.items():
        prod = cnt
        for dim, cycles in zip(dims, key):
            prod *= dim**cycles
        total += prod
    return total
