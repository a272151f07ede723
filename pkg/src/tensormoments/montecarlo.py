"""Statistical ground truth: sample Gaussian tensors, contract, estimate.

Sampling uses the counter-based Philox generator keyed by (seed, chunk
index), so results are reproducible and independent of evaluation order.
Exactness lives elsewhere; this module is double precision by design.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bubbles import Bubble

DEFAULT_CHUNK = 512


@dataclass(frozen=True)
class SampleSpec:
    N: int
    d: int
    samples: int
    seed: int
    variance: float = 1.0

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be >= 1")
        if self.samples < 2:
            raise ValueError("need at least 2 samples")
        if self.variance <= 0:
            raise ValueError("variance must be positive")


@dataclass(frozen=True)
class Estimate:
    mean: float
    stderr: float
    samples: int
    seed: int
    max_rel_imag: float = 0.0

    def to_json(self) -> dict:
        return {
            "mean": self.mean,
            "stderr": self.stderr,
            "samples": self.samples,
            "seed": self.seed,
        }


def _rng(seed: int, index: int) -> np.random.Generator:
    key = np.array([seed % 2**64, index % 2**64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def sample_tensor(spec: SampleSpec, index: int = 0) -> np.ndarray:
    """One complex Gaussian tensor; entries have variance ``spec.variance``."""
    return sample_batch(spec, index, 1)[0]

def sample_batch(spec: SampleSpec, index: int, count: int) -> np.ndarray:
    """``count`` i.i.d. tensors drawn from the stream keyed (seed, index)."""
    rng = _rng(spec.seed, index)
    shape = (count,) + (spec.N,) * spec.d
    scale = math.sqrt(spec.variance / 2.0)
    re = rng.standard_normal(shape)
    im = rng.standard_normal(shape)
    return scale * (re + 1j * im)


def _einsum_args(b: Bubble, batched: bool):
    """Integer-subscript einsum operands for the full bubble contraction.

    Index (c, j) is the color-c edge into black vertex j; white i uses
    (c, tau_c(i)).
    """
    def idx(c, j):
        return (c - 1) * b.n + (j - 1) + (1 if batched else 0)

    subs = []
    for i in range(1, b.n + 1):
        subs.append([idx(c, b.tau(c)(i)) for c in range(1, b.d + 1)])
    for j in range(1, b.n + 1):
        subs.append([idx(c, j) for c in range(1, b.d + 1)])
    if batched:
        subs = [[0] + s for s in subs]
        return subs, [0]
    return subs, []


def evaluate_bubble(b: Bubble, tensor: np.ndarray, optimize="greedy") -> complex:
    """Contract the bubble polynomial on one tensor.

    The contraction order comes from numpy's greedy smallest-intermediate
    planner by default; any order gives the same value up to rounding.
    """
    if tensor.ndim != b.d or any(s != tensor.shape[0] for s in tensor.shape):
        raise ValueError(
            f"tensor shape {tensor.shape} does not match d={b.d} equal dimensions"
        )
    subs, out = _einsum_args(b, batched=False)
    operands = [tensor] * b.n + [np.conj(tensor)] * b.n
    args = [x for pair in zip(operands, subs) for x in pair] + [out]
    return complex(np.einsum(*args, optimize=optimize))


def _evaluate_batch(b: Bubble, batch: np.ndarray, optimize="greedy") -> np.ndarray:
    subs, out = _einsum_args(b, batched=True)
    operands = [batch] * b.n + [np.conj(batch)] * b.n
    args = [x for pair in zip(operands, subs) for x in pair] + [out]
    return np.einsum(*args, optimize=optimize)


def estimate_expectation(
    b: Bubble, spec: SampleSpec, chunk: int = DEFAULT_CHUNK
) -> Estimate:
    """Streaming mean and standard error over ``spec.samples`` draws.

    Chunks are keyed by their index, so the result is byte-identical for a
    fixed seed regardless of how the chunks are scheduled.
    """
    if spec.d != b.d:
        raise ValueError(f"spec has d={spec.d}, bubble has d={b.d}")
    total = 0.0
    total_sq = 0.0
    count = 0
    max_rel_imag = 0.0
    index = 0
    while count < spec.samples:
        take = min(chunk, spec.samples - count)
        values = _evaluate_batch(b, sample_batch(spec, index, take))
        re = np.real(values)
        scale = np.abs(values)
        with np.errstate(invalid="ignore", divide="ignore"):
            rel = np.where(scale > 0, np.abs(np.imag(values)) / scale, 0.0)
        max_rel_imag = max(max_rel_imag, float(np.max(rel)))
        total += float(np.sum(re))
        total_sq += float(np.sum(re * re))
        count += take
        index += 1
    mean = total / count
    var = max(total_sq - count * mean * mean, 0.0) / (count - 1)
    return Estimate(
        mean=mean,
        stderr=math.sqrt(var / count),
        samples=count,
        seed=spec.seed,
        max_rel_imag=max_rel_imag,
    )
