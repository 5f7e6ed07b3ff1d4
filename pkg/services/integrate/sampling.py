"""
Sampling and quadrature building blocks.

Sphere directions are normalized Gaussian vectors drawn in antithetic
pairs (g, -g). Radii inside a shell are volume-uniform. Shell grids are
geometric so they accumulate toward a pole.
"""

import math
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray


@lru_cache(maxsize=8)
def gauss_legendre(nodes: int) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """
    Gauss-Legendre nodes and weights on [0, 1].

    Example:
        >>> x, w = gauss_legendre(4)
        >>> round(float(w.sum()), 12)
        1.0
    """
    x, w = np.polynomial.legendre.leggauss(nodes)
    return 0.5 * (x + 1.0), 0.5 * w


def ball_volume(real_dim: int, radius: float) -> float:
    """Lebesgue volume of a real ball of even dimension 2k: pi^k r^2k / k!."""
    if real_dim == 0:
        return 1.0
    k = real_dim // 2
    return math.pi**k * radius**real_dim / math.factorial(k)


def sphere_area(n: int, radius):
    """Area of the sphere of radius r in C^n: 2 pi^n r^(2n-1) / (n-1)!."""
    return 2.0 * math.pi**n * radius ** (2 * n - 1) / math.factorial(n - 1)


def geometric_edges(inner: float, outer: float, ratio: float) -> NDArray[np.float64]:
    """
    Edges inner = e_0 < ... < e_K = outer with e_{i+1}/e_i <= ratio.

    Example:
        >>> len(geometric_edges(1.0, 4.0, 2.0))
        3
    """
    count = max(1, math.ceil(math.log(outer / inner) / math.log(ratio) - 1e-12))
    edges = np.geomspace(inner, outer, count + 1)
    edges[0], edges[-1] = inner, outer
    return edges


def shell_quadrature(
    edges: NDArray[np.float64], nodes: int = 16
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Per-shell Gauss-Legendre nodes and weights over consecutive edges."""
    x, w = gauss_legendre(nodes)
    lo, hi = edges[:-1, None], edges[1:, None]
    points = lo + (hi - lo) * x[None, :]
    weights = (hi - lo) * w[None, :]
    return points.reshape(-1), weights.reshape(-1)


def antithetic_directions(rng: np.random.Generator, pairs: int, real_dim: int) -> NDArray:
    """2 * pairs unit vectors: g_1..g_P followed by -g_1..-g_P."""
    gaussian = rng.standard_normal(size=(pairs, real_dim))
    norms = np.linalg.norm(gaussian, axis=1, keepdims=True)
    while np.any(norms == 0.0):
        bad = norms[:, 0] == 0.0
        gaussian[bad] = rng.standard_normal(size=(int(bad.sum()), real_dim))
        norms = np.linalg.norm(gaussian, axis=1, keepdims=True)
    unit = gaussian / norms
    return np.concatenate([unit, -unit])


def shell_radii(
    rng: np.random.Generator, inner: float, outer: float, real_dim: int, count: int
) -> NDArray[np.float64]:
    """Radii whose points are uniform in volume within the shell [inner, outer)."""
    u = rng.random(count)
    ratio = (inner / outer) ** real_dim
    return outer * (ratio + u * (1.0 - ratio)) ** (1.0 / real_dim)


def to_complex(real_vectors: NDArray[np.float64]) -> NDArray[np.complex128]:
    """Pack (..., 2k) real vectors as (..., k) complex ones."""
    return real_vectors[..., 0::2] + 1j * real_vectors[..., 1::2]


class PairAccumulator:
    """
    Running mean and variance of antithetic pair means.

    Each batch holds the first members followed by the second members.
    """

    def __init__(self) -> None:
        self.count = 0
        self.mean = 0.0
        self.m2 = 0.0

    def add(self, values: NDArray[np.float64]) -> None:
        half = values.shape[0] // 2
        if half == 0:
            return
        pairs = 0.5 * (values[:half] + values[half : 2 * half])
        batch_mean = float(np.mean(pairs))
        batch_m2 = float(np.sum((pairs - batch_mean) ** 2))
        total = self.count + half
        delta = batch_mean - self.mean
        self.mean += delta * half / total
        self.m2 += batch_m2 + delta * delta * self.count * half / total
        self.count = total

    @property
    def variance_of_mean(self) -> float:
        if self.count < 2:
            return 0.0
        return self.m2 / (self.count - 1) / self.count
