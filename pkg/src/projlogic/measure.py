"""Integration against the unitarily invariant probability measure on P(H).

Monte Carlo estimates use Haar-distributed points; the exact first and
second moment formulas serve as oracles for every integral of a product of
at most two affine functions ``p -> tr(A p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .config import tol
from .errors import CertificationError, DimensionError, NormalizationError
from .operators import check_density, expectation, haar_random_points, random_hermitian

_CHUNK = 8192


class MonteCarloEstimate(NamedTuple):
    mean: float
    std_error: float
    n_samples: int

    def within(self, value: float, n_sigma: float | None = None) -> bool:
        k = tol().mc_sigma if n_sigma is None else n_sigma
        return abs(self.mean - value) <= k * self.std_error

    def z_score(self, value: float) -> float:
        d = abs(self.mean - value)
        if self.std_error == 0:
            return 0.0 if d == 0 else float("inf")
        return d / self.std_error


def merge_estimates(parts) -> MonteCarloEstimate:
    """Count-weighted mean with pooled variance of independent estimates."""
    parts = list(parts)
    total = sum(e.n_samples for e in parts)
    mean = sum(e.mean * e.n_samples for e in parts) / total
    # recover per-part sums of squares from the standard errors (ddof=1)
    ss = sum((e.std_error ** 2) * e.n_samples * (e.n_samples - 1)
             + e.n_samples * (e.mean - mean) ** 2 for e in parts)
    var = ss / (total - 1)
    return MonteCarloEstimate(float(mean), float(np.sqrt(var / total)), total)


def _estimate(values: np.ndarray) -> MonteCarloEstimate:
    n = values.size
    return MonteCarloEstimate(float(values.mean()), float(values.std(ddof=1) / np.sqrt(n)), n)


def sample_field(field: Callable, n: int, n_samples: int, rng: np.random.Generator) -> np.ndarray:
    """Evaluate ``field`` on ``n_samples`` Haar points, in chunks."""
    out = []
    remaining = n_samples
    while remaining:
        k = min(_CHUNK, remaining)
        pts = haar_random_points(n, k, rng)
        vals = np.broadcast_to(np.asarray(field(pts), dtype=float), (k,))
        out.append(vals)
        remaining -= k
    return np.concatenate(out)


def mc_integrate(field: Callable, n: int, n_samples: int, rng: np.random.Generator) -> MonteCarloEstimate:
    if n_samples < 100:
        raise ValueError("n_samples must be at least 100")
    return _estimate(sample_field(field, n, n_samples, rng))


def moment1_exact(a) -> float:
    """Integral of ``tr(A p)`` over P(H): ``tr(A) / n``."""
    return float(np.trace(a).real / a.shape[0])


def moment2_exact(a, b) -> float:
    """Integral of ``tr(A p) tr(B p)``: ``(tr A tr B + tr AB) / (n (n + 1))``."""
    if a.shape != b.shape:
        raise DimensionError("operators differ in dimension")
    n = a.shape[0]
    return float((np.trace(a) * np.trace(b) + np.trace(a @ b)).real / (n * (n + 1)))


@dataclass(frozen=True, eq=False)
class LiouvilleDensity:
    """``rho(p) = n (n + 1) tr(sigma p) - offset``.

    ``offset = n`` gives unit integral and reproduces expectations; the
    variant with ``offset = 1`` integrates to ``n`` and is kept for comparison only.
    """
    sigma: np.ndarray
    offset: float

    @property
    def dim(self) -> int:
        return self.sigma.shape[0]

    def __call__(self, p):
        n = self.dim
        return n * (n + 1) * expectation(self.sigma, p) - self.offset

    def integral(self) -> float:
        n = self.dim
        return n * (n + 1) * moment1_exact(self.sigma) - self.offset

    def expectation_integral(self, a) -> float:
        """Exact ``integral of f_A rho``."""
        n = self.dim
        return n * (n + 1) * moment2_exact(a, self.sigma) - self.offset * moment1_exact(a)


def liouville_density(sigma, variant: str = "normalized", certify: bool = True,
                      rng: np.random.Generator | None = None) -> LiouvilleDensity:
    """Liouville density of a density matrix.

    ``variant="normalized"`` uses offset ``n``; ``variant="unit_offset"`` uses 1
    and is never certified, since it does not integrate to one.
    """
    sigma = check_density(sigma)
    n = sigma.shape[0]
    offsets = {"normalized": float(n), "unit_offset": 1.0}
    if variant not in offsets:
        raise ValueError(f"unknown variant {variant!r}")
    rho = LiouvilleDensity(sigma, offsets[variant])
    if certify and variant == "normalized":
        norm_err, exp_err = liouville_defects(rho, np.random.default_rng(0) if rng is None else rng)
        if norm_err > tol().oracle or exp_err > tol().oracle:
            raise CertificationError(f"Liouville identities fail: {norm_err:.3g}, {exp_err:.3g}")
    return rho


def liouville_defects(rho: LiouvilleDensity, rng: np.random.Generator, n_ops: int = 10):
    """``(|int rho - 1|, max_A |int f_A rho - tr(sigma A)|)`` via the moment oracles."""
    n = rho.dim
    exp_err = 0.0
    for _ in range(n_ops):
        a = random_hermitian(n, 1.0, rng)
        target = float(np.trace(rho.sigma @ a).real)
        exp_err = max(exp_err, abs(rho.expectation_integral(a) - target) / max(1.0, abs(target)))
    return abs(rho.integral() - 1.0), exp_err


def liouville_basis_sum(basis, points, offset: str = "normalized") -> np.ndarray:
    """``sum_i rho_{p_i}(p)`` over the rays of an orthonormal basis (columns)."""
    basis = np.asarray(basis)
    n = basis.shape[0]
    c = float(n) if offset == "normalized" else 1.0
    total = 0.0
    for k in range(n):
        pk = np.outer(basis[:, k], basis[:, k].conj())
        total = total + n * (n + 1) * expectation(pk, points) - c
    return total


def _operator_of(mu):
    return getattr(mu, "operator", None)


def fuzzy_event_probability(mu, density: Callable, n: int, n_samples: int,
                            rng: np.random.Generator) -> MonteCarloEstimate:
    """Probability ``integral mu * density`` of a fuzzy event.

    Exact when ``mu`` is operator-generated and ``density`` is a
    :class:`LiouvilleDensity`; Monte Carlo otherwise, after checking that
    the density is normalized.
    """
    t = _operator_of(mu)
    if isinstance(density, LiouvilleDensity):
        if abs(density.integral() - 1.0) > tol().oracle:
            raise NormalizationError(f"density integrates to {density.integral()}")
        if t is not None:
            return MonteCarloEstimate(density.expectation_integral(t), 0.0, 0)
    else:
        norm = mc_integrate(density, n, n_samples, rng)
        if not norm.within(1.0):
            raise NormalizationError(f"density integrates to {norm.mean} +- {norm.std_error}")
    return mc_integrate(lambda p: mu(p) * density(p), n, n_samples, rng)


class ReproducingDefect(NamedTuple):
    defect: float
    std_error: float
    exact: bool


def dirac_reproducing_check(mu, p0, n_samples: int, rng: np.random.Generator) -> ReproducingDefect:
    """``|integral mu rho_{p0} - mu(p0)|`` for the normalized density of ``p0``."""
    rho = liouville_density(p0, certify=False)
    target = float(mu(p0))
    t = _operator_of(mu)
    if t is not None:
        return ReproducingDefect(abs(rho.expectation_integral(t) - target), 0.0, True)
    est = mc_integrate(lambda p: mu(p) * rho(p), p0.shape[0], n_samples, rng)
    return ReproducingDefect(abs(est.mean - target), est.std_error, False)
