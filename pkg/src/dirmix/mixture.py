"""Beta/Dirichlet mixture distributions over the class-probability simplex.

:class:`MixtureParams` is the model head: K simplex weights and K vectors
of positive concentration parameters over d classes. :class:`BetaMarginal`
is its exact one-vs-all reduction for a single class, which carries the
CDF/quantile machinery used to build credible intervals.
"""

from __future__ import annotations

import json
import math

import numpy as np

from . import jsonio
from .errors import (
    ConvergenceFailureError,
    DimensionMismatchError,
    DomainError,
    IndexOutOfRangeError,
    InvalidSimplexError,
    NonPositiveAlphaError,
)
from .special import log_beta, log_gamma, log_sum_exp, reg_inc_beta

__all__ = ["MixtureParams", "BetaMarginal", "WEIGHT_SUM_TOL", "SIMPLEX_TOL"]

# Construction renormalizes weight vectors whose sum drifts from 1 by at
# most this much (softmax float drift); larger deviations are rejected.
WEIGHT_SUM_TOL = 1e-6

# Points handed to log_pdf must sit on the simplex within this tolerance.
SIMPLEX_TOL = 1e-9

QUANTILE_TOL = 1e-10
QUANTILE_MAX_BISECT = 200
QUANTILE_NEWTON_STEPS = 4


def _check_weights(weights) -> np.ndarray:
    w = np.asarray(weights, dtype=float)
    if w.ndim != 1 or w.size < 1:
        raise DimensionMismatchError("weights must be a nonempty 1-D vector")
    if not np.all(np.isfinite(w)):
        raise InvalidSimplexError("weights must be finite")
    if np.any(w < 0.0):
        raise InvalidSimplexError("weights must be nonnegative")
    total = float(w.sum())
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise InvalidSimplexError(
            f"weights must sum to 1 within {WEIGHT_SUM_TOL}, got sum {total!r}"
        )
    if total != 1.0:
        w = w / total
    w = w.copy()
    w.flags.writeable = False
    return w


def _check_alphas(alphas, n_components: int) -> np.ndarray:
    a = np.asarray(alphas, dtype=float)
    if a.ndim != 2:
        raise DimensionMismatchError("alphas must be a K x d matrix")
    if a.shape[0] != n_components:
        raise DimensionMismatchError(
            f"alphas has {a.shape[0]} rows for {n_components} weights"
        )
    if a.shape[1] < 2:
        raise DimensionMismatchError("alphas needs at least 2 classes per row")
    if not np.all(np.isfinite(a)) or np.any(a <= 0.0):
        raise NonPositiveAlphaError("all alpha components must be positive and finite")
    a = a.copy()
    a.flags.writeable = False
    return a


class MixtureParams:
    """Immutable mixture of K Dirichlet components over d classes."""

    __slots__ = ("weights", "alphas")

    def __init__(self, weights, alphas):
        w = _check_weights(weights)
        a = _check_alphas(alphas, w.size)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "alphas", a)

    def __setattr__(self, name, value):
        raise AttributeError("MixtureParams is immutable")

    @property
    def n_components(self) -> int:
        return self.weights.size

    @property
    def n_classes(self) -> int:
        return self.alphas.shape[1]

    def __repr__(self) -> str:
        return (
            f"MixtureParams(K={self.n_components}, d={self.n_classes}, "
            f"weights={self.weights.tolist()})"
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, MixtureParams):
            return NotImplemented
        return np.array_equal(self.weights, other.weights) and np.array_equal(
            self.alphas, other.alphas
        )

    def __hash__(self):
        return hash((self.weights.tobytes(), self.alphas.tobytes()))

    def log_pdf(self, p) -> float:
        """Log density at a point strictly inside the simplex."""
        p = np.asarray(p, dtype=float)
        if p.ndim != 1 or p.size != self.n_classes:
            raise DimensionMismatchError(
                f"point has length {p.size}, mixture has d={self.n_classes}"
            )
        if not np.all(np.isfinite(p)) or np.any(p <= 0.0) or np.any(p >= 1.0):
            raise DomainError("point must lie strictly inside the simplex")
        if abs(float(p.sum()) - 1.0) > SIMPLEX_TOL:
            raise DomainError(
                f"point coordinates must sum to 1 within {SIMPLEX_TOL}"
            )
        log_p = np.log(p)
        terms = []
        for k in range(self.n_components):
            w = self.weights[k]
            if w == 0.0:
                continue
            alpha = self.alphas[k]
            terms.append(
                math.log(w) + float((alpha - 1.0) @ log_p) - log_beta(alpha)
            )
        return log_sum_exp(terms)

    def marginal(self, class_index: int) -> "BetaMarginal":
        """Exact one-vs-all Beta marginal of one simplex coordinate.

        Aggregation: coordinate i of Dirichlet(alpha) is
        Beta(alpha_i, sum of the others); weights carry over unchanged.
        """
        if not isinstance(class_index, (int, np.integer)):
            raise IndexOutOfRangeError("class index must be an integer")
        if class_index < 0 or class_index >= self.n_classes:
            raise IndexOutOfRangeError(
                f"class index {class_index} outside [0, {self.n_classes})"
            )
        a = self.alphas[:, class_index]
        b = self.alphas.sum(axis=1) - a
        return BetaMarginal(self.weights, a, b)

    def mean_vector(self) -> np.ndarray:
        """Mixture mean of the probability vector (sums to 1 exactly)."""
        comp_means = self.alphas / self.alphas.sum(axis=1, keepdims=True)
        return self.weights @ comp_means

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        """Draw n simplex points: pick a component, then normalized gammas."""
        if n < 1:
            raise DomainError(f"sample count must be >= 1, got {n}")
        ks = rng.choice(self.n_components, size=n, p=self.weights)
        draws = rng.gamma(shape=self.alphas[ks])
        totals = draws.sum(axis=1)
        # tiny alphas can underflow every gamma variate in a row; redraw
        while np.any(totals == 0.0):
            bad = totals == 0.0
            draws[bad] = rng.gamma(shape=self.alphas[ks[bad]])
            totals = draws.sum(axis=1)
        return draws / totals[:, None]

    def to_json(self) -> str:
        return jsonio.dumps({"weights": self.weights, "alphas": self.alphas})

    @classmethod
    def from_json(cls, text: str) -> "MixtureParams":
        obj = json.loads(text)
        return cls(obj["weights"], obj["alphas"])


class BetaMarginal:
    """Mixture of K Beta distributions on [0, 1] (one-vs-all class law)."""

    __slots__ = ("weights", "a", "b", "_log_norms")

    def __init__(self, weights, a, b):
        w = _check_weights(weights)
        ab = _check_alphas(np.column_stack([a, b]), w.size)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "a", ab[:, 0])
        object.__setattr__(self, "b", ab[:, 1])
        object.__setattr__(
            self,
            "_log_norms",
            np.array(
                [
                    log_gamma(ai + bi) - log_gamma(ai) - log_gamma(bi)
                    for ai, bi in zip(self.a, self.b)
                ]
            ),
        )

    def __setattr__(self, name, value):
        raise AttributeError("BetaMarginal is immutable")

    @property
    def n_components(self) -> int:
        return self.weights.size

    def __repr__(self) -> str:
        return (
            f"BetaMarginal(K={self.n_components}, weights={self.weights.tolist()}, "
            f"a={self.a.tolist()}, b={self.b.tolist()})"
        )

    def pdf(self, x):
        """Density at scalar or array x strictly inside (0, 1)."""
        x_arr = np.asarray(x, dtype=float)
        if not np.all(np.isfinite(x_arr)) or np.any(x_arr <= 0.0) or np.any(
            x_arr >= 1.0
        ):
            raise DomainError("pdf requires points strictly inside (0, 1)")
        log_x = np.log(x_arr)
        log_1mx = np.log1p(-x_arr)
        out = np.zeros_like(x_arr, dtype=float)
        for k in range(self.n_components):
            w = self.weights[k]
            if w == 0.0:
                continue
            out = out + w * np.exp(
                (self.a[k] - 1.0) * log_x
                + (self.b[k] - 1.0) * log_1mx
                + self._log_norms[k]
            )
        if np.ndim(x) == 0:
            return float(out)
        return out

    def cdf(self, x: float) -> float:
        """Weighted regularized incomplete beta; 0 at 0 and 1 at 1."""
        x = float(x)
        if not math.isfinite(x) or x < 0.0 or x > 1.0:
            raise DomainError(f"cdf argument must lie in [0, 1], got {x!r}")
        acc = 0.0
        for k in range(self.n_components):
            w = self.weights[k]
            if w == 0.0:
                continue
            acc += w * reg_inc_beta(x, float(self.a[k]), float(self.b[k]))
        return min(max(acc, 0.0), 1.0)

    def quantile(self, q: float) -> float:
        """Invert the CDF by bracketing bisection plus a Newton polish."""
        q = float(q)
        if not math.isfinite(q) or q <= 0.0 or q >= 1.0:
            raise DomainError(f"quantile level must lie in (0, 1), got {q!r}")
        lo, hi = 0.0, 1.0
        x = 0.5
        converged = False
        for _ in range(QUANTILE_MAX_BISECT):
            x = 0.5 * (lo + hi)
            f = self.cdf(x) - q
            if abs(f) <= QUANTILE_TOL:
                converged = True
                break
            if f < 0.0:
                lo = x
            else:
                hi = x
        if not converged:
            raise ConvergenceFailureError(
                f"quantile bisection stalled at x={x!r} for q={q!r} "
                f"(pathological parameters: {self!r})"
            )
        for _ in range(QUANTILE_NEWTON_STEPS):
            dens = self.pdf(x)
            if not math.isfinite(dens) or dens <= 0.0:
                break
            step = (self.cdf(x) - q) / dens
            x_new = x - step
            if not (lo <= x_new <= hi) or not (0.0 < x_new < 1.0):
                break
            x = x_new
        return x

    def mean(self) -> float:
        """Mixture mean: weighted component means a/(a+b)."""
        return float(self.weights @ (self.a / (self.a + self.b)))

    def variance(self) -> float:
        """Law of total variance across components."""
        s = self.a + self.b
        comp_means = self.a / s
        comp_vars = self.a * self.b / (s * s * (s + 1.0))
        second_moment = float(self.weights @ (comp_vars + comp_means**2))
        return second_moment - self.mean() ** 2
