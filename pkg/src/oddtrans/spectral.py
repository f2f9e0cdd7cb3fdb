"""Adjacency-tensor numerics for uniform hypergraphs.

The adjacency tensor of a k-uniform hypergraph acts on a vector x by

    (A x^{k-1})_v = sum over edges e containing v of prod_{u in e, u != v} x_u,
    A x^k        = sum over edges e of k * prod_{v in e} x_v,

the entry weight 1/(k-1)! cancelling against the (k-1)! orderings of each
edge.  The spectral radius of a connected hypergraph is computed by a
shifted power iteration with certified lower/upper brackets; the least
H-eigenvalue is *estimated from above* by projected gradient descent on
the unit k-norm sphere, warm-started from sign-flip vectors built out of
odd bipartitions of single-edge deletions.  Any feasible point is a valid
upper bound, so the estimates certify the closed-form bound checks; the
exact minimum is not claimed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import transversal
from .hypergraph import Hypergraph

DEFAULT_BRACKET_TOL = 1e-10
DEFAULT_REPORT_TOL = 1e-8
_PGD_MAX_STEPS = 400
_ARMIJO_C = 1e-4


def _uniformity(hg: Hypergraph) -> int:
    k = hg.is_uniform()
    if k is None:
        raise ValueError("adjacency tensor requires a uniform hypergraph")
    return k


def _check_vector(hg: Hypergraph, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (hg.n,):
        raise ValueError(f"vector of length {hg.n} expected, got shape {x.shape}")
    return x


def apply(hg: Hypergraph, x: np.ndarray) -> np.ndarray:
    """Evaluate ``A x^{k-1}`` coordinate-wise.

    Per edge, the contribution to vertex v is the product of the other
    k-1 coordinates; prefix/suffix products avoid dividing by x_v, which
    may be zero.
    """
    k = _uniformity(hg)
    x = _check_vector(hg, x)
    out = np.zeros(hg.n)
    for e in hg.edges:
        vals = [x[v] for v in e]
        prefix = [1.0] * (k + 1)
        for i in range(k):
            prefix[i + 1] = prefix[i] * vals[i]
        suffix = 1.0
        for i in range(k - 1, -1, -1):
            out[e[i]] += prefix[i] * suffix
            suffix *= vals[i]
    return out


def rayleigh(hg: Hypergraph, x: np.ndarray) -> float:
    """Evaluate ``A x^k = sum_e k * prod_{v in e} x_v``."""
    k = _uniformity(hg)
    x = _check_vector(hg, x)
    total = 0.0
    for e in hg.edges:
        prod = 1.0
        for v in e:
            prod *= x[v]
        total += prod
    return float(k * total)


def _knorm(x: np.ndarray, k: int) -> float:
    return float(np.sum(np.abs(x) ** k) ** (1.0 / k))


@dataclass(frozen=True)
class PerronResult:
    """Spectral radius estimate with its positive unit-k-norm eigenvector."""

    rho: float
    vector: np.ndarray
    residual: float
    iterations: int
    converged: bool
    bracket: tuple[float, float]


def spectral_radius(
    hg: Hypergraph,
    tol: float = DEFAULT_BRACKET_TOL,
    max_iter: int = 100_000,
) -> PerronResult:
    """Shifted power iteration for the largest H-eigenvalue.

    Iterates ``y = A x^{k-1} + x^{[k-1]}`` followed by the entrywise
    (k-1)-th root and k-norm renormalization; the unit shift rules out
    oscillation on periodic structures.  At every iterate the eigenvalue is
    bracketed by ``min_v y_v / x_v^{k-1} - 1`` and the matching max; the
    iteration stops when the bracket is narrower than ``tol`` and reports
    the bracket top, a certified upper estimate.  When ``max_iter`` is hit
    the best bracket is returned with ``converged=False``.
    """
    k = _uniformity(hg)
    if not hg.is_connected():
        raise ValueError("the iteration requires a connected hypergraph")
    x = np.full(hg.n, hg.n ** (-1.0 / k))
    lo, hi = -np.inf, np.inf
    iterations = 0
    for iterations in range(1, max_iter + 1):
        ax = apply(hg, x)
        xk1 = x ** (k - 1)
        y = ax + xk1
        ratios = y / xk1
        lo = float(ratios.min()) - 1.0
        hi = float(ratios.max()) - 1.0
        if hi - lo < tol:
            residual = float(np.max(np.abs(ax - hi * xk1)))
            return PerronResult(hi, x, residual, iterations, True, (lo, hi))
        x = y ** (1.0 / (k - 1))
        x /= _knorm(x, k)
    ax = apply(hg, x)
    residual = float(np.max(np.abs(ax - hi * x ** (k - 1))))
    return PerronResult(hi, x, residual, iterations, False, (lo, hi))


def _flip_across_deletion(
    hg: Hypergraph, edge_index: int, x: np.ndarray
) -> tuple[np.ndarray, tuple[int, ...]]:
    """Sign-flip ``x`` across an odd bipartition of the deletion ``G - e``."""
    part = transversal.find_odd_transversal(hg.delete_edge(edge_index))
    if part is None:
        raise ValueError(f"deleting edge {edge_index} leaves no odd transversal")
    y = -np.asarray(x, dtype=float)
    y[list(part)] *= -1.0
    return y, part


def flip_vector(
    hg: Hypergraph, edge_index: int, perron: PerronResult
) -> tuple[np.ndarray, float]:
    """The bound-construction vector for one edge of a minimal hypergraph.

    Deleting any edge of a minimal non-odd-transversal hypergraph leaves an
    odd-bipartite remainder; flipping the sign of the Perron vector on one
    side gives a feasible point whose value is exactly

        A y^k = -A x^k + 2k * prod_{v in e} x_v,

    because the deleted edge meets the flipped side in an even number of
    vertices (asserted).  Returns ``(y, A y^k)``.
    """
    k = _uniformity(hg)
    if k % 2:
        raise ValueError("flip construction needs even uniformity")
    if not 0 <= edge_index < hg.m:
        raise ValueError(f"edge index {edge_index} out of range")
    if not transversal.classify(hg).is_minimal:
        raise ValueError("flip construction applies to minimal hypergraphs only")
    y, part = _flip_across_deletion(hg, edge_index, perron.vector)
    flipped = [v for v in hg.edges[edge_index] if v not in set(part)]
    assert len(flipped) % 2 == 0, "deleted edge meets the flipped side oddly"
    return y, rayleigh(hg, y)


def _project(x: np.ndarray, k: int) -> np.ndarray | None:
    nk = _knorm(x, k)
    if nk < 1e-30:
        return None
    return x / nk


def _descend(hg: Hypergraph, k: int, start: np.ndarray) -> tuple[float, np.ndarray]:
    """Projected gradient descent for ``A x^k`` on the unit k-norm sphere.

    The gradient of ``A x^k`` is ``k * A x^{k-1}``; steps are chosen by
    halving backtracking under an Armijo decrease test, projecting back to
    the sphere by renormalization.  Monotone, so the result never exceeds
    the start value.
    """
    x = _project(start, k)
    if x is None:
        raise ValueError("cannot start descent from the zero vector")
    value = rayleigh(hg, x)
    for _ in range(_PGD_MAX_STEPS):
        grad = k * apply(hg, x)
        gnorm2 = float(grad @ grad)
        if gnorm2 < 1e-28:
            break
        step = 1.0 / (1.0 + float(np.abs(grad).max()))
        improved = False
        while step > 1e-18:
            cand = _project(x - step * grad, k)
            if cand is not None:
                cand_value = rayleigh(hg, cand)
                if cand_value < value - _ARMIJO_C * step * gnorm2:
                    x, value = cand, cand_value
                    improved = True
                    break
            step *= 0.5
        if not improved:
            break
    return value, x


def lambda_min_upper(
    hg: Hypergraph,
    restarts: int = 8,
    tol: float = DEFAULT_BRACKET_TOL,
    seed: int = 0,
) -> tuple[float, np.ndarray]:
    """A certified upper bound on the least H-eigenvalue (even k only).

    Minimizes ``A x^k`` over the unit k-norm sphere from several starts:
    sign-flip vectors built from odd bipartitions (of every single-edge
    deletion when the hypergraph is minimal, or of the hypergraph itself
    when it is odd-transversal) plus seeded random starts, each with its
    own deterministic sub-seed so the reported minimum does not depend on
    evaluation order.  Every returned value is attained by a feasible
    point, hence a true upper bound; it also can never drop below
    ``-rho`` (up to bracket error).
    """
    k = _uniformity(hg)
    if k % 2:
        raise ValueError("the least H-eigenvalue estimate needs even uniformity")
    if not hg.is_connected():
        raise ValueError("the estimate requires a connected hypergraph")
    perron = spectral_radius(hg, tol=min(tol, DEFAULT_BRACKET_TOL))
    report = transversal.classify(hg)
    starts: list[np.ndarray] = []
    if report.is_minimal:
        for i in range(hg.m):
            starts.append(_flip_across_deletion(hg, i, perron.vector)[0])
    elif report.witness is not None:
        y = -perron.vector.copy()
        y[list(report.witness)] *= -1.0
        starts.append(y)
    for i in range(restarts):
        rng = np.random.default_rng((seed, i))
        starts.append(rng.standard_normal(hg.n))
    if not starts:
        starts.append(np.ones(hg.n))
    best_value, best_x = np.inf, None
    for start in starts:
        value, x = _descend(hg, k, start)
        if value < best_value:
            best_value, best_x = value, x
    assert best_x is not None
    return float(best_value), best_x


@dataclass(frozen=True)
class BoundReport:
    """Spectral quantities for one minimal non-odd-bipartite hypergraph."""

    rho: float
    bound1: float
    bound2: float
    flip_value_min_edge: float
    lambda_min_upper: float
    alpha: float
    beta: float


def bound_report(
    hg: Hypergraph,
    tol: float = DEFAULT_REPORT_TOL,
    restarts: int = 8,
    seed: int = 0,
) -> BoundReport:
    """Evaluate both closed-form upper bounds on the least H-eigenvalue.

    ``bound1 = -rho + 2k / n^{1/k}`` comes from flipping across the
    deletion of an edge through a small Perron coordinate; ``bound2 =
    -(1 - 2/m) * rho`` from deleting an edge of minimal Perron weight.
    ``alpha = rho + lambda_min_upper`` and ``beta = -lambda_min_upper/rho``
    quantify the distance from odd-bipartiteness (alpha 0, beta 1 exactly
    for odd-bipartite hypergraphs).  Internal consistency of the estimates
    is asserted at tolerance ``tol``.
    """
    k = _uniformity(hg)
    if k % 2:
        raise ValueError("bound report needs even uniformity")
    if not transversal.classify(hg).is_minimal:
        raise ValueError("bound report applies to minimal hypergraphs only")
    perron = spectral_radius(hg)
    x = perron.vector
    rho = perron.rho
    n, m = hg.n, hg.m

    weights = []
    for e in hg.edges:
        prod = 1.0
        for v in e:
            prod *= x[v]
        weights.append(prod)
    e_hat = int(np.argmin(weights))
    flip_value_min_edge = rayleigh(hg, _flip_across_deletion(hg, e_hat, x)[0])

    lam, _ = lambda_min_upper(hg, restarts=restarts, seed=seed)
    bound1 = -rho + 2.0 * k / n ** (1.0 / k)
    bound2 = -(1.0 - 2.0 / m) * rho
    alpha = rho + lam
    beta = -lam / rho

    assert lam >= -rho - tol
    assert lam <= min(bound1, bound2) + tol
    assert alpha >= -tol
    assert 0.0 < beta <= 1.0 + tol
    return BoundReport(rho, bound1, bound2, flip_value_min_edge, lam, alpha, beta)
