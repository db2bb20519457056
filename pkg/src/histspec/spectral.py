"""Adjacency spectral radius and the closed-form bounds around it.

The eigensolver is shifted power iteration on A + I starting from the
all-ones vector: the shift keeps the iteration convergent on bipartite
graphs (whose unshifted iterates oscillate between +rho and -rho) and the
start vector has positive overlap with the Perron vector, so there is no
randomness anywhere in the numeric core.  The reported value is the
Rayleigh quotient, which is quadratically accurate in the residual.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph

#: Threshold comparisons use "rho >= theta - GUARD": deliberately
#: over-inclusive so verification can only over-check, never under-check.
GUARD = 1e-9

DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 10**6


class ConvergenceError(RuntimeError):
    """Power iteration did not reach the residual tolerance."""

    def __init__(self, message, rho=None, vector=None, iterations=None):
        super().__init__(message)
        self.rho = rho
        self.vector = vector
        self.iterations = iterations


class InvariantViolation(RuntimeError):
    """A mathematically guaranteed relation failed; indicates a bug."""


@dataclass(frozen=True)
class SpectralResult:
    """Dominant adjacency eigenpair of a connected graph."""

    rho: float
    perron: np.ndarray  # positive, unit max-norm
    residual: float     # max-norm of A x - rho x
    iterations: int


def spectral_radius(
    g: Graph,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> SpectralResult:
    """Spectral radius and Perron vector by shifted power iteration."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not g.is_connected():
        raise ValueError("spectral_radius requires a connected graph")
    a = adjacency_matrix(g)
    n = g.n
    x = np.ones(n)
    for it in range(max_iter + 1):
        ax = a @ x
        rho = float(x @ ax) / float(x @ x)
        residual = float(np.abs(ax - rho * x).max())
        if residual <= tol:
            x = x / x.max()
            return SpectralResult(rho=rho, perron=x, residual=residual, iterations=it)
        x = ax + x  # one application of A + I
        x = x / x.max()
    raise ConvergenceError(
        f"no convergence to residual {tol} within {max_iter} iterations",
        rho=rho, vector=x, iterations=max_iter,
    )


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u in range(g.n):
        row = g.rows[u]
        for v in range(g.n):
            if row >> v & 1:
                a[u, v] = 1.0
    return a


# -- closed-form bounds -------------------------------------------------------


def delta_bound(g: Graph) -> float:
    """Maximum degree, an upper bound on the spectral radius."""
    return float(g.max_degree())


def hong_bound(g: Graph) -> float:
    """Upper bound on rho in terms of order, size and minimum degree.

    For a connected graph, rho <= (d - 1 + sqrt((d + 1)^2 + 4(2m - d n))) / 2
    with d the minimum degree; at d = 1 this simplifies to sqrt(2m - n + 1).
    """
    if g.n < 2:
        raise ValueError("hong_bound needs n >= 2")
    if not g.is_connected():
        raise ValueError("hong_bound requires a connected graph")
    d = g.min_degree()
    m = g.m
    n = g.n
    if d == 1:
        return float(np.sqrt(2 * m - n + 1))
    return (d - 1 + np.sqrt((d + 1) ** 2 + 4 * (2 * m - d * n))) / 2


# -- family characteristic quartics ------------------------------------------
#
# On both families the Perron vector is constant on each of four vertex
# classes, so the eigenvalue equation collapses to a monic quartic whose
# largest root is the spectral radius.


@dataclass(frozen=True)
class QuarticPoly:
    """Monic quartic c4 x^4 + ... + c0 with c4 = 1."""

    c4: float
    c3: float
    c2: float
    c1: float
    c0: float

    def __post_init__(self):
        if self.c4 != 1.0:
            raise ValueError("quartic must be monic")

    def __call__(self, x: float) -> float:
        return (((self.c4 * x + self.c3) * x + self.c2) * x + self.c1) * x + self.c0

    def coefficients(self) -> tuple[float, float, float, float, float]:
        return (self.c4, self.c3, self.c2, self.c1, self.c0)


def charpoly_L(n: int) -> QuarticPoly:
    """Quartic whose largest root is rho of the pendant-path family."""
    if n < 7:
        raise ValueError("quartic is used for n >= 7")
    return QuarticPoly(1.0, float(-(n - 4)), float(-(n - 1)),
                       float(2 * n - 8), float(n - 3))


def charpoly_B(n: int) -> QuarticPoly:
    """Quartic whose largest root is rho of the attached-3-path family."""
    if n < 8:
        raise ValueError("quartic is used for n >= 8")
    return QuarticPoly(1.0, float(-(n - 5)), float(-(n - 1)),
                       float(3 * n - 16), float(2 * n - 8))


def largest_root(p: QuarticPoly, lo: float, hi: float, width: float = 1e-12) -> float:
    """Bisection root inside a sign-change bracket, to absolute width 1e-12.

    The caller brackets so that only the largest root lies inside, e.g.
    [n-3, n-2] for the L quartic and [n-4, n-3] for the B quartic.
    """
    flo, fhi = p(lo), p(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    while hi - lo > width:
        mid = (lo + hi) / 2
        fmid = p(mid)
        if fmid == 0.0:
            return mid
        if (fmid > 0) == (fhi > 0):
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid
    return (lo + hi) / 2


# -- slack above the clique bound ---------------------------------------------


@dataclass(frozen=True)
class SlackBound:
    """How far a family's rho sits above its clique lower bound.

    base is n-3 (family L) or n-4 (family B); slack is rho - base; upper is
    the closed-form cap 1/(n-3) resp. 2/(n-4) that the order-based
    corollaries rely on.
    """

    family: str
    n: int
    base: float
    slack: float
    upper: float


def slack_bounds(family: str, n: int) -> SlackBound:
    """Measured slack of a family's rho over its clique bound, with cap check.

    Raises InvariantViolation if the measured slack reaches the cap, which
    would mean an eigensolver or coefficient transcription bug.
    """
    from .graphs import family_B, family_L

    if family == "L":
        if n < 7:
            raise ValueError("family L slack needs n >= 7")
        base = float(n - 3)
        rho = spectral_radius(family_L(n)).rho
        upper = 1.0 / (n - 3)
        tight = (n - 3) / (n**3 - 8 * n**2 + 19 * n - 14)
    elif family == "B":
        if n < 8:
            raise ValueError("family B slack needs n >= 8")
        base = float(n - 4)
        rho = spectral_radius(family_B(n)).rho
        upper = 2.0 / (n - 4)
        tight = (2 * n - 8) / (n**3 - 11 * n**2 + 37 * n - 40)
    else:
        raise ValueError("family must be 'L' or 'B'")
    slack = rho - base
    if not 0.0 < slack < tight:
        raise InvariantViolation(
            f"slack {slack} of family {family} (n={n}) outside (0, {tight})"
        )
    if slack >= upper:
        raise InvariantViolation(
            f"slack {slack} of family {family} (n={n}) reached cap {upper}"
        )
    return SlackBound(family=family, n=n, base=base, slack=slack, upper=upper)
