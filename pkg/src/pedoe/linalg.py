"""Dense symmetric-matrix kernel for small configuration problems.

Everything here is sized for (n+2) x (n+2) matrices with small ambient
dimension n, so robustness beats speed: eigenvalues come from a cyclic
Jacobi iteration rather than a factorization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import InconsistentSystemError, SingularMatrixError

DEFAULT_COND_LIMIT = 1e12
_JACOBI_REL_TOL = 1e-12
_MAX_SWEEPS = 100


@dataclass(frozen=True, eq=False)
class SymMatrix:
    """Symmetric real matrix; input is symmetrized by averaging with its transpose."""

    array: np.ndarray

    def __post_init__(self):
        a = np.array(self.array, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError("SymMatrix requires a square matrix of dim >= 1")
        if not np.all(np.isfinite(a)):
            raise ValueError("SymMatrix entries must be finite")
        a = 0.5 * (a + a.T)  # absorb round-off in nominally symmetric input
        a.setflags(write=False)
        object.__setattr__(self, "array", a)

    @property
    def dim(self) -> int:
        return self.array.shape[0]

    def __array__(self, dtype=None):
        return np.asarray(self.array, dtype=dtype)

    def __repr__(self):
        return f"SymMatrix(dim={self.dim})"


class Inertia(NamedTuple):
    """Signature of a symmetric matrix: eigenvalue sign counts."""

    n_pos: int
    n_neg: int
    n_zero: int


def _offdiag_norm(a: np.ndarray) -> float:
    # summed entrywise, not as ||a||^2 - ||diag||^2, which cancels catastrophically
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def jacobi_eigensystem(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi eigendecomposition of a symmetric matrix.

    Returns (eigenvalues, eigenvectors) with eigenvectors in columns,
    iterated until the off-diagonal Frobenius norm drops below
    1e-12 times the matrix norm.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    vecs = np.eye(n)
    if n == 1:
        return np.diag(a).copy(), vecs
    scale = float(np.linalg.norm(a))
    if scale == 0.0:
        return np.zeros(n), vecs
    for _ in range(_MAX_SWEEPS):
        if _offdiag_norm(a) <= _JACOBI_REL_TOL * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                # smaller-magnitude root of t^2 + 2*theta*t - 1 = 0, for stability
                if theta >= 0.0:
                    t = 1.0 / (theta + np.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                a[p, q] = a[q, p] = 0.0
                vp, vq = vecs[:, p].copy(), vecs[:, q].copy()
                vecs[:, p] = c * vp - s * vq
                vecs[:, q] = s * vp + c * vq
    else:  # pragma: no cover - Jacobi always converges for symmetric input
        raise RuntimeError("Jacobi iteration failed to converge")
    return np.diag(a).copy(), vecs


def invert_symmetric(m: SymMatrix, cond_limit: float = DEFAULT_COND_LIMIT) -> SymMatrix:
    """Invert a symmetric matrix through its eigendecomposition.

    Raises SingularMatrixError when an eigenvalue vanishes or the estimated
    condition number max|w|/min|w| exceeds cond_limit.
    """
    if cond_limit <= 1.0:
        raise ValueError("cond_limit must exceed 1")
    w, v = jacobi_eigensystem(m.array)
    amax = float(np.max(np.abs(w)))
    amin = float(np.min(np.abs(w)))
    if amin == 0.0 or amax == 0.0 or amax / amin > cond_limit:
        raise SingularMatrixError(
            f"matrix is singular or ill-conditioned (cond estimate "
            f"{amax / amin if amin else np.inf:.3e} > {cond_limit:.3e})"
        )
    return SymMatrix((v / w) @ v.T)


def inertia(m: SymMatrix, zero_tol: float | None = None) -> Inertia:
    """Count eigenvalues above zero_tol, below -zero_tol, and in between.

    zero_tol defaults to 1e-9 times the largest absolute entry, suitable
    for circle data of magnitude O(1) to O(1e3).
    """
    if zero_tol is None:
        zero_tol = 1e-9 * float(np.max(np.abs(m.array), initial=0.0))
    if zero_tol < 0.0:
        raise ValueError("zero_tol must be nonnegative")
    w, _ = jacobi_eigensystem(m.array)
    n_pos = int(np.sum(w > zero_tol))
    n_neg = int(np.sum(w < -zero_tol))
    return Inertia(n_pos, n_neg, m.dim - n_pos - n_neg)


def solve_affine(
    rows: Sequence[Sequence[float]] | np.ndarray,
    rhs: Sequence[float] | np.ndarray,
    rank_tol: float = 1e-12,
    residual_tol: float = 1e-10,
) -> tuple[np.ndarray, np.ndarray]:
    """Solve a (possibly underdetermined) linear system row-by-row.

    Returns (particular, kernel_basis): the minimum-norm particular solution
    and an orthonormal basis of the null space as rows of a 2-D array.
    Rank deficiency simply enlarges the kernel.  Raises
    InconsistentSystemError when no exact solution exists, i.e. the
    least-squares residual exceeds residual_tol * (|rows|*|x| + |rhs|)
    in the max norm.
    """
    a = np.atleast_2d(np.asarray(rows, dtype=float))
    b = np.asarray(rhs, dtype=float).ravel()
    if a.shape[0] != b.size:
        raise ValueError("rhs length must match the number of equations")
    u, s, vt = np.linalg.svd(a, full_matrices=True)
    smax = float(s[0]) if s.size else 0.0
    rank = int(np.sum(s > rank_tol * smax)) if smax > 0.0 else 0
    coeff = (u[:, :rank].T @ b) / s[:rank]
    particular = vt[:rank].T @ coeff
    kernel = vt[rank:].copy()
    residual = float(np.max(np.abs(a @ particular - b), initial=0.0))
    bound = residual_tol * (
        float(np.max(np.abs(a), initial=0.0)) * float(np.max(np.abs(particular), initial=0.0))
        + float(np.max(np.abs(b), initial=0.0))
    )
    if residual > bound:
        raise InconsistentSystemError(
            f"no exact solution: least-squares residual {residual:.3e} exceeds {bound:.3e}"
        )
    return particular, kernel
