"""Quantum bounds: group-averaged projector sums and their spectra.

For a pair of unit seeds (phi, psi) the operator of interest is the sum
over the group of rank-one projectors onto D(g)phi (x) D(g)psi.  Averaging
over the group makes the operator scalar on each isotypic component of the
tensor square, so its spectrum can be written down componentwise:

    lambda_s = (|G| / d_s) * ||P_s (phi (x) psi)||^2

with P_s the component projector and d_s the component dimension.  The
same spectrum is computed a second, independent way by cyclic Jacobi
diagonalization of the assembled 9x9 matrix; the two routes cross-check
each other.

Several orbit pairs are combined by summing their operators.  The maximal
eigenvalue of the sum is always taken from a direct diagonalization of the
summed matrix; componentwise sums are reported alongside but never used as
a shortcut for the maximum.
"""

import json
import math
from dataclasses import dataclass

import numpy as np

from .orbit import Orbit, OrbitPair
from .representation import EPS, IsotypicDecomposition, Representation

__all__ = [
    "EIG_TOL",
    "XOperator",
    "build_x_operator",
    "jacobi_eigh",
    "eigenvalues_direct",
    "eigenvalues_isotypic",
    "max_eigenvalue_sum",
    "SumSpectrum",
]

# Tolerance for agreement between independently computed eigenvalues.
EIG_TOL = 1e-6


@dataclass(frozen=True)
class XOperator:
    """A summed projector operator together with the pairs that produced it."""

    matrix: np.ndarray
    pairs: tuple = ()

    def __post_init__(self):
        arr = np.array(self.matrix, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "matrix", arr)
        if np.abs(arr - arr.T).max() > EPS:
            raise ValueError("operator must be symmetric")


def build_x_operator(phi, psi, product: Representation,
                     pairs=()) -> XOperator:
    """Sum of rank-one projectors onto the orbit of phi (x) psi."""
    w0 = np.kron(np.asarray(phi, dtype=float), np.asarray(psi, dtype=float))
    x = np.zeros((len(w0), len(w0)))
    for k in range(product.group.order):
        w = product[k] @ w0
        x += np.outer(w, w)
    return XOperator(x, tuple(pairs))


def jacobi_eigh(matrix, tol=1e-12, max_sweeps=100):
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi sweeps.

    Rotations run over the strict upper triangle in row order until the
    off-diagonal Frobenius norm drops below `tol` relative to the matrix
    norm (capped at `max_sweeps` sweeps, far more than the quadratic
    convergence ever needs at these sizes).

    Returns (eigenvalues descending, eigenvectors as matching columns).
    """
    a = np.array(matrix, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("square matrix required")
    v = np.eye(n)
    scale = max(1.0, float(np.linalg.norm(a)))

    def offnorm():
        return math.sqrt(2.0 * float(np.sum(np.triu(a, 1) ** 2)))

    for _ in range(max_sweeps):
        if offnorm() <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                # Symmetric Schur rotation annihilating a[p, q], taking the
                # smaller of the two candidate angles for stability.
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.hypot(1.0, t)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                vec_p, vec_q = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vec_p - s * vec_q
                v[:, q] = s * vec_p + c * vec_q
    if offnorm() > tol * scale:
        raise RuntimeError("Jacobi iteration did not converge")
    order = np.argsort(np.diag(a))[::-1]
    return np.diag(a)[order].copy(), v[:, order].copy()


def eigenvalues_direct(operator):
    """All eigenvalues of a symmetric operator, sorted descending.

    Accepts an XOperator or a plain symmetric matrix.  Returns the
    eigenvalue array together with the eigenvector of the largest one.
    """
    matrix = operator.matrix if isinstance(operator, XOperator) else np.asarray(operator, dtype=float)
    if np.abs(matrix - matrix.T).max() > EPS:
        raise ValueError("operator must be symmetric")
    values, vectors = jacobi_eigh(matrix)
    return values, vectors[:, 0]


def eigenvalues_isotypic(phi, psi, decomposition: IsotypicDecomposition):
    """Componentwise eigenvalues (|G|/d_s) ||P_s (phi (x) psi)||^2.

    Returned as (label, eigenvalue) pairs in component order.  The scalar
    component comes out as 8 (phi . psi)^2 for unit inputs.
    """
    w = np.kron(np.asarray(phi, dtype=float), np.asarray(psi, dtype=float))
    out = []
    for comp in decomposition.components:
        weight = float(np.dot(comp.projector @ w, w))
        out.append((comp.label, decomposition.group_order / comp.dim * weight))
    return out


@dataclass(frozen=True)
class SumSpectrum:
    """Spectral data of a sum of orbit-pair operators."""

    lambda_max: float
    eigenvector: np.ndarray
    spectrum: np.ndarray  # all eigenvalues, descending, with multiplicity
    per_pair: tuple  # per pair: tuple of (label, dim, eigenvalue)
    component_sums: dict  # label -> summed componentwise eigenvalue

    def as_dict(self):
        return {
            "lambda_max": self.lambda_max,
            "eigenvector": [float(x) for x in self.eigenvector],
            "spectrum": [float(x) for x in self.spectrum],
            "component_sums": {k: float(v) for k, v in self.component_sums.items()},
            "per_pair": [
                [{"label": lab, "dim": d, "eigenvalue": float(val)}
                 for lab, d, val in table]
                for table in self.per_pair
            ],
        }

    def to_json(self):
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)


def max_eigenvalue_sum(pairs, orbit: Orbit, product: Representation,
                       decomposition: IsotypicDecomposition) -> SumSpectrum:
    """Assemble the summed operator for labeled orbit pairs and diagonalize it.

    The componentwise sums of the per-pair eigenvalues must reappear in the
    directly computed spectrum (to within EIG_TOL); a violation means the
    two routes disagree and raises RuntimeError.
    """
    pairs = tuple(p if isinstance(p, OrbitPair) else OrbitPair(*p) for p in pairs)
    if not pairs:
        raise ValueError("need at least one orbit pair")
    total = np.zeros((product.dim, product.dim))
    per_pair = []
    for pair in pairs:
        phi = orbit.coords(*pair.alice)
        psi = orbit.coords(*pair.bob)
        total += build_x_operator(phi, psi, product).matrix
        table = tuple(
            (label, decomposition.component(label).dim, value)
            for label, value in eigenvalues_isotypic(phi, psi, decomposition)
        )
        per_pair.append(table)

    values, vectors = jacobi_eigh(total)
    sums = {}
    for table in per_pair:
        for label, _, value in table:
            sums[label] = sums.get(label, 0.0) + value
    for label, value in sums.items():
        if np.abs(values - value).min() > EIG_TOL:
            raise RuntimeError(
                f"componentwise sum for {label} ({value:.9f}) missing from spectrum"
            )
    return SumSpectrum(
        lambda_max=float(values[0]),
        eigenvector=vectors[:, 0].copy(),
        spectrum=values,
        per_pair=tuple(per_pair),
        component_sums=sums,
    )
