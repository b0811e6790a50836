"""Dense complex matrix helpers: Hermitian eigensolves, principal square
roots of density operators, unitarity checks and the matrix JSON format.

Matrices are plain ``numpy.ndarray`` objects with ``complex`` dtype and
row-major layout. ``DensityOperator`` is a thin validated wrapper used at
API boundaries; hot loops work on raw arrays.
"""

from __future__ import annotations

import numpy as np

from .errors import (
    InvalidParameterError,
    NoConvergenceError,
    NotHermitianError,
    ParseError,
)

HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
# Eigenvalues in [-PSD_CLAMP_TOL, 0) are float noise and get clamped to 0;
# anything below is a genuinely invalid state.
PSD_CLAMP_TOL = 1e-10


def as_matrix(m) -> np.ndarray:
    """Coerce a DensityOperator or array-like to a complex ndarray."""
    if isinstance(m, DensityOperator):
        return m.matrix
    return np.asarray(m, dtype=complex)


def max_abs(m: np.ndarray) -> float:
    """Entrywise max-modulus norm."""
    return float(np.max(np.abs(m))) if m.size else 0.0


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    return max_abs(m - m.conj().T) <= tol


def is_unitary(m, tol: float) -> bool:
    """True iff ``max_abs(M† M - I) <= tol``. Non-square input is never unitary."""
    m = as_matrix(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return False
    n = m.shape[0]
    return max_abs(m.conj().T @ m - np.eye(n)) <= tol


def hermitian_eig(m, tol: float = HERMITIAN_TOL):
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvalues ascending and
    eigenvectors as columns, so that ``m = V diag(w) V†``.

    Raises NotHermitianError if the symmetry tolerance is violated and
    NoConvergenceError if the underlying iteration fails.
    """
    m = as_matrix(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotHermitianError(f"expected a square matrix, got shape {m.shape}")
    dev = max_abs(m - m.conj().T)
    if dev > tol:
        raise NotHermitianError(
            f"matrix is not Hermitian: max |M - M†| = {dev:.3e} > {tol:.1e}"
        )
    try:
        w, v = np.linalg.eigh(m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - eigh rarely fails
        raise NoConvergenceError(str(exc)) from exc
    return w, v


class DensityOperator:
    """Hermitian, positive semidefinite, unit-trace complex matrix.

    Validation enforces Hermiticity and unit trace within 1e-10 and
    eigenvalues >= -1e-10. Instances are treated as immutable.
    """

    __slots__ = ("matrix",)

    def __init__(self, matrix, *, validate: bool = True):
        m = np.asarray(matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
            raise InvalidParameterError(
                f"density operator must be a square matrix, got shape {m.shape}"
            )
        if validate:
            if not np.all(np.isfinite(m.view(float))):
                raise InvalidParameterError("density operator has non-finite entries")
            dev = max_abs(m - m.conj().T)
            if dev > HERMITIAN_TOL:
                raise NotHermitianError(
                    f"density operator not Hermitian: max |M - M†| = {dev:.3e}"
                )
            tr = m.trace()
            if abs(tr - 1.0) > TRACE_TOL:
                raise InvalidParameterError(
                    f"density operator trace {tr:.12g} differs from 1 by more than {TRACE_TOL:.1e}"
                )
            w = np.linalg.eigvalsh(m)
            if w[0] < -PSD_CLAMP_TOL:
                raise InvalidParameterError(
                    f"density operator has negative eigenvalue {w[0]:.3e}"
                )
        self.matrix = m
        self.matrix.setflags(write=False)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def from_diagonal(cls, lambdas) -> "DensityOperator":
        """Incoherent state diag(lambdas); entries must be a probability vector."""
        lam = np.asarray(lambdas, dtype=float)
        return cls(np.diag(lam.astype(complex)))

    @classmethod
    def pure(cls, vector) -> "DensityOperator":
        """|psi><psi| from a state vector (normalized internally)."""
        v = np.asarray(vector, dtype=complex).ravel()
        nrm = np.linalg.norm(v)
        if nrm == 0:
            raise InvalidParameterError("zero vector cannot define a pure state")
        v = v / nrm
        return cls(np.outer(v, v.conj()))

    def eigenvalues(self) -> np.ndarray:
        return np.linalg.eigvalsh(self.matrix)

    def __repr__(self) -> str:
        return f"DensityOperator(dim={self.dim})"


def clamped_psd_eigs(w: np.ndarray) -> np.ndarray:
    """Clamp eigenvalues in [-PSD_CLAMP_TOL, 0) to 0; reject anything lower."""
    w = np.asarray(w, dtype=float)
    if np.min(w) < -PSD_CLAMP_TOL:
        raise InvalidParameterError(
            f"eigenvalue {np.min(w):.3e} below -{PSD_CLAMP_TOL:.1e}: not PSD"
        )
    return np.where(w < 0.0, 0.0, w)


def principal_sqrt(rho) -> np.ndarray:
    """Principal square root of a PSD Hermitian matrix.

    Accepts a DensityOperator or a raw Hermitian ndarray. Eigenvalues within
    float noise below zero are clamped before the square root; the result is
    Hermitian PSD with ``result @ result == rho`` up to float error.
    """
    m = as_matrix(rho)
    w, v = hermitian_eig(m)
    w = clamped_psd_eigs(w)
    s = (v * np.sqrt(w)) @ v.conj().T
    return (s + s.conj().T) / 2


def matrix_to_json(m) -> dict:
    """Matrix JSON object: {"rows": N, "cols": N, "data": [[re, im], ...]} row-major."""
    m = as_matrix(m)
    data = [[float(z.real), float(z.imag)] for z in m.ravel()]
    return {"rows": int(m.shape[0]), "cols": int(m.shape[1]), "data": data}


def matrix_from_json(obj) -> np.ndarray:
    """Parse the matrix JSON format; raises ParseError on malformed input."""
    if not isinstance(obj, dict):
        raise ParseError("matrix JSON must be an object")
    try:
        rows = int(obj["rows"])
        cols = int(obj["cols"])
        data = obj["data"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"matrix JSON missing or invalid field: {exc}") from exc
    if rows < 1 or cols < 1:
        raise ParseError(f"matrix dimensions must be >= 1, got {rows}x{cols}")
    if not isinstance(data, list) or len(data) != rows * cols:
        raise ParseError(
            f"matrix data must hold {rows * cols} [re, im] pairs, got {len(data) if isinstance(data, list) else type(data).__name__}"
        )
    out = np.empty(rows * cols, dtype=complex)
    for i, pair in enumerate(data):
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise ParseError(f"matrix data entry {i} is not an [re, im] pair")
        try:
            out[i] = complex(float(pair[0]), float(pair[1]))
        except (TypeError, ValueError) as exc:
            raise ParseError(f"matrix data entry {i} is not numeric") from exc
    if not np.all(np.isfinite(out.view(float))):
        raise ParseError("matrix data contains non-finite values")
    return out.reshape(rows, cols)
