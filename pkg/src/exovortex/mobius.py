"""Projective-linear maps of CP^n and their unitary structure.

A MobiusMap is an invertible (n+1) x (n+1) complex matrix up to scale.
The helpers here cover the constructions the twisting machinery needs:
fitting a map to point triples on CP^1, testing whether a map is
projectively unitary, lifting to SU(n+1), and extracting the central
root-of-unity class of a commutator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PreconditionError, TwistConsistencyError


def chordal_distance(a: complex, b: complex) -> float:
    """Fubini-Study chordal distance on CP^1; handles points at infinity."""
    a_fin, b_fin = np.isfinite(a), np.isfinite(b)
    if a_fin and b_fin:
        return float(
            abs(a - b) / np.sqrt((1.0 + abs(a) ** 2) * (1.0 + abs(b) ** 2))
        )
    if a_fin:
        return float(1.0 / np.sqrt(1.0 + abs(a) ** 2))
    if b_fin:
        return float(1.0 / np.sqrt(1.0 + abs(b) ** 2))
    return 0.0


@dataclass(frozen=True)
class MobiusMap:
    """Matrix representative of a projective-linear map, det normalized to 1."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        det = np.linalg.det(m)
        if abs(det) < 1e-14 * max(1.0, np.linalg.norm(m) ** m.shape[0]):
            raise PreconditionError("projective map must have nonzero determinant")
        m = m / det ** (1.0 / m.shape[0])
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @staticmethod
    def identity(dim: int = 2) -> "MobiusMap":
        return MobiusMap(np.eye(dim))

    def __call__(self, w):
        """Fractional-linear action on CP^1 chart coordinates (dim 2 only)."""
        if self.dim != 2:
            raise PreconditionError("chart action implemented for CP^1 maps only")
        (a, b), (c, d) = self.matrix
        w = np.asarray(w, dtype=complex)
        num, den = a * w + b, c * w + d
        with np.errstate(divide="ignore", invalid="ignore"):
            out = num / den
        out = np.where(den == 0, np.inf, out)
        return out if out.shape else complex(out)

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        return MobiusMap(self.matrix @ other.matrix)

    def inverse(self) -> "MobiusMap":
        return MobiusMap(np.linalg.inv(self.matrix))

    def is_identity(self, tol: float = 1e-9) -> bool:
        m = self.matrix / self.matrix[0, 0] if self.matrix[0, 0] != 0 else self.matrix
        return bool(np.allclose(m, np.eye(self.dim), atol=tol))

    def is_unitarizable(self, tol: float = 1e-9) -> bool:
        """True when the matrix is proportional to a unitary (lies in PSU(n+1))."""
        a = self.matrix.conj().T @ self.matrix
        c = np.trace(a).real / self.dim
        return bool(np.linalg.norm(a - c * np.eye(self.dim)) <= tol * max(1.0, abs(c)))

    def unitary_lift(self, tol: float = 1e-9) -> np.ndarray:
        """An SU(n+1) representative; raises if the map is not unitarizable."""
        if not self.is_unitarizable(tol):
            raise TwistConsistencyError("transition map is not projectively unitary")
        a = self.matrix.conj().T @ self.matrix
        c = np.trace(a).real / self.dim
        u = self.matrix / np.sqrt(c)
        det = np.linalg.det(u)
        return u / det ** (1.0 / self.dim)


def mobius_through_points(src, dst) -> MobiusMap:
    """Mobius map sending three source points to three target points.

    Solved as a linear system on the matrix entries: for each pair
    (z, w), a z + b - w (c z + d) = 0, plus a normalization row.
    """
    if len(src) != 3 or len(dst) != 3:
        raise PreconditionError("exactly three point pairs required")
    rows = []
    for z, w in zip(src, dst):
        hz = np.array([1.0, z]) if np.isfinite(z) else np.array([0.0, 1.0])
        hw = np.array([1.0, w]) if np.isfinite(w) else np.array([0.0, 1.0])
        o, zz = hz
        wo, ww = hw
        # [a z + b] * wo - [c z + d] * ww = 0 in homogeneous form
        rows.append([zz * wo, o * wo, -zz * ww, -o * ww])
    a = np.array(rows, dtype=complex)
    _, _, vh = np.linalg.svd(a)
    sol = vh[-1]
    m = np.array([[sol[0], sol[1]], [sol[2], sol[3]]])
    return MobiusMap(m)


def commutator_class(
    transitions: list[MobiusMap], tol: float = 1e-9
) -> int:
    """Central root-of-unity class of the transition pair's commutator.

    For transitions (M1, M2) the commutator M1 M2 M1^-1 M2^-1 of any
    linear lifts is scale-independent; flat consistency requires it to be
    a central element zeta * Id with zeta^(n+1) = 1.  Returns the integer
    c with zeta = exp(2 pi i c / (n+1)).  An empty transition list (the
    sphere) is the trivial class.
    """
    if not transitions:
        return 0
    if len(transitions) == 1:
        return 0
    if len(transitions) != 2:
        raise PreconditionError("expected transition maps for at most two cycles")
    m1, m2 = transitions[0].matrix, transitions[1].matrix
    dim = m1.shape[0]
    comm = m1 @ m2 @ np.linalg.inv(m1) @ np.linalg.inv(m2)
    zeta = np.trace(comm) / dim
    if abs(abs(zeta) - 1.0) > tol or np.linalg.norm(comm - zeta * np.eye(dim)) > tol * dim:
        raise TwistConsistencyError(
            "commutator of transition lifts is not a central unit scalar"
        )
    c = (np.angle(zeta) * dim) / (2.0 * np.pi)
    c_int = int(np.rint(c)) % dim
    if abs(c - np.rint(c)) > 1e-6:
        raise TwistConsistencyError("commutator scalar is not a root of unity")
    return c_int
