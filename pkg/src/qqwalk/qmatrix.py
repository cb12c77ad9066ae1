"""Dense quaternionic matrices and the complexification map into 2m x 2n
complex matrices.

A quaternionic matrix is stored through its symplectic decomposition
M = S + j*P with complex S ("simplex part") and P ("perplex part"); an
entry a + b*i + c*j + d*k has s = a + b*i and p = c - d*i, since
j*(c - d*i) = c*j + d*k.  The complexification psi(M) is the block matrix

    [ S       -conj(P) ]
    [ P        conj(S) ]

which is an injective real-algebra homomorphism on square matrices.  Right
eigenvalues of M are read off the ordinary spectrum of psi(M); they come in
conjugate pairs and the upper-half-plane members label the similarity
classes of the right spectrum.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .linalg import EigenResult, eigenvalues, pair_conjugates
from .quaternion import Quaternion, canonical_class_rep

__all__ = [
    "QuatMatrix",
    "psi_homomorphism_check",
    "right_eigenvalues",
    "right_spectrum_class_reps",
]


class QuatMatrix:
    """Immutable dense matrix over the quaternions."""

    __slots__ = ("s", "p")

    def __init__(self, s: np.ndarray, p: np.ndarray):
        s = np.asarray(s, dtype=complex)
        p = np.asarray(p, dtype=complex)
        if s.ndim != 2 or s.shape != p.shape:
            raise ValueError(
                f"simplex/perplex shape mismatch: {s.shape} vs {p.shape}")
        self.s = s
        self.p = p
        self.s.setflags(write=False)
        self.p.setflags(write=False)

    # -- construction -------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "QuatMatrix":
        cols = rows if cols is None else cols
        return cls(np.zeros((rows, cols), dtype=complex),
                   np.zeros((rows, cols), dtype=complex))

    @classmethod
    def identity(cls, n: int) -> "QuatMatrix":
        return cls(np.eye(n, dtype=complex), np.zeros((n, n), dtype=complex))

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence[Quaternion]]) -> "QuatMatrix":
        s = np.array([[q.simplex for q in row] for row in rows], dtype=complex)
        p = np.array([[q.perplex for q in row] for row in rows], dtype=complex)
        if s.ndim != 2:
            raise ValueError("expected a rectangular list of lists")
        return cls(s, p)

    @classmethod
    def from_complex(cls, m: np.ndarray) -> "QuatMatrix":
        m = np.asarray(m, dtype=complex)
        return cls(m, np.zeros_like(m))

    from_real = from_complex

    # -- shape and entry access ---------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.s.shape

    @property
    def rows(self) -> int:
        return self.s.shape[0]

    @property
    def cols(self) -> int:
        return self.s.shape[1]

    def __getitem__(self, key) -> Quaternion:
        u, v = key
        return Quaternion.from_complex_pair(complex(self.s[u, v]),
                                            complex(self.p[u, v]))

    def entries(self) -> Iterable[tuple[int, int, Quaternion]]:
        for u in range(self.rows):
            for v in range(self.cols):
                yield u, v, self[u, v]

    def symplectic_parts(self) -> tuple[np.ndarray, np.ndarray]:
        """The unique complex pair (S, P) with M = S + j*P."""
        return self.s.copy(), self.p.copy()

    # -- algebra ------------------------------------------------------

    def __add__(self, other: "QuatMatrix") -> "QuatMatrix":
        return QuatMatrix(self.s + other.s, self.p + other.p)

    def __sub__(self, other: "QuatMatrix") -> "QuatMatrix":
        return QuatMatrix(self.s - other.s, self.p - other.p)

    def __neg__(self) -> "QuatMatrix":
        return QuatMatrix(-self.s, -self.p)

    def __matmul__(self, other: "QuatMatrix") -> "QuatMatrix":
        if self.cols != other.rows:
            raise ValueError(
                f"dimension mismatch: {self.shape} @ {other.shape}")
        # (S1 + jP1)(S2 + jP2): j z = conj(z) j for complex z.
        s = self.s @ other.s - np.conj(self.p) @ other.p
        p = np.conj(self.s) @ other.p + self.p @ other.s
        return QuatMatrix(s, p)

    def scale(self, factor: float) -> "QuatMatrix":
        """Multiply by a real scalar (central in H)."""
        return QuatMatrix(self.s * factor, self.p * factor)

    def transpose(self) -> "QuatMatrix":
        return QuatMatrix(self.s.T, self.p.T)

    def conj_transpose(self) -> "QuatMatrix":
        # Entrywise (s + jp)* = conj(s) - j p, then transpose.
        return QuatMatrix(np.conj(self.s).T, -self.p.T)

    # -- predicates ---------------------------------------------------

    def max_abs_diff(self, other: "QuatMatrix") -> float:
        d = self - other
        return float(max(np.abs(d.s).max(initial=0.0),
                         np.abs(d.p).max(initial=0.0)))

    def isclose(self, other: "QuatMatrix", atol: float = 1e-10) -> bool:
        return self.shape == other.shape and self.max_abs_diff(other) <= atol

    def is_complex_valued(self, atol: float = 1e-12) -> bool:
        return float(np.abs(self.p).max(initial=0.0)) <= atol

    def is_unitary(self, tol: float = 1e-9) -> bool:
        if self.rows != self.cols:
            raise ValueError("unitarity is defined for square matrices only")
        ident = QuatMatrix.identity(self.rows)
        star = self.conj_transpose()
        return ((star @ self).max_abs_diff(ident) <= tol
                and (self @ star).max_abs_diff(ident) <= tol)

    # -- complexification ---------------------------------------------

    def psi(self) -> np.ndarray:
        """Complexification: the 2 rows x 2 cols block matrix
        [[S, -conj(P)], [P, conj(S)]].

        The first block of indices is the "+" copy of the index set, the
        second the "-" copy; this ordering is part of the reporting
        contract for complexified spectra.
        """
        return np.block([[self.s, -np.conj(self.p)],
                         [self.p, np.conj(self.s)]])

    def __repr__(self) -> str:
        return f"QuatMatrix({self.rows}x{self.cols})"


def psi_homomorphism_check(m: QuatMatrix, n: QuatMatrix,
                           tol: float = 1e-10) -> bool:
    """Check psi(M @ N) == psi(M) @ psi(N) entrywise within tol."""
    if m.cols != n.rows:
        raise ValueError(f"dimension mismatch: {m.shape} @ {n.shape}")
    lhs = (m @ n).psi()
    rhs = m.psi() @ n.psi()
    return float(np.abs(lhs - rhs).max(initial=0.0)) <= tol


def right_eigenvalues(m: QuatMatrix) -> EigenResult:
    """The 2n complex right eigenvalues of a square quaternionic matrix.

    Obtained as the spectrum of psi(M), with conjugate pairing enforced.
    """
    if m.rows != m.cols:
        raise ValueError("right eigenvalues are defined for square matrices")
    result = eigenvalues(m.psi())
    result.eigenvalues = pair_conjugates(result.eigenvalues)
    return result


def right_spectrum_class_reps(m: QuatMatrix, tol: float = 1e-7) -> list[tuple[complex, int]]:
    """Deduplicated similarity-class representatives of the right spectrum.

    Each complexified eigenvalue lambda contributes the class of
    x0 + |Im|*i; conjugate eigenvalues collapse to the same representative.
    Returns (representative, multiplicity) pairs sorted by (re, im).
    """
    vals = right_eigenvalues(m).eigenvalues
    reps = [canonical_class_rep(Quaternion(v.real, v.imag)) for v in vals]
    return dedupe_class_reps(reps, tol)


def dedupe_class_reps(reps: Sequence[complex], tol: float = 1e-7) -> list[tuple[complex, int]]:
    """Cluster class representatives within tol, keeping multiplicities."""
    clusters: list[list[complex]] = []
    for r in sorted(reps, key=lambda z: (z.real, z.imag)):
        if clusters and abs(r - clusters[-1][-1]) <= tol:
            clusters[-1].append(r)
        else:
            clusters.append([r])
    return [(sum(c) / len(c), len(c)) for c in clusters]
