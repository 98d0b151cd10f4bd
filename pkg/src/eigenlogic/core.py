"""Dense/diagonal operator algebra for logical observables.

A logical observable is diagonal in the canonical basis, so it is stored as
its real eigenvalue vector plus the per-argument arity structure.  Indexing is
mixed-radix with the first argument as the most significant digit, which is
exactly the ordering produced by a Kronecker product A (x) B.  Densification
is an explicit export step (`materialize`), never the working representation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import ArityMismatchError, CapacityError

DEFAULT_DIM_CAP = 3 ** 10
DEFAULT_TOL = 1e-12

_CAP_ENV_VAR = "EIGENLOGIC_DIM_CAP"


def dimension_cap() -> int:
    """Active dimension cap: EIGENLOGIC_DIM_CAP if set, else 3^10."""
    raw = os.environ.get(_CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_DIM_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise CapacityError(f"{_CAP_ENV_VAR} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise CapacityError(f"{_CAP_ENV_VAR} must be positive, got {cap}")
    return cap


def check_capacity(dim: int) -> None:
    """Raise CapacityError if a dimension exceeds the active cap."""
    cap = dimension_cap()
    if dim > cap:
        raise CapacityError(f"dimension {dim} exceeds the cap of {cap}")


def _as_arities(arities: Iterable[int]) -> tuple[int, ...]:
    out = tuple(int(m) for m in arities)
    for m in out:
        if m < 2:
            raise ValueError(f"every per-argument arity must be >= 2, got {m}")
    return out


def _frozen_array(values, dtype) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class DiagObservable:
    """A logical observable given by its eigenvalue vector.

    ``arities`` lists the number of truth values of each argument;
    ``eigenvalues`` has length prod(arities) in canonical mixed-radix order.
    Instances are immutable and safe to share across threads.
    """

    arities: tuple[int, ...]
    eigenvalues: np.ndarray

    def __post_init__(self):
        arities = _as_arities(self.arities)
        eig = _frozen_array(np.ravel(self.eigenvalues), float)
        expected = int(np.prod(arities, dtype=object)) if arities else 1
        if eig.size != expected:
            raise ValueError(
                f"eigenvalue vector has length {eig.size}, expected {expected} "
                f"for arities {arities}"
            )
        if not np.all(np.isfinite(eig)):
            raise ValueError("eigenvalues must all be finite")
        object.__setattr__(self, "arities", arities)
        object.__setattr__(self, "eigenvalues", eig)

    @property
    def dim(self) -> int:
        return self.eigenvalues.size

    @classmethod
    def identity(cls, arities: Iterable[int]) -> "DiagObservable":
        return cls.constant(arities, 1.0)

    @classmethod
    def constant(cls, arities: Iterable[int], value: float) -> "DiagObservable":
        arities = _as_arities(arities)
        dim = int(np.prod(arities, dtype=object)) if arities else 1
        return cls(arities, np.full(dim, float(value)))

    def isclose(self, other: "DiagObservable", tol: float = DEFAULT_TOL) -> bool:
        """Entrywise equality of eigenvalues within ``tol`` (same arities)."""
        return self.arities == other.arities and bool(
            np.all(np.abs(self.eigenvalues - other.eigenvalues) <= tol)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiagObservable):
            return NotImplemented
        return self.arities == other.arities and np.array_equal(
            self.eigenvalues, other.eigenvalues
        )

    def __repr__(self) -> str:
        vals = ", ".join(format(v, ".12g") for v in self.eigenvalues)
        return f"DiagObservable(arities={self.arities}, diag({vals}))"

    # Operator arithmetic.  Co-diagonal observables commute, so sums, scalar
    # multiples and entrywise products are again observables of the family.
    def __add__(self, other: "DiagObservable") -> "DiagObservable":
        return add(self, other)

    def __sub__(self, other: "DiagObservable") -> "DiagObservable":
        return add(self, affine(0.0, -1.0, other))

    def __mul__(self, other):
        if isinstance(other, DiagObservable):
            return compose_entrywise(self, other)
        return affine(0.0, float(other), self)

    def __rmul__(self, scalar) -> "DiagObservable":
        return affine(0.0, float(scalar), self)

    def __neg__(self) -> "DiagObservable":
        return affine(0.0, -1.0, self)

    def __pow__(self, exponent: int) -> "DiagObservable":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("only non-negative integer powers are defined")
        return DiagObservable(self.arities, self.eigenvalues ** exponent)

    def to_json(self) -> dict:
        return {
            "arities": list(self.arities),
            "eigenvalues": [float(v) for v in self.eigenvalues],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DiagObservable":
        return cls(tuple(data["arities"]), np.asarray(data["eigenvalues"], dtype=float))


@dataclass(frozen=True, eq=False)
class DenseMatrix:
    """Explicit square complex matrix, row-major."""

    dim: int
    entries: np.ndarray

    def __post_init__(self):
        dim = int(self.dim)
        if dim < 1:
            raise ValueError("dimension must be positive")
        entries = _frozen_array(np.asarray(self.entries, dtype=complex).reshape(dim, dim), complex)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "entries", entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return self.dim == other.dim and np.array_equal(self.entries, other.entries)

    def is_hermitian(self, tol: float = DEFAULT_TOL) -> bool:
        return bool(np.all(np.abs(self.entries - self.entries.conj().T) <= tol))

    def to_json(self) -> dict:
        flat = self.entries.reshape(-1)
        return {
            "dim": self.dim,
            "re": [float(v) for v in flat.real],
            "im": [float(v) for v in flat.imag],
        }

    @classmethod
    def from_json(cls, data: dict) -> "DenseMatrix":
        dim = int(data["dim"])
        flat = np.asarray(data["re"], dtype=float) + 1j * np.asarray(data["im"], dtype=float)
        return cls(dim, flat.reshape(dim, dim))


@dataclass(frozen=True)
class ObservableClass:
    """Structural classification of an observable's eigenvalue set."""

    is_projector: bool
    is_isometry: bool
    is_identity: bool
    is_zero: bool

    def labels(self) -> tuple[str, ...]:
        pairs = (
            ("projector", self.is_projector),
            ("isometry", self.is_isometry),
            ("identity", self.is_identity),
            ("zero", self.is_zero),
        )
        return tuple(name for name, flag in pairs if flag)


def kron(a: DiagObservable, b: DiagObservable) -> DiagObservable:
    """Kronecker product; arities concatenate, eigenvalues multiply pairwise."""
    check_capacity(a.dim * b.dim)
    return DiagObservable(a.arities + b.arities, np.kron(a.eigenvalues, b.eigenvalues))


def compose_entrywise(a: DiagObservable, b: DiagObservable) -> DiagObservable:
    """Matrix product of two co-diagonal observables (entrywise on eigenvalues)."""
    if a.arities != b.arities:
        raise ArityMismatchError(
            f"cannot compose observables with arities {a.arities} and {b.arities}"
        )
    return DiagObservable(a.arities, a.eigenvalues * b.eigenvalues)


def add(a: DiagObservable, b: DiagObservable) -> DiagObservable:
    """Operator sum of two co-diagonal observables."""
    if a.arities != b.arities:
        raise ArityMismatchError(
            f"cannot add observables with arities {a.arities} and {b.arities}"
        )
    return DiagObservable(a.arities, a.eigenvalues + b.eigenvalues)


def affine(a: float, b: float, f: DiagObservable) -> DiagObservable:
    """The observable a*I + b*F; covers negation and convention changes."""
    return DiagObservable(f.arities, a + b * f.eigenvalues)


def apply_pointwise(poly, f: DiagObservable) -> DiagObservable:
    """Apply a polynomial to an observable, i.e. to each eigenvalue.

    ``poly`` is a sequence of coefficients in ascending powers, or any object
    with such a ``coefficients`` attribute.
    """
    coeffs = np.asarray(getattr(poly, "coefficients", poly), dtype=float)
    return DiagObservable(f.arities, npoly.polyval(f.eigenvalues, coeffs))


def materialize(f: DiagObservable) -> DenseMatrix:
    """Render the observable as an explicit diagonal matrix."""
    check_capacity(f.dim)
    return DenseMatrix(f.dim, np.diag(f.eigenvalues.astype(complex)))


def classify(f: DiagObservable, tol: float = DEFAULT_TOL) -> ObservableClass:
    """Classify by eigenvalue membership within ``tol``.

    Projector: all eigenvalues in {0, 1}.  Isometry: all in {+1, -1}
    (the observable squares to the identity).  The two overlap exactly
    when every eigenvalue is 1, i.e. for the identity.
    """
    if tol < 0:
        raise ValueError("tolerance must be non-negative")
    eig = f.eigenvalues
    near_zero = np.abs(eig) <= tol
    near_one = np.abs(eig - 1.0) <= tol
    near_minus_one = np.abs(eig + 1.0) <= tol
    return ObservableClass(
        is_projector=bool(np.all(near_zero | near_one)),
        is_isometry=bool(np.all(near_one | near_minus_one)),
        is_identity=bool(np.all(near_one)),
        is_zero=bool(np.all(near_zero)),
    )


def kron_all(factors: Sequence[DiagObservable]) -> DiagObservable:
    """Left-to-right Kronecker product of a sequence of observables."""
    result = DiagObservable((), np.ones(1))
    for f in factors:
        result = kron(result, f)
    return result
