"""State vectors and Born-rule mean values of logical observables.

The mean of a projective observable over a normalized state is a fuzzy
membership degree in [0, 1].  Means are computed as the |amplitude|^2
weighted sum of eigenvalues, never via dense matrix products.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import DiagObservable, check_capacity, classify
from .errors import (
    ClassificationError,
    ConventionError,
    DimensionMismatchError,
    NormalizationError,
    UnknownConnectiveError,
)
from .synthesis import binary_catalog

_NORM_FLOOR = 1e-6
_NORM_CEILING = 1e6


@dataclass(frozen=True, eq=False)
class StateVector:
    """Complex amplitudes over the canonical eigenbasis, unit-normalized.

    The constructor rescales inputs whose norm lies in [1e-6, 1e6] and
    rejects anything outside that band; a silently rescaled huge or tiny
    vector almost always means a caller bug.  Entangled states are
    first-class: any amplitude vector of matching length is a valid state.
    """

    arities: tuple[int, ...]
    amplitudes: np.ndarray

    def __post_init__(self):
        arities = tuple(int(m) for m in self.arities)
        for m in arities:
            if m < 2:
                raise ValueError(f"every per-argument arity must be >= 2, got {m}")
        amps = np.array(np.ravel(self.amplitudes), dtype=complex)
        expected = 1
        for m in arities:
            expected *= m
        if amps.size != expected:
            raise ValueError(
                f"amplitude vector has length {amps.size}, expected {expected} "
                f"for arities {arities}"
            )
        norm = float(np.linalg.norm(amps))
        if not (_NORM_FLOOR <= norm <= _NORM_CEILING):
            raise NormalizationError(
                f"cannot normalize a state of norm {norm:.3e} "
                f"(accepted range [{_NORM_FLOOR}, {_NORM_CEILING}])"
            )
        amps = amps / norm
        amps.flags.writeable = False
        object.__setattr__(self, "arities", arities)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def to_json(self) -> dict:
        return {
            "arities": list(self.arities),
            "re": [float(v) for v in self.amplitudes.real],
            "im": [float(v) for v in self.amplitudes.imag],
        }

    @classmethod
    def from_json(cls, data: dict) -> "StateVector":
        amps = np.asarray(data["re"], dtype=float) + 1j * np.asarray(data["im"], dtype=float)
        return cls(tuple(data["arities"]), amps)


@dataclass(frozen=True)
class QubitAngles:
    """Polar and azimuthal angles of a qubit state, theta in [0, pi]."""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {self.theta}")


def qubit_state(angles: QubitAngles) -> StateVector:
    """cos(theta/2) |0> + e^(i phi) sin(theta/2) |1>; P(|1>) = sin^2(theta/2)."""
    half = angles.theta / 2.0
    amps = np.array([math.cos(half), cmath.exp(1j * angles.phi) * math.sin(half)])
    return StateVector((2,), amps)


def qubit_from_probability(p: float, phase: float = 0.0) -> StateVector:
    """Qubit whose probability of the true state |1> is ``p``."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    theta = 2.0 * math.asin(math.sqrt(p))
    return qubit_state(QubitAngles(theta, phase))


def basis_state(arities: Iterable[int], index: int) -> StateVector:
    """Canonical basis state |index> over the given argument structure."""
    arities = tuple(int(m) for m in arities)
    dim = 1
    for m in arities:
        dim *= m
    if not 0 <= index < dim:
        raise ValueError(f"index {index} out of range for dimension {dim}")
    amps = np.zeros(dim, dtype=complex)
    amps[index] = 1.0
    return StateVector(arities, amps)


def product_state(parts: Sequence[StateVector]) -> StateVector:
    """Kronecker product of component states; arities concatenate."""
    if not parts:
        raise ValueError("product_state needs at least one component")
    if len(parts) == 1:
        return parts[0]
    dim = 1
    for part in parts:
        dim *= part.dim
    check_capacity(dim)
    amps = parts[0].amplitudes
    arities = parts[0].arities
    for part in parts[1:]:
        amps = np.kron(amps, part.amplitudes)
        arities = arities + part.arities
    return StateVector(arities, amps)


def born_mean(state: StateVector, f: DiagObservable) -> float:
    """Mean value of the observable in the given state.

    Weighted sum of eigenvalues by |amplitude|^2; equals the trace of the
    pure-state density operator times the observable.  For a basis state
    this returns the eigenvalue at its index exactly.
    """
    if state.dim != f.dim:
        raise DimensionMismatchError(
            f"state dimension {state.dim} does not match observable dimension {f.dim}"
        )
    return float(np.sum(state.probabilities() * f.eigenvalues))


def membership(state: StateVector, connective_name: str, convention: str = "projective") -> float:
    """Fuzzy membership degree of a named binary connective.

    Defined for the projective convention only, where the connective is a
    projector and the mean is a probability in [0, 1].
    """
    if convention != "projective":
        raise ConventionError(
            "membership degrees are defined for the projective convention only"
        )
    catalog = binary_catalog("projective")
    if connective_name not in catalog:
        known = ", ".join(sorted(catalog))
        raise UnknownConnectiveError(
            f"unknown connective {connective_name!r}; expected one of: {known}"
        )
    return born_mean(state, catalog[connective_name])


def bound_check(state: StateVector, f: DiagObservable) -> bool:
    """True iff the mean of a projective observable lies in [0, 1].

    Holds for every normalized state, entangled ones included; the mean of
    a projector is a probability.  Tolerance is 1e-12 at both ends.
    """
    if not classify(f).is_projector:
        raise ClassificationError("bound_check requires a projective observable")
    mu = born_mean(state, f)
    return -1e-12 <= mu <= 1.0 + 1e-12
