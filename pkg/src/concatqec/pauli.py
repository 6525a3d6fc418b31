"""Phase-free symplectic Pauli strings.

A Pauli on n qubits is stored as two n-bit integers (x_bits, z_bits); qubit
q carries X iff bit q of x_bits is set, Z iff bit q of z_bits, Y iff both.
Global phase is deliberately untracked: syndrome bits and logical-error
classification depend only on the symplectic part.

Text form puts qubit 0 leftmost, e.g. ``XIZ`` is X on qubit 0, Z on qubit 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .gf2 import parity, popcount


class SinglePauli(Enum):
    I = "I"
    X = "X"
    Y = "Y"
    Z = "Z"

    @property
    def x_bit(self) -> int:
        return 1 if self in (SinglePauli.X, SinglePauli.Y) else 0

    @property
    def z_bit(self) -> int:
        return 1 if self in (SinglePauli.Z, SinglePauli.Y) else 0

    @staticmethod
    def from_bits(x: int, z: int) -> "SinglePauli":
        return _BITS_TO_PAULI[(x & 1, z & 1)]


_BITS_TO_PAULI = {
    (0, 0): SinglePauli.I,
    (1, 0): SinglePauli.X,
    (0, 1): SinglePauli.Z,
    (1, 1): SinglePauli.Y,
}


@dataclass(frozen=True)
class PauliString:
    """Immutable n-qubit Pauli, safe to share across workers."""

    n: int
    x_bits: int = 0
    z_bits: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative qubit count")
        mask = (1 << self.n) - 1
        if self.x_bits & ~mask or self.z_bits & ~mask:
            raise ValueError("bits outside qubit range")

    @staticmethod
    def from_str(text: str) -> "PauliString":
        x = z = 0
        for q, c in enumerate(text):
            p = SinglePauli(c)
            x |= p.x_bit << q
            z |= p.z_bit << q
        return PauliString(len(text), x, z)

    @staticmethod
    def identity(n: int) -> "PauliString":
        return PauliString(n, 0, 0)

    @staticmethod
    def single(n: int, qubit: int, kind: SinglePauli) -> "PauliString":
        if not 0 <= qubit < n:
            raise ValueError(f"qubit {qubit} out of range for n={n}")
        return PauliString(n, kind.x_bit << qubit, kind.z_bit << qubit)

    def __getitem__(self, qubit: int) -> SinglePauli:
        return SinglePauli.from_bits(self.x_bits >> qubit, self.z_bits >> qubit)

    def __str__(self) -> str:
        return "".join(self[q].value for q in range(self.n))

    def __mul__(self, other: "PauliString") -> "PauliString":
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} != {other.n}")
        return PauliString(self.n, self.x_bits ^ other.x_bits, self.z_bits ^ other.z_bits)

    def commutes(self, other: "PauliString") -> bool:
        if self.n != other.n:
            raise ValueError(f"length mismatch: {self.n} != {other.n}")
        return parity(self.x_bits & other.z_bits) == parity(self.z_bits & other.x_bits)

    def weight(self) -> int:
        return popcount(self.x_bits | self.z_bits)

    def is_identity(self) -> bool:
        return self.x_bits == 0 and self.z_bits == 0

    def embed(self, positions: list[int], n_total: int) -> "PauliString":
        """Place this Pauli on the listed qubits of a larger register.

        positions must be strictly increasing with max < n_total and one
        entry per qubit of self.
        """
        if len(positions) != self.n:
            raise ValueError("positions must match qubit count")
        if any(b >= a for a, b in zip(positions[1:], positions)):
            raise ValueError("positions must be strictly increasing")
        if positions and (positions[0] < 0 or positions[-1] >= n_total):
            raise ValueError("position out of range")
        x = z = 0
        for q, pos in enumerate(positions):
            x |= ((self.x_bits >> q) & 1) << pos
            z |= ((self.z_bits >> q) & 1) << pos
        return PauliString(n_total, x, z)

    def restrict(self, positions: list[int]) -> "PauliString":
        """Inverse of embed: read the Pauli off the listed qubits."""
        x = z = 0
        for q, pos in enumerate(positions):
            x |= ((self.x_bits >> pos) & 1) << q
            z |= ((self.z_bits >> pos) & 1) << q
        return PauliString(len(positions), x, z)


def multiply(a: PauliString, b: PauliString) -> PauliString:
    return a * b


def commutes(a: PauliString, b: PauliString) -> bool:
    return a.commutes(b)


def weight(a: PauliString) -> int:
    return a.weight()


def embed(a: PauliString, positions: list[int], n_total: int) -> PauliString:
    return a.embed(positions, n_total)
