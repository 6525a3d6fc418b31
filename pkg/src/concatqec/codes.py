"""Component CSS codes and the two concatenated layouts.

Qubit labels follow the binary-index convention: code qubit i (1-based)
lives on bit i-1 of a PauliString, and the X generators of both component
codes are the bit-j indicator sets v_j = {i : bit j of i is 1}.  Under this
labelling the syndrome of a single-qubit error, read as a binary integer
with the first generator as the most significant bit, equals the qubit
label, and {1,2,3}, {1,6,7}, ... are exactly the minimum-weight logical
supports of the 7-qubit code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .gf2 import in_span, parity, popcount, span
from .pauli import PauliString, SinglePauli


def _indicator(bit: int, n: int) -> int:
    """Bitmask of the qubits (1..n) whose label has the given bit set."""
    mask = 0
    for i in range(1, n + 1):
        if (i >> bit) & 1:
            mask |= 1 << (i - 1)
    return mask


@dataclass(frozen=True)
class SyndromeVector:
    """x_syndrome: one bit per X-type generator (these detect Z errors);
    z_syndrome: one bit per Z-type generator (these detect X errors)."""

    x_syndrome: tuple[int, ...]
    z_syndrome: tuple[int, ...]

    def is_trivial(self) -> bool:
        return not any(self.x_syndrome) and not any(self.z_syndrome)


@dataclass(frozen=True)
class CssCode:
    name: str
    n: int
    x_generators: tuple[PauliString, ...]
    z_generators: tuple[PauliString, ...]
    logical_x: PauliString
    logical_z: PauliString

    def __post_init__(self):
        for g in self.x_generators:
            if g.z_bits:
                raise ValueError("X generator carries Z bits")
        for g in self.z_generators:
            if g.x_bits:
                raise ValueError("Z generator carries X bits")
        gens = list(self.x_generators) + list(self.z_generators)
        for a, b in combinations(gens, 2):
            if not a.commutes(b):
                raise ValueError(f"{self.name}: generators do not commute")
        for log in (self.logical_x, self.logical_z):
            for g in gens:
                if not log.commutes(g):
                    raise ValueError(f"{self.name}: logical fails to commute")
        if self.logical_x.commutes(self.logical_z):
            raise ValueError(f"{self.name}: logicals must anticommute")

    # Bitmask views used throughout the simulation code.
    @property
    def xgen_masks(self) -> list[int]:
        return [g.x_bits for g in self.x_generators]

    @property
    def zgen_masks(self) -> list[int]:
        return [g.z_bits for g in self.z_generators]

    def x_stab_span(self) -> list[int]:
        """All X-stabilizer supports (as bitmasks)."""
        return span(self.xgen_masks)

    def z_stab_span(self) -> list[int]:
        return span(self.zgen_masks)


def steane_code() -> CssCode:
    """The self-dual [[7,1,3]] code with generators IIIXXXX, IXXIIXX, XIXIXIX."""
    n = 7
    masks = [_indicator(2, n), _indicator(1, n), _indicator(0, n)]
    xg = tuple(PauliString(n, m, 0) for m in masks)
    zg = tuple(PauliString(n, 0, m) for m in masks)
    full = (1 << n) - 1
    return CssCode("steane", n, xg, zg, PauliString(n, full, 0), PauliString(n, 0, full))


def reed_muller_code() -> CssCode:
    """The [[15,1,3]] punctured Reed-Muller code with transversal T.

    Four weight-8 X generators (bit indicators) and ten Z generators (the
    four indicators plus the six pairwise AND patterns of weight 4).  The
    logical Z has weight 3 on qubits {1,2,3}; the logical X has weight 7 on
    qubits {1..7}.
    """
    n = 15
    v = [_indicator(j, n) for j in (3, 2, 1, 0)]
    xg = tuple(PauliString(n, m, 0) for m in v)
    z_masks = [a & b for a, b in combinations(v, 2)] + v
    zg = tuple(PauliString(n, 0, m) for m in z_masks)
    logical_z = PauliString(n, 0, 0b111)       # qubits 1,2,3
    logical_x = PauliString(n, 0b1111111, 0)   # qubits 1..7
    return CssCode("rm15", n, xg, zg, logical_x, logical_z)


def syndrome(code: CssCode, error: PauliString) -> SyndromeVector:
    """One bit per generator: set iff the generator anticommutes with error."""
    if error.n != code.n:
        raise ValueError(f"dimension mismatch: {error.n} != {code.n}")
    xs = tuple(parity(g.x_bits & error.z_bits) for g in code.x_generators)
    zs = tuple(parity(g.z_bits & error.x_bits) for g in code.z_generators)
    return SyndromeVector(xs, zs)


def _min_weight_table(check_masks: list[int], n: int) -> list[int]:
    """syndrome (int, first check = MSB) -> minimum-weight error bitmask.

    Ties resolve to the lexicographically smallest support: candidates are
    enumerated by weight then by combination order, first hit wins.
    """
    n_syn = len(check_masks)
    table: list[int | None] = [None] * (1 << n_syn)
    remaining = len(table)
    for w in range(n + 1):
        if not remaining:
            break
        for support in combinations(range(n), w):
            mask = 0
            for q in support:
                mask |= 1 << q
            s = 0
            for c in check_masks:
                s = (s << 1) | parity(c & mask)
            if table[s] is None:
                table[s] = mask
                remaining -= 1
                if not remaining:
                    break
    assert remaining == 0
    return table  # type: ignore[return-value]


_DECODE_CACHE: dict[str, tuple[list[int], list[int]]] = {}


def decode_tables(code: CssCode) -> tuple[list[int], list[int]]:
    """(x_error_table over Z-gen syndromes, z_error_table over X-gen syndromes)."""
    if code.name not in _DECODE_CACHE:
        x_table = _min_weight_table(code.zgen_masks, code.n)
        z_table = _min_weight_table(code.xgen_masks, code.n)
        _DECODE_CACHE[code.name] = (x_table, z_table)
    return _DECODE_CACHE[code.name]


def lookup_decode(code: CssCode, syn: SyndromeVector) -> PauliString:
    """Minimum-weight Pauli consistent with the syndrome, sectors independent."""
    if len(syn.x_syndrome) != len(code.x_generators) or len(syn.z_syndrome) != len(
        code.z_generators
    ):
        raise ValueError("syndrome length mismatch")
    x_table, z_table = decode_tables(code)
    sz = 0
    for b in syn.z_syndrome:
        sz = (sz << 1) | b
    sx = 0
    for b in syn.x_syndrome:
        sx = (sx << 1) | b
    return PauliString(code.n, x_table[sz], z_table[sx])


@dataclass(frozen=True)
class LogicalClass:
    """Logical residual per gadget qubit, as SinglePauli entries."""

    paulis: tuple[SinglePauli, ...]

    def is_identity(self) -> bool:
        return all(p is SinglePauli.I for p in self.paulis)

    def __str__(self) -> str:
        return "".join(p.value for p in self.paulis)


def logical_class(code: CssCode, residual: PauliString) -> LogicalClass:
    """Classify a syndrome-free residual as I/X/Y/Z on the logical qubit."""
    if not syndrome(code, residual).is_trivial():
        raise ValueError("residual has nonzero syndrome; decode it first")
    x_part = parity(residual.x_bits & code.logical_z.z_bits)
    z_part = parity(residual.z_bits & code.logical_x.x_bits)
    return LogicalClass((SinglePauli.from_bits(x_part, z_part),))


@dataclass(frozen=True)
class ConcatenatedLayout:
    """Outer 7-qubit code over seven blocks, a subset of which carry the
    15-qubit inner encoding; the rest are bare physical qubits."""

    name: str
    outer: CssCode
    inner: CssCode
    encoded_blocks: frozenset[int]          # 1-based outer qubit labels
    qubit_map: dict[int, list[int]] = field(repr=False)
    n_total: int = 0

    def block_positions(self, block: int) -> list[int]:
        return self.qubit_map[block]

    def is_encoded(self, block: int) -> bool:
        return block in self.encoded_blocks

    def block_size(self, block: int) -> int:
        return len(self.qubit_map[block])

    def lift_z(self, block: int) -> int:
        """z-bitmask of the lifted Z operator of one outer qubit."""
        pos = self.qubit_map[block]
        if self.is_encoded(block):
            src = self.inner.logical_z.z_bits
            return sum(((src >> q) & 1) << pos[q] for q in range(self.inner.n))
        return 1 << pos[0]

    def lift_x(self, block: int) -> int:
        pos = self.qubit_map[block]
        if self.is_encoded(block):
            src = self.inner.logical_x.x_bits
            return sum(((src >> q) & 1) << pos[q] for q in range(self.inner.n))
        return 1 << pos[0]

    def logical_z_mask(self) -> int:
        """z-bitmask of a minimum-support concatenated logical Z (blocks 1,2,3)."""
        return self.lift_z(1) | self.lift_z(2) | self.lift_z(3)

    def logical_x_mask(self) -> int:
        """x-bitmask of a concatenated logical X on blocks 1,6,7."""
        return self.lift_x(1) | self.lift_x(6) | self.lift_x(7)

    def x_stab_masks(self) -> list[int]:
        """X-type stabilizer generators of the concatenated code (bitmasks)."""
        out = []
        for b in sorted(self.encoded_blocks):
            pos = self.qubit_map[b]
            for g in self.inner.x_generators:
                out.append(sum(((g.x_bits >> q) & 1) << pos[q] for q in range(self.inner.n)))
        for g in self.outer.x_generators:
            mask = 0
            for b in range(1, 8):
                if (g.x_bits >> (b - 1)) & 1:
                    mask |= self.lift_x(b)
            out.append(mask)
        return out

    def z_stab_masks(self) -> list[int]:
        out = []
        for b in sorted(self.encoded_blocks):
            pos = self.qubit_map[b]
            for g in self.inner.z_generators:
                out.append(sum(((g.z_bits >> q) & 1) << pos[q] for q in range(self.inner.n)))
        for g in self.outer.z_generators:
            mask = 0
            for b in range(1, 8):
                if (g.z_bits >> (b - 1)) & 1:
                    mask |= self.lift_z(b)
            out.append(mask)
        return out


def layout_105() -> ConcatenatedLayout:
    inner = reed_muller_code()
    outer = steane_code()
    qubit_map = {b: list(range(15 * (b - 1), 15 * b)) for b in range(1, 8)}
    return ConcatenatedLayout("105", outer, inner, frozenset(range(1, 8)), qubit_map, 105)


def layout_49() -> ConcatenatedLayout:
    """Blocks 1, 6 and 7 (a logical support of the outer code) are encoded."""
    inner = reed_muller_code()
    outer = steane_code()
    qubit_map = {
        1: list(range(0, 15)),
        2: [15],
        3: [16],
        4: [17],
        5: [18],
        6: list(range(19, 34)),
        7: list(range(34, 49)),
    }
    return ConcatenatedLayout("49", outer, inner, frozenset({1, 6, 7}), qubit_map, 49)


def get_layout(name: str | int) -> ConcatenatedLayout:
    if str(name) == "49":
        return layout_49()
    if str(name) == "105":
        return layout_105()
    raise ValueError(f"unknown layout {name!r}")


def generator_text(code: CssCode) -> str:
    """Plain-text dump of the generator matrices for auditing."""
    lines = [f"# {code.name}: n={code.n}"]
    lines += [str(g) for g in code.x_generators]
    lines += [str(g) for g in code.z_generators]
    lines.append(str(code.logical_x))
    lines.append(str(code.logical_z))
    return "\n".join(lines) + "\n"
