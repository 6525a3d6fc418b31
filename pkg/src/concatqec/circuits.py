"""Circuit construction with exact location accounting.

Circuits are flat lists of located operations (Table-style level-0 kinds:
rests, preparations, measurements, CNOT, H, T).  Location censuses must
reproduce the reference counts exactly, so the rest-filling conventions are
frozen here:

* ``encoder`` components: a qubit is prepared one step before its first
  gate and rests in every idle step from then until the component's final
  step (trailing rests included).
* ``gadget`` components: every qubit of the register is live for the whole
  component (data semantics), resting whenever idle.
* ``plain`` components (verification and EC sections): rests only between a
  qubit's first and last operation inside the component.

Composite circuits concatenate component accounting; alignment gaps between
components are not counted as rests.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from .codes import CssCode, ConcatenatedLayout, reed_muller_code, steane_code
from .gf2 import in_span, popcount, rank


class LocationType(Enum):
    REST_GATE = 1
    REST_MEAS = 2
    PREP_ZERO = 3
    PREP_PLUS = 4
    MEAS_X = 5
    MEAS_Z = 6
    CNOT = 7
    HADAMARD = 8
    T_GATE = 9


_KIND_NAMES = {
    LocationType.REST_GATE: "rest",
    LocationType.REST_MEAS: "restm",
    LocationType.PREP_ZERO: "prep0",
    LocationType.PREP_PLUS: "prep+",
    LocationType.MEAS_X: "measx",
    LocationType.MEAS_Z: "measz",
    LocationType.CNOT: "cnot",
    LocationType.HADAMARD: "h",
    LocationType.T_GATE: "t",
}
_NAME_KINDS = {v: k for k, v in _KIND_NAMES.items()}

REST_KINDS = (LocationType.REST_GATE, LocationType.REST_MEAS)
MEAS_KINDS = (LocationType.MEAS_X, LocationType.MEAS_Z)


@dataclass(frozen=True)
class Location:
    step: int
    kind: LocationType
    qubits: tuple[int, ...]

    def __post_init__(self):
        want = 2 if self.kind is LocationType.CNOT else 1
        if len(self.qubits) != want:
            raise ValueError(f"{self.kind} takes {want} qubit(s)")
        if want == 2 and self.qubits[0] == self.qubits[1]:
            raise ValueError("CNOT qubits must differ")


@dataclass(frozen=True)
class LocationCensus:
    counts: dict[LocationType, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, kind: LocationType) -> int:
        return self.counts.get(kind, 0)

    @property
    def cnot(self) -> int:
        return self[LocationType.CNOT]

    @property
    def rest(self) -> int:
        return self[LocationType.REST_GATE] + self[LocationType.REST_MEAS]

    def as_dict(self) -> dict[str, int]:
        out = {_KIND_NAMES[k]: self.counts.get(k, 0) for k in LocationType}
        out["total"] = self.total
        return out

    def __add__(self, other: "LocationCensus") -> "LocationCensus":
        merged = dict(self.counts)
        for k, v in other.counts.items():
            merged[k] = merged.get(k, 0) + v
        return LocationCensus(merged)


@dataclass
class Circuit:
    """A scheduled circuit: locations carry absolute step indices (>= 0)."""

    n: int
    n_steps: int
    locations: list[Location] = field(default_factory=list)
    roles: dict[int, str] = field(default_factory=dict)

    def census(self) -> LocationCensus:
        counts: dict[LocationType, int] = {}
        for loc in self.locations:
            counts[loc.kind] = counts.get(loc.kind, 0) + 1
        return LocationCensus(counts)

    def sorted_locations(self) -> list[Location]:
        return sorted(self.locations, key=lambda l: (l.step, l.qubits))

    def validate_schedule(self) -> None:
        busy: set[tuple[int, int]] = set()
        for loc in self.locations:
            for q in loc.qubits:
                key = (loc.step, q)
                if key in busy:
                    raise ValueError(f"qubit {q} used twice in step {loc.step}")
                busy.add(key)

    def serialize(self) -> str:
        lines = [f"# qubits={self.n} steps={self.n_steps}"]
        for loc in self.sorted_locations():
            qs = ",".join(str(q) for q in loc.qubits)
            role = self.roles.get(loc.qubits[0], "data")
            lines.append(f"{loc.step} {_KIND_NAMES[loc.kind]} {qs} {role}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def deserialize(text: str) -> "Circuit":
        lines = [l for l in text.splitlines() if l.strip()]
        head = lines[0].replace("#", "").split()
        n = int(head[0].split("=")[1])
        n_steps = int(head[1].split("=")[1])
        circ = Circuit(n, n_steps)
        for line in lines[1:]:
            step_s, kind_s, qs, role = line.split()
            qubits = tuple(int(q) for q in qs.split(","))
            circ.locations.append(Location(int(step_s), _NAME_KINDS[kind_s], qubits))
            circ.roles.setdefault(qubits[0], role)
        return circ


def census(circuit: Circuit) -> LocationCensus:
    return circuit.census()


# ---------------------------------------------------------------------------
# Construction helpers


class Builder:
    """Accumulates gates/preps/measurements, then fills rests per policy."""

    def __init__(self, n: int, role: str = "ancilla"):
        self.n = n
        self.role = role
        self.ops: list[Location] = []

    def cnot(self, step: int, control: int, target: int) -> None:
        self.ops.append(Location(step, LocationType.CNOT, (control, target)))

    def gate(self, step: int, kind: LocationType, qubit: int) -> None:
        self.ops.append(Location(step, kind, (qubit,)))

    def finalize(self, policy: str, n_steps: int | None = None) -> Circuit:
        """policy: 'encoder' | 'gadget' | 'plain' (see module docstring)."""
        if n_steps is None:
            n_steps = 1 + max((op.step for op in self.ops), default=-1)
        meas_steps = {op.step for op in self.ops if op.kind in MEAS_KINDS}
        busy: dict[int, set[int]] = {q: set() for q in range(self.n)}
        first: dict[int, int] = {}
        last: dict[int, int] = {}
        for op in self.ops:
            for q in op.qubits:
                busy[q].add(op.step)
                first[q] = min(first.get(q, op.step), op.step)
                last[q] = max(last.get(q, op.step), op.step)
        locs = list(self.ops)
        for q in range(self.n):
            if policy == "gadget":
                lo, hi = 0, n_steps - 1
            elif q not in first:
                continue
            elif policy == "encoder":
                lo, hi = first[q], n_steps - 1
            else:  # plain
                lo, hi = first[q], last[q]
            for step in range(lo, hi + 1):
                if step not in busy[q]:
                    kind = LocationType.REST_MEAS if step in meas_steps else LocationType.REST_GATE
                    locs.append(Location(step, kind, (q,)))
        circ = Circuit(self.n, n_steps, locs, {q: self.role for q in range(self.n)})
        circ.validate_schedule()
        return circ


def compose(parts: list[tuple[Circuit, list[int], int]], n: int, n_steps: int) -> Circuit:
    """Merge component circuits into one register.

    parts: (circuit, qubit_map old->new as a list, step_offset).  No rests
    are added at component boundaries (per the accounting convention).
    """
    out = Circuit(n, n_steps)
    for circ, qmap, offset in parts:
        for loc in circ.locations:
            out.locations.append(
                Location(loc.step + offset, loc.kind, tuple(qmap[q] for q in loc.qubits))
            )
        for q, role in circ.roles.items():
            out.roles[qmap[q]] = role
    out.validate_schedule()
    return out


# ---------------------------------------------------------------------------
# Stabilizer-flow validation for CNOT-only preparation circuits


def _cnot_images(gates: list[tuple[int, int]], seeds: dict[int, int]) -> dict[int, int]:
    """Push X-type seed masks forward through a CNOT list (control spreads)."""
    images = dict(seeds)
    for c, t in gates:
        for k in images:
            if (images[k] >> c) & 1:
                images[k] ^= 1 << t
    return images


def _prep_gates_valid(
    code: CssCode, basis: str, plus_qubits: list[int], gates: list[tuple[int, int]]
) -> bool:
    """Check that a CNOT circuit from |+> on plus_qubits, |0> elsewhere
    prepares the encoded |0>/|+> state of the code.

    It suffices that the pushed-forward X operators of the |+> qubits are
    independent and span the target X group (the Z side then matches by a
    dimension count).
    """
    if basis == "zero":
        group = code.xgen_masks
    else:
        group = code.xgen_masks + [code.logical_x.x_bits]
    if len(plus_qubits) != rank(group):
        return False
    images = _cnot_images(gates, {q: 1 << q for q in plus_qubits})
    vals = list(images.values())
    if rank(vals) != len(vals):
        return False
    return all(in_span(v, group) for v in vals)


# ---------------------------------------------------------------------------
# Schedulers


def _rests_for_schedule(
    n: int, gates: list[tuple[int, int]], steps: list[int], n_steps: int
) -> int:
    """Encoder-policy rest count for a gate schedule (alive first-use..end)."""
    first: dict[int, int] = {}
    busy_count: dict[int, int] = {}
    for (c, t), s in zip(gates, steps):
        for q in (c, t):
            first[q] = min(first.get(q, s), s)
            busy_count[q] = busy_count.get(q, 0) + 1
    return sum(n_steps - first[q] - busy_count[q] for q in first)


def _schedule_search(
    gates: list[tuple[int, int]],
    order_pairs: list[tuple[int, int]],
    rest_target: int,
    depth: int,
    seed: int,
    tries: int = 40000,
) -> list[int] | None:
    """Assign gates to steps 0..depth-1: disjoint qubits per step, gate i
    before gate j for every (i, j) in order_pairs, encoder rest count equal
    to rest_target.  Randomized-greedy with restarts; None if not found."""
    rng = random.Random(seed)
    n_gates = len(gates)
    after = {i: [j for (a, j) in order_pairs if a == i] for i in range(n_gates)}
    n_pred = [0] * n_gates
    for _, j in order_pairs:
        n_pred[j] += 1
    for _ in range(tries):
        pred = list(n_pred)
        placed = [-1] * n_gates
        ready = [i for i in range(n_gates) if pred[i] == 0]
        ok = True
        for step in range(depth):
            rng.shuffle(ready)
            used: set[int] = set()
            chosen: list[int] = []
            remaining = n_gates - sum(1 for p in placed if p >= 0)
            slack = depth - step
            for i in list(ready):
                c, t = gates[i]
                if c in used or t in used:
                    continue
                #必 place aggressively when running out of room
                must = remaining >= slack * max(1, len(chosen) + 1)
                if must or rng.random() < 0.62:
                    chosen.append(i)
                    used.add(c)
                    used.add(t)
            for i in chosen:
                placed[i] = step
                ready.remove(i)
                for j in after[i]:
                    pred[j] -= 1
                    if pred[j] == 0:
                        ready.append(j)
        if all(p >= 0 for p in placed):
            if _rests_for_schedule(0, gates, placed, depth) == rest_target:
                return placed
    return None
