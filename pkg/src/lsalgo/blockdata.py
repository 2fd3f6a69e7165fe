"""Block datasets: labels on an orbit poset with a pairing matrix omega.

One block couples a finite poset of orbits (stored as a Hasse diagram with
complex dimensions), a set of simple labels sitting on those orbits with a
duality involution, and a symmetric omega matrix over Z[t^(1/2), t^(-1/2)].
The type-A Springer block is generated from symmetric group data: labels are
partitions of n, the trivial character sits on the regular orbit, closure
order is dominance order, and omega is the coinvariant pairing evaluated at
q = t^(-1).

Blocks from other cuspidal data are supported as hand-authored JSON files
conforming to the same schema; no builder is shipped for them.  A dataset
file holds a JSON array of blocks; pairings between labels of different
blocks must vanish identically, and validation reports any nonzero
cross-block entry.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .laurent import ZERO, HalfLaurent
from .weyl import Partition, SizeMismatch, char_table_sn, coinvariant_pairing, partitions_of

__all__ = [
    "OrbitInfo",
    "SimpleLabel",
    "BlockData",
    "Violation",
    "DataFormatError",
    "Dataset",
    "CrossEntry",
    "MAX_SPRINGER_N",
    "orbit_dim_type_a",
    "dominates",
    "dominance_covers",
    "build_springer_block_a",
    "singleton_cuspidal_block",
    "validate_block",
    "validate_dataset",
    "closure_below",
    "block_to_json",
    "block_from_json",
    "dataset_to_json",
    "dataset_from_json",
    "load_dataset",
    "save_dataset",
]

# Springer blocks beyond this size are refused: the character-table and
# pairing computations stay exact but stop being desk-checkable.
MAX_SPRINGER_N = 8


class DataFormatError(ValueError):
    """A dataset file is structurally unusable (missing keys, ragged matrix)."""


@dataclass(frozen=True)
class OrbitInfo:
    """One orbit: complex dimension plus the orbits it immediately covers."""

    id: str
    dim: int
    covers: tuple[str, ...] = ()


@dataclass(frozen=True)
class SimpleLabel:
    """A simple object: the orbit it sits on, a local system name, its dual."""

    id: str
    orbit: str
    local_system: str = "triv"
    dual: str = ""

    def __post_init__(self):
        if not self.dual:
            object.__setattr__(self, "dual", self.id)


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.message}"


@dataclass(frozen=True)
class BlockData:
    """One block: orbit poset, labels, and the omega matrix over the labels.

    `omega[i][j]` pairs `labels[i]` with `labels[j]`.  Instances are
    immutable after construction; use `validate_block` for invariants.
    """

    name: str
    orbits: tuple[OrbitInfo, ...]
    labels: tuple[SimpleLabel, ...]
    omega: tuple[tuple[HalfLaurent, ...], ...]
    provenance: Mapping = field(default_factory=dict)

    def label_ids(self) -> tuple[str, ...]:
        return tuple(lb.id for lb in self.labels)

    def label_index(self, label_id: str) -> int:
        for i, lb in enumerate(self.labels):
            if lb.id == label_id:
                return i
        raise KeyError(f"unknown label id {label_id!r}")

    def orbit_of(self, label_id: str) -> OrbitInfo:
        lb = self.labels[self.label_index(label_id)]
        for orb in self.orbits:
            if orb.id == lb.orbit:
                return orb
        raise KeyError(f"label {label_id!r} references unknown orbit {lb.orbit!r}")

    def omega_entry(self, a: str, b: str) -> HalfLaurent:
        return self.omega[self.label_index(a)][self.label_index(b)]


def orbit_dim_type_a(lam: Partition, n: int) -> int:
    """Complex dimension of the type-A orbit with Jordan type lam:
    n^2 minus the sum of squared conjugate parts."""
    if lam.n != n:
        raise SizeMismatch(f"|{lam.parts}| != {n}")
    return n * n - sum(c * c for c in lam.conjugate())


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order: every prefix sum of lam is >= the one of mu."""
    if lam.n != mu.n:
        raise SizeMismatch(f"|{lam.parts}| != |{mu.parts}|")
    total_l = total_m = 0
    for i in range(max(len(lam), len(mu))):
        total_l += lam.parts[i] if i < len(lam) else 0
        total_m += mu.parts[i] if i < len(mu) else 0
        if total_l < total_m:
            return False
    return True


def dominance_covers(n: int) -> dict[Partition, tuple[Partition, ...]]:
    """Hasse diagram of dominance order: each partition mapped to the
    partitions it covers (immediately below)."""
    parts = partitions_of(n)
    below: dict[Partition, list[Partition]] = {}
    for lam in parts:
        strictly_below = [mu for mu in parts if mu != lam and dominates(lam, mu)]
        covers = [
            mu for mu in strictly_below
            if not any(nu != mu and dominates(nu, mu) for nu in strictly_below)
        ]
        below[lam] = covers
    return {lam: tuple(v) for lam, v in below.items()}


@lru_cache(maxsize=None)
def build_springer_block_a(n: int) -> BlockData:
    """The Springer block for GL_n: one label per partition of n.

    Labeling convention: the character of partition lam sits on the orbit of
    Jordan type lam, so the trivial character (n) lands on the regular orbit
    and the sign character (1^n) on the zero orbit.  All local systems are
    trivial and duality is the identity.  Orbits and labels are listed in
    ascending (dimension, key) order.
    """
    if not 1 <= n <= MAX_SPRINGER_N:
        raise ValueError(f"n must be between 1 and {MAX_SPRINGER_N}, got {n}")
    covers = dominance_covers(n)
    order = sorted(partitions_of(n), key=lambda p: (orbit_dim_type_a(p, n), p.key()))
    orbits = tuple(
        OrbitInfo(lam.key(), orbit_dim_type_a(lam, n),
                  tuple(sorted(mu.key() for mu in covers[lam])))
        for lam in order
    )
    labels = tuple(SimpleLabel(lam.key(), lam.key(), "triv", lam.key()) for lam in order)
    table = char_table_sn(n)
    pairings: dict[tuple[str, str], HalfLaurent] = {}
    for i, lam in enumerate(order):
        for mu in order[i:]:
            value = coinvariant_pairing(table, lam.key(), mu.key()).bar()
            pairings[lam.key(), mu.key()] = value
            pairings[mu.key(), lam.key()] = value
    omega = tuple(
        tuple(pairings[lam.key(), mu.key()] for mu in order) for lam in order
    )
    provenance = {
        "family": "springer-a",
        "n": n,
        "group": f"GL_{n}",
        "relative_weyl_group": f"S_{n}",
        "cuspidal_datum": "maximal torus, point orbit, trivial local system",
    }
    return BlockData(f"springer-a-{n}", orbits, labels, omega, provenance)


def singleton_cuspidal_block(name: str, dim: int, omega: HalfLaurent) -> BlockData:
    """A one-label block: a single self-dual local system on a single orbit."""
    orbit = OrbitInfo("orbit", dim, ())
    label = SimpleLabel("cuspidal", "orbit", "cuspidal", "cuspidal")
    return BlockData(name, (orbit,), (label,), ((omega,),),
                     {"family": "singleton-cuspidal", "dim": dim})


# -- poset utilities ---------------------------------------------------------


def closure_below(block: BlockData) -> dict[str, frozenset[str]]:
    """For each orbit id, the set of orbit ids strictly below it in the
    closure order generated by the cover relation."""
    covers = {orb.id: orb.covers for orb in block.orbits}
    memo: dict[str, frozenset[str]] = {}

    def descend(oid: str, trail: tuple[str, ...]) -> frozenset[str]:
        if oid in memo:
            return memo[oid]
        if oid in trail:
            raise DataFormatError(f"cover relation has a cycle through {oid!r}")
        below: set[str] = set()
        for child in covers.get(oid, ()):
            below.add(child)
            below |= descend(child, trail + (oid,))
        memo[oid] = frozenset(below)
        return memo[oid]

    for orb in block.orbits:
        descend(orb.id, ())
    return memo


def validate_block(block: BlockData) -> list[Violation]:
    """Check every block invariant; the list is empty iff the block is sound.

    Violations are data, not exceptions: callers decide how to react.
    """
    out: list[Violation] = []
    orbit_ids = [o.id for o in block.orbits]
    if len(set(orbit_ids)) != len(orbit_ids):
        out.append(Violation("DuplicateId", f"duplicate orbit ids in block {block.name!r}"))
    label_ids = [lb.id for lb in block.labels]
    if len(set(label_ids)) != len(label_ids):
        out.append(Violation("DuplicateId", f"duplicate label ids in block {block.name!r}"))
    orbit_by_id = {o.id: o for o in block.orbits}

    for orb in block.orbits:
        if orb.dim < 0:
            out.append(Violation("NegativeDimension",
                                 f"orbit {orb.id!r} has dim {orb.dim}"))
        for child in orb.covers:
            if child not in orbit_by_id:
                out.append(Violation("UnknownOrbit",
                                     f"orbit {orb.id!r} covers unknown {child!r}"))

    try:
        below = closure_below(block)
    except DataFormatError as exc:
        out.append(Violation("PosetCycle", str(exc)))
        below = None

    if below is not None:
        for orb in block.orbits:
            for child_id in below[orb.id]:
                child = orbit_by_id.get(child_id)
                if child is not None and child.dim >= orb.dim:
                    out.append(Violation(
                        "DimMonotonicityViolation",
                        f"orbit {child_id!r} (dim {child.dim}) lies below "
                        f"{orb.id!r} (dim {orb.dim})"))

    label_set = set(label_ids)
    for lb in block.labels:
        if lb.orbit not in orbit_by_id:
            out.append(Violation("UnknownOrbit",
                                 f"label {lb.id!r} references unknown orbit {lb.orbit!r}"))
        if lb.dual not in label_set:
            out.append(Violation("UnknownLabel",
                                 f"label {lb.id!r} has unknown dual {lb.dual!r}"))

    dual_of = {lb.id: lb.dual for lb in block.labels}
    orbit_of = {lb.id: lb.orbit for lb in block.labels}
    for lb in block.labels:
        partner = dual_of.get(lb.dual)
        if partner is not None and partner != lb.id:
            out.append(Violation("DualityViolation",
                                 f"duality is not an involution at {lb.id!r}"))
        if lb.dual in orbit_of and orbit_of[lb.dual] != lb.orbit:
            out.append(Violation("DualityViolation",
                                 f"dual of {lb.id!r} sits on a different orbit"))

    k = len(block.labels)
    if len(block.omega) != k or any(len(row) != k for row in block.omega):
        out.append(Violation("ShapeMismatch",
                             f"omega of block {block.name!r} is not {k}x{k}"))
        return out

    for i in range(k):
        for j in range(i + 1, k):
            if block.omega[i][j] != block.omega[j][i]:
                out.append(Violation(
                    "SymmetryViolation",
                    f"omega[{label_ids[i]}][{label_ids[j]}] != transpose"))

    index = {lb.id: i for i, lb in enumerate(block.labels)}
    if all(lb.dual in index for lb in block.labels):
        for i, a in enumerate(block.labels):
            for j, b in enumerate(block.labels):
                di, dj = index[a.dual], index[b.dual]
                if (di, dj) < (i, j):
                    continue  # the mirrored pair reports the same failure
                if block.omega[i][j] != block.omega[di][dj]:
                    out.append(Violation(
                        "DualityViolation",
                        f"omega[{a.id}][{b.id}] changes under dualization"))
    return out


# -- datasets ----------------------------------------------------------------


@dataclass(frozen=True)
class CrossEntry:
    """A pairing recorded between labels that live in different blocks."""

    block: str
    row: str
    col: str
    value: HalfLaurent


@dataclass(frozen=True)
class Dataset:
    """A decomposition into blocks, plus any cross-block pairings found in
    the file (which must all be zero for the dataset to be valid)."""

    blocks: tuple[BlockData, ...]
    cross_entries: tuple[CrossEntry, ...] = ()


def validate_dataset(ds: Dataset) -> list[Violation]:
    out: list[Violation] = []
    owner: dict[str, int] = {}
    for pos, block in enumerate(ds.blocks):
        for lb in block.labels:
            if lb.id in owner:
                out.append(Violation(
                    "DuplicateId",
                    f"label {lb.id!r} appears in blocks "
                    f"{ds.blocks[owner[lb.id]].name!r} and {block.name!r}"))
            else:
                owner[lb.id] = pos
        out.extend(validate_block(block))
    for entry in ds.cross_entries:
        unknown = [x for x in (entry.row, entry.col) if x not in owner]
        if unknown:
            for label_id in unknown:
                out.append(Violation(
                    "UnknownLabel",
                    f"omega of block {entry.block!r} mentions {label_id!r}, "
                    f"which no block defines"))
            continue
        if owner[entry.row] == owner[entry.col]:
            # a redundant copy of some single block's own pairing; it only
            # has to agree with the authoritative omega of that block
            home = ds.blocks[owner[entry.row]]
            if home.omega_entry(entry.row, entry.col) != entry.value:
                out.append(Violation(
                    "InconsistentDuplicate",
                    f"omega[{entry.row}][{entry.col}] recorded in "
                    f"{entry.block!r} disagrees with block {home.name!r}"))
        elif entry.value != ZERO:
            out.append(Violation(
                "CrossBlockNonzero",
                f"omega[{entry.row}][{entry.col}] = {entry.value} pairs labels "
                f"of different blocks and must vanish"))
    return out


# -- JSON schema --------------------------------------------------------------


def block_to_json(block: BlockData) -> dict:
    return {
        "name": block.name,
        "provenance": dict(block.provenance),
        "orbits": [
            {"id": o.id, "dim": o.dim, "covers": list(o.covers)} for o in block.orbits
        ],
        "labels": [
            {"id": lb.id, "orbit": lb.orbit, "local_system": lb.local_system,
             "dual": lb.dual}
            for lb in block.labels
        ],
        "omega": {
            "order": [lb.id for lb in block.labels],
            "entries": [[v.to_json() for v in row] for row in block.omega],
        },
    }


def block_from_json(obj: Mapping, known_foreign: Iterable[str] = ()) -> tuple[BlockData, list[CrossEntry]]:
    """Decode one block.  `omega.order` may be a superset of the block's own
    labels (a file may record the full decomposition matrix); entries that
    touch a foreign label are returned separately as cross entries."""
    try:
        name = str(obj["name"])
        orbits = tuple(
            OrbitInfo(str(o["id"]), int(o["dim"]),
                      tuple(str(c) for c in o.get("covers", ())))
            for o in obj["orbits"]
        )
        labels = tuple(
            SimpleLabel(str(lb["id"]), str(lb["orbit"]),
                        str(lb.get("local_system", "triv")),
                        str(lb.get("dual", lb["id"])))
            for lb in obj["labels"]
        )
        order = [str(x) for x in obj["omega"]["order"]]
        entries = obj["omega"]["entries"]
    except (KeyError, TypeError) as exc:
        raise DataFormatError(f"malformed block object: {exc}") from exc
    if len(entries) != len(order) or any(len(row) != len(order) for row in entries):
        raise DataFormatError(f"block {name!r}: omega entries are not square over order")
    if len(set(order)) != len(order):
        raise DataFormatError(f"block {name!r}: omega order repeats a label id")
    matrix = [[HalfLaurent.from_json(v) for v in row] for row in entries]

    own = {lb.id for lb in labels}
    position = {label_id: i for i, label_id in enumerate(order)}
    missing = own - set(order)
    if missing:
        raise DataFormatError(f"block {name!r}: omega order misses labels {sorted(missing)}")

    own_ids = [lb.id for lb in labels]
    omega = tuple(
        tuple(matrix[position[a]][position[b]] for b in own_ids) for a in own_ids
    )
    cross: list[CrossEntry] = []
    for a in order:
        for b in order:
            if a in own and b in own:
                continue
            value = matrix[position[a]][position[b]]
            cross.append(CrossEntry(name, a, b, value))
    block = BlockData(name, orbits, labels, omega, dict(obj.get("provenance", {})))
    return block, cross


def dataset_to_json(ds: Dataset) -> list:
    return [block_to_json(b) for b in ds.blocks]


def dataset_from_json(obj) -> Dataset:
    if isinstance(obj, Mapping):
        obj = [obj]
    if not isinstance(obj, Sequence) or isinstance(obj, (str, bytes)):
        raise DataFormatError("a dataset file must hold a JSON array of blocks")
    blocks: list[BlockData] = []
    cross: list[CrossEntry] = []
    for entry in obj:
        block, more = block_from_json(entry)
        blocks.append(block)
        cross.extend(more)
    return Dataset(tuple(blocks), tuple(cross))


def load_dataset(path) -> Dataset:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DataFormatError(f"not valid JSON: {exc}") from exc
    return dataset_from_json(raw)


def save_dataset(ds: Dataset, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(dataset_to_json(ds), fh, indent=2, sort_keys=True)
        fh.write("\n")
