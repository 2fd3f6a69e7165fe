"""Character data for symmetric groups and pluggable finite-group tables.

The symmetric group S_n acting on its rank-n permutation representation is
generated here from scratch: conjugacy classes by cycle type, irreducible
character values by the Murnaghan-Nakayama rule, and per-class Molien
determinants det(1 - q*w).  Tables for other finite (relative) Weyl groups
carry exactly the same data and can be supplied as JSON files, so everything
downstream works at the level of characters with no group theory attached.

The coinvariant pairing of two characters chi, psi is the graded multiplicity

    P(q) * (1/|W|) * sum_c |c| * chi(c) * psi(c) / det(1 - q*w_c)

where P(q) is the product of (1 - q^d) over the fundamental invariant
degrees; for S_n these are 1..n.  P(q) is itself recovered from the table as
the reciprocal of the invariant Molien series, so no degree list is stored.
The sum is formed in exact rational arithmetic and the final division is an
exact polynomial division: a failure proves the table invalid.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Mapping

from .laurent import ONE, HalfLaurent, RationalHL, t_power

__all__ = [
    "SizeMismatch",
    "Partition",
    "partitions_of",
    "conjugacy_classes",
    "mn_character",
    "perm_molien_det",
    "ClassData",
    "IrrData",
    "CharTable",
    "char_table_sn",
    "class_pair_series",
    "degrees_product",
    "coinvariant_pairing",
]


class SizeMismatch(ValueError):
    """Two partitions that must partition the same integer do not."""


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(p < 1 for p in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError(f"parts must weakly decrease: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def conjugate(self) -> Partition:
        parts = self.parts
        return Partition(tuple(sum(1 for p in parts if p > i)
                               for i in range(parts[0]))) if parts else Partition(())

    def n_statistic(self) -> int:
        """sum (i-1) * lambda_i, the minimal charge-complement statistic."""
        return sum(i * p for i, p in enumerate(self.parts))

    def key(self) -> str:
        """Stable string id, parts joined by dots: (2,1,1) -> "2.1.1"."""
        return ".".join(str(p) for p in self.parts) if self.parts else "0"

    @classmethod
    def from_key(cls, key: str) -> Partition:
        if key == "0":
            return cls(())
        return cls(tuple(int(p) for p in key.split(".")))

    def __repr__(self) -> str:
        return f"Partition({self.parts})"


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining: int, largest: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first, *rest)

    return tuple(Partition(p) for p in gen(n, n))


def _centralizer_order(rho: Partition) -> int:
    # z_rho = prod over part values i of i^m_i * m_i!
    mult: dict[int, int] = {}
    for p in rho:
        mult[p] = mult.get(p, 0) + 1
    z = 1
    for i, m in mult.items():
        z *= i**m * factorial(m)
    return z


def conjugacy_classes(n: int) -> list[tuple[Partition, int]]:
    """Cycle types and class sizes of S_n; sizes are n!/z_rho."""
    if n < 1:
        raise ValueError("n must be at least 1")
    nf = factorial(n)
    return [(rho, nf // _centralizer_order(rho)) for rho in partitions_of(n)]


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    k, rest = rho[0], rho[1:]
    # beta-set of lam: strictly decreasing first-column hook lengths
    m = len(lam)
    beta = [lam[i] + (m - 1 - i) for i in range(m)]
    beta_set = set(beta)
    total = 0
    for b in beta:
        low = b - k
        if low < 0 or low in beta_set:
            continue
        # removing the strip: replace b by b-k; leg length counts entries
        # of the beta-set strictly between them
        leg = sum(1 for x in beta if low < x < b)
        new_beta = sorted((x if x != b else low for x in beta), reverse=True)
        new_lam = tuple(x - (m - 1 - i) for i, x in enumerate(new_beta))
        new_lam = tuple(p for p in new_lam if p > 0)
        total += (-1) ** leg * _mn(new_lam, rest)
    return total


def mn_character(lam: Partition, rho: Partition) -> int:
    """Murnaghan-Nakayama evaluation of the character chi_lam on cycle type rho.

    Recursively strips border strips of length rho_1 from lam, with sign
    (-1)^(leg length).  The single-row partition gives the trivial character;
    the single-column partition gives the sign character.
    """
    if lam.n != rho.n:
        raise SizeMismatch(f"|{lam.parts}| != |{rho.parts}|")
    return _mn(lam.parts, rho.parts)


def perm_molien_det(rho: Partition) -> HalfLaurent:
    """det(1 - q*w) for a permutation w of cycle type rho acting on its
    natural rank-n space: the product of (1 - q^length) over cycles."""
    out = ONE
    for length in rho:
        out = out * (ONE - t_power(length))
    return out


@dataclass(frozen=True)
class ClassData:
    id: str
    size: int
    molien_det: HalfLaurent


@dataclass(frozen=True)
class IrrData:
    id: str
    values: tuple[int, ...]


@dataclass(frozen=True)
class CharTable:
    """Conjugacy-class and irreducible-character data for one finite group.

    `classes[i].molien_det` is det(1 - q*w) for a class representative w in
    the chosen graded representation; `irreducibles[j].values[i]` is the
    j-th character on the i-th class.
    """

    group_order: int
    classes: tuple[ClassData, ...]
    irreducibles: tuple[IrrData, ...]

    def char_ids(self) -> tuple[str, ...]:
        return tuple(irr.id for irr in self.irreducibles)

    def character(self, char_id: str) -> IrrData:
        for irr in self.irreducibles:
            if irr.id == char_id:
                return irr
        raise KeyError(f"unknown character id {char_id!r}")

    def rank(self) -> int:
        """Degree of the Molien determinants, i.e. the dimension of the
        graded representation (all classes must agree)."""
        degrees = {c.molien_det.degree() // 2 for c in self.classes}
        if len(degrees) != 1:
            raise ValueError("Molien determinants of inconsistent degree")
        return degrees.pop()

    def validate(self) -> list[str]:
        """Human-readable invariant failures; empty when the table is sound."""
        problems: list[str] = []
        if sum(c.size for c in self.classes) != self.group_order:
            problems.append("class sizes do not sum to the group order")
        for c in self.classes:
            if c.molien_det.coefficient(0) != 1:
                problems.append(f"Molien determinant of class {c.id} has constant term != 1")
        try:
            self.rank()
        except ValueError:
            problems.append("Molien determinants have inconsistent degrees")
        k = len(self.classes)
        for i, chi in enumerate(self.irreducibles):
            if len(chi.values) != k:
                problems.append(f"character {chi.id} has {len(chi.values)} values for {k} classes")
                continue
            for psi in self.irreducibles[i:]:
                dot = sum(c.size * x * y
                          for c, x, y in zip(self.classes, chi.values, psi.values))
                expected = self.group_order if chi.id == psi.id else 0
                if dot != expected:
                    problems.append(f"orthogonality fails for ({chi.id}, {psi.id})")
        return problems

    def to_json(self) -> dict:
        return {
            "group_order": self.group_order,
            "classes": [
                {"id": c.id, "size": c.size, "molien_det": c.molien_det.to_json()}
                for c in self.classes
            ],
            "irreducibles": [
                {"id": irr.id, "values": list(irr.values)} for irr in self.irreducibles
            ],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> CharTable:
        return cls(
            group_order=int(obj["group_order"]),
            classes=tuple(
                ClassData(str(c["id"]), int(c["size"]),
                          HalfLaurent.from_json(c["molien_det"]))
                for c in obj["classes"]
            ),
            irreducibles=tuple(
                IrrData(str(i["id"]), tuple(int(v) for v in i["values"]))
                for i in obj["irreducibles"]
            ),
        )


@lru_cache(maxsize=None)
def char_table_sn(n: int) -> CharTable:
    """The full character table of S_n with rank-n permutation Molien data.

    Classes and characters are both indexed by partitions of n in descending
    lexicographic order; ids are partition keys such as "2.1.1".
    """
    classes = tuple(
        ClassData(rho.key(), size, perm_molien_det(rho))
        for rho, size in conjugacy_classes(n)
    )
    rhos = partitions_of(n)
    irreducibles = tuple(
        IrrData(lam.key(), tuple(mn_character(lam, rho) for rho in rhos))
        for lam in partitions_of(n)
    )
    return CharTable(factorial(n), classes, irreducibles)


def class_pair_series(table: CharTable, chi: str, psi: str) -> RationalHL:
    """(1/|W|) * sum over classes of size * chi * psi / det(1 - q*w).

    This is the graded multiplicity series of the pair in the full symmetric
    algebra; exact arithmetic makes the summation order irrelevant.
    """
    xv = table.character(chi).values
    yv = table.character(psi).values
    total = RationalHL(0)
    for c, x, y in zip(table.classes, xv, yv):
        total = total + RationalHL(c.size * x * y * ONE, c.molien_det)
    return total / table.group_order


@lru_cache(maxsize=None)
def _degrees_product_cached(table: CharTable) -> HalfLaurent:
    inv = RationalHL(0)
    for c in table.classes:
        inv = inv + RationalHL(c.size * ONE, c.molien_det)
    series = inv / table.group_order
    return (1 / series).to_polynomial()


def degrees_product(table: CharTable) -> HalfLaurent:
    """prod (1 - q^d_j) over the fundamental invariant degrees.

    Computed as the reciprocal of the invariant Molien series
    (1/|W|) sum |c| / det(1 - q*w); exact division certifies that the
    reciprocal is a polynomial, which characterizes valid reflection data.
    For S_n this returns (1-q)(1-q^2)...(1-q^n).
    """
    return _degrees_product_cached(table)


def coinvariant_pairing(table: CharTable, chi: str, psi: str) -> HalfLaurent:
    """Graded multiplicity of the pair (chi, psi) in the coinvariant algebra.

    Symmetric in chi and psi, has nonnegative integer coefficients, and
    evaluates at q=1 to deg(chi)*deg(psi).  Raises NonExactDivision when the
    table data is not internally consistent.
    """
    series = class_pair_series(table, chi, psi)
    return (series * degrees_product(table)).to_polynomial()
