"""Graded Hom dimensions between simple objects of one block.

The graded endomorphism data of a block is controlled by the character table
of its relative Weyl group W acting on a rank-r polynomial algebra with
generators in cohomological degree 2: the dimension in degree 2k of the Hom
space between the simples labelled chi and psi is the k-th coefficient of
the Molien series

    (1/|W|) * sum_c |c| * chi(c) * psi(c) / det(1 - u*w_c).

Odd cohomological degrees vanish identically and are never stored.  The
series is infinite, so every interface takes an explicit truncation bound;
no Euler characteristic of it is ever formed.  Expansion runs in exact
rational arithmetic and every dimension is certified to be a nonnegative
integer: anything else is a hard error, not a warning.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .laurent import rational_series
from .weyl import CharTable, class_pair_series, coinvariant_pairing, degrees_product

__all__ = [
    "GradedDims",
    "graded_hom_dims",
    "lusztig_sheaf_endo_dims",
    "series_consistency",
]


@dataclass(frozen=True)
class GradedDims:
    """dims[k] = dim Hom in cohomological degree 2k, for k = 0..max_degree.

    Entries beyond max_degree are not represented and are *not* implicitly
    zero; the underlying series is infinite.
    """

    dims: tuple[int, ...]
    max_degree: int

    def __post_init__(self):
        if len(self.dims) != self.max_degree + 1:
            raise ValueError("dims must hold one entry per degree 0..max_degree")
        if any(d < 0 for d in self.dims):
            raise ValueError("graded dimensions must be nonnegative")

    def to_json(self) -> dict:
        return {"dims": list(self.dims), "max_k": self.max_degree}


def graded_hom_dims(table: CharTable, chi: str, psi: str, max_k: int) -> GradedDims:
    """Graded Hom dimensions of the pair (chi, psi) through degree 2*max_k.

    Symmetric in chi and psi; the k=0 entry is 1 on the diagonal and 0 off
    it, because degree-0 maps between simples are scalars.
    """
    series = class_pair_series(table, chi, psi)
    coefficients = rational_series(series, 2 * max_k + 1)
    dims = []
    for k in range(max_k + 1):
        value = coefficients[2 * k]
        if value.denominator != 1 or value < 0:
            raise ArithmeticError(
                f"non-integral graded dimension {value} at degree {2 * k}: "
                f"the character table is inconsistent")
        dims.append(int(value))
    for position, value in enumerate(coefficients):
        if position % 2 and value != 0:
            raise ArithmeticError("odd-degree term in an even Molien series")
    return GradedDims(tuple(dims), max_k)


def lusztig_sheaf_endo_dims(table: CharTable, rank: int, max_k: int) -> GradedDims:
    """Graded endomorphisms of the full induced sheaf of the block:
    |W| independent copies of the degree-k monomials in `rank` variables,
    so dims[k] = |W| * C(k + rank - 1, rank - 1)."""
    if rank < 1:
        raise ValueError("rank must be positive")
    dims = tuple(table.group_order * comb(k + rank - 1, rank - 1)
                 for k in range(max_k + 1))
    return GradedDims(dims, max_k)


def series_consistency(table: CharTable, chi: str, psi: str, max_k: int) -> bool:
    """Check the formal identity tying the infinite Hom series to the finite
    coinvariant pairing: the series times prod (1 - u^d_j) must agree with
    coinvariant_pairing(chi, psi) through degree max_k."""
    dims = graded_hom_dims(table, chi, psi, max_k).dims
    degrees = degrees_product(table)
    pairing = coinvariant_pairing(table, chi, psi)
    for k in range(max_k + 1):
        # coefficient of u^k in (sum dims * u^j) * degrees_product
        acc = 0
        for e, c in degrees.items():
            j = k - e // 2
            if 0 <= j <= max_k:
                acc += c * dims[j]
        if acc != pairing.coefficient(2 * k):
            return False
    return True
