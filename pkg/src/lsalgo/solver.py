"""The Lusztig-Shoji algorithm: factor omega = P * Lambda * P^T exactly.

Unknowns are constrained as follows.  P is lower triangular with respect to
the closure order of orbits: the entry p[chi][psi] vanishes unless the orbit
of psi lies strictly below the orbit of chi or chi = psi, and the diagonal
entry is the monomial t^(-dim/2) for the orbit dimension.  Lambda is
supported on pairs of labels sharing an orbit and is symmetric.  Under these
constraints the factorization has a unique solution, which this module
computes by eliminating orbit by orbit along a linear extension of the
closure order, smallest orbits first:

  * stage (i): with all strictly-lower contributions M already known, the
    Lambda block of the current orbit O is forced:
    lambda[i][j] = t^dim(O) * (omega[i][j] - M[i][j]);
  * stage (ii): for each label i on a strictly higher orbit, the row of new
    p entries solves the linear system sum_k p[i][k]*lambda[k][phi] =
    t^(dim(O)/2) * (omega[i][phi] - M[i][phi]) over the Lambda block, which
    is invertible whenever omega comes from an actual block;
  * stage (iii): for labels whose orbit neither equals nor lies above O the
    same right-hand side must vanish identically.

All divisions are certified exact in Z[t^(1/2), t^(-1/2)]; Lambda blocks are
inverted by fraction-free (Bareiss) determinants.  Any failure names the
inconsistency instead of producing wrong numbers.  Because the solution is
unique, the result does not depend on which linear extension was used; the
returned matrices are always indexed by the block's own label order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .blockdata import BlockData, Violation, closure_below, validate_block
from .laurent import ONE, ZERO, HalfLaurent, exact_div, t_half_power

__all__ = [
    "SolverError",
    "InvalidBlock",
    "SingularLambdaBlock",
    "SupportViolation",
    "DualSymmetryViolation",
    "ShapeMismatch",
    "SolveResult",
    "solve",
    "reconstruct",
    "dualize_p",
    "extension_invariance_check",
    "bareiss_det",
]

Matrix = tuple[tuple[HalfLaurent, ...], ...]


class SolverError(Exception):
    """Base class for inconsistencies detected while solving."""


class InvalidBlock(SolverError):
    """The block failed validation; solving was not attempted."""

    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(str(v) for v in violations))


class SingularLambdaBlock(SolverError):
    """A Lambda block has determinant zero: omega is not the pairing of any
    block, since the local systems on each orbit must stay independent."""


class SupportViolation(SolverError):
    """omega has a nonzero entry where the support constraints force zero."""


class DualSymmetryViolation(SolverError):
    """The solved p is not invariant under the duality involution."""


class ShapeMismatch(SolverError):
    """Result and block shapes disagree."""


@dataclass(frozen=True)
class SolveResult:
    """The factorization of one block, indexed by the block's label order.

    `extension_order` records which linear extension of the orbit poset the
    run used; it is diagnostic only and excluded from equality, because the
    solution itself is order-independent.
    """

    block: str
    labels: tuple[str, ...]
    p: Matrix
    lam: Matrix
    p_dual: Matrix
    extension_order: tuple[str, ...] = field(compare=False)

    def entry(self, matrix: Matrix, row: str, col: str) -> HalfLaurent:
        return matrix[self.labels.index(row)][self.labels.index(col)]

    def p_entry(self, row: str, col: str) -> HalfLaurent:
        return self.entry(self.p, row, col)

    def lam_entry(self, row: str, col: str) -> HalfLaurent:
        return self.entry(self.lam, row, col)

    def p_dual_entry(self, row: str, col: str) -> HalfLaurent:
        return self.entry(self.p_dual, row, col)

    def to_json(self) -> dict:
        return {
            "block": self.block,
            "order": list(self.labels),
            "p": [[v.to_json() for v in row] for row in self.p],
            "lambda": [[v.to_json() for v in row] for row in self.lam],
            "p_dual": [[v.to_json() for v in row] for row in self.p_dual],
        }


def bareiss_det(matrix: list[list[HalfLaurent]]) -> HalfLaurent:
    """Fraction-free determinant over Z[t^(1/2), t^(-1/2)].

    Every interior division is exact by the Sylvester identity, so a
    NonExactDivision here means the matrix entries were not ring elements
    produced by a consistent computation.
    """
    n = len(matrix)
    if n == 0:
        return ONE
    m = [list(row) for row in matrix]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            pivot = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if pivot is None:
                return ZERO
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev)
            m[i][k] = ZERO
        prev = m[k][k]
    return m[n - 1][n - 1] if sign > 0 else -m[n - 1][n - 1]


def _solve_lambda_system(lam_block: list[list[HalfLaurent]],
                         rhs: list[HalfLaurent]) -> list[HalfLaurent]:
    """Solve x * L = rhs for a symmetric Lambda block L, by Cramer's rule
    with Bareiss determinants and an exact-division certificate."""
    det = bareiss_det(lam_block)
    if det.is_zero():
        raise SingularLambdaBlock("Lambda block has determinant zero")
    n = len(lam_block)
    out: list[HalfLaurent] = []
    for k in range(n):
        replaced = [
            [rhs[j] if i == k else lam_block[i][j] for j in range(n)]
            for i in range(n)
        ]
        out.append(exact_div(bareiss_det(replaced), det))
    return out


def default_extension(block: BlockData) -> list[str]:
    """Deterministic linear extension: ascending (dimension, orbit id)."""
    return [o.id for o in sorted(block.orbits, key=lambda o: (o.dim, o.id))]


def random_extension(block: BlockData, rng: random.Random) -> list[str]:
    """A randomly drawn linear extension of the closure order."""
    below = closure_below(block)
    remaining = {o.id for o in block.orbits}
    out: list[str] = []
    while remaining:
        ready = sorted(o for o in remaining if not (below[o] & remaining))
        out.append(rng.choice(ready))
        remaining.remove(out[-1])
    return out


def solve(block: BlockData, *, order_seed: int | None = None,
          extension: list[str] | None = None, validate: bool = True) -> SolveResult:
    """Run the factorization on one block.

    With `order_seed` the linear extension is drawn at random from the given
    seed; the result is identical either way.  `validate=False` skips the
    precondition check, which is only useful for exercising the solver's own
    error detection on deliberately broken data.
    """
    if validate:
        violations = validate_block(block)
        if violations:
            raise InvalidBlock(violations)

    if extension is None:
        if order_seed is None:
            extension = default_extension(block)
        else:
            extension = random_extension(block, random.Random(order_seed))

    labels = block.label_ids()
    k = len(labels)
    dim_of = {o.id: o.dim for o in block.orbits}
    on_orbit: dict[str, list[int]] = {o.id: [] for o in block.orbits}
    for i, lb in enumerate(block.labels):
        on_orbit[lb.orbit].append(i)
    below = closure_below(block)

    p = [[ZERO] * k for _ in range(k)]
    lam = [[ZERO] * k for _ in range(k)]
    # running lower-orbit contribution: M[i][j] = sum over processed orbits
    # of p[i] * Lambda_block * p[j]
    m = [[ZERO] * k for _ in range(k)]

    for orbit_id in extension:
        members = on_orbit[orbit_id]
        dim = dim_of[orbit_id]
        t_dim = t_half_power(2 * dim)
        t_half_dim = t_half_power(dim)

        # (i) the Lambda block of this orbit is forced
        for i in members:
            p[i][i] = t_half_power(-dim)
            for j in members:
                lam[i][j] = t_dim * (block.omega[i][j] - m[i][j])
        lam_block = [[lam[i][j] for j in members] for i in members]

        # (ii) rows strictly above: solve over the Lambda block;
        # (iii) rows neither above nor on the orbit: the same right-hand
        #       side must vanish identically
        for i in range(k):
            row_orbit = block.labels[i].orbit
            if row_orbit == orbit_id:
                continue
            rhs = [t_half_dim * (block.omega[i][j] - m[i][j]) for j in members]
            if orbit_id in below[row_orbit]:
                for col, value in zip(members, _solve_lambda_system(lam_block, rhs)):
                    p[i][col] = value
            elif any(not r.is_zero() for r in rhs):
                raise SupportViolation(
                    f"omega[{labels[i]}][...] is nonzero on orbit {orbit_id!r}, "
                    f"which the closure order forbids")

        # fold this orbit's contribution into the running sum
        for i in range(k):
            u = [ZERO] * len(members)
            nonzero = False
            for a, ka in enumerate(members):
                if p[i][ka].is_zero():
                    continue
                nonzero = True
                for b in range(len(members)):
                    u[b] = u[b] + p[i][ka] * lam_block[a][b]
            if not nonzero:
                continue
            for j in range(k):
                acc = m[i][j]
                for b, kb in enumerate(members):
                    if not p[j][kb].is_zero():
                        acc = acc + u[b] * p[j][kb]
                m[i][j] = acc

    p_matrix: Matrix = tuple(tuple(row) for row in p)
    lam_matrix: Matrix = tuple(tuple(row) for row in lam)
    result = SolveResult(block.name, labels, p_matrix, lam_matrix,
                         p_matrix, tuple(extension))
    p_dual = dualize_p(result, block)
    result = SolveResult(block.name, labels, p_matrix, lam_matrix,
                         p_dual, tuple(extension))
    _check_invariants(result, block)
    return result


def _check_invariants(result: SolveResult, block: BlockData) -> None:
    labels = result.labels
    k = len(labels)
    index = {label: i for i, label in enumerate(labels)}
    dual = {lb.id: lb.dual for lb in block.labels}

    for i in range(k):
        for j in range(k):
            di, dj = index[dual[labels[i]]], index[dual[labels[j]]]
            if result.p[i][j] != result.p[di][dj]:
                raise DualSymmetryViolation(
                    f"p[{labels[i]}][{labels[j]}] != p[{labels[di]}][{labels[dj]}]")
            if result.lam[i][j] != result.lam[j][i]:
                raise SolverError(
                    f"lambda[{labels[i]}][{labels[j]}] is not symmetric")

    if reconstruct(result, block) != block.omega:
        raise SolverError("P * Lambda * P^T does not reproduce omega")


def reconstruct(result: SolveResult, block: BlockData) -> Matrix:
    """P * Lambda * P^T, for comparison against the block's omega."""
    k = len(result.labels)
    if len(block.labels) != k or result.labels != block.label_ids():
        raise ShapeMismatch("result labels do not match the block")
    pl = [[ZERO] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            acc = ZERO
            for a in range(k):
                if not result.p[i][a].is_zero() and not result.lam[a][j].is_zero():
                    acc = acc + result.p[i][a] * result.lam[a][j]
            pl[i][j] = acc
    out = [[ZERO] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            acc = ZERO
            for a in range(k):
                if not pl[i][a].is_zero() and not result.p[j][a].is_zero():
                    acc = acc + pl[i][a] * result.p[j][a]
            out[i][j] = acc
    return tuple(tuple(row) for row in out)


def dualize_p(result: SolveResult, block: BlockData) -> Matrix:
    """The dual stalk matrix: p_dual[chi][psi] = t^(-dim O_psi) * bar(p[chi*][psi*]).

    Applying the same transformation twice returns the original p, because
    duality preserves orbits and bar is an involution.
    """
    labels = result.labels
    index = {label: i for i, label in enumerate(labels)}
    dual = {lb.id: lb.dual for lb in block.labels}
    dims = {lb.id: block.orbit_of(lb.id).dim for lb in block.labels}
    k = len(labels)
    out = [[ZERO] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            starred = result.p[index[dual[labels[i]]]][index[dual[labels[j]]]]
            out[i][j] = t_half_power(-2 * dims[labels[j]]) * starred.bar()
    return tuple(tuple(row) for row in out)


def extension_invariance_check(block: BlockData, trials: int) -> bool:
    """Solve under `trials` randomly drawn linear extensions and report
    whether every run produced the identical factorization."""
    reference = solve(block)
    for seed in range(trials):
        if solve(block, order_seed=seed) != reference:
            return False
    return True
