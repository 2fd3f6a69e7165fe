"""Shared test data: hand-checked blocks exercising nontrivial duality and
solver error paths."""

from pathlib import Path

import pytest

from lsalgo.blockdata import BlockData, OrbitInfo, SimpleLabel
from lsalgo.laurent import ONE, ZERO, HalfLaurent, t_power

REPO_ROOT = Path(__file__).resolve().parent.parent
DATASETS = REPO_ROOT / "datasets"


def synthetic_dual_pair() -> BlockData:
    """Two-orbit block whose lower orbit carries dual label pair (a, b).

    Built from a known factorization and multiplied out by hand, so the
    solver must recover exactly:

        p = [[t^-1, 0, 0], [0, t^-1, 0], [t^-1, t^-1, t^-2]]
        lambda blocks: [[t^2, 1], [1, t^2]] on the lower orbit,
                       [t^4 - t^2] on the upper orbit.
    """
    orbits = (
        OrbitInfo("low", 2, ()),
        OrbitInfo("high", 4, ("low",)),
    )
    labels = (
        SimpleLabel("a", "low", "L", "b"),
        SimpleLabel("b", "low", "L-dual", "a"),
        SimpleLabel("c", "high", "triv", "c"),
    )
    w_ac = ONE + t_power(-2)
    omega = (
        (ONE, t_power(-2), w_ac),
        (t_power(-2), ONE, w_ac),
        (w_ac, w_ac, 3 * ONE + t_power(-2)),
    )
    return BlockData("synthetic-dual-pair", orbits, labels, omega,
                     {"family": "hand-authored", "note": "dual label pair"})


def incomparable_orbits_block(cross_value: HalfLaurent) -> BlockData:
    """Three orbits with an incomparable pair; a nonzero pairing between the
    two incomparable orbits violates the support constraints."""
    orbits = (
        OrbitInfo("o1", 0, ()),
        OrbitInfo("o2", 2, ()),
        OrbitInfo("top", 4, ("o1", "o2")),
    )
    labels = (
        SimpleLabel("x", "o1"),
        SimpleLabel("y", "o2"),
        SimpleLabel("z", "top"),
    )
    omega = (
        (ONE, cross_value, ZERO),
        (cross_value, t_power(2), ZERO),
        (ZERO, ZERO, ONE),
    )
    return BlockData("incomparable", orbits, labels, omega)


def singular_lambda_block() -> BlockData:
    """Valid-looking data whose lower Lambda block is singular."""
    orbits = (OrbitInfo("low", 0, ()), OrbitInfo("high", 2, ("low",)))
    labels = (
        SimpleLabel("a", "low"),
        SimpleLabel("b", "low"),
        SimpleLabel("c", "high"),
    )
    omega = (
        (ONE, ONE, ONE),
        (ONE, ONE, ONE),
        (ONE, ONE, ONE),
    )
    return BlockData("singular", orbits, labels, omega)


def non_ring_solution_block() -> BlockData:
    """Forces p = 1/2, which is not a ring element."""
    orbits = (OrbitInfo("low", 0, ()), OrbitInfo("high", 2, ("low",)))
    labels = (SimpleLabel("a", "low"), SimpleLabel("c", "high"))
    omega = (
        (2 * ONE, ONE),
        (ONE, ONE),
    )
    return BlockData("non-ring", orbits, labels, omega)


def dual_symmetry_breaking_block() -> BlockData:
    """Symmetric, ring-solvable omega that is not invariant under duality;
    only reachable with validation off, and the solver must refuse it."""
    orbits = (OrbitInfo("low", 2, ()), OrbitInfo("high", 4, ("low",)))
    labels = (
        SimpleLabel("a", "low", "L", "b"),
        SimpleLabel("b", "low", "L-dual", "a"),
        SimpleLabel("c", "high", "triv", "c"),
    )
    w_ac = ONE + t_power(-4)
    w_bc = 2 * t_power(-2)
    omega = (
        (ONE, t_power(-2), w_ac),
        (t_power(-2), ONE, w_bc),
        (w_ac, w_bc, 2 * ONE - t_power(-2) + 3 * t_power(-4)),
    )
    return BlockData("dual-breaking", orbits, labels, omega)


@pytest.fixture(scope="session")
def dual_pair_block() -> BlockData:
    return synthetic_dual_pair()
