"""Right coset spaces and the induced right action of the parent group.

For a subgroup H of G the points are the right cosets Hx.  G acts on the
right: (Hx) . g = H(xg).  All of the counting identities downstream reduce
to fixed-point counts of this action, so the action table is materialized
densely once and everything else reads from it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import IndexOutOfRange, SubgroupMismatch
from .groups import FiniteGroup, Subgroup, _freeze


@dataclass(frozen=True)
class CosetSpace:
    """The right coset space H\\G with its right G-action.

    Attributes:
        group: the acting group G.
        subgroup: the subgroup H whose right cosets form the points.
        reps: shape (num_cosets,), minimal element of each coset; reps[0]
            is the identity, so coset 0 is H itself.
        coset_of: shape (order,), coset index containing each group element.
        action: shape (num_cosets, order); action[x, g] is the coset x.g.
    """

    group: FiniteGroup
    subgroup: Subgroup
    reps: np.ndarray
    coset_of: np.ndarray
    action: np.ndarray

    @property
    def num_points(self) -> int:
        return len(self.reps)

    def check_point_index(self, x: int) -> None:
        if not 0 <= x < self.num_points:
            raise IndexOutOfRange(
                f"point index {x} out of range for a space with {self.num_points} points"
            )


def build_coset_space(group: FiniteGroup, subgroup: Subgroup) -> CosetSpace:
    """Enumerate the right cosets of a subgroup and tabulate the right action."""
    if subgroup.parent is not group:
        raise SubgroupMismatch("subgroup was built from a different group instance")
    n = group.order
    members = np.asarray(subgroup.members, dtype=np.int64)
    coset_of = np.full(n, -1, dtype=np.int64)
    reps = []
    for x in range(n):
        if coset_of[x] >= 0:
            continue
        # Scanning x in ascending order makes x the minimal member of Hx.
        reps.append(x)
        coset_of[group.mult[members, x]] = len(reps) - 1
    reps_arr = np.asarray(reps, dtype=np.int64)
    action = coset_of[group.mult[reps_arr, :]]
    return CosetSpace(
        group=group,
        subgroup=subgroup,
        reps=_freeze(reps_arr),
        coset_of=_freeze(coset_of),
        action=_freeze(action),
    )


def fixed_point_count(space: CosetSpace, g: int) -> int:
    """Number of cosets x with x.g = x."""
    space.group.check_index(g)
    points = np.arange(space.num_points)
    return int(np.sum(space.action[:, g] == points))


def fixed_point_vector(space: CosetSpace) -> np.ndarray:
    """Fixed-point counts for every group element, shape (order,)."""
    points = np.arange(space.num_points)[:, None]
    return _freeze(np.sum(space.action == points, axis=0).astype(np.int64))
