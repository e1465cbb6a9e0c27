"""Built-in group catalog.

Every entry is constructed from scratch (permutation generators or an
explicit multiplication table) and revalidated by the group builder, so
the catalog doubles as a fixture set for the verification suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InputError
from .groups import FiniteGroup, build_from_cayley, build_from_permutations


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    order: int
    description: str


def _cyclic(n: int) -> FiniteGroup:
    shift = tuple((i + 1) % n for i in range(n))
    return build_from_permutations([shift])


def _dihedral(n: int) -> FiniteGroup:
    rotation = tuple((i + 1) % n for i in range(n))
    reflection = tuple((n - i) % n for i in range(n))
    return build_from_permutations([rotation, reflection])


def _symmetric(n: int) -> FiniteGroup:
    swap = (1, 0) + tuple(range(2, n))
    cycle = tuple((i + 1) % n for i in range(n))
    return build_from_permutations([swap, cycle])


def _alternating(n: int) -> FiniteGroup:
    three_cycle = (1, 2, 0) + tuple(range(3, n))
    if n % 2 == 1:
        cycle = tuple((i + 1) % n for i in range(n))
    else:
        # an n-cycle is odd for even n; rotate the last n-1 points instead
        cycle = (0,) + tuple(1 + (i + 1) % (n - 1) for i in range(n - 1))
    return build_from_permutations([three_cycle, cycle])


def _klein4() -> FiniteGroup:
    table = [[a ^ b for b in range(4)] for a in range(4)]
    return build_from_cayley(table, labels=["e", "a", "b", "ab"])


_QUATERNION_AXES = {
    ("1", "1"): (1, "1"),
    ("1", "i"): (1, "i"),
    ("1", "j"): (1, "j"),
    ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"),
    ("j", "1"): (1, "j"),
    ("k", "1"): (1, "k"),
    ("i", "i"): (-1, "1"),
    ("j", "j"): (-1, "1"),
    ("k", "k"): (-1, "1"),
    ("i", "j"): (1, "k"),
    ("j", "i"): (-1, "k"),
    ("j", "k"): (1, "i"),
    ("k", "j"): (-1, "i"),
    ("k", "i"): (1, "j"),
    ("i", "k"): (-1, "j"),
}


def _quaternion8() -> FiniteGroup:
    units = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"), (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]
    index = {u: m for m, u in enumerate(units)}
    table = []
    for s1, a1 in units:
        row = []
        for s2, a2 in units:
            sign, axis = _QUATERNION_AXES[(a1, a2)]
            row.append(index[(s1 * s2 * sign, axis)])
        table.append(row)
    labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return build_from_cayley(table, labels=labels)


def _entries() -> list[tuple[str, int, str, object]]:
    rows: list[tuple[str, int, str, object]] = []
    for n in range(2, 13):
        rows.append((f"cyclic{n}", n, f"cyclic group of order {n}", lambda n=n: _cyclic(n)))
    for n in range(3, 9):
        rows.append(
            (
                f"dihedral{n}",
                2 * n,
                f"dihedral group of order {2 * n} (symmetries of the regular {n}-gon)",
                lambda n=n: _dihedral(n),
            )
        )
    for n in (3, 4, 5):
        order = 1
        for m in range(2, n + 1):
            order *= m
        rows.append(
            (
                f"symmetric{n}",
                order,
                f"symmetric group on {n} letters, order {order}",
                lambda n=n: _symmetric(n),
            )
        )
    for n in (4, 5):
        order = 1
        for m in range(2, n + 1):
            order *= m
        rows.append(
            (
                f"alternating{n}",
                order // 2,
                f"alternating group on {n} letters, order {order // 2}",
                lambda n=n: _alternating(n),
            )
        )
    rows.append(("quaternion8", 8, "quaternion group of order 8", _quaternion8))
    rows.append(("klein4", 4, "Klein four-group (order 4, elementary abelian)", _klein4))
    return rows


_BUILDERS = {name: builder for name, _, _, builder in _entries()}


def catalog_entries() -> tuple[CatalogEntry, ...]:
    """All named groups in display order."""
    return tuple(
        CatalogEntry(name=name, order=order, description=desc)
        for name, order, desc, _ in _entries()
    )


def catalog_names() -> tuple[str, ...]:
    return tuple(name for name, _, _, _ in _entries())


@lru_cache(maxsize=None)
def build_named(name: str) -> FiniteGroup:
    """Construct a catalog group by name; the result is cached and shared."""
    try:
        builder = _BUILDERS[name]
    except KeyError:
        known = ", ".join(catalog_names())
        raise InputError(f"unknown catalog group {name!r}; known names: {known}") from None
    return builder()
