"""Complex-valued functions on a group and their algebra operations.

A GroupFunction is a vector indexed by group elements.  Convolution uses
the left-translate convention (f1 * f2)(g) = sum_h f1(h) f2(h^-1 g), the
one under which the right regular representation satisfies
R(f1 * f2) = R(f1) R(f2).

fourier_trace_pair deliberately evaluates the double sum over both
arguments instead of convolving first; downstream checks compare the two
routes, so they must not share code.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .characters import CharacterTable
from .errors import GroupMismatch
from .groups import ClassData, FiniteGroup, _freeze


@dataclass(frozen=True)
class GroupFunction:
    """A complex function on the elements of a finite group."""

    group: FiniteGroup
    values: np.ndarray

    def __post_init__(self) -> None:
        if self.values.shape != (self.group.order,):
            raise GroupMismatch(
                f"function has {self.values.shape} values for a group of order {self.group.order}"
            )

    def __call__(self, g: int) -> complex:
        self.group.check_index(g)
        return complex(self.values[g])

    def is_class_function(self, class_data: ClassData, tol: float = 1e-12) -> bool:
        for members in class_data.classes:
            block = self.values[np.asarray(members, dtype=np.int64)]
            if np.any(np.abs(block - block[0]) > tol):
                return False
        return True


def _wrap(group: FiniteGroup, values: np.ndarray) -> GroupFunction:
    return GroupFunction(group=group, values=_freeze(np.ascontiguousarray(values, dtype=np.complex128)))


def delta(group: FiniteGroup, g: int) -> GroupFunction:
    """Indicator of a single element."""
    group.check_index(g)
    values = np.zeros(group.order, dtype=np.complex128)
    values[g] = 1.0
    return _wrap(group, values)


def constant_function(group: FiniteGroup, value: complex = 1.0) -> GroupFunction:
    return _wrap(group, np.full(group.order, value, dtype=np.complex128))


def function_from_values(group: FiniteGroup, values) -> GroupFunction:
    arr = np.asarray(values, dtype=np.complex128)
    if arr.shape != (group.order,):
        raise GroupMismatch(
            f"expected {group.order} values, got array of shape {arr.shape}"
        )
    return _wrap(group, arr)


def random_function(group: FiniteGroup, seed: int = 0) -> GroupFunction:
    """Deterministic pseudo-random function with parts uniform in [-1, 1)."""
    rng = np.random.default_rng(seed)
    parts = rng.uniform(-1.0, 1.0, size=(2, group.order))
    return _wrap(group, parts[0] + 1j * parts[1])


def class_sum(class_data: ClassData, i: int) -> GroupFunction:
    """Indicator function of conjugacy class i."""
    class_data.check_class_index(i)
    values = np.zeros(class_data.group.order, dtype=np.complex128)
    values[np.asarray(class_data.classes[i], dtype=np.int64)] = 1.0
    return _wrap(class_data.group, values)


def class_sums(class_data: ClassData) -> tuple[GroupFunction, ...]:
    return tuple(class_sum(class_data, i) for i in range(class_data.num_classes))


def _same_group(a: FiniteGroup, b: FiniteGroup) -> None:
    if a is not b:
        raise GroupMismatch("operands were built on different group instances")


def convolve(f1: GroupFunction, f2: GroupFunction) -> GroupFunction:
    """(f1 * f2)(g) = sum_h f1(h) f2(h^-1 g)."""
    _same_group(f1.group, f2.group)
    group = f1.group
    # shifted[h, g] = f2(h^-1 g)
    shifted = f2.values[group.mult[group.inv, :]]
    return _wrap(group, f1.values @ shifted)


def fourier_trace(f: GroupFunction, table: CharacterTable, lam: int) -> complex:
    """Trace of irrep lam applied to f: sum_g f(g) chi_lam(g)."""
    _same_group(f.group, table.group)
    return complex(f.values @ table.value_on_elements(lam))


def fourier_trace_pair(
    f1: GroupFunction, f2: GroupFunction, table: CharacterTable, lam: int
) -> complex:
    """Trace of irrep lam on a product, as the literal double sum.

    sum_{g,h} f1(g) f2(h) chi_lam(gh), with no convolution in between.
    """
    _same_group(f1.group, f2.group)
    _same_group(f1.group, table.group)
    group = f1.group
    chi = table.value_on_elements(lam)
    # chi_products[g, h] = chi(gh)
    chi_products = chi[group.mult]
    return complex(f1.values @ chi_products @ f2.values)
