"""Irreducible character tables computed from the class algebra.

The class sums span the center of the group algebra, and their structure
constants give a family of commuting matrices whose common eigenvectors
are the central characters.  A random real combination of those matrices
separates the eigenspaces; degrees are then recovered from the row
orthogonality relation and the full character table follows.

Everything here works over complex floats.  Construction re-checks the
orthogonality relations before returning, so a table that comes back is
already internally consistent to EIGEN_TOL.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateSpectrum,
    IndexOutOfRange,
    OrthogonalityFailure,
    VerificationError,
)
from .groups import ClassData, FiniteGroup, _freeze, conjugacy_classes

# Pinned numeric gates. EIGEN_TOL covers eigenvalue separation and the
# orthogonality recheck; SNAP is only a sort-key quantum, never applied
# to stored values.
EIGEN_TOL = 1e-8
EIGENVALUE_SEPARATION = 1e-6
DEGREE_TOL = 1e-6
SNAP = 1e-9
MAX_ATTEMPTS = 20


@dataclass(frozen=True)
class Irrep:
    """One row of a character table: a degree and one value per class."""

    index: int
    degree: int
    values: np.ndarray

    def __repr__(self) -> str:
        return f"Irrep(index={self.index}, degree={self.degree})"


@dataclass(frozen=True)
class CharacterTable:
    """All irreducible characters of a group, one row per irrep.

    Rows are sorted by degree, ties broken by comparing the value rows
    elementwise, largest first, so the trivial character is always row 0.
    table[lam, i] is the character of irrep lam on conjugacy class i.
    """

    group: FiniteGroup
    class_data: ClassData
    degrees: np.ndarray
    table: np.ndarray

    @property
    def num_irreps(self) -> int:
        return len(self.degrees)

    @property
    def trivial_index(self) -> int:
        """Row index of the all-ones character; the sort pins it to 0."""
        for lam in range(self.num_irreps):
            if np.allclose(self.table[lam], 1.0, atol=EIGEN_TOL):
                return lam
        raise VerificationError("character table has no all-ones row")

    def check_irrep_index(self, lam: int) -> int:
        if not 0 <= lam < self.num_irreps:
            raise IndexOutOfRange(f"irrep index {lam} outside 0..{self.num_irreps - 1}")
        return int(lam)

    def irrep(self, lam: int) -> Irrep:
        self.check_irrep_index(lam)
        return Irrep(index=lam, degree=int(self.degrees[lam]), values=self.table[lam])

    @property
    def irreps(self) -> tuple[Irrep, ...]:
        return tuple(self.irrep(lam) for lam in range(self.num_irreps))

    def value_on_elements(self, lam: int) -> np.ndarray:
        """Character of irrep lam as a function on elements, shape (order,)."""
        self.check_irrep_index(lam)
        return self.table[lam][self.class_data.class_of]


@dataclass(frozen=True)
class OrthogonalityReport:
    """Worst-case deviations of the two orthogonality relations."""

    max_row_deviation: float
    max_column_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return (
            self.max_row_deviation <= self.tolerance
            and self.max_column_deviation <= self.tolerance
        )


def structure_constants(group: FiniteGroup, class_data: ClassData) -> np.ndarray:
    """Class algebra structure constants a[i, j, k], all nonnegative integers.

    The product of class sums i and j covers each element of class k
    exactly a[i, j, k] times.
    """
    r = class_data.num_classes
    sizes = class_data.sizes
    a = np.zeros((r, r, r), dtype=np.int64)
    for i in range(r):
        ci = np.asarray(class_data.classes[i], dtype=np.int64)
        for j in range(r):
            cj = np.asarray(class_data.classes[j], dtype=np.int64)
            products = group.mult[np.ix_(ci, cj)]
            counts = np.bincount(class_data.class_of[products].ravel(), minlength=r)
            quotient, remainder = np.divmod(counts, sizes)
            if np.any(remainder != 0):
                raise VerificationError(
                    "class sum product is not constant on classes; "
                    "the class partition is inconsistent"
                )
            a[i, j] = quotient
    return a


def compute_character_table(
    group: FiniteGroup,
    class_data: ClassData | None = None,
    seed: int = 0,
) -> CharacterTable:
    """Compute the full character table of a group.

    The random combination of class matrices is drawn from a generator
    seeded with ``seed``; collisions below EIGENVALUE_SEPARATION trigger a
    redraw, and MAX_ATTEMPTS failures raise DegenerateSpectrum.  The
    returned table is deterministic for a fixed group and seed.
    """
    cd = class_data if class_data is not None else conjugacy_classes(group)
    r = cd.num_classes
    sizes = cd.sizes.astype(np.float64)
    a = structure_constants(group, cd)

    rng = np.random.default_rng(seed)
    omega = None
    for _ in range(MAX_ATTEMPTS):
        t = rng.uniform(-1.0, 1.0, size=r)
        combined = np.tensordot(t, a.astype(np.float64), axes=([0], [0]))
        eigenvalues, eigenvectors = np.linalg.eig(combined)
        separation = _min_pairwise_distance(eigenvalues)
        if r > 1 and separation < EIGENVALUE_SEPARATION:
            continue
        anchor = eigenvectors[0, :]
        if np.any(np.abs(anchor) < 1e-12):
            continue
        omega = (eigenvectors / anchor).T  # one central character per row
        break
    if omega is None:
        raise DegenerateSpectrum(
            f"no eigenvalue separation above {EIGENVALUE_SEPARATION} "
            f"after {MAX_ATTEMPTS} random combinations"
        )

    inverse_class = np.asarray(cd.inverse_class, dtype=np.int64)
    degrees = np.zeros(r, dtype=np.int64)
    table = np.zeros((r, r), dtype=np.complex128)
    order = float(group.order)
    for m in range(r):
        w = omega[m]
        denom = np.sum(w * w[inverse_class] / sizes)
        d_squared = order / denom
        if (
            not np.isfinite(d_squared.real)
            or not np.isfinite(d_squared.imag)
            or abs(d_squared.imag) > DEGREE_TOL
            or d_squared.real <= 0
        ):
            raise VerificationError(
                f"central character {m} gives a non-real squared degree {d_squared}"
            )
        d = int(round(np.sqrt(d_squared.real)))
        if d < 1 or abs(d * d - d_squared.real) > DEGREE_TOL * max(1.0, d_squared.real):
            raise VerificationError(
                f"central character {m} gives non-integral degree^2 {d_squared.real}"
            )
        degrees[m] = d
        table[m] = d * w / sizes

    sort_order = _row_sort_order(degrees, table)
    degrees = degrees[sort_order]
    table = table[sort_order]

    ct = CharacterTable(
        group=group,
        class_data=cd,
        degrees=_freeze(degrees),
        table=_freeze(table),
    )
    report = verify_orthogonality(ct, tolerance=EIGEN_TOL)
    if not report.passed:
        raise OrthogonalityFailure(
            f"orthogonality deviation {max(report.max_row_deviation, report.max_column_deviation):.3e} "
            f"exceeds {EIGEN_TOL}"
        )
    if int(np.sum(degrees**2)) != group.order:
        raise VerificationError(
            f"sum of squared degrees {int(np.sum(degrees**2))} != group order {group.order}"
        )
    return ct


def _min_pairwise_distance(values: np.ndarray) -> float:
    if len(values) < 2:
        return np.inf
    diff = values[:, None] - values[None, :]
    dist = np.abs(diff)
    np.fill_diagonal(dist, np.inf)
    return float(dist.min())


def _row_sort_order(degrees: np.ndarray, table: np.ndarray) -> list[int]:
    # Snap to a 1e-9 grid for the key only, so ties from float noise do
    # not scramble the order between runs.
    def key(m: int) -> tuple:
        parts: list[float] = [float(degrees[m])]
        for value in table[m]:
            parts.append(-round(value.real / SNAP) * SNAP)
            parts.append(-round(value.imag / SNAP) * SNAP)
        return tuple(parts)

    return sorted(range(len(degrees)), key=key)


def character_value(ct: CharacterTable, lam: int, g: int) -> complex:
    """Character of irrep lam at a group element (not a class index)."""
    ct.check_irrep_index(lam)
    ct.group.check_index(g)
    return complex(ct.table[lam, ct.class_data.class_of[g]])


def verify_orthogonality(ct: CharacterTable, tolerance: float = EIGEN_TOL) -> OrthogonalityReport:
    """Check row and column orthogonality of a character table.

    Rows: (1/|G|) sum_g chi(g) conj(chi'(g)) must be the identity matrix.
    Columns: sum_lam chi(C_i) conj(chi(C_j)), rescaled by
    sqrt(|C_i||C_j|)/|G|, must also be the identity matrix.
    """
    sizes = ct.class_data.sizes.astype(np.float64)
    order = float(ct.group.order)
    weighted = ct.table * sizes[None, :]
    row_gram = weighted @ ct.table.conj().T / order
    row_dev = float(np.max(np.abs(row_gram - np.eye(ct.num_irreps))))

    scale = np.sqrt(np.outer(sizes, sizes)) / order
    col_gram = scale * (ct.table.conj().T @ ct.table).T
    col_dev = float(np.max(np.abs(col_gram - np.eye(ct.class_data.num_classes))))
    return OrthogonalityReport(
        max_row_deviation=row_dev,
        max_column_deviation=col_dev,
        tolerance=tolerance,
    )
