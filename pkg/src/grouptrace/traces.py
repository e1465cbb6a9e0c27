"""Trace identities for the action of a group on a coset space.

The induced representation of G on V-valued functions over H\\G has a
trace that can be computed four independent ways:

  - pointcount: fiber dimension times the fixed-point-weighted sum of f.
  - geometric: class sums of f weighted by centralizer orders.
  - spectral: integer multiplicities times irreducible traces.
  - direct: literally materialize the block permutation matrices, sum
    them with f-weights, and take the matrix trace.  This route never
    shares code or algebra with the other three; it is the oracle the
    formula routes are judged against.

The check functions return small report objects instead of raising, so a
failing identity is data, not control flow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .algebra import (
    GroupFunction,
    convolve,
    fourier_trace,
    fourier_trace_pair,
    random_function,
)
from .characters import EIGEN_TOL, CharacterTable, compute_character_table, verify_orthogonality
from .cosets import CosetSpace, build_coset_space, fixed_point_vector
from .errors import (
    GroupMismatch,
    InputError,
    NonIntegralMultiplicity,
    OracleTooLarge,
)
from .groups import (
    ClassData,
    FiniteGroup,
    Subgroup,
    _freeze,
    conjugacy_classes,
    trivial_subgroup,
)

ROUNDING_TOL = 1e-6
RELATIVE_TOL = 1e-6
ABSOLUTE_FLOOR = 1e-9
DEFAULT_ORACLE_CAP = 512
DEFAULT_SEEDS = (0, 1, 2, 3, 4)


def deviation_threshold(reference: float, tolerance: float = RELATIVE_TOL) -> float:
    """Allowed deviation when comparing against a reference magnitude."""
    return max(ABSOLUTE_FLOOR, tolerance * abs(reference))


@dataclass(frozen=True)
class TraceContext:
    """Everything needed to evaluate the trace identities for one (G, H, dimv).

    fixed[g] is the number of cosets left unmoved by g; dimv is the
    dimension of the coefficient fiber V.
    """

    group: FiniteGroup
    subgroup: Subgroup
    space: CosetSpace
    class_data: ClassData
    table: CharacterTable
    dimv: int
    fixed: np.ndarray

    @property
    def induced_dimension(self) -> int:
        """dim of the induced space: number of cosets times dimv."""
        return self.space.num_points * self.dimv


def make_context(
    group: FiniteGroup,
    subgroup: Optional[Subgroup] = None,
    dimv: int = 1,
    seed: int = 0,
    class_data: Optional[ClassData] = None,
    table: Optional[CharacterTable] = None,
) -> TraceContext:
    """Assemble a TraceContext, computing whatever parts are not supplied."""
    if dimv < 1:
        raise InputError(f"dimv must be a positive integer, got {dimv}")
    if subgroup is None:
        subgroup = trivial_subgroup(group)
    space = build_coset_space(group, subgroup)
    if class_data is None:
        class_data = conjugacy_classes(group)
    if table is None:
        table = compute_character_table(group, class_data, seed=seed)
    if table.group is not group or class_data.group is not group:
        raise GroupMismatch("context parts were built from different group instances")
    return TraceContext(
        group=group,
        subgroup=subgroup,
        space=space,
        class_data=class_data,
        table=table,
        dimv=int(dimv),
        fixed=fixed_point_vector(space),
    )


def char_regular(ctx: TraceContext, g: int) -> float:
    """Character of the induced representation: dimv times the fixed-coset count."""
    ctx.group.check_index(g)
    return float(ctx.dimv * ctx.fixed[g])


def _character_at_inverse(ctx: TraceContext) -> np.ndarray:
    """Matrix A[lam, g] = chi_lam(g^-1), read off the inverse table."""
    return ctx.table.table[:, ctx.class_data.class_of[ctx.group.inv]]


def multiplicity(
    ctx: TraceContext, lam: int, tolerance: float = ROUNDING_TOL
) -> tuple[complex, int, float]:
    """Multiplicity of irrep lam in the induced representation.

    Returns (raw complex value, rounded integer, residual).  The raw value
    is (dimv/|G|) sum_g fixed[g] chi_lam(g^-1); it must round to a
    nonnegative integer or the character table / action is inconsistent.
    """
    ctx.table.check_irrep_index(lam)
    chi_inv = ctx.table.table[lam][ctx.class_data.class_of[ctx.group.inv]]
    raw = complex(ctx.dimv / ctx.group.order * (ctx.fixed @ chi_inv))
    rounded = int(round(raw.real))
    residual = abs(raw - rounded)
    if residual >= tolerance or rounded < 0:
        raise NonIntegralMultiplicity(
            f"multiplicity of irrep {lam} is {raw}, not a nonnegative integer "
            f"within {tolerance}"
        )
    return raw, rounded, residual


@dataclass(frozen=True)
class MultiplicitySpectrum:
    """Raw, rounded, and residual multiplicity of every irrep."""

    raw: np.ndarray
    rounded: np.ndarray
    residuals: np.ndarray

    @property
    def max_residual(self) -> float:
        return float(self.residuals.max())

    def __len__(self) -> int:
        return len(self.rounded)


def multiplicity_spectrum(
    ctx: TraceContext, tolerance: float = ROUNDING_TOL, strict: bool = True
) -> MultiplicitySpectrum:
    """Multiplicities of all irreps, with integrality certificates.

    With strict=True a failed certificate or a broken dimension sum
    raises NonIntegralMultiplicity.  strict=False always returns the
    spectrum so report-style callers can grade it themselves.
    """
    chi_inv = _character_at_inverse(ctx)
    raw = (ctx.dimv / ctx.group.order) * (chi_inv @ ctx.fixed)
    rounded = np.round(raw.real).astype(np.int64)
    residuals = np.abs(raw - rounded)
    if strict:
        bad = np.nonzero((residuals >= tolerance) | (rounded < 0))[0]
        if len(bad):
            lam = int(bad[0])
            raise NonIntegralMultiplicity(
                f"multiplicity of irrep {lam} is {complex(raw[lam])}, not a "
                f"nonnegative integer within {tolerance}"
            )
        total = int(rounded @ ctx.table.degrees)
        expected = ctx.space.num_points * ctx.dimv
        if total != expected:
            raise NonIntegralMultiplicity(
                f"multiplicities weighted by degrees sum to {total}, "
                f"expected {expected}"
            )
    return MultiplicitySpectrum(
        raw=_freeze(raw),
        rounded=_freeze(rounded),
        residuals=_freeze(residuals),
    )


def _require_same_group(ctx: TraceContext, f: GroupFunction) -> None:
    if f.group is not ctx.group:
        raise GroupMismatch("function was built on a different group instance")


def trace_pointcount(ctx: TraceContext, f: GroupFunction) -> complex:
    """dimv * sum_g f(g) * fixed[g]."""
    _require_same_group(ctx, f)
    return complex(ctx.dimv * (f.values @ ctx.fixed))


def trace_geometric(ctx: TraceContext, f: GroupFunction) -> complex:
    """(dimv/|G|) * sum_g fixed[g] * |centralizer(g)| * (class sum of f at g)."""
    _require_same_group(ctx, f)
    class_of = ctx.class_data.class_of
    f_class = np.zeros(ctx.class_data.num_classes, dtype=np.complex128)
    np.add.at(f_class, class_of, f.values)
    weights = ctx.fixed * ctx.class_data.centralizer_order
    total = weights @ f_class[class_of]
    return complex(ctx.dimv / ctx.group.order * total)


def trace_spectral(
    ctx: TraceContext,
    f: GroupFunction,
    tolerance: float = ROUNDING_TOL,
    spectrum: Optional[MultiplicitySpectrum] = None,
) -> complex:
    """sum over irreps of (integer multiplicity) * (irreducible trace of f).

    A precomputed spectrum skips the strict integrality gate, letting
    report-style callers keep evaluating after recording its failure.
    """
    _require_same_group(ctx, f)
    if spectrum is None:
        spectrum = multiplicity_spectrum(ctx, tolerance=tolerance)
    total = 0j
    for lam in range(ctx.table.num_irreps):
        m = int(spectrum.rounded[lam])
        if m:
            total += m * fourier_trace(f, ctx.table, lam)
    return complex(total)


def trace_direct(
    ctx: TraceContext, f: GroupFunction, oracle_cap: int = DEFAULT_ORACLE_CAP
) -> complex:
    """Ground-truth trace: build sum_g f(g) * (block permutation matrix of g).

    Each group element acts on the induced space by permuting coset blocks
    of size dimv.  The matrices are materialized literally and the trace
    is read off the accumulated matrix; nothing is shared with the
    formula-based routes.
    """
    _require_same_group(ctx, f)
    size = ctx.induced_dimension
    if size > oracle_cap:
        raise OracleTooLarge(
            f"oracle matrix side {size} exceeds cap {oracle_cap}"
        )
    nx = ctx.space.num_points
    rows = np.arange(nx)
    fiber = np.eye(ctx.dimv)
    total = np.zeros((size, size), dtype=np.complex128)
    for g in range(ctx.group.order):
        perm = np.zeros((nx, nx))
        perm[rows, ctx.space.action[:, g]] = 1.0
        total += f.values[g] * np.kron(perm, fiber)
    return complex(np.trace(total))


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one identity check."""

    check_id: str
    description: str
    max_deviation: float
    passed: bool
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class TraceComparison:
    """All trace routes for one function, with pairwise deviations."""

    pointcount: complex
    geometric: complex
    spectral: complex
    direct: Optional[complex]
    deviations: tuple[tuple[str, float], ...]
    max_deviation: float
    passed: bool
    notes: tuple[str, ...] = ()


def compare_traces(
    ctx: TraceContext,
    f: GroupFunction,
    tolerance: float = RELATIVE_TOL,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
) -> TraceComparison:
    """Evaluate every route on one function and grade their agreement.

    The direct matrix route is the reference when it fits under the cap;
    otherwise the fixed-point route is the reference and a note records
    the downgrade.
    """
    values: dict[str, complex] = {
        "pointcount": trace_pointcount(ctx, f),
        "geometric": trace_geometric(ctx, f),
        "spectral": trace_spectral(ctx, f),
    }
    notes: tuple[str, ...] = ()
    direct: Optional[complex] = None
    try:
        direct = trace_direct(ctx, f, oracle_cap=oracle_cap)
        values["direct"] = direct
    except OracleTooLarge as exc:
        notes = (f"direct route skipped: {exc}",)
    names = sorted(values)
    deviations = []
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            deviations.append((f"{a}_vs_{b}", float(abs(values[a] - values[b]))))
    reference = direct if direct is not None else values["pointcount"]
    threshold = deviation_threshold(abs(reference), tolerance)
    max_dev = max(d for _, d in deviations)
    return TraceComparison(
        pointcount=values["pointcount"],
        geometric=values["geometric"],
        spectral=values["spectral"],
        direct=direct,
        deviations=tuple(deviations),
        max_deviation=max_dev,
        passed=max_dev <= threshold,
        notes=notes,
    )


def plancherel_check(
    group: FiniteGroup,
    table: CharacterTable,
    f1: GroupFunction,
    f2: GroupFunction,
    dimv: int = 1,
    tolerance: float = RELATIVE_TOL,
) -> CheckResult:
    """Convolution trace against the degree-weighted spectral product.

    Left side: the fixed-point trace of f1*f2 for the trivial subgroup
    (computed through the real coset machinery, not simplified by hand).
    Right side: dimv * sum_lam d_lam * (double-sum spectral trace of the
    pair).  The two sides reach the same number through disjoint code.
    """
    sub = trivial_subgroup(group)
    space = build_coset_space(group, sub)
    fixed = fixed_point_vector(space)
    conv = convolve(f1, f2)
    lhs = complex(dimv * (conv.values @ fixed))
    rhs = 0j
    for lam in range(table.num_irreps):
        rhs += int(table.degrees[lam]) * fourier_trace_pair(f1, f2, table, lam)
    rhs *= dimv
    deviation = float(abs(lhs - rhs))
    notes: tuple[str, ...] = ()
    if dimv > 1:
        notes = (
            f"identity checked in dimv-scaled form (both sides carry dimv={dimv}); "
            "the unscaled statement is the dimv=1 case",
        )
    return CheckResult(
        check_id="plancherel",
        description="convolution trace equals degree-weighted spectral pair trace",
        max_deviation=deviation,
        passed=deviation <= deviation_threshold(abs(lhs), tolerance),
        notes=notes,
    )


def class_spectral_check(
    group: FiniteGroup,
    table: CharacterTable,
    g: int,
    func: GroupFunction,
    tolerance: float = RELATIVE_TOL,
) -> CheckResult:
    """Centralizer-weighted class sum against character-weighted traces.

    |centralizer(g)| * (sum of F over the class of g) must equal
    sum_lam chi_lam(g^-1) * (irreducible trace of F).
    """
    group.check_index(g)
    cd = table.class_data
    class_members = np.asarray(cd.classes[cd.class_of[g]], dtype=np.int64)
    lhs = complex(int(cd.centralizer_order[g]) * func.values[class_members].sum())
    g_inv_class = cd.class_of[group.inv[g]]
    rhs = 0j
    for lam in range(table.num_irreps):
        rhs += table.table[lam, g_inv_class] * fourier_trace(func, table, lam)
    deviation = float(abs(lhs - rhs))
    return CheckResult(
        check_id="class_spectral_identity",
        description="centralizer-weighted class sums match character-weighted traces",
        max_deviation=deviation,
        passed=deviation <= tolerance * (1.0 + abs(lhs)),
    )


def counting_identity_check(ctx: TraceContext, tolerance: float = RELATIVE_TOL) -> CheckResult:
    """|G|^2 * dimv against |H| * dimv * sum over irreps and elements.

    The double sum runs d_lam * fixed[g] * chi_lam(g^-1) over every irrep
    and element.  Both sides carry the same dimv factor; at dimv = 1 this
    is the unscaled counting identity.
    """
    chi_inv = _character_at_inverse(ctx)
    inner = chi_inv @ ctx.fixed
    rhs = complex(ctx.subgroup.order * ctx.dimv * (ctx.table.degrees @ inner))
    lhs = complex(ctx.group.order**2 * ctx.dimv)
    deviation = float(abs(lhs - rhs))
    notes: tuple[str, ...] = ()
    if ctx.dimv > 1:
        notes = (
            f"identity checked in dimv-scaled form (both sides carry dimv={ctx.dimv}); "
            "the unscaled statement is the dimv=1 case",
        )
    return CheckResult(
        check_id="counting_identity",
        description="squared order equals subgroup-order-weighted character double sum",
        max_deviation=deviation,
        passed=deviation <= deviation_threshold(abs(lhs), tolerance),
        notes=notes,
    )


def multiplicity_square_check(ctx: TraceContext, tolerance: float = RELATIVE_TOL) -> CheckResult:
    """Sum of squared multiplicities against the paired fixed-point sum.

    sum_lam m_lam^2 must equal (dimv^2/|G|) * sum_g fixed[g]*fixed[g^-1].
    The left side uses the rounded spectrum, the right side only the
    action table.
    """
    spectrum = multiplicity_spectrum(ctx, strict=False)
    lhs = float(np.sum(spectrum.rounded.astype(np.float64) ** 2))
    paired = float(ctx.fixed @ ctx.fixed[ctx.group.inv])
    rhs = ctx.dimv**2 / ctx.group.order * paired
    deviation = float(abs(lhs - rhs))
    return CheckResult(
        check_id="multiplicity_square_sum",
        description="squared multiplicities sum to the paired fixed-point average",
        max_deviation=deviation,
        passed=deviation <= deviation_threshold(abs(rhs), tolerance),
    )


@dataclass(frozen=True)
class VerificationReport:
    """Aggregated outcome of every identity check for one context."""

    group_order: int
    subgroup_order: int
    dimv: int
    tolerance: float
    seeds: tuple[int, ...]
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def verify_all(
    ctx: TraceContext,
    seeds: tuple[int, ...] = DEFAULT_SEEDS,
    tolerance: float = RELATIVE_TOL,
    rounding_tolerance: float = ROUNDING_TOL,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
) -> VerificationReport:
    """Run every identity check against one context and aggregate a report.

    Failures are reported, never raised; iteration order is fixed so the
    report is byte-stable for a fixed (context, seeds).
    """
    checks: list[CheckResult] = []
    group = ctx.group
    degrees = ctx.table.degrees

    ortho = verify_orthogonality(ctx.table, tolerance=EIGEN_TOL)
    checks.append(
        CheckResult(
            check_id="orthogonality",
            description="character table rows and columns are orthonormal",
            max_deviation=max(ortho.max_row_deviation, ortho.max_column_deviation),
            passed=ortho.passed,
        )
    )

    degree_sum = int(np.sum(degrees**2))
    checks.append(
        CheckResult(
            check_id="degree_sum",
            description="squared irreducible degrees sum to the group order",
            max_deviation=float(abs(degree_sum - group.order)),
            passed=degree_sum == group.order,
        )
    )

    spectrum = multiplicity_spectrum(ctx, strict=False)
    integral = bool(
        np.all(spectrum.residuals < rounding_tolerance) and np.all(spectrum.rounded >= 0)
    )
    checks.append(
        CheckResult(
            check_id="multiplicity_integrality",
            description="every multiplicity rounds to a nonnegative integer",
            max_deviation=spectrum.max_residual,
            passed=integral,
        )
    )

    dim_total = int(spectrum.rounded @ degrees)
    dim_expected = ctx.space.num_points * ctx.dimv
    checks.append(
        CheckResult(
            check_id="dimension_sum",
            description="multiplicities weighted by degrees give the induced dimension",
            max_deviation=float(abs(dim_total - dim_expected)),
            passed=dim_total == dim_expected,
        )
    )

    trivial_dev = float(abs(complex(spectrum.raw[0]) - ctx.dimv))
    checks.append(
        CheckResult(
            check_id="trivial_multiplicity",
            description="the trivial irrep occurs exactly dimv times",
            max_deviation=trivial_dev,
            passed=trivial_dev < rounding_tolerance
            and int(spectrum.rounded[0]) == ctx.dimv,
        )
    )

    checks.append(multiplicity_square_check(ctx, tolerance=tolerance))

    if ctx.subgroup.order == 1:
        expected = degrees.astype(np.float64) * ctx.dimv
        dev = float(np.max(np.abs(spectrum.raw - expected)))
        checks.append(
            CheckResult(
                check_id="regular_multiplicities",
                description="trivial-subgroup multiplicities equal degree times dimv",
                max_deviation=dev,
                passed=dev < rounding_tolerance,
            )
        )
    if ctx.subgroup.order == group.order:
        expected = np.zeros(len(degrees), dtype=np.float64)
        expected[0] = ctx.dimv
        dev = float(np.max(np.abs(spectrum.raw - expected)))
        checks.append(
            CheckResult(
                check_id="full_subgroup_multiplicities",
                description="full-subgroup multiplicities vanish except dimv on the trivial irrep",
                max_deviation=dev,
                passed=dev < rounding_tolerance,
            )
        )

    trace_dev = 0.0
    trace_ok = True
    trace_notes: tuple[str, ...] = ()
    pg_dev = 0.0
    pg_ok = True
    for seed in seeds:
        f = random_function(group, seed)
        pc = trace_pointcount(ctx, f)
        geo = trace_geometric(ctx, f)
        sp = trace_spectral(ctx, f, spectrum=spectrum)
        try:
            ref = trace_direct(ctx, f, oracle_cap=oracle_cap)
        except OracleTooLarge as exc:
            ref = pc
            if not trace_notes:
                trace_notes = (f"direct route skipped: {exc}",)
        threshold = deviation_threshold(abs(ref), tolerance)
        for value in (pc, geo, sp):
            dev = float(abs(value - ref))
            trace_dev = max(trace_dev, dev)
            trace_ok = trace_ok and dev <= threshold
        dev_pg = float(abs(pc - geo))
        pg_dev = max(pg_dev, dev_pg)
        pg_ok = pg_ok and dev_pg <= deviation_threshold(abs(pc), tolerance)
    checks.append(
        CheckResult(
            check_id="trace_agreement",
            description="all trace routes agree on seeded random functions",
            max_deviation=trace_dev,
            passed=trace_ok,
            notes=trace_notes,
        )
    )
    checks.append(
        CheckResult(
            check_id="pointcount_vs_geometric",
            description="fixed-point and centralizer-weighted traces agree",
            max_deviation=pg_dev,
            passed=pg_ok,
        )
    )

    checks.append(counting_identity_check(ctx, tolerance=tolerance))

    plancherel_dev = 0.0
    plancherel_ok = True
    plancherel_notes: tuple[str, ...] = ()
    for seed in seeds:
        f1 = random_function(group, 10_000 + seed)
        f2 = random_function(group, 20_000 + seed)
        result = plancherel_check(group, ctx.table, f1, f2, dimv=ctx.dimv, tolerance=tolerance)
        plancherel_dev = max(plancherel_dev, result.max_deviation)
        plancherel_ok = plancherel_ok and result.passed
        if result.notes and not plancherel_notes:
            plancherel_notes = result.notes
    checks.append(
        CheckResult(
            check_id="plancherel",
            description="convolution trace equals degree-weighted spectral pair trace",
            max_deviation=plancherel_dev,
            passed=plancherel_ok,
            notes=plancherel_notes,
        )
    )

    class_dev = 0.0
    class_ok = True
    for seed in seeds:
        func = random_function(group, 30_000 + seed)
        for g in range(group.order):
            result = class_spectral_check(group, ctx.table, g, func, tolerance=tolerance)
            class_dev = max(class_dev, result.max_deviation)
            class_ok = class_ok and result.passed
    checks.append(
        CheckResult(
            check_id="class_spectral_identity",
            description="centralizer-weighted class sums match character-weighted traces",
            max_deviation=class_dev,
            passed=class_ok,
        )
    )

    return VerificationReport(
        group_order=group.order,
        subgroup_order=ctx.subgroup.order,
        dimv=ctx.dimv,
        tolerance=tolerance,
        seeds=tuple(int(s) for s in seeds),
        checks=tuple(checks),
    )
