"""Service layer: one handler per operation, plus the FastAPI wiring.

Handlers take validated request models and return response models; the
HTTP routes and the command line call the same handlers, so behavior
cannot drift between the two front ends.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ConfigDict, Field

from .catalog import catalog_entries
from .characters import CharacterTable, compute_character_table, verify_orthogonality
from .cosets import build_coset_space, fixed_point_vector
from .errors import EngineError, InputError
from .groups import ClassData, FiniteGroup, conjugacy_classes
from .schemas import (
    CatalogEntryModel,
    CatalogResponse,
    CharTableResponse,
    CheckModel,
    ClassesResponse,
    ClassRow,
    DeviationRow,
    FixedPointRow,
    FixedPointsResponse,
    FunctionSpec,
    GroupSpec,
    InfoResponse,
    MultiplicitiesResponse,
    MultiplicityRow,
    RunConfig,
    SubgroupField,
    TraceResponse,
    TraceRouteValue,
    VerifyResponse,
    complex_pair,
    group_display_name,
    resolve_function,
    resolve_group,
    resolve_subgroup,
    sig12,
)
from .traces import (
    DEFAULT_SEEDS,
    compare_traces,
    make_context,
    multiplicity_spectrum,
    verify_all,
)


class InfoRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    group: GroupSpec
    seed: int = 0


class FixedPointsRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    group: GroupSpec
    subgroup: SubgroupField = "trivial"


class TraceRequest(RunConfig):
    function: FunctionSpec = Field(
        default_factory=lambda: FunctionSpec(kind="random", seed=0)
    )


def _group_parts(
    spec: GroupSpec, seed: int
) -> tuple[FiniteGroup, ClassData, CharacterTable]:
    group = resolve_group(spec)
    class_data = conjugacy_classes(group)
    table = compute_character_table(group, class_data, seed=seed)
    return group, class_data, table


def handle_catalog() -> CatalogResponse:
    return CatalogResponse(
        entries=[
            CatalogEntryModel(name=e.name, order=e.order, description=e.description)
            for e in catalog_entries()
        ]
    )


def handle_info(req: InfoRequest) -> InfoResponse:
    group, class_data, table = _group_parts(req.group, req.seed)
    return InfoResponse(
        group=group_display_name(req.group, group),
        order=group.order,
        is_abelian=group.is_abelian,
        num_classes=class_data.num_classes,
        class_sizes=[int(s) for s in class_data.sizes],
        irrep_degrees=[int(d) for d in table.degrees],
        element_labels=list(group.labels) if group.labels is not None else None,
    )


def handle_classes(req: InfoRequest) -> ClassesResponse:
    group = resolve_group(req.group)
    class_data = conjugacy_classes(group)
    rows = []
    for i in range(class_data.num_classes):
        rep = class_data.representatives[i]
        rows.append(
            ClassRow(
                index=i,
                size=len(class_data.classes[i]),
                representative=rep,
                representative_label=group.label(rep),
                centralizer_order=int(class_data.centralizer_order[rep]),
                inverse_class=class_data.inverse_class[i],
            )
        )
    return ClassesResponse(
        group=group_display_name(req.group, group),
        order=group.order,
        num_classes=class_data.num_classes,
        classes=rows,
    )


def handle_chartable(req: InfoRequest) -> CharTableResponse:
    group, class_data, table = _group_parts(req.group, req.seed)
    report = verify_orthogonality(table)
    rows = [[complex_pair(complex(v)) for v in table.table[lam]] for lam in range(table.num_irreps)]
    reps = list(class_data.representatives)
    return CharTableResponse(
        group=group_display_name(req.group, group),
        order=group.order,
        num_classes=class_data.num_classes,
        class_sizes=[int(s) for s in class_data.sizes],
        class_representatives=reps,
        centralizer_orders=[int(class_data.centralizer_order[r]) for r in reps],
        degrees=[int(d) for d in table.degrees],
        rows=rows,
        max_orthogonality_deviation=sig12(
            max(report.max_row_deviation, report.max_column_deviation)
        ),
    )


def handle_fixed_points(req: FixedPointsRequest) -> FixedPointsResponse:
    group = resolve_group(req.group)
    subgroup = resolve_subgroup(group, req.subgroup)
    space = build_coset_space(group, subgroup)
    fixed = fixed_point_vector(space)
    rows = [
        FixedPointRow(element=g, label=group.label(g), count=int(fixed[g]))
        for g in range(group.order)
    ]
    return FixedPointsResponse(
        group=group_display_name(req.group, group),
        order=group.order,
        subgroup_order=subgroup.order,
        num_points=space.num_points,
        counts=rows,
        total=int(fixed.sum()),
    )


def handle_multiplicities(req: RunConfig) -> MultiplicitiesResponse:
    group, class_data, table = _group_parts(req.group, req.seed)
    subgroup = resolve_subgroup(group, req.subgroup)
    ctx = make_context(
        group, subgroup, dimv=req.dimv, class_data=class_data, table=table
    )
    spectrum = multiplicity_spectrum(ctx, tolerance=req.tolerance, strict=False)
    entries = [
        MultiplicityRow(
            irrep=lam,
            degree=int(table.degrees[lam]),
            raw=complex_pair(complex(spectrum.raw[lam])),
            rounded=int(spectrum.rounded[lam]),
            residual=sig12(float(spectrum.residuals[lam])),
        )
        for lam in range(table.num_irreps)
    ]
    dim_sum = int(spectrum.rounded @ table.degrees)
    expected = ctx.space.num_points * ctx.dimv
    ok = (
        bool((spectrum.residuals < req.tolerance).all())
        and bool((spectrum.rounded >= 0).all())
        and dim_sum == expected
    )
    return MultiplicitiesResponse(
        group=group_display_name(req.group, group),
        order=group.order,
        subgroup_order=subgroup.order,
        dimv=req.dimv,
        entries=entries,
        dimension_sum=dim_sum,
        expected_dimension_sum=expected,
        max_residual=sig12(spectrum.max_residual),
        pass_=ok,
    )


def handle_trace(req: TraceRequest) -> TraceResponse:
    group, class_data, table = _group_parts(req.group, req.seed)
    subgroup = resolve_subgroup(group, req.subgroup)
    ctx = make_context(
        group, subgroup, dimv=req.dimv, class_data=class_data, table=table
    )
    f = resolve_function(req.function, group, class_data)
    comparison = compare_traces(
        ctx, f, tolerance=req.tolerance, oracle_cap=req.oracle_cap
    )
    routes = [
        TraceRouteValue(route="pointcount", value=complex_pair(comparison.pointcount)),
        TraceRouteValue(route="geometric", value=complex_pair(comparison.geometric)),
        TraceRouteValue(route="spectral", value=complex_pair(comparison.spectral)),
    ]
    if comparison.direct is not None:
        routes.append(
            TraceRouteValue(route="direct", value=complex_pair(comparison.direct))
        )
    deviations = [
        DeviationRow(pair=pair, value=sig12(value))
        for pair, value in comparison.deviations
    ]
    return TraceResponse(
        group=group_display_name(req.group, group),
        order=group.order,
        subgroup_order=subgroup.order,
        dimv=req.dimv,
        routes=routes,
        deviations=deviations,
        max_deviation=sig12(comparison.max_deviation),
        notes=list(comparison.notes),
        pass_=comparison.passed,
    )


def handle_verify(req: RunConfig) -> VerifyResponse:
    group, class_data, table = _group_parts(req.group, req.seed)
    subgroup = resolve_subgroup(group, req.subgroup)
    ctx = make_context(
        group, subgroup, dimv=req.dimv, class_data=class_data, table=table
    )
    report = verify_all(
        ctx,
        seeds=DEFAULT_SEEDS,
        tolerance=req.tolerance,
        oracle_cap=req.oracle_cap,
    )
    checks = [
        CheckModel(
            id=c.check_id,
            description=c.description,
            max_deviation=sig12(c.max_deviation),
            pass_=c.passed,
            notes=list(c.notes),
        )
        for c in report.checks
    ]
    return VerifyResponse(
        group=group_display_name(req.group, group),
        order=group.order,
        subgroup_order=subgroup.order,
        dimv=req.dimv,
        checks=checks,
        pass_=report.passed,
    )


app = FastAPI(
    title="grouptrace",
    description="Harmonic analysis on finite groups with cross-verified trace identities.",
)


@app.exception_handler(InputError)
async def _input_error_handler(request, exc: InputError) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"error": type(exc).__name__, "message": str(exc)},
    )


@app.exception_handler(EngineError)
async def _engine_error_handler(request, exc: EngineError) -> JSONResponse:
    return JSONResponse(
        status_code=422,
        content={"error": type(exc).__name__, "message": str(exc)},
    )


@app.get("/catalog", response_model=CatalogResponse)
def catalog_route() -> CatalogResponse:
    return handle_catalog()


@app.post("/info", response_model=InfoResponse)
def info_route(req: InfoRequest) -> InfoResponse:
    return handle_info(req)


@app.post("/classes", response_model=ClassesResponse)
def classes_route(req: InfoRequest) -> ClassesResponse:
    return handle_classes(req)


@app.post("/chartable", response_model=CharTableResponse)
def chartable_route(req: InfoRequest) -> CharTableResponse:
    return handle_chartable(req)


@app.post("/fixed-points", response_model=FixedPointsResponse)
def fixed_points_route(req: FixedPointsRequest) -> FixedPointsResponse:
    return handle_fixed_points(req)


@app.post("/multiplicities", response_model=MultiplicitiesResponse)
def multiplicities_route(req: RunConfig) -> MultiplicitiesResponse:
    return handle_multiplicities(req)


@app.post("/trace", response_model=TraceResponse)
def trace_route(req: TraceRequest) -> TraceResponse:
    return handle_trace(req)


@app.post("/verify", response_model=VerifyResponse)
def verify_route(req: RunConfig) -> VerifyResponse:
    return handle_verify(req)
