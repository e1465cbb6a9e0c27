"""Wire models and resolvers: JSON-shaped requests to domain objects.

Pydantic models define the request/response schema shared by the HTTP
service and the CLI.  Resolvers turn validated specs into engine objects;
they are the only place wire data crosses into the core modules.

All floats in responses are rounded to 12 significant digits at the
boundary, so json, csv, and text renderings of the same response parse
back to identical values.
"""

from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .algebra import (
    GroupFunction,
    class_sum,
    constant_function,
    delta,
    function_from_values,
    random_function,
)
from .catalog import build_named
from .errors import InputError
from .groups import (
    ClassData,
    FiniteGroup,
    Subgroup,
    build_from_cayley,
    build_from_permutations,
    full_subgroup,
    subgroup_closure,
    trivial_subgroup,
)

SubgroupField = Union[Literal["trivial", "full"], list[int]]


def sig12(x: float) -> float:
    """Round to 12 significant digits; the uniform wire precision."""
    return float(f"{float(x):.12g}")


def complex_pair(z: complex) -> list[float]:
    return [sig12(z.real), sig12(z.imag)]


class GroupSpec(BaseModel):
    """How to build a group: by catalog name, generators, or full table."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["named", "permutation", "cayley"]
    name: Optional[str] = None
    generators: Optional[list[list[int]]] = None
    table: Optional[list[list[int]]] = None

    @model_validator(mode="after")
    def _exactly_kind_fields(self) -> "GroupSpec":
        required = {"named": "name", "permutation": "generators", "cayley": "table"}
        want = required[self.kind]
        for field in ("name", "generators", "table"):
            value = getattr(self, field)
            if field == want and value is None:
                raise ValueError(f"kind {self.kind!r} requires field {field!r}")
            if field != want and value is not None:
                raise ValueError(f"kind {self.kind!r} does not take field {field!r}")
        return self


class FunctionSpec(BaseModel):
    """How to build a function on the group.

    kinds: delta (single element), class (class indicator), constant
    (one complex value everywhere), values (explicit [re, im] per
    element), random (seeded pseudo-random).
    """

    model_config = ConfigDict(extra="forbid")

    kind: Literal["delta", "class", "constant", "values", "random"]
    element: Optional[int] = None
    class_index: Optional[int] = None
    value: Optional[list[float]] = None
    values: Optional[list[list[float]]] = None
    seed: Optional[int] = None

    @model_validator(mode="after")
    def _exactly_kind_fields(self) -> "FunctionSpec":
        required = {
            "delta": "element",
            "class": "class_index",
            "constant": "value",
            "values": "values",
            "random": "seed",
        }
        want = required[self.kind]
        for field in ("element", "class_index", "value", "values", "seed"):
            value = getattr(self, field)
            if field == want and value is None:
                raise ValueError(f"kind {self.kind!r} requires field {field!r}")
            if field != want and value is not None:
                raise ValueError(f"kind {self.kind!r} does not take field {field!r}")
        if self.kind == "constant" and len(self.value) != 2:
            raise ValueError("constant value must be a [re, im] pair")
        if self.kind == "values":
            for k, pair in enumerate(self.values):
                if len(pair) != 2:
                    raise ValueError(f"values[{k}] must be a [re, im] pair")
        return self


class InputBundle(BaseModel):
    """Contents of a group input file: group plus optional extras."""

    model_config = ConfigDict(extra="forbid")

    group: GroupSpec
    subgroup: Optional[SubgroupField] = None
    functions: dict[str, FunctionSpec] = Field(default_factory=dict)


class RunConfig(BaseModel):
    """Common knobs for subgroup-aware commands."""

    model_config = ConfigDict(extra="forbid")

    group: GroupSpec
    subgroup: SubgroupField = "trivial"
    dimv: int = Field(default=1, ge=1)
    tolerance: float = Field(default=1e-6, gt=0)
    seed: int = 0
    oracle_cap: int = Field(default=512, ge=1)


def resolve_group(spec: GroupSpec) -> FiniteGroup:
    if spec.kind == "named":
        return build_named(spec.name)
    if spec.kind == "permutation":
        return build_from_permutations(spec.generators)
    return build_from_cayley(spec.table)


def resolve_subgroup(group: FiniteGroup, field: SubgroupField) -> Subgroup:
    if field == "trivial":
        return trivial_subgroup(group)
    if field == "full":
        return full_subgroup(group)
    return subgroup_closure(group, list(field))


def resolve_function(
    spec: FunctionSpec, group: FiniteGroup, class_data: Optional[ClassData] = None
) -> GroupFunction:
    if spec.kind == "delta":
        return delta(group, spec.element)
    if spec.kind == "class":
        if class_data is None:
            raise InputError("class-indicator functions need class data")
        return class_sum(class_data, spec.class_index)
    if spec.kind == "constant":
        return constant_function(group, complex(spec.value[0], spec.value[1]))
    if spec.kind == "values":
        if len(spec.values) != group.order:
            raise InputError(
                f"function needs {group.order} values, got {len(spec.values)}"
            )
        return function_from_values(
            group, [complex(re, im) for re, im in spec.values]
        )
    return random_function(group, spec.seed)


def group_display_name(spec: GroupSpec, group: FiniteGroup) -> str:
    if spec.kind == "named":
        return spec.name
    return f"{spec.kind}:order{group.order}"


# ---------------------------------------------------------------------------
# Response models


class CatalogEntryModel(BaseModel):
    name: str
    order: int
    description: str


class CatalogResponse(BaseModel):
    entries: list[CatalogEntryModel]


class InfoResponse(BaseModel):
    group: str
    order: int
    is_abelian: bool
    num_classes: int
    class_sizes: list[int]
    irrep_degrees: list[int]
    element_labels: Optional[list[str]] = None


class ClassRow(BaseModel):
    index: int
    size: int
    representative: int
    representative_label: str
    centralizer_order: int
    inverse_class: int


class ClassesResponse(BaseModel):
    group: str
    order: int
    num_classes: int
    classes: list[ClassRow]


class CharTableResponse(BaseModel):
    group: str
    order: int
    num_classes: int
    class_sizes: list[int]
    class_representatives: list[int]
    centralizer_orders: list[int]
    degrees: list[int]
    # rows[lam][i] = [re, im] of the character of irrep lam on class i
    rows: list[list[list[float]]]
    max_orthogonality_deviation: float


class FixedPointRow(BaseModel):
    element: int
    label: str
    count: int


class FixedPointsResponse(BaseModel):
    group: str
    order: int
    subgroup_order: int
    num_points: int
    counts: list[FixedPointRow]
    total: int


class MultiplicityRow(BaseModel):
    irrep: int
    degree: int
    raw: list[float]
    rounded: int
    residual: float


class MultiplicitiesResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    group: str
    order: int
    subgroup_order: int
    dimv: int
    entries: list[MultiplicityRow]
    dimension_sum: int
    expected_dimension_sum: int
    max_residual: float
    pass_: bool = Field(alias="pass")


class TraceRouteValue(BaseModel):
    route: str
    value: list[float]


class DeviationRow(BaseModel):
    pair: str
    value: float


class TraceResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    group: str
    order: int
    subgroup_order: int
    dimv: int
    routes: list[TraceRouteValue]
    deviations: list[DeviationRow]
    max_deviation: float
    notes: list[str]
    pass_: bool = Field(alias="pass")


class CheckModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    id: str
    description: str
    max_deviation: float
    pass_: bool = Field(alias="pass")
    notes: list[str] = Field(default_factory=list)


class VerifyResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    group: str
    order: int
    subgroup_order: int
    dimv: int
    checks: list[CheckModel]
    pass_: bool = Field(alias="pass")
