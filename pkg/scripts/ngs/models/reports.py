"""JSON report schemas.

Every report carries a "schema" tag of the form ngon-surfaces/<kind>@1.
Exact numbers are exported as their rational value when they have one,
together with the cyclotomic coefficients and a float shadow.
"""

from __future__ import annotations

from pydantic import ConfigDict, Field

from scripts.ngs.models.base import BaseSurfaceModel


class ReportModel(BaseSurfaceModel):
    """Base for top-level reports."""

    model_config = ConfigDict(
        extra="forbid",
        str_strip_whitespace=True,
        validate_default=True,
        populate_by_name=True,
    )

    schema_id: str = Field(..., alias="schema", pattern=r"^ngon-surfaces/[a-z0-9-]+@1$")


class ExactNumber(BaseSurfaceModel):
    """An element of Q(zeta_conductor)."""

    rational: str | None = Field(default=None, description="Value as 'p/q' when rational")
    conductor: int
    coefficients: list[str]
    value: float


class ExactVector(BaseSurfaceModel):
    x: ExactNumber
    y: ExactNumber


class PointModel(BaseSurfaceModel):
    """A canonical surface point."""

    polygon: int = Field(..., ge=0, le=1)
    x: float
    y: float
    label: str


class ConeClassModel(BaseSurfaceModel):
    index: int
    corners: list[tuple[int, int]]
    angle_over_pi: str


class SurfaceReport(ReportModel):
    n: int
    conductor: int
    genus: int
    polygons: list[list[tuple[float, float]]]
    gluings: list[tuple[int, int, int, int]]
    cone_classes: list[ConeClassModel]
    area: ExactNumber
    weierstrass: list[PointModel]
    cone_points: list[PointModel]
    distinguished: PointModel
    translation_automorphisms: int


class CylinderModel(BaseSurfaceModel):
    index: int
    height: ExactNumber
    circumference: ExactNumber
    modulus: ExactNumber
    twist_multiplicity: ExactNumber
    strips: int
    boundary: list[int]


class RatioModel(BaseSurfaceModel):
    first: int
    second: int
    ratio: str | None
    adjacent: bool


class CuspReductionModel(BaseSurfaceModel):
    """A word taking the direction onto a cusp, image = scale * cusp direction."""

    word: str
    cusp: int = Field(..., ge=0, le=1)
    scale: ExactNumber


class CylindersReport(ReportModel):
    n: int
    direction: ExactVector
    reduction: CuspReductionModel | None = None
    cylinders: list[CylinderModel]
    saddle_connections: int
    adjacent: list[tuple[int, int]]
    ratios: list[RatioModel]
    area_matches: bool


class HeightRow(BaseSurfaceModel):
    index: int
    height: ExactNumber
    expected: ExactNumber
    matches: bool


class HeightTable(BaseSurfaceModel):
    direction: str
    rows: list[HeightRow]
    ratios: list[RatioModel]


class HeightsReport(ReportModel):
    n: int
    tables: list[HeightTable]
    central_cylinder: int | None
    central_modulus: ExactNumber | None


class SineRatioReport(ReportModel):
    alpha: str
    beta: str
    ratio: str | None
    rational: bool
    same_field: bool


class Section4EntryModel(BaseSurfaceModel):
    n: int
    status: str
    reason: str
    nonzero_terms: int | None
    density: str


class Section4Model(ReportModel):
    n_max: int
    log_bound: int
    g_injective: bool
    g_covers_evens: bool
    density_holds: bool
    all_excluded: bool
    entries: list[Section4EntryModel]
    rational_pairs: list[tuple[str, str, str]]


class OrbitReport(ReportModel):
    n: int
    point: PointModel
    word_bound: int
    status: str
    size: int
    points: list[PointModel]
    words: list[str]


class CertificateModel(BaseSurfaceModel):
    point: PointModel
    verdict: str
    evidence: str
    segment: int | None = None
    parameter: str | None = None
    cylinder: str | None = None
    height: float | None = None
    orbit_size: int | None = None


class ExclusionModel(BaseSurfaceModel):
    segment: int
    line: str
    is_edge: bool
    twist: str | None
    directions: tuple[int, int]
    crossing: float
    ratio: float
    c1: int
    c2: int
    c3: int
    endpoints_rational: bool


class ClassifyReport(ReportModel):
    n: int
    word_bound: int
    denominator_bound: int
    periodic: list[PointModel]
    configurations: list[ExclusionModel]
    certificates: list[CertificateModel]
    counts: dict[str, int]


class BlockedReport(ReportModel):
    n: int
    p: PointModel
    q: PointModel
    verdict: str
    reason: str
    blocking_set: list[PointModel]


class SegmentModel(BaseSurfaceModel):
    holonomy: tuple[float, float]
    length: float
    crossings: int
    passes_through: list[PointModel]
    avoids_blocking_set: bool


class SegmentsReport(ReportModel):
    n: int
    p: PointModel
    q: PointModel
    radius: str
    root: int
    verdict: str
    segments: list[SegmentModel]


class PreimageVerdictModel(BaseSurfaceModel):
    first: str
    second: str
    p: PointModel
    q: PointModel
    verdict: str


class TriangleModelReport(ReportModel):
    n: int
    angles: dict[str, str]
    preimage_counts: dict[str, int]
    blocked_pairs: list[tuple[str, str]]
    verdicts: list[PreimageVerdictModel]


class CheckModel(BaseSurfaceModel):
    name: str
    passed: bool
    message: str
    n: int | None = None


class VerifyReport(ReportModel):
    n_values: list[int]
    passed: int
    failed: int
    checks: list[CheckModel]
