"""Assembly of JSON reports from computed results."""

from __future__ import annotations

from fractions import Fraction

from scripts.ngs.blocking.queries import BlockingQuery, blocking_set
from scripts.ngs.blocking.segments import DevelopedSegment
from scripts.ngs.blocking.triangle import TriangleReport
from scripts.ngs.cylinders.decompose import Decomposition, decompose
from scripts.ngs.cylinders.heights import (
    DIRECTION_NAMES,
    canonical_direction,
    central_cylinder,
    expected_heights,
    ratio_table,
    twist_multiplicities,
)
from scripts.ngs.engine.context import exact_number, exact_vector, label_points, point_model
from scripts.ngs.exactnum.section4 import Section4Report
from scripts.ngs.exactnum.sines import sine_field_key, sine_ratio_rational
from scripts.ngs.models.base import schema_tag
from scripts.ngs.models.reports import (
    BlockedReport,
    CertificateModel,
    ClassifyReport,
    ConeClassModel,
    CuspReductionModel,
    CylinderModel,
    CylindersReport,
    ExclusionModel,
    HeightRow,
    HeightsReport,
    HeightTable,
    OrbitReport,
    PreimageVerdictModel,
    RatioModel,
    Section4EntryModel,
    Section4Model,
    SegmentModel,
    SegmentsReport,
    SineRatioReport,
    SurfaceReport,
    TriangleModelReport,
)
from scripts.ngs.periodic.classify import PointCertificate, periodic_points
from scripts.ngs.periodic.exclusion import ExclusionConfig, check_endpoint_heights
from scripts.ngs.surface.marked import SurfacePoint, weierstrass_points
from scripts.ngs.surface.model import SurfaceDef, genus, translation_automorphisms
from scripts.ngs.veech.action import OrbitResult
from scripts.ngs.veech.cusps import CuspReduction


def surface_report(s: SurfaceDef) -> SurfaceReport:
    marked = weierstrass_points(s)
    return SurfaceReport(
        schema=schema_tag("surface"),
        n=s.n,
        conductor=s.conductor,
        genus=genus(s),
        polygons=[[v.shadow() for v in poly.vertices] for poly in s.polygons],
        gluings=[(p, e, q, f) for (p, e), (q, f) in sorted(s.edge_pairs.items())],
        cone_classes=[
            ConeClassModel(index=c.index, corners=list(c.corners), angle_over_pi=str(c.angle))
            for c in s.cone_classes
        ],
        area=exact_number(s.area),
        weierstrass=label_points(s, marked.weierstrass),
        cone_points=label_points(s, marked.cone),
        distinguished=point_model(marked.center, "P_n"),
        translation_automorphisms=len(translation_automorphisms(s)),
    )


def _ratios(d: Decomposition) -> list[RatioModel]:
    return [
        RatioModel(
            first=e.first,
            second=e.second,
            ratio=None if e.ratio is None else str(e.ratio),
            adjacent=e.adjacent,
        )
        for e in ratio_table(d)
    ]


def cylinders_report(
    d: Decomposition, reduction: CuspReduction | None = None
) -> CylindersReport:
    twists = twist_multiplicities(d)
    return CylindersReport(
        schema=schema_tag("cylinders"),
        n=d.surface.n,
        direction=exact_vector(d.direction),
        reduction=None
        if reduction is None
        else CuspReductionModel(
            word=str(reduction.word),
            cusp=reduction.cusp,
            scale=exact_number(reduction.scale),
        ),
        cylinders=[
            CylinderModel(
                index=c.index,
                height=exact_number(c.height),
                circumference=exact_number(c.circumference),
                modulus=exact_number(c.modulus),
                twist_multiplicity=exact_number(twist),
                strips=len(c.strips),
                boundary=list(c.boundary),
            )
            for c, twist in zip(d.cylinders, twists)
        ],
        saddle_connections=len(d.saddle_connections),
        adjacent=sorted(d.adjacent),
        ratios=_ratios(d),
        area_matches=d.total_area() == d.surface.area,
    )


def heights_report(s: SurfaceDef) -> HeightsReport:
    tables = []
    names = DIRECTION_NAMES if not s.is_double else DIRECTION_NAMES[:1]
    for name in names:
        d = decompose(s, canonical_direction(s.n, name))
        expected = expected_heights(s.n, name)
        rows = [
            HeightRow(
                index=c.index,
                height=exact_number(c.height),
                expected=exact_number(e),
                matches=c.height == e,
            )
            for c, e in zip(d.cylinders, expected)
        ]
        tables.append(HeightTable(direction=name, rows=rows, ratios=_ratios(d)))

    central = None if s.is_double else central_cylinder(s)
    return HeightsReport(
        schema=schema_tag("heights"),
        n=s.n,
        tables=tables,
        central_cylinder=None if central is None else central.index,
        central_modulus=None if central is None else exact_number(central.modulus),
    )


def sine_ratio_report(alpha: Fraction, beta: Fraction) -> SineRatioReport:
    ratio = sine_ratio_rational(alpha, beta)
    return SineRatioReport(
        schema=schema_tag("sine-ratio"),
        alpha=str(alpha),
        beta=str(beta),
        ratio=None if ratio is None else str(ratio),
        rational=ratio is not None,
        same_field=sine_field_key(alpha.denominator) == sine_field_key(beta.denominator),
    )


def section4_report(
    report: Section4Report, rational_pairs: list[tuple[Fraction, Fraction, Fraction]]
) -> Section4Model:
    return Section4Model(
        schema=schema_tag("section4"),
        n_max=report.n_max,
        log_bound=report.log_bound,
        g_injective=report.g_injective,
        g_covers_evens=report.g_covers_evens,
        density_holds=report.density_holds,
        all_excluded=report.all_excluded,
        entries=[
            Section4EntryModel(
                n=e.n,
                status=e.status,
                reason=e.reason,
                nonzero_terms=e.nonzero_terms,
                density=str(e.density),
            )
            for e in report.entries
        ],
        rational_pairs=[(str(a), str(b), str(r)) for a, b, r in rational_pairs],
    )


def orbit_report(s: SurfaceDef, p: SurfacePoint, result: OrbitResult) -> OrbitReport:
    return OrbitReport(
        schema=schema_tag("orbit"),
        n=s.n,
        point=point_model(p),
        word_bound=result.word_bound,
        status=result.status.value,
        size=len(result.points),
        points=label_points(s, result.points),
        words=[str(result.words[q]) for q in result.points if q in result.words],
    )


def _certificate(c: PointCertificate) -> CertificateModel:
    return CertificateModel(
        point=point_model(c.point),
        verdict=c.verdict.value,
        evidence=c.evidence,
        segment=c.segment,
        parameter=None if c.parameter is None else str(c.parameter),
        cylinder=c.cylinder,
        height=c.height,
        orbit_size=c.orbit_size,
    )


def _configuration(cfg: ExclusionConfig) -> ExclusionModel:
    return ExclusionModel(
        segment=cfg.segment.index,
        line=cfg.segment.line,
        is_edge=cfg.segment.is_edge,
        twist=None if cfg.twist is None else str(cfg.twist),
        directions=cfg.directions,
        crossing=float(cfg.crossing),
        ratio=float(cfg.ratio),
        c1=cfg.c1.index,
        c2=cfg.c2.index,
        c3=cfg.c3.index,
        endpoints_rational=check_endpoint_heights(cfg),
    )


def classify_report(
    s: SurfaceDef,
    certificates: list[PointCertificate],
    configs: list[ExclusionConfig],
    word_bound: int,
    denominator_bound: int,
) -> ClassifyReport:
    counts: dict[str, int] = {}
    for c in certificates:
        counts[c.verdict.value] = counts.get(c.verdict.value, 0) + 1
    periodic = tuple(periodic_points(certificates))
    return ClassifyReport(
        schema=schema_tag("classify"),
        n=s.n,
        word_bound=word_bound,
        denominator_bound=denominator_bound,
        periodic=label_points(s, periodic),
        configurations=[_configuration(cfg) for cfg in configs],
        certificates=[_certificate(c) for c in certificates],
        counts=dict(sorted(counts.items())),
    )


def blocked_report(s: SurfaceDef, query: BlockingQuery) -> BlockedReport:
    return BlockedReport(
        schema=schema_tag("blocked"),
        n=s.n,
        p=point_model(query.p),
        q=point_model(query.q),
        verdict=query.verdict.value,
        reason=query.reason,
        blocking_set=label_points(s, query.blocking_set),
    )


def segments_report(
    s: SurfaceDef,
    query: BlockingQuery,
    segments: list[DevelopedSegment],
    radius: Fraction,
    root: int,
) -> SegmentsReport:
    """Segments from p to q, each tested against the blocking set of the pair.

    The blocking set is listed for every pair, blocked or not, so witness
    segments avoiding it can be shown for unblocked pairs.
    """
    blocking = blocking_set(s, query.p, query.q)
    return SegmentsReport(
        schema=schema_tag("segments"),
        n=s.n,
        p=point_model(query.p),
        q=point_model(query.q),
        radius=str(radius),
        root=root,
        verdict=query.verdict.value,
        segments=[
            SegmentModel(
                holonomy=seg.holonomy.shadow(),
                length=seg.length,
                crossings=len(seg.crossings),
                passes_through=label_points(s, seg.passes_through),
                avoids_blocking_set=seg.avoids(blocking),
            )
            for seg in segments
        ],
    )


def triangle_report(report: TriangleReport) -> TriangleModelReport:
    model = report.model
    preimages = model.vertex_preimages
    return TriangleModelReport(
        schema=schema_tag("triangle"),
        n=model.n,
        angles={name: str(angle) for name, angle in model.angles.items()},
        preimage_counts={name: len(points) for name, points in preimages.items()},
        blocked_pairs=list(report.blocked_pairs),
        verdicts=[
            PreimageVerdictModel(
                first=v.first,
                second=v.second,
                p=point_model(v.p),
                q=point_model(v.q),
                verdict=v.verdict.value,
            )
            for v in report.verdicts
        ],
    )
