"""Pydantic schemas for configuration and JSON reports."""

from scripts.ngs.models.base import (
    BaseSurfaceModel,
    RationalStr,
    format_rational,
    parse_rational,
    schema_tag,
)
from scripts.ngs.models.config import COMMANDS, CommandConfig, ComputeConfig
from scripts.ngs.models.reports import (
    BlockedReport,
    CertificateModel,
    CheckModel,
    ClassifyReport,
    CuspReductionModel,
    CylinderModel,
    CylindersReport,
    ExactNumber,
    ExactVector,
    ExclusionModel,
    HeightsReport,
    OrbitReport,
    PointModel,
    ReportModel,
    Section4Model,
    SegmentsReport,
    SineRatioReport,
    SurfaceReport,
    TriangleModelReport,
    VerifyReport,
)

__all__ = [
    "COMMANDS",
    "BaseSurfaceModel",
    "BlockedReport",
    "CertificateModel",
    "CheckModel",
    "ClassifyReport",
    "CommandConfig",
    "ComputeConfig",
    "CuspReductionModel",
    "CylinderModel",
    "CylindersReport",
    "ExactNumber",
    "ExactVector",
    "ExclusionModel",
    "HeightsReport",
    "OrbitReport",
    "PointModel",
    "RationalStr",
    "ReportModel",
    "Section4Model",
    "SegmentsReport",
    "SineRatioReport",
    "SurfaceReport",
    "TriangleModelReport",
    "VerifyReport",
    "format_rational",
    "parse_rational",
    "schema_tag",
]
