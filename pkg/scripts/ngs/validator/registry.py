"""Check registry for verify-all.

Maps check names to functions. Surface checks run once per n; global
checks run once per suite.
"""

from __future__ import annotations

from collections.abc import Callable

from scripts.ngs.models.config import ComputeConfig
from scripts.ngs.surface.model import SurfaceDef
from scripts.ngs.validator import checks

SurfaceCheck = Callable[[SurfaceDef, ComputeConfig], checks.CheckOutcome]
GlobalCheck = Callable[[ComputeConfig], checks.CheckOutcome]


class UnknownCheckError(Exception):
    """Raised when a check name is not registered."""

    def __init__(self, name: str, message: str | None = None) -> None:
        """Initialize with the check name and optional custom message.

        Args:
            name: The name that could not be resolved.
            message: Optional custom error message.
        """
        self.name = name
        self.message = message or f"No check registered under name: {name}"
        super().__init__(self.message)


class CheckRegistry:
    """Registry of named invariant checks, in run order."""

    def __init__(self) -> None:
        """Initialize registry with the default invariant suite."""
        self._surface_checks: dict[str, SurfaceCheck] = {
            "genus": checks.check_genus,
            "gauss-bonnet": checks.check_gauss_bonnet,
            "involution": checks.check_involution,
            "inverse-involution": checks.check_inverse_involution,
            "translation-automorphisms": checks.check_translation_automorphisms,
            "determinants": checks.check_determinants,
            "action-composition": checks.check_action_composition,
            "heights": checks.check_heights,
            "area": checks.check_area,
            "height-ratios": checks.check_height_ratios,
            "central-modulus": checks.check_central_modulus,
            "twists": checks.check_twists,
            "cusp-transfer": checks.check_cusp_transfer,
            "orbits": checks.check_orbits,
            "exclusion": checks.check_exclusion,
            "samples": checks.check_samples,
            "blocking": checks.check_blocking,
            "segment-blocking": checks.check_segment_blocking,
            "triangle": checks.check_triangle,
        }
        self._global_checks: dict[str, GlobalCheck] = {
            "section4": checks.check_section4,
            "sine-sweep": checks.check_sine_sweep,
        }

    @property
    def surface_names(self) -> list[str]:
        return list(self._surface_checks)

    @property
    def global_names(self) -> list[str]:
        return list(self._global_checks)

    def surface_check(self, name: str) -> SurfaceCheck:
        """Look up a per-surface check.

        Raises:
            UnknownCheckError: If name is not a registered surface check.
        """
        try:
            return self._surface_checks[name]
        except KeyError as e:
            raise UnknownCheckError(name) from e

    def global_check(self, name: str) -> GlobalCheck:
        """Look up a suite-wide check.

        Raises:
            UnknownCheckError: If name is not a registered global check.
        """
        try:
            return self._global_checks[name]
        except KeyError as e:
            raise UnknownCheckError(name) from e

    def is_registered(self, name: str) -> bool:
        return name in self._surface_checks or name in self._global_checks


_default_registry = CheckRegistry()


def get_check(name: str) -> SurfaceCheck | GlobalCheck:
    """Resolve a check by name from the default registry.

    Raises:
        UnknownCheckError: If name is not registered.
    """
    if name in _default_registry.surface_names:
        return _default_registry.surface_check(name)
    return _default_registry.global_check(name)


def default_registry() -> CheckRegistry:
    return _default_registry
