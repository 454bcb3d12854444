"""
Output formatting utilities for the facility location toolkit.

This module renders exact results (fractions, loads, verdicts, reports)
as the line-oriented text the CLI prints, plus human-facing messages.
"""
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .constants import (
    BEST_RESPONSE_KEYWORD,
    DEVIATION_KEYWORD,
    LOAD_KEYWORD,
    MSG_ERROR_PREFIX,
    POTENTIAL_SEPARATOR,
    WELFARE_KEYWORD,
)


def format_rational(value: Fraction) -> str:
    """Render a fraction as ``num/den``, always with both parts."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


class OutputFormatter:
    """Formats results and messages."""

    @staticmethod
    def format_loads(loads: Iterable[Fraction]) -> str:
        """
        Format a load vector as ``l <facility> <num>/<den>`` lines.

        Args:
            loads: Loads in facility order

        Returns:
            Newline-joined load lines (empty string for no facilities)
        """
        return "\n".join(
            f"{LOAD_KEYWORD} {j} {format_rational(load)}"
            for j, load in enumerate(loads)
        )

    @staticmethod
    def format_potential(potential: Sequence[Fraction]) -> str:
        return POTENTIAL_SEPARATOR.join(format_rational(x) for x in potential)

    @staticmethod
    def format_best_response(facility: int, location: int, load: Fraction) -> str:
        return f"{BEST_RESPONSE_KEYWORD} {facility} {location} {format_rational(load)}"

    @staticmethod
    def format_welfare(welfare: int) -> str:
        return f"{WELFARE_KEYWORD} {welfare}"

    @staticmethod
    def format_verdict(name: str, holds: bool) -> str:
        return f"{name} {'true' if holds else 'false'}"

    @staticmethod
    def format_deviation(facility: int, location: int, load: Fraction) -> str:
        return f"{DEVIATION_KEYWORD} {facility} {location} {format_rational(load)}"

    @staticmethod
    def format_comment(label: str, value: object) -> str:
        if isinstance(value, Fraction):
            value = format_rational(value)
        return f"# {label} {value}"

    @staticmethod
    def format_error(error: str, context: Optional[str] = None) -> str:
        """
        Format an error message.

        Args:
            error: Error message
            context: Optional context information

        Returns:
            Formatted error message
        """
        if context:
            return f"{MSG_ERROR_PREFIX}错误 / Error ({context}): {error}"
        return f"{MSG_ERROR_PREFIX}错误 / Error: {error}"

    @staticmethod
    def format_success(message: str, count: Optional[int] = None) -> str:
        """
        Format a success message.

        Args:
            message: Success message
            count: Optional count of results

        Returns:
            Formatted success message
        """
        if count is not None:
            return f"✅ {message} ({count} results)"
        return f"✅ {message}"

    @staticmethod
    def format_poa_report(report) -> str:
        """
        Format a PoA report.

        Args:
            report: PoaReport from the PoA workflow

        Returns:
            ``opt``, one ``spe`` line per equilibrium, then ``poa`` and ``pos`` lines
        """
        optimum = report.optimum
        lines = [
            f"opt {' '.join(str(v) for v in optimum.locations)} welfare {optimum.welfare} "
            f"{'exact' if report.optimum_exact else 'greedy'}"
        ]
        for locations, welfare in report.equilibria:
            lines.append(f"spe {' '.join(str(v) for v in locations)} welfare {welfare}")
        lines.append(f"poa {format_rational(report.poa)}")
        lines.append(f"pos {format_rational(report.pos)}")
        lines.append(f"# enumeration {'exhaustive' if report.enumeration_exhaustive else 'partial'}")
        return "\n".join(lines)
