"""Exact enumeration of directed lattice paths.

Thin convenience layer over the compiled extension. All exact values
cross the boundary as decimal strings; helpers here convert them to
``int`` / ``fractions.Fraction``.
"""

from fractions import Fraction

from _latwalk import (  # noqa: F401
    absorption_walk_count,
    asymptotic,
    basketball_excursion,
    basketball_g01,
    basketball_g02,
    count,
    g01_recurrence,
    general_positive_count,
    general_positive_meander_count,
    increasing_unary_binary,
    meander_total,
    mnomial,
    mock_mnomial,
    series,
    verify_fixtures,
)

__all__ = [
    "absorption_walk_count",
    "asymptotic",
    "basketball_excursion",
    "basketball_g01",
    "basketball_g02",
    "count",
    "count_exact",
    "g01_recurrence",
    "general_positive_count",
    "general_positive_meander_count",
    "increasing_unary_binary",
    "meander_total",
    "mnomial",
    "mock_mnomial",
    "series",
    "series_exact",
    "verify_fixtures",
]


def count_exact(*args, **kwargs) -> Fraction:
    """Like :func:`count`, returning a :class:`fractions.Fraction`."""
    return Fraction(count(*args, **kwargs))


def series_exact(*args, **kwargs) -> list:
    """Like :func:`series`, returning ``Fraction`` coefficients."""
    return [Fraction(c) for c in series(*args, **kwargs)]
