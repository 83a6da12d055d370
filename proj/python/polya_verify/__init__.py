"""Verification toolkit for F = lambda1 * T / |D| on triangles, rectangles and sectors."""

import json

from ._core import (
    PolyaError,
    SeriesValue,
    SpectralResult,
    bessel_first_zero,
    case_function,
    case_function_exact,
    case_ids,
    certify,
    enclose,
    equilateral_exact,
    g_remark,
    rect_center_torsion,
    rect_F,
    rect_lambda1,
    rect_torsion,
    replay_case,
    spectral_rectangle,
    spectral_triangle,
    sweep_csv,
)

__all__ = [
    "PolyaError",
    "SeriesValue",
    "SpectralResult",
    "bessel_first_zero",
    "case_function",
    "case_function_exact",
    "case_ids",
    "certify",
    "enclose",
    "equilateral_exact",
    "g_remark",
    "rect_center_torsion",
    "rect_F",
    "rect_lambda1",
    "rect_torsion",
    "replay",
    "replay_case",
    "spectral_rectangle",
    "spectral_triangle",
    "sweep_csv",
]


def replay(case_id, **options):
    """Replay one case and return the report as a dict."""
    return json.loads(replay_case(case_id, **options))
