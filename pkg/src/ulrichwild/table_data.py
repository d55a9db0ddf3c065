"""Surfaces of degree at most 8: the printed classification table.

Numeric columns are kept exactly as printed, including values that the
verification layer later flags.  ``recipes`` lists one construction per
admissible value of the ruled-surface invariant ``e`` (or a single one);
rows described only abstractly (hypersurfaces, complete intersections,
proper elliptic surfaces, K3 surfaces) have none.
"""

from __future__ import annotations

from .recipes import curve_times_line as _cxp1
from .recipes import plane_blowup as _p2
from .recipes import ruled_surface as _ruled

NEG_INF = "-inf"

WITH_LB = "rank2_with_line_bundles"
NO_LB = "rank2_no_line_bundles"
RANK2 = "rank2"
HIGH = "high_rank_generic_small"
NONE = "no_results"

EXISTS = "2, exists line bundles"
NO_LINE = "2, no line bundles"


def _hirz(e, y):
    return _ruled(0, e, 1, y)


# (id, model, recipes, d, kappa, p_g, q, K2, hK, N, status, status text, ci degrees)
ROWS = [
    ("I", "X_1 = P^2, O(1)", [_p2(1)],
     1, NEG_INF, 0, 0, 9, -3, 2, WITH_LB, EXISTS, None),
    ("II", "X_2 = P^1 x P^1, O(1,1)", [_cxp1(0, 1, 1)],
     2, NEG_INF, 0, 0, 8, -4, 3, WITH_LB, EXISTS, (2,)),
    ("III", "X_3 = Bl_6 P^2, 3L - e_1 - ... - e_6", [_p2(3, *[1] * 6)],
     3, NEG_INF, 0, 0, 3, -3, 3, WITH_LB, EXISTS, (3,)),
    ("IV", "F_1, xi + 2f", [_hirz(1, 2)],
     3, NEG_INF, 0, 0, 8, -5, 4, WITH_LB, EXISTS, None),
    ("V", "X_{2,2} = Bl_5 P^2, 3L - e_1 - ... - e_5", [_p2(3, *[1] * 5)],
     4, NEG_INF, 0, 0, 4, -4, 4, WITH_LB, EXISTS, (2, 2)),
    ("VI", "F_e (e = 0, 2), xi + (e+4)/2 f",
     [_hirz(e, (e + 4) // 2) for e in (0, 2)],
     4, NEG_INF, 0, 0, 8, -6, 5, WITH_LB, EXISTS, None),
    ("VII", "P^2, O(2)", [_p2(2)],
     4, NEG_INF, 0, 0, 9, -6, 5, NO_LB, NO_LINE, None),
    ("VIII", "X_4, O(1)", [],
     4, 0, 1, 0, 0, 0, 3, RANK2, "2", (4,)),
    ("IX", "Bl_8 P^2, 4L - 2e_1 - e_2 - ... - e_8", [_p2(4, 2, *[1] * 7)],
     5, NEG_INF, 0, 0, 2, -3, 4, WITH_LB, EXISTS, None),
    ("X", "Bl_4 P^2, 3L - e_1 - ... - e_4", [_p2(3, *[1] * 4)],
     5, NEG_INF, 0, 0, 5, -5, 5, WITH_LB, EXISTS, None),
    ("XI", "F_e (e = 1, 3), xi + (e+5)/2 f",
     [_hirz(e, (e + 5) // 2) for e in (1, 3)],
     5, NEG_INF, 0, 0, 8, -7, 6, WITH_LB, EXISTS, None),
    ("XII", "elliptic ruled surface, e = -1, xi + 2f", [_ruled(1, -1, 1, 2)],
     5, NEG_INF, 0, 1, 0, -5, 6, WITH_LB, EXISTS, None),
    ("XIII", "X_5, O(1)", [],
     5, 2, 4, 0, 5, 5, 3, HIGH, ">>0, generically <=2", (5,)),
    ("XIV", "Bl_10 P^2, 4L - e_1 - ... - e_10", [_p2(4, *[1] * 10)],
     6, NEG_INF, 0, 0, -1, -2, 4, WITH_LB, EXISTS, None),
    ("XV", "Bl_3 P^2, 3L - e_1 - e_2 - e_3", [_p2(3, 1, 1, 1)],
     6, NEG_INF, 0, 0, 6, -6, 6, WITH_LB, EXISTS, None),
    ("XVI", "F_e (e = 0, 2, 4), xi + (e+6)/2 f",
     [_hirz(e, (e + 6) // 2) for e in (0, 2, 4)],
     6, NEG_INF, 0, 0, 8, -8, 7, WITH_LB, EXISTS, None),
    ("XVII", "elliptic ruled surface, e = 0, xi + 3f", [_ruled(1, 0, 1, 3)],
     6, NEG_INF, 0, 1, 0, -6, 5, WITH_LB, EXISTS, None),
    ("XVIII", "X_{2,3}, O(1)", [],
     6, 0, 1, 0, 0, 0, 4, RANK2, "2", (2, 3)),
    ("XIX", "X_6, O(1)", [],
     6, 2, 10, 0, 24, 12, 3, HIGH, ">>0, generically <=2", (6,)),
    ("XX", "Bl_11 P^2, 6L - 2(e_1 + ... + e_6) - e_7 - ... - e_11",
     [_p2(6, *[2] * 6, *[1] * 5)],
     7, NEG_INF, 0, 0, -2, -1, 4, RANK2, "2", None),
    ("XXI", "Bl_8 P^2, 6L - 2(e_1 + ... + e_7) - e_8", [_p2(6, *[2] * 7, 1)],
     7, NEG_INF, 0, 0, 1, -3, 5, RANK2, "2", None),
    ("XXII", "Bl_9 P^2, 4L - e_1 - ... - e_9", [_p2(4, *[1] * 9)],
     7, NEG_INF, 0, 0, 0, -3, 5, RANK2, "2", None),
    ("XXIII", "Bl_9 F_e (e = 0..3), 2xi + (4+e)f - e_1 - ... - e_9",
     [_ruled(0, e, 2, 4 + e, t=9) for e in range(4)],
     7, NEG_INF, 0, 0, -1, -3, 5, RANK2, "2", None),
    ("XXIV", "Bl_6 P^2, 4L - 2e_1 - e_2 - ... - e_6", [_p2(4, 2, *[1] * 5)],
     7, NEG_INF, 0, 0, 3, -5, 6, RANK2, "2", None),
    ("XXV", "Bl_2 P^2, 3L - e_1 - e_2", [_p2(3, 1, 1)],
     7, NEG_INF, 0, 0, 7, -7, 7, WITH_LB, EXISTS, None),
    ("XXVI", "F_e (e = 1, 3, 5), xi + (e+7)/2 f",
     [_hirz(e, (e + 7) // 2) for e in (1, 3, 5)],
     7, NEG_INF, 0, 0, 8, -9, 8, WITH_LB, EXISTS, None),
    ("XXVII", "elliptic ruled surface, e = -1, 1, xi + (4 + ceil(e/2))f",
     [_ruled(1, e, 1, 4 - (-e // 2)) for e in (-1, 1)],
     7, NEG_INF, 0, 1, 0, -7, 8, WITH_LB, EXISTS, None),
    ("XXVIII", "Bl_1 X_{2,2,2}, h_X - e_1", [],
     7, 0, 1, 0, -1, 1, 4, RANK2, "2", None),
    ("XXIX", "proper elliptic surface, O(1)", [],
     7, 1, 2, 0, 0, 3, 4, NONE, "no results", None),
    ("XXX", "X_7", [],
     7, 2, 20, 0, 63, 21, 3, HIGH, ">>0, generically 2", (7,)),
    ("XXXI", "Bl_16 P^2, 6L - 2(e_1 + ... + e_4) - e_5 - ... - e_16",
     [_p2(6, *[2] * 4, *[1] * 12)],
     8, NEG_INF, 0, 0, -7, 2, 4, RANK2, "2", None),
    ("XXXII", "Bl_12 F_e (e = 0..4), 2xi + (5+e)f - e_1 - ... - e_12",
     [_ruled(0, e, 2, 5 + e, t=12) for e in range(5)],
     8, NEG_INF, 0, 0, -4, -2, 5, RANK2, "2", None),
    ("XXXIII", "Bl_10 P^1 x P^1, (3,3) - e_1 - ... - e_10",
     [_cxp1(0, 3, 3, t=10)],
     8, NEG_INF, 0, 0, -2, -2, 5, RANK2, "2", None),
    ("XXXIV", "Bl_11 P^2, 7L - 2(e_1 + ... + e_10) - e_11",
     [_p2(7, *[2] * 10, 1)],
     8, NEG_INF, 0, 0, -2, 0, 4, RANK2, "2", None),
    ("XXXV", "Bl_10 P^2, 6L - 2(e_1 + ... + e_6) - e_7 - ... - e_10",
     [_p2(6, *[2] * 6, *[1] * 4)],
     8, NEG_INF, 0, 0, -1, -2, 5, RANK2, "2", None),
    ("XXXVI", "Bl_8 F_e (e = 0..3), 2xi + (4+e)f - e_1 - ... - e_8",
     [_ruled(0, e, 2, 4 + e, t=8) for e in range(4)],
     8, NEG_INF, 0, 0, 0, -4, 6, RANK2, "2", None),
    ("XXXVII", "Bl_8 P^2, 4L - e_1 - ... - e_8", [_p2(4, *[1] * 8)],
     8, NEG_INF, 0, 0, 1, -4, 6, RANK2, "2", None),
    ("XXXVIII", "Bl_7 P^2, 6L - 2(e_1 + ... + e_7)", [_p2(6, *[2] * 7)],
     8, NEG_INF, 0, 0, 2, -4, 6, RANK2, "2", None),
    ("XXXIX", "Bl_5 P^2, 4L - 2e_1 - e_2 - ... - e_5", [_p2(4, 2, 1, 1, 1, 1)],
     8, NEG_INF, 0, 0, 4, -6, 7, RANK2, "2", None),
    ("XL", "F_e (e = 0, 2, 4, 6), xi + (e+8)/2 f",
     [_hirz(e, (e + 8) // 2) for e in (0, 2, 4, 6)],
     8, NEG_INF, 0, 0, 8, -10, 9, WITH_LB, EXISTS, None),
    ("XLI", "Bl_1 P^2, 3L - e_1", [_p2(3, 1)],
     8, NEG_INF, 0, 0, 8, -8, 8, NO_LB, NO_LINE, None),
    ("XLII", "P^1 x P^1, O(2,2)", [_cxp1(0, 2, 2)],
     8, NEG_INF, 0, 0, 8, -8, 8, WITH_LB, EXISTS, None),
    ("XLIII", "elliptic ruled surface, e = 0, 2, xi + (4 + e/2)f",
     [_ruled(1, e, 1, 4 + e // 2) for e in (0, 2)],
     8, NEG_INF, 0, 1, 0, -8, 7, WITH_LB, EXISTS, None),
    ("XLIV", "Bl_8 of elliptic ruled surface (e = -1, 1), 2xi + (4+e)f - e_1 - ... - e_8",
     [_ruled(1, e, 2, 4 + e, t=8) for e in (-1, 1)],
     8, NEG_INF, 0, 1, -8, 0, 4, RANK2, "2", None),
    ("XLV", "elliptic ruled surface, e = -1, 2xi + f", [_ruled(1, -1, 2, 1)],
     8, NEG_INF, 0, 1, 0, 4, 5, NO_LB, NO_LINE, None),
    ("XLVI", "scroll over a genus 2 curve, e = -2, xi + 3f", [_ruled(2, -2, 1, 3)],
     8, NEG_INF, 0, 2, -8, -6, 5, WITH_LB, EXISTS, None),
    ("XLVII", "C x P^1, C plane quartic, O_C(1) x O(1)", [_cxp1(3, 4, 1)],
     8, NEG_INF, 0, 3, -16, -4, 5, WITH_LB, EXISTS, None),
    ("XLVIII", "Bl_1 X, X K3 surface in P^7, h_X - 2e_1", [],
     8, 0, 1, 0, -1, 2, 4, RANK2, "2", None),
    ("IL", "K3 surface, O(1)", [],
     8, 0, 1, 0, 0, 0, 5, RANK2, "2", None),
    ("L", "proper elliptic surface, O(1)", [],
     8, 1, 2, 0, 0, 4, 4, NONE, "no results", None),
    ("LI", "X_{2,4}, O(1)", [],
     8, 2, 5, 0, 8, 8, 4, HIGH, ">>0, generically <=4", (2, 4)),
    ("LII", "X_8, O(1)", [],
     8, 2, 35, 0, 128, 32, 3, HIGH, ">>0, generically 2", (8,)),
]
