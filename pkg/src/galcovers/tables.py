"""Published reference values for the eight families, transcribed verbatim.

These tables are the *targets* of verification and are never used to build
anything.  Affine coefficients are written as pairs ``(c0, c1)`` meaning
``c0 + c1 * v`` with ``v = y**n``; polynomial coefficient lists are
constant term first.  Linear factors ``(alpha, beta)`` stand for
``alpha*x - beta``.
"""

from __future__ import annotations

from fractions import Fraction as F

# factored displays: prefactor, numerator factors, Y-factors as (alpha, beta, exponent)
FACTORED = {
    "C2": (F(1, 2), [(1, 2), (2, 1)], [(1, 0, 1)]),
    "C3": (F(1, 2), [(1, 1), (1, -2), (2, -1)], [(1, 0, 1), (1, -1, 1)]),
    "C4": (F(1, 6), [(1, 2), (2, -1), (1, -3), (3, 1)], [(1, 0, 1), (1, 1, 1), (1, -1, 1)]),
    "C6": (F(1, 120), [(1, 3), (1, -4), (2, -1), (3, 2), (4, 5), (5, 1)],
           [(1, 0, 1), (1, 1, 1), (1, -1, 1), (1, 2, 1), (2, 1, 1)]),
    "D2": (F(1, 6), [(1, 2), (2, -1), (1, 3), (3, -1)], [(1, 0, 1), (1, 1, 1), (1, -1, 1)]),
    "D3": (F(1, 36), [(1, 2), (2, 1), (1, -3), (3, -1), (2, -3), (3, -2)],
           [(1, 0, 2), (1, -1, 2)]),
    "D4": (F(1, 36), [(1, 2), (2, 1), (1, -2), (2, -1), (1, 3), (3, 1), (1, -3), (3, -1)],
           [(1, 0, 2), (1, 1, 2), (1, -1, 2)]),
    "D6": (F(1), [(1, -2), (2, -1), (1, 3), (3, 1), (1, -4), (4, -1), (1, 5), (5, 1),
                  (2, 3), (3, 2), (4, 5), (5, 4)],
           [(1, 0, 2), (1, 1, 2), (1, -1, 2), (1, 2, 2), (2, 1, 2)]),
}

# expanded monic displays (D6 is only shown in factored form)
EXPANDED = {
    "C2": [(1, 0), (F(-5, 2), F(1, 2)), (1, 0)],
    "C3": [(-1, 0), (F(-3, 2), F(1, 2)), (F(3, 2), F(1, 2)), (1, 0)],
    "C4": [(1, 0), (F(-7, 6), F(-1, 6)), (-6, 0), (F(7, 6), F(1, 6)), (1, 0)],
    "C6": [(1, 0), (F(-323, 24), F(-1, 24)), (F(-37, 60), F(1, 60)), (20, 0),
           (F(-323, 24), F(-1, 24)), (F(-37, 60), F(1, 60)), (1, 0)],
    "D2": [(1, 0), (F(25, 6), F(-1, 6)), (2, 0), (F(-25, 6), F(1, 6)), (1, 0)],
    "D3": [(1, 0), (3, 0), (F(-127, 36), F(1, 36)), (F(-217, 18), F(1, 18)),
           (F(-127, 36), F(1, 36)), (3, 0), (1, 0)],
    "D4": [(1, 0), (0, 0), (F(-481, 36), F(1, 36)), (0, 0), (F(733, 18), F(-1, 18)),
           (0, 0), (F(-481, 36), F(1, 36)), (0, 0), (1, 0)],
}

# Known misprints in the expanded displays: (case, power of x) -> value the
# factored display actually produces.  The C6 expanded line prints the x^2
# and x coefficients with the denominators 60 and 24 exchanged; the factored
# line on the same display is self-consistent with the congruence table.
EXPANDED_ERRATA = {
    ("C6", 2): (F(-37, 24), F(1, 24)),
    ("C6", 1): (F(-323, 60), F(-1, 60)),
}

ORBITS = {
    ("C3", "0"): ["0", "-1", "inf"],
    ("C3", "1"): ["1", "-1/2", "-2"],
    ("C4", "0"): ["0", "-1", "inf", "1"],
    ("C4", "2"): ["2", "1/3", "-1/2", "-3"],
    ("C6", "0"): ["0", "-1", "inf", "1", "2", "1/2"],
    ("C6", "3"): ["3", "5/4", "2/3", "1/5", "-1/2", "-4"],
    ("D3", "0"): ["0", "-1", "inf"],
    ("D3", "2"): ["2", "-1/3", "-3/2", "1/2", "-3", "-2/3"],
    ("D4", "0"): ["0", "-1", "inf", "1"],
    ("D4", "2"): ["2", "1/3", "-1/2", "-3", "1/2", "3", "-2", "-1/3"],
    ("D6", "0"): ["0", "-1", "inf", "2", "1", "1/2"],
    ("D6", "-2"): ["-2", "5", "3/2", "4/5", "1/3", "-1/4",
                   "-1/2", "1/5", "2/3", "5/4", "3", "-4"],
}

# prod over G of (sigma(z) + 1), i.e. (zeta + 1)^#G
ORBIT_CONSTANTS = {"C3": -1, "C4": -4, "C6": -27, "D3": 1, "D4": 16, "D6": 729}

# declared rank s of the Picard subgroup, and the claimed class group bound
PICARD_RANK = {"C2": 2, "C3": 4, "C4": 6, "C6": 10, "D2": 6, "D3": 7, "D4": 10, "D6": 16}
RANK_BOUND = {"C2": 1, "C3": 2, "C4": 3, "C6": 5, "D2": 3, "D3": 5, "D4": 7, "D6": 11}
SIGNATURE = {
    "C2": "real", "C3": "real", "C4": "real", "C6": "real",
    "D2": "real", "D3": "imaginary", "D4": "imaginary", "D6": "imaginary",
}

# discriminant of C_2P as a polynomial in v: (v - 9)(v - 1)/4, constant first
C2_DISCRIMINANT = [F(9, 4), F(-10, 4), F(1, 4)]

# discriminant exponents: disc = O(y^{l n})
DISC_EXPONENT = {"C2": 2, "C3": 4, "C4": 6, "C6": 10}


def _q_poly(*cs):
    return tuple(F(c) for c in cs)


# minimal polynomial of the last function (x+1)^2/(t+2), coefficients of T^k
# (k = 0..deg) as polynomials in q, constant term first.
SPECIAL_MINPOLY = {
    "C4": {
        "q_offset": 5, "q_modulus": 12,
        "coeffs": [
            _q_poly(1),
            _q_poly(-8, -6, -2),      # -2(q^2 + 3q + 4)
            _q_poly(19, 10, 5),       # 5q^2 + 10q + 19
            _q_poly(-8, -2, -2),      # -2(q^2 + q + 4)
            _q_poly(1),
        ],
    },
    "C6": {
        "q_offset": 397, "q_modulus": 1080,
        "coeffs": [
            _q_poly(1),
            _q_poly(-48, -126, -108),     # -6(18q^2 + 21q + 8)
            _q_poly(210, 630, 585),       # 15(39q^2 + 42q + 14)
            _q_poly(-302, -966, -966),    # -2(483q^2 + 483q + 151)
            _q_poly(165, 540, 585),       # 15(39q^2 + 36q + 11)
            _q_poly(-30, -90, -108),      # -6(18q^2 + 15q + 5)
            _q_poly(1),
        ],
    },
}

# Known misprint in the C4 formula: the coefficient of T is printed as
# -2(q^2 + 3q + 4); the characteristic polynomial has -2(q^2 + 3q + 6).
SPECIAL_MINPOLY_ERRATA = {
    ("C4", 1): _q_poly(-12, -6, -2),
}

# subfield polynomials: monic expanded form (affine pairs) and the factored
# identity  prefactor * (prod linear + v * extra)
SUBFIELDS = {
    "D2": [
        {"expanded": [(4, 0), (F(-25, 6), F(1, 6)), (1, 0)],
         "prefactor": F(1, 6), "factors": [(2, 3), (3, 8)], "y_part": [0, 1]},
        {"expanded": [(F(-25, 6), F(1, 6)), (F(-25, 6), F(1, 6)), (1, 0)],
         "prefactor": F(1, 6), "factors": [(1, 5), (6, -5)], "y_part": [1, 1]},
        {"expanded": [(F(25, 6), F(-1, 6)), (F(-25, 6), F(1, 6)), (1, 0)],
         "prefactor": F(1, 6), "factors": [(2, 5), (3, 5)], "y_part": [-1, 1]},
    ],
    "D3": [
        {"expanded": [(F(-19, 36), F(1, 36)), (3, 0), (1, 0)],
         "prefactor": F(1, 36), "factors": [(6, 1), (6, -19)], "y_part": [1]},
        {"expanded": [(F(-325, 18), F(1, 18)), (F(-235, 36), F(1, 36)), (3, 0), (1, 0)],
         "prefactor": F(1, 36), "factors": [(2, 5), (3, -10), (6, -13)], "y_part": [2, 1]},
    ],
}

# worked numerical examples
INTRO_SEXTIC = [1, 3, 24829767, 49659529, 24829767, 3, 1]
INTRO_RANK = {"n": 42, "rank": 5}
D3_EXAMPLE = {"y": 199, "n": 5,
              "poly": [1, 3, 8668877802, 17337755599, 8668877802, 3, 1],
              "rank": 6, "quadratic_rank": 2, "cubic_rank": 2}
C2_EXAMPLE = {"y": 7, "n": 5, "poly": [1, 8401, 1]}
