"""Polynomials, variable sets and target monomials for the reproduced claims.

Subscripted symbols are flattened: w_{21} is ``w21``, x_{k+1,n} is built by
``var_name``.  All text parses with ``charp.dsl.parse_poly``.
"""

W_VARS = [f"w{i}{j}" for i in (1, 2, 3) for j in (1, 2, 3)]
Z_VARS = [f"z{i}{j}" for i in (1, 2, 3) for j in (1, 2, 3)]

# --- the ring T = k[W, Z]/(f1, f2, f3, f4) ----------------------------------

T_GENERATORS = [
    "w21*z12 - w12*z21 + w23*z32 - w32*z23",
    "w22*z21 - w21*z22 + w23*z31 - w31*z23 + w21*z11 - w11*z21",
    "w13*z32 - w32*z13 - w22*z12 + w12*z22 - w12*z11 + w11*z12",
    "w12*z21 - w21*z12 + w13*z31 - w31*z13",
]
# f1..f4 are these entries of WZ - ZW
T_COMMUTATOR_POSITIONS = [(2, 2), (2, 1), (1, 2), (1, 1)]
T_HSOP = (
    "w11 w21 w23 w32 w33 z11 z13 z22 z32 z33".split()
    + ["w12 - z21", "w13 - z31", "w22 - z12", "w31 - z23"]
)
T_HSOP_RESIDUAL_VARS = ("w12", "w13", "w22", "w31")
T_HSOP_RESIDUAL = ["w12^2", "w22*w12 - w31^2", "w22^2", "w13^2"]

T_FEDDER_ZEROED = "w11 w21 w23 w32 w33 z11 z13 z22 z32 z33".split()
T_FEDDER_QUOTIENT = ["w12*z21", "-w22*z21 + w31*z23", "w22*z12", "w13*z31"]
T_FEDDER_TARGET = "w12*w13*w22*w31*z12*z21*z23*z31"

T_JACOBIAN_VARS = ["w31", "w32", "z31", "z32"]
T_JACOBIAN_MATRIX = [
    ["0", "-z23", "0", "-z13"],
    ["-z23", "0", "-z13", "0"],
    ["0", "w23", "0", "w13"],
    ["w23", "0", "w13", "0"],
]
T_TEST_ELEMENT = "w23*z13 - w13*z23"

T_REGSEQ = (
    "w11 w12 w31 w33 z11 z21 z32 z33".split()
    + ["w13 - z31", "w21 - z22", "w23 - z13", "w32 - z23", "w13 + w22 + z12"]
)
T_REGSEQ_RESIDUAL_VARS = ("w13", "w21", "w22", "w23", "w32")
T_G = {
    "g": "w23^2 - w13*w32",
    "g1": "w32^2 + w13*w21 + w21*w22",
    "g2": "w21^2 - w13*w23",
    "g3": "w22^2 + w13*w22 - w23*w32",
    "g4": "w13^2 + w13*w21 + w21*w22",
}
# images of (f, f1, f2, f3, f4) under the regular-sequence substitution
T_REGSEQ_IMAGE_NAMES = ["g", "g1", "g2", "g3", "g4"]
# w21^4 = sum of cofactor * generator
T_W21_COFACTORS = [
    ("w21*w23 + w23^2 - w13*w32", "g1"),
    ("w21^2 - w22*w23", "g2"),
    ("-w23^2 + w13*w32 + w21*w32", "g3"),
    ("-w23^2 + w13*w32 - w22*w32", "g4"),
    ("w13^2 + w22^2 - w23*w32 - w32^2", "g"),
]

T_WITNESS_ZEROED = "w11 w21 w31 w33 z11 z12 z32 z33".split()
T_WITNESS_PREFACTOR = ("w23*z13", "p-2")
T_WITNESS_TARGET = "w12*w13*w22*w23*w32*z13*z21*z22*z23*z31"

# --- A3 -----------------------------------------------------------------------

A3_GENERATORS = {
    (1, 1): "x12*y21 - x21*y12 + x13*y31 - x31*y13",
    (2, 2): "x21*y12 - x12*y21 + x23*y32 - x32*y23",
    (3, 1): "x32*y21 - x21*y32 + x31*y11 - x11*y31 - x31*y33 + x33*y31",
    (1, 3): "x12*y23 - x23*y12 + x11*y13 - x13*y11 + x13*y33 - x33*y13",
}
A3_TEST_ELEMENT = "x13*y23*(x13*y31 - x31*y13)"
A3_JACOBIAN_VARS_DISPLAYED = ["x11", "x32", "y11", "y21"]
A3_JACOBIAN_VARS = ["x11", "x32", "y11", "y31"]
A3_HSOP = (
    "x12 x22 x31 x33 y11 y22 y33".split()
    + ["x11 - y13", "x13 - y23", "x13 - y31", "x21 - y12", "x23 - y32", "x32 - y21"]
)
A3_HSOP_RESIDUAL_VARS = ("x11", "x13", "x21", "x23", "x32")
A3_HSOP_RESIDUAL = [
    "x13^2 - x21^2",
    "x21^2 + x23^2 - x13*x32",
    "-x11*x13 - x21*x23 + x32^2",
    "x11^2 - x21*x23",
    "x13^4",
]
A3_WITNESS_ZEROED = "x12 x22 x31 x33 y11 y22 y33".split()
A3_WITNESS_PREFACTORS = [("x13", "p^2-3"), ("y23*y31", "p^2-2")]
A3_WITNESS_TARGET = "x11*x13*x21*x23*x32*y12*y13*y21*y23*y31*y32"

# --- A4 -----------------------------------------------------------------------

A4_GENERATORS = {
    (1, 1): "x12*y21 - x21*y12 + x13*y31 - x31*y13 + x14*y41 - x41*y14",
    (2, 2): "x21*y12 - x12*y21 + x23*y32 - x32*y23 + x24*y42 - x42*y24",
    (3, 3): "x31*y13 - x13*y31 - x23*y32 + x32*y23 + x34*y43 - x43*y34",
    (4, 1): "x41*y11 - x11*y41 - x21*y42 + x42*y21 - x31*y43 + x43*y31 - x41*y44 + x44*y41",
    (3, 2): "x31*y12 - x12*y31 - x22*y32 + x32*y22 - x32*y33 + x33*y32 + x34*y42 - x42*y34",
    (2, 3): "x21*y13 - x13*y21 + x22*y23 - x23*y22 + x23*y33 - x33*y23 + x24*y43 - x43*y24",
    (1, 4): "x11*y14 - x14*y11 + x12*y24 - x24*y12 + x13*y34 - x34*y13 + x14*y44 - x44*y14",
}
A4_TEST_ELEMENT = "x12*x13*y24*(x14*y41 - x41*y14)*(x23*y32 - x32*y23)"
A4_JACOBIAN_VARS = ["x11", "x22", "x42", "y11", "y21", "y22", "y31"]
A4_HSOP = (
    "x31 x32 x33 x41 x44 y11 y13 y21 y22 y33 y44".split()
    + ["x12 - x13", "x12 - x14", "x12 - x23",
       "x11 - y14", "x12 - y24", "x12 - y32", "x12 - y41",
       "x21 - y12", "x22 - y23", "x24 - y42",
       "x34 - y43", "x42 - y34", "x43 - y31"]
)
A4_HSOP_RESIDUAL_VARS = ("x11", "x12", "x21", "x22", "x24", "x34", "x42", "x43")
A4_HSOP_RESIDUAL = [
    "x12^2 - x21^2 + x12*x43",
    "x12^2 + x21^2 + x24^2 - x12*x42",
    "-x12^2 + x34^2 - x12*x43 - x42*x43",
    "-x11*x12 - x21*x24 + x43^2",
    "-x12*x22 + x24*x34 - x42^2 - x12*x43",
    "x22^2 + x24*x34 - x12*x43",
    "x11^2 + x12^2 - x21*x24 + x12*x42",
    "x12^7",
]
A4_WITNESS_ZEROED = "x11 x22 x24 x33 x44 y31 y32 y33 y41 y43 y44".split()
A4_WITNESS_PREFACTOR = ("x12*x13*x32*x41*y14*y23*y24", "p-2")
A4_WITNESS_TARGET = ("x12*x13*x14*x21*x23*x31*x32*x34*x41*x42*x43"
                     "*y11*y12*y13*y14*y21*y22*y23*y24*y34*y42")

# --- T' as displayed, with row indices a=k, b=k+1 and last index n ---------
# Entries are (coefficient, x-position, y-position) in terms of symbolic
# indices "a", "b", "n".  The third generator's first-slot typo x_{k+1,k+1)}
# is read as x_{k+1,k+1}.

T_PRIME_DISPLAYED = [
    [(1, "bn", "nb"), (-1, "nb", "bn"), (1, "ba", "ab"), (-1, "ab", "ba")],
    [(1, "bn", "na"), (-1, "na", "bn"), (1, "bb", "ba"), (-1, "ba", "bb"), (1, "ba", "aa"), (-1, "aa", "ba")],
    [(1, "an", "nb"), (-1, "nb", "an"), (-1, "bb", "ab"), (1, "ab", "bb"), (-1, "ab", "aa"), (1, "aa", "ab")],
    [(1, "an", "na"), (-1, "na", "an"), (-1, "ba", "ab"), (1, "ab", "an")],
]
