"""Published reference values used by the regression commands.

Weights are in fundamental-weight coordinates.  ``None`` in the verification
table marks cases the coset method does not treat.
"""

INVOLUTIONS = [
    # group, fixed subalgebra, proper Levi, deleted nodes, lift exponents in Z/4
    ("G2", "sl2+sl2", False, (1,), (2, 0)),
    ("F4", "sp6+sl2", False, (4,), (0, 2, 0, 2)),
    ("F4", "so9", False, (1,), (0, 0, 2, 0)),
    ("E6", "so10+a", True, (0, 6), (0, 2, 0, 0, 2, 0)),
    ("E6", "sl6+sl2", False, (2,), (2, 0, 0, 2, 0, 2)),
    ("E7", "e6+a", True, (0, 7), (2, 1, 0, 2, 3, 0, 1)),
    ("E7", "sl8", False, (2,), (0, 1, 0, 0, 3, 2, 1)),
    ("E7", "so12+sl2", False, (1,), (0, 2, 2, 0, 0, 0, 0)),
    ("E8", "so16", False, (1,), (0, 2, 2, 0, 0, 0, 0, 0)),
    ("E8", "e7+sl2", False, (8,), (0, 2, 0, 0, 2, 0, 2, 0)),
]


def _neg(v):
    return tuple(-x for x in v)


def _bits(s):
    return tuple(int(c) for c in s)


def _fw(i, r):
    return tuple(int(j == i - 1) for j in range(r))


PARAMETERS = [
    # group, fixed subalgebra, orbit, lambda1, delta1, lambda0, delta0
    ("G2", "sl2+sl2", "G2(a1)", (2, -1), _fw(1, 2), _bits("10"), _bits("11")),
    ("F4", "sp6+sl2", "F4(a3)", (-1, 0, -1, 3), _fw(4, 4), _bits("0010"), _bits("0101")),
    ("F4", "sp6+sl2", "F4(a2)", (-1, -1, -1, 5), _fw(4, 4), _bits("1010"), _bits("0101")),
    ("F4", "so9", "F4(a3)", (2, 0, -1, 0), _fw(1, 4), _bits("0010"), _bits("1000")),
    ("F4", "so9", "F4(a1)", (5, -1, -1, -1), _fw(1, 4), _bits("1011"), _bits("1100")),
    ("E6", "sl6+sl2", "E6(a3)", (-1, 5, -1, -1, -1, -1), _fw(2, 6),
     _bits("100101"), _bits("011010")),
    ("E7", "so12+sl2", "E7(a5)", _neg((-5, 1, 1, 0, 1, 0, 1)), _fw(1, 7),
     _bits("0001001"), _bits("1101011")),
    ("E7", "so12+sl2", "E7(a4)", _neg((-6, 1, 1, 0, 1, 1, 1)), _fw(1, 7),
     _bits("1001001"), _bits("1111011")),
    ("E7", "so12+sl2", "E7(a3)", _neg((-8, 1, 1, 1, 1, 1, 1)), _fw(1, 7),
     _bits("1001011"), _bits("1111110")),
    ("E7", "sl8", "E6(a1)", _neg((1, -8, 1, 1, 1, 1, 1)), _fw(2, 7),
     _bits("1001010"), _bits("1111111")),
    ("E8", "e7+sl2", "D5+A2", _neg((1, 0, 0, 1, 0, 0, 1, -6)), _fw(8, 8),
     _bits("00001001"), _bits("00010100")),
    ("E8", "e7+sl2", "D7(a1)", _neg((1, 0, 0, 1, 0, 1, 1, -8)), _fw(8, 8),
     _bits("10001001"), _bits("00010100")),
    ("E8", "e7+sl2", "E8(a7)", (0, 0, 0, -1, 0, 0, -1, 5), _fw(8, 8),
     _fw(5, 8), _bits("00010100")),
    ("E8", "e7+sl2", "E8(b5)", _neg((1, 1, 1, 0, 1, 0, 1, -9)), _fw(8, 8),
     _bits("00010011"), _bits("01101000")),
    ("E8", "e7+sl2", "E8(b4)", _neg((1, 1, 1, 0, 1, 1, 1, -11)), _fw(8, 8),
     _bits("10010011"), _bits("01101000")),
    ("E8", "e7+sl2", "E8(a3)", _neg((1, 1, 1, 1, 1, 1, 1, -14)), _fw(8, 8),
     _bits("10010111"), _bits("01101000")),
    ("E8", "so16", "E8(a7)", _neg((-5, 0, 0, 1, 0, 0, 1, 0)), _fw(1, 8),
     _fw(5, 8), _bits("00101010")),
    ("E8", "so16", "E8(b6)", _neg((-8, 1, 1, 0, 1, 0, 1, 0)), _fw(1, 8),
     _bits("00010001"), _bits("11010101")),
    ("E8", "so16", "E8(a6)", _neg((-9, 1, 1, 0, 1, 0, 1, 1)), _fw(1, 8),
     _bits("00010010"), _bits("11010111")),
    ("E8", "so16", "E8(a5)", _neg((-11, 1, 1, 0, 1, 1, 1, 1)), _fw(1, 8),
     _bits("10010010"), _bits("11110111")),
    ("E8", "so16", "E8(a4)", _neg((-14, 1, 1, 1, 1, 1, 1, 1)), _fw(1, 8),
     _bits("10010101"), _bits("11111111")),
]

VERIFICATION = [
    # group, fixed subalgebra, orbit, W_L type, m, k_bd (None = not applicable)
    ("G2", "sl2+sl2", "G2(a1)", "1", -2, None),
    ("F4", "sp6+sl2", "F4(a3)", "A1", -5, 0),
    ("F4", "sp6+sl2", "F4(a2)", "1", -4, None),
    ("F4", "so9", "F4(a3)", "A1xA1", -6, 1),
    ("F4", "so9", "F4(a1)", "1", -4, None),
    ("E6", "sl6+sl2", "E6(a3)", "1", -6, None),
    ("E7", "so12+sl2", "E7(a5)", "A1xA1", -9, 1),
    ("E7", "so12+sl2", "E7(a4)", "A1", -8, 0),
    ("E7", "so12+sl2", "E7(a3)", "1", -7, None),
    ("E7", "sl8", "E6(a1)", "A1", None, None),
    ("E8", "e7+sl2", "D5+A2", "A2xA1xA1", None, None),
    ("E8", "e7+sl2", "D7(a1)", "A1xA1xA1", -11, 2),
    ("E8", "e7+sl2", "E8(a7)", "A2xA2xA1", None, None),
    ("E8", "e7+sl2", "E8(b5)", "A1xA1", -10, 1),
    ("E8", "e7+sl2", "E8(b4)", "A1", -9, 0),
    ("E8", "e7+sl2", "E8(a3)", "1", -8, None),
    ("E8", "so16", "E8(a7)", "A2xA1xA1xA1", None, None),
    ("E8", "so16", "E8(b6)", "A1xA1xA1", -11, 2),
    ("E8", "so16", "E8(a6)", "A1xA1", -10, 1),
    ("E8", "so16", "E8(a5)", "A1", -9, 0),
    ("E8", "so16", "E8(a4)", "1", -8, None),
]

# cases whose m is not applicable because the coset method does not apply
UNSUPPORTED = {(g, f, o) for g, f, o, _, m, _ in VERIFICATION if m is None}


def row_position(group, fixed, orbit):
    for k, row in enumerate(PARAMETERS):
        if row[:3] == (group, fixed, orbit):
            return k
    return len(PARAMETERS)
