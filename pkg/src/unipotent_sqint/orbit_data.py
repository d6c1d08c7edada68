"""Weighted Dynkin diagrams of nilpotent orbits in the exceptional Lie algebras.

Diagrams of the dual algebra are indexed by the simple coroots of the
group named by the key, i.e. entry ``i`` is ``alpha_i^vee`` in that group's
Bourbaki numbering.  Rows are ``(label, diagram, orbit dimension)``; a
trailing ``~`` marks a component made of short roots.
"""

DUAL_ORBITS = {
    "G2": [
        ('0', "00", 0),
        ('A1', "10", 6),
        ('A1~', "01", 8),
        ('G2(a1)', "20", 10),
        ('G2', "22", 12),
    ],
    "F4": [
        ('0', "0000", 0),
        ('A1', "0001", 16),
        ('A1~', "1000", 22),
        ('A1+A1~', "0010", 28),
        ('A2', "0002", 30),
        ('A2~', "2000", 30),
        ('A2+A1~', "0100", 34),
        ('B2', "1002", 36),
        ('A2~+A1', "1010", 36),
        ('C3(a1)', "0101", 38),
        ('F4(a3)', "0020", 40),
        ('B3', "0022", 42),
        ('C3', "2101", 42),
        ('F4(a2)', "2020", 44),
        ('F4(a1)', "2022", 46),
        ('F4', "2222", 48),
    ],
    "E6": [
        ('0', "000000", 0),
        ('A1', "010000", 22),
        ('2A1', "100001", 32),
        ('3A1', "000100", 40),
        ('A2', "020000", 42),
        ('A2+A1', "110001", 46),
        ('2A2', "200002", 48),
        ('A2+2A1', "001010", 50),
        ('A3', "120001", 52),
        ('2A2+A1', "100101", 54),
        ('A3+A1', "011010", 56),
        ('D4(a1)', "000200", 58),
        ('D4', "020200", 60),
        ('A4', "220002", 60),
        ('A4+A1', "111011", 62),
        ('D5(a1)', "121011", 64),
        ('A5', "211012", 64),
        ('E6(a3)', "200202", 66),
        ('D5', "220202", 68),
        ('E6(a1)', "222022", 70),
        ('E6', "222222", 72),
    ],
    "E7": [
        ('0', "0000000", 0),
        ('A1', "1000000", 34),
        ('2A1', "0000010", 52),
        ("(3A1)''", "0000002", 54),
        ("(3A1)'", "0010000", 64),
        ('A2', "2000000", 66),
        ('4A1', "0100001", 70),
        ('A2+A1', "1000010", 76),
        ('A2+2A1', "0001000", 82),
        ('2A2', "0000020", 84),
        ('A2+3A1', "0200000", 84),
        ('A3', "2000010", 84),
        ("(A3+A1)''", "2000002", 86),
        ('2A2+A1', "0010010", 90),
        ("(A3+A1)'", "1001000", 92),
        ('D4(a1)', "0020000", 94),
        ('A3+2A1', "1000101", 94),
        ('D4(a1)+A1', "0110001", 96),
        ('D4', "2020000", 96),
        ('A3+A2', "0001010", 98),
        ('A3+A2+A1', "0000200", 100),
        ('A4', "2000020", 100),
        ("(A5)''", "2000022", 102),
        ('D4+A1', "2110001", 102),
        ('A4+A1', "1001010", 104),
        ('A4+A2', "0002000", 106),
        ('D5(a1)', "2001010", 106),
        ('A5+A1', "1001012", 108),
        ("(A5)'", "1001020", 108),
        ('D5(a1)+A1', "2000200", 108),
        ('E6(a3)', "0020020", 110),
        ('D6(a2)', "0110102", 110),
        ('E7(a5)', "0002002", 112),
        ('D5', "2020020", 112),
        ('A6', "0002020", 114),
        ('D6(a1)', "2110102", 114),
        ('D5+A1', "2110110", 114),
        ('E7(a4)', "2002002", 116),
        ('E6(a1)', "2002020", 118),
        ('D6', "2110122", 118),
        ('E7(a3)', "2002022", 120),
        ('E6', "2022020", 120),
        ('E7(a2)', "2220202", 122),
        ('E7(a1)', "2220222", 124),
        ('E7', "2222222", 126),
    ],
    "E8": [
        ('0', "00000000", 0),
        ('A1', "00000001", 58),
        ('2A1', "10000000", 92),
        ('3A1', "00000010", 112),
        ('A2', "00000002", 114),
        ('4A1', "01000000", 128),
        ('A2+A1', "10000001", 136),
        ('A2+2A1', "00000100", 146),
        ('A3', "10000002", 148),
        ('A2+3A1', "00100000", 154),
        ('2A2', "20000000", 156),
        ('2A2+A1', "10000010", 162),
        ('A3+A1', "00000101", 164),
        ('D4(a1)', "00000020", 166),
        ('D4', "00000022", 168),
        ('2A2+2A1', "00001000", 168),
        ('A3+2A1', "00100001", 172),
        ('D4(a1)+A1', "01000010", 176),
        ('A3+A2', "10000100", 178),
        ('A4', "20000002", 180),
        ('A3+A2+A1', "00010000", 182),
        ('D4+A1', "01000012", 184),
        ('D4(a1)+A2', "02000000", 184),
        ('A4+A1', "10000101", 188),
        ('2A3', "10001000", 188),
        ('D5(a1)', "10000102", 190),
        ('A4+2A1', "00010001", 192),
        ('A4+A2', "00000200", 194),
        ('D5(a1)+A1', "00010002", 196),
        ('A4+A2+A1', "00100100", 196),
        ('A5', "20000101", 196),
        ('D4+A2', "02000002", 198),
        ('E6(a3)', "20000020", 198),
        ('A4+A3', "00010010", 200),
        ('D5', "20000022", 200),
        ('D5(a1)+A2', "00100101", 202),
        ('A5+A1', "10010001", 202),
        ('D6(a2)', "01100010", 204),
        ('E6(a3)+A1', "10001010", 204),
        ('E7(a5)', "00010100", 206),
        ('E8(a7)', "00002000", 208),
        ('D5+A1', "10001012", 208),
        ('D6(a1)', "01100012", 210),
        ('A6', "20000200", 210),
        ('E7(a4)', "00010102", 212),
        ('A6+A1', "10010100", 212),
        ('D5+A2', "00002002", 214),
        ('E6(a1)', "20000202", 214),
        ('D7(a2)', "10010101", 216),
        ('E6', "20000222", 216),
        ('D6', "21100012", 216),
        ('E6(a1)+A1', "10010102", 218),
        ('A7', "10010110", 218),
        ('E8(b6)', "00020002", 220),
        ('E7(a3)', "20010102", 220),
        ('E6+A1', "10010122", 222),
        ('D7(a1)', "20002002", 222),
        ('E8(a6)', "00020020", 224),
        ('E7(a2)', "01101022", 224),
        ('E8(b5)', "00020022", 226),
        ('D7', "21101101", 226),
        ('E8(a5)', "20020020", 228),
        ('E7(a1)', "21101022", 228),
        ('E8(b4)', "20020022", 230),
        ('E8(a4)', "20020202", 232),
        ('E7', "21101222", 232),
        ('E8(a3)', "20020222", 234),
        ('E8(a2)', "22202022", 236),
        ('E8(a1)', "22202222", 238),
        ('E8', "22222222", 240),
    ],
}

# distinguished orbits of the simple algebras, own Bourbaki numbering
DISTINGUISHED = {
    "G2": [
        ('G2(a1)', "02"),
        ('G2', "22"),
    ],
    "F4": [
        ('F4(a3)', "0200"),
        ('F4(a2)', "0202"),
        ('F4(a1)', "2202"),
        ('F4', "2222"),
    ],
    "E6": [
        ('E6(a3)', "200202"),
        ('E6(a1)', "222022"),
        ('E6', "222222"),
    ],
    "E7": [
        ('E7(a5)', "0002002"),
        ('E7(a4)', "2002002"),
        ('E7(a3)', "2002022"),
        ('E7(a2)', "2220202"),
        ('E7(a1)', "2220222"),
        ('E7', "2222222"),
    ],
    "E8": [
        ('E8(a7)', "00002000"),
        ('E8(b6)', "00020002"),
        ('E8(a6)', "00020020"),
        ('E8(b5)', "00020022"),
        ('E8(a5)', "20020020"),
        ('E8(b4)', "20020022"),
        ('E8(a4)', "20020202"),
        ('E8(a3)', "20020222"),
        ('E8(a2)', "22202022"),
        ('E8(a1)', "22202222"),
        ('E8', "22222222"),
    ],
}
