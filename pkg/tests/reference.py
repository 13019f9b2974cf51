"""Frozen reference values: published tables and hand-derived small cases."""

# preset -> (periods for k = 2..7, dimensions for k = 2..7, labels)
TABLES = {
    "a": ((4, 12, 10, 24, 18, 24), (10, 63, 120, 496, 4095, 8256),
          ("sp(2^k)", "su(2^k)", "so(2^k)", "so(2^k)", "su(2^k)", "sp(2^k)")),
    "b": ((6, 8, 10, 12, 14, 16), (15, 28, 45, 66, 91, 120), ("so(2(k+1))",) * 6),
    "c": ((5, 12, 17, 10, 63, 24), (10, 36, 255, 496, 2016, 8128),
          ("sp(2^k)", "sp(2^k)", "su(2^k)", "so(2^k)", "so(2^k)", "so(2^k)")),
    "d": ((5, 12, 17, 30, 63, 48), (10, 36, 136, 528, 4095, 8128),
          ("sp(2^k)", "sp(2^k)", "sp(2^k)", "sp(2^k)", "su(2^k)", "so(2^k)")),
    "e": ((8, 16, 12, 16, 36, 32), (15, 63, 255, 1023, 4095, 16383), ("su(2^k)",) * 6),
    "f": ((16, 8, 40, 32, 56, 16), (15, 28, 255, 1023, 4095, 16383),
          ("su(2^k)", "so(2^k)", "su(2^k)", "su(2^k)", "su(2^k)", "su(2^k)")),
    "g": ((52, 24, 150, 116, 274, 32), (15, 28, 255, 1023, 4095, 120),
          ("su(2^k)", "so(2^k)", "su(2^k)", "su(2^k)", "su(2^k)", "so(2(k+1))")),
    "h": ((12, 8, 20, 12, 28, 16), (15, 21, 255, 528, 4095, 8128),
          ("su(2^k)", "sp(2k)", "su(2^k)", "sp(2^k)", "su(2^k)", "so(2^k)")),
    "i": ((5, 12, 17, 30, 93, 180), (15, 36, 255, 496, 4095, 8256),
          ("su(2^k)", "sp(2^k)", "su(2^k)", "so(2^k)", "su(2^k)", "sp(2^k)")),
    "j": ((5, 7, 9, 11, 13, 15), (10, 21, 36, 55, 78, 105), ("sp(2k)",) * 6),
}

# all-ones, k = 1..7
FIG_PERIODS = (3, 4, 12, 10, 24, 18, 24)
FIG_DIMS = (3, 10, 63, 120, 496, 4095, 8256)
FIG_LABELS = ("su(2^k)", "sp(2^k)", "su(2^k)", "so(2^k)", "so(2^k)", "su(2^k)", "sp(2^k)")

# k = 7, all-ones, site 1 on top
K7_DIAGRAM = """\
ZYYXIIZYXZYXZYXZYXIIZYYX
IZXZXZXIIIIIIIIIIZXZXZXI
IIZYXZXZXZYXZYXZXZXZYXII
IIIZXIIZXIIIIIIZXIIZXIII
IIIIZYYXZYYXZYYXZYYXIIII
IIIIIZXZXZXIIZXZXZXIIIII
IIIIIIZYYXIIIIZYYXIIIIII"""

# preset f, k = 7: Z_1 first returns after 32 layers (dimension 16383)
F7_MEASURED_PERIOD = 32
