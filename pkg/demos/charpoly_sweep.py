"""Char-poly of the d^2 action against the closed formula, with a few printed cases."""

from __future__ import annotations

import itertools

from lie2.divpow import GeneratingFunction, conjectured_charpoly, d2_charpoly
from lie2.field import GF
from lie2.linalg import poly_str

F = GF(1)
for n in (2, 3, 4):
    for rest in itertools.product((0, 1), repeat=n - 1):
        c = (0,) + rest
        got = d2_charpoly(GeneratingFunction(n, c, F))
        mark = "ok" if got == conjectured_charpoly(c, n, F) else "MISMATCH"
        print(f"n={n} c={c}: {poly_str(got, F, 'λ')}  {mark}")
