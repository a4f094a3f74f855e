"""The three kinds of Z/2-gradings of vect^(1)(1;2) and their superizations."""

from __future__ import annotations

from lie2.cli import enumerate_gradings
from lie2.divpow import D_u, GeneratingFunction, make_vect, vect_superization
from lie2.superalg import fingerprint


def main():
    g = make_vect(2, 1)
    doc = enumerate_gradings(g)
    print(f"{doc['gradings']} idempotent derivations, {len(doc['classes'])} classes")
    for c in doc["classes"]:
        print("  sdim", c["fingerprint"]["sdim"], "count", c["count"])
    for c in [(0, 0), (1, 1)]:
        u = GeneratingFunction(2, c)
        S = vect_superization(u)
        print(f"\nu = {u.tag()}: U =")
        for row in D_u(u):
            print("  ", row)
        print("  basis:", ", ".join(S.labels))
        print("  derived series:", fingerprint(S)["derived"])


if __name__ == "__main__":
    main()
