"""Projection representatives of sl(5) and o^(1)(7) with their superization labels."""

from __future__ import annotations

from lie2.classical import known_for, projection_reps, superize_rep, verify_projection

for series, N in [("sl", 5), ("o1", 7), ("o_pi", 8)]:
    g, reps = projection_reps(series, N)
    print(f"{series}({N}): dim {g.dim}, {len(reps)} representatives")
    for r in reps:
        S = superize_rep(g, r)
        print(f"  {r.label:24s} verify {bool(verify_projection(r, g))}  sdim {S.sdim}  label {known_for(r).sdim}")
