"""kl is not q(g): ad X_{-1} is nilpotent on the even part yet fixes Y_{-1}."""

from __future__ import annotations

from lie2.superalg import make_kl, make_q_vect, q_discriminant, weight_vectors

for n in range(3, 7):
    K, Q = make_kl(n), make_q_vect(n)
    X = K.unit(1)
    print(f"n={n}: kl sdim {K.sdim}, discriminant {q_discriminant(K, X)};"
          f" q(vect) gives {q_discriminant(Q, Q.unit(1))}")
    if n <= 5:
        raising = [K.unit(2 ** k + 1) for k in range(1, n - 1)]
        high, low = weight_vectors(K, raising, X)
        print(f"  highest weight vectors {len(high)}, lowest {len(low)}")
