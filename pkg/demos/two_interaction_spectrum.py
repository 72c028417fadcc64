# Two-interaction transmission spectrum with the perfect peak marked.
#
# A generic pair transmits perfectly only at isolated wavenumbers where two
# independent conditions meet: a modulus condition (a quartic in k, fixed by
# the interaction parameters alone) and a phase condition (fixed by the
# separation).  Here we take a pair whose quartic has the single positive
# root k^2 = 1.25 and place the second interaction at a separation that
# satisfies the phase condition there, then confirm that the sweep shows a
# unit-height peak at sqrt(1.25) and nowhere else.
import math

import numpy as np

from pointscatter import (
    canonicalize,
    classify,
    find_resonances,
    quartic_coefficients,
    transmission_probability,
)

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None


def tuned_pair():
    p1 = canonicalize(3.0, 1.0, math.pi / 2, xi=0.0)
    # Separation solving the phase condition at the quartic root.
    d = (math.pi - math.atan(math.sqrt(1.25) / 2.0)) / math.sqrt(1.25)
    p2 = canonicalize(4.0, -4.0, math.pi / 2, xi=d)
    return p1, p2


def main():
    p1, p2 = tuned_pair()

    q = quartic_coefficients(p1, p2)
    print(f"quartic coefficients (alpha, beta, gamma) = "
          f"({q.alpha:g}, {q.beta:g}, {q.gamma:g})")
    print(f"k^2 roots: {q.k_squared_roots()}, positive k: {q.positive_k()}")

    rc = classify(p1, p2)
    print(f"classification: {rc.case.value} (k^2 = {rc.k_squared})")

    roots = find_resonances(p1, p2, k_max=6.0)
    for r in roots:
        print(f"perfect transmission at k = {r.k:.12f} "
              f"(1 - T2 = {r.residual_T2:.2e})")
    assert len(roots) == 1
    assert abs(roots[0].k - math.sqrt(1.25)) < 1e-10

    ks = np.linspace(0.05, 6.0, 2000)
    t2 = transmission_probability(p1, p2, ks)

    # Away from the tuned wavenumber the envelope stays visibly below 1.
    far = np.abs(ks - roots[0].k) > 0.25
    print(f"max T2 more than 0.25 away from the peak: {np.max(t2[far]):.4f}")

    if plt is not None:
        fig, ax = plt.subplots(figsize=(7, 4))
        ax.plot(ks, t2)
        ax.axvline(roots[0].k, color="k", lw=0.8, ls="--")
        ax.set_xlabel("k")
        ax.set_ylabel("T2(k)")
        ax.set_title("pair tuned for one perfect transmission")
        fig.tight_layout()
        fig.savefig("two_interaction_spectrum.png", dpi=150)
        print("wrote two_interaction_spectrum.png")


if __name__ == "__main__":
    main()
