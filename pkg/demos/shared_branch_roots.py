# Duplicated interactions share their perfect-transmission wavenumbers
# across the mixing angle.
#
# Two copies of the same interaction at separation d always sit on a
# classified family, and the perfect-transmission condition reduces to a
# tangent equation whose coefficients do not involve mu.  Sweeping mu
# therefore reshapes the whole transmission curve while the unit-height
# peaks stay nailed to the same wavenumbers.  The lone exception is a
# coincidence: at mu = pi/2 both interactions happen to be individually
# transparent at k = sqrt(2) (1 + k^2 L+ L- = 0 there), which adds one
# extra peak that the other mu values do not have.
import math

import numpy as np

from pointscatter import canonicalize, find_resonances, probabilities, s_matrix

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None


def duplicated_pair(mu):
    p1 = canonicalize(0.5, -1.0, mu, xi=0.0)
    p2 = canonicalize(0.5, -1.0, mu, xi=1.0)
    return p1, p2


def main():
    mus = {"pi/2": math.pi / 2, "pi/3": math.pi / 3, "pi/4": math.pi / 4}

    table = {}
    for label, mu in mus.items():
        roots = find_resonances(*duplicated_pair(mu), k_max=10.0)
        table[label] = [r.k for r in roots]
        pretty = ", ".join(f"{k:.9f}" for k in table[label])
        print(f"mu = {label:5s}: {pretty}")

    # The tangent roots agree across mu to full precision.
    shared = [k for k in table["pi/2"]
              if any(abs(k - kk) < 1e-9 for kk in table["pi/3"])]
    spread = max(
        min(abs(k - kk) for kk in table[other])
        for k in shared
        for other in ("pi/3", "pi/4")
    )
    print(f"shared roots: {len(shared)}, max spread across mu: {spread:.3e}")

    # The extra pi/2 peak is individual transparency, not pair interference:
    # each interaction alone already transmits perfectly at sqrt(2).
    extra = [k for k in table["pi/2"] if all(abs(k - kk) > 1e-6 for kk in table["pi/3"])]
    print(f"extra roots at mu = pi/2: {[f'{k:.9f}' for k in extra]}")
    p1, _ = duplicated_pair(math.pi / 2)
    t1, _ = probabilities(p1, math.sqrt(2.0))
    print(f"single interaction at sqrt(2): T1 = {t1:.15f}, "
          f"R_r = {s_matrix(p1, math.sqrt(2.0)).R_r:.3e}")

    if plt is not None:
        from pointscatter import transmission_probability

        ks = np.linspace(0.05, 10.0, 4000)
        fig, ax = plt.subplots(figsize=(8, 4))
        for label, mu in mus.items():
            ax.plot(ks, transmission_probability(*duplicated_pair(mu), ks),
                    label=f"mu = {label}", lw=1.0)
        for k in table["pi/3"]:
            ax.axvline(k, color="k", lw=0.6, ls=":")
        ax.axvline(math.sqrt(2.0), color="r", lw=0.6, ls="--")
        ax.set_xlabel("k")
        ax.set_ylabel("T2(k)")
        ax.legend()
        fig.tight_layout()
        fig.savefig("shared_branch_roots.png", dpi=150)
        print("wrote shared_branch_roots.png")


if __name__ == "__main__":
    main()
