# Resonant separations for an incidental perfect-transmission root.
#
# When a pair's quartic has a positive root k, the modulus condition holds
# at that k no matter where the interactions sit.  The phase condition then
# picks a discrete ladder of separations d_n, spaced pi/k apart, at which
# the pair actually becomes transparent.  This script prints the ladder and
# verifies each rung by moving the second interaction there and checking
# the transmission.
import math

from pointscatter import (
    canonicalize,
    incidental_resonance,
    transmission_probability,
)


def main():
    p1 = canonicalize(3.0, 1.0, math.pi / 2, xi=0.0)
    p2 = canonicalize(4.0, -4.0, math.pi / 2, xi=1.0)

    found = incidental_resonance(p1, p2, n_spacings=5)
    assert found is not None
    res = found[0]
    print(f"isolated root: k = {res.k:.12f} (k^2 = {res.k ** 2:.6f})")
    print(f"ladder step pi/k = {math.pi / res.k:.12f}")

    for n, d in enumerate(res.spacings, start=1):
        moved = p2.shifted(d - p2.xi)
        t2 = transmission_probability(p1, moved, res.k)
        print(f"d_{n} = {d:.12f}   1 - T2 = {1.0 - t2:.3e}")

    # At the original, untuned separation the same wavenumber is not special.
    t2_untuned = transmission_probability(p1, p2, res.k)
    print(f"untuned (d = {p2.xi - p1.xi:g}): T2 = {t2_untuned:.6f}")

    # Consecutive rungs differ by exactly pi/k.
    gaps = [b - a for a, b in zip(res.spacings, res.spacings[1:])]
    worst = max(abs(g - math.pi / res.k) for g in gaps)
    print(f"max |gap - pi/k| = {worst:.3e}")


if __name__ == "__main__":
    main()
