# The two-interaction amplitude as a sum over round trips.
#
# The transmission amplitude of a pair factors into a direct term times a
# geometric series in (round-trip reflection) x (propagation phase).  The
# series converges whenever the interactions are individually lossy enough
# that the round-trip factor has modulus below one, and its limit must match
# the closed-form amplitude from the transfer-matrix product.  Facing walls
# are the edge case: the round-trip factor sits exactly on the unit circle
# and the expansion never settles.
import math

from pointscatter import canonicalize, interference_series, two_point_amplitudes


def main():
    p1 = canonicalize(2.0, 1.0, math.pi / 3, xi=0.0)
    p2 = canonicalize(1.0, -2.0, math.pi / 3, xi=1.3)
    k = 1.7

    ser = interference_series(p1, p2, k, n_terms=40)
    sol = two_point_amplitudes(p1, p2, k)

    print(f"round-trip factor: |ratio| = {abs(ser.ratio):.6f} "
          f"(convergent: {ser.convergent})")
    print(f"closed-form D = {sol.D:.12f}")
    print(f"series limit  = {ser.limit:.12f}")
    print(f"|limit - D| = {abs(ser.limit - sol.D):.3e}")
    print()
    print("partial sums approach D geometrically:")
    for m in (0, 1, 2, 4, 8, 16, 32):
        gap = abs(ser.partial_sums[m] - sol.D)
        print(f"  after {m + 1:2d} bounces: |sum - D| = {gap:.3e}")

    # Two facing walls: every bounce is lossless, the series only circles.
    w1 = canonicalize(1.0, 1.0, math.pi / 2, xi=0.0)
    w2 = canonicalize(2.0, 2.0, math.pi / 2, xi=1.0)
    stuck = interference_series(w1, w2, k)
    print()
    print(f"wall cavity: |ratio| = {abs(stuck.ratio):.12f}, "
          f"convergent = {stuck.convergent}, prefactor = {stuck.prefactor}")


if __name__ == "__main__":
    main()
