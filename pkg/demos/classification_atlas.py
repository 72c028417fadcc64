# A small atlas of pair configurations and what classify() says about them.
#
# Perfect transmission through a pair is generic only at isolated
# wavenumbers, but on special parameter manifolds it recurs along a whole
# branch of wavenumbers (one root per pi of phase).  classify() decides
# which manifold, if any, a pair sits on; for everything else it reports
# either an isolated incidental root or none at all.  Each entry below is
# chosen to land in a different bucket.
import math

from pointscatter import canonicalize, classify, find_resonances

SEP = 1.0


def entry(label, p1, p2):
    rc = classify(p1, p2)
    roots = find_resonances(p1, p2, k_max=8.0)
    ksq = "" if rc.k_squared is None else f" k^2={rc.k_squared:.4g}"
    flags = " quartic-bypassed" if rc.quartic_bypassed else ""
    print(f"{label:34s} -> {rc.case.value:10s} matches={list(rc.matches)}"
          f"{ksq}{flags}  roots<=8: {len(roots)}")
    for r in roots:
        print(f"{'':38s}k = {r.k:.9f}  branch {r.branch_index}")


def main():
    # Mirror-related lengths with supplementary mu: a full tangent branch.
    entry("case I  (mirror pair)",
          canonicalize(0.5, -1.0, math.pi / 3),
          canonicalize(0.5, -1.0, 2 * math.pi / 3, xi=SEP))

    # Reciprocal-with-sign-flip lengths, equal mu: roots at multiples of
    # pi/d regardless of everything else.
    entry("case II (reciprocal pair)",
          canonicalize(2.0, 0.5, math.pi / 3),
          canonicalize(-0.5, -2.0, math.pi / 3, xi=SEP))

    # One interaction built from the other by swapping and negating one
    # length; there are four such patterns, this is the first.
    entry("case III-i (swap pattern)",
          canonicalize(3.0, 1.0, math.pi / 2),
          canonicalize(1.0, -3.0, math.pi / 6, xi=SEP))

    # A pair that fits both the I and II patterns at once; classify keeps
    # every match and decides by the first.
    entry("ambiguous (I and II overlap)",
          canonicalize(2.0, -2.0, math.pi / 3),
          canonicalize(2.0, -2.0, math.pi / 3, xi=SEP))

    # Generic parameters whose quartic happens to have a positive root:
    # perfect transmission only if the separation is tuned to it.
    entry("incidental (untuned separation)",
          canonicalize(2.0, 1.0, math.pi / 3),
          canonicalize(1.0, -2.0, math.pi / 3, xi=SEP))

    # Same quartic, no positive root reachable: never perfect.
    entry("no configuration",
          canonicalize(1.5, 0.5, 0.1),
          canonicalize(1.0, 0.5, math.pi / 2, xi=SEP))

    # A wall in the pair blocks everything; the search returns nothing.
    entry("wall (mu = 0 blocks channel)",
          canonicalize(2.0, 1.0, 0.0),
          canonicalize(1.0, -2.0, math.pi / 3, xi=SEP))

    # Infinite lengths are legal parameters; the quartic machinery is
    # bypassed and only the direct scan is consulted.
    entry("infinite length (bypass)",
          canonicalize("inf", 1.0, math.pi / 3),
          canonicalize(1.0, -2.0, math.pi / 3, xi=SEP))


if __name__ == "__main__":
    main()
