"""Command line interface.

Subcommands:

* ``single``      transmission/reflection sweep for one interaction
* ``spectrum``    two-interaction transmission sweep
* ``resonances``  classification, quartic, and perfect-transmission roots
* ``classify``    classification report only
* ``figure``      canned parameter sets for the reference sweeps
* ``verify``      randomized structural cross-checks

Sweeps emit CSV (17 significant digits, LF endings) or JSON; reports are
JSON.  Exit codes: 0 success, 1 bad input, 2 a verify property failed,
3 a numerical domain error (wall transfer matrix, vanishing denominator,
ill-conditioned solve).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

import numpy as np

from .compose import transmission_probability, two_point_amplitudes
from .errors import (
    DegenerateDenominatorError,
    IllConditionedError,
    OpaqueInteractionError,
    PoleError,
    PointScatterError,
)
from .resonance import (
    DegenerateQuarticError,
    classify,
    find_resonances,
    incidental_resonance,
    quartic_coefficients,
)
from .single import probabilities
from .u2param import PointInteraction, canonicalize, interaction_from_json
from .verify import run_all

_SQ5_4 = math.sqrt(1.25)
_R3 = math.sqrt(3.0)

# parameter sets used by the reference figures; exact expressions, not
# rounded decimals
FIGURE_PRESETS: dict[str, dict] = {
    "fig2": {
        "kind": "single",
        "interaction": dict(L_plus=2.0, L_minus=0.5, mu=math.pi / 2),
        "k_range": (1e-3, 5.0),
    },
    "fig5": {
        "kind": "two_multi_mu",
        "lengths": dict(L_plus=0.5, L_minus=-1.0),
        "mus": (math.pi / 2, math.pi / 3, math.pi / 4),
        "labels": ("mu_pi_over_2", "mu_pi_over_3", "mu_pi_over_4"),
        "separation": 1.0,
        "k_range": (1e-3, 12.0),
    },
    "fig6": {
        "kind": "two",
        "interaction1": dict(L_plus=1.0, L_minus=-0.5, mu=math.pi / 3),
        "interaction2": dict(L_plus=1.0, L_minus=-0.5, mu=2 * math.pi / 3, xi=1.0),
        "k_range": (1e-3, 12.0),
    },
    "fig7": {
        "kind": "two",
        "interaction1": dict(L_plus=10.0, L_minus=1.0, mu=math.pi / 3),
        "interaction2": dict(L_plus=-1.0, L_minus=-10.0, mu=2 * math.pi / 3, xi=1.0),
        "k_range": (1e-3, 12.0),
    },
    "fig8": {
        "kind": "two",
        "interaction1": dict(L_plus=(1 + _R3) / 2, L_minus=(1 - _R3) / 2, mu=math.pi / 6),
        "interaction2": dict(L_plus=(1 - _R3) / 2, L_minus=-(1 + _R3) / 2, mu=math.pi / 3, xi=1.0),
        "k_range": (1e-3, 12.0),
    },
    "fig9": {
        "kind": "two",
        "interaction1": dict(L_plus=3.0, L_minus=1.0, mu=math.pi / 2),
        "interaction2": dict(
            L_plus=4.0,
            L_minus=-4.0,
            mu=math.pi / 2,
            xi=(math.pi - math.atan(_SQ5_4 / 2.0)) / _SQ5_4,
        ),
        "k_range": (1e-3, 6.0),
    },
}


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; we reserve 2 for
    property violations, so remap to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(self.exit_with(message))

    @staticmethod
    def exit_with(message: str) -> int:
        print(f"error: {message}", file=sys.stderr)
        return 1


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def _emit_table(args, columns: list[str], rows) -> None:
    if args.format == "csv":
        lines = [",".join(columns)]
        lines.extend(",".join(_fmt(x) for x in row) for row in rows)
        _write_text(args.out, "\n".join(lines) + "\n")
    else:
        payload = {"columns": columns, "rows": [[float(x) for x in row] for row in rows]}
        _write_text(args.out, _dumps(payload))


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, allow_nan=False) + "\n"


def _load_params(path: str):
    with open(path) as fh:
        return json.load(fh)


def _single_from_args(args) -> PointInteraction:
    if args.params is not None:
        obj = _load_params(args.params)
        if isinstance(obj, dict) and "interaction1" in obj:
            obj = obj["interaction1"]
        if isinstance(obj, list):
            obj = obj[0]
        return interaction_from_json(obj)
    if args.Lp1 is None or args.Lm1 is None or args.mu1 is None:
        raise ValueError("need --Lp1, --Lm1 and --mu1 (or --params)")
    return canonicalize(args.Lp1, args.Lm1, args.mu1, args.nu1, args.xi1)


def _pair_from_args(args) -> tuple[PointInteraction, PointInteraction]:
    if args.params is not None:
        obj = _load_params(args.params)
        if isinstance(obj, list):
            if len(obj) != 2:
                raise ValueError("params array must hold exactly two interactions")
            return interaction_from_json(obj[0]), interaction_from_json(obj[1])
        if not ("interaction1" in obj and "interaction2" in obj):
            raise ValueError('params object needs "interaction1" and "interaction2"')
        return (
            interaction_from_json(obj["interaction1"]),
            interaction_from_json(obj["interaction2"]),
        )
    for name in ("Lp1", "Lm1", "mu1", "Lp2", "Lm2", "mu2"):
        if getattr(args, name) is None:
            raise ValueError(f"need --{name} (or --params)")
    p1 = canonicalize(args.Lp1, args.Lm1, args.mu1, args.nu1, args.xi1)
    p2 = canonicalize(args.Lp2, args.Lm2, args.mu2, args.nu2, args.xi2)
    return p1, p2


def _k_grid(args) -> np.ndarray:
    if not (0.0 < args.k_min < args.k_max):
        raise ValueError("need 0 < --k-min < --k-max")
    if args.steps < 2:
        raise ValueError("--steps must be at least 2")
    return np.linspace(args.k_min, args.k_max, args.steps)


def cmd_single(args) -> int:
    p = _single_from_args(args)
    ks = _k_grid(args)
    t1, r1 = probabilities(p, ks)
    _emit_table(args, ["k", "T1", "R1"], zip(ks, t1, r1))
    return 0


def cmd_spectrum(args) -> int:
    p1, p2 = _pair_from_args(args)
    ks = _k_grid(args)
    t2 = transmission_probability(p1, p2, ks)
    if args.amplitudes:
        rows = []
        for k, t in zip(ks, t2):
            sol = two_point_amplitudes(p1, p2, float(k))
            row = [k, t]
            for z in (sol.A, sol.B, sol.C, sol.D):
                row.extend((z.real, z.imag))
            rows.append(row)
        columns = ["k", "T2"] + [
            f"{w}_{name}" for name in "ABCD" for w in ("re", "im")
        ]
        _emit_table(args, columns, rows)
    else:
        _emit_table(args, ["k", "T2"], zip(ks, t2))
    return 0


def cmd_resonances(args) -> int:
    p1, p2 = _pair_from_args(args)
    rc = classify(p1, p2, args.tol)
    roots = find_resonances(p1, p2, args.k_min, args.k_max, grid=args.steps, tol=args.tol)
    quartic = None
    if not (p1.has_infinite_length or p2.has_infinite_length):
        q = quartic_coefficients(p1, p2)
        quartic = {"alpha": q.alpha, "beta": q.beta, "gamma": q.gamma}
    incidental = None
    try:
        hits = incidental_resonance(p1, p2, tol=args.tol)
    except (DegenerateQuarticError, ValueError):
        hits = None
    if hits:
        incidental = {"k": hits[0].k, "spacings": list(hits[0].spacings)}
    report = {
        "classification": rc.to_json(),
        "quartic": quartic,
        "roots": [
            {"k": r.k, "residual_T2": r.residual_T2, "branch_index": r.branch_index}
            for r in roots
        ],
        "incidental": incidental,
    }
    _write_text(args.out, _dumps(report))
    return 0


def cmd_classify(args) -> int:
    p1, p2 = _pair_from_args(args)
    _write_text(args.out, _dumps(classify(p1, p2, args.tol).to_json()))
    return 0


def cmd_figure(args) -> int:
    preset = FIGURE_PRESETS[args.id]
    k_lo, k_hi = preset["k_range"]
    k_min = args.k_min if args.k_min is not None else k_lo
    k_max = args.k_max if args.k_max is not None else k_hi
    if not (0.0 < k_min < k_max):
        raise ValueError("need 0 < k_min < k_max")
    if args.steps < 2:
        raise ValueError("--steps must be at least 2")
    ks = np.linspace(k_min, k_max, args.steps)

    if preset["kind"] == "single":
        p = interaction_from_json(preset["interaction"])
        t1, r1 = probabilities(p, ks)
        _emit_table(args, ["k", "T1", "R1"], zip(ks, t1, r1))
        return 0
    if preset["kind"] == "two_multi_mu":
        lengths = preset["lengths"]
        cols = ["k"]
        series = [ks]
        for mu, label in zip(preset["mus"], preset["labels"]):
            p1 = canonicalize(lengths["L_plus"], lengths["L_minus"], mu, xi=0.0)
            p2 = canonicalize(lengths["L_plus"], lengths["L_minus"], mu, xi=preset["separation"])
            series.append(transmission_probability(p1, p2, ks))
            cols.append(f"T2_{label}")
        _emit_table(args, cols, zip(*series))
        return 0
    p1 = interaction_from_json(preset["interaction1"])
    p2 = interaction_from_json(preset["interaction2"])
    t2 = transmission_probability(p1, p2, ks)
    _emit_table(args, ["k", "T2"], zip(ks, t2))
    return 0


def cmd_verify(args) -> int:
    report = run_all(args.seed, args.trials)
    _write_text(args.out, _dumps(report))
    return 0 if report["pass"] else 2


def _add_interaction_flags(sp, both: bool) -> None:
    sp.add_argument("--Lp1", type=str, help="first length (number, inf or -inf)")
    sp.add_argument("--Lm1", type=str, help="second length (number, inf or -inf)")
    sp.add_argument("--mu1", type=float, help="rotation angle mu in [0, pi]")
    sp.add_argument("--nu1", type=float, default=0.0, help="phase angle nu")
    sp.add_argument("--xi1", type=float, default=0.0, help="position")
    if both:
        sp.add_argument("--Lp2", type=str)
        sp.add_argument("--Lm2", type=str)
        sp.add_argument("--mu2", type=float)
        sp.add_argument("--nu2", type=float, default=0.0)
        sp.add_argument("--xi2", type=float, default=1.0)
    sp.add_argument("--params", type=str, help="JSON file with the interaction parameters")


def _add_output_flags(sp, fmt: bool = True) -> None:
    sp.add_argument("--out", type=str, default="-", help="output path, - for stdout")
    if fmt:
        sp.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> _Parser:
    parser = _Parser(prog="pointscatter", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("single", help="one-interaction probability sweep")
    _add_interaction_flags(sp, both=False)
    sp.add_argument("--k-min", type=float, default=1e-3)
    sp.add_argument("--k-max", type=float, default=5.0)
    sp.add_argument("--steps", type=int, default=2000)
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_single)

    sp = sub.add_parser("spectrum", help="two-interaction transmission sweep")
    _add_interaction_flags(sp, both=True)
    sp.add_argument("--k-min", type=float, default=1e-3)
    sp.add_argument("--k-max", type=float, default=10.0)
    sp.add_argument("--steps", type=int, default=2000)
    sp.add_argument("--amplitudes", action="store_true", help="include A, B, C, D columns")
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("resonances", help="perfect-transmission roots and classification")
    _add_interaction_flags(sp, both=True)
    sp.add_argument("--k-min", type=float, default=1e-3)
    sp.add_argument("--k-max", type=float, default=10.0)
    sp.add_argument("--steps", type=int, default=20000, help="scan grid points")
    sp.add_argument("--tol", type=float, default=1e-10, help="classification tolerance")
    _add_output_flags(sp, fmt=False)
    sp.set_defaults(func=cmd_resonances)

    sp = sub.add_parser("classify", help="parameter classification report")
    _add_interaction_flags(sp, both=True)
    sp.add_argument("--tol", type=float, default=1e-10)
    _add_output_flags(sp, fmt=False)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("figure", help="sweep one of the canned parameter sets")
    sp.add_argument("id", choices=sorted(FIGURE_PRESETS))
    sp.add_argument("--k-min", type=float, default=None)
    sp.add_argument("--k-max", type=float, default=None)
    sp.add_argument("--steps", type=int, default=2000)
    _add_output_flags(sp)
    sp.set_defaults(func=cmd_figure)

    sp = sub.add_parser("verify", help="randomized structural cross-checks")
    sp.add_argument("--seed", type=int, default=42)
    sp.add_argument("--trials", type=int, default=1000)
    _add_output_flags(sp, fmt=False)
    sp.set_defaults(func=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "command", None) == "verify" and args.trials < 1:
            raise ValueError("--trials must be at least 1")
        return args.func(args)
    except (PoleError, IllConditionedError, DegenerateDenominatorError, OpaqueInteractionError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except (PointScatterError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
