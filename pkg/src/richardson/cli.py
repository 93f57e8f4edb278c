"""Batch command line front end."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import cato, fukaya, nilcox, oracle, shapes, strata
from .laurent import BiLaurent, eval_t, substitute, to_text
from .perm import Permutation, bruhat_leq, symmetric_group

OUTPUT_ENV = "RICHARDSON_OUTPUT_DIR"

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INADMISSIBLE = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _ints(text: str | None) -> tuple[int, ...]:
    if text is None or text.strip() == "":
        return ()
    try:
        return tuple(int(a) for a in text.split(","))
    except ValueError as exc:
        raise InputError(f"expected a comma separated list of integers, got {text!r}") from exc


def _shape(args: argparse.Namespace) -> shapes.Shape:
    if args.n is None:
        raise InputError("--n is required")
    I, J = _ints(args.I), _ints(args.J)
    if args.d is not None and (len(I) != args.d or len(J) != args.d):
        raise InputError(f"--d {args.d} does not match |I|={len(I)}, |J|={len(J)}")
    try:
        return shapes.Shape(args.n, I, J)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _shape_json(sh: shapes.Shape) -> dict:
    return {"n": sh.n, "d": sh.d, "I": list(sh.I), "J": list(sh.J)}


def output_dir(flag: str | None) -> Path:
    """Flag first, then the environment variable, then the working directory."""
    if flag:
        return Path(flag)
    env = os.environ.get(OUTPUT_ENV)
    return Path(env) if env else Path.cwd()


def _resolve(path: str, flag: str | None) -> Path:
    p = Path(path)
    if p.is_absolute():
        return p
    base = output_dir(flag)
    base.mkdir(parents=True, exist_ok=True)
    return base / p


def strata_payload(sh: shapes.Shape, kind: str) -> dict:
    parts = strata.deodhar_strata(sh) if kind == "deodhar" else strata.gauss_strata(sh)
    total = strata.point_count_poly(parts)
    return {
        "shape": _shape_json(sh),
        "kind": kind,
        "strata": [
            {
                "w": list(s.w.images),
                "alpha": s.alpha,
                "beta": s.beta,
                "mixpol": strata.point_count_poly([s]).to_json(),
            }
            for s in parts
        ],
        "mixpol": total.to_json(),
        "checks": {
            "open_stratum_unique": sum(s.dim == shapes.ell(sh.J) - shapes.ell(sh.I) for s in parts) == (1 if parts else 0),
        },
    }


def cmd_strata(args: argparse.Namespace) -> int:
    sh = _shape(args)
    payload = strata_payload(sh, args.kind)
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"{args.kind} strata of R{sh}")
        for s in payload["strata"]:
            w = Permutation(tuple(s["w"]))
            print(f"  w={w}  Gm^{s['alpha']} x A^{s['beta']}  {to_text(BiLaurent.from_json(s['mixpol']))}")
        total = BiLaurent.from_json(payload["mixpol"])
        print(f"  total: {to_text(total)}")
        print(f"  at t=-1: {eval_t(total, -1)}")
    return EXIT_OK


def _pw(text: str, n: int, d: int) -> cato.PWElement:
    try:
        return cato.PWElement(Permutation(_ints(text)), d)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_poincare(args: argparse.Namespace) -> int:
    if args.lie and args.x is not None:
        if args.n is None or args.d is None or args.y is None:
            raise InputError("--lie with --x needs --y, --n and --d")
        x, y = _pw(args.x, args.n, args.d), _pw(args.y, args.n, args.d)
        sh = shapes.Shape(args.n, cato.psi(x), cato.psi(y))
    else:
        sh = _shape(args)
        x = y = None
    geom = nilcox.model_mixpol(sh) if sh.leq() else BiLaurent()
    payload: dict = {
        "shape": _shape_json(sh),
        "mixpol": geom.to_json(),
        "mixpol_text": to_text(geom),
        "point_count": str(eval_t(geom, -1)),
        "checks": {},
    }
    if args.lie:
        if x is None:
            x = cato.psi_inverse(sh.I, sh.n, sh.d)
            y = cato.psi_inverse(sh.J, sh.n, sh.d)
        cc = cato.crosscheck(x, y)
        lie = cato.mixpol_lie(x, y)
        payload["lie"] = {
            "x": list(x.x.images),
            "y": list(y.x.images),
            "mixpol": lie.to_json(),
            "mixpol_text": to_text(lie),
            "transformed": to_text(cc.lie),
            "geometric_in_u": to_text(cc.geometric),
        }
        payload["checks"]["catO_identity"] = cc.ok
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"R{sh}")
        print(f"  mixPol: {payload['mixpol_text']}")
        print(f"  point count: {payload['point_count']}")
        if args.lie:
            lie = payload["lie"]
            print(f"  Ext polynomial: {lie['mixpol_text']}")
            print(f"  (ut)^L P[v->1/u]: {lie['transformed']}")
            print(f"  mixPol[q->u^2]:   {lie['geometric_in_u']}")
            print(f"  equal: {payload['checks']['catO_identity']}")
    return EXIT_OK


def cmd_diagram(args: argparse.Namespace) -> int:
    sh = _shape(args)
    if args.w is None:
        raise InputError("--w is required")
    try:
        w = Permutation(_ints(args.w))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    try:
        dd = fukaya.decorate(sh, w, args.kind)
    except fukaya.InadmissibleError as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    if args.svg:
        path = fukaya.render_svg(dd, _resolve(args.svg, args.out_dir))
        print(f"wrote {path}", file=sys.stderr)
    if args.format == "json":
        payload = {
            "shape": _shape_json(sh),
            "kind": args.kind,
            "w": list(w.images),
            "gm_nodes": sorted(map(list, dd.gm_nodes)),
            "a1_nodes": sorted(map(list, dd.a1_nodes)),
            "counts": list(fukaya.node_counts(dd)),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(fukaya.render_text(dd), end="")
    return EXIT_OK


def _check_shape(sh: shapes.Shape, prime: int | None) -> dict[str, bool]:
    checks: dict[str, bool] = {}
    checks["weq_recursion"] = shapes.weq_recursive(sh) == shapes.weq_set(sh)
    gauss, deo = strata.gauss_strata(sh), strata.deodhar_strata(sh)
    checks["gauss_nodes"] = all(
        fukaya.node_counts(fukaya.decorate(sh, s.w, "gauss")) == (s.alpha, s.beta) for s in gauss
    )
    checks["deodhar_nodes"] = all(
        fukaya.node_counts(fukaya.decorate(sh, s.w, "deodhar")) == (s.alpha, s.beta) for s in deo
    )
    pc = eval_t(strata.point_count_poly(deo), -1)
    checks["gauss_vs_deodhar"] = eval_t(strata.point_count_poly(gauss), -1) == pc
    checks["model_vs_strata"] = eval_t(nilcox.model_mixpol(sh), -1) == pc
    sizes = {s.w: (s.alpha, s.beta) for s in deo}
    try:
        bij = shapes.comparison_bijection(sh)
        checks["comparison_bijection"] = all(shapes.deodhar_cell_size(g) == sizes[w] for g, w in bij.items())
    except RuntimeError:
        checks["comparison_bijection"] = False
    x = cato.psi_inverse(sh.I, sh.n, sh.d)
    y = cato.psi_inverse(sh.J, sh.n, sh.d)
    checks["catO_identity"] = cato.crosscheck(x, y).ok
    checks["shelton"] = cato.ext_profile(cato.mixpol_lie(x, y)) == cato.shelton_dims(x, y)
    if prime is not None:
        counts = oracle.count_by_stratum(sh, prime)
        checks["oracle_strata"] = counts == {
            s.w: oracle.stratum_count(s.alpha, s.beta, prime) for s in deo
        }
        checks["oracle_total"] = sum(counts.values()) == pc(prime)
    return checks


def cmd_verify(args: argparse.Namespace) -> int:
    if args.n is None or args.d is None:
        raise InputError("verify needs --n and --d")
    if not (0 <= args.d <= args.n <= 7 and args.d <= 3):
        raise InputError("verify bounds are n <= 7, d <= 3")
    if args.prime is not None and args.prime not in oracle.PRIMES:
        raise InputError(f"--prime must be one of {oracle.PRIMES}")
    grids = [(n, d) for n in range(1, args.n + 1) for d in range(1, min(args.d, n) + 1)] if args.sweep else [(args.n, args.d)]
    results = []
    for n, d in grids:
        for sh in shapes.comparable_pairs(n, d):
            results.append((sh, _check_shape(sh, args.prime)))
    algebra = {}
    for d in range(1, min(args.d, 3) + 1):
        c = nilcox.build_complex(list(symmetric_group(d)), d)
        algebra[f"GL{d}_cohomology"] = nilcox.mixpol(c) == nilcox.full_group_poincare(d)
        algebra[f"d_squared_S{d}"] = all(
            nilcox.nc_differential(nilcox.nc_differential(nilcox.delta(w, S))).is_zero()
            for w in symmetric_group(d)
            for S in nilcox._all_subsets(d)
        )
    totals: dict[str, list[int]] = {}
    for _, checks in results:
        for name, ok in checks.items():
            totals.setdefault(name, [0, 0])[0 if ok else 1] += 1
    for name, ok in algebra.items():
        totals[name] = [int(ok), int(not ok)]
    failures = [(sh, name) for sh, checks in results for name, ok in checks.items() if not ok]
    failures += [(None, name) for name, ok in algebra.items() if not ok]
    if args.format == "json":
        payload = {
            "grids": [list(g) for g in grids],
            "pairs": len(results),
            "checks": {name: {"pass": p, "fail": f} for name, (p, f) in sorted(totals.items())},
            "failures": [{"shape": _shape_json(sh) if sh else None, "check": name} for sh, name in failures],
        }
        text = json.dumps(payload, indent=2)
        print(text)
        if args.report:
            _resolve(args.report, args.out_dir).write_text(text + "\n", encoding="utf-8")
    else:
        print(f"verified {len(results)} pairs over {grids}")
        for name, (p, f) in sorted(totals.items()):
            print(f"  {'PASS' if not f else 'FAIL'} {name}: {p} passed, {f} failed")
        for sh, name in failures:
            print(f"  failure: {name} on {sh}")
    return EXIT_FAIL if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="richardson",
        description="Decompositions and cohomology of open Richardson varieties in Grassmannians.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, help="ambient size n of Gr(d, n)")
        p.add_argument("--d", type=int, help="rank d (optional, checked against I and J)")
        p.add_argument("--I", help="comma separated subset I")
        p.add_argument("--J", help="comma separated subset J")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--out-dir", help=f"directory for output files (overrides ${OUTPUT_ENV})")

    p = sub.add_parser("strata", help="list the strata of R(I,J)")
    common(p)
    p.add_argument("--kind", choices=("gauss", "deodhar"), default="deodhar")
    p.set_defaults(func=cmd_strata)

    p = sub.add_parser("poincare", help="mixed Hodge polynomial from the dg-model")
    common(p)
    p.add_argument("--lie", action="store_true", help="also compute the Ext polynomial and compare")
    p.add_argument("--x", help="label x in one-line notation (with --lie)")
    p.add_argument("--y", help="label y in one-line notation (with --lie)")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("diagram", help="render a decorated Fukaya diagram")
    common(p)
    p.add_argument("--kind", choices=("gauss", "deodhar"), default="deodhar")
    p.add_argument("--w", help="permutation of S_d in one-line notation")
    p.add_argument("--svg", help="write an SVG file (relative paths go to the output directory)")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("verify", help="run the invariant checks over a Grassmannian")
    common(p)
    p.add_argument("--prime", type=int, help="also compare with finite field point counts")
    p.add_argument("--sweep", action="store_true", help="cover every Gr(d', n') with d' <= d, n' <= n")
    p.add_argument("--report", help="write the JSON report to this file")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
