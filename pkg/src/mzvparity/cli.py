"""Command-line interface: reduce indices, evaluate symbols, verify identities.

Exit codes: 0 on success (including skipped verifications), 1 when a
verification fails, 2 on usage errors (bad index, parity violation,
missing T for a divergent index, unknown identity, bad z).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from mpmath import mp

from .errors import MzvError
from .harmonic import (
    as_composition,
    compositions_up_to,
    depth,
    is_admissible,
    star_expand,
    weight,
)
from .hurwitz import eval_hurwitz_direct, eval_hurwitz_star, eval_shifted, shifted_tpoly
from .multitangent import eval_monotangent, eval_multitangent_regularized
from .mzv import eval_pigraded, eval_tpoly
from .precision import PrecisionContext
from .reduction import reduce_main, reduce_main3
from .regularization import regularize
from .render import (
    format_composition,
    latex_reduction,
    latex_table,
    reduction_to_json,
    render_display_text,
    render_expanded_text,
    table_entries,
)
from .verify import IDENTITIES, sweep

__all__ = ["main"]


class UsageError(Exception):
    pass


def _parse_composition(text: str):
    try:
        parts = [int(p) for p in text.split(",") if p.strip() != ""]
        return as_composition(parts)
    except ValueError as exc:
        raise UsageError(f"invalid composition {text!r}: {exc}") from None


def _parse_z(text: Optional[str]):
    if text is None:
        raise UsageError("this command needs an evaluation point --z re[,im]")
    try:
        parts = text.split(",")
        re = mp.mpf(parts[0])
        im = mp.mpf(parts[1]) if len(parts) > 1 else mp.mpf(0)
    except Exception:
        raise UsageError(f"invalid z {text!r}: expected decimals 're' or 're,im'") from None
    return re if im == 0 else mp.mpc(re, im)


def _default_digits() -> int:
    env = os.environ.get("MZV_DIGITS")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"MZV_DIGITS={env!r} is not an integer") from None
    return 30


def _context(args) -> PrecisionContext:
    digits = args.digits if args.digits is not None else _default_digits()
    try:
        return PrecisionContext(digits=digits)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _cmd_reduce(args) -> int:
    c = _parse_composition(args.composition)
    ctx = _context(args)
    try:
        result = reduce_main3(c) if args.allow_nonadmissible else reduce_main(c)
    except MzvError as exc:
        raise UsageError(str(exc)) from None
    T = mp.mpf(args.T) if args.T is not None else 0
    val = eval_pigraded(result.expanded, T, ctx)
    if args.format == "json":
        _emit(json.dumps(reduction_to_json(result, ctx, value=val.value), indent=2), args.output)
    elif args.format == "latex":
        _emit(latex_reduction(result) + f"\n% value = {mp.nstr(val.value, ctx.digits)}", args.output)
    else:
        lines = [
            f"zeta({format_composition(c)}) =",
            "  " + render_display_text(result),
            "expanded:",
            "  " + render_expanded_text(result.expanded),
            f"value = {mp.nstr(val.value, ctx.digits)}  (error bound {mp.nstr(val.bound, 3)})",
        ]
        _emit("\n".join(lines), args.output)
    return 0


def _require_T_if_divergent(tpoly, T) -> None:
    deg = tpoly.t_degree
    if deg not in (None, 0) and T is None:
        raise UsageError("non-admissible index: supply a regularization value with --T")


def _cmd_eval(args) -> int:
    ctx = _context(args)
    T = mp.mpf(args.T) if args.T is not None else None
    symbol = args.symbol
    out_value = None
    out_bound = None
    if symbol == "monotangent":
        try:
            order = int(args.index)
        except ValueError:
            raise UsageError("monotangent needs an integer order") from None
        v = eval_monotangent(order, _parse_z(args.z), ctx)
        out_value, out_bound = v.value, v.bound
    else:
        c = _parse_composition(args.index)
        if symbol == "mzv":
            tp = regularize(c)
            _require_T_if_divergent(tp, T)
            v = eval_tpoly(tp, T if T is not None else 0, ctx)
        elif symbol == "star":
            tp = regularize(star_expand(c))
            _require_T_if_divergent(tp, T)
            v = eval_tpoly(tp, T if T is not None else 0, ctx)
        elif symbol == "shifted":
            tp = shifted_tpoly(c, args.a)
            _require_T_if_divergent(tp, T)
            v = eval_shifted(c, args.a, T if T is not None else 0, ctx)
        elif symbol == "hurwitz":
            z = _parse_z(args.z)
            if is_admissible(c) and T is None:
                v = eval_hurwitz_direct(c, z, ctx)
            else:
                tp = regularize(c)
                _require_T_if_divergent(tp, T)
                v = eval_hurwitz_star(c, z, T if T is not None else 0, ctx)
        elif symbol == "multitangent":
            z = _parse_z(args.z)
            v = eval_multitangent_regularized(c, z, T if T is not None else 0, ctx)
        else:  # pragma: no cover - argparse restricts choices
            raise UsageError(f"unknown symbol {symbol!r}")
        out_value, out_bound = v.value, v.bound
    if args.format == "json":
        _emit(
            json.dumps(
                {
                    "symbol": symbol,
                    "index": args.index,
                    "value": mp.nstr(out_value, ctx.digits),
                    "error_bound": mp.nstr(out_bound, 5),
                    "digits": ctx.digits,
                }
            ),
            args.output,
        )
    else:
        _emit(
            f"{mp.nstr(out_value, ctx.digits)}  (error bound {mp.nstr(out_bound, 3)})",
            args.output,
        )
    return 0


def _cmd_verify(args) -> int:
    ctx = _context(args)
    if args.identity not in IDENTITIES:
        raise UsageError(
            f"unknown identity {args.identity!r}; choose from {sorted(IDENTITIES)}"
        )
    z = _parse_z(args.z) if args.identity == "bouillot" else None
    T = mp.mpf(args.T) if args.T is not None else 0
    if args.k is None and args.max_weight is None:
        raise UsageError("verify needs --k or --max-weight")
    if args.k is not None:
        c = _parse_composition(args.k)
        fn = IDENTITIES[args.identity]
        if args.identity == "main":
            reports = [fn(c, ctx)]
        elif args.identity in ("main2", "main3"):
            reports = [fn(c, ctx, T_values=(0, 1))]
        elif args.identity == "fundeq2":
            reports = [fn(c, ctx, T_value=T)]
        else:
            reports = [fn(c, z, ctx, T_value=T)]
    else:
        try:
            reports = sweep(args.max_weight, args.identity, ctx, z=z, T_value=T)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    failed = [r for r in reports if r.status == "fail"]
    if args.format == "json":
        rows = [
            {
                "identity": r.identity,
                "composition": list(r.composition),
                "status": r.status,
                "residual": mp.nstr(r.residual, 5),
                "bound": mp.nstr(r.bound, 5),
                "reason": r.reason,
            }
            for r in reports
        ]
        _emit(json.dumps(rows, indent=2), args.output)
    else:
        lines = [r.describe() for r in reports]
        n_pass = sum(r.status == "pass" for r in reports)
        n_skip = sum(r.status == "skip" for r in reports)
        lines.append(
            f"-- {n_pass} passed, {n_skip} skipped, {len(failed)} failed "
            f"(digits={ctx.digits})"
        )
        _emit("\n".join(lines), args.output)
    return 1 if failed else 0


def _cmd_table(args) -> int:
    ctx = _context(args)
    results = []
    for c in compositions_up_to(args.max_weight):
        if not is_admissible(c) or weight(c) % 2 == depth(c) % 2:
            continue
        results.append(reduce_main(c))
    if args.format == "latex":
        _emit(latex_table(results, ctx), args.output)
    else:
        _emit(json.dumps(table_entries(results, ctx), indent=2), args.output)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mzvparity",
        description="Parity reduction and verification toolkit for multiple zeta values.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, fmt_choices=("text", "json", "latex")):
        p.add_argument("--digits", type=int, default=None, help="target digits (default: MZV_DIGITS or 30)")
        p.add_argument("--format", choices=fmt_choices, default=fmt_choices[0])
        p.add_argument("--output", "-o", default=None, help="write output to this path")

    p = sub.add_parser("reduce", help="reduce an opposite-parity index to lower depth")
    p.add_argument("composition", help="comma-separated parts, e.g. 1,2")
    p.add_argument("--allow-nonadmissible", action="store_true",
                   help="reduce the regularized value (adds the all-ones correction)")
    p.add_argument("--T", default=None, help="value substituted for T in the numeric output")
    common(p)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("eval", help="evaluate one symbol numerically")
    p.add_argument("symbol", choices=["mzv", "star", "shifted", "hurwitz", "multitangent", "monotangent"])
    p.add_argument("index", help="composition (or order for monotangent)")
    p.add_argument("--a", type=int, default=0, help="shift order for 'shifted'")
    p.add_argument("--z", default=None, help="evaluation point re[,im]")
    p.add_argument("--T", default=None, help="regularization value for divergent indices")
    common(p, fmt_choices=("text", "json"))
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("verify", help="verify one identity for an index or a weight sweep")
    p.add_argument("identity", help="main | main2 | main3 | fundeq2 | bouillot")
    p.add_argument("--k", default=None, help="single composition to check")
    p.add_argument("--max-weight", type=int, default=None, help="sweep all compositions up to this weight")
    p.add_argument("--z", default=None, help="evaluation point for bouillot")
    p.add_argument("--T", default=None, help="regularization value (default 0)")
    common(p, fmt_choices=("text", "json"))
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("table", help="export reductions for all opposite-parity admissible indices")
    p.add_argument("--max-weight", type=int, required=True)
    common(p, fmt_choices=("json", "latex"))
    p.set_defaults(func=_cmd_table)

    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MzvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
