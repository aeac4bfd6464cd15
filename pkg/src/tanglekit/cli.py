"""``tanglekit`` command line front end."""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Callable

from . import bracket as br
from . import classify as cl
from . import dna
from .coloring import ColoringError, color_general, color_standard, coloring_fraction
from .contfrac import ContinuedFraction, component_count, connectivity, expand_canonical
from .diagram import build_expr, denominator, numerator, to_pd
from .expr import IntTangle, eval_expr, is_rational
from .fraction import Fraction, IndeterminateError
from .laurent import eval_sqrt_i
from .notation import Closure, ParseError, as_tangle, parse, to_text

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


# ------------------------------------------------------------------ helpers


def _expr(text: str):
    try:
        return parse(text)
    except ParseError as e:
        raise UsageError(str(e)) from None


def _tangle(text: str):
    node = _expr(text)
    if isinstance(node, Closure):
        raise UsageError("expected a tangle expression, got a closure; use --closure")
    return as_tangle(node)


def _fraction(text: str) -> Fraction:
    """A fraction literal, or any expression with a rational value."""
    node = _expr(text)
    if isinstance(node, Fraction):
        return node
    if isinstance(node, Closure):
        raise UsageError("expected a fraction, got a closure")
    t = as_tangle(node)
    if not is_rational(t):
        raise DomainError(f"{to_text(node)} is not a rational tangle")
    return eval_expr(t)


def _closure_args(text: str, closure: str | None):
    """(tangle, closure) from either ``N(expr)`` or ``expr --closure N``."""
    node = _expr(text)
    if isinstance(node, Closure):
        if closure and closure != node.which:
            raise UsageError(f"expression is {node.which}(...) but --closure {closure} was given")
        return node.operand, node.which
    return as_tangle(node), closure


def _cf_for(t) -> ContinuedFraction | None:
    if isinstance(t, ContinuedFraction):
        return t
    if isinstance(t, IntTangle):
        return ContinuedFraction((t.n,))
    return None


# ----------------------------------------------------------------- commands


def cmd_frac(args) -> dict:
    t = _tangle(args.expr)
    methods = ["contfrac", "bracket", "coloring"] if args.method == "all" else [args.method]
    rational = is_rational(t)
    results: dict[str, str] = {}
    skipped: dict[str, str] = {}
    for m in methods:
        try:
            if m == "contfrac":
                results[m] = str(eval_expr(t))
            elif m == "bracket":
                results[m] = str(br.fraction_bracket(t))
            else:
                cf = _cf_for(t)
                if cf is not None:
                    mat = color_standard(cf).matrix
                else:
                    mat = color_general(build_expr(t))
                results[m] = str(coloring_fraction(mat))
        except (ColoringError, IndeterminateError, br.BracketError) as e:
            if args.method != "all":
                raise DomainError(f"{m}: {e}") from None
            skipped[m] = str(e)
    values = set(results.values())
    out = {"fraction": next(iter(values)) if len(values) == 1 else None, "rational": rational, "methods": results}
    if skipped:
        out["not_applicable"] = skipped
    if len(values) > 1:
        out["disagreement"] = True
    if not results:
        raise DomainError("no method applies: " + "; ".join(f"{k}: {v}" for k, v in skipped.items()))
    return out


def show_frac(r: dict) -> str:
    if r.get("disagreement"):
        return "DISAGREEMENT " + ", ".join(f"{k}={v}" for k, v in r["methods"].items())
    lines = [r["fraction"]]
    if len(r["methods"]) > 1 or r.get("not_applicable"):
        lines += [f"  {k}: {v}" for k, v in r["methods"].items()]
        lines += [f"  {k}: n/a ({v})" for k, v in r.get("not_applicable", {}).items()]
    if not r["rational"]:
        lines.append("  note: not a rational tangle; the fraction is still an invariant but not complete")
    return "\n".join(lines)


def cmd_canon(args) -> dict:
    f = _fraction(args.value)
    cf = expand_canonical(f)
    return {"fraction": str(f), "canonical": str(cf)}


def cmd_bracket(args) -> dict:
    t, closure = _closure_args(args.expr, args.closure)
    pair = br.bracket_tangle(t)
    if closure is None:
        if args.normalized:
            raise UsageError("--normalized needs a closure")
        return {"pair": pair.to_json(), "text": str(pair)}
    poly = br.closure_bracket(pair, closure)
    out = {"closure": closure, "bracket": poly.to_json(), "text": str(poly)}
    if args.normalized:
        d = build_expr(t)
        closed = numerator(d) if closure == "N" else denominator(d)
        f = br.normalized_f(closed)
        out.update(normalized=f.to_json(), text=str(f), writhe=sum(br.crossing_signs(closed)))
    return out


def cmd_det(args) -> dict:
    t, closure = _closure_args(args.expr, args.closure)
    if closure is None:
        raise UsageError("det needs --closure N|D or an N(...)/D(...) expression")
    poly = br.closure_bracket(br.bracket_tangle(t), closure)
    return {"closure": closure, "determinant": br.determinant(poly), "value_at_sqrt_i": str(eval_sqrt_i(poly))}


def cmd_equiv(args) -> dict:
    f1, f2 = _fraction(args.f1), _fraction(args.f2)
    w = cl.equivalence_witness(f1, f2, oriented=args.oriented)
    norm = cl.normalize_oriented if args.oriented else cl.normalize_unoriented
    return {
        "equivalent": w is not None,
        "witness": w,
        "oriented": args.oriented,
        "classes": [str(norm(f1)), str(norm(f2))],
    }


def show_equiv(r: dict) -> str:
    if r["equivalent"]:
        return f"true ({r['witness']})"
    return f"false ({r['classes'][0]} vs {r['classes'][1]})"


def cmd_achiral(args) -> dict:
    f = _fraction(args.value)
    ok = cl.is_achiral(f)
    out = {"fraction": str(f), "achiral": ok, "class": str(cl.normalize_unoriented(f))}
    if ok and abs(f.p) > 1:
        out["form"] = str(cl.achiral_form(f))
    return out


def cmd_stronginv(args) -> dict:
    f = _fraction(args.value)
    try:
        ok = cl.is_strongly_invertible(f)
    except (cl.ComponentError, cl.DegenerateClassError) as e:
        raise DomainError(str(e)) from None
    out = {"fraction": str(f), "strongly_invertible": ok}
    if ok:
        out["form"] = str(cl.strong_form(f))
    return out


def show_bool(key: str) -> Callable[[dict], str]:
    def show(r: dict) -> str:
        s = "true" if r[key] else "false"
        return f"{s} {r['form']}" if "form" in r else s

    return show


def cmd_components(args) -> dict:
    f = _fraction(args.value)
    return {"fraction": str(f), "components": component_count(f), "connectivity": str(connectivity(f))}


def cmd_dna_generate(args) -> dict:
    try:
        m = dna.Machine.from_fraction(Fraction.parse(args.substrate), args.r)
    except ValueError as e:
        raise DomainError(str(e)) from None
    if args.N < 0:
        raise UsageError("N must be nonnegative")
    fracs = dna.generate(m, args.N)
    obs = dna.observe(m, range(args.N + 1))
    return {
        "machine": {"substrate": str(m.substrate), "r": m.r},
        "threshold": str(dna.threshold(m)),
        "fractions": [str(f) for f in fracs],
        "observations": [{"n": o.n, "class": str(o.knot)} for o in obs],
        "text": f"# {m}; threshold {dna.threshold(m)}\n"
        + "".join(f"{line}  # K_{o.n} = N({f})\n" for line, o, f in zip(dna.format_observations(obs).splitlines(), obs, fracs)),
    }


def cmd_dna_solve(args) -> dict:
    try:
        with open(args.obsfile, encoding="utf-8") if args.obsfile != "-" else sys.stdin as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {args.obsfile}: {e.strerror}") from None
    obs = dna.parse_observations(text)
    sol = dna.solve(obs, pmax=args.pmax, qmax=args.qmax, rmax=args.rmax)
    return sol.to_json()


def show_dna_solve(r: dict) -> str:
    head = r["status"] + ("" if r["complete"] else " (search bounded)")
    lines = [head]
    for m in r["machines"]:
        met = "bound met" if m["bound_met"] else "bound not met"
        lines.append(f"  {m['substrate']}, r={m['r']}  (threshold {m['threshold']}, {met})")
    return "\n".join(lines)


# -------------------------------------------------------------------- setup


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON record")
    common.add_argument("--dump-pd", action="store_true", help="print the PD code of the diagram involved")

    p = argparse.ArgumentParser(prog="tanglekit", description="Rational tangle calculus")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("frac", parents=[common], help="fraction of a tangle")
    s.add_argument("expr")
    s.add_argument("--method", choices=["bracket", "coloring", "contfrac", "all"], default="contfrac")
    s.set_defaults(run=cmd_frac, show=show_frac)

    s = sub.add_parser("canon", parents=[common], help="canonical continued fraction")
    s.add_argument("value")
    s.set_defaults(run=cmd_canon, show=lambda r: r["canonical"])

    s = sub.add_parser("bracket", parents=[common], help="bracket pair or closure bracket")
    s.add_argument("expr")
    s.add_argument("--closure", choices=["N", "D"])
    s.add_argument("--normalized", action="store_true")
    s.set_defaults(run=cmd_bracket, show=lambda r: r["text"])

    s = sub.add_parser("det", parents=[common], help="determinant of a closure")
    s.add_argument("expr")
    s.add_argument("--closure", choices=["N", "D"])
    s.set_defaults(run=cmd_det, show=lambda r: str(r["determinant"]))

    s = sub.add_parser("equiv", parents=[common], help="Schubert equivalence of closures")
    s.add_argument("f1")
    s.add_argument("f2")
    s.add_argument("--oriented", action="store_true")
    s.set_defaults(run=cmd_equiv, show=show_equiv)

    s = sub.add_parser("achiral", parents=[common], help="achirality of N(p/q)")
    s.add_argument("value")
    s.set_defaults(run=cmd_achiral, show=show_bool("achiral"))

    s = sub.add_parser("stronginv", parents=[common], help="strong invertibility of a 2-component N(p/q)")
    s.add_argument("value")
    s.set_defaults(run=cmd_stronginv, show=show_bool("strongly_invertible"))

    s = sub.add_parser("components", parents=[common], help="components and connectivity type")
    s.add_argument("value")
    s.set_defaults(run=cmd_components, show=lambda r: f"{r['components']} (connectivity {r['connectivity']})")

    d = sub.add_parser("dna", parents=[common], help="recombination machine")
    dsub = d.add_subparsers(dest="dna_command", required=True)
    s = dsub.add_parser("generate", parents=[common], help="emit observations of K_0..K_N")
    s.add_argument("substrate", help="substrate fraction p/q")
    s.add_argument("r", type=int)
    s.add_argument("N", type=int)
    s.set_defaults(run=cmd_dna_generate, show=lambda r: r["text"].rstrip("\n"))
    s = dsub.add_parser("solve", parents=[common], help="recover machines from an observation file")
    s.add_argument("obsfile", help="observation file, '-' for stdin")
    s.add_argument("--pmax", type=int)
    s.add_argument("--qmax", type=int)
    s.add_argument("--rmax", type=int)
    s.set_defaults(run=cmd_dna_solve, show=show_dna_solve)
    return p


def _protect_negatives(argv: list[str]) -> list[str]:
    # "-1/3" or "-[3]" are values, not options
    return [" " + a if re.match(r"^-[^-a-zA-Z]", a) else a for a in argv]


def _pd_dump(args) -> str | None:
    text = getattr(args, "expr", None) or getattr(args, "value", None)
    if text is None:
        return None
    node = _expr(text)
    if isinstance(node, Closure):
        d = build_expr(node.operand)
        d = numerator(d) if node.which == "N" else denominator(d)
    else:
        d = build_expr(as_tangle(node) if not isinstance(node, Fraction) else expand_canonical(node))
        closure = getattr(args, "closure", None)
        if closure:
            d = numerator(d) if closure == "N" else denominator(d)
    return to_pd(d)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    argv = _protect_negatives(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        result = args.run(args)
        pd = _pd_dump(args) if args.dump_pd else None
    except UsageError as e:
        print(f"tanglekit: usage error: {e}", file=sys.stderr)
        return 2
    except (DomainError, ValueError, ArithmeticError) as e:
        print(f"tanglekit: error: {e}", file=sys.stderr)
        return 1
    if args.json:
        record = {"schema": SCHEMA_VERSION, "command": args.command, **result}
        record.pop("text", None)
        if pd is not None:
            record["pd"] = pd
        print(json.dumps(record, ensure_ascii=False))
    else:
        print(args.show(result))
        if pd is not None:
            print(pd)
    return 1 if result.get("disagreement") else 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
