"""Command-line front end.

Every subcommand prints human-readable text by default and a stable JSON
document under --json.  Exit codes: 0 success, 1 domain error (with
{"error": name} in JSON mode), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import finalg, freealg, homology, operads, trees
from .errors import DialabError
from .lincomb import Lin


class UsageError(Exception):
    """Missing or inconsistent flags; exits with status 2 like argparse."""


def _emit(args, human, payload):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _fmt_frac(c):
    c = Fraction(c)
    return int(c) if c.denominator == 1 else "%d/%d" % (c.numerator,
                                                        c.denominator)


def _lin_payload(x: Lin, render=str):
    return [[_fmt_frac(c), render(t)] for t, c in x.items()]


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def cmd_trees(args):
    if args.count and args.n is None:
        raise UsageError("--count needs --n")
    if args.n is not None:
        ts = trees.enumerate_trees(args.n)
        if args.count:
            _emit(args, str(len(ts)), {"n": args.n, "count": len(ts)})
        else:
            names = [trees.format_name(t) for t in ts]
            _emit(args, "\n".join(names), {"n": args.n, "trees": names})
        return
    if args.parse is not None:
        t = trees.parse_name(args.parse)
        _emit(args, trees.format_name(t),
              {"tree": trees.format_name(t), "degree": t.degree})
        return
    if args.graft is not None:
        a, b = (trees.parse_name(s) for s in args.graft)
        t = trees.graft(a, b)
        _emit(args, trees.format_name(t), {"tree": trees.format_name(t)})
        return
    if args.split is not None:
        l, r = trees.split(trees.parse_name(args.split))
        human = "%s %s" % (trees.format_name(l), trees.format_name(r))
        _emit(args, human, {"left": trees.format_name(l),
                            "right": trees.format_name(r)})
        return
    if args.face is not None:
        t = trees.face(trees.parse_name(args.face), args.i)
        _emit(args, trees.format_name(t), {"tree": trees.format_name(t)})
        return
    if args.expand is not None:
        t = trees.expand(trees.parse_name(args.expand), args.i, args.mode)
        _emit(args, trees.format_name(t), {"tree": trees.format_name(t)})
        return
    raise UsageError("nothing to do: pass --n, --parse, --graft, "
                     "--split, --face or --expand")


def cmd_psi(args):
    if args.fiber is not None:
        y = trees.parse_name(args.fiber)
        coding = "height" if args.prime else "depth"
        fib = trees.tree_fiber(y, coding)
        names = [str(p) for p in fib]
        _emit(args, "\n".join(names),
              {"tree": trees.format_name(y), "coding": coding,
               "fiber": names})
        return
    if args.perm is None:
        raise UsageError("pass --perm or --fiber")
    sigma = trees.parse_permutation(args.perm)
    coding = "height" if args.prime else "depth"
    t = trees.perm_to_tree(sigma, coding)
    _emit(args, trees.format_name(t),
          {"perm": str(sigma), "coding": coding,
           "tree": trees.format_name(t)})


def _parse_dend(text):
    return freealg.parse_lincomb(text, freealg.parse_dend_term)


def cmd_dend_mul(args):
    a = _parse_dend(args.a)
    b = _parse_dend(args.b)
    out = freealg.dend_mul(a, b, args.op)
    _emit(args, out.format(), {"op": args.op, "result": _lin_payload(out)})


def cmd_dias_mul(args):
    a = freealg.parse_lincomb(args.a, freealg.parse_pointed_word)
    b = freealg.parse_lincomb(args.b, freealg.parse_pointed_word)
    side = trees.LEFT if args.op == "left" else trees.RIGHT
    out = freealg.dias_mul(a, b, side)
    _emit(args, out.format(), {"op": args.op, "result": _lin_payload(out)})


def cmd_zinb_mul(args):
    a = freealg.parse_lincomb(args.a, freealg.parse_word)
    b = freealg.parse_lincomb(args.b, freealg.parse_word)
    out = freealg.zinb_mul(a, b, args.mode)
    _emit(args, out.format(), {"mode": args.mode,
                               "result": _lin_payload(out)})


def cmd_bracket(args):
    a = freealg.parse_lincomb(args.a, freealg.parse_pointed_word)
    b = freealg.parse_lincomb(args.b, freealg.parse_pointed_word)
    out = freealg.dias_bracket(a, b)
    _emit(args, out.format(), {"result": _lin_payload(out)})


def _load_algebra(path, check=True):
    with open(path, "r", encoding="utf-8") as fh:
        return finalg.FiniteAlgebra.from_json(fh.read(), check=check)


def cmd_axioms(args):
    alg = _load_algebra(args.file, check=False)
    report = finalg.check_axioms(alg)
    if report == "pass":
        _emit(args, "pass", {"report": "pass"})
    else:
        human = "\n".join(
            "axiom %s fails at basis triple %s" % (a, list(w))
            for a, w in report)
        _emit(args, human,
              {"report": [[a, list(w)] for a, w in report]})


def cmd_halo(args):
    alg = _load_algebra(args.file)
    halo = finalg.bar_units(alg)
    if halo.is_empty:
        _emit(args, "empty", {"empty": True})
        return
    payload = {
        "empty": False,
        "point": [_fmt_frac(c) for c in halo.point],
        "directions": [[_fmt_frac(c) for c in d] for d in halo.directions],
    }
    human = "point: %s\naffine dimension: %d" % (
        payload["point"], len(halo.directions))
    _emit(args, human, payload)


def cmd_assoc(args):
    alg = _load_algebra(args.file)
    quotient, _ = finalg.associativization(alg)
    text = quotient.to_json()
    print(text if args.json else
          "dimension %d\n%s" % (quotient.dim, text))


def cmd_homology(args):
    if args.free:
        if args.weight is None:
            raise UsageError("--free needs --weight")
        source = ("free", args.dimv)
        cx = homology.build_complex(
            args.theory, source, args.max_degree, weight=args.weight)
        betti = cx.betti_table(min(args.max_degree, args.weight))
        payload = {
            "theory": args.theory,
            "weight": args.weight,
            "betti": {str(n): b for n, b in betti.items()},
        }
    else:
        if not args.file:
            raise UsageError("pass --file or --free")
        alg = _load_algebra(args.file)
        if alg.kind == "associative" and args.theory in ("CY", "CS"):
            alg = finalg.as_dialgebra(alg)  # equal left and right products
        cx = homology.build_complex(args.theory, alg, args.max_degree + 1)
        betti = cx.betti_table(args.max_degree)
        payload = {
            "theory": args.theory,
            "betti": {str(n): b for n, b in betti.items()},
        }
    human = "\n".join(
        "H_%s = Q^%s" % (n, b) for n, b in sorted(
            payload["betti"].items(), key=lambda kv: int(kv[0])))
    _emit(args, human, payload)


def cmd_koszul_dual(args):
    if args.preset:
        q = operads.preset_quadratic(args.preset)
    elif args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            q = operads.QuadraticData.from_json_dict(json.load(fh))
    else:
        raise UsageError("pass --preset or --file")
    dual = operads.quadratic_dual(q)
    payload = dual.to_json_dict()
    human = "generators: %s\nrelations (%d):\n%s" % (
        " ".join(dual.generators), dual.n_relations,
        "\n".join(str(r) for r in payload["relations"]))
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def cmd_poincare(args):
    report = operads.poincare_check(args.degree)
    series = report["dias" if args.preset == "dias" else "dend"]
    coeffs = [_fmt_frac(c) for c in series.coeffs]
    payload = {
        "preset": args.preset,
        "degree": args.degree,
        "coefficients": coeffs,
        "closed_form_ok": report["%s_closed_form_ok" % args.preset],
    }
    lines = ["coefficients: %s" % (coeffs,)]
    if args.check_inverse:
        payload["inverse_ok"] = report["inverse_ok"]
        lines.append(
            "OK: g_Dend(g_Dias(x)) = x mod x^%d" % (args.degree + 1)
            if report["inverse_ok"] else "FAIL: composition is not x")
    _emit(args, "\n".join(lines), payload)


def cmd_compose(args):
    outer = trees.parse_name(args.outer)
    inner = trees.parse_name(args.inner)
    report = operads.compose_report(outer, args.pos, inner)
    value = report["value"]
    payload = {
        "result": _lin_payload(value, trees.format_name),
        "printed_orientation_matches": report["printed_orientation_matches"],
        "mirrored_orientation_matches":
            report["mirrored_orientation_matches"],
    }
    _emit(args, value.format(trees.format_name), payload)


def cmd_sh_relations(args):
    rels = operads.sh_relations(args.n)
    payload = {"n": args.n,
               "relations": [r.to_json_dict() for _, r in rels]}
    lines = []
    for y, r in rels:
        lines.append("tree %s: %d terms" % (trees.format_name(y),
                                            len(r.terms)))
    _emit(args, "\n".join(lines), payload)


def cmd_zinb_map(args):
    if args.tree:
        term = freealg.DendTerm(
            trees.parse_name(args.tree),
            tuple(args.letters.split()) if args.letters else tuple(
                "x%d" % i
                for i in range(1, trees.parse_name(args.tree).degree + 1)))
        x = Lin.term(term)
    else:
        x = _parse_dend(args.term)
    out = freealg.dendriform_to_zinbiel(x)
    _emit(args, out.format(), {"result": _lin_payload(out)})


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="dialab",
        description="planar-tree and two-product algebra calculator")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        sp = sub.add_parser(name, **kwargs)
        sp.set_defaults(fn=fn)
        sp.add_argument("--json", action="store_true",
                        help="machine-readable output")
        return sp

    sp = add("trees", cmd_trees, help="enumerate and edit trees")
    sp.add_argument("--n", type=int)
    sp.add_argument("--count", action="store_true")
    sp.add_argument("--parse")
    sp.add_argument("--graft", nargs=2, metavar=("LEFT", "RIGHT"))
    sp.add_argument("--split")
    sp.add_argument("--face")
    sp.add_argument("--expand")
    sp.add_argument("--i", type=int, default=0)
    sp.add_argument("--mode", choices=["bifurcate", "parallel_last"],
                    default="bifurcate")

    sp = add("psi", cmd_psi, help="permutation/tree codings")
    sp.add_argument("--perm")
    sp.add_argument("--prime", action="store_true",
                    help="use the height coding")
    sp.add_argument("--fiber", metavar="TREE")

    sp = add("dend-mul", cmd_dend_mul, help="free dendriform products")
    sp.add_argument("--op", choices=["prec", "succ", "star"], required=True)
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("dias-mul", cmd_dias_mul, help="free two-product products")
    sp.add_argument("--op", choices=["left", "right"], required=True)
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("zinb-mul", cmd_zinb_mul, help="half-shuffle products")
    sp.add_argument("--mode", choices=["dot", "symmetrized"], default="dot")
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("bracket", cmd_bracket, help="bracket on pointed words")
    sp.add_argument("a")
    sp.add_argument("b")

    for name, fn in (("axioms", cmd_axioms), ("halo", cmd_halo),
                     ("assoc", cmd_assoc)):
        sp = add(name, fn, help="%s of a structure-constant algebra" % name)
        sp.add_argument("--file", required=True)

    sp = add("homology", cmd_homology, help="exact Betti numbers")
    sp.add_argument("--file")
    sp.add_argument("--free", action="store_true")
    sp.add_argument("--dimv", type=int, default=1)
    sp.add_argument("--weight", type=int)
    sp.add_argument("--theory", choices=list(homology.THEORIES),
                    default="CY")
    sp.add_argument("--max-degree", type=int, default=4)

    sp = add("koszul-dual", cmd_koszul_dual, help="dual quadratic data")
    sp.add_argument("--preset", choices=["dias", "dend", "as"])
    sp.add_argument("--file")

    sp = add("poincare", cmd_poincare, help="series and inversion check")
    sp.add_argument("--preset", choices=["dias", "dend"], default="dias")
    sp.add_argument("--degree", type=int, default=10)
    sp.add_argument("--check-inverse", action="store_true")

    sp = add("compose", cmd_compose, help="substitution of tree operations")
    sp.add_argument("--outer", required=True)
    sp.add_argument("--pos", type=int, required=True)
    sp.add_argument("--inner", required=True)

    sp = add("sh-relations", cmd_sh_relations,
             help="homotopy-algebra relation lists")
    sp.add_argument("--n", type=int, required=True)

    sp = add("zinb-map", cmd_zinb_map,
             help="free dendriform to free half-shuffle algebra")
    sp.add_argument("--tree")
    sp.add_argument("--letters")
    sp.add_argument("--term")

    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.fn(args)
    except UsageError as exc:
        print("usage error: %s" % (exc,), file=sys.stderr)
        return 2
    except DialabError as exc:
        if getattr(args, "json", False):
            print(json.dumps({"error": type(exc).__name__,
                              "message": str(exc)}, sort_keys=True))
        else:
            print("error: %s: %s" % (type(exc).__name__, exc),
                  file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print("error: %s" % (exc,), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
