"""Command line interface: ``monoweight <command> ...``.

Words are comma separated operator indices applied right to left, so
``--word 1,0`` means f_1 f_0 applied to the start element (f_0 acts first).

Exit codes: 0 ok, 1 verification mismatch, 2 parse error, 3 not in crystal,
4 unsupported type.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import delta as dl
from . import monomial as mn
from . import oracle
from . import youngwall as yw
from .cartan import CartanDatum, Family, WeightVector, build_datum
from .errors import (
    MonoweightError,
    NotInCrystalError,
    ParseError,
    UnsupportedTypeError,
)
from .monomial import Variant

EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_NOT_IN_CRYSTAL, EXIT_UNSUPPORTED = 0, 1, 2, 3, 4

DEFAULT_DEPTH = {("A", 1): 10, ("A", 2): 7, ("A", 3): 7, ("A", 4): 7, ("B", 3): 6, ("B", 4): 5}

SUITES = {
    "a1": [("A1", 10)],
    "an": [("A2", 7), ("A3", 7), ("A4", 6)],
    "b3": [("B3", 6)],
    "bn": [("B4", 5)],
    "walls": [("A2", 6), ("A3", 5)],
}


def depth_cap(datum: CartanDatum) -> int:
    key = (datum.family.value, datum.n)
    if key in DEFAULT_DEPTH:
        return DEFAULT_DEPTH[key]
    return 5 if datum.family is Family.A else 4


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    s = text.strip()
    if not s:
        return ()
    try:
        return tuple(int(x) for x in s.split(","))
    except ValueError as exc:
        raise ParseError(f"cannot parse {what} {text!r}") from exc


def _word(datum: CartanDatum, text: str) -> tuple[int, ...]:
    word = _parse_ints(text, "word")
    bad = [i for i in word if not 0 <= i < datum.size]
    if bad:
        raise ParseError(f"word letters {bad} outside I = 0..{datum.n}")
    return word


def _lambda(datum: CartanDatum, text: Optional[str]) -> Optional[tuple[int, ...]]:
    if text is None:
        return None
    lam = _parse_ints(text, "dominant weight")
    if len(lam) != datum.size or any(x < 0 for x in lam):
        raise ParseError(f"--lambda needs {datum.size} nonnegative integers")
    return lam


def _element(datum: CartanDatum, args, lam) -> mn.Monomial:
    """The monomial named by --monomial or --word (from 1, or from H_lambda)."""
    if args.monomial is not None:
        return mn.parse_monomial(args.monomial)
    if args.word is None:
        raise ParseError("give --monomial or --word")
    word = _word(datum, args.word)
    if lam is None:
        return mn.apply_word(datum, Variant.INFINITY, mn.ONE, word)
    m = mn.apply_word(datum, Variant.HIGHEST, mn.h_lambda(lam), word)
    if m is None:
        raise NotInCrystalError(f"word {args.word} annihilates H_lambda")
    return m


def cmd_weight(args) -> int:
    datum = build_datum(args.type)
    lam = _lambda(datum, args.lam)
    m = _element(datum, args, lam)
    wt = dl.wt_affine(datum, m) if lam is None else dl.wt_lambda(datum, m, lam)
    if args.json:
        print(json.dumps({"monomial": mn.format_monomial(m), "D": wt.dcoef, "weight": wt.to_dict()}))
    else:
        classical = mn.wt_classical(m, datum.size)
        print(f"monomial : {mn.format_monomial(m)}")
        print(f"classical: {classical}")
        print(f"D        : {wt.dcoef}")
        print(f"weight   : {wt}")
    return EXIT_OK


def cmd_convert(args) -> int:
    datum = build_datum(args.type)
    m = _element(datum, args, None)
    if args.to == "a-table":
        table = dl.a_table(datum, m)
        if args.json:
            print(json.dumps(dl.table_to_json(table)))
        elif not table:
            print("(empty table)")
        else:
            for (i, k), a in table.items():
                print(f"a[{i},{k}] = {a:>4}")
        return EXIT_OK
    if datum.family is not Family.A:
        raise UnsupportedTypeError("walls exist only for type A")
    w = yw.wall_of(m, datum.n)
    print(w.to_json() if args.json else w)
    return EXIT_OK


def cmd_apply(args) -> int:
    datum = build_datum(args.type)
    lam = _lambda(datum, args.lam)
    variant = Variant.INFINITY if lam is None else Variant.HIGHEST
    if args.monomial is not None:
        m: Optional[mn.Monomial] = mn.parse_monomial(args.monomial)
    else:
        m = mn.ONE if lam is None else mn.h_lambda(lam)
    for i in reversed(_word(datum, args.word)):
        if m is None:
            break
        m = mn.apply_e(datum, variant, m, i) if args.raising else mn.apply_f(datum, variant, m, i)
    print("0" if m is None else mn.format_monomial(m))
    return EXIT_OK


def _check_depth(datum: CartanDatum, depth: int, force: bool):
    cap = depth_cap(datum)
    if depth > cap and not force:
        raise ValueError(f"depth {depth} exceeds cap {cap} for {datum.type}; use --force")


def cmd_expand(args) -> int:
    datum = build_datum(args.type)
    _check_depth(datum, args.depth, args.force)
    lam = _lambda(datum, args.lam)
    if args.variant == "lambda":
        if lam is None:
            raise ParseError("--variant lambda needs --lambda")
        graph = oracle.bfs_expand(
            datum,
            Variant.HIGHEST,
            mn.h_lambda(lam),
            args.depth,
            start_weight=WeightVector(lam, 0),
        )
    else:
        graph = oracle.bfs_expand(datum, Variant.INFINITY, mn.ONE, args.depth)
    if args.format == "dot":
        sys.stdout.write(graph.to_dot())
    else:
        print(json.dumps(graph.to_json()))
    return EXIT_OK


def cmd_wall(args) -> int:
    w = yw.parse_wall(args.rows, args.n)
    if not yw.is_proper(w):
        print(f"warning: wall {w} is not proper", file=sys.stderr)
    for i in reversed(_parse_ints(args.word or "", "word")):
        w = yw.apply_f(w, i)
    if args.reduce:
        w = yw.reduce(w)
    out = {
        "n": w.n,
        "rows": list(w.rows),
        "proper": yw.is_proper(w),
        "reduced": yw.is_reduced(w),
        "psi": mn.format_monomial(yw.psi(w)),
        "weight": yw.wall_weight(w).to_dict(),
    }
    if args.json:
        print(json.dumps(out))
    else:
        print(yw.render(w))
        print(f"rows   : {w}")
        print(f"proper : {out['proper']}   reduced: {out['reduced']}")
        print(f"psi    : {out['psi']}")
        print(f"weight : {yw.wall_weight(w)}")
    return EXIT_OK


def cmd_b4seq(args) -> int:
    a, b = oracle.b4_coefficients(args.count)
    print("a_k:", ",".join(map(str, a)))
    print("b_k:", ",".join(map(str, b)))
    return EXIT_OK


def _run_suite(name: str, args) -> list[oracle.Report]:
    if name == "b4seq":
        return []
    if args.type:
        datum = build_datum(args.type)
        depth = args.depth if args.depth is not None else depth_cap(datum)
        if name == "walls":
            if datum.family is not Family.A:
                raise UnsupportedTypeError("walls exist only for type A")
            return [oracle.verify_wall_iso(datum.n, depth)]
        _check_depth(datum, depth, args.force)
        return [oracle.verify_D(datum, depth)]
    reports = []
    for t, depth in SUITES[name]:
        datum = build_datum(t)
        d = args.depth if args.depth is not None else depth
        if name == "walls":
            reports.append(oracle.verify_wall_iso(datum.n, d))
        else:
            _check_depth(datum, d, args.force)
            reports.append(oracle.verify_D(datum, d))
    return reports


def cmd_verify(args) -> int:
    names = list(SUITES) + ["b4seq"] if args.suite == "all" else [args.suite]
    reports: list[oracle.Report] = []
    ok = True
    for name in names:
        reports.extend(_run_suite(name, args))
        if name == "b4seq":
            a, b = oracle.b4_coefficients(21)
            good = a == B4_A and b == B4_B
            ok &= good
            if not args.json:
                print(f"b4seq      a_k = {a}")
                print(f"           b_k = {b}  {'ok' if good else 'MISMATCH'}")
    for r in reports:
        ok &= r.ok
        if not args.json:
            print(r.table())
    if args.json:
        print(json.dumps([r.to_json() for r in reports]))
    return EXIT_OK if ok else EXIT_MISMATCH


# reference values of the B4 coefficient sequences, k = 0..20
B4_A = [1, 0, 1, 1, 2, 1, 3, 2, 3, 3, 4, 3, 5, 4, 5, 5, 6, 5, 7, 6, 7]
B4_B = [0, 1, 0, 2, 1, 2, 2, 3, 2, 4, 3, 4, 4, 5, 4, 6, 5, 6, 6, 7, 6]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="monoweight",
        description="Affine weights (with delta coefficient) for Nakajima monomial crystals.",
        epilog="Words apply right to left: --word 1,0 is f_1 f_0 1 (Example: A1 --word 1,0 gives "
        "Y(0,0)^-1 Y(0,1) Y(1,1) Y(1,2)^-1 of weight -delta).",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def element_args(sp):
        sp.add_argument("--type", required=True, help="affine type, e.g. A1, A4, B3")
        g = sp.add_mutually_exclusive_group(required=True)
        g.add_argument("--monomial", help='e.g. "Y(0,0)^-1 Y(1,1)"')
        g.add_argument("--word", help="comma separated indices, rightmost acts first")

    sp = sub.add_parser("weight", help="classical weight, D and full affine weight")
    element_args(sp)
    sp.add_argument("--lambda", dest="lam", help="p0,...,pn: work in M(lambda)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_weight)

    sp = sub.add_parser("convert", help="A-variable table or Young wall of a monomial")
    element_args(sp)
    sp.add_argument("--to", choices=["a-table", "wall"], default="a-table")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_convert)

    sp = sub.add_parser("apply", help="apply Kashiwara operators to a monomial")
    sp.add_argument("--type", required=True)
    sp.add_argument("--word", required=True)
    sp.add_argument("--monomial", help="start element (default 1 or H_lambda)")
    sp.add_argument("--lambda", dest="lam")
    sp.add_argument("--raising", action="store_true", help="apply e_i instead of f_i")
    sp.set_defaults(func=cmd_apply)

    sp = sub.add_parser("expand", help="crystal graph ball as DOT or JSON")
    sp.add_argument("--type", required=True)
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--format", choices=["dot", "json"], default="dot")
    sp.add_argument("--variant", choices=["infinity", "lambda"], default="infinity")
    sp.add_argument("--lambda", dest="lam")
    sp.add_argument("--force", action="store_true", help="ignore the depth cap")
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("wall", help="inspect and act on a Young wall (type A)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--rows", default="", help="row lengths bottom-up, e.g. 2,2,2,1,1")
    sp.add_argument("--word", help="lowering word to apply, rightmost first")
    sp.add_argument("--reduce", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_wall)

    sp = sub.add_parser("verify", help="brute-force verification suites")
    sp.add_argument("--suite", choices=list(SUITES) + ["b4seq", "all"], default="all")
    sp.add_argument("--type", help="run the suite on this type only")
    sp.add_argument("--depth", type=int)
    sp.add_argument("--force", action="store_true")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("b4seq", help="coefficient sequences of a_{0,m} in type B4")
    sp.add_argument("--count", type=int, default=21)
    sp.set_defaults(func=cmd_b4seq)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        return args.func(args)
    except UnsupportedTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except NotInCrystalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_IN_CRYSTAL
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MonoweightError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
