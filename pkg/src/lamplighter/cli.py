"""Command-line driver.

Exit codes: 0 success, 1 a check ran and failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence, TextIO

from .elements import SHIFT, LnParams, WordSyntaxError, eval_word, format_word, parse_word
from .finite_group import GroupTableError, group_from_spec
from .metric import LEFT_FIRST, RIGHT_FIRST, emit_geodesic, enumerate_geodesics, normal_form, word_length_D
from .oracle import (
    DEFAULT_NODE_CAP,
    BallTooLarge,
    dump_ball,
    enumerate_ball,
    lamplighter_model,
    sphere_tsv,
    verify_metric_formula,
    wreath_model,
)
from .phenomena import (
    DEFAULT_MAX_DEPTH,
    check_dead_end,
    check_seesaw,
    convexity_witness,
    dead_end_family_d_m,
    dead_end_length,
    seesaw_family_w_n,
    T,
)
from .wreath import (
    eval_wreath_word,
    lift_dead_end_family,
    wreath_emit_geodesic,
    wreath_enumerate_geodesics,
    wreath_length_D,
)

OK, CHECK_FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return v


def _modulus(text: str) -> int:
    v = int(text)
    if v < 2:
        raise argparse.ArgumentTypeError(f"lamp modulus must be >= 2, got {text}")
    return v


def _add_ball_flags(p):
    p.add_argument("--radius", type=_nonneg, required=True)
    p.add_argument("--verify", action="store_true", help="compare BFS distances with the formula")
    p.add_argument("--spheres", action="store_true", help="print sphere sizes as TSV")
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--cap", type=_positive, default=DEFAULT_NODE_CAP)
    p.add_argument("--dump", metavar="PATH", help="write '<element> <distance>' lines to PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lamplighter", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("length", help="exact word length and both normal forms")
    p.add_argument("--n", type=_modulus, required=True)
    p.add_argument("--word", required=True)

    p = sub.add_parser("geodesic", help="canonical geodesic, or all schedule variants")
    p.add_argument("--n", type=_modulus, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--enumerate", action="store_true")

    p = sub.add_parser("ball", help="BFS ball: sphere sizes and formula check")
    p.add_argument("--n", type=_modulus, required=True)
    _add_ball_flags(p)

    p = sub.add_parser("deadend", help="dead-end report for d_m or a word")
    p.add_argument("--n", type=_modulus, required=True)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--m", type=_positive)
    which.add_argument("--word")
    p.add_argument("--max-depth", type=_nonneg, default=DEFAULT_MAX_DEPTH)

    p = sub.add_parser("seesaw", help="seesaw report for w_m with pivot t")
    p.add_argument("--n", type=_modulus, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--swing", type=_positive)

    p = sub.add_parser("convexity", help="almost-convexity witness pair w_k t, w_k t^-1")
    p.add_argument("--n", type=_modulus, required=True)
    p.add_argument("--witness", type=_positive, required=True)
    p.add_argument("--search", action="store_true", help="run the in-ball shortest path search")

    p = sub.add_parser("wreath", help="the same tools over G wr Z")
    p.add_argument("--group", required=True, help="cyclic:<k> or a group table file")
    wsub = p.add_subparsers(dest="wcommand", required=True, parser_class=_Parser)
    q = wsub.add_parser("length")
    q.add_argument("--word", required=True)
    q = wsub.add_parser("geodesic")
    q.add_argument("--word", required=True)
    q.add_argument("--enumerate", action="store_true")
    q = wsub.add_parser("ball")
    _add_ball_flags(q)
    q = wsub.add_parser("deadend")
    which = q.add_mutually_exclusive_group(required=True)
    which.add_argument("--a", type=_nonneg, help="dead end element index of G to lift")
    which.add_argument("--word")
    q.add_argument("--m", type=_positive, default=1)
    q.add_argument("--max-depth", type=_nonneg, default=DEFAULT_MAX_DEPTH)
    return parser


def _emit(out: TextIO, lines: Sequence[str]) -> None:
    for line in lines:
        out.write(line + "\n")


def _ball(args, model, out) -> int:
    ball = enumerate_ball(model, args.radius, cap=args.cap, workers=args.workers)
    if args.dump:
        with open(args.dump, "w") as fh:
            dump_ball(ball, fh)
    code = OK
    if args.spheres or not args.verify:
        out.write(sphere_tsv(ball))
    if args.verify:
        report = verify_metric_formula(model, args.radius, ball=ball)
        _emit(out, report.lines())
        code = OK if report.ok else CHECK_FAILED
    return code


def _geodesics(words, out) -> None:
    _emit(out, sorted(format_word(w) for w in words))


def _lamplighter(args, out) -> int:
    params = LnParams(args.n)
    cmd = args.command
    if cmd == "length":
        e = eval_word(params, parse_word(args.word))
        _emit(out, [f"length={word_length_D(e)}",
                    str(normal_form(e, RIGHT_FIRST)), str(normal_form(e, LEFT_FIRST))])
        return OK
    if cmd == "geodesic":
        e = eval_word(params, parse_word(args.word))
        if args.enumerate:
            _geodesics(enumerate_geodesics(e), out)
        else:
            _emit(out, [format_word(emit_geodesic(e))])
        return OK
    if cmd == "ball":
        return _ball(args, lamplighter_model(params), out)
    if cmd == "deadend":
        if args.m is not None:
            e = dead_end_family_d_m(params, args.m)
            report = check_dead_end(e, args.max_depth)
            _emit(out, report.lines(prefix=f"family=d_m n={args.n} m={args.m} "))
            ok = report.is_dead_end and report.length == dead_end_length(params, args.m)
            return OK if ok else CHECK_FAILED
        e = eval_word(params, parse_word(args.word))
        _emit(out, check_dead_end(e, args.max_depth).lines(prefix=f"family=word n={args.n} "))
        return OK
    if cmd == "seesaw":
        swing = args.swing if args.swing is not None else args.m
        report = check_seesaw(seesaw_family_w_n(params, args.m), T, swing)
        _emit(out, report.lines(prefix=f"family=w_n n={args.n} m={args.m} "))
        return OK if report.holds else CHECK_FAILED
    if cmd == "convexity":
        report = convexity_witness(params, args.witness, run_search=args.search)
        _emit(out, report.lines(prefix=f"n={args.n} "))
        return CHECK_FAILED if report.violates_mac is False else OK
    raise UsageError(f"unknown command {cmd!r}")


def _wreath(args, out) -> int:
    G = group_from_spec(args.group)
    alphabet = G.gen_names() + (SHIFT,)
    cmd = args.wcommand
    if cmd == "length":
        e = eval_wreath_word(G, parse_word(args.word, alphabet))
        _emit(out, [f"length={wreath_length_D(e)}", f"element {e}"])
        return OK
    if cmd == "geodesic":
        e = eval_wreath_word(G, parse_word(args.word, alphabet))
        if args.enumerate:
            _geodesics(wreath_enumerate_geodesics(e), out)
        else:
            _emit(out, [format_word(wreath_emit_geodesic(e))])
        return OK
    if cmd == "ball":
        return _ball(args, wreath_model(G, args.group), out)
    if cmd == "deadend":
        if args.a is not None:
            e = lift_dead_end_family(G, args.a, args.m)
            report = check_dead_end(e, args.max_depth)
            _emit(out, report.lines(prefix=f"family=lifted group={args.group} a={args.a} m={args.m} "))
            return OK if report.is_dead_end else CHECK_FAILED
        e = eval_wreath_word(G, parse_word(args.word, alphabet))
        _emit(out, check_dead_end(e, args.max_depth).lines(prefix=f"family=word group={args.group} "))
        return OK
    raise UsageError(f"unknown wreath command {cmd!r}")


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None,
        err: Optional[TextIO] = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        if args.command == "wreath":
            return _wreath(args, out)
        return _lamplighter(args, out)
    except (UsageError, WordSyntaxError, GroupTableError, BallTooLarge, ValueError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
