"""Command-line front door.

Every subcommand is a thin adapter over the library; results are
byte-for-byte what the corresponding library calls produce.  Exit
codes: 0 success, 1 usage or parse error, 2 enumeration guard
violation, 3 oracle mismatch (a formula and its brute-force oracle
disagree, or a verify check fails).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import counting, graphs, operators, quasiribbon, words, young
from .counting import TooLargeError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_MISMATCH = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _global_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-n", type=int, default=None, help="alphabet bound")
    parser.add_argument(
        "--format",
        choices=["text", "json", "dot"],
        default="text",
        help="output format (dot only for component)",
    )
    parser.add_argument("--brute", action="store_true", help="also run the brute-force oracle")
    parser.add_argument("--overlay", action="store_true", help="mark crystal-only edges")


def _build_parser() -> _Parser:
    parser = _Parser(prog="hypoplactic", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("insert", help="insert a word into a tableau pair")
    p.add_argument("word")
    p.add_argument("--kind", choices=["plactic", "hypoplactic"], default="hypoplactic")
    _global_flags(p)
    p.set_defaults(func=_cmd_insert)

    p = sub.add_parser("rsk", help="classical insertion (alias for insert --kind plactic)")
    p.add_argument("word")
    _global_flags(p)
    p.set_defaults(func=_cmd_rsk)

    p = sub.add_parser("component", help="explore a (quasi-)crystal component")
    p.add_argument("word")
    p.add_argument("--kind", choices=["crystal", "quasi"], default="quasi")
    _global_flags(p)
    p.set_defaults(func=_cmd_component)

    p = sub.add_parser("congruent", help="decide a congruence between two words")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--relation", choices=["plac", "hypo", "sim"], default="hypo")
    _global_flags(p)
    p.set_defaults(func=_cmd_congruent)

    p = sub.add_parser("highest-weight", help="raise a word to its component's root")
    p.add_argument("word")
    p.add_argument("--kind", choices=["crystal", "quasi"], default="quasi")
    _global_flags(p)
    p.set_defaults(func=_cmd_highest_weight)

    p = sub.add_parser("classsize", help="size of the hypoplactic class of a shape")
    p.add_argument("shape")
    _global_flags(p)
    p.set_defaults(func=_cmd_classsize)

    p = sub.add_parser("count-qrt", help="count quasi-ribbon tableaux of a shape")
    p.add_argument("shape")
    _global_flags(p)
    p.set_defaults(func=_cmd_count_qrt)

    p = sub.add_parser(
        "count-components",
        help="count isomorphic crystal components containing quasi-ribbon words",
    )
    p.add_argument("shape", help="partition")
    _global_flags(p)
    p.set_defaults(func=_cmd_count_components)

    p = sub.add_parser("verify", help="run built-in consistency checks")
    p.add_argument(
        "--suite",
        choices=["golden", "laws", "counts", "graphs", "all"],
        default="all",
    )
    _global_flags(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def _need_n(args, default: Optional[int] = None) -> int:
    if args.n is not None:
        return args.n
    if default is not None:
        return default
    raise _UsageError("this command requires -n")


def _infer_n(args, word: words.Word) -> int:
    if args.n is not None:
        return args.n
    return max(word) if word else 1


def _reject_dot(args) -> None:
    if args.format == "dot":
        raise _UsageError("dot output only applies to component")


def _print_pair(args, first, second, first_key, second_key):
    if args.format == "json":
        print(json.dumps({first_key: first.to_json_dict(), second_key: second.to_json_dict()}))
    else:
        print(f"{first_key}:")
        print(first.ascii())
        print(f"{second_key}:")
        print(second.ascii())


def _cmd_insert(args) -> int:
    _reject_dot(args)
    w = words.parse_word(args.word)
    if args.kind == "plactic":
        p, q = young.rsk(w)
        _print_pair(args, p, q, "P", "Q")
    else:
        t, r = quasiribbon.hypo_rsk(w)
        _print_pair(args, t, r, "T", "R")
    return EXIT_OK


def _cmd_rsk(args) -> int:
    args.kind = "plactic"
    return _cmd_insert(args)


def _cmd_component(args) -> int:
    w = words.parse_word(args.word)
    n = _infer_n(args, w)
    kind = graphs.CRYSTAL if args.kind == "crystal" else graphs.QUASI_CRYSTAL
    component = graphs.explore_component(w, n, kind)
    dotted: list = []
    if args.overlay:
        if kind != graphs.CRYSTAL:
            raise _UsageError("--overlay only applies to --kind crystal")
        _, dotted = graphs.crystal_overlay(w, n)
    if args.format == "dot":
        sys.stdout.write(graphs.component_to_dot(component, dotted))
    elif args.format == "json":
        print(json.dumps(graphs.component_to_json_dict(component)))
    else:
        print(f"kind: {component.kind}")
        print(f"n: {component.n}")
        print(f"root: {words.format_word(component.root)}")
        print(f"vertices: {len(component)}")
        dotted_set = set(dotted)
        for u, i, v in component.edges:
            mark = "  [crystal-only]" if (u, i, v) in dotted_set else ""
            print(f"{words.format_word(u)} -{i}-> {words.format_word(v)}{mark}")
    return EXIT_OK


def _cmd_congruent(args) -> int:
    _reject_dot(args)
    u = words.parse_word(args.u)
    v = words.parse_word(args.v)
    n = _infer_n(args, u + v)
    if args.relation == "plac":
        verdict = young.plactic_congruent(u, v)
        extra = {}
    elif args.relation == "hypo":
        verdict = quasiribbon.hypo_congruent(u, v)
        extra = {}
    else:
        verdict = graphs.sim_related(u, v, n)
        extra = {
            "highest_weight_u": words.format_word(
                graphs.highest_weight_word(u, n, graphs.QUASI_CRYSTAL)
            ),
            "highest_weight_v": words.format_word(
                graphs.highest_weight_word(v, n, graphs.QUASI_CRYSTAL)
            ),
        }
    if args.format == "json":
        print(json.dumps({"congruent": verdict, **extra}))
    else:
        print("true" if verdict else "false")
        for key, value in extra.items():
            print(f"{key}: {value}")
    return EXIT_OK


def _cmd_highest_weight(args) -> int:
    _reject_dot(args)
    w = words.parse_word(args.word)
    n = _infer_n(args, w)
    kind = graphs.CRYSTAL if args.kind == "crystal" else graphs.QUASI_CRYSTAL
    result = graphs.highest_weight_word(w, n, kind)
    if args.format == "json":
        print(json.dumps({"highest_weight": words.format_word(result)}))
    else:
        print(words.format_word(result))
    return EXIT_OK


def _print_count(args, formula: int, brute: Optional[int]) -> int:
    _reject_dot(args)
    if args.format == "json":
        payload = {"formula": formula}
        if brute is not None:
            payload["brute"] = brute
        print(json.dumps(payload))
    elif brute is None:
        print(formula)
    else:
        print(f"formula: {formula}")
        print(f"brute: {brute}")
    if brute is not None and brute != formula:
        print("oracle mismatch", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _cmd_classsize(args) -> int:
    shape = words.parse_composition(args.shape)
    n = _need_n(args, default=max(len(shape), 1))
    formula = counting.hypo_class_size(shape, n)
    brute = counting.hypo_class_size_brute(shape, n) if args.brute else None
    return _print_count(args, formula, brute)


def _cmd_count_qrt(args) -> int:
    shape = words.parse_composition(args.shape)
    n = _need_n(args)
    formula = counting.count_qrt(shape, n)
    brute = counting.count_qrt_brute(shape, n) if args.brute else None
    return _print_count(args, formula, brute)


def _cmd_count_components(args) -> int:
    shape = words.parse_composition(args.shape)
    n = _need_n(args)
    formula = counting.count_iso_plac_components_with_qrw(shape, n)
    brute = counting.count_iso_plac_components_with_qrw_brute(shape, n) if args.brute else None
    return _print_count(args, formula, brute)


def _verify_golden() -> list[tuple[str, bool]]:
    checks = []
    checks.append((
        "standardize(243245565) = 143256798",
        words.standardize(words.parse_word("243245565")) == words.parse_word("143256798"),
    ))
    checks.append((
        "descent composition of 143256798 is (2,1,5,1)",
        words.descent_composition(words.parse_word("143256798")) == (2, 1, 5, 1),
    ))
    checks.append((
        "weight(542164325224) = (1,4,1,3,2,1)",
        words.weight(words.parse_word("542164325224")) == (1, 4, 1, 3, 2, 1),
    ))
    t, r = quasiribbon.hypo_rsk(words.parse_word("4323"))
    checks.append((
        "insertion pair of 4323",
        t.rows == [(2,), (3, 3), (4,)] and r.rows == [(3,), (2, 4), (1,)],
    ))
    checks.append((
        "f_1(3113) = 3123",
        operators.quasi_f((3, 1, 1, 3), 1) == (3, 1, 2, 3),
    ))
    checks.append((
        "highest-weight word of shape (3,1,5,2)",
        quasiribbon.highest_weight_qrw((3, 1, 5, 2)) == words.parse_word("11321333434"),
    ))
    checks.append((
        "1324 ~ 3142 over 4 symbols",
        graphs.sim_related((1, 3, 2, 4), (3, 1, 4, 2), 4),
    ))
    checks.append((
        "2213 and 2231 share an insertion tableau",
        young.plactic_congruent((2, 2, 1, 3), (2, 2, 3, 1)),
    ))
    return checks


def _verify_laws() -> list[tuple[str, bool]]:
    kashiwara_e, kashiwara_f = operators.kashiwara_e, operators.kashiwara_f
    quasi_e, quasi_f = operators.quasi_e, operators.quasi_f

    ok_inverse = ok_restrict = ok_weight = True
    for length in range(5):
        for w in words.words_over(3, length):
            for i in (1, 2):
                for e_op, f_op in ((kashiwara_e, kashiwara_f), (quasi_e, quasi_f)):
                    up = e_op(w, i)
                    if up is not None:
                        ok_inverse &= f_op(up, i) == w
                        ok_weight &= words.weight_leq(words.weight(w), words.weight(up))
                        ok_weight &= words.weight(w) != words.weight(up)
                down = quasi_f(w, i)
                if down is not None:
                    ok_restrict &= kashiwara_f(w, i) == down
    return [
        ("raising and lowering are mutually inverse", ok_inverse),
        ("quasi operators restrict the classical ones", ok_restrict),
        ("raising strictly raises weight", ok_weight),
    ]


def _verify_counts() -> list[tuple[str, bool]]:
    checks = [
        ("class size of (2,1,1,2) is 19", counting.hypo_class_size((2, 1, 1, 2), 4) == 19),
        ("class size of (1,2,2,1) is 61", counting.hypo_class_size((1, 2, 2, 1), 4) == 61),
    ]
    ok = True
    for total in range(1, 5):
        for alpha in words.compositions(total):
            for n in (3, 4):
                ok &= counting.hypo_class_size(alpha, n) == counting.hypo_class_size_brute(alpha, n)
                ok &= counting.count_qrt(alpha, n) == counting.count_qrt_brute(alpha, n)
            ok &= counting.novelli_recursion_check(alpha, 4)
    checks.append(("formulas match oracles up to weight 4", ok))
    return checks


def _verify_graphs() -> list[tuple[str, bool]]:
    checks = []
    component = graphs.explore_component((2, 1, 1, 1), 4, graphs.CRYSTAL)
    roots = {
        graphs.highest_weight_word(v, 4, graphs.QUASI_CRYSTAL)
        for v in component.vertices
    }
    checks.append((
        "crystal component of 2111 splits at 2111, 2112, 2122",
        roots == {(2, 1, 1, 1), (2, 1, 1, 2), (2, 1, 2, 2)},
    ))
    ok_theorem = True
    for length in range(4):
        seen = list(words.words_over(3, length))
        for u in seen:
            for v in seen:
                ok_theorem &= graphs.sim_related(u, v, 3) == quasiribbon.hypo_congruent(u, v)
    checks.append(("position-in-component relation matches congruence", ok_theorem))
    return checks


def _cmd_verify(args) -> int:
    suites = {
        "golden": _verify_golden,
        "laws": _verify_laws,
        "counts": _verify_counts,
        "graphs": _verify_graphs,
    }
    names = list(suites) if args.suite == "all" else [args.suite]
    failed = False
    for name in names:
        for label, ok in suites[name]():
            print(f"{'ok' if ok else 'FAIL'} [{name}] {label}")
            failed |= not ok
    return EXIT_MISMATCH if failed else EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
