"""Command-line frontend: conversions, bijections, counting, verification.

Exit codes: 0 success / verified, 1 verification mismatch, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from itertools import permutations

from . import bijections, counting
from .growth import (
    CellArrangement,
    Filling,
    GrowthError,
    backward_sweep,
    format_filling,
    forward_sweep,
    greene_ranks_bruteforce,
    parse_filling,
    rs_correspondence,
)
from .partitions import Partition, format_partition, parse_partition
from .tableaux import (
    SemistandardTableau,
    StandardTableau,
    TableauError,
    format_tableau,
    parse_tableau,
)

THREADS_ENV = "OSCGROWTH_THREADS"


class InputError(Exception):
    """Bad user input; reported with exit code 2."""


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _write(path: str | None, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _parse_content_directive(text: str) -> list[int] | None:
    for line in text.splitlines():
        line = line.strip()
        if line.startswith("#content"):
            return [int(tok) for tok in line[len("#content"):].replace(",", " ").split()]
    return None


def _tableau_json(t) -> dict:
    return {"rows": [[str(x) if not isinstance(x, int) else x for x in row] for row in t.rows]}


def _emit_tableau(args, t) -> None:
    if args.format == "json":
        _write(args.out, json.dumps(_tableau_json(t)))
    else:
        _write(args.out, format_tableau(t))


def _emit_shapes(args, shapes) -> None:
    if args.format == "json":
        _write(args.out, json.dumps({"shapes": [list(s) for s in shapes]}))
    else:
        _write(args.out, bijections.format_oscillating(shapes))


def _cmd_map(args) -> int:
    text = _read(getattr(args, "infile", None))
    if args.mapping in ("syt2osc", "ssyt2osc") and args.k is None:
        raise InputError(f"{args.mapping} needs an explicit --k")
    if args.mapping == "syt2osc":
        t = parse_tableau(text)
        if not isinstance(t, StandardTableau):
            raise InputError("syt2osc expects a standard tableau")
        osc = bijections.syt_to_oscillating(t, args.k)
        _emit_shapes(args, osc.shapes)
    elif args.mapping == "osc2syt":
        shapes = bijections.parse_oscillating_shapes(text)
        osc = bijections.OscillatingTableau(shapes, args.k)
        _emit_tableau(args, bijections.oscillating_to_syt(osc))
    elif args.mapping == "ssyt2osc":
        content = _parse_content_directive(text)
        t = parse_tableau(text, content=content)
        if isinstance(t, StandardTableau):
            t = SemistandardTableau(t.rows, content=content)
        osc = bijections.ssyt_to_gen_oscillating(t, args.k)
        _emit_shapes(args, osc.shapes)
    else:  # osc2ssyt
        shapes = bijections.parse_oscillating_shapes(text)
        osc = bijections.GeneralizedOscillatingTableau(shapes, args.k)
        t = bijections.gen_oscillating_to_ssyt(osc)
        out = format_tableau(t) + "\n#content " + " ".join(str(c) for c in t.content)
        if args.format == "json":
            payload = _tableau_json(t)
            payload["content"] = list(t.content)
            _write(args.out, json.dumps(payload))
        else:
            _write(args.out, out)
    return 0


def _cmd_reduce(args) -> int:
    t = parse_tableau(_read(args.infile))
    if not isinstance(t, StandardTableau):
        raise InputError("odd-bound reduction expects a standard tableau")
    core, marks = bijections.odd_bound_reduce(t)
    body = format_tableau(core) + "\n#marks " + " ".join(str(v) for v in sorted(marks))
    if args.format == "json":
        payload = _tableau_json(core)
        payload["marks"] = sorted(marks)
        _write(args.out, json.dumps(payload))
    else:
        _write(args.out, body)
    return 0


def _cmd_expand(args) -> int:
    text = _read(args.infile)
    marks: list[int] = []
    if args.marks:
        marks = [int(tok) for tok in args.marks.replace(",", " ").split()]
    else:
        for line in text.splitlines():
            if line.strip().startswith("#marks"):
                marks = [int(tok) for tok in line.split()[1:]]
    rows = [ln for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    core = parse_tableau("\n".join(rows)) if rows else StandardTableau([])
    if not isinstance(core, StandardTableau):
        core = StandardTableau(core.rows)
    _emit_tableau(args, bijections.odd_bound_expand(core, marks))
    return 0


def _cmd_rs(args) -> int:
    perm = [int(tok) for tok in args.perm.replace(",", " ").split()]
    p, q = rs_correspondence(perm)
    if args.format == "json":
        _write(args.out, json.dumps({"P": _tableau_json(p)["rows"], "Q": _tableau_json(q)["rows"]}))
    else:
        _write(args.out, "P:\n" + format_tableau(p) + "\nQ:\n" + format_tableau(q))
    return 0


def _cmd_count(args) -> int:
    if args.method in ("brute", "both"):
        brute = counting.count_oscillating(args.n, args.k, args.m)
    if args.method in ("bessel", "both"):
        bessel = counting.bessel_count(args.n, args.k, args.m)
    if args.method == "brute":
        _write(args.out, str(brute))
    elif args.method == "bessel":
        _write(args.out, str(bessel))
    else:
        verdict = "agree" if brute == bessel else "DISAGREE"
        _write(args.out, f"{brute} {bessel} {verdict}")
        return 0 if brute == bessel else 1
    return 0


def _cmd_enumerate(args) -> int:
    lines = []
    if args.side == "osc":
        for shapes in counting.iter_oscillating(args.n, args.k, args.m):
            lines.append(" ".join(format_partition(s) for s in shapes))
    else:
        for t in counting.iter_syt(args.n, 2 * args.k, args.m):
            lines.append("; ".join(" ".join(str(x) for x in row) for row in t.rows))
    lines.append(f"total {len(lines)}")
    _write(args.out, "\n".join(lines))
    return 0


def _cmd_diagram(args) -> int:
    if args.kind == "forward":
        filling = parse_filling(_read(args.fill))
        arr = filling.arrangement
        if args.arr:
            declared = CellArrangement(int(t) for t in _read(args.arr).split())
            if declared != arr:
                raise InputError("arrangement file disagrees with the filling header")
        diagram = forward_sweep(arr, filling)
        _write(args.out, diagram.to_text())
    else:
        if not args.arr or not args.boundary:
            raise InputError("diagram backward needs --arr and --boundary")
        arr = CellArrangement(int(t) for t in _read(args.arr).split())
        word = bijections.parse_oscillating_shapes(_read(args.boundary))
        filling = backward_sweep(arr, word)
        _write(args.out, format_filling(filling))
    return 0


def _pool_map(func, cases):
    threads = int(os.environ.get(THREADS_ENV, "1"))
    if threads <= 1:
        return [func(c) for c in cases]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, cases))


def _verify_thm3(max_n: int, report) -> bool:
    ok = True
    cases = [(n, k) for n in range(max_n + 1) for k in (1, 2, 3)]

    def check(case):
        n, k = case
        return all(
            counting.count_oscillating(n, k, m) == counting.count_syt(n, 2 * k, m)
            for m in range(n + 1)
        )

    for case, good in zip(cases, _pool_map(check, cases)):
        if not good:
            report(f"count mismatch at (n, k) = {case}")
            ok = False
    limit = min(max_n, 6)
    for n in range(limit + 1):
        for k in (1, 2):
            for t in counting.iter_syt(n, 2 * k):
                osc = bijections.syt_to_oscillating(t, k)
                if bijections.oscillating_to_syt(osc) != t:
                    report(f"round trip failed for {t!r} at k={k}")
                    ok = False
    report(f"thm3 suite (n <= {max_n}): {'ok' if ok else 'FAILED'}")
    return ok


def _verify_thm4(max_n: int, report) -> bool:
    ok = True
    vectors = [
        (j1, j2, j3)
        for j1 in range(4)
        for j2 in range(4)
        for j3 in range(4)
        if 0 < j1 + j2 + j3 <= max_n
    ]
    for j in vectors:
        for k in (1, 2):
            for m in range(sum(j) + 1):
                if counting.count_gen_oscillating(j, k, m) != counting.count_ssyt(j, 2 * k, m):
                    report(f"count mismatch at j={j}, k={k}, m={m}")
                    ok = False
    for j in vectors[: 40]:
        for t in counting.iter_ssyt(j, 4):
            osc = bijections.ssyt_to_gen_oscillating(t, 2)
            if bijections.gen_oscillating_to_ssyt(osc) != t:
                report(f"round trip failed for {t!r}")
                ok = False
    report(f"thm4 suite (sum j <= {max_n}): {'ok' if ok else 'FAILED'}")
    return ok


def _random_standard_filling(rng: random.Random, max_side: int, max_ones: int) -> Filling:
    w = rng.randint(1, max_side)
    heights = sorted((rng.randint(1, max_side) for _ in range(w)), reverse=True)
    arr = CellArrangement(heights)
    cols = list(range(arr.width))
    rng.shuffle(cols)
    used_rows: set[int] = set()
    entries = {}
    for x in cols:
        if len(entries) >= max_ones:
            break
        choices = [y for y in range(arr.heights[x]) if y not in used_rows]
        if choices and rng.random() < 0.8:
            y = rng.choice(choices)
            entries[(x, y)] = 1
            used_rows.add(y)
    return Filling(arr, entries)


def _verify_greene(max_cases: int, seed: int, report) -> bool:
    rng = random.Random(seed)
    ok = True
    for case in range(max_cases):
        filling = _random_standard_filling(rng, 8, 12)
        diagram = forward_sweep(filling.arrangement, filling)
        ones = len(filling.entries)
        for corner, label in diagram.labels.items():
            conj = label.conjugate()
            for k in range(1, ones + 1):
                ne, se = greene_ranks_bruteforce(filling, corner, k)
                if ne != sum(label[:k]) or se != sum(conj[:k]):
                    report(f"Greene mismatch at case {case}, corner {corner}, k={k}")
                    ok = False
    report(f"greene suite ({max_cases} fillings): {'ok' if ok else 'FAILED'}")
    return ok


def _verify_formula(max_n: int, report) -> bool:
    ok = True
    for n in range(max_n + 1):
        for k in (1, 2, 3):
            for m in range(min(n, 4) + 1):
                if counting.bessel_count(n, k, m) != counting.count_oscillating(n, k, m):
                    report(f"formula mismatch at (n, k, m) = ({n}, {k}, {m})")
                    ok = False
    report(f"formula suite (n <= {max_n}): {'ok' if ok else 'FAILED'}")
    return ok


def _cmd_verify(args) -> int:
    def report(msg: str) -> None:
        print(msg)

    if args.suite == "thm3":
        good = _verify_thm3(args.max_n, report)
    elif args.suite == "thm4":
        good = _verify_thm4(args.max_n, report)
    elif args.suite == "greene":
        good = _verify_greene(args.max_n, args.seed, report)
    else:
        good = _verify_formula(args.max_n, report)
    return 0 if good else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oscgrowth",
        description="Growth-diagram bijections between oscillating and (semi)standard tableaux",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p):
        p.add_argument("--in", dest="infile", default=None, help="input file (default: stdin)")
        p.add_argument("--out", default=None, help="output file (default: stdout)")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_map = sub.add_parser("map", help="run a bijection in either direction")
    p_map.add_argument("mapping", choices=("syt2osc", "osc2syt", "ssyt2osc", "osc2ssyt"))
    p_map.add_argument("--k", type=int, default=None, help="column bound k")
    add_io(p_map)
    p_map.set_defaults(func=_cmd_map)

    p_red = sub.add_parser("reduce", help="strip odd columns by inverse row insertion")
    p_red.add_argument("what", choices=("odd-bound",))
    add_io(p_red)
    p_red.set_defaults(func=_cmd_reduce)

    p_exp = sub.add_parser("expand", help="reinsert extracted marks")
    p_exp.add_argument("what", choices=("odd-bound",))
    p_exp.add_argument("--marks", default=None, help="comma-separated mark values")
    add_io(p_exp)
    p_exp.set_defaults(func=_cmd_expand)

    p_rs = sub.add_parser("rs", help="Robinson-Schensted pair of a permutation")
    p_rs.add_argument("perm", help="e.g. 3,1,2")
    add_io(p_rs)
    p_rs.set_defaults(func=_cmd_rs)

    p_count = sub.add_parser("count", help="count oscillating tableaux")
    p_count.add_argument("--n", type=int, required=True)
    p_count.add_argument("--k", type=int, required=True)
    p_count.add_argument("--m", type=int, required=True)
    p_count.add_argument("--method", choices=("brute", "bessel", "both"), default="brute")
    add_io(p_count)
    p_count.set_defaults(func=_cmd_count)

    p_enum = sub.add_parser("enumerate", help="list oscillating tableaux or standard tableaux")
    p_enum.add_argument("--side", choices=("osc", "syt"), required=True)
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--k", type=int, required=True)
    p_enum.add_argument("--m", type=int, required=True)
    add_io(p_enum)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_ver = sub.add_parser("verify", help="run a self-verification suite")
    p_ver.add_argument("--suite", choices=("thm3", "thm4", "greene", "formula"), required=True)
    p_ver.add_argument("--max-n", dest="max_n", type=int, default=6)
    p_ver.add_argument("--seed", type=int, default=20240901)
    p_ver.set_defaults(func=_cmd_verify)

    p_diag = sub.add_parser("diagram", help="dump a growth diagram or reconstruct a filling")
    p_diag.add_argument("kind", choices=("forward", "backward"))
    p_diag.add_argument("--arr", default=None, help="file with column heights")
    p_diag.add_argument("--fill", default=None, help="filling file (forward)")
    p_diag.add_argument("--boundary", default=None, help="boundary word file (backward)")
    add_io(p_diag)
    p_diag.set_defaults(func=_cmd_diagram)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, TableauError, GrowthError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
