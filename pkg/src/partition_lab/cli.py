"""``partition-lab`` command line.

Exit status is 0 for success or an affirmative verdict, 1 for a negative
verdict, 2 for usage and parse errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

import mpmath

from . import enumeration, pfn, series
from .errors import GuardExceeded, LiteralSyntaxError, PartitionLabError, PrecisionExhausted
from .partition import (
    Partition,
    conjugate,
    from_parts,
    is_self_conjugate_oracle,
    render_ferrers,
    render_young,
    to_multiplicities,
)
from .selfconjugate import (
    area_balance,
    decompose_nest_egg,
    frame_widths,
    is_self_conjugate_theorem,
    prefix_ledger,
)

SCHEMA = "partition-lab/1"
ENUMERATE_LIMIT = enumeration.EXHAUSTION_LIMIT
EULER_LIMIT = 300
DIMENSION_LIMIT = 10

_TERM = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


class UsageError(PartitionLabError):
    pass


def parse_partition(text: str) -> Partition:
    """Parse ``"5^2,3,2^2"`` style literals; ``v^m`` repeats ``v`` ``m`` times.

    Surrounding brackets are tolerated, and an empty literal is the empty partition.
    """
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if not body.strip():
        return Partition()
    parts: list[int] = []
    for term in body.split(","):
        m = _TERM.match(term)
        if not m:
            raise LiteralSyntaxError(f"bad term {term.strip()!r}: expected INT or INT^INT")
        value, mult = int(m.group(1)), int(m.group(2) or 1)
        if value < 1:
            raise LiteralSyntaxError(f"bad term {term.strip()!r}: parts must be positive")
        if mult < 1:
            raise LiteralSyntaxError(f"bad term {term.strip()!r}: multiplicity must be positive")
        if parts and value > parts[-1]:
            raise LiteralSyntaxError(
                f"bad term {term.strip()!r}: parts must be non-increasing ({value} > {parts[-1]})"
            )
        parts.extend([value] * mult)
    return from_parts(parts)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, "command": args.command, **payload}, sort_keys=True))
    else:
        sys.stdout.write(text)


def _fmt_real(x, places: int = 3, grouping: bool = True) -> str:
    scaled = int(mpmath.nint(abs(x) * 10**places))
    sign = "-" if x < 0 and scaled else "+"
    whole, frac = divmod(scaled, 10**places)
    whole_s = f"{whole:,}" if grouping else str(whole)
    return f"{sign}{whole_s}.{frac:0{places}d}"


def cmd_check(args) -> int:
    p = parse_partition(args.partition)
    form = to_multiplicities(p)
    payload: dict = {"partition": list(p.parts), "method": args.method}
    lines = [f"partition: {p}\n"]
    verdict = None
    if args.method in ("theorem", "both"):
        ledger = prefix_ledger(form)
        verdict = is_self_conjugate_theorem(form)
        xs = ", ".join(f"x_{i}={m}" for i, m in enumerate(form.multiplicities))
        lines.append(f"multiplicities: {xs}\n" if xs else "multiplicities: (none)\n")
        for c in ledger:
            terms = "+".join(map(str, c.terms))
            if c.ok:
                lines.append(f"  {c.value} = {terms}\n")
            else:
                lines.append(f"  {c.value} != {terms} = {c.total}\n")
        payload["ledger"] = [
            {"value": c.value, "terms": list(c.terms), "sum": c.total, "ok": c.ok} for c in ledger
        ]
        payload["theorem"] = verdict
    if args.method in ("oracle", "both"):
        oracle = is_self_conjugate_oracle(p)
        payload["oracle"] = oracle
        lines.append(f"conjugate: {conjugate(p)}\n")
        if verdict is None:
            verdict = oracle
        elif verdict != oracle:
            raise AssertionError(f"theorem and oracle disagree on {p}")
        else:
            lines.append("theorem and oracle agree\n")
    payload["self_conjugate"] = verdict
    lines.append("verdict: " + ("self-conjugate" if verdict else "not self-conjugate") + "\n")
    _emit(args, payload, "".join(lines))
    return 0 if verdict else 1


def cmd_diagram(args) -> int:
    p = parse_partition(args.partition)
    if args.conjugate:
        p = conjugate(p)
    text = render_young(p) if args.style == "young" else render_ferrers(p)
    _emit(args, {"partition": list(p.parts), "style": args.style, "diagram": text}, text)
    return 0


def cmd_decompose(args) -> int:
    p = parse_partition(args.partition)
    d = decompose_nest_egg(p)
    widths = frame_widths(d.frames)
    egg = None if d.egg is None else {"kind": d.egg.shape.value, "dim": d.egg.dim}
    residual = None if d.residual is None else list(d.residual.parts)
    lines = [
        f"partition: {p}\n",
        "unit frames (arm lengths): " + (" ".join(map(str, d.frames)) or "none") + "\n",
        "nest (L widths, outermost first): " + (" ".join(map(str, widths)) or "none") + "\n",
    ]
    if d.residual is None:
        lines.append(f"egg: {d.egg}\n")
    else:
        lines.append(f"residual: {d.residual} (row and column of the next frame differ)\n")
    _emit(
        args,
        {
            "partition": list(p.parts),
            "frames": list(d.frames),
            "widths": widths,
            "egg": egg,
            "residual": residual,
        },
        "".join(lines),
    )
    return 0 if d.residual is None else 1


def cmd_count_sc(args) -> int:
    if not 1 <= args.d_max <= DIMENSION_LIMIT:
        raise GuardExceeded(f"d_max must be in [1, {DIMENSION_LIMIT}]")
    rows = []
    for d in range(1, args.d_max + 1):
        count = enumeration.self_conjugate_of_dimension(d).count()
        rows.append({"d": d, "count": count, "formula": 2 ** (d - 1), "match": count == 2 ** (d - 1)})
    text = "d  count  2^(d-1)  match\n" + "".join(
        f"{r['d']}  {r['count']}  {r['formula']}  {'yes' if r['match'] else 'NO'}\n" for r in rows
    )
    _emit(args, {"rows": rows}, text)
    return 0 if all(r["match"] for r in rows) else 1


def cmd_pfn(args) -> int:
    n = args.n
    if n < 0:
        raise UsageError("n must be nonnegative")
    payload: dict = {"n": n, "method": args.method}
    trace_text = ""
    if args.method == "series":
        value = series.p_exact(n)
    elif args.method == "recurrence":
        value = series.p_exact_recurrence(n)
    elif args.method == "enumerate":
        if n > ENUMERATE_LIMIT:
            raise GuardExceeded(f"enumeration is limited to n <= {ENUMERATE_LIMIT}")
        value = enumeration.partitions_of(n).count()
    else:
        if n == 0:
            raise UsageError("the Rademacher series needs n >= 1")
        result = pfn.rademacher_p(n, args.kmax, args.digits)
        value = result.rounded
        with mpmath.workdps(result.digits):
            payload["terms"] = [
                {"k": k, "term": mpmath.nstr(t, 25)}
                for k, t in result.terms
            ]
            payload["partial_sum"] = mpmath.nstr(
                result.partial_sum, result.digits, min_fixed=-mpmath.inf, max_fixed=mpmath.inf
            )
            payload["distance"] = mpmath.nstr(result.distance, 5)
            if args.trace:
                width = max(len(_fmt_real(t)) for _, t in result.terms)
                total = _fmt_real(result.partial_sum)
                width = max(width, len(total))
                rows = "".join(f"k={k:<3d}{_fmt_real(t):>{width}}\n" for k, t in result.terms)
                trace_text = rows + "      " + "-" * width + "\n      " + f"{total:>{width}}\n"
    payload["value"] = value
    _emit(args, payload, trace_text + f"p({n}) = {value}\n")
    return 0


def _congruence_rows(suite: str, limit: int) -> list[dict]:
    rows = []

    def add(report: pfn.CongruenceReport, expect_zero: bool = True) -> None:
        for arg, residue in report.residues:
            rows.append(
                {
                    "suite": suite,
                    "family": report.family.description,
                    "n": arg,
                    "modulus": report.family.modulus,
                    "residue": residue,
                    "expect_zero": expect_zero,
                    "pass": (residue == 0) == expect_zero,
                }
            )

    if suite == "lists":
        for fam, count in pfn.CLASSICAL_LISTS:
            add(pfn.scan_congruences(fam, count, limit))
    elif suite == "ramanujan":
        for fam in pfn.RAMANUJAN_FAMILIES:
            count = (limit - fam.seed) // fam.step + 1
            if count >= 1:
                add(pfn.scan_congruences(fam, count, limit))
    elif suite == "atkin":
        for delta in pfn.ATKIN_STEPS:
            add(pfn.scan_congruences(pfn.atkin_family(delta), 3, limit))
    elif suite == "chowla":
        add(pfn.chowla_check(), expect_zero=False)
    return rows


def cmd_congruences(args) -> int:
    if args.limit < 1:
        raise UsageError("limit must be positive")
    suites = ["lists", "ramanujan", "atkin", "chowla"] if args.suite == "all" else [args.suite]
    rows = [row for s in suites for row in _congruence_rows(s, args.limit)]
    ok = all(r["pass"] for r in rows)
    text = "".join(
        f"{r['suite']:<9} p({r['n']}) mod {r['modulus']} = {r['residue']}"
        f"  {'ok' if r['pass'] else 'FAIL'}{'' if r['expect_zero'] else ' (nonzero expected)'}\n"
        for r in rows
    )
    text += f"{sum(r['pass'] for r in rows)}/{len(rows)} checks passed\n"
    _emit(args, {"suites": suites, "limit": args.limit, "rows": rows, "ok": ok}, text)
    return 0 if ok else 1


def cmd_euler(args) -> int:
    if not 1 <= args.n_max <= EULER_LIMIT:
        raise GuardExceeded(f"n_max must be in [1, {EULER_LIMIT}]")
    odd = series.series_product_unrestricted(series.PartSet.odds(), args.n_max)
    distinct = series.series_product_bounded(series.PartSet.all_positive(), 1, args.n_max)
    rows = [
        {"n": n, "odd": odd[n], "distinct": distinct[n], "match": odd[n] == distinct[n]}
        for n in range(1, args.n_max + 1)
    ]
    text = "n  p(O,n)  p(D,n)  match\n" + "".join(
        f"{r['n']}  {r['odd']}  {r['distinct']}  {'yes' if r['match'] else 'NO'}\n" for r in rows
    )
    _emit(args, {"rows": rows}, text)
    return 0 if all(r["match"] for r in rows) else 1


def cmd_area(args) -> int:
    p = parse_partition(args.partition)
    if not p:
        raise UsageError("area needs a non-empty partition")
    a = area_balance(p)
    text = (
        f"partition: {p}\nbelow diagonal: {a.below}\nabove diagonal: {a.above}\n"
        + ("balanced\n" if a.balanced else "unbalanced\n")
    )
    _emit(
        args,
        {"partition": list(p.parts), "below": str(a.below), "above": str(a.above), "balanced": a.balanced},
        text,
    )
    return 0 if a.balanced else 1


def cmd_enumerate(args) -> int:
    if args.dimension is not None:
        if not 1 <= args.dimension <= DIMENSION_LIMIT:
            raise GuardExceeded(f"dimension must be in [1, {DIMENSION_LIMIT}]")
        stream = enumeration.PartitionStream(
            dimension=args.dimension, self_conjugate=args.self_conjugate
        )
        target = {"dimension": args.dimension}
    else:
        if args.n is None:
            raise UsageError("give n or --dimension")
        if not 0 <= args.n <= ENUMERATE_LIMIT:
            raise GuardExceeded(f"n must be in [0, {ENUMERATE_LIMIT}]")
        stream = enumeration.PartitionStream(size=args.n, self_conjugate=args.self_conjugate)
        target = {"n": args.n}
    items = [list(p.parts) for p in stream]
    text = "".join("[" + ",".join(map(str, x)) + "]\n" for x in items)
    text += f"count: {len(items)}\n"
    _emit(args, {**target, "self_conjugate": args.self_conjugate, "partitions": items, "count": len(items)}, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit one JSON object")

    parser = argparse.ArgumentParser(prog="partition-lab", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", default=False, help="emit one JSON object")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="decide self-conjugacy")
    p.add_argument("partition")
    p.add_argument("--method", choices=["theorem", "oracle", "both"], default="theorem")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("diagram", parents=[common], help="draw a Young or Ferrers diagram")
    p.add_argument("partition")
    p.add_argument("--style", choices=["young", "ferrers"], default="young")
    p.add_argument("--conjugate", action="store_true")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("decompose", parents=[common], help="nest-and-egg decomposition")
    p.add_argument("partition")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("count-sc", parents=[common], help="count self-conjugate partitions by dimension")
    p.add_argument("d_max", type=int)
    p.set_defaults(func=cmd_count_sc)

    p = sub.add_parser("pfn", parents=[common], help="compute p(n)")
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=["series", "recurrence", "rademacher", "enumerate"], default="series")
    p.add_argument("--trace", action="store_true", help="print the Rademacher terms")
    p.add_argument("--kmax", type=int, default=None)
    p.add_argument("--digits", type=int, default=None, help="working precision (default $PARTITION_LAB_DIGITS or 40)")
    p.set_defaults(func=cmd_pfn)

    p = sub.add_parser("congruences", parents=[common], help="verify partition congruences")
    p.add_argument("suite", nargs="?", choices=["lists", "ramanujan", "atkin", "chowla", "all"], default="all")
    p.add_argument("--limit", type=int, default=500, help="largest p-argument to evaluate")
    p.set_defaults(func=cmd_congruences)

    p = sub.add_parser("euler", parents=[common], help="compare odd-part and distinct-part counts")
    p.add_argument("n_max", type=int)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("area", parents=[common], help="areas on each side of the diagonal")
    p.add_argument("partition")
    p.set_defaults(func=cmd_area)

    p = sub.add_parser("enumerate", parents=[common], help="list partitions of n or of a dimension")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--dimension", type=int)
    p.add_argument("--self-conjugate", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PrecisionExhausted as exc:
        print(f"partition-lab: {exc}; retry with a larger --digits", file=sys.stderr)
        return 2
    except PartitionLabError as exc:
        print(f"partition-lab: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
