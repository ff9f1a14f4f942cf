"""Command line: ``analyze``, ``crosscheck`` and ``render``.

Exit codes: 0 success, 1 usage or parse error, 2 consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .cobordism import FillingError, build_filling, reduce_to_positive
from .crosscheck import crosscheck, default_workers
from .dga import differential
from .fillability import classify
from .linearization import linearize
from .plat import (
    OrientationError,
    TupleSyntaxError,
    TupleValidityError,
    build_front,
    orient_and_sign,
    parse_tuple,
    valid_orientations,
)
from .render import render_front, render_transcript

EXIT_OK, EXIT_USAGE, EXIT_INCONSISTENT = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse(text: str):
    try:
        return parse_tuple(text)
    except (TupleSyntaxError, TupleValidityError) as exc:
        raise UsageError(str(exc)) from None


def analysis_report(text: str, transcripts: bool = True) -> dict:
    t = _parse(text)
    f = build_front(t)
    fr = classify(t)
    d = fr.detail
    knot = fr.components == 1
    sf = orient_and_sign(f) if knot else orient_and_sign(
        f, valid_orientations(f)[0], check_knot=False)
    diff = d.differential if knot else differential(sf)
    report = {
        "tuple": str(t),
        "totals": {"crossings": t.total_crossings, "components": fr.components},
        "classical": {"tb": d.tb, "rotation": d.rotation} if knot else None,
        "orientation": sf.orientation.left_word,
        "bands": [b.as_dict() for b in sf.bands],
        "rulings": {"exists": bool(d.rulings), "count": len(d.rulings),
                    "switch_sets": [r.as_list() for r in d.rulings]},
        "dga": {"generators": {g.name: g.degree for g in diff.generators},
                "differential": diff.to_json()},
    }
    if knot:
        report["augmentations"] = {
            "count": len(d.augmentations),
            "list": [{"epsilon": e.bitstring(), "dims": list(c.dims)}
                     for e, c in zip(d.augmentations, d.complexes)],
        }
    else:
        report["augmentations"] = None
    report["fillability"] = fr.to_json()
    if transcripts:
        out = {"filling": None, "positivity": None}
        if fr.fillable:
            out["filling"] = build_filling(t).to_json()
            out["positivity"] = reduce_to_positive(t).to_json()
        report["transcripts"] = out
    report["consistent"] = fr.consistent
    return report


def _text(report: dict) -> str:
    lines = [f"tuple        {report['tuple']}",
             f"crossings    {report['totals']['crossings']}",
             f"components   {report['totals']['components']}"]
    if report["classical"]:
        lines.append(f"tb           {report['classical']['tb']}")
        lines.append(f"rotation     {report['classical']['rotation']}")
    lines.append(f"orientation  {report['orientation']}")
    lines.append("bands        " + " ".join(
        f"{b['sign']}{b['taxonomy']}" for b in report["bands"]))
    lines.append(f"rulings      {report['rulings']['count']} "
                 f"{report['rulings']['switch_sets']}")
    for name, entry in report["dga"]["differential"].items():
        words = (["1"] if entry["constant"] else []) + ["".join(w) for w in entry["words"]]
        lines.append(f"  d{name} = {' + '.join(words) or '0'}")
    aug = report["augmentations"]
    if aug is not None:
        dims = sorted({tuple(a["dims"]) for a in aug["list"]})
        lines.append(f"augmentations {aug['count']} dims {dims}")
    fill = report["fillability"]
    verdict = {True: "fillable", False: "not fillable", None: "n/a (link)"}[
        None if fill["theorem1"] is None else fill["theorem1"]["fillable"]]
    lines.append(f"verdict      {verdict}")
    fired = [k for k, v in fill["battery"].items() if v]
    lines.append(f"obstructions {', '.join(fired) or 'none'}")
    tr = report.get("transcripts") or {}
    if tr.get("filling"):
        acc = tr["filling"]["accounting"]
        lines.append(f"filling      {len(tr['filling']['moves'])} moves, "
                     f"chi {acc['euler_characteristic']}")
    if report["consistent"] is False:
        lines.append("INCONSISTENT " + "; ".join(fill["problems"]))
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    report = analysis_report(args.tuple, transcripts=not args.no_transcripts)
    if args.text:
        print(_text(report))
    else:
        print(json.dumps(report, indent=2, ensure_ascii=False))
    return EXIT_INCONSISTENT if report["consistent"] is False else EXIT_OK


def cmd_crosscheck(args) -> int:
    if args.max_crossings < 1:
        raise UsageError("max_crossings must be at least 1")
    workers = args.parallel if args.parallel is not None else default_workers()
    if workers < 1:
        raise UsageError("--parallel must be at least 1")
    summary = crosscheck(args.max_crossings, workers)
    print(f"knots {summary.knots}  fillable {summary.fillable}  "
          f"unfillable {summary.knots - summary.fillable}  "
          f"discrepancies {len(summary.discrepancies)}")
    for c in summary.discrepancies:
        print(f"INCONSISTENT {c.tuple_text}: {'; '.join(c.problems)}")
    return EXIT_INCONSISTENT if summary.discrepancies else EXIT_OK


def cmd_render(args) -> int:
    t = _parse(args.tuple)
    if args.transcript:
        try:
            svg = render_transcript(build_filling(t))
        except (FillingError, OrientationError) as exc:
            raise UsageError(f"no filling transcript: {exc}") from None
    else:
        svg = render_front(build_front(t).slots, str(t))
    try:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        raise UsageError(f"cannot write {args.svg}: {exc}") from None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="legplat", description="Fillability of Legendrian 4-plats.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="full report for one tuple")
    a.add_argument("tuple")
    mode = a.add_mutually_exclusive_group()
    mode.add_argument("--json", action="store_true", help="JSON output (default)")
    mode.add_argument("--text", action="store_true", help="human-readable summary")
    a.add_argument("--no-transcripts", action="store_true")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("crosscheck", help="sweep all knot tuples up to a size")
    c.add_argument("max_crossings", type=int)
    c.add_argument("--parallel", type=int, metavar="N",
                   help="worker processes (default: $LEGPLAT_WORKERS or 1)")
    c.set_defaults(func=cmd_crosscheck)

    r = sub.add_parser("render", help="draw a front or its filling as SVG")
    r.add_argument("tuple")
    r.add_argument("--svg", required=True, metavar="PATH")
    r.add_argument("--transcript", action="store_true", help="one frame per move")
    r.set_defaults(func=cmd_render)
    return p


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"legplat: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
