"""Command-line interface.

Results go to stdout as JSON (or readable text with ``--format text``);
human diagnostics go to stderr.  Domain errors exit 1 with an error object
carrying a stable ``code``; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classify, conjecture, heaps, rings, serialize, tables
from .errors import CfcError


def _add_rank(parser, required=True):
    parser.add_argument("--rank", type=int, required=required, help="number of generators")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cfckit")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list FC/CFC/Coxeter elements")
    _add_rank(p)
    p.add_argument("--kind", choices=("fc", "cfc", "coxeter"), required=True)
    p.add_argument("--max-rank", type=int, default=None)

    p = sub.add_parser("classify", help="FC/CFC verdicts for one word")
    _add_rank(p)
    p.add_argument("--word", required=True)

    p = sub.add_parser("conj", help="decide conjugacy of two CFC words")
    _add_rank(p)
    p.add_argument("--w", required=True)
    p.add_argument("--y", required=True)

    p = sub.add_parser("witness", help="conjugacy certificate for two CFC words")
    _add_rank(p)
    p.add_argument("--w", required=True)
    p.add_argument("--y", required=True)

    p = sub.add_parser("render", help="draw the heap of a word")
    _add_rank(p)
    p.add_argument("--word", required=True)
    p.add_argument(
        "--format", dest="render_format", choices=("ascii", "svg"), default="ascii"
    )
    p.add_argument("--out", default=None)

    p = sub.add_parser("classtable", help="conjugacy/cyclic/commutation table")
    _add_rank(p)
    p.add_argument("--max-rank", type=int, default=None)

    p = sub.add_parser("conjecture-check", help="cycle-shape predicate sweep")
    _add_rank(p)
    p.add_argument("--max-rank", type=int, default=None)

    p = sub.add_parser("counts", help="count FC/CFC/Coxeter elements")
    _add_rank(p)
    p.add_argument("--kind", choices=("fc", "cfc", "coxeter"), required=True)
    p.add_argument("--max-rank", type=int, default=None)

    return parser


def _cap(args, default: int) -> int:
    if args.max_rank is None:
        return default
    if args.max_rank > default:
        print(
            f"warning: raising rank cap to {args.max_rank}; runtime grows factorially",
            file=sys.stderr,
        )
    return args.max_rank


_ENUMERATORS = {
    "fc": classify.enumerate_fc,
    "cfc": classify.enumerate_cfc,
    "coxeter": classify.enumerate_coxeter,
}


def _dispatch(args) -> tuple[dict | str, str | None]:
    """Returns (payload, optional text rendering)."""
    if args.command == "enumerate":
        elements = _ENUMERATORS[args.kind](args.rank, max_rank=_cap(args, classify.ENUM_RANK_CAP))
        ordered = sorted(elements, key=lambda w: (len(w), w))
        payload = {"rank": args.rank, "kind": args.kind, "elements": [list(w) for w in ordered]}
        text = "\n".join(serialize.format_word_text(w) for w in ordered) + "\n"
        return payload, text

    if args.command == "classify":
        word = serialize.parse_word_text(args.word)
        fc = classify.is_fc(word, args.rank)
        cfc = classify.is_cfc(word, args.rank)
        payload = {
            "rank": args.rank,
            "word": list(word),
            "is_fc": fc.is_fc,
            "is_cfc": cfc.is_cfc,
            "is_cyclically_reduced": classify.is_cyclically_reduced(word, args.rank),
            "fc": serialize.fc_verdict_to_obj(fc),
            "cfc": serialize.cfc_verdict_to_obj(cfc),
        }
        text = (
            f"word {serialize.format_word_text(word)} (rank {args.rank}): "
            f"FC={fc.is_fc} CFC={cfc.is_cfc}\n"
        )
        return payload, text

    if args.command == "conj":
        w = serialize.parse_word_text(args.w)
        y = serialize.parse_word_text(args.y)
        conjugate = rings.is_conjugate_cfc(w, y, args.rank)
        payload = {"rank": args.rank, "w": list(w), "y": list(y), "conjugate": conjugate}
        return payload, f"conjugate: {conjugate}\n"

    if args.command == "witness":
        w = serialize.parse_word_text(args.w)
        y = serialize.parse_word_text(args.y)
        cert = rings.conjugacy_witness(w, y, args.rank)
        if cert is None:
            return {"rank": args.rank, "conjugate": False}, "not conjugate\n"
        payload = serialize.certificate_to_obj(cert)
        payload["rank"] = args.rank
        text = f"conjugator: {serialize.format_word_text(cert.conjugator)}\n"
        return payload, text

    if args.command == "render":
        word = serialize.parse_word_text(args.word)
        heap = heaps.build_heap(word, args.rank)
        drawing = heaps.render(heap, args.render_format)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(drawing)
            return {"written": args.out}, f"wrote {args.out}\n"
        return drawing, drawing

    if args.command == "classtable":
        table = tables.class_table(args.rank, max_rank=_cap(args, classify.ENUM_RANK_CAP))
        payload = serialize.class_table_to_obj(table)
        lines = []
        for group in table.conjugacy_classes:
            lines.append(f"ring sizes {list(group.ring_sizes)}:")
            for cyc in group.cyclic_classes:
                members = ", ".join(
                    serialize.format_word_text(cls[0]) for cls in cyc.commutation_classes
                )
                lines.append(f"  cyclic class {serialize.format_word_text(cyc.canonical_word)}: {members}")
        return payload, "\n".join(lines) + "\n"

    if args.command == "conjecture-check":
        report = conjecture.check_conjecture(
            args.rank, max_rank=_cap(args, conjecture.CONJECTURE_RANK_CAP)
        )
        payload = serialize.report_to_obj(report)
        text = (
            f"rank {report.rank}: checked {report.elements_checked} permutations, "
            f"agree={report.agree}, counterexamples={len(report.counterexamples)}\n"
        )
        return payload, text

    if args.command == "counts":
        elements = _ENUMERATORS[args.kind](args.rank, max_rank=_cap(args, classify.ENUM_RANK_CAP))
        payload = {"rank": args.rank, "kind": args.kind, "count": len(elements)}
        return payload, f"{len(elements)}\n"

    raise ValueError(f"unknown command {args.command!r}")  # pragma: no cover


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        payload, text = _dispatch(args)
    except CfcError as exc:
        print(json.dumps(serialize.error_to_obj(exc)))
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.format == "text" and text is not None:
        sys.stdout.write(text)
    elif isinstance(payload, str):
        sys.stdout.write(payload)
    else:
        print(json.dumps(payload))
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
