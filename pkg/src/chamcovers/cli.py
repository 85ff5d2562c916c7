"""Command-line interface.

Subcommands: act, orbit, index, wn, counts, topology, construct-ends,
realize-rank.  Exit codes: 0 success, 1 usage or parse error (message on
stderr), 2 an orbit command could not reach a verdict within its cap.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from .action import WordParseError, act_word, parse_word
from .degree2 import enumerate_wn, enumerate_wn_star, count_closed_forms, orbit_census, realize_rank
from .finite_index import decide_finite_index
from .groups import GroupParseError, parse_group
from .orbit import (
    dot_from_report,
    orbit_bfs,
    orbit_report,
    veech_index,
)
from .topology import construct_max_ends, ends_report
from .vectors import VectorParseError, canonical_class, format_vector, parse_vector


class CliUsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 instead of argparse's default 2
        raise CliUsageError(message)


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _cmd_act(args) -> int:
    group = parse_group(args.group)
    h = parse_vector(group, args.vector)
    word = parse_word(args.word)
    out = act_word(h, word)
    if args.format == "json":
        _emit(_json({"group": group.spec(), "vector": format_vector(out)}))
    else:
        _emit(format_vector(out))
    return 0


def _cmd_index(args) -> int:
    group = parse_group(args.group)
    h = parse_vector(group, args.vector)
    verdict = decide_finite_index(h)
    idx = veech_index(h) if verdict.finite else None
    if args.format == "json":
        _emit(
            _json(
                {
                    "finite": verdict.finite,
                    "index": idx,
                    "minimal_period": verdict.minimal_period,
                    "checked_window": verdict.checked_window,
                    "witness": verdict.witness,
                }
            )
        )
    else:
        _emit(str(idx) if verdict.finite else "infinite")
    return 0


def _cache_path(cache_dir: str, group_spec: str, canonical: str) -> Path:
    key = hashlib.sha256(f"{group_spec}\n{canonical}".encode()).hexdigest()
    return Path(cache_dir) / f"{key}.json"


_REPORT_KEYS = {"order", "vertices", "p1_edges", "p2_edges", "type"}


def _load_cached_report(path: Path):
    if not path.is_file():
        return None
    try:
        report = json.loads(path.read_text())
        if not isinstance(report, dict) or not _REPORT_KEYS <= set(report):
            raise ValueError("missing keys")
        return report
    except (ValueError, OSError) as exc:
        print(f"warning: ignoring corrupted cache entry {path}: {exc}", file=sys.stderr)
        return None


def _render_orbit(report: dict, fmt: str) -> None:
    if fmt == "json":
        _emit(_json(report))
        return
    if fmt == "dot":
        sys.stdout.write(dot_from_report(report))
        return
    lines = [f"order {report['order']}"]
    if report["type"] is not None:
        lines.append(f"type {report['type']}")
    for i, label in enumerate(report["vertices"]):
        p1 = report["p1_edges"][i]
        p2 = report["p2_edges"][i]
        lines.append(f"{i} {label} P1->{p1} P2->{p2}")
    _emit("\n".join(lines))


def _cmd_orbit(args) -> int:
    group = parse_group(args.group)
    h = parse_vector(group, args.vector)
    verdict = decide_finite_index(h)
    if not verdict.finite:
        if args.format == "json":
            _emit(_json({"finite": False, "witness": verdict.witness}))
        else:
            _emit("infinite")
        return 0
    canonical = format_vector(canonical_class(h).representative)
    cache_file = None
    if args.cache is not None:
        cache_file = _cache_path(args.cache, group.spec(), canonical)
        report = _load_cached_report(cache_file)
        if report is not None:
            _render_orbit(report, args.format)
            return 0
    graph = orbit_bfs(h, cap=args.cap)
    if not graph.complete:
        print(
            f"orbit did not close within cap {args.cap}; raise --cap",
            file=sys.stderr,
        )
        return 2
    report = orbit_report(graph)
    if cache_file is not None:
        cache_file.parent.mkdir(parents=True, exist_ok=True)
        cache_file.write_text(json.dumps(report, separators=(",", ":")))
    _render_orbit(report, args.format)
    return 0


def _cmd_wn(args) -> int:
    if args.star:
        if args.format == "json":
            _emit(_json(orbit_census(args.n)))
        else:
            for e in enumerate_wn_star(args.n):
                _emit(e.bitstring())
        return 0
    members = enumerate_wn(args.n)
    if args.format == "json":
        _emit(
            _json(
                {
                    "n": args.n,
                    "count": len(members),
                    "members": [e.bitstring() for e in members],
                }
            )
        )
    else:
        for e in members:
            _emit(e.bitstring())
    return 0


def _cmd_counts(args) -> int:
    counts = count_closed_forms(args.n)
    if args.format == "json":
        _emit(_json(counts))
    else:
        for key, value in counts.items():
            _emit(f"{key} {value}")
    return 0


def _cmd_topology(args) -> int:
    group = parse_group(args.group)
    h = parse_vector(group, args.vector)
    report = ends_report(h)
    if args.format == "json":
        _emit(
            _json(
                {
                    "right_acc": sorted(str(e) for e in report.right_acc),
                    "left_acc": sorted(str(e) for e in report.left_acc),
                    "N": report.n_window,
                    "alt_sum": str(report.alt_sum),
                    "g_prime": sorted(
                        str(e) for e in report.g_prime.elements
                    ),
                    "ends": report.ends,
                    "d2_type": report.d2_type.value if report.d2_type else None,
                }
            )
        )
    else:
        lines = [f"ends {report.ends}"]
        if report.d2_type is not None:
            lines.append(f"type {report.d2_type.value}")
        _emit("\n".join(lines))
    return 0


def _cmd_construct_ends(args) -> int:
    group = parse_group(args.group)
    h = construct_max_ends(group)
    ends = group.order
    if args.format == "json":
        _emit(
            _json(
                {"group": group.spec(), "vector": format_vector(h), "ends": ends}
            )
        )
    else:
        _emit(f"{format_vector(h)}\nends {ends}")
    return 0


def _cmd_realize_rank(args) -> int:
    h = realize_rank(args.n)
    if args.format == "json":
        _emit(_json({"rank": args.n, "vector": format_vector(h)}))
    else:
        _emit(format_vector(h))
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="chamcovers", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, *, group=False, vector=False, word=False, n=False):
        p = sub.add_parser(name)
        if group:
            p.add_argument("--group", required=True)
        if vector:
            p.add_argument("--vector", required=True)
        if word:
            p.add_argument("--word", required=True)
        if n:
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--format", choices=("text", "json", "dot"), default="text")
        p.set_defaults(fn=fn)
        return p

    add("act", _cmd_act, group=True, vector=True, word=True)
    orbit_p = add("orbit", _cmd_orbit, group=True, vector=True)
    orbit_p.add_argument("--cap", type=int, default=10000)
    orbit_p.add_argument("--cache", default=None, metavar="DIR")
    add("index", _cmd_index, group=True, vector=True)
    wn_p = add("wn", _cmd_wn, n=True)
    wn_p.add_argument("--star", action="store_true")
    add("counts", _cmd_counts, n=True)
    add("topology", _cmd_topology, group=True, vector=True)
    add("construct-ends", _cmd_construct_ends, group=True)
    rank_p = add("realize-rank", _cmd_realize_rank)
    rank_p.add_argument("--n", type=int, required=True)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except CliUsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (GroupParseError, VectorParseError, WordParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
