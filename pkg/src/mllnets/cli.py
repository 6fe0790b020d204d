"""Command-line front end.

Exit codes: 0 = affirmative result, 1 = well-formed negative result (not a
proof net, condition false), 2 = usage, parse, or internal error.  The
``--json`` flag switches output to a single object with keys ``kind``,
``input``, ``result`` and ``diagnostics``; diagnostics are objects with
``code``, ``message`` and ``location``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, codes, family, switching
from .core import parse_structure, render
from .empire import EmpireStrategy
from .empire import empire as empire_of
from .errors import MLLError, StructureError
from .switching import IdLeaf, ParStep, TensorSplit


def _read_structure(path: str):
    with open(path, encoding="utf-8") as fh:
        return parse_structure(fh.read())


def _read_skeleton(path: str):
    with open(path, encoding="utf-8") as fh:
        return family.parse_skeleton(fh.read())


def _switching_dict(s):
    return {link.conclusion: side for link, side in s.choices}


def _tree_lines(tree, depth=0):
    pad = "  " * depth
    if isinstance(tree, IdLeaf):
        return [f"{pad}ax {tree.link.pos} {tree.link.neg}"]
    if isinstance(tree, ParStep):
        head = f"{pad}par {tree.link.left} {tree.link.right} {tree.link.conclusion}"
        return [head] + _tree_lines(tree.subtree, depth + 1)
    head = f"{pad}tensor {tree.link.left} {tree.link.right} {tree.link.conclusion}"
    return (
        [head]
        + _tree_lines(tree.left, depth + 1)
        + _tree_lines(tree.right, depth + 1)
    )


def _tree_dict(tree):
    if isinstance(tree, IdLeaf):
        return {"rule": "ax", "pos": tree.link.pos, "neg": tree.link.neg}
    if isinstance(tree, ParStep):
        return {
            "rule": "par",
            "conclusion": tree.link.conclusion,
            "sub": _tree_dict(tree.subtree),
        }
    return {
        "rule": "tensor",
        "conclusion": tree.link.conclusion,
        "left": _tree_dict(tree.left),
        "right": _tree_dict(tree.right),
    }


# each handler returns (negative: bool, result: jsonable, text_lines)


def _cmd_check(args):
    ps = _read_structure(args.file)
    if args.mix:
        ok = switching.is_mix_correct(ps)
        label = "MIX-correct" if ok else "not MIX-correct"
        return not ok, {"mixCorrect": ok}, [label]
    ok, bad, cycle, comps = switching.diagnose(ps)
    if ok:
        return False, {"proofNet": True}, ["proof net"]
    result = {"proofNet": False, "failingSwitching": _switching_dict(bad)}
    lines = ["not a proof net", f"failing switching: {_switching_dict(bad)}"]
    if cycle is not None:
        result["cycle"] = cycle
        lines.append("cycle: " + " ".join(str(i) for i in cycle))
    else:
        result["components"] = [sorted(c) for c in comps]
        lines.append(f"disconnected: {len(comps)} components")
    return True, result, lines


def _cmd_seq(args):
    ps = _read_structure(args.file)
    tree = switching.sequentialize(ps)
    if tree is None:
        return True, {"sequentializable": False}, ["not sequentializable"]
    return (
        False,
        {"sequentializable": True, "derivation": _tree_dict(tree)},
        ["sequentializable"] + _tree_lines(tree),
    )


def _cmd_empire(args):
    ps = _read_structure(args.file)
    strategy = (
        EmpireStrategy.BRUTE_FORCE
        if args.strategy == "brute"
        else EmpireStrategy.SATURATION
    )
    e = empire_of(ps, args.index, strategy)
    members = sorted(e.members)
    result = {
        "root": e.root,
        "members": members,
        "conclusions": sorted(e.conclusions),
    }
    lines = [
        f"empire of {e.root}: " + " ".join(str(i) for i in members),
        "conclusions: " + " ".join(str(i) for i in sorted(e.conclusions)),
    ]
    return False, result, lines


def _cmd_dist(args):
    ps1, ps2 = _read_structure(args.file1), _read_structure(args.file2)
    d = family.distance(ps1, ps2, args.iso_limit)
    return False, {"distance": d}, [f"d = {d}"]


def _cmd_family(args):
    sk = _read_skeleton(args.file)
    if args.report:
        report = analysis.verify_family(sk, args.iso_limit)
        lines = [
            f"members: {report.member_count}",
            f"proof nets: {report.net_count_raw}"
            f" ({report.net_count_up_to_equality} up to equality)",
            f"PS-connected: {report.ps_connected}",
            f"family distance: {report.family_distance}",
        ]
        for name, ok in report.checks_passed:
            lines.append(f"{'PASS' if ok else 'FAIL'} {name}")
        return not report.all_passed, report.as_dict(), lines
    raw, up_to_eq = family.count_proof_nets(sk, args.iso_limit)
    result = {
        "members": sk.member_count,
        "netCountRaw": raw,
        "netCountUpToEquality": up_to_eq,
        "psConnected": family.is_ps_connected(sk),
    }
    lines = [
        f"members: {sk.member_count}",
        f"proof nets: {raw} ({up_to_eq} up to equality)",
        f"PS-connected: {result['psConnected']}",
    ]
    return raw == 0, result, lines


def _cmd_path(args):
    pn1, pn2 = _read_structure(args.file1), _read_structure(args.file2)
    path = analysis.exchange_path(pn1, pn2)
    steps = [render(ps).rstrip("\n").split("\n") for ps in path.steps]
    result = {"hops": path.hops, "steps": steps}
    lines = [f"hops: {path.hops}"]
    for n, step in enumerate(steps):
        lines.append(f"step {n}:")
        lines.extend("  " + l for l in step)
    return False, result, lines


def _cmd_sweep(args):
    sks = analysis.enumerate_skeletons(args.max_axioms, args.max_mult)
    rows = []
    lines = [f"skeletons: {len(sks)}"]
    for sk in sks:
        raw, up_to_eq = family.count_proof_nets(sk, args.iso_limit)
        desc = "; ".join(
            f"ax {l.pos} {l.neg}" if l.kind == "id" else f"mult {l.left} {l.right} {l.conclusion}"
            for l in sk.links
        )
        rows.append(
            {
                "skeleton": desc,
                "members": sk.member_count,
                "netCountRaw": raw,
                "netCountUpToEquality": up_to_eq,
                "psConnected": family.is_ps_connected(sk),
            }
        )
        lines.append(f"{desc}  nets={raw}/{sk.member_count} classes={up_to_eq}")
    return False, {"skeletons": rows}, lines


def _cmd_codes(args):
    if args.hamming74:
        c = codes.hamming74()
        result = {"size": len(c), "distance": codes.code_distance(c)}
        return False, result, [f"|C|={result['size']}, d(C)={result['distance']}"]
    w1 = codes.BinaryWord.from_string(args.dist[0])
    w2 = codes.BinaryWord.from_string(args.dist[1])
    d = codes.word_distance(w1, w2)
    return False, {"distance": d}, [f"d = {d}"]


_HANDLERS = {
    "check": _cmd_check,
    "seq": _cmd_seq,
    "empire": _cmd_empire,
    "dist": _cmd_dist,
    "family": _cmd_family,
    "path": _cmd_path,
    "sweep": _cmd_sweep,
    "codes": _cmd_codes,
}


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="mllnets", description="MLL proof structure toolkit"
    )
    parser.add_argument("--json", action="store_true", help="emit JSON output")
    parser.add_argument(
        "--iso-limit",
        type=int,
        default=family.DEFAULT_ISO_LIMIT,
        metavar="N",
        help="isomorphism search state budget",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="Danos-Regnier correctness")
    p.add_argument("file")
    p.add_argument("--mix", action="store_true", help="acyclicity only")

    p = sub.add_parser("seq", help="sequentialize a structure")
    p.add_argument("file")

    p = sub.add_parser("empire", help="empire of a formula occurrence")
    p.add_argument("file")
    p.add_argument("index", type=int)
    p.add_argument("--strategy", choices=("brute", "sat"), default="brute")

    p = sub.add_parser("dist", help="family metric between two structures")
    p.add_argument("file1")
    p.add_argument("file2")

    p = sub.add_parser("family", help="analyze a family skeleton")
    p.add_argument("file")
    p.add_argument("--report", action="store_true", help="full verification report")

    p = sub.add_parser("path", help="exchange path between two proof nets")
    p.add_argument("file1")
    p.add_argument("file2")

    p = sub.add_parser("sweep", help="enumerate skeletons up to isomorphism")
    p.add_argument("--max-axioms", type=int, required=True, metavar="K")
    p.add_argument("--max-mult", type=int, required=True, metavar="N")

    p = sub.add_parser("codes", help="binary code baseline")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--hamming74", action="store_true")
    group.add_argument("--dist", nargs=2, metavar=("W1", "W2"))

    return parser


def _input_description(args):
    for attr in ("file", "file1"):
        if getattr(args, attr, None) is not None:
            parts = [getattr(args, attr)]
            if getattr(args, "file2", None) is not None:
                parts.append(args.file2)
            if getattr(args, "index", None) is not None:
                parts.append(str(args.index))
            return " ".join(parts)
    if args.command == "sweep":
        return f"max-axioms={args.max_axioms} max-mult={args.max_mult}"
    if args.command == "codes":
        return "hamming74" if args.hamming74 else " ".join(args.dist)
    return ""


def run(argv) -> tuple[int, str]:
    """Dispatch one invocation; returns (exit code, output text)."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit:
        return 2, ""

    diagnostics = []
    try:
        negative, result, lines = _HANDLERS[args.command](args)
        code = 1 if negative else 0
    except (MLLError, OSError) as exc:
        location = None
        if isinstance(exc, StructureError) and exc.line is not None:
            location = f"line {exc.line}"
        diagnostics.append(
            {
                "code": type(exc).__name__,
                "message": str(exc),
                "location": location,
            }
        )
        negative, result, lines = None, None, [f"error: {exc}"]
        code = 2

    if args.json:
        payload = {
            "kind": args.command,
            "input": _input_description(args),
            "result": result,
            "diagnostics": diagnostics,
        }
        output = json.dumps(payload, indent=2, sort_keys=True)
    else:
        output = "\n".join(lines)
    return code, output


def main(argv=None) -> int:
    code, output = run(sys.argv[1:] if argv is None else argv)
    if output:
        print(output, file=sys.stderr if code == 2 else sys.stdout)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
