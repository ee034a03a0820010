"""Command line front end.

Exit codes: 0 when every verdict passes, 1 when some verdict fails, 2 on bad
input (unreadable files, malformed trees, impossible arguments).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import algebra as A
from . import dataset
from .errors import BrauerError
from .tree import BrauerTree, fold, parse, render_ascii, render_dot, serialize
from .validation import Verdict, format_verdicts, parse_certificate, run_certificate


def _load_tree(arg: str) -> tuple[BrauerTree, Path | None]:
    """A tree file, or the id of a dataset tree (``syn_star`` or ``syn_star.bt``)."""
    p = Path(arg)
    if p.is_file():
        try:
            text = p.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise BrauerError("io-error", f"cannot read {p}: {exc}")
        return parse(text), p.parent
    tid = p.name[:-3] if p.name.endswith(".bt") else arg
    try:
        rec = dataset.load(tid)
    except BrauerError:
        raise BrauerError("io-error", f"{arg} is neither a file nor a dataset tree")
    return rec.tree, rec.path


def _emit(args, payload, text: str):
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)


def _matrix_tsv(corner: str, rows, cols, mat) -> str:
    lines = ["\t".join([corner, *cols])]
    for r, row in zip(rows, mat):
        lines.append("\t".join([r, *(str(x) for x in row)]))
    return "\n".join(lines) + "\n"


# subcommands

def cmd_validate(args) -> int:
    tree, base = _load_tree(args.tree)
    certs = []
    for c in args.cert:
        try:
            certs.append(parse_certificate(Path(c).read_text(encoding="utf-8")))
        except OSError as exc:
            raise BrauerError("io-error", f"cannot read {c}: {exc}")
    if not certs and base is not None and (base / "meta").is_file() and base.name == tree.id:
        rep = dataset.check_record(tree.id, base.parent)
        verdicts = list(rep.verdicts)
    else:
        if not certs and base is not None and (base / "certs").is_dir():
            certs = [parse_certificate(p.read_text(encoding="utf-8"))
                     for p in sorted((base / "certs").glob("*.cert"))]
        verdicts = [Verdict("pass", (f"{tree.e} edges, {len(tree.vertices)} vertices",),
                            name="census", kind="census")]
        for c in certs:
            verdicts.append(run_certificate(c, tree, dataset.load_tree, base))
    _emit(args, {"tree": tree.id, "verdicts": [v.to_dict() for v in verdicts]}, format_verdicts(verdicts))
    for v in verdicts:
        if not v.passed:
            print(f"{v.name}: {v.witness}", file=sys.stderr)
    return 0 if all(v.passed for v in verdicts) else 1


def cmd_decomp(args) -> int:
    tree, _ = _load_tree(args.tree)
    rows, cols, mat = A.decomposition_matrix(tree, expanded=args.expanded, m=args.m)
    _emit(args, {"rows": rows, "columns": cols, "matrix": mat}, _matrix_tsv("character", rows, cols, mat))
    return 0


def cmd_cartan(args) -> int:
    tree, _ = _load_tree(args.tree)
    alg = A.build_algebra(tree, args.m)
    cols, c = A.cartan(alg)
    _emit(args, {"columns": cols, "matrix": c}, _matrix_tsv("edge", cols, cols, c))
    return 0


def cmd_ext1(args) -> int:
    tree, _ = _load_tree(args.tree)
    alg = A.build_algebra(tree, args.m)
    cols = list(alg.edges)
    mat = [[A.ext1(alg, s, t) for t in cols] for s in cols]
    _emit(args, {"columns": cols, "matrix": mat}, _matrix_tsv("edge", cols, cols, mat))
    return 0


def cmd_omega(args) -> int:
    tree, _ = _load_tree(args.tree)
    alg = A.build_algebra(tree, args.m)
    res = A.walk(alg, args.start, args.n)
    char = A.character_string(res.character)
    covers = [" + ".join(f"P({s})" for s in heads) for heads in res.covers]
    payload = {
        "start": args.start,
        "n": args.n,
        "character": {k: v for k, v in sorted(res.character.items())},
        "module": res.module.describe(),
        "factors": dict(sorted(res.module.factors().items())),
        "covers": [list(h) for h in res.covers],
    }
    text = f"character: {char}\nmodule: {res.module.describe()}\n"
    if args.verbose:
        text += "".join(f"cover {i}: {c}\n" for i, c in enumerate(covers, 1))
    _emit(args, payload, text)
    return 0


def cmd_homology(args) -> int:
    path = Path(args.complex)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise BrauerError("io-error", f"cannot read {path}: {exc}")
    cid, tree_id, m, terms, diffs = A.parse_complex(text)
    if args.tree:
        tree, _ = _load_tree(args.tree)
    elif (path.parent / "tree.bt").is_file():
        tree = parse((path.parent / "tree.bt").read_text(encoding="utf-8"))
    else:
        tree = dataset.load_tree(tree_id)
    if tree.id != tree_id:
        raise BrauerError("inconsistent-input", f"complex {cid} is on {tree_id}, tree is {tree.id}")
    alg = A.build_algebra(tree, args.m if args.m is not None else m)
    cx = A.build_complex(alg, terms, diffs or None, cid)
    cx.check()
    h = A.homology(alg, cx)
    payload = {
        "complex": cid,
        "tree": tree_id,
        "homology": {str(j): {"dim": g.dim, "factors": g.factor_list()} for j, g in sorted(h.items())},
    }
    _emit(args, payload, A.format_homology(h))
    return 0


def cmd_fold(args) -> int:
    tree, _ = _load_tree(args.tree)
    folded = fold(tree, args.d)
    text = serialize(folded)
    _emit(args, {"tree": text}, text)
    return 0


def cmd_render(args) -> int:
    tree, _ = _load_tree(args.tree)
    text = render_dot(tree) if args.format == "dot" else render_ascii(tree)
    _emit(args, {"format": args.format, "text": text}, text)
    return 0


def cmd_dataset(args) -> int:
    if args.action == "list":
        ids = dataset.list_ids()
        rows = []
        for tid in ids:
            rec = dataset.load(tid)
            rows.append((tid, rec.kind, rec.meta.get("description", "")))
        text = "id\tkind\tdescription\n" + "".join(f"{a}\t{b}\t{c}\n" for a, b, c in rows)
        _emit(args, [{"id": a, "kind": b, "description": c} for a, b, c in rows], text)
        return 0
    reports = dataset.check_all(jobs=args.jobs)
    lines = ["id\tkind\tresult\tdetail"]
    for r in reports:
        if r.kind == "negative":
            fails = r.failures
            detail = f"refuted by {fails[0].name}: {fails[0].witness}" if fails else "not refuted"
        else:
            fails = r.failures
            detail = f"{len(r.verdicts)} checks" if not fails else f"{fails[0].name}: {fails[0].witness}"
        lines.append(f"{r.id}\t{r.kind}\t{'ok' if r.ok else 'FAIL'}\t{detail}")
    _emit(args, [r.to_dict() for r in reports], "\n".join(lines) + "\n")
    return 0 if all(r.ok for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    p = argparse.ArgumentParser(prog="brauer", description="Brauer trees, tree algebras and certificates")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    s = sub.add_parser("validate", parents=[common], help="parse a tree and run certificates")
    s.add_argument("tree")
    s.add_argument("--cert", action="append", default=[], metavar="FILE")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("decomp", parents=[common], help="decomposition matrix")
    s.add_argument("tree")
    s.add_argument("--m", type=int)
    s.add_argument("--expanded", action="store_true")
    s.set_defaults(func=cmd_decomp)

    for name, func, helptext in (
        ("cartan", cmd_cartan, "Cartan matrix"),
        ("ext1", cmd_ext1, "Ext^1 between simple modules"),
    ):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("tree")
        s.add_argument("--m", type=int, required=True)
        s.set_defaults(func=func)

    s = sub.add_parser("omega", parents=[common], help="iterate Omega from the lattice of a vertex")
    s.add_argument("tree")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--start", required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--verbose", "-v", action="store_true", help="also list the projective covers")
    s.set_defaults(func=cmd_omega)

    s = sub.add_parser("homology", parents=[common], help="homology of a complex of projectives")
    s.add_argument("complex")
    s.add_argument("--tree", help="tree file or dataset id (default: next to the complex, or by id)")
    s.add_argument("--m", type=int)
    s.set_defaults(func=cmd_homology)

    s = sub.add_parser("fold", parents=[common], help="the d-fold cover of a tree")
    s.add_argument("tree")
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_fold)

    s = sub.add_parser("render", parents=[common], help="draw a tree")
    s.add_argument("tree")
    s.add_argument("--format", choices=("dot", "ascii"), default="ascii")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("dataset", parents=[common], help="list or audit the shipped trees")
    s.add_argument("action", choices=("list", "check-all"))
    s.add_argument("--jobs", type=int, default=1, help="worker processes for check-all")
    s.set_defaults(func=cmd_dataset)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except BrauerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
