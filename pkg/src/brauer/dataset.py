"""The shipped trees, their certificates, and the batch audit over all of them.

Layout: ``<root>/<id>/tree.bt``, ``<root>/<id>/certs/*.cert``, ``<root>/<id>/meta``
(``key = value`` lines) and any complex files the certificates name. The root
is the ``data`` directory inside the package unless ``BRAUER_DATA`` is set.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .errors import BrauerError
from .tree import BrauerTree, parse
from .validation import (
    Certificate,
    Verdict,
    check_hecke,
    check_real_stem,
    check_steinberg,
    parse_certificate,
    run_certificate,
)

__all__ = ["TreeRecord", "RecordReport", "data_root", "list_ids", "load", "load_tree", "check_record", "check_all", "lexicon"]


def data_root() -> Path:
    env = os.environ.get("BRAUER_DATA")
    if env:
        return Path(env)
    return Path(__file__).resolve().parent / "data"


@dataclass(frozen=True)
class TreeRecord:
    id: str
    tree: BrauerTree
    certificates: tuple[Certificate, ...]
    meta: dict = field(default_factory=dict)
    path: Path | None = None

    @property
    def kind(self) -> str:
        return self.meta.get("kind", "tree")

    @property
    def levis(self) -> bool:
        return self.meta.get("levis") == "1"

    @property
    def rank(self) -> int | None:
        r = self.meta.get("rank")
        return int(r) if r is not None else None


def list_ids(root: Path | None = None) -> list[str]:
    root = Path(root) if root is not None else data_root()
    if not root.is_dir():
        raise BrauerError("unknown-tree", f"no dataset at {root}")
    return sorted(p.name for p in root.iterdir() if (p / "tree.bt").is_file())


def _read_meta(path: Path) -> dict:
    meta = {}
    if not path.is_file():
        return meta
    for raw in path.read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, eq, value = line.partition("=")
        if not eq:
            raise BrauerError("parse-error", f"{path}: bad meta line {raw!r}")
        meta[key.strip()] = value.strip()
    return meta


def load(tid: str, root: Path | None = None) -> TreeRecord:
    root = Path(root) if root is not None else data_root()
    d = root / tid
    if not (d / "tree.bt").is_file():
        raise BrauerError("unknown-tree", f"no dataset tree {tid!r}")
    tree = parse((d / "tree.bt").read_text(encoding="utf-8"))
    if tree.id != tid:
        raise BrauerError("inconsistent-input", f"{d / 'tree.bt'} declares id {tree.id}")
    certs = []
    cdir = d / "certs"
    if cdir.is_dir():
        for p in sorted(cdir.glob("*.cert")):
            c = parse_certificate(p.read_text(encoding="utf-8"))
            if c.tree != tid:
                raise BrauerError("inconsistent-input", f"{p} refers to {c.tree}")
            certs.append(c)
    return TreeRecord(tid, tree, tuple(certs), _read_meta(d / "meta"), d)


def load_tree(tid: str, root: Path | None = None) -> BrauerTree:
    return load(tid, root).tree


@dataclass(frozen=True)
class RecordReport:
    id: str
    kind: str
    verdicts: tuple[Verdict, ...]

    @property
    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.passed]

    @property
    def ok(self) -> bool:
        """Correct trees must pass everything; negative fixtures must be refuted."""
        if self.kind == "negative":
            return any(v.witness for v in self.failures)
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "kind": self.kind,
            "ok": self.ok,
            "verdicts": [v.to_dict() for v in self.verdicts],
        }


def _structural(rec: TreeRecord) -> list[Verdict]:
    """Census plus the rules every group tree obeys, unless a certificate already covers them."""
    t = rec.tree
    out = [Verdict("pass", (f"{t.e} edges, {len(t.vertices)} vertices",), name="census", kind="census")]
    covered = {c.kind for c in rec.certificates}
    rules = (
        ("hecke", lambda: check_hecke(t)),
        ("real-stem", lambda: check_real_stem(t)),
        ("steinberg", lambda: check_steinberg(t, rec.rank, rec.levis)),
    )
    for name, run in rules:
        if name not in covered:
            v = run()
            out.append(Verdict(v.status, v.trace, v.witness, name, name))
    return out


def check_record(tid: str, root: Path | None = None) -> RecordReport:
    rec = load(tid, root)
    verdicts = []
    # the structural rules only make sense for trees drawn from a group
    if "group" in rec.meta:
        verdicts.extend(_structural(rec))

    def resolve(other):
        return load_tree(other, root)

    for c in rec.certificates:
        verdicts.append(run_certificate(c, rec.tree, resolve, rec.path))
    return RecordReport(tid, rec.kind, tuple(verdicts))


def _check_one(args):
    tid, root = args
    return check_record(tid, root)


def check_all(root: Path | None = None, jobs: int | None = 1) -> list[RecordReport]:
    """Audit every record, in id order. ``jobs`` > 1 checks trees in worker processes."""
    root = Path(root) if root is not None else data_root()
    ids = list_ids(root)
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs <= 1 or len(ids) <= 1:
        return [check_record(tid, root) for tid in ids]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_check_one, [(tid, root) for tid in ids]))


def lexicon() -> dict[str, str]:
    """ASCII label -> typeset reading."""
    path = data_root() / "lexicon.tsv"
    out = {}
    for line in path.read_text(encoding="utf-8").splitlines()[1:]:
        if line:
            a, _, b = line.partition("\t")
            out[a] = b
    return out
