"""
Planar-embedded Brauer trees: data model, text format, isomorphism, folding.

Vertices are ordinary characters and edges are simple modules. Each vertex
carries the counterclockwise cyclic order of its incident edges; the successor
of an edge S around a vertex is the edge S' with Ext^1(S, S') nonzero.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping

from .errors import BrauerError
from .qpoly import QPolynomial, parse_poly

__all__ = [
    "Vertex",
    "Edge",
    "BrauerTree",
    "parse",
    "serialize",
    "planar_iso",
    "is_planar_map",
    "fold",
    "fold_automorphism",
    "quotient",
    "real_stem",
    "distance",
    "leaves",
    "relabel",
    "render_dot",
    "render_ascii",
]

KINDS = ("unip", "exc", "nonunip")


@dataclass(frozen=True)
class Vertex:
    label: str
    kind: str = "unip"
    real: bool = True
    conj: str | None = None
    series: str | None = None
    degree: QPolynomial | None = None
    frob: str | None = None

    @property
    def unipotent(self) -> bool:
        return self.kind == "unip"


@dataclass(frozen=True)
class Edge:
    label: str
    ends: tuple[str, str]
    cuspidal: bool = False

    def other(self, v: str) -> str:
        a, b = self.ends
        if v == a:
            return b
        if v == b:
            return a
        raise BrauerError("unknown-vertex", f"{v} is not an endpoint of {self.label}")


@dataclass(frozen=True, eq=True)
class BrauerTree:
    """A planar tree with multiplicity. ``multiplicity`` is None when symbolic."""

    id: str
    vertices: Mapping[str, Vertex]
    edges: Mapping[str, Edge]
    order: Mapping[str, tuple[str, ...]]
    multiplicity: int | None = None
    _adj: Mapping[str, tuple[str, ...]] = field(default=None, compare=False, repr=False)

    __hash__ = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", dict(self.vertices))
        object.__setattr__(self, "edges", dict(self.edges))
        object.__setattr__(self, "order", {v: tuple(o) for v, o in self.order.items()})
        self._validate()
        adj = {v: tuple(self.edges[e].other(v) for e in self.order[v]) for v in self.vertices}
        object.__setattr__(self, "_adj", adj)

    def _validate(self):
        if not self.edges:
            raise BrauerError("not-a-tree", "a Brauer tree needs at least one edge")
        if self.multiplicity is not None and self.multiplicity < 1:
            raise BrauerError("bad-multiplicity", f"multiplicity {self.multiplicity}")
        labels = set(self.vertices)
        for e in self.edges.values():
            a, b = e.ends
            for v in (a, b):
                if v not in labels:
                    raise BrauerError("unknown-vertex", f"edge {e.label} uses unknown vertex {v}")
            if a == b:
                raise BrauerError("not-a-tree", f"edge {e.label} is a loop")
        incident = {v: set() for v in labels}
        for e in self.edges.values():
            for v in e.ends:
                incident[v].add(e.label)
        for v in labels:
            seq = self.order.get(v)
            if seq is None:
                if incident[v]:
                    raise BrauerError("order-incomplete", f"no ORDER for vertex {v}")
                raise BrauerError("not-a-tree", f"isolated vertex {v}")
            if len(set(seq)) != len(seq):
                raise BrauerError("order-mismatch", f"ORDER at {v} repeats an edge")
            foreign = set(seq) - incident[v]
            if foreign:
                raise BrauerError(
                    "order-mismatch", f"ORDER at {v} lists non-incident {sorted(foreign)}"
                )
            missing = incident[v] - set(seq)
            if missing:
                raise BrauerError("order-incomplete", f"ORDER at {v} omits {sorted(missing)}")
        extra = set(self.order) - labels
        if extra:
            raise BrauerError("unknown-vertex", f"ORDER for unknown vertices {sorted(extra)}")
        if len(labels) != len(self.edges) + 1:
            raise BrauerError("not-a-tree", "vertex and edge counts do not form a tree")
        # connectivity (with |V| = |E| + 1 this also rules out cycles)
        start = next(iter(labels))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for e in incident[v]:
                w = self.edges[e].other(v)
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if seen != labels:
            raise BrauerError("not-a-tree", "graph is not connected")
        exc = [v.label for v in self.vertices.values() if v.kind == "exc"]
        if len(exc) > 1:
            raise BrauerError("two-exceptional", f"exceptional vertices {exc}")
        if exc and self.multiplicity == 1:
            raise BrauerError("exceptional-with-m1", "multiplicity 1 allows no exceptional vertex")
        for v in self.vertices.values():
            if v.kind not in KINDS:
                raise BrauerError("parse-error", f"unknown kind {v.kind!r} at {v.label}")
            self_conj = v.conj is None or v.conj == v.label
            if v.real != self_conj:
                raise BrauerError("real-conj-mismatch", f"vertex {v.label}")
            if v.conj is not None:
                partner = self.vertices.get(v.conj)
                if partner is None:
                    raise BrauerError("unknown-vertex", f"conj={v.conj} at {v.label}")
                if (partner.conj or partner.label) != v.label:
                    raise BrauerError("real-conj-mismatch", f"conj of {v.label} is not symmetric")
        nonunip = [v for v in self.vertices.values() if v.kind != "unip"]
        if len(nonunip) == 1:
            if len(self.vertices) - 1 != len(self.edges):
                raise BrauerError("census", "#unipotent vertices differs from #edges")

    # basic queries

    @property
    def e(self) -> int:
        return len(self.edges)

    def degree(self, v: str) -> int:
        return len(self.order[v])

    def neighbours(self, v: str) -> tuple[str, ...]:
        return self._adj[v]

    def exceptional(self) -> str | None:
        for v in self.vertices.values():
            if v.kind == "exc":
                return v.label
        return None

    def non_unipotent(self) -> list[str]:
        return [v.label for v in self.vertices.values() if v.kind != "unip"]

    def edge_between(self, a: str, b: str) -> str | None:
        for e in self.order.get(a, ()):
            if self.edges[e].other(a) == b:
                return e
        return None

    def successor(self, v: str, s: str) -> str:
        """The edge following s in the cyclic order at v."""
        seq = self.order[v]
        return seq[(seq.index(s) + 1) % len(seq)]

    def between(self, v: str, s: str, t: str) -> list[str]:
        """Edges strictly after s and strictly before t, going counterclockwise at v."""
        seq = self.order[v]
        i = seq.index(s)
        out = []
        for k in range(1, len(seq)):
            x = seq[(i + k) % len(seq)]
            if x == t:
                return out
            out.append(x)
        raise BrauerError("unknown-edge", f"{t} is not at {v}")

    def with_multiplicity(self, m: int | None) -> BrauerTree:
        return replace(self, multiplicity=m)


# text format

_ATTRS = ("kind", "real", "conj", "series", "deg", "frob")


def _canonical_rotation(seq: tuple[str, ...]) -> tuple[str, ...]:
    if not seq:
        return seq
    i = seq.index(min(seq))
    return seq[i:] + seq[:i]


def parse(text: str) -> BrauerTree:
    """Read the line-based tree format; ``#`` starts a comment."""
    tid = None
    mult: int | None = None
    mult_seen = False
    vertices: dict[str, Vertex] = {}
    edges: dict[str, Edge] = {}
    order: dict[str, tuple[str, ...]] = {}
    ended = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ended:
            raise BrauerError("parse-error", f"line {lineno}: content after END")
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "TREE":
            if tid is not None or not rest:
                raise BrauerError("parse-error", f"line {lineno}: bad TREE line")
            tid = rest
        elif head == "MULTIPLICITY":
            mult_seen = True
            if rest == "symbolic":
                mult = None
            else:
                try:
                    mult = int(rest)
                except ValueError:
                    raise BrauerError("parse-error", f"line {lineno}: bad multiplicity {rest!r}")
        elif head == "VERTEX":
            toks = rest.split()
            if not toks:
                raise BrauerError("parse-error", f"line {lineno}: VERTEX needs a label")
            label = toks[0]
            if label in vertices:
                raise BrauerError("duplicate-label", f"vertex {label}")
            attrs = {}
            for tok in toks[1:]:
                key, eq, val = tok.partition("=")
                if not eq or key not in _ATTRS or key in attrs:
                    raise BrauerError("parse-error", f"line {lineno}: bad attribute {tok!r}")
                attrs[key] = val
            if "kind" not in attrs or "real" not in attrs:
                raise BrauerError("parse-error", f"line {lineno}: kind= and real= are required")
            if attrs["real"] not in ("0", "1"):
                raise BrauerError("parse-error", f"line {lineno}: real must be 0 or 1")
            if attrs["kind"] not in KINDS:
                raise BrauerError("parse-error", f"line {lineno}: unknown kind {attrs['kind']!r}")
            vertices[label] = Vertex(
                label=label,
                kind=attrs["kind"],
                real=attrs["real"] == "1",
                conj=attrs.get("conj"),
                series=attrs.get("series"),
                degree=parse_poly(attrs["deg"]) if "deg" in attrs else None,
                frob=attrs.get("frob"),
            )
        elif head == "EDGE":
            toks = rest.split()
            if len(toks) not in (3, 4) or (len(toks) == 4 and toks[3] != "cuspidal"):
                raise BrauerError("parse-error", f"line {lineno}: bad EDGE line")
            label = toks[0]
            if label in edges:
                raise BrauerError("duplicate-label", f"edge {label}")
            for v in toks[1:3]:
                if v not in vertices:
                    raise BrauerError("unknown-vertex", f"line {lineno}: {v}")
            edges[label] = Edge(label, (toks[1], toks[2]), len(toks) == 4)
        elif head == "ORDER":
            v, colon, seq = rest.partition(":")
            v = v.strip()
            if not colon or not v:
                raise BrauerError("parse-error", f"line {lineno}: bad ORDER line")
            if v in order:
                raise BrauerError("duplicate-label", f"ORDER for {v} given twice")
            order[v] = tuple(seq.split())
        elif head == "END":
            ended = True
        else:
            raise BrauerError("parse-error", f"line {lineno}: unknown keyword {head!r}")
    if tid is None:
        raise BrauerError("parse-error", "missing TREE line")
    if not mult_seen:
        raise BrauerError("parse-error", "missing MULTIPLICITY line")
    if not ended:
        raise BrauerError("parse-error", "missing END")
    for v in vertices:
        if v not in order and any(v in e.ends for e in edges.values()):
            raise BrauerError("order-incomplete", f"no ORDER for vertex {v}")
    return BrauerTree(tid, vertices, edges, order, mult)


def serialize(t: BrauerTree) -> str:
    """Canonical text: declaration order kept, cyclic orders rotated to the least label."""
    out = [f"TREE {t.id}", f"MULTIPLICITY {'symbolic' if t.multiplicity is None else t.multiplicity}"]
    for v in t.vertices.values():
        parts = [f"VERTEX {v.label}", f"kind={v.kind}", f"real={int(v.real)}"]
        if v.conj is not None:
            parts.append(f"conj={v.conj}")
        if v.series is not None:
            parts.append(f"series={v.series}")
        if v.degree is not None:
            parts.append(f"deg={v.degree}")
        if v.frob is not None:
            parts.append(f"frob={v.frob}")
        out.append(" ".join(parts))
    for e in t.edges.values():
        out.append(f"EDGE {e.label} {e.ends[0]} {e.ends[1]}" + (" cuspidal" if e.cuspidal else ""))
    for v in t.vertices:
        out.append(f"ORDER {v}: " + " ".join(_canonical_rotation(t.order[v])))
    out.append("END")
    return "\n".join(out) + "\n"


# metric and relabelling

def _bfs(t: BrauerTree, root: str) -> dict[str, int]:
    dist = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in t.neighbours(v):
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def distance(t: BrauerTree, v1: str, v2: str) -> int:
    for v in (v1, v2):
        if v not in t.vertices:
            raise BrauerError("unknown-vertex", v)
    return _bfs(t, v1)[v2]


def path_between(t: BrauerTree, v1: str, v2: str) -> list[str]:
    """Vertices on the unique path from v1 to v2, inclusive."""
    parent = {v1: None}
    queue = deque([v1])
    while queue:
        v = queue.popleft()
        for w in t.neighbours(v):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    if v2 not in parent:
        raise BrauerError("unknown-vertex", v2)
    path = [v2]
    while path[-1] != v1:
        path.append(parent[path[-1]])
    return path[::-1]


def leaves(t: BrauerTree) -> set[str]:
    return {v for v in t.vertices if t.degree(v) == 1}


def relabel(t: BrauerTree, mapping: Mapping[str, str], new_id: str | None = None) -> BrauerTree:
    """Rename vertices and/or edges; labels missing from the map are kept."""

    def f(x):
        return mapping.get(x, x) if x is not None else None

    vnames = [f(v) for v in t.vertices]
    enames = [f(e) for e in t.edges]
    if len(set(vnames)) != len(vnames) or len(set(enames)) != len(enames):
        raise BrauerError("duplicate-label", "relabelling is not injective")
    vertices = {f(v.label): replace(v, label=f(v.label), conj=f(v.conj)) for v in t.vertices.values()}
    edges = {
        f(e.label): Edge(f(e.label), (f(e.ends[0]), f(e.ends[1])), e.cuspidal) for e in t.edges.values()
    }
    order = {f(v): tuple(f(e) for e in seq) for v, seq in t.order.items()}
    return BrauerTree(new_id or t.id, vertices, edges, order, t.multiplicity)


# planar isomorphism

def _rotation_equal(a: tuple, b: tuple) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        i = b.index(a[0])
    except ValueError:
        return False
    return b[i:] + b[:i] == a


def is_planar_map(
    t1: BrauerTree, t2: BrauerTree, vmap: Mapping[str, str], reverse: bool = False
) -> str | None:
    """Check that vmap is a tree isomorphism carrying cyclic orders to cyclic orders.

    With ``reverse`` every cyclic order must be carried to the reversed order.
    Returns None on success, otherwise a short witness string.
    """
    if set(vmap) != set(t1.vertices) or set(vmap.values()) != set(t2.vertices):
        return "map is not a bijection between the vertex sets"
    if len(set(vmap.values())) != len(vmap):
        return "map is not injective"
    emap = {}
    for e in t1.edges.values():
        a, b = vmap[e.ends[0]], vmap[e.ends[1]]
        img = t2.edge_between(a, b)
        if img is None:
            return f"edge {e.label} has no image between {a} and {b}"
        emap[e.label] = img
    for v, seq in t1.order.items():
        image = tuple(emap[x] for x in seq)
        target = t2.order[vmap[v]]
        if reverse:
            target = tuple(reversed(target))
        if not _rotation_equal(image, target):
            return f"cyclic order at {v} is not carried to the order at {vmap[v]}"
    return None


def _attr_ok(v1: Vertex, v2: Vertex, respect: frozenset) -> bool:
    if "label" in respect and v1.label != v2.label:
        return False
    if "exceptional" in respect and (v1.kind == "exc") != (v2.kind == "exc"):
        return False
    if "kind" in respect and v1.kind != v2.kind:
        return False
    if "series" in respect and v1.series != v2.series:
        return False
    if "real" in respect and v1.real != v2.real:
        return False
    return True


def _grow(t1: BrauerTree, t2: BrauerTree, e1: str, e2: str, flip: bool, respect) -> dict | None:
    a1, b1 = t1.edges[e1].ends
    a2, b2 = t2.edges[e2].ends
    if flip:
        a2, b2 = b2, a2
    vmap = {a1: a2, b1: b2}
    queue = deque([(a1, e1, a2, e2), (b1, e1, b2, e2)])
    while queue:
        v1, via1, v2, via2 = queue.popleft()
        if not _attr_ok(t1.vertices[v1], t2.vertices[v2], respect):
            return None
        o1, o2 = t1.order[v1], t2.order[v2]
        if len(o1) != len(o2):
            return None
        i1, i2 = o1.index(via1), o2.index(via2)
        for k in range(1, len(o1)):
            x1 = o1[(i1 + k) % len(o1)]
            x2 = o2[(i2 + k) % len(o2)]
            w1 = t1.edges[x1].other(v1)
            w2 = t2.edges[x2].other(v2)
            if w1 in vmap:
                if vmap[w1] != w2:
                    return None
                continue
            vmap[w1] = w2
            queue.append((w1, x1, w2, x2))
    return vmap


def planar_iso(
    t1: BrauerTree, t2: BrauerTree, respect_labels: Iterable[str] = ()
) -> dict[str, str] | None:
    """Least (by sorted vertex labels of t1) planar isomorphism t1 -> t2, or None.

    ``respect_labels`` may contain ``label``, ``exceptional``, ``kind``,
    ``series`` and ``real``.
    """
    respect = frozenset(respect_labels)
    if len(t1.vertices) != len(t2.vertices):
        return None
    root = min(t1.edges)
    keys = sorted(t1.vertices)
    best = None
    for e2 in t2.edges:
        for flip in (False, True):
            vmap = _grow(t1, t2, root, e2, flip, respect)
            if vmap is None or len(vmap) != len(t1.vertices):
                continue
            cand = tuple(vmap[k] for k in keys)
            if best is None or cand < best[0]:
                best = (cand, vmap)
    return None if best is None else dict(sorted(best[1].items()))


# folding

_FOLDED = re.compile(r"^\((.+),(\d+)\)$")


def _copy(label: str, i: int) -> str:
    return f"({label},{i})"


def fold(t: BrauerTree, d: int) -> BrauerTree:
    """The d-fold cover of t branched at the exceptional vertex.

    Copies are labelled ``(<label>,<i>)``. Around the central vertex the
    copies are interleaved, l1..lr for copy 0, then copy 1 and so on, so that the
    shift i -> i+1 preserves the cyclic order.
    """
    x = t.exceptional()
    if x is None:
        raise BrauerError("no-exceptional-vertex", f"tree {t.id} has no exceptional vertex")
    m = t.multiplicity
    if m is None:
        raise BrauerError("symbolic-multiplicity", "fold needs a concrete multiplicity")
    if not isinstance(d, int) or d < 2:
        raise BrauerError("invalid-argument", f"fold needs d > 1, got {d}")
    if m % d:
        raise BrauerError("d-does-not-divide-m", f"d does not divide m ({d} does not divide {m})")
    m2 = m // d
    vx = t.vertices[x]
    vertices = {x: replace(vx, kind="exc" if m2 > 1 else "nonunip")}
    edges = {}
    order = {x: tuple(_copy(l, i) for i in range(d) for l in t.order[x])}
    for i in range(d):
        for v in t.vertices.values():
            if v.label == x:
                continue
            lab = _copy(v.label, i)
            conj = None if v.conj is None else _copy(v.conj, i)
            vertices[lab] = replace(v, label=lab, conj=conj)
            order[lab] = tuple(_copy(l, i) for l in t.order[v.label])
        for e in t.edges.values():
            ends = tuple(x if w == x else _copy(w, i) for w in e.ends)
            edges[_copy(e.label, i)] = Edge(_copy(e.label, i), ends, e.cuspidal)
    return BrauerTree(f"{t.id}-fold{d}", vertices, edges, order, m2)


def _split_folded(t: BrauerTree, d: int) -> tuple[str, dict[str, tuple[str, int]]]:
    if not isinstance(d, int) or d < 2:
        raise BrauerError("invalid-argument", f"d must be > 1, got {d}")
    centre = None
    parts = {}
    for v in t.vertices:
        m = _FOLDED.match(v)
        if m is None:
            if centre is not None:
                raise BrauerError("not-folded", f"two unfolded labels {centre} and {v}")
            centre = v
        else:
            parts[v] = (m.group(1), int(m.group(2)))
    if centre is None:
        raise BrauerError("not-folded", "no central vertex")
    bases: dict[str, set[int]] = {}
    for base, i in parts.values():
        if i >= d:
            raise BrauerError("not-folded", f"copy index {i} >= {d}")
        bases.setdefault(base, set()).add(i)
    for base, idx in bases.items():
        if idx != set(range(d)):
            raise BrauerError("not-folded", f"orbit of {base} is not free of size {d}")
    for e in t.edges:
        if not _FOLDED.match(e):
            raise BrauerError("not-folded", f"edge label {e} lacks a copy index")
    return centre, parts


def fold_automorphism(t: BrauerTree, d: int) -> dict[str, str]:
    """The shift (v,i) -> (v,i+1 mod d), fixing the central vertex."""
    centre, parts = _split_folded(t, d)
    sigma = {centre: centre}
    for v, (base, i) in parts.items():
        sigma[v] = _copy(base, (i + 1) % d)
    witness = is_planar_map(t, t, sigma)
    if witness is not None:
        raise BrauerError("not-an-automorphism", witness)
    return sigma


def quotient(t: BrauerTree, d: int) -> BrauerTree:
    """Collapse the orbits of the shift; inverse to fold up to planar isomorphism."""
    centre, parts = _split_folded(t, d)
    if t.multiplicity is None:
        raise BrauerError("symbolic-multiplicity", "quotient needs a concrete multiplicity")
    m = t.multiplicity * d

    def strip(label):
        mm = _FOLDED.match(label)
        return mm.group(1) if mm else label

    vertices = {centre: replace(t.vertices[centre], kind="exc" if m > 1 else "nonunip")}
    order = {}
    for v, (base, i) in parts.items():
        if i == 0:
            w = t.vertices[v]
            vertices[base] = replace(w, label=base, conj=None if w.conj is None else strip(w.conj))
            order[base] = tuple(strip(e) for e in t.order[v])
    edges = {}
    for e in t.edges.values():
        base = strip(e.label)
        ends = (strip(e.ends[0]), strip(e.ends[1]))
        if base in edges:
            if set(edges[base].ends) != set(ends):
                raise BrauerError("not-folded", f"copies of {base} have different endpoints")
        else:
            edges[base] = Edge(base, ends, e.cuspidal)
    seq = [strip(e) for e in t.order[centre]]
    if len(seq) % d:
        raise BrauerError("not-folded", "central order length is not a multiple of d")
    r = len(seq) // d
    if any(seq[j] != seq[j % r] for j in range(len(seq))) or len(set(seq[:r])) != r:
        raise BrauerError("not-folded", "central order is not invariant under the shift")
    order[centre] = tuple(seq[:r])
    suffix = f"-fold{d}"
    tid = t.id[: -len(suffix)] if t.id.endswith(suffix) else f"{t.id}-quotient{d}"
    return BrauerTree(tid, vertices, edges, order, m)


# real stem

def real_stem(t: BrauerTree) -> list[str]:
    """The line of real vertices together with the non-unipotent vertex."""
    keep = {v.label for v in t.vertices.values() if v.real or v.kind != "unip"}
    nbrs = {v: [w for w in t.neighbours(v) if w in keep] for v in keep}
    bad = [v for v in sorted(keep) if len(nbrs[v]) > 2]
    if bad:
        raise BrauerError("real-stem-not-a-line", f"vertex {bad[0]} has {len(nbrs[bad[0]])} real neighbours")
    ends = sorted(v for v in keep if len(nbrs[v]) <= 1)
    if not ends:
        raise BrauerError("real-stem-not-a-line", "no endpoints")
    path = [ends[0]]
    prev = None
    while True:
        nxt = [w for w in nbrs[path[-1]] if w != prev]
        if not nxt:
            break
        prev = path[-1]
        path.append(nxt[0])
    if len(path) != len(keep):
        raise BrauerError("real-stem-not-a-line", "real vertices are not connected")
    return path


# rendering

def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _walk_edges(t: BrauerTree, root: str) -> list[tuple[str, str, str]]:
    """Edges in depth-first order, visiting neighbours counterclockwise."""
    out = []
    seen = {root}
    stack = [(root, None)]
    while stack:
        v, via = stack.pop()
        seq = t.order[v]
        start = (seq.index(via) + 1) if via is not None else 0
        children = []
        for k in range(len(seq)):
            e = seq[(start + k) % len(seq)]
            w = t.edges[e].other(v)
            if w in seen:
                continue
            seen.add(w)
            out.append((v, e, w))
            children.append((w, e))
        stack.extend(reversed(children))
    return out


def _root(t: BrauerTree) -> str:
    if "1" in t.vertices:
        return "1"
    lv = sorted(leaves(t))
    return lv[0] if lv else next(iter(t.vertices))


def render_dot(t: BrauerTree) -> str:
    lines = [f"graph {_dot_quote(t.id)} {{", "  ordering=out;"]
    for v in t.vertices.values():
        attrs = [f"label={_dot_quote(v.label)}"]
        if v.kind == "exc":
            attrs.append("style=filled, fillcolor=black, fontcolor=white")
        elif v.kind == "nonunip":
            attrs.append("shape=box")
        lines.append(f"  {_dot_quote(v.label)} [{', '.join(attrs)}];")
    for v, e, w in _walk_edges(t, _root(t)):
        attrs = [f"label={_dot_quote(e)}"]
        if t.edges[e].cuspidal:
            attrs.append('color="black:black"')
        lines.append(f"  {_dot_quote(v)} -- {_dot_quote(w)} [{', '.join(attrs)}];")
    for v in t.vertices:
        lines.append(f"  // order {v}: {' '.join(_canonical_rotation(t.order[v]))}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_ascii(t: BrauerTree) -> str:
    """Indented outline; children of a vertex appear counterclockwise after the parent edge."""
    root = _root(t)
    children: dict[str, list[tuple[str, str]]] = {}
    for v, e, w in _walk_edges(t, root):
        children.setdefault(v, []).append((e, w))

    def tag(v):
        kind = t.vertices[v].kind
        return f"{v} *" if kind == "exc" else (f"{v} o" if kind == "nonunip" else v)

    lines = [f"{t.id} (m={t.multiplicity if t.multiplicity is not None else 'symbolic'})", tag(root)]

    def visit(v, prefix):
        kids = children.get(v, [])
        for n, (e, w) in enumerate(kids):
            last = n == len(kids) - 1
            bond = "==" if t.edges[e].cuspidal else "--"
            lines.append(f"{prefix}{'`' if last else '|'}{bond}[{e}]{bond} {tag(w)}")
            visit(w, prefix + ("    " if last else "|   "))

    visit(root, "")
    return "\n".join(lines) + "\n"
