"""
The Brauer tree algebra of a planar tree with a concrete multiplicity.

Modules are stored as representations of the Brauer quiver: a vector space
M_S for every edge S and, for every vertex v whose cycle has at least one arrow,
a matrix x_v : M_S -> M_{succ_v(S)} for each edge S at v. Maps are families of
matrices f_S commuting with all the x_v. Arithmetic is exact (ints and Fractions).

The projective P_S has head and socle S; between them sit two uniserial
branches, one for each endpoint v of S, running through the edges after S
around v (m_v * k_v - 1 composition factors).
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import linalg as la
from .errors import BrauerError
from .tree import BrauerTree

__all__ = [
    "TreeAlgebra",
    "Module",
    "ModuleMap",
    "ProjComplex",
    "build_algebra",
    "decomposition_matrix",
    "cartan",
    "ext1",
    "canonical_map",
    "socle_map",
    "hom_space",
    "hom_dim",
    "syzygy",
    "strip_projective_summands",
    "is_isomorphic",
    "walk",
    "WalkResult",
    "homology",
    "lemma_complex",
    "LemmaComplex",
    "parse_complex",
]


class TreeAlgebra:
    """Basic algebra of (tree, m). Projectives are built once at construction."""

    def __init__(self, tree: BrauerTree, m: int | None = None):
        if m is None:
            m = tree.multiplicity
        if m is None:
            raise BrauerError("symbolic-multiplicity", "a concrete m is required")
        if not isinstance(m, int) or m < 1:
            raise BrauerError("invalid-argument", f"multiplicity must be a positive integer, got {m!r}")
        if tree.multiplicity is not None and tree.multiplicity != m:
            raise BrauerError(
                "multiplicity-mismatch", f"tree has m={tree.multiplicity}, requested m={m}"
            )
        x = tree.exceptional()
        if m > 1 and x is None:
            raise BrauerError("no-exceptional-vertex", "m > 1 needs an exceptional vertex")
        if tree.e == 1 and m == 1:
            raise BrauerError("degenerate", "one edge with m = 1 gives a simple algebra")
        self.tree = tree
        self.m = m
        self.exceptional = x
        self.edges: tuple[str, ...] = tuple(tree.edges)
        self.mult = {v: (m if v == x else 1) for v in tree.vertices}
        self.k = {v: tree.degree(v) for v in tree.vertices}
        self.length = {v: self.mult[v] * self.k[v] for v in tree.vertices}
        self.arrow_vertices = frozenset(v for v in tree.vertices if self.length[v] >= 2)
        # arrows as (v, S) -> target edge
        self.arrows: dict[tuple[str, str], str] = {}
        for v in sorted(self.arrow_vertices):
            for s in tree.order[v]:
                self.arrows[(v, s)] = tree.successor(v, s)
        self._proj = {s: self._build_projective(s) for s in self.edges}

    def __repr__(self):
        return f"TreeAlgebra({self.tree.id!r}, m={self.m})"

    def ends(self, s: str) -> tuple[str, str]:
        return self.tree.edges[s].ends

    def succ(self, v: str, s: str) -> str:
        return self.tree.successor(v, s)

    def walk_from(self, v: str, s: str, n: int) -> str:
        seq = self.tree.order[v]
        return seq[(seq.index(s) + n) % len(seq)]

    def dim(self) -> int:
        return sum(self.mult[v] * self.k[v] ** 2 for v in self.tree.vertices)

    def _check_edge(self, s: str):
        if s not in self.tree.edges:
            raise BrauerError("unknown-edge", s)

    def projective(self, s: str) -> Module:
        self._check_edge(s)
        return self._proj[s]

    def simple(self, s: str) -> Module:
        self._check_edge(s)
        dims = {t: 0 for t in self.edges}
        dims[s] = 1
        tags = {t: [] for t in self.edges}
        tags[s] = [(s, 0)]
        return Module(self, dims, {}, tags)

    def _build_projective(self, s: str) -> Module:
        # basis: top, branch of each endpoint with an arrow, socle
        basis: list[tuple[str, tuple]] = [(s, ("top", 0))]
        chains = []
        for v in self.ends(s):
            if v not in self.arrow_vertices:
                continue
            chain = [0]
            for j in range(1, self.length[v]):
                basis.append((self.walk_from(v, s, j), (v, j)))
                chain.append(len(basis) - 1)
            chains.append((v, chain))
        basis.append((s, ("soc", 0)))
        soc = len(basis) - 1
        succ = {}
        for v, chain in chains:
            for a, b in zip(chain, chain[1:] + [soc]):
                succ[(v, a)] = b
        return Module.from_basis(self, basis, succ)

    # characters

    def projective_character(self, s: str) -> Counter:
        a, b = self.ends(s)
        return Counter({a: 1, b: 1})


def build_algebra(tree: BrauerTree, m: int | None = None) -> TreeAlgebra:
    return TreeAlgebra(tree, m)


class Module:
    """A finite-dimensional module over a tree algebra, in quiver-representation form."""

    def __init__(
        self,
        alg: TreeAlgebra,
        dims: Mapping[str, int],
        act: Mapping[tuple[str, str], list],
        tags: Mapping[str, list] | None = None,
        check: bool = True,
    ):
        self.alg = alg
        self.dims = {s: int(dims.get(s, 0)) for s in alg.edges}
        self.act = {}
        for key, tgt in alg.arrows.items():
            mat = act.get(key)
            if mat is None:
                mat = la.zeros(self.dims[tgt], self.dims[key[1]])
            self.act[key] = mat
        if tags is None:
            tags = {s: [(s, i) for i in range(self.dims[s])] for s in alg.edges}
        self.tags = {s: list(tags.get(s, [])) for s in alg.edges}
        if check:
            err = self.relation_error()
            if err:
                raise BrauerError("not-a-module", err)

    @classmethod
    def from_basis(cls, alg: TreeAlgebra, basis: Sequence[tuple[str, object]], succ: Mapping) -> Module:
        """Build from a typed basis and partial successor maps (v, index) -> index."""
        pos = {}
        dims = Counter()
        tags: dict[str, list] = {s: [] for s in alg.edges}
        for i, (s, tag) in enumerate(basis):
            pos[i] = dims[s]
            dims[s] += 1
            tags[s].append(tag)
        act = {key: la.zeros(dims[tgt], dims[key[1]]) for key, tgt in alg.arrows.items()}
        for (v, i), j in succ.items():
            s = basis[i][0]
            if (v, s) not in alg.arrows or alg.arrows[(v, s)] != basis[j][0]:
                raise BrauerError("not-a-module", f"arrow at {v} from {s} does not go to {basis[j][0]}")
            act[(v, s)][pos[j]][pos[i]] = 1
        return cls(alg, dims, act, tags)

    # structure

    def dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return self.dim() == 0

    def factors(self) -> Counter:
        return Counter({s: d for s, d in self.dims.items() if d})

    def character_of_factors(self) -> list[str]:
        return sorted(self.factors().elements())

    def _apply(self, v: str, s: str, vec: list) -> list:
        mat = self.act[(v, s)]
        return [sum(r[j] * vec[j] for j in range(len(vec)) if vec[j]) for r in mat]

    def relation_error(self) -> str | None:
        alg = self.alg
        for (v, s), t in alg.arrows.items():
            mat = self.act[(v, s)]
            if len(mat) != self.dims[t] or any(len(r) != self.dims[s] for r in mat):
                return f"arrow matrix at ({v},{s}) has the wrong shape"
        for (v, s), t in alg.arrows.items():
            for w in alg.ends(t):
                if w == v or (w, t) not in alg.arrows:
                    continue
                prod = la.matmul(self.act[(w, t)], self.act[(v, s)], self.dims[t])
                if not la.is_zero(prod):
                    return f"arrows at {v} then {w} through {t} do not compose to zero"
        for s in alg.edges:
            if not self.dims[s]:
                continue
            powers = []
            for v in alg.ends(s):
                if v in alg.arrow_vertices:
                    powers.append(self._cycle_power(v, s, alg.length[v]))
            if len(powers) == 2:
                if powers[0] != powers[1]:
                    return f"the two full cycles at {s} differ"
            elif len(powers) == 1:
                v = next(w for w in alg.ends(s) if w in alg.arrow_vertices)
                if not la.is_zero(self._cycle_power(v, s, alg.length[v] + 1)):
                    return f"cycle at {v} through {s} is too long"
        return None

    def _cycle_power(self, v: str, s: str, n: int) -> list:
        """Matrix of x_v^n restricted to M_s."""
        cur = s
        mat = la.identity(self.dims[s])
        for _ in range(n):
            nxt = self.alg.arrows[(v, cur)]
            mat = la.matmul(self.act[(v, cur)], mat, self.dims[cur], self.dims[s])
            cur = nxt
        return mat

    def _incoming(self, s: str) -> list[tuple[str, str]]:
        return [(v, t) for (v, t), tgt in self.alg.arrows.items() if tgt == s]

    def radical(self, sub: Mapping[str, list] | None = None) -> dict[str, list]:
        """Spanning vectors of rad(N) for a submodule N (default: the whole module)."""
        out = {}
        for s in self.alg.edges:
            vecs = []
            for v, t in self._incoming(s):
                mat = self.act[(v, t)]
                if sub is None:
                    vecs.extend(la.transpose(mat, self.dims[t]) if self.dims[s] else [])
                else:
                    vecs.extend(self._apply(v, t, w) for w in sub[t])
            red, _ = la.rref(vecs, self.dims[s]) if vecs else ([], [])
            out[s] = red
        return out

    def radical_layers(self) -> list[Counter]:
        """Composition factors of rad^i M / rad^(i+1) M, for i = 0, 1, ..."""
        cur = {s: la.identity(self.dims[s]) for s in self.alg.edges}
        layers = []
        while any(cur[s] for s in cur):
            nxt = self.radical(cur)
            layer = Counter()
            for s in self.alg.edges:
                d = len(cur[s]) - len(nxt[s])
                if d:
                    layer[s] = d
            layers.append(layer)
            cur = nxt
        return layers

    def head(self) -> Counter:
        rad = self.radical()
        return Counter({s: self.dims[s] - len(rad[s]) for s in self.alg.edges if self.dims[s] - len(rad[s])})

    def socle(self) -> Counter:
        out = Counter()
        for s in self.alg.edges:
            if not self.dims[s]:
                continue
            rows = []
            for (v, t), tgt in self.alg.arrows.items():
                if t == s:
                    rows.extend(self.act[(v, s)])
            d = self.dims[s] - la.rank(rows, self.dims[s]) if rows else self.dims[s]
            if d:
                out[s] = d
        return out

    def is_simple(self) -> bool:
        return self.dim() == 1

    def describe(self) -> str:
        if self.is_zero():
            return "zero"
        if self.is_simple():
            return f"simple {next(s for s, d in self.dims.items() if d)}"
        layers = self.radical_layers()
        return " / ".join(",".join(sorted(layer.elements())) for layer in layers)

    def __repr__(self):
        return f"Module(dim={self.dim()}, {self.describe()})"


def _blocks_equal_shape(src: Module, tgt: Module, blocks: Mapping[str, list]) -> bool:
    for s in src.alg.edges:
        b = blocks[s]
        if len(b) != tgt.dims[s] or any(len(r) != src.dims[s] for r in b):
            return False
    return True


@dataclass
class ModuleMap:
    """A homomorphism: one matrix per edge type, checked to commute with the arrows."""

    source: Module
    target: Module
    blocks: dict[str, list]
    check: bool = field(default=True, repr=False)

    def __post_init__(self):
        alg = self.source.alg
        self.blocks = {
            s: self.blocks.get(s, la.zeros(self.target.dims[s], self.source.dims[s])) for s in alg.edges
        }
        if self.check:
            if not _blocks_equal_shape(self.source, self.target, self.blocks):
                raise BrauerError("not-a-map", "block shapes do not match the modules")
            for (v, s), t in alg.arrows.items():
                left = la.matmul(self.target.act[(v, s)], self.blocks[s], self.target.dims[s], self.source.dims[s])
                right = la.matmul(self.blocks[t], self.source.act[(v, s)], self.source.dims[t], self.source.dims[s])
                if left != right:
                    raise BrauerError("not-a-map", f"does not commute with the arrow at {v} from {s}")

    def rank(self) -> int:
        return sum(la.rank(self.blocks[s], self.source.dims[s]) for s in self.blocks)

    def image_factors(self) -> Counter:
        return Counter(
            {s: r for s in self.blocks if (r := la.rank(self.blocks[s], self.source.dims[s]))}
        )

    def compose(self, other: ModuleMap) -> ModuleMap:
        """self after other."""
        blocks = {
            s: la.matmul(self.blocks[s], other.blocks[s], other.target.dims[s], other.source.dims[s]) for s in self.blocks
        }
        return ModuleMap(other.source, self.target, blocks, check=False)

    def is_zero(self) -> bool:
        return all(la.is_zero(b) for b in self.blocks.values())


# matrices and Ext^1

def decomposition_matrix(
    tree_or_alg, expanded: bool = False, m: int | None = None
) -> tuple[list[str], list[str], list[list[int]]]:
    """Rows (characters), columns (edges) and the 0/1 matrix.

    The exceptional vertex gives one row in compact form and m identical rows
    (labelled ``<label>#1`` ...) in expanded form.
    """
    tree = tree_or_alg.tree if isinstance(tree_or_alg, TreeAlgebra) else tree_or_alg
    if m is None:
        m = tree_or_alg.m if isinstance(tree_or_alg, TreeAlgebra) else tree.multiplicity
    cols = list(tree.edges)
    x = tree.exceptional()
    rows, mat = [], []
    for v in tree.vertices:
        row = [1 if v in tree.edges[s].ends else 0 for s in cols]
        if v == x and expanded:
            if m is None:
                raise BrauerError("symbolic-multiplicity", "expanded form needs a concrete m")
            for j in range(1, m + 1):
                rows.append(f"{v}#{j}")
                mat.append(list(row))
        else:
            rows.append(v)
            mat.append(row)
    return rows, cols, mat


def cartan(alg: TreeAlgebra) -> tuple[list[str], list[list[int]]]:
    _, cols, d = decomposition_matrix(alg, expanded=True)
    c = la.matmul(la.transpose(d, len(cols)), d, len(d), len(cols))
    return cols, c


def ext1(alg: TreeAlgebra, s: str, s2: str) -> int:
    """1 iff s2 follows s around an endpoint of s whose cycle has an arrow."""
    alg._check_edge(s)
    alg._check_edge(s2)
    for v in alg.ends(s):
        if v in alg.arrow_vertices and alg.succ(v, s) == s2:
            return 1
    return 0


# maps between projectives

def _shared_vertex(alg: TreeAlgebra, s: str, s2: str) -> str | None:
    common = set(alg.ends(s)) & set(alg.ends(s2))
    return next(iter(common)) if common else None


def _proj_index(alg: TreeAlgebra, s: str) -> dict[tuple, int]:
    """Position inside its type block of each basis vector of P_s, keyed by tag."""
    p = alg.projective(s)
    return {tag: (t, i) for t in alg.edges for i, tag in enumerate(p.tags[t])}


def canonical_map(alg: TreeAlgebra, s: str, s2: str) -> ModuleMap:
    """Generator of Hom(P_s, P_s2) for distinct edges meeting at a vertex v.

    The top of P_s goes to the first s-layer of the v-branch of P_s2.
    """
    alg._check_edge(s)
    alg._check_edge(s2)
    v = _shared_vertex(alg, s, s2) if s != s2 else None
    if v is None:
        raise BrauerError("no-canonical-map", f"{s} and {s2} are not distinct adjacent edges")
    src, tgt = alg.projective(s), alg.projective(s2)
    sidx, tidx = _proj_index(alg, s), _proj_index(alg, s2)
    seq = alg.tree.order[v]
    p = (seq.index(s) - seq.index(s2)) % len(seq)
    L = alg.length[v]
    blocks = {t: la.zeros(tgt.dims[t], src.dims[t]) for t in alg.edges}

    def put(src_tag, tgt_tag):
        (ts, i), (tt, j) = sidx[src_tag], tidx[tgt_tag]
        blocks[ts][j][i] = 1

    put(("top", 0), (v, p))
    for j in range(1, L - p + 1):
        target_tag = ("soc", 0) if p + j == L else (v, p + j)
        put((v, j), target_tag)
    return ModuleMap(src, tgt, blocks)


def socle_map(alg: TreeAlgebra, s: str) -> ModuleMap:
    """Endomorphism of P_s sending the top onto the socle."""
    p = alg.projective(s)
    idx = _proj_index(alg, s)
    blocks = {t: la.zeros(p.dims[t], p.dims[t]) for t in alg.edges}
    _, i = idx[("top", 0)]
    _, j = idx[("soc", 0)]
    blocks[s][j][i] = 1
    return ModuleMap(p, p, blocks)


def identity_map(m: Module) -> ModuleMap:
    return ModuleMap(m, m, {s: la.identity(m.dims[s]) for s in m.alg.edges}, check=False)


def hom_space(m1: Module, m2: Module) -> list[ModuleMap]:
    """A basis of Hom(m1, m2), found by solving the commutation equations."""
    alg = m1.alg
    offset = {}
    n = 0
    for s in alg.edges:
        offset[s] = n
        n += m2.dims[s] * m1.dims[s]

    def var(s, r, c):
        return offset[s] + r * m1.dims[s] + c

    eqs = []
    for (v, s), t in alg.arrows.items():
        a2 = m2.act[(v, s)]  # m2.dims[t] x m2.dims[s]
        a1 = m1.act[(v, s)]  # m1.dims[t] x m1.dims[s]
        for r in range(m2.dims[t]):
            for c in range(m1.dims[s]):
                row = {}
                for k in range(m2.dims[s]):
                    if a2[r][k]:
                        key = var(s, k, c)
                        row[key] = row.get(key, 0) + a2[r][k]
                for k in range(m1.dims[t]):
                    if a1[k][c]:
                        key = var(t, r, k)
                        row[key] = row.get(key, 0) - a1[k][c]
                row = {k: x for k, x in row.items() if x}
                if row:
                    dense = [0] * n
                    for k, x in row.items():
                        dense[k] = x
                    eqs.append(dense)
    basis, _ = la.nullspace(eqs, n)
    maps = []
    for vec in basis:
        blocks = {}
        for s in alg.edges:
            blocks[s] = [
                [vec[var(s, r, c)] for c in range(m1.dims[s])] for r in range(m2.dims[s])
            ]
        maps.append(ModuleMap(m1, m2, blocks, check=False))
    return maps


def hom_dim(alg: TreeAlgebra, s: str, s2: str) -> int:
    return len(hom_space(alg.projective(s), alg.projective(s2)))


# syzygies

def direct_sum(alg: TreeAlgebra, mods: Sequence[Module], labels: Sequence | None = None) -> Module:
    dims = {s: sum(m.dims[s] for m in mods) for s in alg.edges}
    act = {}
    for (v, s), t in alg.arrows.items():
        mat = la.zeros(dims[t], dims[s])
        ro = co = 0
        for m in mods:
            sub = m.act[(v, s)]
            for i in range(m.dims[t]):
                for j in range(m.dims[s]):
                    if sub[i][j]:
                        mat[ro + i][co + j] = sub[i][j]
            ro += m.dims[t]
            co += m.dims[s]
        act[(v, s)] = mat
    tags = {s: [] for s in alg.edges}
    for n, m in enumerate(mods):
        lab = n if labels is None else labels[n]
        for s in alg.edges:
            tags[s].extend((lab, tag) for tag in m.tags[s])
    return Module(alg, dims, act, tags, check=False)


def zero_module(alg: TreeAlgebra) -> Module:
    return Module(alg, {}, {}, check=False)


def head_generators(m: Module) -> list[tuple[str, list]]:
    """Vectors whose images span the head; unit vectors off the radical's pivots."""
    rad = m.radical()
    gens = []
    for s in m.alg.edges:
        for j in la.complement_units(rad[s], m.dims[s]):
            vec = [0] * m.dims[s]
            vec[j] = 1
            gens.append((s, vec))
    return gens


def _path_image(m: Module, alg: TreeAlgebra, start: str, vec: list, tag) -> list:
    """Image of the basis vector ``tag`` of P_start under top -> vec."""
    kind, j = tag
    if kind == "top":
        return vec
    if kind == "soc":
        v = next(w for w in alg.ends(start) if w in alg.arrow_vertices)
        j = alg.length[v]
    else:
        v = kind
    cur, out = start, vec
    for _ in range(j):
        out = m._apply(v, cur, out)
        cur = alg.arrows[(v, cur)]
    return out


def projective_cover(m: Module) -> tuple[list[str], Module, ModuleMap]:
    """Minimal projective cover: (head edges, cover module, surjection)."""
    alg = m.alg
    gens = head_generators(m)
    heads = [s for s, _ in gens]
    cover = direct_sum(alg, [alg.projective(s) for s in heads])
    blocks = {t: la.zeros(m.dims[t], cover.dims[t]) for t in alg.edges}
    cols = {t: 0 for t in alg.edges}
    for n, (s, vec) in enumerate(gens):
        p = alg.projective(s)
        for t in alg.edges:
            for tag in p.tags[t]:
                img = _path_image(m, alg, s, vec, tag)
                for r in range(m.dims[t]):
                    if img[r]:
                        blocks[t][r][cols[t]] = img[r]
                cols[t] += 1
    return heads, cover, ModuleMap(cover, m, blocks, check=False)


def kernel(f: ModuleMap) -> Module:
    """The kernel as a module, in the reduced basis of each block's null space."""
    src = f.source
    alg = src.alg
    bases, frees = {}, {}
    for s in alg.edges:
        bases[s], frees[s] = la.nullspace(f.blocks[s], src.dims[s])
    dims = {s: len(bases[s]) for s in alg.edges}
    act = {}
    for (v, s), t in alg.arrows.items():
        cols = []
        for vec in bases[s]:
            img = src._apply(v, s, vec)
            cols.append([img[j] for j in frees[t]])
        act[(v, s)] = la.transpose(cols, dims[t]) if cols else la.zeros(dims[t], 0)
    tags = {s: [src.tags[s][j] for j in frees[s]] for s in alg.edges}
    return Module(alg, dims, act, tags, check=False)


def syzygy(alg: TreeAlgebra, m: Module) -> Module:
    """Kernel of the minimal projective cover."""
    _, _, f = projective_cover(m)
    return kernel(f)


def quotient_module(m: Module, sub: Mapping[str, list]) -> Module:
    """M / N for a submodule N given by spanning vectors per edge type."""
    alg = m.alg
    red, keep = {}, {}
    for s in alg.edges:
        r, piv = la.rref(sub.get(s, []), m.dims[s]) if sub.get(s) else ([], [])
        red[s] = (r, piv)
        keep[s] = [j for j in range(m.dims[s]) if j not in set(piv)]

    def reduce(s, w):
        w = list(w)
        r, piv = red[s]
        for row, p in zip(r, piv):
            if w[p]:
                f = w[p]
                w = [x - f * y for x, y in zip(w, row)]
        return [w[j] for j in keep[s]]

    dims = {s: len(keep[s]) for s in alg.edges}
    act = {}
    for (v, s), t in alg.arrows.items():
        cols = []
        for j in keep[s]:
            e = [0] * m.dims[s]
            e[j] = 1
            cols.append(reduce(t, m._apply(v, s, e)))
        act[(v, s)] = la.transpose(cols, dims[t]) if cols else la.zeros(dims[t], 0)
    tags = {s: [m.tags[s][j] for j in keep[s]] for s in alg.edges}
    return Module(alg, dims, act, tags, check=False)


def generated_submodule(m: Module, s: str, vec: list) -> dict[str, list]:
    alg = m.alg
    span = {t: [] for t in alg.edges}
    stack = [(s, vec)]
    while stack:
        t, w = stack.pop()
        if not any(w):
            continue
        cur = span[t]
        if la.rank(cur + [w], m.dims[t]) == len(cur):
            continue
        cur.append(w)
        for v in alg.ends(t):
            if (v, t) in alg.arrows:
                stack.append((alg.arrows[(v, t)], m._apply(v, t, w)))
    return span


def strip_projective_summands(m: Module) -> tuple[Module, list[str]]:
    """Split off projective summands; returns the remainder and the stripped heads."""
    alg = m.alg
    stripped = []
    while True:
        found = None
        for s in alg.edges:
            if not m.dims[s]:
                continue
            v = next(w for w in alg.ends(s) if w in alg.arrow_vertices)
            top_to_soc = m._cycle_power(v, s, alg.length[v])
            for j in range(m.dims[s]):
                if any(row[j] for row in top_to_soc):
                    vec = [0] * m.dims[s]
                    vec[j] = 1
                    found = (s, vec)
                    break
            if found:
                break
        if not found:
            return m, stripped
        s, vec = found
        stripped.append(s)
        m = quotient_module(m, generated_submodule(m, s, vec))


def is_isomorphic(m1: Module, m2: Module, tries: int = 8, seed: int = 0) -> bool:
    """Isomorphism test: matching invariants, then a random combination of Hom(m1, m2)
    that is invertible. The randomness is seeded, so the answer is deterministic;
    a false negative needs every try to hit a proper subvariety."""
    if m1.dims != m2.dims:
        return False
    if m1.is_zero():
        return True
    if m1.radical_layers() != m2.radical_layers() or m1.socle() != m2.socle():
        return False
    basis = hom_space(m1, m2)
    if not basis:
        return False
    rng = random.Random(seed)
    for _ in range(tries):
        coeffs = [rng.randint(-1000, 1000) for _ in basis]
        ok = True
        for s in m1.alg.edges:
            d = m1.dims[s]
            if not d:
                continue
            mat = [[sum(c * b.blocks[s][r][k] for c, b in zip(coeffs, basis)) for k in range(d)] for r in range(d)]
            if la.det(mat) == 0:
                ok = False
                break
        if ok:
            return True
    return False


# Green's walk

@dataclass
class WalkResult:
    character: Counter
    covers: list[list[str]]
    module: Module
    characters: list[Counter] = field(default_factory=list)


def lattice_reduction(alg: TreeAlgebra, vertex: str) -> Module:
    """Reduction of the lattice of a non-exceptional character.

    At a leaf this is the simple module of its edge. At an inner vertex we use
    the uniserial module running once around the vertex, starting from the
    first edge of its stored order (experimental).
    """
    tree = alg.tree
    if vertex not in tree.vertices:
        raise BrauerError("unknown-vertex", vertex)
    if vertex == alg.exceptional and alg.m > 1:
        raise BrauerError("unsupported", "walks from the exceptional vertex are not supported")
    seq = tree.order[vertex]
    if len(seq) == 1:
        return alg.simple(seq[0])
    basis = [(s, (vertex, j)) for j, s in enumerate(seq)]
    succ = {(vertex, j): j + 1 for j in range(len(seq) - 1)}
    return Module.from_basis(alg, basis, succ)


def _char_str(c: Counter) -> str:
    parts = []
    for v in sorted(c):
        n = c[v]
        if n == 0:
            continue
        parts.append(v if n == 1 else f"{n}*{v}")
    return " + ".join(parts) if parts else "0"


def walk(alg: TreeAlgebra, start: str, n: int) -> WalkResult:
    """Iterate Omega n times from the lattice reduction of ``start``.

    The lattice character follows [Omega L] = [P(L)] - [L] in K_0, with the
    exceptional characters counted as one symbol.
    """
    if n < 0:
        raise BrauerError("invalid-argument", "n must be nonnegative")
    mod = lattice_reduction(alg, start)
    char = Counter({start: 1})
    chars = [char]
    covers = []
    for _ in range(n):
        heads, _, f = projective_cover(mod)
        covers.append(heads)
        proj = Counter()
        for s in heads:
            proj.update(alg.projective_character(s))
        new = Counter(proj)
        new.subtract(char)
        char = Counter({v: c for v, c in new.items() if c})
        chars.append(char)
        mod = kernel(f)
    return WalkResult(char, covers, mod, chars)


# complexes

@dataclass
class ProjComplex:
    """Bounded complex of projectives; the differential d^j goes from degree j to j+1."""

    alg: TreeAlgebra
    terms: dict[int, list[str]]
    diffs: dict[int, dict[str, list]]
    id: str = ""

    def degrees(self) -> list[int]:
        return sorted(self.terms)

    def term_dims(self, j: int) -> dict[str, int]:
        out = Counter()
        for s in self.terms.get(j, []):
            out.update(self.alg.projective(s).dims)
        return {s: out.get(s, 0) for s in self.alg.edges}

    def check(self):
        for j in self.degrees():
            if j in self.diffs and j + 1 in self.diffs:
                for s in self.alg.edges:
                    prod = la.matmul(self.diffs[j + 1][s], self.diffs[j][s], self.term_dims(j + 1)[s])
                    if not la.is_zero(prod):
                        raise BrauerError("not-a-complex", f"d{j + 1} after d{j} is nonzero on {s}")


def _assemble(alg: TreeAlgebra, src: list[str], tgt: list[str], block_maps) -> dict[str, list]:
    """Block matrix per edge type from a grid of ModuleMaps (None = zero)."""
    sd = [alg.projective(s).dims for s in src]
    td = [alg.projective(t).dims for t in tgt]
    out = {}
    for e in alg.edges:
        rows = sum(d[e] for d in td)
        cols = sum(d[e] for d in sd)
        mat = la.zeros(rows, cols)
        ro = 0
        for b, tdims in enumerate(td):
            co = 0
            for a, sdims in enumerate(sd):
                f = block_maps[b][a]
                if f is not None:
                    blk = f.blocks[e]
                    for i in range(tdims[e]):
                        for j in range(sdims[e]):
                            if blk[i][j]:
                                mat[ro + i][co + j] = blk[i][j]
                co += sdims[e]
            ro += tdims[e]
        out[e] = mat
    return out


def _scale(f: ModuleMap, c) -> ModuleMap:
    return ModuleMap(f.source, f.target, {s: [[c * x for x in r] for r in b] for s, b in f.blocks.items()}, check=False)


def _default_block(alg: TreeAlgebra, s: str, t: str) -> ModuleMap | None:
    if s == t:
        return socle_map(alg, s)
    if _shared_vertex(alg, s, t) is not None:
        return canonical_map(alg, s, t)
    return None


def build_complex(
    alg: TreeAlgebra,
    terms: Mapping[int, Sequence[str]],
    diff_specs: Mapping[int, object] | None = None,
    cid: str = "",
) -> ProjComplex:
    """Assemble a complex. A differential spec is ``"canonical"`` (the default) or
    a grid of entries: an int c (c times the canonical or socle map), or
    ``"id"`` / ``"c*id"`` for multiples of the identity between equal terms.
    """
    diff_specs = diff_specs or {}
    terms = {j: list(v) for j, v in terms.items() if v}
    for j, ts in terms.items():
        for s in ts:
            alg._check_edge(s)
    diffs = {}
    for j in sorted(terms):
        if j + 1 not in terms:
            continue
        src, tgt = terms[j], terms[j + 1]
        spec = diff_specs.get(j, "canonical")
        grid = []
        if spec == "canonical":
            for t in tgt:
                grid.append([_default_block(alg, s, t) for s in src])
        else:
            if len(spec) != len(tgt) or any(len(r) != len(src) for r in spec):
                raise BrauerError("bad-complex", f"matrix for d{j} must be {len(tgt)}x{len(src)}")
            for t, row in zip(tgt, spec):
                grow = []
                for s, tok in zip(src, row):
                    grow.append(_block_from_token(alg, s, t, tok))
                grid.append(grow)
        diffs[j] = _assemble(alg, src, tgt, grid)
    c = ProjComplex(alg, terms, diffs, cid)
    c.check()
    return c


def _block_from_token(alg: TreeAlgebra, s: str, t: str, tok) -> ModuleMap | None:
    tok = str(tok)
    if tok.endswith("id"):
        c = tok[:-2].rstrip("*")
        c = 1 if c in ("", "+") else (-1 if c == "-" else int(c))
        if s != t:
            raise BrauerError("bad-complex", f"identity block between different projectives {s}, {t}")
        return _scale(identity_map(alg.projective(s)), c)
    try:
        c = int(tok)
    except ValueError:
        raise BrauerError("bad-complex", f"bad matrix entry {tok!r}")
    if c == 0:
        return None
    base = _default_block(alg, s, t)
    if base is None:
        raise BrauerError("no-canonical-map", f"no canonical map from P_{s} to P_{t}")
    return _scale(base, c)


@dataclass
class HomologyGroup:
    degree: int
    dim: int
    factors: Counter

    def factor_list(self) -> list[str]:
        return sorted(self.factors.elements())


def homology(alg: TreeAlgebra, c: ProjComplex) -> dict[int, HomologyGroup]:
    """Homology in every degree carrying a term, as composition factors."""
    c.check()
    out = {}
    for j in c.degrees():
        dims = c.term_dims(j)
        factors = Counter()
        for s in alg.edges:
            if not dims[s]:
                continue
            ker = dims[s] - (la.rank(c.diffs[j][s], dims[s]) if j in c.diffs else 0)
            im = la.rank(c.diffs[j - 1][s], c.term_dims(j - 1)[s]) if j - 1 in c.diffs else 0
            if ker - im:
                factors[s] = ker - im
        out[j] = HomologyGroup(j, sum(factors.values()), factors)
    return out


@dataclass
class LemmaComplex:
    complex: ProjComplex
    path_vertices: list[str]
    new_edge: str
    torsion: list[list[str]]
    predicted: dict[int, Counter]

    def torsion_free(self) -> bool:
        return not any(self.torsion)


def _reduction(alg: TreeAlgebra, v: str) -> Counter:
    return Counter({s: alg.mult[v] for s in alg.tree.order[v]})


def lemma_complex(
    alg: TreeAlgebra, path: Sequence[str], v_prime: str, base_degree: int = 0, v_t: str | None = None
) -> LemmaComplex:
    """Canonical complex 0 -> P_{S_t} -> P_{S_(t-1)} -> ... -> P_{S_0} -> 0.

    ``path`` is S_0 ... S_(t-1) running from V_0 to V_t, and S_t is the edge
    from V_t to ``v_prime``. P_{S_t} sits in ``base_degree`` and P_{S_0} in
    ``base_degree + t``. The torsion prediction T_i lists the edges strictly
    between S_i and S_(i+1) around V_(i+1); over the residue field these show up
    in the homology at both neighbouring positions, and the two ends contribute
    the reductions of V_0 and V'.
    """
    tree = alg.tree
    path = list(path)
    if not path:
        raise BrauerError("invalid-argument", "path needs at least one edge")
    for s in path:
        alg._check_edge(s)
    t = len(path)
    verts = []
    if t == 1:
        if v_t is None or v_t not in tree.edges[path[0]].ends:
            raise BrauerError("invalid-argument", "a one-edge path needs its far vertex V_t")
        verts = [tree.edges[path[0]].other(v_t), v_t]
    else:
        for i in range(1, t):
            common = set(tree.edges[path[i - 1]].ends) & set(tree.edges[path[i]].ends)
            if len(common) != 1:
                raise BrauerError("not-a-path", f"{path[i - 1]} and {path[i]} do not meet")
            verts.append(common.pop())
        verts.insert(0, tree.edges[path[0]].other(verts[0]))
        verts.append(tree.edges[path[-1]].other(verts[-1]))
        if v_t is not None and v_t != verts[-1]:
            raise BrauerError("not-a-path", f"path ends at {verts[-1]}, not {v_t}")
    if len(set(verts)) != len(verts):
        raise BrauerError("not-a-path", "path revisits a vertex")
    if v_prime not in tree.vertices:
        raise BrauerError("unknown-vertex", v_prime)
    s_t = tree.edge_between(verts[-1], v_prime)
    if s_t is None:
        raise BrauerError(
            "certificate-requires-edge", f"no edge between {verts[-1]} and {v_prime}"
        )
    edges = path + [s_t]
    torsion = [tree.between(verts[i + 1], edges[i], edges[i + 1]) for i in range(t)]
    terms = {base_degree + t - i: [edges[i]] for i in range(t + 1)}
    cx = build_complex(alg, terms, cid=f"lemma:{'-'.join(edges)}")
    predicted = {}
    for i in range(t + 1):
        c = Counter()
        if i < t:
            c.update(torsion[i])
        if i > 0:
            c.update(torsion[i - 1])
        if i == 0:
            c.update(_reduction(alg, verts[0]))
        if i == t:
            c.update(_reduction(alg, v_prime))
        predicted[base_degree + t - i] = c
    return LemmaComplex(cx, verts, s_t, torsion, predicted)


# complex files

def parse_complex(text: str) -> tuple[str, str, int, dict[int, list[str]], dict[int, object]]:
    """Returns (id, tree id, m, terms, differential specs)."""
    cid = tree_id = None
    m = None
    terms: dict[int, list[str]] = {}
    diffs: dict[int, object] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        try:
            if toks[0] == "COMPLEX":
                if len(toks) != 6 or toks[2] != "ON" or toks[4] != "M":
                    raise ValueError
                cid, tree_id, m = toks[1], toks[3], int(toks[5])
            elif toks[0] == "DEG":
                head, _, rest = line.partition(":")
                j = int(head.split()[1])
                if j in terms:
                    raise BrauerError("bad-complex", f"line {lineno}: degree {j} given twice")
                terms[j] = rest.split()
            elif toks[0] == "DIFF":
                head, _, rest = line.partition(":")
                j = int(head.split()[1])
                rest = rest.strip()
                if rest == "canonical":
                    diffs[j] = "canonical"
                elif rest.startswith("matrix"):
                    body = rest[len("matrix"):]
                    diffs[j] = [r.split() for r in body.split(";")]
                else:
                    raise ValueError
            else:
                raise ValueError
        except (ValueError, IndexError):
            raise BrauerError("parse-error", f"line {lineno}: cannot read {line!r}")
    if cid is None:
        raise BrauerError("parse-error", "missing COMPLEX line")
    return cid, tree_id, m, terms, diffs


def format_homology(h: Mapping[int, HomologyGroup]) -> str:
    lines = ["degree\tdim\tfactors"]
    for j in sorted(h):
        g = h[j]
        lines.append(f"{j}\t{g.dim}\t{' '.join(g.factor_list()) or '-'}")
    return "\n".join(lines) + "\n"


def character_string(c: Counter) -> str:
    return _char_str(c)
