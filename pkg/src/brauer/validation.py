"""Certificates: machine-checkable claims about a Brauer tree, and their verdicts."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Callable, Mapping

from . import algebra as alg_mod
from .errors import BrauerError
from .qpoly import QPolynomial, congruent_mod_phi
from .tree import (
    BrauerTree,
    distance,
    fold,
    fold_automorphism,
    is_planar_map,
    leaves,
    path_between,
    real_stem,
)

__all__ = [
    "Certificate",
    "Verdict",
    "parse_certificate",
    "parse_character",
    "check_parity",
    "check_degree",
    "check_hecke",
    "check_real_stem",
    "check_steinberg",
    "check_coxeter",
    "check_walk",
    "check_fold",
    "check_complex",
    "run_certificate",
    "format_verdicts",
]

KINDS = ("parity", "degree", "hecke", "real-stem", "steinberg", "coxeter", "walk", "fold", "complex")
DEFAULT_M = 2
DEGREE_BOUND = 10

# series tags that do not describe a Harish-Chandra series of several characters
_NOT_A_SERIES = {None, "CUSP", "EXC"}


@dataclass(frozen=True)
class Verdict:
    """Outcome of one check.

    ``status`` is ``pass``, ``fail``, ``not-applicable`` or ``data-missing``;
    only ``fail`` counts against a tree.
    """

    status: str
    trace: tuple[str, ...] = ()
    witness: str = ""
    name: str = ""
    kind: str = ""

    def __post_init__(self):
        if self.status == "fail" and not self.witness:
            raise ValueError("a failing verdict needs a witness")

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "status": self.status,
            "witness": self.witness,
            "trace": list(self.trace),
        }


def _ok(trace, **kw) -> Verdict:
    return Verdict("pass", tuple(trace), **kw)


def _fail(trace, witness, **kw) -> Verdict:
    return Verdict("fail", tuple(trace), witness, **kw)


# certificate files

@dataclass(frozen=True)
class Certificate:
    id: str
    kind: str
    tree: str
    m: int | None = None
    lines: tuple[tuple[str, tuple[str, ...]], ...] = field(default=())

    def get(self, key: str) -> tuple[str, ...] | None:
        for k, toks in self.lines:
            if k == key:
                return toks
        return None

    def get_all(self, key: str) -> list[tuple[str, ...]]:
        return [toks for k, toks in self.lines if k == key]

    def has(self, key: str) -> bool:
        return any(k == key for k, _ in self.lines)


def parse_certificate(text: str) -> Certificate:
    head = None
    lines = []
    ended = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ended:
            raise BrauerError("parse-error", f"line {lineno}: content after END")
        toks = line.split()
        if toks[0] == "CERT":
            if head is not None or len(toks) < 4:
                raise BrauerError("parse-error", f"line {lineno}: bad CERT line")
            attrs = {}
            for tok in toks[2:]:
                k, eq, v = tok.partition("=")
                if not eq or k not in ("kind", "tree", "m") or k in attrs:
                    raise BrauerError("parse-error", f"line {lineno}: bad attribute {tok!r}")
                attrs[k] = v
            if "kind" not in attrs or "tree" not in attrs:
                raise BrauerError("parse-error", f"line {lineno}: kind= and tree= are required")
            if attrs["kind"] not in KINDS:
                raise BrauerError("parse-error", f"line {lineno}: unknown kind {attrs['kind']!r}")
            try:
                m = int(attrs["m"]) if "m" in attrs else None
            except ValueError:
                raise BrauerError("parse-error", f"line {lineno}: bad m")
            head = (toks[1], attrs["kind"], attrs["tree"], m)
        elif toks[0] == "END":
            ended = True
        elif head is None:
            raise BrauerError("parse-error", f"line {lineno}: expected CERT")
        elif toks[0] == "HOMOLOGY":
            deg, colon, rest = line[len("HOMOLOGY"):].partition(":")
            if not colon:
                raise BrauerError("parse-error", f"line {lineno}: HOMOLOGY needs '<deg>:'")
            lines.append(("HOMOLOGY", (deg.strip(), *rest.split())))
        else:
            lines.append((toks[0], tuple(toks[1:])))
    if head is None:
        raise BrauerError("parse-error", "missing CERT line")
    if not ended:
        raise BrauerError("parse-error", "missing END")
    return Certificate(*head, tuple(lines))


def parse_character(tokens) -> Counter:
    """``a + 2*b`` (as tokens or one string) -> Counter; ``0`` is the zero character."""
    if isinstance(tokens, str):
        tokens = tokens.split()
    out = Counter()
    for tok in tokens:
        if tok in ("+", "0"):
            continue
        coeff, star, label = tok.partition("*")
        if star:
            try:
                out[label] += int(coeff)
            except ValueError:
                raise BrauerError("parse-error", f"bad character term {tok!r}")
        else:
            out[tok] += 1
    return Counter({k: v for k, v in out.items() if v})


def _need(cert: Certificate, key: str, n: int | None = None) -> tuple[str, ...]:
    toks = cert.get(key)
    if toks is None or (n is not None and len(toks) != n):
        raise BrauerError("bad-certificate", f"{cert.id}: {key} line missing or malformed")
    return toks


def _int(cert: Certificate, key: str) -> int:
    try:
        return int(_need(cert, key, 1)[0])
    except ValueError:
        raise BrauerError("bad-certificate", f"{cert.id}: {key} must be an integer")


# combinatorial rules

def _degrees(t: BrauerTree, labels) -> dict[str, QPolynomial]:
    missing = [v for v in labels if t.vertices[v].degree is None]
    if missing:
        raise BrauerError("degrees-required", f"no degree for {', '.join(missing)}")
    return {v: t.vertices[v].degree for v in labels}


def check_parity(t: BrauerTree, d: int) -> Verdict:
    """Even distance between unipotent vertices iff their degrees agree mod Phi_d."""
    unip = [v.label for v in t.vertices.values() if v.unipotent]
    deg = _degrees(t, unip)
    trace = []
    for a, b in combinations(unip, 2):
        dist = distance(t, a, b)
        cong = congruent_mod_phi(deg[a], deg[b], d)
        if (dist % 2 == 0) != cong:
            rel = "congruent" if cong else "not congruent"
            return _fail(trace, f"pair ({a},{b}): distance {dist}, degrees {rel} mod Phi_{d}")
    trace.append(f"{len(unip)} unipotent vertices consistent mod Phi_{d}")
    return _ok(trace)


def _edge_dimension(t: BrauerTree, s: str, leaf: str, deg) -> QPolynomial:
    a, b = t.edges[s].ends
    near = a if distance(t, a, leaf) < distance(t, b, leaf) else b
    total = QPolynomial()
    for i, v in enumerate(path_between(t, near, leaf)):
        total = total + deg[v] if i % 2 == 0 else total - deg[v]
    return total


def check_degree(t: BrauerTree, bound: int = DEGREE_BOUND) -> Verdict:
    """Alternating degree sums from each edge to the leaves: well defined and positive."""
    deg = _degrees(t, list(t.vertices))
    lv = sorted(leaves(t))
    trace = []
    for s in t.edges:
        dims = [(leaf, _edge_dimension(t, s, leaf, deg)) for leaf in lv]
        first_leaf, value = dims[0]
        for leaf, other in dims[1:]:
            if other != value:
                return _fail(trace, f"edge {s}: leaves {first_leaf} and {leaf} give {value} and {other}")
        if value.leading() <= 0:
            return _fail(trace, f"edge {s}: dimension {value} has nonpositive leading coefficient")
        for q in range(2, bound + 1):
            if value(q) < 0:
                return _fail(trace, f"edge {s}: dimension {value} is {value(q)} at q={q}")
        trace.append(f"{s}: {value}")
    return _ok(trace)


def check_hecke(t: BrauerTree) -> Verdict:
    """Each Harish-Chandra series spans a union of lines."""
    series: dict[str, list[str]] = {}
    for v in t.vertices.values():
        if v.series not in _NOT_A_SERIES:
            series.setdefault(v.series, []).append(v.label)
    trace = []
    for tag in sorted(series):
        members = set(series[tag])
        for v in series[tag]:
            inside = [w for w in t.neighbours(v) if w in members]
            if len(inside) > 2:
                return _fail(trace, f"series {tag}: {v} has {len(inside)} neighbours in the series")
        trace.append(f"series {tag}: {len(members)} vertices on lines")
    return _ok(trace)


def check_real_stem(t: BrauerTree) -> Verdict:
    """The real vertices form a line, and conjugation reflects the tree across it."""
    trace = []
    try:
        stem = real_stem(t)
    except BrauerError as exc:
        return _fail(trace, exc.message)
    trace.append("real stem: " + " - ".join(stem))
    for v in t.non_unipotent():
        if v not in stem:
            return _fail(trace, f"non-unipotent vertex {v} is off the real stem")
    conj = {v.label: v.conj or v.label for v in t.vertices.values()}
    witness = is_planar_map(t, t, conj, reverse=True)
    if witness is not None:
        return _fail(trace, f"conjugation is not a reflection: {witness}")
    trace.append("conjugation reverses every cyclic order")
    return _ok(trace)


def check_steinberg(t: BrauerTree, r: int | None = None, levis: bool = False) -> Verdict:
    """St is joined to the non-unipotent vertex; with ``levis`` also the principal line."""
    if "St" not in t.vertices:
        return Verdict("not-applicable", ("no vertex labelled St",))
    trace = []
    nonunip = t.non_unipotent()
    if len(nonunip) != 1:
        return _fail(trace, f"expected one non-unipotent vertex, found {len(nonunip)}")
    x = nonunip[0]
    st_l = t.edge_between("St", x)
    if st_l is None:
        return _fail(trace, f"no edge between St and {x}")
    trace.append(f"St_l = {st_l}")
    if not levis:
        return _ok(trace)
    if r is None:
        raise BrauerError("bad-certificate", "the principal-line check needs a radius")
    if "1" not in t.vertices:
        return _fail(trace, "no vertex labelled 1")
    ball = {v for v in t.vertices if distance(t, "1", v) <= r}
    nbrs = {v: [w for w in t.neighbours(v) if w in ball] for v in ball}
    branching = sorted(v for v in ball if len(nbrs[v]) > 2)
    if branching:
        return _fail(trace, f"ball of radius {r} around 1 branches at {branching[0]}")
    ends = sorted(v for v in ball if len(nbrs[v]) <= 1)
    if set(ends) != {"1", "St"}:
        return _fail(trace, f"ball of radius {r} around 1 has ends {ends}, not 1 and St")
    trace.append(f"ball of radius {r} around 1 is a line from 1 to St")
    if not t.edges[st_l].cuspidal:
        return _fail(trace, f"{st_l} is not cuspidal")
    trace.append(f"{st_l} is cuspidal")
    return _ok(trace)


# algebra-backed certificates

def _algebra(t: BrauerTree, m: int | None) -> alg_mod.TreeAlgebra:
    if m is None:
        m = t.multiplicity if t.multiplicity is not None else DEFAULT_M
    return alg_mod.build_algebra(t, m)


def _homology_mismatch(h, expected: Mapping[int, Counter]) -> str | None:
    for j in sorted(set(h) | set(expected)):
        got = Counter(h[j].factor_list()) if j in h else Counter()
        want = expected.get(j, Counter())
        if got != want:
            return (
                f"degree {j}: homology {alg_mod.character_string(got)}, "
                f"expected {alg_mod.character_string(want)}"
            )
    return None


def check_coxeter(t: BrauerTree, m: int | None, cert: Certificate) -> Verdict:
    """Canonical complex along a line ending at a leaf, with its torsion prediction."""
    path = list(_need(cert, "PATH"))
    target = _need(cert, "TARGET", 1)[0]
    base = _int(cert, "DEGREE") if cert.has("DEGREE") else 0
    vt = cert.get("VT")
    alg = _algebra(t, m)
    trace = []
    try:
        lc = alg_mod.lemma_complex(alg, path, target, base, vt[0] if vt else None)
    except BrauerError as exc:
        if exc.token == "certificate-requires-edge":
            return _fail(trace, exc.message)
        raise
    v_t = lc.path_vertices[-1]
    trace.append(f"S_t = {lc.new_edge} between {v_t} and {target}")
    h = alg_mod.homology(alg, lc.complex)
    bad = _homology_mismatch(h, lc.predicted)
    if bad:
        return _fail(trace, "homology differs from the torsion prediction at " + bad)
    trace.append("homology matches the torsion prediction")
    if cert.has("HOMOLOGY"):
        bad = _homology_mismatch(h, _expected_homology(cert))
        if bad:
            return _fail(trace, bad)
        trace.append("homology matches the certificate")
    for toks in cert.get_all("TORSION"):
        if toks == ("none",):
            nonempty = [i for i, tor in enumerate(lc.torsion) if tor]
            if nonempty:
                i = nonempty[0]
                return _fail(trace, f"torsion at position {i}: {' '.join(lc.torsion[i])}")
            trace.append("torsion free")
        else:
            try:
                i = int(toks[0])
            except (ValueError, IndexError):
                raise BrauerError("bad-certificate", f"{cert.id}: bad TORSION line")
            if i >= len(lc.torsion):
                raise BrauerError("bad-certificate", f"{cert.id}: torsion position {i} out of range")
            if Counter(lc.torsion[i]) != Counter(toks[1:]):
                return _fail(trace, f"torsion at position {i} is {lc.torsion[i]}, expected {list(toks[1:])}")
            trace.append(f"torsion at position {i} as expected")
    between = cert.get("BETWEEN")
    if between is not None:
        if len(between) != 2:
            raise BrauerError("bad-certificate", f"{cert.id}: BETWEEN needs two edges")
        a, b = between
        if a not in t.order[v_t] or b not in t.order[v_t]:
            return _fail(trace, f"{a} or {b} is not at {v_t}")
        if lc.new_edge not in t.between(v_t, a, b):
            return _fail(trace, f"{lc.new_edge} is not strictly between {a} and {b} at {v_t}")
        trace.append(f"{lc.new_edge} lies between {a} and {b} at {v_t}")
    last = lc.torsion[-1]
    plain = [s for s in last if not t.edges[s].cuspidal]
    if plain:
        return _fail(trace, f"edge {plain[0]} between S_(t-1) and S_t at {v_t} is not cuspidal")
    return _ok(trace)


def check_walk(t: BrauerTree, m: int | None, cert: Certificate) -> Verdict:
    """Omega^n from the lattice of a vertex: character, factors, simplicity."""
    start = _need(cert, "START", 1)[0]
    n = _int(cert, "N")
    alg = _algebra(t, m)
    res = alg_mod.walk(alg, start, n)
    got = alg_mod.character_string(res.character)
    trace = [f"Omega^{n} from {start}: character {got}", f"module: {res.module.describe()}"]
    expect = cert.get("EXPECT")
    if expect is not None and res.character != parse_character(expect):
        return _fail(trace, f"character {got}, expected {' '.join(expect)}")
    exclude = cert.get("EXCLUDE")
    if exclude is not None and res.character == parse_character(exclude):
        return _fail(trace, f"character is {got}, which the certificate excludes")
    factors = cert.get("FACTORS")
    if factors is not None and res.module.factors() != Counter(factors):
        return _fail(trace, f"composition factors {sorted(res.module.factors().elements())}, "
                            f"expected {sorted(factors)}")
    if cert.has("SIMPLE") and not res.module.is_simple():
        return _fail(trace, f"module {res.module.describe()} is not simple")
    return _ok(trace)


def check_fold(t: BrauerTree, companion: BrauerTree, d: int,
               label_map: Mapping[str, str] | None = None) -> Verdict:
    """fold(t, d) is planar-isomorphic to ``companion`` under the label map, compatibly with sigma."""
    trace = []
    try:
        folded = fold(t, d)
    except BrauerError as exc:
        return _fail(trace, exc.message)
    label_map = dict(label_map or {})
    vmap = {v: label_map.get(v, v) for v in folded.vertices}
    missing = sorted(set(vmap.values()) - set(companion.vertices))
    if missing:
        return _fail(trace, f"{missing[0]} is not a vertex of {companion.id}")
    witness = is_planar_map(folded, companion, vmap)
    if witness is not None:
        return _fail(trace, witness)
    trace.append(f"fold({t.id}, {d}) is planar-isomorphic to {companion.id}")
    if folded.multiplicity != companion.multiplicity:
        return _fail(trace, f"multiplicity {folded.multiplicity} vs {companion.multiplicity}")
    x = t.exceptional()
    if (folded.vertices[x].kind == "exc") != (companion.vertices[vmap[x]].kind == "exc"):
        return _fail(trace, f"exceptional marking of {vmap[x]} differs")
    try:
        sigma = fold_automorphism(companion, d)
    except BrauerError as exc:
        return _fail(trace, f"{companion.id}: {exc.message}")
    own = fold_automorphism(folded, d)
    for v, w in own.items():
        if vmap[w] != sigma[vmap[v]]:
            return _fail(trace, f"sigma does not commute with the map at {v}")
    trace.append("sigma matches the shift of copies")
    return _ok(trace)


def _expected_homology(cert: Certificate) -> dict[int, Counter]:
    out = {}
    for toks in cert.get_all("HOMOLOGY"):
        try:
            out[int(toks[0])] = Counter(toks[1:])
        except (ValueError, IndexError):
            raise BrauerError("bad-certificate", f"{cert.id}: bad HOMOLOGY line")
    return out


def check_complex(t: BrauerTree, text: str, cert: Certificate) -> Verdict:
    """Homology of a complex file: exact factors per degree, or the set of nonzero degrees."""
    cid, tree_id, m, terms, diffs = alg_mod.parse_complex(text)
    if tree_id != t.id:
        raise BrauerError("bad-certificate", f"complex {cid} is on {tree_id}, not {t.id}")
    alg = _algebra(t, cert.m if cert.m is not None else m)
    cx = alg_mod.build_complex(alg, terms, diffs or None, cid)
    cx.check()
    h = alg_mod.homology(alg, cx)
    nz = sorted(j for j, g in h.items() if g.dim)
    trace = [f"{j}: {' '.join(h[j].factor_list())}" for j in nz] or ["acyclic"]
    if cert.has("HOMOLOGY"):
        bad = _homology_mismatch(h, _expected_homology(cert))
        if bad:
            return _fail(trace, bad)
    nonzero = cert.get("NONZERO")
    if nonzero is not None:
        want = sorted(int(j) for j in nonzero)
        if nz != want:
            return _fail(trace, f"homology nonzero in degrees {nz}, expected {want}")
    return _ok(trace)


# dispatch

def run_certificate(
    cert: Certificate,
    t: BrauerTree,
    resolve_tree: Callable[[str], BrauerTree] | None = None,
    base_dir: Path | None = None,
) -> Verdict:
    """Check one certificate against ``t``; companions and complex files are looked up lazily."""
    if cert.tree != t.id:
        raise BrauerError("bad-certificate", f"{cert.id} is for {cert.tree}, not {t.id}")
    k = cert.kind
    try:
        if k == "parity":
            v = check_parity(t, _int(cert, "D"))
        elif k == "degree":
            v = check_degree(t, _int(cert, "BOUND") if cert.has("BOUND") else DEGREE_BOUND)
        elif k == "hecke":
            v = check_hecke(t)
        elif k == "real-stem":
            v = check_real_stem(t)
        elif k == "steinberg":
            r = _int(cert, "RADIUS") if cert.has("RADIUS") else None
            levis = cert.has("LEVIS") and _int(cert, "LEVIS") == 1
            v = check_steinberg(t, r, levis)
        elif k == "coxeter":
            v = check_coxeter(t, cert.m, cert)
        elif k == "walk":
            v = check_walk(t, cert.m, cert)
        elif k == "fold":
            toks = _need(cert, "COMPANION", 3)
            if toks[1] != "D" or resolve_tree is None:
                raise BrauerError("bad-certificate", f"{cert.id}: cannot resolve the companion")
            label_map = {}
            for pair in cert.get_all("MAP"):
                if len(pair) != 2:
                    raise BrauerError("bad-certificate", f"{cert.id}: MAP needs two labels")
                label_map[pair[0]] = pair[1]
            v = check_fold(t, resolve_tree(toks[0]), int(toks[2]), label_map)
        else:
            name = _need(cert, "COMPLEX", 1)[0]
            if base_dir is None:
                raise BrauerError("bad-certificate", f"{cert.id}: no directory for {name}")
            path = Path(base_dir) / name
            try:
                text = path.read_text()
            except OSError:
                raise BrauerError("bad-certificate", f"{cert.id}: cannot read {path}")
            v = check_complex(t, text, cert)
    except BrauerError as exc:
        if exc.token == "degrees-required":
            v = Verdict("data-missing", (exc.message,))
        else:
            raise
    return Verdict(v.status, v.trace, v.witness, cert.id, k)


def format_verdicts(verdicts) -> str:
    """TSV: name, kind, status, witness."""
    lines = ["name\tkind\tstatus\twitness"]
    for v in verdicts:
        lines.append(f"{v.name}\t{v.kind}\t{v.status}\t{v.witness or '-'}")
    return "\n".join(lines) + "\n"
