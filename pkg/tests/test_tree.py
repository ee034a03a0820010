import csv
import random
from collections import Counter

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from brauer import BrauerError, dataset, fold, fold_automorphism, parse, planar_iso, quotient, serialize
from brauer.tree import distance, is_planar_map, leaves, path_between, real_stem, relabel, render_ascii, render_dot

from treegen import LINE, planar_trees, random_tree, star


def as_graph(t):
    g = nx.Graph()
    g.add_nodes_from(t.vertices)
    g.add_edges_from(e.ends for e in t.edges.values())
    return g


def reversed_at(t, v, tid=None):
    text = serialize(t)
    seq = " ".join(t.order[v])
    rev = " ".join(reversed(t.order[v]))
    out = parse(text.replace(f"ORDER {v}: {seq}\n", f"ORDER {v}: {rev}\n"))
    return out


# parsing

def test_parse_line(line):
    assert line.e == 2
    assert list(line.vertices) == ["a", "b", "c"]
    assert line.multiplicity == 1
    assert line.exceptional() is None
    assert line.successor("b", "S0") == "S1"
    assert line.successor("a", "S0") == "S0"


def test_round_trip_is_canonical(line):
    text = serialize(line)
    assert text == LINE
    assert serialize(parse(text)) == text


def test_rotation_canonicalised():
    t = parse(star(3, 2).replace("ORDER x: S0 S1 S2", "ORDER x: S1 S2 S0"))
    assert "ORDER x: S0 S1 S2" in serialize(t)


def test_comments_and_blank_lines():
    noisy = "# a comment\n\n" + LINE.replace("EDGE S0 a b", "EDGE S0 a b   # first")
    assert serialize(parse(noisy)) == LINE


@pytest.mark.parametrize(
    "text, token",
    [
        (LINE.replace("ORDER b: S0 S1", "ORDER b: S0"), "order-incomplete"),
        (LINE.replace("ORDER c: S1\n", ""), "order-incomplete"),
        (LINE.replace("ORDER b: S0 S1", "ORDER b: S0 S1 S0"), "order-mismatch"),
        (LINE.replace("ORDER a: S0", "ORDER a: S0 S1"), "order-mismatch"),
        (LINE.replace("EDGE S1 b c", "EDGE S1 b b"), "not-a-tree"),
        (LINE.replace("EDGE S1 b c", "EDGE S1 b d"), "unknown-vertex"),
        (LINE.replace("EDGE S1 b c", "EDGE S0 b c"), "duplicate-label"),
        (LINE.replace("VERTEX a kind=unip", "VERTEX a kind=exc"), "exceptional-with-m1"),
        (LINE.replace("MULTIPLICITY 1", "MULTIPLICITY two"), "parse-error"),
        (LINE.replace("END\n", ""), "parse-error"),
        (LINE.replace("kind=unip real=1\nVERTEX b", "kind=weird real=1\nVERTEX b"), "parse-error"),
        (LINE.replace("MULTIPLICITY 1", "MULTIPLICITY 2").replace("VERTEX c kind=unip", "VERTEX c kind=exc")
         .replace("VERTEX a kind=unip", "VERTEX a kind=exc"),
         "two-exceptional"),
    ],
)
def test_parse_errors(text, token):
    with pytest.raises(BrauerError) as exc:
        parse(text)
    assert exc.value.token == token


def test_dataset_files_round_trip(ds):
    for tid, rec in ds.items():
        text = (rec.path / "tree.bt").read_text()
        assert serialize(parse(text)) == text, tid


# metric

def test_distance_and_leaves(line):
    assert distance(line, "a", "c") == 2
    assert distance(line, "b", "b") == 0
    assert leaves(line) == {"a", "c"}
    assert path_between(line, "c", "a") == ["c", "b", "a"]


def test_steinberg_distance_e7(ds):
    assert distance(ds["e7_d14"].tree, "1", "St") == 7


@given(planar_trees())
def test_metric_matches_networkx(t):
    g = as_graph(t)
    assert nx.is_tree(g)
    lengths = dict(nx.all_pairs_shortest_path_length(g))
    for a in t.vertices:
        for b in t.vertices:
            assert distance(t, a, b) == lengths[a][b]
    assert leaves(t) == {v for v in g if g.degree(v) == 1}


def test_relabel_gives_e8_blocks(ds):
    path = dataset.data_root() / "e8_d9_relabel.tsv"
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh, delimiter="\t"))
    header, body = rows[0], rows[1:]
    e7 = ds["e7_d9"].tree
    for j, col in enumerate(header[1:], 1):
        mapping = {r[0]: r[j] for r in body}
        out = relabel(e7, mapping, f"e8_d9_{col}")
        assert serialize(out) == serialize(ds[f"e8_d9_{col}"].tree)


def test_relabel_must_be_injective(line):
    with pytest.raises(BrauerError) as exc:
        relabel(line, {"a": "c"})
    assert exc.value.token == "duplicate-label"


# planar isomorphism

def test_iso_identity(line, ds):
    assert planar_iso(line, line) == {v: v for v in line.vertices}
    t = ds["e8_d20"].tree
    assert planar_iso(t, t, ("label",)) == {v: v for v in t.vertices}


ARMS = """\
TREE arms
MULTIPLICITY 1
VERTEX c kind=unip real=1
VERTEX a1 kind=unip real=1
VERTEX b1 kind=unip real=1
VERTEX b2 kind=unip real=1
VERTEX d1 kind=unip real=1
VERTEX d2 kind=unip real=1
VERTEX d3 kind=unip real=1
EDGE A1 c a1
EDGE B1 c b1
EDGE B2 b1 b2
EDGE D1 c d1
EDGE D2 d1 d2
EDGE D3 d2 d3
ORDER c: A1 B1 D1
ORDER a1: A1
ORDER b1: B1 B2
ORDER b2: B2
ORDER d1: D1 D2
ORDER d2: D2 D3
ORDER d3: D3
END
"""


def test_iso_detects_reversed_order():
    # arms of lengths 1, 2, 3: no reflection symmetry
    t = parse(ARMS)
    r = reversed_at(t, "c")
    assert planar_iso(t, r) is None
    assert nx.is_isomorphic(as_graph(t), as_graph(r))
    assert planar_iso(r, reversed_at(r, "c")) is not None


def test_iso_star_rotation():
    s = parse(star(3, 1))
    rot = parse(star(3, 1).replace("ORDER x: S0 S1 S2", "ORDER x: S1 S2 S0"))
    assert planar_iso(s, rot) == {v: v for v in s.vertices}
    cyc = {"u0": "u1", "u1": "u2", "u2": "u0", "S0": "S1", "S1": "S2", "S2": "S0"}
    shifted = relabel(s, cyc, "s2")
    assert is_planar_map(s, shifted, {"x": "x", "u0": "u1", "u1": "u2", "u2": "u0"}) is None
    assert is_planar_map(s, shifted, {"x": "x", "u0": "u1", "u1": "u0", "u2": "u2"}) is not None


def test_iso_respects_attributes(ds):
    t = ds["syn_star"].tree
    moved = parse(serialize(t).replace("VERTEX x kind=exc", "VERTEX x kind=unip").replace(
        "VERTEX a kind=unip", "VERTEX a kind=exc"))
    assert planar_iso(t, moved) is not None
    assert planar_iso(t, moved, ("exceptional",)) is None


@given(planar_trees(), st.integers(0, 2**32 - 1))
def test_iso_relations(t, seed):
    rng = random.Random(seed)
    names = list(t.vertices)
    shuffled = names[:]
    rng.shuffle(shuffled)
    u = relabel(t, {a: f"w{b}" for a, b in zip(names, shuffled)}, "u")
    f = planar_iso(t, u, ("exceptional",))
    assert f is not None and is_planar_map(t, u, f) is None
    g = planar_iso(u, t, ("exceptional",))
    assert g is not None
    # symmetric and transitive
    inv = {b: a for a, b in f.items()}
    assert is_planar_map(u, t, inv) is None
    assert is_planar_map(t, t, {a: g[f[a]] for a in t.vertices}) is None
    # as abstract trees the answer agrees with networkx
    assert nx.is_isomorphic(as_graph(t), as_graph(u))


# folding

def test_fold_single_edge(ds):
    t = ds["syn_edge"].tree
    f = fold(t, 3)
    assert f.multiplicity == 1
    assert f.exceptional() is None
    x = next(v for v in f.vertices if not v.startswith("("))
    assert f.vertices[x].kind == "nonunip"
    assert f.order[x] == ("(l1,0)", "(l1,1)", "(l1,2)")
    assert sorted(leaves(f)) == ["(u,0)", "(u,1)", "(u,2)"]
    assert planar_iso(f, ds["syn_edge_fold3"].tree) is not None


def test_fold_quotient_single_edge(ds):
    t = ds["syn_edge"].tree
    back = quotient(fold(t, 3), 3)
    assert back.multiplicity == 3
    assert planar_iso(back, t, ("exceptional",)) is not None


def test_fold_line(ds):
    t = ds["syn_line_x"].tree
    f = fold(t, 2)
    assert len(f.vertices) == 5
    assert f.multiplicity == 2
    assert f.order["x"] == ("(l1,0)", "(l1,1)")
    sigma = fold_automorphism(f, 2)
    assert sigma["(a,0)"] == "(a,1)" and sigma["(a,1)"] == "(a,0)"
    assert sigma["x"] == "x"
    assert planar_iso(quotient(f, 2), t, ("exceptional",)) is not None


def test_fold_automorphism_star(ds):
    f = fold(ds["syn_edge"].tree, 3)
    sigma = fold_automorphism(f, 3)
    assert sigma["(u,0)"] == "(u,1)" and sigma["(u,1)"] == "(u,2)" and sigma["(u,2)"] == "(u,0)"


@pytest.mark.parametrize("d, token", [(1, "invalid-argument"), (5, "d-does-not-divide-m")])
def test_fold_errors(ds, d, token):
    with pytest.raises(BrauerError) as exc:
        fold(ds["syn_star"].tree, d)
    assert exc.value.token == token


def test_fold_needs_exceptional(line):
    with pytest.raises(BrauerError) as exc:
        fold(line, 2)
    assert exc.value.token == "no-exceptional-vertex"


def test_fold_automorphism_rejects_d1(ds):
    with pytest.raises(BrauerError):
        fold_automorphism(fold(ds["syn_edge"].tree, 3), 1)


def test_quotient_rejects_unfolded(line):
    with pytest.raises(BrauerError) as exc:
        quotient(line, 2)
    assert exc.value.token == "not-folded"


def test_reflected_central_order_is_not_a_fold(ds):
    bad = ds["syn_vee_fold2_bad"].tree
    folded = fold(ds["syn_vee"].tree, 2)
    assert planar_iso(folded, bad, ("label",)) is None
    assert planar_iso(folded, ds["syn_vee"].tree) is None


@given(planar_trees(mults=(2, 3, 4, 6)), st.data())
def test_fold_properties(t, data):
    m = t.multiplicity
    d = data.draw(st.sampled_from([k for k in range(2, m + 1) if m % k == 0]))
    f = fold(t, d)
    non_exc = len(t.vertices) - 1
    assert f.e == d * t.e
    assert len(f.vertices) == d * non_exc + 1
    sigma = fold_automorphism(f, d)
    assert [v for v in f.vertices if sigma[v] == v] == [t.exceptional()]
    v = next(iter(sorted(set(f.vertices) - {t.exceptional()})))
    orbit = [v]
    while sigma[orbit[-1]] != v:
        orbit.append(sigma[orbit[-1]])
    assert len(orbit) == d
    assert planar_iso(quotient(f, d), t, ("exceptional",)) is not None
    assert nx.is_tree(as_graph(f))


# real stem

def test_real_stem_e7(ds):
    stem = real_stem(ds["e7_d14"].tree)
    assert len(stem) == 13
    assert {stem[0], stem[-1]} == {"D4_{eps_1}", "1"}
    assert "EXC" in stem and "St" in stem


def test_real_stem_line(line):
    assert real_stem(line) == ["a", "b", "c"]


def test_real_stem_star_fails():
    with pytest.raises(BrauerError) as exc:
        real_stem(parse(star(3, 1)))
    assert exc.value.token == "real-stem-not-a-line"


# rendering

def test_render(ds):
    t = ds["e7_d14"].tree
    dot = render_dot(t)
    assert dot.startswith("graph") and dot.count(" -- ") == t.e
    text = render_ascii(t)
    for v in t.vertices:
        assert v in text
    assert Counter(text.splitlines()) and render_ascii(t) == text
