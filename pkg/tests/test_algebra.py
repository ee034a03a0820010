import random
from collections import Counter

import pytest
import sympy
from hypothesis import given, settings

from brauer import BrauerError, build_algebra, cartan, decomposition_matrix, ext1, homology, parse, walk
from brauer.algebra import (
    build_complex,
    canonical_map,
    hom_dim,
    hom_space,
    is_isomorphic,
    lemma_complex,
    parse_complex,
    strip_projective_summands,
    syzygy,
    zero_module,
)

from treegen import planar_trees, random_tree, star


def star_alg(e, m, order=None):
    text = star(e, m)
    if order:
        text = text.replace("ORDER x: " + " ".join(f"S{j}" for j in range(e)), "ORDER x: " + " ".join(order))
    return build_algebra(parse(text), m)


def omega(alg, mod, n):
    for _ in range(n):
        mod = syzygy(alg, mod)
    return mod


# construction

def test_line_algebra(line_alg):
    assert line_alg.dim() == 6
    p = line_alg.projective("S0")
    assert p.dim() == 3
    assert p.radical_layers() == [Counter(S0=1), Counter(S1=1), Counter(S0=1)]
    assert line_alg.simple("S1").dim() == 1


def test_star_algebra():
    alg = star_alg(3, 2)
    assert alg.dim() == 21
    for s in alg.edges:
        assert alg.projective(s).dim() == 7


def test_degenerate_algebra_rejected():
    with pytest.raises(BrauerError) as exc:
        build_algebra(parse(star(1, 1)), 1)
    assert exc.value.token == "degenerate"


def test_multiplicity_errors(line, ds):
    with pytest.raises(BrauerError) as exc:
        build_algebra(line, 2)
    assert exc.value.token == "multiplicity-mismatch"
    with pytest.raises(BrauerError) as exc:
        build_algebra(ds["e7_d14"].tree)
    assert exc.value.token == "symbolic-multiplicity"
    with pytest.raises(BrauerError):
        build_algebra(ds["syn_star"].tree, 0)


def test_unknown_edge(line_alg):
    with pytest.raises(BrauerError) as exc:
        line_alg.projective("S9")
    assert exc.value.token == "unknown-edge"


# matrices

def test_decomposition_line(line):
    rows, cols, mat = decomposition_matrix(line)
    assert rows == ["a", "b", "c"] and cols == ["S0", "S1"]
    assert mat == [[1, 0], [1, 1], [0, 1]]


def test_decomposition_star_expanded():
    rows, cols, mat = decomposition_matrix(parse(star(2, 3)), expanded=True)
    assert len(rows) == 5
    assert mat[:3] == [[1, 1]] * 3
    assert mat[3:] == [[1, 0], [0, 1]]


def test_decomposition_expanded_needs_m(ds):
    with pytest.raises(BrauerError) as exc:
        decomposition_matrix(ds["e7_d14"].tree, expanded=True)
    assert exc.value.token == "symbolic-multiplicity"


def test_decomposition_steinberg_row(ds):
    rows, cols, mat = decomposition_matrix(ds["e7_d14"].tree)
    row = dict(zip(cols, mat[rows.index("St")]))
    assert sum(row.values()) == 4
    assert {s for s, x in row.items() if x} == {"St_l", "S6", "E7[i]", "E7[-i]"}


def test_cartan_examples(line_alg):
    assert cartan(line_alg) == (["S0", "S1"], [[2, 1], [1, 2]])
    assert cartan(star_alg(2, 3))[1] == [[4, 3], [3, 4]]


@given(planar_trees())
@settings(max_examples=25)
def test_cartan_determinant(t):
    alg = build_algebra(t)
    _, c = cartan(alg)
    assert sympy.Matrix(c).det() == t.e * alg.m + 1
    assert sum(map(sum, c)) == alg.dim()
    assert sum(alg.projective(s).dim() for s in alg.edges) == alg.dim()


# Ext^1 and maps

def test_ext1_examples(line_alg):
    alg = star_alg(3, 1)
    assert ext1(alg, "S0", "S1") == 1
    assert ext1(alg, "S0", "S2") == 0
    assert ext1(line_alg, "S0", "S0") == 0
    assert ext1(line_alg, "S0", "S1") == 1
    single = build_algebra(parse(star(1, 3)), 3)
    assert ext1(single, "S0", "S0") == 1


@given(planar_trees(max_vertices=6))
@settings(max_examples=25)
def test_ext1_is_head_of_syzygy(t):
    alg = build_algebra(t)
    for s in alg.edges:
        head = syzygy(alg, alg.simple(s)).head()
        assert {u: ext1(alg, s, u) for u in alg.edges} == {u: head.get(u, 0) for u in alg.edges}


def test_canonical_map_line(line_alg):
    f = canonical_map(line_alg, "S1", "S0")
    assert f.image_factors() == Counter(S0=1, S1=1)
    basis = hom_space(line_alg.projective("S1"), line_alg.projective("S0"))
    assert len(basis) == 1
    assert basis[0].image_factors() == f.image_factors()


def test_canonical_map_star():
    alg = star_alg(3, 1)
    f = canonical_map(alg, "S0", "S1")
    assert f.image_factors() == Counter(S0=1, S1=1)
    with pytest.raises(BrauerError) as exc:
        canonical_map(alg, "S0", "S0")
    assert exc.value.token == "no-canonical-map"


@given(planar_trees(max_vertices=5))
@settings(max_examples=20)
def test_hom_dim_is_cartan_entry(t):
    alg = build_algebra(t)
    cols, c = cartan(alg)
    for i, s in enumerate(cols):
        for j, u in enumerate(cols):
            assert hom_dim(alg, s, u) == c[i][j]


# syzygies

def test_syzygy_line(line_alg):
    s0 = line_alg.simple("S0")
    om = syzygy(line_alg, s0)
    assert om.radical_layers() == [Counter(S1=1), Counter(S0=1)]
    assert is_isomorphic(omega(line_alg, s0, 4), s0)
    assert not is_isomorphic(omega(line_alg, s0, 2), s0)


def test_syzygy_of_projective(line_alg):
    assert syzygy(line_alg, line_alg.projective("S1")).is_zero()


def test_strip_projective_summands(line_alg):
    from brauer.algebra import direct_sum

    m = direct_sum(line_alg, [line_alg.projective("S0"), line_alg.simple("S1")])
    rest, heads = strip_projective_summands(m)
    assert heads == ["S0"]
    assert is_isomorphic(rest, line_alg.simple("S1"))


@given(planar_trees(max_vertices=5, mults=(1, 2)))
@settings(max_examples=20)
def test_omega_period(t):
    alg = build_algebra(t)
    for s in alg.edges:
        assert is_isomorphic(omega(alg, alg.simple(s), 2 * t.e), alg.simple(s))


# walks

def test_walk_e7_d9(ds):
    alg = build_algebra(ds["e7_d9"].tree, 2)
    assert walk(alg, "1", 7).character == Counter({"E6[theta]_1": 1})
    assert walk(alg, "phi_{7,1}", 7).character == Counter({"E6[theta]_eps": 1})


def test_walk_e8_d24(ds):
    alg = build_algebra(ds["e8_d24"].tree, 2)
    r = walk(alg, "1", 12)
    assert r.module.describe() == "simple E8[i]"
    r = walk(alg, "1", 18)
    assert r.character == Counter({"E6[theta]_{phi''_{1,3}}": 1})
    assert r.module.factors() == Counter({"th.S2": 1, "th.S3": 1})


def test_walk_e8_d15(ds):
    alg = build_algebra(ds["e8_d15"].tree, 2)
    assert walk(alg, "1", 30).character == Counter({"phi_{8,1}": 1})


def test_walk_from_exceptional_unsupported(ds):
    alg = build_algebra(ds["syn_star"].tree)
    with pytest.raises(BrauerError) as exc:
        walk(alg, "x", 1)
    assert exc.value.token == "unsupported"


def test_walk_character_follows_projectives(ds):
    alg = build_algebra(ds["e7_d9"].tree, 2)
    r = walk(alg, "1", 5)
    for k, heads in enumerate(r.covers):
        proj = Counter()
        for s in heads:
            proj.update(alg.projective_character(s))
        total = Counter(r.characters[k])
        total.update(r.characters[k + 1])
        assert +total == +proj


# complexes

def test_zero_complex(line_alg):
    cx = build_complex(line_alg, {})
    assert homology(line_alg, cx) == {}
    assert zero_module(line_alg).is_zero()


def test_canonical_complex_e7(ds):
    rec = ds["e7_d14"]
    alg = build_algebra(rec.tree, 2)
    cid, tid, m, terms, diffs = parse_complex((rec.path / "e7.cx").read_text())
    h = homology(alg, build_complex(alg, terms, diffs))
    nonzero = {j: g.factors for j, g in h.items() if g.dim}
    assert nonzero == {7: Counter({"E7[i]": 1}), 14: Counter({"S0": 1})}


def test_wrong_embedding_complex(ds):
    rec = ds["bad_subtree20D4"]
    alg = build_algebra(rec.tree, 2)
    _, _, _, terms, diffs = parse_complex((rec.path / "d.cx").read_text())
    h = homology(alg, build_complex(alg, terms, diffs))
    assert sorted(j for j, g in h.items() if g.dim) == [8, 9, 12]


def test_complex_errors(line_alg):
    with pytest.raises(BrauerError) as exc:
        parse_complex("DEG 0: S0\n")
    assert exc.value.token == "parse-error"
    with pytest.raises(BrauerError) as exc:
        build_complex(line_alg, {0: ["S0"], 1: ["S1"]}, {0: [["1", "1"]]})
    assert exc.value.token == "bad-complex"
    with pytest.raises(BrauerError) as exc:
        build_complex(line_alg, {0: ["S0"], 1: ["S0"], 2: ["S0"]}, {0: [["id"]], 1: [["id"]]})
    assert exc.value.token == "not-a-complex"


def _nonzero(h):
    return {j: g.factors for j, g in h.items() if g.dim}


def test_lemma_complex_e7(ds):
    alg = build_algebra(ds["e7_d14"].tree, 2)
    lc = lemma_complex(alg, [f"S{j}" for j in range(7)], "E7[i]", base_degree=7)
    assert lc.torsion_free()
    assert lc.new_edge == "E7[i]"
    assert _nonzero(homology(alg, lc.complex)) == {7: Counter({"E7[i]": 1}), 14: Counter({"S0": 1})}


def test_lemma_complex_e8_d18_orientation(ds):
    alg = build_algebra(ds["e8_d18"].tree, 2)
    path = [f"S{j}" for j in range(7)]
    lc = lemma_complex(alg, path, "E8[-theta]")
    assert lc.path_vertices[-1] == "phi_{35,74}"
    assert sorted(lc.torsion[-1]) == ["E8[-theta^2]", "S7"]
    assert _nonzero(homology(alg, lc.complex)) == {j: +c for j, c in lc.predicted.items() if +c}
    mirror = lemma_complex(alg, path, "E8[-theta^2]")
    assert mirror.torsion_free()
    assert len(mirror.complex.terms) == 8


def test_lemma_complex_synthetic_torsion():
    alg = star_alg(3, 1, order=["S0", "S2", "S1"])
    lc = lemma_complex(alg, ["S0"], "u1", v_t="x")
    assert lc.torsion == [["S2"]]
    h = _nonzero(homology(alg, lc.complex))
    assert h == {j: +c for j, c in lc.predicted.items() if +c}
    assert all(h[j]["S2"] == 1 for j in h)


def test_lemma_complex_missing_edge(ds):
    alg = build_algebra(ds["e7_d14"].tree, 2)
    with pytest.raises(BrauerError) as exc:
        lemma_complex(alg, ["S0", "S1"], "E7[i]")
    assert exc.value.token == "certificate-requires-edge"


@given(planar_trees(max_vertices=6))
@settings(max_examples=25)
def test_lemma_complex_homology_matches_prediction(t):
    alg = build_algebra(t)
    rng = random.Random(t.e)
    a, b = rng.sample(sorted(t.vertices), 2)
    from brauer.tree import path_between

    verts = path_between(t, a, b)
    if len(verts) < 3:
        return
    edges = [t.edge_between(u, w) for u, w in zip(verts, verts[1:])]
    lc = lemma_complex(alg, edges[:-1], verts[-1], v_t=verts[-2])
    if alg.mult[verts[0]] > 1 or alg.mult[verts[-1]] > 1:
        return
    assert _nonzero(homology(alg, lc.complex)) == {j: +c for j, c in lc.predicted.items() if +c}


def test_random_tree_generator_is_seeded():
    t1 = random_tree(random.Random(7), 6, 2)
    t2 = random_tree(random.Random(7), 6, 2)
    assert t1 == t2
