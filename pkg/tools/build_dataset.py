"""Regenerate src/brauer/data from the coordinate transcriptions below.

Every tree is given as drawn: node positions, vertex labels and edges. The
counterclockwise order at each vertex is read off the positions with atan2, so
no cyclic order is typed by hand.

    python3 tools/build_dataset.py
"""
from __future__ import annotations

import math
import shutil
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from brauer.tree import BrauerTree, Edge, Vertex, parse, relabel, serialize  # noqa: E402

OUT = ROOT / "src" / "brauer" / "data"

# labels

PAIRS = [
    ("E7[i]", "E7[-i]"),
    ("E8[i]", "E8[-i]"),
    ("E8[theta]", "E8[theta^2]"),
    ("E8[-theta]", "E8[-theta^2]"),
    ("E8[zeta]", "E8[zeta^4]"),
    ("E8[zeta^2]", "E8[zeta^3]"),
    ("2F4[i]", "2F4[-i]"),
    ("2F4[-theta]", "2F4[-theta^2]"),
]
CONJ = {}
for a, b in PAIRS:
    CONJ[a], CONJ[b] = b, a


def vertex(label: str) -> Vertex:
    """Attributes follow from the label alone."""
    if label == "EXC":
        return Vertex(label, kind="exc", real=True, series="EXC")
    if label.startswith("phi_") or label in ("1", "St"):
        return Vertex(label, series="PS")
    if label.startswith("D4_"):
        return Vertex(label, series="D4")
    if label.startswith("E6[theta^2]_"):
        return Vertex(label, real=False, conj="E6[theta]_" + label[len("E6[theta^2]_"):],
                      series="E6th2", frob="theta^2")
    if label.startswith("E6[theta]_"):
        return Vertex(label, real=False, conj="E6[theta^2]_" + label[len("E6[theta]_"):],
                      series="E6th", frob="theta")
    if label.startswith("2B2[eta^3]_"):
        return Vertex(label, real=False, conj="2B2[eta^5]_" + label[len("2B2[eta^3]_"):],
                      series="2B2e3", frob="eta^3")
    if label.startswith("2B2[eta^5]_"):
        return Vertex(label, real=False, conj="2B2[eta^3]_" + label[len("2B2[eta^5]_"):],
                      series="2B2e5", frob="eta^5")
    frob = label[label.index("[") + 1: label.index("]")]
    if label in CONJ:
        return Vertex(label, real=False, conj=CONJ[label], series="CUSP", frob=frob)
    return Vertex(label, series="CUSP", frob=frob)


def build(tid, nodes, edges, labels=None):
    """nodes: key -> (x, y, label); edges: (key1, key2, edge label, cuspidal)."""
    labels = labels or {}
    vlab = {k: labels.get(k, lab) for k, (_, _, lab) in nodes.items()}
    vertices = {vlab[k]: vertex(vlab[k]) for k in nodes}
    emap = {}
    for a, b, name, cusp in edges:
        emap[name] = Edge(name, (vlab[a], vlab[b]), cusp)
    order = {}
    for k, (x, y, _) in nodes.items():
        inc = []
        for a, b, name, _ in edges:
            if k in (a, b):
                o = b if k == a else a
                ox, oy, _ = nodes[o]
                inc.append((math.atan2(oy - y, ox - x) % (2 * math.pi), name))
        order[vlab[k]] = tuple(name for _, name in sorted(inc))
    return BrauerTree(tid, vertices, emap, order, None)


def line(keys, names, cusp=()):
    return [(a, b, n, n in cusp) for a, b, n in zip(keys, keys[1:], names)]


# E7, d = 9

E7D9_NODES = {
    "A": (-1, 2, "phi_{7,1}"), "B": (0.5, 2, "phi_{56,3}"), "C": (2, 2, "phi_{315,7}"),
    "D": (3.5, 2, "phi_{512,11}"), "E": (5, 2, "phi_{280,17}"), "F": (6.5, 2, "phi_{35,31}"),
    "G": (8, 2, "St"), "H": (9.5, 2, "EXC"), "K": (11, 2, "phi_{7,46}"),
    "L": (12.5, 2, "phi_{56,30}"), "I": (14, 2, "phi_{315,16}"), "J": (15.5, 2, "phi_{512,12}"),
    "M": (17, 2, "phi_{280,8}"), "N": (18.5, 2, "phi_{35,4}"), "O": (20, 2, "1"),
    "Gb": (8, 0.5, "E6[theta]_eps"), "Gt": (8, 3.5, "E6[theta^2]_eps"),
    "Kb": (11, 0.5, "E6[theta^2]_1"), "Kt": (11, 3.5, "E6[theta]_1"),
}
E7D9_EDGES = (
    line("ABCDEFG", ["R0", "R1", "R2", "R3", "R4", "R5"])
    + [("G", "H", "St_l", False)]
    + line("ONMJILKH", ["S0", "S1", "S2", "S3", "S4", "S5", "S6"])
    + [("G", "Gb", "E6[theta]_eps", False), ("G", "Gt", "E6[theta^2]_eps", False),
       ("K", "Kb", "E6[theta^2]_1", False), ("K", "Kt", "E6[theta]_1", False)]
)

# the two relabelling tables: E7 label -> (phi3, phi21, phi13) labels of E8
E8D9_TABLE = [
    ("phi_{7,1}", "phi_{160,7}", "phi_{35,2}", "phi_{112,3}"),
    ("phi_{56,3}", "phi_{1008,9}", "phi_{700,6}", "phi_{560,5}"),
    ("phi_{315,7}", "phi_{2800,13}", "phi_{2240,10}", "phi_{4096,11}"),
    ("phi_{512,11}", "phi_{5600,21}", "phi_{3150,18}", "phi_{5600,15}"),
    ("phi_{280,17}", "phi_{4096,27}", "phi_{2240,28}", "phi_{2800,25}"),
    ("phi_{35,31}", "phi_{560,47}", "phi_{700,42}", "phi_{1008,39}"),
    ("St", "phi_{112,63}", "phi_{35,74}", "phi_{160,55}"),
    ("E6[theta^2]_eps", "E6[theta^2]_{phi''_{1,3}}", "E6[theta^2]_{phi_{2,2}}", "E6[theta^2]_{phi'_{1,3}}"),
    ("E6[theta]_eps", "E6[theta]_{phi''_{1,3}}", "E6[theta]_{phi_{2,2}}", "E6[theta]_{phi'_{1,3}}"),
    ("phi_{7,46}", "phi_{28,68}", "phi_{8,91}", "phi_{1,120}"),
    ("phi_{56,30}", "phi_{1575,34}", "phi_{400,43}", "phi_{50,56}"),
    ("phi_{315,16}", "phi_{4096,26}", "phi_{1400,29}", "phi_{700,28}"),
    ("phi_{512,12}", "phi_{3200,22}", "phi_{2016,19}", "phi_{3200,16}"),
    ("phi_{280,8}", "phi_{700,16}", "phi_{1400,11}", "phi_{4096,12}"),
    ("phi_{35,4}", "phi_{50,8}", "phi_{400,7}", "phi_{1575,10}"),
    ("1", "1", "phi_{8,1}", "phi_{28,8}"),
    ("E6[theta^2]_1", "E6[theta^2]_{phi_{1,0}}", "E6[theta^2]_{phi_{2,1}}", "E6[theta^2]_{phi_{1,6}}"),
    ("E6[theta]_1", "E6[theta]_{phi_{1,0}}", "E6[theta]_{phi_{2,1}}", "E6[theta]_{phi_{1,6}}"),
]
E8D9_COLUMNS = ("phi3", "phi21", "phi13")


def e8_d9_map(column: str) -> dict[str, str]:
    j = E8D9_COLUMNS.index(column) + 1
    return {row[0]: row[j] for row in E8D9_TABLE}


# E7, d = 10

E7D10 = build(
    "e7_d10",
    {
        "A": (0, 2, "EXC"), "B": (1.5, 2, "phi_{7,46}"), "C": (3, 2, "phi_{27,37}"),
        "D": (4.5, 2, "phi_{168,21}"), "E": (6, 2, "phi_{378,14}"), "F": (7.5, 2, "phi_{378,9}"),
        "G": (9, 2, "phi_{168,6}"), "H": (10.5, 2, "phi_{27,2}"), "K": (12, 2, "phi_{7,1}"),
        "Cb": (3, 0.5, "E7[-i]"), "Ct": (3, 3.5, "E7[i]"),
    },
    line("KHGFEDCBA", ["S0", "S1", "S2", "S3", "S4", "S5", "S6", "S7"])
    + [("C", "Cb", "E7[-i]", True), ("C", "Ct", "E7[i]", True)],
)

# E7, d = 14

E7D14 = build(
    "e7_d14",
    {
        "A": (0, 2, "D4_{eps_1}"), "B": (1.5, 2, "D4_{r.eps_1}"), "C": (3, 2, "D4_{r.eps_2}"),
        "D": (4.5, 2, "D4_{eps_2}"), "E": (6, 2, "EXC"), "F": (7.5, 2, "St"),
        "G": (9, 2, "phi_{27,37}"), "H": (10.5, 2, "phi_{105,26}"), "K": (12, 2, "phi_{189,17}"),
        "L": (13.5, 2, "phi_{189,10}"), "I": (15, 2, "phi_{105,5}"), "J": (16.5, 2, "phi_{27,2}"),
        "M": (18, 2, "1"), "Fb": (7.5, 0.5, "E7[-i]"), "Ft": (7.5, 3.5, "E7[i]"),
    },
    line("ABCDE", ["D4.S0", "D4.S1", "D4.S2", "D4.S3"], cusp={"D4.S3"})
    + [("E", "F", "St_l", True)]
    + line("MJILKHGF", ["S0", "S1", "S2", "S3", "S4", "S5", "S6"])
    + [("F", "Fb", "E7[-i]", True), ("F", "Ft", "E7[i]", True)],
)

# E8, d = 12

E8D12 = build(
    "e8_d12",
    {
        "A": (0, 2, "E8[-1]"), "B": (1.5, 2, "EXC"), "C": (3, 2, "phi_{28,68}"),
        "D": (4.5, 2, "phi_{160,55}"), "E": (6, 2, "phi_{300,44}"), "F": (7.5, 2, "phi_{840,26}"),
        "G": (9, 2, "phi_{1344,19}"), "H": (10.5, 2, "phi_{840,14}"), "K": (12, 2, "phi_{300,8}"),
        "L": (13.5, 2, "phi_{160,7}"), "I": (15, 2, "phi_{28,8}"),
        "Eb": (6, 0.5, "E8[-theta]"), "Et": (6, 3.5, "E8[-theta^2]"),
    },
    [("A", "B", "E8[-1]", True)]
    + line("ILKHGFEDCB", ["S0", "S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8"], cusp={"S8"})
    + [("E", "Eb", "E8[-theta]", True), ("E", "Et", "E8[-theta^2]", True)],
)

# E8, d = 15

E8D15_NODES = {
    "A": (8.5, 3, "EXC"), "B": (10, 3, "St"), "C": (11.5, 3, "phi_{84,64}"),
    "D": (13, 3, "phi_{1344,38}"), "E": (14.5, 3, "phi_{4096,26}"), "F": (16, 3, "phi_{5670,18}"),
    "G": (17.5, 3, "phi_{4096,12}"), "H": (19, 3, "phi_{1344,8}"), "K": (20.5, 3, "phi_{84,4}"),
    "Q": (22, 3, "1"),
    "O": (7, 3, "phi_{8,91}"), "N": (5.5, 3, "phi_{112,63}"), "M": (4, 3, "phi_{1400,37}"),
    "L": (2.5, 3, "phi_{4096,27}"), "P": (1, 3, "phi_{5600,19}"), "V": (-0.5, 3, "phi_{4096,11}"),
    "W": (-2, 3, "phi_{1400,7}"), "X": (-3.5, 3, "phi_{112,3}"), "Y": (-5, 3, "phi_{8,1}"),
    "T": (7, 1.5, "E8[theta]"), "U": (7, 4.5, "E8[theta^2]"),
    "N1": (5.5, 4.5, "E8[zeta^4]"), "N2": (5.5, 1.5, "E8[zeta]"),
    "X1": (9.77, 4.47, "E6[theta]_eps"), "X2": (8.64, 5.45, "E8[zeta^2]"),
    "X3": (11.18, 4.96, "E6[theta]_{phi_{2,2}}"), "X4": (12.60, 5.45, "E6[theta]_1"),
    "Y1": (9.77, 1.53, "E6[theta^2]_eps"), "Y2": (8.64, 0.55, "E8[zeta^3]"),
    "Y3": (11.18, 1.04, "E6[theta^2]_{phi_{2,2}}"), "Y4": (12.60, 0.55, "E6[theta^2]_1"),
}
E8D15_EDGES = (
    line("QKHGFEDCB", ["S0", "S1", "S2", "S3", "S4", "S5", "S6", "S7"])
    + [("B", "A", "St_l", True)]
    + line("YXWVPLMNOA", [f"L.S{j}" for j in range(9)], cusp={"L.S8"})
    + [("O", "T", "E8[theta]", True), ("O", "U", "E8[theta^2]", True),
       ("N", "N1", "E8[zeta^4]", True), ("N", "N2", "E8[zeta]", True)]
    + line(["X4", "X3", "X1", "B"], ["th.S0", "th.S1", "th.S2"], cusp={"th.S2"})
    + line(["Y4", "Y3", "Y1", "B"], ["th2.S0", "th2.S1", "th2.S2"], cusp={"th2.S2"})
    + [("X1", "X2", "E8[zeta^2]", True), ("Y1", "Y2", "E8[zeta^3]", True)]
)

# E8, d = 18

E8D18_NODES = {
    "A": (-1, 2, "D4_{phi'_{1,12}}"), "B": (0.5, 2, "D4_{phi'_{4,7}}"), "C": (2, 2, "D4_{phi'_{6,6}}"),
    "D": (3.5, 2, "D4_{phi''_{4,7}}"), "E": (5, 2, "D4_{phi''_{1,12}}"), "F": (6.5, 2, "EXC"),
    "G": (8, 2, "phi_{8,91}"), "H": (9.5, 2, "phi_{35,74}"), "K": (11, 2, "phi_{300,44}"),
    "L": (12.5, 2, "phi_{840,31}"), "I": (14, 2, "phi_{1134,20}"), "J": (15.5, 2, "phi_{840,13}"),
    "M": (17, 2, "phi_{300,8}"), "N": (18.5, 2, "phi_{35,2}"), "O": (20, 2, "phi_{8,1}"),
    "Fb": (6.5, 0.5, "E8[theta^2]"), "Ft": (6.5, 3.5, "E8[theta]"),
    "Hb": (9.5, 0.5, "E8[-theta]"), "Ht": (9.5, 3.5, "E8[-theta^2]"),
}
E8D18_EDGES = (
    line("ABCDEF", ["D4.S0", "D4.S1", "D4.S2", "D4.S3", "D4.S4"], cusp={"D4.S4"})
    + line("ONMJILKHGF", ["S0", "S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8"], cusp={"S8"})
    + [("F", "Fb", "E8[theta^2]", True), ("F", "Ft", "E8[theta]", True),
       ("H", "Hb", "E8[-theta]", True), ("H", "Ht", "E8[-theta^2]", True)]
)

# E8, d = 20

E8D20_NODES = {
    "P": (-2.5, 2, "D4_{1}"), "L": (-1, 2, "D4_{phi_{9,2}}"), "M": (0.5, 2, "D4_{phi_{16,5}}"),
    "N": (2, 2, "D4_{phi_{9,10}}"), "O": (3.5, 2, "D4_{eps}"), "A": (5, 2, "EXC"),
    "B": (6.5, 2, "St"), "C": (8, 2, "phi_{112,63}"), "D": (9.5, 2, "phi_{567,46}"),
    "E": (11, 2, "phi_{1296,33}"), "F": (12.5, 2, "phi_{1680,22}"), "G": (14, 2, "phi_{1296,13}"),
    "H": (15.5, 2, "phi_{567,6}"), "K": (17, 2, "phi_{112,3}"), "Q": (18.5, 2, "1"),
    "I": (7.3, 0.6, "E8[zeta^4]"), "J": (7.3, 3.2, "E8[zeta]"),
    "R": (5.7, 0.6, "E8[-i]"), "S": (5.7, 3.2, "E8[i]"),
    "T": (3.5, 0.5, "E8[zeta^3]"), "U": (3.5, 3.5, "E8[zeta^2]"),
}
E8D20_EDGES = (
    line("PLMNOA", ["D4.S0", "D4.S1", "D4.S2", "D4.S3", "D4.S4"], cusp={"D4.S4"})
    + [("A", "B", "St_l", True)]
    + line("QKHGFEDCB", ["S0", "S1", "S2", "S3", "S4", "S5", "S6", "S7"])
    + [(("B", k, lab, True)) for k, lab in (("I", "E8[zeta^4]"), ("J", "E8[zeta]"),
                                             ("R", "E8[-i]"), ("S", "E8[i]"))]
    + [("O", "T", "E8[zeta^3]", True), ("O", "U", "E8[zeta^2]", True)]
)

# the three wrong embeddings around St: labels at I (300 deg), J (60), R (240), S (120)
E8D20_ST_PANELS = [
    {"I": "E8[zeta^4]", "J": "E8[zeta]", "R": "E8[i]", "S": "E8[-i]"},
    {"I": "E8[-i]", "J": "E8[i]", "R": "E8[zeta^4]", "S": "E8[zeta]"},
    {"I": "E8[i]", "J": "E8[-i]", "R": "E8[zeta^4]", "S": "E8[zeta]"},
]


def e8_d20_variant(tid, spoke_labels=None, swap_d4=False):
    nodes = dict(E8D20_NODES)
    edges = [e for e in E8D20_EDGES]
    if spoke_labels:
        for k, lab in spoke_labels.items():
            x, y, _ = nodes[k]
            nodes[k] = (x, y, lab)
        edges = [(a, b, spoke_labels.get(b, n) if a == "B" and b in spoke_labels else n, c)
                 for a, b, n, c in edges]
    if swap_d4:
        for k in ("T", "U"):
            x, y, lab = nodes[k]
            nodes[k] = (x, 4.0 - y, lab)
    return build(tid, nodes, edges)


# E8, d = 24

E8D24 = build(
    "e8_d24",
    {
        "P": (-2.5, 3.9, "D4_{phi'_{2,4}}"), "L": (-1, 3.9, "D4_{phi'_{8,3}}"),
        "M": (0.5, 3.9, "D4_{phi_{12,4}}"), "N": (2, 3.9, "D4_{phi''_{8,9}}"),
        "O": (3.5, 3.9, "D4_{phi''_{2,16}}"), "A": (5, 3.9, "EXC"), "B": (6.5, 3.9, "St"),
        "C": (8, 3.9, "phi_{35,74}"), "D": (9.5, 3.9, "phi_{160,55}"), "E": (11, 3.9, "phi_{350,38}"),
        "F": (12.5, 3.9, "phi_{448,25}"), "G": (14, 3.9, "phi_{350,14}"), "H": (15.5, 3.9, "phi_{160,7}"),
        "K": (17, 3.9, "phi_{35,2}"), "Q": (18.5, 3.9, "1"),
        "I": (7.3, 2.7, "E8[-theta]"), "J": (7.3, 5.1, "E8[-theta^2]"),
        "R": (5.8, 5.1, "E8[i]"), "S": (5.8, 2.7, "E8[-i]"),
        "T": (3.9, 5, "E6[theta]_{phi''_{1,3}}"), "U": (3.9, 2.8, "E6[theta^2]_{phi''_{1,3}}"),
        "W": (2.8, 6.1, "E6[theta]_{phi_{2,2}}"), "Y": (1.7, 7.2, "E6[theta]_{phi'_{1,3}}"),
        "V": (2.8, 1.7, "E6[theta^2]_{phi_{2,2}}"), "X": (1.7, 0.6, "E6[theta^2]_{phi'_{1,3}}"),
    },
    line("PLMNOA", ["D4.S0", "D4.S1", "D4.S2", "D4.S3", "D4.S4"], cusp={"D4.S4"})
    + [("A", "B", "St_l", True)]
    + line("QKHGFEDCB", ["S0", "S1", "S2", "S3", "S4", "S5", "S6", "S7"])
    + [("B", "I", "E8[-theta]", True), ("B", "J", "E8[-theta^2]", True),
       ("A", "R", "E8[i]", True), ("A", "S", "E8[-i]", True)]
    + line("YWTA", ["th.S1", "th.S2", "th.S3"], cusp={"th.S3"})
    + line("XVUA", ["th2.S1", "th2.S2", "th2.S3"], cusp={"th2.S3"}),
)

# 2F4, the principal block for the degree-4 factor of Phi_24

F4_2 = build(
    "2f4_d24-analog",
    {
        "P": (0, 3.5, "2F4^IV[-1]"), "L": (1.5, 3.5, "EXC"), "M": (3, 3.5, "St"),
        "N": (4.5, 3.5, "phi_{2,3}"), "O": (6, 3.5, "1"),
        "M1": (3, 2, "2B2[eta^3]_eps"), "M2": (3, 0.5, "2F4[-theta^2]"),
        "X1": (1.5, 2, "2F4[-i]"), "X2": (4.5, 2, "2B2[eta^3]_1"),
        "M3": (3, 5, "2B2[eta^5]_eps"), "M4": (3, 6.5, "2F4[-theta]"),
        "Y1": (1.5, 5, "2F4[i]"), "Y2": (4.5, 5, "2B2[eta^5]_1"),
    },
    [("P", "L", "2F4^IV[-1]", True), ("L", "M", "St_l", True)]
    + line("ONM", ["S0", "S1"])
    + [("M", "M1", "S[eta^3]", True), ("M", "M3", "S[eta^5]", True),
       ("M1", "M2", "2F4[-theta^2]", True), ("M1", "X1", "2F4[-i]", True),
       ("M1", "X2", "2B2[eta^3]_1", False),
       ("M3", "M4", "2F4[-theta]", True), ("M3", "Y1", "2F4[i]", True),
       ("M3", "Y2", "2B2[eta^5]_1", False)],
)


def swap_labels(t, a, b, tid):
    return relabel(t, {a: b, b: a}, tid)


# synthetic fixtures

def synthetic(tid, m, verts, edges, order, degrees=None):
    degrees = degrees or {}
    from brauer.qpoly import parse_poly

    vs = {}
    for lab, kind in verts:
        vs[lab] = Vertex(lab, kind=kind, degree=parse_poly(degrees[lab]) if lab in degrees else None)
    es = {n: Edge(n, (a, b), False) for n, a, b in edges}
    return BrauerTree(tid, vs, es, order, m)


def synthetic_trees():
    out = []
    out.append(synthetic(
        "syn_line", 1, [("a", "unip"), ("b", "unip"), ("c", "unip")],
        [("S0", "a", "b"), ("S1", "b", "c")],
        {"a": ("S0",), "b": ("S0", "S1"), "c": ("S1",)}))
    out.append(synthetic(
        "syn_star", 3, [("x", "exc"), ("a", "unip"), ("b", "unip"), ("c", "unip")],
        [("S0", "x", "a"), ("S1", "x", "b"), ("S2", "x", "c")],
        {"x": ("S0", "S1", "S2"), "a": ("S0",), "b": ("S1",), "c": ("S2",)}))
    out.append(synthetic(
        "syn_edge", 3, [("x", "exc"), ("u", "unip")], [("l1", "x", "u")],
        {"x": ("l1",), "u": ("l1",)}))
    fold3 = synthetic(
        "syn_edge_fold3", 1,
        [("x", "nonunip"), ("(u,0)", "unip"), ("(u,1)", "unip"), ("(u,2)", "unip")],
        [("(l1,0)", "x", "(u,0)"), ("(l1,1)", "x", "(u,1)"), ("(l1,2)", "x", "(u,2)")],
        {"x": ("(l1,0)", "(l1,1)", "(l1,2)"),
         "(u,0)": ("(l1,0)",), "(u,1)": ("(l1,1)",), "(u,2)": ("(l1,2)",)})
    out.append(fold3)
    out.append(synthetic(
        "syn_line_x", 4, [("x", "exc"), ("a", "unip"), ("b", "unip")],
        [("l1", "x", "a"), ("l2", "a", "b")],
        {"x": ("l1",), "a": ("l1", "l2"), "b": ("l2",)}))
    out.append(synthetic(
        "syn_line_x_fold2", 2,
        [("x", "exc"), ("(a,0)", "unip"), ("(b,0)", "unip"), ("(a,1)", "unip"), ("(b,1)", "unip")],
        [("(l1,0)", "x", "(a,0)"), ("(l2,0)", "(a,0)", "(b,0)"),
         ("(l1,1)", "x", "(a,1)"), ("(l2,1)", "(a,1)", "(b,1)")],
        {"x": ("(l1,0)", "(l1,1)"), "(a,0)": ("(l1,0)", "(l2,0)"), "(b,0)": ("(l2,0)",),
         "(a,1)": ("(l1,1)", "(l2,1)"), "(b,1)": ("(l2,1)",)}))
    # a two-branch star whose folded companion has the central order reflected
    out.append(synthetic(
        "syn_vee", 2, [("x", "exc"), ("a", "unip"), ("b", "unip")],
        [("l1", "x", "a"), ("l2", "x", "b")],
        {"x": ("l1", "l2"), "a": ("l1",), "b": ("l2",)}))
    out.append(synthetic(
        "syn_vee_fold2_bad", 1,
        [("x", "nonunip"), ("(a,0)", "unip"), ("(b,0)", "unip"), ("(a,1)", "unip"), ("(b,1)", "unip")],
        [("(l1,0)", "x", "(a,0)"), ("(l2,0)", "x", "(b,0)"),
         ("(l1,1)", "x", "(a,1)"), ("(l2,1)", "x", "(b,1)")],
        {"x": ("(l2,0)", "(l1,0)", "(l2,1)", "(l1,1)"), "(a,0)": ("(l1,0)",), "(b,0)": ("(l2,0)",),
         "(a,1)": ("(l1,1)",), "(b,1)": ("(l2,1)",)}))
    out.append(synthetic(
        "syn_degree", 1, [("a", "unip"), ("b", "unip"), ("c", "unip")],
        [("S0", "a", "b"), ("S1", "b", "c")],
        {"a": ("S0",), "b": ("S0", "S1"), "c": ("S1",)},
        {"a": "1", "b": "q+1", "c": "q"}))
    out.append(synthetic(
        "syn_degree_bad", 1, [("a", "unip"), ("b", "unip"), ("c", "unip")],
        [("S0", "a", "b"), ("S1", "b", "c")],
        {"a": ("S0",), "b": ("S0", "S1"), "c": ("S1",)},
        {"a": "q-3", "b": "2*q-3", "c": "q"}))
    out.append(synthetic(
        "syn_parity_bad", 1, [("a", "unip"), ("b", "unip"), ("c", "unip")],
        [("S0", "a", "b"), ("S1", "b", "c")],
        {"a": ("S0",), "b": ("S0", "S1"), "c": ("S1",)},
        {"a": "1", "b": "1", "c": "q^4+q^3+q^2+q+2"}))
    out.append(synthetic(
        "syn_parity", 1, [("x", "unip"), ("a", "unip"), ("b", "unip"), ("c", "unip")],
        [("S0", "x", "a"), ("S1", "x", "b"), ("S2", "x", "c")],
        {"x": ("S0", "S1", "S2"), "a": ("S0",), "b": ("S1",), "c": ("S2",)},
        {"x": "q", "a": "1", "b": "q^4+q^3+q^2+q+2", "c": "1"}))
    return out


# certificates, complexes and metadata

def cert(cid, kind, tid, m=None, lines=()):
    head = f"CERT {cid} kind={kind} tree={tid}" + (f" m={m}" if m is not None else "")
    return "\n".join([head, *lines, "END"]) + "\n"


def coxeter(cid, tid, path, target, degree, between=None, m=2):
    lines = ["PATH " + " ".join(path), f"TARGET {target}", f"DEGREE {degree}", "TORSION none"]
    if between:
        lines.append("BETWEEN " + " ".join(between))
    return cid, cert(cid, "coxeter", tid, m, lines)


def walkc(cid, tid, start, n, expect=None, factors=None, simple=False, exclude=None, m=2):
    lines = [f"START {start}", f"N {n}"]
    if expect:
        lines.append(f"EXPECT {expect}")
    if exclude:
        lines.append(f"EXCLUDE {exclude}")
    if factors:
        lines.append("FACTORS " + " ".join(factors))
    if simple:
        lines.append("SIMPLE")
    return cid, cert(cid, "walk", tid, m, lines)


def complexc(cid, tid, cfile, homology=None, nonzero=None):
    lines = [f"COMPLEX {cfile}"]
    for deg, facs in (homology or {}).items():
        lines.append(f"HOMOLOGY {deg}: " + " ".join(facs))
    if nonzero is not None:
        lines.append("NONZERO " + " ".join(str(j) for j in nonzero))
    return cid, cert(cid, "complex", tid, None, lines)


def simple_cert(cid, kind, tid, lines=(), m=None):
    return cid, cert(cid, kind, tid, m, lines)


def complex_file(cid, tid, m, terms):
    out = [f"COMPLEX {cid} ON {tid} M {m}"]
    for deg, projs in terms:
        out.append(f"DEG {deg}: " + " ".join(projs))
    return "\n".join(out) + "\n"


PRINCIPAL8 = [f"S{j}" for j in range(8)]

COMPLEX_C = [(10, ["E8[i]"]), (11, ["E8[zeta]"]), (12, ["E8[zeta]"])] + [
    (20 - j, [f"S{j}"]) for j in range(7, -1, -1)
]
COMPLEX_D = [(8, ["E8[zeta^3]"])] + [(12 - j, [f"D4.S{j}"]) for j in range(3, -1, -1)]
COMPLEX_E7 = [(7, ["E7[i]"])] + [(14 - j, [f"S{j}"]) for j in range(6, -1, -1)]


def structural(tid, levis=False, rank=None):
    certs = [simple_cert("hecke", "hecke", tid), simple_cert("real-stem", "real-stem", tid)]
    if levis:
        certs.append(simple_cert("steinberg", "steinberg", tid, [f"RADIUS {rank}", "LEVIS 1"]))
    return certs


def e8_d20_certs(tid):
    return structural(tid, True, 8) + [
        coxeter("coxeter-principal", tid, PRINCIPAL8, "E8[zeta]", 8, between=("S7", "St_l")),
        coxeter("coxeter-d4", tid, [f"D4.S{j}" for j in range(4)], "E8[zeta^3]", 8),
        complexc("complex-c", tid, "c.cx", {10: ["E8[i]"], 20: ["S0"]}),
        complexc("complex-d", tid, "d.cx", {8: ["E8[zeta^3]"], 12: ["D4.S0"]}),
    ], {"c.cx": COMPLEX_C, "d.cx": COMPLEX_D}


def e8_d15_certs(tid):
    return structural(tid, True, 8) + [
        walkc("walk-30", tid, "1", 30, expect="phi_{8,1}"),
        walkc("walk-19", tid, "1", 19, exclude="E8[theta]"),
        coxeter("coxeter-principal", tid, PRINCIPAL8, "E6[theta]_eps", 8, between=("S7", "St_l")),
        coxeter("coxeter-theta", tid, ["th.S0", "th.S1"], "E8[zeta^2]", 8),
        coxeter("coxeter-left", tid, [f"L.S{j}" for j in range(7)], "E8[zeta]", 8),
    ]


def e8_d18_certs(tid):
    return structural(tid) + [
        walkc("walk-24", tid, "phi_{8,1}", 24, expect="E8[theta^2]"),
        coxeter("coxeter-principal", tid, [f"S{j}" for j in range(7)], "E8[-theta^2]", 8,
                between=("S6", "S7")),
    ]


META = {}


def record(tid, tree, certs, complexes=None, **meta):
    META[tid] = (tree, certs, complexes or {}, meta)


def assemble():
    e7d9 = build("e7_d9", E7D9_NODES, E7D9_EDGES)
    record("e7_d9", e7d9, structural("e7_d9") + [
        walkc("walk-1", "e7_d9", "1", 7, expect="E6[theta]_1"),
        walkc("walk-phi71", "e7_d9", "phi_{7,1}", 7, expect="E6[theta]_eps"),
        coxeter("coxeter-left", "e7_d9", [f"R{j}" for j in range(6)], "E6[theta]_eps", 7),
        coxeter("coxeter-right", "e7_d9", [f"S{j}" for j in range(6)], "E6[theta]_1", 8),
    ], kind="tree", group="E7", d=9, description="principal Phi_9-block of E7(q)")

    walks = {
        "phi3": [("walk-160", "phi_{160,7}", "E6[theta]_{phi''_{1,3}}"),
                 ("walk-1", "1", "E6[theta]_{phi_{1,0}}")],
        "phi21": [("walk-35", "phi_{35,2}", "E6[theta]_{phi_{2,2}}"),
                  ("walk-8", "phi_{8,1}", "E6[theta]_{phi_{2,1}}")],
        "phi13": [("walk-112", "phi_{112,3}", "E6[theta]_{phi'_{1,3}}")],
    }
    for col in E8D9_COLUMNS:
        tid = f"e8_d9_{col}"
        t = relabel(e7d9, e8_d9_map(col), tid)
        record(tid, t, structural(tid) + [walkc(c, tid, s, 7, expect=x) for c, s, x in walks[col]],
               kind="tree", group="E8", d=9,
               description=f"Phi_9-block of E8(q) attached to the E6-series character {col}",
               relabel_of="e7_d9", relabel_column=col)

    record("e7_d10", E7D10, structural("e7_d10") + [
        coxeter("coxeter-principal", "e7_d10", [f"S{j}" for j in range(6)], "E7[i]", 7),
    ], kind="tree", group="E7", d=10, description="principal Phi_10-block of E7(q)")

    record("e7_d14", E7D14, structural("e7_d14", True, 7) + [
        coxeter("coxeter-principal", "e7_d14", [f"S{j}" for j in range(7)], "E7[i]", 7,
                between=("S6", "St_l")),
        complexc("complex-e7", "e7_d14", "e7.cx", {7: ["E7[i]"], 14: ["S0"]}),
    ], {"e7.cx": COMPLEX_E7}, kind="tree", group="E7", d=14, levis=1, rank=7,
        description="principal Phi_14-block of E7(q)")

    record("e8_d12", E8D12, structural("e8_d12") + [
        coxeter("coxeter-principal", "e8_d12", [f"S{j}" for j in range(6)], "E8[-theta^2]", 8),
    ], kind="tree", group="E8", d=12, description="principal Phi_12-block of E8(q)")

    e8d15 = build("e8_d15", E8D15_NODES, E8D15_EDGES)
    record("e8_d15", e8d15, e8_d15_certs("e8_d15"), kind="tree", group="E8", d=15, levis=1,
           rank=8, description="principal Phi_15-block of E8(q)")
    bad15 = swap_labels(e8d15, "E8[theta]", "E8[theta^2]", "bad_e8_d15_swapped")
    record("bad_e8_d15_swapped", bad15, e8_d15_certs("bad_e8_d15_swapped") + [
        walkc("walk-19-demo", "bad_e8_d15_swapped", "1", 19, expect="E8[theta]"),
    ], kind="negative", refutes="e8_d15", group="E8", d=15, levis=1, rank=8,
        description="E8[theta] and E8[theta^2] exchanged at phi_{8,91}")

    e8d18 = build("e8_d18", E8D18_NODES, E8D18_EDGES)
    record("e8_d18", e8d18, e8_d18_certs("e8_d18"), kind="tree", group="E8", d=18,
           description="principal Phi_18-block of E8(q)")
    bad18 = swap_labels(e8d18, "E8[theta]", "E8[theta^2]", "bad_e8_d18_swapped")
    record("bad_e8_d18_swapped", bad18, e8_d18_certs("bad_e8_d18_swapped"), kind="negative",
           refutes="e8_d18", group="E8", d=18,
           description="E8[theta] and E8[theta^2] exchanged at the non-unipotent vertex")

    certs, cx = e8_d20_certs("e8_d20")
    record("e8_d20", e8_d20_variant("e8_d20"), certs, cx, kind="tree", group="E8", d=20, levis=1,
           rank=8, description="principal Phi_20-block of E8(q)")
    tid = "bad_subtree20D4"
    certs, cx = e8_d20_certs(tid)
    certs.append(complexc("complex-d-wrong", tid, "d.cx", nonzero=[8, 9, 12]))
    record(tid, e8_d20_variant(tid, swap_d4=True), certs, cx, kind="negative", refutes="e8_d20",
           group="E8", d=20, levis=1, rank=8,
           description="E8[zeta^2] and E8[zeta^3] exchanged around D4_{eps}")
    for n, panel in enumerate(E8D20_ST_PANELS, 1):
        tid = f"bad_subtree20st_{n}"
        certs, cx = e8_d20_certs(tid)
        record(tid, e8_d20_variant(tid, spoke_labels=panel), certs, cx, kind="negative",
               refutes="e8_d20", group="E8", d=20, levis=1, rank=8,
               description=f"wrong cyclic order of the cuspidal edges around St, variant {n}")

    record("e8_d24", E8D24, structural("e8_d24", True, 8) + [
        walkc("walk-12", "e8_d24", "1", 12, expect="E8[i]", factors=["E8[i]"], simple=True),
        walkc("walk-18", "e8_d24", "1", 18, expect="E6[theta]_{phi''_{1,3}}",
              factors=["th.S2", "th.S3"]),
        coxeter("coxeter-principal", "e8_d24", PRINCIPAL8, "E8[-theta^2]", 8, between=("S7", "St_l")),
    ], kind="tree", group="E8", d=24, levis=1, rank=8,
        description="principal Phi_24-block of E8(q)")

    tid = "2f4_d24-analog"
    record(tid, F4_2, structural(tid, True, 2) + [
        coxeter("coxeter-principal", tid, ["S0", "S1"], "2B2[eta^5]_eps", 2, between=("S1", "St_l")),
        coxeter("coxeter-eta5", tid, ["S0", "S1", "S[eta^5]"], "2B2[eta^5]_1", 0),
    ], kind="tree", group="2F4", d=24, levis=1, rank=2,
        description="principal block of 2F4(q^2) for a prime dividing q^4+sqrt2q^3+q^2+sqrt2q+1")

    syn = {t.id: t for t in synthetic_trees()}
    fold = lambda cid, tid, comp, d, **kw: simple_cert(cid, "fold", tid, [f"COMPANION {comp} D {d}"])
    for t in syn.values():
        certs = []
        if t.id == "syn_edge":
            certs.append(fold("fold-3", "syn_edge", "syn_edge_fold3", 3))
        elif t.id == "syn_line_x":
            certs.append(fold("fold-2", "syn_line_x", "syn_line_x_fold2", 2))
        elif t.id == "syn_vee":
            certs.append(fold("fold-2-wrong", "syn_vee", "syn_vee_fold2_bad", 2))
        elif t.id in ("syn_degree", "syn_degree_bad"):
            certs.append(simple_cert("degree", "degree", t.id, ["BOUND 10"]))
        elif t.id in ("syn_parity", "syn_parity_bad"):
            certs.append(simple_cert("parity", "parity", t.id, ["D 5"]))
        negative = t.id in ("syn_vee", "syn_degree_bad", "syn_parity_bad")
        record(t.id, t, certs, kind="negative" if negative else "synthetic",
               description="synthetic fixture")


LEXICON_GREEK = [("theta", "θ"), ("zeta", "ζ"), ("eta", "η"), ("eps", "ε"), ("phi", "φ")]


def pretty(label: str) -> str:
    out = label
    for a, b in LEXICON_GREEK:
        out = out.replace(a, b)
    return out


def write():
    if OUT.exists():
        shutil.rmtree(OUT)
    OUT.mkdir(parents=True)
    (OUT / "__init__.py").write_text("")
    labels = set()
    for tid, (tree, certs, complexes, meta) in META.items():
        d = OUT / tid
        (d / "certs").mkdir(parents=True)
        text = serialize(tree)
        assert serialize(parse(text)) == text
        (d / "tree.bt").write_text(text)
        for cid, body in certs:
            (d / "certs" / f"{cid}.cert").write_text(body)
        for name, terms in complexes.items():
            (d / name).write_text(complex_file(name.rsplit(".", 1)[0], tid, 2, terms))
        lines = [f"id = {tid}"] + [f"{k} = {v}" for k, v in meta.items()]
        (d / "meta").write_text("\n".join(lines) + "\n")
        if not tid.startswith("syn_"):
            labels.update(tree.vertices)
    rows = ["label\treading"] + [f"{lab}\t{pretty(lab)}" for lab in sorted(labels)]
    (OUT / "lexicon.tsv").write_text("\n".join(rows) + "\n")
    table = ["e7\t" + "\t".join(E8D9_COLUMNS)] + ["\t".join(r) for r in E8D9_TABLE]
    (OUT / "e8_d9_relabel.tsv").write_text("\n".join(table) + "\n")


if __name__ == "__main__":
    assemble()
    write()
    print(f"wrote {len(META)} records to {OUT}")
