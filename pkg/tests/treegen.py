"""Random planar trees for property tests, built from Pruefer codes."""
from __future__ import annotations

import heapq
import random

from hypothesis import strategies as st

from brauer import parse


LINE = """\
TREE line
MULTIPLICITY 1
VERTEX a kind=unip real=1
VERTEX b kind=unip real=1
VERTEX c kind=unip real=1
EDGE S0 a b
EDGE S1 b c
ORDER a: S0
ORDER b: S0 S1
ORDER c: S1
END
"""


def star(e: int, m: int, tid: str = "star") -> str:
    kind = "exc" if m > 1 else "unip"
    lines = [f"TREE {tid}", f"MULTIPLICITY {m}", f"VERTEX x kind={kind} real=1"]
    lines += [f"VERTEX u{j} kind=unip real=1" for j in range(e)]
    lines += [f"EDGE S{j} x u{j}" for j in range(e)]
    lines.append("ORDER x: " + " ".join(f"S{j}" for j in range(e)))
    lines += [f"ORDER u{j}: S{j}" for j in range(e)]
    lines.append("END")
    return "\n".join(lines) + "\n"


def pruefer_edges(code: list[int]) -> list[tuple[int, int]]:
    n = len(code) + 2
    degree = [1] * n
    for c in code:
        degree[c] += 1
    heap = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(heap)
    edges = []
    for c in code:
        leaf = heapq.heappop(heap)
        edges.append((leaf, c))
        degree[c] -= 1
        if degree[c] == 1:
            heapq.heappush(heap, c)
    u, w = heapq.heappop(heap), heapq.heappop(heap)
    edges.append((u, w))
    return edges


def tree_text(n: int, edges, orders: dict[int, list[int]], m: int, exc: int | None, tid="rand") -> str:
    lines = [f"TREE {tid}", f"MULTIPLICITY {m}"]
    for v in range(n):
        kind = "exc" if v == exc else "unip"
        lines.append(f"VERTEX v{v} kind={kind} real=1")
    for j, (a, b) in enumerate(edges):
        lines.append(f"EDGE S{j} v{a} v{b}")
    for v in range(n):
        lines.append(f"ORDER v{v}: " + " ".join(f"S{j}" for j in orders[v]))
    lines.append("END")
    return "\n".join(lines) + "\n"


def random_tree(rng: random.Random, n: int, m: int = 1, tid: str = "rand"):
    """A tree on n >= 2 vertices with random planar orders.

    For m > 1 a random vertex is exceptional.
    """
    code = [rng.randrange(n) for _ in range(n - 2)]
    edges = pruefer_edges(code)
    orders = {v: [] for v in range(n)}
    for j, (a, b) in enumerate(edges):
        orders[a].append(j)
        orders[b].append(j)
    for v in orders:
        rng.shuffle(orders[v])
    exc = rng.randrange(n) if m > 1 else None
    return parse(tree_text(n, edges, orders, m, exc, tid))


@st.composite
def planar_trees(draw, max_vertices=7, mults=(1, 2, 3)):
    n = draw(st.integers(2, max_vertices))
    m = draw(st.sampled_from(mults))
    seed = draw(st.integers(0, 2**32 - 1))
    t = random_tree(random.Random(seed), n, m)
    if t.e == 1 and m == 1:
        t = random_tree(random.Random(seed), 3, 1)
    return t
