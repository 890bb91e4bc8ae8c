"""Negative colour schemes: a simple graph on colours 1..r plus degrees."""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence


class SchemeError(ValueError):
    """Invalid scheme data; ``where`` locates the problem in the input."""

    def __init__(self, msg: str, where: str | None = None):
        self.where = where
        super().__init__(f"{where}: {msg}" if where else msg)


class SelfLoop(SchemeError):
    pass


class DuplicateEdge(SchemeError):
    pass


class NonPositiveDegree(SchemeError):
    pass


class IndexOutOfRange(SchemeError):
    pass


class MalformedInput(SchemeError):
    pass


Edge = tuple[int, int]


@dataclass(frozen=True)
class NegativeColourScheme:
    r: int
    edges: tuple[Edge, ...]
    degrees: tuple[int, ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    @property
    def very_composite(self) -> bool:
        return all(k >= 2 for k in self.degrees)

    @property
    def total_degree(self) -> int:
        return sum(self.degrees)

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self._edge_set

    @property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def neighbours(self, v: int) -> list[int]:
        return sorted({b for a, b in self.edges if a == v} | {a for a, b in self.edges if b == v})

    def degree(self, v: int) -> int:
        return self.degrees[v - 1]

    def to_json(self) -> dict:
        out = {"colours": self.r, "edges": [list(e) for e in self.edges], "degrees": list(self.degrees)}
        if self.names:
            out["names"] = list(self.names)
        return out

    def with_degrees(self, degrees: Sequence[int]) -> "NegativeColourScheme":
        return validate_scheme(self.r, self.edges, degrees)

    def restrict(self, vertices: Sequence[int]) -> "NegativeColourScheme":
        """Induced subscheme, relabelled 1..len(vertices) in the given order."""
        relabel = {v: i + 1 for i, v in enumerate(vertices)}
        edges = [(relabel[a], relabel[b]) for a, b in self.edges if a in relabel and b in relabel]
        return validate_scheme(len(vertices), edges, [self.degrees[v - 1] for v in vertices])


def validate_scheme(
    r: int,
    edges: Iterable[Sequence[int]],
    degrees: Sequence[int],
    names: Sequence[str] | None = None,
) -> NegativeColourScheme:
    if not isinstance(r, int) or isinstance(r, bool) or r < 0:
        raise MalformedInput(f"colour count must be a nonnegative integer, got {r!r}", "colours")
    degrees = list(degrees)
    if len(degrees) != r:
        raise MalformedInput(f"expected {r} degrees, got {len(degrees)}", "degrees")
    for i, k in enumerate(degrees, 1):
        if not isinstance(k, int) or isinstance(k, bool):
            raise MalformedInput(f"degree {k!r} is not an integer", f"degrees[{i}]")
        if k < 1:
            raise NonPositiveDegree(f"degree of colour {i} is {k}; remove the colour instead", f"degrees[{i}]")
    seen: set[Edge] = set()
    for n, e in enumerate(edges, 1):
        e = list(e)
        if len(e) != 2:
            raise MalformedInput(f"edge {e!r} does not have two endpoints", f"edges[{n}]")
        a, b = e
        for x in (a, b):
            if not isinstance(x, int) or isinstance(x, bool):
                raise MalformedInput(f"vertex {x!r} is not an integer", f"edges[{n}]")
            if not 1 <= x <= r:
                raise IndexOutOfRange(f"vertex {x} outside 1..{r}", f"edges[{n}]")
        if a == b:
            raise SelfLoop(f"self-loop at colour {a}", f"edges[{n}]")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise DuplicateEdge(f"edge {key} listed twice", f"edges[{n}]")
        seen.add(key)
    return NegativeColourScheme(r, tuple(sorted(seen)), tuple(degrees), tuple(names) if names else None)


# ---------------------------------------------------------------------------
# parsing


def scheme_from_json(data: dict | str) -> NegativeColourScheme:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"invalid JSON: {exc.msg}", f"line {exc.lineno}") from exc
    if not isinstance(data, dict):
        raise MalformedInput("top level must be an object")
    for key in ("colours", "edges", "degrees"):
        if key not in data:
            raise MalformedInput(f"missing field {key!r}", key)
    r, edges, degrees = data["colours"], data["edges"], data["degrees"]
    if isinstance(r, list):
        # colour names: map to indices by first appearance
        names = [str(x) for x in r]
        if len(set(names)) != len(names):
            raise MalformedInput("colour names repeat", "colours")
        idx = {name: i + 1 for i, name in enumerate(names)}
        try:
            edges = [[idx[str(a)] for a in e] for e in edges]
        except KeyError as exc:
            raise IndexOutOfRange(f"unknown colour {exc.args[0]!r}", "edges") from None
        if isinstance(degrees, dict):
            degrees = [degrees.get(n) for n in names]
        return validate_scheme(len(names), edges, degrees, names)
    if not isinstance(edges, list):
        raise MalformedInput("edges must be a list of pairs", "edges")
    if not isinstance(degrees, list):
        raise MalformedInput("degrees must be a list", "degrees")
    return validate_scheme(r, edges, degrees)


def scheme_from_text(text: str) -> NegativeColourScheme:
    """Terse form: ``r`` / degrees / one ``a b`` pair per line.

    Blank lines and ``#`` comments are ignored.
    """
    lines = []
    for no, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if s:
            lines.append((no, s))
    if not lines:
        raise MalformedInput("empty scheme", "line 1")

    def ints(no, s):
        try:
            return [int(t) for t in s.split()]
        except ValueError:
            raise MalformedInput(f"expected integers, got {s!r}", f"line {no}") from None

    no, s = lines[0]
    head = ints(no, s)
    if len(head) != 1:
        raise MalformedInput("first line must hold the colour count only", f"line {no}")
    r = head[0]
    if r == 0:
        degrees, rest = [], lines[1:]
    else:
        if len(lines) < 2:
            raise MalformedInput("missing degree line", f"line {no + 1}")
        dno, ds = lines[1]
        degrees = ints(dno, ds)
        if len(degrees) != r:
            raise MalformedInput(f"expected {r} degrees, got {len(degrees)}", f"line {dno}")
        rest = lines[2:]
    edges = []
    for eno, es in rest:
        pair = ints(eno, es)
        if len(pair) != 2:
            raise MalformedInput("edge lines need exactly two vertices", f"line {eno}")
        edges.append((eno, pair))
    try:
        return validate_scheme(r, [p for _, p in edges], degrees)
    except SchemeError as exc:
        # translate edges[n] into a line number
        if exc.where and exc.where.startswith("edges["):
            n = int(exc.where[6:-1])
            raise type(exc)(str(exc).split(": ", 1)[1], f"line {edges[n - 1][0]}") from None
        if exc.where and exc.where.startswith("degrees"):
            raise type(exc)(str(exc).split(": ", 1)[1], f"line {lines[1][0]}") from None
        raise


def load_scheme(path: str | Path) -> NegativeColourScheme:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        return scheme_from_json(text)
    return scheme_from_text(text)


# ---------------------------------------------------------------------------
# graph combinatorics


@dataclass(frozen=True)
class ComponentInfo:
    vertices: tuple[int, ...]
    signs: dict[int, int] | None  # 2-colouring, lowest vertex gets +1
    odd_cycle: tuple[int, ...] | None  # closed walk v0 .. vk with v0 == vk

    @property
    def bipartite(self) -> bool:
        return self.signs is not None


@dataclass(frozen=True)
class GraphAnalysis:
    components: tuple[ComponentInfo, ...]
    s: int
    t: int

    @property
    def bipartite(self) -> bool:
        return all(c.bipartite for c in self.components)

    @property
    def connected(self) -> bool:
        return len(self.components) <= 1


def analyze_graph(scheme: NegativeColourScheme) -> GraphAnalysis:
    adj = {v: scheme.neighbours(v) for v in range(1, scheme.r + 1)}
    seen: set[int] = set()
    comps = []
    for root in range(1, scheme.r + 1):
        if root in seen:
            continue
        parent = {root: None}
        depth = {root: 0}
        order = [root]
        queue = deque([root])
        conflict = None
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    order.append(w)
                    queue.append(w)
                elif conflict is None and depth[w] == depth[u]:
                    conflict = (u, w)
        seen.update(order)
        verts = tuple(sorted(order))
        if conflict is None:
            signs = {v: 1 if depth[v] % 2 == 0 else -1 for v in verts}
            # root is the lowest vertex, so it already carries +1
            comps.append(ComponentInfo(verts, signs, None))
        else:
            comps.append(ComponentInfo(verts, None, _odd_cycle(conflict, parent)))
    t = sum(1 for c in comps if c.bipartite)
    return GraphAnalysis(tuple(comps), len(scheme.edges), t)


def _odd_cycle(edge: tuple[int, int], parent: dict) -> tuple[int, ...]:
    # same-depth edge u-w closes an odd cycle through the lowest common ancestor
    u, w = edge
    pu = [u]
    while parent[pu[-1]] is not None:
        pu.append(parent[pu[-1]])
    pw = [w]
    while parent[pw[-1]] is not None:
        pw.append(parent[pw[-1]])
    anc = set(pu)
    i = next(i for i, x in enumerate(pw) if x in anc)
    lca = pw[i]
    # lca -> ... -> u, then across to w and back up to lca
    return tuple(list(reversed(pu[: pu.index(lca) + 1])) + pw[:i] + [lca])


def negate_graph(scheme: NegativeColourScheme) -> NegativeColourScheme:
    edges = [p for p in combinations(range(1, scheme.r + 1), 2) if p not in scheme._edge_set]
    return NegativeColourScheme(scheme.r, tuple(edges), scheme.degrees, scheme.names)


def disjoint_union(a: NegativeColourScheme, b: NegativeColourScheme) -> NegativeColourScheme:
    shift = a.r
    edges = a.edges + tuple((x + shift, y + shift) for x, y in b.edges)
    return NegativeColourScheme(a.r + b.r, tuple(sorted(edges)), a.degrees + b.degrees)


# common graphs


def edge_scheme(k1: int, k2: int) -> NegativeColourScheme:
    return validate_scheme(2, [(1, 2)], [k1, k2])


def complete_scheme(degrees: Sequence[int]) -> NegativeColourScheme:
    r = len(degrees)
    return validate_scheme(r, combinations(range(1, r + 1), 2), degrees)


def cycle_scheme(degrees: Sequence[int]) -> NegativeColourScheme:
    r = len(degrees)
    return validate_scheme(r, [(i, i % r + 1) for i in range(1, r + 1)], degrees)


def random_scheme(
    rng,
    r_max: int = 7,
    max_edges: int = 12,
    k_range: tuple[int, int] = (1, 6),
    connected: bool = True,
    r_min: int = 1,
) -> NegativeColourScheme:
    """Random scheme drawn from ``rng`` (a ``random.Random``).

    Connected draws start from a random spanning tree; extra edges are then
    added up to a random total of at most ``max_edges``.
    """
    r = rng.randint(r_min, r_max)
    pairs = list(combinations(range(1, r + 1), 2))
    edges = set()
    if connected and r > 1:
        order = list(range(1, r + 1))
        rng.shuffle(order)
        for i in range(1, r):
            a, b = order[i], order[rng.randrange(i)]
            edges.add((min(a, b), max(a, b)))
    cap = min(len(pairs), max(max_edges, len(edges)))
    target = rng.randint(len(edges), cap)
    rest = [p for p in pairs if p not in edges]
    rng.shuffle(rest)
    edges.update(rest[: target - len(edges)])
    degrees = [rng.randint(*k_range) for _ in range(r)]
    return validate_scheme(r, sorted(edges), degrees)
