"""Open ear decompositions via DFS chain decomposition."""
from __future__ import annotations

from dataclasses import dataclass

from .cycles import canonical_cycle
from .graph import Graph, is_connected


class NotBiconnected(ValueError):
    """Graph has no open ear decomposition; carries a witness."""

    def __init__(self, message: str, cut_vertex: int | None = None, disconnected: bool = False):
        super().__init__(message)
        self.cut_vertex = cut_vertex
        self.disconnected = disconnected


@dataclass(frozen=True)
class EarDecomposition:
    """First ear is a cycle (no repeated closing vertex); the rest are open
    paths listed from their lower-id endpoint."""
    ears: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.ears)

    def ear_edges(self, i: int) -> list[tuple[int, int]]:
        ear = self.ears[i]
        pts = list(ear) + [ear[0]] if i == 0 else list(ear)
        return [tuple(sorted(e)) for e in zip(pts, pts[1:])]


@dataclass(frozen=True)
class EarCheck:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def _dfs(g: Graph, root: int = 0):
    order, parent = [], [-1] * g.n
    seen = [False] * g.n
    stack = [(root, iter(g.adj[root]))]
    seen[root] = True
    order.append(root)
    while stack:
        v, it = stack[-1]
        for w in it:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                order.append(w)
                stack.append((w, iter(g.adj[w])))
                break
        else:
            stack.pop()
    return order, parent


def open_ear_decomposition(g: Graph) -> EarDecomposition:
    """Chain decomposition: walk back edges in DFS preorder of their upper end."""
    if g.n < 3:
        raise NotBiconnected("fewer than 3 vertices")
    if not is_connected(g):
        raise NotBiconnected("graph is disconnected", disconnected=True)
    order, parent = _dfs(g)
    pre = {v: i for i, v in enumerate(order)}
    visited = [False] * g.n
    ears: list[tuple[int, ...]] = []
    covered = 0
    for v in order:
        # back edges v -> w with w a proper descendant (not the tree child edge)
        for w in sorted(g.adj[v], key=pre.__getitem__):
            if pre[w] <= pre[v] or parent[w] == v:
                continue
            visited[v] = True
            chain = [v, w]
            x = w
            while not visited[x]:
                visited[x] = True
                x = parent[x]
                chain.append(x)
            covered += len(chain) - 1
            if ears and chain[0] == chain[-1]:
                raise NotBiconnected(f"cut vertex {v}", cut_vertex=v)
            ears.append(tuple(chain))
    if covered != g.m:
        # an edge outside every chain is a bridge; an endpoint of degree > 1 cuts
        bridge = next((u, p) for u, p in ((u, parent[u]) for u in order[1:])
                      if not _in_chain(u, p, ears))
        cut = bridge[0] if g.degree(bridge[0]) > 1 else bridge[1]
        raise NotBiconnected(f"bridge {bridge}, cut vertex {cut}", cut_vertex=cut)
    out = [canonical_cycle(ears[0][:-1])]
    for ear in ears[1:]:
        out.append(ear if ear[0] < ear[-1] else tuple(reversed(ear)))
    return EarDecomposition(tuple(out))


def _in_chain(u: int, p: int, chains) -> bool:
    e = {u, p}
    return any({a, b} == e for ch in chains for a, b in zip(ch, ch[1:]))


def verify_ears(g: Graph, d: EarDecomposition) -> EarCheck:
    if not d.ears:
        return EarCheck(False, "no ears")
    first = d.ears[0]
    if len(first) < 3 or len(set(first)) != len(first):
        return EarCheck(False, "first ear is not a cycle of length >= 3")
    seen_vertices = set(first)
    used: set[tuple[int, int]] = set()
    for i, ear in enumerate(d.ears):
        if i > 0:
            if len(ear) < 2 or len(set(ear)) != len(ear):
                return EarCheck(False, f"ear {i + 1} is not a simple path")
            a, b = ear[0], ear[-1]
            if a not in seen_vertices or b not in seen_vertices:
                return EarCheck(False, f"ear {i + 1} is detached from earlier ears")
            if seen_vertices & set(ear[1:-1]):
                return EarCheck(False, f"ear {i + 1} meets earlier ears in an inner vertex")
            seen_vertices.update(ear)
        for e in d.ear_edges(i):
            if not g.has_edge(*e):
                return EarCheck(False, f"ear {i + 1} uses non-edge {e}")
            if e in used:
                return EarCheck(False, f"edge {e} appears in two ears")
            used.add(e)
    if used != g.edge_set:
        return EarCheck(False, f"not a partition: {len(g.edge_set - used)} edges uncovered")
    if seen_vertices != set(range(g.n)):
        return EarCheck(False, "some vertex lies on no ear")
    if len(d.ears) != g.m - g.n + 1:
        return EarCheck(False, f"{len(d.ears)} ears, expected m - n + 1 = {g.m - g.n + 1}")
    return EarCheck(True)


def ear_prefix_graph(g: Graph, d: EarDecomposition, i: int) -> Graph:
    """Union of ears 1..i, relabeled to consecutive ids."""
    edges = [e for j in range(i) for e in d.ear_edges(j)]
    verts = sorted({x for e in edges for x in e})
    return Graph.from_edges(edges, g.n).induced(verts)[0]
