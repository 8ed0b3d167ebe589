"""Node resolution and connectivity answers on a topology graph.

An apparent node is a plane crossing of two space-curve branches that do not
actually meet.  Resolving it removes the node vertex and reconnects the four
incident branches as two disjoint strands: with left neighbors (L_low, L_up)
and right neighbors (R_low, R_up) ordered by ordinate, the cyclic order
around the node is L_low, L_up, R_up, R_low, and opposite pairing gives the
edges {L_low, R_up} and {L_up, R_low}.  Components of the resolved graph are
in bijection with the connected components of the real space curve.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GenericityViolation
from .topology import TopologyGraph

__all__ = ["Partition", "node_resolution", "connected_components", "answer_queries"]


@dataclass(frozen=True)
class Partition:
    """Grouping of query indices 1..mu by curve component."""

    blocks: tuple  # tuple of tuples of 1-based indices, each sorted
    component_count: int


def node_resolution(G: TopologyGraph) -> TopologyGraph:
    """Replace each apparent-node vertex by the two crossing strands.

    The node vertex keeps its id (so ids stay stable) but loses all edges
    and leaves v_app; its four edges are replaced by the opposite pairs.
    """
    out = TopologyGraph(
        vertices=list(G.vertices),
        edges=set(G.edges),
        v_app=[],
        v_ctrl=list(G.v_ctrl),
        fibers=[list(f) for f in G.fibers],
    )
    for vid in G.v_app:
        node = out.vertices[vid]
        nbrs = out.neighbors(vid)
        if len(nbrs) != 4:
            raise GenericityViolation(
                f"apparent node {vid} has {len(nbrs)} neighbors, expected 4")
        lefts = [u for u in nbrs if out.vertices[u].fiber_index < node.fiber_index]
        rights = [u for u in nbrs if out.vertices[u].fiber_index > node.fiber_index]
        if len(lefts) != 2 or len(rights) != 2:
            raise GenericityViolation(
                f"apparent node {vid} lacks a 2/2 left-right neighbor split")
        l_low, l_up = sorted(lefts, key=lambda u: _ordinate_key(out, u))
        r_low, r_up = sorted(rights, key=lambda u: _ordinate_key(out, u))
        for u in nbrs:
            out.edges.discard((min(vid, u), max(vid, u)))
        out.add_edge(l_low, r_up)
        out.add_edge(l_up, r_low)
        out.fibers[node.fiber_index] = [u for u in out.fibers[node.fiber_index]
                                        if u != vid]
    out.vertices = [v for v in out.vertices if v.id not in set(G.v_app)]
    return out


def _ordinate_key(G: TopologyGraph, vid: int):
    """Sort key for vertices of one fiber: position in the fiber list."""
    v = G.vertices[vid] if vid < len(G.vertices) and G.vertices[vid].id == vid \
        else next(u for u in G.vertices if u.id == vid)
    return G.fibers[v.fiber_index].index(vid)


def connected_components(G: TopologyGraph):
    """Map vertex id to component id (the smallest vertex id it reaches)."""
    parent = {v.id: v.id for v in G.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in G.edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    return {v.id: find(v.id) for v in G.vertices}


def answer_queries(G_resolved: TopologyGraph) -> Partition:
    """Partition the queries (1-based, in abscissa order) by component."""
    comp = connected_components(G_resolved)
    groups = {}
    for i, vid in enumerate(G_resolved.v_ctrl, start=1):
        groups.setdefault(comp[vid], []).append(i)
    blocks = tuple(sorted(tuple(sorted(g)) for g in groups.values()))
    count = len(set(comp.values()))
    return Partition(blocks, count)
