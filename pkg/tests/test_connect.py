import pathlib
from fractions import Fraction as F

import pytest

from ccq.apparent import apparent_singularities
from ccq.connect import answer_queries, connected_components, node_resolution
from ccq.errors import GenericityViolation
from ccq.parsing import parse_problem
from ccq.realroot import FiberPoint
from ccq.topology import APPARENT_NODE, CONTROL, REGULAR, TopologyGraph

CORPUS = pathlib.Path(__file__).resolve().parent.parent / "corpus"


def load(name):
    return parse_problem((CORPUS / f"{name}.json").read_text())


def pipeline(pf):
    res = apparent_singularities(pf.curve)
    queries = pf.queries.restrict_plane() if pf.queries is not None else None
    from ccq.topology import topo2d
    G = topo2d(pf.curve, queries, res.q_app)
    return G, node_resolution(G)


def _fp(y, mult=1):
    y = F(y)
    return FiberPoint(y - F(1, 4), y + F(1, 4), mult, exact=y)


def single_x_graph():
    """Two strands crossing once: X shape with the node in the middle fiber."""
    G = TopologyGraph()
    a = G.add_vertex(F(-1), _fp(-1), REGULAR, 0)   # left lower
    b = G.add_vertex(F(-1), _fp(1), REGULAR, 0)    # left upper
    n = G.add_vertex(F(0), _fp(0, 2), APPARENT_NODE, 1)
    c = G.add_vertex(F(1), _fp(-1), REGULAR, 2)    # right lower
    d = G.add_vertex(F(1), _fp(1), REGULAR, 2)     # right upper
    G.fibers = [[a, b], [n], [c, d]]
    for u in (a, b, c, d):
        G.add_edge(u, n)
    G.v_app = [n]
    return G, (a, b, n, c, d)


class TestNodeResolution:
    def test_single_x(self):
        G, (a, b, n, c, d) = single_x_graph()
        Gr = node_resolution(G)
        assert len(Gr.vertices) == 4 and len(Gr.edges) == 2
        # opposite pairing: lower-left with upper-right, upper-left with
        # lower-right
        assert Gr.edges == {(min(a, d), max(a, d)), (min(b, c), max(b, c))}
        assert Gr.v_app == []
        assert n not in [v.id for v in Gr.vertices]

    def test_original_untouched(self):
        G, (_, _, n, _, _) = single_x_graph()
        node_resolution(G)
        assert G.v_app == [n] and len(G.edges) == 4

    def test_identity_without_nodes(self):
        G, _ = single_x_graph()
        G.v_app = []
        G.vertices[2].kind = REGULAR
        Gr = node_resolution(G)
        assert Gr.edges == G.edges
        assert len(Gr.vertices) == len(G.vertices)

    def test_malformed_three_neighbors(self):
        G, (a, _, n, _, _) = single_x_graph()
        G.edges.discard((min(a, n), max(a, n)))
        with pytest.raises(GenericityViolation):
            node_resolution(G)

    def test_malformed_split(self):
        # four neighbors but 3 left / 1 right
        G = TopologyGraph()
        ids = [G.add_vertex(F(-1), _fp(k), REGULAR, 0) for k in (-2, 0, 2)]
        n = G.add_vertex(F(0), _fp(0, 2), APPARENT_NODE, 1)
        r = G.add_vertex(F(1), _fp(0), REGULAR, 2)
        G.fibers = [ids, [n], [r]]
        for u in ids + [r]:
            G.add_edge(u, n)
        G.v_app = [n]
        with pytest.raises(GenericityViolation):
            node_resolution(G)

    def test_count_invariants_on_corpus(self):
        for name in ("nodal_cubic_space", "nodal_cubic_space_wide"):
            G, Gr = pipeline(load(name))
            assert len(Gr.edges) == len(G.edges) - 2 * len(G.v_app)
            assert len(Gr.vertices) == len(G.vertices) - len(G.v_app)


class TestComponents:
    def test_single_x_two_components(self):
        G, _ = single_x_graph()
        comp = connected_components(node_resolution(G))
        assert len(set(comp.values())) == 2

    def test_unresolved_x_one_component(self):
        G, _ = single_x_graph()
        assert len(set(connected_components(G).values())) == 1

    def test_corpus_counts(self):
        expected = {
            "circle": 1, "ellipse": 1, "parabola": 1, "twisted_cubic": 1,
            "hyperbola": 2, "concentric_circles": 2, "three_circles": 3,
            "acnode": 2, "disjoint_circles": 2, "cubic_sweep": 2,
            "nodal_cubic_plane": 1, "nodal_cubic_space": 1, "empty": 0,
        }
        for name, want in expected.items():
            _, Gr = pipeline(load(name))
            got = len(set(connected_components(Gr).values()))
            assert got == want, f"{name}: {got} != {want}"


class TestAnswerQueries:
    def test_nodal_space(self):
        _, Gr = pipeline(load("nodal_cubic_space"))
        part = answer_queries(Gr)
        assert part.blocks == ((1, 2),)
        assert part.component_count == 1

    def test_concentric(self):
        _, Gr = pipeline(load("concentric_circles"))
        part = answer_queries(Gr)
        assert part.blocks == ((1,), (2,))
        assert part.component_count == 2

    def test_irrational_queries(self):
        _, Gr = pipeline(load("circle_irrational_queries"))
        part = answer_queries(Gr)
        assert part.blocks == ((1, 2),)
        assert part.component_count == 1

    def test_indices_follow_abscissa_order(self):
        _, Gr = pipeline(load("concentric_circles"))
        xs = []
        for vid in Gr.v_ctrl:
            v = next(u for u in Gr.vertices if u.id == vid)
            x = v.x.value if hasattr(v.x, "value") else F(v.x)
            xs.append(x)
        assert xs == sorted(xs)

    def test_no_queries(self):
        _, Gr = pipeline(load("circle"))
        part = answer_queries(Gr)
        assert part.blocks == () and part.component_count == 1
