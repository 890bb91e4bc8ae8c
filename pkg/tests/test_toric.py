import json
import warnings

import pytest

from conftest import GOLDEN
from dbraid.scheme import analyze_graph, validate_scheme
from dbraid.toric import (
    BUILTIN,
    IncidenceGeometryMismatch,
    MalformedInput,
    NotSimple,
    NotSmooth,
    VertexNotFound,
    assign_degrees,
    builtin_polytope,
    chop_vertex,
    euler_characteristic,
    facet_graph,
    load_polytope,
    polytope_from_json,
)


def chopped(name, chops):
    p = builtin_polytope(name)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for v in chops:
            p = chop_vertex(p, v)
    return p


@pytest.mark.parametrize("name", BUILTIN)
def test_builtins_load_and_roundtrip(name):
    p = builtin_polytope(name)
    assert polytope_from_json(json.dumps(p.to_json())) == p
    assert load_polytope(name) == p


def test_builtin_graphs():
    assert facet_graph(builtin_polytope("interval")) == [(1, 2)]
    assert facet_graph(builtin_polytope("square")) == [(1, 2), (3, 4)]
    assert facet_graph(builtin_polytope("cube")) == [(1, 4), (2, 5), (3, 6)]


@pytest.mark.parametrize("path", sorted(GOLDEN.glob("*.json")), ids=lambda p: p.stem)
def test_golden_chops(path):
    g = json.loads(path.read_text())
    p = chopped(g["source"], g["chops"])
    assert p.n_facets == g["facets"]
    assert [list(e) for e in facet_graph(p)] == g["edges"]
    if "incidence" in g:
        assert [sorted(fs) for fs in p.incidence] == g["incidence"]
    s = validate_scheme(p.n_facets, facet_graph(p), [1] * p.n_facets)
    assert analyze_graph(s).bipartite == g["bipartite"]


def test_chop_properties():
    cube = builtin_polytope("cube")
    with pytest.warns(UserWarning):
        p = chop_vertex(cube, 8)
    assert p.n_vertices == 10 and euler_characteristic(p) == 2
    assert euler_characteristic(cube) == 2
    # new facet meets exactly the facets through the cut vertex
    new = p.facet_vertices(p.n_facets)
    met = {f for v in new for f in p.incidence[v - 1]} - {p.n_facets}
    assert met == set(cube.incidence[7])
    assert len(p.edges()) == len(cube.edges()) + 3
    with pytest.raises(VertexNotFound):
        chop_vertex(cube, 9)


def test_degrees():
    s = assign_degrees(builtin_polytope("interval"), [2, 3])
    assert s.edges == ((1, 2),) and s.degrees == (2, 3)
    with pytest.raises(MalformedInput):
        assign_degrees(builtin_polytope("interval"), [2])
    with pytest.raises(ValueError):
        assign_degrees([(1, 2)], [2, 2])


def test_structural_errors():
    with pytest.raises(NotSimple):
        polytope_from_json({"dim": 2, "facets": 3, "incidence": [[1, 2], [2, 3], [1, 2, 3]]})
    with pytest.raises(MalformedInput):
        polytope_from_json({"dim": 2, "facets": 3})
    with pytest.raises(MalformedInput):
        polytope_from_json("{oops")
    with pytest.raises(MalformedInput):
        polytope_from_json({"dim": 1, "facets": 2, "incidence": [[1], [3]]})
    tri = {
        "dim": 2,
        "facets": 3,
        "incidence": [[1, 2], [1, 3], [2, 3]],
        "geometry": {"coords": [[0, 0], [2, 0], [0, 2]], "normals": [[1, 0], [0, 1], [-1, -1]], "offsets": [0, 0, -2]},
    }
    with pytest.raises(IncidenceGeometryMismatch):
        polytope_from_json(tri)
    tri["incidence"] = [[1, 2], [2, 3], [1, 3]]
    tri["geometry"]["normals"] = [[1, 0], [0, 1], [-1, -2]]
    tri["geometry"]["coords"] = [[0, 0], [2, 0], [0, 1]]
    tri["geometry"]["offsets"] = [0, 0, -2]
    with pytest.raises(NotSmooth):
        polytope_from_json(tri)


def test_toric_pipeline_centres():
    from dbraid.centre import centre_group

    G = centre_group(assign_degrees(builtin_polytope("interval"), [2, 3]))
    assert G.order == 1
    G = centre_group(assign_degrees(chopped("cube", [8, 1]), [3, 5, 7, 11, 13, 17, 19, 23]))
    assert G.rank == 3 and G.invariant_factors == ()
