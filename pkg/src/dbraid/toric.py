"""Facet combinatorics of simple polytopes and the graphs they induce.

Colours are facets; two colours are joined when their facets are disjoint.
For a polytope two facets meet iff they share a vertex, so everything here
is finite set arithmetic on the facet-vertex incidence.
"""
from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from itertools import combinations
from pathlib import Path
from typing import Sequence

from .scheme import NegativeColourScheme, NonPositiveDegree, validate_scheme
from .zlinalg import det


class PolytopeError(ValueError):
    pass


class MalformedInput(PolytopeError):
    pass


class NotSimple(PolytopeError):
    pass


class NotSmooth(PolytopeError):
    pass


class IncidenceGeometryMismatch(PolytopeError):
    pass


class VertexNotFound(PolytopeError):
    pass


@dataclass(frozen=True)
class Geometry:
    coords: tuple[tuple[Fraction, ...], ...]
    normals: tuple[tuple[int, ...], ...]
    offsets: tuple[Fraction, ...]


@dataclass(frozen=True)
class DelzantIncidence:
    """Facets are 1..n_facets, vertices 1..len(incidence).

    ``incidence[v - 1]`` is the set of facets through vertex v.
    """

    dim: int
    n_facets: int
    incidence: tuple[frozenset[int], ...]
    geometry: Geometry | None = None

    @property
    def n_vertices(self) -> int:
        return len(self.incidence)

    def facet_vertices(self, f: int) -> frozenset[int]:
        return frozenset(v for v, fs in enumerate(self.incidence, 1) if f in fs)

    def edges(self) -> list[tuple[int, int]]:
        """Polytope edges: vertex pairs sharing dim - 1 facets."""
        return [
            (u, v)
            for (u, a), (v, b) in combinations(enumerate(self.incidence, 1), 2)
            if len(a & b) == self.dim - 1
        ]

    def to_json(self) -> dict:
        out = {
            "dim": self.dim,
            "facets": self.n_facets,
            "vertices": self.n_vertices,
            "incidence": [sorted(fs) for fs in self.incidence],
        }
        if self.geometry is not None:
            g = self.geometry
            out["geometry"] = {
                "coords": [[str(x) for x in c] for c in g.coords],
                "normals": [list(n) for n in g.normals],
                "offsets": [str(o) for o in g.offsets],
            }
        return out


def _rational(x, where: str) -> Fraction:
    if isinstance(x, bool):
        raise MalformedInput(f"{where}: expected a rational, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError):
            pass
    raise MalformedInput(f"{where}: expected an integer or 'p/q' string, got {x!r}")


def polytope_from_json(data: dict | str) -> DelzantIncidence:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"line {exc.lineno}: invalid JSON ({exc.msg})") from exc
    if not isinstance(data, dict):
        raise MalformedInput("top level must be an object")
    for key in ("dim", "facets", "incidence"):
        if key not in data:
            raise MalformedInput(f"missing field {key!r}")
    dim, F, inc = data["dim"], data["facets"], data["incidence"]
    if not isinstance(dim, int) or dim < 1:
        raise MalformedInput(f"dim: expected a positive integer, got {dim!r}")
    if not isinstance(F, int) or F < 1:
        raise MalformedInput(f"facets: expected a positive integer, got {F!r}")
    if not isinstance(inc, list):
        raise MalformedInput("incidence: expected a list of facet lists")
    if "vertices" in data and data["vertices"] != len(inc):
        raise MalformedInput(f"vertices: says {data['vertices']}, incidence lists {len(inc)}")
    incidence = []
    for v, fs in enumerate(inc, 1):
        if not isinstance(fs, list) or not all(isinstance(f, int) and not isinstance(f, bool) for f in fs):
            raise MalformedInput(f"incidence[{v}]: expected a list of facet ids")
        for f in fs:
            if not 1 <= f <= F:
                raise MalformedInput(f"incidence[{v}]: facet {f} outside 1..{F}")
        if len(set(fs)) != len(fs):
            raise MalformedInput(f"incidence[{v}]: repeated facet")
        incidence.append(frozenset(fs))
    geometry = None
    if data.get("geometry") is not None:
        g = data["geometry"]
        try:
            coords = tuple(
                tuple(_rational(x, f"geometry.coords[{i}]") for x in c) for i, c in enumerate(g["coords"], 1)
            )
            normals = tuple(tuple(n) for n in g["normals"])
            offsets = tuple(_rational(o, f"geometry.offsets[{i}]") for i, o in enumerate(g["offsets"], 1))
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"geometry: malformed ({exc})") from None
        if len(coords) != len(incidence) or any(len(c) != dim for c in coords):
            raise MalformedInput("geometry.coords: need one point of length dim per vertex")
        if len(normals) != F or any(len(n) != dim for n in normals):
            raise MalformedInput("geometry.normals: need one vector of length dim per facet")
        if any(not isinstance(x, int) or isinstance(x, bool) for n in normals for x in n):
            raise MalformedInput("geometry.normals: entries must be integers")
        if len(offsets) != F:
            raise MalformedInput("geometry.offsets: need one per facet")
        geometry = Geometry(coords, normals, offsets)
    p = DelzantIncidence(dim, F, tuple(incidence), geometry)
    validate_polytope(p)
    return p


def validate_polytope(p: DelzantIncidence) -> None:
    n = p.dim
    for v, fs in enumerate(p.incidence, 1):
        if len(fs) != n:
            raise NotSimple(f"vertex {v} lies on {len(fs)} facets, expected {n}")
    if len(set(p.incidence)) != len(p.incidence):
        raise MalformedInput("two vertices have the same facet set")
    sets = [p.facet_vertices(f) for f in range(1, p.n_facets + 1)]
    for f, vs in enumerate(sets, 1):
        if len(vs) < n:
            raise MalformedInput(f"facet {f} has {len(vs)} vertices, expected at least {n}")
    if len(set(sets)) != len(sets):
        raise MalformedInput("two facets have the same vertex set")
    g = p.geometry
    if g is None:
        return
    for v, (x, fs) in enumerate(zip(g.coords, p.incidence), 1):
        for f in range(1, p.n_facets + 1):
            val = sum(a * b for a, b in zip(g.normals[f - 1], x))
            on = val == g.offsets[f - 1]
            if val < g.offsets[f - 1]:
                raise IncidenceGeometryMismatch(f"vertex {v} violates the inequality of facet {f}")
            if on != (f in fs):
                raise IncidenceGeometryMismatch(
                    f"vertex {v} {'lies on' if on else 'misses'} facet {f} contrary to the incidence"
                )
        d = det([list(g.normals[f - 1]) for f in sorted(fs)])
        if abs(d) != 1:
            raise NotSmooth(f"facet normals at vertex {v} have determinant {d}")


def load_polytope(path: str | Path) -> DelzantIncidence:
    """Load a polytope file, or one of the bundled ones by name."""
    p = Path(path)
    if not p.exists() and str(path) in BUILTIN:
        return builtin_polytope(str(path))
    try:
        text = p.read_text()
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from exc
    return polytope_from_json(text)


BUILTIN = ("interval", "square", "cube")


def builtin_polytope(name: str) -> DelzantIncidence:
    if name not in BUILTIN:
        raise KeyError(name)
    text = resources.files("dbraid").joinpath("data", f"{name}.json").read_text()
    return polytope_from_json(text)


# ---------------------------------------------------------------------------
# operations


def facet_graph(p: DelzantIncidence) -> list[tuple[int, int]]:
    """Pairs of disjoint facets, sorted."""
    sets = [p.facet_vertices(f) for f in range(1, p.n_facets + 1)]
    return [(a + 1, b + 1) for a, b in combinations(range(p.n_facets), 2) if not sets[a] & sets[b]]


def chop_vertex(p: DelzantIncidence, v: int) -> DelzantIncidence:
    """Cut off vertex v by a new facet (numbered n_facets + 1).

    Remaining vertices keep their relative order and are renumbered
    consecutively; the dim new vertices are appended, one for each
    (dim - 1)-subset of the facets through v, in lexicographic order.
    """
    if not 1 <= v <= p.n_vertices:
        raise VertexNotFound(f"vertex {v} not in 1..{p.n_vertices}")
    if p.geometry is not None:
        warnings.warn("chop_vertex is combinatorial; dropping geometry", stacklevel=2)
    new = p.n_facets + 1
    at_v = sorted(p.incidence[v - 1])
    kept = [fs for i, fs in enumerate(p.incidence, 1) if i != v]
    added = [frozenset(sub) | {new} for sub in combinations(at_v, p.dim - 1)]
    out = DelzantIncidence(p.dim, new, tuple(kept + added))
    validate_polytope(out)
    return out


def assign_degrees(p: DelzantIncidence | Sequence[tuple[int, int]], degrees: Sequence[int], n_facets=None):
    """Scheme on the facet graph with one degree per facet."""
    if isinstance(p, DelzantIncidence):
        edges, F = facet_graph(p), p.n_facets
    else:
        edges, F = list(p), n_facets
    if F is None:
        raise ValueError("facet count required when passing a bare graph")
    if len(degrees) != F:
        raise MalformedInput(f"expected {F} degrees, got {len(degrees)}")
    for rho, k in enumerate(degrees, 1):
        if k <= 0:
            raise NonPositiveDegree(f"facet {rho} has degree {k}", f"degrees[{rho}]")
    return validate_scheme(F, edges, list(degrees))


def euler_characteristic(p: DelzantIncidence) -> int:
    """V - E + F (meaningful for 3-polytopes)."""
    return p.n_vertices - len(p.edges()) + p.n_facets
