"""The centre D_k(Γ) of a divisor braid group.

Generators are the edges of Γ in lexicographic order; colour μ contributes
the relation  Σ_λ k_λ · b_{λμ} = 0  over the edges at μ.  The group is the
cokernel of that |E| x r matrix.  An independent route through the rational
solutions of  k_λ c_μ + k_μ c_λ ∈ Z  (one per edge) recovers the torsion and
is used as a cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd, prod
from typing import Iterator, Sequence

from .scheme import NegativeColourScheme, analyze_graph
from .zlinalg import FgAbGroup, Matrix, abelian_group, cokernel, direct_sum, kernel_mod


class NotConnected(ValueError):
    pass


class ContextMismatch(ValueError):
    pass


@dataclass(frozen=True)
class CentrePresentation:
    scheme: NegativeColourScheme
    edge_index: tuple[tuple[int, int], ...]
    M: tuple[tuple[int, ...], ...]
    group: FgAbGroup = field(repr=False, compare=False)

    def element(self, coefficients: Sequence[int]) -> "CentralElement":
        return CentralElement(tuple(self.group.canonical(coefficients)), self)

    def generator(self, a: int, b: int) -> "CentralElement":
        """Class of b_{ab}; zero when {a, b} is not an edge."""
        v = [0] * len(self.edge_index)
        e = (min(a, b), max(a, b))
        if e in self.edge_index:
            v[self.edge_index.index(e)] = 1
        return self.element(v)

    def zero(self) -> "CentralElement":
        return self.element([0] * len(self.edge_index))

    def relation(self, mu: int) -> list[int]:
        """The relation attached to colour ``mu`` as a coefficient vector."""
        return [row[mu - 1] for row in self.M]


@dataclass(frozen=True)
class CentralElement:
    """Element of D_k(Γ); ``coefficients`` is the canonical coset representative."""

    coefficients: tuple[int, ...]
    context: CentrePresentation = field(repr=False)

    def _check(self, other: "CentralElement"):
        if self.context.edge_index != other.context.edge_index or (
            self.context.scheme.degrees != other.context.scheme.degrees
        ):
            raise ContextMismatch("central elements belong to different schemes")

    def __add__(self, other: "CentralElement") -> "CentralElement":
        self._check(other)
        return self.context.element([a + b for a, b in zip(self.coefficients, other.coefficients)])

    def __neg__(self) -> "CentralElement":
        return self.context.element([-a for a in self.coefficients])

    def __sub__(self, other: "CentralElement") -> "CentralElement":
        return self + (-other)

    def __mul__(self, n: int) -> "CentralElement":
        return self.context.element([n * a for a in self.coefficients])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, CentralElement):
            return NotImplemented
        self._check(other)
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    @property
    def coordinates(self) -> tuple[int, ...]:
        return self.context.group.coordinates(self.coefficients)

    def is_zero(self) -> bool:
        return not any(self.coordinates)


def relation_matrix(scheme: NegativeColourScheme) -> Matrix:
    """|E| x r matrix: row {λ, μ} has k_μ in column λ and k_λ in column μ."""
    k = scheme.degrees
    M = []
    for a, b in scheme.edges:
        row = [0] * scheme.r
        row[a - 1] = k[b - 1]
        row[b - 1] = k[a - 1]
        M.append(row)
    return M


def presentation(scheme: NegativeColourScheme) -> CentrePresentation:
    M = relation_matrix(scheme)
    group = cokernel(M, ambient=len(scheme.edges))
    return CentrePresentation(scheme, scheme.edges, tuple(map(tuple, M)), group)


def centre_group(scheme: NegativeColourScheme) -> FgAbGroup:
    return presentation(scheme).group


def centre_rank_formula(scheme: NegativeColourScheme) -> int:
    """s - r + t: edges minus colours plus bipartite components."""
    ga = analyze_graph(scheme)
    return ga.s - scheme.r + ga.t


# ---------------------------------------------------------------------------
# torsion through the Diophantine conditions


def torsion_via_diophantine(scheme: NegativeColourScheme, N: int) -> FgAbGroup:
    """Torsion of the centre from the N-grid solutions of the edge conditions.

    Points c = x/N of (Q/Z)^r with  k_λ c_μ + k_μ c_λ ∈ Z  on every edge form
    the kernel of the integer matrix below modulo N.  For a bipartite graph
    the rational dependence among the relations, c_λ = ε_λ k_λ s, spans a
    subgroup that is quotiented out; on the N-grid it is generated by
    x_λ = ε_λ k_λ / gcd(k).  N must be a multiple of the torsion exponent.
    """
    ga = analyze_graph(scheme)
    if not ga.connected:
        raise NotConnected("decompose the scheme into connected components first")
    k = scheme.degrees
    rows = []
    for a, b in scheme.edges:
        row = [0] * scheme.r
        row[a - 1] = k[b - 1]
        row[b - 1] = k[a - 1]
        rows.append(row)
    ker = kernel_mod(rows, N, cols=scheme.r)
    comp = ga.components[0] if ga.components else None
    if comp is None:
        return abelian_group([])
    if not comp.bipartite:
        return ker.group
    g = reduce(gcd, k)
    line = [(comp.signs[v] * (k[v - 1] // g)) % N for v in range(1, scheme.r + 1)]
    return ker.quotient([line])


@dataclass(frozen=True)
class TorsionCheckReport:
    snf_torsion: FgAbGroup
    diophantine_torsion: FgAbGroup
    diophantine_torsion_doubled: FgAbGroup
    agree: bool
    exponent_used: int

    def to_json(self) -> dict:
        return {
            "snf": list(self.snf_torsion.invariant_factors),
            "diophantine": list(self.diophantine_torsion.invariant_factors),
            "diophantine_2N": list(self.diophantine_torsion_doubled.invariant_factors),
            "N": self.exponent_used,
            "agree": self.agree,
        }


def components(scheme: NegativeColourScheme) -> list[NegativeColourScheme]:
    return [scheme.restrict(c.vertices) for c in analyze_graph(scheme).components]


def cross_check_torsion(scheme: NegativeColourScheme) -> TorsionCheckReport:
    G = centre_group(scheme)
    N = G.exponent
    torsion = abelian_group(G.invariant_factors)
    parts = components(scheme)
    dio = direct_sum(*(torsion_via_diophantine(c, N) for c in parts))
    dio2 = direct_sum(*(torsion_via_diophantine(c, 2 * N) for c in parts))
    agree = dio.same_structure(torsion) and dio2.same_structure(torsion)
    return TorsionCheckReport(torsion, dio, dio2, agree, N)


# ---------------------------------------------------------------------------
# characters


@dataclass(frozen=True)
class TorusCharacter:
    """Character of a finitely generated abelian group.

    ``residues[i]`` is read modulo the i-th invariant factor; ``angles`` are
    the values on the free generators, as fractions of a full turn.
    """

    group: FgAbGroup = field(repr=False)
    residues: tuple[int, ...]
    angles: tuple[Fraction, ...] = ()

    def __post_init__(self):
        if len(self.residues) != len(self.group.invariant_factors):
            raise ContextMismatch("one residue per invariant factor expected")
        object.__setattr__(
            self, "residues", tuple(j % d for j, d in zip(self.residues, self.group.invariant_factors))
        )
        angles = tuple(self.angles) or (Fraction(0),) * self.group.rank
        if len(angles) != self.group.rank:
            raise ContextMismatch("one angle per free generator expected")
        object.__setattr__(self, "angles", angles)

    def __add__(self, other: "TorusCharacter") -> "TorusCharacter":
        if not self.group.same_structure(other.group):
            raise ContextMismatch("characters of different groups")
        return TorusCharacter(
            self.group,
            tuple(a + b for a, b in zip(self.residues, other.residues)),
            tuple(a + b for a, b in zip(self.angles, other.angles)),
        )

    @property
    def is_trivial(self) -> bool:
        return not any(self.residues) and all(Fraction(a) % 1 == 0 for a in self.angles)

    def to_json(self) -> dict:
        return {
            "invariant_factors": list(self.group.invariant_factors),
            "residues": list(self.residues),
            "angles": [str(Fraction(a)) for a in self.angles],
        }


def characters(group: FgAbGroup) -> Iterator[TorusCharacter]:
    """All characters of the torsion part, free angles set to zero."""
    for js in product(*(range(d) for d in group.invariant_factors)):
        yield TorusCharacter(group, tuple(js))


def character_value(chi: TorusCharacter, x: CentralElement | Sequence[int]) -> Fraction:
    """chi(x) in Q/Z, reduced to [0, 1)."""
    group = chi.group
    if isinstance(x, CentralElement):
        if not x.context.group.same_structure(group) or x.context.group.to_canonical != group.to_canonical:
            raise ContextMismatch("character and element live on different groups")
        coords = x.coordinates
    else:
        coords = group.coordinates(x)
    nt = len(group.invariant_factors)
    val = Fraction(0)
    for j, y, d in zip(chi.residues, coords[:nt], group.invariant_factors):
        val += Fraction(j * y, d)
    for a, y in zip(chi.angles, coords[nt:]):
        val += a * y
    return val % 1


# ---------------------------------------------------------------------------
# closed-form orders quoted alongside the tables (advisory only)


def pentagon_order_formula(k: Sequence[int]) -> int:
    return 2 * reduce(gcd, k) * prod(k)


def tree_order_formula(k: Sequence[int]) -> int:
    return k[0] * k[1] * k[2] * k[6] ** 2 * reduce(gcd, k)
