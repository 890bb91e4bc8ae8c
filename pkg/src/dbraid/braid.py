"""Words, normal forms and linking invariants for divisor braid groups.

The group is a central extension of H_1(Σ)^r by the centre D_k(Γ).  An
element is stored as ``(M, δ)``: ``M`` is the r x 2g matrix of exponent sums
of the homology generators a[λ,ℓ], and ``δ`` a central element.  The word it
stands for is  δ · Π a[λ,ℓ]^M[λ,ℓ]  with the a-letters in ascending (λ, ℓ)
order.  Collecting a product back into that order costs one commutator
b[λ,μ]^J[ℓ,ℓ'] for every pair of letters that has to be swapped.
"""
from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .centre import CentralElement, CentrePresentation, presentation
from .scheme import NegativeColourScheme
from .zlinalg import FgAbGroup, abelian_group
from math import gcd


class WordSyntaxError(ValueError):
    def __init__(self, msg: str, position: int):
        self.position = position
        super().__init__(f"position {position}: {msg}")


class IndexOutOfRange(ValueError):
    pass


class UnknownEdge(UserWarning):
    """A b-generator on a non-edge; it is trivial and gets dropped."""


class NotCentral(ValueError):
    pass


class NotAllowable(ValueError):
    pass


class WrongScheme(ValueError):
    pass


class ContextMismatch(ValueError):
    pass


def standard_symplectic(g: int) -> tuple[tuple[int, ...], ...]:
    """The 2g x 2g block matrix [[0, I], [-I, 0]]."""
    n = 2 * g
    J = [[0] * n for _ in range(n)]
    for i in range(g):
        J[i][g + i] = 1
        J[g + i][i] = -1
    return tuple(map(tuple, J))


@dataclass(frozen=True, eq=False)
class BraidContext:
    """A scheme on a closed oriented surface of genus g."""

    scheme: NegativeColourScheme
    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if not self.scheme.very_composite:
            warnings.warn(
                "degrees below 2: the normal forms describe the abstract extension, "
                "the braid-group identification is only established for degrees >= 2",
                stacklevel=3,
            )

    @cached_property
    def J(self) -> tuple[tuple[int, ...], ...]:
        return standard_symplectic(self.genus)

    @cached_property
    def centre(self) -> CentrePresentation:
        return presentation(self.scheme)

    @property
    def r(self) -> int:
        return self.scheme.r

    @property
    def n_homology(self) -> int:
        return 2 * self.genus

    def same(self, other: "BraidContext") -> bool:
        return self is other or (self.genus == other.genus and self.scheme == other.scheme)

    def identity(self) -> "NormalForm":
        zero = tuple((0,) * self.n_homology for _ in range(self.r))
        return NormalForm(self, zero, self.centre.zero())


# ---------------------------------------------------------------------------
# words


@dataclass(frozen=True)
class Letter:
    kind: str  # "a" or "b"
    i: int  # colour λ
    j: int  # homology index ℓ for "a", second colour μ for "b"
    exp: int = 1

    def __str__(self):
        s = f"{self.kind}[{self.i},{self.j}]"
        return s if self.exp == 1 else f"{s}^{self.exp}"

    def inverse(self) -> "Letter":
        return Letter(self.kind, self.i, self.j, -self.exp)


@dataclass(frozen=True)
class BraidWord:
    context: BraidContext = field(repr=False)
    letters: tuple[Letter, ...]

    def __str__(self):
        return " ".join(map(str, self.letters))

    def __len__(self):
        return len(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if not self.context.same(other.context):
            raise ContextMismatch("words over different contexts")
        return BraidWord(self.context, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.context, tuple(l.inverse() for l in reversed(self.letters)))


_TOKEN = re.compile(r"\s*([ab])\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*(?:\^\s*([+-]?\d+))?")


def make_letter(ctx: BraidContext, kind: str, i: int, j: int, exp: int = 1) -> Letter | None:
    """Validated letter, or None for a b-generator that is trivial."""
    r = ctx.r
    if kind == "a":
        if not 1 <= i <= r:
            raise IndexOutOfRange(f"colour {i} outside 1..{r}")
        if not 1 <= j <= ctx.n_homology:
            raise IndexOutOfRange(f"homology index {j} outside 1..{ctx.n_homology}")
        return Letter("a", i, j, exp)
    for x in (i, j):
        if not 1 <= x <= r:
            raise IndexOutOfRange(f"colour {x} outside 1..{r}")
    if not ctx.scheme.has_edge(i, j):
        warnings.warn(f"b[{i},{j}] is not an edge of the graph; dropped as trivial", UnknownEdge, stacklevel=3)
        return None
    return Letter("b", min(i, j), max(i, j), exp)


def parse_word(text: str, ctx: BraidContext) -> BraidWord:
    """Parse tokens ``a[λ,ℓ]`` / ``b[λ,μ]`` with optional ``^n`` exponents."""
    letters = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise WordSyntaxError(f"unexpected {text[pos:pos + 10]!r}", pos)
        kind, i, j, e = m.group(1), int(m.group(2)), int(m.group(3)), m.group(4)
        exp = int(e) if e is not None else 1
        pos = m.end()
        if pos < len(text) and not text[pos].isspace() and text[pos] not in "ab":
            raise WordSyntaxError(f"unexpected {text[pos]!r}", pos)
        letter = make_letter(ctx, kind, i, j, exp)
        if letter is not None and exp != 0:
            letters.append(letter)
    return BraidWord(ctx, tuple(letters))


# ---------------------------------------------------------------------------
# normal forms


@dataclass(frozen=True)
class NormalForm:
    context: BraidContext = field(repr=False, compare=False)
    M: tuple[tuple[int, ...], ...]
    central: CentralElement

    def __mul__(self, other: "NormalForm") -> "NormalForm":
        return multiply(self, other)

    @property
    def is_central(self) -> bool:
        return not any(any(row) for row in self.M)

    def is_identity(self) -> bool:
        return self.is_central and self.central.is_zero()

    def to_json(self) -> dict:
        return {
            "M": [list(row) for row in self.M],
            "central": list(self.central.coefficients),
            "central_canonical": list(self.central.coordinates),
        }


def cocycle(ctx: BraidContext, M1, M2) -> list[int]:
    """Central correction for collecting A^M1 · A^M2 into ascending order.

    Only a letter (λ,ℓ) on the left with a larger index than a letter (μ,ℓ')
    on the right gets swapped; with μ < λ an edge {μ, λ} picks up
    M1[λ,ℓ] · M2[μ,ℓ'] · J[ℓ,ℓ'].
    """
    J = ctx.J
    out = []
    for a, b in ctx.scheme.edges:
        # a < b, so the left letter is colour b and the right one colour a
        left, right = M1[b - 1], M2[a - 1]
        s = 0
        for l, x in enumerate(left):
            if x:
                Jl = J[l]
                s += x * sum(Jl[m] * y for m, y in enumerate(right) if y)
        out.append(s)
    return out


def multiply(x: NormalForm, y: NormalForm) -> NormalForm:
    ctx = x.context
    if not ctx.same(y.context):
        raise ContextMismatch("normal forms over different contexts")
    M = tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(x.M, y.M))
    c = cocycle(ctx, x.M, y.M)
    delta = [p + q + s for p, q, s in zip(x.central.coefficients, y.central.coefficients, c)]
    return NormalForm(ctx, M, ctx.centre.element(delta))


def invert(x: NormalForm) -> NormalForm:
    ctx = x.context
    M = tuple(tuple(-a for a in row) for row in x.M)
    c = cocycle(ctx, x.M, x.M)
    delta = [-d + s for d, s in zip(x.central.coefficients, c)]
    return NormalForm(ctx, M, ctx.centre.element(delta))


def letter_normal_form(ctx: BraidContext, letter: Letter) -> NormalForm:
    if letter.kind == "a":
        M = [[0] * ctx.n_homology for _ in range(ctx.r)]
        M[letter.i - 1][letter.j - 1] = letter.exp
        return NormalForm(ctx, tuple(map(tuple, M)), ctx.centre.zero())
    g = ctx.centre.generator(letter.i, letter.j) * letter.exp
    return NormalForm(ctx, ctx.identity().M, g)


def normal_form(w: BraidWord) -> NormalForm:
    """Left-to-right collection of a word."""
    ctx = w.context
    r, n = ctx.r, ctx.n_homology
    M = [[0] * n for _ in range(r)]
    delta = [0] * len(ctx.scheme.edges)
    eidx = ctx.scheme.edge_index()
    J = ctx.J
    for letter in w.letters:
        if letter.kind == "b":
            delta[eidx[(letter.i, letter.j)]] += letter.exp
            continue
        mu, lp, e = letter.i - 1, letter.j - 1, letter.exp
        # pass the new letter leftwards over every larger-index letter of
        # another colour joined to it by an edge
        for k, (a, b) in enumerate(ctx.scheme.edges):
            if a - 1 == mu:
                row = M[b - 1]
                delta[k] += e * sum(x * J[l][lp] for l, x in enumerate(row) if x)
        M[mu][lp] += e
    return NormalForm(ctx, tuple(map(tuple, M)), ctx.centre.element(delta))


def words_equal(u: BraidWord, v: BraidWord) -> bool:
    if not u.context.same(v.context):
        raise ContextMismatch("words over different contexts")
    return normal_form(u) == normal_form(v)


def hurewicz(x: NormalForm) -> tuple[tuple[int, ...], ...]:
    return x.M


# ---------------------------------------------------------------------------
# linking invariants


@dataclass(frozen=True)
class AllowableCollection:
    """Values Y[λ,μ] in an abelian group K, one per ordered pair of colours.

    Values are ambient vectors of ``K``; missing pairs count as zero.
    """

    K: FgAbGroup
    Y: Mapping[tuple[int, int], Sequence[int]]

    def value(self, a: int, b: int) -> list[int]:
        v = self.Y.get((a, b))
        return list(v) if v is not None else [0] * self.K.ambient

    @classmethod
    def symmetric(cls, K: FgAbGroup, values: Mapping[tuple[int, int], Sequence[int]]):
        Y = {}
        for (a, b), v in values.items():
            Y[(a, b)] = tuple(v)
            Y[(b, a)] = tuple(v)
        return cls(K, Y)


def check_allowable(Y: AllowableCollection, scheme: NegativeColourScheme) -> tuple[bool, list[str]]:
    K, k, r = Y.K, scheme.degrees, scheme.r
    problems = []
    for (a, b), v in sorted(Y.Y.items()):
        if not (1 <= a <= r and 1 <= b <= r):
            problems.append(f"pair ({a},{b}) outside 1..{r}")
        elif (a == b or not scheme.has_edge(a, b)) and not K.is_zero(v):
            problems.append(f"non-edge ({a},{b}) carries a nonzero value")
    for mu in range(1, r + 1):
        col = [0] * K.ambient
        row = [0] * K.ambient
        for lam in range(1, r + 1):
            col = [c + k[lam - 1] * y for c, y in zip(col, Y.value(lam, mu))]
            row = [c + k[lam - 1] * y for c, y in zip(row, Y.value(mu, lam))]
        if not K.is_zero(col):
            problems.append(f"weighted sum into colour {mu} is nonzero")
        if not K.is_zero(row):
            problems.append(f"weighted sum out of colour {mu} is nonzero")
    return not problems, problems


def theta(Y: AllowableCollection, x: NormalForm | CentralElement) -> tuple[int, ...]:
    """The Y-linking of a central element, as canonical coordinates in K."""
    if isinstance(x, NormalForm):
        if not x.is_central:
            raise NotCentral("element has nonzero homology class")
        x = x.central
    ctx = x.context
    scheme = ctx.scheme
    ok, problems = check_allowable(Y, scheme)
    if not ok:
        raise NotAllowable("; ".join(problems))
    K = Y.K
    vals = [Y.value(a, b) for a, b in ctx.edge_index]

    def evaluate(coeffs):
        out = [0] * K.ambient
        for c, v in zip(coeffs, vals):
            if c:
                out = [o + c * y for o, y in zip(out, v)]
        return out

    for mu in range(1, scheme.r + 1):
        if not K.is_zero(evaluate(ctx.relation(mu))):
            raise NotAllowable(f"relation of colour {mu} does not vanish")
    return K.coordinates(evaluate(x.coefficients))


def universal_collection(ctx: CentrePresentation) -> AllowableCollection:
    """Y[λ,μ] = class of b[λ,μ] in the centre itself."""
    vals = {}
    for i, e in enumerate(ctx.edge_index):
        v = [0] * len(ctx.edge_index)
        v[i] = 1
        vals[e] = v
    return AllowableCollection.symmetric(ctx.group, vals)


def two_colour_link_invariant(w: BraidWord) -> int:
    """Linking residue modulo gcd(k1, k2) of a central two-colour braid."""
    scheme = w.context.scheme
    if scheme.r != 2 or scheme.edges != ((1, 2),):
        raise WrongScheme("needs the single-edge graph on two colours")
    g = gcd(*scheme.degrees)
    x = normal_form(w)
    if not x.is_central:
        raise NotCentral("braid has nonzero homology class")
    K = abelian_group([g])
    Y = AllowableCollection.symmetric(K, {(1, 2): [1] if K.ambient else []})
    coords = theta(Y, x)
    return coords[0] if coords else 0
