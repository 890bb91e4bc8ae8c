"""Exact integer matrix algebra.

Matrices are plain lists of rows of Python ints, so entries never overflow.
The main entry points are :func:`hnf`, :func:`snf`, :func:`cokernel` and
:func:`kernel_mod`; :class:`FgAbGroup` carries the structure of a finitely
generated abelian group together with the coordinate change that puts an
ambient integer vector into canonical (torsion residue, free) coordinates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, prod
from typing import Sequence

Matrix = list[list[int]]


class DimensionMismatch(ValueError):
    pass


# ---------------------------------------------------------------------------
# small helpers


def zeros(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def as_matrix(A: Sequence[Sequence[int]]) -> Matrix:
    rows = [[int(x) for x in row] for row in A]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise DimensionMismatch("ragged matrix")
    return rows


def shape(A: Matrix, cols: int | None = None) -> tuple[int, int]:
    """Row and column count; ``cols`` disambiguates matrices with no rows."""
    if A:
        return len(A), len(A[0])
    return 0, cols or 0


def matmul(A: Matrix, B: Matrix, inner: int | None = None) -> Matrix:
    if not A:
        return []
    n = len(A[0])
    if len(B) != n:
        raise DimensionMismatch(f"cannot multiply {len(A)}x{n} by {len(B)}x?")
    if n == 0:
        # result width is unknowable from B alone; callers pass it via inner
        return [[0] * (inner or 0) for _ in A]
    p = len(B[0])
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Matrix, v: Sequence[int]) -> list[int]:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def transpose(A: Matrix, cols: int | None = None) -> Matrix:
    if not A:
        return [[] for _ in range(cols or 0)]
    return [list(c) for c in zip(*A)]


def det(A: Matrix) -> int:
    """Exact determinant by fraction-free Bareiss elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [row[:] for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Hermite normal form


def hnf(A: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ A == H``.  ``H`` is in
    row echelon form with positive pivots, and every entry above a pivot lies
    in ``[0, pivot)``.
    """
    H = as_matrix(A)
    m = len(H)
    n = len(H[0]) if m else 0
    U = identity(m)
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][c]))
            if p != r:
                H[p], H[r] = H[r], H[p]
                U[p], U[r] = U[r], U[p]
            done = True
            for i in range(r + 1, m):
                if H[i][c]:
                    q = H[i][c] // H[r][c]
                    H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
                    if H[i][c]:
                        done = False
            if done:
                break
        if H[r][c] == 0:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
    return H, U


def in_row_lattice(v: Sequence[int], generators: Sequence[Sequence[int]]) -> bool:
    """Whether ``v`` is an integer combination of the given row vectors."""
    v = [int(x) for x in v]
    if not generators:
        return not any(v)
    H, _ = hnf(generators)
    for row in H:
        piv = next((j for j, x in enumerate(row) if x), None)
        if piv is None:
            break
        if v[piv] % row[piv]:
            return False
        q = v[piv] // row[piv]
        v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular and ``D`` diagonal.

    The inverses of both transforms are carried along since they are exact
    integer matrices and the coset machinery needs them.
    """

    A: Matrix
    U: Matrix
    V: Matrix
    D: Matrix
    Uinv: Matrix
    Vinv: Matrix
    rows: int
    cols: int

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(self.rows, self.cols))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def snf(A: Sequence[Sequence[int]], cols: int | None = None) -> SmithDecomposition:
    """Smith normal form with transformation matrices.

    Pivots are chosen as the smallest nonzero entry in absolute value.  Once
    a pivot row and column are cleared, any remaining entry not divisible by
    the pivot is folded into the pivot row and elimination resumes, so the
    diagonal comes out as a divisibility chain with zeros trailing.  Sign
    flips are done with column operations.
    """
    D = as_matrix(A)
    m, n = shape(D, cols)
    A0 = [row[:] for row in D]
    U, Uinv = identity(m), identity(m)
    V, Vinv = identity(n), identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]
        for row in Uinv:
            row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        D[dst] = [x + q * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]
        for row in Uinv:
            row[src] -= q * row[dst]

    def add_col(dst, src, q):
        # col_dst += q * col_src
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]
        Vinv[src] = [x - q * y for x, y in zip(Vinv[src], Vinv[dst])]

    def negate_col(j):
        for row in D:
            row[j] = -row[j]
        for row in V:
            row[j] = -row[j]
        Vinv[j] = [-x for x in Vinv[j]]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // D[t][t]))
                    if D[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // D[t][t]))
                    if D[t][j]:
                        dirty = True
            if dirty:
                # move the smallest leftover in the pivot row/column to the pivot
                cand = [(abs(D[i][t]), i, t) for i in range(t, m) if D[i][t]]
                cand += [(abs(D[t][j]), t, j) for j in range(t, n) if D[t][j]]
                _, i, j = min(cand)
                swap_rows(t, i)
                swap_cols(t, j)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % D[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            negate_col(t)
    return SmithDecomposition(A0, U, V, D, Uinv, Vinv, m, n)


# ---------------------------------------------------------------------------
# finitely generated abelian groups


@dataclass(frozen=True)
class FgAbGroup:
    """Z^ambient modulo a sublattice, in invariant-factor form.

    Canonical coordinates are ``to_canonical @ v``: the first
    ``len(invariant_factors)`` entries are torsion residues (read modulo the
    matching factor), the remaining ``rank`` entries are free coordinates.
    ``from_canonical`` maps canonical coordinates back to an ambient vector.
    """

    rank: int
    invariant_factors: tuple[int, ...]
    ambient: int
    to_canonical: tuple[tuple[int, ...], ...] = field(repr=False)
    from_canonical: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def ngens(self) -> int:
        return len(self.invariant_factors) + self.rank

    @property
    def torsion_order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    @property
    def order(self) -> int | None:
        return self.torsion_order if self.is_finite else None

    @property
    def exponent(self) -> int:
        """Exponent of the torsion subgroup (1 when torsion free)."""
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def coordinates(self, v: Sequence[int]) -> tuple[int, ...]:
        """Reduced canonical coordinates of the coset of ``v``."""
        if len(v) != self.ambient:
            raise DimensionMismatch(f"expected length {self.ambient}, got {len(v)}")
        y = [sum(a * x for a, x in zip(row, v)) for row in self.to_canonical]
        for i, d in enumerate(self.invariant_factors):
            y[i] %= d
        return tuple(y)

    def element(self, coords: Sequence[int]) -> list[int]:
        """Ambient representative of the given canonical coordinates."""
        out = [0] * self.ambient
        for c, col in zip(coords, self.from_canonical):
            if c:
                for i, x in enumerate(col):
                    out[i] += c * x
        return out

    def canonical(self, v: Sequence[int]) -> list[int]:
        return self.element(self.coordinates(v))

    def is_zero(self, v: Sequence[int]) -> bool:
        return not any(self.coordinates(v))

    def same_structure(self, other: "FgAbGroup") -> bool:
        return self.rank == other.rank and self.invariant_factors == other.invariant_factors

    def describe(self) -> str:
        parts = [f"Z_{d}" for d in self.invariant_factors]
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        return " + ".join(parts) if parts else "0"


def cokernel(A: Sequence[Sequence[int]], ambient: int | None = None) -> FgAbGroup:
    """Z^n / (column span of A), for an n-row matrix A.

    ``ambient`` gives n explicitly, which matters when A has no columns.
    """
    A = as_matrix(A)
    n = len(A) if A or ambient is None else ambient
    if ambient is not None and A and len(A) != ambient:
        raise DimensionMismatch(f"matrix has {len(A)} rows, ambient is {ambient}")
    if n == 0:
        return FgAbGroup(0, (), 0, (), ())
    cols = len(A[0]) if A[0] else 0
    if cols == 0:
        A = [[] for _ in range(n)]
        dec = SmithDecomposition(A, identity(n), [], [[] for _ in range(n)], identity(n), [], n, 0)
    else:
        dec = snf(A)
    return _group_from_snf(dec)


def _group_from_snf(dec: SmithDecomposition) -> FgAbGroup:
    n = dec.rows
    diag = dec.diagonal + [0] * (n - min(dec.rows, dec.cols))
    tors = [i for i, d in enumerate(diag) if d > 1]
    free = [i for i, d in enumerate(diag) if d == 0]
    keep = tors + free
    to_c = tuple(tuple(dec.U[i]) for i in keep)
    from_c = tuple(tuple(dec.Uinv[r][i] for r in range(n)) for i in keep)
    return FgAbGroup(len(free), tuple(diag[i] for i in tors), n, to_c, from_c)


def abelian_group(orders: Sequence[int], rank: int = 0) -> FgAbGroup:
    """Direct sum of cyclic groups Z_{o} (o = 0 meaning Z) plus Z^rank."""
    orders = list(orders) + [0] * rank
    n = len(orders)
    A = [[orders[i] if i == j else 0 for j in range(n)] for i in range(n)]
    return cokernel(A, ambient=n)


def direct_sum(*groups: FgAbGroup) -> FgAbGroup:
    """Abstract direct sum (only the structure is meaningful)."""
    orders = [d for g in groups for d in g.invariant_factors]
    return abelian_group(orders, rank=sum(g.rank for g in groups))


def coset_canonical(v: Sequence[int], lattice: SmithDecomposition | FgAbGroup) -> list[int]:
    """Deterministic representative of ``v`` modulo the column span of a lattice."""
    group = lattice if isinstance(lattice, FgAbGroup) else _group_from_snf(lattice)
    return group.canonical(v)


# ---------------------------------------------------------------------------
# kernels modulo N


@dataclass(frozen=True)
class ModKernel:
    """The subgroup {x in (Z/N)^cols : A x = 0 mod N}."""

    modulus: int
    group: FgAbGroup
    generators: tuple[tuple[int, ...], ...]
    orders: tuple[int, ...]
    _Vinv: tuple[tuple[int, ...], ...] = field(repr=False)

    def coordinates(self, x: Sequence[int]) -> tuple[int, ...]:
        """Coordinates of a kernel element against ``generators``."""
        N = self.modulus
        y = [sum(a * b for a, b in zip(row, x)) % N for row in self._Vinv]
        out = []
        for yi, o in zip(y, self.orders):
            step = N // o
            if yi % step:
                raise ValueError("vector is not in the kernel")
            out.append((yi // step) % o)
        return tuple(out)

    def contains(self, x: Sequence[int]) -> bool:
        try:
            self.coordinates(x)
        except ValueError:
            return False
        return True

    def quotient(self, elements: Sequence[Sequence[int]]) -> FgAbGroup:
        """Structure of the kernel modulo the subgroup spanned by ``elements``."""
        k = len(self.orders)
        rel = [[self.orders[i] if i == j else 0 for j in range(k)] for i in range(k)]
        for x in elements:
            c = self.coordinates(x)
            for i in range(k):
                rel[i].append(c[i])
        return cokernel(rel, ambient=k)


def kernel_mod(A: Sequence[Sequence[int]], N: int, cols: int | None = None) -> ModKernel:
    """Kernel of A acting on (Z/N)^cols.

    With ``U A V = D`` the condition becomes ``D y = 0 mod N`` for
    ``y = V^-1 x``, which splits coordinatewise: ``y_i`` ranges over the
    multiples of ``N / gcd(d_i, N)``.
    """
    if N < 1:
        raise ValueError("modulus must be positive")
    A = as_matrix(A)
    m, n = shape(A, cols)
    if m == 0:
        A = zeros(1, n)
        m = 1
    dec = snf(A)
    diag = dec.diagonal + [0] * (n - min(m, n))
    orders = [gcd(d, N) for d in diag]
    gens = []
    for i, o in enumerate(orders):
        step = N // o
        gens.append(tuple((dec.V[r][i] * step) % N for r in range(n)))
    group = abelian_group(orders)
    return ModKernel(N, group, tuple(gens), tuple(orders), tuple(tuple(r) for r in dec.Vinv))
