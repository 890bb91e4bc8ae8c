"""Noncommutative torus parameters attached to characters of the centre."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .braid import standard_symplectic
from .centre import ContextMismatch, TorusCharacter, character_value, presentation
from .scheme import NegativeColourScheme


class IrrationalAngle(ValueError):
    pass


@dataclass(frozen=True)
class NCTorusParams:
    """theta[i][j] with i = (λ-1)·2g + (ℓ-1), entries in [0, 1)."""

    genus: int
    r: int
    theta: tuple[tuple[Fraction, ...], ...]
    character: TorusCharacter

    @property
    def dimension(self) -> int:
        return 2 * self.genus * self.r

    def entry(self, lam: int, l: int, lam2: int, l2: int) -> Fraction:
        n = 2 * self.genus
        return self.theta[(lam - 1) * n + l - 1][(lam2 - 1) * n + l2 - 1]

    def to_json(self) -> dict:
        return {
            "character": self.character.to_json(),
            "theta": [[str(x) for x in row] for row in self.theta],
        }


def nc_parameters(scheme: NegativeColourScheme, genus: int, chi: TorusCharacter) -> NCTorusParams:
    """Commutation phases of the unitaries U[λ,ℓ] in the factor of chi.

    The phase between U[λ,ℓ] and U[λ',ℓ'] is chi evaluated on the
    commutator class J[ℓ,ℓ'] · b[λ,λ'], which vanishes off the edges.
    """
    ctx = presentation(scheme)
    if not chi.group.same_structure(ctx.group) or chi.group.to_canonical != ctx.group.to_canonical:
        raise ContextMismatch("character does not belong to the centre of this scheme")
    for a in chi.angles:
        if not isinstance(a, (int, Fraction)):
            raise IrrationalAngle(f"free-part angle {a!r} is not an exact rational")
    J = standard_symplectic(genus)
    n = 2 * genus
    r = scheme.r
    gens = {e: ctx.generator(*e) for e in scheme.edges}
    zero = Fraction(0)
    theta = [[zero] * (n * r) for _ in range(n * r)]
    for (a, b), x in gens.items():
        for l in range(n):
            for m in range(n):
                if J[l][m]:
                    val = character_value(chi, x * J[l][m])
                    theta[(a - 1) * n + l][(b - 1) * n + m] = val
                    theta[(b - 1) * n + l][(a - 1) * n + m] = val
    return NCTorusParams(genus, r, tuple(map(tuple, theta)), chi)


def two_colour_theta(j: int, k: int, genus: int) -> list[list[Fraction]]:
    """Closed form (j/k)(1 - δ_{λλ'}) J_{ℓℓ'} mod 1 for the single-edge graph."""
    J = standard_symplectic(genus)
    n = 2 * genus
    out = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for lam in range(2):
        for lam2 in range(2):
            if lam == lam2:
                continue
            for l in range(n):
                for m in range(n):
                    out[lam * n + l][lam2 * n + m] = (Fraction(j, k) * J[l][m]) % 1
    return out


# ---------------------------------------------------------------------------
# projectors in the group algebra of Z_k


def _circulant(x: np.ndarray) -> np.ndarray:
    """Matrix of multiplication by x in C[Z_k]: C[i, j] = x[(i - j) mod k]."""
    k = len(x)
    idx = (np.arange(k)[:, None] - np.arange(k)[None, :]) % k
    return x[idx]


def _convolve(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return _circulant(x) @ y


def projectors(k: int) -> list[np.ndarray]:
    """β_j = (1/k) Σ_i conj(ζ)^{ij} β^i as coefficient vectors over Z_k."""
    i = np.arange(k)
    return [np.exp(-2j * np.pi * i * j / k) / k for j in range(k)]


@dataclass(frozen=True)
class ProjectorReport:
    k: int
    idempotent_error: float
    orthogonality_error: float
    completeness_error: float
    tolerance: float

    @property
    def ok(self) -> bool:
        return max(self.idempotent_error, self.orthogonality_error, self.completeness_error) <= self.tolerance


def verify_projectors(k: int, tolerance: float = 1e-12) -> ProjectorReport:
    if k < 1:
        raise ValueError("k must be positive")
    P = np.array(projectors(k))
    e = np.zeros(k, dtype=complex)
    e[0] = 1
    C = np.stack([_circulant(p) for p in P])
    prods = np.einsum("aij,bj->abi", C, P)
    diag = np.arange(k)
    idem = np.max(np.abs(prods[diag, diag] - P))
    off = prods.copy()
    off[diag, diag] = 0
    orth = np.max(np.abs(off))
    comp = np.max(np.abs(P.sum(axis=0) - e))
    return ProjectorReport(k, float(idem), float(orth), float(comp), tolerance)
