"""Defining relators and a syntactic rewriting oracle for braid words.

Words are lists of (kind, i, j, exp) tuples rendered to text before
parsing, so nothing here touches the normal form code.
"""
from itertools import product

from dbraid.braid import standard_symplectic


def render(tokens):
    return " ".join(f"{k}[{i},{j}]^{e}" for k, i, j, e in tokens)


def inverse(tokens):
    return [(k, i, j, -e) for k, i, j, e in reversed(tokens)]


def relators(scheme, genus):
    """Every instance of the defining relations, as (label, tokens) pairs."""
    r, k = scheme.r, scheme.degrees
    J = standard_symplectic(genus)
    n = 2 * genus
    pairs = [(a, b) for a in range(1, r + 1) for b in range(1, r + 1) if a != b]
    out = []
    for (a, b), (c, d) in product(pairs, repeat=2):
        out.append(("i", [("b", a, b, 1), ("b", c, d, 1), ("b", a, b, -1), ("b", c, d, -1)]))
    for a, b in pairs:
        if not scheme.has_edge(a, b):
            out.append(("ii", [("b", a, b, 1)]))
        out.append(("iii", [("b", a, b, 1), ("b", b, a, -1)]))
    for lam in range(1, r + 1):
        out.append(("iv", [("b", lam, mu, k[mu - 1]) for mu in range(1, r + 1) if mu != lam]))
    for (a, b), nu, l in product(pairs, range(1, r + 1), range(1, n + 1)):
        out.append(("v", [("b", a, b, 1), ("a", nu, l, 1), ("b", a, b, -1), ("a", nu, l, -1)]))
    for lam, mu, l, m in product(range(1, r + 1), range(1, r + 1), range(1, n + 1), range(1, n + 1)):
        word = [("a", lam, l, 1), ("a", mu, m, 1), ("a", lam, l, -1), ("a", mu, m, -1)]
        if lam != mu and J[l - 1][m - 1]:
            word.append(("b", lam, mu, -J[l - 1][m - 1]))
        out.append(("vi", word))
    return out


def random_word(rng, scheme, genus, length):
    r, n = scheme.r, 2 * genus
    out = []
    for _ in range(length):
        e = rng.choice([-3, -2, -1, 1, 2, 3])
        if scheme.edges and (n == 0 or rng.random() < 0.3):
            a, b = rng.choice(scheme.edges)
            if rng.random() < 0.5:
                a, b = b, a
            out.append(("b", a, b, e))
        elif n:
            out.append(("a", rng.randint(1, r), rng.randint(1, n), e))
    return out


def rewrite(rng, tokens, scheme, genus, rels):
    """Apply one randomly chosen relation-preserving move."""
    w = list(tokens)
    J = standard_symplectic(genus)
    pos = rng.randint(0, len(w))
    move = rng.randrange(6)
    if move == 0 or len(w) < 2:
        _, R = rng.choice(rels)
        if rng.random() < 0.5:
            R = inverse(R)
        return w[:pos] + R + w[pos:]
    if move == 1:
        # conjugate of a relator
        _, R = rng.choice(rels)
        x = rng.choice(w)
        return w[:pos] + [x] + R + [(x[0], x[1], x[2], -x[3])] + w[pos:]
    if move == 2:
        # swap two adjacent letters using (i), (v) or (vi)
        p = rng.randrange(len(w) - 1)
        x, y = w[p], w[p + 1]
        extra = []
        if x[0] == "a" and y[0] == "a" and x[1] != y[1] and scheme.has_edge(x[1], y[1]):
            c = x[3] * y[3] * J[x[2] - 1][y[2] - 1]
            if c:
                extra = [("b", x[1], y[1], c)]
        return w[:p] + [y, x] + extra + w[p + 2 :]
    if move == 3:
        # split an exponent
        p = rng.randrange(len(w))
        k, i, j, e = w[p]
        e1 = rng.choice([x for x in range(-3, 4) if x not in (0, e)])
        return w[:p] + [(k, i, j, e1), (k, i, j, e - e1)] + w[p + 1 :]
    if move == 4:
        # flip the index order of a b-letter
        bs = [p for p, t in enumerate(w) if t[0] == "b"]
        if not bs:
            return w
        p = rng.choice(bs)
        k, i, j, e = w[p]
        return w[:p] + [(k, j, i, e)] + w[p + 1 :]
    x = rng.choice(w)
    return w[:pos] + [x, (x[0], x[1], x[2], -x[3])] + w[pos:]
