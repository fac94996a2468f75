"""Finite root systems, reduced and non-reduced, with Cartan data,
positivity, and heights.

Roots are stored as integer vectors of simple-root coordinates (for the
classified types) or as raw weight vectors (for relative systems read off
a torus grading).
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .scalars import QQ


class RootSystemError(ValueError):
    pass


def cartan_matrix(type_label: str, rank: int):
    """Cartan matrix with entries A[i][j] = <alpha_j, alpha_i^vee>,
    Bourbaki numbering."""
    t = type_label.upper()
    r = rank

    def chain(r):
        A = [[0] * r for _ in range(r)]
        for i in range(r):
            A[i][i] = 2
            if i + 1 < r:
                A[i][i + 1] = -1
                A[i + 1][i] = -1
        return A

    if t == "A" and r >= 1:
        return chain(r)
    if t == "B" and r >= 2:
        A = chain(r)
        A[r - 1][r - 2] = -2   # <alpha_{r-1}, alpha_r^vee>
        return A
    if t == "C" and r >= 2:
        A = chain(r)
        A[r - 2][r - 1] = -2
        return A
    if t == "D" and r >= 3:
        A = chain(r - 1)
        for row in A:
            row.append(0)
        A.append([0] * r)
        A[r - 1][r - 1] = 2
        A[r - 1][r - 3] = -1
        A[r - 3][r - 1] = -1
        A[r - 1][r - 2] = 0
        A[r - 2][r - 1] = 0
        return A
    if t == "E" and r in (6, 7, 8):
        A = chain(r - 1)
        for row in A:
            row.append(0)
        A.append([0] * r)
        A[r - 1][r - 1] = 2
        # node r attaches to node 3 (Bourbaki: alpha_2 is the branch node,
        # but a chain + one branch gives the same isomorphism type)
        A[r - 1][2] = -1
        A[2][r - 1] = -1
        return A
    if t == "F" and r == 4:
        A = chain(4)
        A[1][2] = -2
        A[2][1] = -1
        return A
    if t == "G" and r == 2:
        return [[2, -3], [-1, 2]]
    raise RootSystemError("invalid root system type %s%d" % (type_label, rank))


def _symmetrizer(A):
    """Rationals d_i with d_i A[i][j] = d_j A[j][i]; d encodes (a_i, a_i)/2."""
    r = len(A)
    d = [None] * r
    d[0] = Fraction(1)
    changed = True
    while changed:
        changed = False
        for i in range(r):
            if d[i] is None:
                continue
            for j in range(r):
                if i != j and A[i][j] and d[j] is None:
                    d[j] = d[i] * Fraction(A[i][j], A[j][i])
                    changed = True
    if any(x is None for x in d):
        raise RootSystemError("disconnected Dynkin diagram")
    return d


class RootSystem:
    """A finite set of roots in simple-root coordinates plus its bilinear form."""

    def __init__(self, type_label, rank, simple_roots, roots, gram):
        self.type_label = type_label
        self.rank = rank
        self.simple_roots = [tuple(s) for s in simple_roots]
        self.roots = sorted(tuple(x) for x in roots)
        self.root_set = set(self.roots)
        self.gram = [[Fraction(x) for x in row] for row in gram]

    # -- bilinear data -------------------------------------------------------

    def inner(self, a, b) -> Fraction:
        acc = Fraction(0)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    acc += ai * bj * self.gram[i][j]
        return acc

    def pairing(self, beta, alpha) -> int:
        """<beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)."""
        val = 2 * self.inner(beta, alpha) / self.inner(alpha, alpha)
        if val.denominator != 1:
            raise RootSystemError("non-integral pairing for %s, %s" % (beta, alpha))
        return int(val)

    def cartan_pairings(self):
        return [[self.pairing(b, a) for b in self.simple_roots]
                for a in self.simple_roots]

    # -- queries -------------------------------------------------------------

    def __contains__(self, v):
        return tuple(v) in self.root_set

    def is_reduced(self) -> bool:
        return all(tuple(2 * x for x in a) not in self.root_set for a in self.roots)

    def half(self, a):
        if all(x % 2 == 0 for x in a):
            h = tuple(x // 2 for x in a)
            if h in self.root_set:
                return h
        return None

    def serialize(self) -> str:
        body = " ".join("(%s)" % ",".join(map(str, a)) for a in self.roots)
        return "%s%d %s" % (self.type_label, self.rank, body)

    def __repr__(self):
        return "RootSystem(%s%d, %d roots)" % (self.type_label, self.rank,
                                               len(self.roots))


def _reflect(A, beta, i):
    """Simple reflection s_i in simple-root coordinates."""
    pairing = sum(beta[j] * A[i][j] for j in range(len(beta)))
    out = list(beta)
    out[i] -= pairing
    return tuple(out)


def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Construct the full root system by reflection closure (classified
    types) or explicitly (BC)."""
    t = type_label.upper()
    if t == "BC":
        return _build_bc(rank)
    A = cartan_matrix(t, rank)
    d = _symmetrizer(A)
    gram = [[d[i] * Fraction(A[i][j]) for j in range(rank)] for i in range(rank)]
    simples = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(rank):
                img = _reflect(A, beta, i)
                if img not in roots:
                    roots.add(img)
                    nxt.append(img)
        frontier = nxt
    return RootSystem(t, rank, simples, roots, gram)


def _build_bc(rank: int) -> RootSystem:
    if rank < 1:
        raise RootSystemError("invalid root system type BC%d" % rank)
    r = rank
    # ambient e_i expressed in the simple roots a_i = e_i - e_{i+1}, a_r = e_r
    def e(i):
        v = [0] * r
        for j in range(i, r):
            v[j] = 1
        return v

    roots = set()
    for i in range(r):
        for sign in (1, -1):
            roots.add(tuple(sign * x for x in e(i)))
            roots.add(tuple(2 * sign * x for x in e(i)))
        for j in range(i + 1, r):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [si * a + sj * b for a, b in zip(e(i), e(j))]
                    roots.add(tuple(v))
    simples = [tuple(1 if k == i else 0 for k in range(r)) for i in range(r)]
    # Gram matrix of the simple roots in the ambient dot product, with the
    # ambient e_i orthonormal: a_i = e_i - e_{i+1} for i < r, a_r = e_r
    def unit(i):
        return [1 if k == i else 0 for k in range(r)]

    simple_amb = []
    for i in range(r - 1):
        simple_amb.append([a - b for a, b in zip(unit(i), unit(i + 1))])
    simple_amb.append(unit(r - 1))
    gram = [[Fraction(sum(x * y for x, y in zip(u, v))) for v in simple_amb]
            for u in simple_amb]
    return RootSystem("BC", r, simples, roots, gram)


def indivisible_roots(rs: RootSystem):
    """Roots alpha with alpha/2 not a root."""
    return sorted(a for a in rs.roots if rs.half(a) is None)


def make_relative_system(weights) -> RootSystem:
    """Wrap a set of nonzero weight vectors (from a torus grading) as a root
    system labelled 'relative'; the standard dot product serves as Gram data."""
    weights = sorted(set(tuple(int(x) for x in w) for w in weights))
    if not weights:
        raise RootSystemError("empty weight set")
    dim = len(weights[0])
    gram = [[Fraction(1) if i == j else Fraction(0) for j in range(dim)]
            for i in range(dim)]
    # simple-root coordinates coincide with the raw weight coordinates here
    simples = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    return RootSystem("relative", dim, simples, weights, gram)


class RelativeRootData:
    """A root system with a chosen positivity functional and heights."""

    def __init__(self, system: RootSystem, functional=None):
        self.system = system
        dim = len(system.roots[0])
        if functional is None:
            functional = generic_functional(system.roots)
        self.functional = tuple(functional)
        for a in system.roots:
            if self._dot(a) == 0:
                raise RootSystemError(
                    "positivity functional vanishes on root %s" % (a,))
        self.positive = sorted(a for a in system.roots if self._dot(a) > 0)
        self.negative = sorted(a for a in system.roots if self._dot(a) < 0)
        self.simple = self._simple_roots()
        self._heights = self._compute_heights()

    def _dot(self, a):
        return sum(x * w for x, w in zip(a, self.functional))

    def _simple_roots(self):
        pos = set(self.positive)
        simple = []
        for a in self.positive:
            decomposable = any(
                tuple(x - y for x, y in zip(a, b)) in pos
                for b in self.positive if b != a and self._dot(b) < self._dot(a))
            if not decomposable:
                simple.append(a)
        return simple

    def _compute_heights(self):
        # coefficients of each positive root over the simple relative roots
        mat = [[Fraction(s[i]) for s in self.simple]
               for i in range(len(self.simple[0]))]
        heights = {}
        for a in self.positive:
            sol = linalg.solve(QQ, mat, [Fraction(x) for x in a])
            if sol is None:
                raise RootSystemError(
                    "root %s is not a combination of simple roots" % (a,))
            h = sum(sol)
            if h.denominator != 1:
                raise RootSystemError("non-integral height for %s" % (a,))
            heights[a] = int(h)
            heights[tuple(-x for x in a)] = -int(h)
        return heights

    def height_and_sign(self, root):
        root = tuple(root)
        if root not in self.system.root_set:
            raise RootSystemError("%s is not a root" % (root,))
        h = self._heights[root]
        return ("+" if h > 0 else "-"), h

    def height(self, root):
        return self._heights[tuple(root)]


def generic_functional(roots):
    """Lexicographically graded weights (M^(s-1), ..., M, 1) with M beyond
    every coordinate magnitude; induces a deterministic total preorder."""
    dim = len(next(iter(roots)))
    M = 1 + max(abs(x) for a in roots for x in a)
    return tuple(M ** (dim - 1 - i) for i in range(dim))
