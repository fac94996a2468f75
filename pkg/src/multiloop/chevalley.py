"""Split simple Lie algebras over Z via Chevalley bases.

Structure constants are fixed by the extraspecial-pair convention: positive
roots are ordered by height then lexicographically; for each non-simple
positive root the minimal decomposition gets N = +(p+1), and every other
constant follows from antisymmetry, N(-a,-b) = -N(a,b), and the cyclic
identity N(a,b)/|c|^2 = N(b,c)/|a|^2 for a+b+c = 0.  The Jacobi identity is
verified exhaustively before an algebra is returned.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .rootsys import RootSystem, build_root_system, RootSystemError
from .scalars import QQ


class ChevalleyError(ValueError):
    pass


def _vadd(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _vneg(a):
    return tuple(-x for x in a)


class ChevalleyAlgebra:
    """Integer structure constants of a split simple Lie algebra on the basis
    e_delta (delta running over all roots) followed by h_1 .. h_rank."""

    def __init__(self, rs: RootSystem):
        if not rs.is_reduced():
            raise ChevalleyError("Chevalley basis requires a reduced system")
        self.rs = rs
        self.rank = rs.rank
        pos = sorted((a for a in rs.roots if _height(rs, a) > 0),
                     key=lambda a: (_height(rs, a), a))
        self.positive = pos
        self.roots = pos + [_vneg(a) for a in pos]
        self.dim = len(self.roots) + rs.rank
        self.root_index = {a: i for i, a in enumerate(self.roots)}
        self._pos_order = {a: i for i, a in enumerate(pos)}
        self._npos = {}
        self._compute_positive_constants()
        self.table = self._build_table()
        self._verify_jacobi()

    # -- structure constants --------------------------------------------------

    def _p(self, a, b):
        """Largest k with b - k a a root."""
        k = 0
        cur = _vsub(b, a)
        while cur in self.rs.root_set:
            k += 1
            cur = _vsub(cur, a)
        return k

    def _len2(self, a):
        return self.rs.inner(a, a)

    def _compute_positive_constants(self):
        by_height = {}
        for g in self.positive:
            by_height.setdefault(_height(self.rs, g), []).append(g)
        for h in sorted(by_height):
            if h < 2:
                continue
            for g in by_height[h]:
                pairs = []
                for a in self.positive:
                    b = _vsub(g, a)
                    if b in self.rs.root_set and _height(self.rs, b) > 0 \
                            and self._pos_order[a] < self._pos_order[b]:
                        pairs.append((a, b))
                pairs.sort(key=lambda p: self._pos_order[p[0]])
                eps, eta = pairs[0]
                self._npos[(eps, eta)] = self._p(eps, eta) + 1
                for a, b in pairs[1:]:
                    self._npos[(a, b)] = self._special_constant(a, b, eps)

    def _special_constant(self, a, b, eps):
        g = _vadd(a, b)
        t2 = Fraction(0)
        bm = _vsub(b, eps)
        if bm in self.rs.root_set:
            t2 = Fraction(self._n(b, _vneg(eps)) * self._n(bm, a))
        t3 = Fraction(0)
        am = _vsub(a, eps)
        if am in self.rs.root_set:
            t3 = Fraction(self._n(_vneg(eps), a) * self._n(am, b))
        denom = self._n(g, _vneg(eps))
        val = -(t2 + t3) / denom
        if val.denominator != 1:
            raise ChevalleyError("non-integral structure constant at %s+%s" % (a, b))
        return int(val)

    def _n(self, a, b):
        """N(a, b) for arbitrary roots with a+b a root."""
        s = _vadd(a, b)
        assert s in self.rs.root_set
        ha, hb = _height(self.rs, a), _height(self.rs, b)
        if ha > 0 and hb > 0:
            if self._pos_order[a] < self._pos_order[b]:
                return self._npos[(a, b)]
            return -self._npos[(b, a)]
        if ha < 0 and hb < 0:
            return -self._n(_vneg(a), _vneg(b))
        # mixed signs; arrange a positive
        if ha < 0:
            return -self._n(b, a)
        if _height(self.rs, s) > 0:
            # N(a,b) = -(|s|^2/|a|^2) N(-b, s), a positive pair summing to a
            val = -Fraction(self._len2(s), self._len2(a)) * self._n(_vneg(b), s)
        else:
            # N(a,b) = -(|s|^2/|b|^2) N(a, -s), a positive pair summing to -b
            val = -Fraction(self._len2(s), self._len2(b)) * self._n(a, _vneg(s))
        if val.denominator != 1:
            raise ChevalleyError("non-integral constant for %s,%s" % (a, b))
        return int(val)

    def coroot_coeffs(self, a):
        """a^vee as an integer combination of the simple coroots."""
        out = []
        la = self._len2(a)
        for i, s in enumerate(self.rs.simple_roots):
            c = Fraction(a[i]) * self._len2(s) / la
            if c.denominator != 1:
                raise ChevalleyError("non-integral coroot for %s" % (a,))
            out.append(int(c))
        return out

    def _build_table(self):
        """Sparse bracket table: (i, j) -> list of (k, integer)."""
        table = {}
        nroots = len(self.roots)

        def put(i, j, k, c):
            if c:
                table.setdefault((i, j), []).append((k, c))

        for i, a in enumerate(self.roots):
            for j, b in enumerate(self.roots):
                if i == j:
                    continue
                s = _vadd(a, b)
                if all(x == 0 for x in s):
                    for t, c in enumerate(self.coroot_coeffs(a)):
                        put(i, j, nroots + t, c)
                elif s in self.rs.root_set:
                    put(i, j, self.root_index[s], self._n(a, b))
        for t in range(self.rank):
            ht = nroots + t
            simple = self.rs.simple_roots[t]
            for j, b in enumerate(self.roots):
                c = self.rs.pairing(b, simple)
                put(ht, j, j, c)
                put(j, ht, j, -c)
        for key in table:
            table[key].sort()
        return table

    # -- bracket and verification ---------------------------------------------

    def bracket_basis(self, i, j):
        return self.table.get((i, j), [])

    def bracket(self, dom, x, y):
        """Bracket of coefficient vectors over any domain."""
        out = [dom.zero()] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                for k, c in self.table.get((i, j), ()):
                    out[k] = out[k] + xi * yj * c
        return out

    def _verify_jacobi(self):
        d = self.dim
        basis = [[Fraction(1) if t == i else Fraction(0) for t in range(d)]
                 for i in range(d)]
        for i in range(d):
            for j in range(i + 1, d):
                bij = self.bracket(QQ, basis[i], basis[j])
                bji = self.bracket(QQ, basis[j], basis[i])
                if any(a + b for a, b in zip(bij, bji)):
                    raise ChevalleyError("antisymmetry fails at (%d,%d)" % (i, j))
                for k in range(j + 1, d):
                    t1 = self.bracket(QQ, bij, basis[k])
                    t2 = self.bracket(QQ, self.bracket(QQ, basis[j], basis[k]),
                                      basis[i])
                    t3 = self.bracket(QQ, self.bracket(QQ, basis[k], basis[i]),
                                      basis[j])
                    if any(a + b + c for a, b, c in zip(t1, t2, t3)):
                        raise ChevalleyError(
                            "Jacobi fails at triple (%d,%d,%d)" % (i, j, k))

    # -- helpers ---------------------------------------------------------------

    def basis_vector(self, dom, i):
        return [dom.one() if t == i else dom.zero() for t in range(self.dim)]

    def root_vector(self, dom, a):
        return self.basis_vector(dom, self.root_index[tuple(a)])

    def cartan_vector(self, dom, i):
        return self.basis_vector(dom, len(self.roots) + i)

    def q_degree(self, i):
        """Weight of basis vector i under the full Cartan: pairing vector with
        the simple coroots (zero for Cartan elements)."""
        if i >= len(self.roots):
            return (0,) * self.rank
        a = self.roots[i]
        return tuple(self.rs.pairing(a, s) for s in self.rs.simple_roots)

    def serialize(self) -> str:
        lines = ["chevalley %s%d dim=%d" % (self.rs.type_label, self.rs.rank,
                                            self.dim)]
        labels = ["e(%s)" % ",".join(map(str, a)) for a in self.roots] + \
                 ["h%d" % (i + 1) for i in range(self.rank)]
        lines.append("basis " + " ".join(labels))
        for (i, j) in sorted(self.table):
            for k, c in self.table[(i, j)]:
                lines.append("c %d %d %d %d" % (i, j, k, c))
        return "\n".join(lines)


def _height(rs, a):
    return sum(a)


def build_chevalley(rs) -> ChevalleyAlgebra:
    if isinstance(rs, str):
        raise TypeError("pass a RootSystem, not a label")
    return ChevalleyAlgebra(rs)


def build_chevalley_by_type(type_label: str, rank: int) -> ChevalleyAlgebra:
    return ChevalleyAlgebra(build_root_system(type_label, rank))


# ---------------------------------------------------------------------------
# automorphisms

class AlgebraAutomorphism:
    """An invertible bracket-preserving matrix acting on the Chevalley basis
    (or on any graded basis of the same dimension)."""

    def __init__(self, alg, dom, matrix, check=True):
        self.alg = alg
        self.dom = dom
        self.matrix = matrix
        if check:
            self.verify()

    def verify(self):
        dom, alg, M = self.dom, self.alg, self.matrix
        d = alg.dim
        cols = [[M[i][j] for i in range(d)] for j in range(d)]
        for i in range(d):
            for j in range(d):
                expected = [dom.zero()] * d
                for k, c in alg.bracket_basis(i, j):
                    for t in range(d):
                        if cols[k][t]:
                            expected[t] = expected[t] + cols[k][t] * c
                actual = alg.bracket(dom, cols[i], cols[j])
                if any(a != b for a, b in zip(actual, expected)):
                    raise ChevalleyError(
                        "bracket not preserved on basis pair (%d,%d)" % (i, j))

    def apply(self, v):
        return linalg.mat_vec(self.dom, self.matrix, v)

    def compose(self, other) -> "AlgebraAutomorphism":
        return AlgebraAutomorphism(
            self.alg, self.dom,
            linalg.mat_mul(self.dom, self.matrix, other.matrix), check=False)

    def inverse(self) -> "AlgebraAutomorphism":
        return AlgebraAutomorphism(
            self.alg, self.dom, linalg.matrix_inverse(self.dom, self.matrix),
            check=False)

    def order(self, bound=64):
        cur = self.matrix
        I = linalg.identity(self.dom, self.alg.dim)
        for k in range(1, bound + 1):
            if linalg.mat_eq(cur, I):
                return k
            cur = linalg.mat_mul(self.dom, cur, self.matrix)
        return None

    def is_identity(self):
        return linalg.is_identity(self.dom, self.matrix)

    def commutes_with(self, other) -> bool:
        ab = linalg.mat_mul(self.dom, self.matrix, other.matrix)
        ba = linalg.mat_mul(self.dom, other.matrix, self.matrix)
        return linalg.mat_eq(ab, ba)


def ad_matrix(dom, alg, x):
    """Matrix of ad_x on the Chevalley basis; column j is [x, b_j]."""
    d = alg.dim
    M = [[dom.zero()] * d for _ in range(d)]
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j in range(d):
            for k, c in alg.bracket_basis(i, j):
                M[k][j] = M[k][j] + xi * c
    return M


def exp_ad(dom, alg, v, check=True) -> AlgebraAutomorphism:
    """exp(ad_v) as an exact finite sum; v must be ad-nilpotent."""
    ad = ad_matrix(dom, alg, v)
    out = linalg.identity(dom, alg.dim)
    term = ad
    i = 1
    while any(any(x for x in row) for row in term):
        out = linalg.mat_add(out, term)
        i += 1
        if i > alg.dim + 1:
            raise ChevalleyError("ad_v is not nilpotent")
        term = linalg.mat_scale(linalg.mat_mul(dom, term, ad), Fraction(1, i))
    return AlgebraAutomorphism(alg, dom, out, check=check)


def torus_automorphism(alg, dom, weights) -> AlgebraAutomorphism:
    """Diagonal automorphism scaling e_gamma by prod w_i^(gamma_i); the w_i
    are units assigned to the simple roots."""
    weights = list(weights)
    inv = [dom.inv(w) for w in weights]
    d = alg.dim
    M = [[dom.zero()] * d for _ in range(d)]
    for i in range(d):
        if i < len(alg.roots):
            a = alg.roots[i]
            c = dom.one()
            for k, w, wi in zip(a, weights, inv):
                base = w if k > 0 else wi
                for _ in range(abs(k)):
                    c = c * base
            M[i][i] = c
        else:
            M[i][i] = dom.one()
    return AlgebraAutomorphism(alg, dom, M, check=False)


def automorphism_from_images(alg, dom, images, check=True) -> AlgebraAutomorphism:
    """Automorphism sending basis vector j to the given coefficient vector."""
    d = alg.dim
    M = [[images[j][i] for j in range(d)] for i in range(d)]
    return AlgebraAutomorphism(alg, dom, M, check=check)


def diagram_automorphism(alg, perm) -> AlgebraAutomorphism:
    """Automorphism induced by a Dynkin diagram symmetry.

    perm maps simple-root indices to simple-root indices; sign choices are
    searched so the result has the same order as perm.
    """
    rs = alg.rs
    r = alg.rank
    perm = list(perm)
    A = rs.cartan_pairings()
    for i in range(r):
        for j in range(r):
            if A[perm[i]][perm[j]] != A[i][j]:
                raise ChevalleyError("permutation is not a diagram symmetry")
    target_order = _perm_order(perm)
    for signs in _sign_vectors(r):
        auto = _extend_diagram(alg, perm, signs)
        if auto is not None and auto.order(bound=target_order) == target_order:
            return auto
    raise ChevalleyError("no consistent sign assignment found")


def _sign_vectors(r):
    for mask in range(1 << r):
        yield [1 - 2 * ((mask >> i) & 1) for i in range(r)]


def _perm_order(perm):
    k = 1
    cur = perm
    ident = list(range(len(perm)))
    while cur != ident:
        cur = [perm[i] for i in cur]
        k += 1
    return k


def _extend_diagram(alg, perm, signs):
    rs = alg.rs
    r = alg.rank
    # signed image scalar for every positive root, by height recursion
    img = {}
    for i in range(r):
        a = tuple(1 if t == i else 0 for t in range(r))
        b = tuple(1 if t == perm[i] else 0 for t in range(r))
        img[a] = (b, Fraction(signs[i]))
    for g in alg.positive:
        if g in img:
            continue
        # extraspecial decomposition (first valid split in positive order)
        for a in alg.positive:
            bmat = _vsub(g, a)
            if bmat in img and a in img and bmat in rs.root_set \
                    and _height(rs, bmat) > 0:
                (pa, ca), (pb, cb) = img[a], img[bmat]
                s = _vadd(pa, pb)
                if s not in rs.root_set:
                    return None
                val = ca * cb * Fraction(alg._n(pa, pb), alg._n(a, bmat))
                img[g] = (s, val)
                break
        else:
            return None
    d = alg.dim
    dom = QQ
    M = [[dom.zero()] * d for _ in range(d)]
    for g, (pg, c) in img.items():
        M[alg.root_index[pg]][alg.root_index[g]] = c
        M[alg.root_index[_vneg(pg)]][alg.root_index[_vneg(g)]] = 1 / c
    for i in range(r):
        src = len(alg.roots) + i
        dst = len(alg.roots) + perm[i]
        M[dst][src] = dom.one()
    try:
        return AlgebraAutomorphism(alg, dom, M, check=True)
    except ChevalleyError:
        return None


def inner_automorphism(alg, dom, letters) -> AlgebraAutomorphism:
    """Product of exp_ad letters and/or torus elements, left to right."""
    out = AlgebraAutomorphism(alg, dom, linalg.identity(dom, alg.dim),
                              check=False)
    for kind, payload in letters:
        if kind == "exp":
            out = out.compose(exp_ad(dom, alg, payload, check=False))
        elif kind == "torus":
            out = out.compose(torus_automorphism(alg, dom, payload))
        else:
            raise ChevalleyError("unknown letter kind %r" % (kind,))
    return out


def killing_form(alg):
    """Killing form on basis pairs, over Q."""
    d = alg.dim
    ads = [ad_matrix(QQ, alg, alg.basis_vector(QQ, i)) for i in range(d)]
    K = [[Fraction(0)] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            M = linalg.mat_mul(QQ, ads[i], ads[j])
            tr = sum(M[t][t] for t in range(d))
            K[i][j] = K[j][i] = tr
    return K
