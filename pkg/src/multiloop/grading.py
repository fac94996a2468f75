"""Z^n-gradings from commuting finite-order automorphisms, multiloop
assembly, torus-action refinements, and relative root extraction.

Lambda-degrees are stored in the rescaled lattice (exponent i/m becomes the
integer i) and only one period of degrees is kept; pieces at degrees
differing by m Z^n are canonically identified.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .chevalley import ChevalleyAlgebra, AlgebraAutomorphism
from .rootsys import (RootSystem, RootSystemError, RelativeRootData,
                      make_relative_system)
from .scalars import QQ, DomainCyclotomic, Cyclotomic


class GradingError(ValueError):
    pass


@dataclass
class MultiloopSpec:
    base: ChevalleyAlgebra
    sigma: list           # commuting AlgebraAutomorphism, each of order dividing m
    m: int

    @property
    def n(self):
        return len(self.sigma)


def eigen_domain(m: int):
    return QQ if m == 1 else DomainCyclotomic(m)


def verify_multiloop_spec(spec: MultiloopSpec):
    m = spec.m
    if m < 1:
        raise GradingError("order m must be positive")
    for j, s in enumerate(spec.sigma):
        cur = s.matrix
        for _ in range(m - 1):
            cur = linalg.mat_mul(s.dom, cur, s.matrix)
        if not linalg.is_identity(s.dom, cur):
            raise GradingError("sigma_%d does not have order dividing %d" % (j + 1, m))
    for i in range(len(spec.sigma)):
        for j in range(i + 1, len(spec.sigma)):
            if not spec.sigma[i].commutes_with(spec.sigma[j]):
                raise GradingError(
                    "sigma_%d and sigma_%d do not commute" % (i + 1, j + 1))


def simultaneous_eigenspaces(spec: MultiloopSpec):
    """Joint eigenspace decomposition; returns (domain, {lambda mod m: basis})."""
    verify_multiloop_spec(spec)
    m, n = spec.m, spec.n
    dom = eigen_domain(m)
    d = spec.base.dim
    zeta = dom.one() if m == 1 else Cyclotomic.root(m, 1)
    powers = [dom.one()]
    for _ in range(m - 1):
        powers.append(powers[-1] * zeta)
    mats = [[[dom.lift(x) for x in row] for row in s.matrix] for s in spec.sigma]
    out = {}
    total = 0
    for idx in itertools.product(range(m), repeat=n):
        rows = []
        for j in range(n):
            for i in range(d):
                row = list(mats[j][i])
                row[i] = row[i] - powers[idx[j]]
                rows.append(row)
        if rows:
            basis = linalg.kernel_basis(dom, rows)
        else:
            basis = [[dom.one() if i == t else dom.zero() for t in range(d)]
                     for i in range(d)]
        if basis:
            out[idx] = basis
            total += len(basis)
    if total != d:
        raise GradingError(
            "joint eigenspaces span %d of %d dimensions" % (total, d))
    return dom, out


@dataclass(frozen=True)
class GradedBasisVector:
    qdeg: tuple    # weight under the chosen torus, () before refinement
    lam: tuple     # lattice degree, one period stored
    vector: tuple  # coordinates in the ambient algebra


class GradedLieAlgebra:
    """A Lie algebra with a lattice grading of rank nvars (periodic modulo
    `period`) and an optional root-lattice grading by q-degrees."""

    def __init__(self, dom, nvars, period, entries, table, ambient_bracket=None,
                 check=True):
        self.dom = dom
        self.nvars = nvars
        self.period = period
        self.entries = list(entries)
        self.table = table
        self.ambient_bracket = ambient_bracket
        self.dim = len(self.entries)
        self.qrank = len(self.entries[0].qdeg) if self.entries else 0
        if check:
            self._verify_grading()

    def zero_lam(self):
        return (0,) * self.nvars

    def reduce_lam(self, lam):
        if self.nvars == 0:
            return ()
        return tuple(x % self.period for x in lam)

    def piece(self, qdeg=None, lam=None):
        out = []
        lam = None if lam is None else self.reduce_lam(lam)
        for i, e in enumerate(self.entries):
            if qdeg is not None and e.qdeg != tuple(qdeg):
                continue
            if lam is not None and e.lam != lam:
                continue
            out.append(i)
        return out

    def lam_keys(self):
        return sorted(set(e.lam for e in self.entries))

    def q_keys(self):
        return sorted(set(e.qdeg for e in self.entries))

    def dims_by_lam(self):
        out = {}
        for e in self.entries:
            out[e.lam] = out.get(e.lam, 0) + 1
        return out

    def bracket_coords(self, i, j):
        return self.table.get((i, j), [])

    def bracket(self, x, y):
        """Bracket of graded-coordinate vectors."""
        out = [self.dom.zero()] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                for k, c in self.table.get((i, j), ()):
                    out[k] = out[k] + xi * yj * c
        return out

    def _verify_grading(self):
        for (i, j), terms in self.table.items():
            ei, ej = self.entries[i], self.entries[j]
            lam = self.reduce_lam(tuple(a + b for a, b in zip(ei.lam, ej.lam)))
            q = tuple(a + b for a, b in zip(ei.qdeg, ej.qdeg))
            for k, c in terms:
                if not c:
                    continue
                ek = self.entries[k]
                if ek.lam != lam or ek.qdeg != q:
                    raise GradingError(
                        "bracket of pieces %s,%s escapes to %s" %
                        ((ei.qdeg, ei.lam), (ej.qdeg, ej.lam),
                         (ek.qdeg, ek.lam)))

    def serialize(self) -> str:
        lines = ["graded nvars=%d period=%d dim=%d" %
                 (self.nvars, self.period, self.dim)]
        for e in self.entries:
            lines.append("v q=(%s) lam=(%s)" %
                         (",".join(map(str, e.qdeg)),
                          ",".join(map(str, e.lam))))
        for (i, j) in sorted(self.table):
            for k, c in self.table[(i, j)]:
                lines.append("c %d %d %d %s" % (i, j, k, self.dom.show(c)))
        return "\n".join(lines)


def _build_table(dom, entries, nvars, period, ambient_bracket):
    """Structure constants in graded coordinates via per-piece coordinates."""
    pieces = {}
    for i, e in enumerate(entries):
        pieces.setdefault(e.lam, []).append(i)
    coords = {}
    for lam, idxs in pieces.items():
        cols = [entries[i].vector for i in idxs]
        M = [[cols[j][t] for j in range(len(idxs))] for t in range(len(cols[0]))]
        coords[lam] = (idxs, linalg.left_inverse_coords(dom, M), M)
    table = {}
    for i, ei in enumerate(entries):
        for j, ej in enumerate(entries):
            w = ambient_bracket(dom, list(ei.vector), list(ej.vector))
            if not any(w):
                continue
            lam = tuple((a + b) % period for a, b in zip(ei.lam, ej.lam)) \
                if nvars else ()
            if lam not in coords:
                raise GradingError("bracket lands in an empty piece %s" % (lam,))
            idxs, L, M = coords[lam]
            cs = linalg.mat_vec(dom, L, w)
            back = linalg.mat_vec(dom, M, cs)
            if any(a != b for a, b in zip(back, w)):
                raise GradingError("bracket escapes the graded span at %d,%d"
                                   % (i, j))
            terms = [(k, c) for k, c in zip(idxs, cs) if c]
            if terms:
                table[(i, j)] = terms
    return table


def build_multiloop(spec: MultiloopSpec) -> GradedLieAlgebra:
    dom, eig = simultaneous_eigenspaces(spec)
    entries = []
    for lam in sorted(eig):
        for v in eig[lam]:
            entries.append(GradedBasisVector((), tuple(lam), tuple(v)))
    alg = spec.base

    def ambient_bracket(d, x, y):
        return alg.bracket(d, x, y)

    table = _build_table(dom, entries, spec.n, spec.m, ambient_bracket)
    return GradedLieAlgebra(dom, spec.n, spec.m, entries, table,
                            ambient_bracket)


def from_chevalley(alg: ChevalleyAlgebra, dom=QQ) -> GradedLieAlgebra:
    """The split algebra itself as a bi-graded object with trivial lattice
    grading and q-degrees read off the full Cartan subalgebra."""
    entries = []
    for i in range(alg.dim):
        v = tuple(dom.one() if t == i else dom.zero() for t in range(alg.dim))
        entries.append(GradedBasisVector(alg.q_degree(i), (), v))
    table = {}
    for (i, j), terms in alg.table.items():
        table[(i, j)] = [(k, dom.from_int(c)) for k, c in terms]
    return GradedLieAlgebra(dom, 0, 1, entries, table,
                            lambda d, x, y: alg.bracket(d, x, y))


def q_grading_from_cartan(g: GradedLieAlgebra, cartan) -> GradedLieAlgebra:
    """Refine the lattice grading by simultaneous integer ad-eigenvalues of
    the given abelian subspace of the degree-0 piece."""
    if g.ambient_bracket is None:
        raise GradingError("algebra has no ambient model to refine")
    dom = g.dom
    cartan = [list(h) for h in cartan]
    for a in range(len(cartan)):
        for b in range(a + 1, len(cartan)):
            if any(g.ambient_bracket(dom, cartan[a], cartan[b])):
                raise GradingError("cartan choice is not abelian")
    zero = g.zero_lam()
    zspan = [list(g.entries[i].vector) for i in g.piece(lam=zero)]
    for h in cartan:
        if not _in_span(dom, zspan, h):
            raise GradingError("cartan element is not in the degree-0 piece")
    # refine each lattice piece into joint integer eigenspaces
    blocks = []
    for lam in g.lam_keys():
        basis = [list(g.entries[i].vector) for i in g.piece(lam=lam)]
        for qdeg, vs in _joint_integer_eigenspaces(dom, g, cartan, basis):
            blocks.append((qdeg, lam, vs))
    blocks.sort(key=lambda b: (b[1], b[0]))
    entries = []
    for qdeg, lam, vs in blocks:
        for v in vs:
            entries.append(GradedBasisVector(qdeg, lam, tuple(v)))
    table = _build_table(dom, entries, g.nvars, g.period, g.ambient_bracket)
    return GradedLieAlgebra(dom, g.nvars, g.period, entries, table,
                            g.ambient_bracket)


def _in_span(dom, span, v):
    if not span:
        return not any(v)
    M = [[span[j][t] for j in range(len(span))] for t in range(len(v))]
    return linalg.solve(dom, M, v) is not None


def _joint_integer_eigenspaces(dom, g, cartan, basis):
    """Recursively split a subspace by each cartan element; yields
    (eigenvalue tuple, vectors)."""
    spaces = [((), basis)]
    for h in cartan:
        nxt = []
        for prefix, vs in spaces:
            if not vs:
                continue
            M = [[vs[j][t] for j in range(len(vs))] for t in range(len(vs[0]))]
            L = linalg.left_inverse_coords(dom, M)
            cols = [linalg.mat_vec(dom, L, g.ambient_bracket(dom, h, v))
                    for v in vs]
            A = [[cols[j][i] for j in range(len(vs))] for i in range(len(vs))]
            found = 0
            bound = 4
            pieces = []
            while found < len(vs):
                pieces = []
                found = 0
                for c in range(-bound, bound + 1):
                    B = [[A[i][j] - (dom.from_int(c) if i == j else dom.zero())
                          for j in range(len(vs))] for i in range(len(vs))]
                    ker = linalg.kernel_basis(dom, B)
                    if ker:
                        vecs = [_combine(dom, vs, kv) for kv in ker]
                        pieces.append((c, vecs))
                        found += len(ker)
                if found < len(vs):
                    bound *= 2
                    if bound > 256:
                        raise GradingError(
                            "cartan action is not diagonalizable with integer "
                            "eigenvalues on a piece of dimension %d" % len(vs))
            for c, vecs in pieces:
                nxt.append((prefix + (c,), vecs))
        spaces = nxt
    return spaces


def _combine(dom, vs, coeffs):
    out = [dom.zero()] * len(vs[0])
    for c, v in zip(coeffs, vs):
        if c:
            for t, x in enumerate(v):
                if x:
                    out[t] = out[t] + c * x
    return out


@dataclass
class RelativeGrading:
    algebra: GradedLieAlgebra
    roots: list                      # sorted nonzero q-degrees with support
    system: object = None            # RootSystem over the roots, or None
    data: object = None              # RelativeRootData, or None

    @property
    def anisotropic(self):
        return not self.roots


def relative_roots(g: GradedLieAlgebra, functional=None) -> RelativeGrading:
    if g.qrank == 0:
        # refined by an empty cartan (or never refined): no nonzero weights
        return RelativeGrading(g, [])
    zero = (0,) * g.qrank
    roots = sorted(q for q in g.q_keys() if q != zero)
    if not roots:
        return RelativeGrading(g, [])
    system = make_relative_system(roots)
    data = RelativeRootData(system, functional)
    return RelativeGrading(g, roots, system, data)


def opposite_unipotent_pair(rg: RelativeGrading):
    if rg.anisotropic:
        raise GradingError("anisotropic: no proper parabolic")
    return list(rg.data.positive), list(rg.data.negative)


def irreducible_components(system: RootSystem):
    """Connected components of the non-orthogonality graph, with ranks."""
    roots = list(system.roots)
    parent = list(range(len(roots)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if system.inner(roots[i], roots[j]):
                parent[find(i)] = find(j)
    comps = {}
    for i, a in enumerate(roots):
        comps.setdefault(find(i), []).append(a)
    out = []
    for group in comps.values():
        M = [[Fraction(x) for x in a] for a in group]
        _, pivots, _ = linalg.rref(QQ, M)
        out.append({"roots": sorted(group), "rank": len(pivots)})
    out.sort(key=lambda c: c["roots"][0])
    return out


def component_rank_report(rg: RelativeGrading):
    if rg.anisotropic:
        return []
    return [(c["rank"], len(c["roots"])) for c in
            irreducible_components(rg.system)]


def twisted_form_dims_check(g: GradedLieAlgebra, base_dim: int) -> bool:
    """After base change along the degree-m cover the graded dimension
    sequence must match the untwisted loop algebra's: the piece dimensions
    over one period sum to dim L."""
    return sum(g.dims_by_lam().values()) == base_dim
