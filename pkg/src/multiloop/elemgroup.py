"""Relative root elements, unipotent factorization, commutator extraction,
and the series factorization engine E(A((t))) = E(A[[t]]) E(A[t,1/t]).

Elements are square matrices acting on a graded algebra's basis over a
coefficient ring from the scalar tower.  An element congruent to the
identity modulo t^N is treated as the identity by the engine; certificates
record the precision actually achieved.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .grading import (GradedLieAlgebra, RelativeGrading, GradingError,
                      irreducible_components)
from .scalars import TruncSeries, DomainSeries, series_split


class ElementError(ValueError):
    pass


class PrecisionExhausted(ElementError):
    pass


class RankOneComponent(ElementError):
    pass


@dataclass
class RootElementWord:
    letters: list                 # (root tuple, param vector over the ring)
    ring_tag: str = "series"

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)


@dataclass
class ElementMatrix:
    matrix: list
    ring: object
    precision: object = None      # None for exact

    def mul(self, other) -> "ElementMatrix":
        prec = _pmin(self.precision, other.precision)
        return ElementMatrix(linalg.mat_mul(self.ring, self.matrix,
                                            other.matrix), self.ring, prec)

    def apply(self, v):
        return linalg.mat_vec(self.ring, self.matrix, v)


def _pmin(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _param_is_zero(v):
    return not any(v)


def _check_homogeneous(g: GradedLieAlgebra, alpha, v):
    allowed = set(g.piece(qdeg=alpha))
    for i, x in enumerate(v):
        if x and i not in allowed:
            raise ElementError(
                "parameter is not homogeneous of degree %s (index %d)" %
                (alpha, i))


def ad_matrix_graded(g: GradedLieAlgebra, R, v):
    """ad_v over the coefficient ring, structure constants lifted from the
    base field."""
    d = g.dim
    M = [[R.zero()] * d for _ in range(d)]
    for i, xi in enumerate(v):
        if not xi:
            continue
        for j in range(d):
            for k, c in g.bracket_coords(i, j):
                M[k][j] = M[k][j] + xi * R.lift(c)
    return M


def root_element(rg: RelativeGrading, R, alpha, v,
                 precision=None) -> ElementMatrix:
    """exp(ad_v) for a parameter v supported on the alpha root piece."""
    g = rg.algebra
    alpha = tuple(alpha)
    if alpha not in set(rg.roots):
        raise ElementError("%s is not a relative root" % (alpha,))
    _check_homogeneous(g, alpha, v)
    ad = ad_matrix_graded(g, R, v)
    out = linalg.identity(R, g.dim)
    term = ad
    i = 1
    while any(any(x for x in row) for row in term):
        out = linalg.mat_add(out, term)
        i += 1
        if i > g.dim + 1:
            raise ElementError("ad_v is not nilpotent")
        term = linalg.mat_scale(linalg.mat_mul(R, term, ad), Fraction(1, i))
    return ElementMatrix(out, R, precision)


def word_matrix(rg: RelativeGrading, R, word, precision=None) -> ElementMatrix:
    out = ElementMatrix(linalg.identity(R, rg.algebra.dim), R, precision)
    for alpha, v in word:
        out = out.mul(root_element(rg, R, alpha, v, precision))
    return out


def word_inverse(word: RootElementWord) -> RootElementWord:
    letters = [(alpha, [-x for x in v]) for alpha, v in reversed(word.letters)]
    return RootElementWord(letters, word.ring_tag)


# ---------------------------------------------------------------------------
# unipotent factorization

def _positivity_functional(rg, alpha, beta):
    """A rational functional positive on both roots (they must not be
    opposite-proportional)."""
    sys = rg.system
    aa = sys.inner(alpha, alpha)
    bb = sys.inner(beta, beta)
    ab = sys.inner(alpha, beta)
    if ab >= 0:
        w = [Fraction(a) / aa + Fraction(b) / bb
             for a, b in zip(alpha, beta)]
    else:
        disc = aa * bb - ab * ab
        if disc <= 0:
            raise ElementError(
                "roots %s, %s are opposite-proportional" % (alpha, beta))
        delta = disc / (2 * abs(ab))
        w = [bb * Fraction(a) + (-ab + delta) * Fraction(b)
             for a, b in zip(alpha, beta)]
    # w is used through the inner product with the root coordinates
    return lambda x: sum(Fraction(c) * wc for c, wc in zip(x, w))


def closed_cone(rg, alpha, beta, min_total=1):
    """Roots of the form i*alpha + j*beta with i, j >= 0, i + j >= min_total."""
    out = set()
    bound = 6
    for i in range(bound):
        for j in range(bound):
            if i + j < min_total or (i == 0 and j == 0):
                continue
            cand = tuple(i * a + j * b for a, b in zip(alpha, beta))
            if cand in rg.system.root_set:
                out.add(cand)
    return sorted(out)


def multiples_above(rg, alpha):
    """Roots i*alpha with i >= 2."""
    out = []
    for i in range(2, 5):
        cand = tuple(i * a for a in alpha)
        if cand in rg.system.root_set:
            out.append(cand)
    return out


def _shift_pairs(g, gamma):
    """Basis index pairs (k, j) with qdeg_k = qdeg_j + gamma."""
    pairs = []
    for j, ej in enumerate(g.entries):
        target_q = tuple(a + b for a, b in zip(ej.qdeg, gamma))
        for k, ek in enumerate(g.entries):
            if ek.qdeg == target_q:
                pairs.append((k, j))
    return pairs


def _peel_data(rg, gamma):
    """Left inverse (over the base field) of the map v -> ad_v restricted to
    the gamma-shift blocks, plus the block index pairs."""
    cache = getattr(rg, "_peel_cache", None)
    if cache is None:
        cache = {}
        object.__setattr__(rg, "_peel_cache", cache)
    if gamma in cache:
        return cache[gamma]
    g = rg.algebra
    dom = g.dom
    idxs = g.piece(qdeg=gamma)
    if not idxs:
        raise ElementError("empty piece at %s" % (gamma,))
    pairs = _shift_pairs(g, gamma)
    cols = []
    for p in idxs:
        col = []
        for (k, j) in pairs:
            c = dom.zero()
            for kk, cc in g.bracket_coords(p, j):
                if kk == k:
                    c = c + cc
            col.append(c)
        cols.append(col)
    A = [[cols[t][r] for t in range(len(idxs))] for r in range(len(pairs))]
    L = linalg.left_inverse_coords(dom, A)
    cache[gamma] = (idxs, pairs, L)
    return idxs, pairs, L


def unipotent_factor(rg: RelativeGrading, R, u: ElementMatrix, psi,
                     keyfunc=None):
    """Factor a unipotent element as an ordered product over the closed set
    psi, peeling minimal components first.  Returns [(gamma, v_gamma)]."""
    g = rg.algebra
    if keyfunc is None:
        keyfunc = lambda gamma: (rg.data.height(gamma), gamma)
    order = sorted((tuple(x) for x in psi), key=keyfunc)
    cur = u.matrix
    out = []
    for gamma in order:
        idxs, pairs, L = _peel_data(rg, gamma)
        rhs = [cur[k][j] - (R.one() if k == j else R.zero())
               for (k, j) in pairs]
        coords = []
        for row in L:
            acc = R.zero()
            for c, x in zip(row, rhs):
                if c and x:
                    acc = acc + x * c
            coords.append(acc)
        v = [R.zero()] * g.dim
        for p, c in zip(idxs, coords):
            v[p] = c
        if _param_is_zero(v):
            continue
        out.append((gamma, v))
        inv = root_element(rg, R, gamma, [-x for x in v])
        cur = linalg.mat_mul(R, inv.matrix, cur)
    ident = linalg.identity(R, g.dim)
    for i in range(g.dim):
        for j in range(g.dim):
            d = cur[i][j] - ident[i][j]
            if d and not _congruent_zero(d, u.precision):
                raise ElementError(
                    "element is not unipotent over psi: residual at "
                    "block (%d,%d)" % (i, j))
    return out


def _congruent_zero(x, precision):
    if isinstance(x, TruncSeries):
        if not x.coeffs:
            return True
        if precision is not None and x.low >= precision:
            return True
        return False
    return not x


def extract_q_maps(rg: RelativeGrading, R, alpha, v, w):
    """Corrections in X_a(v) X_a(w) = X_a(v+w) prod_{i>1} X_{ia}(q_i)."""
    alpha = tuple(alpha)
    higher = multiples_above(rg, alpha)
    lhs = root_element(rg, R, alpha, v).mul(root_element(rg, R, alpha, w))
    base = root_element(rg, R, alpha, [a + b for a, b in zip(v, w)])
    if not higher:
        if not _matrices_agree(R, lhs.matrix, base.matrix, lhs.precision):
            raise ElementError("additivity fails for a non-multipliable root")
        return []
    inv = root_element(rg, R, alpha, [-(a + b) for a, b in zip(v, w)])
    rem = ElementMatrix(linalg.mat_mul(R, inv.matrix, lhs.matrix), R,
                        lhs.precision)
    f = _positivity_functional(rg, alpha, alpha)
    corrections = unipotent_factor(rg, R, rem, higher,
                                   keyfunc=lambda gam: (f(gam), gam))
    # verify by rebuilding the product
    check = base
    for gam, q in corrections:
        check = check.mul(root_element(rg, R, gam, q))
    if not _matrices_agree(R, lhs.matrix, check.matrix, lhs.precision):
        raise ElementError("correction verification failed")
    return corrections


def _matrices_agree(R, A, B, precision=None):
    for ra, rb in zip(A, B):
        for a, b in zip(ra, rb):
            d = a - b
            if d and not _congruent_zero(d, precision):
                return False
    return True


def commutator_table(rg: RelativeGrading, R, alpha, beta, u, v):
    """[X_a(u), X_b(v)] as an ordered product over the open cone
    {i a + j b : i, j >= 1}."""
    alpha, beta = tuple(alpha), tuple(beta)
    for m in range(1, 5):
        for k in range(1, 5):
            if all(m * a == -k * b for a, b in zip(alpha, beta)):
                raise ElementError(
                    "opposite proportional roots %s, %s" % (alpha, beta))
    xa = root_element(rg, R, alpha, u)
    xb = root_element(rg, R, beta, v)
    xai = root_element(rg, R, alpha, [-x for x in u])
    xbi = root_element(rg, R, beta, [-x for x in v])
    comm = xa.mul(xb).mul(xai).mul(xbi)
    if alpha == beta or _proportional(alpha, beta):
        psi = sorted(set(multiples_above(rg, alpha))
                     | set(multiples_above(rg, beta)))
    else:
        psi = [gam for gam in closed_cone(rg, alpha, beta, min_total=2)
               if _cone_coeffs(alpha, beta, gam) is not None]
    f = _positivity_functional(rg, alpha, beta)
    factors = unipotent_factor(rg, R, comm, psi,
                               keyfunc=lambda gam: (f(gam), gam))
    check = ElementMatrix(linalg.identity(R, rg.algebra.dim), R, comm.precision)
    for gam, w in factors:
        check = check.mul(root_element(rg, R, gam, w))
    if not _matrices_agree(R, comm.matrix, check.matrix, comm.precision):
        raise ElementError("commutator factorization failed verification")
    return factors


def _proportional(alpha, beta):
    from .lietorus import _proportionality
    return _proportionality(alpha, beta) is not None


def _cone_coeffs(alpha, beta, gamma):
    """Integers (i, j), i,j >= 1, with gamma = i alpha + j beta, or None."""
    for i in range(1, 6):
        for j in range(1, 6):
            if all(i * a + j * b == c for a, b, c in zip(alpha, beta, gamma)):
                return (i, j)
    return None


def torus_conjugate(rg: RelativeGrading, R, s, letter, verify=True):
    """Conjugation of X_alpha(v) by the grading torus point s (one unit per
    q-lattice coordinate) replaces v by alpha(s) v."""
    alpha, v = letter
    alpha = tuple(alpha)
    g = rg.algebra
    s = list(s)
    sinv = [R.inv(x) for x in s]
    weight = R.one()
    for a, x, xi in zip(alpha, s, sinv):
        base = x if a > 0 else xi
        for _ in range(abs(a)):
            weight = weight * base
    new_v = [weight * x for x in v]
    if verify:
        diag = [[R.zero()] * g.dim for _ in range(g.dim)]
        for i, e in enumerate(g.entries):
            c = R.one()
            for a, x, xi in zip(e.qdeg, s, sinv):
                base = x if a > 0 else xi
                for _ in range(abs(a)):
                    c = c * base
            diag[i][i] = c
        diag_inv = [[R.zero()] * g.dim for _ in range(g.dim)]
        for i in range(g.dim):
            diag_inv[i][i] = R.inv(diag[i][i])
        lhs = linalg.mat_mul(R, diag, linalg.mat_mul(
            R, root_element(rg, R, alpha, v).matrix, diag_inv))
        rhs = root_element(rg, R, alpha, new_v).matrix
        if not _matrices_agree(R, lhs, rhs):
            raise ElementError("torus conjugation identity failed")
    return (alpha, new_v)


# ---------------------------------------------------------------------------
# the series factorization engine

@dataclass
class FactorizationCertificate:
    precision: int
    residual_identity: bool
    dropped: list = field(default_factory=list)   # (root, tail valuation)

    def serialize(self):
        lines = ["certificate precision=%d residual=%s" %
                 (self.precision, "identity" if self.residual_identity
                  else "nonzero")]
        for root, val in self.dropped:
            lines.append("dropped root=(%s) valuation>=%s" %
                         (",".join(map(str, root)), val))
        return "\n".join(lines)


def assert_factorable(rg: RelativeGrading):
    if rg.anisotropic:
        raise RankOneComponent("anisotropic grading: no relative roots")
    for comp in irreducible_components(rg.system):
        if comp["rank"] < 2:
            raise RankOneComponent(
                "irreducible component of rank %d at %s: the factorization "
                "method needs rank >= 2" % (comp["rank"], comp["roots"][0]))


def _split_param(v):
    """Coordinatewise series split; returns (laurent part, positive part)."""
    nonpos, positive = [], []
    for x in v:
        a, b = series_split(x)
        nonpos.append(a)
        positive.append(b)
    return nonpos, positive


def _expand_letter(rg, R, alpha, v, out):
    """Rewrite X_alpha(v) as a product of letters whose parameters are
    either positive-valuation series or exact Laurent polynomials."""
    nonpos, positive = _split_param(v)
    if _param_is_zero(nonpos):
        if not _param_is_zero(positive):
            out.append((alpha, positive))
        return
    if _param_is_zero(positive):
        out.append((alpha, nonpos))
        return
    out.append((alpha, positive))
    out.append((alpha, nonpos))
    higher = multiples_above(rg, alpha)
    if higher:
        # X(v) = X(pos) X(nonpos) C^{-1} with C supported on multiples
        lhs = root_element(rg, R, alpha, positive).mul(
            root_element(rg, R, alpha, nonpos))
        inv = root_element(rg, R, alpha, [-x for x in v])
        rem = ElementMatrix(linalg.mat_mul(R, inv.matrix, lhs.matrix), R,
                            lhs.precision)
        f = _positivity_functional(rg, alpha, alpha)
        for gam, q in unipotent_factor(rg, R, rem, higher,
                                       keyfunc=lambda g_: (f(g_), g_)):
            _expand_letter(rg, R, gam, [-x for x in q], out)


def _poly_truncate(v):
    """Split v into (known polynomial part, tail valuation or None)."""
    poly, tail_val = [], None
    for x in v:
        if x.prec is None:
            poly.append(x)
        else:
            kept = [c for c in x.coeffs]
            poly.append(TruncSeries(x.base, x.low, None, kept))
            if tail_val is None or x.prec < tail_val:
                tail_val = x.prec
    return poly, tail_val


def factor_loop_series(rg: RelativeGrading, R, word: RootElementWord,
                       N: int):
    """Factor a word over A((t)) at precision N as g1 (series parameters of
    valuation >= 0) times g2 (Laurent polynomial parameters)."""
    assert_factorable(rg)
    expanded = []
    for alpha, v in word:
        _expand_letter(rg, R, tuple(alpha), [R.lift(x) for x in v], expanded)
    g1, g2, dropped = [], [], []
    for alpha, v in expanded:
        vals = [x.valuation() for x in v if x.coeffs]
        minval = min(vals) if vals else 0
        exact = all(x.prec is None for x in v)
        if not g2:
            if minval >= 0:
                g1.append((alpha, v))
            else:
                # negative parts are exact Laurent polynomials by the split
                g2.append((alpha, v))
            continue
        if exact:
            g2.append((alpha, v))
            continue
        poly, tail_val = _poly_truncate(v)
        if not _param_is_zero(poly):
            g2.append((alpha, poly))
        if tail_val is not None:
            dropped.append((alpha, tail_val))
    g1w = RootElementWord(g1, "series")
    g2w = RootElementWord(g2, "laurent")
    cert = _verify_factorization(rg, R, word, g1w, g2w, N, dropped)
    return g1w, g2w, cert


def _verify_factorization(rg, R, word, g1w, g2w, N, dropped):
    W = word_matrix(rg, R, word)
    combined = RootElementWord(list(g1w.letters) + list(g2w.letters))
    inv = word_inverse(combined)
    res = word_matrix(rg, R, inv).mul(W)
    achieved = None
    ok = True
    d = rg.algebra.dim
    for i in range(d):
        for j in range(d):
            x = res.matrix[i][j] - (R.one() if i == j else R.zero())
            if isinstance(x, TruncSeries):
                if x.coeffs:
                    ok = False
                    achieved = _pmin(achieved, x.low)
                if x.prec is not None:
                    achieved = _pmin(achieved, x.prec)
            elif x:
                ok = False
                achieved = 0
    if achieved is None:
        return FactorizationCertificate(N, True, dropped)
    if achieved < N:
        raise PrecisionExhausted(
            "factorization certified only modulo t^%d < t^%d; rerun with "
            "larger precision" % (achieved, N))
    return FactorizationCertificate(min(N, achieved), ok or achieved >= N,
                                    dropped)


def depth_bound(rg: RelativeGrading, M: int, n_exp) -> int:
    """Sufficient depth N >= 3 (M + |Phi| * |n|) for the conjugation check."""
    weight = sum(abs(x) for x in ([n_exp] if isinstance(n_exp, int) else n_exp))
    return 3 * (M + len(rg.roots) * weight)


def depth_conjugation_check(rg: RelativeGrading, R, alpha, n_exp, u, N, M,
                            samples) -> bool:
    """Conjugates of depth-N generators by X_alpha(t^n u) must be congruent
    to the identity modulo t^M."""
    alpha = tuple(alpha)
    tpow = R.t(n_exp)
    param = [x * tpow for x in u]
    x_mat = root_element(rg, R, alpha, param)
    x_inv = root_element(rg, R, alpha, [-x for x in param])
    for beta, w in samples:
        deep = [c * R.t(N) for c in w]
        gmat = root_element(rg, R, tuple(beta), deep)
        conj = x_mat.mul(gmat).mul(x_inv)
        d = rg.algebra.dim
        for i in range(d):
            for j in range(d):
                x = conj.matrix[i][j] - (R.one() if i == j else R.zero())
                if isinstance(x, TruncSeries):
                    if x.coeffs and x.low < M:
                        return False
                elif x:
                    return False
    return True


# ---------------------------------------------------------------------------
# serialization of words

def word_show(rg, R, word: RootElementWord) -> str:
    lines = ["word ring=%s letters=%d" % (word.ring_tag, len(word))]
    g = rg.algebra
    for alpha, v in word:
        idxs = g.piece(qdeg=tuple(alpha))
        vals = ";".join(R.show(v[i]) for i in idxs)
        lines.append("X (%s) [%s]" % (",".join(map(str, alpha)), vals))
    return "\n".join(lines)


def word_parse(rg, R, text: str) -> RootElementWord:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    head = lines[0].split()
    if not head or head[0] != "word":
        raise ElementError("bad word header: %r" % lines[0])
    tag = "series"
    for part in head[1:]:
        if part.startswith("ring="):
            tag = part[5:]
    g = rg.algebra
    letters = []
    for ln in lines[1:]:
        ln = ln.strip()
        if not ln.startswith("X "):
            raise ElementError("bad word line: %r" % ln)
        body = ln[2:].strip()
        rt_end = body.index(")")
        alpha = tuple(int(x) for x in body[1:rt_end].split(","))
        rest = body[rt_end + 1:].strip()
        if not (rest.startswith("[") and rest.endswith("]")):
            raise ElementError("bad parameter block: %r" % rest)
        vals = [R.parse(p) for p in rest[1:-1].split(";")] if rest != "[]" \
            else []
        idxs = g.piece(qdeg=alpha)
        if len(vals) != len(idxs):
            raise ElementError("parameter count mismatch on root %s" % (alpha,))
        v = [R.zero()] * g.dim
        for i, val in zip(idxs, vals):
            v[i] = val
        letters.append((alpha, v))
    return RootElementWord(letters, tag)
