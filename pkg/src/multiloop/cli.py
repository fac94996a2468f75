"""Command line front end.

Exit codes: 0 success/pass, 1 usage error, 2 mathematical verdict "fail",
3 precision or budget exhaustion.  Reports are deterministic for a fixed
seed; timing goes to stderr only.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from dataclasses import dataclass, asdict
from fractions import Fraction

from . import linalg
from .chevalley import (build_chevalley_by_type, torus_automorphism,
                        diagram_automorphism, automorphism_from_images,
                        ChevalleyError, AlgebraAutomorphism)
from .rootsys import RootSystemError
from .grading import (MultiloopSpec, build_multiloop, q_grading_from_cartan,
                      relative_roots, from_chevalley, GradingError,
                      component_rank_report)
from .lietorus import lie_torus_check
from .elemgroup import (RootElementWord, factor_loop_series, word_parse,
                        word_show, word_matrix, depth_bound,
                        depth_conjugation_check, PrecisionExhausted,
                        RankOneComponent, ElementError)
from .cocycle import (trivial_group, cyclic_group, symmetric_group_3,
                      cover_group, trivial_action, galois_action,
                      h1_enumerate, DiagonalSetup, inf_res_sequence,
                      diagonal_argument, trivial_cocycle, Cocycle,
                      is_cocycle, BudgetExceeded, CocycleError)
from .scalars import QQ, DomainSeries, DomainLaurent, DomainCyclotomic


EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MATH = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class SessionConfig:
    precision: int = 8
    seed: int = 0
    conductor: int = 2
    budget_gamma: int = 96
    budget_coeff: int = 24
    fmt: str = "text"

    def validate(self):
        if self.precision < 2:
            raise UsageError("precision must be at least 2")


@dataclass
class ReportBundle:
    command: str
    config: dict
    results: dict

    def render(self, fmt: str) -> str:
        if fmt == "machine":
            return json.dumps({"command": self.command, "config": self.config,
                               "results": self.results},
                              sort_keys=True, default=str)
        lines = ["command: %s" % self.command]
        for k in sorted(self.config):
            lines.append("config %s=%s" % (k, self.config[k]))
        for k in sorted(self.results):
            v = self.results[k]
            if isinstance(v, str) and "\n" in v:
                lines.append("%s:" % k)
                lines.extend("  " + ln for ln in v.splitlines())
            else:
                lines.append("%s: %s" % (k, v))
        return "\n".join(lines)


def build_parser():
    p = _Parser(prog="multiloop", description=__doc__)
    p.add_argument("--precision", type=int,
                   default=int(os.environ.get("MULTILOOP_PRECISION", 8)))
    p.add_argument("--seed", type=int,
                   default=int(os.environ.get("MULTILOOP_SEED", 0)))
    p.add_argument("--conductor", type=int,
                   default=int(os.environ.get("MULTILOOP_CONDUCTOR", 2)))
    p.add_argument("--budget-gamma", type=int,
                   default=int(os.environ.get("MULTILOOP_BUDGET_GAMMA", 96)))
    p.add_argument("--budget-coeff", type=int,
                   default=int(os.environ.get("MULTILOOP_BUDGET_COEFF", 24)))
    p.add_argument("--format", choices=["text", "machine"],
                   default=os.environ.get("MULTILOOP_FORMAT", "text"))
    sub = p.add_subparsers(dest="cmd", required=True)

    pa = sub.add_parser("algebra")
    pa.add_argument("action", choices=["build"])
    pa.add_argument("type")
    pa.add_argument("rank", type=int)

    pm = sub.add_parser("grading")
    pm.add_argument("specfile")

    pl = sub.add_parser("lietorus")
    pl.add_argument("specfile")

    pf = sub.add_parser("factor")
    pf.add_argument("wordfile")
    pf.add_argument("--verify", metavar="REPORT", default=None)

    pd = sub.add_parser("depth")
    pd.add_argument("type")
    pd.add_argument("rank", type=int)
    pd.add_argument("--target-precision", type=int, default=1)
    pd.add_argument("--loop-degree", type=int, default=1)
    pd.add_argument("--samples", type=int, default=10)

    pc = sub.add_parser("cocycle")
    pc.add_argument("action", choices=["enumerate", "infres", "diagonal"])
    pc.add_argument("--n", type=int, default=1)
    pc.add_argument("--gamma0", choices=["trivial", "Z2", "Z3", "S3"],
                    default="trivial")
    pc.add_argument("--coeff", choices=["Z2", "Z3", "Z4", "Z2xZ2", "S3"],
                    default="Z2")
    pc.add_argument("--galois-inverts", action="store_true",
                    help="the Galois part acts on the coefficients and "
                         "translations by inversion")
    pc.add_argument("--discrepancy", type=int, default=0,
                    help="order of the constructed M-discrepancy between "
                         "eta1 and eta2 (diagonal only)")
    return p


# ---------------------------------------------------------------------------
# spec files

def parse_spec_file(text: str, conductor: int):
    """Build a multiloop spec plus cartan choice from its text description.

    Lines: "multiloop type=<T> rank=<r> n=<n> m=<m>", then one "sigma ..."
    per loop variable (torus w1..wr | diagram p1..pr | chevalley | identity),
    then optional "cartan h c1..cr" lines or "cartan full".
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("multiloop"):
        raise UsageError("spec line 1: expected 'multiloop ...'")
    head = dict(part.split("=", 1) for part in lines[0].split()[1:])
    try:
        tlabel = head["type"]
        rank = int(head["rank"])
        n = int(head["n"])
        m = int(head.get("m", conductor))
    except (KeyError, ValueError) as e:
        raise UsageError("spec line 1: %s" % e)
    alg = build_chevalley_by_type(tlabel, rank)
    sigmas = []
    cartan_rows = []
    cartan_full = False
    for lno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if parts[0] == "sigma":
            sigmas.append(_parse_sigma(alg, parts[1:], lno))
        elif parts[0] == "cartan":
            if parts[1:] == ["full"]:
                cartan_full = True
            elif parts[1] == "h":
                cartan_rows.append([Fraction(x) for x in parts[2:]])
            else:
                raise UsageError("spec line %d: bad cartan line" % lno)
        else:
            raise UsageError("spec line %d: unknown directive %r"
                             % (lno, parts[0]))
    if len(sigmas) != n:
        raise UsageError("spec declares n=%d but has %d sigma lines"
                         % (n, len(sigmas)))
    return alg, MultiloopSpec(alg, sigmas, m), cartan_rows, cartan_full


def _parse_sigma(alg, parts, lno):
    kind = parts[0] if parts else ""
    if kind == "identity":
        return torus_automorphism(alg, QQ, [Fraction(1)] * alg.rank)
    if kind == "torus":
        ws = [Fraction(x) for x in parts[1:]]
        if len(ws) != alg.rank:
            raise UsageError("spec line %d: torus needs %d weights"
                             % (lno, alg.rank))
        return torus_automorphism(alg, QQ, ws)
    if kind == "diagram":
        perm = [int(x) for x in parts[1:]]
        if sorted(perm) != list(range(alg.rank)):
            raise UsageError("spec line %d: bad permutation" % lno)
        return diagram_automorphism(alg, perm)
    if kind == "chevalley":
        return _chevalley_involution(alg)
    raise UsageError("spec line %d: unknown sigma kind %r" % (lno, kind))


def _chevalley_involution(alg) -> AlgebraAutomorphism:
    d = alg.dim
    imgs = []
    for i in range(d):
        v = [Fraction(0)] * d
        if i < len(alg.roots):
            j = alg.root_index[tuple(-x for x in alg.roots[i])]
            v[j] = Fraction(-1)
        else:
            v[i] = Fraction(-1)
        imgs.append(v)
    return automorphism_from_images(alg, QQ, imgs)


def _graded_from_spec(alg, spec, cartan_rows, cartan_full):
    g = build_multiloop(spec)
    dom = g.dom
    cartan = []
    rows = cartan_rows
    if cartan_full:
        rows = [[Fraction(1) if j == i else Fraction(0)
                 for j in range(alg.rank)] for i in range(alg.rank)]
    for row in rows:
        if len(row) != alg.rank:
            raise UsageError("cartan row needs %d coefficients" % alg.rank)
        h = [dom.zero()] * alg.dim
        for i, c in enumerate(row):
            h[len(alg.roots) + i] = dom.lift(c)
        cartan.append(h)
    return q_grading_from_cartan(g, cartan)


# ---------------------------------------------------------------------------
# word files

def parse_word_file(text: str):
    """Header lines "algebra <T> <r>" and "ground Q|laurent<k>", then a word
    block."""
    lines = text.splitlines()
    algline = groundline = None
    rest = []
    for ln in lines:
        s = ln.split("#", 1)[0].strip()
        if not s:
            continue
        if s.startswith("algebra "):
            algline = s.split()[1:]
        elif s.startswith("ground "):
            groundline = s.split()[1]
        else:
            rest.append(s)
    if algline is None or groundline is None:
        raise UsageError("word file needs 'algebra' and 'ground' headers")
    alg = build_chevalley_by_type(algline[0], int(algline[1]))
    rg = relative_roots(from_chevalley(alg))
    if groundline == "Q":
        base = QQ
    elif groundline.startswith("laurent"):
        base = DomainLaurent(int(groundline[len("laurent"):]), QQ)
    else:
        raise UsageError("unknown ground ring %r" % groundline)
    R = DomainSeries(base)
    word = word_parse(rg, R, "\n".join(rest))
    return rg, R, word, (algline[0], int(algline[1]), groundline)


def cmd_factor(cfg, args):
    text = _read(args.wordfile)
    rg, R, word, meta = parse_word_file(text)
    if args.verify:
        return _factor_verify(cfg, args, rg, R, word, meta)
    g1, g2, cert = factor_loop_series(rg, R, word, cfg.precision)
    results = {
        "algebra": "%s%d over %s" % meta,
        "input": word_show(rg, R, word),
        "g1": word_show(rg, R, g1),
        "g2": word_show(rg, R, g2),
        "certificate": cert.serialize(),
        "verdict": "pass",
    }
    return results, EXIT_OK


def _factor_verify(cfg, args, rg, R, word, meta):
    """Recompute the residual from a serialized factorization report."""
    report = _read(args.verify)
    blocks = {"g1": [], "g2": []}
    current = None
    for ln in report.splitlines():
        s = ln.strip()
        if s.startswith(("g1:", "g2:")):
            current = s[:2]
            tail = s[3:].strip()
            if tail:
                blocks[current].append(tail)
        elif current and (s.startswith("word") or s.startswith("X ")):
            blocks[current].append(s)
        elif s and not s.startswith(("word", "X ")):
            current = None
    g1 = word_parse(rg, R, "\n".join(blocks["g1"]))
    g2 = word_parse(rg, R, "\n".join(blocks["g2"]))
    combined = RootElementWord(list(g1.letters) + list(g2.letters))
    from .elemgroup import word_inverse
    res = word_matrix(rg, R, word_inverse(combined)).mul(
        word_matrix(rg, R, word))
    ok = True
    for i in range(rg.algebra.dim):
        for j in range(rg.algebra.dim):
            x = res.matrix[i][j] - (R.one() if i == j else R.zero())
            if hasattr(x, "coeffs"):
                if x.coeffs and x.low < cfg.precision:
                    ok = False
            elif x:
                ok = False
    results = {"replay": "residual congruent to identity mod t^%d: %s"
               % (cfg.precision, ok), "verdict": "pass" if ok else "fail"}
    return results, EXIT_OK if ok else EXIT_MATH


# ---------------------------------------------------------------------------
# subcommand drivers

def cmd_algebra(cfg, args):
    alg = build_chevalley_by_type(args.type, args.rank)
    return {"algebra": alg.serialize(), "dimension": alg.dim}, EXIT_OK


def cmd_grading(cfg, args):
    alg, spec, rows, full = parse_spec_file(_read(args.specfile),
                                            cfg.conductor)
    g = _graded_from_spec(alg, spec, rows, full)
    dims = g.dims_by_lam()
    table = "\n".join("(%s): %d" % (",".join(map(str, k)), v)
                      for k, v in sorted(dims.items()))
    return {"dimension-table": table, "graded": g.serialize()}, EXIT_OK


def cmd_lietorus(cfg, args):
    alg, spec, rows, full = parse_spec_file(_read(args.specfile),
                                            cfg.conductor)
    g = _graded_from_spec(alg, spec, rows, full)
    rep = lie_torus_check(g)
    return ({"report": rep.serialize(),
             "verdict": "pass" if rep.overall else "fail"},
            EXIT_OK if rep.overall else EXIT_MATH)


def cmd_depth(cfg, args):
    alg = build_chevalley_by_type(args.type, args.rank)
    rg = relative_roots(from_chevalley(alg))
    R = DomainSeries(QQ)
    M = args.target_precision
    n_exp = args.loop_degree
    N = depth_bound(rg, M, n_exp)
    rng = random.Random(cfg.seed)
    g = rg.algebra
    roots = rg.roots
    alpha = rg.data.simple[0]
    u = [R.zero()] * g.dim
    u[g.piece(qdeg=alpha)[0]] = R.from_int(rng.randint(1, 5))
    samples = []
    for _ in range(args.samples):
        beta = roots[rng.randrange(len(roots))]
        w = [R.zero()] * g.dim
        w[g.piece(qdeg=beta)[0]] = R.from_int(rng.randint(-5, 5) or 1)
        samples.append((beta, w))
    ok = depth_conjugation_check(rg, R, alpha, n_exp, u, N, M, samples)
    return ({"bound-N": N, "target-M": M, "samples": args.samples,
             "verdict": "pass" if ok else "fail"},
            EXIT_OK if ok else EXIT_MATH)


def _make_coeff_group(name):
    if name == "Z2":
        return cyclic_group(2)
    if name == "Z3":
        return cyclic_group(3)
    if name == "Z4":
        return cyclic_group(4)
    if name == "Z2xZ2":
        from .cocycle import direct_product
        return direct_product(cyclic_group(2), cyclic_group(2))
    if name == "S3":
        return symmetric_group_3()
    raise UsageError("unknown coefficient group %r" % name)


def _make_gamma0(name):
    if name == "trivial":
        return trivial_group()
    if name == "Z2":
        return cyclic_group(2)
    if name == "Z3":
        return cyclic_group(3)
    if name == "S3":
        return symmetric_group_3()
    raise UsageError("unknown Galois group %r" % name)


def _inversion_perm(A):
    return {a: A.inv(a) for a in A.elements}


def _cocycle_setup(cfg, args):
    gamma0 = _make_gamma0(args.gamma0)
    A = _make_coeff_group(args.coeff)
    m = cfg.conductor
    units = {}
    if args.galois_inverts:
        if args.gamma0 != "Z2":
            raise UsageError("--galois-inverts needs --gamma0 Z2")
        units = {1: m - 1}
    return gamma0, A, m, units


def cmd_cocycle(cfg, args):
    gamma0, A, m, units = _cocycle_setup(cfg, args)
    if args.action == "enumerate":
        cov = cover_group(args.n, m, gamma0, units)
        coeff = _action_for(cov, A, gamma0, args)
        reps, all_c = h1_enumerate(coeff, cfg.budget_gamma, cfg.budget_coeff)
        return {"classes": len(reps), "cocycles": len(all_c),
                "verdict": "pass"}, EXIT_OK
    setup = DiagonalSetup(args.n, m, gamma0, units)
    coeff = _action_for(setup.cover, A, gamma0, args)
    if args.action == "infres":
        rep = inf_res_sequence(setup, coeff, cfg.budget_gamma,
                               cfg.budget_coeff)
        code = EXIT_OK if rep["exact"] else EXIT_MATH
        rep = dict(rep)
        rep["verdict"] = "pass" if rep.pop("exact") else "fail"
        return rep, code
    # diagonal
    eta1 = trivial_cocycle(coeff)
    if args.discrepancy:
        k = args.discrepancy
        if m % k != 0:
            raise UsageError("discrepancy order must divide m")
        gen = _element_of_order(A, k)
        vals = {g: _power(A, gen, g[0][-1] % k)
                for g in setup.cover.elements}
        eta2 = Cocycle(coeff, vals)
        ok, wit = is_cocycle(eta2)
        if not ok:
            raise UsageError("constructed discrepancy is not a cocycle "
                             "(check the action) at %s" % (wit,))
    else:
        eta2 = eta1
    d, theta = diagonal_argument(setup, coeff, eta1, eta2)
    return {"power": d, "theta": theta.serialize(), "verdict": "pass"}, EXIT_OK


def _action_for(cov, A, gamma0, args):
    if args.galois_inverts:
        inv = _inversion_perm(A)
        ident = {a: a for a in A.elements}
        gact = {g: (inv if g not in (gamma0.identity,) else ident)
                for g in gamma0.elements}
        return galois_action(cov, A, gact)
    return trivial_action(cov, A)


def _element_of_order(A, k):
    for a in A.elements:
        cur, o = a, 1
        while cur != A.identity:
            cur = A.mul(cur, a)
            o += 1
        if o == k:
            return a
    raise UsageError("coefficient group has no element of order %d" % k)


def _power(A, a, k):
    out = A.identity
    for _ in range(k):
        out = A.mul(out, a)
    return out


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(str(e))


DISPATCH = {
    "algebra": cmd_algebra,
    "grading": cmd_grading,
    "lietorus": cmd_lietorus,
    "factor": cmd_factor,
    "depth": cmd_depth,
    "cocycle": cmd_cocycle,
}


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    t0 = time.monotonic()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = SessionConfig(precision=args.precision, seed=args.seed,
                            conductor=args.conductor,
                            budget_gamma=args.budget_gamma,
                            budget_coeff=args.budget_coeff, fmt=args.format)
        cfg.validate()
        results, code = DISPATCH[args.cmd](cfg, args)
    except UsageError as e:
        print("usage error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except (RootSystemError, ChevalleyError, GradingError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_USAGE
    except (PrecisionExhausted, BudgetExceeded) as e:
        print("exhausted: %s" % e, file=sys.stderr)
        return EXIT_BUDGET
    except (ElementError, CocycleError, RankOneComponent) as e:
        print("failed: %s" % e, file=sys.stderr)
        return EXIT_MATH
    bundle = ReportBundle(
        command=" ".join(argv),
        config={"precision": cfg.precision, "seed": cfg.seed,
                "conductor": cfg.conductor, "budget_gamma": cfg.budget_gamma,
                "budget_coeff": cfg.budget_coeff},
        results=results)
    print(bundle.render(cfg.fmt))
    print("elapsed %.3fs" % (time.monotonic() - t0), file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
