"""Factor random words over Q((t)) through the adjoint A2 grading and print
the resulting series/Laurent split with its certificate."""

import argparse
import random
from fractions import Fraction

from multiloop.chevalley import build_chevalley_by_type
from multiloop.grading import from_chevalley, relative_roots
from multiloop.elemgroup import RootElementWord, factor_loop_series, word_show
from multiloop.scalars import QQ, DomainSeries, TruncSeries


def random_word(rg, R, rng, max_letters=4):
    g = rg.algebra
    letters = []
    for _ in range(rng.randint(1, max_letters)):
        alpha = rg.roots[rng.randrange(len(rg.roots))]
        low = rng.randint(-3, 0)
        coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(4)]
        s = TruncSeries(QQ, low, None, coeffs)
        v = [R.zero()] * g.dim
        v[g.piece(qdeg=alpha)[0]] = s
        letters.append((alpha, v))
    return RootElementWord(letters)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=5)
    ap.add_argument("--precision", type=int, default=8)
    args = ap.parse_args()

    rg = relative_roots(from_chevalley(build_chevalley_by_type("A", 2)))
    R = DomainSeries(QQ)
    rng = random.Random(args.seed)
    for i in range(args.count):
        word = random_word(rg, R, rng)
        g1, g2, cert = factor_loop_series(rg, R, word, args.precision)
        print("== word %d ==" % i)
        print(word_show(rg, R, word))
        print(word_show(rg, R, g1))
        print(word_show(rg, R, g2))
        print(cert.serialize())


if __name__ == "__main__":
    main()
