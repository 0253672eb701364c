"""Oracle calls of approx_solve against ground-set size on random partition instances.

    python3 scripts/scaling.py --sizes 8 16 32 64 --seeds 5
"""
import argparse
import math

from tiekernel.extend import NOTIONS
from tiekernel.generate import gen_random
from tiekernel.stability import approx_solve


def slope(xs, ys):
    lx, ly = [math.log(x) for x in xs], [math.log(y) for y in ys]
    mx, my = sum(lx) / len(lx), sum(ly) / len(ly)
    return sum((a - mx) * (b - my) for a, b in zip(lx, ly)) / sum((a - mx) ** 2 for a in lx)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 32, 64])
    parser.add_argument("--seeds", type=int, default=5)
    parser.add_argument("--family", default="partition")
    args = parser.parse_args()
    print(f"{'notion':<6} " + " ".join(f"{n:>10}" for n in args.sizes) + "   slope")
    for notion in NOTIONS:
        means = []
        for n in args.sizes:
            calls = [approx_solve(gen_random(seed, n, args.family, args.family), notion).oracle_calls
                     for seed in range(args.seeds)]
            means.append(sum(calls) / len(calls))
        print(f"{notion:<6} " + " ".join(f"{m:>10.1f}" for m in means) + f"   {slope(args.sizes, means):.2f}")


if __name__ == "__main__":
    main()
