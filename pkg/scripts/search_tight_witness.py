"""Search random SMTI instances for one where optimum / approx is exactly 3/2.

    python scripts/search_tight_witness.py --notion min --out tests/fixtures/tight_min.smti
"""
import argparse
from fractions import Fraction
from pathlib import Path

from tiekernel.formats import emit_smti
from tiekernel.generate import gen_random_smti
from tiekernel.smti import smti_to_instance
from tiekernel.stability import ratio_check


def search(notion: str, start_seed: int, tries: int, max_edges: int = 9, delta: Fraction = Fraction(1)):
    for seed in range(start_seed, start_seed + tries):
        men = 2 + seed % 3
        women = 2 + (seed // 3) % 3
        smti = gen_random_smti(seed, men, women, edge_prob=0.6, value_levels=(1, 2), max_edges=max_edges)
        if not smti.edges:
            continue
        ratio = ratio_check(smti_to_instance(smti, delta), notion)
        if ratio == Fraction(3, 2):
            return seed, smti
    return None


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--notion", default="min", choices=("min", "sum", "max"))
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--tries", type=int, default=20000)
    parser.add_argument("--delta", default="1")
    parser.add_argument("--out")
    args = parser.parse_args()
    found = search(args.notion, args.seed, args.tries, delta=Fraction(args.delta))
    if found is None:
        print("no witness found")
        return 1
    seed, smti = found
    print(f"witness at seed {seed}: {len(smti.edges)} edges")
    text = emit_smti(smti, Fraction(args.delta))
    print(text)
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(f"# ratio-3/2 witness for notion={args.notion}, search seed {seed}\n" + text)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
