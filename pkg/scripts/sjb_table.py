"""Print the symmetric Jordan basis of the subset lattice of [n] chain by chain."""

import argparse

from wreathrep.johnson import build_sjb, verify_ev


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("n", type=int)
    args = ap.parse_args()
    sjb = build_sjb(args.n)
    for chain in sjb:
        rows = [list(r) for r in chain.rows if r]
        print(f"tableau {rows}  ranks {chain.start}..{chain.end}")
        for k, v in enumerate(chain.vectors):
            print(f"  rank {chain.start + k}: {v!r}")
    print("eigenvalue check:", "ok" if verify_ev(sjb, args.n)["ok"] else "FAILED")


if __name__ == "__main__":
    main()
