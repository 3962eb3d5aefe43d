"""Print the character table of G~S_n computed from the Gelfand-Tsetlin matrices."""

import argparse

from wreathrep.group_core import load_group
from wreathrep.gz_rep import char_table
from wreathrep.scalars import format_scalar


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--group", default="cyclic:2")
    ap.add_argument("--n", type=int, default=2)
    ap.add_argument("--form", default="seminormal", choices=("seminormal", "orthogonal"))
    args = ap.parse_args()
    G = load_group(args.group)
    table = char_table(args.n, G, args.form)
    print(f"{G.name} wr S_{args.n}, order {table['order']}, {len(table['classes'])} classes")
    print("class sizes:", [size for _, _, size in table["classes"]])
    for mu, row in zip(table["diagrams"], table["rows"]):
        print(f"{str(mu.to_json()):>32}  " + " ".join(f"{format_scalar(x):>6}" for x in row))


if __name__ == "__main__":
    main()
