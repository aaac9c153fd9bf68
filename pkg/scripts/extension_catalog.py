#!/usr/bin/env python3
"""Print the admissible clique-extension catalogs for small bounds.

Singles are listed for bounds 1..3, pairs and triples for bound 3; every
triple comes with the subdeterminant witness that rules it out.
"""

from deltamod import (enumerate_pair_extensions, enumerate_single_extensions,
                      refute_triple_extensions)


def main() -> None:
    for delta in (1, 2, 3):
        cols = enumerate_single_extensions(delta)
        print(f"single extensions, bound {delta}: {len(cols)}")
        for c in cols:
            print("   ", " ".join(f"{v:3d}" for v in c.reduced))

    pairs = enumerate_pair_extensions(3)
    print(f"\npair extensions, bound 3: {len(pairs)}")
    for p in pairs:
        print("   ", "; ".join(f"({x:2d},{y:2d})" for x, y in p.rows))

    refs = refute_triple_extensions(3)
    print(f"\ncandidate triples, bound 3: {len(refs)} (all refuted)")
    for t in refs:
        wit = t.witness
        rows = "; ".join("(" + ",".join(f"{v}" for v in r) + ")" for r in t.columns)
        print(f"    {rows}  |det| = {abs(wit.det_value)} at rows "
              f"{list(wit.row_indices)} cols {list(wit.col_indices)}")


if __name__ == "__main__":
    main()
