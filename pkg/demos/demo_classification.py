"""When is the whole algebra a principal ideal ring?

Exactly when no cycle has an exit.  A cycle with an exit produces an
infinite family of nonzero pairwise orthogonal idempotents, and the partial
sums generate a strictly growing chain of ideals; without exits the cycle
behaves like an invertible shift and those idempotents all vanish.

Run:  python demos/demo_classification.py
"""

from leavitt import (Graph, LeavittAlgebra, QQ, cycles_and_exits,
                     format_element, psi)

graphs = {
    "pure 3-cycle": Graph.build(
        ["p", "q", "r"],
        [("a", "p", "q"), ("b", "q", "r"), ("d", "r", "p")]),
    "loop with exit": Graph.build(
        ["v", "w"], [("c", "v", "v"), ("f", "v", "w")]),
    "2-cycle with exit": Graph.build(
        ["p", "q", "z"],
        [("a", "p", "q"), ("b", "q", "p"), ("g", "q", "z")]),
}

for name, g in graphs.items():
    alg = LeavittAlgebra(g, QQ)
    print(name)
    verdict = True
    for c, exits in cycles_and_exits(g):
        fam = [psi(alg, c, i) for i in range(1, 4)]
        if exits:
            verdict = False
            print(f"  cycle {{{', '.join(c.edges)}}} has exits {exits}")
            for i, p in enumerate(fam, start=1):
                print(f"    psi_{i} = {format_element(p)}")
            # idempotent and orthogonal, hence the ideal chain grows strictly
            assert all(p * p == p and p != alg.zero() for p in fam)
            assert fam[0] * fam[1] == alg.zero()
        else:
            print(f"  cycle {{{', '.join(c.edges)}}} has no exit; "
                  f"psi_1 = {format_element(fam[0])}")
            assert all(p == alg.zero() for p in fam)
    print(f"  principal ideal ring: {'yes' if verdict else 'no'}")
    print()
