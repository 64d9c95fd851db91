#!/usr/bin/env python3
"""Brute-force counts for hypercube DAGs (D|E) straight from the edge rule:
(l|m) -> (l'|m') iff (l' is l with one '-' turned '+', m = m') or (m' is m with one '+' turned '-', l = l').
Also lists the node colors of the 1-fragment of 2Z>=0 at lambda = '+'."""
import itertools


def cube(m):
    words = ["".join(w) for w in itertools.product("+-", repeat=m)]
    nodes = [(l, u) for l in words for u in words]

    def up(a, b):  # b is a with exactly one '-' -> '+'
        diff = [i for i in range(len(a)) if a[i] != b[i]]
        return len(diff) == 1 and a[diff[0]] == "-" and b[diff[0]] == "+"

    edges = [(x, y) for x in nodes for y in nodes
             if (up(x[0], y[0]) and x[1] == y[1]) or (up(y[1], x[1]) and x[0] == y[0])]
    return nodes, edges


for m in (1, 2, 3):
    n, e = cube(m)
    print(f"cube m={m}: nodes={len(n)} edges={len(e)}")
# (+|±): slice D={+}
n, e = cube(1)
print("slice (+|±):", [x for x in n if x[0] == "+"], [x for x in e if x[0][0] == "+" and x[1][0] == "+"])
