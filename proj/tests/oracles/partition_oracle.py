"""Brute-force distance partitions for the all-k-subsets-of-U style codes.

Layers every k-subset of {0..v-1} by Johnson distance to the code (BFS on
the Johnson graph), then checks equitability and prints the covering index,
cell sizes and intersection numbers that the C++ tests freeze.
"""
from itertools import combinations


def johnson_neighbours(s, v):
    for u in s:
        for w in range(v):
            if w not in s:
                yield (s - {u}) | {w}


def partition(v, k, code):
    layer = {c: 0 for c in code}
    frontier = list(code)
    d = 0
    while frontier:
        d += 1
        nxt = []
        for s in frontier:
            for n in johnson_neighbours(s, v):
                if n not in layer:
                    layer[n] = d
                    nxt.append(n)
        frontier = nxt
    r = max(layer.values()) + 1
    cells = [[s for s, l in layer.items() if l == i] for i in range(r)]
    numbers = []
    for i in range(r):
        row = None
        for s in cells[i]:
            counts = [0] * r
            for n in johnson_neighbours(s, v):
                counts[layer[n]] += 1
            if row is None:
                row = counts
            elif row != counts:
                return r, [len(c) for c in cells], None
        numbers.append(row)
    return r, [len(c) for c in cells], numbers


def intransitive(v, u, k):
    U = frozenset(range(u))
    allk = [frozenset(c) for c in combinations(range(v), k)]
    if u > k:
        return [s for s in allk if s <= U]
    if u == k:
        return [U]
    return [s for s in allk if U <= s]


for v, k, u in [(8, 3, 5), (8, 3, 3), (9, 4, 2)]:
    print((v, k, u), partition(v, k, intransitive(v, u, k)))
