"""Brute-force oracle for partition-type codes in J(v,k).

Enumerates every k-subset, selects those of a given part-intersection type,
and reports the neighbour-set types, minimum distance and code size.  Values
printed here are frozen into the C++ tests.
"""
from itertools import combinations
from collections import Counter


def utype(s, a, b):
    counts = Counter(len(set(s) & set(range(i * a, i * a + a))) for i in range(b))
    return tuple(sorted((size, m) for size, m in counts.items() if size > 0))


def analyse(a, b, k, target):
    v = a * b
    allk = [frozenset(c) for c in combinations(range(v), k)]
    code = [s for s in allk if utype(s, a, b) == target]
    cs = set(code)
    nbrs = set()
    for g in code:
        for u in g:
            for w in range(v):
                if w in g:
                    continue
                n = (g - {u}) | {w}
                if n not in cs:
                    nbrs.add(n)
    types = Counter(utype(n, a, b) for n in nbrs)
    delta = min((k - len(x & y) for x, y in combinations(code, 2)), default=None)
    return len(code), dict(types), delta


def t(*pairs):
    return tuple(sorted(p for p in pairs if p[0] > 0 and p[1] > 0))


cases = {
    "line1 a=2 b=2 k=2": (2, 2, 2, t((2, 1))),
    "line1 a=3 b=2 k=2": (3, 2, 2, t((2, 1))),
    "line2 a=3 b=2 k=4": (3, 2, 4, t((1, 1), (3, 1))),
    "line3 a=2 b=2 k=2": (2, 2, 2, t((1, 2))),
    "line4 a=2 b=3 k=4": (2, 3, 4, t((1, 2), (2, 1))),
    "line5 a=3 b=2 c=2": (3, 2, 4, t((2, 2))),
    "line5 a=3 b=3 c=2": (3, 3, 6, t((2, 3))),
    "line6 a=3 b=2 k=3": (3, 2, 3, t((1, 1), (2, 1))),
    "line7 a=2 b=3 k=3": (2, 3, 3, t((1, 1), (2, 1))),
}
for name, (a, b, k, tt) in cases.items():
    print(name, analyse(a, b, k, tt))
