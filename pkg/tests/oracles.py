"""Brute-force reference implementations.

These work on frozensets of block indices straight from the action matrix and
share no code with the bitmask routines under test.
"""

from itertools import chain, combinations, product


def subsets(n):
    items = range(n)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, k) for k in range(n + 1))]


def acts(X, j, i):
    return X.action[j][i] != 0


def image(X, S):
    return frozenset(j for i in S for j in range(X.n) if acts(X, j, i))


def preimage(X, S):
    return frozenset(i for i in range(X.n) if all(j in S for j in range(X.n) if acts(X, j, i)))


def kernel(X):
    return frozenset(i for i in range(X.n) if not any(acts(X, j, i) for j in range(X.n)))


def compact(X):
    return frozenset(i for i in range(X.n) if all(X.action[j][i].is_finite for j in range(X.n)))


def katsura(X):
    return compact(X) - kernel(X)


def relative(X, S):
    pre = preimage(X, S)
    out = set()
    for i in range(X.n):
        compact_mod_S = all(X.action[j][i].is_finite for j in range(X.n) if j not in S)
        kills_preimage = i in S or i not in pre
        if compact_mod_S and kills_preimage:
            out.add(i)
    return frozenset(out)


def positively_invariant(X, S):
    return image(X, S) <= S


def negatively_invariant(X, S):
    return katsura(X) & preimage(X, S) <= S


def invariant(X, S):
    return positively_invariant(X, S) and negatively_invariant(X, S)


def least_closed_superset(X, S, predicate):
    candidates = [K for K in subsets(X.n) if S <= K and predicate(X, K)]
    least = [K for K in candidates if all(K <= L for L in candidates)]
    assert len(least) == 1, "closed supersets have no least element"
    return least[0]


def is_pair(X, I, I2, kind):
    if not positively_invariant(X, I):
        return False
    if not (I <= I2 <= relative(X, I)):
        return False
    return kind == "T" or katsura(X) <= I2


def all_pairs(X, kind):
    found = [(I, I2) for I, I2 in product(subsets(X.n), repeat=2) if is_pair(X, I, I2, kind)]
    return sorted(found, key=lambda p: (sum(1 << k for k in p[0]), sum(1 << k for k in p[1])))


def covering_relation(pairs):
    def le(p, q):
        return p[0] <= q[0] and p[1] <= q[1]

    edges = set()
    for a, p in enumerate(pairs):
        for b, q in enumerate(pairs):
            if a == b or not le(p, q):
                continue
            if not any(c not in (a, b) and le(p, r) and le(r, q) for c, r in enumerate(pairs)):
                edges.add((a, b))
    return edges


def path_counts(vertices, edges):
    """Number of directed paths (trivial path included) starting at each vertex.

    ``edges`` lists ``(src, dst)`` once per parallel edge; paths are explored
    one edge at a time, so parallel edges give distinct paths.
    """
    out_edges = {v: [] for v in vertices}
    for src, dst in edges:
        out_edges[src].append(dst)

    def walk(v):
        total = 1
        for w in out_edges[v]:
            total += walk(w)
        return total

    return {v: walk(v) for v in vertices}
