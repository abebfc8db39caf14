"""Shared oracles and generators for the test suite.

Everything here is deliberately naive: straight loops over pairs and
subsets, no bit packing, no pruning beyond the obvious size cut.  The
point is to hold a second, independent opinion on what the library
computes.
"""

import itertools

from crossvec import Family, Poset


def pair_relation(a, b, seq):
    """Classify one pair: 'equal', 'comparable', 'crossing' or 'free'."""
    if tuple(a) == tuple(b):
        return "equal"
    if all(x <= y for x, y in zip(a, b)) or all(x >= y for x, y in zip(a, b)):
        return "comparable"
    pos = any(x - y >= k for x, y, k in zip(a, b, seq))
    neg = any(y - x >= k for x, y, k in zip(a, b, seq))
    if pos and neg:
        return "crossing"
    return "free"


def relation_table(vectors, seq):
    """Relation kind for every index pair i < j of the given sequence."""
    out = {}
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            out[(i, j)] = pair_relation(vectors[i], vectors[j], seq)
    return out


def box_points(limits):
    return [tuple(p) for p in itertools.product(*(range(b + 1) for b in limits))]


def brute_max_family(seq, limits):
    """Largest verifying subset of the box, by plain backtracking.

    Returns (size, vectors).  Only meant for boxes of a few dozen points.
    """
    pts = box_points(limits)
    n = len(pts)
    compat = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            ok = pair_relation(pts[i], pts[j], seq) == "free"
            compat[i][j] = compat[j][i] = ok
    best = []

    def grow(start, chosen):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        for i in range(start, n):
            # even taking every remaining point cannot beat the incumbent
            if len(chosen) + (n - i) <= len(best):
                break
            if all(compat[i][j] for j in chosen):
                chosen.append(i)
                grow(i + 1, chosen)
                chosen.pop()

    grow(0, [])
    return len(best), [pts[i] for i in best]


def brute_max_antichains(p):
    """All maximum antichains of a poset by subset enumeration (n <= 15)."""
    n = p.n
    labs = p.labels
    pairs = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if i != j and p.leq(labs[i], labs[j])
    ]
    best = 0
    found = []
    for mask in range(1, 1 << n):
        members = [i for i in range(n) if mask >> i & 1]
        if any(i in members and j in members for i, j in pairs):
            continue
        if len(members) > best:
            best = len(members)
            found = [members]
        elif len(members) == best:
            found.append(members)
    return best, [frozenset(labs[i] for i in m) for m in found]


def random_verified_family(rng, k, w, n, span=None):
    """Sample vectors, keep only those free against everything kept so far.

    May return fewer than n vectors; that is fine for property loops.
    """
    if span is None:
        span = 3 * k
    seq = (k,) * w
    vs = []
    for _ in range(6 * n):
        v = tuple(rng.randrange(-span, span + 1) for _ in range(w))
        if all(pair_relation(v, u, seq) == "free" for u in vs):
            vs.append(v)
        if len(vs) == n:
            break
    return Family(w, vs)


def random_ranked_family(rng, k, w, n):
    """Like random_verified_family but every vector has rank 0."""
    seq = (k,) * w
    vs = []
    for _ in range(8 * n):
        head = [rng.randrange(-k, k + 1) for _ in range(w - 1)]
        v = tuple(head) + (-sum(head),)
        if all(pair_relation(v, u, seq) == "free" for u in vs):
            vs.append(v)
        if len(vs) == n:
            break
    return Family(w, vs)


def random_poset(rng, n, p=0.3):
    """Random order on e1..en: edge i -> j (i < j) with probability p."""
    labels = [f"e{i}" for i in range(1, n + 1)]
    relations = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                relations.append((labels[i], labels[j]))
    return Poset(labels, relations)


def suite_families():
    """A broad corpus of (name, family, k) used by the signature sweeps."""
    import random

    from crossvec import (
        cyclic_family,
        cyclic_fixup_vector,
        generalized_product_family,
        inductive_lift,
        lexicographic_family,
        non_ranked_example,
        normalize,
        product_family,
        weak_compression_family,
    )

    for k in range(2, 5):
        for w in range(2, 5):
            yield f"product k={k} w={w}", product_family(k, w), k
            yield f"lex k={k} w={w}", lexicographic_family(k, w, (w,) * w), k
    for k in range(2, 6):
        yield f"cyclic k={k} rank {2 * k - 1}", cyclic_family(k, 2 * k - 1), k
        yield f"cyclic k={k} rank {2 * k - 2}", cyclic_family(k, 2 * k - 2), k
    fam = cyclic_family(4, 7)
    yield "cyclic k=4 fixed up", Family(3, fam.vectors + (cyclic_fixup_vector(4),)), 4
    yield "non-ranked example", non_ranked_example(), 2
    for k in (3, 4):
        yield f"weak compression k={k}", weak_compression_family(k), k
    # verifies at the uniform max threshold as well, so k=3 keeps the
    # (family, k) contract: every yielded family verifies at uniform k
    yield "generalized product (2,2,3)", generalized_product_family((2, 2, 3)), 3
    for k in (2, 3):
        base = normalize(product_family(k, 2), k)
        c = max(x for v in base for x in v) + 1
        yield f"lift k={k} w=3", inductive_lift(base, k, c), k
    rng = random.Random(20240817)
    for i in range(12):
        k = rng.randrange(2, 5)
        w = rng.randrange(2, 5)
        f = random_verified_family(rng, k, w, rng.randrange(3, 9))
        if len(f) >= 2:
            yield f"random #{i} k={k} w={w}", f, k
