"""Brute-force reference implementations used to cross-check the fast paths."""
import itertools
from collections import Counter


def interleavings_with_merges(u, v, letter_mul=None):
    """Quasi-shuffle of ``u`` and ``v`` by direct enumeration.

    A term of length L is a pair of strictly increasing maps from the
    positions of u and of v into range(L) whose images cover range(L);
    a position hit by both maps carries the merged letter.  Without a
    letter law the images must be disjoint.  Returns a Counter of tuples.
    """
    u, v = tuple(u), tuple(v)
    p, q = len(u), len(v)
    out = Counter()
    for length in range(max(p, q), p + q + 1):
        for pu in itertools.combinations(range(length), p):
            rest = [k for k in range(length) if k not in pu]
            need = length - p  # positions only v can fill
            if need > q:
                continue
            shared_count = q - need
            if shared_count and letter_mul is None:
                continue
            for shared in itertools.combinations(pu, shared_count):
                pv = sorted(rest + list(shared))
                word = [None] * length
                for k, a in zip(pu, u):
                    word[k] = a
                for k, b in zip(pv, v):
                    word[k] = letter_mul(word[k], b) if k in shared else b
                out[tuple(word)] += 1
    return out


def brute_decomposition_count(mul, ball, t):
    """Number of pairs in ``ball`` x ``ball`` whose product is ``t``."""
    return sum(1 for a, b in itertools.product(ball, repeat=2) if mul(a, b) == t)
