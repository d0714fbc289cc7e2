"""Brute-force references kept deliberately naive and independent of the library."""

import itertools


def rank_bruteforce(rows):
    """Rank as log2 of the row-space size, by enumerating every XOR combination."""
    span = {0}
    for r in rows:
        span |= {v ^ r for v in span}
    return len(span).bit_length() - 1


def min_tx_bruteforce(K, antidotes, columns, k):
    """Smallest lexicographically-first column subset XORing to e_k outside the antidote coordinates."""
    blind = ((1 << K) - 1) & ~sum(1 << (j - 1) for j in antidotes)
    target = 1 << (k - 1)
    for size in range(1, len(columns) + 1):
        for combo in itertools.combinations(range(len(columns)), size):
            acc = 0
            for c in combo:
                acc ^= columns[c]
            if (acc ^ target) & blind == 0:
                return size, tuple(c + 1 for c in combo)
    return None


def minrank_bruteforce(K, antidotes):
    edges = [(i, j) for i in range(1, K + 1) for j in sorted(antidotes[i - 1])]
    best = K
    for choice in itertools.product((0, 1), repeat=len(edges)):
        rows = [1 << i for i in range(K)]
        for (i, j), bit in zip(edges, choice):
            if bit:
                rows[i - 1] |= 1 << (j - 1)
        best = min(best, rank_bruteforce(rows))
    return best
