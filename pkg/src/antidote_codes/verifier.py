"""Decodability and per-receiver transmission counts for a linear index code.

Receiver ``k`` decodes ``x_k`` when ``e_k`` lies in the span of the code's
columns together with the unit vectors of its antidotes. Equivalently, after
deleting the antidote coordinates, some set of columns XORs to ``e_k``; the
smallest such set is the receiver's transmission count.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .constructors import CodeBook
from .gf2 import BitVector, DimensionError, indices_from_bits, solve_membership
from .model import ProblemSpec, capacity_one_sided

DEFAULT_MAX_CARD = 12
# coset enumeration is exhaustive and exact; bound its size instead of the cardinality
DEFAULT_MAX_NULL_DIM = 20
_COMBINATION_BUDGET = 2_000_000


@dataclass(frozen=True)
class ReceiverResult:
    k: int
    decodable: bool
    min_tx: Optional[int] = None
    witness: Optional[Tuple[int, ...]] = None
    capped: bool = False

    @property
    def witness_text(self) -> str:
        if self.witness is None:
            return "-"
        return ",".join(map(str, self.witness))


@dataclass(frozen=True)
class DecodeReport:
    receivers: Tuple[ReceiverResult, ...]

    @property
    def K(self) -> int:
        return len(self.receivers)

    def __getitem__(self, k: int) -> ReceiverResult:
        return self.receivers[k - 1]

    @property
    def all_decodable(self) -> bool:
        return all(r.decodable for r in self.receivers)

    def min_tx_list(self) -> List[Optional[int]]:
        return [r.min_tx for r in self.receivers]


def _check_dims(problem: ProblemSpec, code: CodeBook) -> None:
    if code.matrix.nrows != problem.K:
        raise DimensionError(f"code has {code.matrix.nrows} rows but the problem has K={problem.K}")


def _check_receiver(problem: ProblemSpec, k: int) -> None:
    if not 1 <= k <= problem.K:
        raise IndexError(f"receiver {k} outside 1..{problem.K}")


def can_decode(problem: ProblemSpec, code: CodeBook, k: int) -> bool:
    _check_dims(problem, code)
    _check_receiver(problem, k)
    K = problem.K
    basis = [BitVector(K, c) for c in code.matrix.columns()]
    basis += [BitVector.unit(K, j) for j in sorted(problem.antidotes_of(k))]
    return solve_membership(BitVector.unit(K, k), basis) is not None


def _is_lex_smaller(a: int, b: int) -> bool:
    """For equal-weight position sets, is ``a`` lexicographically before ``b``?"""
    d = a ^ b
    return bool(a & d & -d)


def _eliminate(cols: Sequence[int], target: int) -> Tuple[Optional[int], List[int]]:
    """Particular solution mask for ``target`` and a nullspace basis, both over column positions."""
    table: dict[int, Tuple[int, int]] = {}
    null: List[int] = []
    for pos, c in enumerate(cols):
        vec, combo = c, 1 << pos
        while vec:
            low = vec & -vec
            hit = table.get(low)
            if hit is None:
                table[low] = (vec, combo)
                break
            vec ^= hit[0]
            combo ^= hit[1]
        else:
            null.append(combo)
    vec, combo = target, 0
    while vec:
        low = vec & -vec
        hit = table.get(low)
        if hit is None:
            return None, null
        vec ^= hit[0]
        combo ^= hit[1]
    return combo, null


def _best_in_coset(x0: int, null: Sequence[int]) -> int:
    best = x0
    best_w = x0.bit_count()
    x = x0
    # Gray code walk over all 2^d nullspace combinations
    for step in range(1, 1 << len(null)):
        x ^= null[(step & -step).bit_length() - 1]
        w = x.bit_count()
        if w < best_w or (w == best_w and _is_lex_smaller(x, best)):
            best, best_w = x, w
    return best


def _best_by_cardinality(cols: Sequence[int], target: int, max_card: int) -> Tuple[Optional[int], bool]:
    """Smallest, then lexicographically first, column subset hitting ``target``.

    Returns ``(mask, capped)``; ``capped`` means the search stopped at
    ``max_card`` or ran out of combination budget without an answer.
    """
    live = [pos for pos, c in enumerate(cols) if c]
    spent = 0
    for card in range(1, min(max_card, len(live)) + 1):
        for combo in itertools.combinations(live, card):
            spent += 1
            acc = 0
            for pos in combo:
                acc ^= cols[pos]
            if acc == target:
                mask = 0
                for pos in combo:
                    mask |= 1 << pos
                return mask, False
        if spent > _COMBINATION_BUDGET:
            return None, True
    return None, True


def min_transmissions(
    problem: ProblemSpec,
    code: CodeBook,
    k: int,
    max_card: int = DEFAULT_MAX_CARD,
    max_null_dim: int = DEFAULT_MAX_NULL_DIM,
) -> ReceiverResult:
    """Fewest code symbols receiver ``k`` must combine with its antidotes.

    The witness is the lexicographically first minimum-size set of 1-based
    column positions. When the solution coset is small it is enumerated in
    full; otherwise subsets are tried by increasing size up to ``max_card``
    and a miss is reported with ``capped=True``.
    """
    _check_dims(problem, code)
    _check_receiver(problem, k)
    keep = ((1 << problem.K) - 1) & ~sum(1 << (j - 1) for j in problem.antidotes_of(k))
    cols = [c & keep for c in code.matrix.columns()]
    target = 1 << (k - 1)
    x0, null = _eliminate(cols, target)
    if x0 is None:
        return ReceiverResult(k, False)
    if len(null) <= max_null_dim:
        best = _best_in_coset(x0, null)
    else:
        found, capped = _best_by_cardinality(cols, target, max_card)
        if found is None:
            return ReceiverResult(k, True, capped=capped)
        best = found
    witness = indices_from_bits(best)
    return ReceiverResult(k, True, len(witness), witness)


def verify_all(problem: ProblemSpec, code: CodeBook, max_card: int = DEFAULT_MAX_CARD) -> DecodeReport:
    _check_dims(problem, code)
    out = []
    for k in range(1, problem.K + 1):
        res = min_transmissions(problem, code, k, max_card=max_card)
        if res.decodable != can_decode(problem, code, k):
            raise AssertionError(f"span test and subset search disagree for receiver {k}")
        out.append(res)
    return DecodeReport(tuple(out))


def check_optimal_length(code: CodeBook) -> bool:
    params = code.params
    return code.N == capacity_one_sided(params.K, params.D).denominator
