"""Index coding instances with neighboring (cyclic) antidotes.

Receiver ``k`` wants message ``x_k`` and caches the messages listed in its
antidote set. Every subscript is reduced cyclically into ``1..K``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

CASES = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X")
LAMBDA_CASES = frozenset({"V", "VI", "VII", "VIII", "IX", "X"})


class InvalidParameters(ValueError):
    """Parameters violate a divisibility or range condition of a case."""


def wrap(i: int, K: int) -> int:
    """Reduce an index cyclically into ``1..K``."""
    return (i - 1) % K + 1


@dataclass(frozen=True)
class CaseParams:
    case: str
    K: int
    D: int
    U: int = 0
    lam: Optional[int] = None
    m: Optional[int] = None
    n: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None
    s: Optional[int] = None

    def derived(self) -> Dict[str, int]:
        return {k: v for k in "mnpqs" if (v := getattr(self, k)) is not None}

    def label(self) -> str:
        out = f"case {self.case} K={self.K} D={self.D}"
        if self.case == "GENERAL":
            out += f" U={self.U}"
        if self.lam is not None:
            out += f" lambda={self.lam}"
        return out


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidParameters(message)


def _divides(a: int, b: int) -> bool:
    return a != 0 and b % a == 0


def make_case(case: str, K: int, D: int, lam: Optional[int] = None) -> CaseParams:
    """Validate parameters for one of Cases I..X and fill in derived values."""
    case = case.upper()
    if case.startswith("CASE"):
        case = case[4:]
    _require(case in CASES, f"unknown case {case!r}; expected one of {', '.join(CASES)}")
    _require(K >= 2, "K must be at least 2")
    _require(1 <= D <= K - 1, "D must satisfy 1 <= D <= K-1")
    if case in LAMBDA_CASES:
        _require(lam is not None, f"case {case} needs lambda")
        _require(lam >= 1, "lambda must be a positive integer")
    else:
        _require(lam is None, f"case {case} takes no lambda")

    if case == "I":
        _require(_divides(D, K), "D must divide K")
        _require(K >= 2 * D, "K must be at least 2D")
        return CaseParams(case, K, D, n=K // D)
    if case == "II":
        m = K - D
        _require(_divides(m, K), "K-D must divide K")
        return CaseParams(case, K, D, m=m, n=K // m)
    if case == "III":
        _require(K % 2 == 0, "K must be even")
        m = D - K // 2
        _require(m >= 1, "D-K/2 must be at least 1")
        _require(_divides(m, K // 2), "D-K/2 must divide K/2")
        return CaseParams(case, K, D, m=m, n=(K // 2) // m)
    if case == "IV":
        _require(K % 2 == 0, "K must be even")
        m = K // 2 - D
        _require(m >= 1, "K/2-D must be at least 1")
        _require(_divides(m, D), "K/2-D must divide D")
        return CaseParams(case, K, D, m=m, n=K // m, p=D // m)

    assert lam is not None
    if case == "V":
        _require(_divides(lam, D), "lambda must divide D")
        _require(K - lam > 0 and _divides(D, K - lam), "D must divide K-lambda")
        n = (K - lam) // D
        _require(n > 1, "(K-lambda)/D must exceed 1")
        return CaseParams(case, K, D, lam=lam, n=n)
    if case == "VI":
        m = K - D
        _require(_divides(lam, m), "lambda must divide K-D")
        _require(K - lam > 0 and _divides(m, K - lam), "K-D must divide K-lambda")
        return CaseParams(case, K, D, lam=lam, m=m, q=(K - lam) // m)
    if case == "VII":
        _require(_divides(lam, D), "lambda must divide D")
        _require(_divides(D + lam, K), "D+lambda must divide K")
        return CaseParams(case, K, D, lam=lam, p=D // lam, n=K // (D + lam))
    if case == "VIII":
        m = K - D
        _require(_divides(lam, m), "lambda must divide K-D")
        _require(_divides(m + lam, K), "K-D+lambda must divide K")
        return CaseParams(case, K, D, lam=lam, m=m, p=K // (m + lam), s=m // lam)
    if case == "IX":
        _require(_divides(lam, D), "lambda must divide D")
        _require(_divides(D, K + lam), "D must divide K+lambda")
        n = (K + lam) // D
        _require(n > 2, "(K+lambda)/D must exceed 2")
        return CaseParams(case, K, D, lam=lam, n=n, p=D - lam)
    # case X
    m = K - D
    _require(_divides(lam, m), "lambda must divide K-D")
    _require(_divides(m, K + lam), "K-D must divide K+lambda")
    _require(2 * lam <= m, "lambda must be at most (K-D)/2")
    return CaseParams(case, K, D, lam=lam, m=m, p=m - lam, q=(K + lam) // m, s=m // lam)


def valid_cases(K_max: int, K_min: int = 2) -> List[CaseParams]:
    """Every valid parameter set of every case with ``K_min <= K <= K_max``."""
    out = []
    for case in CASES:
        for K in range(K_min, K_max + 1):
            for D in range(1, K):
                lams: Iterable[Optional[int]] = range(1, K + 1) if case in LAMBDA_CASES else [None]
                for lam in lams:
                    try:
                        out.append(make_case(case, K, D, lam))
                    except InvalidParameters:
                        pass
    return out


# --- antidote patterns -----------------------------------------------------------


def antidotes_general(K: int, U: int, D: int, k: int) -> FrozenSet[int]:
    """``U`` messages before and ``D`` messages after ``k``, cyclically."""
    if U < 0 or D < 0:
        raise InvalidParameters("U and D must be non-negative")
    if U + D > K - 1:
        raise InvalidParameters("U+D must be at most K-1")
    if not 1 <= k <= K:
        raise IndexError(f"receiver {k} outside 1..{K}")
    before = (wrap(k - t, K) for t in range(1, U + 1))
    after = (wrap(k + t, K) for t in range(1, D + 1))
    return frozenset([*before, *after])


def _offsets_for_case(params: CaseParams, k: int) -> List[int]:
    K, D, lam = params.K, params.D, params.lam
    c = params.case
    if c == "I":
        return [D]
    if c in ("II", "IV"):
        m = params.m
        assert m is not None
        return list(range(m, D + 1, m))
    if c == "III":
        return [K // 2, D - K // 2, D]
    if c in ("VI", "X"):
        return list(range(1, D + 1))
    assert lam is not None
    window = list(range(lam, D + 1, lam))
    if c == "V":
        return [D] if k <= K - D - lam else window
    if c == "VII":
        return window
    if c == "IX":
        return [D] if k <= K - 2 * D + lam else window
    if c == "VIII":
        p, m = params.p, params.m
        assert p is not None and m is not None
        out = [lam]
        for t in range(1, p):
            out.append(t * lam + t * m)
            out.append((t + 1) * lam + t * m)
        return out
    raise InvalidParameters(f"no antidote pattern for case {c!r}")


def antidotes_for_case(params: CaseParams, k: int) -> FrozenSet[int]:
    if params.case == "GENERAL":
        return antidotes_general(params.K, params.U, params.D, k)
    if not 1 <= k <= params.K:
        raise IndexError(f"receiver {k} outside 1..{params.K}")
    return frozenset(wrap(k + off, params.K) for off in _offsets_for_case(params, k))


# --- capacity ----------------------------------------------------------------------


def capacity_general(K: int, U: int, D: int) -> Fraction:
    """Symmetric capacity per message with ``U`` antidotes before and ``D`` after."""
    if U < 0 or D < 0:
        raise InvalidParameters("U and D must be non-negative")
    if U + D > K - 1:
        raise InvalidParameters("U+D must be at most K-1")
    if U + D == K - 1:
        return Fraction(1)
    lo, hi = min(U, D), max(U, D)
    return Fraction(lo + 1, K + lo - hi)


def capacity_one_sided(K: int, D: int) -> Fraction:
    if not 1 <= D <= K - 1:
        raise InvalidParameters("D must satisfy 1 <= D <= K-1")
    if D == K - 1:
        return Fraction(1)
    return Fraction(1, K - D)


def format_fraction(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


# --- problem instances -------------------------------------------------------------


@dataclass(frozen=True)
class ProblemSpec:
    """``K`` receivers; ``antidotes[k-1]`` is what receiver ``k`` already holds.

    The antidote map doubles as the side-information graph: edge ``(i, j)``
    means receiver ``i`` knows ``x_j``.
    """

    K: int
    antidotes: Tuple[FrozenSet[int], ...]
    origin: Optional[CaseParams] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.K < 1:
            raise InvalidParameters("K must be positive")
        if len(self.antidotes) != self.K:
            raise InvalidParameters(f"need {self.K} antidote sets, got {len(self.antidotes)}")
        for k, side in enumerate(self.antidotes, start=1):
            if k in side:
                raise InvalidParameters(f"receiver {k} cannot hold its own message")
            for j in side:
                if not 1 <= j <= self.K:
                    raise InvalidParameters(f"antidote {j} of receiver {k} outside 1..{self.K}")

    @classmethod
    def from_sets(cls, K: int, sets: Sequence[Iterable[int]], origin: Optional[CaseParams] = None) -> "ProblemSpec":
        return cls(K, tuple(frozenset(s) for s in sets), origin)

    @classmethod
    def from_case(cls, params: CaseParams) -> "ProblemSpec":
        return cls.from_sets(params.K, [antidotes_for_case(params, k) for k in range(1, params.K + 1)], params)

    @classmethod
    def general(cls, K: int, U: int, D: int) -> "ProblemSpec":
        params = CaseParams("GENERAL", K, D, U=U)
        return cls.from_sets(K, [antidotes_general(K, U, D, k) for k in range(1, K + 1)], params)

    @classmethod
    def one_sided(cls, K: int, D: int) -> "ProblemSpec":
        return cls.general(K, 0, D)

    @classmethod
    def complete(cls, K: int) -> "ProblemSpec":
        return cls.from_sets(K, [set(range(1, K + 1)) - {k} for k in range(1, K + 1)])

    @classmethod
    def empty(cls, K: int) -> "ProblemSpec":
        return cls.from_sets(K, [()] * K)

    def antidotes_of(self, k: int) -> FrozenSet[int]:
        return self.antidotes[k - 1]

    def edges(self) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(1, self.K + 1) for j in sorted(self.antidotes[i - 1])]

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self.antidotes)

    def without_edge(self, i: int, j: int) -> "ProblemSpec":
        if j not in self.antidotes[i - 1]:
            raise KeyError(f"({i}, {j}) is not an edge")
        sets = list(self.antidotes)
        sets[i - 1] = sets[i - 1] - {j}
        return ProblemSpec(self.K, tuple(sets))
