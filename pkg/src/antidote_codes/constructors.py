"""Optimal-length scalar linear codes for Cases I..X.

Each builder is a pure function of :class:`CaseParams`. Symbols whose
formulas carry two running indices are emitted with the cyclic shift
(``i``) varying fastest, which puts the generator matrix columns in the
order the published codebooks use: column ``j + 1`` is column ``j`` shifted
down by one row wherever the family allows it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

from .gf2 import BitMatrix, bits_from_indices, indices_from_bits
from .model import CaseParams, InvalidParameters, make_case, wrap

Symbol = Tuple[int, ...]


@dataclass(frozen=True)
class CodeBook:
    """Generator matrix plus the message indices summed by each code symbol."""

    params: CaseParams
    symbols: Tuple[Symbol, ...]
    matrix: BitMatrix

    @classmethod
    def from_symbols(cls, params: CaseParams, symbols: Sequence[Sequence[int]]) -> "CodeBook":
        K = params.K
        syms = []
        for pos, sym in enumerate(symbols, start=1):
            reduced = tuple(wrap(i, K) for i in sym)
            if len(set(reduced)) != len(reduced):
                raise ValueError(f"symbol {pos} repeats a message index: {reduced}")
            if not reduced:
                raise ValueError(f"symbol {pos} is empty")
            syms.append(reduced)
        matrix = BitMatrix.from_columns(K, [bits_from_indices(s) for s in syms])
        return cls(params, tuple(syms), matrix)

    @classmethod
    def from_matrix(cls, params: CaseParams, matrix: BitMatrix) -> "CodeBook":
        """Wrap an externally supplied generator matrix; symbols are column supports."""
        if matrix.nrows != params.K:
            raise ValueError(f"matrix has {matrix.nrows} rows, expected K={params.K}")
        return cls(params, tuple(indices_from_bits(c) for c in matrix.columns()), matrix)

    @property
    def K(self) -> int:
        return self.matrix.nrows

    @property
    def N(self) -> int:
        return self.matrix.ncols

    def symbol_lines(self) -> List[str]:
        return [f"y{j} = " + "+".join(f"x{i}" for i in sym) for j, sym in enumerate(self.symbols, start=1)]

    def without_symbol(self, j: int) -> "CodeBook":
        syms = self.symbols[: j - 1] + self.symbols[j:]
        return CodeBook(self.params, syms, self.matrix.delete_column(j))


def _check(params: CaseParams, case: str) -> None:
    if params.case != case:
        raise InvalidParameters(f"expected case {case} parameters, got case {params.case}")
    # re-validate in case the dataclass was built by hand
    fresh = make_case(case, params.K, params.D, params.lam)
    if fresh != params:
        raise InvalidParameters(f"inconsistent derived values for {params.label()}")


def construct_case_I(params: CaseParams) -> CodeBook:
    _check(params, "I")
    K, D = params.K, params.D
    syms = [
        (i + (j - 1) * D, i + j * D)
        for j in range(1, K // D)
        for i in range(1, D + 1)
    ]
    return CodeBook.from_symbols(params, syms)


def construct_case_II(params: CaseParams) -> CodeBook:
    _check(params, "II")
    m, n = params.m, params.n
    syms = [tuple(i + t * m for t in range(n)) for i in range(1, m + 1)]
    return CodeBook.from_symbols(params, syms)


def construct_case_III(params: CaseParams) -> CodeBook:
    _check(params, "III")
    half, m, n = params.K // 2, params.m, params.n
    syms = [
        (i + j * m, half + i + j * m, i + (j + 1) * m, half + i + (j + 1) * m)
        for j in range(n - 1)
        for i in range(1, m + 1)
    ]
    return CodeBook.from_symbols(params, syms)


def construct_case_IV(params: CaseParams) -> CodeBook:
    _check(params, "IV")
    m, n, p = params.m, params.n, params.p
    syms = [
        tuple(i + (l + t) * m for t in range(p + 1))
        for l in range(n - p)
        for i in range(1, m + 1)
    ]
    return CodeBook.from_symbols(params, syms)


def construct_case_V(params: CaseParams) -> CodeBook:
    _check(params, "V")
    K, D, lam, n = params.K, params.D, params.lam, params.n
    pairs = [
        (i + (j - 1) * D, i + j * D)
        for j in range(1, n)
        for i in range(1, D + 1)
    ]
    # tails run x_{K-lam+r-(D/lam)lam} + ... + x_{K-lam+r}, listed ascending
    tails = [
        tuple(K - lam + r - t * lam for t in range(D // lam, -1, -1))
        for r in range(1, lam + 1)
    ]
    return CodeBook.from_symbols(params, pairs + tails)


def construct_case_VI(params: CaseParams) -> CodeBook:
    _check(params, "VI")
    lam, m, q = params.lam, params.m, params.q
    syms = [
        tuple(i + t * m for t in range(q)) + (q * m + 1 + (i - 1) % lam,)
        for i in range(1, m + 1)
    ]
    return CodeBook.from_symbols(params, syms)


def construct_case_VII(params: CaseParams) -> CodeBook:
    _check(params, "VII")
    K, D, lam, p = params.K, params.D, params.lam, params.p
    syms = [
        tuple(i + j * lam + t * lam for t in range(p + 1))
        for j in range((K - D) // lam)
        for i in range(1, lam + 1)
    ]
    return CodeBook.from_symbols(params, syms)


def construct_case_VIII(params: CaseParams) -> CodeBook:
    _check(params, "VIII")
    lam, m, p = params.lam, params.m, params.p
    syms = []
    for i in range(1, m + 1):
        sym: List[int] = []
        for t in range(p):
            sym.append(i + t * lam + t * m)
            sym.append(i + (t + 1) * lam + t * m)
        syms.append(tuple(sym))
    return CodeBook.from_symbols(params, syms)


def construct_case_IX(params: CaseParams) -> CodeBook:
    _check(params, "IX")
    K, D, lam, n, p = params.K, params.D, params.lam, params.n, params.p
    pairs = [
        (i + (j - 1) * D, i + j * D)
        for j in range(1, n - 1)
        for i in range(1, D + 1)
    ]
    triples = [
        (K - 2 * D + 1 + lam + ip, K - D + 1 + ip, K - lam + 1 + ip % lam)
        for ip in range(p)
    ]
    return CodeBook.from_symbols(params, pairs + triples)


def construct_case_X(params: CaseParams) -> CodeBook:
    _check(params, "X")
    lam, m, p, q, s = params.lam, params.m, params.p, params.q, params.s
    syms: List[Symbol] = []
    for k in range(1, lam + 1):
        head = tuple(k + t * m for t in range(q))
        syms.append(head + tuple(k + (q - 1) * m + t * lam for t in range(1, s - 1)))
    for k in range(lam + 1, p + 1):
        syms.append(tuple(k + t * m for t in range(q - 1)) + (k + (q - 1) * m - lam,))
    for k in range(p + 1, m + 1):
        head = tuple(k + t * m for t in range(q - 1))
        syms.append(head + tuple(k + (q - 2) * m + t * lam for t in range(1, s)))
    return CodeBook.from_symbols(params, syms)


BUILDERS: Dict[str, Callable[[CaseParams], CodeBook]] = {
    "I": construct_case_I,
    "II": construct_case_II,
    "III": construct_case_III,
    "IV": construct_case_IV,
    "V": construct_case_V,
    "VI": construct_case_VI,
    "VII": construct_case_VII,
    "VIII": construct_case_VIII,
    "IX": construct_case_IX,
    "X": construct_case_X,
}


def construct(params: CaseParams) -> CodeBook:
    try:
        builder = BUILDERS[params.case]
    except KeyError:
        raise InvalidParameters(f"no construction for case {params.case!r}") from None
    return builder(params)
