"""Plain-text serialization of generator matrices and decode reports."""

from __future__ import annotations

from typing import List

from .constructors import CodeBook
from .gf2 import BitMatrix
from .model import capacity_one_sided, format_fraction
from .verifier import DecodeReport, check_optimal_length


class FormatError(ValueError):
    pass


def render_matrix(m: BitMatrix) -> str:
    lines = [f"{m.nrows} {m.ncols}"]
    for r in m.row_bits:
        lines.append(" ".join("1" if (r >> j) & 1 else "0" for j in range(m.ncols)))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> BitMatrix:
    """Inverse of :func:`render_matrix`; rejects anything that is not exactly that layout."""
    if not text.endswith("\n"):
        raise FormatError("matrix text must end with a newline")
    lines = text[:-1].split("\n")
    header = lines[0].split(" ")
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise FormatError(f"bad header line {lines[0]!r}; expected 'K N'")
    nrows, ncols = int(header[0]), int(header[1])
    if nrows < 1:
        raise FormatError("K must be at least 1")
    body = lines[1:]
    if len(body) != nrows:
        raise FormatError(f"header says {nrows} rows, found {len(body)}")
    rows = []
    for lineno, line in enumerate(body, start=2):
        cells = line.split(" ") if ncols else ([] if line == "" else [line])
        if len(cells) != ncols or any(c not in ("0", "1") for c in cells):
            raise FormatError(f"line {lineno}: expected {ncols} space-separated bits")
        bits = 0
        for j, c in enumerate(cells):
            if c == "1":
                bits |= 1 << j
        rows.append(bits)
    return BitMatrix(nrows, ncols, rows)


def _flag(b: bool) -> str:
    return "true" if b else "false"


def render_report(code: CodeBook, report: DecodeReport) -> str:
    params = code.params
    cap = capacity_one_sided(params.K, params.D)
    lines: List[str] = [
        f"K={params.K} D={params.D} case={params.case} N={code.N} "
        f"capacity={format_fraction(cap)} optimal={_flag(check_optimal_length(code))}"
    ]
    for r in report.receivers:
        min_tx = "-" if r.min_tx is None else str(r.min_tx)
        lines.append(f"k={r.k} decodable={_flag(r.decodable)} min_tx={min_tx} witness={r.witness_text}")
    return "\n".join(lines) + "\n"
