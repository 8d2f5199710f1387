"""Staircase tableau data model.

A staircase tableau of size n lives on the Young diagram of shape
(n, n-1, ..., 2, 1): box (i, j) exists iff i + j <= n + 1, with rows and
columns 1-indexed from the NW corner.  Boxes are empty or hold one of the
four symbols alpha, beta, gamma, delta subject to:

  (ii)  every diagonal box (i, n+1-i) is filled;
  (iii) every box left of a beta/delta in its row is empty;
  (iv)  every box above an alpha/gamma in its column is empty.

Tableaux are immutable values; all operations here are pure.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import DomainError, InvalidTableauError, MalformedDocumentError

__all__ = [
    "Symbol",
    "Tableau",
    "SymbolCounts",
    "Violation",
    "validate",
    "counts",
    "weight",
    "weight_exponents",
    "subtableau",
    "dagger",
    "render_text",
    "serialize",
    "parse",
]


class Symbol(enum.Enum):
    ALPHA = "alpha"
    BETA = "beta"
    GAMMA = "gamma"
    DELTA = "delta"

    def __lt__(self, other: "Symbol") -> bool:
        if not isinstance(other, Symbol):
            return NotImplemented
        order = ("alpha", "beta", "gamma", "delta")
        return order.index(self.value) < order.index(other.value)

    @property
    def column_type(self) -> bool:
        """Alpha/Gamma: forces empty boxes above it in its column."""
        return self in (Symbol.ALPHA, Symbol.GAMMA)

    @property
    def row_type(self) -> bool:
        """Beta/Delta: forces empty boxes left of it in its row."""
        return self in (Symbol.BETA, Symbol.DELTA)

    @property
    def letter(self) -> str:
        return {"alpha": "a", "beta": "b", "gamma": "g", "delta": "d"}[self.value]


_LETTER_TO_SYMBOL = {s.letter: s for s in Symbol}

_DAGGER_SWAP = {
    Symbol.ALPHA: Symbol.BETA,
    Symbol.BETA: Symbol.ALPHA,
    Symbol.GAMMA: Symbol.DELTA,
    Symbol.DELTA: Symbol.GAMMA,
}


@dataclass(frozen=True)
class Tableau:
    """Immutable staircase tableau: a size and a sparse cell assignment.

    ``cells`` is kept as a canonically sorted tuple of (row, col, symbol)
    so tableaux hash and compare by value.  Construction only checks basic
    well-formedness (positive coordinates, no duplicate box); rule checks
    live in :func:`validate`.
    """

    n: int
    cells: tuple[tuple[int, int, Symbol], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"tableau size must be >= 0, got {self.n}")
        seen = set()
        for row, col, sym in self.cells:
            if row < 1 or col < 1:
                raise ValueError(f"cell coordinates must be >= 1, got ({row}, {col})")
            if not isinstance(sym, Symbol):
                raise ValueError(f"cell ({row}, {col}) holds {sym!r}, not a Symbol")
            if (row, col) in seen:
                raise ValueError(f"duplicate cell ({row}, {col})")
            seen.add((row, col))
        object.__setattr__(self, "cells", tuple(sorted(self.cells)))

    @classmethod
    def of(cls, n: int, cells) -> "Tableau":
        """Build from any iterable of (row, col, symbol) or a {(row, col): symbol} map."""
        if hasattr(cells, "items"):
            triples = tuple((r, c, s) for (r, c), s in cells.items())
        else:
            triples = tuple(tuple(cell) for cell in cells)
        return cls(n, triples)

    @cached_property
    def cell_map(self) -> dict[tuple[int, int], Symbol]:
        return {(r, c): s for r, c, s in self.cells}

    def symbol_at(self, row: int, col: int) -> Symbol | None:
        return self.cell_map.get((row, col))

    def in_shape(self, row: int, col: int) -> bool:
        return 1 <= row and 1 <= col and row + col <= self.n + 1

    def row_width(self, row: int) -> int:
        return self.n + 1 - row

    def diagonal(self) -> list[Symbol | None]:
        """Symbols in boxes (i, n+1-i), i = 1..n (NE to SW)."""
        return [self.symbol_at(i, self.n + 1 - i) for i in range(1, self.n + 1)]


@dataclass(frozen=True)
class SymbolCounts:
    n_alpha: int
    n_beta: int
    n_gamma: int
    n_delta: int
    diagonal_alpha: int
    diagonal_beta: int
    alpha_indexed_rows: int

    @property
    def total(self) -> int:
        return self.n_alpha + self.n_beta + self.n_gamma + self.n_delta


@dataclass(frozen=True)
class Violation:
    rule: str           # "shape", "ii", "iii" or "iv"
    box: tuple[int, int]
    message: str


def validate(t: Tableau) -> list[Violation]:
    """Check a tableau against the filling rules; empty list means valid.

    Structural problems (cells outside the staircase shape) are reported
    first, then rule (ii) for every empty diagonal box, then one record per
    symbol breaking rule (iii) or (iv).
    """
    out: list[Violation] = []
    for row, col, _sym in t.cells:
        if not t.in_shape(row, col):
            out.append(Violation("shape", (row, col), f"box ({row}, {col}) outside the size-{t.n} staircase"))
    if out:
        # Rule checks assume in-shape cells; report the structural failure alone.
        return out
    cm = t.cell_map
    for i in range(1, t.n + 1):
        j = t.n + 1 - i
        if (i, j) not in cm:
            out.append(Violation("ii", (i, j), f"diagonal box ({i}, {j}) is empty"))
    for (row, col), sym in sorted(cm.items()):
        if sym.row_type:
            for col2 in range(1, col):
                if (row, col2) in cm:
                    out.append(Violation("iii", (row, col), f"box ({row}, {col2}) left of {sym.value} at ({row}, {col}) is filled"))
                    break
        if sym.column_type:
            for row2 in range(1, row):
                if (row2, col) in cm:
                    out.append(Violation("iv", (row, col), f"box ({row2}, {col}) above {sym.value} at ({row}, {col}) is filled"))
                    break
    return out


def is_valid(t: Tableau) -> bool:
    return not validate(t)


def counts(t: Tableau) -> SymbolCounts:
    """Exact symbol tallies, diagonal tallies, and alpha-indexed row count.

    A row is indexed by alpha when its leftmost symbol is alpha; for an
    alpha/beta tableau this forces alpha_indexed_rows = n - n_beta.
    """
    tally = {s: 0 for s in Symbol}
    leftmost: dict[int, tuple[int, Symbol]] = {}
    for row, col, sym in t.cells:
        tally[sym] += 1
        best = leftmost.get(row)
        if best is None or col < best[0]:
            leftmost[row] = (col, sym)
    diag_a = diag_b = 0
    for i in range(1, t.n + 1):
        sym = t.symbol_at(i, t.n + 1 - i)
        if sym is Symbol.ALPHA:
            diag_a += 1
        elif sym is Symbol.BETA:
            diag_b += 1
    r = sum(1 for _, sym in leftmost.values() if sym is Symbol.ALPHA)
    return SymbolCounts(
        n_alpha=tally[Symbol.ALPHA],
        n_beta=tally[Symbol.BETA],
        n_gamma=tally[Symbol.GAMMA],
        n_delta=tally[Symbol.DELTA],
        diagonal_alpha=diag_a,
        diagonal_beta=diag_b,
        alpha_indexed_rows=r,
    )


def weight_exponents(t: Tableau) -> tuple[int, int, int, int]:
    """(N_alpha, N_beta, N_gamma, N_delta) exponent vector of the weight monomial."""
    c = counts(t)
    return (c.n_alpha, c.n_beta, c.n_gamma, c.n_delta)


def weight(t: Tableau, alpha, beta, gamma=0, delta=0) -> Fraction:
    """Weight alpha^Na * beta^Nb * gamma^Ng * delta^Nd, exact (0**0 == 1)."""
    na, nb, ng, nd = weight_exponents(t)
    return (
        Fraction(alpha) ** na
        * Fraction(beta) ** nb
        * Fraction(gamma) ** ng
        * Fraction(delta) ** nd
    )


def subtableau(t: Tableau, i: int, j: int) -> Tableau:
    """Subtableau with (i, j) as its top-left box: drop the first i-1 rows
    and j-1 columns and re-index.  Result has size n - i - j + 2."""
    if i < 1 or j < 1 or i + j > t.n + 1:
        raise DomainError(f"box ({i}, {j}) is outside the size-{t.n} staircase")
    kept = tuple(
        (r - i + 1, c - j + 1, s) for r, c, s in t.cells if r >= i and c >= j
    )
    return Tableau(t.n - i - j + 2, kept)


def dagger(t: Tableau) -> Tableau:
    """Reflection in the NW-SE diagonal with alpha<->beta, gamma<->delta.

    An involution: dagger(dagger(t)) == t.
    """
    return Tableau(t.n, tuple((c, r, _DAGGER_SWAP[s]) for r, c, s in t.cells))


def render_text(t: Tableau) -> str:
    """One line per row, row i holding n+1-i characters; '.' marks an empty box."""
    lines = []
    for row in range(1, t.n + 1):
        line = []
        for col in range(1, t.row_width(row) + 1):
            sym = t.symbol_at(row, col)
            line.append(sym.letter if sym else ".")
        lines.append("".join(line))
    return "\n".join(lines)


def to_document(t: Tableau) -> dict:
    return {
        "n": t.n,
        "cells": [
            {"row": r, "col": c, "sym": s.value} for r, c, s in t.cells
        ],
    }


def serialize(t: Tableau) -> bytes:
    """Canonical single-document JSON encoding (cells sorted by row, col)."""
    return json.dumps(to_document(t), separators=(",", ":"), sort_keys=True).encode()


def from_document(doc: dict, check: bool = True) -> Tableau:
    try:
        n = doc["n"]
        raw_cells = doc["cells"]
    except (TypeError, KeyError) as exc:
        raise MalformedDocumentError(f"missing field in tableau document: {exc}") from exc
    if not isinstance(n, int) or not isinstance(raw_cells, list):
        raise MalformedDocumentError("'n' must be an integer and 'cells' a list")
    cells = []
    for entry in raw_cells:
        try:
            row, col, sym = entry["row"], entry["col"], entry["sym"]
        except (TypeError, KeyError) as exc:
            raise MalformedDocumentError(f"bad cell entry {entry!r}") from exc
        if not isinstance(row, int) or not isinstance(col, int):
            raise MalformedDocumentError(f"cell coordinates must be integers: {entry!r}")
        try:
            symbol = Symbol(sym)
        except ValueError as exc:
            raise MalformedDocumentError(f"unknown symbol {sym!r}") from exc
        cells.append((row, col, symbol))
    try:
        t = Tableau(n, tuple(cells))
    except ValueError as exc:
        raise MalformedDocumentError(str(exc)) from exc
    if check:
        violations = validate(t)
        if violations:
            raise InvalidTableauError(
                "; ".join(v.message for v in violations)
            )
    return t


def parse(data: bytes | str, check: bool = True) -> Tableau:
    """Inverse of :func:`serialize`.

    Raises :class:`MalformedDocumentError` for documents that are not valid
    JSON or miss fields, and :class:`InvalidTableauError` for well-formed
    documents describing rule-breaking tableaux.
    """
    if isinstance(data, bytes):
        data = data.decode()
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise MalformedDocumentError(f"not valid JSON: {exc}") from exc
    return from_document(doc, check=check)
