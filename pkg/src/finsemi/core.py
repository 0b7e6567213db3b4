"""Finite semigroups as Cayley tables.

A semigroup on the carrier {0, ..., n-1} is stored as its full n x n
multiplication table.  Tables are immutable once built; `validate` is the
entry point for untrusted grids and checks closure and associativity.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class OutOfRangeEntry(ValueError):
    """A table entry falls outside the carrier {0, ..., n-1}."""

    def __init__(self, row: int, col: int, value, n: int):
        self.row, self.col, self.value, self.n = row, col, value, n
        super().__init__(
            f"entry {value!r} at ({row}, {col}) outside carrier of size {n}"
        )


class NotAssociative(ValueError):
    """The grid fails the associativity triple check."""

    def __init__(self, x: int, y: int, z: int):
        self.witness = (x, y, z)
        super().__init__(f"(x*y)*z != x*(y*z) at (x, y, z) = ({x}, {y}, {z})")


class EmptyWord(ValueError):
    """A product of zero factors was requested."""


class FormatError(ValueError):
    """Malformed table or relation text."""


class CayleyTable:
    """A finite magma table; rows[i][j] is the product i*j.

    The constructor checks only shape and closure.  Associativity is the
    job of `validate`, which every public constructor in this package
    goes through.
    """

    __slots__ = ("n", "rows")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n < 1:
            raise FormatError("table must have at least one element")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise FormatError(f"row {i} has {len(row)} entries, expected {n}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise OutOfRangeEntry(i, j, v, n)
        self.n = n
        self.rows = rows

    def mul(self, x: int, y: int) -> int:
        return self.rows[x][y]

    def transpose(self) -> "CayleyTable":
        return CayleyTable(zip(*self.rows))

    def __eq__(self, other) -> bool:
        return isinstance(other, CayleyTable) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"CayleyTable({[list(r) for r in self.rows]})"


class MonoidTable(CayleyTable):
    """A Cayley table with a designated two-sided identity."""

    __slots__ = ("identity",)

    def __init__(self, rows, identity: int):
        super().__init__(rows)
        e = identity
        for x in range(self.n):
            if self.rows[e][x] != x or self.rows[x][e] != x:
                raise ValueError(f"element {e} is not a two-sided identity")
        self.identity = e


def validate(grid: Iterable[Iterable[int]]) -> CayleyTable:
    """Build a CayleyTable from a raw grid, confirming closure and
    associativity.

    Raises OutOfRangeEntry or NotAssociative (with the first witness
    triple in scan order) when the grid is not a semigroup.
    """
    s = CayleyTable(grid)
    rows = s.rows
    n = s.n
    for x in range(n):
        rx = rows[x]
        for y in range(n):
            xy = rx[y]
            ry = rows[y]
            rxy = rows[xy]
            for z in range(n):
                if rxy[z] != rx[ry[z]]:
                    raise NotAssociative(x, y, z)
    return s


def adjoin_identity(s: CayleyTable) -> MonoidTable:
    """Return the table extended by one fresh two-sided identity.

    A new identity is adjoined even when `s` already has one; the
    original products occupy the leading n x n block unchanged.
    """
    n = s.n
    rows = [list(r) + [i] for i, r in enumerate(s.rows)]
    rows.append(list(range(n + 1)))
    return MonoidTable(rows, n)


def product(s: CayleyTable, word: Sequence[int]) -> int:
    """Fold a nonempty word of element indices through the table."""
    it = iter(word)
    try:
        acc = next(it)
    except StopIteration:
        raise EmptyWord("cannot take the product of an empty word") from None
    n = s.n
    if not 0 <= acc < n:
        raise OutOfRangeEntry(0, 0, acc, n)
    rows = s.rows
    for x in it:
        if not 0 <= x < n:
            raise OutOfRangeEntry(0, 0, x, n)
        acc = rows[acc][x]
    return acc


def is_commutative(s: CayleyTable) -> bool:
    rows = s.rows
    n = s.n
    return all(rows[i][j] == rows[j][i] for i in range(n) for j in range(i + 1, n))


def parse_table(text: str) -> CayleyTable:
    """Parse the table text format.

    Lines whose first non-blank character is '#' are comments.  The first
    token is the carrier size n, followed by exactly n*n entries in
    row-major order.  Anything after the last entry is an error.
    """
    tokens: list[str] = []
    for line in text.splitlines():
        if line.lstrip().startswith("#"):
            continue
        tokens.extend(line.split())
    if not tokens:
        raise FormatError("no table data found")
    try:
        n = int(tokens[0])
    except ValueError:
        raise FormatError(f"carrier size {tokens[0]!r} is not an integer") from None
    if n < 1:
        raise FormatError(f"carrier size must be >= 1, got {n}")
    entries = tokens[1:]
    if len(entries) != n * n:
        raise FormatError(f"expected {n * n} entries for n={n}, got {len(entries)}")
    try:
        values = [int(t) for t in entries]
    except ValueError as exc:
        raise FormatError(f"non-integer table entry: {exc}") from None
    return validate([values[i * n : (i + 1) * n] for i in range(n)])


def format_table(s: CayleyTable) -> str:
    """Serialize a table to the text format; round-trips through parse_table."""
    lines = [str(s.n)]
    lines.extend(" ".join(str(v) for v in row) for row in s.rows)
    return "\n".join(lines) + "\n"
