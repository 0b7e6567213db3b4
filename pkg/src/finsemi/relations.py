"""Binary relations over a fixed carrier and the equalizer machinery.

The left equalizer of an element a relates x and y when a*x = a*y; the
right equalizer mirrors it.  A relation is *admissible* when it meets
both equalizers of every element identically and is stable under the two
translation conditions below; admissible relations are exactly the ones
whose induced equivalence is a congruence (see the congruence module).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .core import CayleyTable, FormatError, adjoin_identity


class BinaryRelation:
    """A set of ordered pairs over {0..n-1}, one bitmask per first component."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Optional[Iterable[int]] = None):
        if n < 1:
            raise ValueError("carrier must be nonempty")
        if rows is None:
            rows = (0,) * n
        else:
            rows = tuple(rows)
            if len(rows) != n:
                raise ValueError(f"expected {n} rows, got {len(rows)}")
            full = (1 << n) - 1
            for i, m in enumerate(rows):
                if m & ~full:
                    raise ValueError(f"row {i} relates elements outside the carrier")
        self.n = n
        self.rows = rows

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "BinaryRelation":
        rows = [0] * n
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise ValueError(f"pair ({x}, {y}) outside carrier of size {n}")
            rows[x] |= 1 << y
        return cls(n, rows)

    @classmethod
    def diagonal(cls, n: int) -> "BinaryRelation":
        return cls(n, tuple(1 << x for x in range(n)))

    @classmethod
    def full(cls, n: int) -> "BinaryRelation":
        m = (1 << n) - 1
        return cls(n, (m,) * n)

    @classmethod
    def empty(cls, n: int) -> "BinaryRelation":
        return cls(n)

    def has(self, x: int, y: int) -> bool:
        return bool(self.rows[x] >> y & 1)

    def __contains__(self, pair) -> bool:
        x, y = pair
        return self.has(x, y)

    def pairs(self) -> Iterator[tuple[int, int]]:
        """Yield pairs in ascending lexicographic order."""
        for x, m in enumerate(self.rows):
            while m:
                low = m & -m
                yield (x, low.bit_length() - 1)
                m ^= low

    def __len__(self) -> int:
        return sum(bin(m).count("1") for m in self.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BinaryRelation)
            and self.n == other.n
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def _check_carrier(self, other: "BinaryRelation"):
        if self.n != other.n:
            raise ValueError("relations live over different carriers")

    def __and__(self, other: "BinaryRelation") -> "BinaryRelation":
        self._check_carrier(other)
        return BinaryRelation(self.n, tuple(a & b for a, b in zip(self.rows, other.rows)))

    def __or__(self, other: "BinaryRelation") -> "BinaryRelation":
        self._check_carrier(other)
        return BinaryRelation(self.n, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def __le__(self, other: "BinaryRelation") -> bool:
        self._check_carrier(other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def restrict(self, elements: Iterable[int]) -> "BinaryRelation":
        """Keep only pairs with both components in `elements`."""
        mask = 0
        for e in elements:
            mask |= 1 << e
        return BinaryRelation(
            self.n,
            tuple(r & mask if mask >> x & 1 else 0 for x, r in enumerate(self.rows)),
        )

    def is_reflexive(self) -> bool:
        return all(r >> x & 1 for x, r in enumerate(self.rows))

    def is_symmetric(self) -> bool:
        return all(
            self.rows[y] >> x & 1 for x, y in self.pairs()
        )

    def is_transitive(self) -> bool:
        rows = self.rows
        for x, r in enumerate(rows):
            reach = 0
            m = r
            while m:
                low = m & -m
                reach |= rows[low.bit_length() - 1]
                m ^= low
            if reach & ~r:
                return False
        return True

    def is_equivalence(self) -> bool:
        return self.is_reflexive() and self.is_symmetric() and self.is_transitive()

    def __repr__(self) -> str:
        return f"BinaryRelation({self.n}, pairs={list(self.pairs())})"


def left_equalizer(s: CayleyTable, a: int) -> BinaryRelation:
    """Pairs (x, y) with a*x = a*y; the kernel of left translation by a."""
    n = s.n
    row = s.rows[a]
    masks = [0] * n
    for y in range(n):
        masks[row[y]] |= 1 << y
    return BinaryRelation(n, tuple(masks[row[x]] for x in range(n)))


def right_equalizer(s: CayleyTable, a: int) -> BinaryRelation:
    """Pairs (x, y) with x*a = y*a; the kernel of right translation by a."""
    n = s.n
    col = [s.rows[x][a] for x in range(n)]
    masks = [0] * n
    for y in range(n):
        masks[col[y]] |= 1 << y
    return BinaryRelation(n, tuple(masks[col[x]] for x in range(n)))


def translate_left(s: CayleyTable, x: int, r: BinaryRelation) -> BinaryRelation:
    """The image {(x*a, x*b) : (a, b) in r}."""
    row = s.rows[x]
    out = [0] * r.n
    for a, b in r.pairs():
        out[row[a]] |= 1 << row[b]
    return BinaryRelation(r.n, out)


def translate_right(s: CayleyTable, r: BinaryRelation, x: int) -> BinaryRelation:
    """The image {(a*x, b*x) : (a, b) in r}."""
    rows = s.rows
    out = [0] * r.n
    for a, b in r.pairs():
        out[rows[a][x]] |= 1 << rows[b][x]
    return BinaryRelation(r.n, out)


@dataclass(frozen=True)
class AdmissibilityReport:
    """Outcome of the three admissibility conditions, with first witnesses.

    balanced:      rel meets left and right equalizers of every a identically
    left_stable:   left-translating rel's overlap with the left equalizer of
                   a*b by b stays inside rel
    right_stable:  the mirrored condition on the right
    """

    balanced: bool
    left_stable: bool
    right_stable: bool
    balanced_witness: Optional[tuple[int, int, int]] = None
    left_witness: Optional[tuple[int, int, int, int]] = None
    right_witness: Optional[tuple[int, int, int, int]] = None

    @property
    def all_satisfied(self) -> bool:
        return self.balanced and self.left_stable and self.right_stable


def _first_diff(r1: BinaryRelation, r2: BinaryRelation) -> tuple[int, int]:
    for x in range(r1.n):
        d = r1.rows[x] ^ r2.rows[x]
        if d:
            return x, (d & -d).bit_length() - 1
    raise AssertionError("relations are equal")


def check_admissibility(s: CayleyTable, rel: BinaryRelation) -> AdmissibilityReport:
    """Evaluate the three admissibility conditions by direct quantification."""
    n = s.n
    rows = s.rows

    balanced, bal_w = True, None
    for a in range(n):
        le = rel & left_equalizer(s, a)
        re = rel & right_equalizer(s, a)
        if le != re:
            x, y = _first_diff(le, re)
            balanced, bal_w = False, (a, x, y)
            break

    left_ok, left_w = True, None
    for a in range(n):
        if not left_ok:
            break
        for b in range(n):
            meet = rel & left_equalizer(s, rows[a][b])
            rb = rows[b]
            hit = next(
                ((x, y) for x, y in meet.pairs() if not rel.has(rb[x], rb[y])), None
            )
            if hit is not None:
                left_ok, left_w = False, (a, b, *hit)
                break

    right_ok, right_w = True, None
    for a in range(n):
        if not right_ok:
            break
        for b in range(n):
            meet = rel & right_equalizer(s, rows[a][b])
            hit = next(
                (
                    (x, y)
                    for x, y in meet.pairs()
                    if not rel.has(rows[x][a], rows[y][a])
                ),
                None,
            )
            if hit is not None:
                right_ok, right_w = False, (a, b, *hit)
                break

    return AdmissibilityReport(balanced, left_ok, right_ok, bal_w, left_w, right_w)


def context_equivalent(mt, size: int, x: int, y: int) -> bool:
    """True when for every a, b in the given monoid table the three
    equalities a*x*b = a*y*b, x*b*a = y*b*a, b*a*x = b*a*y hold or fail
    together."""
    for a in range(size):
        ax, ay = mt[a][x], mt[a][y]
        for b in range(size):
            s1 = mt[ax][b] == mt[ay][b]
            ba = mt[b][a]
            if s1 != (mt[ba][x] == mt[ba][y]):
                return False
            if s1 != (mt[mt[x][b]][a] == mt[mt[y][b]][a]):
                return False
    return True


def canonical_relation(s: CayleyTable) -> BinaryRelation:
    """The relation of context-independent pairs.

    (x, y) is included when, over the carrier with a fresh identity
    adjoined, every sandwiching context yields the three product
    equalities all true or all false.  Always reflexive and symmetric,
    and always balanced; it is the relation the decomposition module
    feeds to the induced congruence.
    """
    mt = adjoin_identity(s).rows
    n = s.n
    rows = [1 << x for x in range(n)]
    for x in range(n):
        for y in range(x + 1, n):
            if context_equivalent(mt, n + 1, x, y):
                rows[x] |= 1 << y
                rows[y] |= 1 << x
    return BinaryRelation(n, rows)


def parse_relation(text: str, n: int) -> BinaryRelation:
    """Parse the relation text format: one "x y" pair per line, '#' comments."""
    pairs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        parts = body.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected two indices, got {body!r}")
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer pair {body!r}") from None
        if not (0 <= x < n and 0 <= y < n):
            raise FormatError(f"line {lineno}: pair ({x}, {y}) outside carrier {n}")
        pairs.append((x, y))
    return BinaryRelation.from_pairs(n, pairs)


def format_relation(r: BinaryRelation) -> str:
    """Serialize a relation as sorted "x y" lines."""
    return "".join(f"{x} {y}\n" for x, y in r.pairs())
