"""Congruences induced by a relation, and quotient semigroups.

Two elements are identified when the relation meets their left
equalizers identically.  For admissible relations this is always a
congruence; compatibility is nevertheless verified exhaustively, because
callers may supply relations that are not admissible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CayleyTable, is_commutative, validate
from .relations import BinaryRelation, left_equalizer, right_equalizer


class NotACongruence(ValueError):
    """The induced equivalence is not compatible with the product."""

    def __init__(self, witness: tuple, detail: str):
        self.witness = witness
        self.detail = detail
        super().__init__(f"{detail}; witness {witness}")


@dataclass(frozen=True)
class Congruence:
    """A partition of {0..n-1} verified compatible with the product."""

    n: int
    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    def are_related(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]


@dataclass(frozen=True)
class QuotientSemigroup:
    quotient: CayleyTable
    origin: Congruence


def _partition_by_left(s: CayleyTable, rel: BinaryRelation):
    groups: dict[tuple[int, ...], list[int]] = {}
    for a in range(s.n):
        groups.setdefault((rel & left_equalizer(s, a)).rows, []).append(a)
    return sorted(groups.values())


def induced_congruence(s: CayleyTable, rel: BinaryRelation) -> Congruence:
    """Partition elements by the relation's overlap with their left
    equalizers, then verify two-sided compatibility.

    Raises NotACongruence with a witness (x, y, c) when elements x and y
    share a class but multiplication by c separates their products; this
    can happen only when `rel` is not admissible.
    """
    if rel.n != s.n:
        raise ValueError("relation carrier does not match the table")
    classes = _partition_by_left(s, rel)
    class_of = [0] * s.n
    for ci, cls in enumerate(classes):
        for x in cls:
            class_of[x] = ci
    rows = s.rows
    for cls in classes:
        for i, x in enumerate(cls):
            for y in cls[i + 1 :]:
                for c in range(s.n):
                    if class_of[rows[c][x]] != class_of[rows[c][y]]:
                        raise NotACongruence(
                            (x, y, c), "left multiplication separates related elements"
                        )
                    if class_of[rows[x][c]] != class_of[rows[y][c]]:
                        raise NotACongruence(
                            (x, y, c), "right multiplication separates related elements"
                        )
    return Congruence(s.n, tuple(class_of), tuple(tuple(c) for c in classes))


def dual_induced_agrees(s: CayleyTable, rel: BinaryRelation) -> bool:
    """True when partitioning by right equalizers yields the same classes
    as partitioning by left equalizers.  Must hold whenever `rel` is
    balanced."""
    left = _partition_by_left(s, rel)
    groups: dict[tuple[int, ...], list[int]] = {}
    for a in range(s.n):
        groups.setdefault((rel & right_equalizer(s, a)).rows, []).append(a)
    return left == sorted(groups.values())


def quotient(s: CayleyTable, c: Congruence) -> QuotientSemigroup:
    """Build the quotient table over class indices (ordered by minimal
    representative) and confirm it does not depend on representatives."""
    reps = [cls[0] for cls in c.classes]
    cls_of = c.class_of
    rows = s.rows
    q = [[cls_of[rows[a][b]] for b in reps] for a in reps]
    for x in range(s.n):
        qx = q[cls_of[x]]
        for y in range(s.n):
            if cls_of[rows[x][y]] != qx[cls_of[y]]:
                raise NotACongruence(
                    (x, y), "product class depends on the choice of representatives"
                )
    return QuotientSemigroup(validate(q), c)


def is_band(s: CayleyTable) -> bool:
    """Every element is idempotent."""
    return all(s.rows[x][x] == x for x in range(s.n))


def is_semilattice(s: CayleyTable) -> bool:
    return is_band(s) and is_commutative(s)
