"""Finite groups by Cayley table, with cyclic and direct-product builders."""

from __future__ import annotations

import itertools

__all__ = ["GroupValidationError", "FiniteGroup", "build_group"]


class GroupValidationError(ValueError):
    pass


class FiniteGroup:
    """Group on indices 0..n-1 with identity at 0; the table is fully
    validated (identity, inverses, associativity) at construction."""

    __slots__ = ("table", "labels", "inv")

    def __init__(self, table, labels=None):
        n = len(table)
        table = tuple(tuple(int(x) for x in row) for row in table)
        for row in table:
            if len(row) != n:
                raise GroupValidationError("table is not square")
            for x in row:
                if not 0 <= x < n:
                    raise GroupValidationError("table entry %d out of range" % x)
        if n == 0:
            raise GroupValidationError("empty table")
        for i in range(n):
            if table[0][i] != i or table[i][0] != i:
                raise GroupValidationError(
                    "element 0 is not a two-sided identity at %d" % i
                )
        inv = [None] * n
        for i in range(n):
            for j in range(n):
                if table[i][j] == 0 and table[j][i] == 0:
                    inv[i] = j
                    break
            if inv[i] is None:
                raise GroupValidationError("no inverse for element %d" % i)
        for i in range(n):
            for j in range(n):
                ij = table[i][j]
                for k in range(n):
                    if table[ij][k] != table[i][table[j][k]]:
                        raise GroupValidationError(
                            "associativity fails at triple (%d, %d, %d)" % (i, j, k)
                        )
        self.table = table
        self.inv = tuple(inv)
        self.labels = tuple(labels) if labels else tuple("g%d" % i for i in range(n))

    @property
    def order(self):
        return len(self.table)

    def mul(self, i, j):
        return self.table[i][j]

    def inverse(self, i):
        return self.inv[i]

    def elements(self):
        return range(self.order)

    def label(self, i):
        return self.labels[i]

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return "FiniteGroup(order=%d)" % self.order


def _cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def build_group(kind, *, order=None, factors=None, table=None):
    """Build a validated group: kind is "cyclic", "product" or "table"."""
    if kind == "cyclic":
        if not order or order < 1:
            raise GroupValidationError("cyclic group needs order >= 1")
        return FiniteGroup(_cyclic_table(order))
    if kind == "product":
        if not factors:
            raise GroupValidationError("product group needs factors")
        elems = list(itertools.product(*(range(n) for n in factors)))
        index = {e: i for i, e in enumerate(elems)}
        tab = [
            [
                index[tuple((a + b) % n for a, b, n in zip(x, y, factors))]
                for y in elems
            ]
            for x in elems
        ]
        return FiniteGroup(tab)
    if kind == "table":
        if table is None:
            raise GroupValidationError("explicit group needs a table")
        return FiniteGroup(table)
    raise GroupValidationError("unknown group kind %r" % (kind,))


def generators_of(group):
    """Canonical generating set: for cyclic-product style tables this finds a
    small set greedily; used to attach permutation data to generators."""
    n = group.order
    gens = []
    reached = {0}
    for i in range(1, n):
        if i in reached:
            continue
        gens.append(i)
        frontier = list(reached)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = group.mul(g, x)
                if y not in reached:
                    reached.add(y)
                    frontier.append(y)
        if len(reached) == n:
            break
    return gens
