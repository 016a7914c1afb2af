"""Exact linear algebra over Z for finite abelian groups.

A finite abelian group is presented as Z^rank modulo the column span of an
integer relation matrix.  Kernels, images, quotients and linear solving all
reduce to Smith normal form computations carried out on plain Python
integers, so intermediate coefficient growth is harmless.

Matrices are lists of rows of ints; the vectors acted on are columns.
"""

from __future__ import annotations

import itertools
from math import prod

__all__ = [
    "InfiniteGroupError",
    "ContainmentError",
    "smith_normal_form",
    "smith",
    "SmithForm",
    "kernel_basis",
    "preimage_lattice",
    "solve_integer",
    "FinAbGroup",
    "GroupHom",
    "Subgroup",
    "quotient",
]


class InfiniteGroupError(ValueError):
    """The presentation does not define a finite group."""


class ContainmentError(ValueError):
    """Generators do not lie in the claimed ambient group."""


# ---------------------------------------------------------------------------
# matrix helpers


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zero_matrix(rows, cols):
    return [[0] * cols for _ in range(rows)]


def mat_mul(a, b):
    rows = len(a)
    inner = len(b)
    cols = len(b[0]) if inner else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            c = ai[k]
            if c:
                bk = b[k]
                for j in range(cols):
                    oi[j] += c * bk[j]
    return out

def mat_vec(a, x):
    return [sum(c * v for c, v in zip(row, x) if c) for row in a]


def hstack(a, b):
    """Concatenate two matrices with equal row count column-wise."""
    if not a and not b:
        return []
    rows = len(a) if a else len(b)
    a = a if a else [[] for _ in range(rows)]
    b = b if b else [[] for _ in range(rows)]
    if len(a) != len(b):
        raise ValueError("row count mismatch in hstack")
    return [ra + rb for ra, rb in zip(a, b)]


def columns(m):
    if not m:
        return []
    return [[row[j] for row in m] for j in range(len(m[0]))]


def from_columns(cols, rows):
    if not cols:
        return [[] for _ in range(rows)]
    return [[col[i] for col in cols] for i in range(rows)]


# ---------------------------------------------------------------------------
# Smith normal form


class SmithForm:
    """Full record of a Smith decomposition u*m*v = s.

    ``diag`` holds the min(rows, cols) diagonal entries of s (nonnegative,
    each dividing the next among nonzero ones); ``uinv``/``vinv`` are the
    exact inverses of the unimodular transforms.
    """

    __slots__ = ("u", "s", "v", "uinv", "vinv", "diag", "rank", "rows", "cols")

    def __init__(self, u, s, v, uinv, vinv, rows, cols):
        self.u = u
        self.s = s
        self.v = v
        self.uinv = uinv
        self.vinv = vinv
        self.rows = rows
        self.cols = cols
        self.diag = tuple(s[i][i] for i in range(min(rows, cols)))
        self.rank = sum(1 for d in self.diag if d)


def smith(m):
    """Smith normal form with both transforms and their inverses.

    Pivoting is deterministic: the entry of smallest absolute value in the
    trailing block wins, ties broken row-major.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    s = [list(map(int, row)) for row in m]
    for row in s:
        if len(row) != cols:
            raise ValueError("ragged matrix")
    u = identity_matrix(rows)
    uinv = identity_matrix(rows)
    v = identity_matrix(cols)
    vinv = identity_matrix(cols)

    def row_add(i, j, c):
        # row_i += c * row_j
        si, sj = s[i], s[j]
        for k in range(cols):
            if sj[k]:
                si[k] += c * sj[k]
        ui, uj = u[i], u[j]
        for k in range(rows):
            if uj[k]:
                ui[k] += c * uj[k]
        for r in uinv:
            if r[i]:
                r[j] -= c * r[i]

    def row_swap(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]
        for r in uinv:
            r[i], r[j] = r[j], r[i]

    def row_neg(i):
        s[i] = [-x for x in s[i]]
        u[i] = [-x for x in u[i]]
        for r in uinv:
            r[i] = -r[i]

    def col_add(j, i, c):
        # col_j += c * col_i
        for r in s:
            if r[i]:
                r[j] += c * r[i]
        for r in v:
            if r[i]:
                r[j] += c * r[i]
        vi, vj = vinv[i], vinv[j]
        for k in range(cols):
            if vj[k]:
                vi[k] -= c * vj[k]

    def col_swap(i, j):
        for r in s:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        best = None
        for i in range(t, rows):
            si = s[i]
            for j in range(t, cols):
                x = si[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            row_swap(t, pi)
        if pj != t:
            col_swap(t, pj)
        pivot = s[t][t]
        dirty = False
        for i in range(t + 1, rows):
            x = s[i][t]
            if x:
                row_add(i, t, -(x // pivot))
                if s[i][t]:
                    dirty = True
        for j in range(t + 1, cols):
            x = s[t][j]
            if x:
                col_add(j, t, -(x // pivot))
                if s[t][j]:
                    dirty = True
        if dirty:
            continue
        if s[t][t] < 0:
            row_neg(t)
        d = s[t][t]
        fixup = None
        for i in range(t + 1, rows):
            si = s[i]
            for j in range(t + 1, cols):
                if si[j] % d:
                    fixup = i
                    break
            if fixup is not None:
                break
        if fixup is not None:
            row_add(t, fixup, 1)
            continue
        t += 1
    return SmithForm(u, s, v, uinv, vinv, rows, cols)


def smith_normal_form(m):
    """Return (u, s, v) with u*m*v = s in Smith normal form."""
    f = smith(m)
    return f.u, f.s, f.v


def kernel_basis(m):
    """Columns spanning the integer kernel {x : m x = 0}."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if cols == 0:
        return []
    if rows == 0:
        return columns(identity_matrix(cols))
    f = smith(m)
    basis = []
    vcols = columns(f.v)
    for j in range(cols):
        d = f.diag[j] if j < len(f.diag) else 0
        if d == 0:
            basis.append(vcols[j])
    return basis


def preimage_lattice(m, rels):
    """Columns generating the lattice {x : m x lies in the span of rels}.

    ``m`` maps Z^s into Z^t; ``rels`` is t x k.  The result always contains
    the relation lattice of any group presented on Z^s that maps into
    Z^t/rels under m.
    """
    rows = len(m)
    s_cols = len(m[0]) if rows else (len(rels[0]) if rels and rels[0] else 0)
    if rows == 0:
        # trivial target: everything is in the kernel
        return columns(identity_matrix(s_cols))
    n = hstack(m, rels)
    gens = [k[:s_cols] for k in kernel_basis(n)]
    return [g for g in gens if any(g)]


class LinearSolver:
    """Reusable exact solver for m x = b built on one Smith factorization."""

    def __init__(self, m):
        self.rows = len(m)
        self.cols = len(m[0]) if self.rows else 0
        self.f = smith(m) if self.rows and self.cols else None

    def solve(self, b):
        if self.rows == 0:
            return [0] * self.cols
        if self.cols == 0:
            return [] if not any(b) else None
        f = self.f
        c = mat_vec(f.u, b)
        y = [0] * self.cols
        for i in range(self.rows):
            d = f.diag[i] if i < len(f.diag) else 0
            if d:
                if c[i] % d:
                    return None
                y[i] = c[i] // d
            elif c[i]:
                return None
        return mat_vec(f.v, y)


def solve_integer(m, b):
    """One integer solution x of m x = b, or None."""
    return LinearSolver(m).solve(b)


# ---------------------------------------------------------------------------
# groups, homomorphisms, subgroups


class FinAbGroup:
    """Z^rank modulo the column span of an integer relation matrix."""

    def __init__(self, rank, rels):
        self.rank = rank
        rels = [list(map(int, row)) for row in rels]
        if len(rels) != rank:
            raise ValueError("relation matrix must have `rank` rows")
        self.rels = rels
        if rank == 0:
            self._u = []
            self._uinv = []
            self._d = ()
        else:
            f = smith(rels)
            if f.rank < rank:
                raise InfiniteGroupError(
                    "relation lattice has rank %d < %d" % (f.rank, rank)
                )
            self._u = f.u
            self._uinv = f.uinv
            self._d = f.diag[:rank]

    @property
    def invariant_factors(self):
        return tuple(sorted(d for d in self._d if d != 1))

    def order(self):
        return prod(self._d) if self._d else 1

    def zero(self):
        return [0] * self.rank

    def reduce(self, x):
        """Canonical coset representative of x (least nonnegative in the
        diagonalized basis)."""
        if self.rank == 0:
            return []
        y = mat_vec(self._u, x)
        y = [c % d for c, d in zip(y, self._d)]
        return mat_vec(self._uinv, y)

    def is_zero(self, x):
        if self.rank == 0:
            return True
        return all(c % d == 0 for c, d in zip(mat_vec(self._u, x), self._d))

    def eq(self, x, y):
        return self.is_zero([a - b for a, b in zip(x, y)])

    def elements(self):
        """All cosets, one canonical representative each."""
        for y in itertools.product(*(range(d) for d in self._d)):
            yield mat_vec(self._uinv, list(y))

    def decomposition(self):
        """(nontrivial invariant factors, one generator vector per factor)."""
        factors, gens = [], []
        for i, d in enumerate(self._d):
            if d > 1:
                factors.append(d)
                gens.append([row[i] for row in self._uinv])
        return tuple(factors), gens

    def __repr__(self):
        return "FinAbGroup(rank=%d, factors=%s)" % (self.rank, list(self.invariant_factors))


class GroupHom:
    """Homomorphism between presented groups, given by an integer matrix on
    generator exponents.  Well-definedness (matrix maps the source relation
    lattice into the target one) is verified at construction."""

    def __init__(self, source, target, matrix, check=True):
        self.source = source
        self.target = target
        self.matrix = [list(map(int, row)) for row in matrix]
        if len(self.matrix) != target.rank:
            raise ValueError("matrix row count != target rank")
        for row in self.matrix:
            if len(row) != source.rank:
                raise ValueError("matrix column count != source rank")
        if check:
            for col in columns(source.rels):
                if not target.is_zero(mat_vec(self.matrix, col)):
                    raise ValueError("matrix does not respect relations")

    def apply(self, x):
        return self.target.reduce(mat_vec(self.matrix, x))

    def kernel(self):
        gens = preimage_lattice(self.matrix, self.target.rels)
        return Subgroup(self.source, gens)

    def image(self):
        return Subgroup(self.target, columns(self.matrix))

    def solve(self, b):
        """x with apply(x) == b in the target, or None."""
        if self.source.rank == 0:
            return [] if self.target.is_zero(b) else None
        if not hasattr(self, "_solver"):
            self._solver = LinearSolver(hstack(self.matrix, self.target.rels))
        z = self._solver.solve(b)
        if z is None:
            return None
        return self.source.reduce(z[: self.source.rank])


class Subgroup:
    """Subgroup of a FinAbGroup spanned by explicit generator vectors."""

    def __init__(self, parent, gens):
        self.parent = parent
        for g in gens:
            if len(g) != parent.rank:
                raise ContainmentError("generator length != parent rank")
        self.gens = [list(map(int, g)) for g in gens]

    def gens_matrix(self):
        return from_columns(self.gens, self.parent.rank)

    def presentation(self):
        if not hasattr(self, "_pres"):
            rel_cols = preimage_lattice(self.gens_matrix(), self.parent.rels)
            self._pres = FinAbGroup(
                len(self.gens), from_columns(rel_cols, len(self.gens))
            )
        return self._pres

    def order(self):
        return self.presentation().order()

    def embed(self, coords):
        """Abstract coordinates (one per generator) -> parent vector."""
        return self.parent.reduce(mat_vec(self.gens_matrix(), coords))

    def coordinates_of(self, v):
        """Express a parent vector in subgroup coordinates, or None."""
        m = len(self.gens)
        if m == 0:
            return [] if self.parent.is_zero(v) else None
        if not hasattr(self, "_solver"):
            self._solver = LinearSolver(hstack(self.gens_matrix(), self.parent.rels))
        z = self._solver.solve(v)
        if z is None:
            return None
        return z[:m]

    def contains_element(self, v):
        return self.coordinates_of(v) is not None

    def contains(self, other):
        return all(self.contains_element(g) for g in other.gens)

    def same_as(self, other):
        return self.contains(other) and other.contains(self)


def quotient(a, gens):
    """Invariant factors of a / <gens> plus one representative per factor.

    ``gens`` are vectors in Z^a.rank.  Returns (factors, reps) where factors
    is the canonical divisor chain (trivial factors dropped) and reps[i] is
    a lift in a of the i-th factor generator.
    """
    for g in gens:
        if len(g) != a.rank:
            raise ContainmentError("generator length != group rank")
    if a.rank == 0:
        return (), []
    n = hstack(a.rels, from_columns(gens, a.rank))
    f = smith(n)
    if f.rank < a.rank:
        raise InfiniteGroupError("quotient is infinite")
    uinv_cols = columns(f.uinv)
    factors = []
    reps = []
    for i in range(a.rank):
        d = f.diag[i]
        if d > 1:
            factors.append(d)
            reps.append(a.reduce(uinv_cols[i]))
    return tuple(factors), reps
