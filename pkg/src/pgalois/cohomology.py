"""Partial group cohomology H^n(G, alpha, R) through exact integer linear
algebra on the unit groups of the cochain ideals.

An n-cochain assigns to every tuple (g_1, ..., g_n) a unit of the ideal
generated by 1_{g_1} 1_{g_1 g_2} ... 1_{g_1...g_n}.  The coboundary is

    (d^n f)(g_1, ..., g_{n+1}) =
        alpha_{g_1}(f(g_2, ..., g_{n+1}) 1_{g_1^-1})
        * prod_i f(g_1, ..., g_i g_{i+1}, ..., g_{n+1})^{(-1)^i}
        * f(g_1, ..., g_n)^{(-1)^{n+1}},

with every factor first cut to the target tuple's idempotent and inverses
taken inside the cut ideal (the mixed-ideal convention; d o d = identity is
what validates it).
"""

from __future__ import annotations

import itertools
from math import prod

from .abelian import FinAbGroup, GroupHom, from_columns, quotient
from .finring import inverse_in_ideal, unit_group

__all__ = [
    "NotACocycle",
    "Cochain",
    "CochainGroup",
    "Cohomology",
    "CohomologyResult",
    "coboundary",
    "is_cocycle",
]


class NotACocycle(ValueError):
    def __init__(self, tup, labels=None):
        self.tuple = tup
        shown = tuple(labels) if labels else tup
        super().__init__("cocycle identity fails at %s" % (shown,))


class Cochain:
    """Map from G^n to R with values in the prescribed unit ideals."""

    __slots__ = ("action", "degree", "values")

    def __init__(self, action, degree, values, validate=True):
        self.action = action
        self.degree = degree
        G = action.group
        expect = list(itertools.product(G.elements(), repeat=degree))
        if set(values) != set(expect):
            raise ValueError("cochain must assign a value to every %d-tuple" % degree)
        self.values = dict(values)
        if validate:
            for tup in expect:
                e = action.tuple_idem(tup)
                v = self.values[tup]
                if v * e != v or not unit_group(action.ring, e).contains(v):
                    raise ValueError(
                        "value %r at %s is not a unit of its ideal" % (v, tup)
                    )

    def value(self, tup):
        return self.values[tuple(tup)]

    def __eq__(self, other):
        return (
            isinstance(other, Cochain)
            and self.degree == other.degree
            and self.values == other.values
        )

    def __hash__(self):
        return hash(tuple(sorted((t, v.residues) for t, v in self.values.items())))

    def is_identity(self):
        return all(
            v == self.action.tuple_idem(t) for t, v in self.values.items()
        )

    def pointwise_mul(self, other):
        return Cochain(
            self.action,
            self.degree,
            {t: v * other.values[t] for t, v in self.values.items()},
            validate=False,
        )

    def pointwise_inv(self):
        return Cochain(
            self.action,
            self.degree,
            {
                t: inverse_in_ideal(v, self.action.tuple_idem(t))
                for t, v in self.values.items()
            },
            validate=False,
        )

    def __repr__(self):
        return "Cochain(n=%d, %s)" % (
            self.degree,
            {t: list(v.residues) for t, v in sorted(self.values.items())},
        )


def coboundary(f):
    """d^n f as a degree n+1 cochain."""
    a = f.action
    G = a.group
    n = f.degree
    vals = {}
    for tup in itertools.product(G.elements(), repeat=n + 1):
        e_t = a.tuple_idem(tup)
        acc = a.transport_cut(tup[0], f.value(tup[1:])) * e_t
        for i in range(1, n + 1):
            merged = tup[: i - 1] + (G.mul(tup[i - 1], tup[i]),) + tup[i + 1 :]
            t = f.value(merged) * e_t
            acc = acc * (t if i % 2 == 0 else inverse_in_ideal(t, e_t))
        last = f.value(tup[:n]) * e_t
        acc = acc * (last if (n + 1) % 2 == 0 else inverse_in_ideal(last, e_t))
        vals[tup] = acc
    return Cochain(a, n + 1, vals, validate=False)


def is_cocycle(f):
    """(True, None) or (False, first violating tuple)."""
    d = coboundary(f)
    for tup in sorted(d.values):
        if d.values[tup] != f.action.tuple_idem(tup):
            return False, tup
    return True, None


class CochainGroup:
    """C^n(G, alpha, R) as a product of ideal unit groups, one coordinate
    block per tuple; dlog/exp translate cochains to exponent vectors."""

    def __init__(self, action, n):
        self.action = action
        self.n = n
        G = action.group
        self.tuples = list(itertools.product(G.elements(), repeat=n))
        self.units = [unit_group(action.ring, action.tuple_idem(t)) for t in self.tuples]
        self.offsets = []
        off = 0
        for u in self.units:
            self.offsets.append(off)
            off += u.rank
        self.rank = off
        self.orders = [o for u in self.units for _, _, o in u.factors]
        rels = [[0] * self.rank for _ in range(self.rank)]
        for i, o in enumerate(self.orders):
            rels[i][i] = o
        self.group = FinAbGroup(self.rank, rels)

    def order(self):
        return prod(self.orders) if self.orders else 1

    def identity(self):
        return Cochain(
            self.action,
            self.n,
            {t: u.e for t, u in zip(self.tuples, self.units)},
            validate=False,
        )

    def dlog(self, f):
        if f.degree != self.n:
            raise ValueError("degree mismatch")
        vec = []
        for t, u in zip(self.tuples, self.units):
            vec.extend(u.dlog(f.value(t)))
        return vec

    def exp(self, vec):
        vals = {}
        for t, u, off in zip(self.tuples, self.units, self.offsets):
            vals[t] = u.exp(list(vec[off : off + u.rank]))
        return Cochain(self.action, self.n, vals, validate=False)

    def random(self, rng):
        return self.exp([rng.randrange(o) for o in self.orders])

    def enumerate_cochains(self):
        for vec in itertools.product(*(range(o) for o in self.orders)):
            yield self.exp(list(vec))

    def contains(self, f):
        try:
            self.dlog(f)
        except Exception:
            return False
        return True


class CohomologyResult:
    __slots__ = ("n", "factors", "representatives", "z_order", "b_order")

    def __init__(self, n, factors, representatives, z_order, b_order):
        self.n = n
        self.factors = tuple(factors)
        self.representatives = list(representatives)
        self.z_order = z_order
        self.b_order = b_order

    @property
    def order(self):
        return self.z_order // self.b_order

    def __repr__(self):
        return "H^%d = %s" % (self.n, list(self.factors) or "0")


class Cohomology:
    """Cohomology engine for one partial action; caches cochain groups and
    coboundary matrices up to a configurable degree."""

    def __init__(self, action, max_degree=4):
        self.action = action
        self.max_degree = max_degree
        self._groups = {}
        self._matrices = {}

    def cochain_group(self, n):
        if n < 0 or n > self.max_degree:
            raise ValueError("degree %d outside 0..%d" % (n, self.max_degree))
        if n not in self._groups:
            self._groups[n] = CochainGroup(self.action, n)
        return self._groups[n]

    def coboundary_matrix(self, n):
        """d^n as a GroupHom from C^n to C^{n+1} on exponent vectors."""
        if n not in self._matrices:
            src = self.cochain_group(n)
            tgt = self.cochain_group(n + 1)
            cols = []
            for i in range(src.rank):
                vec = [0] * src.rank
                vec[i] = 1
                cols.append(tgt.dlog(coboundary(src.exp(vec))))
            matrix = from_columns(cols, tgt.rank)
            self._matrices[n] = GroupHom(src.group, tgt.group, matrix)
        return self._matrices[n]

    def cocycles(self, n):
        """Z^n = ker d^n as a subgroup of the cochain group."""
        return self.coboundary_matrix(n).kernel()

    def coboundaries(self, n):
        """B^n = im d^{n-1} as a subgroup of the cochain group."""
        if n == 0:
            raise ValueError("no coboundaries in degree 0")
        return self.coboundary_matrix(n - 1).image()

    def cohomology_group(self, n):
        """Invariant factors of H^n plus one explicit cocycle per factor."""
        src = self.cochain_group(n)
        z = self.cocycles(n)
        zp = z.presentation()
        if n == 0:
            factors, gcoords = zp.decomposition()
            reps = [src.exp(z.embed(c)) for c in gcoords]
            return CohomologyResult(0, factors, reps, zp.order(), 1)
        b = self.coboundaries(n)
        if not z.contains(b):
            raise AssertionError("coboundaries escape the cocycles; engine bug")
        bcoords = [z.coordinates_of(g) for g in b.gens]
        factors, reps_coords = quotient(zp, bcoords)
        reps = [src.exp(z.embed(rc)) for rc in reps_coords]
        return CohomologyResult(n, factors, reps, zp.order(), b.order())

    def coboundary_solve(self, f):
        """rho with d(rho) = f, or None; f must be a cocycle."""
        n = f.degree
        if n < 1:
            raise ValueError("need degree >= 1")
        ok, witness = is_cocycle(f)
        if not ok:
            raise NotACocycle(witness, [self.action.group.label(g) for g in witness])
        h = self.coboundary_matrix(n - 1)
        target = self.cochain_group(n)
        x = h.solve(target.dlog(f))
        if x is None:
            return None
        return self.cochain_group(n - 1).exp(x)
