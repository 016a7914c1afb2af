"""Finite commutative rings as CRT products of Z/p^k.

Composite moduli are split into prime-power components at construction, so
idempotents are exactly the 0/1 support vectors and unit groups of
idempotent-generated ideals decompose componentwise.
"""

from __future__ import annotations

import itertools
from math import prod

from .abelian import FinAbGroup

__all__ = [
    "RingError",
    "NotAUnit",
    "Ring",
    "RingElem",
    "parse_ring",
    "idempotents",
    "inverse_in_ideal",
    "unit_group",
    "UnitIdealGroup",
]


class RingError(ValueError):
    pass


class NotAUnit(RingError):
    """Raised when an element has no inverse in the requested ideal; carries
    the offending component index."""

    def __init__(self, component, value):
        self.component = component
        self.value = value
        super().__init__("not a unit at component %d (value %d)" % (component, value))


def _factorize(m):
    """Prime factorization by trial division; fine at desk scale."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            k = 0
            while m % d == 0:
                m //= d
                k += 1
            out.append((d, k))
        d += 1
    if m > 1:
        out.append((m, 1))
    return out


class Ring:
    """Product of local rings Z/p^k with a provenance map from the user's
    moduli to the split components."""

    __slots__ = ("components", "split")

    def __init__(self, components, split):
        self.components = tuple(int(c) for c in components)
        self.split = tuple(tuple(s) for s in split)

    def el(self, residues):
        return RingElem(self, residues)

    @property
    def zero(self):
        return RingElem(self, (0,) * len(self.components))

    @property
    def one(self):
        return RingElem(self, (1,) * len(self.components))

    def idem(self, support):
        supp = set(support)
        return RingElem(self, tuple(1 if i in supp else 0 for i in range(len(self.components))))

    def basis(self, i):
        """Primitive idempotent e_i."""
        return self.idem([i])

    def order(self):
        return prod(self.components)

    def elements(self):
        for residues in itertools.product(*(range(m) for m in self.components)):
            yield RingElem(self, residues)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "Ring(%s)" % (list(self.components),)


def parse_ring(moduli):
    """CRT-split the given moduli into a Ring of prime-power components."""
    components = []
    split = []
    for m in moduli:
        m = int(m)
        if m < 2:
            raise RingError("modulus %d < 2" % m)
        idxs = []
        for p, k in _factorize(m):
            idxs.append(len(components))
            components.append(p**k)
        split.append(tuple(idxs))
    return Ring(components, split)


class RingElem:
    __slots__ = ("ring", "residues")

    def __init__(self, ring, residues):
        residues = tuple(int(r) for r in residues)
        if len(residues) != len(ring.components):
            raise RingError(
                "element has %d residues, ring has %d components"
                % (len(residues), len(ring.components))
            )
        self.ring = ring
        self.residues = tuple(r % m for r, m in zip(residues, ring.components))

    def _check(self, other):
        if self.ring != other.ring:
            raise RingError("component count / ring mismatch")

    def __add__(self, other):
        self._check(other)
        return RingElem(
            self.ring, tuple(a + b for a, b in zip(self.residues, other.residues))
        )

    def __neg__(self):
        return RingElem(self.ring, tuple(-a for a in self.residues))

    def __sub__(self, other):
        self._check(other)
        return RingElem(
            self.ring, tuple(a - b for a, b in zip(self.residues, other.residues))
        )

    def __mul__(self, other):
        self._check(other)
        return RingElem(
            self.ring, tuple(a * b for a, b in zip(self.residues, other.residues))
        )

    def scale(self, k):
        return RingElem(self.ring, tuple(k * a for a in self.residues))

    def __eq__(self, other):
        return (
            isinstance(other, RingElem)
            and self.ring == other.ring
            and self.residues == other.residues
        )

    def __hash__(self):
        return hash(self.residues)

    def is_zero(self):
        return not any(self.residues)

    def is_idempotent(self):
        return all(r * r % m == r for r, m in zip(self.residues, self.ring.components))

    def support(self):
        return tuple(i for i, r in enumerate(self.residues) if r)

    def __repr__(self):
        return "el%s" % (list(self.residues),)


def idempotents(ring):
    """All idempotents, in lexicographic support order."""
    n = len(ring.components)
    return [ring.el(bits) for bits in itertools.product((0, 1), repeat=n)]


def inverse_in_ideal(x, e):
    """The inverse of x in the ideal R*e (with identity e).

    Requires x*e == x; raises NotAUnit at the first component of the support
    of e where x is not invertible.
    """
    if x * e != x:
        raise RingError("element does not lie in the ideal of %r" % (e,))
    out = []
    for i, (xr, er, m) in enumerate(zip(x.residues, e.residues, x.ring.components)):
        if not er:
            out.append(0)
            continue
        try:
            out.append(pow(xr, -1, m))
        except ValueError:
            raise NotAUnit(i, xr) from None
    return x.ring.el(out)


# ---------------------------------------------------------------------------
# unit groups of idempotent ideals


def _multiplicative_order(g, m, phi, phi_factors):
    if pow(g, phi, m) != 1:
        return None
    for q, _ in phi_factors:
        if pow(g, phi // q, m) == 1:
            return None
    return phi


def _primitive_root(p, k):
    m = p**k
    phi = p ** (k - 1) * (p - 1)
    phi_factors = _factorize(phi)
    for g in range(2, m):
        if g % p == 0:
            continue
        if _multiplicative_order(g, m, phi, phi_factors):
            return g
    raise RingError("no primitive root mod %d" % m)  # pragma: no cover


def _unit_factors(m):
    """Cyclic generators of U(Z/m) for a prime power m.

    Odd p: one searched primitive root.  p = 2: trivial for k = 1, the
    order-2 generator 3 for k = 2, and {-1, 3} of orders 2 and 2^(k-2)
    for k >= 3.
    """
    (p, k), = _factorize(m)
    if p == 2:
        if k == 1:
            return []
        if k == 2:
            return [(3, 2)]
        return [(m - 1, 2), (3, 2 ** (k - 2))]
    return [(_primitive_root(p, k), p ** (k - 1) * (p - 1))]


_DLOG_TABLES = {}


def _dlog_table(m):
    """value -> exponent tuple over the cyclic factors of U(Z/m)."""
    table = _DLOG_TABLES.get(m)
    if table is None:
        factors = _unit_factors(m)
        table = {}
        for exps in itertools.product(*(range(o) for _, o in factors)):
            v = 1
            for (g, _), e in zip(factors, exps):
                v = v * pow(g, e, m) % m
            table[v] = exps
        if not factors:
            table = {1 % m: ()}
        _DLOG_TABLES[m] = table
    return table


class UnitIdealGroup:
    """U(R*e) as an explicit finite abelian group.

    ``factors`` lists (component, generator value, order) triples; dlog and
    exp translate between ideal units and exponent vectors, one coordinate
    per factor.
    """

    def __init__(self, ring, e):
        if not e.is_idempotent():
            raise RingError("%r is not idempotent" % (e,))
        self.ring = ring
        self.e = e
        self.factors = []
        for c in e.support():
            for g, o in _unit_factors(ring.components[c]):
                self.factors.append((c, g, o))
        rank = len(self.factors)
        rels = [[0] * rank for _ in range(rank)]
        for i, (_, _, o) in enumerate(self.factors):
            rels[i][i] = o
        self.group = FinAbGroup(rank, rels)

    @property
    def rank(self):
        return len(self.factors)

    def order(self):
        return prod(o for _, _, o in self.factors) if self.factors else 1

    def identity(self):
        return self.e

    def generators(self):
        out = []
        for i in range(len(self.factors)):
            vec = [0] * len(self.factors)
            vec[i] = 1
            out.append(self.exp(vec))
        return out

    def exp(self, vec):
        residues = list(self.e.residues)
        for (c, g, o), k in zip(self.factors, vec):
            m = self.ring.components[c]
            residues[c] = residues[c] * pow(g, k % o, m) % m
        return self.ring.el(residues)

    def dlog(self, x):
        """Exponent vector of a unit of R*e; total on U(R*e)."""
        if x * self.e != x:
            raise RingError("%r is not in the ideal of %r" % (x, self.e))
        vec = []
        for c in self.e.support():
            m = self.ring.components[c]
            try:
                exps = _dlog_table(m)[x.residues[c]]
            except KeyError:
                raise NotAUnit(c, x.residues[c]) from None
            vec.extend(exps)
        return vec

    def contains(self, x):
        try:
            self.dlog(x)
        except RingError:
            return False
        return True

    def elements(self):
        for vec in itertools.product(*(range(o) for _, _, o in self.factors)):
            yield self.exp(list(vec))

    def __repr__(self):
        return "UnitIdealGroup(e=%r, orders=%s)" % (
            self.e,
            [o for _, _, o in self.factors],
        )


def unit_group(ring, e):
    return UnitIdealGroup(ring, e)
