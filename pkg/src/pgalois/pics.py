"""The Picard semigroup of a finite commutative ring and the induced
partial action on it.

Finite commutative rings are products of local rings, so every rank <= 1
projective class is [Re] for an idempotent e: the semigroup is the
idempotent semilattice, the induced action alpha* transports supports, and
the fixed classes are exactly the idempotents of the invariant subring."""

from __future__ import annotations

import itertools

from .finring import idempotents
from .paction import invariant_subring
from .report import Report

__all__ = [
    "PicSClass",
    "pics",
    "domain_classes",
    "alpha_star",
    "fixed_classes",
    "semilattice_action_report",
]


class PicSClass:
    """[Re] keyed by its support idempotent; product of classes is the
    product of idempotents, [1] the identity and [0] the zero."""

    __slots__ = ("idem",)

    def __init__(self, idem):
        if not idem.is_idempotent():
            raise ValueError("%r is not idempotent" % (idem,))
        self.idem = idem

    def __mul__(self, other):
        return PicSClass(self.idem * other.idem)

    def __eq__(self, other):
        return isinstance(other, PicSClass) and self.idem == other.idem

    def __hash__(self):
        return hash(self.idem)

    def inverse(self):
        # every class is its own inverse: [E][E*] = [Re] with E* = E here
        return self

    def is_zero(self):
        return self.idem.is_zero()

    def __repr__(self):
        return "[Re%s]" % (list(self.idem.residues),)


def pics(ring):
    """All classes, in lexicographic support order."""
    return [PicSClass(e) for e in idempotents(ring)]


def domain_classes(a, g):
    """X_g = [D_g] PicS(R): classes supported inside D_g."""
    e_g = a.one[g]
    return [c for c in pics(a.ring) if c.idem * e_g == c.idem]


def alpha_star(a, g, c):
    """alpha*_g([Re]) = [R alpha_g(e)] for [Re] in X_{g^-1}."""
    gi = a.group.inverse(g)
    if c.idem * a.one[gi] != c.idem:
        raise ValueError(
            "class %r is outside the domain X_{%s^-1}" % (c, a.group.label(g))
        )
    return PicSClass(a.transport_cut(g, c.idem))


def fixed_classes(a):
    """PicS(R)^{alpha*}: classes with alpha_g(e 1_{g^-1}) = e 1_g for all g."""
    out = []
    for c in pics(a.ring):
        e = c.idem
        if all(
            a.transport_cut(g, e) == e * a.one[g] for g in a.group.elements()
        ):
            out.append(c)
    return out


def semilattice_action_report(a):
    """alpha* satisfies the partial-action axioms on the class semilattice,
    and the fixed classes agree with the idempotents of R^alpha."""
    rep = Report()
    G = a.group
    classes = pics(a.ring)

    ok = a.one[0] == a.ring.one and all(
        alpha_star(a, 0, c) == c for c in classes
    )
    rep.add("star-axiom-i", ok)

    ok, wit = True, None
    for g, h in itertools.product(G.elements(), repeat=2):
        gi = G.inverse(g)
        dom = [c for c in classes if c.idem * (a.one[gi] * a.one[h]) == c.idem]
        lhs = {alpha_star(a, g, c) for c in dom}
        gh = G.mul(g, h)
        rhs = {c for c in classes if c.idem * (a.one[g] * a.one[gh]) == c.idem}
        if lhs != rhs:
            ok, wit = False, {"g": G.label(g), "h": G.label(h)}
            break
    rep.add("star-axiom-ii", ok, wit)

    ok, wit = True, None
    for g, h in itertools.product(G.elements(), repeat=2):
        gh = G.mul(g, h)
        hi, ghi = G.inverse(h), G.inverse(gh)
        dom = [
            c
            for c in classes
            if c.idem * (a.one[hi] * a.one[ghi]) == c.idem
        ]
        for c in dom:
            if alpha_star(a, g, alpha_star(a, h, c)) != alpha_star(a, gh, c):
                ok, wit = False, {"g": G.label(g), "h": G.label(h), "class": repr(c)}
                break
        if not ok:
            break
    rep.add("star-composition", ok, wit)

    fixed = {c.idem for c in fixed_classes(a)}
    inv_idems = set(invariant_subring(a).idempotents())
    rep.add(
        "fixed-equals-invariant-idempotents",
        fixed == inv_idems,
        None
        if fixed == inv_idems
        else {
            "fixed": sorted(list(e.residues) for e in fixed),
            "invariant": sorted(list(e.residues) for e in inv_idems),
        },
    )

    closed = all(
        (c1.idem * c2.idem) in fixed
        for c1 in fixed_classes(a)
        for c2 in fixed_classes(a)
    )
    has_ends = a.ring.zero in fixed and a.ring.one in fixed
    rep.add("fixed-submonoid", closed and has_ends)
    return rep
