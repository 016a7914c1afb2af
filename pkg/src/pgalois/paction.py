"""Unital (twisted) partial actions of a finite group on a finite ring.

An action is stored as one idempotent 1_g per group element plus a support
bijection pi_g realizing the ring isomorphism alpha_g : D_{g^-1} -> D_g
componentwise.  Ring automorphisms of Z/p^k are trivial, so for this ring
class the support bijection carries the whole action.
"""

from __future__ import annotations

import itertools

from .finring import Ring, RingElem, RingError, inverse_in_ideal, unit_group
from .report import Report

__all__ = [
    "ActionError",
    "PartialAction",
    "Twisting",
    "SubringDescriptor",
    "global_action",
    "restrict_global",
    "validate_partial",
    "validate_twisted",
    "invariant_subring",
]


class ActionError(ValueError):
    pass


class PartialAction:
    __slots__ = ("group", "ring", "one", "pi")

    def __init__(self, group, ring, one, pi):
        self.group = group
        self.ring = ring
        if len(one) != group.order or len(pi) != group.order:
            raise ActionError("need one idempotent and one map per group element")
        self.one = tuple(one)
        self.pi = tuple(dict(p) for p in pi)
        self._check_wellformed()

    def _check_wellformed(self):
        mods = self.ring.components
        for g in self.group.elements():
            e = self.one[g]
            if not isinstance(e, RingElem) or e.ring != self.ring:
                raise ActionError("idempotent for %s not in the ring" % self.group.label(g))
            if not e.is_idempotent():
                raise ActionError("1_%s is not idempotent" % self.group.label(g))
            src = set(self.one[self.group.inverse(g)].support())
            dst = set(e.support())
            p = self.pi[g]
            if set(p.keys()) != src or set(p.values()) != dst or len(set(p.values())) != len(p):
                raise ActionError(
                    "map for %s is not a bijection supp(1_{g^-1}) -> supp(1_g)"
                    % self.group.label(g)
                )
            for i, j in p.items():
                if mods[i] != mods[j]:
                    raise ActionError(
                        "map for %s sends modulus %d to modulus %d"
                        % (self.group.label(g), mods[i], mods[j])
                    )

    def support(self, g):
        return self.one[g].support()

    def is_global(self):
        return all(e == self.ring.one for e in self.one)

    def apply(self, g, x):
        """alpha_g(x); requires x in D_{g^-1}."""
        if x * self.one[self.group.inverse(g)] != x:
            raise ActionError(
                "element %r is outside D_{%s^-1}" % (x, self.group.label(g))
            )
        return self.transport_cut(g, x)

    def transport_cut(self, g, x):
        """alpha_g(x * 1_{g^-1}); total in x."""
        res = [0] * len(self.ring.components)
        for i, j in self.pi[g].items():
            res[j] = x.residues[i]
        return self.ring.el(res)

    def idem(self, *gs):
        """Product of the domain idempotents 1_g for the given elements."""
        e = self.ring.one
        for g in gs:
            e = e * self.one[g]
        return e

    def tuple_idem(self, tup):
        """1_{g1} 1_{g1 g2} ... 1_{g1...gn} for a tuple of group elements."""
        e = self.ring.one
        acc = 0
        for g in tup:
            acc = self.group.mul(acc, g)
            e = e * self.one[acc]
        return e

    def __repr__(self):
        return "PartialAction(|G|=%d, ring=%r)" % (self.group.order, self.ring)


def global_action(group, ring, gen_perms):
    """Global action from component permutations attached to generators.

    ``gen_perms`` maps group element indices to permutations of the ring
    components.  The permutations are extended multiplicatively over the
    whole group and the extension is verified to be a homomorphism.
    """
    n = len(ring.components)
    perms = {0: tuple(range(n))}
    for g, p in gen_perms.items():
        p = tuple(int(x) for x in p)
        if sorted(p) != list(range(n)):
            raise ActionError("not a permutation of %d components: %r" % (n, p))
        perms[g] = p
    frontier = list(perms)
    while frontier:
        x = frontier.pop()
        for g in gen_perms:
            y = group.mul(g, x)
            if y in perms:
                continue
            # beta_{g x} = beta_g o beta_x
            pg, px = perms[g], perms[x]
            perms[y] = tuple(pg[px[i]] for i in range(n))
            frontier.append(y)
    if len(perms) != group.order:
        raise ActionError("the given generators do not generate the group")
    for g in group.elements():
        for h in group.elements():
            gh = group.mul(g, h)
            pg, ph = perms[g], perms[h]
            if perms[gh] != tuple(pg[ph[i]] for i in range(n)):
                raise ActionError(
                    "permutations are not a homomorphism at (%s, %s)"
                    % (group.label(g), group.label(h))
                )
    one = [ring.one] * group.order
    pi = [
        {i: perms[g][i] for i in range(n)}
        for g in group.elements()
    ]
    return PartialAction(group, ring, one, pi)


def restrict_global(beta, e):
    """Restrict a global action to the ideal R*e, a ring in its own right.

    D_g becomes Re * beta_g(e) and alpha_g the restriction of beta_g; the
    result lives on the ring with components supp(e).
    """
    if not beta.is_global():
        raise ActionError("restriction needs a global action")
    if not e.is_idempotent():
        raise ActionError("%r is not idempotent" % (e,))
    supp = list(e.support())
    if not supp:
        raise ActionError("restriction to the zero ring is rejected")
    sset = set(supp)
    new_ring = Ring(
        [beta.ring.components[i] for i in supp], [(k,) for k in range(len(supp))]
    )
    new_of_old = {old: new for new, old in enumerate(supp)}
    one = []
    pi = []
    for g in beta.group.elements():
        perm = beta.pi[g]
        mapping = {
            new_of_old[i]: new_of_old[perm[i]] for i in supp if perm[i] in sset
        }
        one.append(new_ring.idem(mapping.values()))
        pi.append(mapping)
    return PartialAction(beta.group, new_ring, one, pi)


def validate_partial(a):
    """Axioms (i)-(iii) plus the composition identity, with witnesses."""
    rep = Report()
    G = a.group
    ident = a.one[0] == a.ring.one and all(a.pi[0][i] == i for i in a.pi[0])
    rep.add("axiom-i", ident, None if ident else "1_1 or alpha_1 nontrivial")

    ok, wit = True, None
    for g, h in itertools.product(G.elements(), repeat=2):
        src = set(a.support(G.inverse(g))) & set(a.support(h))
        lhs = {a.pi[g][i] for i in src}
        rhs = set(a.support(g)) & set(a.support(G.mul(g, h)))
        if lhs != rhs:
            ok, wit = False, {"g": G.label(g), "h": G.label(h)}
            break
    rep.add("axiom-ii", ok, wit)

    ok, wit = True, None
    for g, h in itertools.product(G.elements(), repeat=2):
        gh = G.mul(g, h)
        dom = set(a.support(G.inverse(h))) & set(a.support(G.inverse(gh)))
        for i in dom:
            j = a.pi[h].get(i)
            if j is None or j not in a.pi[g]:
                ok, wit = False, {"g": G.label(g), "h": G.label(h), "component": i}
                break
            if a.pi[g][j] != a.pi[gh].get(i):
                ok, wit = False, {"g": G.label(g), "h": G.label(h), "component": i}
                break
        if not ok:
            break
    rep.add("axiom-iii", ok, wit)

    ok, wit = True, None
    for g, h in itertools.product(G.elements(), repeat=2):
        gh = G.mul(g, h)
        for c in range(len(a.ring.components)):
            y = a.ring.basis(c)
            lhs = a.transport_cut(g, a.transport_cut(h, y))
            rhs = a.transport_cut(gh, y) * a.one[g]
            if lhs != rhs:
                ok, wit = False, {"g": G.label(g), "h": G.label(h), "component": c}
                break
        if not ok:
            break
    rep.add("eq-prodp", ok, wit)
    return rep


class Twisting:
    """Unit table omega_{g,h} in U(D_g D_{gh}); absent entries default to
    the trivial value 1_g 1_{gh}."""

    __slots__ = ("action", "table")

    def __init__(self, action, entries=None):
        self.action = action
        G = action.group
        table = {}
        entries = dict(entries or {})
        for g, h in itertools.product(G.elements(), repeat=2):
            v = entries.pop((g, h), None)
            if v is None:
                v = action.idem(g, G.mul(g, h))
            table[(g, h)] = v
        if entries:
            raise ActionError("twist entries for unknown pairs: %s" % sorted(entries))
        self.table = table

    @classmethod
    def trivial(cls, action):
        return cls(action, {})

    def entry(self, g, h):
        return self.table[(g, h)]

    def is_trivial(self):
        G = self.action.group
        return all(
            self.table[(g, h)] == self.action.idem(g, G.mul(g, h))
            for g, h in itertools.product(G.elements(), repeat=2)
        )

    def scaled_by_coboundary(self, rho_values):
        """New twisting (delta^1 rho) * omega for a 1-cochain g -> rho(g)."""
        a = self.action
        G = a.group
        entries = {}
        for g, h in itertools.product(G.elements(), repeat=2):
            gh = G.mul(g, h)
            e = a.idem(g, gh)
            d = (
                a.transport_cut(g, rho_values[h])
                * inverse_in_ideal(rho_values[gh] * e, e)
                * (rho_values[g] * e)
            )
            entries[(g, h)] = d * self.table[(g, h)]
        return Twisting(a, entries)


def validate_twisted(a, w):
    """Axioms (iv)-(v), unit membership, and the derived identity
    alpha_g(omega_{g^-1,g}) = omega_{g,g^-1} (an engine-consistency check,
    reported under its own name)."""
    rep = Report()
    G = a.group

    ok, wit = True, None
    for g, h in itertools.product(G.elements(), repeat=2):
        e = a.idem(g, G.mul(g, h))
        v = w.entry(g, h)
        if v * e != v or not unit_group(a.ring, e).contains(v):
            ok, wit = False, {"g": G.label(g), "h": G.label(h), "value": list(v.residues)}
            break
    rep.add("twist-units", ok, wit)

    ok, wit = True, None
    for g in G.elements():
        if w.entry(0, g) != a.one[g] or w.entry(g, 0) != a.one[g]:
            ok, wit = False, {"g": G.label(g)}
            break
    rep.add("axiom-iv", ok, wit)

    ok, wit = True, None
    for g, h, l in itertools.product(G.elements(), repeat=3):
        lhs = a.transport_cut(g, w.entry(h, l)) * w.entry(g, G.mul(h, l))
        rhs = w.entry(g, h) * w.entry(G.mul(g, h), l)
        if lhs != rhs:
            ok, wit = False, {
                "g": G.label(g),
                "h": G.label(h),
                "l": G.label(l),
                "lhs": list(lhs.residues),
                "rhs": list(rhs.residues),
            }
            break
    rep.add("axiom-v", ok, wit)

    if rep.ok:
        ok, wit = True, None
        for g in G.elements():
            gi = G.inverse(g)
            if a.transport_cut(g, w.entry(gi, g)) != w.entry(g, gi):
                ok, wit = False, {"g": G.label(g)}
                break
        rep.add("derived-afom", ok, wit)
    return rep


class SubringDescriptor:
    """R^alpha: components of R glued along the action orbits.

    ``classes`` partitions the component indices; the additive generators
    are the class indicator idempotents, and R^alpha is exactly the set of
    elements constant on every class.
    """

    __slots__ = ("ring", "classes", "gens")

    def __init__(self, ring, classes):
        self.ring = ring
        self.classes = tuple(tuple(sorted(c)) for c in sorted(classes))
        self.gens = [ring.idem(c) for c in self.classes]

    def contains(self, r):
        return all(
            len({r.residues[i] for i in cls}) == 1 for cls in self.classes
        )

    def local_moduli(self):
        return tuple(self.ring.components[cls[0]] for cls in self.classes)

    def order(self):
        out = 1
        for m in self.local_moduli():
            out *= m
        return out

    def elements(self):
        for vals in itertools.product(*(range(m) for m in self.local_moduli())):
            res = [0] * len(self.ring.components)
            for v, cls in zip(vals, self.classes):
                for i in cls:
                    res[i] = v
            yield self.ring.el(res)

    def idempotents(self):
        out = []
        for bits in itertools.product((0, 1), repeat=len(self.classes)):
            supp = [i for b, cls in zip(bits, self.classes) for i in cls if b]
            out.append(self.ring.idem(supp))
        return out

    def __repr__(self):
        return "SubringDescriptor(classes=%s)" % (list(self.classes),)


def invariant_subring(a):
    """R^alpha = {r : alpha_g(r 1_{g^-1}) = r 1_g for all g}, via the orbit
    partition of the components."""
    n = len(a.ring.components)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    for g in a.group.elements():
        for i, j in a.pi[g].items():
            union(i, j)
    classes = {}
    for i in range(n):
        classes.setdefault(find(i), []).append(i)
    return SubringDescriptor(a.ring, classes.values())
