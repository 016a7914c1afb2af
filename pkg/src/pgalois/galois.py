"""Partial Galois certification: coordinate systems, projectivity of R over
the invariants, the endomorphism ring End_{R^alpha}(R), and the j-based
criterion."""

from __future__ import annotations

import itertools
from math import gcd, prod

from .abelian import FinAbGroup, GroupHom, Subgroup, from_columns
from .finring import _factorize
from .paction import invariant_subring
from .report import Report

__all__ = [
    "coordinate_check",
    "trace_map",
    "EndRing",
    "end_ring",
    "GaloisCertificate",
    "galois_certificate",
]


def coordinate_check(a, xs, ys):
    """Evaluate sum_i x_i alpha_g(y_i 1_{g^-1}) for every g; a partial Galois
    coordinate system gives 1 at the identity and 0 elsewhere."""
    rep = Report()
    if len(xs) != len(ys):
        raise ValueError("coordinate lists differ in length")
    for g in a.group.elements():
        s = a.ring.zero
        for x, y in zip(xs, ys):
            s = s + x * a.transport_cut(g, y)
        want = a.ring.one if g == 0 else a.ring.zero
        rep.add(
            "coordinates-at-%s" % a.group.label(g),
            s == want,
            None if s == want else {"got": list(s.residues)},
        )
    return rep


def trace_map(a, r):
    """t(r) = sum_g alpha_g(r 1_{g^-1}); lands in R^alpha."""
    out = a.ring.zero
    for g in a.group.elements():
        out = out + a.transport_cut(g, r)
    return out


class EndRing:
    """End_{R^alpha}(R): additive endomorphisms of R commuting with the
    invariant subring, inside the full Hom-lattice of the additive group.

    Endomorphisms are realized as integer matrices E with E[i][j] read mod
    the i-th component modulus; the abstract coordinates live in the product
    of Z/gcd(m_i, m_j), one per matrix entry.
    """

    def __init__(self, ring, subring):
        self.ring = ring
        self.subring = subring
        mods = ring.components
        n = len(mods)
        self.n = n
        self.pairs = [(i, j) for i in range(n) for j in range(n)]
        self.pair_mods = [gcd(mods[i], mods[j]) for i, j in self.pairs]
        rank = len(self.pairs)
        rels = [[0] * rank for _ in range(rank)]
        for k, m in enumerate(self.pair_mods):
            rels[k][k] = m
        self.hom_group = FinAbGroup(rank, rels)
        # R^alpha-linearity: (s_j - s_i) * E[i][j] = 0 mod m_i per generator s
        rows = []
        out_mods = []
        for s in subring.gens:
            for k, (i, j) in enumerate(self.pairs):
                row = [0] * rank
                scale = mods[i] // self.pair_mods[k]
                row[k] = scale * (s.residues[j] - s.residues[i])
                rows.append(row)
                out_mods.append(mods[i])
        out_rank = len(rows)
        out_rels = [[0] * out_rank for _ in range(out_rank)]
        for k, m in enumerate(out_mods):
            out_rels[k][k] = m
        target = FinAbGroup(out_rank, out_rels)
        constraint = GroupHom(self.hom_group, target, rows, check=False)
        self.subgroup = constraint.kernel()

    def order(self):
        return self.subgroup.order()

    def coords_of_matrix(self, e):
        """Hom-lattice coordinates of an integer endomorphism matrix."""
        vec = []
        mods = self.ring.components
        for k, (i, j) in enumerate(self.pairs):
            scale = mods[i] // self.pair_mods[k]
            a = e[i][j] % mods[i]
            if a % scale:
                raise ValueError("matrix entry (%d,%d) is not additive" % (i, j))
            vec.append((a // scale) % self.pair_mods[k])
        return vec

    def matrix_of_coords(self, vec):
        mods = self.ring.components
        e = [[0] * self.n for _ in range(self.n)]
        for k, (i, j) in enumerate(self.pairs):
            scale = mods[i] // self.pair_mods[k]
            e[i][j] = (vec[k] * scale) % mods[i]
        return e

    def identity_coords(self):
        return self.coords_of_matrix(
            [[1 if i == j else 0 for j in range(self.n)] for i in range(self.n)]
        )

    def apply_matrix(self, e, x):
        mods = self.ring.components
        return self.ring.el(
            [
                sum(e[i][j] * x.residues[j] for j in range(self.n)) % mods[i]
                for i in range(self.n)
            ]
        )

    def compose(self, e1, e2):
        mods = self.ring.components
        return [
            [
                sum(e1[i][k] * e2[k][j] for k in range(self.n)) % mods[i]
                for j in range(self.n)
            ]
            for i in range(self.n)
        ]

    def contains_matrix(self, e):
        return self.subgroup.contains_element(self.coords_of_matrix(e))


def end_ring(a):
    """End_{R^alpha}(R) for the invariants of the given action."""
    return EndRing(a.ring, invariant_subring(a))


class GaloisCertificate:
    __slots__ = ("galois", "fgp_report", "j_iso", "coordinates", "orders", "rank_profile")

    def __init__(self, galois, fgp_report, j_iso, coordinates, orders, rank_profile):
        self.galois = galois
        self.fgp_report = fgp_report
        self.j_iso = j_iso
        self.coordinates = coordinates
        self.orders = orders
        self.rank_profile = rank_profile

    def as_dict(self):
        return {
            "galois": self.galois,
            "j_iso": self.j_iso,
            "fgp": self.fgp_report.as_dict(),
            "orders": dict(self.orders),
            "rank_profile": list(self.rank_profile),
            "has_coordinates": self.coordinates is not None,
        }

    def __repr__(self):
        return "GaloisCertificate(galois=%s)" % self.galois


def _freeness_report(ring, subring):
    """R*e_C free over each local factor of R^alpha: minimal generator count
    by Nakayama, then cardinality equality."""
    rep = Report()
    profile = []
    for cls, m_c in zip(subring.classes, subring.local_moduli()):
        (p, _), = _factorize(m_c)
        ngen = sum(1 for i in cls if ring.components[i] % p == 0)
        size = prod(ring.components[i] for i in cls)
        free = size == m_c**ngen
        profile.append(ngen)
        rep.add(
            "free-over-class-%s" % (",".join(map(str, cls))),
            free,
            None if free else {"size": size, "expected": m_c**ngen},
        )
    return rep, tuple(profile)


def galois_certificate(a, coords=None, search_idempotent_coords=True):
    """Certify R >= R^alpha as a partial Galois extension.

    The verdict combines projectivity of R over the local factors of the
    invariants with bijectivity of the j-map onto End_{R^alpha}(R); an
    explicit coordinate system is attached when one is supplied or the
    primitive-idempotent candidate passes.
    """
    from .crossed import CrossedRing, j_map

    subring = invariant_subring(a)
    fgp_report, profile = _freeness_report(a.ring, subring)
    end = EndRing(a.ring, subring)
    cr = CrossedRing(a)
    j = j_map(cr, end)
    orders = {
        "crossed_product": cr.additive.order(),
        "end_ring": end.order(),
        "j_kernel": j.kernel_order,
        "j_image": j.image_order,
    }

    found = None
    if coords is not None:
        if coordinate_check(a, coords[0], coords[1]).ok:
            found = (list(coords[0]), list(coords[1]))
    elif search_idempotent_coords:
        prim = [a.ring.basis(c) for c in range(len(a.ring.components))]
        if coordinate_check(a, prim, prim).ok:
            found = (prim, prim)

    return GaloisCertificate(
        galois=fgp_report.ok and j.is_iso,
        fgp_report=fgp_report,
        j_iso=j.is_iso,
        coordinates=found,
        orders=orders,
        rank_profile=profile,
    )
