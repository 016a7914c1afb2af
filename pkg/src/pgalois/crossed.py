"""The twisted partial crossed product R *_{alpha,omega} G and the maps the
exact-sequence checks need: the j-map onto End_{R^alpha}(R), the cocycle
endomorphisms theta_f, the modules R_f with their fixed points, the tensor
comparison mu, centers and centralizers, and cocycle scaling isomorphisms.

Multiplication follows (r_g d_g)(t_h d_h) = r_g alpha_g(t_h 1_{g^-1})
omega_{g,h} d_{g h}.  Non-normalized associative twists are tolerated: the
ring identity is then omega_{1,1}^{-1} d_1.
"""

from __future__ import annotations

import itertools

from .abelian import FinAbGroup, GroupHom, Subgroup, from_columns
from .cohomology import NotACocycle, is_cocycle
from .finring import inverse_in_ideal, unit_group
from .paction import Twisting, invariant_subring
from .report import Report

__all__ = [
    "CrossedElem",
    "CrossedRing",
    "associativity_check",
    "bimodule_act",
    "j_map",
    "j_endo_matrix",
    "theta_f",
    "GModule",
    "triangle_module",
    "r_f_module",
    "fixed_points",
    "mu_check",
    "centralizer_subgroup",
    "center_and_centralizer",
    "cocycle_scaling_iso",
]


class CrossedElem:
    """Finitely supported map g -> a_g with a_g in D_g."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent, coeffs, check=True):
        self.parent = parent
        clean = {}
        for g, a in coeffs.items():
            if a.is_zero():
                continue
            if check and a * parent.action.one[g] != a:
                raise ValueError(
                    "coefficient %r at %s is outside D_g"
                    % (a, parent.action.group.label(g))
                )
            clean[g] = a
        self.coeffs = clean

    def coeff(self, g):
        return self.coeffs.get(g, self.parent.action.ring.zero)

    def __add__(self, other):
        out = dict(self.coeffs)
        for g, a in other.coeffs.items():
            out[g] = out.get(g, self.parent.action.ring.zero) + a
        return CrossedElem(self.parent, out, check=False)

    def __neg__(self):
        return CrossedElem(
            self.parent, {g: -a for g, a in self.coeffs.items()}, check=False
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return self.parent.mul(self, other)

    def __eq__(self, other):
        return isinstance(other, CrossedElem) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset((g, a.residues) for g, a in self.coeffs.items()))

    def is_zero(self):
        return not self.coeffs

    def as_dict(self):
        G = self.parent.action.group
        return {G.label(g): list(a.residues) for g, a in sorted(self.coeffs.items())}

    def __repr__(self):
        if not self.coeffs:
            return "0"
        G = self.parent.action.group
        return " + ".join(
            "%s.d_%s" % (list(a.residues), G.label(g))
            for g, a in sorted(self.coeffs.items())
        )


class CrossedRing:
    def __init__(self, action, twist=None):
        self.action = action
        self.twist = twist if twist is not None else Twisting.trivial(action)
        ring = action.ring
        self.index = [
            (g, c) for g in action.group.elements() for c in action.support(g)
        ]
        self.pos = {gc: k for k, gc in enumerate(self.index)}
        mods = [ring.components[c] for _, c in self.index]
        rels = [[0] * len(mods) for _ in mods]
        for k, m in enumerate(mods):
            rels[k][k] = m
        self.additive = FinAbGroup(len(mods), rels)
        self._assoc = None

    def elem(self, coeffs, check=True):
        return CrossedElem(self, coeffs, check=check)

    def scalar(self, a):
        """a d_1 for a ring element a."""
        return CrossedElem(self, {0: a}, check=False)

    def basis_elem(self, g, c):
        return CrossedElem(self, {g: self.action.ring.basis(c)}, check=False)

    def additive_basis(self):
        return [self.basis_elem(g, c) for g, c in self.index]

    def one(self):
        """The ring identity: omega_{1,1}^{-1} d_1 (1 d_1 when normalized)."""
        w11 = self.twist.entry(0, 0)
        return self.scalar(inverse_in_ideal(w11, self.action.ring.one))

    def mul(self, x, y):
        G = self.action.group
        zero = self.action.ring.zero
        out = {}
        for g, a in x.coeffs.items():
            for h, b in y.coeffs.items():
                c = a * self.action.transport_cut(g, b) * self.twist.entry(g, h)
                if not c.is_zero():
                    gh = G.mul(g, h)
                    out[gh] = out.get(gh, zero) + c
        return CrossedElem(self, out, check=False)

    def to_vec(self, x):
        vec = [0] * len(self.index)
        for g, a in x.coeffs.items():
            for c in a.support():
                vec[self.pos[(g, c)]] = a.residues[c]
        return vec

    def from_vec(self, vec):
        ring = self.action.ring
        vec = self.additive.reduce(vec)
        coeffs = {}
        for (g, c), v in zip(self.index, vec):
            if v:
                res = coeffs.setdefault(g, [0] * len(ring.components))
                res[c] = v
        return CrossedElem(
            self, {g: ring.el(r) for g, r in coeffs.items()}, check=False
        )

    def order(self):
        return self.additive.order()

    @property
    def associative(self):
        """Twist satisfies the 2-cocycle identity (verified once, cached)."""
        if self._assoc is None:
            a, w = self.action, self.twist
            G = a.group
            self._assoc = True
            for g, h, l in itertools.product(G.elements(), repeat=3):
                lhs = a.transport_cut(g, w.entry(h, l)) * w.entry(g, G.mul(h, l))
                rhs = w.entry(g, h) * w.entry(G.mul(g, h), l)
                if lhs != rhs:
                    self._assoc = False
                    break
        return self._assoc

    def coefficient_panel(self, g):
        """Spanning coefficients for D_g used by the exhaustive checks:
        unit-group generators, the primitive idempotents, and 1_g."""
        ring = self.action.ring
        e = self.action.one[g]
        panel = unit_group(ring, e).generators()
        panel.extend(ring.basis(c) for c in e.support())
        if not e.is_zero():
            panel.append(e)
        seen = []
        for p in panel:
            if p not in seen:
                seen.append(p)
        return seen

    def __repr__(self):
        return "CrossedRing(|G|=%d, |A|=%d%s)" % (
            self.action.group.order,
            self.order(),
            "" if self.twist.is_trivial() else ", twisted",
        )


def associativity_check(A):
    """((a d_g)(b d_h))(c d_l) against (a d_g)((b d_h)(c d_l)) over all basis
    triples, coefficients from the spanning panels; witness on failure."""
    rep = Report()
    G = A.action.group
    ok, wit = True, None
    for g, h, l in itertools.product(G.elements(), repeat=3):
        pg, ph, pl = (
            A.coefficient_panel(g),
            A.coefficient_panel(h),
            A.coefficient_panel(l),
        )
        for a, b, c in itertools.product(pg, ph, pl):
            x = A.elem({g: a}, check=False)
            y = A.elem({h: b}, check=False)
            z = A.elem({l: c}, check=False)
            left = (x * y) * z
            right = x * (y * z)
            if left != right:
                ok = False
                wit = {
                    "g": G.label(g),
                    "h": G.label(h),
                    "l": G.label(l),
                    "a": list(a.residues),
                    "b": list(b.residues),
                    "c": list(c.residues),
                    "left": left.as_dict(),
                    "right": right.as_dict(),
                }
                break
        if not ok:
            break
    rep.add("associativity", ok, wit)
    one = A.one()
    ident = all(
        one * v == v and v * one == v for v in A.additive_basis()
    )
    rep.add("identity", ident)
    return rep


def bimodule_act(side, r, x):
    """R-R-bimodule structure: r(a_g d_g) = r a_g d_g on the left,
    (a_g d_g) r = a_g alpha_g(r 1_{g^-1}) d_g on the right."""
    A = x.parent
    if side == "left":
        return CrossedElem(
            A, {g: r * a for g, a in x.coeffs.items()}, check=False
        )
    if side == "right":
        return CrossedElem(
            A,
            {
                g: a * A.action.transport_cut(g, r)
                for g, a in x.coeffs.items()
            },
            check=False,
        )
    raise ValueError("side must be 'left' or 'right'")


# ---------------------------------------------------------------------------
# the j-map


def j_endo_matrix(A, x):
    """The endomorphism r -> sum_g a_g alpha_g(r 1_{g^-1}) as an integer
    matrix on the components of R."""
    ring = A.action.ring
    n = len(ring.components)
    cols = []
    for d in range(n):
        img = ring.zero
        for g, a in x.coeffs.items():
            img = img + a * A.action.transport_cut(g, ring.basis(d))
        cols.append(list(img.residues))
    return [[cols[d][i] for d in range(n)] for i in range(n)]


class JMap:
    """j : R *_alpha G -> End_{R^alpha}(R) as a homomorphism of additive
    groups, with the kernel/image data deciding bijectivity."""

    def __init__(self, A, end):
        self.crossed = A
        self.end = end
        cols = [
            end.coords_of_matrix(j_endo_matrix(A, b)) for b in A.additive_basis()
        ]
        self.hom = GroupHom(
            A.additive, end.hom_group, from_columns(cols, end.hom_group.rank)
        )
        self.kernel = self.hom.kernel()
        self.image = self.hom.image()
        self.kernel_order = self.kernel.presentation().order()
        self.image_order = self.image.presentation().order()
        self.is_iso = self.kernel_order == 1 and self.image.same_as(end.subgroup)

    def endo_of(self, x):
        return j_endo_matrix(self.crossed, x)


def j_map(A, end=None):
    if end is None:
        from .galois import end_ring

        end = end_ring(A.action)
    return JMap(A, end)


# ---------------------------------------------------------------------------
# theta_f and the modules R_f


class ThetaEndo:
    """theta_f(r_g d_g) = r_g f(g) d_g for a 1-cocycle f."""

    def __init__(self, A, f):
        ok, wit = is_cocycle(f)
        if not ok:
            raise NotACocycle(wit, [A.action.group.label(g) for g in wit])
        self.crossed = A
        self.f = f

    def __call__(self, x):
        return CrossedElem(
            self.crossed,
            {g: a * self.f.value((g,)) for g, a in x.coeffs.items()},
            check=False,
        )

    def report(self):
        A = self.crossed
        rep = Report()
        basis = A.additive_basis()
        ok, wit = True, None
        for x, y in itertools.product(basis, repeat=2):
            if self(x * y) != self(x) * self(y):
                ok, wit = False, {"x": x.as_dict(), "y": y.as_dict()}
                break
        rep.add("multiplicative", ok, wit)
        rep.add("unital", self(A.one()) == A.one())
        sub = invariant_subring(A.action)
        rep.add(
            "fixes-invariants",
            all(self(A.scalar(s)) == A.scalar(s) for s in sub.gens),
        )
        return rep


def theta_f(A, f):
    return ThetaEndo(A, f)


class GModule:
    """Left module over a trivial-twist crossed ring with carrier R; the
    whole action is determined by how the basis elements 1_g d_g act."""

    def __init__(self, crossed, name, basis_act):
        self.crossed = crossed
        self.name = name
        self.basis_act = basis_act  # (g, RingElem) -> RingElem
        ring = crossed.action.ring
        mods = ring.components
        rels = [[0] * len(mods) for _ in mods]
        for k, m in enumerate(mods):
            rels[k][k] = m
        self.carrier = FinAbGroup(len(mods), rels)

    def act(self, w, x):
        """Action of a crossed-ring element: (a_g d_g) m = a_g ((1_g d_g) m)."""
        ring = self.crossed.action.ring
        out = ring.zero
        for g, a in w.coeffs.items():
            out = out + a * self.basis_act(g, x)
        return out

    def act_matrix(self, g):
        ring = self.crossed.action.ring
        n = len(ring.components)
        cols = [list(self.basis_act(g, ring.basis(d)).residues) for d in range(n)]
        return from_columns(cols, n)

    def axioms_report(self):
        """Associativity of the action over basis elements of the ring and
        the module; sufficient by bilinearity."""
        rep = Report()
        A = self.crossed
        ring = A.action.ring
        basis = A.additive_basis()
        mbasis = [ring.basis(c) for c in range(len(ring.components))]
        ok, wit = True, None
        for x, y in itertools.product(basis, repeat=2):
            for m in mbasis:
                if self.act(x * y, m) != self.act(x, self.act(y, m)):
                    ok, wit = False, {"x": x.as_dict(), "y": y.as_dict(), "m": list(m.residues)}
                    break
            if not ok:
                break
        rep.add("action-associative", ok, wit)
        one = A.one()
        rep.add("action-unital", all(self.act(one, m) == m for m in mbasis))
        return rep


def triangle_module(A):
    """R as a left module via (r_g d_g) |> r = r_g alpha_g(r 1_{g^-1})."""
    return GModule(A, "R", lambda g, x: A.action.transport_cut(g, x))


def r_f_module(A, f):
    """R_f: carrier R, action (r_g d_g) . r = theta_f(r_g d_g) |> r."""
    theta = ThetaEndo(A, f)  # validates the cocycle

    def act(g, x):
        return theta.f.value((g,)) * A.action.transport_cut(g, x)

    return GModule(A, "R_f", act)


class FixedPoints:
    """The fixed subgroup together with a canonical generating set; ``span``
    re-presents the subgroup on exactly those generators."""

    __slots__ = ("module", "subgroup", "gens", "span")

    def __init__(self, module, subgroup, gens):
        self.module = module
        self.subgroup = subgroup
        self.gens = gens
        self.span = Subgroup(
            module.carrier if hasattr(module, "carrier") else subgroup.parent,
            [list(m.residues) for m in gens],
        )

    def order(self):
        return self.subgroup.presentation().order()

    def elements(self):
        ring = self.module.crossed.action.ring
        pres = self.span.presentation()
        seen = set()
        for coords in pres.elements():
            v = self.span.embed(coords)
            el = ring.el(v)
            if el not in seen:
                seen.add(el)
                yield el


def fixed_points(M):
    """M^G = {m : (1_g d_g) m = 1_g m for all g}, by linear solve."""
    A = M.crossed
    ring = A.action.ring
    n = len(ring.components)
    rows = []
    mods = []
    for g in A.action.group.elements():
        act = M.act_matrix(g)
        e_g = A.action.one[g]
        for i in range(n):
            row = list(act[i])
            row[i] -= e_g.residues[i]
            rows.append(row)
            mods.append(ring.components[i])
    target_rels = [[0] * len(rows) for _ in rows]
    for k, m in enumerate(mods):
        target_rels[k][k] = m
    target = FinAbGroup(len(rows), target_rels)
    hom = GroupHom(M.carrier, target, rows, check=False)
    sub = hom.kernel()
    pres = sub.presentation()
    _, gcoords = pres.decomposition()
    gens = [ring.el(sub.embed(c)) for c in gcoords]
    return FixedPoints(M, sub, gens)


def mu_check(M, subring=None):
    """mu : R (x)_{R^alpha} M^G -> M, x (x) m -> x m: build the tensor as a
    finite abelian group and verify bijectivity plus crossed-ring linearity."""
    A = M.crossed
    ring = A.action.ring
    if subring is None:
        subring = invariant_subring(A.action)
    fp = fixed_points(M)
    mgens = fp.gens
    n = len(ring.components)
    nm = len(mgens)
    rank = n * nm

    def idx(c, j):
        return c * nm + j

    rel_cols = []
    for c in range(n):
        for j in range(nm):
            col = [0] * rank
            col[idx(c, j)] = ring.components[c]
            rel_cols.append(col)
    pres = fp.span.presentation()
    pres_columns = list(zip(*pres.rels)) if pres.rels and pres.rels[0] else []
    for rel in pres_columns:
        for c in range(n):
            col = [0] * rank
            for j in range(nm):
                col[idx(c, j)] = rel[j]
            rel_cols.append(col)
    for s in subring.gens:
        for j in range(nm):
            sm = s * mgens[j]
            smc = fp.span.coordinates_of(list(sm.residues))
            if smc is None:
                raise AssertionError("M^G is not an R^alpha-submodule; engine bug")
            for c in range(n):
                sx = s * ring.basis(c)
                col = [0] * rank
                for k in range(n):
                    col[idx(k, j)] += sx.residues[k]
                for l in range(nm):
                    col[idx(c, l)] -= smc[l]
                rel_cols.append(col)
    tensor = FinAbGroup(rank, from_columns(rel_cols, rank))

    mu_cols = []
    for c in range(n):
        for j in range(nm):
            mu_cols.append(list((ring.basis(c) * mgens[j]).residues))
    mu = GroupHom(tensor, M.carrier, from_columns(mu_cols, n))

    rep = Report()
    t_order = tensor.order()
    m_order = M.carrier.order()
    rep.add(
        "orders",
        t_order == m_order,
        {"tensor": t_order, "module": m_order},
    )
    rep.add("injective", mu.kernel().presentation().order() == 1)
    rep.add("surjective", mu.image().presentation().order() == m_order)

    ok, wit = True, None
    for g in A.action.group.elements():
        for c in range(n):
            tv = A.action.transport_cut(g, ring.basis(c))
            for j in range(nm):
                vec = [0] * rank
                for k in range(n):
                    vec[idx(k, j)] = tv.residues[k]
                lhs = mu.apply(vec)
                base = [0] * rank
                base[idx(c, j)] = 1
                rhs = M.basis_act(g, ring.el(mu.apply(base)))
                if not M.carrier.eq(lhs, list(rhs.residues)):
                    ok, wit = False, {
                        "g": A.action.group.label(g),
                        "x": c,
                        "m": j,
                    }
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("crossed-linear", ok, wit)
    return rep


# ---------------------------------------------------------------------------
# centers and centralizers


def centralizer_subgroup(A, conditions):
    """Solutions x of x b = b x for every b in `conditions`, as a subgroup
    of the additive group of the crossed ring."""
    basis = A.additive_basis()
    rank = A.additive.rank
    rows = []
    mods = []
    add_mods = [A.action.ring.components[c] for _, c in A.index]
    for b in conditions:
        cols = [A.to_vec(v * b - b * v) for v in basis]
        for i in range(rank):
            rows.append([cols[k][i] for k in range(rank)])
            mods.append(add_mods[i])
    target_rels = [[0] * len(rows) for _ in rows]
    for k, m in enumerate(mods):
        target_rels[k][k] = m
    target = FinAbGroup(len(rows), target_rels)
    hom = GroupHom(A.additive, target, rows, check=False)
    return hom.kernel()


def embedded_scalars(A, elems):
    """The additive subgroup {a d_1 : a in span(elems)}."""
    return Subgroup(A.additive, [A.to_vec(A.scalar(e)) for e in elems])


def center_and_centralizer(A):
    """(C(A), C_A(R)) with additive generators, by linear commutation
    solves."""
    center = centralizer_subgroup(A, A.additive_basis())
    ring = A.action.ring
    r_basis = [A.scalar(ring.basis(c)) for c in range(len(ring.components))]
    cent_r = centralizer_subgroup(A, r_basis)
    return center, cent_r


# ---------------------------------------------------------------------------
# cocycle scaling


class ScalingIso:
    """a_g d_g -> a_g rho(g)^{-1} d_g from the ring over omega to the ring
    over (delta^1 rho) omega."""

    def __init__(self, A, rho):
        self.source = A
        action = A.action
        self.rho = {g: rho.value((g,)) for g in action.group.elements()}
        self.rho_inv = {}
        for g, v in self.rho.items():
            e = action.one[g]
            if v * e != v or not unit_group(action.ring, e).contains(v):
                raise ValueError(
                    "rho(%s) is not a unit of D_g" % action.group.label(g)
                )
            self.rho_inv[g] = inverse_in_ideal(v, e)
        self.target = CrossedRing(action, A.twist.scaled_by_coboundary(self.rho))

    def apply(self, x):
        return CrossedElem(
            self.target,
            {g: a * self.rho_inv[g] for g, a in x.coeffs.items()},
            check=False,
        )

    def inverse_apply(self, y):
        return CrossedElem(
            self.source,
            {g: a * self.rho[g] for g, a in y.coeffs.items()},
            check=False,
        )

    def report(self):
        rep = Report()
        basis = self.source.additive_basis()
        rep.add(
            "bijective",
            all(self.inverse_apply(self.apply(v)) == v for v in basis)
            and all(
                self.apply(self.inverse_apply(w)) == w
                for w in self.target.additive_basis()
            ),
        )
        ok, wit = True, None
        for x, y in itertools.product(basis, repeat=2):
            if self.apply(x * y) != self.apply(x) * self.apply(y):
                ok, wit = False, {"x": x.as_dict(), "y": y.as_dict()}
                break
        rep.add("multiplicative", ok, wit)
        rep.add("unital", self.apply(self.source.one()) == self.target.one())
        return rep


def cocycle_scaling_iso(A, rho):
    """Ring map R*_{alpha,omega}G -> R*_{alpha,(d rho) omega}G induced by a
    1-cochain rho; additive, multiplicative, unital and bijective."""
    return ScalingIso(A, rho)
