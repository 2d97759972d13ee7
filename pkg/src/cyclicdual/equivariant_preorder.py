"""A-preorders, G-presheaves, self-dualities and A-cosieves.

Relations are square boolean matrices stored as nested tuples; ``x ~ y``
(mutual ``<=``) is always derived, never stored.  The validators reject a
non-transitive relation instead of closing it.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .crossed_module import CrossedModule, conjugation_module
from .finite_group import GroupAction, Subgroup, generate_subgroup, normalizer, product_set
from .report import STRUCTURAL, Report


def _bool_matrix(rows) -> tuple[tuple[bool, ...], ...]:
    return tuple(tuple(bool(v) for v in row) for row in rows)


@dataclass(frozen=True)
class APreorder:
    elements: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    action: GroupAction

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        object.__setattr__(self, "leq", _bool_matrix(self.leq))

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def L(self) -> np.ndarray:
        return np.array(self.leq, dtype=bool).reshape(len(self), len(self))

    @cached_property
    def iso(self) -> np.ndarray:
        return self.L & self.L.T

    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]

    def sim(self, x: int, y: int) -> bool:
        return self.leq[x][y] and self.leq[y][x]

    def index(self, label: str | int) -> int:
        if isinstance(label, (int, np.integer)):
            return int(label)
        return self.elements.index(label)


GPresheaf = tuple  # tuple[Subgroup, ...], one subgroup of G per element of S
SelfDuality = tuple  # tuple[int, ...], x -> x°


@dataclass(frozen=True)
class ACosieve:
    rel: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rel", _bool_matrix(self.rel))

    @cached_property
    def R(self) -> np.ndarray:
        k = len(self.rel)
        return np.array(self.rel, dtype=bool).reshape(k, k)

    def __call__(self, x: int, y: int) -> bool:
        return self.rel[x][y]

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x, row in enumerate(self.rel) for y, v in enumerate(row) if v]


# -- validators -------------------------------------------------------------


def _square(rep: Report, rows, size: int, what: str) -> bool:
    if len(rows) != size or any(len(r) != size for r in rows):
        rep.fail("shape", f"{what} must be {size}x{size}", kind=STRUCTURAL)
        return False
    return True


def validate_preorder(P: APreorder) -> Report:
    rep = Report("preorder")
    k = len(P.elements)
    if len(set(P.elements)) != k:
        rep.fail("labels", "element labels are not distinct", kind=STRUCTURAL)
    if not _square(rep, P.leq, k, "leq"):
        return rep
    if P.action.set_size != k:
        rep.fail("action-size", f"action is on {P.action.set_size} points, |S| = {k}",
                 kind=STRUCTURAL)
        return rep
    for v in P.action.validate().violations:
        rep.fail("action-" + v.code, v.message, kind=v.kind, **v.witness)
    if rep.structural:
        return rep
    L, lab = P.L, P.elements
    for x in range(k):
        if not L[x, x]:
            rep.fail("reflexive", "x is not <= x", x=lab[x])
    for x, y in zip(*np.nonzero(L)):
        bad = np.flatnonzero(L[y] & ~L[x])
        for z in bad:
            rep.fail("transitive", "x <= y <= z but not x <= z", x=lab[x], y=lab[y], z=lab[z])
    A, perm = P.action.group, P.action.perm
    for g in range(A.order):
        p = perm[g]
        for x, y in zip(*np.nonzero(L)):
            if not L[p[x], p[y]]:
                rep.fail("monotone", "x <= y but not gx <= gy", g=A.labels[g], x=lab[x], y=lab[y])
    return rep


def validate_presheaf(cm: CrossedModule, P: APreorder, presheaf: Sequence[Subgroup]) -> Report:
    rep = Report("presheaf")
    k = len(P.elements)
    if len(presheaf) != k:
        rep.fail("size", f"{len(presheaf)} subgroups for {k} elements", kind=STRUCTURAL)
        return rep
    for x, H in enumerate(presheaf):
        if H.parent != cm.G:
            rep.fail("parent", "G_x is not a subgroup of G", kind=STRUCTURAL, x=P.elements[x])
    if rep.violations:
        return rep
    lab, A = P.elements, cm.A
    for g in range(A.order):
        for x in range(k):
            gx = P.action.perm[g][x]
            moved = {cm.act[g][h] for h in presheaf[x].members}
            if moved != set(presheaf[gx].members):
                rep.fail("equivariant", "G_{gx} != a(g)(G_x)", g=A.labels[g], x=lab[x])
    for x in range(k):
        for y in range(k):
            if P.leq[x][y] and not presheaf[y] <= presheaf[x]:
                rep.fail("antitone", "x <= y but G_y not contained in G_x", x=lab[x], y=lab[y])
    return rep


def validate_duality(P: APreorder, duality: Sequence[int]) -> Report:
    rep = Report("duality")
    k = len(P.elements)
    if len(duality) != k or any(not 0 <= d < k for d in duality):
        rep.fail("map", f"duality must map {k} elements into S", kind=STRUCTURAL)
        return rep
    lab, d = P.elements, duality
    for x in range(k):
        if not P.sim(x, d[d[x]]):
            rep.fail("involution", "x is not ~ x°°", x=lab[x])
    for x in range(k):
        for y in range(k):
            if P.leq[x][y] != P.leq[d[y]][d[x]]:
                rep.fail("reversal", "x <= y does not match y° <= x°", x=lab[x], y=lab[y])
    A, perm = P.action.group, P.action.perm
    for g in range(A.order):
        for x in range(k):
            if not P.sim(d[perm[g][x]], perm[g][d[x]]):
                rep.fail("equivariant", "(gx)° is not ~ g(x°)", g=A.labels[g], x=lab[x])
    return rep


def validate_cosieve(P: APreorder, cosieve: ACosieve) -> Report:
    rep = Report("cosieve")
    k = len(P.elements)
    if not _square(rep, cosieve.rel, k, "cosieve"):
        return rep
    lab, L, R = P.elements, P.L, cosieve.R
    A, perm = P.action.group, P.action.perm
    for x, y in zip(*np.nonzero(R)):
        if not L[x, y]:
            rep.fail("sub-preorder", "x ⋐ y but not x <= y", x=lab[x], y=lab[y])
        for g in range(A.order):
            if not R[perm[g][x], perm[g][y]]:
                rep.fail("equivariant", "x ⋐ y but not gx ⋐ gy", g=A.labels[g], x=lab[x], y=lab[y])
        for z in np.flatnonzero(L[y] & ~R[x]):
            rep.fail("upward", "x ⋐ y <= z but not x ⋐ z", x=lab[x], y=lab[y], z=lab[z])
    return rep


# -- constructions ----------------------------------------------------------


def isotropy_presheaf(action: GroupAction, labels: Sequence[str] | None = None
                      ) -> tuple[CrossedModule, APreorder, tuple[Subgroup, ...]]:
    """Stabilizers ``A_x`` of an ``A``-set, ordered by ``x <= y iff A_y ⊆ A_x``.

    Returns the conjugation crossed module of ``A`` with the preorder and presheaf.
    """
    A = action.group
    stabs = tuple(action.stabilizer(x) for x in range(action.set_size))
    leq = tuple(tuple(stabs[y] <= stabs[x] for y in range(action.set_size))
                for x in range(action.set_size))
    labels = tuple(labels) if labels else tuple(str(x) for x in range(action.set_size))
    return conjugation_module(A), APreorder(labels, leq, action), stabs


def cosieve_from_duality(cm: CrossedModule, P: APreorder, presheaf: Sequence[Subgroup],
                         duality: Sequence[int]) -> ACosieve:
    """``x ⋐° y  iff  x <= y and G_{y°} ∪ G_x generates G``."""
    k = len(P.elements)
    G = cm.G
    rel = [[False] * k for _ in range(k)]
    for x in range(k):
        for y in range(k):
            if P.leq[x][y]:
                gens = set(presheaf[duality[y]].members) | set(presheaf[x].members)
                rel[x][y] = generate_subgroup(G, gens).order == G.order
    return ACosieve(rel)


def preorder_cosieve(P: APreorder) -> ACosieve:
    """The largest A-cosieve, ``⋐ = <=``."""
    return ACosieve(P.leq)


# -- lemma checks -----------------------------------------------------------


def check_normalizer_lemma(cm: CrossedModule, P: APreorder, presheaf: Sequence[Subgroup],
                           duality: Sequence[int]) -> Report:
    rep = Report("normalizer-lemma")
    G = cm.G
    for x in range(len(P.elements)):
        nx = normalizer(G, presheaf[x])
        nd = normalizer(G, presheaf[duality[x]])
        if nx != nd:
            rep.fail("normalizer", "N(G_x) != N(G_x°)", x=P.elements[x],
                     N_x=list(nx.members), N_dual=list(nd.members))
        if not presheaf[x] <= nd:
            rep.fail("contained", "G_x not inside N(G_x°)", x=P.elements[x])
    return rep


def check_product_corollary(cm: CrossedModule, P: APreorder, presheaf: Sequence[Subgroup],
                            duality: Sequence[int]) -> Report:
    rep = Report("product-corollary")
    G = cm.G
    for x in range(len(P.elements)):
        Gx, Gd = presheaf[x], presheaf[duality[x]]
        lr = product_set(G, Gx.members, Gd.members)
        rl = product_set(G, Gd.members, Gx.members)
        w = dict(x=P.elements[x], size=len(lr))
        if lr != rl:
            rep.fail("commute", "G_x G_x° != G_x° G_x", **w)
        if not all(G.table[a][b] in lr for a in lr for b in lr):
            rep.fail("subgroup", "G_x G_x° is not closed", **w)
        if set(Gx.members) & set(Gd.members) == {G.identity} and len(lr) != Gx.order * Gd.order:
            rep.fail("direct", "trivial intersection but |G_x G_x°| != |G_x||G_x°|", **w)
        rep.witnesses.append(w)
    return rep


def check_cosieve_iso_invariance(P: APreorder, cosieve: ACosieve) -> Report:
    """``y ~ z`` implies ``x ⋐ y iff x ⋐ z``."""
    rep = Report("cosieve-iso-invariance")
    k = len(P.elements)
    for y in range(k):
        for z in range(k):
            if P.sim(y, z):
                for x in range(k):
                    if cosieve(x, y) != cosieve(x, z):
                        rep.fail("iso-invariance", "y ~ z but x ⋐ y differs from x ⋐ z",
                                 x=P.elements[x], y=P.elements[y], z=P.elements[z])
    return rep


def check_tubular_condition(cm: CrossedModule, P: APreorder, presheaf: Sequence[Subgroup],
                            duality: Sequence[int], cosieve: ACosieve) -> Report:
    """For all ``c, d ⋐ b°`` find ``rho in G_c ∩ G_d`` and ``a ⋐ b`` with ``rho |> a ~ b``.

    Every satisfied triple records its first witness ``(rho, a)``.
    """
    rep = Report("tubular-condition")
    k = len(P.elements)
    G, lab = cm.G, P.elements
    perm, t = P.action.perm, cm.t
    for b in range(k):
        below = [c for c in range(k) if cosieve(c, duality[b])]
        cands = [a for a in range(k) if cosieve(a, b)]
        for c in below:
            for d in below:
                common = presheaf[c].mask & presheaf[d].mask
                found = None
                for rho in np.flatnonzero(common):
                    for a in cands:
                        if P.sim(perm[t[rho]][a], b):
                            found = (int(rho), a)
                            break
                    if found:
                        break
                if found is None:
                    rep.fail("tubular", "no rho in G_c ∩ G_d and a ⋐ b with rho |> a ~ b",
                             b=lab[b], c=lab[c], d=lab[d])
                else:
                    rep.witnesses.append(dict(b=lab[b], c=lab[c], d=lab[d],
                                              rho=G.labels[found[0]], a=lab[found[1]]))
    rep.summary["triples"] = len(rep.witnesses) + len(rep.violations)
    return rep
