"""Strict 2-groups encoded as crossed modules ``t: G -> A``, ``a: A -> Aut(G)``.

A 2-cell ``g => h`` is a pair ``(g, gamma)`` with ``t(gamma) = h g^-1``;
no separate 2-cell type is kept because everything downstream consumes
only ``(G, A, t, a)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .finite_group import FiniteGroup, GroupAction, GroupHom, Subgroup
from .report import STRUCTURAL, Report


@dataclass(frozen=True)
class CrossedModule:
    G: FiniteGroup
    A: FiniteGroup
    t: tuple[int, ...]
    act: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "t", tuple(int(x) for x in self.t))
        object.__setattr__(self, "act", tuple(tuple(int(x) for x in row) for row in self.act))

    @cached_property
    def hom(self) -> GroupHom:
        return GroupHom(self.G, self.A, self.t)

    @cached_property
    def action(self) -> GroupAction:
        return GroupAction(self.A, self.G.order, self.act)

    @cached_property
    def act_array(self) -> np.ndarray:
        return np.array(self.act, dtype=np.int64).reshape(self.A.order, self.G.order)

    def apply(self, h: int, gamma: int) -> int:
        """``a(h)(gamma)``."""
        return self.act[h][gamma]

    def act_subgroup(self, h: int, H: Subgroup) -> Subgroup:
        return Subgroup(self.G, tuple(self.act[h][g] for g in H.members))

    def validate(self) -> Report:
        return validate(self)


def validate(cm: CrossedModule) -> Report:
    """Scan every axiom over all element pairs; violations carry witnesses.

    Structural problems (wrong sizes, entries out of range, non-permutations)
    are reported with kind ``structural`` and stop the axiom scan.
    """
    rep = Report("crossed-module")
    G, A = cm.G, cm.A
    if len(cm.t) != G.order:
        rep.fail("t-size", f"t has {len(cm.t)} entries, |G| = {G.order}", kind=STRUCTURAL)
    elif any(not 0 <= v < A.order for v in cm.t):
        rep.fail("t-range", "t maps outside A", kind=STRUCTURAL)
    if len(cm.act) != A.order or any(len(row) != G.order for row in cm.act):
        rep.fail("act-shape", f"act must hold {A.order} rows of length {G.order}", kind=STRUCTURAL)
    else:
        for h, row in enumerate(cm.act):
            if sorted(row) != list(range(G.order)):
                rep.fail("act-permutation", "a(h) is not a bijection of G", kind=STRUCTURAL,
                         h=A.labels[h])
    if rep.violations:
        return rep

    for v in cm.hom.validate().violations:
        rep.fail("t-homomorphism", v.message, **v.witness)

    act_rep = cm.action.validate()
    for v in act_rep.violations:
        rep.fail("act-homomorphism", "a: A -> Aut(G) is not a homomorphism: " + v.message,
                 **v.witness)

    GT, t, act = G.table, cm.t, cm.act
    for h in range(A.order):
        a = act[h]
        for x in range(G.order):
            for y in range(G.order):
                if a[GT[x][y]] != GT[a[x]][a[y]]:
                    rep.fail("act-automorphism", "a(h)(xy) != a(h)(x) a(h)(y)",
                             h=A.labels[h], x=G.labels[x], y=G.labels[y])
                    break
            else:
                continue
            break

    for h in range(A.order):
        for g in range(G.order):
            if t[act[h][g]] != A.conj(h, t[g]):
                rep.fail("equivariance", "t(a(h)(gamma)) != h t(gamma) h^-1",
                         h=A.labels[h], gamma=G.labels[g])

    for g in range(G.order):
        for x in range(G.order):
            if G.conj(g, x) != act[t[g]][x]:
                rep.fail("peiffer", "gamma alpha gamma^-1 != a(t(gamma))(alpha)",
                         gamma=G.labels[g], alpha=G.labels[x])
    return rep


def conjugation_module(A: FiniteGroup) -> CrossedModule:
    """``G = A``, ``t = id``, ``a(h)(g) = h g h^-1``."""
    act = tuple(tuple(A.conj(h, g) for g in range(A.order)) for h in range(A.order))
    return CrossedModule(A, A, tuple(range(A.order)), act)


def trivial_module(A: FiniteGroup, G: FiniteGroup) -> CrossedModule:
    """Trivial ``t`` and trivial action; a crossed module iff ``G`` is abelian."""
    return CrossedModule(G, A, (A.identity,) * G.order,
                         tuple(tuple(range(G.order)) for _ in range(A.order)))


def triv_action(cm: CrossedModule, action: GroupAction, gamma: int, x: int) -> int:
    """``gamma |> x``: the A-action of ``t(gamma)`` on ``x``."""
    return action.perm[cm.t[gamma]][x]


def image_is_normal(cm: CrossedModule) -> bool:
    img = set(cm.t)
    return all(cm.A.conj(h, a) in img for h in range(cm.A.order) for a in img)


def kernel_is_central(cm: CrossedModule) -> bool:
    G = cm.G
    ker = [g for g in range(G.order) if cm.t[g] == cm.A.identity]
    return all(G.table[k][g] == G.table[g][k] for k in ker for g in range(G.order))
