"""The orbit 2-category of a G-presheaf and its homotopy category.

Objects are the elements of ``S``.  A morphism ``x -> y`` is a coset
``gamma G_x`` with ``gamma |> x <= y``; composition multiplies
representatives.  With a self-duality and an A-cosieve, ``≡`` identifies
parallel cosets and the quotient carries the lifted duality
``[gamma G_x]° = [gamma^-1 G_{y°}]``.

Cosets are always stored by their canonical representative, the minimal
element index of ``gamma G_x``, so structural equality is coset equality.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Optional, Sequence

import numpy as np

from .crossed_module import CrossedModule, conjugation_module
from .crossed_module import validate as validate_crossed_module
from .equivariant_preorder import (
    ACosieve,
    APreorder,
    check_cosieve_iso_invariance,
    check_normalizer_lemma,
    check_product_corollary,
    check_tubular_condition,
    validate_cosieve,
    validate_duality,
    validate_preorder,
    validate_presheaf,
)
from .finite_group import (
    FiniteGroup,
    Subgroup,
    all_subgroups,
    conjugation_action,
    coset_canonical,
    cosets,
    subgroup_label,
)
from .report import Report


class SourceTargetMismatch(ValueError):
    pass


class MissingDuality(ValueError):
    pass


class TubularConditionFailed(ValueError):
    def __init__(self, report: Report):
        super().__init__(f"tubular condition fails on {len(report.violations)} triples")
        self.report = report


class NotAnEquivalence(ValueError):
    def __init__(self, witnesses: list[dict]):
        super().__init__(f"≡ is not an equivalence relation: {witnesses[:3]}")
        self.witnesses = witnesses


class InvalidInstance(ValueError):
    def __init__(self, reports: list[Report]):
        bad = [r.check for r in reports if not r.ok]
        super().__init__("instance fails validation: " + ", ".join(bad))
        self.reports = reports


@dataclass(frozen=True)
class OrbitInstance:
    cm: CrossedModule
    preorder: APreorder
    presheaf: tuple[Subgroup, ...]
    duality: Optional[tuple[int, ...]] = None
    cosieve: Optional[ACosieve] = None
    metadata: dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "presheaf", tuple(self.presheaf))
        if self.duality is not None:
            object.__setattr__(self, "duality", tuple(int(d) for d in self.duality))

    @property
    def name(self) -> str:
        return self.metadata.get("name", "")

    @property
    def size(self) -> int:
        return len(self.preorder.elements)

    @property
    def labels(self) -> tuple[str, ...]:
        return self.preorder.elements

    def index(self, label: str | int) -> int:
        return self.preorder.index(label)

    def has_duality(self) -> bool:
        return self.duality is not None and self.cosieve is not None

    # -- cached tables --------------------------------------------------

    @cached_property
    def canon(self) -> tuple[np.ndarray, ...]:
        return tuple(coset_canonical(self.cm.G, H) for H in self.presheaf)

    @cached_property
    def coset_reps(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(c[0] for c in cosets(self.cm.G, H)) for H in self.presheaf)

    @cached_property
    def triv(self) -> np.ndarray:
        """``triv[gamma, x] = gamma |> x``."""
        return self.preorder.action.P[list(self.cm.t)]

    @cached_property
    def homs(self) -> dict[tuple[int, int], list["CosetMorphism"]]:
        return {(x, y): hom(self, x, y) for x in range(self.size) for y in range(self.size)}

    @cached_property
    def tubular_report(self) -> Report:
        _require_duality(self)
        return check_tubular_condition(self.cm, self.preorder, self.presheaf, self.duality,
                                       self.cosieve)

    @cached_property
    def ho_homs(self) -> dict[tuple[int, int], list["HoMorphism"]]:
        return {(x, y): ho_hom(self, x, y) for x in range(self.size) for y in range(self.size)}


@dataclass(frozen=True, order=True)
class CosetMorphism:
    source: int
    target: int
    rep: int


@dataclass(frozen=True, order=True)
class HoMorphism:
    source: int
    target: int
    members: tuple[CosetMorphism, ...]

    @property
    def canonical(self) -> CosetMorphism:
        return self.members[0]

    def __contains__(self, f: CosetMorphism) -> bool:
        return f in self.members


def validate(inst: OrbitInstance) -> list[Report]:
    """Run every component validator; one report per component."""
    cm, P = inst.cm, inst.preorder
    reports = [validate_crossed_module(cm), validate_preorder(P)]
    if P.action.group != cm.A:
        reports[-1].fail("action-group", "preorder action is not by A", kind="structural")
    reports.append(validate_presheaf(cm, P, inst.presheaf))
    if inst.duality is not None:
        reports.append(validate_duality(P, inst.duality))
    if inst.cosieve is not None:
        reports.append(validate_cosieve(P, inst.cosieve))
    if (inst.duality is None) != (inst.cosieve is None):
        rep = Report("duality-cosieve-pairing")
        rep.fail("pairing", "duality and cosieve must be both present or both absent",
                 kind="structural")
        reports.append(rep)
    return reports


def require_valid(inst: OrbitInstance) -> OrbitInstance:
    reports = validate(inst)
    if not all(r.ok for r in reports):
        raise InvalidInstance(reports)
    return inst


def _require_duality(inst: OrbitInstance) -> None:
    if not inst.has_duality():
        raise MissingDuality(f"instance {inst.name!r} has no duality/cosieve")


# -- O_s ----------------------------------------------------------------------


def make_coset(inst: OrbitInstance, x: int, y: int, gamma: int) -> CosetMorphism:
    f = CosetMorphism(x, y, int(inst.canon[x][gamma]))
    if not inst.preorder.leq[inst.triv[gamma, x]][y]:
        raise ValueError(f"{inst.cm.G.labels[gamma]} |> {inst.labels[x]} is not <= {inst.labels[y]}")
    return f


def hom(inst: OrbitInstance, x: int, y: int) -> list[CosetMorphism]:
    """``{gamma G_x : gamma |> x <= y}``, sorted by canonical representative."""
    leq = inst.preorder.leq
    return [CosetMorphism(x, y, g) for g in inst.coset_reps[x] if leq[inst.triv[g, x]][y]]


def identity_coset(inst: OrbitInstance, x: int) -> CosetMorphism:
    return CosetMorphism(x, x, int(inst.canon[x][inst.cm.G.identity]))


def compose_coset(inst: OrbitInstance, h: CosetMorphism, f: CosetMorphism) -> CosetMorphism:
    """``(delta G_y) ⋄ (gamma G_x) = delta gamma G_x``."""
    if f.target != h.source:
        raise SourceTargetMismatch(f"{h} cannot follow {f}")
    rep = int(inst.canon[f.source][inst.cm.G.table[h.rep][f.rep]])
    assert inst.preorder.leq[inst.triv[rep, f.source]][h.target], "composite left O_s"
    return CosetMorphism(f.source, h.target, rep)


def act(inst: OrbitInstance, h: int, f: CosetMorphism) -> CosetMorphism:
    """``gamma G_x  ->  a(h)(gamma) G_{hx}``."""
    perm = inst.preorder.action.perm[h]
    hx, hy = perm[f.source], perm[f.target]
    return CosetMorphism(hx, hy, int(inst.canon[hx][inst.cm.act[h][f.rep]]))


def natural_component(inst: OrbitInstance, gamma: int, x: int) -> CosetMorphism:
    """``gamma_x = gamma G_x : x -> gamma |> x``."""
    return CosetMorphism(x, int(inst.triv[gamma, x]), int(inst.canon[x][gamma]))


def natural_inverse(inst: OrbitInstance, gamma: int, x: int) -> CosetMorphism:
    """``gamma^-1 G_{gamma |> x} : gamma |> x -> x``."""
    gx = int(inst.triv[gamma, x])
    return CosetMorphism(gx, x, int(inst.canon[gx][inst.cm.G.inverse[gamma]]))


def coset_members(inst: OrbitInstance, f: CosetMorphism) -> list[int]:
    return [inst.cm.G.table[f.rep][h] for h in inst.presheaf[f.source].members]


# -- ho(O_s) ----------------------------------------------------------------


def equivalent(inst: OrbitInstance, f: CosetMorphism, g: CosetMorphism) -> bool:
    """``gamma G_x ≡ eps G_x``: every ``u ⋐ y°`` has ``G_u ∩ eps G_x gamma^-1`` nonempty."""
    _require_duality(inst)
    if (f.source, f.target) != (g.source, g.target):
        raise SourceTargetMismatch(f"{f} and {g} are not parallel")
    G = inst.cm.G
    yd = inst.duality[f.target]
    ginv = G.inverse[f.rep]
    middle = [G.table[G.table[g.rep][k]][ginv] for k in inst.presheaf[f.source].members]
    for u in range(inst.size):
        if inst.cosieve(u, yd) and not inst.presheaf[u].mask[middle].any():
            return False
    return True


def ho_hom(inst: OrbitInstance, x: int, y: int) -> list[HoMorphism]:
    """Partition ``hom(x, y)`` into ≡-classes after checking ≡ is an equivalence."""
    _require_duality(inst)
    arrows = inst.homs[x, y]
    k = len(arrows)
    E = np.array([[equivalent(inst, a, b) for b in arrows] for a in arrows], dtype=bool).reshape(k, k)
    bad = []
    for i in range(k):
        if not E[i, i]:
            bad.append({"law": "reflexive", "f": arrows[i]})
        for j in range(k):
            if E[i, j] != E[j, i]:
                bad.append({"law": "symmetric", "f": arrows[i], "g": arrows[j]})
            if E[i, j]:
                for l in np.flatnonzero(E[j] & ~E[i]):
                    bad.append({"law": "transitive", "f": arrows[i], "g": arrows[j],
                                "h": arrows[l]})
    if bad:
        raise NotAnEquivalence(bad)
    classes, seen = [], set()
    for i in range(k):
        if i in seen:
            continue
        members = tuple(arrows[j] for j in np.flatnonzero(E[i]))
        seen.update(int(j) for j in np.flatnonzero(E[i]))
        classes.append(HoMorphism(x, y, members))
    return classes


def ho_class(inst: OrbitInstance, f: CosetMorphism) -> HoMorphism:
    for m in inst.ho_homs[f.source, f.target]:
        if f in m.members:
            return m
    raise ValueError(f"{f} is not a morphism of O_s")


def ho_compose(inst: OrbitInstance, m2: HoMorphism, m1: HoMorphism) -> HoMorphism:
    return ho_class(inst, compose_coset(inst, m2.canonical, m1.canonical))


def ho_identity(inst: OrbitInstance, x: int) -> HoMorphism:
    return ho_class(inst, identity_coset(inst, x))


def _dual_coset(inst: OrbitInstance, f: CosetMorphism) -> CosetMorphism:
    G, d = inst.cm.G, inst.duality
    yd, xd = d[f.target], d[f.source]
    gi = G.inverse[f.rep]
    assert inst.preorder.leq[inst.triv[gi, yd]][xd], "dual coset left O_s"
    return CosetMorphism(yd, xd, int(inst.canon[yd][gi]))


def dual_morphism(inst: OrbitInstance, m: HoMorphism, member: CosetMorphism | None = None
                  ) -> HoMorphism:
    """``[gamma G_x]° = [gamma^-1 G_{y°}] : y° -> x°``.

    Computed from the canonical member unless ``member`` is given.  Refuses
    to run when the tubular condition fails, since only then is the class
    independent of the chosen member.
    """
    _require_duality(inst)
    if not inst.tubular_report.ok:
        raise TubularConditionFailed(inst.tubular_report)
    f = m.canonical if member is None else member
    if f not in m.members:
        raise ValueError(f"{f} is not a member of the class")
    return ho_class(inst, _dual_coset(inst, f))


# -- exhaustive checks ------------------------------------------------------


def _fmt(inst: OrbitInstance, f: CosetMorphism) -> str:
    return f"{inst.cm.G.labels[f.rep]}G_{inst.labels[f.source]}:{inst.labels[f.source]}->{inst.labels[f.target]}"


def _fmt_class(inst: OrbitInstance, m: HoMorphism) -> str:
    return "[" + _fmt(inst, m.canonical) + "]"


def _composable(inst: OrbitInstance):
    n = inst.size
    for x, y, z in itertools.product(range(n), repeat=3):
        for f in inst.homs[x, y]:
            for h in inst.homs[y, z]:
                yield f, h


def check_category_laws(inst: OrbitInstance) -> Report:
    rep = Report("category-laws")
    n, count = inst.size, 0
    for (x, y), fs in inst.homs.items():
        for f in fs:
            if compose_coset(inst, identity_coset(inst, y), f) != f:
                rep.fail("left-unit", "id ⋄ f != f", f=_fmt(inst, f))
            if compose_coset(inst, f, identity_coset(inst, x)) != f:
                rep.fail("right-unit", "f ⋄ id != f", f=_fmt(inst, f))
    for x, y, z, w in itertools.product(range(n), repeat=4):
        for f in inst.homs[x, y]:
            for g in inst.homs[y, z]:
                gf = compose_coset(inst, g, f)
                for h in inst.homs[z, w]:
                    count += 1
                    if compose_coset(inst, h, gf) != compose_coset(inst, compose_coset(inst, h, g), f):
                        rep.fail("associative", "(h g) f != h (g f)",
                                 f=_fmt(inst, f), g=_fmt(inst, g), h=_fmt(inst, h))
    rep.summary["triples"] = count
    return rep


def check_representative_independence(inst: OrbitInstance) -> Report:
    """Composing any representatives of two cosets lands in the same coset."""
    rep = Report("composition-well-defined")
    G = inst.cm.G
    for f, h in _composable(inst):
        want = compose_coset(inst, h, f)
        for a in coset_members(inst, f):
            for b in coset_members(inst, h):
                if inst.canon[f.source][G.table[b][a]] != want.rep:
                    rep.fail("representative", "composite depends on representatives",
                             f=_fmt(inst, f), h=_fmt(inst, h), gamma=G.labels[a], delta=G.labels[b])
    return rep


def check_monic(inst: OrbitInstance) -> Report:
    rep = Report("monic")
    n = inst.size
    for w, x, y in itertools.product(range(n), repeat=3):
        for f in inst.homs[x, y]:
            seen: dict[CosetMorphism, CosetMorphism] = {}
            for g in inst.homs[w, x]:
                fg = compose_coset(inst, f, g)
                if fg in seen:
                    rep.fail("monic", "f g1 = f g2 with g1 != g2", f=_fmt(inst, f),
                             g1=_fmt(inst, seen[fg]), g2=_fmt(inst, g))
                seen[fg] = g
    return rep


def check_action_functorial(inst: OrbitInstance) -> Report:
    rep = Report("action-functorial")
    A = inst.cm.A
    for h in range(A.order):
        for (x, y), fs in inst.homs.items():
            for f in fs:
                hf = act(inst, h, f)
                if hf not in inst.homs[hf.source, hf.target]:
                    rep.fail("membership", "h.f is not a morphism", h=A.labels[h], f=_fmt(inst, f))
                if h == A.identity and hf != f:
                    rep.fail("unit", "1.f != f", f=_fmt(inst, f))
        hx_id = [act(inst, h, identity_coset(inst, x)) for x in range(inst.size)]
        for x, i in enumerate(hx_id):
            if i != identity_coset(inst, i.source):
                rep.fail("identity", "h.id_x != id_hx", h=A.labels[h], x=inst.labels[x])
        for f, g in _composable(inst):
            if act(inst, h, compose_coset(inst, g, f)) != compose_coset(inst, act(inst, h, g), act(inst, h, f)):
                rep.fail("functor", "h.(g f) != (h.g)(h.f)", h=A.labels[h],
                         f=_fmt(inst, f), g=_fmt(inst, g))
    for h1 in range(A.order):
        for h2 in range(A.order):
            h12 = A.table[h1][h2]
            for fs in inst.homs.values():
                for f in fs:
                    if act(inst, h12, f) != act(inst, h1, act(inst, h2, f)):
                        rep.fail("action", "(h1 h2).f != h1.(h2.f)", h1=A.labels[h1],
                                 h2=A.labels[h2], f=_fmt(inst, f))
    return rep


def check_naturality(inst: OrbitInstance) -> Report:
    """``gamma_x`` is an isomorphism and natural: ``t(gamma).f ⋄ gamma_x = gamma_y ⋄ f``."""
    rep = Report("naturality")
    G, t = inst.cm.G, inst.cm.t
    for gamma in range(G.order):
        for x in range(inst.size):
            c, ci = natural_component(inst, gamma, x), natural_inverse(inst, gamma, x)
            if compose_coset(inst, ci, c) != identity_coset(inst, x) or \
                    compose_coset(inst, c, ci) != identity_coset(inst, c.target):
                rep.fail("iso", "gamma_x is not inverted by gamma^-1 G_{gamma|>x}",
                         gamma=G.labels[gamma], x=inst.labels[x])
        for (x, y), fs in inst.homs.items():
            for f in fs:
                lhs = compose_coset(inst, act(inst, t[gamma], f), natural_component(inst, gamma, x))
                rhs = compose_coset(inst, natural_component(inst, gamma, y), f)
                if lhs != rhs:
                    rep.fail("natural", "square does not commute", gamma=G.labels[gamma],
                             f=_fmt(inst, f))
    return rep


def check_peiffer_consequence(inst: OrbitInstance) -> Report:
    """``G_{gamma |> x} = gamma G_x gamma^-1``."""
    rep = Report("presheaf-conjugation")
    G = inst.cm.G
    for gamma in range(G.order):
        for x in range(inst.size):
            lhs = set(inst.presheaf[inst.triv[gamma, x]].members)
            rhs = {G.conj(gamma, h) for h in inst.presheaf[x].members}
            if lhs != rhs:
                rep.fail("conjugation", "G_{gamma|>x} != gamma G_x gamma^-1",
                         gamma=G.labels[gamma], x=inst.labels[x])
    return rep


def check_equivalence(inst: OrbitInstance) -> Report:
    rep = Report("equivalence-relation")
    classes = 0
    for (x, y) in inst.homs:
        try:
            classes += len(ho_hom(inst, x, y))
        except NotAnEquivalence as exc:
            for w in exc.witnesses:
                rep.fail(w["law"], "≡ is not an equivalence",
                         **{k: _fmt(inst, v) for k, v in w.items() if k != "law"})
    rep.summary["classes"] = classes
    rep.summary["morphisms"] = sum(len(v) for v in inst.homs.values())
    return rep


def check_congruence(inst: OrbitInstance) -> Report:
    """``f ≡ f'`` and ``h ≡ h'`` imply ``h ⋄ f ≡ h' ⋄ f'``, for all composable pairs."""
    _require_duality(inst)
    rep = Report("congruence")
    count = 0
    n = inst.size
    for x, y, z in itertools.product(range(n), repeat=3):
        for cf in inst.ho_homs[x, y]:
            for ch in inst.ho_homs[y, z]:
                first = compose_coset(inst, ch.canonical, cf.canonical)
                for f in cf.members:
                    for h in ch.members:
                        count += 1
                        if not equivalent(inst, first, compose_coset(inst, h, f)):
                            rep.fail("congruence", "h f not ≡ h' f'", f=_fmt(inst, f),
                                     h=_fmt(inst, h))
    rep.summary["pairs"] = count
    return rep


def check_action_descends(inst: OrbitInstance) -> Report:
    """``f ≡ g  iff  h.f ≡ h.g`` for every ``h`` in A."""
    _require_duality(inst)
    rep = Report("action-descends")
    A = inst.cm.A
    for h in range(A.order):
        for fs in inst.homs.values():
            for f, g in itertools.product(fs, repeat=2):
                if equivalent(inst, f, g) != equivalent(inst, act(inst, h, f), act(inst, h, g)):
                    rep.fail("descends", "≡ not preserved by the A-action", h=A.labels[h],
                             f=_fmt(inst, f), g=_fmt(inst, g))
    return rep


def check_tubular(inst: OrbitInstance) -> Report:
    return inst.tubular_report


def check_duality_functor(inst: OrbitInstance) -> list[Report]:
    """Well-definedness, contravariance, units, D∘D and A-equivariance of the lift.

    D∘D = id is asserted only when the duality is a strict involution.
    """
    _require_duality(inst)
    if not inst.tubular_report.ok:
        rep = Report("duality-functor")
        rep.fail("precondition", "tubular condition fails; the lift is not defined")
        return [rep]
    n, d = inst.size, inst.duality
    A = inst.cm.A

    well = Report("dual-well-defined")
    for ms in inst.ho_homs.values():
        for m in ms:
            want = dual_morphism(inst, m)
            for f in m.members:
                if dual_morphism(inst, m, f) != want:
                    well.fail("representative", "dual depends on the class member",
                              m=_fmt_class(inst, m), member=_fmt(inst, f))

    contra = Report("dual-contravariant")
    for x, y, z in itertools.product(range(n), repeat=3):
        for m1 in inst.ho_homs[x, y]:
            for m2 in inst.ho_homs[y, z]:
                lhs = dual_morphism(inst, ho_compose(inst, m2, m1))
                rhs = ho_compose(inst, dual_morphism(inst, m1), dual_morphism(inst, m2))
                if lhs != rhs:
                    contra.fail("contravariant", "(m2 m1)° != m1° m2°",
                                m1=_fmt_class(inst, m1), m2=_fmt_class(inst, m2))

    unit = Report("dual-identity")
    for x in range(n):
        if dual_morphism(inst, ho_identity(inst, x)) != ho_identity(inst, d[x]):
            unit.fail("identity", "id_x° != id_x°", x=inst.labels[x])

    invol = Report("dual-involution")
    strict = all(d[d[x]] == x for x in range(n))
    invol.summary["strict"] = strict
    if strict:
        for ms in inst.ho_homs.values():
            for m in ms:
                if dual_morphism(inst, dual_morphism(inst, m)) != m:
                    invol.fail("involution", "m°° != m", m=_fmt_class(inst, m))

    equiv = Report("dual-equivariant")
    perm = inst.preorder.action.perm
    for h in range(A.order):
        for (x, y), ms in inst.ho_homs.items():
            hx, hy = perm[h][x], perm[h][y]
            # (hy)° -> h(y°) and h(x°) -> (hx)° are identity cosets between ~ objects
            to_hy = ho_class(inst, make_coset(inst, d[hy], perm[h][d[y]], inst.cm.G.identity))
            from_hx = ho_class(inst, make_coset(inst, perm[h][d[x]], d[hx], inst.cm.G.identity))
            for m in ms:
                lhs = dual_morphism(inst, ho_class(inst, act(inst, h, m.canonical)))
                rhs = ho_compose(inst, from_hx, ho_compose(
                    inst, ho_class(inst, act(inst, h, dual_morphism(inst, m).canonical)), to_hy))
                if lhs != rhs:
                    equiv.fail("equivariant", "(h.m)° does not match h.(m°) up to ~",
                               h=A.labels[h], m=_fmt_class(inst, m))
    return [well, contra, unit, invol, equiv]


# -- orbit category of a group ----------------------------------------------


def orbit_category_of_group(A: FiniteGroup, rename: dict[str, str] | None = None) -> OrbitInstance:
    """Subgroups of ``A`` under reverse inclusion, conjugation action, ``G_x = x``."""
    subs = all_subgroups(A)
    labels = [subgroup_label(H) for H in subs]
    if rename:
        labels = [rename.get(lab, lab) for lab in labels]
    leq = [[set(y.members) <= set(x.members) for y in subs] for x in subs]
    P = APreorder(tuple(labels), leq, conjugation_action(A, subs))
    return OrbitInstance(conjugation_module(A), P, tuple(subs),
                         metadata={"name": f"orbit-{A.name}", "construction": "orbit-category-of-group"})


def equivariant_map_count(A: FiniteGroup, x: Subgroup, y: Subgroup) -> int:
    """Number of A-equivariant maps ``A/y -> A/x``, by brute force.

    Every candidate image ``c`` of the base coset ``y`` defines
    ``g y -> g c``; it counts when that assignment is well defined.
    """
    src = [frozenset(c) for c in cosets(A, y)]
    dst = [frozenset(c) for c in cosets(A, x)]
    count = 0
    for c in dst:
        image: dict[frozenset, frozenset] = {}
        ok = True
        for g in range(A.order):
            gy = frozenset(A.table[g][k] for k in y.members)
            gc = frozenset(A.table[g][k] for k in c)
            if image.setdefault(gy, gc) != gc:
                ok = False
                break
        if ok and len(image) == len(src):
            count += 1
    return count


def check_orbit_oracle(inst: OrbitInstance) -> Report:
    """``|hom(x, y)|`` against the brute-force equivariant-map count for every pair."""
    rep = Report("orbit-oracle")
    A = inst.cm.A
    pairs = 0
    for x in range(inst.size):
        for y in range(inst.size):
            pairs += 1
            got = len(inst.homs[x, y])
            want = equivariant_map_count(A, inst.presheaf[x], inst.presheaf[y])
            if got != want:
                rep.fail("count", "|hom(x, y)| differs from the oracle", x=inst.labels[x],
                         y=inst.labels[y], hom=got, oracle=want)
    rep.summary["pairs"] = pairs
    rep.summary["matches"] = pairs - len(rep.violations)
    return rep


def check_duality_lemmas(inst: OrbitInstance) -> list[Report]:
    _require_duality(inst)
    args = (inst.cm, inst.preorder, inst.presheaf, inst.duality)
    return [check_normalizer_lemma(*args), check_product_corollary(*args),
            check_cosieve_iso_invariance(inst.preorder, inst.cosieve)]


def theorem_reports(inst: OrbitInstance) -> list[Report]:
    """Everything checkable on ``inst``: validators, O_s laws, ho laws, duality."""
    reports = validate(inst)
    if not all(r.ok for r in reports):
        return reports
    reports += [check_category_laws(inst), check_representative_independence(inst),
                check_monic(inst), check_action_functorial(inst), check_naturality(inst),
                check_peiffer_consequence(inst)]
    if inst.metadata.get("construction") == "orbit-category-of-group":
        reports.append(check_orbit_oracle(inst))
    if inst.has_duality():
        reports += check_duality_lemmas(inst)
        reports += [check_equivalence(inst), check_congruence(inst), check_action_descends(inst),
                    check_tubular(inst)]
        if inst.tubular_report.ok:
            reports += check_duality_functor(inst)
    return reports


def describe_coset(inst: OrbitInstance, f: CosetMorphism) -> str:
    return _fmt(inst, f)


def describe_class(inst: OrbitInstance, m: HoMorphism) -> str:
    return "{" + ", ".join(_fmt(inst, f) for f in m.members) + "}"
