"""Catalog of small instances modeled on the worked examples of the theory.

Each entry has a builder, a provenance note and a machine-runnable list of
expected check outcomes.  ``run_expected_checks(name)`` runs the list and
returns one report per expectation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .crossed_module import conjugation_module
from .equivariant_preorder import (
    ACosieve,
    APreorder,
    cosieve_from_duality,
    isotropy_presheaf,
    preorder_cosieve,
)
from .finite_group import (
    FiniteGroup,
    GroupAction,
    Subgroup,
    coset_action,
    cosets,
    cyclic_group,
    generate_subgroup,
    symmetric_group,
    trivial_action,
    trivial_group,
)
from .orbit_cat import (
    OrbitInstance,
    TubularConditionFailed,
    dual_morphism,
    orbit_category_of_group,
    require_valid,
    theorem_reports,
)
from .report import Report


class UnknownInstance(KeyError):
    pass


def _instance(cm, P, presheaf, duality=None, cosieve=None, **meta) -> OrbitInstance:
    return require_valid(OrbitInstance(cm, P, tuple(presheaf), duality, cosieve, metadata=meta))


def normal_subgroup_instance(A: FiniteGroup, H: Subgroup, action: GroupAction,
                             labels: Sequence[str], cosieve: str = "preorder", **meta) -> OrbitInstance:
    """``G = A``, ``G_x = H`` for all ``x``, everything ``~``, ``x° = x``.

    ``cosieve`` is ``"preorder"`` (``⋐ = <=``) or ``"duality"`` (``⋐°``).
    """
    k = action.set_size
    cm = conjugation_module(A)
    P = APreorder(tuple(labels), [[True] * k for _ in range(k)], action)
    presheaf = (H,) * k
    duality = tuple(range(k))
    rel = preorder_cosieve(P) if cosieve == "preorder" else cosieve_from_duality(cm, P, presheaf, duality)
    return _instance(cm, P, presheaf, duality, rel, **meta)


def build_trivial() -> OrbitInstance:
    A = trivial_group()
    return normal_subgroup_instance(A, A.whole(), trivial_action(A, 1), ["pt"], name="trivial",
                                    provenance="one point, trivial 2-group")


def build_z6_two_normals() -> OrbitInstance:
    A = cyclic_group(6)
    cm = conjugation_module(A)
    H, K = generate_subgroup(A, [2]), generate_subgroup(A, [3])
    subs = (H, K)
    leq = [[set(y.members) <= set(x.members) for y in subs] for x in subs]
    P = APreorder(("H", "K"), leq, trivial_action(A, 2))
    duality = (1, 0)
    return _instance(cm, P, subs, duality, cosieve_from_duality(cm, P, subs, duality),
                     name="z6-two-normals",
                     provenance="two normal subgroups H = <2>, K = <3> of Z6 swapped by the duality; "
                                "cosieve induced by the duality")


def build_z30_primes() -> OrbitInstance:
    A = cyclic_group(30)
    cm = conjugation_module(A)
    primes = (2, 3, 5)
    subs = tuple(generate_subgroup(A, [p]) for p in primes)
    P = APreorder(tuple(str(p) for p in primes),
                  [[x == y for y in range(3)] for x in range(3)], trivial_action(A, 3))
    duality = (0, 1, 2)
    return _instance(cm, P, subs, duality, cosieve_from_duality(cm, P, subs, duality),
                     name="z30-primes",
                     provenance="FINITIZED: the integers with the primes replaced by Z30 with "
                                "S = {2, 3, 5}, A_x = <x>; discrete order, x° = x, induced cosieve")


def build_s3_collapse() -> OrbitInstance:
    A = symmetric_group(3)
    A3 = generate_subgroup(A, [A.element("(1 2 3)")])
    return normal_subgroup_instance(A, A3, trivial_action(A, 1), ["pt"], name="s3-collapse",
                                    provenance="normal-subgroup example with G_pt = A3 on one point, "
                                               "pt° = pt, ⋐ = <=")


def _s3_on_cosets(A: FiniteGroup):
    C2 = generate_subgroup(A, [A.element("(1 2)")])
    labels = [A.labels[c[0]] + "H" for c in cosets(A, C2)]
    return coset_action(A, C2), labels


def build_s3_trivial_duality() -> OrbitInstance:
    A = symmetric_group(3)
    action, labels = _s3_on_cosets(A)
    A3 = generate_subgroup(A, [A.element("(1 2 3)")])
    return normal_subgroup_instance(A, A3, action, labels, name="s3-trivial-duality",
                                    provenance="normal-subgroup example: S3 acting on S3/<(1 2)>, "
                                               "G_x = A3, x ~ y for all x, y, x° = x, ⋐ = <=")


def build_s3_whole() -> OrbitInstance:
    A = symmetric_group(3)
    action, labels = _s3_on_cosets(A)
    return normal_subgroup_instance(A, A.whole(), action, labels, cosieve="duality",
                                    name="s3-whole",
                                    provenance="normal-subgroup example with H = G = S3; "
                                               "the induced cosieve equals <=")


def build_s3_isotropy() -> OrbitInstance:
    A = symmetric_group(3)
    action, labels = _s3_on_cosets(A)
    cm, P, presheaf = isotropy_presheaf(action, labels)
    return _instance(cm, P, presheaf, name="s3-isotropy",
                     provenance="isotropy presheaf of S3 acting on S3/<(1 2)>")


def build_s3_orbit() -> OrbitInstance:
    inst = orbit_category_of_group(symmetric_group(3), {"<(1 2 3)>": "A3"})
    inst.metadata.update(name="s3-orbit", provenance="orbit category of S3 (subgroups, s = id)")
    return require_valid(inst)


def build_z4_orbit() -> OrbitInstance:
    inst = orbit_category_of_group(cyclic_group(4))
    inst.metadata.update(name="z4-orbit", provenance="orbit category of Z4 (subgroups, s = id)")
    return require_valid(inst)


def build_s3_orbit_dual() -> OrbitInstance:
    """Orbit category of S3 with the lattice anti-automorphism ``1 <-> S3``.

    The induced cosieve makes ≡ a congruence, but the tubular condition
    fails at every proper nontrivial subgroup b, so the duality does not lift.
    """
    base = build_s3_orbit()
    labels = base.labels
    swap = {"1": "S3", "S3": "1"}
    duality = tuple(labels.index(swap.get(lab, lab)) for lab in labels)
    cosieve = cosieve_from_duality(base.cm, base.preorder, base.presheaf, duality)
    return _instance(base.cm, base.preorder, base.presheaf, duality, cosieve,
                     name="s3-orbit-dual", construction="orbit-category-of-group",
                     provenance="orbit category of S3 with 1° = S3 and the induced cosieve; "
                                "tubular condition fails")


# -- expected checks ----------------------------------------------------------


VALIDATORS = ("crossed-module", "preorder", "presheaf")
DUAL_VALIDATORS = ("duality", "cosieve")
OS_LAWS = ("category-laws", "composition-well-defined", "monic", "action-functorial",
           "naturality", "presheaf-conjugation")
LEMMAS = ("normalizer-lemma", "product-corollary", "cosieve-iso-invariance")
HO_LAWS = ("equivalence-relation", "congruence", "action-descends")
DUAL_FUNCTOR = ("tubular-condition", "dual-well-defined", "dual-contravariant", "dual-identity",
                "dual-involution", "dual-equivariant")
FULL = VALIDATORS + DUAL_VALIDATORS + OS_LAWS + LEMMAS + HO_LAWS + DUAL_FUNCTOR


@dataclass(frozen=True)
class ExpectedCheck:
    check: str
    expect: str = "pass"
    args: tuple = ()


def _pass(*ids: str) -> tuple[ExpectedCheck, ...]:
    return tuple(ExpectedCheck(i) for i in ids)


@dataclass(frozen=True)
class InstanceCatalogEntry:
    name: str
    builder: Callable[[], OrbitInstance]
    provenance: str
    checks: tuple[ExpectedCheck, ...]


def _extra_checks() -> dict[str, Callable[..., Report]]:
    def cosieve_empty(inst: OrbitInstance) -> Report:
        rep = Report("induced-cosieve-empty")
        rel = cosieve_from_duality(inst.cm, inst.preorder, inst.presheaf, inst.duality)
        for x, y in rel.pairs():
            rep.fail("nonempty", "x ⋐° y holds", x=inst.labels[x], y=inst.labels[y])
        return rep

    def cosieve_is_preorder(inst: OrbitInstance) -> Report:
        rep = Report("induced-cosieve-equals-preorder")
        rel = cosieve_from_duality(inst.cm, inst.preorder, inst.presheaf, inst.duality)
        if rel.rel != inst.preorder.leq:
            rep.fail("differs", "⋐° != <=")
        return rep

    def ho_count(inst: OrbitInstance, x: str, y: str, n: int) -> Report:
        rep = Report(f"ho-classes({x},{y})")
        got = len(inst.ho_homs[inst.index(x), inst.index(y)])
        rep.summary.update(classes=got, expected=n)
        if got != n:
            rep.fail("count", f"{got} classes, expected {n}")
        return rep

    def dual_refused(inst: OrbitInstance) -> Report:
        rep = Report("dual-refused")
        some = next(m for ms in inst.ho_homs.values() for m in ms)
        try:
            dual_morphism(inst, some)
        except TubularConditionFailed:
            return rep
        rep.fail("ran", "dual_morphism ran although the tubular condition fails")
        return rep

    return {"induced-cosieve-empty": cosieve_empty,
            "induced-cosieve-equals-preorder": cosieve_is_preorder,
            "ho-classes": ho_count, "dual-refused": dual_refused}


EXTRA_CHECKS = _extra_checks()


CATALOG: dict[str, InstanceCatalogEntry] = {}


def _register(name, builder, provenance, checks):
    CATALOG[name] = InstanceCatalogEntry(name, builder, provenance, tuple(checks))


_register("trivial", build_trivial, "one point, trivial groups",
          _pass(*FULL) + (ExpectedCheck("induced-cosieve-equals-preorder"),
                          ExpectedCheck("ho-classes", args=("pt", "pt", 1))))
_register("z6-two-normals", build_z6_two_normals,
          "normal subgroups H, K with H° = K, K° = H",
          _pass(*FULL) + (ExpectedCheck("ho-classes", args=("H", "H", 1)),))
_register("z30-primes", build_z30_primes,
          "FINITIZED analogue of A = Z acting trivially on the primes (Z30, S = {2,3,5})",
          _pass(*FULL) + (ExpectedCheck("induced-cosieve-empty"),))
_register("s3-collapse", build_s3_collapse,
          "normal subgroup A3 of S3 on a single point, ⋐ = <=",
          _pass(*FULL) + (ExpectedCheck("induced-cosieve-empty"),
                          ExpectedCheck("ho-classes", args=("pt", "pt", 2))))
_register("s3-trivial-duality", build_s3_trivial_duality,
          "normal subgroup A3 of S3, x° = x, on S3/<(1 2)>",
          _pass(*FULL) + (ExpectedCheck("induced-cosieve-empty"),))
_register("s3-whole", build_s3_whole, "G_x = G = S3 on S3/<(1 2)>; induced cosieve is <=",
          _pass(*FULL) + (ExpectedCheck("induced-cosieve-equals-preorder"),))
_register("s3-isotropy", build_s3_isotropy, "isotropy presheaf of S3 on S3/<(1 2)>",
          _pass(*VALIDATORS, *OS_LAWS))
_register("s3-orbit", build_s3_orbit, "orbit category of S3",
          _pass(*VALIDATORS, *OS_LAWS, "orbit-oracle"))
_register("z4-orbit", build_z4_orbit, "orbit category of Z4",
          _pass(*VALIDATORS, *OS_LAWS, "orbit-oracle"))
_register("s3-orbit-dual", build_s3_orbit_dual,
          "orbit category of S3 with 1° = S3 and the induced cosieve",
          _pass(*VALIDATORS, *DUAL_VALIDATORS, *OS_LAWS, "orbit-oracle", *LEMMAS, *HO_LAWS)
          + (ExpectedCheck("tubular-condition", "fail"), ExpectedCheck("dual-refused")))


def names() -> list[str]:
    return list(CATALOG)


def entry(name: str) -> InstanceCatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise UnknownInstance(name) from None


def build(name: str) -> OrbitInstance:
    return entry(name).builder()


def run_expected_checks(name: str) -> list[Report]:
    """One report per expected check; a report passes when the outcome matches."""
    e = entry(name)
    inst = e.builder()
    produced = {r.check: r for r in theorem_reports(inst)}
    out = []
    for ec in e.checks:
        if ec.check in EXTRA_CHECKS:
            actual = EXTRA_CHECKS[ec.check](inst, *ec.args)
        elif ec.check in produced:
            actual = produced[ec.check]
        else:
            rep = Report(ec.check)
            rep.fail("missing", "check did not run on this instance")
            out.append(rep)
            continue
        if ec.expect == "pass":
            out.append(actual)
        else:
            rep = Report(f"{actual.check} [expected fail]",
                         summary={"violations": len(actual.violations)})
            if actual.ok:
                rep.fail("unexpected-pass", "check was expected to fail")
            out.append(rep)
    return out
