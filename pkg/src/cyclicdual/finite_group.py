"""Finite groups given by multiplication tables.

Elements are integer indices ``0..order-1``.  Tables are stored as nested
tuples so groups compare and hash structurally; the numpy view ``G.T`` is
what the algorithms use.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .report import STRUCTURAL, Report


class GroupAxiomError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        labels = tuple(self.labels) or tuple(str(i) for i in range(len(table)))
        object.__setattr__(self, "labels", labels)
        problems = _group_law_problems(table)
        if len(labels) != len(table):
            problems.append(f"{len(labels)} labels for {len(table)} elements")
        if len(set(labels)) != len(labels):
            problems.append("labels are not distinct")
        if problems:
            raise GroupAxiomError("; ".join(problems))

    @property
    def order(self) -> int:
        return len(self.table)

    @cached_property
    def T(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64).reshape(self.order, self.order)

    @cached_property
    def identity(self) -> int:
        return next(e for e in range(self.order) if self.table[e][e] == e)

    @cached_property
    def inverse(self) -> tuple[int, ...]:
        e = self.identity
        return tuple(int(np.flatnonzero(self.T[g] == e)[0]) for g in range(self.order))

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def __len__(self) -> int:
        return self.order

    @cached_property
    def _hash(self) -> int:
        return hash((self.table, self.labels))

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    def element(self, label: str | int) -> int:
        if isinstance(label, (int, np.integer)):
            return int(label)
        return self._label_index[label]

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, a: int) -> int:
        """``g a g^-1``."""
        return self.table[self.table[g][a]][self.inverse[g]]

    def whole(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)))

    def trivial(self) -> "Subgroup":
        return Subgroup(self, (self.identity,))


def _group_law_problems(table) -> list[str]:
    n = len(table)
    if n == 0:
        return ["empty table"]
    if any(len(row) != n for row in table):
        return ["table is not square"]
    T = np.array(table, dtype=np.int64)
    if T.min() < 0 or T.max() >= n:
        return ["table entry out of range"]
    out = []
    left = T[T]  # left[a, b, c] = (ab)c
    right = T[np.arange(n)[:, None, None], T[None, :, :]]  # a(bc)
    bad = np.argwhere(left != right)
    if len(bad):
        a, b, c = bad[0]
        out.append(f"not associative at ({a}, {b}, {c})")
    ids = [e for e in range(n) if (T[e] == np.arange(n)).all() and (T[:, e] == np.arange(n)).all()]
    if not ids:
        out.append("no identity element")
        return out
    e = ids[0]
    if e != 0:
        out.append(f"identity must be element 0, found {e}")
    for g in range(n):
        if not ((T[g] == e) & (T[:, g] == e)).any():
            out.append(f"element {g} has no two-sided inverse")
            break
    return out


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(set(int(x) for x in self.members)))
        object.__setattr__(self, "members", members)
        if not is_subgroup(self.parent, members):
            raise GroupAxiomError(f"{members} is not a subgroup of {self.parent!r}")

    @cached_property
    def mask(self) -> np.ndarray:
        out = np.zeros(self.parent.order, dtype=bool)
        out[list(self.members)] = True
        return out

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, g) -> bool:
        return int(g) in self.members

    def __iter__(self):
        return iter(self.members)

    def __le__(self, other: "Subgroup") -> bool:
        return set(self.members) <= set(other.members)

    def __lt__(self, other: "Subgroup") -> bool:
        return self <= other and self.members != other.members

    def __ge__(self, other: "Subgroup") -> bool:
        return other <= self

    def __repr__(self) -> str:
        return "Subgroup({" + ", ".join(self.parent.labels[g] for g in self.members) + "})"


def is_subgroup(G: FiniteGroup, members: Iterable[int]) -> bool:
    ms = set(members)
    if G.identity not in ms:
        return False
    if any(not 0 <= g < G.order for g in ms):
        return False
    return all(G.table[a][b] in ms for a in ms for b in ms) and all(G.inverse[a] in ms for a in ms)


@dataclass(frozen=True)
class GroupHom:
    domain: FiniteGroup
    codomain: FiniteGroup
    map: tuple[int, ...]

    def __call__(self, g: int) -> int:
        return self.map[g]

    def validate(self) -> Report:
        rep = Report("group-hom")
        if len(self.map) != self.domain.order:
            rep.fail("size", f"map has {len(self.map)} entries, domain order {self.domain.order}",
                     kind=STRUCTURAL)
            return rep
        if any(not 0 <= v < self.codomain.order for v in self.map):
            rep.fail("range", "map entry outside codomain", kind=STRUCTURAL)
            return rep
        D, C = self.domain, self.codomain
        for a in range(D.order):
            for b in range(D.order):
                if self.map[D.table[a][b]] != C.table[self.map[a]][self.map[b]]:
                    rep.fail("homomorphism", "t(ab) != t(a)t(b)", a=D.labels[a], b=D.labels[b])
        return rep


@dataclass(frozen=True)
class GroupAction:
    """Left action: ``perm[g][x]`` is ``g . x``."""

    group: FiniteGroup
    set_size: int
    perm: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(tuple(int(x) for x in row) for row in self.perm))

    def __call__(self, g: int, x: int) -> int:
        return self.perm[g][x]

    @cached_property
    def P(self) -> np.ndarray:
        return np.array(self.perm, dtype=np.int64).reshape(self.group.order, self.set_size)

    def validate(self) -> Report:
        rep = Report("group-action")
        G, k = self.group, self.set_size
        if len(self.perm) != G.order or any(len(p) != k for p in self.perm):
            rep.fail("shape", f"expected {G.order} permutations of {k} points", kind=STRUCTURAL)
            return rep
        for g, p in enumerate(self.perm):
            if sorted(p) != list(range(k)):
                rep.fail("permutation", "entry is not a permutation", kind=STRUCTURAL,
                         g=G.labels[g])
        if rep.violations:
            return rep
        if self.perm[G.identity] != tuple(range(k)):
            rep.fail("unit", "identity does not act trivially")
        P = self.P
        for g in range(G.order):
            for h in range(G.order):
                lhs = P[G.table[g][h]]
                rhs = P[g][P[h]]
                bad = np.flatnonzero(lhs != rhs)
                if len(bad):
                    rep.fail("composition", "(gh)x != g(hx)", g=G.labels[g], h=G.labels[h],
                             x=int(bad[0]))
        return rep

    def stabilizer(self, x: int) -> Subgroup:
        return Subgroup(self.group, tuple(g for g in range(self.group.order) if self.perm[g][x] == x))

    def orbit(self, x: int) -> list[int]:
        return sorted({self.perm[g][x] for g in range(self.group.order)})


# -- subgroup calculus ------------------------------------------------------


def generate_subgroup(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``gens``, by breadth-first closure."""
    gens = sorted(set(int(g) for g in gens))
    seen = {G.identity}
    queue = deque([G.identity])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = G.table[a][g]
            if b not in seen:
                seen.add(b)
                queue.append(b)
    # finite group: closure under right multiplication by gens is the subgroup
    return Subgroup(G, tuple(seen))


def cosets(G: FiniteGroup, H: Subgroup) -> list[tuple[int, ...]]:
    """Left cosets ``gH`` as sorted tuples, ordered by their minimal element."""
    seen = np.zeros(G.order, dtype=bool)
    out = []
    for g in range(G.order):
        if seen[g]:
            continue
        coset = tuple(sorted(G.table[g][h] for h in H.members))
        seen[list(coset)] = True
        out.append(coset)
    return out


def coset_canonical(G: FiniteGroup, H: Subgroup) -> np.ndarray:
    """``canon[g]`` is the minimal element of ``gH``."""
    return G.T[:, list(H.members)].min(axis=1)


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    members = set(H.members)
    return Subgroup(G, tuple(g for g in range(G.order)
                             if {G.conj(g, h) for h in members} == members))


def product_set(G: FiniteGroup, L: Iterable[int], R: Iterable[int]) -> frozenset[int]:
    R = list(R)
    return frozenset(G.table[a][b] for a in L for b in R)


def conjugate_subgroup(G: FiniteGroup, g: int, H: Subgroup) -> Subgroup:
    return Subgroup(G, tuple(G.conj(g, h) for h in H.members))


def is_closed(G: FiniteGroup, elems: Iterable[int]) -> bool:
    return is_subgroup(G, elems)


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup, sorted by (order, members).

    Each subgroup is the join of its cyclic subgroups, so closing the set of
    cyclic subgroups under pairwise joins reaches all of them.
    """
    found = {generate_subgroup(G, [g]).members for g in range(G.order)}
    frontier = set(found)
    while frontier:
        new = set()
        for a in frontier:
            for b in found:
                j = generate_subgroup(G, set(a) | set(b)).members
                if j not in found and j not in new:
                    new.add(j)
        found |= new
        frontier = new
    return [Subgroup(G, m) for m in sorted(found, key=lambda m: (len(m), m))]


def subgroup_label(H: Subgroup) -> str:
    """Short name from a minimal generating set: ``1``, the group name, or ``<a, b>``."""
    G = H.parent
    if H.order == 1:
        return "1"
    if H.order == G.order and G.name:
        return G.name
    for size in range(1, H.order + 1):
        for gens in itertools.combinations(H.members, size):
            if generate_subgroup(G, gens).members == H.members:
                return "<" + ", ".join(G.labels[g] for g in gens) + ">"
    raise AssertionError("unreachable")


# -- constructors -----------------------------------------------------------


def trivial_group() -> FiniteGroup:
    return FiniteGroup(((0,),), ("e",), name="1")


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)),
                       tuple(str(i) for i in range(n)), name=f"Z{n}")


def cycle_notation(p: Sequence[int]) -> str:
    """1-based cycle notation, ``()`` for the identity."""
    seen, parts = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = p[x]
        parts.append("(" + " ".join(cyc) + ")")
    return "".join(parts) or "()"


def permutation_group(perms: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    """Group table from a list of permutations closed under composition.

    Product is composition ``(pq)(x) = p(q(x))``; the identity must come first.
    """
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(tuple(index[tuple(p[x] for x in q)] for q in perms) for p in perms)
    return FiniteGroup(table, tuple(cycle_notation(p) for p in perms), name=name)


def symmetric_group(k: int) -> FiniteGroup:
    return permutation_group(list(itertools.permutations(range(k))), name=f"S{k}")


def dihedral_group(k: int) -> FiniteGroup:
    """Symmetries of a ``k``-gon as permutations of its vertices."""
    rots = [tuple((x + r) % k for x in range(k)) for r in range(k)]
    refl = [tuple((r - x) % k for x in range(k)) for r in range(k)]
    return permutation_group(rots + refl, name=f"D{k}")


def regular_action(G: FiniteGroup) -> GroupAction:
    return GroupAction(G, G.order, G.table)


def coset_action(G: FiniteGroup, H: Subgroup) -> GroupAction:
    """Left translation on ``G/H``; points ordered as in :func:`cosets`."""
    cs = cosets(G, H)
    where = {g: i for i, c in enumerate(cs) for g in c}
    return GroupAction(G, len(cs), tuple(tuple(where[G.table[g][c[0]]] for c in cs)
                                         for g in range(G.order)))


def conjugation_action(G: FiniteGroup, subgroups: Sequence[Subgroup]) -> GroupAction:
    index = {H.members: i for i, H in enumerate(subgroups)}
    return GroupAction(G, len(subgroups),
                       tuple(tuple(index[conjugate_subgroup(G, g, H).members] for H in subgroups)
                             for g in range(G.order)))


def trivial_action(G: FiniteGroup, size: int) -> GroupAction:
    return GroupAction(G, size, tuple(tuple(range(size)) for _ in range(G.order)))
