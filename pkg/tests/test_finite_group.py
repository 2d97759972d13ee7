import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclicdual.finite_group import (
    FiniteGroup,
    GroupAction,
    GroupAxiomError,
    GroupHom,
    Subgroup,
    all_subgroups,
    conjugate_subgroup,
    coset_action,
    coset_canonical,
    cosets,
    cyclic_group,
    dihedral_group,
    generate_subgroup,
    is_subgroup,
    normalizer,
    product_set,
    regular_action,
    subgroup_label,
    symmetric_group,
    trivial_group,
)

S3 = symmetric_group(3)
GROUPS = [trivial_group(), cyclic_group(4), cyclic_group(6), S3, dihedral_group(4)]


def sub(G, *labels):
    return generate_subgroup(G, [G.element(lab) for lab in labels])


def brute_subgroups(G):
    """All subsets closed under the product; fine for |G| <= 8."""
    out = set()
    for r in range(1, G.order + 1):
        for S in itertools.combinations(range(G.order), r):
            if 0 in S and all(G.table[a][b] in S for a in S for b in S):
                out.add(S)
    return out


class TestGroupLaw:
    @pytest.mark.parametrize("G", GROUPS, ids=lambda G: G.name)
    def test_associative_with_inverses(self, G):
        T = G.table
        for a, b, c in itertools.product(range(G.order), repeat=3):
            assert T[T[a][b]][c] == T[a][T[b][c]]
        assert all(T[a][G.inv(a)] == 0 == T[G.inv(a)][a] for a in range(G.order))

    def test_rejects_non_group(self):
        with pytest.raises(GroupAxiomError):
            FiniteGroup(((0, 1), (1, 1)))
        with pytest.raises(GroupAxiomError):
            FiniteGroup(((1, 0), (0, 1)))  # identity not at index 0

    def test_s3_labels_and_product(self):
        assert S3.labels[0] == "()"
        # (1 2)(2 3) applies (2 3) first: 1->1->2, 2->3->3, 3->2->1
        assert S3.mul(S3.element("(1 2)"), S3.element("(2 3)")) == S3.element("(1 2 3)")

    def test_nonabelian(self):
        a, b = S3.element("(1 2)"), S3.element("(2 3)")
        assert S3.mul(a, b) != S3.mul(b, a)


class TestSubgroups:
    def test_generate_cyclic(self):
        Z6 = cyclic_group(6)
        assert generate_subgroup(Z6, [2]).members == (0, 2, 4)
        assert generate_subgroup(Z6, [2, 3]).order == 6
        Z30 = cyclic_group(30)
        assert generate_subgroup(Z30, [6, 10]).members == tuple(range(0, 30, 2))
        assert generate_subgroup(Z30, [6, 10, 15]).order == 30

    def test_generate_s3(self):
        assert sub(S3, "(1 2 3)").order == 3
        assert sub(S3, "(1 2)", "(2 3)").order == 6

    @pytest.mark.parametrize("G,count", [(S3, 6), (cyclic_group(4), 3), (cyclic_group(30), 8),
                                         (dihedral_group(4), 10)])
    def test_subgroup_counts(self, G, count):
        assert len(all_subgroups(G)) == count

    @pytest.mark.parametrize("G", GROUPS, ids=lambda G: G.name)
    def test_all_subgroups_matches_brute_force(self, G):
        assert {H.members for H in all_subgroups(G)} == brute_subgroups(G)

    def test_rejects_non_subgroup(self):
        assert not is_subgroup(S3, [0, S3.element("(1 2 3)")])
        with pytest.raises(GroupAxiomError):
            Subgroup(S3, (0, S3.element("(1 2 3)")))

    def test_labels(self):
        assert subgroup_label(S3.trivial()) == "1"
        assert subgroup_label(S3.whole()) == "S3"
        assert subgroup_label(sub(S3, "(1 2 3)")) == "<(1 2 3)>"


class TestCosets:
    @pytest.mark.parametrize("G", GROUPS, ids=lambda G: G.name)
    def test_partition_and_lagrange(self, G):
        for H in all_subgroups(G):
            cs = cosets(G, H)
            assert sorted(itertools.chain.from_iterable(cs)) == list(range(G.order))
            assert all(len(c) == H.order for c in cs)
            assert len(cs) * H.order == G.order
            canon = coset_canonical(G, H)
            for c in cs:
                assert all(canon[g] == min(c) for g in c)

    def test_normalizers_in_s3(self):
        C2, A3 = sub(S3, "(1 2)"), sub(S3, "(1 2 3)")
        assert normalizer(S3, C2) == C2
        assert normalizer(S3, A3) == S3.whole()
        assert normalizer(S3, S3.trivial()) == S3.whole()

    def test_conjugate_subgroup(self):
        c = S3.element("(1 2 3)")
        assert conjugate_subgroup(S3, c, sub(S3, "(1 2)")) == sub(S3, "(2 3)")

    def test_product_set(self):
        C2, C2b = sub(S3, "(1 2)"), sub(S3, "(2 3)")
        P = product_set(S3, C2.members, C2b.members)
        assert len(P) == 4 and not is_subgroup(S3, P)
        A3 = sub(S3, "(1 2 3)")
        assert product_set(S3, C2.members, A3.members) == frozenset(range(6))

    @given(st.sampled_from(GROUPS).flatmap(
        lambda G: st.tuples(st.just(G), st.sampled_from(all_subgroups(G)),
                            st.sampled_from(all_subgroups(G)))))
    def test_product_formula(self, args):
        G, H, K = args
        inter = len(set(H.members) & set(K.members))
        assert len(product_set(G, H.members, K.members)) * inter == H.order * K.order


class TestActionsAndHoms:
    @pytest.mark.parametrize("G", GROUPS, ids=lambda G: G.name)
    def test_regular_and_coset_actions_valid(self, G):
        assert regular_action(G).validate().ok
        for H in all_subgroups(G):
            act = coset_action(G, H)
            assert act.validate().ok
            assert act.stabilizer(0) == H
            assert len(act.orbit(0)) == G.order // H.order

    def test_broken_action(self):
        Z2 = cyclic_group(2)
        bad = GroupAction(Z2, 3, ((0, 1, 2), (1, 2, 0)))
        rep = bad.validate()
        assert not rep.ok and "composition" in rep.codes()

    def test_sign_hom(self):
        Z2 = cyclic_group(2)
        sign = tuple(0 if S3.labels[g] in ("()", "(1 2 3)", "(1 3 2)") else 1 for g in range(6))
        assert GroupHom(S3, Z2, sign).validate().ok
        rep = GroupHom(S3, Z2, (0, 1, 1, 1, 0, 1)).validate()
        assert not rep.ok and rep.violations[0].witness
