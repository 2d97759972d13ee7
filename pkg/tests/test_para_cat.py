import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclicdual.para_cat import (
    InvalidMorphism,
    LiteralError,
    ParaMorphism,
    RankMismatch,
    batch_compose,
    batch_dual,
    classify,
    compose,
    contravariance_sweep,
    cycle,
    cyclic_dual,
    degeneracy,
    enumerate_morphisms,
    evaluate,
    face,
    format_literal,
    identity,
    in_Delta,
    in_K,
    lambda_canonical,
    parse_literal,
    power,
    window_array,
)

T2 = ParaMorphism(2, 2, (1, 2, 3))


def brute_dual_values(f, reach=120):
    """max{j : -f(-j) <= i} by scanning j over a wide range."""
    out = []
    for i in range(f.m + 1):
        js = [j for j in range(-reach, reach) if -f(-j) <= i]
        assert js and max(js) < reach - 1, "scan range too small"
        out.append(max(js))
    return out


@st.composite
def morphisms(draw, max_rank=4, window=2):
    n = draw(st.integers(0, max_rank))
    m = draw(st.integers(0, max_rank))
    v0 = draw(st.integers(-window * (m + 1), window * (m + 1)))
    tail = sorted(draw(st.lists(st.integers(v0, v0 + m + 1), min_size=n, max_size=n)))
    return ParaMorphism(n, m, (v0, *tail))


@st.composite
def composable_pairs(draw):
    f = draw(morphisms())
    k = draw(st.integers(0, 4))
    w0 = draw(st.integers(-2 * (k + 1), 2 * (k + 1)))
    tail = sorted(draw(st.lists(st.integers(w0, w0 + k + 1), min_size=f.m, max_size=f.m)))
    return f, ParaMorphism(f.m, k, (w0, *tail))


class TestConstruction:
    def test_rejects_non_monotone(self):
        with pytest.raises(InvalidMorphism):
            ParaMorphism(2, 2, (0, 2, 1))

    def test_rejects_overlong_window(self):
        with pytest.raises(InvalidMorphism):
            ParaMorphism(1, 1, (0, 3))

    def test_rejects_wrong_length(self):
        with pytest.raises(InvalidMorphism):
            ParaMorphism(2, 1, (0, 1))

    def test_literal_roundtrip(self):
        assert parse_literal("2 2 : 1 2 3") == T2
        assert format_literal(T2) == "2 2 : 1 2 3"
        assert parse_literal("0 0 : -3") == ParaMorphism(0, 0, (-3,))

    @pytest.mark.parametrize("bad", ["2 2 1 2 3", "2 2 : 1 2", "a b : 1", "", "1 1 : 0 x"])
    def test_malformed_literals(self, bad):
        with pytest.raises(LiteralError):
            parse_literal(bad)


class TestEval:
    def test_identity(self):
        assert evaluate(identity(1), 7) == 7

    def test_cycle_values(self):
        assert evaluate(T2, 0) == 1
        assert evaluate(T2, 5) == 6

    @given(morphisms(), st.integers(-50, 50))
    def test_periodicity(self, f, j):
        assert f(j + f.n + 1) == f(j) + f.m + 1

    @given(morphisms())
    def test_window_agrees(self, f):
        assert [f(j) for j in range(f.n + 1)] == list(f.values)


class TestCompose:
    def test_identity_law(self):
        assert compose(identity(2), T2) == T2
        assert compose(T2, identity(2)) == T2

    def test_cycle_squared(self):
        assert compose(T2, T2) == ParaMorphism(2, 2, (2, 3, 4))

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatch):
            compose(identity(1), T2)

    @given(composable_pairs(), st.integers(-30, 30))
    def test_pointwise(self, pair, j):
        f, g = pair
        assert compose(g, f)(j) == g(f(j))

    def test_associativity_exhaustive(self):
        maps = {(n, m): enumerate_morphisms(n, m, 1) for n in range(3) for m in range(3)}
        count = 0
        for a, b, c, d in itertools.product(range(3), repeat=4):
            for f in maps[a, b]:
                for g in maps[b, c]:
                    gf = compose(g, f)
                    for h in maps[c, d][::7]:
                        assert compose(h, gf) == compose(compose(h, g), f)
                        count += 1
        assert count > 10000


class TestDual:
    @pytest.mark.parametrize("n", range(5))
    def test_identity_self_dual(self, n):
        assert cyclic_dual(identity(n)) == identity(n)

    def test_cycle_self_dual(self):
        assert cyclic_dual(T2) == T2

    def test_face_dual_is_degeneracy(self):
        assert cyclic_dual(ParaMorphism(1, 2, (0, 2))) == ParaMorphism(2, 1, (0, 1, 1))
        assert cyclic_dual(face(2, 1)) == degeneracy(1, 1)

    def test_delta_escape_witness(self):
        f = ParaMorphism(0, 1, (1,))
        assert in_K(f) and in_Delta(f)
        d = cyclic_dual(f)
        assert d == ParaMorphism(1, 0, (0, 1))
        assert in_K(d) and not in_Delta(d)

    def test_matches_brute_force_max(self):
        for n in range(4):
            for m in range(4):
                for f in enumerate_morphisms(n, m, 2):
                    assert list(cyclic_dual(f).values) == brute_dual_values(f)

    @given(morphisms())
    def test_involution(self, f):
        assert cyclic_dual(cyclic_dual(f)) == f

    @given(composable_pairs())
    def test_contravariance(self, pair):
        f, g = pair
        assert cyclic_dual(compose(g, f)) == compose(cyclic_dual(f), cyclic_dual(g))

    @given(morphisms())
    def test_restricts_to_K(self, f):
        if in_K(f):
            assert in_K(cyclic_dual(f))


class TestSubcategories:
    def test_predicates(self):
        assert in_Delta(identity(3))
        assert classify(ParaMorphism(1, 1, (0, 2))) == "K"
        assert classify(ParaMorphism(1, 1, (-1, 0))) == "ParaCyclic"

    @given(composable_pairs())
    def test_closure(self, pair):
        f, g = pair
        if in_K(f) and in_K(g):
            assert in_K(compose(g, f))
        if in_Delta(f) and in_Delta(g):
            assert in_Delta(compose(g, f))


class TestGenerators:
    def test_examples(self):
        assert face(2, 1) == ParaMorphism(1, 2, (0, 2))
        assert degeneracy(1, 1) == ParaMorphism(2, 1, (0, 1, 1))
        assert cycle(2) == T2

    @pytest.mark.parametrize("call", [lambda: face(2, 3), lambda: face(0, 0),
                                      lambda: degeneracy(1, 2), lambda: degeneracy(1, -1)])
    def test_out_of_range(self, call):
        with pytest.raises(IndexError):
            call()

    def test_simplicial_identities(self):
        # d_j d_i = d_i d_{j-1} for i < j
        for n in range(2, 5):
            for j in range(n + 1):
                for i in range(j):
                    assert compose(face(n, j), face(n - 1, i)) == compose(face(n, i), face(n - 1, j - 1))

    def test_generators_in_delta(self):
        for n in range(1, 5):
            assert all(in_Delta(face(n, i)) for i in range(n + 1))
            assert all(in_Delta(degeneracy(n, i)) for i in range(n + 1))
            assert not in_Delta(cycle(n)) and in_K(cycle(n))


class TestEnumerationAndQuotient:
    def test_delta_count(self):
        # v0 in [-2, 2] covers (0,0), (0,1), (1,1)
        assert [f.values for f in enumerate_morphisms(1, 1, 1) if in_Delta(f)] == [(0, 0), (0, 1), (1, 1)]
        # window 0 pins v0 = 0
        assert len([f for f in enumerate_morphisms(1, 1, 0) if in_Delta(f)]) == 2

    def test_deterministic_and_unique(self):
        a = enumerate_morphisms(2, 3, 2)
        assert a == enumerate_morphisms(2, 3, 2)
        assert len(set(a)) == len(a) and a == sorted(a)

    def test_size(self):
        # 9 starting values times nondecreasing tails of length 2 in 0..3
        assert len(enumerate_morphisms(2, 2, 1)) == 7 * 10

    def test_lambda_images(self):
        assert len({lambda_canonical(f) for f in enumerate_morphisms(0, 0, 2)}) == 1
        assert len({lambda_canonical(f) for f in enumerate_morphisms(1, 1, 2)}) == 6

    def test_lambda_examples(self):
        assert lambda_canonical(identity(3)) == identity(3)
        assert lambda_canonical(ParaMorphism(0, 0, (-3,))) == ParaMorphism(0, 0, (0,))

    @pytest.mark.parametrize("n", range(5))
    def test_full_turn_is_identity(self, n):
        assert power(cycle(n), n + 1) != identity(n)
        assert lambda_canonical(power(cycle(n), n + 1)) == identity(n)

    @given(morphisms())
    def test_lambda_idempotent_and_shift(self, f):
        c = lambda_canonical(f)
        assert lambda_canonical(c) == c
        assert 0 <= c.values[0] <= c.m
        diffs = {a - b for a, b in zip(f.values, c.values)}
        assert len(diffs) == 1 and diffs.pop() % (f.m + 1) == 0

    @given(composable_pairs())
    def test_lambda_respects_composition(self, pair):
        f, g = pair
        assert lambda_canonical(compose(g, f)) == lambda_canonical(
            compose(lambda_canonical(g), lambda_canonical(f)))


class TestBatch:
    @pytest.mark.parametrize("n,m", [(0, 0), (0, 3), (2, 1), (3, 3)])
    def test_window_array_matches(self, n, m):
        arr = window_array(n, m, 2)
        assert [tuple(r) for r in arr] == [f.values for f in enumerate_morphisms(n, m, 2)]

    @pytest.mark.parametrize("n,m", [(0, 2), (2, 0), (2, 3), (4, 4)])
    def test_batch_dual_matches_scalar(self, n, m):
        fs = enumerate_morphisms(n, m, 2)
        got = batch_dual(window_array(n, m, 2), m)
        assert [tuple(r) for r in got] == [cyclic_dual(f).values for f in fs]

    def test_batch_compose_matches_scalar(self):
        fs, gs = enumerate_morphisms(2, 1, 1), enumerate_morphisms(1, 3, 1)
        H = batch_compose(window_array(1, 3, 1), window_array(2, 1, 1), 3)
        for a, g in enumerate(gs):
            for b, f in enumerate(fs):
                assert tuple(H[a, b]) == compose(g, f).values

    def test_sweep_small(self):
        out = contravariance_sweep(2, 1)
        assert out["failure_count"] == 0
        expected = sum(len(enumerate_morphisms(n, m, 1)) * len(enumerate_morphisms(m, k, 1))
                       for n in range(3) for m in range(3) for k in range(3))
        assert out["pairs"] == expected

    def test_sweep_detects_a_broken_dual(self, monkeypatch):
        import cyclicdual.para_cat as pc

        real = pc.batch_dual

        def skewed(values, m):
            out = real(values, m)
            if values.ndim == 3:
                out = out.copy()
                out[..., -1] += 1
            return out

        monkeypatch.setattr(pc, "batch_dual", skewed)
        out = pc.contravariance_sweep(1, 1)
        assert out["failure_count"] > 0 and out["failures"]
        np.testing.assert_equal(len(out["failures"]) <= 20, True)
