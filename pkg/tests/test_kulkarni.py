import pytest

from fareysym import classical
from fareysym.exact import Cusp, IMat, INFINITY, FareyError
from fareysym.kulkarni import (MembershipOracle, build_unimodular,
                               gamma0_oracle, gamma0_symbol, p1_normalize,
                               replay_trace)

# appendix polygons: the unimodular vertex lists for small levels
KNOWN_VERTICES = {
    7: "1/0 0/1 1/2 1/1",
    8: "1/0 0/1 1/4 1/3 1/2 1/1",
    9: "1/0 0/1 1/3 1/2 2/3 1/1",
    10: "1/0 0/1 1/3 2/5 1/2 3/5 2/3 1/1",
    11: "1/0 0/1 1/3 1/2 2/3 1/1",
    12: "1/0 0/1 1/6 1/5 1/4 1/3 1/2 2/3 3/4 1/1",
    13: "1/0 0/1 1/3 1/2 2/3 1/1",
    15: "1/0 0/1 1/5 1/4 1/3 2/5 1/2 3/5 2/3 1/1",
    16: "1/0 0/1 1/4 1/3 3/8 2/5 1/2 2/3 3/4 1/1",
    17: "1/0 0/1 1/4 1/3 2/5 1/2 2/3 1/1",
    20: "1/0 0/1 1/5 1/4 2/7 3/10 1/3 3/8 2/5 1/2 3/5 2/3 3/4 1/1",
    22: "1/0 0/1 1/4 3/11 2/7 1/3 4/11 3/8 2/5 1/2 3/5 2/3 3/4 1/1",
    23: "1/0 0/1 1/4 1/3 2/5 1/2 3/5 2/3 3/4 1/1",
    37: "1/0 0/1 1/5 1/4 1/3 3/8 2/5 3/7 1/2 4/7 3/5 2/3 3/4 1/1",
}


class TestP1Normalize:
    @pytest.mark.parametrize("N", [7, 12, 16, 45])
    def test_normal_form_is_a_fixed_point(self, N):
        from hypothesis import given, strategies as st

        @given(st.integers(-10**4, 10**4), st.integers(-10**4, 10**4))
        def prop(u, v):
            from math import gcd
            if gcd(gcd(u, v), N) != 1:
                return
            cu, cv = p1_normalize(N, u, v)
            assert p1_normalize(N, cu, cv) == (cu, cv)
            assert p1_normalize(N, -u, -v) == (cu, cv)
        prop()

    def test_identifies_unit_multiples(self):
        N = 12
        from math import gcd
        for u in range(N):
            for v in range(N):
                if gcd(gcd(u, v), N) != 1:
                    continue
                base = p1_normalize(N, u, v)
                for t in range(1, N):
                    if gcd(t, N) == 1:
                        assert p1_normalize(N, t * u, t * v) == base

    def test_separates_distinct_points(self):
        N = 12
        from math import gcd
        classes = set()
        for u in range(N):
            for v in range(N):
                if gcd(gcd(u, v), N) == 1:
                    classes.add(p1_normalize(N, u, v))
        assert len(classes) == classical.index_gamma0(N)

    def test_level_one(self):
        assert p1_normalize(1, 5, 7) == (0, 0)

    def test_invalid_point(self):
        with pytest.raises(FareyError):
            p1_normalize(4, 2, 2)


class TestGamma0Oracle:
    def test_predicate(self):
        o = gamma0_oracle(15)
        assert o(IMat(2, -1, 15, -7))
        assert not o(IMat(-1, 0, 5, -1))
        assert gamma0_oracle(1)(IMat(19, 7, 8, 3))

    def test_level_validation(self):
        with pytest.raises(FareyError):
            gamma0_oracle(0)

    def test_sign_invariance(self):
        o = gamma0_oracle(6)
        m = IMat(1, 1, 6, 7)
        assert o(m) == o(-m)
        assert o.coset_key(m) == o.coset_key(-m)

    def test_rejecting_identity_is_an_error(self):
        with pytest.raises(FareyError):
            MembershipOracle(lambda m: False)


class TestBuild:
    def test_full_group(self):
        s = gamma0_symbol(1)
        assert [str(v) for v in s.vertices] == ["1/0", "0/1"]
        assert s.pairing == (0, 1)
        assert s.ell == {0: 2, 1: 3}
        s.validate(gamma0_oracle(1))

    def test_gamma0_2(self):
        s = gamma0_symbol(2)
        assert [str(v) for v in s.vertices] == ["1/0", "0/1", "1/1"]
        assert s.pairing == (2, 1, 0)
        assert s.ell == {1: 2}
        assert s.gluing(1).psl_eq(IMat(-1, 1, -2, 1))

    def test_gamma0_15_pairing(self):
        s = gamma0_symbol(15)
        assert s.pairing == (9, 5, 6, 8, 7, 1, 2, 4, 3, 0)
        assert s.ell == {}

    @pytest.mark.parametrize("N", sorted(KNOWN_VERTICES))
    def test_known_polygons(self, N):
        s = gamma0_symbol(N)
        assert " ".join(str(v) for v in s.vertices) == KNOWN_VERTICES[N]
        s.validate(gamma0_oracle(N))

    def test_unimodular_and_index(self):
        for N in range(1, 61):
            s = gamma0_symbol(N)
            assert s.is_unimodular()
            nu3 = sum(1 for mu in s.ell.values() if mu == 3)
            assert 3 * (s.n - 2) + nu3 == classical.index_gamma0(N)

    def test_deterministic(self):
        assert gamma0_symbol(30) == gamma0_symbol(30)

    def test_oracle_without_key_agrees(self):
        for N in (1, 2, 3, 7, 11, 13, 15, 24, 36):
            fast = gamma0_oracle(N)
            slow = MembershipOracle(fast.predicate,
                                    index_bound=fast.index_bound, level=N)
            assert build_unimodular(slow) == build_unimodular(fast)

    def test_trace_replays(self):
        for N in (1, 2, 13, 22, 37):
            sym, trace = gamma0_symbol(N, with_trace=True)
            assert replay_trace(trace, level=N) == sym

    def test_infinite_index_capped(self):
        # the group generated by the identity alone has infinite index
        dead = MembershipOracle(lambda m: m.psl_normalize().is_identity_psl(),
                                index_bound=6)
        with pytest.raises(FareyError):
            build_unimodular(dead)

    def test_mediants_stay_in_circular_order(self):
        # every vertex list from the builder passes the circular-order check
        for N in (19, 28, 45):
            gamma0_symbol(N).validate()

    def test_infinity_zero_pair_is_adjacent(self):
        for N in range(2, 40):
            s = gamma0_symbol(N)
            i = s.infinity_zero_arc()
            assert s.pairing[i] == (i - 1) % s.n
            assert s.arc((i - 1) % s.n) == (Cusp(1, 1), INFINITY)
