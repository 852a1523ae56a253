"""Acceptance suite: one test per criterion, each printing a verdict line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines; budgets
and tolerances are pinned in the assertions below.
"""

import json
import random
import time
import warnings

from fareysym import classical
from fareysym.exact import IMat, IDENTITY
from fareysym.invariants import counts, cusp_orbits, express_word, \
    generators, word_product
from fareysym.kulkarni import gamma0_oracle, gamma0_symbol
from fareysym.render import render_chords
from fareysym.siegel import normalize
from fareysym.symbol import FareySymbol

FIXTURE_LEVELS = (1, 2, 7, 11, 13, 14, 15, 20, 22, 37)


def _ok(num, message):
    print("ACCEPTANCE %d: PASS - %s" % (num, message))


def test_criterion_1_fixture_counts(symbol_for, normalized_for):
    timings = {}
    for N in (14, 15, 20, 37):
        t0 = time.time()
        sym = gamma0_symbol(N)
        norm = normalize(sym)
        timings[N] = time.time() - t0
        assert timings[N] < 1.0, "level %d exceeded 1 s" % N
    s15 = symbol_for(15)
    cc = s15.class_counts()
    assert cc["parabolic"] == 1 and cc["hyperbolic"] == 4
    assert cc["elliptic2"] == cc["elliptic3"] == 0
    assert normalized_for(15).block_counts()[:2] == (1, 3)
    assert normalized_for(20).block_counts()[:2] == (1, 5)
    cc37 = symbol_for(37).class_counts()
    assert cc37["elliptic2"] + cc37["elliptic3"] == 4
    q, p, f = normalized_for(37).block_counts()
    assert (q, p) == (2, 1)
    n37 = normalized_for(37)
    assert sum(1 for mu in n37.ell.values() if mu == 2) == 2
    assert sum(1 for mu in n37.ell.values() if mu == 3) == 2
    assert len(generators(normalized_for(14)).symplectic_pairs) == 1
    _ok(1, "fixture counts for levels 15/20/37/14 (max %.2f s per level)"
        % max(timings.values()))


def test_criterion_2_oracle_sweep():
    t0 = time.time()
    for N in range(1, 301):
        got = counts(gamma0_symbol(N))
        assert got == classical.counts_gamma0(N), N
    elapsed = time.time() - t0
    assert elapsed < 60.0
    _ok(2, "counts equal the classical formulas for N in [1, 300] "
        "(%.1f s)" % elapsed)


def test_criterion_3_intermediate_validity():
    target = 10000
    seen = 0
    N = 1
    t0 = time.time()
    while seen < target:
        N += 1
        oracle = gamma0_oracle(N)
        pending = []
        normalize(gamma0_symbol(N), on_op=pending.append, validate=False)
        for sym in pending:
            sym.validate(oracle)
        seen += len(pending)
    _ok(3, "%d intermediate symbols fully valid with all gluings in their "
        "group (levels up to %d, %.1f s)" % (seen, N, time.time() - t0))


def test_criterion_4_matrix_identities(symbol_for, normalized_for):
    checked = 0
    for N in range(1, 61):
        for sym in (symbol_for(N), normalized_for(N)):
            for i, mu in sym.ell.items():
                g = sym.gluing(i)
                if mu == 2:
                    assert (g * g).psl_normalize().is_identity_psl(), (N, i)
                else:
                    gg = g * g
                    assert (1 + g.a + gg.a == 0 and g.b + gg.b == 0
                            and g.c + gg.c == 0 and 1 + g.d + gg.d == 0), (N, i)
                checked += 1
            total = 0
            for orbit in cusp_orbits(sym):
                delta = word_product(sym, orbit.stabilizer_word)
                assert abs(delta.trace()) == 2, (N, orbit)
                assert orbit.width > 0
                total += orbit.width
                checked += 1
            assert total == classical.index_gamma0(N), N
    _ok(4, "elliptic and parabolic matrix identities exact on %d gluings "
        "and stabilizer words (N <= 60)" % checked)


def test_criterion_5_word_round_trip(symbol_for):
    rng = random.Random(20260810)
    t0 = time.time()
    T, S = IMat(1, 1, 0, 1), IMat(0, 1, -1, 0)
    for N in (2, 11, 13, 15, 22, 37):
        sym = symbol_for(N)
        for _ in range(500):
            w = [(rng.randrange(sym.n), rng.choice((1, -1)))
                 for _ in range(rng.randrange(1, 31))]
            g = word_product(sym, w)
            out = express_word(sym, g)
            assert out is not None, (N, w)
            assert word_product(sym, out).psl_eq(g.psl_normalize()), (N, w)
        rejected = 0
        while rejected < 500:
            g = IDENTITY
            for _ in range(rng.randrange(1, 26)):
                g = g * rng.choice((T, T.inverse(), S))
            if g.c % N != 0:
                assert express_word(sym, g) is None, (N, g)
                rejected += 1
    elapsed = time.time() - t0
    assert elapsed < 30.0
    _ok(5, "500 member words re-expressed and 500 non-members rejected per "
        "level, zero failures (%.1f s)" % elapsed)


def test_criterion_6_cross_representation(symbol_for, normalized_for):
    t0 = time.time()
    for N in range(1, 101):
        sym, norm = symbol_for(N), normalized_for(N)
        for m in generators(norm).matrices():
            assert express_word(sym, m) is not None, (N, m)
        for m in generators(sym).matrices():
            assert express_word(norm, m) is not None, (N, m)
    _ok(6, "generator systems mutually expressible for N <= 100 "
        "(%.1f s)" % (time.time() - t0))


def test_criterion_7_height_growth():
    report = []
    for N in (100, 500, 1000):
        norm = normalize(gamma0_symbol(N), validate=False)
        h = max(v.height_bits() for v in norm.vertices)
        assert h <= N, "height %d bits exceeds %d" % (h, N)
        report.append("N=%d: %d bits (~%.2f N)" % (N, h, h / N))
    _ok(7, "normalized vertex heights within the N-bit budget; measured " +
        "; ".join(report))


def test_criterion_8_performance():
    t0 = time.time()
    sym = gamma0_symbol(40000)
    build_time = time.time() - t0
    assert sym.n == 24002
    if build_time > 60.0:
        warnings.warn("soft target missed: build 40000 took %.1f s" % build_time)
    t0 = time.time()
    norm = normalize(gamma0_symbol(2000), validate=False)
    norm_time = time.time() - t0
    assert norm.is_normalized()
    if norm_time > 300.0:
        warnings.warn("soft target missed: normalize 2000 took %.1f s" % norm_time)
    _ok(8, "build N=40000 in %.1f s (target 60); normalize N=2000 in "
        "%.1f s (target 300)" % (build_time, norm_time))


def test_criterion_9_io_and_rendering(symbol_for, normalized_for):
    for N in FIXTURE_LEVELS:
        for sym in (symbol_for(N), normalized_for(N)):
            again = FareySymbol.from_json(sym.to_json())
            assert again == sym, N
    for N in range(1, 51):
        sym = symbol_for(N)
        svg = render_chords(sym)
        cc = sym.class_counts()
        assert svg.count('class="chord"') == cc["hyperbolic"] + cc["parabolic"]
        assert svg.count('class="dot3"') == cc["elliptic3"], N
        assert svg.count('class="dot2"') == cc["elliptic2"], N
    _ok(9, "JSON round-trip identity on all fixtures; SVG chord/dot counts "
        "match classification tallies for N <= 50")
