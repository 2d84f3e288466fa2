#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "cylf/corpus.hpp"
#include "cylf/error.hpp"
#include "cylf/front.hpp"

using namespace cylf;

namespace {
std::string slurp_fixture(const char* name) {
    std::ifstream in(std::string(CYLF_FIXTURE_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

TEST_CASE("builtins validate") {
    for (auto& nf : standard_corpus()) {
        CAPTURE(nf.name);
        CHECK(validate_front(nf.front).ok());
    }
}

TEST_CASE("unknot_area_1 shape") {
    FrontDiagram f = builtin_front("unknot_area_1");
    CHECK(f.slices.size() == 3);
    CHECK(f.events.size() == 2);
    CHECK(f.events[0].kind == EventKind::birth);
    CHECK(f.events[1].kind == EventKind::death);
    // upper strand lift rises from 0 to 1
    const Slice& mid = f.slices[1];
    CHECK(mid.find(1)->theta_left == Rational(0));
    CHECK(mid.find(1)->theta_right == Rational(1));
}

TEST_CASE("closedness violations are reported") {
    FrontDiagram f = builtin_front("unknot_area_1");
    f.slices.back().arcs = f.slices[1].arcs;  // last slice suddenly populated
    auto rep = validate_front(f);
    CHECK(!rep.ok());
    bool found = false;
    for (auto& v : rep.violations)
        if (v.what.find("not closed") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("interior tangency is reported") {
    FrontDiagram f;
    f.slices.push_back({Rational(0), Rational(1), {}});
    f.slices.push_back({Rational(1), Rational(2), {{0, Rational(0), Rational(0)}, {1, Rational(0), Rational(1)}}});
    f.slices.push_back({Rational(2), Rational(3),
                        {{0, Rational(0), Rational(0)}, {1, Rational(1), Rational(2)}}});
    f.slices.push_back({Rational(3), Rational(4), {}});
    f.events.push_back({EventKind::birth, 0, 1});
    f.events.push_back({EventKind::none, -1, -1});
    f.events.push_back({EventKind::death, 0, 1});
    // strand 1 sits at integer offsets from strand 0 along slice 2: tangent mod 1
    f.slices[2].arcs[1] = {1, Rational(1), Rational(1)};
    auto rep = validate_front(f);
    CHECK(!rep.ok());
    bool found = false;
    for (auto& v : rep.violations)
        if (v.what.find("tangency") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("maslov potential: unknot and empty front") {
    FrontDiagram f = builtin_front("unknot_area_1");
    MaslovAssignment mu = compute_maslov(f);
    CHECK(mu.at(0) == 0);
    CHECK(mu.at(1) == 1);

    FrontDiagram empty;
    empty.slices.push_back({Rational(0), Rational(1), {}});
    CHECK(validate_front(empty).ok());
    CHECK(compute_maslov(empty).mu.empty());
}

TEST_CASE("maslov parity solver rejects an odd cusp cycle") {
    // a 3-cusp immersed circle is not realizable as a closed front, but the
    // parity condition alone is testable on the raw cusp graph
    std::vector<std::pair<StrandId, StrandId>> cusps = {{0, 1}, {1, 2}, {2, 0}};
    CHECK_THROWS_WITH_AS(solve_cusp_parity(cusps, {0, 1, 2}), doctest::Contains("Inconsistent"), Error);
    // even cycles are fine
    std::vector<std::pair<StrandId, StrandId>> even = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    auto mu = solve_cusp_parity(even, {0, 1, 2, 3});
    CHECK(mu.at(0) == 0);
    CHECK(mu.at(1) == 1);
    CHECK(mu.at(3) == 1);
}

TEST_CASE("maslov cusp parity holds at every fold of every corpus front") {
    for (auto& nf : standard_corpus()) {
        CAPTURE(nf.name);
        MaslovAssignment mu = compute_maslov(nf.front);
        for (auto& e : nf.front.events)
            if (e.is_fold()) CHECK(mu.at(e.a) != mu.at(e.b));
    }
}

TEST_CASE("birth and death counts balance") {
    for (auto& nf : standard_corpus()) {
        int births = 0, deaths = 0;
        for (auto& e : nf.front.events) {
            births += e.kind == EventKind::birth;
            deaths += e.kind == EventKind::death;
        }
        CHECK(births == deaths);
        CHECK(births * 2 == count_cusps(nf.front));
    }
}

TEST_CASE("cover identity and composition") {
    FrontDiagram u = builtin_front("unknot_area_1");
    CHECK(cover(u, 1) == u);
    FrontDiagram c6 = cover(u, 6);
    FrontDiagram c23 = cover(cover(u, 2), 3);
    CHECK(normalize_front(c6) == normalize_front(c23));
    CHECK(validate_front(c6).ok());
    // k-1 crossings appear
    int crossings = 0;
    for (auto& e : c6.events) crossings += e.kind == EventKind::crossing;
    CHECK(crossings == 5);
}

TEST_CASE("cover of the unknot doubles the lift") {
    FrontDiagram c2 = cover(builtin_front("unknot_area_1"), 2);
    CHECK(validate_front(c2).ok());
    Rational hi(0);
    for (auto& s : c2.slices)
        for (auto& a : s.arcs) hi = max(hi, max(a.theta_left, a.theta_right));
    CHECK(hi == Rational(2));
}

TEST_CASE("cover of the flying saucer stays crossing-free") {
    FrontDiagram c3 = cover(builtin_front("flying_saucer"), 3);
    CHECK(validate_front(c3).ok());
    for (auto& e : c3.events) CHECK(e.kind != EventKind::crossing);
    Rational spread(0);
    for (auto& s : c3.slices)
        for (auto& a : s.arcs) spread = max(spread, max(a.theta_left.abs(), a.theta_right.abs()));
    CHECK(spread < Rational(1));
}

TEST_CASE("cover_linking basic values") {
    auto iv = [](long long a1, long long b1, long long a2, long long b2) {
        return cover_linking({Rational(a1, 10), Rational(b1, 10), 1}, {Rational(a2, 10), Rational(b2, 10), 1});
    };
    CHECK(iv(0, 3, 1, 4) == 1);   // interleaved
    CHECK(iv(0, 3, 4, 6) == 0);   // disjoint
    CHECK(cover_linking({Rational(0), Rational(1, 2), 1}, {Rational(1, 10), Rational(2, 5), 1}) == 0);  // nested
    CHECK_THROWS_AS(iv(0, 3, 3, 5), Error);  // shared endpoint
}

TEST_CASE("cover_linking symmetry and translation invariance") {
    uint64_t s = 5;
    auto mix = [&]() {
        uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        return z ^ (z >> 31);
    };
    for (int i = 0; i < 300; ++i) {
        long long vals[4];
        bool distinct = true;
        for (auto& v : vals) v = (long long)(mix() % 2000) - 1000;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) distinct &= vals[a] != vals[b];
        if (!distinct) continue;
        CoverInterval i1{Rational(std::min(vals[0], vals[1]), 7), Rational(std::max(vals[0], vals[1]), 7), 1};
        CoverInterval i2{Rational(std::min(vals[2], vals[3]), 7), Rational(std::max(vals[2], vals[3]), 7), 1};
        int l12 = cover_linking(i1, i2), l21 = cover_linking(i2, i1);
        CHECK(l12 == l21);
        long long t = (long long)(mix() % 9) - 4;
        CoverInterval j1{i1.lo + Rational(t), i1.hi + Rational(t), 1};
        CoverInterval j2{i2.lo + Rational(t), i2.hi + Rational(t), 1};
        CHECK(cover_linking(j1, j2) == l12);
    }
}

TEST_CASE("serialization round-trips the corpus") {
    for (auto& nf : standard_corpus()) {
        CAPTURE(nf.name);
        FrontDiagram back = parse_front(serialize_front(nf.front));
        CHECK(back == nf.front);
    }
}

TEST_CASE("parse errors carry diagnostics") {
    CHECK_THROWS_AS(parse_front("{\"format\":\"cylfront/1\",\"slices\":[]}"), Error);
    CHECK_THROWS_AS(parse_front("not json"), Error);
    // non-reduced rationals are rejected
    std::string text = serialize_front(builtin_front("unknot_area_1"));
    auto pos = text.find("\"0/1\"");
    REQUIRE(pos != std::string::npos);
    std::string bad = text.substr(0, pos) + "\"2/4\"" + text.substr(pos + 5);
    CHECK_THROWS_AS(parse_front(bad), Error);
}

TEST_CASE("fixture file equals the builtin") {
    FrontDiagram fromfile = parse_front(slurp_fixture("unknot1.json"));
    CHECK(fromfile == builtin_front("unknot_area_1"));
}

TEST_CASE("builtin_front rejects unknown names") {
    CHECK_THROWS_AS(builtin_front("unknotted_mystery"), Error);
}

TEST_CASE("normalize_front is idempotent and strips collinear kinks") {
    for (auto& nf : standard_corpus()) {
        CAPTURE(nf.name);
        FrontDiagram n1 = normalize_front(nf.front);
        CHECK(validate_front(n1).ok());
        CHECK(normalize_front(n1) == n1);
    }
}

TEST_CASE("stacked saucers have a four-strand middle fiber") {
    FrontDiagram f = builtin_front("stacked_saucers", 2);
    size_t best = 0;
    for (auto& s : f.slices) best = std::max(best, s.arcs.size());
    CHECK(best == 4);
}

TEST_CASE("cover rejects tangencies") {
    // the two saucer bases sit half a revolution apart; doubling makes them
    // coincide mod 1 along whole slices
    FrontDiagram f = builtin_front("stacked_saucers", 2);
    CHECK_THROWS_WITH_AS(cover(f, 2), doctest::Contains("DegenerateCover"), Error);
}

TEST_CASE("cover staggers simultaneous coincidences") {
    // two eyes tuned so both self-meets land on the same fiber after doubling
    FrontDiagram f;
    auto R = [](long long n, long long d = 1) { return Rational(n, d); };
    f.slices.push_back({R(0), R(1), {}});
    f.slices.push_back({R(1), R(3, 2), {{0, R(0), R(0)}, {1, R(0), R(1, 6)}}});
    f.slices.push_back({R(3, 2), R(2),
                        {{0, R(0), R(0)}, {1, R(1, 6), R(1, 3)}, {2, R(1, 3), R(1, 3)}, {3, R(1, 3), R(7, 12)}}});
    f.slices.push_back({R(2), R(17, 6),
                        {{0, R(0), R(0)}, {1, R(1, 3), R(11, 18)}, {2, R(1, 3), R(1, 3)}, {3, R(7, 12), R(1)}}});
    f.slices.push_back({R(17, 6), R(7, 2),
                        {{0, R(0), R(0)}, {1, R(11, 18), R(5, 6)}, {2, R(1, 3), R(1, 3)}, {3, R(1), R(4, 3)}}});
    f.slices.push_back({R(7, 2), R(4), {{0, R(0), R(0)}, {1, R(5, 6), R(1)}}});
    f.slices.push_back({R(4), R(5), {}});
    f.events.push_back({EventKind::birth, 0, 1});
    f.events.push_back({EventKind::birth, 2, 3});
    f.events.push_back({EventKind::crossing, 1, 2});
    f.events.push_back({EventKind::crossing, 0, 3});
    f.events.push_back({EventKind::death, 2, 3});
    f.events.push_back({EventKind::death, 0, 1});
    REQUIRE(validate_front(f).ok());
    // both pairs reach separation 1/2 at x = 5/2, so the doubled front needs
    // its new crossings staggered onto distinct fibers
    FrontDiagram c = cover(f, 2);
    CHECK(validate_front(c).ok());
    int crossings = 0;
    for (auto& e : c.events) crossings += e.kind == EventKind::crossing;
    CHECK(crossings >= 4);
}

TEST_CASE("covers of crossing-rich fronts stay valid") {
    FrontDiagram h = builtin_front("hopf_pair");
    FrontDiagram c = cover(h, 3);
    CHECK(validate_front(c).ok());
    // at three-fold scale some strand separations pass full turns
    int crossings_before = 0, crossings_after = 0;
    for (auto& e : h.events) crossings_before += e.kind == EventKind::crossing;
    for (auto& e : c.events) crossings_after += e.kind == EventKind::crossing;
    CHECK(crossings_after > crossings_before);
    CHECK(validate_front(cover(nested_eyes(), 2)).ok());
    // the braid's quarter-turn plateau sits exactly a quarter above a base
    // strand, so the four-fold cover is tangent
    CHECK_THROWS_WITH_AS(cover(triple_braid(), 4), doctest::Contains("DegenerateCover"), Error);
}
