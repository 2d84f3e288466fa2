#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cylf/certify.hpp"
#include "cylf/corpus.hpp"
#include "cylf/error.hpp"
#include "cylf/moves.hpp"
#include "cylf/sha256.hpp"
#include "json.hpp"

using namespace cylf;

TEST_CASE("sha256 known vectors") {
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("The quick brown fox jumps over the lazy dog") ==
          "d7a8fbb307d7809469ca9abcb0082e4f8d5651e46d3cdb762d02d0bf37c9e592");
}

TEST_CASE("unknot certificate is violated") {
    Certificate c = nonsqueeze_certificate(builtin_front("unknot_area_1"));
    CHECK(c.disk_count == 1);
    CHECK(c.circular_count == 0);
    CHECK(c.inequality_violated);
    CHECK(!c.conclusion.empty());
    CHECK(c.front_hash.size() == 64);
    // json form parses and carries the fields
    auto j = nlohmann::json::parse(c.to_json());
    CHECK(j["inequality_violated"] == true);
    CHECK(j["disk_count"] == 1);
}

TEST_CASE("saucer certificate is not violated") {
    Certificate c = nonsqueeze_certificate(builtin_front("flying_saucer"));
    CHECK(c.disk_count == 1);
    CHECK(c.circular_count == 1);
    CHECK(!c.inequality_violated);
    CHECK(c.conclusion.empty());
}

TEST_CASE("cover certificates stay violated") {
    for (int k : {2, 3}) {
        Certificate c = nonsqueeze_certificate(builtin_front("unknot_area_k", k));
        CHECK(c.disk_count >= 1);
        CHECK(c.circular_count == 0);
        CHECK(c.inequality_violated);
    }
}

TEST_CASE("certificates are invariant along a fuzz trajectory") {
    FrontDiagram f = builtin_front("unknot_area_1");
    Certificate base = nonsqueeze_certificate(f);
    for (auto& step : fuzz_trajectory(f, 17, 10)) {
        Certificate c = nonsqueeze_certificate(step.front);
        CHECK(c.disk_count == base.disk_count);
        CHECK(c.circular_count == base.circular_count);
        CHECK(c.inequality_violated == base.inequality_violated);
    }
}

TEST_CASE("suspension arithmetic") {
    auto r = suspension_counts({1, 0, 7, 2});
    CHECK(r.disk_total == 7);
    CHECK(r.circular_total == 0);
    CHECK(r.violated);
    auto z = suspension_counts({0, 0, 5, 2});
    CHECK(z.disk_total == 0);
    CHECK(!z.violated);
    auto eq = suspension_counts({2, 2, 5, 2});
    CHECK(eq.disk_total == 10);
    CHECK(eq.circular_total == 10);
    CHECK(!eq.violated);
    CHECK_THROWS_AS(suspension_counts({-1, 0, 1, 2}), Error);
}

TEST_CASE("suspension counts are multiplicative and monotone") {
    for (long long ls : {0, 1, 2, 5, 9}) {
        auto r = suspension_counts({3, 2, ls, 3});
        CHECK(r.disk_total == 3 * ls);
        CHECK(r.circular_total == 2 * ls);
    }
    long long prev = -1;
    for (long long d : {0, 1, 2, 3}) {
        auto r = suspension_counts({d, 1, 4, 2});
        CHECK(r.disk_total > prev);
        prev = r.disk_total;
    }
}

TEST_CASE("torus local system counts") {
    CHECK(torus_local_system_count(2, 3) == 1);
    CHECK(torus_local_system_count(3, 2) == 4);
    CHECK(torus_local_system_count(5, 1) == 4);
    CHECK(torus_local_system_count(7, 0) == 1);
}

TEST_CASE("certificate hash matches the canonical serialization") {
    FrontDiagram f = builtin_front("flying_saucer");
    Certificate c = nonsqueeze_certificate(f);
    CHECK(c.front_hash == sha256_hex(serialize_front(normalize_front(f))));
}
