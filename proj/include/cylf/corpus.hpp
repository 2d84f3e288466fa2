#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cylf/front.hpp"

namespace cylf {

// Test corpus: hand-built fronts beyond the CLI builtins, a seeded generator
// for small fronts with bounded slopes, and an overlay combinator.

// Two nested eyes whose upper strands cross twice; carries a genuinely
// switching disk ruling (count 2).
FrontDiagram nested_eyes();

// Three nested saucers whose bump strands braid: contains R3 sites
// (three consecutive pairwise crossings, twice).
FrontDiagram triple_braid();

// Two nested eyes, all slopes in [0, 3/4], base width 3/4, whose lower
// strands leapfrog (cross twice); carries a switching ruling under the
// bounded-slope hypothesis.
FrontDiagram leapfrog();

// A winding strand sweeping two full turns past two small saucers, forming a
// crossing triangle whose outer crossings carry winding 1 (an R3 site with
// nonzero windings).
FrontDiagram wound_braid();

// Seeded random closed front: all slopes in [0, 3/4], base width <= 3/4, at
// most `max_events` events, every lift in (0,1). Deterministic in the seed.
FrontDiagram gen_small_front(uint64_t seed, int max_events = 12);

// Overlays two fronts on a common base interval, with f2's angles shifted by
// `angle_offset`; throws if the union is not a valid front (angular overlap).
FrontDiagram overlay(const FrontDiagram& f1, const FrontDiagram& f2, const Rational& angle_offset);

struct NamedFront {
    std::string name;
    FrontDiagram front;
};

// the standing corpus used by the invariance suites
std::vector<NamedFront> standard_corpus();

}  // namespace cylf
