#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cylf/rational.hpp"

namespace cylf {

// Closed Legendrian fronts on the cylinder S^1 x R, base coordinate x in R
// and fiber coordinate theta in R/Z. Angles are stored as lifts (arbitrary
// rationals); the position on the circle is the lift mod 1. A front is a
// sequence of slices (vertical strips with a fixed set of strand arcs, each
// arc linear in x) separated by boundary fibers, each carrying one event.
//
// Event kinds:
//   crossing  - two strands coincide mod 1 at the fiber, transversally;
//               their lifts may differ by any integer (the winding).
//   birth     - left cusp: two new strands appear with equal lift.
//   death     - right cusp: two strands end, coinciding mod 1; the integer
//               lift difference is the winding the pair accumulated.
//   none      - no coincidence; strands may change slope here (PL kink).

using StrandId = int;

struct StrandArc {
    StrandId id = -1;
    Rational theta_left, theta_right;

    Rational theta_at(const Rational& x_left, const Rational& x_right, const Rational& x) const;
    bool operator==(const StrandArc& o) const {
        return id == o.id && theta_left == o.theta_left && theta_right == o.theta_right;
    }
};

struct Slice {
    Rational x_left, x_right;
    std::vector<StrandArc> arcs;  // kept sorted by id

    const StrandArc* find(StrandId id) const;
    StrandArc* find(StrandId id);
    bool has(StrandId id) const { return find(id) != nullptr; }
    Rational theta(StrandId id, const Rational& x) const;
    Rational width() const { return x_right - x_left; }
    bool operator==(const Slice& o) const {
        return x_left == o.x_left && x_right == o.x_right && arcs == o.arcs;
    }
};

enum class EventKind { crossing, birth, death, none };

const char* event_kind_name(EventKind k);

struct Event {
    EventKind kind = EventKind::none;
    StrandId a = -1, b = -1;  // normalized a < b; both -1 for none

    bool involves(StrandId s) const { return s == a || s == b; }
    bool is_fold() const { return kind == EventKind::birth || kind == EventKind::death; }
    bool operator==(const Event& o) const { return kind == o.kind && a == o.a && b == o.b; }
};

struct FrontDiagram {
    std::vector<Slice> slices;
    std::vector<Event> events;  // events[i] sits at the fiber between slices[i] and slices[i+1]

    bool empty() const;
    // fiber of boundary i (== slices[i].x_right == slices[i+1].x_left)
    const Rational& boundary_x(int i) const { return slices[i].x_right; }
    int num_boundaries() const { return (int)events.size(); }
    StrandId max_strand_id() const;
    std::vector<StrandId> all_strand_ids() const;
    bool operator==(const FrontDiagram& o) const { return slices == o.slices && events == o.events; }
};

struct Violation {
    std::string what;
    int slice = -1;
    int event = -1;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

ValidationReport validate_front(const FrontDiagram& f);
// same checks restricted to slices [slice_lo, slice_hi] and the events
// touching them; global structure (counts, closedness, contiguity at the
// range edges) is always checked
ValidationReport validate_front_range(const FrontDiagram& f, int slice_lo, int slice_hi);

// Z/2 Maslov potential on smooth strands; jumps by 1 across each cusp.
struct MaslovAssignment {
    std::map<StrandId, int> mu;  // values in {0,1}
    int at(StrandId s) const;
};

// Canonical potential: on each knot component the least strand id gets 0.
// Valid closed fronts always admit one (cusp cycles have even length).
MaslovAssignment compute_maslov(const FrontDiagram& f);

// Parity solver on a raw cusp graph; throws Error("Inconsistent") when some
// cycle has odd length. compute_maslov is this applied to the front's cusps.
MaslovAssignment solve_cusp_parity(const std::vector<std::pair<StrandId, StrandId>>& cusps,
                                   const std::vector<StrandId>& strands);

// Multiplies every angular lift by k and restores front-genericity by
// subdividing slices and inserting the transverse crossings the rescaling
// creates. Throws Error("DegenerateCover") on tangencies.
FrontDiagram cover(const FrontDiagram& f, int k);

// Path in the universal cover R of the fiber circle, endpoints lo <= hi.
struct CoverInterval {
    Rational lo, hi;
    int orientation = 1;

    static CoverInterval from_sweep(const Rational& base, const Rational& sweep);
};

// Z/2 linking of two intervals in R: 1 iff exactly one endpoint of i2 lies
// strictly inside (i1.lo, i1.hi). Throws Error("DegenerateEndpoints") when
// any two of the four endpoints coincide.
int cover_linking(const CoverInterval& i1, const CoverInterval& i2);

// Built-in corpus: unknot_area_k (param k), flying_saucer, stacked_saucers
// (param m), hopf_pair. Throws Error("UnknownName").
FrontDiagram builtin_front(const std::string& name, long long param = 0);

// cylfront/1 file format (JSON); see README. Round-trips exactly.
std::string serialize_front(const FrontDiagram& f);
FrontDiagram parse_front(const std::string& text);  // throws Error("ParseError")

// Canonical form: slice boundaries at consecutive integers starting at 0,
// lifts translated so the least lift in the first nonempty slice lies in
// [0,1), collinear none-boundaries merged, strand ids renumbered by first
// appearance. Two fronts related by a fibered reparametrization agree here.
struct NormalizeResult {
    FrontDiagram front;
    std::vector<int> slice_map;          // old slice index -> new (merged slices share)
    std::vector<int> event_map;          // old event index -> new, -1 for merged nones
    std::map<StrandId, StrandId> rename;
};
NormalizeResult normalize_front_full(const FrontDiagram& f);
FrontDiagram normalize_front(const FrontDiagram& f);

// Positions (lifts mod 1) pairwise distinct check helper: first integer value
// strictly between d_left and d_right if any.
std::optional<BigInt> integer_strictly_between(const Rational& a, const Rational& b);

int count_cusps(const FrontDiagram& f);

}  // namespace cylf
