#pragma once

#include <map>
#include <vector>

#include "cylf/front.hpp"

namespace cylf {

// A fiberwise fixed-point-free pairing of strands, one per slice. Each pair
// {a,b} (a<b) carries an integer offset o; the pair's separation in the
// universal cover is sep_a(x) = theta_b(x) + o - theta_a(x), and sep_b = -sep_a.
// Offsets are forced to 0 at births and evolve by the corner rule at switches,
// so they are determined by the pairing and the switch flags. For circular
// rulings the offset *is* the admissible marking (the winding of the path from
// a strand to its partner); for disk rulings it tracks the pair in the cover
// so that self-crossings of a pair can be told apart from genuine pinches.
struct SlicePairing {
    std::map<StrandId, StrandId> partner;
    std::map<std::pair<StrandId, StrandId>, long long> offset;  // key (min,max)

    bool paired(StrandId a, StrandId b) const;
    long long offset_of(StrandId a, StrandId b) const;
    // signed sweep from x's point to its partner's, given lifts
    Rational separation(StrandId x, const Rational& theta_x, const Rational& theta_partner) const;
    bool operator==(const SlicePairing& o) const { return partner == o.partner && offset == o.offset; }
    bool operator<(const SlicePairing& o) const;
};

struct RulingData {
    std::vector<SlicePairing> pairings;    // one per slice
    std::map<int, bool> switches;          // crossing event index -> switching
    bool operator==(const RulingData& o) const { return pairings == o.pairings && switches == o.switches; }
    bool operator<(const RulingData& o) const;
};

struct DiskRuling : RulingData {};
struct CircularRuling : RulingData {};

enum class RulingKind { disk, circular };

std::vector<DiskRuling> enumerate_disk_rulings(const FrontDiagram& f, const MaslovAssignment& mu);
std::vector<DiskRuling> enumerate_disk_rulings(const FrontDiagram& f);
std::vector<CircularRuling> enumerate_circular_rulings(const FrontDiagram& f, const MaslovAssignment& mu);
std::vector<CircularRuling> enumerate_circular_rulings(const FrontDiagram& f);

// Re-checks an explicit ruling against all local rules (used by expand_short
// and the move-continuation machinery).
bool ruling_is_valid(const FrontDiagram& f, const MaslovAssignment& mu, const RulingData& r, RulingKind kind);

struct CrossingClass {
    bool switching = false;
    bool positive = true;
    bool maslov = false;
};

CrossingClass classify_crossing(const FrontDiagram& f, const MaslovAssignment& mu, const RulingData& r,
                                RulingKind kind, int event_index);  // throws NotACrossing

// Crossings where the ruling pairs the two crossing strands with each other
// (the weak pseudo-involution option). These pass through with their winding
// and are never switching; surfaced for review since the marking conditions
// around them are the subtlest part of the theory.
std::vector<int> exchange_crossings(const FrontDiagram& f, const RulingData& r);

Rational chi(const FrontDiagram& f, const RulingData& r);

// Eyes of a disk ruling: each pair-curve from its birth cusp to its death
// cusp, jumping strands at switching crossings (the pair keeps the partner
// that does not cross).
struct EyeSegment {
    int slice;
    StrandId a, b;  // a < b
    long long offset;
};

struct Eye {
    std::vector<EyeSegment> segments;
    int birth_event = -1, death_event = -1;
};

std::vector<Eye> eyes(const FrontDiagram& f, const DiskRuling& r);

// Fiberwise multiset of bar lengths: disk bars measure the minimal circular
// distance between the paired strands, circular bars the marking sweep.
std::vector<Rational> length_spectrum(const FrontDiagram& f, const RulingData& r, RulingKind kind,
                                      const Rational& x);
Rational max_length(const FrontDiagram& f, const RulingData& r, RulingKind kind);
bool is_eps_short(const FrontDiagram& f, const RulingData& r, RulingKind kind, const Rational& eps);

// Short-lift expansion: a disk ruling none of whose eyes ever reaches
// separation 1/2 acquires the canonical short marking. Throws
// Error("NotShort") naming the eye and fiber otherwise, Error("NotNormal")
// if the input is not a normal disk ruling.
CircularRuling expand_short(const FrontDiagram& f, const MaslovAssignment& mu, const DiskRuling& r);

// Cuts the cylinder along the angle theta0 (which must miss the front over
// its support; otherwise Error("CutHitsFront")) and counts classical planar
// normal rulings of the resulting height diagram. Independent code path from
// enumerate_disk_rulings.
long long planar_ruling_count(const FrontDiagram& f, const Rational& theta0);

}  // namespace cylf
