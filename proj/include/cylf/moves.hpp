#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cylf/front.hpp"
#include "cylf/rulings.hpp"

namespace cylf {

// Generic 1-parametric bifurcations of cylinder fronts, as exact local
// rewrites of the slice/event word. Applying a move never touches slices
// outside its window except through the strand renames it reports.

enum class MoveKind { R1_birth, R1_death, R2_in, R2_out, R3, XX_swap, XC_swap, CC_swap, reparam };

const char* move_kind_name(MoveKind k);

struct MoveSpec {
    MoveKind kind = MoveKind::reparam;
    int event = -1;      // leading event index, for event-located moves
    int slice = -1;      // host slice, for R1_birth
    StrandId strand = -1;  // host/pushed strand (R1_birth, R2_in)
    int side = 0;        // +1 up, -1 down (R1_birth, R2_in)

    std::string text() const;
    static MoveSpec parse(const std::string& s);
    bool operator==(const MoveSpec& o) const {
        return kind == o.kind && event == o.event && slice == o.slice && strand == o.strand && side == o.side;
    }
};

struct MoveResult {
    FrontDiagram front;
    MaslovAssignment mu;
    // identity where not listed; applies to slices/events past the window
    // (for reparam: everywhere)
    std::map<StrandId, StrandId> rename;
    // index maps for slices/events outside the rewritten window; -1 inside
    std::vector<int> slice_map;
    std::vector<int> event_map;
};

std::vector<MoveSpec> available_moves(const FrontDiagram& f);
std::vector<MoveSpec> available_moves(const FrontDiagram& f, const MaslovAssignment& mu);

// Throws Error("InvalidSite") when the local pattern is absent or the rewrite
// cannot be realized validly.
MoveResult apply_move(const FrontDiagram& f, const MaslovAssignment& mu, const MoveSpec& m);
MoveResult apply_move(const FrontDiagram& f, const MoveSpec& m);

// The unique normal ruling of the moved front that agrees with r outside the
// move's window and has the same chi. Throws Error("NotNormal") if r is not a
// normal ruling, Error("InvalidSite") on pattern failure; asserts uniqueness.
RulingData continue_ruling(const FrontDiagram& f, const MaslovAssignment& mu, const MoveSpec& m,
                           const RulingData& r, RulingKind kind);

struct FuzzStep {
    MoveSpec move;          // move applied to reach this state (step 0: none)
    FrontDiagram front;
    MaslovAssignment mu;
    std::string front_hash;  // sha256 of the canonical serialization
};

// Deterministic trajectory of n uniformly chosen available moves.
std::vector<FuzzStep> fuzz_trajectory(const FrontDiagram& f, uint64_t seed, int n);
std::vector<FrontDiagram> fuzz_moves(const FrontDiagram& f, uint64_t seed, int n);

std::string trajectory_log(const std::vector<FuzzStep>& t);

}  // namespace cylf
