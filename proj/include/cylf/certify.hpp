#pragma once

#include <cstdint>
#include <string>

#include "cylf/front.hpp"

namespace cylf {

// Non-squeezing certificates: a front whose disk-ruling count exceeds its
// circular-ruling count admits no Legendrian isotopy into the unit
// pre-quantized cylinder.

struct Certificate {
    std::string front_hash;       // sha256 of the canonical serialization
    long long disk_count = 0;
    long long circular_count = 0;
    bool inequality_violated = false;
    std::string conclusion;       // empty unless violated
    std::string tool_version;
    uint64_t fuzz_seed = 0;       // seed of any fuzz evidence attached
    int fuzz_steps = 0;

    std::string to_json() const;
};

Certificate nonsqueeze_certificate(const FrontDiagram& f);

struct SuspensionSpec {
    long long seed_disk_count = 0;
    long long seed_circular_count = 0;
    long long local_system_count = 0;  // rank-1 local systems on the base M
    unsigned q = 2;                    // field order used for (q-1)^m bases
};

struct SuspensionCounts {
    long long disk_total = 0;
    long long circular_total = 0;
    bool violated = false;
};

SuspensionCounts suspension_counts(const SuspensionSpec& s);

// rank-1 local systems on the m-torus over F_q
long long torus_local_system_count(unsigned q, int m);

extern const char* kToolVersion;

}  // namespace cylf
