#include "cylf/certify.hpp"

#include "cylf/error.hpp"
#include "cylf/rulings.hpp"
#include "cylf/sha256.hpp"
#include "json.hpp"

namespace cylf {

const char* kToolVersion = "cylf 1.0";

Certificate nonsqueeze_certificate(const FrontDiagram& f) {
    Certificate c;
    c.tool_version = kToolVersion;
    c.front_hash = sha256_hex(serialize_front(normalize_front(f)));
    MaslovAssignment mu = compute_maslov(f);
    c.disk_count = (long long)enumerate_disk_rulings(f, mu).size();
    c.circular_count = (long long)enumerate_circular_rulings(f, mu).size();
    c.inequality_violated = c.disk_count > c.circular_count;
    if (c.inequality_violated) c.conclusion = "the front admits no Legendrian isotopy into Z^(1)";
    return c;
}

std::string Certificate::to_json() const {
    nlohmann::ordered_json j;
    j["format"] = "cylcert/1";
    j["front_sha256"] = front_hash;
    j["disk_count"] = disk_count;
    j["circular_count"] = circular_count;
    j["inequality_violated"] = inequality_violated;
    if (!conclusion.empty()) j["conclusion"] = conclusion;
    j["tool"] = tool_version;
    if (fuzz_steps > 0) {
        j["fuzz_seed"] = fuzz_seed;
        j["fuzz_steps"] = fuzz_steps;
    }
    return j.dump(2) + "\n";
}

SuspensionCounts suspension_counts(const SuspensionSpec& s) {
    if (s.seed_disk_count < 0 || s.seed_circular_count < 0 || s.local_system_count < 0)
        throw Error("BadParams", "suspension counts must be nonnegative");
    SuspensionCounts out;
    out.disk_total = s.seed_disk_count * s.local_system_count;
    out.circular_total = s.seed_circular_count * s.local_system_count;
    out.violated = out.disk_total > out.circular_total;
    return out;
}

long long torus_local_system_count(unsigned q, int m) {
    if (m < 0) throw Error("BadParams", "torus dimension must be nonnegative");
    long long r = 1;
    for (int i = 0; i < m; ++i) r *= (long long)(q - 1);
    return r;
}

}  // namespace cylf
