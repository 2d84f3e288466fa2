#pragma once

// Independent brute-force ruling counter: enumerates every per-slice perfect
// matching and every switch-flag assignment, then filters by the local rules
// restated from scratch (global product search rather than the library's
// left-to-right propagation). Only usable on small fronts.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "cylf/front.hpp"
#include "cylf/rulings.hpp"

namespace cylf_oracle {

using namespace cylf;

using Pairing = std::map<StrandId, StrandId>;
using Offsets = std::map<std::pair<StrandId, StrandId>, Rational>;  // key a<b, value theta_b+o-theta_a offset o

inline std::vector<Pairing> all_matchings(std::vector<StrandId> ids) {
    std::vector<Pairing> out;
    if (ids.empty()) return {Pairing{}};
    StrandId first = ids.front();
    for (size_t j = 1; j < ids.size(); ++j) {
        std::vector<StrandId> rest;
        for (size_t k = 1; k < ids.size(); ++k)
            if (k != j) rest.push_back(ids[k]);
        for (auto sub : all_matchings(rest)) {
            sub[first] = ids[j];
            sub[ids[j]] = first;
            out.push_back(sub);
        }
    }
    return out;
}

// circular interleaving by sorting fractional positions
inline bool interleaved(const Rational& a1, const Rational& a2, const Rational& b1, const Rational& b2) {
    struct P {
        Rational pos;
        int tag;
    };
    std::vector<P> ps{{a1.frac(), 0}, {a2.frac(), 0}, {b1.frac(), 1}, {b2.frac(), 1}};
    std::sort(ps.begin(), ps.end(), [](const P& x, const P& y) { return x.pos < y.pos; });
    // alternating tags around the circle <=> interleaved
    return ps[0].tag != ps[1].tag && ps[1].tag != ps[2].tag && ps[2].tag != ps[3].tag;
}

inline int linking_in_R(const Rational& lo1, const Rational& hi1, const Rational& lo2, const Rational& hi2) {
    int inside = 0;
    if (lo1 < lo2 && lo2 < hi1) ++inside;
    if (lo1 < hi2 && hi2 < hi1) ++inside;
    return inside == 1 ? 1 : 0;
}

struct OracleConfig {
    bool circular = false;
};

// enumerates (pairing tuple, flags) and validates every boundary rule
inline long long oracle_count(const FrontDiagram& f, const MaslovAssignment& mu, bool circular) {
    int n_slices = (int)f.slices.size();
    std::vector<std::vector<Pairing>> per_slice;
    for (int si = 0; si < n_slices; ++si) {
        std::vector<StrandId> ids;
        for (auto& a : f.slices[si].arcs) ids.push_back(a.id);
        per_slice.push_back(all_matchings(ids));
    }
    long long count = 0;

    // recursive product over slices with offset threading and rule checks
    std::function<void(int, std::vector<int>&, Offsets)> rec = [&](int si, std::vector<int>& choice, Offsets offs) {
        if (si == n_slices) {
            // flags were decided along the way (encoded in choices at crossings)
            ++count;
            return;
        }
        for (int ci = 0; ci < (int)per_slice[si].size(); ++ci) {
            const Pairing& cur = per_slice[si][ci];
            if (si == 0) {
                if (!cur.empty()) continue;
                choice.push_back(ci);
                rec(si + 1, choice, {});
                choice.pop_back();
                continue;
            }
            const Pairing& prev = per_slice[si - 1][choice[si - 1]];
            const Event& e = f.events[si - 1];
            const Slice& L = f.slices[si - 1];
            const Slice& R = f.slices[si];
            Rational xl = L.x_right;

            auto theta_L = [&](StrandId id) { return L.find(id)->theta_right; };
            auto get_off = [&](const Offsets& o, StrandId a, StrandId b) -> std::optional<Rational> {
                auto it = o.find({std::min(a, b), std::max(a, b)});
                if (it == o.end()) return std::nullopt;
                return a < b ? it->second : -it->second;
            };
            auto set_off = [&](Offsets& o, StrandId a, StrandId b, const Rational& v) {
                o[{std::min(a, b), std::max(a, b)}] = a < b ? v : -v;
            };

            // every flavor of agreement between prev and cur, with flag options
            std::vector<std::pair<Offsets, bool>> nexts;  // (offsets after, had flag true?)
            switch (e.kind) {
                case EventKind::none: {
                    if (cur != prev) break;
                    nexts.push_back({offs, false});
                    break;
                }
                case EventKind::birth: {
                    Pairing want = prev;
                    want[e.a] = e.b;
                    want[e.b] = e.a;
                    if (cur != want) break;
                    Offsets o2 = offs;
                    set_off(o2, e.a, e.b, Rational(0));
                    nexts.push_back({o2, false});
                    break;
                }
                case EventKind::death: {
                    if (prev.at(e.a) != e.b) break;
                    Pairing want = prev;
                    want.erase(e.a);
                    want.erase(e.b);
                    if (cur != want) break;
                    if (circular) {
                        auto o = get_off(offs, e.a, e.b);
                        Rational sep = theta_L(e.b) + *o - theta_L(e.a);
                        if (!sep.is_zero()) break;
                    }
                    Offsets o2 = offs;
                    o2.erase({std::min(e.a, e.b), std::max(e.a, e.b)});
                    nexts.push_back({o2, false});
                    break;
                }
                case EventKind::crossing: {
                    Rational k = theta_L(e.a) - theta_L(e.b);
                    if (prev.at(e.a) == e.b) {
                        if (cur != prev) break;
                        auto o = get_off(offs, e.a, e.b);
                        Rational sep = theta_L(e.b) + *o - theta_L(e.a);
                        if (sep.is_zero()) break;  // pinch in the cover
                        nexts.push_back({offs, false});
                        break;
                    }
                    StrandId u = prev.at(e.a), v = prev.at(e.b);
                    if (cur == prev) nexts.push_back({offs, false});
                    // switched variant
                    Pairing sw = prev;
                    sw[e.a] = v;
                    sw[v] = e.a;
                    sw[e.b] = u;
                    sw[u] = e.b;
                    if (cur == sw && mu.at(e.a) == mu.at(e.b)) {
                        Offsets o2 = offs;
                        Rational o_ua = *get_off(offs, u, e.a);
                        Rational o_vb = *get_off(offs, v, e.b);
                        o2.erase({std::min(e.a, u), std::max(e.a, u)});
                        o2.erase({std::min(e.b, v), std::max(e.b, v)});
                        set_off(o2, u, e.b, o_ua + k);
                        set_off(o2, v, e.a, o_vb - k);
                        // positivity on both sides
                        auto positive = [&](const Slice& S, const Pairing& pr, const Offsets& oo) {
                            Rational x = (S.x_left + S.x_right) / Rational(2);
                            StrandId pa = pr.at(e.a), pb = pr.at(e.b);
                            Rational ta = S.theta(e.a, x), tb = S.theta(e.b, x);
                            Rational tpa = S.theta(pa, x), tpb = S.theta(pb, x);
                            if (!circular) return !interleaved(ta, tpa, tb, tpb);
                            Rational oa = *get_off(oo, e.a, pa);
                            Rational ob = *get_off(oo, e.b, pb);
                            Rational enda = tpa + oa, endb = tpb + ob + k;
                            Rational base_a = ta, base_b = tb + k;
                            Rational lo1 = min(base_a, enda), hi1 = max(base_a, enda);
                            Rational lo2 = min(base_b, endb), hi2 = max(base_b, endb);
                            return linking_in_R(lo1, hi1, lo2, hi2) == 0;
                        };
                        if (positive(L, prev, offs) && positive(R, cur, o2)) nexts.push_back({o2, true});
                    }
                    break;
                }
            }
            for (auto& [o2, flagged] : nexts) {
                choice.push_back(ci);
                rec(si + 1, choice, o2);
                choice.pop_back();
            }
        }
    };
    std::vector<int> choice;
    rec(0, choice, {});
    return count;
}

}  // namespace cylf_oracle
