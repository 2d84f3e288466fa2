#include "cylf/rulings.hpp"

#include <algorithm>
#include <cassert>

#include "cylf/error.hpp"

namespace cylf {

bool SlicePairing::paired(StrandId a, StrandId b) const {
    auto it = partner.find(a);
    return it != partner.end() && it->second == b;
}

long long SlicePairing::offset_of(StrandId a, StrandId b) const {
    auto it = offset.find({std::min(a, b), std::max(a, b)});
    assert(it != offset.end());
    return it->second;
}

Rational SlicePairing::separation(StrandId x, const Rational& theta_x, const Rational& theta_p) const {
    StrandId p = partner.at(x);
    long long o = offset_of(x, p);
    Rational d = theta_p + Rational(x < p ? o : -o) - theta_x;
    return d;
}

bool SlicePairing::operator<(const SlicePairing& o) const {
    if (partner != o.partner) return partner < o.partner;
    return offset < o.offset;
}

bool RulingData::operator<(const RulingData& o) const {
    if (switches != o.switches) return switches < o.switches;
    return pairings < o.pairings;
}

namespace {

Rational slice_mid(const Slice& s) { return (s.x_left + s.x_right) / Rational(2); }

// circular-order interleaving of {a1,a2} and {b1,b2}, positions taken mod 1;
// all four must be distinct mod 1
bool interleaved_mod1(const Rational& a1, const Rational& a2, const Rational& b1, const Rational& b2) {
    Rational base = a1;
    auto arc_pos = [&](const Rational& t) { return (t - base).frac(); };  // in [0,1), 0 only for a1
    Rational end = arc_pos(a2);
    int inside = 0;
    if (arc_pos(b1) < end && !arc_pos(b1).is_zero()) ++inside;
    if (arc_pos(b2) < end && !arc_pos(b2).is_zero()) ++inside;
    return inside == 1;
}

// integer lift difference theta_a - theta_b at a crossing fiber
long long crossing_winding(const Slice& left, StrandId a, StrandId b) {
    Rational d = left.find(a)->theta_right - left.find(b)->theta_right;
    assert(d.is_integer());
    return d.num().to_ll();
}

struct Transition {
    SlicePairing next;
    bool switch_flag = false;
    bool has_flag = false;
};

// Shared local rules for both ruling kinds. Emits every legal state after the
// event; for crossings the order is pass first, then switch.
template <typename Emit>
void transitions(const FrontDiagram& f, const MaslovAssignment& mu, RulingKind kind, int ei,
                 const SlicePairing& st, Emit&& emit) {
    const Event& e = f.events[ei];
    const Slice& L = f.slices[ei];
    const Slice& R = f.slices[ei + 1];
    switch (e.kind) {
        case EventKind::none:
            emit(Transition{st, false, false});
            return;
        case EventKind::birth: {
            SlicePairing n = st;
            n.partner[e.a] = e.b;
            n.partner[e.b] = e.a;
            n.offset[{e.a, e.b}] = 0;
            emit(Transition{n, false, false});
            return;
        }
        case EventKind::death: {
            if (!st.paired(e.a, e.b)) return;
            if (kind == RulingKind::circular) {
                // marking must be trivial at the cusp: separation vanishes
                long long o = st.offset_of(e.a, e.b);
                Rational sep = L.find(e.b)->theta_right + Rational(o) - L.find(e.a)->theta_right;
                if (!sep.is_zero()) return;
            }
            SlicePairing n = st;
            n.partner.erase(e.a);
            n.partner.erase(e.b);
            n.offset.erase({e.a, e.b});
            emit(Transition{n, false, false});
            return;
        }
        case EventKind::crossing: {
            StrandId a = e.a, b = e.b;
            long long k = crossing_winding(L, a, b);
            if (st.paired(a, b)) {
                // the pair crosses itself; legal only when the pair does not
                // pinch in the cover (nontrivial marking at the crossing)
                long long o = st.offset_of(a, b);
                Rational sep = L.find(b)->theta_right + Rational(o) - L.find(a)->theta_right;
                if (sep.is_zero()) return;
                emit(Transition{st, false, true});
                return;
            }
            StrandId u = st.partner.at(a), v = st.partner.at(b);
            // pass-through
            emit(Transition{st, false, true});
            // switch: positive and Maslov required
            if (mu.at(a) != mu.at(b)) return;
            SlicePairing n = st;
            long long o_au = st.offset_of(a, u);
            long long o_bv = st.offset_of(b, v);
            // corner rule: sep of the through-strand is continuous, so the new
            // offsets absorb the winding k = theta_a - theta_b at the fiber
            auto signed_off = [](StrandId x, StrandId y, long long o_xy_min) {
                return x < y ? o_xy_min : -o_xy_min;  // offset from x's perspective
            };
            // sep_u: left partner a, right partner b: o_ub = o_ua + k (u-side view)
            long long o_ua = signed_off(u, a, o_au);
            long long o_ub = o_ua + k;
            long long o_va = signed_off(v, b, o_bv) - k;
            n.partner[a] = v;
            n.partner[v] = a;
            n.partner[b] = u;
            n.partner[u] = b;
            n.offset.erase({std::min(a, u), std::max(a, u)});
            n.offset.erase({std::min(b, v), std::max(b, v)});
            n.offset[{std::min(u, b), std::max(u, b)}] = u < b ? o_ub : -o_ub;
            n.offset[{std::min(v, a), std::max(v, a)}] = v < a ? o_va : -o_va;
            // positivity on both adjacent slices
            auto positive = [&](const Slice& S, const SlicePairing& pr) {
                StrandId pa = pr.partner.at(a), pb = pr.partner.at(b);
                Rational x = slice_mid(S);
                Rational ta = S.theta(a, x), tb = S.theta(b, x);
                Rational tpa = S.theta(pa, x), tpb = S.theta(pb, x);
                if (kind == RulingKind::disk) return !interleaved_mod1(ta, tpa, tb, tpb);
                // circular: covering linking of the marking paths anchored at
                // the crossing (b lifted adjacent to a by the winding k)
                Rational lb = tb + Rational(k);
                Rational sa = pr.separation(a, ta, tpa);
                Rational sb = pr.separation(b, tb, tpb);
                CoverInterval ia = CoverInterval::from_sweep(ta, sa);
                CoverInterval ib = CoverInterval::from_sweep(lb, sb);
                return cover_linking(ia, ib) == 0;
            };
            if (!positive(L, st)) return;
            if (!positive(R, n)) return;
            emit(Transition{n, true, true});
            return;
        }
    }
}

}  // namespace

template <typename R>
static std::vector<R> enumerate_rulings(const FrontDiagram& f, const MaslovAssignment& mu, RulingKind kind) {
    {
        auto rep = validate_front(f);
        if (!rep.ok()) throw Error("BadParams", "enumerate: invalid front: " + rep.summary());
    }
    std::vector<R> out;
    struct Node {
        int ei;
        SlicePairing st;
        std::vector<SlicePairing> trail;
        std::map<int, bool> flags;
    };
    std::vector<Node> stack;
    stack.push_back({0, {}, {{}}, {}});
    while (!stack.empty()) {
        Node cur = std::move(stack.back());
        stack.pop_back();
        if (cur.ei == (int)f.events.size()) {
            assert(cur.st.partner.empty());
            R r;
            r.pairings = cur.trail;
            r.switches = cur.flags;
            out.push_back(std::move(r));
            continue;
        }
        std::vector<Transition> ts;
        transitions(f, mu, kind, cur.ei, cur.st, [&](Transition t) { ts.push_back(std::move(t)); });
        // stack is LIFO: push in reverse to explore pass-before-switch
        for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
            Node nxt;
            nxt.ei = cur.ei + 1;
            nxt.st = it->next;
            nxt.trail = cur.trail;
            nxt.trail.push_back(it->next);
            nxt.flags = cur.flags;
            if (it->has_flag) nxt.flags[cur.ei] = it->switch_flag;
            stack.push_back(std::move(nxt));
        }
    }
    // duplicates cannot arise (flags separate branches); keep the guard cheap
    std::vector<R> dedup;
    for (auto& r : out) {
        bool seen = false;
        for (auto& d : dedup)
            if (d == r) seen = true;
        if (!seen) dedup.push_back(r);
    }
    return dedup;
}

std::vector<DiskRuling> enumerate_disk_rulings(const FrontDiagram& f, const MaslovAssignment& mu) {
    return enumerate_rulings<DiskRuling>(f, mu, RulingKind::disk);
}

std::vector<DiskRuling> enumerate_disk_rulings(const FrontDiagram& f) {
    return enumerate_disk_rulings(f, compute_maslov(f));
}

std::vector<CircularRuling> enumerate_circular_rulings(const FrontDiagram& f, const MaslovAssignment& mu) {
    return enumerate_rulings<CircularRuling>(f, mu, RulingKind::circular);
}

std::vector<CircularRuling> enumerate_circular_rulings(const FrontDiagram& f) {
    return enumerate_circular_rulings(f, compute_maslov(f));
}

bool ruling_is_valid(const FrontDiagram& f, const MaslovAssignment& mu, const RulingData& r, RulingKind kind) {
    if ((int)r.pairings.size() != (int)f.slices.size()) return false;
    if (!r.pairings.front().partner.empty()) return false;
    for (int ei = 0; ei < (int)f.events.size(); ++ei) {
        bool ok = false;
        const bool want_flag = f.events[ei].kind == EventKind::crossing;
        if (want_flag && !r.switches.count(ei)) return false;
        transitions(f, mu, kind, ei, r.pairings[ei], [&](const Transition& t) {
            if (!(t.next == r.pairings[ei + 1])) return;
            if (t.has_flag && want_flag && t.switch_flag != r.switches.at(ei)) return;
            ok = true;
        });
        if (!ok) return false;
    }
    return true;
}

CrossingClass classify_crossing(const FrontDiagram& f, const MaslovAssignment& mu, const RulingData& r,
                                RulingKind kind, int ei) {
    if (ei < 0 || ei >= (int)f.events.size() || f.events[ei].kind != EventKind::crossing)
        throw Error("NotACrossing", "event " + std::to_string(ei) + " is not a crossing");
    const Event& e = f.events[ei];
    CrossingClass c;
    c.maslov = mu.at(e.a) == mu.at(e.b);
    c.switching = r.switches.count(ei) ? r.switches.at(ei) : false;
    if (!c.switching) {
        c.positive = true;  // convention for non-switching and non-image crossings
        return c;
    }
    // recompute positivity for the recorded switch on both sides
    const Slice& L = f.slices[ei];
    const Slice& R = f.slices[ei + 1];
    long long k = [&] {
        Rational d = L.find(e.a)->theta_right - L.find(e.b)->theta_right;
        return d.num().to_ll();
    }();
    auto side_positive = [&](const Slice& S, const SlicePairing& pr) {
        StrandId pa = pr.partner.at(e.a), pb = pr.partner.at(e.b);
        Rational x = slice_mid(S);
        Rational ta = S.theta(e.a, x), tb = S.theta(e.b, x);
        Rational tpa = S.theta(pa, x), tpb = S.theta(pb, x);
        if (kind == RulingKind::disk) return !interleaved_mod1(ta, tpa, tb, tpb);
        Rational lb = tb + Rational(k);
        CoverInterval ia = CoverInterval::from_sweep(ta, pr.separation(e.a, ta, tpa));
        CoverInterval ib = CoverInterval::from_sweep(lb, pr.separation(e.b, tb, tpb));
        return cover_linking(ia, ib) == 0;
    };
    c.positive = side_positive(L, r.pairings[ei]) && side_positive(R, r.pairings[ei + 1]);
    return c;
}

std::vector<int> exchange_crossings(const FrontDiagram& f, const RulingData& r) {
    std::vector<int> out;
    for (int ei = 0; ei < (int)f.events.size(); ++ei) {
        const Event& e = f.events[ei];
        if (e.kind != EventKind::crossing) continue;
        const SlicePairing& pr = r.pairings[ei];
        if (pr.paired(e.a, e.b)) out.push_back(ei);
    }
    return out;
}

Rational chi(const FrontDiagram& f, const RulingData& r) {
    long long sw = 0;
    for (auto& [ei, on] : r.switches)
        if (on) ++sw;
    return Rational(sw) - Rational(count_cusps(f), 2);
}

std::vector<Eye> eyes(const FrontDiagram& f, const DiskRuling& r) {
    std::vector<Eye> out;
    std::map<std::pair<StrandId, StrandId>, int> live;  // pair -> eye index
    for (int ei = 0; ei <= (int)f.events.size(); ++ei) {
        // record segments for slice ei
        const SlicePairing& pr = r.pairings[ei];
        for (auto& [x, p] : pr.partner) {
            if (x > p) continue;
            auto key = std::make_pair(x, p);
            assert(live.count(key));
            out[live[key]].segments.push_back({ei, x, p, pr.offset_of(x, p)});
        }
        if (ei == (int)f.events.size()) break;
        const Event& e = f.events[ei];
        if (e.kind == EventKind::birth) {
            Eye eye;
            eye.birth_event = ei;
            out.push_back(eye);
            live[{e.a, e.b}] = (int)out.size() - 1;
        } else if (e.kind == EventKind::death) {
            auto key = std::make_pair(e.a, e.b);
            out[live[key]].death_event = ei;
            live.erase(key);
        } else if (e.kind == EventKind::crossing && r.switches.at(ei)) {
            // eyes follow their non-crossing partner through a switch
            const SlicePairing& before = r.pairings[ei];
            const SlicePairing& after = r.pairings[ei + 1];
            StrandId u = before.partner.at(e.a), v = before.partner.at(e.b);
            if (u != e.b) {
                auto old_au = std::make_pair(std::min(e.a, u), std::max(e.a, u));
                auto old_bv = std::make_pair(std::min(e.b, v), std::max(e.b, v));
                auto new_bu = std::make_pair(std::min(e.b, u), std::max(e.b, u));
                auto new_av = std::make_pair(std::min(e.a, v), std::max(e.a, v));
                int eau = live[old_au], ebv = live[old_bv];
                live.erase(old_au);
                live.erase(old_bv);
                live[new_bu] = eau;
                live[new_av] = ebv;
                (void)after;
            }
        }
    }
    for (auto& e : out) assert(e.birth_event >= 0 && e.death_event >= 0);
    return out;
}

namespace {

Rational pair_length(RulingKind kind, const Rational& sep) {
    if (kind == RulingKind::circular) return sep.abs();
    Rational fr = sep.frac();
    return min(fr, Rational(1) - fr);
}

}  // namespace

std::vector<Rational> length_spectrum(const FrontDiagram& f, const RulingData& r, RulingKind kind,
                                      const Rational& x) {
    std::vector<Rational> out;
    for (int si = 0; si < (int)f.slices.size(); ++si) {
        const Slice& s = f.slices[si];
        if (x < s.x_left || x > s.x_right) continue;
        const SlicePairing& pr = r.pairings[si];
        for (auto& [a, p] : pr.partner) {
            if (a > p) continue;
            Rational sep = pr.separation(a, s.theta(a, x), s.theta(p, x));
            out.push_back(pair_length(kind, sep));
        }
        break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational max_length(const FrontDiagram& f, const RulingData& r, RulingKind kind) {
    Rational best(0);
    for (int si = 0; si < (int)f.slices.size(); ++si) {
        const Slice& s = f.slices[si];
        const SlicePairing& pr = r.pairings[si];
        for (auto& [a, p] : pr.partner) {
            if (a > p) continue;
            Rational sl = pr.separation(a, s.find(a)->theta_left, s.find(p)->theta_left);
            Rational sr = pr.separation(a, s.find(a)->theta_right, s.find(p)->theta_right);
            if (kind == RulingKind::circular) {
                best = max(best, max(sl.abs(), sr.abs()));
            } else {
                best = max(best, max(pair_length(kind, sl), pair_length(kind, sr)));
                // the circular distance tops out at 1/2 wherever the
                // separation passes through a half-integer
                Rational two(2);
                Rational dl = sl * two, dr = sr * two;
                auto odd_between = [&](const Rational& u, const Rational& v) {
                    Rational lo = u < v ? u : v, hi = u < v ? v : u;
                    for (BigInt m = lo.floor() + BigInt(1); Rational(m, BigInt(1)) < hi; m = m + BigInt(1)) {
                        BigInt q, rr;
                        BigInt::divmod(m, BigInt(2), q, rr);
                        if (!rr.is_zero()) return true;
                    }
                    return false;
                };
                if (odd_between(dl, dr)) best = max(best, Rational(1, 2));
            }
        }
    }
    return best;
}

bool is_eps_short(const FrontDiagram& f, const RulingData& r, RulingKind kind, const Rational& eps) {
    if (!(eps > Rational(0))) throw Error("BadParams", "eps must be positive");
    return max_length(f, r, kind) < Rational(1, 2) - eps;
}

CircularRuling expand_short(const FrontDiagram& f, const MaslovAssignment& mu, const DiskRuling& r) {
    if (!ruling_is_valid(f, mu, r, RulingKind::disk)) throw Error("NotNormal", "input is not a normal disk ruling");
    // scan every eye for attained separation 1/2
    std::vector<Eye> es = eyes(f, r);
    for (int eye_i = 0; eye_i < (int)es.size(); ++eye_i) {
        for (const auto& seg : es[eye_i].segments) {
            const Slice& s = f.slices[seg.slice];
            Rational sl = s.find(seg.b)->theta_left + Rational(seg.offset) - s.find(seg.a)->theta_left;
            Rational sr = s.find(seg.b)->theta_right + Rational(seg.offset) - s.find(seg.a)->theta_right;
            auto report = [&](const Rational& fiber) {
                throw Error("NotShort", "eye " + std::to_string(eye_i) + " reaches separation 1/2 at fiber " +
                                            fiber.str());
            };
            // separation passes a half-integer inside or at an edge of the slice
            Rational two(2);
            Rational dl = sl * two, dr = sr * two;
            auto is_odd_int = [](const Rational& v) {
                if (!v.is_integer()) return false;
                BigInt q, rr;
                BigInt::divmod(v.num(), BigInt(2), q, rr);
                return !rr.is_zero();
            };
            if (is_odd_int(dl)) report(s.x_left);
            if (is_odd_int(dr)) report(s.x_right);
            if (dl != dr) {
                Rational lo = dl < dr ? dl : dr, hi = dl < dr ? dr : dl;
                for (BigInt m = lo.floor() + BigInt(1); Rational(m, BigInt(1)) < hi; m = m + BigInt(1)) {
                    BigInt q, rr;
                    BigInt::divmod(m, BigInt(2), q, rr);
                    if (rr.is_zero()) continue;
                    Rational t = (Rational(m, BigInt(1)) - dl) / (dr - dl);
                    report(s.x_left + t * (s.x_right - s.x_left));
                }
            }
        }
    }
    // all eyes stay strictly inside the antipode: take the short marking
    CircularRuling c;
    c.switches = r.switches;
    c.pairings.resize(r.pairings.size());
    for (int si = 0; si < (int)f.slices.size(); ++si) {
        const Slice& s = f.slices[si];
        c.pairings[si].partner = r.pairings[si].partner;
        for (auto& [key, o] : r.pairings[si].offset) {
            auto [a, b] = key;
            // unique integer with |theta_b + o' - theta_a| < 1/2 across the slice
            Rational base = s.find(a)->theta_left - s.find(b)->theta_left;
            BigInt fl = base.floor();
            Rational frac = base - Rational(fl, BigInt(1));
            long long op = frac < Rational(1, 2) ? fl.to_ll() : fl.to_ll() + 1;
            c.pairings[si].offset[key] = op;
            (void)o;
        }
    }
    if (!ruling_is_valid(f, mu, c, RulingKind::circular))
        throw Error("NotShort", "short marking failed admissibility");
    return c;
}

// ---------------------------------------------------------------------------
// classical planar count after cutting the cylinder

namespace {

struct PlanarState {
    std::vector<StrandId> by_height;     // strand ids bottom to top
    std::vector<int> partner_height;     // involution on height indices
};

long long planar_count_rec(const FrontDiagram& f, const MaslovAssignment& mu, const Rational& cut, int ei,
                           PlanarState st) {
    if (ei == (int)f.events.size()) return st.by_height.empty() ? 1 : 0;
    const Event& e = f.events[ei];
    const Slice& R = f.slices[ei + 1];
    auto height_of = [&](const Slice& s, StrandId id) {
        // rank of the strand by angle in the cut chart, at the slice midpoint
        Rational x = slice_mid(s);
        Rational me = (s.theta(id, x) - cut).frac();
        int h = 0;
        for (const auto& a : s.arcs)
            if (a.id != id && (a.theta_at(s.x_left, s.x_right, x) - cut).frac() < me) ++h;
        return h;
    };
    switch (e.kind) {
        case EventKind::none:
            return planar_count_rec(f, mu, cut, ei + 1, std::move(st));
        case EventKind::birth: {
            int h = std::min(height_of(R, e.a), height_of(R, e.b));
            StrandId lower = height_of(R, e.a) < height_of(R, e.b) ? e.a : e.b;
            StrandId upper = lower == e.a ? e.b : e.a;
            PlanarState n;
            n.by_height.reserve(st.by_height.size() + 2);
            n.partner_height.resize(st.by_height.size() + 2);
            for (int i = 0; i < h; ++i) n.by_height.push_back(st.by_height[i]);
            n.by_height.push_back(lower);
            n.by_height.push_back(upper);
            for (int i = h; i < (int)st.by_height.size(); ++i) n.by_height.push_back(st.by_height[i]);
            auto lift = [&](int old) { return old >= h ? old + 2 : old; };
            for (int i = 0; i < (int)st.by_height.size(); ++i) n.partner_height[lift(i)] = lift(st.partner_height[i]);
            n.partner_height[h] = h + 1;
            n.partner_height[h + 1] = h;
            return planar_count_rec(f, mu, cut, ei + 1, std::move(n));
        }
        case EventKind::death: {
            int ha = -1, hb = -1;
            for (int i = 0; i < (int)st.by_height.size(); ++i) {
                if (st.by_height[i] == e.a) ha = i;
                if (st.by_height[i] == e.b) hb = i;
            }
            int h = std::min(ha, hb);
            if (std::max(ha, hb) != h + 1) return 0;           // must be adjacent
            if (st.partner_height[h] != h + 1) return 0;       // must be paired
            PlanarState n;
            n.partner_height.resize(st.by_height.size() - 2);
            auto drop = [&](int old) { return old > h + 1 ? old - 2 : old; };
            for (int i = 0; i < (int)st.by_height.size(); ++i) {
                if (i == h || i == h + 1) continue;
                n.by_height.push_back(st.by_height[i]);
            }
            for (int i = 0; i < (int)st.by_height.size(); ++i) {
                if (i == h || i == h + 1) continue;
                n.partner_height[drop(i)] = drop(st.partner_height[i]);
            }
            return planar_count_rec(f, mu, cut, ei + 1, std::move(n));
        }
        case EventKind::crossing: {
            int ha = -1, hb = -1;
            for (int i = 0; i < (int)st.by_height.size(); ++i) {
                if (st.by_height[i] == e.a) ha = i;
                if (st.by_height[i] == e.b) hb = i;
            }
            int h = std::min(ha, hb);
            if (std::max(ha, hb) != h + 1) return 0;
            long long total = 0;
            if (st.partner_height[h] == h + 1) {
                // paired strands crossing each other never happens in the cut
                // chart (their planar bar would pinch); no legal continuation
                return 0;
            }
            // pass: strands swap heights, pairing follows the strands
            {
                PlanarState n = st;
                std::swap(n.by_height[h], n.by_height[h + 1]);
                int pa = st.partner_height[h], pb = st.partner_height[h + 1];
                n.partner_height[h] = pb;
                n.partner_height[h + 1] = pa;
                n.partner_height[pa] = h + 1;
                n.partner_height[pb] = h;
                total += planar_count_rec(f, mu, cut, ei + 1, std::move(n));
            }
            // switch: heights keep their partners; Maslov + aligned companions
            if (mu.at(e.a) == mu.at(e.b)) {
                int pa = st.partner_height[h], pb = st.partner_height[h + 1];
                // companions non-interleaved: intervals {h,pa} and {h+1,pb}
                auto interleave = [&](int a1, int a2, int b1, int b2) {
                    int lo = std::min(a1, a2), hi = std::max(a1, a2);
                    bool in1 = b1 > lo && b1 < hi, in2 = b2 > lo && b2 < hi;
                    return in1 != in2;
                };
                if (!interleave(h, pa, h + 1, pb)) {
                    PlanarState n = st;
                    std::swap(n.by_height[h], n.by_height[h + 1]);
                    total += planar_count_rec(f, mu, cut, ei + 1, std::move(n));
                }
            }
            return total;
        }
    }
    return 0;
}

}  // namespace

long long planar_ruling_count(const FrontDiagram& f, const Rational& theta0) {
    // the cut must miss every arc over the support
    for (int si = 0; si < (int)f.slices.size(); ++si) {
        for (const auto& a : f.slices[si].arcs) {
            Rational dl = a.theta_left - theta0, dr = a.theta_right - theta0;
            if (dl.is_integer() || dr.is_integer() || integer_strictly_between(dl, dr))
                throw Error("CutHitsFront", "cut angle meets strand " + std::to_string(a.id) + " in slice " +
                                                std::to_string(si));
        }
    }
    MaslovAssignment mu = compute_maslov(f);
    return planar_count_rec(f, mu, theta0, 0, {});
}

}  // namespace cylf
