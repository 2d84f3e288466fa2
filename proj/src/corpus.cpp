#include "cylf/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstdio>
#include <map>
#include <set>

#include "cylf/error.hpp"

namespace cylf {

namespace {

Rational rat(long long n, long long d = 1) { return Rational(n, d); }

struct SplitMix64 {
    uint64_t s;
    uint64_t next() {
        uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t m) { return m ? next() % m : 0; }
};

// assembles a front from per-strand breakpoint tracks and an event list
FrontDiagram from_tracks(const std::map<StrandId, std::vector<std::pair<Rational, Rational>>>& tracks,
                         const std::vector<std::pair<Rational, Event>>& events, const Rational& x_lo,
                         const Rational& x_hi) {
    std::vector<Rational> bounds{x_lo};
    for (auto& [x, e] : events) bounds.push_back(x);
    bounds.push_back(x_hi);
    auto value = [&](StrandId id, const Rational& x) -> Rational {
        const auto& t = tracks.at(id);
        for (size_t i = 0; i + 1 < t.size(); ++i)
            if (t[i].first <= x && x <= t[i + 1].first) {
                if (x == t[i].first) return t[i].second;
                Rational u = (x - t[i].first) / (t[i + 1].first - t[i].first);
                return t[i].second + u * (t[i + 1].second - t[i].second);
            }
        return t.back().second;
    };
    FrontDiagram f;
    for (size_t i = 0; i + 1 < bounds.size(); ++i) {
        Slice s;
        s.x_left = bounds[i];
        s.x_right = bounds[i + 1];
        for (auto& [id, t] : tracks) {
            if (t.front().first <= s.x_left && s.x_right <= t.back().first)
                s.arcs.push_back({id, value(id, s.x_left), value(id, s.x_right)});
        }
        std::sort(s.arcs.begin(), s.arcs.end(), [](const StrandArc& a, const StrandArc& b) { return a.id < b.id; });
        f.slices.push_back(s);
    }
    for (auto& [x, e] : events) f.events.push_back(e);
    return f;
}

void require_valid(const FrontDiagram& f, const char* name) {
    auto rep = validate_front(f);
    if (!rep.ok()) throw Error("BadParams", std::string(name) + ": " + rep.summary());
}

}  // namespace

FrontDiagram nested_eyes() {
    std::map<StrandId, std::vector<std::pair<Rational, Rational>>> tracks;
    tracks[0] = {{rat(1), rat(0)}, {rat(12), rat(0)}};
    tracks[1] = {{rat(1), rat(0)}, {rat(4), rat(3, 10)}, {rat(9), rat(3, 10)}, {rat(12), rat(0)}};
    tracks[2] = {{rat(3), rat(3, 40)}, {rat(11), rat(3, 40)}};
    tracks[3] = {{rat(3), rat(3, 40)},
                 {rat(24, 5), rat(3, 10)},
                 {rat(5), rat(13, 40)},
                 {rat(7), rat(13, 40)},
                 {rat(15, 2), rat(3, 10)},
                 {rat(9), rat(9, 40)},
                 {rat(11), rat(3, 40)}};
    std::vector<std::pair<Rational, Event>> events = {
        {rat(1), {EventKind::birth, 0, 1}},
        {rat(3), {EventKind::birth, 2, 3}},
        {rat(4), {EventKind::none, -1, -1}},
        {rat(24, 5), {EventKind::crossing, 1, 3}},
        {rat(5), {EventKind::none, -1, -1}},
        {rat(7), {EventKind::none, -1, -1}},
        {rat(15, 2), {EventKind::crossing, 1, 3}},
        {rat(9), {EventKind::none, -1, -1}},
        {rat(11), {EventKind::death, 2, 3}},
        {rat(12), {EventKind::death, 0, 1}},
    };
    FrontDiagram f = from_tracks(tracks, events, rat(0), rat(13));
    require_valid(f, "nested_eyes");
    return f;
}

FrontDiagram triple_braid() {
    std::map<StrandId, std::vector<std::pair<Rational, Rational>>> tracks;
    tracks[0] = {{rat(1), rat(0)}, {rat(18), rat(0)}};
    tracks[1] = {{rat(2), rat(1, 20)}, {rat(541, 41), rat(1, 20)}};
    tracks[2] = {{rat(3), rat(1, 10)}, {rat(43, 4), rat(1, 10)}};
    tracks[3] = {{rat(1), rat(0)}, {rat(3), rat(1, 4)}, {rat(8), rat(1, 4)}, {rat(18), rat(0)}};
    tracks[4] = {{rat(2), rat(1, 20)},
                 {rat(4), rat(1, 5)},
                 {rat(29, 5), rat(1, 5)},
                 {rat(277, 41), rat(213, 820)},
                 {rat(9), rat(213, 820)},
                 {rat(541, 41), rat(1, 20)}};
    tracks[5] = {{rat(3), rat(1, 10)},
                 {rat(6), rat(27, 100)},
                 {rat(13, 2), rat(27, 100)},
                 {rat(43, 4), rat(1, 10)}};
    std::vector<std::pair<Rational, Event>> events = {
        {rat(1), {EventKind::birth, 0, 3}},
        {rat(2), {EventKind::birth, 1, 4}},
        {rat(3), {EventKind::birth, 2, 5}},
        {rat(4), {EventKind::none, -1, -1}},
        {rat(81, 17), {EventKind::crossing, 4, 5}},
        {rat(96, 17), {EventKind::crossing, 3, 5}},
        {rat(29, 5), {EventKind::none, -1, -1}},
        {rat(6), {EventKind::none, -1, -1}},
        {rat(13, 2), {EventKind::none, -1, -1}},
        {rat(33, 5), {EventKind::crossing, 3, 4}},
        {rat(277, 41), {EventKind::crossing, 4, 5}},
        {rat(7), {EventKind::crossing, 3, 5}},
        {rat(8), {EventKind::none, -1, -1}},
        {rat(9), {EventKind::none, -1, -1}},
        {rat(426, 41), {EventKind::crossing, 3, 4}},
        {rat(43, 4), {EventKind::death, 2, 5}},
        {rat(541, 41), {EventKind::death, 1, 4}},
        {rat(18), {EventKind::death, 0, 3}},
    };
    FrontDiagram f = from_tracks(tracks, events, rat(0), rat(19));
    require_valid(f, "triple_braid");
    return f;
}

FrontDiagram leapfrog() {
    // positions in thousandths of a revolution; boundaries at 3j/44
    auto q = [](long long v) { return Rational(v, 1000); };
    auto x = [](int j) { return Rational(3 * j, 44); };
    std::map<StrandId, std::vector<std::pair<Rational, Rational>>> tracks;
    tracks[0] = {{x(1), q(10)}, {x(4), q(10)}, {x(5), q(20)}, {x(6), q(22)}, {x(9), q(22)}, {x(10), q(40)}};
    tracks[1] = {{x(1), q(10)}, {x(2), q(40)}, {x(10), q(40)}};
    tracks[2] = {{x(3), q(20)}, {x(6), q(20)}, {x(7), q(22)}, {x(8), q(24)}, {x(9), q(30)}};
    tracks[3] = {{x(3), q(20)}, {x(4), q(30)}, {x(9), q(30)}};
    std::vector<std::pair<Rational, Event>> events = {
        {x(1), {EventKind::birth, 0, 1}},
        {x(2), {EventKind::none, -1, -1}},
        {x(3), {EventKind::birth, 2, 3}},
        {x(4), {EventKind::none, -1, -1}},
        {x(5), {EventKind::crossing, 0, 2}},
        {x(6), {EventKind::none, -1, -1}},
        {x(7), {EventKind::crossing, 0, 2}},
        {x(8), {EventKind::none, -1, -1}},
        {x(9), {EventKind::death, 2, 3}},
        {x(10), {EventKind::death, 0, 1}},
    };
    FrontDiagram f = from_tracks(tracks, events, Rational(0), Rational(3, 4));
    require_valid(f, "leapfrog");
    return f;
}

FrontDiagram wound_braid() {
    auto q = [](long long n, long long d) { return Rational(n, d); };
    std::map<StrandId, std::vector<std::pair<Rational, Rational>>> tracks;
    tracks[0] = {{rat(1), rat(0)}, {rat(19), rat(0)}};
    tracks[1] = {{rat(1), rat(0)}, {rat(4), q(9, 8)}, {rat(8), q(27, 20)}, {rat(19), rat(2)}};
    tracks[2] = {{rat(2), q(31, 100)}, {rat(16), q(31, 100)}};
    tracks[3] = {{rat(2), q(31, 100)}, {rat(3), q(1, 3)}, {rat(14), q(1, 3)}, {rat(16), q(31, 100)}};
    tracks[4] = {{rat(3), q(63, 200)}, {rat(12), q(63, 200)}};
    tracks[5] = {{rat(3), q(63, 200)},
                 {rat(4), q(8, 25)},
                 {rat(8), q(8, 25)},
                 {rat(9), q(17, 50)},
                 {rat(12), q(63, 200)}};
    std::vector<std::pair<Rational, Event>> events = {
        {rat(1), {EventKind::birth, 0, 1}},
        {rat(2), {EventKind::birth, 2, 3}},
        {rat(3), {EventKind::birth, 4, 5}},
        {q(11, 3), {EventKind::crossing, 0, 1}},
        {rat(4), {EventKind::none, -1, -1}},
        {q(328, 45), {EventKind::crossing, 1, 2}},
        {q(332, 45), {EventKind::crossing, 1, 4}},
        {q(112, 15), {EventKind::crossing, 1, 5}},
        {q(208, 27), {EventKind::crossing, 1, 3}},
        {rat(8), {EventKind::none, -1, -1}},
        {q(26, 3), {EventKind::crossing, 3, 5}},
        {rat(9), {EventKind::none, -1, -1}},
        {q(49, 5), {EventKind::crossing, 3, 5}},
        {rat(12), {EventKind::death, 4, 5}},
        {rat(14), {EventKind::none, -1, -1}},
        {rat(16), {EventKind::death, 2, 3}},
        {rat(19), {EventKind::death, 0, 1}},
    };
    FrontDiagram f = from_tracks(tracks, events, rat(0), rat(20));
    require_valid(f, "wound_braid");
    return f;
}

FrontDiagram gen_small_front(uint64_t seed, int max_events) {
    // all strands live in the angular band (0, 1/64); every event moves one
    // strand upward through part of the band, so slopes stay in [0, 3/4]
    for (int attempt = 0; attempt < 64; ++attempt) {
        SplitMix64 rng{seed * 2654435761ULL + (uint64_t)attempt * 0x9e37ULL + 1};
        int ev_budget = 4 + (int)rng.below((uint64_t)std::max(1, max_events - 3));
        const Rational band_lo(1, 256), band_hi(1, 64);
        struct Live {
            StrandId id;
            Rational pos;
        };
        std::vector<Live> live;  // sorted by pos
        StrandId next_id = 0;
        int crossings = 0;
        struct Step {
            Event e;
            StrandId mover = -1;
            Rational target;     // mover's position at the event fiber
            Rational overshoot;  // extra rise in the following column
        };
        std::vector<Step> steps;
        StrandId last_riser = -1;  // strand still finishing its overshoot
        StrandId revenge_a = -1, revenge_b = -1;  // recently crossed pair
        int revenge_cooldown = 0;
        bool ok = true;
        while ((int)steps.size() < ev_budget || !live.empty()) {
            int remaining = ev_budget - (int)steps.size();
            if (remaining <= 0 && !live.empty()) {
                ok = false;  // budget exhausted before closing
                break;
            }
            int need_to_close = (int)live.size() / 2;
            bool must_close = remaining <= need_to_close + 2;
            int kind;
            if (live.empty())
                kind = 0;  // birth
            else if (must_close)
                kind = 1;  // death
            else {
                int roll = (int)rng.below(5);
                kind = roll == 0 ? 0 : roll == 1 ? 1 : 2;  // crossings dominate
            }
            if (kind == 2 && ((int)live.size() < 2 || crossings >= 8)) kind = 0;
            if (kind == 1 && live.size() < 2) kind = 0;
            if (kind == 0 && (int)live.size() >= 6) kind = 1;
            if (kind == 0) {
                // birth in a random gap; nesting directly above an eye's lower
                // strand sets up Maslov-compatible crossings, so prefer those
                std::vector<std::pair<Rational, Rational>> gaps;
                std::vector<int> even_floor;
                Rational lo = band_lo;
                for (auto& l : live) {
                    gaps.push_back({lo, l.pos});
                    lo = l.pos;
                }
                gaps.push_back({lo, band_hi});
                for (int g = 1; g < (int)gaps.size(); ++g)
                    if (live[g - 1].id % 2 == 0) even_floor.push_back(g);
                int gi;
                if (!even_floor.empty() && rng.below(2) == 0)
                    gi = even_floor[rng.below(even_floor.size())];
                else
                    gi = (int)rng.below(gaps.size());
                if (!(gaps[gi].first < gaps[gi].second)) {
                    ok = false;
                    break;
                }
                Rational mid = (gaps[gi].first + gaps[gi].second) / rat(2);
                Rational c = Rational::simplest_between(gaps[gi].first, min(mid, gaps[gi].second));
                Step st;
                st.e = {EventKind::birth, next_id, next_id + 1};
                st.mover = next_id + 1;  // upper newborn rises afterwards
                st.target = c;
                Rational room = (gaps[gi].second - c) / rat(4);
                st.overshoot = Rational::simplest_between(rat(0), room);
                steps.push_back(st);
                live.push_back({next_id, c});
                live.push_back({next_id + 1, c + st.overshoot});
                std::sort(live.begin(), live.end(), [](const Live& a, const Live& b) { return a.pos < b.pos; });
                last_riser = st.overshoot.is_zero() ? -1 : st.mover;
                next_id += 2;
            } else {
                // both strands of any pair used must be at rest (a strand
                // mid-overshoot would drag the event along with it)
                auto at_rest = [&](int cand) {
                    return live[cand].id != last_riser && live[cand + 1].id != last_riser;
                };
                auto partners = [&](int cand) {
                    return (live[cand].id ^ 1) == live[cand + 1].id;  // birth pairs are (2k, 2k+1)
                };
                int j = -1;
                if (kind == 1) {
                    // deaths only close birth partners; otherwise no pairing
                    // survives and the front carries no rulings at all
                    std::vector<int> cands;
                    for (int cand = 0; cand + 1 < (int)live.size(); ++cand)
                        if (partners(cand) && at_rest(cand)) cands.push_back(cand);
                    if (!cands.empty()) {
                        j = cands[rng.below(cands.size())];
                    } else if (must_close) {
                        // untangle: cross a strand upward toward its partner
                        for (int cand = 0; cand + 1 < (int)live.size() && j < 0; ++cand) {
                            if (!at_rest(cand) || partners(cand)) continue;
                            for (int k = cand + 2; k < (int)live.size(); ++k)
                                if (live[k].id == (live[cand].id ^ 1)) j = cand;
                        }
                        if (j < 0) {
                            ok = false;
                            break;
                        }
                        kind = 2;
                    } else {
                        kind = 2;  // nothing closable yet; cross instead
                    }
                }
                if (kind == 2 && j < 0) {
                    // a recently crossed pair likes to cross back: this is
                    // what produces switch-capable double crossings
                    if (revenge_a >= 0 && revenge_cooldown == 0 && rng.below(3) != 0) {
                        for (int cand = 0; cand + 1 < (int)live.size(); ++cand) {
                            if (((live[cand].id == revenge_a && live[cand + 1].id == revenge_b) ||
                                 (live[cand].id == revenge_b && live[cand + 1].id == revenge_a)) &&
                                at_rest(cand))
                                j = cand;
                        }
                    }
                    for (int tries = 0; tries < 8 && j < 0; ++tries) {
                        int cand = (int)rng.below(live.size() - 1);
                        if (at_rest(cand) && !partners(cand)) j = cand;  // partner crossings pinch
                    }
                    if (j < 0) {
                        ok = false;
                        break;
                    }
                }
                if (crossings >= 8 && kind == 2) {
                    ok = false;
                    break;
                }
                Live lowr = live[j], uppr = live[j + 1];
                Step st;
                st.mover = lowr.id;
                st.target = uppr.pos;
                if (kind == 1) {
                    st.e = {EventKind::death, std::min(lowr.id, uppr.id), std::max(lowr.id, uppr.id)};
                    st.overshoot = rat(0);
                    steps.push_back(st);
                    live.erase(live.begin() + j, live.begin() + j + 2);
                    last_riser = -1;
                    if (lowr.id == revenge_a || lowr.id == revenge_b || uppr.id == revenge_a ||
                        uppr.id == revenge_b)
                        revenge_a = revenge_b = -1;
                } else {
                    st.e = {EventKind::crossing, std::min(lowr.id, uppr.id), std::max(lowr.id, uppr.id)};
                    Rational above = j + 2 < (int)live.size() ? live[j + 2].pos : band_hi;
                    if (!(uppr.pos < above)) {
                        ok = false;
                        break;
                    }
                    st.overshoot = Rational::simplest_between(rat(0), (above - uppr.pos) / rat(4));
                    steps.push_back(st);
                    live[j].pos = uppr.pos + st.overshoot;
                    std::swap(live[j], live[j + 1]);
                    last_riser = st.mover;
                    revenge_a = lowr.id;
                    revenge_b = uppr.id;
                    revenge_cooldown = 1;
                    ++crossings;
                }
            }
            if (revenge_cooldown > 0) --revenge_cooldown;
            if ((int)steps.size() > ev_budget + 8) {
                ok = false;
                break;
            }
        }
        if (!ok || steps.empty()) continue;

        // lay out: event i at fiber (i+1) * W / (E+1), W = 3/4; each mover
        // holds its position until the column before its event so slopes stay
        // small and travel is confined
        int E = (int)steps.size();
        Rational W(3, 4);
        auto fiber = [&](int i) { return W * Rational(i + 1) / Rational(E + 1); };
        std::map<StrandId, std::vector<std::pair<Rational, Rational>>> tracks;
        std::map<StrandId, Rational> cur;
        auto hold_until = [&](StrandId id, const Rational& x) {
            auto& t = tracks[id];
            if (!t.empty() && t.back().first < x) t.push_back({x, cur[id]});
        };
        for (int i = 0; i < E; ++i) {
            const Step& st = steps[i];
            Rational x = fiber(i);
            Rational x_prev = i > 0 ? fiber(i - 1) : Rational(0);
            if (st.e.kind == EventKind::birth) {
                tracks[st.e.a].push_back({x, st.target});
                tracks[st.e.b].push_back({x, st.target});
                cur[st.e.a] = st.target;
                cur[st.e.b] = st.target;
                if (!st.overshoot.is_zero()) {
                    tracks[st.mover].push_back({fiber(i + 1 < E ? i + 1 : i) + (i + 1 < E ? Rational(0) : (W - x) / Rational(2)), st.target + st.overshoot});
                    cur[st.mover] = st.target + st.overshoot;
                }
            } else {
                StrandId other = st.e.a == st.mover ? st.e.b : st.e.a;
                hold_until(st.mover, x_prev);
                hold_until(other, x);
                tracks[st.mover].push_back({x, st.target});
                cur[st.mover] = st.target;
                if (st.e.kind == EventKind::death) {
                    cur.erase(st.mover);
                    cur.erase(other);
                } else if (!st.overshoot.is_zero()) {
                    Rational xn = i + 1 < E ? fiber(i + 1) : x + (W - x) / Rational(2);
                    tracks[st.mover].push_back({xn, st.target + st.overshoot});
                    cur[st.mover] = st.target + st.overshoot;
                }
            }
        }
        std::vector<std::pair<Rational, Event>> events;
        for (int i = 0; i < E; ++i) events.push_back({fiber(i), steps[i].e});
        FrontDiagram f;
        try {
            f = from_tracks(tracks, events, rat(0), W);
        } catch (...) {
            continue;
        }
        auto rep = validate_front(f);
        if (rep.ok()) return f;
        if (std::getenv("CYLF_GEN_DEBUG")) { std::fprintf(stderr, "attempt %d: %s%s", attempt, rep.summary().c_str(), serialize_front(f).c_str()); }
    }
    throw Error("BadParams", "gen_small_front: no valid front for this seed");
}

FrontDiagram overlay(const FrontDiagram& f1, const FrontDiagram& f2, const Rational& angle_offset) {
    FrontDiagram a = normalize_front(f1);
    FrontDiagram b = normalize_front(f2);
    // rescale both to (0,1) with staggered boundaries
    auto rescale = [](FrontDiagram& f, const Rational& jitter) {
        int n = (int)f.slices.size();
        for (int i = 0; i < n; ++i) {
            Rational lo = (Rational(i) + (i ? jitter : Rational(0))) / Rational(n);
            Rational hi = (Rational(i + 1) + (i + 1 < n ? jitter : Rational(0))) / Rational(n);
            f.slices[i].x_left = lo;
            f.slices[i].x_right = hi;
        }
    };
    rescale(a, Rational(0));
    rescale(b, Rational(1, 3));
    StrandId shift = a.max_strand_id() + 1;
    for (auto& s : b.slices)
        for (auto& arc : s.arcs) {
            arc.id += shift;
            arc.theta_left += angle_offset;
            arc.theta_right += angle_offset;
        }
    for (auto& e : b.events)
        if (e.kind != EventKind::none) {
            e.a += shift;
            e.b += shift;
        }
    // merge boundary walks
    struct Cut {
        Rational x;
        const Event* e;
    };
    std::vector<Cut> cuts;
    for (int i = 0; i < (int)a.events.size(); ++i) cuts.push_back({a.boundary_x(i), &a.events[i]});
    for (int i = 0; i < (int)b.events.size(); ++i) cuts.push_back({b.boundary_x(i), &b.events[i]});
    std::sort(cuts.begin(), cuts.end(), [](const Cut& u, const Cut& v) { return u.x < v.x; });
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i].x == cuts[i + 1].x) throw Error("BadParams", "overlay: boundary collision");
    auto theta_of = [](const FrontDiagram& f, StrandId id, const Rational& x) -> std::optional<Rational> {
        for (auto& s : f.slices)
            if (s.x_left <= x && x <= s.x_right && s.has(id)) return s.theta(id, x);
        return std::nullopt;
    };
    FrontDiagram out;
    std::vector<Rational> xs{Rational(0)};
    for (auto& c : cuts) xs.push_back(c.x);
    xs.push_back(Rational(1));
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        Slice s;
        s.x_left = xs[i];
        s.x_right = xs[i + 1];
        Rational mid = (xs[i] + xs[i + 1]) / Rational(2);
        for (const FrontDiagram* src : {&a, &b})
            for (StrandId id : src->all_strand_ids()) {
                // the strand must live across the whole subinterval
                auto tl = theta_of(*src, id, xs[i]);
                auto tr = theta_of(*src, id, xs[i + 1]);
                auto tm = theta_of(*src, id, mid);
                if (tl && tr && tm) s.arcs.push_back({id, *tl, *tr});
            }
        std::sort(s.arcs.begin(), s.arcs.end(), [](const StrandArc& u, const StrandArc& v) { return u.id < v.id; });
        out.slices.push_back(s);
    }
    for (auto& c : cuts) out.events.push_back(*c.e);
    auto rep = validate_front(out);
    if (!rep.ok()) throw Error("BadParams", "overlay: " + rep.summary());
    return out;
}

std::vector<NamedFront> standard_corpus() {
    std::vector<NamedFront> v;
    v.push_back({"unknot_area_1", builtin_front("unknot_area_1")});
    v.push_back({"unknot_area_2", builtin_front("unknot_area_k", 2)});
    v.push_back({"unknot_area_3", builtin_front("unknot_area_k", 3)});
    v.push_back({"flying_saucer", builtin_front("flying_saucer")});
    v.push_back({"stacked_saucers_2", builtin_front("stacked_saucers", 2)});
    v.push_back({"stacked_saucers_3", builtin_front("stacked_saucers", 3)});
    v.push_back({"hopf_pair", builtin_front("hopf_pair")});
    v.push_back({"nested_eyes", nested_eyes()});
    v.push_back({"triple_braid", triple_braid()});
    v.push_back({"leapfrog", leapfrog()});
    return v;
}

}  // namespace cylf
