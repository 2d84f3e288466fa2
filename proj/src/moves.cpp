#include "cylf/moves.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "cylf/error.hpp"
#include "cylf/sha256.hpp"

namespace cylf {

const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::R1_birth: return "R1_birth";
        case MoveKind::R1_death: return "R1_death";
        case MoveKind::R2_in: return "R2_in";
        case MoveKind::R2_out: return "R2_out";
        case MoveKind::R3: return "R3";
        case MoveKind::XX_swap: return "XX_swap";
        case MoveKind::XC_swap: return "XC_swap";
        case MoveKind::CC_swap: return "CC_swap";
        case MoveKind::reparam: return "reparam";
    }
    return "?";
}

std::string MoveSpec::text() const {
    std::string s = move_kind_name(kind);
    if (event >= 0) s += " e=" + std::to_string(event);
    if (slice >= 0) s += " s=" + std::to_string(slice);
    if (strand >= 0) s += " strand=" + std::to_string(strand);
    if (side != 0) s += std::string(" side=") + (side > 0 ? "up" : "down");
    return s;
}

MoveSpec MoveSpec::parse(const std::string& s) {
    MoveSpec m;
    size_t sp = s.find(' ');
    std::string kind = s.substr(0, sp);
    bool found = false;
    for (MoveKind k : {MoveKind::R1_birth, MoveKind::R1_death, MoveKind::R2_in, MoveKind::R2_out, MoveKind::R3,
                       MoveKind::XX_swap, MoveKind::XC_swap, MoveKind::CC_swap, MoveKind::reparam}) {
        if (kind == move_kind_name(k)) {
            m.kind = k;
            found = true;
        }
    }
    if (!found) throw Error("ParseError", "unknown move kind '" + kind + "'");
    std::string rest = sp == std::string::npos ? "" : s.substr(sp);
    size_t pos = 0;
    while (pos < rest.size()) {
        size_t eq = rest.find('=', pos);
        if (eq == std::string::npos) break;
        size_t ks = rest.rfind(' ', eq);
        std::string key = rest.substr(ks + 1, eq - ks - 1);
        size_t end = rest.find(' ', eq + 1);
        std::string val = rest.substr(eq + 1, end == std::string::npos ? std::string::npos : end - eq - 1);
        if (key == "e") m.event = std::stoi(val);
        else if (key == "s") m.slice = std::stoi(val);
        else if (key == "strand") m.strand = std::stoi(val);
        else if (key == "side") m.side = val == "up" ? 1 : -1;
        pos = end == std::string::npos ? rest.size() : end;
    }
    return m;
}

namespace {

struct Track {
    std::vector<std::pair<Rational, Rational>> pts;  // (x, lift), x strictly increasing

    Rational at(const Rational& x) const {
        assert(!pts.empty());
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            if (pts[i].first <= x && x <= pts[i + 1].first) {
                if (x == pts[i].first) return pts[i].second;
                if (x == pts[i + 1].first) return pts[i + 1].second;
                Rational t = (x - pts[i].first) / (pts[i + 1].first - pts[i].first);
                return pts[i].second + t * (pts[i + 1].second - pts[i].second);
            }
        }
        assert(pts.size() == 1 || !"track evaluated outside its range");
        return pts.front().second;
    }
    const Rational& x_first() const { return pts.front().first; }
    const Rational& x_last() const { return pts.back().first; }
};

struct Boundary {
    Rational x;
    Event e;
};

// Replaces slices[lo..hi] (inclusive) with slices built from the tracks,
// cutting at every given boundary and at every interior track breakpoint
// (which become none-boundaries). Fills slice/event index maps.
FrontDiagram splice_window(const FrontDiagram& f, int lo, int hi, const std::map<StrandId, Track>& tracks,
                           std::vector<Boundary> bounds, std::vector<int>* slice_map,
                           std::vector<int>* event_map) {
    const Rational XL = f.slices[lo].x_left;
    const Rational XR = f.slices[hi].x_right;
    // collect cut fibers
    std::vector<Rational> cuts;
    for (auto& b : bounds) cuts.push_back(b.x);
    for (auto& [id, tr] : tracks)
        for (size_t i = 0; i < tr.pts.size(); ++i) {
            const Rational& x = tr.pts[i].first;
            if (x > XL && x < XR) cuts.push_back(x);
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (auto& x : cuts)
        if (!(XL < x && x < XR)) throw Error("InvalidSite", "window boundary outside window");

    FrontDiagram out;
    out.slices.assign(f.slices.begin(), f.slices.begin() + lo);
    out.events.assign(f.events.begin(), f.events.begin() + lo);
    std::vector<Rational> xs{XL};
    xs.insert(xs.end(), cuts.begin(), cuts.end());
    xs.push_back(XR);
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
        Slice s;
        s.x_left = xs[i];
        s.x_right = xs[i + 1];
        for (auto& [id, tr] : tracks) {
            if (tr.pts.size() < 2) continue;
            if (tr.x_first() <= xs[i] && xs[i + 1] <= tr.x_last())
                s.arcs.push_back({id, tr.at(xs[i]), tr.at(xs[i + 1])});
        }
        std::sort(s.arcs.begin(), s.arcs.end(), [](const StrandArc& a, const StrandArc& b) { return a.id < b.id; });
        out.slices.push_back(s);
        if (i + 2 < xs.size()) {
            Event e{EventKind::none, -1, -1};
            for (auto& b : bounds)
                if (b.x == xs[i + 1]) e = b.e;
            out.events.push_back(e);
        }
    }
    int tail_slices = (int)f.slices.size() - (hi + 1);
    int new_hi = (int)out.slices.size() - 1;
    if (hi < (int)f.events.size()) out.events.insert(out.events.end(), f.events.begin() + hi, f.events.end());
    out.slices.insert(out.slices.end(), f.slices.begin() + hi + 1, f.slices.end());

    if (slice_map) {
        slice_map->assign(f.slices.size(), -1);
        for (int i = 0; i < lo; ++i) (*slice_map)[i] = i;
        for (int i = 0; i < tail_slices; ++i) (*slice_map)[hi + 1 + i] = new_hi + 1 + i;
    }
    if (event_map) {
        event_map->assign(f.events.size(), -1);
        for (int i = 0; i < lo; ++i) (*event_map)[i] = i;
        int new_events_in_window = new_hi - lo;  // boundaries strictly inside the new window
        for (int i = hi; i < (int)f.events.size(); ++i) (*event_map)[i] = i - (hi - lo) + new_events_in_window;
    }
    return out;
}

Track original_track(const FrontDiagram& f, int lo, int hi, StrandId id) {
    Track t;
    for (int si = lo; si <= hi; ++si) {
        const StrandArc* a = f.slices[si].find(id);
        if (!a) continue;
        if (t.pts.empty()) t.pts.push_back({f.slices[si].x_left, a->theta_left});
        t.pts.push_back({f.slices[si].x_right, a->theta_right});
    }
    return t;
}

// drops interior breakpoints
Track straightened(const Track& t) {
    Track s;
    if (t.pts.empty()) return s;
    s.pts.push_back(t.pts.front());
    if (t.pts.size() > 1) s.pts.push_back(t.pts.back());
    return s;
}

std::set<StrandId> window_strands(const FrontDiagram& f, int lo, int hi) {
    std::set<StrandId> ids;
    for (int si = lo; si <= hi; ++si)
        for (auto& a : f.slices[si].arcs) ids.insert(a.id);
    return ids;
}

void rename_downstream(FrontDiagram& f, int first_slice, int first_event,
                       const std::map<StrandId, StrandId>& ren) {
    for (int si = first_slice; si < (int)f.slices.size(); ++si) {
        for (auto& a : f.slices[si].arcs) {
            auto it = ren.find(a.id);
            if (it != ren.end()) a.id = it->second;
        }
        std::sort(f.slices[si].arcs.begin(), f.slices[si].arcs.end(),
                  [](const StrandArc& a, const StrandArc& b) { return a.id < b.id; });
    }
    for (int ei = first_event; ei < (int)f.events.size(); ++ei) {
        Event& e = f.events[ei];
        if (e.kind == EventKind::none) continue;
        auto ra = ren.find(e.a), rb = ren.find(e.b);
        if (ra != ren.end()) e.a = ra->second;
        if (rb != ren.end()) e.b = rb->second;
        if (e.a > e.b) std::swap(e.a, e.b);
    }
}

void require_valid(const FrontDiagram& f, const char* what) {
    auto rep = validate_front(f);
    if (!rep.ok()) throw Error("InvalidSite", std::string(what) + ": " + rep.summary());
}

// validation restricted to the rewritten window (everything outside is
// untouched and was valid before the rewrite)
void require_valid_window(const MoveResult& res, int in_lo, int in_hi, const FrontDiagram& in,
                          const char* what) {
    int out_lo = in_lo;
    int out_hi = in_hi + 1 < (int)in.slices.size() && res.slice_map[in_hi + 1] >= 0
                     ? res.slice_map[in_hi + 1] - 1
                     : (int)res.front.slices.size() - 1;
    auto rep = validate_front_range(res.front, out_lo - 1, out_hi + 1);
    if (!rep.ok()) throw Error("InvalidSite", std::string(what) + ": " + rep.summary());
}

// circular gap from theta to the nearest other-arc position in direction sgn,
// minimized over the slice edges; at most 1/2
Rational clearance(const Slice& s, StrandId id, int sgn) {
    Rational best(1, 2);
    const StrandArc* me = s.find(id);
    for (const auto& o : s.arcs) {
        if (o.id == id) continue;
        for (int edge = 0; edge < 2; ++edge) {
            Rational d = edge ? (o.theta_right - me->theta_right) : (o.theta_left - me->theta_left);
            Rational g = (Rational(sgn) * d).frac();
            if (!g.is_zero()) best = min(best, g);
        }
    }
    return best;
}

long long winding_at(const Slice& left_slice, StrandId a, StrandId b) {
    Rational d = left_slice.find(a)->theta_right - left_slice.find(b)->theta_right;
    assert(d.is_integer());
    return d.num().to_ll();
}

int next_non_none(const FrontDiagram& f, int e) {
    int i = e;
    while (i < (int)f.events.size() && f.events[i].kind == EventKind::none) ++i;
    return i < (int)f.events.size() ? i : -1;
}

// ---------------------------------------------------------------------------
// individual rewrites

MoveResult do_r1_birth(const FrontDiagram& f, const MaslovAssignment& mu, const MoveSpec& m) {
    int si = m.slice;
    if (si < 0 || si >= (int)f.slices.size()) throw Error("InvalidSite", "R1_birth: bad slice");
    const Slice& s = f.slices[si];
    if (!s.has(m.strand)) throw Error("InvalidSite", "R1_birth: strand not in slice");
    if (m.side == 0) throw Error("InvalidSite", "R1_birth: side required");
    Rational w = s.width();
    Rational x1 = s.x_left + w / Rational(4);
    Rational x2 = s.x_left + w / Rational(2);
    Rational x3 = s.x_left + w * Rational(3, 4);
    Rational gap = min(clearance(s, m.strand, 1), clearance(s, m.strand, -1));
    if (gap.is_zero()) throw Error("InvalidSite", "R1_birth: no angular clearance");
    Rational h = Rational::simplest_between(gap / Rational(10), gap / Rational(8)) * Rational(m.side);
    Rational h2 = h / Rational(2);

    StrandId wid = f.max_strand_id() + 1, uid = f.max_strand_id() + 2;
    std::map<StrandId, Track> tracks;
    for (auto& a : s.arcs) tracks[a.id] = Track{{{s.x_left, a.theta_left}, {s.x_right, a.theta_right}}};
    auto ta = [&](const Rational& x) { return s.theta(m.strand, x); };
    tracks[wid] = Track{{{x1, ta(x1) + h}, {x3, ta(x3)}}};
    tracks[uid] = Track{{{x1, ta(x1) + h}, {x2, ta(x2)}, {x3, ta(x3) - h2}, {s.x_right, ta(s.x_right)}}};
    tracks[m.strand].pts.back() = {x3, ta(x3)};  // the host dies at the new cusp

    std::vector<Boundary> bounds = {
        {x1, {EventKind::birth, wid, uid}},
        {x2, {EventKind::crossing, std::min(m.strand, uid), std::max(m.strand, uid)}},
        {x3, {EventKind::death, std::min(m.strand, wid), std::max(m.strand, wid)}},
    };
    MoveResult res;
    res.front = splice_window(f, si, si, tracks, bounds, &res.slice_map, &res.event_map);
    res.rename[m.strand] = uid;
    // downstream of the window: tail slices start where the map resumes
    int tail_slice = si + 1, tail_event = si;
    int new_tail_slice = tail_slice < (int)f.slices.size() ? res.slice_map[tail_slice] : (int)res.front.slices.size();
    int new_tail_event = tail_event < (int)f.events.size() ? res.event_map[tail_event] : (int)res.front.events.size();
    rename_downstream(res.front, new_tail_slice, new_tail_event, res.rename);
    res.mu = mu;
    res.mu.mu[wid] = mu.at(m.strand) ^ 1;
    res.mu.mu[uid] = mu.at(m.strand);
    require_valid_window(res, si, si, f, "R1_birth");
    return res;
}

MoveResult do_r1_death(const FrontDiagram& f, const MaslovAssignment& mu, const MoveSpec& m) {
    int e = m.event;
    if (e < 0 || e + 2 >= (int)f.events.size()) throw Error("InvalidSite", "R1_death: bad site");
    const Event &eb = f.events[e], &ex = f.events[e + 1], &ed = f.events[e + 2];
    if (eb.kind != EventKind::birth || ex.kind != EventKind::crossing || ed.kind != EventKind::death)
        throw Error("InvalidSite", "R1_death: pattern mismatch");
    // crossing joins the incoming strand A with one newborn X; death kills A
    // with the other newborn Y
    StrandId X, A;
    if (ex.a == eb.a || ex.a == eb.b) {
        X = ex.a;
        A = ex.b;
    } else if (ex.b == eb.a || ex.b == eb.b) {
        X = ex.b;
        A = ex.a;
    } else {
        throw Error("InvalidSite", "R1_death: crossing does not meet the newborn pair");
    }
    if (A == eb.a || A == eb.b) throw Error("InvalidSite", "R1_death: crossing inside the newborn pair");
    StrandId Y = eb.a == X ? eb.b : eb.a;
    if (!(ed.involves(A) && ed.involves(Y))) throw Error("InvalidSite", "R1_death: death pair mismatch");

    int lo = e, hi = e + 3;
    std::map<StrandId, Track> tracks;
    for (StrandId id : window_strands(f, lo, hi)) {
        if (id == X || id == Y) continue;
        if (id == A) {
            Track t;
            t.pts.push_back({f.slices[lo].x_left, f.slices[lo].find(A)->theta_left});
            t.pts.push_back({f.slices[hi].x_right, f.slices[hi].find(X)->theta_right});
            tracks[A] = t;
        } else {
            tracks[id] = straightened(original_track(f, lo, hi, id));
        }
    }
    MoveResult res;
    res.front = splice_window(f, lo, hi, tracks, {}, &res.slice_map, &res.event_map);
    res.rename[X] = A;
    int new_tail_slice = hi + 1 < (int)f.slices.size() ? res.slice_map[hi + 1] : (int)res.front.slices.size();
    int new_tail_event = hi < (int)f.events.size() ? res.event_map[hi] : (int)res.front.events.size();
    rename_downstream(res.front, new_tail_slice, new_tail_event, res.rename);
    res.mu = mu;
    res.mu.mu.erase(X);
    res.mu.mu.erase(Y);
    require_valid_window(res, lo, hi, f, "R1_death");
    return res;
}

MoveResult do_r2_in(const FrontDiagram& f, const MaslovAssignment& mu, const MoveSpec& m) {
    int e = m.event;
    if (e < 0 || e >= (int)f.events.size() || !f.events[e].is_fold())
        throw Error("InvalidSite", "R2_in: not a fold event");
    const Event& fold = f.events[e];
    StrandId s = m.strand;
    int sgn = m.side;
    if (sgn == 0) throw Error("InvalidSite", "R2_in: side required");
    const Slice& L = f.slices[e];
    const Slice& R = f.slices[e + 1];
    if (!L.has(s) || !R.has(s) || fold.involves(s)) throw Error("InvalidSite", "R2_in: strand must pass the fold");
    bool death_side = fold.kind == EventKind::death;
    const Slice& C = death_side ? L : R;  // side where the fold pair lives
    const Rational xf = L.x_right;
    Rational theta_c = death_side ? C.find(fold.a)->theta_right : C.find(fold.a)->theta_left;
    Rational theta_s = L.find(s)->theta_right;
    Rational g1 = (Rational(sgn) * (theta_s - theta_c)).frac();
    if (g1.is_zero()) throw Error("InvalidSite", "R2_in: strand meets the cusp");
    // adjacency: nothing between the cusp and s on the chosen side
    Rational g2(1, 2);
    for (auto& o : L.arcs) {
        if (o.id == s || fold.involves(o.id)) continue;
        Rational toward = (Rational(sgn) * (o.theta_right - theta_c)).frac();
        if (!toward.is_zero() && toward < g1) throw Error("InvalidSite", "R2_in: strand not adjacent to the cusp");
        Rational away = (Rational(-sgn) * (o.theta_right - theta_c)).frac();
        if (!away.is_zero()) g2 = min(g2, away);
    }
    g2 = min(g2, Rational(1) - g1);  // never wrap all the way back to s
    Rational eps = Rational::simplest_between(Rational(0), min(g1, g2) / Rational(8));

    for (int attempt = 0; attempt < 5; ++attempt) {
        Rational denom(1 + (1 << attempt));
        Rational xm = xf - (xf - L.x_left) / Rational(4) / denom;
        Rational xm2 = xf + (R.x_right - xf) / Rational(4) / denom;
        Rational dip = theta_s - Rational(sgn) * (g1 + eps);

        std::map<StrandId, Track> tracks;
        for (StrandId id : window_strands(f, e, e + 1))
            if (id != s) tracks[id] = original_track(f, e, e + 1, id);
        Track st;
        st.pts.push_back({L.x_left, L.find(s)->theta_left});
        st.pts.push_back({xm, L.theta(s, xm)});
        st.pts.push_back({xf, dip});
        st.pts.push_back({xm2, R.theta(s, xm2)});
        st.pts.push_back({R.x_right, R.find(s)->theta_right});
        tracks[s] = st;

        // crossing fibers: where the dip (or return) meets the fold strands
        const Rational seg_lo = death_side ? xm : xf;
        const Rational seg_hi = death_side ? xf : xm2;
        auto meets = [&](StrandId other) -> std::vector<Rational> {
            std::vector<Rational> out;
            // s-segment on [seg_lo, seg_hi] is linear
            Rational s0 = st.at(seg_lo), s1 = st.at(seg_hi);
            Track ot = original_track(f, e, e + 1, other);
            // other's track is linear over the same span (fold strands live on one side)
            Rational o0 = ot.at(seg_lo), o1 = ot.at(seg_hi);
            Rational d0 = s0 - o0, d1 = s1 - o1;
            if (d0 == d1) return out;
            Rational lo = d0 < d1 ? d0 : d1, hi = d0 < d1 ? d1 : d0;
            for (BigInt k = lo.floor(); BigInt::cmp(k, hi.floor() + BigInt(1)) <= 0; k = k + BigInt(1)) {
                Rational rk(k, BigInt(1));
                if (!(lo < rk && rk < hi)) continue;
                Rational t = (rk - d0) / (d1 - d0);
                out.push_back(seg_lo + t * (seg_hi - seg_lo));
            }
            return out;
        };
        auto ma = meets(fold.a), mb = meets(fold.b);
        if (ma.size() != 1 || mb.size() != 1 || ma[0] == mb[0]) continue;  // retry tighter
        Rational n1 = min(ma[0], mb[0]), n2 = max(ma[0], mb[0]);
        StrandId first = ma[0] < mb[0] ? fold.a : fold.b;
        StrandId second = first == fold.a ? fold.b : fold.a;
        std::vector<Boundary> bounds = {
            {xm, {EventKind::none, -1, -1}},
            {n1, {EventKind::crossing, std::min(s, first), std::max(s, first)}},
            {n2, {EventKind::crossing, std::min(s, second), std::max(s, second)}},
            {xf, fold},
            {xm2, {EventKind::none, -1, -1}},
        };
        MoveResult res;
        try {
            res.front = splice_window(f, e, e + 1, tracks, bounds, &res.slice_map, &res.event_map);
            require_valid_window(res, e, e + 1, f, "R2_in");
        } catch (const Error&) {
            continue;
        }
        res.mu = mu;
        return res;
    }
    throw Error("InvalidSite", "R2_in: no clean dip corridor");
}

MoveResult do_r2_out(const FrontDiagram& f, const MaslovAssignment& mu, const MoveSpec& m) {
    int i1 = m.event;
    if (i1 < 0 || i1 >= (int)f.events.size()) throw Error("InvalidSite", "R2_out: bad site");
    int i2 = next_non_none(f, i1 + 1);
    int i3 = i2 < 0 ? -1 : next_non_none(f, i2 + 1);
    if (i2 < 0 || i3 < 0) throw Error("InvalidSite", "R2_out: pattern truncated");
    const Event &e1 = f.events[i1], &e2 = f.events[i2], &e3 = f.events[i3];
    StrandId s = -1, a = -1, b = -1;
    int fold_idx = -1;
    if (e1.kind == EventKind::crossing && e2.kind == EventKind::crossing && e3.kind == EventKind::death) {
        StrandId common = e1.a == e2.a || e1.a == e2.b ? e1.a : e1.b;
        if (!(e2.involves(common) && e1.involves(common))) throw Error("InvalidSite", "R2_out: no shared strand");
        s = common;
        a = e1.a == s ? e1.b : e1.a;
        b = e2.a == s ? e2.b : e2.a;
        if (!(e3.involves(a) && e3.involves(b) && a != b)) throw Error("InvalidSite", "R2_out: fold pair mismatch");
        fold_idx = i3;
    } else if (e1.kind == EventKind::birth && e2.kind == EventKind::crossing && e3.kind == EventKind::crossing) {
        StrandId common = e2.a == e3.a || e2.a == e3.b ? e2.a : e2.b;
        if (!(e2.involves(common) && e3.involves(common))) throw Error("InvalidSite", "R2_out: no shared strand");
        s = common;
        a = e2.a == s ? e2.b : e2.a;
        b = e3.a == s ? e3.b : e3.a;
        if (!(e1.involves(a) && e1.involves(b) && a != b)) throw Error("InvalidSite", "R2_out: fold pair mismatch");
        fold_idx = i1;
    } else {
        throw Error("InvalidSite", "R2_out: pattern mismatch");
    }
    const Event& fold = f.events[fold_idx];
    int lo = i1, hi = i3 + 1;
    Rational xf = f.slices[fold_idx].x_right;

    std::map<StrandId, Track> tracks;
    for (StrandId id : window_strands(f, lo, hi)) {
        if (id == fold.a || id == fold.b) {
            Track t = original_track(f, lo, hi, id);
            Track flat;
            flat.pts.push_back(t.pts.front());
            flat.pts.push_back({xf, t.at(xf)});
            if (fold.kind == EventKind::birth) {
                flat.pts.clear();
                flat.pts.push_back({xf, t.at(xf)});
                flat.pts.push_back(t.pts.back());
            }
            tracks[id] = flat;
        } else {
            tracks[id] = straightened(original_track(f, lo, hi, id));
        }
    }
    std::vector<Boundary> bounds = {{xf, fold}};
    MoveResult res;
    res.front = splice_window(f, lo, hi, tracks, bounds, &res.slice_map, &res.event_map);
    res.mu = mu;
    require_valid_window(res, lo, hi, f, "R2_out");
    return res;
}

MoveResult do_r3(const FrontDiagram& f, const MaslovAssignment& mu, const MoveSpec& m) {
    int i1 = m.event;
    if (i1 < 0 || i1 >= (int)f.events.size() || f.events[i1].kind != EventKind::crossing)
        throw Error("InvalidSite", "R3: bad site");
    int i2 = next_non_none(f, i1 + 1);
    int i3 = i2 < 0 ? -1 : next_non_none(f, i2 + 1);
    if (i2 < 0 || i3 < 0 || f.events[i2].kind != EventKind::crossing || f.events[i3].kind != EventKind::crossing)
        throw Error("InvalidSite", "R3: need three consecutive crossings");
    const Event &e1 = f.events[i1], &e2 = f.events[i2], &e3 = f.events[i3];
    StrandId X = (e1.a == e2.a || e1.a == e2.b) ? e1.a : e1.b;
    if (!e2.involves(X) || !e1.involves(X)) throw Error("InvalidSite", "R3: no common strand");
    StrandId Y = e1.a == X ? e1.b : e1.a;
    StrandId Z = e2.a == X ? e2.b : e2.a;
    if (Y == Z || !(e3.involves(Y) && e3.involves(Z))) throw Error("InvalidSite", "R3: third crossing mismatch");

    int lo = i1, hi = i3 + 1;
    Rational f1 = f.slices[i1].x_right, f2 = f.slices[i2].x_right, f3 = f.slices[i3].x_right;
    long long kXY = winding_at(f.slices[i1], X, Y);
    long long kXZ = winding_at(f.slices[i2], X, Z);
    long long kYZ = winding_at(f.slices[i3], Y, Z);
    if (kXZ != kXY + kYZ) throw Error("InvalidSite", "R3: windings are not a tight triangle");

    // anchored chart: x~ = theta_X, y~ = theta_Y + kXY, z~ = theta_Z + kXZ
    Track tX = original_track(f, lo, hi, X);
    Track tY = original_track(f, lo, hi, Y);
    Track tZ = original_track(f, lo, hi, Z);
    const Rational XL = f.slices[lo].x_left, XR = f.slices[hi].x_right;
    auto cx = [&](const Rational& x) { return tX.at(x); };
    auto cy = [&](const Rational& x) { return tY.at(x) + Rational(kXY); };
    auto cz = [&](const Rational& x) { return tZ.at(x) + Rational(kXZ); };
    // tube must be slim and clean: no other strand inside at any cut fiber
    {
        std::vector<Rational> checks{XL, f1, f2, f3, XR};
        for (auto& x : checks) {
            Rational lo_t = min(cx(x), min(cy(x), cz(x)));
            Rational hi_t = max(cx(x), max(cy(x), cz(x)));
            if (!(hi_t - lo_t < Rational(1))) throw Error("InvalidSite", "R3: tube wraps the fiber");
            for (StrandId id : window_strands(f, lo, hi)) {
                if (id == X || id == Y || id == Z) continue;
                Track ot = original_track(f, lo, hi, id);
                if (!(ot.x_first() <= x && x <= ot.x_last())) continue;
                Rational v = ot.at(x);
                if (integer_strictly_between(lo_t - v, hi_t - v))
                    throw Error("InvalidSite", "R3: another strand inside the tube");
            }
        }
    }

    auto build = [&](bool mirrored) -> MoveResult {
        // recipe: Z straight, Y kinks once (meets Z at its new fiber), X kinks
        // twice; mirrored swaps the roles of the outer crossings
        Rational zl = cz(XL), zr = cz(XR);
        Track cZ{{{XL, zl}, {XR, zr}}};
        auto zat = [&](const Rational& x) { return cZ.at(x); };
        Track cY, cX;
        if (!mirrored) {
            // new order: (Y,Z)@f1, (X,Z)@f2, (X,Y)@f3
            cY = Track{{{XL, cy(XL)}, {f1, zat(f1)}, {XR, cy(XR)}}};
            auto yat = [&](const Rational& x) { return cY.at(x); };
            cX = Track{{{XL, cx(XL)}, {f2, zat(f2)}, {f3, yat(f3)}, {XR, cx(XR)}}};
        } else {
            cY = Track{{{XL, cy(XL)}, {f3, zat(f3)}, {XR, cy(XR)}}};
            auto yat = [&](const Rational& x) { return cY.at(x); };
            cX = Track{{{XL, cx(XL)}, {f1, yat(f1)}, {f2, zat(f2)}, {XR, cx(XR)}}};
        }
        std::map<StrandId, Track> tracks;
        for (StrandId id : window_strands(f, lo, hi)) {
            if (id == X || id == Y || id == Z) continue;
            tracks[id] = original_track(f, lo, hi, id);
        }
        auto deanchor = [&](Track t, long long k) {
            for (auto& p : t.pts) p.second -= Rational(k);
            return t;
        };
        tracks[X] = cX;
        tracks[Y] = deanchor(cY, kXY);
        tracks[Z] = deanchor(cZ, kXZ);
        std::vector<Boundary> bounds;
        if (!mirrored) {
            bounds = {{f1, {EventKind::crossing, std::min(Y, Z), std::max(Y, Z)}},
                      {f2, {EventKind::crossing, std::min(X, Z), std::max(X, Z)}},
                      {f3, {EventKind::crossing, std::min(X, Y), std::max(X, Y)}}};
        } else {
            bounds = {{f1, {EventKind::crossing, std::min(X, Y), std::max(X, Y)}},
                      {f2, {EventKind::crossing, std::min(X, Z), std::max(X, Z)}},
                      {f3, {EventKind::crossing, std::min(Y, Z), std::max(Y, Z)}}};
        }
        // wait: the reversed word of [XY, XZ, YZ] is [YZ, XZ, XY]
        MoveResult res;
        res.front = splice_window(f, lo, hi, tracks, bounds, &res.slice_map, &res.event_map);
        res.mu = mu;
        require_valid_window(res, lo, hi, f, "R3");
        return res;
    };
    try {
        return build(false);
    } catch (const Error&) {
        return build(true);
    }
}

MoveResult do_swap(const FrontDiagram& f, const MaslovAssignment& mu, const MoveSpec& m) {
    int i1 = m.event;
    if (i1 < 0 || i1 >= (int)f.events.size() || f.events[i1].kind == EventKind::none)
        throw Error("InvalidSite", "swap: bad site");
    int i2 = next_non_none(f, i1 + 1);
    if (i2 < 0) throw Error("InvalidSite", "swap: no second event");
    const Event e1 = f.events[i1], e2 = f.events[i2];
    std::set<StrandId> s1{e1.a, e1.b}, s2{e2.a, e2.b};
    for (StrandId x : s1)
        if (s2.count(x)) throw Error("InvalidSite", "swap: events share a strand");
    int folds = (e1.is_fold() ? 1 : 0) + (e2.is_fold() ? 1 : 0);
    MoveKind expect = folds == 0 ? MoveKind::XX_swap : folds == 1 ? MoveKind::XC_swap : MoveKind::CC_swap;
    if (m.kind != expect) throw Error("InvalidSite", "swap: event kinds do not match the move kind");

    int lo = i1, hi = i2 + 1;
    Rational fi = f.slices[i1].x_right, fj = f.slices[i2].x_right;
    const Rational XL = f.slices[lo].x_left, XR = f.slices[hi].x_right;

    std::map<StrandId, Track> tracks;
    for (StrandId id : window_strands(f, lo, hi)) {
        if (s1.count(id) || s2.count(id)) continue;
        tracks[id] = original_track(f, lo, hi, id);
    }

    // event strands move; all values handled in the a-strand's winding chart
    auto later = [&](const Event& ev, const Rational& from, const Rational& to) {
        // ev originally at `from`, re-created at `to` (from < to)
        Track ta = original_track(f, lo, hi, ev.a);
        Track tb = original_track(f, lo, hi, ev.b);
        switch (ev.kind) {
            case EventKind::crossing: {
                int ei = &ev == &e1 ? i1 : i2;
                long long k = winding_at(f.slices[ei], ev.a, ev.b);
                Rational M = ta.at(from);
                Rational dwl = (ta.at(XL) - tb.at(XL)) - Rational(k);
                Rational Mp = (ta.at(to) + tb.at(to) + Rational(k)) / Rational(2);
                tracks[ev.a] = Track{{{XL, ta.at(XL)}, {from, M + dwl / Rational(4)}, {to, Mp}, {XR, ta.at(XR)}}};
                tracks[ev.b] = Track{
                    {{XL, tb.at(XL)}, {from, M - Rational(k) - dwl / Rational(4)}, {to, Mp - Rational(k)}, {XR, tb.at(XR)}}};
                break;
            }
            case EventKind::death: {
                int ei = &ev == &e1 ? i1 : i2;
                long long k = winding_at(f.slices[ei], ev.a, ev.b);
                Rational M = ta.at(from);
                Rational dwl = (ta.at(XL) - tb.at(XL)) - Rational(k);
                tracks[ev.a] = Track{{{XL, ta.at(XL)}, {from, M + dwl / Rational(4)}, {to, M}}};
                tracks[ev.b] = Track{{{XL, tb.at(XL)}, {from, M - Rational(k) - dwl / Rational(4)}, {to, M - Rational(k)}}};
                break;
            }
            case EventKind::birth: {
                Rational B = ta.at(from);
                tracks[ev.a] = Track{{{to, B}, {XR, ta.at(XR)}}};
                tracks[ev.b] = Track{{{to, B}, {XR, tb.at(XR)}}};
                break;
            }
            default:
                throw Error("InvalidSite", "swap: unexpected event kind");
        }
    };
    auto earlier = [&](const Event& ev, const Rational& from, const Rational& to) {
        Track ta = original_track(f, lo, hi, ev.a);
        Track tb = original_track(f, lo, hi, ev.b);
        switch (ev.kind) {
            case EventKind::crossing: {
                int ei = &ev == &e1 ? i1 : i2;
                long long k = winding_at(f.slices[ei], ev.a, ev.b);
                Rational M2 = (ta.at(to) + tb.at(to) + Rational(k)) / Rational(2);
                Rational dwr = (ta.at(XR) - tb.at(XR)) - Rational(k);
                tracks[ev.a] = Track{{{XL, ta.at(XL)}, {to, M2}, {from, M2 + dwr / Rational(4)}, {XR, ta.at(XR)}}};
                tracks[ev.b] = Track{
                    {{XL, tb.at(XL)}, {to, M2 - Rational(k)}, {from, M2 - Rational(k) - dwr / Rational(4)}, {XR, tb.at(XR)}}};
                break;
            }
            case EventKind::death: {
                int ei = &ev == &e1 ? i1 : i2;
                long long k = winding_at(f.slices[ei], ev.a, ev.b);
                Rational M2 = (ta.at(to) + tb.at(to) + Rational(k)) / Rational(2);
                tracks[ev.a] = Track{{{XL, ta.at(XL)}, {to, M2}}};
                tracks[ev.b] = Track{{{XL, tb.at(XL)}, {to, M2 - Rational(k)}}};
                break;
            }
            case EventKind::birth: {
                Rational B = ta.at(from);
                Rational dwr = ta.at(XR) - tb.at(XR);
                tracks[ev.a] = Track{{{to, B}, {from, B + dwr / Rational(4)}, {XR, ta.at(XR)}}};
                tracks[ev.b] = Track{{{to, B}, {from, B - dwr / Rational(4)}, {XR, tb.at(XR)}}};
                break;
            }
            default:
                throw Error("InvalidSite", "swap: unexpected event kind");
        }
    };
    later(e1, fi, fj);
    earlier(e2, fj, fi);

    std::vector<Boundary> bounds = {{fi, e2}, {fj, e1}};
    MoveResult res;
    res.front = splice_window(f, lo, hi, tracks, bounds, &res.slice_map, &res.event_map);
    res.mu = mu;
    require_valid_window(res, lo, hi, f, "swap");
    return res;
}

MoveResult do_reparam(const FrontDiagram& f, const MaslovAssignment& mu) {
    NormalizeResult nr = normalize_front_full(f);
    MoveResult res;
    res.front = std::move(nr.front);
    res.rename = nr.rename;
    res.slice_map = nr.slice_map;
    res.event_map = nr.event_map;
    for (auto& [old_id, v] : mu.mu) {
        auto it = res.rename.find(old_id);
        res.mu.mu[it == res.rename.end() ? old_id : it->second] = v;
    }
    return res;
}

}  // namespace

MoveResult apply_move(const FrontDiagram& f, const MaslovAssignment& mu, const MoveSpec& m) {
    switch (m.kind) {
        case MoveKind::R1_birth: return do_r1_birth(f, mu, m);
        case MoveKind::R1_death: return do_r1_death(f, mu, m);
        case MoveKind::R2_in: return do_r2_in(f, mu, m);
        case MoveKind::R2_out: return do_r2_out(f, mu, m);
        case MoveKind::R3: return do_r3(f, mu, m);
        case MoveKind::XX_swap:
        case MoveKind::XC_swap:
        case MoveKind::CC_swap: return do_swap(f, mu, m);
        case MoveKind::reparam: return do_reparam(f, mu);
    }
    throw Error("InvalidSite", "unknown move kind");
}

MoveResult apply_move(const FrontDiagram& f, const MoveSpec& m) { return apply_move(f, compute_maslov(f), m); }

std::vector<MoveSpec> available_moves(const FrontDiagram& f, const MaslovAssignment& mu) {
    std::vector<MoveSpec> out;
    if (f.empty()) return out;
    auto try_add = [&](MoveSpec m) {
        try {
            apply_move(f, mu, m);
            out.push_back(m);
        } catch (const Error& e) {
            if (e.code() != "InvalidSite") throw;
        }
    };
    for (int si = 0; si < (int)f.slices.size(); ++si)
        for (const auto& a : f.slices[si].arcs)
            for (int side : {1, -1}) out.push_back({MoveKind::R1_birth, -1, si, a.id, side});
    for (int e = 0; e < (int)f.events.size(); ++e) {
        try_add({MoveKind::R1_death, e, -1, -1, 0});
        try_add({MoveKind::R2_out, e, -1, -1, 0});
        try_add({MoveKind::R3, e, -1, -1, 0});
        for (MoveKind k : {MoveKind::XX_swap, MoveKind::XC_swap, MoveKind::CC_swap})
            try_add({k, e, -1, -1, 0});
        if (e < (int)f.events.size() && f.events[e].is_fold()) {
            for (const auto& a : f.slices[e].arcs)
                for (int side : {1, -1}) try_add({MoveKind::R2_in, e, -1, a.id, side});
        }
    }
    out.push_back({MoveKind::reparam, -1, -1, -1, 0});
    return out;
}

std::vector<MoveSpec> available_moves(const FrontDiagram& f) {
    if (f.empty()) return {};
    return available_moves(f, compute_maslov(f));
}

// ---------------------------------------------------------------------------
// continuation

namespace {

// applies a rename to a pairing (identity outside the map)
SlicePairing rename_pairing(const SlicePairing& p, const std::map<StrandId, StrandId>& ren) {
    auto r = [&](StrandId s) {
        auto it = ren.find(s);
        return it == ren.end() ? s : it->second;
    };
    SlicePairing q;
    for (auto& [a, b] : p.partner) q.partner[r(a)] = r(b);
    for (auto& [key, o] : p.offset) {
        StrandId a = r(key.first), b = r(key.second);
        if (a < b)
            q.offset[{a, b}] = o;
        else
            q.offset[{b, a}] = -o;
    }
    return q;
}

}  // namespace

RulingData continue_ruling(const FrontDiagram& f, const MaslovAssignment& mu, const MoveSpec& m,
                           const RulingData& r, RulingKind kind) {
    if (!ruling_is_valid(f, mu, r, kind)) throw Error("NotNormal", "input ruling is not normal");
    MoveResult res = apply_move(f, mu, m);
    if (m.kind == MoveKind::reparam) {
        // pure transport through the index maps and renames
        RulingData out;
        out.pairings.resize(res.front.slices.size());
        for (int si = 0; si < (int)f.slices.size(); ++si)
            out.pairings[res.slice_map[si]] = rename_pairing(r.pairings[si], res.rename);
        for (auto& [ei, fl] : r.switches) out.switches[res.event_map[ei]] = fl;
        return out;
    }
    // window of the rewrite = unmapped indices; renames apply past it
    int first_tail_slice = 0;
    for (int si = 0; si < (int)f.slices.size(); ++si)
        if (res.slice_map[si] == -1) first_tail_slice = si + 1;
    Rational chi0 = chi(f, r);
    std::vector<RulingData> candidates;
    std::vector<DiskRuling> dr;
    std::vector<CircularRuling> cr;
    if (kind == RulingKind::disk)
        for (auto& x : enumerate_disk_rulings(res.front, res.mu)) candidates.push_back(x);
    else
        for (auto& x : enumerate_circular_rulings(res.front, res.mu)) candidates.push_back(x);
    std::vector<RulingData> matches;
    for (auto& cand : candidates) {
        if (!(chi(res.front, cand) == chi0)) continue;
        bool agree = true;
        for (int si = 0; si < (int)f.slices.size() && agree; ++si) {
            int ti = res.slice_map[si];
            if (ti < 0) continue;
            const SlicePairing& want =
                si >= first_tail_slice ? rename_pairing(r.pairings[si], res.rename) : r.pairings[si];
            if (!(cand.pairings[ti] == want)) agree = false;
        }
        for (auto& [ei, fl] : r.switches) {
            if (!agree) break;
            int ti = res.event_map[ei];
            if (ti < 0) continue;
            auto it = cand.switches.find(ti);
            if (it == cand.switches.end() || it->second != fl) agree = false;
        }
        if (agree) matches.push_back(cand);
    }
    if (matches.size() != 1)
        throw Error("NotNormal", "continuation not unique: " + std::to_string(matches.size()) + " matches for " +
                                     m.text());
    return matches[0];
}

// ---------------------------------------------------------------------------
// fuzzing

namespace {
struct SplitMix64 {
    uint64_t s;
    uint64_t next() {
        uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};
}  // namespace

std::vector<FuzzStep> fuzz_trajectory(const FrontDiagram& f, uint64_t seed, int n) {
    std::vector<FuzzStep> out;
    FuzzStep s0;
    s0.front = f;
    s0.mu = compute_maslov(f);
    s0.front_hash = sha256_hex(serialize_front(normalize_front(f)));
    out.push_back(s0);
    SplitMix64 rng{seed};
    for (int i = 0; i < n; ++i) {
        const FuzzStep& cur = out.back();
        auto avail = available_moves(cur.front, cur.mu);
        FuzzStep nxt;
        if (avail.empty()) {
            nxt = cur;
            nxt.move = MoveSpec{};
        } else {
            MoveSpec pick = avail[rng.next() % avail.size()];
            MoveResult res = apply_move(cur.front, cur.mu, pick);
            nxt.move = pick;
            nxt.front = std::move(res.front);
            nxt.mu = std::move(res.mu);
            nxt.front_hash = sha256_hex(serialize_front(normalize_front(nxt.front)));
        }
        out.push_back(std::move(nxt));
    }
    return out;
}

std::vector<FrontDiagram> fuzz_moves(const FrontDiagram& f, uint64_t seed, int n) {
    std::vector<FrontDiagram> out;
    for (auto& s : fuzz_trajectory(f, seed, n)) out.push_back(s.front);
    return out;
}

std::string trajectory_log(const std::vector<FuzzStep>& t) {
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) {
        s += std::to_string(i) + "\t" + (i == 0 ? std::string("start") : t[i].move.text()) + "\t" +
             t[i].front_hash + "\n";
    }
    return s;
}

}  // namespace cylf
