#include "cylf/front.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "cylf/error.hpp"
#include "json.hpp"

namespace cylf {

Rational StrandArc::theta_at(const Rational& x_left, const Rational& x_right, const Rational& x) const {
    if (x == x_left) return theta_left;
    if (x == x_right) return theta_right;
    Rational t = (x - x_left) / (x_right - x_left);
    return theta_left + t * (theta_right - theta_left);
}

const StrandArc* Slice::find(StrandId id) const {
    for (const auto& a : arcs)
        if (a.id == id) return &a;
    return nullptr;
}

StrandArc* Slice::find(StrandId id) {
    for (auto& a : arcs)
        if (a.id == id) return &a;
    return nullptr;
}

Rational Slice::theta(StrandId id, const Rational& x) const {
    const StrandArc* a = find(id);
    assert(a);
    return a->theta_at(x_left, x_right, x);
}

const char* event_kind_name(EventKind k) {
    switch (k) {
        case EventKind::crossing: return "crossing";
        case EventKind::birth: return "birth";
        case EventKind::death: return "death";
        case EventKind::none: return "none";
    }
    return "?";
}

bool FrontDiagram::empty() const {
    for (const auto& s : slices)
        if (!s.arcs.empty()) return false;
    return true;
}

StrandId FrontDiagram::max_strand_id() const {
    StrandId m = -1;
    for (const auto& s : slices)
        for (const auto& a : s.arcs) m = std::max(m, a.id);
    return m;
}

std::vector<StrandId> FrontDiagram::all_strand_ids() const {
    std::set<StrandId> ids;
    for (const auto& s : slices)
        for (const auto& a : s.arcs) ids.insert(a.id);
    return std::vector<StrandId>(ids.begin(), ids.end());
}

std::optional<BigInt> integer_strictly_between(const Rational& a, const Rational& b) {
    const Rational& lo = a < b ? a : b;
    const Rational& hi = a < b ? b : a;
    BigInt n = lo.floor() + BigInt(1);
    Rational rn(n, BigInt(1));
    if (lo < rn && rn < hi) return n;
    return std::nullopt;
}

int count_cusps(const FrontDiagram& f) {
    int c = 0;
    for (const auto& e : f.events)
        if (e.is_fold()) ++c;
    return c;
}

// ---------------------------------------------------------------------------
// validation

namespace {

void check_slice_interior(const FrontDiagram& f, int si, ValidationReport& rep) {
    const Slice& s = f.slices[si];
    for (size_t i = 0; i < s.arcs.size(); ++i) {
        for (size_t j = i + 1; j < s.arcs.size(); ++j) {
            Rational dl = s.arcs[i].theta_left - s.arcs[j].theta_left;
            Rational dr = s.arcs[i].theta_right - s.arcs[j].theta_right;
            if (dl == dr) {
                if (dl.is_integer())
                    rep.violations.push_back({"interior tangency: arcs " + std::to_string(s.arcs[i].id) +
                                                  "," + std::to_string(s.arcs[j].id) +
                                                  " coincide mod 1 along the slice",
                                              si, -1});
                continue;
            }
            if (integer_strictly_between(dl, dr))
                rep.violations.push_back({"interior crossing: arcs " + std::to_string(s.arcs[i].id) + "," +
                                              std::to_string(s.arcs[j].id) +
                                              " meet mod 1 inside the slice",
                                          si, -1});
        }
    }
}

// all mod-1 coincidences among the slice's arcs at one of its edge fibers
std::vector<std::pair<StrandId, StrandId>> edge_coincidences(const Slice& s, bool right_edge) {
    std::vector<std::pair<StrandId, StrandId>> out;
    for (size_t i = 0; i < s.arcs.size(); ++i) {
        for (size_t j = i + 1; j < s.arcs.size(); ++j) {
            Rational d = right_edge ? s.arcs[i].theta_right - s.arcs[j].theta_right
                                    : s.arcs[i].theta_left - s.arcs[j].theta_left;
            if (d.is_integer()) out.push_back({std::min(s.arcs[i].id, s.arcs[j].id), std::max(s.arcs[i].id, s.arcs[j].id)});
        }
    }
    return out;
}

}  // namespace

ValidationReport validate_front(const FrontDiagram& f) {
    return validate_front_range(f, 0, (int)f.slices.size() - 1);
}

ValidationReport validate_front_range(const FrontDiagram& f, int range_lo, int range_hi) {
    ValidationReport rep;
    if (f.slices.empty()) {
        rep.violations.push_back({"no slices", -1, -1});
        return rep;
    }
    if (f.events.size() + 1 != f.slices.size()) {
        rep.violations.push_back({"event count must be slice count minus one", -1, -1});
        return rep;
    }
    if (!f.slices.front().arcs.empty()) rep.violations.push_back({"not closed: first slice nonempty", 0, -1});
    if (!f.slices.back().arcs.empty())
        rep.violations.push_back({"not closed: last slice nonempty", (int)f.slices.size() - 1, -1});
    range_lo = std::max(0, range_lo);
    range_hi = std::min((int)f.slices.size() - 1, range_hi);

    for (int si = range_lo; si <= range_hi; ++si) {
        const Slice& s = f.slices[si];
        if (!(s.x_left < s.x_right)) rep.violations.push_back({"slice has nonpositive width", si, -1});
        if (s.arcs.size() % 2 != 0) rep.violations.push_back({"odd number of strands over a fiber", si, -1});
        std::set<StrandId> seen;
        for (const auto& a : s.arcs) {
            if (!seen.insert(a.id).second) rep.violations.push_back({"duplicate strand id in slice", si, -1});
        }
        for (size_t i = 1; i < s.arcs.size(); ++i)
            if (s.arcs[i - 1].id > s.arcs[i].id) rep.violations.push_back({"arcs not sorted by id", si, -1});
        check_slice_interior(f, si, rep);
        if (si + 1 < (int)f.slices.size() && !(s.x_right == f.slices[si + 1].x_left))
            rep.violations.push_back({"slices not contiguous in x", si, -1});
    }
    if (!rep.ok()) return rep;

    int ev_lo = std::max(0, range_lo - 1);
    int ev_hi = std::min((int)f.events.size() - 1, range_hi);
    for (int ei = ev_lo; ei <= ev_hi; ++ei) {
        const Event& e = f.events[ei];
        const Slice& L = f.slices[ei];
        const Slice& R = f.slices[ei + 1];
        const Rational& x = L.x_right;

        // strand-set bookkeeping and lift continuity for strands on both sides
        std::set<StrandId> ls, rs;
        for (const auto& a : L.arcs) ls.insert(a.id);
        for (const auto& a : R.arcs) rs.insert(a.id);
        for (StrandId id : ls) {
            if (rs.count(id)) {
                if (!(L.find(id)->theta_right == R.find(id)->theta_left))
                    rep.violations.push_back({"strand " + std::to_string(id) + " lift jumps at boundary", -1, ei});
            } else if (!(e.kind == EventKind::death && e.involves(id))) {
                rep.violations.push_back({"strand " + std::to_string(id) + " vanishes without a death", -1, ei});
            }
        }
        for (StrandId id : rs) {
            if (!ls.count(id) && !(e.kind == EventKind::birth && e.involves(id)))
                rep.violations.push_back({"strand " + std::to_string(id) + " appears without a birth", -1, ei});
        }

        auto lco = edge_coincidences(L, true);
        auto rco = edge_coincidences(R, false);
        std::pair<StrandId, StrandId> ev{e.a, e.b};

        switch (e.kind) {
            case EventKind::crossing: {
                if (!ls.count(e.a) || !ls.count(e.b) || !rs.count(e.a) || !rs.count(e.b)) {
                    rep.violations.push_back({"crossing strands must exist on both sides", -1, ei});
                    break;
                }
                if (lco != std::vector<std::pair<StrandId, StrandId>>{ev} ||
                    rco != std::vector<std::pair<StrandId, StrandId>>{ev}) {
                    rep.violations.push_back({"crossing fiber coincidences differ from the event pair", -1, ei});
                    break;
                }
                // transversality: the mod-1 difference changes sign through the fiber
                Rational dl = L.find(e.a)->theta_left - L.find(e.b)->theta_left;
                Rational dx = L.find(e.a)->theta_right - L.find(e.b)->theta_right;  // integer k
                Rational dr = R.find(e.a)->theta_right - R.find(e.b)->theta_right;
                int sl = (dl - dx).sign(), sr = (dr - dx).sign();
                if (sl == 0 || sr == 0 || sl == sr)
                    rep.violations.push_back({"crossing not transverse (no sign change)", -1, ei});
                break;
            }
            case EventKind::birth: {
                if (ls.count(e.a) || ls.count(e.b) || !rs.count(e.a) || !rs.count(e.b)) {
                    rep.violations.push_back({"birth strands must exist only on the right", -1, ei});
                    break;
                }
                if (!(R.find(e.a)->theta_left == R.find(e.b)->theta_left))
                    rep.violations.push_back({"birth pair lifts not equal at the cusp", -1, ei});
                if (!lco.empty() || rco != std::vector<std::pair<StrandId, StrandId>>{ev})
                    rep.violations.push_back({"extra coincidence at birth fiber", -1, ei});
                break;
            }
            case EventKind::death: {
                if (!ls.count(e.a) || !ls.count(e.b) || rs.count(e.a) || rs.count(e.b)) {
                    rep.violations.push_back({"death strands must exist only on the left", -1, ei});
                    break;
                }
                Rational d = L.find(e.a)->theta_right - L.find(e.b)->theta_right;
                if (!d.is_integer())
                    rep.violations.push_back({"death pair not coincident mod 1 at the cusp", -1, ei});
                if (lco != std::vector<std::pair<StrandId, StrandId>>{ev} || !rco.empty())
                    rep.violations.push_back({"extra coincidence at death fiber", -1, ei});
                break;
            }
            case EventKind::none: {
                if (ls != rs) rep.violations.push_back({"strand set changes across a none boundary", -1, ei});
                if (!lco.empty() || !rco.empty())
                    rep.violations.push_back({"coincidence at a none boundary", -1, ei});
                break;
            }
        }
    }
    return rep;
}

std::string ValidationReport::summary() const {
    std::string s;
    for (const auto& v : violations) {
        s += v.what;
        if (v.slice >= 0) s += " [slice " + std::to_string(v.slice) + "]";
        if (v.event >= 0) s += " [event " + std::to_string(v.event) + "]";
        s += "\n";
    }
    return s;
}

// ---------------------------------------------------------------------------
// Maslov potentials

int MaslovAssignment::at(StrandId s) const {
    auto it = mu.find(s);
    if (it == mu.end()) throw Error("MaslovInconsistent", "no potential for strand " + std::to_string(s));
    return it->second;
}

MaslovAssignment solve_cusp_parity(const std::vector<std::pair<StrandId, StrandId>>& cusps,
                                   const std::vector<StrandId>& strands) {
    // adjacency with parity-1 edges; BFS 2-coloring from the least id of each component
    std::map<StrandId, std::vector<StrandId>> adj;
    for (auto& c : cusps) {
        adj[c.first].push_back(c.second);
        adj[c.second].push_back(c.first);
    }
    MaslovAssignment m;
    for (StrandId root : strands) {
        if (m.mu.count(root)) continue;
        m.mu[root] = 0;
        std::vector<StrandId> stack{root};
        while (!stack.empty()) {
            StrandId u = stack.back();
            stack.pop_back();
            for (StrandId v : adj[u]) {
                auto it = m.mu.find(v);
                if (it == m.mu.end()) {
                    m.mu[v] = m.mu[u] ^ 1;
                    stack.push_back(v);
                } else if (it->second != (m.mu[u] ^ 1)) {
                    throw Error("Inconsistent", "odd cusp cycle through strand " + std::to_string(v));
                }
            }
        }
    }
    return m;
}

MaslovAssignment compute_maslov(const FrontDiagram& f) {
    std::vector<std::pair<StrandId, StrandId>> cusps;
    for (const auto& e : f.events)
        if (e.is_fold()) cusps.push_back({e.a, e.b});
    return solve_cusp_parity(cusps, f.all_strand_ids());
}

// ---------------------------------------------------------------------------
// covers

namespace {

FrontDiagram scale_lifts(const FrontDiagram& f, int k) {
    FrontDiagram g = f;
    Rational kk(k);
    for (auto& s : g.slices)
        for (auto& a : s.arcs) {
            a.theta_left *= kk;
            a.theta_right *= kk;
        }
    return g;
}

struct Coincidence {
    int slice;
    Rational x;
    StrandId a, b;
};

// mod-1 meets of arc pairs strictly inside slices, plus boundary-fiber
// coincidences not accounted for by the boundary's own event
void scan_coincidences(const FrontDiagram& f, std::vector<Coincidence>& interior,
                       std::vector<Coincidence>& boundary, bool& tangency) {
    interior.clear();
    boundary.clear();
    tangency = false;
    for (int si = 0; si < (int)f.slices.size(); ++si) {
        const Slice& s = f.slices[si];
        for (size_t i = 0; i < s.arcs.size(); ++i) {
            for (size_t j = i + 1; j < s.arcs.size(); ++j) {
                Rational dl = s.arcs[i].theta_left - s.arcs[j].theta_left;
                Rational dr = s.arcs[i].theta_right - s.arcs[j].theta_right;
                if (dl == dr) {
                    if (dl.is_integer()) tangency = true;
                    continue;
                }
                Rational lo = dl < dr ? dl : dr, hi = dl < dr ? dr : dl;
                for (BigInt m = lo.floor() + BigInt(1); Rational(m, BigInt(1)) < hi; m = m + BigInt(1)) {
                    Rational rm(m, BigInt(1));
                    if (!(lo < rm)) continue;
                    Rational t = (rm - dl) / (dr - dl);
                    Rational x = s.x_left + t * (s.x_right - s.x_left);
                    interior.push_back({si, x, s.arcs[i].id, s.arcs[j].id});
                }
                // an edge coincidence is fine only when it is the edge
                // event's own pair
                StrandId lo_id = std::min(s.arcs[i].id, s.arcs[j].id);
                StrandId hi_id = std::max(s.arcs[i].id, s.arcs[j].id);
                if (dr.is_integer() && si < (int)f.events.size()) {
                    const Event& e = f.events[si];
                    if (!(e.kind != EventKind::none && e.a == lo_id && e.b == hi_id))
                        boundary.push_back({si, s.x_right, s.arcs[i].id, s.arcs[j].id});
                }
                if (dl.is_integer() && si > 0) {
                    const Event& e = f.events[si - 1];
                    if (!(e.kind != EventKind::none && e.a == lo_id && e.b == hi_id))
                        boundary.push_back({si, s.x_left, s.arcs[i].id, s.arcs[j].id});
                }
            }
        }
    }
}

}  // namespace

FrontDiagram cover(const FrontDiagram& f, int k) {
    if (k <= 0) throw Error("BadParams", "cover index must be positive");
    {
        auto rep = validate_front(f);
        if (!rep.ok()) throw Error("BadParams", "cover: input front invalid: " + rep.summary());
    }
    if (k == 1) return f;

    FrontDiagram base = f;
    for (int fuel = 0; fuel < 32; ++fuel) {
        FrontDiagram g = scale_lifts(base, k);
        std::vector<Coincidence> meets, edge_defects;
        bool tangency = false;
        scan_coincidences(g, meets, edge_defects, tangency);
        if (tangency) throw Error("DegenerateCover", "rescaling produces a tangency; perturb the input");

        if (!edge_defects.empty()) {
            // a new meet landed exactly on an existing boundary: shift a
            // through-strand of the pair across that boundary by a small kink
            const Coincidence& d = edge_defects.front();
            int bi = d.x == g.slices[d.slice].x_right ? d.slice : d.slice - 1;
            if (bi < 0 || bi + 1 >= (int)base.slices.size())
                throw Error("DegenerateCover", "boundary coincidence at the front's edge");
            StrandId u = d.a;
            if (base.events[bi].involves(u) || !base.slices[bi + 1].has(u)) u = d.b;
            if (base.events[bi].involves(u) || !base.slices[bi].has(u) || !base.slices[bi + 1].has(u))
                throw Error("DegenerateCover", "no through-strand to stagger at a boundary");
            const Slice& sl = base.slices[bi];
            const Slice& sr = base.slices[bi + 1];
            Rational xstar = sl.x_right;
            Rational xb1 = Rational::simplest_between((sl.x_left + xstar) / Rational(2), xstar);
            Rational xb2 = Rational::simplest_between(xstar, (xstar + sr.x_right) / Rational(2));
            Rational gap(1, 2);
            for (const Rational& probe : {xstar}) {
                for (size_t i = 0; i < sl.arcs.size(); ++i)
                    for (size_t j = 0; j < sl.arcs.size(); ++j) {
                        if (i == j) continue;
                        Rational dd = (sl.arcs[i].theta_at(sl.x_left, sl.x_right, probe) -
                                       sl.arcs[j].theta_at(sl.x_left, sl.x_right, probe)) *
                                      Rational(k);
                        Rational fr = dd.frac();
                        if (!fr.is_zero()) gap = min(gap, min(fr, Rational(1) - fr));
                    }
            }
            Rational eta = Rational::simplest_between(Rational(0), gap / Rational(4)) / Rational(k);
            Slice l1 = sl, l2 = sl, r1 = sr, r2 = sr;
            l1.x_right = xb1;
            l2.x_left = xb1;
            for (auto& arc : l1.arcs) arc.theta_right = sl.find(arc.id)->theta_at(sl.x_left, sl.x_right, xb1);
            for (auto& arc : l2.arcs) arc.theta_left = sl.find(arc.id)->theta_at(sl.x_left, sl.x_right, xb1);
            r1.x_right = xb2;
            r2.x_left = xb2;
            for (auto& arc : r1.arcs) arc.theta_right = sr.find(arc.id)->theta_at(sr.x_left, sr.x_right, xb2);
            for (auto& arc : r2.arcs) arc.theta_left = sr.find(arc.id)->theta_at(sr.x_left, sr.x_right, xb2);
            l2.find(u)->theta_right += eta;
            r1.find(u)->theta_left += eta;
            FrontDiagram bent;
            bent.slices.assign(base.slices.begin(), base.slices.begin() + bi);
            bent.slices.push_back(l1);
            bent.slices.push_back(l2);
            bent.slices.push_back(r1);
            bent.slices.push_back(r2);
            bent.slices.insert(bent.slices.end(), base.slices.begin() + bi + 2, base.slices.end());
            bent.events.assign(base.events.begin(), base.events.begin() + bi);
            bent.events.push_back({EventKind::none, -1, -1});
            bent.events.push_back(base.events[bi]);
            bent.events.push_back({EventKind::none, -1, -1});
            bent.events.insert(bent.events.end(), base.events.begin() + bi + 1, base.events.end());
            if (!validate_front(bent).ok())
                throw Error("DegenerateCover", "could not stagger a boundary coincidence");
            base = bent;
            continue;
        }

        // group by (slice, fiber); detect collisions at a fiber
        std::map<std::pair<int, std::string>, std::vector<Coincidence>> by_fiber;
        for (auto& c : meets) by_fiber[{c.slice, c.x.str()}].push_back(c);
        const Coincidence* conflicted = nullptr;
        for (auto& [key, v] : by_fiber)
            if (v.size() > 1) conflicted = &v[1];
        if (!conflicted) {
            // subdivide slices at the meet fibers, inserting crossing events
            FrontDiagram out;
            out.slices.reserve(g.slices.size() + meets.size());
            for (int si = 0; si < (int)g.slices.size(); ++si) {
                std::vector<Coincidence> here;
                for (auto& c : meets)
                    if (c.slice == si) here.push_back(c);
                std::sort(here.begin(), here.end(),
                          [](const Coincidence& a, const Coincidence& b) { return a.x < b.x; });
                Slice cur = g.slices[si];
                for (auto& c : here) {
                    Slice left = cur, right = cur;
                    left.x_right = c.x;
                    right.x_left = c.x;
                    for (auto& arc : left.arcs) arc.theta_right = cur.find(arc.id)->theta_at(cur.x_left, cur.x_right, c.x);
                    for (auto& arc : right.arcs) arc.theta_left = right.find(arc.id)->theta_at(cur.x_left, cur.x_right, c.x);
                    out.slices.push_back(left);
                    out.events.push_back({EventKind::crossing, std::min(c.a, c.b), std::max(c.a, c.b)});
                    cur = right;
                }
                out.slices.push_back(cur);
                if (si < (int)g.events.size()) out.events.push_back(g.events[si]);
            }
            auto rep = validate_front(out);
            if (!rep.ok()) throw Error("DegenerateCover", "cover output invalid: " + rep.summary());
            return out;
        }

        // stagger: kink one strand of the spare coincidence shortly before the
        // conflict fiber; the meet of the bent pair moves off that fiber while
        // every other meet stays strictly inside a subdivided slice
        Rational xs = conflicted->x;
        int si = conflicted->slice;
        const Slice& s = base.slices[si];
        Rational xb = Rational::simplest_between(s.x_left, xs);
        // perturbation must stay below every non-vanishing scaled gap at the
        // kink fiber and at the slice ends
        Rational gap(1, 2);
        for (const Rational& probe : {xb, s.x_left, s.x_right, xs}) {
            for (size_t i = 0; i < s.arcs.size(); ++i)
                for (size_t j = 0; j < s.arcs.size(); ++j) {
                    if (i == j) continue;
                    Rational d = (s.arcs[i].theta_at(s.x_left, s.x_right, probe) -
                                  s.arcs[j].theta_at(s.x_left, s.x_right, probe)) *
                                 Rational(k);
                    Rational fr = d.frac();
                    if (!fr.is_zero()) gap = min(gap, min(fr, Rational(1) - fr));
                }
        }
        Rational eta = Rational::simplest_between(Rational(0), gap / Rational(4)) / Rational(k);
        if ((fuel & 1) == 0) eta = -eta;  // alternate the bend direction between attempts
        Slice left = s, right = s;
        left.x_right = xb;
        right.x_left = xb;
        for (auto& arc : left.arcs) arc.theta_right = s.find(arc.id)->theta_at(s.x_left, s.x_right, xb);
        for (auto& arc : right.arcs) arc.theta_left = s.find(arc.id)->theta_at(s.x_left, s.x_right, xb);
        left.find(conflicted->a)->theta_right += eta;
        right.find(conflicted->a)->theta_left += eta;
        FrontDiagram bent;
        bent.slices.assign(base.slices.begin(), base.slices.begin() + si);
        bent.slices.push_back(left);
        bent.slices.push_back(right);
        bent.slices.insert(bent.slices.end(), base.slices.begin() + si + 1, base.slices.end());
        bent.events.assign(base.events.begin(), base.events.begin() + si);
        bent.events.push_back({EventKind::none, -1, -1});
        bent.events.insert(bent.events.end(), base.events.begin() + si, base.events.end());
        if (!validate_front(bent).ok()) throw Error("DegenerateCover", "could not stagger coincidences");
        base = bent;
    }
    throw Error("DegenerateCover", "coincidence staggering did not converge");
}

// ---------------------------------------------------------------------------

CoverInterval CoverInterval::from_sweep(const Rational& base, const Rational& sweep) {
    CoverInterval iv;
    if (sweep.sign() >= 0) {
        iv.lo = base;
        iv.hi = base + sweep;
        iv.orientation = 1;
    } else {
        iv.lo = base + sweep;
        iv.hi = base;
        iv.orientation = -1;
    }
    return iv;
}

int cover_linking(const CoverInterval& i1, const CoverInterval& i2) {
    const Rational &a = i1.lo, &b = i1.hi, &c = i2.lo, &d = i2.hi;
    if (a == c || a == d || b == c || b == d || a == b || c == d)
        throw Error("DegenerateEndpoints", "cover_linking: shared endpoint");
    int inside = 0;
    if (a < c && c < b) ++inside;
    if (a < d && d < b) ++inside;
    return inside == 1 ? 1 : 0;
}

// ---------------------------------------------------------------------------
// built-in fronts

namespace {

Rational rat(long long n, long long d = 1) { return Rational(n, d); }

FrontDiagram make_unknot_area_1() {
    FrontDiagram f;
    f.slices.push_back({rat(0), rat(1), {}});
    f.slices.push_back({rat(1), rat(2), {{0, rat(0), rat(0)}, {1, rat(0), rat(1)}}});
    f.slices.push_back({rat(2), rat(3), {}});
    f.events.push_back({EventKind::birth, 0, 1});
    f.events.push_back({EventKind::death, 0, 1});
    return f;
}

FrontDiagram make_flying_saucer() {
    FrontDiagram f;
    f.slices.push_back({rat(0), rat(1), {}});
    f.slices.push_back({rat(1), rat(2), {{0, rat(0), rat(0)}, {1, rat(0), rat(1, 5)}}});
    f.slices.push_back({rat(2), rat(3), {{0, rat(0), rat(0)}, {1, rat(1, 5), rat(0)}}});
    f.slices.push_back({rat(3), rat(4), {}});
    f.events.push_back({EventKind::birth, 0, 1});
    f.events.push_back({EventKind::none, -1, -1});
    f.events.push_back({EventKind::death, 0, 1});
    return f;
}

FrontDiagram make_stacked_saucers(long long m) {
    if (m < 1) throw Error("BadParams", "stacked_saucers: need m >= 1");
    FrontDiagram f;
    Rational apex_x(m + 1);
    auto base = [&](long long j) { return Rational(j, m); };
    auto bump = [&](long long j) { return Rational(j, m) + Rational(1, 5 * m); };
    // slice boundaries: births at 1..m, apex kink at m+1, deaths at m+2..2m+1
    std::vector<Rational> bounds;
    bounds.push_back(rat(0));
    for (long long j = 0; j <= m; ++j) bounds.push_back(rat(1 + j));
    for (long long j = 0; j < m; ++j) bounds.push_back(rat(m + 2 + j));
    bounds.push_back(rat(2 * m + 2));
    auto b_theta = [&](long long j, const Rational& x) -> Rational {
        // bump strand of saucer j: rises [1+j, m+1], falls [m+1, m+2+j]
        Rational bx(1 + j), ax(m + 1), dx(m + 2 + j);
        if (x <= ax) return base(j) + (x - bx) / (ax - bx) * (bump(j) - base(j));
        return base(j) + (dx - x) / (dx - ax) * (bump(j) - base(j));
    };
    for (size_t bi = 0; bi + 1 < bounds.size(); ++bi) {
        Slice s;
        s.x_left = bounds[bi];
        s.x_right = bounds[bi + 1];
        for (long long j = 0; j < m; ++j) {
            Rational born(1 + j), dead(m + 2 + j);
            if (s.x_left >= born && s.x_right <= dead) {
                s.arcs.push_back({(StrandId)(2 * j), base(j), base(j)});
                s.arcs.push_back({(StrandId)(2 * j + 1), b_theta(j, s.x_left), b_theta(j, s.x_right)});
            }
        }
        std::sort(s.arcs.begin(), s.arcs.end(), [](const StrandArc& a, const StrandArc& b) { return a.id < b.id; });
        f.slices.push_back(s);
    }
    for (long long j = 0; j < m; ++j) f.events.push_back({EventKind::birth, (StrandId)(2 * j), (StrandId)(2 * j + 1)});
    f.events.push_back({EventKind::none, -1, -1});
    for (long long j = 0; j < m; ++j) f.events.push_back({EventKind::death, (StrandId)(2 * j), (StrandId)(2 * j + 1)});
    return f;
}

// Two interleaved eyes: strands a=0,b=1 (eye at angle 0) and c=2,d=3 (eye at
// 1/5); b sweeps over c and d, producing four inter-component crossings.
FrontDiagram make_hopf_pair() {
    // strand paths as (x, lift) breakpoints
    using P = std::pair<Rational, Rational>;
    auto path = [](std::initializer_list<P> pts) { return std::vector<P>(pts); };
    std::map<StrandId, std::vector<P>> tracks;
    tracks[0] = path({{rat(1), rat(0)}, {rat(10), rat(0)}});
    tracks[1] = path({{rat(1), rat(0)},
                      {rat(5), rat(2, 5)},
                      {rat(6), rat(2, 5)},
                      {rat(10), rat(0)}});
    tracks[2] = path({{rat(2), rat(1, 5)}, {rat(11), rat(1, 5)}});
    tracks[3] = path({{rat(2), rat(1, 5)},
                      {rat(4), rat(3, 10)},
                      {rat(7), rat(3, 8)},
                      {rat(11), rat(1, 5)}});
    auto value = [&](StrandId id, const Rational& x) -> Rational {
        const auto& t = tracks[id];
        for (size_t i = 0; i + 1 < t.size(); ++i)
            if (t[i].first <= x && x <= t[i + 1].first) {
                if (t[i + 1].first == t[i].first) return t[i].second;
                return t[i].second + (x - t[i].first) / (t[i + 1].first - t[i].first) * (t[i + 1].second - t[i].second);
            }
        return t.back().second;
    };
    struct Ev {
        Rational x;
        Event e;
    };
    std::vector<Ev> evs = {
        {rat(1), {EventKind::birth, 0, 1}},
        {rat(2), {EventKind::birth, 2, 3}},
        {rat(3), {EventKind::crossing, 1, 2}},
        {rat(4), {EventKind::crossing, 1, 3}},
        {rat(5), {EventKind::none, -1, -1}},
        {rat(6), {EventKind::none, -1, -1}},
        {rat(32, 5), {EventKind::crossing, 1, 3}},
        {rat(7), {EventKind::none, -1, -1}},
        {rat(8), {EventKind::crossing, 1, 2}},
        {rat(10), {EventKind::death, 0, 1}},
        {rat(11), {EventKind::death, 2, 3}},
    };
    std::map<StrandId, std::pair<Rational, Rational>> life;
    life[0] = {rat(1), rat(10)};
    life[1] = {rat(1), rat(10)};
    life[2] = {rat(2), rat(11)};
    life[3] = {rat(2), rat(11)};

    FrontDiagram f;
    std::vector<Rational> bounds{rat(0)};
    for (auto& ev : evs) bounds.push_back(ev.x);
    bounds.push_back(rat(12));
    for (size_t i = 0; i + 1 < bounds.size(); ++i) {
        Slice s;
        s.x_left = bounds[i];
        s.x_right = bounds[i + 1];
        for (auto& [id, span] : life)
            if (span.first <= s.x_left && s.x_right <= span.second)
                s.arcs.push_back({id, value(id, s.x_left), value(id, s.x_right)});
        std::sort(s.arcs.begin(), s.arcs.end(), [](const StrandArc& a, const StrandArc& b) { return a.id < b.id; });
        f.slices.push_back(s);
    }
    for (auto& ev : evs) f.events.push_back(ev.e);
    return f;
}

}  // namespace

FrontDiagram builtin_front(const std::string& name, long long param) {
    FrontDiagram f;
    if (name == "unknot_area_1") {
        f = make_unknot_area_1();
    } else if (name == "unknot_area_k") {
        if (param < 1) throw Error("BadParams", "unknot_area_k: need k >= 1");
        f = cover(make_unknot_area_1(), (int)param);
    } else if (name == "flying_saucer") {
        f = make_flying_saucer();
    } else if (name == "stacked_saucers") {
        f = make_stacked_saucers(param == 0 ? 2 : param);
    } else if (name == "hopf_pair") {
        f = make_hopf_pair();
    } else {
        throw Error("UnknownName", "no builtin front named '" + name + "'");
    }
    auto rep = validate_front(f);
    if (!rep.ok()) throw Error("BadParams", "builtin '" + name + "' failed validation: " + rep.summary());
    return f;
}

// ---------------------------------------------------------------------------
// serialization (cylfront/1)

std::string serialize_front(const FrontDiagram& f) {
    nlohmann::ordered_json j;
    j["format"] = "cylfront/1";
    j["slices"] = nlohmann::ordered_json::array();
    for (const auto& s : f.slices) {
        nlohmann::ordered_json js;
        js["x_left"] = s.x_left.str();
        js["x_right"] = s.x_right.str();
        js["arcs"] = nlohmann::ordered_json::array();
        for (const auto& a : s.arcs) {
            nlohmann::ordered_json ja;
            ja["id"] = a.id;
            ja["theta_left"] = a.theta_left.str();
            ja["theta_right"] = a.theta_right.str();
            js["arcs"].push_back(ja);
        }
        j["slices"].push_back(js);
    }
    j["events"] = nlohmann::ordered_json::array();
    for (const auto& e : f.events) {
        nlohmann::ordered_json je;
        je["kind"] = event_kind_name(e.kind);
        if (e.kind == EventKind::none)
            je["strands"] = nlohmann::ordered_json::array();
        else
            je["strands"] = {e.a, e.b};
        j["events"].push_back(je);
    }
    return j.dump(2) + "\n";
}

FrontDiagram parse_front(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& ex) {
        throw Error("ParseError", std::string("bad JSON: ") + ex.what());
    }
    auto rational_field = [](const nlohmann::json& o, const char* key) -> Rational {
        if (!o.contains(key)) throw Error("ParseError", std::string("missing field '") + key + "'");
        if (!o[key].is_string()) throw Error("ParseError", std::string("field '") + key + "' must be a string");
        try {
            return Rational::parse(o[key].get<std::string>(), /*strict=*/true);
        } catch (const std::exception& ex) {
            throw Error("ParseError", std::string("field '") + key + "': " + ex.what());
        }
    };
    if (!j.contains("format") || j["format"] != "cylfront/1") throw Error("ParseError", "missing or unknown format");
    if (!j.contains("slices")) throw Error("ParseError", "missing 'slices'");
    if (!j.contains("events")) throw Error("ParseError", "missing 'events'");
    FrontDiagram f;
    for (const auto& js : j["slices"]) {
        Slice s;
        s.x_left = rational_field(js, "x_left");
        s.x_right = rational_field(js, "x_right");
        if (js.contains("arcs"))
            for (const auto& ja : js["arcs"]) {
                StrandArc a;
                if (!ja.contains("id") || !ja["id"].is_number_integer())
                    throw Error("ParseError", "arc missing integer 'id'");
                a.id = ja["id"].get<int>();
                a.theta_left = rational_field(ja, "theta_left");
                a.theta_right = rational_field(ja, "theta_right");
                s.arcs.push_back(a);
            }
        f.slices.push_back(s);
    }
    for (const auto& je : j["events"]) {
        if (!je.contains("kind")) throw Error("ParseError", "event missing 'kind'");
        std::string k = je["kind"].get<std::string>();
        Event e;
        if (k == "crossing")
            e.kind = EventKind::crossing;
        else if (k == "birth")
            e.kind = EventKind::birth;
        else if (k == "death")
            e.kind = EventKind::death;
        else if (k == "none")
            e.kind = EventKind::none;
        else
            throw Error("ParseError", "unknown event kind '" + k + "'");
        if (e.kind != EventKind::none) {
            if (!je.contains("strands") || !je["strands"].is_array() || je["strands"].size() != 2)
                throw Error("ParseError", "event needs two strands");
            e.a = je["strands"][0].get<int>();
            e.b = je["strands"][1].get<int>();
            if (e.a > e.b) std::swap(e.a, e.b);
        }
        f.events.push_back(e);
    }
    return f;
}

// ---------------------------------------------------------------------------
// canonical form

NormalizeResult normalize_front_full(const FrontDiagram& f) {
    NormalizeResult out;
    FrontDiagram& g = out.front;
    g = f;
    std::vector<int> slice_of(f.slices.size());
    std::vector<int> event_of(f.events.size());
    for (size_t i = 0; i < slice_of.size(); ++i) slice_of[i] = (int)i;
    for (size_t i = 0; i < event_of.size(); ++i) event_of[i] = (int)i;
    // merge none-boundaries where every strand continues collinearly
    for (int ei = (int)g.events.size() - 1; ei >= 0; --ei) {
        if (g.events[ei].kind != EventKind::none) continue;
        Slice& L = g.slices[ei];
        Slice& R = g.slices[ei + 1];
        bool collinear = true;
        for (const auto& a : L.arcs) {
            const StrandArc* r = R.find(a.id);
            if (!r) {
                collinear = false;
                break;
            }
            Rational sl = (a.theta_right - a.theta_left) / (L.x_right - L.x_left);
            Rational sr = (r->theta_right - r->theta_left) / (R.x_right - R.x_left);
            if (!(sl == sr)) {
                collinear = false;
                break;
            }
        }
        if (!collinear) continue;
        Slice merged;
        merged.x_left = L.x_left;
        merged.x_right = R.x_right;
        for (const auto& a : L.arcs) merged.arcs.push_back({a.id, a.theta_left, R.find(a.id)->theta_right});
        g.slices[ei] = merged;
        g.slices.erase(g.slices.begin() + ei + 1);
        g.events.erase(g.events.begin() + ei);
    }
    // match surviving events in order (merges only ever remove nones, and
    // pairings agree across none boundaries, so none ambiguity is harmless)
    {
        std::vector<int> em(f.events.size(), -1);
        int gi = 0;
        for (size_t i = 0; i < f.events.size(); ++i) {
            if (gi < (int)g.events.size() && f.events[i] == g.events[gi]) {
                // ambiguous only between identical adjacent none events, which
                // is harmless for transport purposes
                em[i] = gi;
                ++gi;
            }
        }
        event_of = em;
        std::vector<int> sm(f.slices.size());
        int cur = 0;
        sm[0] = 0;
        for (size_t i = 0; i < f.events.size(); ++i) {
            if (event_of[i] >= 0) cur = event_of[i] + 1;
            sm[i + 1] = cur;
        }
        slice_of = sm;
    }
    // slice boundaries to consecutive integers
    for (int si = 0; si < (int)g.slices.size(); ++si) {
        g.slices[si].x_left = Rational(si);
        g.slices[si].x_right = Rational(si + 1);
    }
    // translate lifts so the least lift of the first nonempty slice lands in [0,1)
    for (const auto& s : g.slices) {
        if (s.arcs.empty()) continue;
        Rational m = s.arcs[0].theta_left;
        for (const auto& a : s.arcs) m = min(m, a.theta_left);
        Rational shift(m.floor(), BigInt(1));
        if (!shift.is_zero())
            for (auto& t : g.slices)
                for (auto& a : t.arcs) {
                    a.theta_left -= shift;
                    a.theta_right -= shift;
                }
        break;
    }
    // renumber strands by first appearance (slice index, then lift at entry)
    struct Entry {
        int slice;
        Rational theta;
        StrandId old_id;
    };
    std::vector<Entry> entries;
    std::set<StrandId> seen;
    for (int si = 0; si < (int)g.slices.size(); ++si)
        for (const auto& a : g.slices[si].arcs)
            if (seen.insert(a.id).second) entries.push_back({si, a.theta_left, a.id});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.slice != b.slice) return a.slice < b.slice;
        if (a.theta != b.theta) return a.theta < b.theta;
        return a.old_id < b.old_id;
    });
    std::map<StrandId, StrandId> ren;
    for (int i = 0; i < (int)entries.size(); ++i) ren[entries[i].old_id] = i;
    for (auto& s : g.slices) {
        for (auto& a : s.arcs) a.id = ren[a.id];
        std::sort(s.arcs.begin(), s.arcs.end(), [](const StrandArc& a, const StrandArc& b) { return a.id < b.id; });
    }
    for (auto& e : g.events)
        if (e.kind != EventKind::none) {
            e.a = ren[e.a];
            e.b = ren[e.b];
            if (e.a > e.b) std::swap(e.a, e.b);
        }
    out.slice_map = slice_of;
    out.event_map = event_of;
    out.rename = ren;
    return out;
}

FrontDiagram normalize_front(const FrontDiagram& f) { return normalize_front_full(f).front; }

}  // namespace cylf
