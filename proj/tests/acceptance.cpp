// Acceptance suite: one criterion per section, each printing a PASS/FAIL
// line with its runtime. The binary exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cylf/certify.hpp"
#include "cylf/corpus.hpp"
#include "cylf/error.hpp"
#include "cylf/moves.hpp"
#include "cylf/quiver.hpp"
#include "cylf/rulings.hpp"
#include "oracle.hpp"

using namespace cylf;

namespace {

int failures = 0;

struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<bool(std::string&)> run;
};

void run_criterion(const Criterion& c) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = c.run(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        ok = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) {
        ok = false;
        detail += " [over time budget]";
    }
    std::printf("%s %s (%.2fs)%s%s\n", c.name, ok ? "PASS" : "FAIL", secs, detail.empty() ? "" : " — ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::pair<long long, long long> counts(const FrontDiagram& f, const MaslovAssignment& mu) {
    return {(long long)enumerate_disk_rulings(f, mu).size(),
            (long long)enumerate_circular_rulings(f, mu).size()};
}

std::multiset<std::string> chi_multiset(const FrontDiagram& f, const MaslovAssignment& mu, RulingKind kind) {
    std::multiset<std::string> out;
    if (kind == RulingKind::disk)
        for (auto& r : enumerate_disk_rulings(f, mu)) out.insert(chi(f, r).str());
    else
        for (auto& r : enumerate_circular_rulings(f, mu)) out.insert(chi(f, r).str());
    return out;
}

int crossing_count(const FrontDiagram& f) {
    int n = 0;
    for (auto& e : f.events) n += e.kind == EventKind::crossing;
    return n;
}

// verified continuation bijection for one move application
bool bijection_ok(const FrontDiagram& f, const MaslovAssignment& mu, const MoveSpec& m, const MoveResult& res,
                  std::string& why) {
    for (RulingKind kind : {RulingKind::disk, RulingKind::circular}) {
        std::vector<RulingData> source, target;
        if (kind == RulingKind::disk) {
            for (auto& r : enumerate_disk_rulings(f, mu)) source.push_back(r);
            for (auto& r : enumerate_disk_rulings(res.front, res.mu)) target.push_back(r);
        } else {
            for (auto& r : enumerate_circular_rulings(f, mu)) source.push_back(r);
            for (auto& r : enumerate_circular_rulings(res.front, res.mu)) target.push_back(r);
        }
        if (source.size() != target.size()) {
            why = "count changed under " + m.text();
            return false;
        }
        std::set<size_t> hit;
        for (auto& r : source) {
            RulingData c;
            try {
                c = continue_ruling(f, mu, m, r, kind);
            } catch (const Error& e) {
                why = std::string("continuation failed: ") + e.what();
                return false;
            }
            if (!(chi(res.front, c) == chi(f, r))) {
                why = "chi not preserved by continuation";
                return false;
            }
            bool matched = false;
            for (size_t t = 0; t < target.size(); ++t) {
                if (target[t] == c) {
                    if (hit.count(t)) {
                        why = "continuation not injective";
                        return false;
                    }
                    hit.insert(t);
                    matched = true;
                }
            }
            if (!matched) {
                why = "continuation missing from the target enumeration";
                return false;
            }
        }
        if (hit.size() != source.size()) {
            why = "continuation not surjective";
            return false;
        }
    }
    return true;
}

// removes all strands outside `keep`, blanking their events
FrontDiagram extract_component(const FrontDiagram& f, const std::set<StrandId>& keep) {
    FrontDiagram g = f;
    for (auto& s : g.slices) {
        std::vector<StrandArc> arcs;
        for (auto& a : s.arcs)
            if (keep.count(a.id)) arcs.push_back(a);
        s.arcs = arcs;
    }
    for (auto& e : g.events)
        if (e.kind != EventKind::none && (!keep.count(e.a) || !keep.count(e.b))) e = {EventKind::none, -1, -1};
    return g;
}

uint64_t mix64(uint64_t& s) {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// ---------------------------------------------------------------------------

bool a1_unknot(std::string& detail) {
    FrontDiagram f = builtin_front("unknot_area_1");
    MaslovAssignment mu = compute_maslov(f);
    auto [d, c] = counts(f, mu);
    Certificate cert = nonsqueeze_certificate(f);
    detail = "disk=" + std::to_string(d) + " circular=" + std::to_string(c);
    return d == 1 && c == 0 && cert.inequality_violated;
}

bool a2_covers(std::string& detail) {
    for (int k : {2, 3}) {
        FrontDiagram f = builtin_front("unknot_area_k", k);
        MaslovAssignment mu = compute_maslov(f);
        auto [d, c] = counts(f, mu);
        Certificate cert = nonsqueeze_certificate(f);
        if (!(c == 0 && d >= 1 && cert.inequality_violated)) {
            detail = "k=" + std::to_string(k) + " disk=" + std::to_string(d) + " circular=" + std::to_string(c);
            return false;
        }
        // independent brute-force search over all pairings and flags
        if (cylf_oracle::oracle_count(f, mu, false) != d || cylf_oracle::oracle_count(f, mu, true) != c) {
            detail = "k=" + std::to_string(k) + ": brute-force search disagrees";
            return false;
        }
    }
    detail = "k=2,3 counts (>=1, 0), certificates violated, brute-force agreed";
    return true;
}

bool a3_move_invariance(std::string& detail) {
    int fronts_checked = 0;
    std::set<MoveKind> kinds_seen;
    uint64_t rng_state = 20240817;

    auto verify_step = [&](const FrontDiagram& f, const MaslovAssignment& mu, const MoveSpec& m,
                           const MoveResult& res, std::string& why) -> bool {
        auto before_d = chi_multiset(f, mu, RulingKind::disk);
        auto after_d = chi_multiset(res.front, res.mu, RulingKind::disk);
        if (before_d != after_d) {
            why = "disk chi multiset changed under " + m.text();
            return false;
        }
        auto before_c = chi_multiset(f, mu, RulingKind::circular);
        auto after_c = chi_multiset(res.front, res.mu, RulingKind::circular);
        if (before_c != after_c) {
            why = "circular chi multiset changed under " + m.text();
            return false;
        }
        return bijection_ok(f, mu, m, res, why);
    };

    std::vector<NamedFront> bases = standard_corpus();
    // add a couple of generated fronts with several rulings so the bijection
    // check has real content on random inputs
    for (uint64_t seed = 1, added = 0; added < 2 && seed < 500; ++seed) {
        try {
            FrontDiagram f = gen_small_front(seed);
            if (enumerate_disk_rulings(f).size() >= 2) {
                bases.push_back({"generated_" + std::to_string(seed), f});
                ++added;
            }
        } catch (const Error&) {
        }
    }
    for (auto& nf : bases) {
        FrontDiagram cur = nf.front;
        MaslovAssignment mu = compute_maslov(cur);
        ++fronts_checked;
        for (int step = 0; step < 20; ++step) {
            auto avail = available_moves(cur, mu);
            if (avail.empty()) break;
            // uniform pick; skip moves that would push past 8 crossings
            size_t start = mix64(rng_state) % avail.size();
            bool applied = false;
            for (size_t probe = 0; probe < avail.size(); ++probe) {
                const MoveSpec& m = avail[(start + probe) % avail.size()];
                MoveResult res = apply_move(cur, mu, m);
                if (crossing_count(res.front) > 8) continue;
                std::string why;
                if (!verify_step(cur, mu, m, res, why)) {
                    detail = nf.name + " step " + std::to_string(step) + ": " + why;
                    return false;
                }
                kinds_seen.insert(m.kind);
                cur = std::move(res.front);
                mu = std::move(res.mu);
                ++fronts_checked;
                applied = true;
                break;
            }
            if (!applied) break;
        }
    }

    // make sure every bifurcation kind was exercised; drive any stragglers
    // on sites the corpus provides (removal moves need their insertion first)
    auto drive = [&](MoveKind want) -> bool {
        std::vector<std::pair<FrontDiagram, MaslovAssignment>> bases;
        for (auto& nf : standard_corpus()) bases.push_back({nf.front, compute_maslov(nf.front)});
        {
            FrontDiagram ov = overlay(nested_eyes(), nested_eyes(), Rational(1, 2));
            bases.push_back({ov, compute_maslov(ov)});
        }
        if (want == MoveKind::R2_out || want == MoveKind::R1_death) {
            MoveKind pre = want == MoveKind::R2_out ? MoveKind::R2_in : MoveKind::R1_birth;
            std::vector<std::pair<FrontDiagram, MaslovAssignment>> derived;
            for (auto& [f, mu] : bases) {
                for (auto& m : available_moves(f, mu)) {
                    if (m.kind != pre) continue;
                    MoveResult res = apply_move(f, mu, m);
                    derived.push_back({res.front, res.mu});
                    break;
                }
            }
            bases.insert(bases.end(), derived.begin(), derived.end());
        }
        for (auto& [f, mu] : bases) {
            for (auto& m : available_moves(f, mu)) {
                if (m.kind != want) continue;
                MoveResult res = apply_move(f, mu, m);
                if (crossing_count(res.front) > 8) continue;
                std::string why;
                if (!verify_step(f, mu, m, res, why)) return false;
                kinds_seen.insert(want);
                ++fronts_checked;
                return true;
            }
        }
        return false;
    };
    for (MoveKind k : {MoveKind::R1_birth, MoveKind::R1_death, MoveKind::R2_in, MoveKind::R2_out, MoveKind::R3,
                       MoveKind::XX_swap, MoveKind::XC_swap, MoveKind::CC_swap}) {
        if (!kinds_seen.count(k) && !drive(k)) {
            detail = std::string("no verified site for ") + move_kind_name(k);
            return false;
        }
    }
    detail = std::to_string(fronts_checked) + " fronts verified, all bifurcation kinds covered";
    return fronts_checked >= 100;
}

bool a4_expansion(std::string& detail) {
    int fronts = 0, multi = 0;
    long long total_disk = 0;
    Rational bound(3, 4);
    auto check_front = [&](const FrontDiagram& f, std::string& why) -> bool {
        for (auto& sl : f.slices)
            for (auto& a : sl.arcs) {
                Rational slope = (a.theta_right - a.theta_left) / (sl.x_right - sl.x_left);
                if (slope < Rational(0) || slope > bound) {
                    why = "slope out of range";
                    return false;
                }
            }
        if (f.slices.back().x_right - f.slices.front().x_left > bound) {
            why = "base too wide";
            return false;
        }
        MaslovAssignment mu = compute_maslov(f);
        auto dr = enumerate_disk_rulings(f, mu);
        auto cr = enumerate_circular_rulings(f, mu);
        // geometric smallness: slopes in [0, 1-eps] over width <= 1-eps makes
        // every ruling eps/4-short (here eps = 1/4)
        for (auto& r : dr)
            if (!is_eps_short(f, r, RulingKind::disk, Rational(1, 16))) {
                why = "a ruling is not 1/16-short despite the slope bound";
                return false;
            }
        for (auto& r : cr)
            if (!is_eps_short(f, r, RulingKind::circular, Rational(1, 16))) {
                why = "a circular ruling is not 1/16-short despite the slope bound";
                return false;
            }
        std::vector<CircularRuling> images;
        for (auto& r : dr) {
            CircularRuling c;
            try {
                c = expand_short(f, mu, r);
            } catch (const Error& e) {
                why = std::string("expansion failed: ") + e.what();
                return false;
            }
            for (auto& prev : images)
                if (prev == c) {
                    why = "expansion not injective";
                    return false;
                }
            bool in_target = false;
            for (auto& t : cr)
                if (t == c) in_target = true;
            if (!in_target) {
                why = "expansion image is not an enumerated circular ruling";
                return false;
            }
            images.push_back(c);
        }
        if (dr.size() > cr.size()) {
            why = "count_disk > count_circular";
            return false;
        }
        total_disk += (long long)dr.size();
        if (dr.size() >= 2) ++multi;
        return true;
    };
    std::string why;
    if (!check_front(leapfrog(), why)) {
        detail = "leapfrog: " + why;
        return false;
    }
    ++fronts;
    for (uint64_t seed = 1; fronts < 102 && seed < 2000; ++seed) {
        FrontDiagram f;
        try {
            f = gen_small_front(seed);
        } catch (const Error&) {
            continue;  // this seed found no layout; plenty more
        }
        if (!check_front(f, why)) {
            detail = "seed " + std::to_string(seed) + ": " + why;
            return false;
        }
        ++fronts;
    }
    detail = std::to_string(fronts) + " fronts, " + std::to_string(multi) +
             " with several rulings, total disk rulings " + std::to_string(total_disk);
    return fronts >= 101 && multi >= 10;
}

bool a5_quiver_roundtrip(std::string& detail) {
    uint64_t s = 424242;
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + (int)(mix64(s) % 6);
        unsigned p = std::vector<unsigned>{2, 3, 5}[mix64(s) % 3];
        BarMultiset expected;
        CyclicQuiverRep acc;
        acc.n = n;
        acc.p = p;
        acc.dims.assign(n, 0);
        for (int i = 0; i < n; ++i) acc.arrows.push_back(Matrix(0, 0, p));
        int total = 0;
        do {
            int len = 1 + (int)(mix64(s) % (uint64_t)(2 * n));
            if (total + len > 12) break;
            int start = (int)(mix64(s) % (uint64_t)n);
            acc = direct_sum(acc, make_bar(n, p, start, len));
            expected[BarClass{start, len, 0}]++;
            total += len;
        } while (mix64(s) % 4 != 0);
        CyclicQuiverRep conj = conjugate_random(acc, mix64(s));
        if (decompose_nilpotent_cyclic(conj) != expected) {
            detail = "trial " + std::to_string(trial) + " decomposition mismatch";
            return false;
        }
    }
    // exhaustive-orbit oracle on n <= 2, total dim <= 3 over F2
    auto all_matrices = [](int rows, int cols) {
        std::vector<Matrix> out;
        int cells = rows * cols;
        for (int mask = 0; mask < (1 << cells); ++mask) {
            Matrix m(rows, cols, 2);
            for (int i = 0; i < cells; ++i) m.a[i] = (mask >> i) & 1;
            out.push_back(m);
        }
        return out;
    };
    auto invertibles = [&](int d) {
        std::vector<Matrix> out;
        for (auto& m : all_matrices(d, d))
            if (d == 0 || m.rank() == d) out.push_back(m);
        return out;
    };
    for (int n : {1, 2}) {
        std::vector<std::vector<int>> dimses;
        if (n == 1)
            for (int d0 = 0; d0 <= 3; ++d0) dimses.push_back({d0});
        else
            for (int d0 = 0; d0 <= 3; ++d0)
                for (int d1 = 0; d0 + d1 <= 3; ++d1) dimses.push_back({d0, d1});
        for (auto& dims : dimses) {
            std::vector<CyclicQuiverRep> reps;
            if (n == 1) {
                for (auto& m : all_matrices(dims[0], dims[0])) {
                    CyclicQuiverRep r;
                    r.n = 1;
                    r.p = 2;
                    r.dims = dims;
                    r.arrows = {m};
                    if (is_nilpotent(r)) reps.push_back(r);
                }
            } else {
                for (auto& m0 : all_matrices(dims[1], dims[0]))
                    for (auto& m1 : all_matrices(dims[0], dims[1])) {
                        CyclicQuiverRep r;
                        r.n = 2;
                        r.p = 2;
                        r.dims = dims;
                        r.arrows = {m0, m1};
                        if (is_nilpotent(r)) reps.push_back(r);
                    }
            }
            auto canon = [&](const CyclicQuiverRep& r) {
                std::vector<unsigned> best;
                bool first = true;
                auto g0s = invertibles(r.dims[0]);
                auto g1s = invertibles(n == 2 ? r.dims[1] : r.dims[0]);
                for (auto& g0 : g0s)
                    for (auto& g1 : g1s) {
                        const Matrix& h0 = n == 2 ? g1 : g0;
                        std::vector<unsigned> key;
                        Matrix a0 = h0 * r.arrows[0] * g0.inverse();
                        key.insert(key.end(), a0.a.begin(), a0.a.end());
                        if (n == 2) {
                            Matrix a1 = g0 * r.arrows[1] * g1.inverse();
                            key.insert(key.end(), a1.a.begin(), a1.a.end());
                        }
                        if (first || key < best) {
                            best = key;
                            first = false;
                        }
                    }
                return best;
            };
            std::map<std::vector<unsigned>, std::set<std::string>> orbit_to_bars;
            for (auto& r : reps) orbit_to_bars[canon(r)].insert(bars_to_string(decompose_nilpotent_cyclic(r)));
            std::set<std::string> bags;
            for (auto& [orbit, bars] : orbit_to_bars) {
                if (bars.size() != 1 || !bags.insert(*bars.begin()).second) {
                    detail = "orbit oracle mismatch at n=" + std::to_string(n);
                    return false;
                }
            }
        }
    }
    detail = "500 conjugated bar sums + exhaustive tiny-orbit oracle";
    return true;
}

bool a6_periodic(std::string& detail) {
    uint64_t s = 606060;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + (int)(mix64(s) % 4);
        unsigned p = std::vector<unsigned>{2, 3, 5}[mix64(s) % 3];
        // assemble a complex from survivors (zero differential) and acyclic
        // doubles, then conjugate
        BarMultiset want;
        CyclicQuiverRep E, O;
        E.n = O.n = n;
        E.p = O.p = p;
        E.dims.assign(n, 0);
        O.dims.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            E.arrows.push_back(Matrix(0, 0, p));
            O.arrows.push_back(Matrix(0, 0, p));
        }
        std::vector<Matrix> d0, d1;
        for (int i = 0; i < n; ++i) {
            d0.push_back(Matrix(0, 0, p));
            d1.push_back(Matrix(0, 0, p));
        }
        auto add_piece = [&](const CyclicQuiverRep& be, const CyclicQuiverRep& bo, bool de_id, bool do_id) {
            CyclicQuiverRep E2 = direct_sum(E, be);
            CyclicQuiverRep O2 = direct_sum(O, bo);
            for (int i = 0; i < n; ++i) {
                Matrix nd0(O2.dims[i], E2.dims[i], p);
                for (int r = 0; r < O.dims[i]; ++r)
                    for (int c = 0; c < E.dims[i]; ++c) nd0.at(r, c) = d0[i].at(r, c);
                if (de_id)
                    for (int k = 0; k < be.dims[i]; ++k) nd0.at(O.dims[i] + k, E.dims[i] + k) = 1;
                Matrix nd1(E2.dims[i], O2.dims[i], p);
                for (int r = 0; r < E.dims[i]; ++r)
                    for (int c = 0; c < O.dims[i]; ++c) nd1.at(r, c) = d1[i].at(r, c);
                if (do_id)
                    for (int k = 0; k < bo.dims[i]; ++k) nd1.at(E.dims[i] + k, O.dims[i] + k) = 1;
                d0[i] = nd0;
                d1[i] = nd1;
            }
            E = E2;
            O = O2;
        };
        CyclicQuiverRep zero;
        zero.n = n;
        zero.p = p;
        zero.dims.assign(n, 0);
        for (int i = 0; i < n; ++i) zero.arrows.push_back(Matrix(0, 0, p));
        int pieces = 1 + (int)(mix64(s) % 4);
        for (int k = 0; k < pieces; ++k) {
            int len = 1 + (int)(mix64(s) % (uint64_t)(n + 2));
            int start = (int)(mix64(s) % (uint64_t)n);
            CyclicQuiverRep bar = make_bar(n, p, start, len);
            switch (mix64(s) % 4) {
                case 0:  // survives in even degree
                    add_piece(bar, zero, false, false);
                    want[BarClass{start, len, 0}]++;
                    break;
                case 1:  // survives in odd degree
                    add_piece(zero, bar, false, false);
                    want[BarClass{start, len, 1}]++;
                    break;
                case 2:  // acyclic: d0 the identity on the double
                    add_piece(bar, bar, true, false);
                    break;
                default:  // acyclic the other way
                    add_piece(bar, bar, false, true);
                    break;
            }
        }
        // conjugate the whole complex by vertex-wise base changes
        std::vector<Matrix> gE = random_invertibles(E.dims, p, mix64(s));
        std::vector<Matrix> gO = random_invertibles(O.dims, p, mix64(s));
        PeriodicComplex plain;
        plain.even = E;
        plain.odd = O;
        for (int i = 0; i < n; ++i) {
            int j = (i + 1) % n;
            plain.even.arrows[i] = gE[j] * E.arrows[i] * gE[i].inverse();
            plain.odd.arrows[i] = gO[j] * O.arrows[i] * gO[i].inverse();
            plain.d0.push_back(gO[i] * d0[i] * gE[i].inverse());
            plain.d1.push_back(gE[i] * d1[i] * gO[i].inverse());
        }
        plain.check();
        BarMultiset got = decompose_periodic(plain);
        if (got != want) {
            detail = "trial " + std::to_string(trial) + ": decomposition differs from construction";
            return false;
        }
        auto [he, ho] = periodic_cohomology(plain);
        BarMultiset via_pair;
        for (auto& [bar, mult] : decompose_nilpotent_cyclic(he)) via_pair[BarClass{bar.start, bar.length, 0}] += mult;
        for (auto& [bar, mult] : decompose_nilpotent_cyclic(ho)) via_pair[BarClass{bar.start, bar.length, 1}] += mult;
        if (via_pair != got) {
            detail = "trial " + std::to_string(trial) + ": periodic decomposition != cohomology pair";
            return false;
        }
        for (int i = 0; i < n; ++i) {
            if (he.dims[i] - ho.dims[i] != plain.even.dims[i] - plain.odd.dims[i]) {
                detail = "trial " + std::to_string(trial) + ": Euler characteristic mismatch";
                return false;
            }
        }
    }
    detail = "200 complexes: construction, cohomology pair, Euler characteristics";
    return true;
}

bool a7_length_laws(std::string& detail) {
    for (auto& nf : standard_corpus()) {
        MaslovAssignment mu = compute_maslov(nf.front);
        for (RulingKind kind : {RulingKind::disk, RulingKind::circular}) {
            std::vector<RulingData> rs;
            if (kind == RulingKind::disk)
                for (auto& r : enumerate_disk_rulings(nf.front, mu)) rs.push_back(r);
            else
                for (auto& r : enumerate_circular_rulings(nf.front, mu)) rs.push_back(r);
            for (auto& r : rs) {
                for (int ei = 0; ei < (int)nf.front.events.size(); ++ei) {
                    const Event& e = nf.front.events[ei];
                    const Slice& L = nf.front.slices[ei];
                    const Slice& R = nf.front.slices[ei + 1];
                    auto lens = [&](int si, const Slice& S, bool right_edge) {
                        std::vector<Rational> out;
                        for (auto& [a, p] : r.pairings[si].partner) {
                            if (a > p) continue;
                            Rational ta = right_edge ? S.find(a)->theta_right : S.find(a)->theta_left;
                            Rational tp = right_edge ? S.find(p)->theta_right : S.find(p)->theta_left;
                            Rational sep = r.pairings[si].separation(a, ta, tp);
                            Rational fr = sep.frac();
                            out.push_back(kind == RulingKind::circular ? sep.abs() : min(fr, Rational(1) - fr));
                        }
                        std::sort(out.begin(), out.end());
                        return out;
                    };
                    auto left = lens(ei, L, true), right = lens(ei + 1, R, false);
                    if (e.kind == EventKind::crossing || e.kind == EventKind::none) {
                        if (left != right) {
                            detail = nf.name + ": spectrum jumps across event " + std::to_string(ei);
                            return false;
                        }
                    } else if (e.kind == EventKind::death) {
                        // the fold-incident pair length vanishes at the fold
                        Rational sep = r.pairings[ei].separation(e.a, L.find(e.a)->theta_right,
                                                                 L.find(e.b)->theta_right);
                        Rational fr = sep.frac();
                        Rational len = kind == RulingKind::circular ? sep.abs() : min(fr, Rational(1) - fr);
                        if (!len.is_zero()) {
                            detail = nf.name + ": fold-incident length nonzero at event " + std::to_string(ei);
                            return false;
                        }
                    } else {
                        Rational sep = r.pairings[ei + 1].separation(e.a, R.find(e.a)->theta_left,
                                                                     R.find(e.b)->theta_left);
                        if (!sep.is_zero()) {
                            detail = nf.name + ": newborn pair length nonzero at event " + std::to_string(ei);
                            return false;
                        }
                    }
                }
                // directed-Lipschitz bound per pair per slice
                for (int si = 0; si < (int)nf.front.slices.size(); ++si) {
                    const Slice& S = nf.front.slices[si];
                    for (auto& [a, p] : r.pairings[si].partner) {
                        if (a > p) continue;
                        Rational sl = r.pairings[si].separation(a, S.find(a)->theta_left, S.find(p)->theta_left);
                        Rational sr = r.pairings[si].separation(a, S.find(a)->theta_right, S.find(p)->theta_right);
                        auto len = [&](const Rational& sep) {
                            Rational fr = sep.frac();
                            return kind == RulingKind::circular ? sep.abs() : min(fr, Rational(1) - fr);
                        };
                        Rational slope_a = (S.find(a)->theta_right - S.find(a)->theta_left) / S.width();
                        Rational slope_p = (S.find(p)->theta_right - S.find(p)->theta_left) / S.width();
                        Rational bound = (slope_a - slope_p).abs() * S.width();
                        if ((len(sr) - len(sl)).abs() > bound) {
                            detail = nf.name + ": Lipschitz bound violated in slice " + std::to_string(si);
                            return false;
                        }
                    }
                }
            }
        }
    }
    // disjoint unions: stacked saucers against their extracted components
    for (int m : {2, 3}) {
        FrontDiagram u = builtin_front("stacked_saucers", m);
        MaslovAssignment mu = compute_maslov(u);
        auto rs = enumerate_disk_rulings(u, mu);
        if (rs.size() != 1) {
            detail = "stacked_saucers ruling count";
            return false;
        }
        std::vector<FrontDiagram> comps;
        for (int j = 0; j < m; ++j) comps.push_back(extract_component(u, {2 * j, 2 * j + 1}));
        for (auto& c : comps)
            if (!validate_front(c).ok()) {
                detail = "component extraction invalid";
                return false;
            }
        // sample fibers: all boundary fibers
        for (int b = 0; b < u.num_boundaries(); ++b) {
            Rational x = u.boundary_x(b);
            auto whole = length_spectrum(u, rs[0], RulingKind::disk, x);
            std::vector<Rational> parts;
            for (auto& c : comps) {
                MaslovAssignment cmu = compute_maslov(c);
                auto crs = enumerate_disk_rulings(c, cmu);
                if (crs.size() != 1) {
                    detail = "component ruling count";
                    return false;
                }
                for (auto& v : length_spectrum(c, crs[0], RulingKind::disk, x)) parts.push_back(v);
            }
            std::sort(parts.begin(), parts.end());
            if (whole != parts) {
                detail = "union spectrum is not the multiset union at fiber " + x.str();
                return false;
            }
        }
    }
    detail = "corpus spectra: fold vanishing, crossing continuity, Lipschitz, unions";
    return true;
}

bool a8_suspension(std::string& detail) {
    for (long long ls = 1; ls <= 64; ++ls) {
        auto r = suspension_counts({1, 0, ls, 3});
        if (!(r.violated && r.disk_total == ls && r.circular_total == 0)) {
            detail = "local_system_count=" + std::to_string(ls);
            return false;
        }
    }
    // the torus base counts feed in as (q-1)^m
    if (torus_local_system_count(3, 2) != 4 || torus_local_system_count(5, 3) != 64) {
        detail = "torus local system count";
        return false;
    }
    auto zero = suspension_counts({1, 0, 0, 2});
    if (zero.violated) {
        detail = "empty base must not violate";
        return false;
    }
    detail = "seed (1,0) violates for every base count >= 1";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> cs = {
        {"A1 unknot counts", 1.0, a1_unknot},
        {"A2 integral-area covers", 5.0, a2_covers},
        {"A3 move invariance", 600.0, a3_move_invariance},
        {"A4 expansion inequality", 600.0, a4_expansion},
        {"A5 quiver round-trip", 300.0, a5_quiver_roundtrip},
        {"A6 periodic inheritance", 120.0, a6_periodic},
        {"A7 length-spectrum laws", 60.0, a7_length_laws},
        {"A8 suspension arithmetic", 1.0, a8_suspension},
    };
    for (auto& c : cs) run_criterion(c);
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
