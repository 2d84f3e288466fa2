// cylf: rulings, moves, and certificates for Legendrian fronts on the
// cylinder, plus finite-field cyclic-quiver bar decompositions.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cylf/certify.hpp"
#include "cylf/corpus.hpp"
#include "cylf/error.hpp"
#include "cylf/front.hpp"
#include "cylf/moves.hpp"
#include "cylf/quiver.hpp"
#include "cylf/rulings.hpp"
#include "cylf/sha256.hpp"
#include "json.hpp"

using namespace cylf;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("ParseError", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        out << text;
    }
}

std::string ruling_to_text(const FrontDiagram& f, const RulingData& r, bool circular) {
    std::string s;
    for (int si = 0; si < (int)f.slices.size(); ++si) {
        s += "slice " + std::to_string(si) + ":";
        for (auto& [a, b] : r.pairings[si].partner) {
            if (a > b) continue;
            s += " (" + std::to_string(a) + "," + std::to_string(b);
            if (circular) s += ";o=" + std::to_string(r.pairings[si].offset_of(a, b));
            s += ")";
        }
        s += "\n";
    }
    for (auto& [ei, sw] : r.switches)
        s += "crossing " + std::to_string(ei) + ": " + (sw ? "switching" : "non-switching") + "\n";
    for (int ei : exchange_crossings(f, r))
        s += "crossing " + std::to_string(ei) + " pairs its own strands (winding pass-through)\n";
    s += "chi = " + chi(f, r).str() + "\n";
    return s;
}

nlohmann::ordered_json ruling_to_json(const FrontDiagram& f, const RulingData& r, bool circular) {
    nlohmann::ordered_json j;
    j["pairings"] = nlohmann::ordered_json::array();
    for (int si = 0; si < (int)f.slices.size(); ++si) {
        nlohmann::ordered_json js = nlohmann::ordered_json::array();
        for (auto& [a, b] : r.pairings[si].partner) {
            if (a > b) continue;
            nlohmann::ordered_json p;
            p["pair"] = {a, b};
            if (circular) p["offset"] = r.pairings[si].offset_of(a, b);
            js.push_back(p);
        }
        j["pairings"].push_back(js);
    }
    j["switches"] = nlohmann::ordered_json::object();
    for (auto& [ei, sw] : r.switches) j["switches"][std::to_string(ei)] = sw;
    j["chi"] = chi(f, r).str();
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rulings and certificates for Legendrian fronts on the cylinder"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string in_path, out_path, name, kind = "disk", cut_str, eps_str = "1/100";
    uint64_t seed = 0;
    long long n_steps = 10, param_k = 1;
    unsigned prime = 2;
    bool as_json = false;
    long long susp_disk = 0, susp_circ = 0, susp_ls = 1;
    std::string move_text;

    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--out", out_path, "write output to a file");

    auto* front_cmd = app.add_subcommand("front", "front model operations");
    auto* fval = front_cmd->add_subcommand("validate", "validate a front file");
    fval->add_option("file", in_path)->required();
    auto* fcov = front_cmd->add_subcommand("cover", "k-fold cover of a front");
    fcov->add_option("file", in_path)->required();
    fcov->add_option("--k", param_k, "cover index")->required();
    auto* fblt = front_cmd->add_subcommand("builtin", "emit a built-in front");
    fblt->add_option("name", name)->required();
    fblt->add_option("--k", param_k, "builtin parameter");

    auto* rul = app.add_subcommand("rulings", "normal ruling computations");
    auto* rcount = rul->add_subcommand("count", "count normal rulings");
    rcount->add_option("file", in_path)->required();
    rcount->add_option("--kind", kind, "disk|circular|planar");
    rcount->add_option("--cut", cut_str, "cut angle p/q for --kind planar");
    auto* renum = rul->add_subcommand("enumerate", "list normal rulings");
    renum->add_option("file", in_path)->required();
    renum->add_option("--kind", kind, "disk|circular");
    auto* rexp = rul->add_subcommand("expand", "short-lift expansion of every disk ruling");
    rexp->add_option("file", in_path)->required();
    auto* rspec = rul->add_subcommand("spectrum", "length spectrum at a fiber");
    rspec->add_option("file", in_path)->required();
    rspec->add_option("--kind", kind, "disk|circular");
    std::string at_str = "1/2";
    rspec->add_option("--at", at_str, "fiber x as p/q");
    rspec->add_option("--eps", eps_str, "shortness tolerance p/q");

    auto* mov = app.add_subcommand("moves", "Legendrian move operations");
    auto* mlist = mov->add_subcommand("list", "list available moves");
    mlist->add_option("file", in_path)->required();
    auto* mapply = mov->add_subcommand("apply", "apply one move");
    mapply->add_option("file", in_path)->required();
    mapply->add_option("--move", move_text, "move spec text, e.g. 'R1_birth s=1 strand=0 side=up'")->required();
    auto* mfuzz = mov->add_subcommand("fuzz", "random move trajectory");
    mfuzz->add_option("file", in_path)->required();
    mfuzz->add_option("--seed", seed, "PRNG seed");
    mfuzz->add_option("--n", n_steps, "number of steps");

    auto* qv = app.add_subcommand("quiver", "finite-field quiver decompositions");
    auto* qdec = qv->add_subcommand("decompose", "bar decomposition of a nilpotent cyclic rep");
    qdec->add_option("file", in_path)->required();
    qdec->add_option("--p", prime, "expected field order (checked against the file)");
    auto* qcoh = qv->add_subcommand("cohomology", "cohomology of a 2-periodic complex");
    qcoh->add_option("file", in_path)->required();

    auto* cert = app.add_subcommand("certify", "non-squeezing certificate for a front");
    cert->add_option("file", in_path)->required();
    long long cert_fuzz = 0;
    cert->add_option("--fuzz-steps", cert_fuzz, "attach invariance evidence from a fuzz trajectory");
    cert->add_option("--seed", seed, "fuzz seed for the evidence trajectory");

    auto* susp = app.add_subcommand("suspend", "suspension counting arithmetic");
    susp->add_option("--disk", susp_disk, "seed disk count")->required();
    susp->add_option("--circular", susp_circ, "seed circular count")->required();
    susp->add_option("--local-systems", susp_ls, "rank-1 local system count of the base");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (fval->parsed()) {
            FrontDiagram f = parse_front(slurp(in_path));
            auto rep = validate_front(f);
            if (as_json) {
                nlohmann::ordered_json j;
                j["schema"] = "cylf-cli/1";
                j["valid"] = rep.ok();
                j["violations"] = nlohmann::ordered_json::array();
                for (auto& v : rep.violations) j["violations"].push_back(v.what);
                emit(j.dump(2), out_path);
            } else {
                emit(rep.ok() ? "valid" : rep.summary(), out_path);
            }
            return rep.ok() ? 0 : 1;
        }
        if (fcov->parsed()) {
            FrontDiagram f = parse_front(slurp(in_path));
            emit(serialize_front(cover(f, (int)param_k)), out_path);
            return 0;
        }
        if (fblt->parsed()) {
            emit(serialize_front(builtin_front(name, param_k)), out_path);
            return 0;
        }
        if (rcount->parsed()) {
            FrontDiagram f = parse_front(slurp(in_path));
            long long cnt;
            if (kind == "disk")
                cnt = (long long)enumerate_disk_rulings(f).size();
            else if (kind == "circular")
                cnt = (long long)enumerate_circular_rulings(f).size();
            else if (kind == "planar")
                cnt = planar_ruling_count(f, Rational::parse(cut_str));
            else
                throw Error("BadParams", "unknown ruling kind '" + kind + "'");
            if (as_json) {
                nlohmann::ordered_json j;
                j["schema"] = "cylf-cli/1";
                j["kind"] = kind;
                j["count"] = cnt;
                emit(j.dump(2), out_path);
            } else {
                emit(std::to_string(cnt), out_path);
            }
            return 0;
        }
        if (renum->parsed()) {
            FrontDiagram f = parse_front(slurp(in_path));
            bool circular = kind == "circular";
            std::vector<RulingData> rs;
            if (circular)
                for (auto& r : enumerate_circular_rulings(f)) rs.push_back(r);
            else
                for (auto& r : enumerate_disk_rulings(f)) rs.push_back(r);
            if (as_json) {
                nlohmann::ordered_json j;
                j["schema"] = "cylf-cli/1";
                j["rulings"] = nlohmann::ordered_json::array();
                for (auto& r : rs) j["rulings"].push_back(ruling_to_json(f, r, circular));
                emit(j.dump(2), out_path);
            } else {
                std::string s;
                for (size_t i = 0; i < rs.size(); ++i)
                    s += "# ruling " + std::to_string(i) + "\n" + ruling_to_text(f, rs[i], circular);
                s += "total " + std::to_string(rs.size()) + "\n";
                emit(s, out_path);
            }
            return 0;
        }
        if (rexp->parsed()) {
            FrontDiagram f = parse_front(slurp(in_path));
            MaslovAssignment mu = compute_maslov(f);
            auto disks = enumerate_disk_rulings(f, mu);
            nlohmann::ordered_json j;
            j["schema"] = "cylf-cli/1";
            j["expansions"] = nlohmann::ordered_json::array();
            std::string s;
            for (size_t i = 0; i < disks.size(); ++i) {
                CircularRuling c = expand_short(f, mu, disks[i]);
                if (as_json)
                    j["expansions"].push_back(ruling_to_json(f, c, true));
                else
                    s += "# expansion of disk ruling " + std::to_string(i) + "\n" + ruling_to_text(f, c, true);
            }
            emit(as_json ? j.dump(2) : s, out_path);
            return 0;
        }
        if (rspec->parsed()) {
            FrontDiagram f = parse_front(slurp(in_path));
            MaslovAssignment mu = compute_maslov(f);
            RulingKind rk = kind == "circular" ? RulingKind::circular : RulingKind::disk;
            std::vector<RulingData> rs;
            if (rk == RulingKind::circular)
                for (auto& r : enumerate_circular_rulings(f, mu)) rs.push_back(r);
            else
                for (auto& r : enumerate_disk_rulings(f, mu)) rs.push_back(r);
            Rational x = Rational::parse(at_str);
            nlohmann::ordered_json j;
            j["schema"] = "cylf-cli/1";
            j["spectra"] = nlohmann::ordered_json::array();
            std::string s;
            for (auto& r : rs) {
                auto spec = length_spectrum(f, r, rk, x);
                nlohmann::ordered_json one;
                one["lengths"] = nlohmann::ordered_json::array();
                std::string line;
                for (auto& v : spec) {
                    one["lengths"].push_back(v.str());
                    line += v.str() + " ";
                }
                one["max"] = max_length(f, r, rk).str();
                one["eps_short"] = is_eps_short(f, r, rk, Rational::parse(eps_str));
                j["spectra"].push_back(one);
                s += "{ " + line + "} max=" + max_length(f, r, rk).str() + "\n";
            }
            emit(as_json ? j.dump(2) : s, out_path);
            return 0;
        }
        if (mlist->parsed()) {
            FrontDiagram f = parse_front(slurp(in_path));
            auto ms = available_moves(f);
            if (as_json) {
                nlohmann::ordered_json j;
                j["schema"] = "cylf-cli/1";
                j["moves"] = nlohmann::ordered_json::array();
                for (auto& m : ms) j["moves"].push_back(m.text());
                emit(j.dump(2), out_path);
            } else {
                std::string s;
                for (auto& m : ms) s += m.text() + "\n";
                emit(s, out_path);
            }
            return 0;
        }
        if (mapply->parsed()) {
            FrontDiagram f = parse_front(slurp(in_path));
            MoveResult res = apply_move(f, MoveSpec::parse(move_text));
            emit(serialize_front(res.front), out_path);
            return 0;
        }
        if (mfuzz->parsed()) {
            FrontDiagram f = parse_front(slurp(in_path));
            auto traj = fuzz_trajectory(f, seed, (int)n_steps);
            if (as_json) {
                nlohmann::ordered_json j;
                j["schema"] = "cylf-cli/1";
                j["steps"] = nlohmann::ordered_json::array();
                for (size_t i = 0; i < traj.size(); ++i)
                    j["steps"].push_back({{"step", i},
                                          {"move", i == 0 ? std::string("start") : traj[i].move.text()},
                                          {"front_sha256", traj[i].front_hash}});
                emit(j.dump(2), out_path);
            } else {
                emit(trajectory_log(traj), out_path);
            }
            return 0;
        }
        if (qdec->parsed()) {
            CyclicQuiverRep r = parse_rep(slurp(in_path));
            if (qdec->count("--p") && r.p != prime) throw Error("BadParams", "file field order differs from --p");
            BarMultiset bars = decompose_nilpotent_cyclic(r);
            if (as_json) {
                nlohmann::ordered_json j;
                j["schema"] = "cylf-cli/1";
                j["bars"] = nlohmann::ordered_json::array();
                for (auto& [bar, mult] : bars)
                    j["bars"].push_back({{"start", bar.start}, {"length", bar.length}, {"mult", mult}});
                emit(j.dump(2), out_path);
            } else {
                emit(bars_to_string(bars), out_path);
            }
            return 0;
        }
        if (qcoh->parsed()) {
            PeriodicComplex c = parse_complex(slurp(in_path));
            auto [he, ho] = periodic_cohomology(c);
            nlohmann::ordered_json j;
            j["schema"] = "cylf-cli/1";
            j["even"] = nlohmann::json::parse(serialize_rep(he));
            j["odd"] = nlohmann::json::parse(serialize_rep(ho));
            emit(j.dump(2), out_path);
            return 0;
        }
        if (cert->parsed()) {
            FrontDiagram f = parse_front(slurp(in_path));
            Certificate c = nonsqueeze_certificate(f);
            if (cert_fuzz > 0) {
                // move-invariance evidence: the counts must hold along the trajectory
                for (auto& step : fuzz_trajectory(f, seed, (int)cert_fuzz)) {
                    Certificate sc = nonsqueeze_certificate(step.front);
                    if (sc.disk_count != c.disk_count || sc.circular_count != c.circular_count)
                        throw Error("NotNormal", "counts changed along the evidence trajectory");
                }
                c.fuzz_seed = seed;
                c.fuzz_steps = (int)cert_fuzz;
            }
            if (as_json) {
                emit(c.to_json(), out_path);
            } else {
                std::string s = "disk rulings:     " + std::to_string(c.disk_count) + "\n";
                s += "circular rulings: " + std::to_string(c.circular_count) + "\n";
                s += std::string("inequality violated: ") + (c.inequality_violated ? "yes" : "no") + "\n";
                if (!c.conclusion.empty()) s += c.conclusion + "\n";
                s += "front sha256: " + c.front_hash + "\n";
                emit(s, out_path);
            }
            return 0;
        }
        if (susp->parsed()) {
            SuspensionSpec sp;
            sp.seed_disk_count = susp_disk;
            sp.seed_circular_count = susp_circ;
            sp.local_system_count = susp_ls;
            SuspensionCounts sc = suspension_counts(sp);
            if (as_json) {
                nlohmann::ordered_json j;
                j["schema"] = "cylf-cli/1";
                j["disk_total"] = sc.disk_total;
                j["circular_total"] = sc.circular_total;
                j["violated"] = sc.violated;
                emit(j.dump(2), out_path);
            } else {
                emit("disk_total=" + std::to_string(sc.disk_total) +
                         " circular_total=" + std::to_string(sc.circular_total) +
                         " violated=" + (sc.violated ? "yes" : "no"),
                     out_path);
            }
            return 0;
        }
    } catch (const Error& e) {
        nlohmann::ordered_json j;
        j["error"] = e.code();
        j["message"] = e.what();
        std::cerr << j.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"Internal\",\"message\":\"" << e.what() << "\"}\n";
        return 1;
    }
    return 2;
}
