// cdckit: bounds, constructions, verification and search for constant
// dimension subspace codes built around lifted MRD subcodes.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <random>

#include "cdc/bounds.hpp"
#include "cdc/codefile.hpp"
#include "cdc/search.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

json resolution_json(const cdc::Resolution& sub) {
    json j;
    j["query"] = {{"q", sub.query.q}, {"v", sub.query.v}, {"d", sub.query.d}, {"k", sub.query.k}};
    j["value"] = sub.value.get_str();
    j["rule"] = cdc::rule_name(sub.rule);
    j["exact"] = sub.exact;
    if (!sub.note.empty()) j["note"] = sub.note;
    return j;
}

void print_resolution(const cdc::Resolution& sub) {
    std::cout << "  uses A_" << sub.query.q << "(" << sub.query.v << "," << sub.query.d << ";"
              << sub.query.k << ") <= " << sub.value.get_str() << "  [" << cdc::rule_name(sub.rule)
              << (sub.exact ? ", exact" : "") << "]";
    if (!sub.note.empty()) std::cout << "  (" << sub.note << ")";
    std::cout << "\n";
}

int run_bound(int q, int v, int d, int k, const std::string& rule, int c, int y, bool as_json) {
    std::vector<std::string> notes;
    if (d % 2 == 1) {
        notes.push_back("odd distance rounded up to " + std::to_string(d + 1));
        d += 1;
    }
    cdc::Params p{q, v, d, k};
    const cdc::AqResolver& resolver = cdc::AqResolver::with_defaults();

    cdc::BoundReport report;
    if (rule == "singleton") {
        report.value = cdc::singleton_bound(p);
        report.rule = cdc::Rule::Singleton;
    } else if (rule == "prop1") {
        report = cdc::lmrd_extension_bound(p, resolver);
    } else if (rule == "prop2") {
        if (c < 0 || y < 0) {
            auto cy = cdc::optimal_counting_params(p);
            cdc::require(bool(cy), cdc::Errc::Precondition,
                         "no default (c, y): d/2 < k < 3d/2 violated");
            if (c < 0) c = cy->first;
            if (y < 0) y = cy->second;
        }
        report = cdc::lmrd_counting_bound(p, c, y, resolver);
    } else {  // auto | prop0
        report = cdc::lmrd_bound(p, resolver);
    }
    for (const std::string& n : notes) report.notes.insert(report.notes.begin(), n);

    cdc::Region region = cdc::classify_region(p);

    if (as_json) {
        json j;
        j["q"] = q;
        j["v"] = v;
        j["d"] = d;
        j["k"] = k;
        if (report.value) j["value"] = report.value->get_str();
        j["rule"] = cdc::rule_name(report.rule);
        if (report.rule == cdc::Rule::Counting) {
            j["c"] = report.c;
            j["y"] = report.y;
        }
        j["exact"] = report.exact;
        j["region"] = cdc::region_name(region);
        j["subs"] = json::array();
        for (const auto& sub : report.subs) j["subs"].push_back(resolution_json(sub));
        j["notes"] = report.notes;
        for (const auto& rec : cdc::known_lower_bounds()) {
            if (rec.p.q == q && rec.p.v == v && rec.p.d == d && rec.p.k == k) {
                j["known_lower_bounds"] = {
                    {"lmrd_size", rec.lmrd_size.get_str()},
                    {"prior_best_extension", rec.prior_best_extension.get_str()},
                    {"prior_citation", rec.prior_citation},
                    {"subcode", rec.subcode},
                    {"best_known_extension", rec.best_known_extension.get_str()},
                    {"best_citation", rec.best_citation},
                };
            }
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (!report.value) {
        std::cout << "A_" << q << "(" << v << "," << d << ";" << k
                  << "): no bound of the lifted-MRD family applies (k >= 3d/2)\n";
        return 0;
    }
    std::cout << "A_" << q << "(" << v << "," << d << ";" << k << ") <= "
              << report.value->get_str() << "   [" << cdc::rule_name(report.rule);
    if (report.rule == cdc::Rule::Counting)
        std::cout << ", c=" << report.c << ", y=" << report.y;
    if (report.exact) std::cout << ", exact";
    std::cout << "]  (codes containing a lifted MRD)\n";
    std::cout << "  region: " << cdc::region_name(region) << "\n";
    for (const auto& sub : report.subs) print_resolution(sub);
    for (const auto& n : report.notes) std::cout << "  note: " << n << "\n";
    for (const auto& rec : cdc::known_lower_bounds()) {
        if (rec.p.q == q && rec.p.v == v && rec.p.d == d && rec.p.k == k) {
            std::cout << "  known lower bounds: lifted MRD " << rec.lmrd_size.get_str() << " + "
                      << rec.prior_best_extension.get_str() << " (" << rec.prior_citation
                      << "), best known + " << rec.best_known_extension.get_str() << " via "
                      << rec.subcode << " (" << rec.best_citation << ")\n";
        }
    }
    return 0;
}

int verify_and_write(cdc::Cdc& code, const std::string& out_path, int threads, bool as_json,
                     const std::string& what) {
    cdc::VerifyResult vr = cdc::verify_cdc_structured(code, threads);
    bool ok = vr.min_distance >= code.claimed_distance() ||
              code.claimed_distance() == cdc::kInfiniteDistance;
    if (!ok) {
        std::cerr << what << ": verification FAILED, min distance " << vr.min_distance << " < "
                  << code.claimed_distance() << "; refusing to write\n";
        return kExitVerify;
    }
    code.mark_verified(vr.min_distance);
    if (!out_path.empty()) cdc::write_code_file(code, out_path);
    if (as_json) {
        json j;
        j["construction"] = what;
        j["q"] = code.field().q();
        j["v"] = code.ambient_dim();
        j["k"] = code.dim();
        j["size"] = code.size();
        j["min_distance"] = vr.min_distance;
        j["pair_checks"] = vr.pair_checks;
        j["lmrd_reduction"] = vr.used_lmrd_reduction;
        if (!out_path.empty()) j["file"] = out_path;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << what << ": (" << code.ambient_dim() << ", " << code.size() << ", "
                  << vr.min_distance << "; " << code.dim() << ")_" << code.field().q()
                  << " verified";
        if (!out_path.empty()) std::cout << " -> " << out_path;
        std::cout << "\n";
    }
    return 0;
}

cdc::Cdc build_ef_from_pivots(const cdc::Field& f, int v, int d,
                              const std::vector<std::string>& pivots) {
    cdc::require(!pivots.empty(), cdc::Errc::Precondition, "no pivot vectors given");
    int k = -1;
    std::vector<cdc::PivotVector> skeleton;
    for (const std::string& s : pivots) {
        cdc::require(int(s.size()) == v, cdc::Errc::Precondition,
                     "pivot vector length must equal v");
        cdc::PivotVector pv;
        pv.length = v;
        for (int i = 0; i < v; ++i) {
            cdc::require(s[i] == '0' || s[i] == '1', cdc::Errc::Precondition,
                         "pivot vectors are binary");
            if (s[i] == '1') pv.bits |= uint64_t(1) << i;
        }
        if (k < 0) k = pv.weight();
        skeleton.push_back(pv);
    }

    // Cell fill: a contiguous pivot block leaves a full k x b free rectangle
    // (b columns right of the block); fill it with the largest MRD of rank
    // distance d/2 when it fits, otherwise keep the single zero codeword.
    std::vector<cdc::RankCode> cells;
    for (const cdc::PivotVector& pv : skeleton) {
        int first = -1, last = -1;
        for (int i = 0; i < v; ++i)
            if (pv.test(i)) {
                if (first < 0) first = i;
                last = i;
            }
        bool contiguous = (last - first + 1) == k;
        int b = v - (first + k);  // free columns right of the block
        if (contiguous && b >= d / 2 && k >= d / 2) {
            cdc::RankCode cell = cdc::gabidulin(f, k, b, d / 2);
            cells.push_back(cdc::embed_block(cell, k, v - k, 0, first));
        } else {
            cells.push_back(cdc::RankCode::singleton_zero(f, k, v - k));
        }
    }
    return cdc::echelon_ferrers(f, v, skeleton, cells);
}

int run_verify(const std::string& path, int expect_d, int threads, bool as_json) {
    std::vector<std::string> warnings;
    cdc::Cdc code = cdc::read_code_file(path, &warnings);
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";

    cdc::VerifyResult vr = cdc::verify_cdc_structured(code, threads);
    int expected = expect_d > 0
                       ? expect_d
                       : (code.claimed_distance() == cdc::kInfiniteDistance
                              ? 0
                              : code.claimed_distance());
    bool ok = vr.min_distance >= expected;

    json j;
    j["file"] = path;
    j["q"] = code.field().q();
    j["v"] = code.ambient_dim();
    j["k"] = code.dim();
    j["size"] = code.size();
    j["min_distance"] =
        vr.min_distance == cdc::kInfiniteDistance ? json("inf") : json(vr.min_distance);
    j["expected"] = expected;
    j["pair_checks"] = vr.pair_checks;
    j["lmrd_reduction"] = vr.used_lmrd_reduction;

    std::string profile_text;
    try {
        cdc::GammaProfile prof = cdc::gamma_intersection_profile(code);
        if (prof.lmrd_size > 0 && prof.lmrd_size != code.size()) {
            json layers = json::object();
            for (auto [t, n] : prof.layer_sizes) layers[std::to_string(t)] = n;
            j["lmrd_cell"] = prof.lmrd_size;
            j["flat_layers"] = layers;
            profile_text = "  prefix cell " + std::to_string(prof.lmrd_size) + ", layers:";
            for (auto [t, n] : prof.layer_sizes)
                profile_text += " t=" + std::to_string(t) + ":" + std::to_string(n);
        }
    } catch (const cdc::Error&) {
        // not LMRD-containing; no profile to report
    }

    if (!ok && vr.witness) {
        j["witness"] = {vr.witness->first, vr.witness->second};
    }
    if (as_json) {
        j["ok"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << path << ": (" << code.ambient_dim() << ", " << code.size() << ", "
                  << (vr.min_distance == cdc::kInfiniteDistance
                          ? std::string("inf")
                          : std::to_string(vr.min_distance))
                  << "; " << code.dim() << ")_" << code.field().q()
                  << (ok ? "" : "  BELOW EXPECTED " + std::to_string(expected)) << "\n";
        if (!profile_text.empty()) std::cout << profile_text << "\n";
        if (!ok && vr.witness) {
            const auto& ws = code.codewords();
            std::cout << "witness pair (indices " << vr.witness->first << ", "
                      << vr.witness->second << "):\n";
            for (size_t idx : {vr.witness->first, vr.witness->second}) {
                const cdc::Subspace& s = ws[idx];
                for (int r = 0; r < s.dim(); ++r) {
                    std::cout << "  ";
                    for (int col = 0; col < s.ambient_dim(); ++col)
                        std::cout << char('0' + s.basis().at(r, col));
                    std::cout << "\n";
                }
                std::cout << "\n";
            }
        }
    }
    return ok ? 0 : kExitVerify;
}

int run_search(int q, int v, int d, int k, const std::string& subcode_path, int n_max,
               uint64_t r_max, uint64_t seed, bool seed_given, int threads,
               const std::string& out_path, bool as_json) {
    const cdc::Field& f = cdc::Field::of(q);
    cdc::require(d % 2 == 0, cdc::Errc::Precondition, "d must be even");

    if (!seed_given) {
        std::random_device rd;
        seed = (uint64_t(rd()) << 32) | rd();
        std::cout << "seed: " << seed << "\n";
    }

    cdc::Cdc subcode(f, v, d / 2, 2 * (d - k));
    if (subcode_path.empty()) {
        // default: every d/2-subspace of the special flat
        cdc::Cdc small(f, v - k, d / 2, 2 * (d - k));
        for (cdc::Subspace& s : cdc::enumerate_subspaces(f, v - k, d / 2)) small.add(std::move(s));
        subcode = cdc::embed_in_gamma(small, v, k);
    } else {
        cdc::Cdc loaded = cdc::read_code_file(subcode_path);
        if (loaded.ambient_dim() == v - k) {
            subcode = cdc::embed_in_gamma(loaded, v, k);
        } else if (loaded.ambient_dim() == v) {
            subcode = loaded;
        } else {
            cdc::raise(cdc::Errc::InvalidSubcode, "subcode ambient dimension must be v or v-k");
        }
    }

    cdc::SearchStats stats;
    std::vector<cdc::Subspace> extension =
        cdc::extend_lmrd(f, v, d, k, subcode, n_max, r_max, seed, threads, &stats);

    cdc::Cdc code = cdc::lift(cdc::gabidulin(f, k, v - k, d / 2));
    size_t lmrd_size = code.size();
    for (const cdc::Subspace& w : extension) code.add(w);
    code.add_provenance("search extension: seed " + std::to_string(seed) + ", n_max " +
                        std::to_string(n_max) + ", r_max " + std::to_string(r_max));

    if (!as_json) {
        for (size_t i = 0; i < stats.per_restart.size(); ++i)
            std::cout << "restart " << i << ": " << stats.per_restart[i] << " accepted"
                      << (int(i) == stats.best_restart ? "  (best)" : "") << "\n";
        std::cout << "extension size " << extension.size() << " on top of " << lmrd_size << "\n";
    }
    int rc = verify_and_write(code, out_path, threads, as_json, "search");
    return rc;
}

int run_orbits(int q, int v, int k, int t, int d, const std::string& generator_path,
               long clique_target, bool verify_reps, int threads, bool as_json) {
    const cdc::Field& f = cdc::Field::of(q);
    cdc::require(d % 2 == 0 && d >= 2, cdc::Errc::Precondition, "d must be even and positive");
    const int max_inter = k - d / 2;
    (void)threads;

    cdc::FqMatrix gen(f, 0, 0);
    if (!generator_path.empty()) {
        gen = cdc::read_matrix_file(generator_path, f);
        cdc::require(gen.rows() == v && gen.cols() == v, cdc::Errc::Precondition,
                     "generator must be v x v");
    } else if (q == 2 && v == 10) {
        gen = cdc::reference_generator();
    } else {
        cdc::raise(cdc::Errc::Precondition,
                   "--generator required outside the built-in (q=2, v=10) case");
    }

    std::vector<cdc::Subspace> universe = cdc::subspaces_meeting_gamma(f, v, k, t);
    std::vector<cdc::Orbit> orbits = cdc::orbit_partition(gen, universe);
    auto [clean, dirty] = cdc::filter_conflicting_orbits(std::move(orbits), max_inter);

    std::map<size_t, size_t> length_histogram;
    for (const auto& o : clean) ++length_histogram[o.members.size()];
    for (const auto& o : dirty) ++length_histogram[o.members.size()];

    json j;
    j["universe"] = universe.size();
    j["orbits"] = clean.size() + dirty.size();
    j["dirty"] = dirty.size();
    j["clean"] = clean.size();
    {
        json lens = json::object();
        for (auto [len, n] : length_histogram) lens[std::to_string(len)] = n;
        j["orbit_lengths"] = lens;
    }
    if (!as_json) {
        std::cout << universe.size() << " subspaces, " << clean.size() + dirty.size()
                  << " orbits (";
        bool first = true;
        for (auto [len, n] : length_histogram) {
            std::cout << (first ? "" : ", ") << n << " of length " << len;
            first = false;
        }
        std::cout << "), " << dirty.size() << " dirty, " << clean.size() << " clean\n";
    }

    int rc = 0;
    std::vector<size_t> clique;
    try {
        clique = cdc::greedy_orbit_clique(clean, max_inter, size_t(std::max(0l, clique_target)));
        size_t members = 0;
        for (size_t idx : clique) members += clean[idx].members.size();
        j["clique_orbits"] = clique.size();
        j["clique_size"] = members;
        if (!as_json)
            std::cout << "greedy clique: " << clique.size() << " orbits, " << members
                      << " subspaces\n";
    } catch (const cdc::Error& e) {
        j["clique_error"] = e.what();
        if (!as_json) std::cout << "greedy clique: " << e.what() << "\n";
        rc = kExitVerify;
    }

    if (verify_reps) {
        cdc::require(q == 2 && v == 10 && k == 5 && t == 3 && d == 6, cdc::Errc::Precondition,
                     "--verify-reps applies to the built-in (2,10,6,5), t=3 case");
        std::vector<cdc::Subspace> reps = cdc::reference_orbit_representatives();
        bool ok = true;
        // each representative's orbit must be clean, and the five orbits
        // pairwise compatible, together covering 155 distinct subspaces
        std::vector<cdc::Orbit> rep_orbits;
        for (const cdc::Subspace& rep : reps) {
            bool found = false;
            for (const auto& o : clean) {
                if (std::find(o.members.begin(), o.members.end(), rep) != o.members.end()) {
                    rep_orbits.push_back(o);
                    found = true;
                    break;
                }
            }
            if (!found) ok = false;
        }
        if (ok) {
            cdc::Cdc joint(f, v, k, d);
            for (const auto& o : rep_orbits)
                for (const auto& m : o.members) joint.add(m);
            ok = joint.size() == 155 && cdc::verify_cdc(joint).min_distance >= d;
        }
        j["reference_representatives"] = ok ? "ok" : "FAILED";
        if (!as_json)
            std::cout << "reference representatives: " << (ok ? "ok" : "FAILED") << "\n";
        if (!ok) rc = kExitVerify;
    }
    if (as_json) std::cout << j.dump(2) << "\n";
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constant dimension code toolkit"};
    app.require_subcommand(1);

    // ---- bound ----
    auto* bound = app.add_subcommand("bound", "upper bounds for codes containing a lifted MRD");
    int bq = 2, bv = 0, bd = 0, bk = 0, bc = -1, by = -1;
    std::string brule = "auto";
    bool bjson = false;
    bound->add_option("-q", bq, "field size")->required();
    bound->add_option("-v", bv, "ambient dimension")->required();
    bound->add_option("-d", bd, "minimum subspace distance")->required();
    bound->add_option("-k", bk, "codeword dimension")->required();
    bound->add_option("--rule", brule, "auto|singleton|prop0|prop1|prop2")
        ->check(CLI::IsMember({"auto", "singleton", "prop0", "prop1", "prop2"}));
    bound->add_option("--c", bc, "counting parameter c (prop2)");
    bound->add_option("--y", by, "counting parameter y (prop2)");
    bound->add_flag("--json", bjson, "machine-readable output");

    // ---- construct ----
    auto* construct = app.add_subcommand("construct", "build and verify a code");
    construct->require_subcommand(1);
    bool cjson = false;
    int cthreads = 0;

    auto* c_lmrd = construct->add_subcommand("lmrd", "lifted MRD code");
    int lq = 2, lv = 0, ld = 0, lk = 0;
    std::string l_out;
    c_lmrd->add_option("-q", lq)->required();
    c_lmrd->add_option("-v", lv)->required();
    c_lmrd->add_option("-d", ld)->required();
    c_lmrd->add_option("-k", lk)->required();
    c_lmrd->add_option("-o,--out", l_out, "output file");
    c_lmrd->add_flag("--json", cjson);
    c_lmrd->add_option("--threads", cthreads);

    auto* c_f6l = construct->add_subcommand("family6l", "(6l, ., 4l; 3l)_q family");
    int f6q = 2, f6l = 1;
    std::string f6_out;
    c_f6l->add_option("-q", f6q)->required();
    c_f6l->add_option("-l", f6l)->required();
    c_f6l->add_option("-o,--out", f6_out);
    c_f6l->add_flag("--json", cjson);
    c_f6l->add_option("--threads", cthreads);

    auto* c_f63l = construct->add_subcommand("family63l", "(6+3l, ., 4+2l; 3+l)_q family");
    int f63q = 2, f63l = 1;
    std::string f63_out;
    c_f63l->add_option("-q", f63q)->required();
    c_f63l->add_option("-l", f63l)->required();
    c_f63l->add_option("-o,--out", f63_out);
    c_f63l->add_flag("--json", cjson);
    c_f63l->add_option("--threads", cthreads);

    auto* c_rec = construct->add_subcommand("record1065", "the (10, 2^15+155, 6; 5)_2 code");
    std::string rec_out;
    c_rec->add_option("-o,--out", rec_out);
    c_rec->add_flag("--json", cjson);
    c_rec->add_option("--threads", cthreads);

    auto* c_ef = construct->add_subcommand("ef", "echelon construction from pivot vectors");
    int eq = 2, ev = 0, ed = 0;
    std::string ef_pivots, ef_out;
    c_ef->add_option("-q", eq)->required();
    c_ef->add_option("-v", ev)->required();
    c_ef->add_option("-d", ed, "target minimum distance")->required();
    c_ef->add_option("--pivots", ef_pivots, "comma-separated binary pivot vectors")->required();
    c_ef->add_option("-o,--out", ef_out);
    c_ef->add_flag("--json", cjson);
    c_ef->add_option("--threads", cthreads);

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "verify a code file");
    std::string v_path;
    int v_expect = 0, v_threads = 0;
    bool vjson = false;
    verify->add_option("file", v_path, "code file (.cdc or .cdc.gz)")->required();
    verify->add_option("--expect-d", v_expect, "fail below this distance");
    verify->add_option("--threads", v_threads);
    verify->add_flag("--json", vjson);

    // ---- search ----
    auto* search = app.add_subcommand("search", "randomized lifted-MRD extension");
    int sq = 2, sv = 0, sd = 0, sk = 0, s_nmax = 1, s_threads = 1;
    uint64_t s_rmax = 1, s_seed = 0;
    std::string s_subcode, s_out;
    bool sjson = false;
    search->add_option("-q", sq)->required();
    search->add_option("-v", sv)->required();
    search->add_option("-d", sd)->required();
    search->add_option("-k", sk)->required();
    search->add_option("--subcode", s_subcode, "subcode file (ambient v-k or v); default: all");
    search->add_option("--n-max", s_nmax, "restarts");
    search->add_option("--r-max", s_rmax, "attempts per subspace");
    auto* seed_opt = search->add_option("--seed", s_seed, "RNG seed");
    search->add_option("--threads", s_threads);
    search->add_option("-o,--out", s_out);
    search->add_flag("--json", sjson);

    // ---- orbits ----
    auto* orbits = app.add_subcommand("orbits", "orbit partition and clique statistics");
    int oq = 2, ov = 0, ok_ = 0, ot = 0, od = 0, o_threads = 0;
    long o_target = 0;
    std::string o_gen;
    bool o_reps = false, ojson = false;
    orbits->add_option("-q", oq)->required();
    orbits->add_option("-v", ov)->required();
    orbits->add_option("-k", ok_)->required();
    orbits->add_option("-t", ot, "intersection dimension with the special flat")->required();
    orbits->add_option("-d", od, "distance defining the conflict threshold k-d/2")->required();
    orbits->add_option("--generator", o_gen, "generator matrix file");
    orbits->add_option("--clique-target", o_target, "required greedy clique size");
    orbits->add_flag("--verify-reps", o_reps, "check the built-in reference orbits");
    orbits->add_option("--threads", o_threads);
    orbits->add_flag("--json", ojson);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (bound->parsed()) return run_bound(bq, bv, bd, bk, brule, bc, by, bjson);
        if (verify->parsed()) return run_verify(v_path, v_expect, v_threads, vjson);
        if (search->parsed())
            return run_search(sq, sv, sd, sk, s_subcode, s_nmax, s_rmax, s_seed,
                              seed_opt->count() > 0, s_threads, s_out, sjson);
        if (orbits->parsed())
            return run_orbits(oq, ov, ok_, ot, od, o_gen, o_target, o_reps, o_threads, ojson);
        if (construct->parsed()) {
            if (c_lmrd->parsed()) {
                cdc::require(ld % 2 == 0, cdc::Errc::Precondition, "d must be even");
                cdc::Cdc code = cdc::lift(cdc::gabidulin(cdc::Field::of(lq), lk, lv - lk, ld / 2));
                return verify_and_write(code, l_out, cthreads, cjson, "lmrd");
            }
            if (c_f6l->parsed()) {
                cdc::Cdc code = cdc::family_6l(f6q, f6l);
                return verify_and_write(code, f6_out, cthreads, cjson, "family6l");
            }
            if (c_f63l->parsed()) {
                cdc::Cdc code = cdc::family_6_3l(f63q, f63l);
                return verify_and_write(code, f63_out, cthreads, cjson, "family63l");
            }
            if (c_rec->parsed()) {
                cdc::Cdc code = cdc::record_code_10_6_5(cthreads);
                // already verified by the builder; report and write
                return verify_and_write(code, rec_out, cthreads, cjson, "record1065");
            }
            if (c_ef->parsed()) {
                cdc::require(ed % 2 == 0, cdc::Errc::Precondition, "d must be even");
                std::vector<std::string> pivots;
                std::stringstream ss(ef_pivots);
                std::string item;
                while (std::getline(ss, item, ',')) pivots.push_back(item);
                cdc::Cdc code = build_ef_from_pivots(cdc::Field::of(eq), ev, ed, pivots);
                cdc::require(code.claimed_distance() >= ed, cdc::Errc::Precondition,
                             "skeleton Hamming distance below the target distance");
                return verify_and_write(code, ef_out, cthreads, cjson, "ef");
            }
        }
    } catch (const cdc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case cdc::Errc::Verification:
            case cdc::Errc::NotFound:
            case cdc::Errc::ProfileViolation:
                return kExitVerify;
            default:
                return kExitUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
