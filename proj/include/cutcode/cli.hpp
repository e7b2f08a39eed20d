// Command-line front end. run_cli() is the whole program; tools/cutcode.cpp
// only forwards argv and the standard streams.
//
// Exit codes: 0 success, 1 verification-negative result, 2 usage or input error.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cutcode/cutcode.hpp"

namespace cutcode::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kOk = 0, kNegative = 1, kUsage = 2;

/// Input error reported with exit code 2.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_text(const std::string& path, std::istream& in) {
    std::stringstream ss;
    if (path == "-") {
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    ss << f.rdbuf();
    return ss.str();
}

inline void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << text;
}

using Parsed = std::variant<LinearCode, PointFile>;

// A .pts file has N= on its second line, a .gmat file k= n=.
inline Parsed parse_any(const std::string& path, std::istream& in) {
    const std::string text = read_text(path, in);
    try {
        const cutcode::detail::Lines lines(text);
        if (lines.items.size() >= 2 && lines.items[1].second.rfind("N=", 0) == 0) return parse_pts(text);
        return parse_gmat(text);
    } catch (const ParseError& e) {
        throw InputError((path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
    }
}

inline LinearCode as_code(const Parsed& p) {
    if (auto c = std::get_if<LinearCode>(&p)) return *c;
    const auto& pf = std::get<PointFile>(p);
    return psi(ProjectiveSystem(pf.space, pf.multiplicities));
}

inline Json vec_json(const Vec& v) {
    Json a = Json::array();
    for (auto x : v) a.push_back(static_cast<unsigned>(x));
    return a;
}

inline Json report_json(const MinimalityReport& r) {
    Json j;
    j["minimal"] = r.minimal;
    j["criterion"] = to_string(r.criterion);
    j["witness"] = Json::array();
    if (r.witness) {
        j["witness"].push_back(vec_json(r.witness->first));
        j["witness"].push_back(vec_json(r.witness->second));
    }
    return j;
}

inline Json ab_json(const LinearCode& c) {
    const auto ab = ab_sufficient(c);
    Json j;
    j["minimal"] = ab.applies ? Json(true) : Json(nullptr);
    j["criterion"] = "ab";
    j["witness"] = Json::array();
    j["applies"] = ab.applies;
    j["w_min"] = ab.w_min;
    j["w_max"] = ab.w_max;
    return j;
}

inline std::pair<unsigned, unsigned> parse_range(const std::string& s, const std::string& what) {
    const auto dots = s.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const unsigned v = static_cast<unsigned>(std::stoul(s, &used));
            if (used == s.size()) return {v, v};
        } else {
            const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
            std::size_t ua = 0, ub = 0;
            const unsigned lo = static_cast<unsigned>(std::stoul(a, &ua)), hi = static_cast<unsigned>(std::stoul(b, &ub));
            if (ua == a.size() && ub == b.size() && lo <= hi) return {lo, hi};
        }
    } catch (const std::exception&) {
    }
    throw InputError("bad " + what + " '" + s + "', expected a..b");
}

inline bool supported_q(unsigned q) { return q >= 2 && q <= gf::kMaxOrder && gf::detail::prime_power(q).first != 0; }

inline std::string fmt_rate(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

inline Json bounds_json(const BoundsReport& r) {
    Json j;
    j["q"] = r.q;
    j["k"] = r.k;
    j["lb_length_geometric"] = r.lb_length_geometric;
    j["lb_length_griesmer"] = r.lb_length_griesmer;
    if (r.lb_length_dim3) j["lb_length_dim3"] = *r.lb_length_dim3;
    if (r.ub_length_reduced_dim3) j["ub_length_reduced_dim3"] = *r.ub_length_reduced_dim3;
    j["lb_length_best"] = r.lb_length_best;
    j["lb_distance"] = r.lb_distance;
    j["conjectured"] = {{"d_lb", r.conjectured.d_lb}, {"n_lb", r.conjectured.n_lb}, {"conjectural", ConjecturedBound::conjectural}};
    j["rates"] = {{"one_over_q", r.rates.one_over_q}, {"maximal", r.rates.maximal}, {"minimal", r.rates.minimal}};
    return j;
}

inline std::string bounds_text(const BoundsReport& r) {
    std::ostringstream os;
    os << "geometric=" << r.lb_length_geometric << " griesmer=" << r.lb_length_griesmer;
    if (r.lb_length_dim3) os << " dim3=" << *r.lb_length_dim3;
    os << " best=" << r.lb_length_best << " distance=" << r.lb_distance << "\n";
    if (r.ub_length_reduced_dim3) os << "reduced_upper=" << *r.ub_length_reduced_dim3 << "\n";
    os << "conjectured d>=" << r.conjectured.d_lb << " n>=" << r.conjectured.n_lb << " (conjectural)\n";
    os << "rates 1/q=" << fmt_rate(r.rates.one_over_q) << " maximal=" << fmt_rate(r.rates.maximal) << " minimal=" << fmt_rate(r.rates.minimal)
       << "\n";
    return os.str();
}

inline std::string bounds_markdown(const BoundsReport& r) {
    std::ostringstream os;
    os << "| bound | q=" << r.q << " k=" << r.k << " | status |\n|---|---|---|\n";
    os << "| geometric length | " << r.lb_length_geometric << " | proven |\n";
    os << "| Griesmer length | " << r.lb_length_griesmer << " | proven |\n";
    if (r.lb_length_dim3) os << "| dimension-3 length | " << *r.lb_length_dim3 << " | proven |\n";
    if (r.ub_length_reduced_dim3) os << "| reduced length upper | " << *r.ub_length_reduced_dim3 << " | proven |\n";
    os << "| best length | " << r.lb_length_best << " | proven |\n";
    os << "| distance | " << r.lb_distance << " | proven |\n";
    os << "| distance | " << r.conjectured.d_lb << " | CONJECTURAL |\n";
    os << "| Griesmer length at that distance | " << r.conjectured.n_lb << " | CONJECTURAL |\n";
    os << "| rate 1/q | " << fmt_rate(r.rates.one_over_q) << " | proven |\n";
    os << "| rate maximal | " << fmt_rate(r.rates.maximal) << " | proven |\n";
    os << "| rate minimal | " << fmt_rate(r.rates.minimal) << " | proven |\n";
    return os.str();
}

inline std::string stem_of(const std::string& label) {
    std::string s;
    for (char c : label) {
        if (c == ' ') s += '_';
        else if (c != '=') s += c;
    }
    return s;
}

inline unsigned env_threads() {
    const char* v = std::getenv("CUTCODE_THREADS");
    if (!v || !*v) return 1;
    char* end = nullptr;
    const long t = std::strtol(v, &end, 10);
    if (*end != '\0' || t < 1 || t > 1024) throw InputError(std::string("CUTCODE_THREADS must be a positive integer, got '") + v + "'");
    return static_cast<unsigned>(t);
}

}  // namespace detail

/// Runs one command line (without the program name).
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    using namespace detail;
    CLI::App app{"cutcode: minimal codes and cutting blocking sets"};
    app.name("cutcode");
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a code construction, write .gmat and .pts, print its parameters");
    std::string c_name, c_out, c_pts;
    unsigned c_q = 2, c_k = 3, c_beta = 1;
    bool c_json = false;
    construct->add_option("name", c_name, "construction")->required()->check(CLI::IsMember({"tetrahedron", "dim4", "pentagonal", "hexagonal", "simplex"}));
    construct->add_option("--q", c_q, "field order");
    construct->add_option("--k", c_k, "dimension (tetrahedron, simplex)");
    construct->add_option("--beta", c_beta, "nonzero field element (dim4)");
    construct->add_option("--out", c_out, "generator matrix file, '-' for stdout (default <name>_q<q>...gmat)");
    construct->add_option("--pts", c_pts, "point set file (default next to --out)");
    construct->add_flag("--json", c_json, "print a JSON report instead of the summary line");

    // verify
    auto* verify = app.add_subcommand("verify", "check minimality of a .gmat or cutting properties of a .pts");
    std::string v_in = "-", v_crit = "all";
    int v_r = 1;
    verify->add_option("--in", v_in, "input file, '-' for stdin");
    verify->add_option("--criterion", v_crit, "naive|hdz|ab|all")->check(CLI::IsMember({"naive", "hdz", "ab", "all"}));
    verify->add_option("--r", v_r, "codimension of the flats for .pts input");

    // wdist
    auto* wdist = app.add_subcommand("wdist", "weight distribution as JSON");
    std::string w_in = "-";
    wdist->add_option("--in", w_in, "input file, '-' for stdin");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "length and distance bounds");
    unsigned b_q = 0, b_k = 0;
    bool b_json = false, b_md = false;
    bounds->add_option("--q", b_q, "field order");
    bounds->add_option("--k", b_k, "dimension");
    auto* bj = bounds->add_flag("--json", b_json, "JSON output");
    bounds->add_flag("--markdown", b_md, "markdown table")->excludes(bj);
    auto* table = bounds->add_subcommand("table", "comparison grid over ranges of q and k");
    std::string t_qr = "2..9", t_kr = "3..6";
    bool t_json = false;
    table->add_option("--q-range", t_qr, "a..b");
    table->add_option("--k-range", t_kr, "c..d");
    table->add_flag("--json", t_json, "JSON output instead of markdown");

    // search
    auto* search = app.add_subcommand("search", "exhaustive search for cutting sets in PG(k-1,q)");
    unsigned s_q = 0, s_k = 0, s_threads = 0;
    std::size_t s_n = 0;
    std::uint64_t s_budget = 0;
    std::string s_mode = "first", s_red = "point", s_dir;
    bool s_timing = false, s_shortest = false;
    search->add_option("--q", s_q, "field order")->required();
    search->add_option("--k", s_k, "dimension")->required();
    search->add_option("--n", s_n, "set size (largest size with --shortest)")->required();
    search->add_option("--mode", s_mode, "first|all|count")->check(CLI::IsMember({"first", "all", "count"}));
    search->add_option("--budget", s_budget, "node limit, 0 for none");
    search->add_option("--threads", s_threads, "worker threads (default CUTCODE_THREADS or 1)");
    search->add_option("--reduction", s_red, "none|point|basis")->check(CLI::IsMember({"none", "point", "basis"}));
    search->add_option("--out-dir", s_dir, "write every set found as a .pts file here");
    search->add_flag("--shortest", s_shortest, "scan lengths upward from the best lower bound");
    search->add_flag("--timing", s_timing, "include wall time");

    // equiv
    auto* equiv = app.add_subcommand("equiv", "monomial equivalence of two codes");
    std::string e_a, e_b;
    std::uint64_t e_limit = kEquivalenceNodeLimit;
    equiv->add_option("a", e_a, "first .gmat or .pts")->required();
    equiv->add_option("b", e_b, "second .gmat or .pts")->required();
    equiv->add_option("--limit", e_limit, "search node limit");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "split point sets into collineation classes");
    std::vector<std::string> k_files;
    std::uint64_t k_limit = kEquivalenceNodeLimit;
    classify_cmd->add_option("files", k_files, ".pts or .gmat files")->required();
    classify_cmd->add_option("--limit", k_limit, "search node limit per pair");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (construct->parsed()) {
            if (!supported_q(c_q)) throw InputError("unsupported q=" + std::to_string(c_q));
            const auto f = gf::field_create(c_q);
            ConstructionResult r = [&] {
                if (c_name == "tetrahedron") return tetrahedron(c_q, c_k);
                if (c_name == "simplex") return simplex(c_q, c_k);
                if (c_name == "pentagonal") return pentagonal(c_q);
                if (c_name == "hexagonal") {
                    if (c_q != 2) throw InputError("hexagonal is defined for q=2 only");
                    return hexagonal_q2();
                }
                if (c_beta == 0 || !f->contains(c_beta)) throw InputError("beta must be a nonzero element of GF(" + std::to_string(c_q) + ")");
                return dim4_construction(c_q, static_cast<Elem>(c_beta));
            }();
            const std::string stem = stem_of(r.label);
            const std::string gmat_path = c_out.empty() ? stem + ".gmat" : c_out;
            std::string pts_path = c_pts;
            if (pts_path.empty() && gmat_path != "-") {
                const auto dot = gmat_path.rfind('.');
                pts_path = (dot == std::string::npos || dot < gmat_path.find_last_of('/') + 1 ? gmat_path : gmat_path.substr(0, dot)) + ".pts";
            }
            write_text(gmat_path, write_gmat(r.code), out);
            if (!pts_path.empty()) write_text(pts_path, write_pts(r.system), out);

            const bool minimal = is_minimal_hdz(r.code).minimal;
            const bool reduced = minimal && is_reduced(r.code);
            std::ostream& sink = gmat_path == "-" || pts_path == "-" ? err : out;
            if (c_json) {
                Json j;
                j["construction"] = r.name;
                j["label"] = r.label;
                j["q"] = c_q;
                j["n"] = r.code.n();
                j["k"] = r.code.k();
                j["d"] = r.code.min_distance();
                j["params"] = to_string(r.measured(), c_q);
                j["minimal"] = minimal;
                j["reduced"] = reduced;
                j["cutting"] = is_cutting(r.system.space(), r.system.support());
                j["weight_distribution"] = to_json(r.code.weight_distribution())["A"];
                sink << j.dump() << "\n";
            } else {
                sink << to_string(r.measured(), c_q) << " minimal=" << (minimal ? "true" : "false") << " reduced=" << (reduced ? "true" : "false")
                     << "\n";
            }
            return minimal ? kOk : kNegative;
        }

        if (verify->parsed()) {
            const Parsed p = parse_any(v_in, in);
            if (auto pf = std::get_if<PointFile>(&p)) {
                const auto set = pf->support();
                const auto& space = *pf->space;
                if (v_r < 1 || v_r > space.dim()) throw InputError("--r must be between 1 and " + std::to_string(space.dim()));
                Json j;
                const bool cutting = is_cutting(space, set, v_r);
                j["cutting"] = cutting;
                j["minimal_cutting"] = cutting && is_minimal_cutting(space, set, v_r);
                j["tfold"] = {{"t", blocking_multiplicity(space, set, v_r)}, {"r", v_r}};
                out << j.dump() << "\n";
                return cutting ? kOk : kNegative;
            }
            const LinearCode& c = std::get<LinearCode>(p);
            Json j;
            if (v_crit == "naive") j = report_json(is_minimal_naive(c));
            else if (v_crit == "hdz") j = report_json(is_minimal_hdz(c));
            else if (v_crit == "ab") j = ab_json(c);
            else {
                const auto naive = is_minimal_naive(c);
                const auto hdz = is_minimal_hdz(c);
                if (naive.minimal != hdz.minimal) throw std::logic_error("naive and weight-sum criteria disagree");
                j = report_json(naive);
                j["criterion"] = "all";
                j["reduced"] = naive.minimal && is_reduced(c);
                j["criteria"] = {{"naive", report_json(naive)}, {"hdz", report_json(hdz)}, {"ab", ab_json(c)}};
            }
            out << j.dump() << "\n";
            return j["minimal"] == true ? kOk : kNegative;
        }

        if (wdist->parsed()) {
            const LinearCode c = as_code(parse_any(w_in, in));
            out << to_json(c.weight_distribution()).dump() << "\n";
            return kOk;
        }

        if (bounds->parsed()) {
            if (table->parsed()) {
                const auto [qlo, qhi] = parse_range(t_qr, "--q-range");
                const auto [klo, khi] = parse_range(t_kr, "--k-range");
                if (khi > 64 || qhi > gf::kMaxOrder) throw InputError("range too large");
                Json rows = Json::array();
                std::ostringstream md;
                md << "| q | k | geometric | Griesmer | dim-3 | best | d | d CONJECTURAL | n CONJECTURAL |\n"
                   << "|---|---|---|---|---|---|---|---|---|\n";
                for (unsigned q = qlo; q <= qhi; ++q) {
                    if (!supported_q(q)) continue;
                    for (unsigned k = std::max(klo, 2u); k <= khi; ++k) {
                        const auto r = bounds_report(q, k);
                        rows.push_back(bounds_json(r));
                        md << "| " << q << " | " << k << " | " << r.lb_length_geometric << " | " << r.lb_length_griesmer << " | "
                           << (r.lb_length_dim3 ? std::to_string(*r.lb_length_dim3) : "-") << " | " << r.lb_length_best << " | " << r.lb_distance
                           << " | " << r.conjectured.d_lb << " | " << r.conjectured.n_lb << " |\n";
                    }
                }
                out << (t_json ? rows.dump() + "\n" : md.str());
                return kOk;
            }
            if (b_q == 0 || b_k == 0) throw InputError("bounds needs --q and --k (or the table subcommand)");
            if (!supported_q(b_q)) throw InputError("unsupported q=" + std::to_string(b_q));
            if (b_k < 2) throw InputError("bounds needs k >= 2");
            const auto r = bounds_report(b_q, b_k);
            if (b_json) out << bounds_json(r).dump() << "\n";
            else if (b_md) out << bounds_markdown(r);
            else out << bounds_text(r);
            return kOk;
        }

        if (search->parsed()) {
            if (!supported_q(s_q)) throw InputError("unsupported q=" + std::to_string(s_q));
            if (s_k < 2) throw InputError("search needs k >= 2");
            SearchOptions opt;
            opt.mode = s_mode == "all" ? SearchMode::all : s_mode == "count" ? SearchMode::count : SearchMode::first;
            opt.reduction = s_red == "none" ? Reduction::none : s_red == "basis" ? Reduction::basis : Reduction::point;
            opt.budget = s_budget;
            opt.threads = s_threads ? s_threads : env_threads();
            auto report_to_json = [&](const SearchReport& r) {
                Json j;
                j["q"] = r.q;
                j["k"] = r.k;
                j["n"] = r.n;
                j["mode"] = to_string(r.mode);
                j["reduction"] = to_string(r.reduction);
                j["exhaustive"] = r.exhaustive;
                j["nodes"] = r.nodes;
                j["count"] = r.count;
                j["found"] = r.found;
                if (s_timing) j["wall_time"] = r.wall_time;
                return j;
            };
            if (s_shortest) {
                const auto sl = shortest_minimal_length(s_q, s_k, s_n, opt);
                Json j;
                j["q"] = s_q;
                j["k"] = s_k;
                j["shortest"] = sl.n;
                j["reports"] = Json::array();
                for (const auto& r : sl.reports) j["reports"].push_back(report_to_json(r));
                out << j.dump() << "\n";
                return kOk;
            }
            const auto r = find_cutting_sets(s_q, s_k, s_n, opt);
            if (!s_dir.empty()) {
                const auto space = projective_space(static_cast<int>(s_k) - 1, s_q);
                for (std::size_t i = 0; i < r.found.size(); ++i) {
                    const std::string path = s_dir + "/cutting_q" + std::to_string(s_q) + "_k" + std::to_string(s_k) + "_n" + std::to_string(s_n) +
                                             "_" + std::to_string(i) + ".pts";
                    write_text(path, write_pts(*space, r.found[i]), out);
                }
            }
            out << report_to_json(r).dump() << "\n";
            return kOk;
        }

        if (equiv->parsed()) {
            const LinearCode a = as_code(parse_any(e_a, in)), b = as_code(parse_any(e_b, in));
            if (a.field().q() != b.field().q() || a.n() != b.n() || a.k() != b.k()) {
                out << Json{{"equivalent", false}}.dump() << "\n";
                return kNegative;
            }
            const auto cert = are_equivalent(a, b, e_limit);
            Json j;
            j["equivalent"] = cert.has_value();
            if (cert) {
                Json rows = Json::array();
                for (std::size_t r = 0; r < cert->collineation.rows(); ++r) rows.push_back(vec_json(cert->collineation.row(r)));
                j["certificate"] = {{"perm", cert->perm}, {"scale", vec_json(cert->scale)}, {"collineation", rows}};
            }
            out << j.dump() << "\n";
            return cert ? kOk : kNegative;
        }

        if (classify_cmd->parsed()) {
            std::vector<PointSet> sets;
            SpacePtr space;
            for (const auto& path : k_files) {
                const Parsed p = parse_any(path, in);
                PointFile pf;
                if (auto c = std::get_if<LinearCode>(&p)) {
                    const auto sys = phi(*c);
                    pf.space = sys.space_ptr();
                    pf.multiplicities = sys.multiplicities();
                } else {
                    pf = std::get<PointFile>(p);
                }
                for (const auto& [pt, m] : pf.multiplicities)
                    if (m != 1) throw InputError(path + ": classify takes point sets without repeated points");
                if (space && space != pf.space) throw InputError(path + ": all inputs must live in the same projective space");
                space = pf.space;
                sets.push_back(pf.support());
            }
            const auto classes = classify(sets, space->field().q(), static_cast<unsigned>(space->vec_len()), k_limit);
            Json j = Json::array();
            for (const auto& c : classes) {
                Json names = Json::array();
                for (auto i : c) names.push_back(k_files[i]);
                j.push_back(names);
            }
            out << Json{{"classes", j}}.dump() << "\n";
            return kOk;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace cutcode::cli
