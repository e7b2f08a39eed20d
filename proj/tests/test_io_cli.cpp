#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "cutcode/cli.hpp"
#include "oracles.hpp"

using namespace cutcode;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kData = CUTCODE_TESTDATA;

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
   public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("cutcode_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string operator/(const std::string& name) const { return (path_ / name).string(); }

   private:
    fs::path path_;
    static inline int counter_ = 0;
};

int error_line(const std::string& text) {
    try {
        parse_gmat(text);
    } catch (const ParseError& e) {
        return static_cast<int>(e.line);
    }
    return 0;
}

}  // namespace

TEST(Gmat, GoldenRoundTrip) {
    for (const char* name : {"dim4_q2.gmat", "dim4_q3_beta2.gmat", "pentagonal_q2.gmat", "hexagonal_q2.gmat"}) {
        const std::string text = slurp(kData + "/" + name);
        const auto c = parse_gmat(text);
        EXPECT_EQ(write_gmat(c), text) << name;
    }
}

TEST(Gmat, ExtensionFieldRoundTrip) {
    std::mt19937_64 rng(61);
    for (unsigned q : {4u, 8u, 9u}) {
        auto c = oracle::random_code(rng, q, 3, 7);
        auto back = parse_gmat(write_gmat(c));
        EXPECT_EQ(back.generator(), c.generator());
        EXPECT_NE(write_gmat(c).find("modulus="), std::string::npos);
    }
}

TEST(Gmat, Errors) {
    EXPECT_EQ(error_line("field q=2 p=2 m=1\nk=2 n=3\n1 0 1\n0 1 2\n"), 4);
    EXPECT_EQ(error_line("field q=2 p=2 m=1\nk=2 n=3\n1 0\n0 1 1\n"), 3);
    EXPECT_EQ(error_line("field q=2 p=2 m=1\nk=2 n=3\n1 0 1\n"), 4);
    EXPECT_EQ(error_line("field q=6 p=2 m=1\nk=1 n=1\n1\n"), 1);
    EXPECT_EQ(error_line("field q=4 p=2 m=1\nk=1 n=1\n1\n"), 1);
    EXPECT_EQ(error_line("field q=4 p=2 m=2 modulus=1,0,1\nk=1 n=1\n1\n"), 1);
    EXPECT_EQ(error_line("field q=2 p=2 m=1\n\n# comment\nk=2 n=2\n1 x\n0 1\n"), 5);
    EXPECT_EQ(error_line("field q=2 p=2 m=1\nk=2 n=2\n1 0\n0 1\n1 1\n"), 5);
    EXPECT_EQ(error_line("q=2\nk=2 n=2\n1 0\n0 1\n"), 1);
    EXPECT_EQ(error_line("field q=2 p=2 m=1\nk=2 n=3\n1 0 1\n1 0 1\n"), 2);  // rank 1
    EXPECT_EQ(error_line("field q=2 p=2 m=1\nk=2 n=2\n1 0\n0 1\n"), 0);
}

TEST(Pts, RoundTripAndMultiplicity) {
    auto t = tetrahedron(3, 4);
    auto pf = parse_pts(write_pts(t.system));
    EXPECT_EQ(pf.multiplicities, t.system.multiplicities());
    EXPECT_EQ(write_pts(*pf.space, pf.multiplicities), write_pts(t.system));

    auto m = parse_pts("field q=3 p=3 m=1\nN=2\n1,0,0*2\n2,0,0\n0,1,0\n0,0,2 * 3\n");
    auto s = projective_space(2, 3);
    EXPECT_EQ(m.multiplicities.at(s->index_of({1, 0, 0})), 3u);
    EXPECT_EQ(m.multiplicities.at(s->index_of({0, 0, 1})), 3u);
    EXPECT_EQ(m.support().count(), 3u);
}

TEST(Pts, Errors) {
    auto line = [](const std::string& text) {
        try {
            parse_pts(text);
        } catch (const ParseError& e) {
            return static_cast<int>(e.line);
        }
        return 0;
    };
    EXPECT_EQ(line("field q=3 p=3 m=1\nN=2\n1,0\n"), 3);
    EXPECT_EQ(line("field q=3 p=3 m=1\nN=2\n1,0,0\n0,0,0\n"), 4);
    EXPECT_EQ(line("field q=3 p=3 m=1\nN=2\n1,0,3\n"), 3);
    EXPECT_EQ(line("field q=3 p=3 m=1\nN=2\n1,0,1*0\n"), 3);
    EXPECT_EQ(line("field q=3 p=3 m=1\nk=2\n"), 2);
}

TEST(Json, WeightDistribution) {
    EXPECT_EQ(to_json(tetrahedron(3, 3).code.weight_distribution()).dump(), R"({"n":9,"k":3,"q":3,"A":{"0":1,"5":6,"6":8,"7":12}})");
}

TEST(Cli, ConstructDim4) {
    TempDir dir;
    auto r = run({"construct", "dim4", "--q", "3", "--beta", "2", "--out", dir / "c.gmat"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "[14,4,7]_3 minimal=true reduced=true\n");
    EXPECT_TRUE(fs::exists(dir / "c.gmat"));
    EXPECT_TRUE(fs::exists(dir / "c.pts"));
    auto c = parse_gmat(slurp(dir / "c.gmat"));
    EXPECT_TRUE(are_equivalent(c, parse_gmat(slurp(kData + "/dim4_q3_beta2.gmat"))).has_value());
    auto v = run({"verify", "--in", dir / "c.pts"});
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(v.out, "{\"cutting\":true,\"minimal_cutting\":true,\"tfold\":{\"t\":3,\"r\":1}}\n");
}

TEST(Cli, Bounds) {
    auto r = run({"bounds", "--q", "2", "--k", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "geometric=7 griesmer=8 best=8 distance=4");
    auto j = nlohmann::json::parse(run({"bounds", "--q", "9", "--k", "3", "--json"}).out);
    EXPECT_EQ(j["lb_length_dim3"], 26);
    EXPECT_EQ(j["conjectured"]["conjectural"], true);
    auto md = run({"bounds", "--q", "5", "--k", "4", "--markdown"});
    EXPECT_NE(md.out.find("CONJECTURAL"), std::string::npos);
    auto t = run({"bounds", "table", "--q-range", "2..6", "--k-range", "3..4", "--json"});
    EXPECT_EQ(t.code, 0);
    EXPECT_EQ(nlohmann::json::parse(t.out).size(), 8u);  // q = 6 skipped
    EXPECT_EQ(run({"bounds", "--q", "6", "--k", "3"}).code, 2);
    EXPECT_EQ(run({"bounds", "--q", "2"}).code, 2);
}

TEST(Cli, VerifyCriteria) {
    auto hex = run({"verify", "--in", kData + "/hexagonal_q2.gmat", "--criterion", "all"});
    EXPECT_EQ(hex.code, 0);
    auto j = nlohmann::json::parse(hex.out);
    EXPECT_EQ(j["criteria"]["naive"]["minimal"], true);
    EXPECT_EQ(j["criteria"]["hdz"]["minimal"], true);
    EXPECT_EQ(j["criteria"]["ab"]["applies"], true);  // 2*5 > 9

    // Columns e1, e2, e2: the support of (1,0,0) sits inside that of (1,1,1).
    const std::string bad = "field q=2 p=2 m=1\nk=2 n=3\n1 0 0\n0 1 1\n";
    for (const char* crit : {"naive", "hdz"}) {
        auto r = run({"verify", "--in", "-", "--criterion", crit}, bad);
        EXPECT_EQ(r.code, 1) << crit;
        auto w = nlohmann::json::parse(r.out);
        EXPECT_EQ(w["minimal"], false);
        EXPECT_EQ(w["witness"].size(), 2u);
    }
    // Tetrahedron q=2 k=6: weights 6..12, AB says nothing.
    TempDir dir;
    run({"construct", "tetrahedron", "--q", "2", "--k", "6", "--out", dir / "t.gmat"});
    auto ab = run({"verify", "--in", dir / "t.gmat", "--criterion", "ab"});
    EXPECT_EQ(ab.code, 1);
    EXPECT_TRUE(nlohmann::json::parse(ab.out)["minimal"].is_null());
    EXPECT_EQ(run({"verify", "--in", dir / "t.gmat", "--criterion", "hdz"}).code, 0);
}

TEST(Cli, VerifyPointSets) {
    // Three non-collinear points of PG(2,2) block nothing useful.
    auto r = run({"verify"}, "field q=2 p=2 m=1\nN=2\n1,0,0\n0,1,0\n0,0,1\n");
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "{\"cutting\":false,\"minimal_cutting\":false,\"tfold\":{\"t\":0,\"r\":1}}\n");
}

TEST(Cli, InputErrors) {
    auto unknown = run({"bounds", "--q", "2", "--k", "4", "--frobnicate"});
    EXPECT_EQ(unknown.code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"nope"}).code, 2);
    auto bad = run({"wdist"}, "field q=2 p=2 m=1\nk=2 n=3\n1 0 1\n0 1 7\n");
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("line 4"), std::string::npos) << bad.err;
    EXPECT_EQ(run({"verify", "--in", "/nonexistent/x.gmat"}).code, 2);
    EXPECT_EQ(run({"construct", "dim4", "--q", "3", "--beta", "0", "--out", "-"}).code, 2);
    EXPECT_EQ(run({"construct", "hexagonal", "--q", "3", "--out", "-"}).code, 2);
    EXPECT_EQ(run({"search", "--q", "4", "--k", "4", "--n", "20"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ConstructVerifyRoundTripGrid) {
    std::vector<std::vector<std::string>> grid;
    for (const char* q : {"2", "3", "4", "5"})
        for (const char* k : {"3", "4"}) grid.push_back({"tetrahedron", "--q", q, "--k", k});
    for (const char* q : {"2", "3", "4", "5"}) grid.push_back({"dim4", "--q", q});
    grid.push_back({"dim4", "--q", "4", "--beta", "3"});
    for (const char* q : {"2", "3"}) grid.push_back({"pentagonal", "--q", q});
    grid.push_back({"hexagonal"});
    grid.push_back({"simplex", "--q", "3", "--k", "3"});
    for (auto args : grid) {
        args.insert(args.begin(), "construct");
        args.insert(args.end(), {"--out", "-"});
        auto c = run(args);
        ASSERT_EQ(c.code, 0) << args[1] << c.err;
        auto v = run({"verify", "--criterion", "hdz"}, c.out);
        EXPECT_EQ(v.code, 0) << args[1] << " " << v.out;
        EXPECT_EQ(run(args).out, c.out);  // byte-identical reruns
    }
}

TEST(Cli, WeightDistribution) {
    auto c = run({"construct", "tetrahedron", "--q", "3", "--k", "3", "--out", "-"});
    auto w = run({"wdist"}, c.out);
    EXPECT_EQ(w.out, "{\"n\":9,\"k\":3,\"q\":3,\"A\":{\"0\":1,\"5\":6,\"6\":8,\"7\":12}}\n");
}

TEST(Cli, Search) {
    TempDir dir;
    auto r = run({"search", "--q", "2", "--k", "4", "--n", "9", "--mode", "all", "--reduction", "basis", "--out-dir", dir / ""});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["exhaustive"], true);
    EXPECT_GT(j["nodes"].get<std::uint64_t>(), 0u);
    EXPECT_FALSE(j.contains("wall_time"));
    const std::size_t found = j["found"].size();
    ASSERT_GT(found, 0u);
    std::vector<std::string> files;
    for (std::size_t i = 0; i < found; ++i) files.push_back(dir / ("cutting_q2_k4_n9_" + std::to_string(i) + ".pts"));
    for (const auto& f : files) EXPECT_EQ(run({"verify", "--in", f}).code, 0) << f;

    std::vector<std::string> cargs{"classify"};
    cargs.insert(cargs.end(), files.begin(), files.end());
    auto cl = nlohmann::json::parse(run(cargs).out);
    EXPECT_EQ(cl["classes"].size(), 1u);

    auto none = nlohmann::json::parse(run({"search", "--q", "2", "--k", "4", "--n", "8"}).out);
    EXPECT_EQ(none["count"], 0);
    EXPECT_EQ(none["exhaustive"], true);
    auto sh = nlohmann::json::parse(run({"search", "--q", "2", "--k", "4", "--n", "12", "--shortest"}).out);
    EXPECT_EQ(sh["shortest"], 9);
    auto budget = nlohmann::json::parse(run({"search", "--q", "2", "--k", "4", "--n", "10", "--mode", "count", "--reduction", "none", "--budget", "20"}).out);
    EXPECT_EQ(budget["exhaustive"], false);
}

TEST(Cli, ThreadsEnvironment) {
    ::setenv("CUTCODE_THREADS", "4", 1);
    auto a = run({"search", "--q", "2", "--k", "4", "--n", "10", "--mode", "count"});
    ::setenv("CUTCODE_THREADS", "zero", 1);
    auto bad = run({"search", "--q", "2", "--k", "4", "--n", "10", "--mode", "count"});
    ::unsetenv("CUTCODE_THREADS");
    auto b = run({"search", "--q", "2", "--k", "4", "--n", "10", "--mode", "count"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(bad.code, 2);
}

TEST(Cli, Equivalence) {
    auto same = run({"equiv", kData + "/dim4_q2.gmat", "-"}, run({"construct", "dim4", "--q", "2", "--out", "-"}).out);
    EXPECT_EQ(same.code, 0) << same.err;
    auto j = nlohmann::json::parse(same.out);
    EXPECT_EQ(j["equivalent"], true);
    EXPECT_EQ(j["certificate"]["perm"].size(), 9u);
    auto diff = run({"equiv", kData + "/pentagonal_q2.gmat", kData + "/hexagonal_q2.gmat"});
    EXPECT_EQ(diff.code, 1);
    EXPECT_EQ(diff.out, "{\"equivalent\":false}\n");
    EXPECT_EQ(run({"equiv", kData + "/pentagonal_q2.gmat", kData + "/dim4_q2.gmat"}).code, 1);
    EXPECT_EQ(run({"equiv", kData + "/dim4_q3_beta2.gmat", kData + "/dim4_q3_beta2.gmat", "--limit", "2"}).code, 2);
}
