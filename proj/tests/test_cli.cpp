#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "oracles.hpp"
#include "wha/cli.hpp"

using namespace wha;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

std::vector<std::string> words(const std::string& cmd) {
    std::vector<std::string> v;
    std::istringstream in(cmd);
    for (std::string w; in >> w;) v.push_back(w);
    return v;
}

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "wha");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream o, e;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
    return {code, o.str(), e.str()};
}

CliRun run(const std::string& cmd) { return run(words(cmd)); }

fs::path temp_dir(const std::string& tag) {
    const fs::path p = fs::temp_directory_path() / ("wha-test-" + tag + "-" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("verify sweedler5").code, 0);
    EXPECT_EQ(run("verify sweedler5 --level strict-bialgebra").code, 1);
    EXPECT_EQ(run("verify catalog:wba3.1 --cross-check").code, 0);
    EXPECT_EQ(run("verify no/such/file.json").code, 2);
    EXPECT_EQ(run("verify sweedler5 --level hopfish").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("verify sweedler5 --bogus").code, 2);
    EXPECT_EQ(run("--version").code, 0);
    EXPECT_EQ(run("catalog separation --dim 2").code, 0);
    EXPECT_EQ(run("catalog separation --dim 3").code, 3);
    EXPECT_EQ(run("catalog separation").code, 2);
    EXPECT_EQ(run("catalog claims --dim 2").code, 1);
    EXPECT_EQ(run("catalog verify").code, 0);
    EXPECT_EQ(run("catalog show wba3.21").code, 2);
    EXPECT_EQ(run("iso fingerprint-compare wba2.1 wba2.2").code, 0);
    EXPECT_EQ(run("iso fingerprint-compare wba3.3 wba3.7").code, 3);
    EXPECT_EQ(run("aut tangent wba3.12").code, 0);
    EXPECT_EQ(run("construct adjoin-two-units --base null:1").code, 2);
    EXPECT_EQ(run("construct adjoin-two-units --base zmod:3 --verify promised").code, 0);
    EXPECT_EQ(run("construct --list").code, 0);
    EXPECT_EQ(run("search --estimate-only").code, 0);
    EXPECT_EQ(run("search --algebra alg3.1").code, 2);
    EXPECT_EQ(run("search --algebra alg2.2 --dim 3").code, 2);
}

TEST(Cli, AutomorphismChecksAndConventions) {
    EXPECT_EQ(run(std::vector<std::string>{"aut", "check", "wba2.3", "--matrix", "[[1,1],[0,-1]]"}).code, 0);
    EXPECT_EQ(run(std::vector<std::string>{"--convention", "rows", "aut", "check", "wba2.3", "--matrix", "[[1,1],[0,-1]]"}).code, 1);
    EXPECT_EQ(run(std::vector<std::string>{"aut", "check", "wba3.12", "--matrix", R"([["1","0","0"],["0","1","0"],["0","0","alpha"]])",
                                           "--params", "alpha", "--nonzero", "alpha"})
                  .code,
              0);
    EXPECT_EQ(run(std::vector<std::string>{"aut", "check", "wba3.13", "--matrix", R"([["1","0","0"],["0","1","0"],["0","0","alpha"]])",
                                           "--params", "alpha", "--nonzero", "alpha"})
                  .code,
              1);
    EXPECT_EQ(run(std::vector<std::string>{"aut", "check", "wba3.13", "--matrix", R"([["1","0","0"],["0","1","0"],["0","0","alpha"]])",
                                           "--params", "alpha", "--at", "alpha=1"})
                  .code,
              0);
    EXPECT_EQ(run(std::vector<std::string>{"aut", "check", "wba3.13", "--matrix", R"([["1","0","0"],["0","1","0"],["0","0","alpha"]])",
                                           "--params", "alpha", "--at", "alpha=1; alpha=-1"})
                  .code,
              1);
    EXPECT_EQ(run(std::vector<std::string>{"aut", "group", "--matrix", "[[1,0,0],[0,1,1],[0,0,-1]]", "--matrix", "[[1,1,0],[0,0,1],[0,-1,-1]]"}).code, 0);
    EXPECT_EQ(run(std::vector<std::string>{"aut", "group", "--matrix", "[[2]]", "--bound", "10"}).code, 2);
    const Mat P{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 0, 1}};
    EXPECT_EQ(run(std::vector<std::string>{"iso", "witness", "sweedler5", "taft-weak:2", "--matrix", matrix_to_json(P).dump()}).code, 0);
    EXPECT_EQ(run(std::vector<std::string>{"iso", "witness", "sweedler5", "taft-weak:2", "--matrix", matrix_to_json(Mat::identity(5)).dump()}).code, 1);
}

TEST(Cli, JsonReportsParseAndCarryVerdicts) {
    const CliRun r = run("--report json verify sweedler5 --level strict-bialgebra");
    ASSERT_EQ(r.code, 1);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["report"], "verify");
    EXPECT_FALSE(j["pass"].get<bool>());
    const VerificationReport v = verify(sweedler5(), Level::StrictBialgebra);
    ASSERT_EQ(j["axioms"].size(), v.axioms.size());
    for (std::size_t i = 0; i < v.axioms.size(); ++i) {
        EXPECT_EQ(j["axioms"][i]["axiom"], axiom_name(v.axioms[i].axiom));
        EXPECT_EQ(j["axioms"][i]["nonzero"].get<std::size_t>(), v.axioms[i].residual.nonzero);
    }
    const Json s = Json::parse(run("--report json catalog separation --dim 3").out);
    EXPECT_EQ(s, to_json(pairwise_separation(3, Kind::WeakBialgebra)));
    const Json c = Json::parse(run("--report json catalog claims --dim 2 --convention rows").out);
    EXPECT_EQ(c, to_json(verify_claims(2, Kind::WeakBialgebra, Convention::Rows), 2, Kind::WeakBialgebra));
    // text rendering is the same data
    EXPECT_NE(run("verify sweedler5").out.find("pass"), std::string::npos);
}

TEST(Cli, StructureFilesRoundTrip) {
    std::vector<WeakStructure> all{sweedler4(), sweedler5(), taft_weak_hopf(3), taft_hopf(3), max_algebra_whopf(4)};
    for (const auto& c : catalog()) all.push_back(c.structure);
    oracle::Rng r(3);
    all.push_back(oracle::perturb(catalog_get("wha3.1").structure, r));
    for (const auto& H : all) {
        EXPECT_EQ(structure_from_string(structure_to_string(H), false), H) << H.label;
        EXPECT_EQ(structure_to_string(structure_from_string(structure_to_string(H), false)), structure_to_string(H));
    }
    EXPECT_EQ(load_structure("data/sweedler5.json"), sweedler5());
    EXPECT_EQ(load_structure("data/taft2_weak.json"), taft_weak_hopf(2));
    const fs::path d = temp_dir("rt");
    const fs::path f = d / "t3.json";
    ASSERT_EQ(run(std::vector<std::string>{"--out", f.string(), "construct", "taft-weak-hopf", "3"}).code, 0);
    EXPECT_EQ(load_structure(f.string()), taft_weak_hopf(3));
    const fs::path g = d / "moved.json";
    const Mat G{{1, 1}, {0, -1}};
    ASSERT_EQ(run(std::vector<std::string>{"--out", g.string(), "transport", "wba2.1", "--matrix", matrix_to_json(G).dump()}).code, 0);
    const WeakStructure moved = load_structure(g.string());
    EXPECT_EQ(moved, oracle::transport(catalog_get("wba2.1").structure, G));
    EXPECT_EQ(run(std::vector<std::string>{"iso", "witness", "wba2.1", g.string(), "--matrix", matrix_to_json(G).dump()}).code, 0);
    fs::remove_all(d);
}

TEST(Cli, MalformedInputHasLocatedDiagnostic) {
    const CliRun r = run("verify data/garbage.json");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("malformed JSON at line"), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
    const fs::path d = temp_dir("bad");
    std::ofstream(d / "idx.json") << R"({"dim": 2, "mult": [{"i": 3, "j": 1, "k": 1, "c": "1"}], "unit": ["1","0"]})";
    const CliRun b = run("verify " + (d / "idx.json").string());
    EXPECT_EQ(b.code, 2);
    EXPECT_FALSE(b.err.empty());
    fs::remove_all(d);
}

TEST(Cli, ErrataInvocationsReproduce) {
    std::size_t n = 0;
    for (const auto& item : errata_items())
        for (const auto& inv : item.invocations) {
            auto w = words(inv.command);
            ASSERT_EQ(w.front(), "wha");
            w.erase(w.begin());
            EXPECT_EQ(run(w).code, inv.exit_code) << inv.command;
            ++n;
        }
    EXPECT_GE(n, 13u);
    // two of them do not depend on the toolkit's own bookkeeping
    EXPECT_FALSE(oracle::axiom(load_structure("docs/evidence/wba3.6-eps3-one.json"), "COUNIT"));
    EXPECT_TRUE(oracle::axiom(catalog_get("wba3.6").structure, "COUNIT"));
}

TEST(Cli, DocsAreDeterministicAndCommitted) {
    const fs::path a = temp_dir("docs-a"), b = temp_dir("docs-b");
    ASSERT_EQ(run(std::vector<std::string>{"--out", a.string(), "docs", "generate"}).code, 0);
    ASSERT_EQ(run(std::vector<std::string>{"--out", b.string(), "docs", "generate"}).code, 0);
    std::size_t files = 0;
    for (const auto& doc : generate_docs()) {
        EXPECT_EQ(slurp(a / doc.path), slurp(b / doc.path)) << doc.path;
        EXPECT_EQ(slurp(a / doc.path), doc.text) << doc.path;
        EXPECT_EQ(slurp(fs::path("docs") / doc.path), doc.text) << "docs/" << doc.path << " is stale; run wha docs generate";
        ++files;
    }
    EXPECT_GE(files, 5u);
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST(Cli, BinaryExitStatus) {
    const std::string bin = WHA_CLI;
    auto status = [&](const std::string& args) {
        const int s = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
        return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    EXPECT_EQ(status("verify sweedler5"), 0);
    EXPECT_EQ(status("verify sweedler5 --level strict-bialgebra"), 1);
    EXPECT_EQ(status("verify data/garbage.json"), 2);
    EXPECT_EQ(status("catalog separation --dim 3"), 3);
}
