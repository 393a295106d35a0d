#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run zfx(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + (env.empty() ? "" : " ") + "'" ZFX_BIN "' " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "zfx_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

int line_count(const std::string& s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

}  // namespace

TEST_CASE("profile of P4 in text, CSV and JSON") {
    const auto text = zfx("profile --path 4");
    CHECK(text.status == 0);
    CHECK(text.out.find("z          0,2,6,4,1") != std::string::npos);
    CHECK(text.out.find("Z(G)       1") != std::string::npos);

    const auto csv = zfx("profile --path 4 --against-path --csv");
    CHECK(csv.status == 0);
    CHECK(csv.out.rfind("k,z,zprime,path_z,margin\n", 0) == 0);
    CHECK(csv.out.find("\n2,6,0,6,0\n") != std::string::npos);

    const auto js = zfx("profile --cycle 4 --json");
    REQUIRE(js.status == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["z"] == nlohmann::json({0, 0, 4, 4, 1}));
    CHECK(j["zf_number"] == 2);
    CHECK(j["graph6"] == "Cl");
}

TEST_CASE("K4 profile") {
    const auto r = zfx("profile --complete 4 --json");
    REQUIRE(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["z"] == nlohmann::json({0, 0, 0, 4, 1}));
}

TEST_CASE("decompose dump with check") {
    const auto r = zfx("decompose --path 4 --check");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("tree vertices=4 bags=2 edges=1\n"
                      "bag 0 star size=3 center=1 label=0-1,1-2 ordinary=0:0,1:1 markers=2:0\n"
                      "bag 1 star size=3 center=0 label=0-1,0-2 ordinary=0:2,1:3 markers=2:0\n"
                      "edge 0 0 1\n",
                      0) == 0);
    CHECK(r.out.find("check ok") != std::string::npos);
    CHECK(zfx("decompose --g6 Dhc").out.find("prime_bags=1") != std::string::npos);
}

TEST_CASE("recognize-dh") {
    const auto c5 = zfx("recognize-dh --g6 Dhc");
    CHECK(c5.status == 0);
    CHECK(c5.out.find("distance_hereditary no") != std::string::npos);
    const auto p3 = zfx("recognize-dh --path 3");
    CHECK(p3.out.find("distance_hereditary yes") != std::string::npos);
    CHECK(p3.out.find("pendant") != std::string::npos);
}

TEST_CASE("enumerate") {
    const auto all = zfx("enumerate --nmax 4");
    CHECK(all.status == 0);
    CHECK(line_count(all.out) == 1 + 2 + 4 + 11);
    CHECK(line_count(zfx("enumerate --nmin 5 --nmax 5 --connected").out) == 21);
    CHECK(zfx("enumerate --nmax 9").status == 1);
}

TEST_CASE("argument and input errors exit with 1") {
    CHECK(zfx("profile").status == 1);
    CHECK(zfx("profile --path 3 --cycle 4").status == 1);
    const auto bad = zfx("profile --g6 '!!!'");
    CHECK(bad.status == 1);
    CHECK(bad.out.find("zfx: error:") != std::string::npos);
    CHECK(zfx("decompose --complete 0").status == 1);
    CHECK(zfx("no-such-command").status == 1);
    CHECK(zfx("--help").status == 0);
}

TEST_CASE("campaigns write JSON to --out and agree across job counts") {
    const auto one = scratch("split1.json");
    const auto many = scratch("split3.json");
    CHECK(zfx("verify-split --nmax 6 --json --jobs 1 --out '" + one.string() + "'").status == 0);
    CHECK(zfx("verify-split --nmax 6 --json --out '" + many.string() + "'", "ZFX_JOBS=3").status == 0);
    std::ifstream a(one);
    std::ifstream b(many);
    auto ja = nlohmann::json::parse(a);
    auto jb = nlohmann::json::parse(b);
    CHECK(ja["parameters"]["jobs"] == 1);
    CHECK(jb["parameters"]["jobs"] == 3);
    CHECK(ja["clean"] == true);
    for (auto* j : {&ja, &jb}) {
        (*j)["parameters"].erase("jobs");
        for (auto& r : (*j)["reports"]) r.erase("timing");
    }
    CHECK(ja == jb);
}

TEST_CASE("campaign exit codes and corpus files") {
    CHECK(zfx("verify-dh --nmax 6").status == 0);
    CHECK(zfx("verify-unique-prime --nmax 6 --m 5").status == 0);
    CHECK(zfx("audit-lemmas --nmax 5").status == 0);

    const auto file = scratch("corpus.g6");
    std::ofstream(file) << "Dhc\nEhCG\nC~\n";
    const auto r = zfx("verify-dh --json --g6 '" + file.string() + "'");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    const auto& totals = j["reports"][0]["totals"];
    CHECK(totals["scanned"] == 3);
    CHECK(totals["verified"] == 2);
    CHECK(totals["skipped"] == 1);
    CHECK(j["reports"][0]["skipped_reasons"]["not_distance_hereditary"] == 1);

    CHECK(zfx("verify-dh --g6 '" + scratch("missing.g6").string() + "'").status == 1);
}

TEST_CASE("subset budget from the environment") {
    const auto r = zfx("verify-dh --g6 EhCG --json", "ZFX_BUDGET_SUBSETS=4");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["parameters"]["budget_subsets"] == 4);
    CHECK(j["reports"][0]["skipped_reasons"]["over_subset_budget"] == 1);
}
