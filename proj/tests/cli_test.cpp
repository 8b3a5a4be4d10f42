#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "test_util.hpp"

using namespace netident;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

// Runs the CLI through the shell; `redirect` is appended and `env` prepended verbatim.
CliRun cli(const std::string& args, const std::string& redirect = "2>/dev/null", const std::string& env = "") {
    const std::string cmd = env + " " + std::string(NETIDENT_CLI) + " " + args + " " + redirect;
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string sample(const char* name) { return std::string(NETIDENT_SAMPLES) + "/" + name; }

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("netident_cli_test_" + name);
}

} // namespace

TEST(CliCheck, ExitCodes) {
    const CliRun ok = cli("check " + sample("minimal.json"));
    EXPECT_EQ(ok.code, 0);
    EXPECT_TRUE(contains(ok.out, "local-generic: identifiable"));
    EXPECT_TRUE(contains(ok.out, "decoupled-generic: identifiable"));
    EXPECT_EQ(cli("check " + sample("unreachable.json")).code, 1);
    const CliRun bad = cli("check " + sample("malformed.json"), "2>&1");
    EXPECT_EQ(bad.code, 3);
    EXPECT_TRUE(contains(bad.out, "malformed.json:5:")) << bad.out;
    EXPECT_EQ(cli("check /nonexistent.json").code, 3);
    EXPECT_EQ(cli("check").code, 3);
    EXPECT_EQ(cli("bogus").code, 3);
    EXPECT_EQ(cli("check " + sample("minimal.json") + " --trials 0").code, 3);
}

TEST(CliCheck, JsonReportAndSeedFromEnvironment) {
    const CliRun r = cli("check --json " + sample("cancellation.json"));
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["command"]["name"], "check");
    EXPECT_EQ(j["network"]["nodes"], 6);
    EXPECT_EQ(j["verdicts"].size(), 2u);
    EXPECT_EQ(j["verdicts"][0]["decision"], "identifiable");
    EXPECT_FALSE(j.contains("timing_ms"));

    const std::string minimal = "check --json " + sample("minimal.json");
    const CliRun plain = cli(minimal);
    const CliRun flag = cli(minimal + " --seed 17");
    const CliRun env = cli(minimal, "2>/dev/null", "NETIDENT_SEED=17");
    EXPECT_EQ(env.out, flag.out);
    EXPECT_NE(env.out, plain.out);
    EXPECT_EQ(Json::parse(env.out)["verdicts"][0]["evidence"]["seed"], 17);
    // The flag wins over the environment.
    EXPECT_EQ(cli(minimal + " --seed 0", "2>/dev/null", "NETIDENT_SEED=17").out, plain.out);
    EXPECT_EQ(cli(minimal, "2>/dev/null", "NETIDENT_SEED=abc").code, 3);

    EXPECT_TRUE(Json::parse(cli("check --json --timing " + sample("minimal.json")).out).contains("timing_ms"));
}

TEST(CliSeparable, Examples) {
    const CliRun fig = cli("separable " + sample("two_subgraphs.json"));
    EXPECT_EQ(fig.code, 0);
    EXPECT_TRUE(contains(fig.out, "1 2 3 4 5 6 7 8")) << fig.out;
    const CliRun both = cli("separable " + sample("excited_and_measured.json"));
    EXPECT_EQ(both.code, 1);
    EXPECT_TRUE(contains(both.out, "node 4")) << both.out;
    const Json j = Json::parse(cli("separable --json " + sample("excited_and_measured.json")).out);
    EXPECT_FALSE(j["separable"].get<bool>());

    for (int seed : {1, 2, 3}) {
        const auto path = temp_file("sep" + std::to_string(seed) + ".json");
        ASSERT_EQ(cli("gen --nodes 7 --unknowns 2 --excited 2 --measured 1 --separable --seed " + std::to_string(seed) +
                      " -o " + path.string())
                      .code,
                  0);
        EXPECT_EQ(cli("separable " + path.string()).code, 0);
        std::filesystem::remove(path);
    }
}

TEST(CliDecouple, WritesSeparableNetwork) {
    const CliRun r = cli("decouple " + sample("minimal.json"));
    ASSERT_EQ(r.code, 0);
    const NetworkModel d = parse_network(r.out);
    EXPECT_EQ(d.n, 4u);
    EXPECT_EQ(d, decouple(load_network(sample("minimal.json"))));

    const auto path = temp_file("chain_decoupled.json");
    const auto chain_path = temp_file("chain.json");
    save_network(testutil::net(3, {{0, 1, testutil::K}, {1, 2, testutil::U}}, {0}, {2}), chain_path.string());
    ASSERT_EQ(cli("decouple " + chain_path.string() + " -o " + path.string()).code, 0);
    const NetworkModel dc = load_network(path.string());
    EXPECT_EQ(dc.n, 6u);
    EXPECT_TRUE(std::holds_alternative<SeparableBlocks>(is_separable(dc)));
    EXPECT_EQ(cli("decouple " + chain_path.string() + " -o /nonexistent/dir/out.json").code, 3);
    std::filesystem::remove(path);
    std::filesystem::remove(chain_path);
}

TEST(CliCombinatorial, ExitCodesAndTable) {
    const CliRun ok = cli("combinatorial " + sample("minimal.json"));
    EXPECT_EQ(ok.code, 0);
    EXPECT_TRUE(contains(ok.out, "1 => 2")) << ok.out;
    const Json j = Json::parse(cli("combinatorial --json " + sample("minimal.json")).out);
    ASSERT_EQ(j["table"]["entries"].size(), 1u);
    EXPECT_EQ(j["table"]["entries"][0]["text"], "1");
    EXPECT_EQ(j["table"]["entries"][0]["repetition"], 1);

    EXPECT_EQ(cli("combinatorial " + sample("unreachable.json")).code, 1);
    const CliRun low = cli("combinatorial --max-degree 2 " + sample("cancellation.json"));
    EXPECT_EQ(low.code, 2);
    EXPECT_TRUE(contains(low.out, "inconclusive")) << low.out;
    EXPECT_EQ(cli("combinatorial --max-degree 3 " + sample("cancellation.json")).code, 0);
    EXPECT_EQ(cli("combinatorial " + sample("excited_and_measured.json")).code, 3);
    // Any topology through the decoupled network: a square 2-cycle is not
    // separable itself.
    const auto cyc = temp_file("cycle.json");
    save_network(testutil::net(2, {{0, 1, testutil::U}, {1, 0, testutil::K}}, {0}, {1}), cyc.string());
    EXPECT_EQ(cli("combinatorial " + cyc.string()).code, 3);
    const CliRun dec = cli("combinatorial --decouple-first --max-degree 6 " + cyc.string());
    EXPECT_EQ(dec.code, 0);
    EXPECT_TRUE(contains(dec.out, "decoupled-generic")) << dec.out;
    std::filesystem::remove(cyc);
}

TEST(CliOracle, Agreement) {
    EXPECT_EQ(cli("oracle " + sample("minimal.json")).code, 0);
    EXPECT_EQ(cli("oracle " + sample("cancellation.json") + " --max-degree 4").code, 0);
    EXPECT_EQ(cli("oracle " + sample("excited_and_measured.json")).code, 3);
    // Seven unknowns exceed the oracle's size guard.
    NetworkModel big;
    big.n = 8;
    big.excited = {0};
    for (NodeId c = 1; c < 8; ++c) {
        big.edges.push_back({0, c, EdgeKind::Unknown, std::nullopt});
        big.measured.push_back(c);
    }
    const auto path = temp_file("big.json");
    save_network(big, path.string());
    EXPECT_EQ(cli("oracle " + path.string()).code, 3);
    std::filesystem::remove(path);
}

TEST(CliGen, DeterministicAndValid) {
    const std::string flags = "gen --nodes 6 --separable --acyclic --unknowns 2 --excited 2 --measured 1 --seed 7";
    const CliRun a = cli(flags), b = cli(flags);
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const NetworkModel net = parse_network(a.out);
    EXPECT_TRUE(std::holds_alternative<SeparableBlocks>(is_separable(net)));
    EXPECT_EQ(net.n_unknown(), 2u);
    EXPECT_EQ(cli("gen --nodes 2 --unknowns 5 --separable").code, 3);
    EXPECT_EQ(cli("gen --known-density 2").code, 3);
}

TEST(CliGen, HundredDrawsValidate) {
    for (int seed = 0; seed < 100; ++seed) {
        const std::string flags = "gen --nodes " + std::to_string(3 + seed % 6) + " --unknowns " +
                                  std::to_string(1 + seed % 3) + " --known-density 0.4 --seed " + std::to_string(seed) +
                                  (seed % 2 ? " --acyclic" : "");
        const CliRun r = cli(flags);
        ASSERT_EQ(r.code, 0) << flags;
        ASSERT_NO_THROW(parse_network(r.out)) << flags;
    }
}
