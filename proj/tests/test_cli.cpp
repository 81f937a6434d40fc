#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") +
                      std::string(ALTBASE_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    CliResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

json payload_of(const CliResult& res) {
    json j = json::parse(res.out);
    return j.at("payload");
}

}  // namespace

TEST_CASE("expand command reproduces the family example") {
    auto res = run_cli("expand --base pp:2 --x 3/4");
    REQUIRE(res.status == 0);
    json p = payload_of(res);
    CHECK(p.at("kind") == "purely_periodic");
    CHECK(p.at("word") == "(1,0,0,0,0,1,1,0,0,2,0,0)");

    auto zero = run_cli("expand --base pp:2 --x 0/1");
    REQUIRE(zero.status == 0);
    CHECK(payload_of(zero).at("kind") == "finite");
    CHECK(payload_of(zero).at("word") == "0");

    auto shifted = run_cli("expand --base pp:2,shift2 --x 1/2");
    REQUIRE(shifted.status == 0);
    CHECK(payload_of(shifted).at("word") == "1(0,0,0,1,0,2)");
}

TEST_CASE("value command inverts expand") {
    auto res = run_cli("value --base pp:2 --word \"(1,0,0,0,0,1,1,0,0,2,0,0)\"");
    REQUIRE(res.status == 0);
    CHECK(payload_of(res).at("value") == "3/4");

    auto zero = run_cli("value --base pp:2 --word 0");
    REQUIRE(zero.status == 0);
    CHECK(payload_of(zero).at("value") == "0/1");
}

TEST_CASE("one command reports both expansions of 1") {
    auto res = run_cli("one --base pp:1");
    REQUIRE(res.status == 0);
    json p = payload_of(res);
    CHECK(p.at("d1").at("word") == "1,1");
    CHECK(p.at("dstar1").at("word") == "(1,0)");
    CHECK(p.at("dstar1").at("closed") == true);

    auto res2 = run_cli("one --base pp:3,shift2");
    REQUIRE(res2.status == 0);
    json p2 = payload_of(res2);
    CHECK(p2.at("d1").at("word") == "3,0,1");
    CHECK(p2.at("dstar1").at("word") == "3,0(0,1)");
}

TEST_CASE("admissible command") {
    auto res = run_cli("admissible --base pp:2 --word \"(1,0,0,0,0,1,1,0,0,2,0,0)\"");
    REQUIRE(res.status == 0);
    CHECK(payload_of(res).at("verdict") == "admissible");

    auto bad = run_cli("admissible --base pp:2 --word \"0,2,0,1\"");
    REQUIRE(bad.status == 0);
    CHECK(payload_of(bad).at("verdict") == "not_admissible");
    CHECK(payload_of(bad).at("position") == 2);
}

TEST_CASE("classify command") {
    auto res = run_cli("classify --base pp:2");
    REQUIRE(res.status == 0);
    json p = payload_of(res);
    CHECK(p.at("delta").at("kind") == "pisot");
    CHECK(p.at("delta").at("is_unit") == true);
    bool found_negative_row = false;
    for (const auto& row : p.at("positivity"))
        if (row.at("is_identity") == false && row.at("verdict") == "not_all_positive")
            found_negative_row = true;
    CHECK(found_negative_row);
    CHECK(p.at("shifts").size() == 2);
}

TEST_CASE("pp-rewrite and gamma-scan commands") {
    auto res = run_cli("pp-rewrite --m 2 --x 3/4 --trace");
    REQUIRE(res.status == 0);
    json p = payload_of(res);
    CHECK(p.at("word") == "(1,0,0,0,0,1,1,0,0,2,0,0)");
    CHECK(p.at("delta_word") == "(2,1,1,2,3,0)");
    CHECK(p.contains("trace"));

    auto scan = run_cli("gamma-scan --base pp:2,shift2 --qmax 12");
    REQUIRE(scan.status == 0);
    json s = payload_of(scan);
    CHECK(s.at("first_failure").is_object());
}

TEST_CASE("certify and f-check commands") {
    auto res = run_cli("certify --base pp:2 --xs 1/2,1/3");
    REQUIRE(res.status == 0);
    json p = payload_of(res);
    CHECK(p.at("checks").at("matrix_kills_v") == true);
    CHECK(p.at("checks").at("det_vanishes_at_delta") == true);
    CHECK(p.at("checks").at("det_nonzero_poly") == true);

    auto fc = run_cli("f-check --base pp:2 --samples 40");
    REQUIRE(fc.status == 0);
    CHECK(payload_of(fc).at("violations").is_array());
}

TEST_CASE("convert command round trips") {
    auto res = run_cli("convert --base pp:2 --word \"0,2,1,0\" --direction to_delta");
    REQUIRE(res.status == 0);
    json dw = payload_of(res).at("delta_word");
    REQUIRE(dw.at("preperiod").size() == 2);
    CHECK(dw.at("preperiod")[0].at("block") == json::array({0, 2}));

    std::string arg = dw.dump();
    for (size_t pos = 0; (pos = arg.find('"', pos)) != std::string::npos; pos += 2)
        arg.replace(pos, 1, "\\\"");
    auto back = run_cli("convert --base pp:2 --direction from_delta --delta-word \"" +
                        arg + "\"");
    REQUIRE(back.status == 0);
    CHECK(payload_of(back).at("word") == "0,2,1");  // canonical: trailing zero dropped
}

TEST_CASE("file base references") {
    std::string path = "/tmp/altbase_test_base.json";
    {
        std::ofstream out(path);
        out << R"({"minpoly": [-1, -3, 1], "root_interval": ["3", "4"],)"
            << R"( "betas": [["1/3", "1/3"], ["-1", "1"]]})";
    }
    auto res = run_cli("expand --base file:" + path + " --x 3/4");
    REQUIRE(res.status == 0);
    CHECK(payload_of(res).at("word") == "(1,0,0,0,0,1,1,0,0,2,0,0)");
    std::remove(path.c_str());
}

TEST_CASE("exit codes") {
    CHECK(run_cli("expand --base pp:2 --x notanumber").status == 2);
    CHECK(run_cli("expand --base nonsense --x 1/2").status == 2);
    CHECK(run_cli("nosuchcommand").status == 2);
    CHECK(run_cli("expand --base pp:2").status == 2);  // missing --x
    // domain error: x negative
    auto res = run_cli("expand --base pp:2 --x -1/2");
    CHECK(res.status == 1);
    CHECK(payload_of(res).at("error").at("code") == "out_of_range");
}

TEST_CASE("cap flag and environment override") {
    auto res = run_cli("expand --base pp:2 --x 3/4 --cap 3");
    REQUIRE(res.status == 0);
    CHECK(payload_of(res).at("kind") == "truncated");

    // the environment variable sets the default cap
    auto env = run_cli("expand --base pp:2 --x 3/4", "ALTBASE_CAP=3");
    REQUIRE(env.status == 0);
    CHECK(payload_of(env).at("kind") == "truncated");

    // an explicit flag wins over the environment
    auto both = run_cli("expand --base pp:2 --x 3/4 --cap 20000", "ALTBASE_CAP=3");
    REQUIRE(both.status == 0);
    CHECK(payload_of(both).at("kind") == "purely_periodic");
}

TEST_CASE("output is byte stable across runs") {
    auto a = run_cli("expand --base pp:2 --x 3/4");
    auto b = run_cli("expand --base pp:2 --x 3/4");
    CHECK(a.out == b.out);
    auto c = run_cli("classify --base pp:2");
    auto d = run_cli("classify --base pp:2");
    CHECK(c.out == d.out);
}
