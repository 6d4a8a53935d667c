#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "qtsym/cli.hpp"

using namespace qtsym;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("hhl subcommand") {
    CliResult r = run({"hhl", "--mu", "2", "--basis", "s"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "s[2] + q*s[1,1]\n");

    CliResult m = run({"hhl", "--mu", "2,1", "--basis", "m"});
    REQUIRE(m.code == 0);
    REQUIRE(m.out.find("m[") != std::string::npos);
}

TEST_CASE("hhl output is byte-stable") {
    CliResult a = run({"hhl", "--mu", "3,1"});
    CliResult b = run({"hhl", "--mu", "3,1"});
    REQUIRE(a.out == b.out);
    REQUIRE(a.code == 0);
}

TEST_CASE("piece subcommand") {
    CliResult r = run({"piece", "--mu", "2,1", "--k", "1"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "s[2]\n");

    CliResult q = run({"piece", "--mu", "2,1", "--lambda", "1", "--k", "1", "--qt1"});
    REQUIRE(q.code == 0);
    REQUIRE(q.out.find("s[1,1]") != std::string::npos);
    REQUIRE(q.out.find("qt1:") != std::string::npos);

    CliResult bad = run({"piece", "--mu", "2,1", "--k", "2"});
    REQUIRE(bad.code != 0);
}

TEST_CASE("lw subcommand with artifacts") {
    std::filesystem::path tmp = std::filesystem::temp_directory_path() / "qtsym_cli_test";
    std::filesystem::create_directories(tmp);
    std::string json = (tmp / "lw.json").string();
    std::string csv = (tmp / "lw.csv").string();
    CliResult r = run({"lw", "--lambda", "1,1", "--n", "3", "--k", "2", "--path", "both",
                       "--json", json, "--csv", csv});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("direct:") != std::string::npos);
    REQUIRE(r.out.find("det:") != std::string::npos);
    Json parsed = Json::parse(read_file(json));
    REQUIRE(parsed.at("basis") == "s");
    std::string csv_text = read_file(csv);
    REQUIRE(csv_text.rfind("dinv,area,count\n", 0) == 0);
    std::filesystem::remove_all(tmp);
}

TEST_CASE("nabla subcommand") {
    CliResult r = run({"nabla", "--lambda", "1"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "s[1]\n");
}

TEST_CASE("qt1 rd subcommand") {
    CliResult r = run({"qt1", "rd", "--max-size", "2"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("lambda,rd\n") == 0);
    REQUIRE(r.out.find("[1],1/2") != std::string::npos);
    REQUIRE(r.out.find("[2],1/3") != std::string::npos);
    REQUIRE(r.out.find("[1,1],5/12") != std::string::npos);
}

TEST_CASE("cache admin") {
    // isolate the cache under a temp dir for this test
    std::filesystem::path tmp = std::filesystem::temp_directory_path() / "qtsym_cache_test";
    std::filesystem::remove_all(tmp);
    setenv("QTSYM_CACHE_DIR", tmp.c_str(), 1);

    CliResult stamp1 = run({"cache", "stamp"});
    CliResult stamp2 = run({"cache", "stamp"});
    REQUIRE(stamp1.code == 0);
    REQUIRE(stamp1.out == stamp2.out);

    CliResult clear_empty = run({"cache", "clear"});
    REQUIRE(clear_empty.code == 0);

    // a shape no other unit test touches, so the in-memory memo is cold and
    // the disk entry is genuinely written here
    CliResult h = run({"hhl", "--mu", "5,1,1"});
    REQUIRE(h.code == 0);
    CliResult listed = run({"cache", "list"});
    REQUIRE(listed.code == 0);
    REQUIRE(listed.out.find("H_5-1-1.json") != std::string::npos);

    CliResult cleared = run({"cache", "clear"});
    REQUIRE(cleared.code == 0);
    CliResult empty = run({"cache", "list"});
    REQUIRE(empty.out.empty());

    unsetenv("QTSYM_CACHE_DIR");
    std::filesystem::remove_all(tmp);
}

TEST_CASE("invalid flags produce usage text and nonzero exit") {
    CliResult r = run({"hhl", "--nonsense"});
    REQUIRE(r.code != 0);
    REQUIRE(r.err.find("Usage") != std::string::npos);
}

TEST_CASE("verify subcommand smoke run") {
    CliResult r = run({"verify", "properties"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("suite properties") != std::string::npos);
    REQUIRE(r.out.find("PASS") != std::string::npos);
}
