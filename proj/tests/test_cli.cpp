#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "vcrit/cli.hpp"
#include "vcrit/coloring.hpp"
#include "vcrit/graph6.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = vcrit::cli::run(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) out.push_back(line);
    return out;
}

fs::path scratch_file(const std::string& name, const std::string& content) {
    const fs::path p = fs::temp_directory_path() / name;
    std::ofstream f(p);
    f << content;
    return p;
}

}  // namespace

TEST_CASE("cli: chi") {
    const auto r = run_cli({"chi", "Dhc"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "chi 3");

    std::istringstream cs(ls[1]);
    std::string word;
    cs >> word;
    CHECK(word == "coloring");
    std::vector<int> assignment;
    for (int c; cs >> c;) assignment.push_back(c);
    CHECK(vcrit::verify_coloring(vcrit::cycle_graph(5), vcrit::Coloring{3, assignment}));
}

TEST_CASE("cli: chi over stdin handles several graphs") {
    const auto r = run_cli({"chi"}, "Dhc\nD~{\n");
    CHECK(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0] == "chi 3");
    CHECK(ls[2] == "chi 5");
}

TEST_CASE("cli: critical") {
    const auto yes = run_cli({"critical", "--k", "3", "Dhc"});
    CHECK(yes.code == 0);
    CHECK(lines(yes.out) == std::vector<std::string>{"chi 3", "critical true"});

    const auto no = run_cli({"critical", "--k", "4", "Dhc"});
    CHECK(no.code == 1);
    CHECK(lines(no.out) == std::vector<std::string>{"chi 3", "critical false"});

    const auto verbose = run_cli({"--verbose", "critical", "--k", "3", "Dhc"});
    CHECK(verbose.code == 0);
    const auto ls = lines(verbose.out);
    REQUIRE(ls.size() == 7);
    for (int v = 0; v < 5; ++v)
        CHECK(ls[2 + v] == "deleted " + std::to_string(v) + " chi 2");
}

TEST_CASE("cli: enumerate") {
    const auto profiles = run_cli({"enumerate", "--k", "3", "--profiles"});
    CHECK(profiles.code == 0);
    CHECK(profiles.out == "K3\n1,1,1,1,1\n");

    const auto graphs = run_cli({"enumerate", "--k", "5"});
    CHECK(graphs.code == 0);
    const auto ls = lines(graphs.out);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0] == "D~{");
    std::vector<int> orders;
    for (const auto& line : ls) orders.push_back(vcrit::decode_graph6(line).order());
    CHECK(orders == std::vector<int>{5, 9, 9, 9});

    // byte-for-byte repeatable
    CHECK(run_cli({"enumerate", "--k", "6"}).out == run_cli({"enumerate", "--k", "6"}).out);
}

TEST_CASE("cli: table") {
    const auto r = run_cli({"table", "--max-k", "8"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 1\n2 1\n3 2\n4 2\n5 4\n6 6\n7 11\n8 17\n");

    const auto full = run_cli({"table", "--max-k", "16"});
    CHECK(full.code == 0);
    CHECK(lines(full.out).back() == "16 253");
}

TEST_CASE("cli: freecheck") {
    const auto free = run_cli({"freecheck", "--forbid", "gem,co-gem", "Dhc"});
    CHECK(free.code == 0);
    CHECK(free.out == "gem free\nco-gem free\n");

    const auto hit = run_cli({"freecheck", "--forbid", "c5", "Dhc"});
    CHECK(hit.code == 1);
    CHECK(hit.out == "c5 witness 0 1 2 3 4\n");

    const auto bogus = run_cli({"freecheck", "--forbid", "heptagon", "Dhc"});
    CHECK(bogus.code == 2);
    CHECK(bogus.err.find("unknown forbidden family") != std::string::npos);
}

TEST_CASE("cli: certify") {
    const auto no = run_cli({"certify", "--k", "2", "Dhc"});
    CHECK(no.code == 1);
    CHECK(no.out ==
          "{\"verdict\":\"no\",\"k\":2,\"coloring\":null,\"witness\":[0,1,2,3,4],"
          "\"claimed\":\"profile:1,1,1,1,1\"}\n");

    const auto yes = run_cli({"certify", "--k", "3", "Dhc"});
    CHECK(yes.code == 0);
    CHECK(yes.out.starts_with("{\"verdict\":\"yes\""));
}

TEST_CASE("cli: verify") {
    const auto cert = run_cli({"certify", "--k", "2", "Dhc"});
    const fs::path good = scratch_file("vcrit_cert_good.json", cert.out);
    const auto accept = run_cli({"verify", "--k", "2", "--cert", good.string(), "Dhc"});
    CHECK(accept.code == 0);
    CHECK(accept.out == "accept\n");

    // same certificate against the wrong budget
    const auto wrong_k = run_cli({"verify", "--k", "3", "--cert", good.string(), "Dhc"});
    CHECK(wrong_k.code == 1);
    CHECK(wrong_k.out == "reject\n");

    // tampered witness
    std::string doctored = cert.out;
    const auto at = doctored.find("[0,1,2,3,4]");
    REQUIRE(at != std::string::npos);
    doctored.replace(at, 11, "[0,1,2,3,3]");
    const fs::path bad = scratch_file("vcrit_cert_bad.json", doctored);
    const auto reject = run_cli({"verify", "--k", "2", "--cert", bad.string(), "Dhc"});
    CHECK(reject.code == 1);
    CHECK(reject.out == "reject\n");

    const auto gone = run_cli({"verify", "--k", "2", "--cert", "/nonexistent/c.json", "Dhc"});
    CHECK(gone.code == 2);
    CHECK(gone.err.find("cannot open certificate") != std::string::npos);

    const fs::path junk = scratch_file("vcrit_cert_junk.json", "{{{");
    const auto broken = run_cli({"verify", "--k", "2", "--cert", junk.string(), "Dhc"});
    CHECK(broken.code == 2);
    CHECK(broken.err.find("error:") != std::string::npos);

    const auto two = run_cli({"verify", "--k", "2", "--cert", good.string()}, "Dhc\nDhc\n");
    CHECK(two.code == 2);
    CHECK(two.err.find("exactly one input graph") != std::string::npos);

    fs::remove(good);
    fs::remove(bad);
    fs::remove(junk);
}

TEST_CASE("cli: catalog") {
    const auto base1 = run_cli({"catalog", "--id", "1"});
    CHECK(base1.code == 0);
    CHECK(vcrit::decode_graph6(lines(base1.out).at(0)) == vcrit::cycle_graph(5));

    const auto base2 = run_cli({"--verbose", "catalog", "--id", "2"});
    CHECK(base2.code == 0);
    const auto ls = lines(base2.out);
    REQUIRE(ls.size() == 2);
    const vcrit::Graph g = vcrit::decode_graph6(ls[0]);
    CHECK(g.order() == 7);
    CHECK(g.edge_count() == 10);
    CHECK(ls[1] == "marked 0 3 5");

    const auto out_of_range = run_cli({"catalog", "--id", "11"});
    CHECK(out_of_range.code == 2);
    CHECK(out_of_range.err.find("error:") != std::string::npos);
}

TEST_CASE("cli: graph input channels") {
    const fs::path graphs = scratch_file("vcrit_graphs.g6", "Dhc\nBw\n");
    const auto from_file = run_cli({"freecheck", "--forbid", "gem", "--file", graphs.string()});
    CHECK(from_file.code == 0);
    CHECK(from_file.out == "gem free\ngem free\n");
    fs::remove(graphs);

    const auto threaded = run_cli({"--threads", "2", "critical", "--k", "3", "Dhc"});
    CHECK(threaded.code == 0);
    CHECK(lines(threaded.out) == std::vector<std::string>{"chi 3", "critical true"});
}

TEST_CASE("cli: error surface") {
    const auto bad_g6 = run_cli({"chi", "D"});
    CHECK(bad_g6.code == 2);
    CHECK(bad_g6.err.find("error:") != std::string::npos);
    CHECK(bad_g6.err.find("truncated") != std::string::npos);

    const auto no_k = run_cli({"enumerate"});
    CHECK(no_k.code == 2);
    CHECK_FALSE(no_k.err.empty());

    const auto no_sub = run_cli({});
    CHECK(no_sub.code == 2);

    const auto unknown = run_cli({"frobnicate"});
    CHECK(unknown.code == 2);

    const auto too_high = run_cli({"certify", "--k", "16", "Dhc"});
    CHECK(too_high.code == 2);
    CHECK(too_high.err.find("enumeration level too large") != std::string::npos);

    const auto help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("vcrit") != std::string::npos);
}
