#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "multdisc/cli.hpp"

using multdisc::cli::run;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify json is exact and schema-stable") {
    const auto r = call({"classify", "--coeffs", "1,-1,-3,5,-2", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"degree\":4,\"ndr\":2,\"multiplicity\":[3,1],\"certificates\":[{\"mu\":[3,1],\"value\":\"-729\"},"
          "{\"mu\":[2,2],\"value\":\"0\"}]}\n");
    const auto parsed = nlohmann::ordered_json::parse(r.out);
    CHECK(parsed.dump() + "\n" == r.out);
    const auto trivial = nlohmann::json::parse(call({"classify", "--coeffs", "1,0,0,0,0", "--format", "json"}).out);
    for (const char* key : {"degree", "ndr", "multiplicity", "certificates"}) CHECK(trivial.contains(key));
    CHECK(trivial["multiplicity"] == nlohmann::json::array({4}));
}

TEST_CASE("classify input errors") {
    const auto lead = call({"classify", "--coeffs", "0,1,2"});
    CHECK(lead.code == 1);
    CHECK(lead.err.find("LeadingZero") != std::string::npos);
    CHECK(call({"classify", "--coeffs", "1,x"}).code == 1);
    CHECK(call({"classify"}).code == 1);
    CHECK(call({"classify", "--coeffs", "1,2", "--file", "x"}).code == 1);
    CHECK(call({"classify", "--coeffs", "1,2", "--workers", "0"}).code == 1);
    CHECK(call({}).code == 1);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("classify batch file") {
    const std::string path = "cli_batch_test.txt";
    {
        std::ofstream f(path);
        f << "# comment line\n1,-1,-3,5,-2\n\n1,0,-2,0,1  # trailing comment\n1,0,0,0,0\n";
    }
    const auto r = call({"classify", "--file", path, "--format", "json"});
    std::remove(path.c_str());
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::vector<std::string> mus;
    for (std::string line; std::getline(lines, line);) mus.push_back(nlohmann::json::parse(line)["multiplicity"].dump());
    CHECK(mus == std::vector<std::string>{"[3,1]", "[2,2]", "[4]"});
    CHECK(call({"classify", "--file", "no/such/file"}).code == 1);
}

TEST_CASE("classify text and truncation") {
    const auto r = call({"classify", "--coeffs", "1,-1,-3,5,-2"});
    CHECK(r.out == "1,-1,-3,5,-2: multiplicity [3,1] (degree 4, ndr 2); D[3,1]=-729 D[2,2]=0\n");
    CHECK(multdisc::cli::truncate_digits("-123456789012", 6) == "-123…(12 digits)…012");
    CHECK(multdisc::cli::truncate_digits("12345", 6) == "12345");
    CHECK(multdisc::cli::truncate_digits("1234567", 0) == "1234567");
}

TEST_CASE("dmu command") {
    const auto sym = call({"dmu", "--n", "4", "--mu", "3,1", "--symbolic"});
    CHECK(sym.code == 0);
    CHECK(sym.out.substr(0, sym.out.find('\n')) ==
          "-64*a0^5*a3^2 + 64*a0^4*a1*a2*a3 - 16*a0^3*a1^3*a3 - 16*a0^3*a1^2*a2^2 + 8*a0^2*a1^4*a2 - a0*a1^6");
    CHECK(sym.out.find("total degree: 7") != std::string::npos);
    CHECK(sym.out.find("terms: 6") != std::string::npos);
    CHECK(call({"dmu", "--n", "4", "--mu", "3,1", "--eval", "1,0,-2,0,1"}).out == "0\n");
    CHECK(call({"dmu", "--n", "4", "--mu", "3,1", "--eval", "1,-1,-3,5,-2"}).out == "-729\n");
    const auto bad = call({"dmu", "--n", "4", "--mu", "5,1", "--symbolic"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("ParseError") != std::string::npos);
    const auto cap = call({"dmu", "--n", "7", "--mu", "4,3", "--symbolic"});
    CHECK(cap.code == 1);
    CHECK(cap.err.find("CapExceeded") != std::string::npos);
    CHECK(call({"dmu", "--n", "4", "--mu", "3,1"}).code == 1);
    CHECK(call({"dmu", "--n", "4", "--mu", "3,1", "--eval", "1,2"}).code == 1);
    const auto js = nlohmann::json::parse(call({"dmu", "--n", "4", "--mu", "2,2", "--symbolic", "--format", "json"}).out);
    CHECK(js["total_degree"] == 6);
    CHECK(js["matrix_dim"] == 6);
}

TEST_CASE("yhz command") {
    const auto r = call({"yhz", "--n", "4", "--mu", "3,1", "--symbolic"});
    CHECK(r.code == 0);
    CHECK(r.out.find("I = 16*a0^2*a2 - 6*a0*a1^2 != 0") != std::string::npos);
    CHECK(r.out.find("count: 2") != std::string::npos);
    const auto e = call({"yhz", "--n", "4", "--mu", "3,1", "--eval", "1,-1,-3,5,-2"});
    CHECK(e.out.find("holds: yes") != std::string::npos);
    CHECK(call({"yhz", "--n", "4", "--mu", "1,1,1,1", "--symbolic"}).code == 1);
}

TEST_CASE("table command") {
    const auto csv = call({"table", "--n", "4", "--format", "csv"});
    CHECK(csv.out == "n,m,mu,num_new,num_yhz,d_new,d_yhz\n4,2,\"[2,2]\",1,1,6,9\n4,2,\"[3,1]\",1,2,7,9\n");
    CHECK(call({"table", "--n", "3", "--format", "csv"}).out == "n,m,mu,num_new,num_yhz,d_new,d_yhz\n");
    const auto rows = nlohmann::json::parse(call({"table", "--n", "8", "--format", "json"}).out);
    CHECK(rows.size() == 19);
    const auto measured = call({"table", "--n", "5", "--format", "csv", "--measure-upto", "5", "--witness"});
    CHECK(measured.out.find("false") == std::string::npos);
}

TEST_CASE("verify command") {
    const auto ok = call({"verify", "--suite", "lemma2", "--trials", "30", "--seed", "7"});
    CHECK(ok.code == 0);
    CHECK(ok.out.rfind("suite lemma2: PASS", 0) == 0);
    const auto unknown = call({"verify", "--suite", "nosuch"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("UnknownSuite") != std::string::npos);
}

TEST_CASE("output is identical across worker counts") {
    const std::vector<std::string> base{"classify", "--coeffs", "2,0,-22,-8,62,16,-66,-8,24", "--format", "json"};
    auto one = base, four = base;
    one.insert(one.end(), {"--workers", "1", "--engine", "direct"});
    four.insert(four.end(), {"--workers", "4", "--engine", "direct"});
    const auto a = call(one), b = call(four), c = call(base);
    CHECK(a.code == 0);
    CHECK(nlohmann::json::parse(a.out)["multiplicity"].dump() == "[3,2,2,1]");
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}
