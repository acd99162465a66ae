#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gstx/cli.hpp"

using namespace gstx::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run gstx_run(std::vector<std::string> args) {
    args.insert(args.begin(), "gstx");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << content;
    return p.string();
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_CASE("check: passing identity, JSON report") {
    const Run r = gstx_run({"check", "--identity", "LLS", "--alpha", "1", "--delta", "1", "--mu", "1",
                            "--f", "exp(-t)", "--y", "1"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["id"] == "LLS");
    CHECK(j["citation"] == "Lemma 1");
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    const std::vector<std::string> want = {
        "id",      "citation", "params",  "y",      "f",       "g",
        "tol",     "lhs_value", "rhs_value", "abs_err", "rel_err", "passed",
        "audit",   "status",  "message", "lhs_quad_diag", "rhs_quad_diag", "notes"};
    CHECK(keys == want);
    CHECK(j["lhs_value"].get<double>() == doctest::Approx(0.5963473623231940).epsilon(1e-9));
}

TEST_CASE("check: symmetric SS1 and the audit entry") {
    CHECK(gstx_run({"check", "--identity", "SS1", "--alpha", "2", "--delta", "2", "--mu", "1",
                    "--lambda", "1", "--f", "exp(-t)", "--g", "exp(-t)"})
              .code == 0);
    const Run a = gstx_run({"check", "--identity", "APP6", "--alpha", "1.5", "--delta", "1", "--lambda",
                            "1", "--mu", "1", "--rho", "0.75", "--a", "2", "--b", "1"});
    CHECK(a.code == 0);
    CHECK(Json::parse(a.out)["audit"] == true);
}

TEST_CASE("check: tolerance failure exits 1") {
    // A value near 3e7 carries an absolute error above the 1e-12 floor.
    const Run r = gstx_run({"check", "--identity", "APP0", "--alpha", "2.5", "--mu", "1", "--lambda", "2",
                            "--y", "0.01", "--tol", "1e-300"});
    CHECK(r.code == 1);
    const Json j = Json::parse(r.out);
    CHECK(j["passed"] == false);
    CHECK(j["status"] == "failed");
    CHECK(j["abs_err"].get<double>() > 1e-12);
    // A point violating a constraint is a usage error on a single check.
    CHECK(gstx_run({"check", "--identity", "LAMSDMR", "--alpha", "0.5", "--delta", "2", "--mu", "1",
                    "--rho", "0.75", "--f", "exp(-t)", "--y", "1"})
              .code == 2);
}

TEST_CASE("usage and parse errors exit 2") {
    CHECK(gstx_run({"eval", "--transform", "L", "--alpha", "1", "--mu", "1", "--f", "exp(-t", "--y", "1"})
              .code == 2);
    CHECK(gstx_run({"eval", "--transform", "Q", "--f", "t", "--y", "1"}).code == 2);
    CHECK(gstx_run({"check", "--identity", "NOPE"}).code == 2);
    CHECK(gstx_run({"frobnicate"}).code == 2);
    CHECK(gstx_run({"eval", "--transform", "L", "--alpha", "1", "--f", "1", "--y", "1"}).code == 2);
    const Run r = gstx_run({"check", "--identity", "LLS", "--alpha", "1", "--delta", "1", "--mu", "1",
                            "--f", "t + foo(t)", "--y", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("offset 4") != std::string::npos);
}

TEST_CASE("eval: values and non-convergence") {
    const Run r = gstx_run({"eval", "--transform", "S", "--delta", "1", "--mu", "1", "--rho", "1", "--f",
                            "exp(-t)", "--y", "1"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["value"].get<double>() == doctest::Approx(0.5963473623231940).epsilon(1e-10));
    CHECK(j["converged"] == true);
    CHECK(gstx_run({"eval", "--transform", "S", "--delta", "1", "--mu", "1", "--rho", "0.5", "--f", "1",
                    "--y", "1"})
              .code == 3);
    const Run lg = gstx_run({"eval", "--transform", "lgamma", "--lambda", "1", "--p", "1", "--delta", "1",
                             "--a", "1", "--c", "0.5", "--v", "0.5", "--f", "exp(-t)"});
    CHECK(lg.code == 0);
}

TEST_CASE("table: CSV rows") {
    const Run r = gstx_run({"table", "--transform", "L", "--alpha", "1", "--mu", "1", "--f", "1",
                            "--y-range", "1:3:1"});
    CHECK(r.code == 0);
    const std::vector<std::string> ls = lines(r.out);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0] == "y,value,err_estimate,converged");
    for (int i = 1; i <= 3; ++i) {
        std::istringstream row(ls[i]);
        std::string y, v, e, c;
        std::getline(row, y, ',');
        std::getline(row, v, ',');
        std::getline(row, e, ',');
        std::getline(row, c, ',');
        CHECK(std::stod(y) == i);
        CHECK(std::stod(v) == doctest::Approx(1.0 / i).epsilon(1e-12));
        CHECK(c == "true");
    }
    const Run bad = gstx_run({"table", "--transform", "S", "--delta", "1", "--mu", "1", "--rho", "0.5",
                              "--f", "1", "--y-range", "1:2:1"});
    CHECK(bad.code == 3);
    CHECK(bad.out.find(",false") != std::string::npos);
}

TEST_CASE("table: rows match eval bit for bit") {
    const Run t = gstx_run({"table", "--transform", "S", "--delta", "1.5", "--mu", "2", "--rho", "0.75",
                            "--f", "1/(1+t^2)", "--y-range", "0.5:1.5:0.5"});
    REQUIRE(t.code == 0);
    const std::vector<std::string> ls = lines(t.out);
    REQUIRE(ls.size() == 4);
    for (std::size_t i = 1; i < ls.size(); ++i) {
        const std::string y = ls[i].substr(0, ls[i].find(','));
        const Run e = gstx_run({"eval", "--transform", "S", "--delta", "1.5", "--mu", "2", "--rho", "0.75",
                                "--f", "1/(1+t^2)", "--y", y});
        const std::string v = ls[i].substr(y.size() + 1, ls[i].find(',', y.size() + 1) - y.size() - 1);
        CHECK(std::stod(v) == Json::parse(e.out)["value"].get<double>());
    }
}

TEST_CASE("suite: grid files") {
    const std::string empty = temp_file("gstx_empty.grid", "identities = []\n");
    const std::string out = (std::filesystem::temp_directory_path() / "gstx_empty.json").string();
    const Run r = gstx_run({"suite", "--grid", empty, "--out", out});
    CHECK(r.code == 0);
    std::ifstream in(out);
    const Json j = Json::parse(in);
    CHECK(j["summary"]["total"] == 0);
    CHECK(j["typo_audit"]["winner"] == "Gamma(nu)");

    const std::string skip = temp_file("gstx_skip.grid",
                                       "identities = [\"LAMSDMR\"]\n"
                                       "alpha = [0.5]\ndelta = [2]\nmu = [1]\nrho = [0.75]\n"
                                       "y = [1]\nf = [\"exp(-t)\"]\n");
    const Run s = gstx_run({"suite", "--grid", skip});
    CHECK(s.code == 0);
    CHECK(s.out.find("skipped=1") != std::string::npos);

    const std::string broken = temp_file("gstx_broken.grid", "alpha = [1, \nf = [\"exp(-t\"]\n");
    CHECK(gstx_run({"suite", "--grid", broken}).code == 2);
    CHECK(gstx_run({"suite", "--grid", "/nonexistent/grid"}).code == 2);
}

TEST_CASE("grid parser") {
    const gstx::identities::GridSpec g = parse_grid(
        "# comment\n"
        "alpha = [1, 2.5]  # trailing\n"
        "LLS.mu = [2]\n"
        "f = [\"exp(-t)\", \"1/(1+t^2)\"]\n"
        "LFSR1.g = [\"exp(-2*t)\"]\n"
        "tol.LLS = 1e-7\n"
        "identities = [\"LLS\", \"LFSR1\"]\n");
    REQUIRE(g.values.size() == 1);
    CHECK(g.values[0].second == std::vector<double>{1, 2.5});
    REQUIRE(g.overrides.size() == 1);
    CHECK(g.overrides[0].first == "LLS.mu");
    CHECK(g.f.size() == 2);
    REQUIRE(g.fn_overrides.size() == 1);
    CHECK(g.fn_overrides[0].first == "LFSR1.g");
    REQUIRE(g.identities.has_value());
    CHECK(g.identities->size() == 2);
    REQUIRE(g.tol.size() == 1);
    CHECK(g.tol[0].second == 1e-7);
    CHECK_THROWS_AS(parse_grid("alpha = []\n"), GridError);
    CHECK_THROWS_AS(parse_grid("omega = [1]\n"), GridError);
    CHECK_THROWS_AS(parse_grid("identities = [\"NOPE\"]\n"), GridError);
}

TEST_CASE("JSON numbers use 17 significant digits") {
    CHECK(dump_json(Json(0.1), -1) == "0.10000000000000001");
    CHECK(dump_json(Json(std::nan("")), -1) == "null");
    Json o;
    o["b"] = 1;
    o["a"] = 2;
    CHECK(dump_json(o, -1) == "{\"b\":1,\"a\":2}");
}
