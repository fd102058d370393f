#include <hz/cli.hpp>

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <set>
#include <sstream>
#include <tuple>

using hz::cli::Output;
using nlohmann::json;

namespace {

Output run(std::vector<std::string> args) {
    args.insert(args.begin(), "hzcalc");
    return hz::cli::run(args);
}

using Row = std::tuple<std::string, int, int, std::string>;

std::set<Row> rows_from_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "method,g,dprime,value");
    std::set<Row> rows;
    while (std::getline(in, line)) {
        std::istringstream cells(line);
        std::string m, g, d, v;
        std::getline(cells, m, ',');
        std::getline(cells, g, ',');
        std::getline(cells, d, ',');
        std::getline(cells, v, ',');
        rows.emplace(m, std::stoi(g), std::stoi(d), v);
    }
    return rows;
}

std::set<Row> rows_from_json(const std::string &text) {
    const json doc = json::parse(text);
    std::set<Row> rows;
    for (const auto &r : doc.at("results")) {
        rows.emplace(r.at("method").get<std::string>(), r.at("g").get<int>(), r.at("dprime").get<int>(),
                     r.at("value").get<std::string>());
    }
    return rows;
}

} // namespace

TEST(Cli, EpsilonAllMethodsAgree) {
    const auto o = run({"epsilon", "--genus", "1", "--dprime", "2", "--method", "all"});
    EXPECT_EQ(o.exit_code, hz::cli::kExitOk);
    for (const char *m : {"formula", "gluing", "hurwitz-gr", "hurwitz-mono", "fock"}) {
        EXPECT_NE(o.out.find(std::string(m) + "\t1\n"), std::string::npos) << o.out;
    }
    EXPECT_NE(o.out.find("verdict\tpass"), std::string::npos);
}

TEST(Cli, EpsilonSingleValue) {
    const auto o = run({"epsilon", "-g", "1", "-d", "3"});
    EXPECT_EQ(o.exit_code, 0);
    EXPECT_EQ(o.out, "10\n");
    const auto v = run({"epsilon", "--genus", "3", "--dprime", "1", "--method", "formula"});
    EXPECT_EQ(v.exit_code, 0);
    EXPECT_EQ(v.out, "0\n");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"epsilon", "--genus", "0", "--dprime", "0"}).exit_code, hz::cli::kExitUsage);
    EXPECT_EQ(run({"epsilon", "--genus", "0", "--dprime", "2", "--method", "abacus"}).exit_code, 1);
    EXPECT_EQ(run({}).exit_code, 1);
    EXPECT_EQ(run({"frobnicate"}).exit_code, 1);
    const auto g = run({"epsilon", "-g", "0", "-d", "5", "-m", "hurwitz-gr"});
    EXPECT_EQ(g.exit_code, 1);
    EXPECT_NE(g.err.find("guardrail"), std::string::npos);
    EXPECT_TRUE(g.out.empty());
}

TEST(Cli, ForceRaisesGuardrailWithWarning) {
    const auto o = run({"epsilon", "-g", "0", "-d", "5", "-m", "gluing", "--force-n", "10"});
    EXPECT_EQ(o.exit_code, 0);
    EXPECT_EQ(o.out, "42\n");
    EXPECT_NE(o.err.find("warning"), std::string::npos);
}

TEST(Cli, JsonAndCsvCarryTheSameNumbers) {
    for (const auto &args : std::vector<std::vector<std::string>>{
             {"epsilon", "-g", "1", "-d", "3", "-m", "all"},
             {"epsilon", "-g", "0", "-d", "4", "-m", "fock"},
             {"table", "--max", "4"},
             {"table", "--max", "6", "--method", "formula"},
         }) {
        auto csv_args = args, json_args = args;
        csv_args.insert(csv_args.end(), {"--format", "csv"});
        json_args.insert(json_args.end(), {"--format", "json"});
        const auto c = run(csv_args);
        const auto j = run(json_args);
        ASSERT_EQ(c.exit_code, 0);
        ASSERT_EQ(j.exit_code, 0);
        const auto rows = rows_from_csv(c.out);
        EXPECT_FALSE(rows.empty());
        EXPECT_EQ(rows, rows_from_json(j.out));
        EXPECT_EQ(json::parse(j.out).at("verdict"), "pass");
    }
}

TEST(Cli, TableRows) {
    const auto o = run({"table", "--max", "3", "--method", "formula", "--format", "csv"});
    EXPECT_EQ(o.out, "method,g,dprime,value\n"
                     "formula,0,1,1\n"
                     "formula,0,2,2\n"
                     "formula,1,2,1\n"
                     "formula,0,3,5\n"
                     "formula,1,3,10\n");
    const auto one = run({"table", "--max", "1"});
    EXPECT_NE(one.out.find("\n1\t1\t1\n"), std::string::npos) << one.out;
    const auto j = json::parse(run({"table", "--max", "4", "--format", "json"}).out);
    EXPECT_EQ(j.at("row_sums").at("4"), "105");
}

TEST(Cli, Jucys) {
    const auto o = run({"jucys", "--n", "4"});
    EXPECT_EQ(o.exit_code, 0);
    EXPECT_NE(o.out.find("(2,1,1):6"), std::string::npos);
    EXPECT_NE(o.out.find("(3,1):8 + (2,2):3"), std::string::npos);
    EXPECT_NE(o.out.find("(4):6"), std::string::npos);
    const auto j = json::parse(run({"jucys", "--n", "6", "--format", "json"}).out);
    EXPECT_EQ(j.at("verdict"), "pass");
    EXPECT_EQ(j.at("results").size(), 6u);
    EXPECT_EQ(run({"jucys", "--n", "11"}).exit_code, 1);
}

TEST(Cli, Vev) {
    const auto a = run({"vev", "E(1; z) E(-1; w)"});
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, "1  1\n");
    const auto b = run({"vev", "E(-1; z) E(1; w)"});
    EXPECT_EQ(b.exit_code, 0);
    EXPECT_EQ(b.out, "0\n");
    const auto c = run({"vev", "E(0; z)", "--order", "z=3"});
    EXPECT_EQ(c.out, "1  z^-1\n-1/24  z\n7/5760  z^3\n");
    const auto d = run({"vev", "E(2; z) E(-2; w)", "--order", "z=2", "--order", "w=2", "--format", "json"});
    const auto j = json::parse(d.out);
    EXPECT_EQ(j.at("terms").at(0).at("coefficient"), "2");
    EXPECT_FALSE(j.at("substitution").is_null());
    const auto e = run({"vev", "E(2; z) E(-1; w)"});
    EXPECT_NE(e.err.find("energy"), std::string::npos);
}

TEST(Cli, VevErrors) {
    const auto p = run({"vev", "E(1; z"});
    EXPECT_EQ(p.exit_code, 1);
    EXPECT_NE(p.err.find("position 6"), std::string::npos);
    const auto d = run({"vev", "E(0; 0)"});
    EXPECT_EQ(d.exit_code, 1);
    EXPECT_NE(d.err.find("divergent expectation"), std::string::npos);
    EXPECT_EQ(run({"vev", "E(0; z)", "--order", "z"}).exit_code, 1);
}
