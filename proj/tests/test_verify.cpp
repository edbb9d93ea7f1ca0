#include <doctest.h>

#include <fstream>
#include <set>

#include <json.hpp>

#include <qseries/strings.hpp>
#include <qseries/theta.hpp>
#include <qseries/verify.hpp>

#include "support.hpp"

using namespace qseries;
using namespace qseries::verify;
using qseries::testing::R;

namespace
{

std::vector<std::string> manifest()
{
    std::ifstream in(QSERIES_TEST_DATA "/verify_manifest.txt");
    REQUIRE(in);
    std::vector<std::string> ids;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.front() != '#') {
            ids.push_back(line);
        }
    }
    return ids;
}

IdentityCase j_case(std::string id, std::function<Builder()> rhs, long lattice = 1)
{
    return {std::move(id), Suite::Theta, [] { return J_b(R(1), R(2)); }, std::move(rhs), lattice, R(20), "test"};
}

} // namespace

TEST_CASE("registry matches the checked-in manifest")
{
    const auto expected = manifest();
    std::vector<std::string> actual;
    std::set<std::string> unique;
    for (const auto &c : registry()) {
        actual.push_back(c.id);
        unique.insert(c.id);
        CHECK(c.lattice_den > 0);
        CHECK(sgn(c.default_order) > 0);
        CHECK_FALSE(c.paper_ref.empty());
    }
    CHECK(unique.size() == actual.size());
    CHECK(actual == expected);
    CHECK(actual.size() >= 60);
    for (Suite s : all_suites()) {
        const auto n = std::count_if(registry().begin(), registry().end(), [s](const auto &c) { return c.suite == s; });
        CHECK_MESSAGE(n > 0, to_string(s));
    }
}

TEST_CASE("list_cases")
{
    const auto f131 = list_cases("f131");
    REQUIRE(f131.size() == 3);
    for (const auto &c : f131) {
        CHECK(c.paper_ref.find("f131-evaluations") != std::string::npos);
    }
    CHECK(list_cases("nonexistent").empty());
    CHECK(list_cases().size() == registry().size());
    CHECK(list_cases("kp_examples/").size() == 5);
}

TEST_CASE("suite names")
{
    for (Suite s : all_suites()) {
        CHECK(suite_from_string(to_string(s)) == s);
    }
    CHECK_FALSE(suite_from_string("all").has_value());
    CHECK(to_string(Suite::KpExamples) == "kp_examples");
}

TEST_CASE("fault injection: RHS + q^5 mismatches at exponent 5")
{
    const auto good = j_case("good", [] { return J_b(R(1), R(2)); });
    CHECK(run_case(good).status == Status::Pass);

    const auto bad = j_case("bad", [] { return J_b(R(1), R(2)) + Builder::monomial(Monomial(R(5))); });
    const auto r = run_case(bad);
    REQUIRE(r.status == Status::Mismatch);
    REQUIRE(r.mismatch);
    CHECK(r.mismatch->exponent == 5);
    CHECK(r.mismatch->rhs == r.mismatch->lhs + Coefficient(1));
    // below the fault the case passes
    CHECK(run_case(bad, R(5)).status == Status::Pass);
    CHECK(run_case(bad, R(6)).status == Status::Mismatch);
}

TEST_CASE("builder errors and lattice violations are captured per case")
{
    const auto throws = j_case("throws", [] { return Builder::constant(1) / theta_b(Monomial(R(1)), R(1)); });
    const auto r = run_case(throws);
    CHECK(r.status == Status::BuilderError);
    CHECK(r.message.find("ThetaZeroDenominator") != std::string::npos);

    const auto off = j_case("off-lattice", [] {
        return J_b(R(1), R(2)) + Builder::monomial(Monomial(R(7, 2))) - Builder::monomial(Monomial(R(7, 2)));
    });
    CHECK(run_case(off).status == Status::Pass);
    const auto half = IdentityCase{
        "half", Suite::Theta, [] { return Builder::monomial(Monomial(R(1, 2))); },
        [] { return Builder::monomial(Monomial(R(1, 2))); }, 1, R(5), "test"};
    CHECK(run_case(half).status == Status::BuilderError);
    auto fixed = half;
    fixed.lattice_den = 2;
    CHECK(run_case(fixed).status == Status::Pass);
}

TEST_CASE("reports are identical across job counts")
{
    RunOptions opts;
    opts.suite = Suite::StringsLevels;
    opts.jobs = 1;
    const std::string one = report_json(run(opts));
    opts.jobs = 4;
    const std::string four = report_json(run(opts));
    CHECK(one == four);
    CHECK(report_json(run(opts)) == four);
    CHECK(report_text(run(opts)) == report_text(run(opts)));
}

TEST_CASE("kp_examples: five passes and the JSON schema")
{
    RunOptions opts;
    opts.suite = Suite::KpExamples;
    opts.jobs = 2;
    const auto results = run(opts);
    REQUIRE(results.size() == 5);
    for (const auto &r : results) {
        CHECK_MESSAGE(r.status == Status::Pass, r.id);
    }
    const auto doc = nlohmann::json::parse(report_json(results));
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 5);
    for (const auto &e : doc) {
        CHECK(e.contains("case_id"));
        CHECK(e["suite"] == "kp_examples");
        CHECK(e["status"] == "pass");
        CHECK(e.contains("order"));
        CHECK(e.contains("paper_ref"));
        CHECK_FALSE(e.contains("millis"));
        CHECK_FALSE(e.contains("mismatch"));
    }
    const auto timed = nlohmann::json::parse(report_json(results, true));
    CHECK(timed[0].contains("millis"));
}

TEST_CASE("mismatch JSON carries exponent and both coefficients")
{
    const auto bad = j_case("bad", [] { return J_b(R(1), R(2)) + Builder::monomial(Monomial(R(5))); });
    const auto doc = nlohmann::json::parse(report_json(run({bad}, RunOptions{})));
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["status"] == "mismatch");
    CHECK(doc[0]["mismatch"].contains("exponent"));
    CHECK(doc[0]["mismatch"].contains("lhs"));
    CHECK(doc[0]["mismatch"].contains("rhs"));
}

TEST_CASE("order override and monotonicity")
{
    RunOptions opts;
    opts.filter = "hecke/f131";
    for (long T : {5L, 12L, 40L}) {
        opts.order = R(T);
        for (const auto &r : run(opts)) {
            CHECK(r.status == Status::Pass);
            CHECK(r.order == T);
        }
    }
}

TEST_CASE("the printed section 8 sign fails where the registry's corrected sign passes")
{
    const auto printed = IdentityCase{"printed", Suite::Theta, [] { return J_b(R(2), R(5)); },
                                      [] {
                                          return J_b(R(21), R(45)) - J_b(R(36), R(45)).shifted(Monomial(R(2)))
                                                 + J_b(R(6), R(45)).shifted(Monomial(R(3)));
                                      },
                                      1, R(30), "§8 as printed"};
    const auto r = run_case(printed);
    REQUIRE(r.status == Status::Mismatch);
    CHECK(r.mismatch->exponent == 3);
    CHECK(list_cases("KP3-chain/J25").size() == 1);
}
