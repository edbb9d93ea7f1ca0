#ifndef QSERIES_VERIFY_HPP
#define QSERIES_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <qseries/builder.hpp>
#include <qseries/series.hpp>

namespace qseries::verify
{

enum class Suite { Notation, Theta, Appell, Hecke, StringsLevels, StringsSymmetries, Mps, KpExamples };

std::string_view to_string(Suite s);
std::optional<Suite> suite_from_string(std::string_view name);
const std::vector<Suite> &all_suites();

// One paper identity at one sample point. lhs and rhs build their series
// lazily, so construction errors are reported per case.
struct IdentityCase {
    std::string id;
    Suite suite;
    std::function<Builder()> lhs;
    std::function<Builder()> rhs;
    long lattice_den;      // every exponent of both sides lies in Z/lattice_den
    Exponent default_order;
    std::string paper_ref;
};

// The full registry, in its fixed order.
const std::vector<IdentityCase> &registry();

struct CaseInfo {
    std::string id;
    Suite suite;
    std::string paper_ref;
};
// Cases whose id contains filter, in registry order.
std::vector<CaseInfo> list_cases(std::string_view filter = {});

enum class Status { Pass, Mismatch, BuilderError };
std::string_view to_string(Status s);

struct MismatchInfo {
    Exponent exponent;
    Coefficient lhs;
    Coefficient rhs;
};

struct CaseResult {
    std::string id;
    Suite suite;
    std::string paper_ref;
    Status status = Status::Pass;
    std::optional<MismatchInfo> mismatch; // Status::Mismatch
    std::string message;                  // Status::BuilderError
    Exponent order;
    long millis = 0;
};

// Runs one case at order (default_order when unset). The mismatch, if any,
// is the least differing exponent below the order. An exponent off the
// case's lattice is a BuilderError.
CaseResult run_case(const IdentityCase &c, std::optional<Exponent> order = std::nullopt);

struct RunOptions {
    std::optional<Suite> suite;      // all suites when unset
    std::optional<Exponent> order;   // per-case default when unset
    unsigned jobs = 1;
    std::string_view filter;         // id substring
};

// Results in registry order regardless of jobs.
std::vector<CaseResult> run(const std::vector<IdentityCase> &cases, const RunOptions &opts);
std::vector<CaseResult> run(const RunOptions &opts);

// Text table / JSON array of {case_id, suite, status, mismatch?, order,
// paper_ref} plus millis when timings is set (timings break byte equality).
std::string report_text(const std::vector<CaseResult> &results, bool timings = false);
std::string report_json(const std::vector<CaseResult> &results, bool timings = false, int indent = 2);

} // namespace qseries::verify

#endif
