#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include <qseries/error.hpp>
#include <qseries/verify.hpp>

namespace qseries::verify
{

namespace
{

const std::pair<Suite, std::string_view> suite_names[] = {
    {Suite::Notation, "notation"},
    {Suite::Theta, "theta"},
    {Suite::Appell, "appell"},
    {Suite::Hecke, "hecke"},
    {Suite::StringsLevels, "strings_levels"},
    {Suite::StringsSymmetries, "strings_symmetries"},
    {Suite::Mps, "mps"},
    {Suite::KpExamples, "kp_examples"},
};

bool on_lattice(const QSeries &s, long den)
{
    for (const auto &[e, c] : s.terms()) {
        if (Rational(e * den).get_den() != 1) {
            return false;
        }
    }
    return true;
}

} // namespace

std::string_view to_string(Suite s)
{
    for (const auto &[k, name] : suite_names) {
        if (k == s) {
            return name;
        }
    }
    return "?";
}

std::optional<Suite> suite_from_string(std::string_view name)
{
    for (const auto &[k, n] : suite_names) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

const std::vector<Suite> &all_suites()
{
    static const std::vector<Suite> v = [] {
        std::vector<Suite> out;
        for (const auto &[k, n] : suite_names) {
            out.push_back(k);
        }
        return out;
    }();
    return v;
}

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Mismatch:
        return "mismatch";
    case Status::BuilderError:
    default:
        return "builder_error";
    }
}

std::vector<CaseInfo> list_cases(std::string_view filter)
{
    std::vector<CaseInfo> out;
    for (const auto &c : registry()) {
        if (c.id.find(filter) != std::string::npos) {
            out.push_back({c.id, c.suite, c.paper_ref});
        }
    }
    return out;
}

CaseResult run_case(const IdentityCase &c, std::optional<Exponent> order)
{
    CaseResult r{c.id, c.suite, c.paper_ref, Status::Pass, std::nullopt, {}, order.value_or(c.default_order), 0};
    const auto start = std::chrono::steady_clock::now();
    try {
        const QSeries lhs = c.lhs()(r.order), rhs = c.rhs()(r.order);
        const Comparison cmp = series_equal_to(lhs, rhs, r.order);
        if (!is_equal(cmp)) {
            const auto &m = std::get<FirstMismatch>(cmp);
            r.status = Status::Mismatch;
            r.mismatch = MismatchInfo{m.exponent, m.lhs, m.rhs};
        } else if (!on_lattice(lhs, c.lattice_den) || !on_lattice(rhs, c.lattice_den)) {
            r.status = Status::BuilderError;
            r.message = "exponent off the lattice Z/" + std::to_string(c.lattice_den);
        }
    } catch (const std::exception &e) {
        r.status = Status::BuilderError;
        r.message = e.what();
    }
    r.millis = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return r;
}

std::vector<CaseResult> run(const std::vector<IdentityCase> &cases, const RunOptions &opts)
{
    std::vector<const IdentityCase *> selected;
    for (const auto &c : cases) {
        if ((!opts.suite || c.suite == *opts.suite) && c.id.find(opts.filter) != std::string::npos) {
            selected.push_back(&c);
        }
    }
    std::vector<CaseResult> results(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < selected.size();) {
            results[k] = run_case(*selected[k], opts.order);
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(selected.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }
    return results;
}

std::vector<CaseResult> run(const RunOptions &opts)
{
    return run(registry(), opts);
}

std::string report_text(const std::vector<CaseResult> &results, bool timings)
{
    std::size_t width = 8;
    for (const auto &r : results) {
        width = std::max(width, r.id.size());
    }
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto &r : results) {
        os << std::left << std::setw(static_cast<int>(width)) << r.id << "  " << std::setw(18) << to_string(r.suite)
           << "  " << std::setw(13) << to_string(r.status) << "  order " << r.order.get_str();
        if (timings) {
            os << "  " << r.millis << " ms";
        }
        if (r.mismatch) {
            os << "  first mismatch at q^" << r.mismatch->exponent.get_str() << ": " << r.mismatch->lhs << " vs "
               << r.mismatch->rhs;
        }
        if (r.status == Status::BuilderError) {
            os << "  " << r.message;
        }
        os << "\n";
        passed += r.status == Status::Pass;
    }
    os << passed << "/" << results.size() << " cases pass\n";
    return os.str();
}

std::string report_json(const std::vector<CaseResult> &results, bool timings, int indent)
{
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto &r : results) {
        nlohmann::ordered_json j;
        j["case_id"] = r.id;
        j["suite"] = to_string(r.suite);
        j["status"] = to_string(r.status);
        if (r.mismatch) {
            j["mismatch"] = {{"exponent", r.mismatch->exponent.get_str()},
                             {"lhs", r.mismatch->lhs.to_string()},
                             {"rhs", r.mismatch->rhs.to_string()}};
        }
        if (r.status == Status::BuilderError) {
            j["error"] = r.message;
        }
        j["order"] = r.order.get_str();
        if (timings) {
            j["millis"] = r.millis;
        }
        j["paper_ref"] = r.paper_ref;
        out.push_back(std::move(j));
    }
    return out.dump(indent);
}

} // namespace qseries::verify
