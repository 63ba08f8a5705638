#include "kneser/bounds.hpp"

#include <sstream>

#include <json.hpp>

namespace kneser {

int lower_bound_general(const KneserParams& params) {
    params.validate();
    if (!params.bound_applicable())
        throw ParameterError(params.to_string() + ": bound requires n >= r(k-1)+1");
    return static_cast<int>(ceil_div(params.n - params.r * (params.k - params.s - 1), params.r - 1));
}

int lower_bound_afl(const KneserParams& params) {
    params.validate();
    if (params.s != 0) throw ParameterError("classical bound requires s = 0");
    if (params.n < params.r * params.k)
        throw ParameterError(params.to_string() + ": classical bound requires n >= r*k");
    return static_cast<int>(ceil_div(params.n - params.r * (params.k - 1), params.r - 1));
}

int lower_bound_padded(const KneserParams& params) {
    params.validate();
    // The padded route goes through KG^r(n-s, k-s, 0), which needs n-s >= r(k-s).
    if (params.n - params.s < params.r * (params.k - params.s))
        throw ParameterError(params.to_string() + ": padded bound requires n-s >= r(k-s)");
    return static_cast<int>(
        ceil_div(params.n - params.s - params.r * (params.k - params.s - 1), params.r - 1));
}

std::string BoundReport::to_json() const {
    nlohmann::json j;
    j["n"] = params.n;
    j["k"] = params.k;
    j["r"] = params.r;
    j["s"] = params.s;
    j["theorem1"] = theorem1;
    j["afl_eq1"] = afl_eq1 ? nlohmann::json(*afl_eq1) : nlohmann::json(nullptr);
    j["hom_eq3"] = hom_eq3 ? nlohmann::json(*hom_eq3) : nlohmann::json(nullptr);
    j["exact_chi"] = exact_chi ? nlohmann::json(*exact_chi) : nlohmann::json(nullptr);
    j["tight"] = tight ? nlohmann::json(*tight) : nlohmann::json(nullptr);
    j["solver_status"] = solver_status;
    return j.dump();
}

std::string BoundReport::csv_header() {
    return "n,k,r,s,theorem1,afl_eq1,hom_eq3,exact_chi,tight,solver_status";
}

std::string BoundReport::csv_row() const {
    std::ostringstream os;
    os << params.n << ',' << params.k << ',' << params.r << ',' << params.s << ',' << theorem1 << ',';
    if (afl_eq1) os << *afl_eq1;
    os << ',';
    if (hom_eq3) os << *hom_eq3;
    os << ',';
    if (exact_chi) os << *exact_chi;
    os << ',';
    if (tight) os << (*tight ? "true" : "false");
    os << ',' << solver_status;
    return os.str();
}

BoundReport compare_bounds(const KneserParams& params, const std::optional<SolveBudget>& budget) {
    params.validate();
    BoundReport report;
    report.params = params;
    report.theorem1 = lower_bound_general(params);
    if (params.s == 0 && params.n >= params.r * params.k) report.afl_eq1 = lower_bound_afl(params);
    if (params.n - params.s >= params.r * (params.k - params.s))
        report.hom_eq3 = lower_bound_padded(params);
    if (budget) {
        try {
            const SolveResult solved = exact_chromatic(params, *budget);
            report.solver_nodes = solved.nodes_explored;
            report.solver_status = to_string(solved.status);
            if (solved.status == SolveStatus::chi_found) {
                report.exact_chi = solved.chi;
                report.tight = (*solved.chi == report.theorem1);
            }
        } catch (const BudgetError&) {
            // budget exhaustion is reported, never raised, from here
            report.solver_status = to_string(SolveStatus::budget_exceeded);
        }
    }
    return report;
}

} // namespace kneser
