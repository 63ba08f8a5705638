#include "kneser/reduction.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "kneser/bounds.hpp"
#include "kneser/solver.hpp"
#include "kneser/tucker.hpp"

namespace kneser {

int reduction_subset_size(int r1, int t, int k, int s) {
    if (r1 < 2) throw ParameterError("r1 must be at least 2");
    if (t < 1) throw ParameterError("t must be at least 1");
    if (!(k > s && s >= 0)) throw ParameterError("k > s >= 0 required");
    return (r1 - 1) * t + r1 * (k - s - 1) + 1;
}

ReductionPlan ReductionPlan::make(int r1, int r2, int t, int k, int s) {
    if (r2 < 2) throw ParameterError("r2 must be at least 2");
    ReductionPlan plan;
    plan.r1 = r1;
    plan.r2 = r2;
    plan.t = t;
    plan.m = reduction_subset_size(r1, t, k, s);
    return plan;
}

SizeChainCheck check_size_chains(const ReductionPlan& plan, int n, int k, int s) {
    SizeChainCheck check;
    check.identity_ok = plan.m == (plan.r1 - 1) * (plan.t - 1) + plan.r1 * (k - s);
    check.inner_bound_ok = plan.m >= plan.r1 * (k - 1) + 1;
    check.outer_bound_ok = n >= (plan.r2 - 1) * (plan.t - 1) + plan.r2 * plan.m;
    return check;
}

namespace {

int base_color(const Coloring& coloring, const KSubset& vertex, int n, int k) {
    return coloring.colors[lex_rank(vertex, n, k)];
}

} // namespace

InducedColor induced_color(const KSubset& A, int n, int k, int s, int r1,
                           const Coloring& base_coloring) {
    const auto elems = A.elements();
    const int m = static_cast<int>(elems.size());
    if (k > m) throw ParameterError("subset smaller than k");

    // k-subsets of A in canonical order: index subsets of the sorted element
    // list map to element subsets order-preservingly.
    std::vector<KSubset> candidates;
    candidates.reserve(binomial(m, k));
    for (const auto& idx : enumerate_ksubsets(m, k)) {
        std::vector<int> mapped;
        mapped.reserve(static_cast<std::size_t>(k));
        for (int i : idx.elements()) mapped.push_back(elems[static_cast<std::size_t>(i - 1)]);
        candidates.push_back(KSubset::from_elements(mapped, n));
    }

    std::vector<int> colors(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i)
        colors[i] = base_color(base_coloring, candidates[i], n, k);

    // First r1-tuple in canonical order that is pairwise compatible and
    // monochromatic; ordered DFS makes the first hit the least one.
    std::vector<std::size_t> stack;
    auto extend = [&](auto&& self, std::size_t from) -> bool {
        if (static_cast<int>(stack.size()) == r1) return true;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            if (!stack.empty() && colors[stack.front()] != colors[i]) continue;
            bool ok = true;
            for (std::size_t j : stack) {
                if (intersection_size(candidates[j], candidates[i]) > s) { ok = false; break; }
            }
            if (!ok) continue;
            stack.push_back(i);
            if (self(self, i + 1)) return true;
            stack.pop_back();
        }
        return false;
    };
    if (!extend(extend, 0)) {
        std::ostringstream os;
        os << "no monochromatic arity-" << r1 << " edge among the " << k << "-subsets of "
           << A.to_string() << "; the color-count hypothesis was violated";
        throw StructuralError(os.str());
    }

    InducedColor out;
    out.color = colors[stack.front()];
    for (std::size_t i : stack) out.members.push_back(candidates[i]);
    return out;
}

namespace {

int smallest_prime_factor(int r) {
    for (int d = 2; d * d <= r; ++d)
        if (r % d == 0) return d;
    return r;
}

constexpr std::uint64_t kIntermediateCap = 100'000;

struct IntermediateEdge {
    std::vector<KSubset> parents;                  // the A_i, canonical order
    std::vector<InducedColor> member_witnesses;    // per-parent r1 k-subsets
};

// Canonically least monochromatic arity-r2 edge among the m-subsets of [n]
// under the induced coloring. Induced colors are computed lazily and memoized.
IntermediateEdge find_intermediate_edge(const KneserParams& params, const ReductionPlan& plan,
                                        const Coloring& coloring);

// Entry point shared by the public API and the composite-r2 recursion; the
// public wrapper enforces the desk-scale envelope on top of this.
WitnessReport extract_witness_impl(const KneserParams& params, int r1, int r2,
                                   const Coloring& coloring, int t) {
    params.validate();
    coloring.validate(params);
    if (r1 < 2 || r2 < 2 || r1 * r2 != params.r)
        throw ParameterError("r must factor as r1 * r2 with both factors >= 2");
    if (coloring.max_used_color() > t)
        throw ParameterError("coloring uses more than t colors");
    const int bound = lower_bound_general(params); // also checks n >= r(k-1)+1
    if (t >= bound) {
        std::ostringstream os;
        os << "t = " << t << " is not strictly below the lower bound " << bound << " of "
           << params.to_string();
        throw ParameterError(os.str());
    }

    WitnessReport report;
    report.params = params;
    report.r1 = r1;
    report.r2 = r2;
    report.t = t;

    if (params.k == 1) {
        // Complete r-uniform hypergraph: t(r-1) < n, so some color class has
        // at least r of the n singletons, which are pairwise disjoint.
        auto edge = find_monochromatic_edge(params, coloring);
        if (!edge)
            throw StructuralError("no monochromatic edge in the complete hypergraph; "
                                  "the color-count hypothesis was violated");
        report.edge = *edge;
        report.parents = edge->members;
        report.color = base_color(coloring, edge->members.front(), params.n, params.k);
        report.verified = verify_witness(params, coloring, report.edge);
        if (!report.verified) throw StructuralError("extracted edge failed verification");
        return report;
    }

    const ReductionPlan plan = ReductionPlan::make(r1, r2, t, params.k, params.s);
    report.m = plan.m;
    const SizeChainCheck chains = check_size_chains(plan, params.n, params.k, params.s);
    if (!chains.all()) {
        std::ostringstream os;
        os << "size chains fail for r1=" << r1 << " r2=" << r2 << " t=" << t << " on "
           << params.to_string() << " (m=" << plan.m << ", identity=" << chains.identity_ok
           << ", inner=" << chains.inner_bound_ok << ", outer=" << chains.outer_bound_ok
           << "); the reduction is undefined outside its size regime";
        throw ParameterError(os.str());
    }

    const IntermediateEdge intermediate = find_intermediate_edge(params, plan, coloring);

    // parents pairwise intersect in <= s elements, so members of different
    // parents can never coincide (|member| = k > s) nor overlap beyond s
    for (std::size_t i = 0; i < intermediate.parents.size(); ++i)
        for (std::size_t j = i + 1; j < intermediate.parents.size(); ++j)
            if (intersection_size(intermediate.parents[i], intermediate.parents[j]) > params.s)
                throw StructuralError("parent subsets intersect beyond s");

    report.color = intermediate.member_witnesses.front().color;
    std::vector<std::pair<KSubset, KSubset>> assembled; // (member, parent)
    for (std::size_t i = 0; i < intermediate.parents.size(); ++i)
        for (const auto& member : intermediate.member_witnesses[i].members)
            assembled.emplace_back(member, intermediate.parents[i]);
    std::sort(assembled.begin(), assembled.end(),
              [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
    for (const auto& [member, parent] : assembled) {
        report.edge.members.push_back(member);
        report.parents.push_back(parent);
    }

    report.verified = verify_witness(params, coloring, report.edge);
    if (!report.verified) throw StructuralError("assembled edge failed verification");
    return report;
}

IntermediateEdge find_intermediate_edge(const KneserParams& params, const ReductionPlan& plan,
                                        const Coloring& coloring) {
    const int n = params.n;
    const int k = params.k;
    const int s = params.s;
    const std::uint64_t subset_count = binomial(n, plan.m);
    if (subset_count > kIntermediateCap)
        throw BudgetError("too many intermediate subsets");

    const auto subsets = enumerate_ksubsets(n, plan.m);
    std::unordered_map<Mask, InducedColor> memo;
    auto color_of = [&](const KSubset& A) -> const InducedColor& {
        auto it = memo.find(A.mask);
        if (it == memo.end())
            it = memo.emplace(A.mask, induced_color(A, n, k, s, plan.r1, coloring)).first;
        return it->second;
    };

    IntermediateEdge result;

    if (is_prime(plan.r2)) {
        // Ordered DFS over m-subsets; first complete tuple is canonically least.
        std::vector<std::size_t> stack;
        auto extend = [&](auto&& self, std::size_t from) -> bool {
            if (static_cast<int>(stack.size()) == plan.r2) return true;
            for (std::size_t i = from; i < subsets.size(); ++i) {
                bool ok = true;
                for (std::size_t j : stack) {
                    if (intersection_size(subsets[j], subsets[i]) > s) { ok = false; break; }
                }
                if (!ok) continue;
                if (!stack.empty() &&
                    color_of(subsets[stack.front()]).color != color_of(subsets[i]).color)
                    continue;
                stack.push_back(i);
                if (self(self, i + 1)) return true;
                stack.pop_back();
            }
            return false;
        };
        if (!extend(extend, 0))
            throw StructuralError("no monochromatic edge among intermediate subsets; "
                                  "the color-count hypothesis was violated");
        for (std::size_t i : stack) {
            result.parents.push_back(subsets[i]);
            result.member_witnesses.push_back(color_of(subsets[i]));
        }
        return result;
    }

    // Composite r2: materialize the induced coloring and recurse on it.
    Coloring induced;
    induced.color_count = plan.t;
    induced.colors.reserve(subsets.size());
    for (const auto& A : subsets) induced.colors.push_back(color_of(A).color);
    KneserParams inner{n, plan.m, plan.r2, s};
    const int spf = smallest_prime_factor(plan.r2);
    WitnessReport inner_report =
        extract_witness_impl(inner, spf, plan.r2 / spf, induced, plan.t);
    for (const auto& A : inner_report.edge.members) {
        result.parents.push_back(A);
        result.member_witnesses.push_back(color_of(A));
    }
    return result;
}

} // namespace

WitnessReport extract_witness(const KneserParams& params, int r1, int r2,
                              const Coloring& coloring, int t) {
    params.validate();
    // Desk-scale envelope; larger reductions are out of budget by design.
    if (params.r != 4 && params.r != 6)
        throw BudgetError("reduction supports composite r = 4 or 6");
    if (params.k > 2 || params.s > 1 || params.n > 15)
        throw BudgetError("reduction envelope is k <= 2, s <= 1, n <= 15");
    return extract_witness_impl(params, r1, r2, coloring, t);
}

bool verify_witness(const KneserParams& params, const Coloring& coloring, const Edge& edge) {
    params.validate();
    coloring.validate(params);
    if (static_cast<int>(edge.members.size()) != params.r) return false;
    const Mask ground = (params.n == kMaxGroundSet) ? ~Mask{0} : ((Mask{1} << params.n) - 1);
    for (const auto& member : edge.members) {
        if (member.cardinality() != params.k) return false;
        if (member.mask & ~ground) return false;
    }
    if (!is_edge(edge.members, params.r, params.s)) return false;
    const int color = base_color(coloring, edge.members.front(), params.n, params.k);
    for (const auto& member : edge.members)
        if (base_color(coloring, member, params.n, params.k) != color) return false;
    return true;
}

std::string WitnessReport::to_json() const {
    nlohmann::json j;
    j["n"] = params.n;
    j["k"] = params.k;
    j["r"] = params.r;
    j["s"] = params.s;
    j["r1"] = r1;
    j["r2"] = r2;
    j["t"] = t;
    j["m"] = m;
    nlohmann::json members = nlohmann::json::array();
    for (std::size_t i = 0; i < edge.members.size(); ++i) {
        nlohmann::json entry;
        entry["elements"] = edge.members[i].elements();
        entry["parent"] = parents.size() == edge.members.size() ? parents[i].elements()
                                                                : std::vector<int>{};
        members.push_back(entry);
    }
    j["edge"] = members;
    j["color"] = color;
    j["checks"] = verified;
    return j.dump(2);
}

} // namespace kneser
