#include "kneser/tucker.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <json.hpp>

namespace kneser {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool SignedVector::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](std::uint8_t e) { return e == 0; });
}

Mask SignedVector::class_mask(int i) const {
    Mask out = 0;
    for (std::size_t j = 0; j < entries.size(); ++j)
        if (entries[j] == i) out |= Mask{1} << j;
    return out;
}

std::string SignedVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t j = 0; j < entries.size(); ++j) {
        if (j) os << ',';
        if (entries[j] == 0) os << '0';
        else if (entries[j] == 1) os << 'w';
        else os << "w^" << static_cast<int>(entries[j]);
    }
    os << ')';
    return os.str();
}

SignedVector omega_action(int i, const SignedVector& x) {
    if (i < 1 || i > x.p) throw ParameterError("group exponent must lie in [1,p]");
    SignedVector out = x;
    for (auto& e : out.entries)
        if (e != 0) e = static_cast<std::uint8_t>((e + i - 1) % x.p + 1);
    return out;
}

bool preceq(const SignedVector& x, const SignedVector& y) {
    if (x.p != y.p || x.entries.size() != y.entries.size())
        throw ParameterError("comparable vectors need equal length and the same p");
    for (std::size_t j = 0; j < x.entries.size(); ++j)
        if (x.entries[j] != 0 && y.entries[j] != x.entries[j]) return false;
    return true;
}

TuckerInstance::TuckerInstance(int p, const KneserParams& params, Coloring coloring,
                               bool diagnostic, const SolveBudget& budget)
    : p_(p), params_(params), coloring_(std::move(coloring)), diagnostic_(diagnostic) {
    params_.validate();
    if (!is_prime(p_)) throw ParameterError("p must be prime");
    if (params_.r != p_) throw ParameterError("instance requires r = p");
    if (params_.n < p_ * (params_.k - 1) + 1)
        throw ParameterError("instance requires n >= p(k-1)+1");
    coloring_.validate(params_);
    alpha_ = p_ * (params_.k - params_.s - 1);
    m_ = alpha_ + coloring_.color_count;
    if (!diagnostic_) {
        const ProperCheck check = is_proper(params_, coloring_, budget);
        if (!check.proper)
            throw ParameterError("coloring is not proper; use diagnostic mode to verify anyway: "
                                 "monochromatic edge " + check.witness->to_string());
    }
    const auto vertices = enumerate_ksubsets(params_.n, params_.k);
    color_by_mask_.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        color_by_mask_.emplace(vertices[i].mask, coloring_.colors[i]);
}

int TuckerInstance::color_of(Mask k_set) const { return color_by_mask_.at(k_set); }

LambdaEval TuckerInstance::lambda(const SignedVector& x) const {
    if (x.p != p_ || x.size() != params_.n) throw ParameterError("vector does not match instance");
    const int n = params_.n;
    const int k = params_.k;
    const int s = params_.s;

    std::array<int, 66> count{};
    int first_nonzero_value = 0;
    for (int j = 0; j < n; ++j) {
        const int v = x.entries[static_cast<std::size_t>(j)];
        ++count[static_cast<std::size_t>(v)];
        if (v != 0 && first_nonzero_value == 0) first_nonzero_value = v;
    }
    if (first_nonzero_value == 0) throw ParameterError("lambda is undefined on the zero vector");

    bool all_small = true;
    for (int i = 1; i <= p_; ++i) {
        if (count[static_cast<std::size_t>(i)] > k - s - 1) { all_small = false; break; }
    }
    if (all_small) {
        LambdaEval eval;
        eval.value.sign = first_nonzero_value;
        eval.value.level = n - count[0];
        return eval;
    }

    // Scan positions in increasing order; take the first whose class is large
    // enough to carve a k-set out of X_j together with X_0.
    for (int j = 0; j < n; ++j) {
        const int v = x.entries[static_cast<std::size_t>(j)];
        if (v == 0) continue;
        if (count[static_cast<std::size_t>(v)] < k - s) continue;
        if (count[static_cast<std::size_t>(v)] + count[0] < k) continue;
        const int take = std::min(k, count[static_cast<std::size_t>(v)]);
        const Mask f = first_elements(x.class_mask(v), take) |
                       first_elements(x.class_mask(0), k - take);
        LambdaEval eval;
        eval.value.sign = v;
        eval.value.level = alpha_ + color_of(f);
        eval.high_case = true;
        eval.colored_set = f;
        return eval;
    }
    // Impossible while n >= p(k-1)+1 holds: some class reaches k-s and the
    // largest class always satisfies |X_j| + |X_0| >= k.
    throw StructuralError("no qualifying class found; instance invariant broken");
}

namespace {

std::uint64_t checked_power(std::uint64_t base, int exp, std::uint64_t limit) {
    std::uint64_t result = 1;
    for (int i = 0; i < exp; ++i) {
        if (result > limit / base) throw BudgetError("enumeration space exceeds the configured budget");
        result *= base;
    }
    return result;
}

} // namespace

VerifyOutcome<EquivarianceWitness> verify_equivariance(const TuckerInstance& instance,
                                                       const EnumerationBudget& budget) {
    const int n = instance.params().n;
    const int p = instance.p();
    checked_power(static_cast<std::uint64_t>(p + 1), n, budget.max_points);

    VerifyOutcome<EquivarianceWitness> outcome;
    outcome.ok = true;
    SignedVector x;
    x.p = p;
    x.entries.assign(static_cast<std::size_t>(n), 0);
    while (true) {
        // advance odometer, last position fastest
        int pos = n - 1;
        while (pos >= 0 && x.entries[static_cast<std::size_t>(pos)] == p) {
            x.entries[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++x.entries[static_cast<std::size_t>(pos)];

        ++outcome.enumerated;
        const LambdaValue base = instance.lambda(x).value;
        for (int i = 1; i <= p; ++i) {
            const LambdaValue rotated = instance.lambda(omega_action(i, x)).value;
            const LambdaValue expected{(base.sign + i - 1) % p + 1, base.level};
            if (rotated != expected) {
                outcome.ok = false;
                outcome.witness = EquivarianceWitness{x, i, expected, rotated};
                return outcome;
            }
        }
    }
    return outcome;
}

VerifyOutcome<PairWitness> verify_pair_condition(const TuckerInstance& instance,
                                                 const EnumerationBudget& budget) {
    const int n = instance.params().n;
    const int p = instance.p();
    const int base = 2 * p + 1;
    checked_power(static_cast<std::uint64_t>(base), n, budget.max_points);

    // Per-coordinate patterns: 0 -> (0,0); v in 1..p -> (0,v); p+v -> (v,v).
    VerifyOutcome<PairWitness> outcome;
    outcome.ok = true;
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(n), 0);
    SignedVector x, y;
    x.p = y.p = p;
    x.entries.assign(static_cast<std::size_t>(n), 0);
    y.entries.assign(static_cast<std::size_t>(n), 0);
    while (true) {
        int pos = n - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == base - 1) {
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++digits[static_cast<std::size_t>(pos)];

        bool x_nonzero = false;
        for (int j = 0; j < n; ++j) {
            const int d = digits[static_cast<std::size_t>(j)];
            if (d == 0) {
                x.entries[static_cast<std::size_t>(j)] = 0;
                y.entries[static_cast<std::size_t>(j)] = 0;
            } else if (d <= p) {
                x.entries[static_cast<std::size_t>(j)] = 0;
                y.entries[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(d);
            } else {
                x.entries[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(d - p);
                y.entries[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(d - p);
                x_nonzero = true;
            }
        }
        if (!x_nonzero) continue;

        ++outcome.enumerated;
        const LambdaValue lx = instance.lambda(x).value;
        if (lx.level > instance.alpha()) continue;
        const LambdaValue ly = instance.lambda(y).value;
        if (lx.level == ly.level && lx.sign != ly.sign) {
            outcome.ok = false;
            outcome.witness = PairWitness{x, y, lx, ly};
            return outcome;
        }
    }
    return outcome;
}

VerifyOutcome<ChainWitness> verify_chain_condition(const TuckerInstance& instance,
                                                   const EnumerationBudget& budget) {
    const int n = instance.params().n;
    const int p = instance.p();
    const int base = p * p + 1;
    checked_power(static_cast<std::uint64_t>(base), n, budget.max_points);

    // Per-coordinate chain patterns: 0 -> zero throughout; otherwise a value
    // v and the chain index at which it first appears (and then persists).
    VerifyOutcome<ChainWitness> outcome;
    outcome.ok = true;
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(n), 0);
    std::vector<SignedVector> chain(static_cast<std::size_t>(p));
    for (auto& v : chain) {
        v.p = p;
        v.entries.assign(static_cast<std::size_t>(n), 0);
    }
    std::vector<LambdaEval> evals(static_cast<std::size_t>(p));

    while (true) {
        int pos = n - 1;
        while (pos >= 0 && digits[static_cast<std::size_t>(pos)] == base - 1) {
            digits[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++digits[static_cast<std::size_t>(pos)];

        bool first_nonzero = false;
        for (int j = 0; j < n; ++j) {
            const int d = digits[static_cast<std::size_t>(j)];
            int value = 0, from = p + 1;
            if (d != 0) {
                value = (d - 1) / p + 1;
                from = (d - 1) % p + 1;
                if (from == 1) first_nonzero = true;
            }
            for (int step = 1; step <= p; ++step)
                chain[static_cast<std::size_t>(step - 1)].entries[static_cast<std::size_t>(j)] =
                    static_cast<std::uint8_t>(step >= from ? value : 0);
        }
        if (!first_nonzero) continue; // x^(1) must be nonzero

        ++outcome.enumerated;
        bool levels_equal_high = true;
        for (int step = 0; step < p; ++step) {
            evals[static_cast<std::size_t>(step)] = instance.lambda(chain[static_cast<std::size_t>(step)]);
            const int level = evals[static_cast<std::size_t>(step)].value.level;
            if (level < instance.alpha() + 1 ||
                level != evals[0].value.level) {
                levels_equal_high = false;
                break;
            }
        }
        if (!levels_equal_high) continue;

        bool repeated_sign = false;
        for (int a = 0; a < p && !repeated_sign; ++a)
            for (int b = a + 1; b < p; ++b)
                if (evals[static_cast<std::size_t>(a)].value.sign ==
                    evals[static_cast<std::size_t>(b)].value.sign) {
                    repeated_sign = true;
                    break;
                }
        if (!repeated_sign) {
            outcome.ok = false;
            ChainWitness witness;
            witness.chain = chain;
            for (const auto& e : evals) {
                witness.values.push_back(e.value);
                witness.colored_sets.push_back(e.colored_set);
            }
            outcome.witness = std::move(witness);
            return outcome;
        }
    }
    return outcome;
}

ConclusionCheck conclusion_check(int alpha, int m, int p, int n) {
    if (m < alpha || alpha < 0) throw ParameterError("conclusion requires m >= alpha >= 0");
    if (!is_prime(p)) throw ParameterError("p must be prime");
    ConclusionCheck out;
    out.lhs = static_cast<long long>(alpha) + static_cast<long long>(m - alpha) * (p - 1);
    out.rhs = n;
    out.holds = out.lhs >= out.rhs;
    out.implied_color_bound = ceil_div(n - alpha, p - 1);
    return out;
}

std::string verification_report_json(const TuckerInstance& instance,
                                     const EnumerationBudget& budget) {
    nlohmann::json j;
    j["p"] = instance.p();
    j["n"] = instance.params().n;
    j["k"] = instance.params().k;
    j["s"] = instance.params().s;
    j["C"] = instance.color_count();
    j["alpha"] = instance.alpha();
    j["m"] = instance.m();
    j["diagnostic"] = instance.diagnostic();
    // The chain condition reads "not pairwise disjoint" as "not pairwise
    // distinct" on signs; witnesses carry their colored k-sets for inspection.
    j["sign_interpretation"] = "repeated sign required on equal-level chains";

    const auto equi = verify_equivariance(instance, budget);
    j["equivariance"] = equi.ok ? "pass" : "fail";
    j["vectors_enumerated"] = equi.enumerated;
    if (equi.witness) {
        j["equivariance_witness"] = {{"x", equi.witness->x.to_string()},
                                     {"i", equi.witness->i}};
    }

    const auto pair = verify_pair_condition(instance, budget);
    j["cond2"] = pair.ok ? "pass" : "fail";
    j["pairs_enumerated"] = pair.enumerated;
    if (pair.witness) {
        j["cond2_witness"] = {{"x", pair.witness->x.to_string()},
                              {"y", pair.witness->y.to_string()}};
    }

    const auto chainres = verify_chain_condition(instance, budget);
    j["cond3"] = chainres.ok ? "pass" : "fail";
    j["chains_enumerated"] = chainres.enumerated;
    if (chainres.witness) {
        nlohmann::json w;
        for (std::size_t i = 0; i < chainres.witness->chain.size(); ++i) {
            w.push_back({{"x", chainres.witness->chain[i].to_string()},
                         {"sign", chainres.witness->values[i].sign},
                         {"level", chainres.witness->values[i].level},
                         {"F", KSubset{chainres.witness->colored_sets[i]}.to_string()}});
        }
        j["cond3_witness"] = w;
    }

    const auto conclusion =
        conclusion_check(instance.alpha(), instance.m(), instance.p(), instance.params().n);
    j["conclusion"] = {{"lhs", conclusion.lhs},
                       {"rhs", conclusion.rhs},
                       {"holds", conclusion.holds},
                       {"implied_color_bound", conclusion.implied_color_bound}};
    return j.dump(2);
}

} // namespace kneser
