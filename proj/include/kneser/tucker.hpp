#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kneser/coloring.hpp"
#include "kneser/params.hpp"
#include "kneser/solver.hpp"

namespace kneser {

/// Element of (Z_p u {0})^n. Nonzero values are stored as exponents 1..p of
/// the group generator; 0 marks an unsigned position. The derived classes are
/// X_0 = {j : x_j = 0} and X_i = {j : x_j has exponent i}.
struct SignedVector {
    std::vector<std::uint8_t> entries; // 0 or 1..p, index j-1 holds position j
    int p = 2;

    [[nodiscard]] int size() const { return static_cast<int>(entries.size()); }
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] Mask class_mask(int i) const; // positions of class X_i, i in 0..p
    [[nodiscard]] std::string to_string() const; // "(w^2,0,w)"

    friend bool operator==(const SignedVector&, const SignedVector&) = default;
};

/// Rotation by the i-th group element: exponent e -> ((e+i-1) mod p)+1,
/// zeros fixed. Classes rotate, X_0 is preserved.
SignedVector omega_action(int i, const SignedVector& x);

/// x precedes y iff X_i is a subset of Y_i for all 1 <= i <= p (X_0 free).
/// Equivalently: y agrees with x on every nonzero position of x.
bool preceq(const SignedVector& x, const SignedVector& y);

/// Sign is an exponent in 1..p, level lies in [1, alpha + C].
struct LambdaValue {
    int sign = 0;
    int level = 0;
    friend bool operator==(const LambdaValue&, const LambdaValue&) = default;
};

struct LambdaEval {
    LambdaValue value;
    bool high_case = false; // level came from a colored k-set rather than class sizes
    Mask colored_set = 0;   // the k-set F, high case only
};

struct EnumerationBudget {
    std::uint64_t max_points = 20'000'000;
};

struct EquivarianceWitness {
    SignedVector x;
    int i = 0;
    LambdaValue expected;
    LambdaValue actual;
};

struct PairWitness {
    SignedVector x, y;
    LambdaValue lx, ly;
};

struct ChainWitness {
    std::vector<SignedVector> chain;    // x^(1) preceq ... preceq x^(p)
    std::vector<LambdaValue> values;
    std::vector<Mask> colored_sets;     // the F-set of each chain element
};

template <typename Witness>
struct VerifyOutcome {
    bool ok = false;
    std::uint64_t enumerated = 0;
    std::optional<Witness> witness; // first violation in enumeration order
};

/// One verification instance: prime p, a coloring of KG^p(n,k,s) with C
/// colors, alpha = p(k-s-1) and m = alpha + C. The coloring must be proper
/// unless diagnostic mode is requested (used by negative tests).
class TuckerInstance {
public:
    TuckerInstance(int p, const KneserParams& params, Coloring coloring,
                   bool diagnostic = false, const SolveBudget& budget = {});

    [[nodiscard]] int p() const { return p_; }
    [[nodiscard]] const KneserParams& params() const { return params_; }
    [[nodiscard]] const Coloring& coloring() const { return coloring_; }
    [[nodiscard]] int alpha() const { return alpha_; }
    [[nodiscard]] int m() const { return m_; }
    [[nodiscard]] int color_count() const { return coloring_.color_count; }
    [[nodiscard]] bool diagnostic() const { return diagnostic_; }

    [[nodiscard]] int color_of(Mask k_set) const;

    /// The two-case map on nonzero signed vectors. Low case: all classes have
    /// at most k-s-1 positions; the sign is the first nonzero entry and the
    /// level counts nonzero positions. High case: scanning positions in
    /// increasing order, the first whose class X_j satisfies |X_j| >= k-s and
    /// |X_j| + |X_0| >= k yields sign j and level alpha + c(F) for the k-set
    /// F = first min(k,|X_j|) elements of X_j padded from X_0.
    [[nodiscard]] LambdaEval lambda(const SignedVector& x) const;

private:
    int p_;
    KneserParams params_;
    Coloring coloring_;
    bool diagnostic_;
    int alpha_;
    int m_;
    std::unordered_map<Mask, int> color_by_mask_;
};

/// lambda(w^i * x) == (w^i * lambda_1(x), lambda_2(x)) for all nonzero x, all i.
VerifyOutcome<EquivarianceWitness> verify_equivariance(const TuckerInstance& instance,
                                                       const EnumerationBudget& budget = {});

/// For comparable pairs x preceq y with equal levels <= alpha, the signs agree.
VerifyOutcome<PairWitness> verify_pair_condition(const TuckerInstance& instance,
                                                 const EnumerationBudget& budget = {});

/// For chains x^(1) preceq ... preceq x^(p) of nonzero vectors whose levels
/// are all equal and >= alpha+1, the p signs are not pairwise distinct.
VerifyOutcome<ChainWitness> verify_chain_condition(const TuckerInstance& instance,
                                                   const EnumerationBudget& budget = {});

struct ConclusionCheck {
    long long lhs = 0; // alpha + (m-alpha)(p-1)
    long long rhs = 0; // n
    bool holds = false;
    long long implied_color_bound = 0; // ceil((n-alpha)/(p-1))
};

/// Evaluates alpha + (m-alpha)(p-1) >= n and the implied bound
/// C = m-alpha >= ceil((n-alpha)/(p-1)).
ConclusionCheck conclusion_check(int alpha, int m, int p, int n);

/// Full verification report as JSON (see the CLI `tucker` subcommand).
std::string verification_report_json(const TuckerInstance& instance,
                                     const EnumerationBudget& budget = {});

/// True for primes, by trial division.
bool is_prime(int p);

} // namespace kneser
