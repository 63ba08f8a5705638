#include "kneser/solver.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>

#include "kneser/bounds.hpp"

namespace kneser {

std::string to_string(SolveStatus status) {
    return status == SolveStatus::chi_found ? "chi_found" : "budget_exceeded";
}

namespace {

struct BudgetHit {};

// Word-block set helpers over vertex bitsets.
using Words = std::vector<std::uint64_t>;

bool words_empty(const Words& w) {
    for (auto x : w) if (x) return false;
    return true;
}

void words_and_row(Words& dst, const std::uint64_t* row, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] &= row[i];
}

// Does `set` contain a clique of `need` vertices? `need` is small (<= r-2).
bool has_clique(const CompatGraph& g, Words set, int need) {
    if (need <= 0) return true;
    const auto words = static_cast<std::size_t>(g.words_per_row());
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = set[w];
        while (bits) {
            const int v = static_cast<int>(w * 64) + std::countr_zero(bits);
            bits &= bits - 1;
            if (need == 1) return true;
            Words next = set;
            // restrict to later vertices adjacent to v
            next[w] &= ~((std::uint64_t{1} << (v & 63)) | ((std::uint64_t{1} << (v & 63)) - 1));
            for (std::size_t ww = 0; ww < w; ++ww) next[ww] = 0;
            words_and_row(next, g.row(v), words);
            if (has_clique(g, next, need - 1)) return true;
        }
    }
    return false;
}

// Backtracking m-colorability over the compatibility graph. A color q is
// barred for v exactly when v plus an (r-1)-clique of q-colored vertices
// would form an r-clique, i.e. a monochromatic hypergraph edge.
class ColorSearch {
public:
    ColorSearch(const CompatGraph& g, int m, std::uint64_t node_limit)
        : g_(g), r_(g.params().r), m_(m), words_(static_cast<std::size_t>(g.words_per_row())),
          node_limit_(node_limit) {
        const auto v = static_cast<std::size_t>(g.vertex_count());
        color_.assign(v, 0);
        sat_.assign(v, 0);
        near_.assign(v, 0);
        adjacent_count_.assign(v * static_cast<std::size_t>(m_ + 1), 0);
        blocked_.assign(v * static_cast<std::size_t>(m_ + 1), 0);
        class_mask_.assign(static_cast<std::size_t>(m_ + 1), Words(words_, 0));
        class_size_.assign(static_cast<std::size_t>(m_ + 1), 0);
        uncolored_ = static_cast<int>(v);
        complete_ = g.complete();
    }

    std::uint64_t nodes() const { return nodes_; }

    // Returns true and fills `out` on success; exhaustion returns false.
    bool run(Coloring& out) {
        // A clique needs ceil(|Q|/(r-1)) classes, so m below that is hopeless.
        const auto clique = g_.greedy_clique();
        const int lb = static_cast<int>(ceil_div(static_cast<int>(clique.size()), r_ - 1));
        if (m_ < lb) return false;
        if (r_ == 2) {
            // Distinct colors on a clique are forced; fixing them in order is
            // a pure color relabeling and removes that symmetry up front.
            for (std::size_t i = 0; i < clique.size(); ++i)
                assign(clique[i], static_cast<int>(i) + 1);
        }
        if (!dfs()) return false;
        out.colors = color_;
        out.color_count = opened_;
        return true;
    }

private:
    bool completes_clique(int u, int q, int v) const {
        // u joining class q forms an r-clique through the new member v
        // iff an (r-2)-clique sits inside class_q cap N(u) cap N(v).
        if (r_ == 2) return true;
        Words set = class_mask_[static_cast<std::size_t>(q)];
        words_and_row(set, g_.row(u), words_);
        words_and_row(set, g_.row(v), words_);
        if (r_ == 3) return !words_empty(set);
        return has_clique(g_, std::move(set), r_ - 2);
    }

    void assign(int v, int q) {
        if (++nodes_ > node_limit_) throw BudgetHit{};
        color_[static_cast<std::size_t>(v)] = q;
        --uncolored_;
        if (q > opened_) opened_ = q;
        auto& mask = class_mask_[static_cast<std::size_t>(q)];
        mask[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
        ++class_size_[static_cast<std::size_t>(q)];

        trail_.push_back(-1); // frame marker
        const std::uint64_t* row = g_.row(v);
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                const int u = static_cast<int>(w * 64) + std::countr_zero(bits);
                bits &= bits - 1;
                if (color_[static_cast<std::size_t>(u)] != 0) continue;
                const std::size_t slot = static_cast<std::size_t>(u) * static_cast<std::size_t>(m_ + 1) +
                                         static_cast<std::size_t>(q);
                if (++adjacent_count_[slot] == 1) ++near_[static_cast<std::size_t>(u)];
                auto& flag = blocked_[slot];
                if (flag) continue;
                if (!completes_clique(u, q, v)) continue;
                flag = 1;
                ++sat_[static_cast<std::size_t>(u)];
                trail_.push_back(static_cast<int>(slot));
            }
        }
    }

    void undo(int v, int q) {
        while (!trail_.empty()) {
            const int item = trail_.back();
            trail_.pop_back();
            if (item < 0) break;
            blocked_[static_cast<std::size_t>(item)] = 0;
            --sat_[static_cast<std::size_t>(item / (m_ + 1))];
        }
        // adjacency counts reverse symmetrically under the stack discipline
        const std::uint64_t* row = g_.row(v);
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = row[w];
            while (bits) {
                const int u = static_cast<int>(w * 64) + std::countr_zero(bits);
                bits &= bits - 1;
                if (color_[static_cast<std::size_t>(u)] != 0) continue;
                const std::size_t slot = static_cast<std::size_t>(u) * static_cast<std::size_t>(m_ + 1) +
                                         static_cast<std::size_t>(q);
                if (--adjacent_count_[slot] == 0) --near_[static_cast<std::size_t>(u)];
            }
        }
        auto& mask = class_mask_[static_cast<std::size_t>(q)];
        mask[static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
        if (--class_size_[static_cast<std::size_t>(q)] == 0 && q == opened_) --opened_;
        color_[static_cast<std::size_t>(v)] = 0;
        ++uncolored_;
    }

    int select_vertex() const {
        int best = -1;
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (color_[static_cast<std::size_t>(v)] != 0) continue;
            if (best < 0) { best = v; continue; }
            const auto sv = static_cast<std::size_t>(v), sb = static_cast<std::size_t>(best);
            if (sat_[sv] != sat_[sb]) {
                if (sat_[sv] > sat_[sb]) best = v;
            } else if (near_[sv] != near_[sb]) {
                if (near_[sv] > near_[sb]) best = v;
            } else if (g_.degree(v) > g_.degree(best)) {
                best = v;
            }
        }
        return best;
    }

    bool capacity_exceeded() const {
        // Complete compatibility means every class caps at r-1 vertices.
        if (!complete_) return false;
        long long free = static_cast<long long>(m_ - opened_) * (r_ - 1);
        for (int q = 1; q <= opened_; ++q)
            free += std::max(0, (r_ - 1) - class_size_[static_cast<std::size_t>(q)]);
        return uncolored_ > free;
    }

    bool dfs() {
        if (uncolored_ == 0) return true;
        if (capacity_exceeded()) return false;
        const int v = select_vertex();
        const int limit = std::min(opened_ + 1, m_); // open colors in order only
        for (int q = 1; q <= limit; ++q) {
            if (blocked_[static_cast<std::size_t>(v) * static_cast<std::size_t>(m_ + 1) +
                         static_cast<std::size_t>(q)])
                continue;
            assign(v, q);
            if (dfs()) return true;
            undo(v, q);
        }
        return false;
    }

    const CompatGraph& g_;
    const int r_;
    const int m_;
    const std::size_t words_;
    const std::uint64_t node_limit_;

    std::vector<int> color_;
    std::vector<int> sat_;
    std::vector<int> near_;
    std::vector<std::int16_t> adjacent_count_;
    std::vector<std::uint8_t> blocked_;
    std::vector<Words> class_mask_;
    std::vector<int> class_size_;
    std::vector<int> trail_;
    int uncolored_ = 0;
    int opened_ = 0;
    bool complete_ = false;
    std::uint64_t nodes_ = 0;
};

// Lex-least r-clique within one color class, by ordered DFS.
std::optional<std::vector<int>> least_clique_in_class(const CompatGraph& g,
                                                      const std::vector<int>& members, int r,
                                                      std::uint64_t& nodes_left) {
    std::vector<int> stack;
    auto extend = [&](auto&& self, std::size_t from) -> bool {
        if (static_cast<int>(stack.size()) == r) return true;
        for (std::size_t i = from; i < members.size(); ++i) {
            if (nodes_left == 0) throw BudgetHit{};
            --nodes_left;
            const int cand = members[i];
            bool adj = true;
            for (int c : stack) {
                if (!g.adjacent(c, cand)) { adj = false; break; }
            }
            if (!adj) continue;
            stack.push_back(cand);
            if (self(self, i + 1)) return true;
            stack.pop_back();
        }
        return false;
    };
    if (extend(extend, 0)) return stack;
    return std::nullopt;
}

} // namespace

ProperCheck is_proper(const KneserParams& params, const Coloring& coloring,
                      const SolveBudget& budget) {
    coloring.validate(params);
    const CompatGraph graph(params, budget.max_vertices);
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(coloring.color_count + 1));
    for (std::size_t v = 0; v < coloring.colors.size(); ++v)
        classes[static_cast<std::size_t>(coloring.colors[v])].push_back(static_cast<int>(v));

    std::uint64_t nodes_left = budget.max_nodes;
    std::optional<std::vector<int>> best;
    try {
        for (const auto& members : classes) {
            if (static_cast<int>(members.size()) < params.r) continue;
            auto found = least_clique_in_class(graph, members, params.r, nodes_left);
            if (found && (!best || *found < *best)) best = found;
        }
    } catch (const BudgetHit&) {
        throw BudgetError("monochromatic-edge search exceeded the node cap");
    }

    ProperCheck result;
    result.proper = !best.has_value();
    if (best) {
        Edge e;
        for (int v : *best) e.members.push_back(graph.vertices()[static_cast<std::size_t>(v)]);
        e.canonicalize();
        result.witness = e;
    }
    return result;
}

std::optional<Edge> find_monochromatic_edge(const KneserParams& params, const Coloring& coloring,
                                            const SolveBudget& budget) {
    return is_proper(params, coloring, budget).witness;
}

Coloring windowed_coloring(const KneserParams& params) {
    params.validate();
    if (params.s != 0) throw ParameterError("windowed coloring requires s = 0");
    if (params.n < params.r * params.k) throw ParameterError("windowed coloring requires n >= r*k");
    const int r = params.r;
    const int t = static_cast<int>(ceil_div(params.n - r * (params.k - 1), r - 1));
    const auto vertices = enumerate_ksubsets(params.n, params.k);
    Coloring c;
    c.color_count = t;
    c.colors.reserve(vertices.size());
    for (const auto& v : vertices) {
        const int min_element = std::countr_zero(v.mask) + 1;
        const int window = (min_element - 1) / (r - 1) + 1;
        c.colors.push_back(std::min(window, t));
    }
    return c;
}

MColorResult m_colorable(const KneserParams& params, int m, const SolveBudget& budget) {
    params.validate();
    if (m < 1) throw ParameterError("color count must be at least 1");
    const CompatGraph graph(params, budget.max_vertices);
    ColorSearch search(graph, m, budget.max_nodes);
    MColorResult result;
    try {
        Coloring witness;
        const bool ok = search.run(witness);
        result.nodes = search.nodes();
        if (ok) {
            witness.color_count = m;
            SolveBudget verify_budget;
            verify_budget.max_vertices = budget.max_vertices;
            if (!is_proper(params, witness, verify_budget).proper)
                throw StructuralError("search produced an improper coloring");
            result.outcome = Colorability::yes;
            result.coloring = std::move(witness);
        } else {
            result.outcome = Colorability::no;
        }
    } catch (const BudgetHit&) {
        result.nodes = search.nodes();
        result.outcome = Colorability::budget_exceeded;
    }
    return result;
}

SolveResult exact_chromatic(const KneserParams& params, const SolveBudget& budget) {
    params.validate();
    if (params.vertex_count() > budget.max_vertices)
        throw BudgetError("vertex count exceeds the solve cap");
    const CompatGraph graph(params, budget.max_vertices);

    int start = 1;
    if (params.bound_applicable()) start = std::max(start, lower_bound_general(params));
    const auto clique = graph.greedy_clique();
    start = std::max(start, static_cast<int>(ceil_div(static_cast<int>(clique.size()), params.r - 1)));

    SolveResult result;
    const int vertex_total = graph.vertex_count();
    for (int m = start; m <= vertex_total; ++m) {
        SolveBudget sub = budget;
        sub.max_nodes = budget.max_nodes - result.nodes_explored;
        MColorResult step = m_colorable(params, m, sub);
        result.nodes_explored += step.nodes;
        if (step.outcome == Colorability::budget_exceeded) {
            result.status = SolveStatus::budget_exceeded;
            return result;
        }
        if (step.outcome == Colorability::yes) {
            result.status = SolveStatus::chi_found;
            result.chi = m;
            Coloring witness = std::move(*step.coloring);
            witness.color_count = m;
            result.witness = std::move(witness);
            return result;
        }
    }
    // Unreachable: assigning every vertex its own color is always proper.
    throw StructuralError("no colorable m found up to the vertex count");
}

} // namespace kneser
