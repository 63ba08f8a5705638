#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "kneser/params.hpp"
#include "kneser/subset.hpp"

namespace kneser {

/// An edge of KG^r(n,k,s): r distinct vertices in canonical order.
struct Edge {
    std::vector<KSubset> members;

    void canonicalize(); // sort members by lex order
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// True iff `members` has exactly r pairwise-distinct entries whose pairwise
/// intersections have size at most s. Order-insensitive, never throws.
bool is_edge(const std::vector<KSubset>& members, int r, int s);

/// Compatibility graph of KG^r(n,k,s): vertex u ~ v iff |u cap v| <= s.
/// An r-subset of vertices is a hypergraph edge iff it induces an r-clique.
class CompatGraph {
public:
    CompatGraph(const KneserParams& params, std::uint64_t max_vertices);

    [[nodiscard]] int vertex_count() const { return static_cast<int>(vertices_.size()); }
    [[nodiscard]] const std::vector<KSubset>& vertices() const { return vertices_; }
    [[nodiscard]] const KneserParams& params() const { return params_; }

    [[nodiscard]] bool adjacent(int u, int v) const {
        return (rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1u;
    }
    [[nodiscard]] int degree(int v) const { return degrees_[v]; }
    [[nodiscard]] std::uint64_t edge_count() const { return edge_count_; }
    [[nodiscard]] bool complete() const {
        const auto nv = static_cast<std::uint64_t>(vertex_count());
        return edge_count_ == nv * (nv - 1) / 2;
    }

    [[nodiscard]] int words_per_row() const { return static_cast<int>(words_); }
    [[nodiscard]] const std::uint64_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }

    /// Greedy clique, deterministic (descending degree, ties by index).
    [[nodiscard]] std::vector<int> greedy_clique() const;

private:
    KneserParams params_;
    std::vector<KSubset> vertices_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
    std::vector<int> degrees_;
    std::uint64_t edge_count_ = 0;
};

/// A |- A cup {source_n+1, ..., source_n+s}, mapping KG^r(n-s',k-s',0)
/// vertices into KG^r(n,k,s) vertices. Grows cardinality by exactly s.
KSubset pad_homomorphism(const KSubset& vertex, int source_n, int s);

struct HomomorphismCheck {
    bool ok = false;
    std::uint64_t edges_checked = 0;
    std::optional<Edge> violation; // first violating source edge, canonical order
};

/// Exhaustively maps every edge of `source` (which must have s = 0) through the
/// padding map and checks it lands on an edge of `target`.
/// Requires target = (source.n + t, source.k + t, source.r, t) for t = target.s.
HomomorphismCheck verify_homomorphism(const KneserParams& source, const KneserParams& target,
                                      std::uint64_t max_vertices = 1024);

/// Text export: header `kg <n> <k> <r> <s> <num_vertices>`, one `v <index>
/// <elements>` line per vertex, and with_graph adds `e <u> <v>` lines.
void export_hypergraph(std::ostream& out, const KneserParams& params, bool with_graph,
                       std::uint64_t max_vertices = 4096);

} // namespace kneser
