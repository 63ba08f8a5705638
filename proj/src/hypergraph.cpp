#include "kneser/hypergraph.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace kneser {

void Edge::canonicalize() {
    std::sort(members.begin(), members.end(),
              [](const KSubset& a, const KSubset& b) { return lex_less(a, b); });
}

std::string Edge::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (i) os << ' ';
        os << members[i].to_string();
    }
    os << ']';
    return os.str();
}

bool is_edge(const std::vector<KSubset>& members, int r, int s) {
    if (static_cast<int>(members.size()) != r) return false;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (members[i].mask == members[j].mask) return false;
            if (intersection_size(members[i], members[j]) > s) return false;
        }
    }
    return true;
}

CompatGraph::CompatGraph(const KneserParams& params, std::uint64_t max_vertices) : params_(params) {
    params.validate();
    const std::uint64_t count = params.vertex_count();
    if (count > max_vertices) {
        std::ostringstream os;
        os << params.to_string() << " has " << count << " vertices, over the cap of " << max_vertices;
        throw BudgetError(os.str());
    }
    vertices_ = enumerate_ksubsets(params.n, params.k);
    const int v = vertex_count();
    words_ = static_cast<std::size_t>((v + 63) / 64);
    rows_.assign(static_cast<std::size_t>(v) * words_, 0);
    degrees_.assign(static_cast<std::size_t>(v), 0);
    for (int i = 0; i < v; ++i) {
        for (int j = i + 1; j < v; ++j) {
            if (intersection_size(vertices_[static_cast<std::size_t>(i)],
                                  vertices_[static_cast<std::size_t>(j)]) <= params.s) {
                rows_[static_cast<std::size_t>(i) * words_ + static_cast<std::size_t>(j >> 6)] |=
                    std::uint64_t{1} << (j & 63);
                rows_[static_cast<std::size_t>(j) * words_ + static_cast<std::size_t>(i >> 6)] |=
                    std::uint64_t{1} << (i & 63);
                ++degrees_[static_cast<std::size_t>(i)];
                ++degrees_[static_cast<std::size_t>(j)];
                ++edge_count_;
            }
        }
    }
}

std::vector<int> CompatGraph::greedy_clique() const {
    const int v = vertex_count();
    std::vector<int> order(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return degrees_[static_cast<std::size_t>(a)] > degrees_[static_cast<std::size_t>(b)]; });
    std::vector<int> clique;
    for (int cand : order) {
        bool ok = true;
        for (int c : clique) {
            if (!adjacent(cand, c)) { ok = false; break; }
        }
        if (ok) clique.push_back(cand);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

KSubset pad_homomorphism(const KSubset& vertex, int source_n, int s) {
    if (source_n < 1 || s < 0 || source_n + s > kMaxGroundSet)
        throw ParameterError("pad range outside supported ground set");
    const Mask ground = (source_n == kMaxGroundSet) ? ~Mask{0} : ((Mask{1} << source_n) - 1);
    if (vertex.mask & ~ground) throw ParameterError("vertex not contained in source ground set");
    const Mask pad = ((s == 0) ? 0 : ((Mask{1} << s) - 1) << source_n);
    return KSubset{vertex.mask | pad};
}

HomomorphismCheck verify_homomorphism(const KneserParams& source, const KneserParams& target,
                                      std::uint64_t max_vertices) {
    source.validate();
    target.validate();
    if (source.s != 0) throw ParameterError("source must have s = 0");
    const int pad = target.s;
    if (target.n != source.n + pad || target.k != source.k + pad || target.r != source.r)
        throw ParameterError("target must be the padded form (n+s', k+s', r, s') of the source");

    const CompatGraph graph(source, max_vertices);
    const int v = graph.vertex_count();
    const int r = source.r;

    HomomorphismCheck result;
    result.ok = true;

    // DFS over r-cliques of the source in canonical order.
    std::vector<int> stack;
    std::vector<KSubset> mapped(static_cast<std::size_t>(r));
    std::vector<KSubset> edge(static_cast<std::size_t>(r));

    auto check_clique = [&](const std::vector<int>& clique) -> bool {
        for (int i = 0; i < r; ++i) {
            edge[static_cast<std::size_t>(i)] = graph.vertices()[static_cast<std::size_t>(clique[static_cast<std::size_t>(i)])];
            mapped[static_cast<std::size_t>(i)] = pad_homomorphism(edge[static_cast<std::size_t>(i)], source.n, pad);
        }
        ++result.edges_checked;
        return is_edge(mapped, r, target.s);
    };

    // Recursive extension keeps members in increasing index order, so the
    // first failure is on the canonically least violating edge.
    auto extend = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(stack.size()) == r) return check_clique(stack);
        for (int cand = from; cand < v; ++cand) {
            bool adj = true;
            for (int c : stack) {
                if (!graph.adjacent(c, cand)) { adj = false; break; }
            }
            if (!adj) continue;
            stack.push_back(cand);
            if (!self(self, cand + 1)) return false;
            stack.pop_back();
        }
        return true;
    };

    if (!extend(extend, 0)) {
        result.ok = false;
        Edge violation;
        violation.members = edge;
        violation.canonicalize();
        result.violation = violation;
    }
    return result;
}

void export_hypergraph(std::ostream& out, const KneserParams& params, bool with_graph,
                       std::uint64_t max_vertices) {
    params.validate();
    if (params.vertex_count() > max_vertices)
        throw BudgetError("vertex count exceeds export cap");
    const auto vertices = enumerate_ksubsets(params.n, params.k);
    out << "kg " << params.n << ' ' << params.k << ' ' << params.r << ' ' << params.s << ' '
        << vertices.size() << '\n';
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        out << "v " << i;
        for (int e : vertices[i].elements()) out << ' ' << e;
        out << '\n';
    }
    if (with_graph) {
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            for (std::size_t j = i + 1; j < vertices.size(); ++j) {
                if (intersection_size(vertices[i], vertices[j]) <= params.s)
                    out << "e " << i << ' ' << j << '\n';
            }
        }
    }
}

} // namespace kneser
