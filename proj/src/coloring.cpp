#include "kneser/coloring.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace kneser {

int Coloring::max_used_color() const {
    int best = 0;
    for (int c : colors) best = std::max(best, c);
    return best;
}

int Coloring::distinct_used_colors() const {
    std::set<int> seen(colors.begin(), colors.end());
    return static_cast<int>(seen.size());
}

void Coloring::validate(const KneserParams& params) const {
    params.validate();
    if (colors.size() != params.vertex_count())
        throw ParameterError("coloring length does not match the vertex count");
    if (color_count < 1) throw ParameterError("color count must be positive");
    for (int c : colors) {
        if (c < 1 || c > color_count) throw ParameterError("color outside [1,m]");
    }
}

std::string Coloring::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (int c : colors) arr.push_back(c);
    return arr.dump();
}

Coloring Coloring::from_json(const std::string& text, const KneserParams& params) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("coloring is not valid JSON: ") + e.what());
    }
    if (!parsed.is_array()) throw ParameterError("coloring JSON must be an array");
    Coloring c;
    for (const auto& item : parsed) {
        if (!item.is_number_integer()) throw ParameterError("coloring entries must be integers");
        c.colors.push_back(item.get<int>());
    }
    c.color_count = std::max(1, c.max_used_color());
    c.validate(params);
    return c;
}

void Coloring::write_text(std::ostream& out, const KneserParams& params) const {
    const auto vertices = enumerate_ksubsets(params.n, params.k);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        out << vertices[i].to_string() << " -> " << colors[i] << '\n';
}

} // namespace kneser
