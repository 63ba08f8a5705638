#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kneser/params.hpp"

namespace kneser {

/// Total map vertex-index -> color in [1, color_count]; vertex order is the
/// canonical order of enumerate_ksubsets.
struct Coloring {
    std::vector<int> colors;
    int color_count = 0;

    [[nodiscard]] int max_used_color() const;
    [[nodiscard]] int distinct_used_colors() const;

    /// Entries in [1, color_count], length C(n,k). Throws ParameterError.
    void validate(const KneserParams& params) const;

    [[nodiscard]] std::string to_json() const; // JSON array, index = vertex index
    static Coloring from_json(const std::string& text, const KneserParams& params);

    /// One `<vertex elements> -> <color>` line per vertex.
    void write_text(std::ostream& out, const KneserParams& params) const;
};

} // namespace kneser
