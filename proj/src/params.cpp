#include "kneser/params.hpp"

#include <sstream>

namespace kneser {

void KneserParams::validate() const {
    if (n < 1 || n > kMaxGroundSet) {
        std::ostringstream os;
        os << "n must be in [1," << kMaxGroundSet << "], got " << n;
        throw ParameterError(os.str());
    }
    if (k < 1 || k > n) throw ParameterError("k must satisfy 1 <= k <= n");
    if (r < 2) throw ParameterError("r must be at least 2");
    if (s < 0 || s >= k) throw ParameterError("s must satisfy 0 <= s < k");
}

std::string KneserParams::to_string() const {
    std::ostringstream os;
    os << "KG^" << r << "(" << n << "," << k << "," << s << ")";
    return os.str();
}

} // namespace kneser
