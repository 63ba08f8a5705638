#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>

namespace kneser {

inline constexpr const char* kToolVersion = "0.1.0";

struct CacheRecord {
    int n = 0, k = 0, r = 0, s = 0;
    std::optional<int> chi;
    std::string solver_status; // "chi_found" or "budget_exceeded"
    std::uint64_t nodes = 0;
    std::string tool_version;
    std::string timestamp; // ISO-8601 UTC

    [[nodiscard]] std::string to_json_line() const;
};

/// JSON-lines store keyed by (n,k,r,s). Corrupt lines are skipped with a
/// warning on stderr; later records for a key win.
class ResultCache {
public:
    /// Loads `path` if it exists; a missing file is an empty cache.
    static ResultCache load(const std::string& path);

    [[nodiscard]] std::optional<CacheRecord> lookup(int n, int k, int r, int s) const;

    /// Appends to the cache file and to the in-memory view.
    void append(const CacheRecord& record);

    [[nodiscard]] std::size_t size() const { return records_.size(); }
    [[nodiscard]] const std::string& path() const { return path_; }

private:
    std::string path_;
    std::map<std::tuple<int, int, int, int>, CacheRecord> records_;
};

/// Current time as ISO-8601 UTC.
std::string iso8601_now();

} // namespace kneser
