#include "kneser/cache.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "kneser/errors.hpp"

namespace kneser {

std::string iso8601_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    std::tm utc{};
    gmtime_r(&tt, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer;
}

std::string CacheRecord::to_json_line() const {
    nlohmann::json j;
    j["n"] = n;
    j["k"] = k;
    j["r"] = r;
    j["s"] = s;
    j["chi"] = chi ? nlohmann::json(*chi) : nlohmann::json(nullptr);
    j["solver_status"] = solver_status;
    j["nodes"] = nodes;
    j["tool_version"] = tool_version;
    j["timestamp"] = timestamp;
    return j.dump();
}

ResultCache ResultCache::load(const std::string& path) {
    ResultCache cache;
    cache.path_ = path;
    std::ifstream in(path);
    if (!in) return cache;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            const auto j = nlohmann::json::parse(line);
            CacheRecord rec;
            rec.n = j.at("n").get<int>();
            rec.k = j.at("k").get<int>();
            rec.r = j.at("r").get<int>();
            rec.s = j.at("s").get<int>();
            if (!j.at("chi").is_null()) rec.chi = j.at("chi").get<int>();
            rec.solver_status = j.at("solver_status").get<std::string>();
            rec.nodes = j.value("nodes", std::uint64_t{0});
            rec.tool_version = j.value("tool_version", std::string{});
            rec.timestamp = j.value("timestamp", std::string{});
            if (rec.chi.has_value() != (rec.solver_status == "chi_found"))
                throw ParameterError("chi presence does not match status");
            cache.records_[{rec.n, rec.k, rec.r, rec.s}] = rec;
        } catch (const std::exception& e) {
            std::cerr << "warning: skipping corrupt cache line " << line_no << " in " << path
                      << ": " << e.what() << '\n';
        }
    }
    return cache;
}

std::optional<CacheRecord> ResultCache::lookup(int n, int k, int r, int s) const {
    const auto it = records_.find({n, k, r, s});
    if (it == records_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::append(const CacheRecord& record) {
    records_[{record.n, record.k, record.r, record.s}] = record;
    if (path_.empty()) return;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw ParameterError("cannot open cache file for append: " + path_);
    out << record.to_json_line() << '\n';
}

} // namespace kneser
