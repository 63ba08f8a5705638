#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "kneser/cache.hpp"

using namespace kneser;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/kneser_test_" + name) {
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("cache round trip") {
    TempFile file("roundtrip.jsonl");
    {
        ResultCache cache = ResultCache::load(file.path);
        CHECK(cache.size() == 0);
        CacheRecord rec;
        rec.n = 5;
        rec.k = 2;
        rec.r = 2;
        rec.s = 0;
        rec.chi = 3;
        rec.solver_status = "chi_found";
        rec.nodes = 42;
        rec.tool_version = kToolVersion;
        rec.timestamp = iso8601_now();
        cache.append(rec);
    }
    ResultCache reloaded = ResultCache::load(file.path);
    CHECK(reloaded.size() == 1);
    const auto hit = reloaded.lookup(5, 2, 2, 0);
    REQUIRE(hit.has_value());
    CHECK(hit->chi == 3);
    CHECK(hit->nodes == 42);
    CHECK(!reloaded.lookup(6, 2, 2, 0).has_value());
}

TEST_CASE("corrupt lines are skipped, later records win") {
    TempFile file("corrupt.jsonl");
    {
        std::ofstream out(file.path);
        out << "{\"n\":5,\"k\":2,\"r\":2,\"s\":0,\"chi\":3,\"solver_status\":\"chi_found\","
               "\"nodes\":1,\"tool_version\":\"x\",\"timestamp\":\"t\"}\n";
        out << "this is not json\n";
        out << "{\"n\":5,\"k\":2}\n"; // missing keys
        out << "{\"n\":5,\"k\":2,\"r\":2,\"s\":0,\"chi\":null,\"solver_status\":\"chi_found\","
               "\"nodes\":1,\"tool_version\":\"x\",\"timestamp\":\"t\"}\n"; // chi/status mismatch
        out << "{\"n\":5,\"k\":2,\"r\":2,\"s\":0,\"chi\":4,\"solver_status\":\"chi_found\","
               "\"nodes\":2,\"tool_version\":\"x\",\"timestamp\":\"t\"}\n";
    }
    ResultCache cache = ResultCache::load(file.path);
    CHECK(cache.size() == 1);
    const auto hit = cache.lookup(5, 2, 2, 0);
    REQUIRE(hit.has_value());
    CHECK(hit->chi == 4);
}

TEST_CASE("timestamps are ISO-8601 UTC shaped") {
    const std::string ts = iso8601_now();
    REQUIRE(ts.size() == 20);
    CHECK(ts[4] == '-');
    CHECK(ts[10] == 'T');
    CHECK(ts.back() == 'Z');
}
