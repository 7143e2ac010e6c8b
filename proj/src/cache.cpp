#include "liecoh/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace liecoh {

namespace fs = std::filesystem;

namespace {

std::string fnv1a_hex(const std::string& data) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace

ResultCache::ResultCache(std::string dir) : dir_(std::move(dir)) {
    fs::create_directories(dir_);
}

std::string ResultCache::path_for(const std::string& canonical_request) const {
    return (fs::path(dir_) / (fnv1a_hex(canonical_request) + ".json")).string();
}

std::optional<CachedResult> ResultCache::lookup(const std::string& canonical_request) const {
    const std::string path = path_for(canonical_request);
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        auto entry = nlohmann::json::parse(buf.str());
        if (entry.at("request").get<std::string>() != canonical_request) {
            std::cerr << "warning: cache entry " << path << " does not match its request; recomputing\n";
            return std::nullopt;
        }
        return CachedResult{entry.at("result").get<std::string>(), entry.at("exit").get<int>()};
    } catch (const std::exception&) {
        std::cerr << "warning: corrupt cache entry " << path << "; recomputing\n";
        return std::nullopt;
    }
}

void ResultCache::store(const std::string& canonical_request, const CachedResult& result) const {
    nlohmann::json entry{{"request", canonical_request}, {"result", result.output},
                         {"exit", result.exit_code}};
    const std::string path = path_for(canonical_request);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << entry.dump();
    }
    fs::rename(tmp, path);
}

} // namespace liecoh
