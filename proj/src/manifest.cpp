#include "ria/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace ria {

const char* const kToolVersion = "0.1.0";

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::string fnv1a64_hex(const std::string& data) {
    char b[20];
    std::snprintf(b, sizeof(b), "%016llx", (unsigned long long)fnv1a64(data));
    return b;
}

std::string RunManifest::to_json() const {
    nlohmann::json j;
    j["config_digest"] = config_digest;
    j["seed"] = seed;
    j["tool_version"] = tool_version;
    j["started"] = started;
    j["finished"] = finished;
    j["outputs"] = nlohmann::json::array();
    for (const auto& o : outputs)
        j["outputs"].push_back({{"path", o.path}, {"checksum", o.checksum}, {"bytes", o.bytes}});
    j["warnings"] = warnings;
    return j.dump(2) + "\n";
}

void write_output(RunManifest& mf, const std::string& dir, const std::string& name,
                  const std::string& content) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    fs::path path = fs::path(dir) / name;
    {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open output file " + path.string());
        f.write(content.data(), std::streamsize(content.size()));
    }
    mf.outputs.push_back({name, fnv1a64_hex(content), content.size()});
}

std::string timestamp_utc() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace ria
