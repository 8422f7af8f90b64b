#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ria {

/// FNV-1a 64-bit content checksum (hex string).
uint64_t fnv1a64(const std::string& data);
std::string fnv1a64_hex(const std::string& data);

/// Run manifest: config digest, seed and per-output checksums.  Timestamps
/// are recorded but excluded from the digest, so a config+seed pair maps to
/// byte-identical data files.
struct RunManifest {
    std::string config_digest;
    uint64_t seed = 0;
    std::string tool_version;
    std::string started;
    std::string finished;
    struct Output {
        std::string path;
        std::string checksum;
        uint64_t bytes = 0;
    };
    std::vector<Output> outputs;
    std::vector<std::string> warnings;

    std::string to_json() const;
};

extern const char* const kToolVersion;

/// Writes a file atomically-ish and records it in the manifest.
void write_output(RunManifest& mf, const std::string& dir, const std::string& name,
                  const std::string& content);

std::string timestamp_utc();

}  // namespace ria
