#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

namespace mldlab {

using ojson = nlohmann::ordered_json;

inline constexpr const char* kToolName = "mld-gap-lab";
inline constexpr const char* kToolVersion = "0.1.0";

/// Canonical run configuration: the semantic query only. Execution details
/// (jobs, cache dir, output path) are excluded so reports are byte-stable.
struct RunConfig {
    std::string subcommand;
    ojson config = ojson::object();

    std::string canonical() const; // subcommand + "\n" + compact config
    std::string header_line() const;
};

uint64_t fnv1a64(std::string_view bytes);

/// Content-addressed store of finished reports, keyed by the canonical run
/// configuration. A hit returns the stored bytes verbatim.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::optional<std::string> lookup(const RunConfig& cfg) const;
    bool store(const RunConfig& cfg, const std::string& bytes) const;

    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path key_path(const RunConfig& cfg) const;
    std::filesystem::path meta_path(const RunConfig& cfg) const;

    std::filesystem::path dir_;
};

/// CSV field quoting per RFC 4180 (quotes only when needed).
std::string csv_field(const std::string& s);

} // namespace mldlab
