#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "authornet/graph.hpp"

namespace authornet::pipeline {

/// Everything a full run needs. Loaded from a JSON config file, overridable
/// per field by CLI flags.
struct RunConfig {
    std::string authors_path;
    std::string repos_path;
    std::string interactions_path;
    std::string forums_path;
    std::string keywords_path;  // empty: built-in default keyword sets
    std::string output_dir;

    graph::WeightMode weight_mode = graph::WeightMode::exact;
    double tolerance = 1e-9;
    std::size_t max_iter = 10000;
    std::optional<double> phs_knee;  // override; otherwise detected
    std::optional<double> chs_knee;
    std::size_t min_community_size = 20;
    unsigned threads = 1;

    /// Throws ConfigError on out-of-range parameters or missing paths.
    void validate() const;

    static RunConfig from_json_file(const std::string& path);
    void apply_json(const nlohmann::json& obj);
    nlohmann::json to_json() const;
};

inline constexpr const char* kToolName = "authornet";
inline constexpr const char* kToolVersion = "0.1.0";

/// Runs ingest -> graphs -> influence -> communities -> stats ->
/// crossplatform, writing the report bundle into config.output_dir and
/// `manifest.json` last. On a stage failure every already-written file is
/// renamed to `<name>.partial` and a StageError is thrown.
///
/// The manifest's volatile fields (wall-clock timestamp, stage durations)
/// live under the top-level "timing" key; everything else is deterministic
/// for fixed inputs and config.
nlohmann::json run_pipeline(const RunConfig& config);

/// Human-readable digest of a finished bundle: top-10 producers and
/// connectors, the five largest communities, the reciprocity table, yearly
/// cohorts, and the cross-platform match count. Throws InputError naming
/// any missing report file.
std::string summarize(const std::string& bundle_dir);

/// Fixed-precision float formatting shared by all reports ("%.12g").
std::string format_double(double v);

}  // namespace authornet::pipeline
