#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace authornet {

/// A UTC instant with its calendar year precomputed.
struct Timestamp {
    std::int64_t epoch_s = 0;
    int year = 0;

    friend bool operator==(const Timestamp&, const Timestamp&) = default;
    friend auto operator<=>(const Timestamp&, const Timestamp&) = default;
};

/// Parses an ISO-8601 timestamp: `YYYY-MM-DD[THH:MM[:SS[.frac]]][Z|+HH:MM|-HH:MM]`.
/// A space is accepted in place of 'T'. Fractional seconds are truncated.
/// Returns nullopt for anything that is not a valid calendar instant.
std::optional<Timestamp> parse_iso8601(std::string_view text);

/// UTC calendar year of an epoch instant.
int utc_year(std::int64_t epoch_s);

}  // namespace authornet
