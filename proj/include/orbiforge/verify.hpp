#pragma once

/**
 * @file verify.hpp
 * @brief Runs the fixed suite of machine checks and assembles a report.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbiforge {

enum class CheckStatus { pass, fail, cited };

std::string to_string(CheckStatus s);

struct CheckRecord {
    std::string id;
    std::string claim;
    CheckStatus status;
    std::string detail;
    double wall_time = 0;  // seconds
};

struct Report {
    std::vector<CheckRecord> records;

    bool ok() const;
    /// Stable JSON; wall times only when requested.
    std::string json(bool timings = false) const;
    std::string text(bool timings = false) const;
};

/// Check ids in report order.
const std::vector<std::string>& check_ids();

struct VerifyOptions {
    std::vector<std::string> only;  // empty: all
    std::uint64_t seed = 0;
};

/// Runs the selected checks in canonical order. Throws LookupError on an
/// unknown id; ResourceLimit from enumeration propagates.
Report run_verification(const VerifyOptions& opts = {});

}  // namespace orbiforge
