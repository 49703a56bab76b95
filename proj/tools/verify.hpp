#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace supvar::cli {

struct GoldenCheck {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct GoldenReport {
    std::string id;
    std::uint32_t p = 3;
    std::vector<GoldenCheck> checks;
    bool pass() const;
};

const std::vector<std::string>& golden_ids();
// throws std::invalid_argument for an unknown id
GoldenReport run_golden(const std::string& id, std::uint32_t p, std::uint64_t seed);

}  // namespace supvar::cli
