#pragma once

#include "rooks/errors.hpp"

#include <string>
#include <vector>

namespace rooks {

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::vector<std::string> failures;

    bool passed() const noexcept { return failures.empty(); }
};

inline constexpr int kVerifyMaxN = 6;

/// Cross-checks every module against its alternative computation paths for
/// sizes up to max_n (2..6). Library errors inside a check count as failures.
std::vector<SuiteResult> run_all_suites(int max_n, const Limits& limits = {});

SuiteResult verify_boards_suite(int max_n, const Limits& limits = {});
SuiteResult verify_partitions_suite(int max_n, const Limits& limits = {});
SuiteResult verify_trees_suite(int max_n, const Limits& limits = {});
SuiteResult verify_bijection_suite(int max_n, const Limits& limits = {});
SuiteResult verify_arrangements_suite(int max_n, const Limits& limits = {});
SuiteResult verify_graphs_suite(int max_n, const Limits& limits = {});
SuiteResult verify_series_suite(int max_n, const Limits& limits = {});

}  // namespace rooks
