#pragma once

#include "bhx/extremal.hpp"

#include <chrono>
#include <string>
#include <vector>

namespace bhx {

enum class RowStatus
{
    pass,
    fail,
    skipped,
};

auto to_string(RowStatus s) -> std::string;

struct VerifyRow
{
    std::string group;
    std::string name;
    RowStatus status = RowStatus::skipped;
    double elapsed_seconds = 0;
    std::string detail;
};

struct VerifyReport
{
    int max_n = 0;
    std::vector<VerifyRow> rows;
    bool budget_exhausted = false;

    auto group_count() const -> std::size_t;
    auto all_pass() const -> bool;
    /// 0 all pass, 1 some failure, 3 rows skipped for budget.
    auto exit_code() const -> int;
};

/// Structural checks of BH_n up to max_n followed by the e_g, construction
/// and λ_g checks, one row each, in a fixed order. Rows that would start
/// after the budget has elapsed are marked skipped.
auto verify_suite(int max_n, std::chrono::duration<double> budget = std::chrono::hours(1),
                  const EgBoundsOptions & options = {}) -> VerifyReport;

} // namespace bhx
