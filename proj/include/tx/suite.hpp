#pragma once

#include <functional>
#include <string>
#include <vector>

namespace tx {

struct SuiteItem {
    std::string name;
    // Returns an empty string on success, otherwise the failure detail.
    std::function<std::string()> check;
};

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double elapsedMs = 0;
};

// Known suites: "paper", "F-relations".
std::vector<SuiteItem> suite_items(const std::string& suite);
// Runs items on up to `jobs` threads; results keep the item order.
std::vector<SuiteResult> run_suite(const std::vector<SuiteItem>& items, int jobs = 1);

}  // namespace tx
