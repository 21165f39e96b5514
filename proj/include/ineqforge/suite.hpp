#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ineqforge/chains.hpp"
#include "ineqforge/verifier.hpp"

namespace ineqforge {

struct SuiteItem {
    std::string category;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::vector<SuiteItem> items;
    bool passed() const;
    std::size_t failures() const;
};

struct SuiteOptions {
    VerificationConfig config;
    double epsilon = 1e-3;
    /// Called after each item, e.g. for progress output.
    std::function<void(const SuiteItem&)> on_item;
};

/// Chains, probes, endpoint limits, mean/kernel agreement, monotonicity,
/// the three-regime M6 check, constants, series and coefficient laws, and
/// the substitution identities.
SuiteResult run_suite(const ChainRegistry& chains, const SuiteOptions& options = {});

/// Largest relative difference between each Bernoulli series and its direct
/// trigonometric value over `points` seeded random arguments per series.
double series_agreement(int points, unsigned long long seed);

/// n <= n_max where the table disagrees with an Akiyama-Tanigawa computation,
/// or 0 when all agree.
int bernoulli_mismatch(int n_max);

}  // namespace ineqforge
