#pragma once

// The acceptance suite: twelve exact checks, each with a wall-clock limit.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace rquint::acceptance {

struct Options {
    std::uint64_t seed = 20240601;
    unsigned jobs = 1;
};

struct Result {
    int id;
    std::string title;
    bool correct;
    double seconds;
    double limit_seconds;
    std::string detail;

    bool passed() const { return correct && seconds < limit_seconds; }
    /// "PASS AC-01 <title> (1.23 s / 30 s): <detail>".
    std::string line() const;
};

inline constexpr int kCriterionCount = 12;

Result run_criterion(int id, const Options& opts);
/// Runs every criterion in order, calling `on_result` after each one.
std::vector<Result> run_all(const Options& opts, const std::function<void(const Result&)>& on_result = {});

}  // namespace rquint::acceptance
