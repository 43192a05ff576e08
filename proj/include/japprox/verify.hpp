#pragma once

#include <functional>
#include <string>
#include <vector>

namespace japprox {

struct VerifyCheck
{
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions
{
    /// Smaller corpus slices and grids for a fast smoke run.
    bool quick = false;
    unsigned seed = 20240611;
};

/// Runs the identity and inequality suite, calling `progress` after each
/// check when given.
std::vector<VerifyCheck> run_verify(const VerifyOptions& options = {},
                                    const std::function<void(const VerifyCheck&)>& progress = {});

} // namespace japprox
