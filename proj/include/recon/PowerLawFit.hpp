#pragma once

#include <span>

#include <recon/Globals.hpp>

namespace recon {

/// Exponent search range for the discrete power law p(d) ~ d^gamma.
constexpr double plfitLowest = -6.0;
constexpr double plfitHighest = -1.0;
constexpr double plfitDefaultTolerance = 1e-3;
/// Exponent reported for a single-valued sequence.
constexpr double plfitDegenerateExponent = -3.0;

struct PowerLawFit {
    double gamma = plfitDegenerateExponent;
    count dMin = 0;
    count dMax = 0;
    double targetMean = 0;
    /// dMin == dMax; gamma carries no information.
    bool degenerate = false;
    /// The target mean lies outside what the search range can produce.
    bool clamped = false;
};

struct CommunityFit {
    double beta = plfitDegenerateExponent;
    count cMin = 0;
    count cMax = 0;
    double targetMean = 0;
    double expectedMean = 0;
    bool degenerate = false;
    /// cMin was raised above the smallest observed size.
    bool minRaised = false;
};

/// Mean of the discrete power law with exponent gamma on the integers [lo, hi].
double powerLawMean(double gamma, count lo, count hi);

/**
 * Fits gamma in [-6, -1] so that the power law on [min, max] of `values` has the
 * same mean as `values`, by bisection until the bracket is at most `tolerance`
 * wide. Throws std::invalid_argument for empty input or values below 1.
 */
PowerLawFit plfit(std::span<const count> values, double tolerance = plfitDefaultTolerance);

/// Fit on an explicit range and target mean; the building block of plfit.
PowerLawFit plfitRange(count lo, count hi, double targetMean, double tolerance = plfitDefaultTolerance);

/**
 * plfit for community sizes. When even the flattest exponent underestimates the
 * mean size, the minimum size is raised by integer binary search and the
 * exponent refitted, keeping whichever candidate minimum brings the expected
 * mean closest to the observed one.
 */
CommunityFit plfitStar(std::span<const count> sizes, double tolerance = plfitDefaultTolerance);

} // namespace recon
