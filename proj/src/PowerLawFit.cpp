#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <recon/PowerLawFit.hpp>

namespace recon {

double powerLawMean(double gamma, count lo, count hi) {
    if (lo == 0 || lo > hi)
        throw std::invalid_argument("powerLawMean: need 1 <= lo <= hi");
    // weights relative to lo^gamma keep steep exponents away from underflow
    double weighted = 0;
    double total = 0;
    const auto base = static_cast<double>(lo);
    for (count d = lo; d <= hi; ++d) {
        const auto x = static_cast<double>(d);
        const double w = std::pow(x / base, gamma);
        total += w;
        weighted += x * w;
    }
    return weighted / total;
}

PowerLawFit plfitRange(count lo, count hi, double targetMean, double tolerance) {
    PowerLawFit fit;
    fit.dMin = lo;
    fit.dMax = hi;
    fit.targetMean = targetMean;
    if (lo == hi) {
        fit.degenerate = true;
        fit.gamma = plfitDegenerateExponent;
        return fit;
    }

    if (targetMean >= powerLawMean(plfitHighest, lo, hi)) {
        fit.gamma = plfitHighest;
        fit.clamped = true;
        return fit;
    }
    if (targetMean <= powerLawMean(plfitLowest, lo, hi)) {
        fit.gamma = plfitLowest;
        fit.clamped = true;
        return fit;
    }

    // the mean grows with gamma
    double low = plfitLowest;
    double high = plfitHighest;
    while (high - low > tolerance) {
        const double mid = 0.5 * (low + high);
        if (powerLawMean(mid, lo, hi) < targetMean)
            low = mid;
        else
            high = mid;
    }
    fit.gamma = 0.5 * (low + high);
    return fit;
}

PowerLawFit plfit(std::span<const count> values, double tolerance) {
    if (values.empty())
        throw std::invalid_argument("plfit: empty sequence");
    auto [minIt, maxIt] = std::minmax_element(values.begin(), values.end());
    if (*minIt < 1)
        throw std::invalid_argument("plfit: values must be at least 1");
    const double mean = static_cast<double>(std::accumulate(values.begin(), values.end(), count{0}))
                        / static_cast<double>(values.size());
    return plfitRange(*minIt, *maxIt, mean, tolerance);
}

namespace {

double expectedMean(const PowerLawFit &fit) {
    return fit.degenerate ? static_cast<double>(fit.dMin) : powerLawMean(fit.gamma, fit.dMin, fit.dMax);
}

CommunityFit toCommunityFit(const PowerLawFit &fit) {
    CommunityFit out;
    out.beta = fit.gamma;
    out.cMin = fit.dMin;
    out.cMax = fit.dMax;
    out.targetMean = fit.targetMean;
    out.degenerate = fit.degenerate;
    out.expectedMean = expectedMean(fit);
    return out;
}

} // namespace

CommunityFit plfitStar(std::span<const count> sizes, double tolerance) {
    const PowerLawFit plain = plfit(sizes, tolerance);
    const double mean = plain.targetMean;
    if (plain.degenerate || !(plain.clamped && plain.gamma == plfitHighest))
        return toCommunityFit(plain);

    // smallest minimum whose flattest law reaches the mean; hi itself always does
    count lo = plain.dMin;
    count hi = plain.dMax;
    while (lo < hi) {
        const count mid = lo + (hi - lo) / 2;
        if (powerLawMean(plfitHighest, mid, plain.dMax) >= mean)
            hi = mid;
        else
            lo = mid + 1;
    }

    CommunityFit best = toCommunityFit(plfitRange(lo, plain.dMax, mean, tolerance));
    if (lo > plain.dMin) {
        CommunityFit below = toCommunityFit(plfitRange(lo - 1, plain.dMax, mean, tolerance));
        if (std::abs(below.expectedMean - mean) <= std::abs(best.expectedMean - mean))
            best = below;
    }
    best.minRaised = best.cMin > plain.dMin;
    return best;
}

} // namespace recon
