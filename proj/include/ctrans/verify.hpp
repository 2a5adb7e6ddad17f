#ifndef CTRANS_VERIFY_HPP
#define CTRANS_VERIFY_HPP

#include <optional>
#include <string>
#include <variant>

#include "ctrans/transform.hpp"

namespace ctrans {

struct Annulus {
    Complex center{0.0, 0.0};
    double rmin = 1.0;
    double rmax = 2.0;
};

struct DiskRegion {
    Complex center{0.0, 0.0};
    double radius = 1.0;
};

using Region = std::variant<Annulus, DiskRegion, std::vector<Complex>>;

std::string describe(const Region& r);

// Deterministic quasi-uniform samples (Halton, area-uniform); the same region
// and count always produce the same points.
std::vector<Complex> sample_region(const Region& r, int samples);

struct VerificationReport {
    std::string scenario;
    std::string region;
    double max_error = 0.0;    // over reliable samples
    Complex max_error_at{0.0, 0.0};
    int samples = 0;
    int reliable_samples = 0;
    double tolerance = 0.0;
    bool pass = false;         // max_error <= tolerance over reliable samples
    bool inconclusive = false; // fewer than 50% of samples were reliable
};

// Samples the region, compares transform(m) against `expected` (zero when
// absent) and fills a report. Guard failures are excluded from the maximum and
// counted against reliability; they never raise.
VerificationReport verify_vanishing(const MeasureSpec& m, const Region& region,
                                    const std::optional<Expr>& expected, double tol, int samples,
                                    int n = kDefaultNodes, std::string scenario = {});

} // namespace ctrans

#endif
