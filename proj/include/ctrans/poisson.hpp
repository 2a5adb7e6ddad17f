#ifndef CTRANS_POISSON_HPP
#define CTRANS_POISSON_HPP

#include "ctrans/measure.hpp"

namespace ctrans {

// P_r(theta) = (1 - r^2) / (1 + r^2 - 2 r cos theta), 0 <= r < 1.
double poisson_kernel(double r, double angle);

// Residual of the identity 1/(w - r zeta) - 1/(w - zeta/r) = e^{-it} P_r(theta - t)
// with zeta = e^{i theta}, w = e^{it}; 0 < r < 1.
double kernel_identity_check(double r, double theta, double t);

// d omega / d theta for the harmonic measure of the disk seen from basepoint;
// integrates to 1 over [0, 2 pi).
double harmonic_measure_density(const Circle& disk, Complex basepoint, double theta);

struct SampledDensity {
    std::vector<double> angles;
    std::vector<Complex> values;
    double tv_check = 0.0; // integral |d nu / d omega| d omega, equals the component TV
};

// Pointwise ratio of the component's arc density to the harmonic-measure
// density at `samples` angles. The component must be carried on the boundary
// of `disk`.
SampledDensity radon_nikodym(const CircleDensity& component, const Circle& disk,
                             Complex basepoint, int samples = kDefaultNodes);

} // namespace ctrans

#endif
