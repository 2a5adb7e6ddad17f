#include "ctrans/poisson.hpp"

#include <cmath>

namespace ctrans {

double poisson_kernel(double r, double angle) {
    if (!(r >= 0.0 && r < 1.0))
        throw PreconditionError("poisson_kernel: r must lie in [0,1)");
    return (1.0 - r * r) / (1.0 + r * r - 2.0 * r * std::cos(angle));
}

double kernel_identity_check(double r, double theta, double t) {
    if (!(r > 0.0 && r < 1.0))
        throw PreconditionError("kernel_identity_check: r must lie in (0,1)");
    const Complex zeta{std::cos(theta), std::sin(theta)};
    const Complex w{std::cos(t), std::sin(t)};
    const Complex lhs = 1.0 / (w - r * zeta) - 1.0 / (w - zeta / r);
    const Complex rhs = std::conj(w) * poisson_kernel(r, theta - t);
    return std::abs(lhs - rhs);
}

double harmonic_measure_density(const Circle& disk, Complex basepoint, double theta) {
    const Complex b = (basepoint - disk.center) / disk.radius;
    const double rho = std::abs(b);
    if (!(rho < 1.0))
        throw PreconditionError("harmonic_measure_density: basepoint must be strictly inside");
    const double phi = std::arg(b);
    return poisson_kernel(rho, theta - phi) / (2.0 * kPi);
}

SampledDensity radon_nikodym(const CircleDensity& component, const Circle& disk,
                             Complex basepoint, int samples) {
    if (samples < 8) throw PreconditionError("radon_nikodym: samples must be >= 8");
    const double scale = std::max(1.0, disk.radius);
    if (std::abs(component.circle.center - disk.center) > 1e-12 * scale ||
        std::abs(component.circle.radius - disk.radius) > 1e-12 * scale)
        throw PreconditionError("radon_nikodym: component is not carried on the disk boundary");

    SampledDensity out;
    out.angles.resize(samples);
    out.values.resize(samples);
    const double dt = 2.0 * kPi / samples;
    const double sign = component.circle.orientation == Orientation::ccw ? 1.0 : -1.0;
    double tv = 0.0;
    for (int k = 0; k < samples; ++k) {
        const double theta = dt * k;
        const Complex w = disk.point(theta);
        Complex arc_density = component.density.eval(w);
        if (component.differential == Differential::dw)
            arc_density *= sign * Complex{0.0, 1.0} * (w - disk.center); // dw = i (w - c) dt
        const double omega = harmonic_measure_density(disk, basepoint, theta);
        out.angles[k] = theta;
        out.values[k] = arc_density / omega;
        tv += std::abs(out.values[k]) * omega * dt;
    }
    out.tv_check = tv;
    return out;
}

} // namespace ctrans
