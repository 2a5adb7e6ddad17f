#ifndef CTRANS_SCREENS_HPP
#define CTRANS_SCREENS_HPP

#include "ctrans/measure.hpp"

namespace ctrans {

// Which side of the screen circle the combined transform is cancelled on.
enum class ScreenSide { kill_exterior, kill_interior };

// A screening job: what is being screened (a measure for kill_exterior, a
// holomorphic function for kill_interior) and the circles carrying the
// screens. build() validates the margin/holomorphy preconditions.
struct ScreenPlan {
    ScreenSide side = ScreenSide::kill_exterior;
    std::shared_ptr<const MeasureSpec> source_measure; // kill_exterior
    Expr source_function;                              // kill_interior
    std::vector<Circle> screens;

    std::vector<MeasureComponent> build(int n = kDefaultNodes) const;
};

// Circle density (1/(2 pi i)) cauchy_of(m) dw on c. Added to m it cancels
// m's transform outside c and leaves it unchanged inside (off supp m).
// Requires supp m strictly inside c with margin >= 2 * node spacing.
MeasureComponent outer_screen(const std::shared_ptr<const MeasureSpec>& m, const Circle& c,
                              int n = kDefaultNodes);

// Circle density -(1/(2 pi i)) g dw on c for g holomorphic on the closed disk
// (no pole or referenced support within the guard margin). Its transform is
// -g(z) inside c and 0 outside.
MeasureComponent inner_screen(const Expr& g, const Circle& c, int n = kDefaultNodes);

// m plus its outer screen on `screen`; the composite transform is m_hat
// inside the screen circle and 0 outside.
MeasureSpec screened_scenario(const std::shared_ptr<const MeasureSpec>& m,
                              const Circle& screen = unit_circle(), std::string name = {},
                              int n = kDefaultNodes);

// Unit point mass at 0, screened outside the unit circle and inside each of
// the given disks: the transform is exactly 0 outside the closed unit disk,
// 0 inside every disk, and -1/z elsewhere in the disk, at every truncation.
MeasureSpec screened_point_scenario(const std::vector<Circle>& disks, std::string name = {},
                                    int n = kDefaultNodes);

// Default disk layout for screened_point_scenario: radii 4^-j on a line below
// the segment [0,1], mutually disjoint and clear of both the segment and 0.
std::vector<Circle> default_screen_disks(int m);

// Boundary densities +-dw/(2 pi i) making the transform 1 on each domain,
// 0 in the holes and off the closures; total variation is the total boundary
// length over 2 pi. Domain closures must be pairwise disjoint.
MeasureSpec domain_indicator_measure(const std::vector<CircularDomain>& domains,
                                     std::string name = {});

} // namespace ctrans

#endif
