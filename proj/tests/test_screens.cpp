#include <doctest.h>

#include "ctrans/parser.hpp"
#include "ctrans/screens.hpp"
#include "ctrans/transform.hpp"
#include "ctrans/verify.hpp"

using namespace ctrans;

namespace {
const Complex I{0.0, 1.0};
}

TEST_CASE("outer screen alone negates the source transform outside") {
    const auto nuK = atom_measure("nuK", Complex{0.5, 0.0}, Complex{1.0, 0.0});
    MeasureSpec screen;
    screen.name = "screen";
    screen.components.push_back(outer_screen(nuK, unit_circle()));
    const Complex v = transform(screen, Complex{2.0, 0.0});
    CHECK(std::abs(v - Complex{2.0 / 3.0, 0.0}) < 1e-10); // -nuK_hat(2) = +2/3
}

TEST_CASE("outer screen rejects support outside the circle") {
    const auto bad = atom_measure("bad", Complex{1.5, 0.0}, Complex{1.0, 0.0});
    CHECK_THROWS_AS(outer_screen(bad, unit_circle()), PreconditionError);
    const auto margin = atom_measure("margin", Complex{0.999, 0.0}, Complex{1.0, 0.0});
    CHECK_THROWS_AS(outer_screen(margin, unit_circle()), PreconditionError);
}

TEST_CASE("screened composite vanishes outside and is unchanged inside") {
    const auto nuK = atom_measure("nuK", Complex{0.5, 0.0}, Complex{1.0, 0.0});
    const MeasureSpec composite = screened_scenario(nuK);

    const VerificationReport outside = verify_vanishing(
        composite, Annulus{Complex{0.0, 0.0}, 1.1, 3.0}, std::nullopt, 1e-9, 200, 1024);
    CHECK(outside.pass);
    CHECK_FALSE(outside.inconclusive);

    const Expr expected = Expr::cauchy_of(nuK);
    const VerificationReport inside =
        verify_vanishing(composite, DiskRegion{Complex{0.0, 0.0}, 0.9}, expected, 1e-9, 200, 1024);
    CHECK(inside.pass);
}

TEST_CASE("screen cancels the total mass") {
    const auto nuK = atom_measure("nuK", Complex{0.5, 0.0}, Complex{1.0, 0.0});
    const MeasureSpec composite = screened_scenario(nuK);
    CHECK(std::abs(mass_at_infinity(composite)) < 1e-8);
    CHECK(std::abs(moment(composite, 0)) < 1e-10);
}

TEST_CASE("screened segment measure passes the exterior check") {
    MeasureSpec nuK;
    nuK.name = "nuK_seg";
    nuK.components.push_back(
        SegmentDensity{Segment{Complex{0.0, 0.0}, Complex{0.9, 0.0}}, parse_density("1")});
    const auto shared = std::make_shared<const MeasureSpec>(std::move(nuK));
    const MeasureSpec composite = screened_scenario(shared);
    const VerificationReport rep = verify_vanishing(
        composite, Annulus{Complex{0.0, 0.0}, 1.15, 3.0}, std::nullopt, 1e-8, 200, 1024);
    CHECK(rep.pass);
}

TEST_CASE("inner screen cancels inside and vanishes outside") {
    const Circle c{Complex{0.5, 0.0}, 0.1};
    const Expr g = Expr::moebius(Complex{0.0, 0.0}); // 1/(0 - z) = delta0_hat
    MeasureSpec screen;
    screen.name = "inner";
    screen.components.push_back(inner_screen(g, c));

    // at the disk center the screen contributes -g(0.5) = +2
    CHECK(std::abs(transform(screen, Complex{0.5, 0.0}) - Complex{2.0, 0.0}) < 1e-10);
    CHECK(std::abs(transform(screen, Complex{3.0, 0.0})) < 1e-12);
}

TEST_CASE("inner screen is two-sided for rational g") {
    const Circle c{Complex{0.5, 0.0}, 0.1};
    const Expr g = parse_density("(z^2+1)/(z-3)");
    MeasureSpec screen;
    screen.name = "inner_rat";
    screen.components.push_back(inner_screen(g, c));
    for (const Complex z : {Complex{0.5, 0.0}, Complex{0.48, 0.03}, Complex{0.55, -0.02}})
        CHECK(std::abs(transform(screen, z) + g.eval(z)) < 1e-10);
    for (const Complex z : {Complex{3.5, 0.0}, Complex{0.0, 1.0}, Complex{-2.0, 0.0}})
        CHECK(std::abs(transform(screen, z)) < 1e-10);
}

TEST_CASE("inner screen demands holomorphy on the closed disk") {
    const Circle c{Complex{0.5, 0.0}, 0.1};
    CHECK_THROWS_AS(inner_screen(parse_density("1/(z-0.5)"), c), PreconditionError);
    // pole just outside the disk but inside the guard margin
    CHECK_THROWS_AS(inner_screen(parse_density("1/(z-0.6001)"), c), PreconditionError);
}

TEST_CASE("screened point scenario is exact at every truncation") {
    for (int m : {1, 3}) {
        CAPTURE(m);
        const MeasureSpec nu = screened_point_scenario(default_screen_disks(m));

        // outside the closed unit disk
        const VerificationReport outside = verify_vanishing(
            nu, Annulus{Complex{0.0, 0.0}, 1.1, 3.0}, std::nullopt, 1e-9, 200, 1024);
        CHECK(outside.pass);

        // inside each screen disk
        for (const Circle& d : default_screen_disks(m)) {
            const VerificationReport in_disk = verify_vanishing(
                nu, DiskRegion{d.center, 0.5 * d.radius}, std::nullopt, 1e-9, 64, 1024);
            CHECK(in_disk.pass);
        }

        // elsewhere the field equals delta0_hat = -1/z
        CHECK(std::abs(transform(nu, I / 2.0, 1024) - 2.0 * I) < 1e-9);
    }
}

TEST_CASE("screened point scenario respects the stated variation bound") {
    const int m = 3;
    const auto disks = default_screen_disks(m);
    const MeasureSpec nu = screened_point_scenario(disks);
    double bound = 1.0 + 1.0; // atom + outer screen
    for (const Circle& d : disks) bound += d.radius / (std::abs(d.center) - d.radius);
    CHECK(total_variation(nu, 1024) <= bound + 1e-9);
}

TEST_CASE("screened point scenario rejects bad disk layouts") {
    CHECK_THROWS_AS(screened_point_scenario({Circle{Complex{0.0, 0.0}, 0.1}}),
                    PreconditionError); // contains the point mass
    CHECK_THROWS_AS(screened_point_scenario({Circle{Complex{0.95, 0.0}, 0.1}}),
                    PreconditionError); // sticks out of the unit disk
    CHECK_THROWS_AS(screened_point_scenario({Circle{Complex{0.3, -0.3}, 0.1},
                                             Circle{Complex{0.35, -0.3}, 0.1}}),
                    PreconditionError); // overlapping closures
}

TEST_CASE("screen plans build the same components as the direct calls") {
    const auto nuK = atom_measure("nuK", Complex{0.5, 0.0}, Complex{1.0, 0.0});
    ScreenPlan outer_plan;
    outer_plan.side = ScreenSide::kill_exterior;
    outer_plan.source_measure = nuK;
    outer_plan.screens = {unit_circle()};
    MeasureSpec viaplan;
    viaplan.name = "viaplan";
    viaplan.components = nuK->components;
    for (auto& c : outer_plan.build()) viaplan.components.push_back(std::move(c));
    const MeasureSpec direct = screened_scenario(nuK);
    for (const Complex z : {Complex{2.0, 0.0}, Complex{0.2, 0.3}})
        CHECK(std::abs(transform(viaplan, z) - transform(direct, z)) < 1e-15);

    ScreenPlan inner_plan;
    inner_plan.side = ScreenSide::kill_interior;
    inner_plan.source_function = Expr::moebius(Complex{0.0, 0.0});
    inner_plan.screens = {Circle{Complex{0.5, 0.0}, 0.1}, Circle{Complex{-0.5, 0.0}, 0.1}};
    CHECK(inner_plan.build().size() == 2);

    ScreenPlan bad = inner_plan;
    bad.screens = {Circle{Complex{0.0, 0.0}, 0.1}}; // pole of the source inside
    CHECK_THROWS_AS(bad.build(), PreconditionError);
    ScreenPlan missing;
    missing.screens = {unit_circle()};
    CHECK_THROWS_AS(missing.build(), PreconditionError);
}

TEST_CASE("domain indicator measure: disjoint disks") {
    const std::vector<CircularDomain> domains = {
        CircularDomain{Circle{Complex{-3.0, 0.0}, 1.0}},
        CircularDomain{Circle{Complex{3.0, 0.0}, 1.0}}};
    const MeasureSpec mu = domain_indicator_measure(domains);
    CHECK(std::abs(transform(mu, Complex{-3.0, 0.0}) - 1.0) < 1e-10);
    CHECK(std::abs(transform(mu, Complex{3.0, 0.0}) - 1.0) < 1e-10);
    CHECK(std::abs(transform(mu, Complex{0.0, 0.0})) < 1e-10);
    CHECK(total_variation(mu) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("domain indicator measure: hole cancels the field") {
    const CircularDomain annulus{Circle{Complex{0.0, 0.0}, 1.0},
                                 {Circle{Complex{0.0, 0.0}, 0.3}}};
    const MeasureSpec mu = domain_indicator_measure({annulus});
    CHECK(std::abs(transform(mu, Complex{0.0, 0.0})) < 1e-12);        // hole center
    CHECK(std::abs(transform(mu, Complex{0.6, 0.0}) - 1.0) < 1e-12);  // in the domain
    CHECK(std::abs(transform(mu, Complex{2.0, 0.0})) < 1e-12);        // outside
    CHECK(total_variation(mu) == doctest::Approx(1.3).epsilon(1e-12));
}

TEST_CASE("domain indicator measure: degenerate inputs") {
    const MeasureSpec zero = domain_indicator_measure({});
    CHECK(zero.components.empty());
    CHECK(total_variation(zero) == 0.0);

    const std::vector<CircularDomain> overlapping = {
        CircularDomain{Circle{Complex{0.0, 0.0}, 1.0}},
        CircularDomain{Circle{Complex{1.5, 0.0}, 1.0}}};
    CHECK_THROWS_AS(domain_indicator_measure(overlapping), PreconditionError);
}
