#include "facilidyn/localform.hpp"
#include "facilidyn/model.hpp"
#include "facilidyn/regions.hpp"
#include "facilidyn/simulate.hpp"

#include <doctest.h>

#include <cmath>

using namespace facilidyn;

namespace {

const Equilibrium* find(const std::vector<Equilibrium>& eqs, Role r) {
    for (const auto& e : eqs)
        if (e.role == r) return &e;
    return nullptr;
}

} // namespace

TEST_CASE("axes are invariant") {
    const Params p{0.5, 1.0, 0.62, 14.3};
    const Orbit prey = integrate(p, {0.3, 0.0}, 50.0);
    for (const auto& s : prey.states) CHECK(s.y == 0.0);
    CHECK(prey.states.back().x == doctest::Approx(p.k).epsilon(1e-6));
    const Orbit pred = integrate(p, {0.0, 0.4}, 50.0);
    for (const auto& s : pred.states) CHECK(s.x == 0.0);
    CHECK(pred.states.back().y < 0.4);
}

TEST_CASE("backward integration retraces a forward orbit") {
    const Params p{0.5, 5.5, 1.0, 0.1};
    const State s0{2.0, 1.0};
    const Orbit fw = integrate(p, s0, 3.0, 1e-12, 1e-14);
    IntegrateOptions opt;
    opt.rtol = 1e-12;
    opt.atol = 1e-14;
    opt.backward = true;
    const Orbit bw = integrate(p, fw.states.back(), 3.0, opt);
    CHECK(bw.states.back().x == doctest::Approx(s0.x).epsilon(1e-8));
    CHECK(bw.states.back().y == doctest::Approx(s0.y).epsilon(1e-8));
}

TEST_CASE("orbits converge to the expected attractor") {
    {
        const Params p{0.5, 1.0, 0.62, 14.3};
        const auto eqs = equilibria(p);
        const Equilibrium* e1 = find(eqs, Role::E1);
        REQUIRE(e1);
        Orbit o = integrate(p, {e1->x * 1.01, e1->y}, 2000.0);
        o.classification = classify_orbit(o, eqs);
        CHECK(o.classification.kind == OrbitClass::ConvergedTo);
        CHECK(o.classification.name() == "ConvergedTo(E1)");
    }
    {
        const Params p{0.5, 1.0, 0.62, 14.2};
        const auto eqs = equilibria(p);
        Orbit o = integrate(p, {0.5, 0.5}, 2000.0);
        o.classification = classify_orbit(o, eqs);
        REQUIRE(o.classification.role);
        CHECK(*o.classification.role == Role::Ek);
    }
}

TEST_CASE("Hausdorff distance basics") {
    const std::vector<State> a{{0, 0}, {1, 0}, {1, 1}};
    std::vector<State> b = a;
    CHECK(hausdorff(a, b) == 0.0);
    for (auto& s : b) s.y += 0.25;
    CHECK(hausdorff(a, b) == doctest::Approx(0.25));
    CHECK(hausdorff(a, b) == doctest::Approx(hausdorff(b, a)));
    const std::vector<State> seg{{0, 0}, {2, 0}};
    const std::vector<State> mid{{1, 0}};
    CHECK(hausdorff(mid, seg) == doctest::Approx(1.0));
    CHECK(hausdorff(seg, {{0, 0}, {1, 0}, {2, 0}}, true) == doctest::Approx(0.0));
}

TEST_CASE("cycle quartet at h=0.5, k=1, sigma=0.62") {
    CHECK_FALSE(find_limit_cycle({0.5, 1.0, 0.62, 14.3}));
    const auto c = find_limit_cycle({0.5, 1.0, 0.62, 14.42});
    REQUIRE(c);
    CHECK(c->stability == Stability::Stable);
    CHECK(std::abs(c->multiplier) < 1.0);
    CHECK(c->residual < 1e-8);
    CHECK_FALSE(find_limit_cycle({0.5, 1.0, 0.62, 14.55}));
}

TEST_CASE("stable cycle at h=0.5, k=5.5, sigma=1, alpha=0.1") {
    const Params p{0.5, 5.5, 1.0, 0.1};
    const auto c = find_limit_cycle(p);
    REQUIRE(c);
    CHECK(c->stability == Stability::Stable);
    CHECK(c->period > 0.0);
    // The cycle is a closed orbit: one period returns to the start.
    const State s0 = c->section.point(c->section_s);
    const auto pts = sample_trajectory(p, s0, 0.0, c->period, 2);
    CHECK(std::hypot(pts.back().x - s0.x, pts.back().y - s0.y) < 1e-6);
    for (const auto& s : c->points) {
        CHECK(s.x > 0.0);
        CHECK(s.y > 0.0);
    }
}

TEST_CASE("homoclinic value lies between the Hopf value and the disappearance of the cycle") {
    const double a2 = alpha2_of(0.5, 1.0, 0.62);
    const auto hr = find_homoclinic(0.5, 1.0, 0.62, a2 + 1e-3, 14.55);
    REQUIRE(hr);
    CHECK(hr->alpha > a2);
    CHECK(hr->alpha < 14.55);
    CHECK(hr->hi - hr->lo <= 1e-6 * hr->lo);
    CHECK(find_limit_cycle({0.5, 1.0, 0.62, hr->alpha - 1e-3}));
    CHECK_FALSE(find_limit_cycle({0.5, 1.0, 0.62, hr->alpha + 1e-3}));
}

TEST_CASE("sweep is independent of the thread count") {
    SweepGrid g;
    g.n_sigma = 2;
    g.sigma_min = 0.55;
    g.sigma_max = 0.65;
    g.n_alpha = 4;
    g.alpha_min = 14.0;
    g.alpha_max = 15.0;
    const auto a = sweep(g, {}, 1);
    const auto b = sweep(g, {}, 3);
    REQUIRE(a.size() == 8);
    REQUIRE(b.size() == 8);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].params.sigma == b[i].params.sigma);
        CHECK(a[i].params.alpha == b[i].params.alpha);
        CHECK(a[i].census.label.name() == b[i].census.label.name());
        CHECK(a[i].has_cycle == b[i].has_cycle);
        CHECK(a[i].observed == b[i].observed);
    }
}

TEST_CASE("observed region from census and cycle") {
    CHECK(observed_region(verify_census({0.5, 1.0, 0.62, 14.2}), false) == PortraitRegion::R1);
    CHECK(observed_region(verify_census({0.5, 1.0, 0.62, 14.3}), false) == PortraitRegion::R2);
    CHECK(observed_region(verify_census({0.5, 1.0, 0.62, 14.42}), true) == PortraitRegion::R3);
    CHECK(observed_region(verify_census({0.5, 1.0, 0.62, 14.55}), false) == PortraitRegion::R4);
}

TEST_CASE("second-order homoclinic prediction converges to the computed homoclinic near the cusp") {
    const double h = 0.5, k = 1.0;
    const BTCusp c = bt_cusp(h, k);
    const MuCoefficients mu = bt_mu(h, k);
    double prev_gap = 1.0;
    for (double e : {0.02, 0.01, 0.005}) {
        const double s = c.sigma2 + e;
        const double a2 = alpha2_of(h, k, s), a3 = alpha3_of(mu, c.alpha_star, c.sigma2, s);
        const auto hr = find_homoclinic(h, k, s, a2 * (1 + 1e-6), a3 + 3 * (a3 - a2));
        REQUIRE(hr);
        const double gap = std::abs((hr->alpha - a2) / (a3 - a2) - 1.0);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 0.1);
}
