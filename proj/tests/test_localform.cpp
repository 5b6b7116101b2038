#include "facilidyn/localform.hpp"
#include "facilidyn/model.hpp"
#include "facilidyn/reference_forms.hpp"
#include "facilidyn/regions.hpp"
#include "facilidyn/simulate.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace facilidyn;

namespace {

const Equilibrium* find(const std::vector<Equilibrium>& eqs, Role r) {
    for (const auto& e : eqs)
        if (e.role == r) return &e;
    return nullptr;
}

// Transcribed trace expression at E_i before the pseudo-remainder reduction.
double trace_tilde(double h, double k, double s, double a, double x) {
    return s * x *
           (a * s * (h + 1) * x * x * x - a * k * (2 * h * s - h + s + 1) * x * x +
            k * (a * h * k * s - a * h * k + a * k - h - 1) * x + h * k * k) /
           k;
}

// Transcribed coefficients of the shifted Hopf polynomial about sigma2.
std::array<double, 5> transcribed_ltilde(double h, double k) {
    const double s2 = sigma2_of(h, k), m = h - 1, w = h * h * k - h * k + h + 1;
    const double A = h * m * (h * h - h + 2) * k + (h + 1) * (h * h - h + 4), B = h * m * m * k + (h + 1) * (h - 2);
    const double L4 = h * A * B;
    const double L3 = 4 * h * A * B * s2 +
                      m * (3 * std::pow(h, 3) * std::pow(m, 4) * k * k * k -
                           h * h * (h - 3) * (4 * h * h - 3 * h - 5) * m * m * k * k -
                           h * m * (h + 1) * (8 * std::pow(h, 3) - 25 * h * h + 20 * h + 17) * k -
                           (4 * std::pow(h, 3) - 13 * h * h + 16 * h - 3) * std::pow(h + 1, 2));
    const double L2 = m * w * w *
                      ((3 * h * m * (2 * h * h + h + 1) * k + 3 * (2 * h + 3) * std::pow(h + 1, 2)) * s2 +
                       m * m * ((6 * h * h - 3 * h + 8) * k + 6 * h - 3));
    const double L1 = -m * m * std::pow(w, 3) *
                      ((h * (4 * h * h + 5 * h - 1) * m * m * k * k + m * (16 * std::pow(h, 3) + 44 * h * h + 17 * h - 5) * k +
                        3 * (4 * h + 5) * std::pow(h + 1, 2)) *
                           s2 +
                       k * m * m * (h * std::pow(m, 3) * k * k + m * (10 * h * h + h - 5) * k + 9 * h * h + 2 * h - 1));
    const double L0 = std::pow(m, 3) * std::pow(w, 4) *
                      ((2 * std::pow(h, 3) * std::pow(m, 3) * k * k * k + (13 * std::pow(h, 3) + 15 * h * h - 3 * h + 1) * m * m * k * k +
                        2 * (10 * h + 1) * m * std::pow(h + 1, 2) * k + 9 * std::pow(h + 1, 3)) *
                           s2 +
                       k * m * m * (m * (3 * h * h - 2 * h + 1) * k + 3 * std::pow(h + 1, 2)) * (h * k - k + 1));
    return {L0, L1, L2, L3, L4};
}

} // namespace

TEST_CASE("center manifold of a known system") {
    // u' = -u^2, v' = -v + u^2 has v = u^2 + 2u^3 + O(u^4).
    const int ord = 4;
    const Series u = Series::variable(0, ord), v = Series::variable(1, ord);
    const CenterManifold cm = center_manifold(-1.0 * (u * u), -1.0 * v + u * u, 3);
    CHECK(cm.manifold.coeff(2, 0, 0) == doctest::Approx(1.0));
    CHECK(cm.manifold.coeff(3, 0, 0) == doctest::Approx(2.0));
    CHECK(cm.reduced.coeff(2, 0, 0) == doctest::Approx(-1.0));
}

TEST_CASE("Ek reduction: closed forms and classification") {
    const double h = 0.5, s = 0.7, a = 3.0;
    const CenterManifoldReduction r = ek_reduction(h, s, a);
    CHECK(r.classification == Bifurcation::Transcritical);
    CHECK(r.coeffs.at("b") == doctest::Approx((s - 1) * (h - 1) * (h - 1) / s));
    CHECK(std::abs(r.coeffs.at("c")) < 1e-12);
    CHECK(r.coeffs.at("a") == doctest::Approx((a * s * s - a * s + h * s - h + 1) * (h - 1) / s));
    CHECK(ek_reduction(h, s, (1 - h) / s).classification == Bifurcation::Pitchfork);
    CHECK(std::abs(ek_reduction(h, s, (1 - h) / s).quadratic) < 1e-12);
    CHECK(ek_reduction(h, s, (1 - h) / s).cubic != 0.0);
}

TEST_CASE("Ek reduction predicts the bifurcating equilibrium") {
    for (auto [h, s, a] : std::vector<std::array<double, 3>>{{0.5, 0.7, 3.0}, {0.3, 1.5, 0.2}, {0.7, 0.4, 5.0}}) {
        const CenterManifoldReduction r = ek_reduction(h, s, a);
        for (double eps : {1e-5, -1e-5}) {
            const double k = k1_of(h) + eps;
            // Interior equilibrium closest to Ek.
            const Equilibrium* best = nullptr;
            const auto eqs = equilibria({h, k, s, a});
            for (const auto& e : eqs)
                if ((e.role == Role::E1 || e.role == Role::E2) && (!best || e.y < best->y)) best = &e;
            const double ustar = -r.linear_eps * eps / r.quadratic;
            if (-s * ustar <= 0.0) continue;  // the branch lies outside the quadrant
            REQUIRE(best);
            CHECK(best->y == doctest::Approx(-s * ustar).epsilon(1e-3));
            // The equilibrium lies on the manifold v = a u^2 + b u eps.
            const double u = -best->y / s;
            const double v = best->x - u - k;
            const double pred = r.coeffs.at("a") * u * u + r.coeffs.at("b") * u * eps;
            CHECK(std::abs(v - pred) <= 1e-3 * std::abs(v));
        }
    }
}

TEST_CASE("saddle-node reduction at E*") {
    const CenterManifoldReduction hi = estar_sn_reduction(0.5, 1.0, 0.62);
    const CenterManifoldReduction lo = estar_sn_reduction(0.5, 1.0, 0.4);
    CHECK(hi.classification == Bifurcation::SaddleNode);
    CHECK(hi.quadratic > 0.0);
    CHECK(lo.quadratic < 0.0);
    REQUIRE(hi.zeta_prime);
    REQUIRE(lo.zeta_prime);
    CHECK(*hi.zeta_prime < 0.0);
    CHECK(*lo.zeta_prime < 0.0);
    CHECK_THROWS(estar_sn_reduction(0.5, 1.0, sigma2_of(0.5, 1.0)));
}

TEST_CASE("saddle-node reduction predicts the equilibrium split") {
    for (double s : {0.62, 0.4, 0.9}) {
        const double h = 0.5, k = 1.0;
        const CenterManifoldReduction r = estar_sn_reduction(h, k, s);
        const double a1 = alpha1_of(h, k, s);
        const double eps = 1e-11 * a1;
        const auto eqs = equilibria({h, k, s, a1 + eps});
        const Equilibrium* e1 = find(eqs, Role::E1);
        const Equilibrium* e2 = find(eqs, Role::E2);
        REQUIRE(e1);
        REQUIRE(e2);
        // u^2 quadratic + eps linear_eps = 0 on the manifold, and x = u + O(u^2, eps).
        const double split = 2.0 * std::sqrt(-r.linear_eps * eps / r.quadratic);
        CHECK(std::abs(e2->x - e1->x) == doctest::Approx(split).epsilon(1e-3));
    }
}

TEST_CASE("trace sign at E* on the alpha1 surface") {
    CHECK(sign_trace_estar(0.5, 1.0, 0.5) == 1);
    CHECK(sign_trace_estar(0.5, 1.0, 0.6) == -1);
    CHECK(sign_trace_estar(0.5, 1.0, sigma2_of(0.5, 1.0)) == 0);
    const double s = 0.6, a1 = alpha1_of(0.5, 1.0, s);
    const Mat2 J = jacobian({0.5, 1.0, s, a1}, {x_star_of(1.0, s, a1), nullcline_y({0.5, 1.0, s, a1}, x_star_of(1.0, s, a1))});
    CHECK(trace_estar(0.5, 1.0, s) == doctest::Approx(J[0][0] + J[1][1]).epsilon(1e-8));
}

TEST_CASE("Hopf data at h=0.5, k=1, sigma=0.62") {
    const HopfData hd = hopf(0.5, 1.0, 0.62);
    CHECK(hd.focal_sign == -1);
    CHECK(hd.G_value < 0.0);
    CHECK(hd.lyapunov < 0.0);
    CHECK(hd.transversality > 0.0);
    const Mat2 J = jacobian({0.5, 1.0, 0.62, hd.alpha2}, {hd.x1, hd.y1});
    CHECK(std::abs(J[0][0] + J[1][1]) < 1e-12);
    CHECK(hd.beta == doctest::Approx(std::sqrt(J[0][0] * J[1][1] - J[0][1] * J[1][0])).epsilon(1e-8));
    CHECK_THROWS(hopf(0.5, 1.0, 0.5));
}

TEST_CASE("Hopf transversality equals the alpha-derivative of the unreduced trace") {
    for (auto [h, k, s] : std::vector<std::array<double, 3>>{{0.5, 1.0, 0.62}, {0.5, 3.0, 1.0}, {0.3, 1.0, 0.9}}) {
        REQUIRE(in_hopf_scope(h, k, s));
        const HopfData hd = hopf(h, k, s);
        const double da = 1e-5 * hd.alpha2;
        const double num = (trace_tilde(h, k, s, hd.alpha2 + da, hd.x1) - trace_tilde(h, k, s, hd.alpha2 - da, hd.x1)) / (2 * da);
        CHECK(hd.transversality == doctest::Approx(num).epsilon(1e-6));
        CHECK(hopf_transversality(h, k, s) == doctest::Approx(num).epsilon(1e-6));
        CHECK(std::abs(trace_tilde(h, k, s, hd.alpha2, hd.x1)) < 1e-10);
    }
}

TEST_CASE("focal sign: closed-form polynomial and series route agree") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> H(0.05, 0.95), U(0.0, 1.0);
    int tested = 0;
    while (tested < 100) {
        const double h = H(rng);
        double k, s;
        if (U(rng) < 0.5) {
            k = k1_of(h) + U(rng) * (k2_of(h) - k1_of(h));
            s = 0.1 + 5.0 * U(rng);
        } else {
            k = (0.05 + 0.9 * U(rng)) * k1_of(h);
            s = sigma2_of(h, k) * (1.0 + 0.01 + U(rng));
        }
        if (!in_hopf_scope(h, k, s)) continue;
        ++tested;
        const HopfData hd = hopf(h, k, s);
        CHECK(hd.G_value < 0.0);
        CHECK(hd.focal_sign == -1);
        CHECK(hd.lyapunov < 0.0);
        CHECK(hd.transversality > 0.0);
        if (k >= k1_of(h))
            for (double L : hd.L) CHECK(L < 0.0);
    }
}

TEST_CASE("shifted Hopf coefficients against the transcribed forms") {
    for (double h : {0.2, 0.5, 0.8})
        for (double frac : {0.2, 0.6, 0.95}) {
            const double k = frac * k1_of(h);
            const HopfData hd = hopf(h, k, sigma2_of(h, k) * 1.1);
            REQUIRE(hd.Ltilde);
            const auto P = transcribed_ltilde(h, k);
            // The last two transcribed forms were pseudo-reduced by the sigma2 quadratic, scaling by its leading coefficient.
            const double m = h - 1.0;
            const double lc = -h * m * m * k - h * h + h + 2.0;
            const auto& L = *hd.Ltilde;
            CHECK(L[4] == doctest::Approx(P[4]).epsilon(1e-9));
            CHECK(L[3] == doctest::Approx(P[3]).epsilon(1e-9));
            CHECK(L[2] == doctest::Approx(P[2]).epsilon(1e-9));
            CHECK(L[1] * lc == doctest::Approx(P[1]).epsilon(1e-9));
            CHECK(L[0] * lc * lc == doctest::Approx(P[0]).epsilon(1e-9));
            for (double v : L) CHECK(v < 0.0);
        }
}

TEST_CASE("first Lyapunov coefficient of a radial cubic") {
    const int ord = 3;
    const Series u = Series::variable(0, ord), v = Series::variable(1, ord);
    const Series r2 = u * u + v * v;
    for (double c : {-2.0, 0.5}) CHECK(first_lyapunov(c * (u * r2), c * (v * r2)) == doctest::Approx(c));
}

TEST_CASE("amplitude law near a supercritical Hopf point without a homoclinic") {
    const double h = 0.5, k = 3.0, s = 1.0;
    const double a2 = alpha2_of(h, k, s);
    std::vector<double> x, y;
    for (double d : {1e-3, 4e-3, 1.6e-2}) {
        const auto c = find_limit_cycle({h, k, s, a2 * (1 + d)});
        REQUIRE(c);
        CHECK(c->stability == Stability::Stable);
        x.push_back(a2 * d);
        y.push_back(c->amplitude * c->amplitude);
    }
    const double mx = (x[0] + x[1] + x[2]) / 3, my = (y[0] + y[1] + y[2]) / 3;
    double sxy = 0, sxx = 0, syy = 0;
    for (int i = 0; i < 3; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    CHECK(sxy * sxy / (sxx * syy) > 0.99);
    CHECK_FALSE(find_limit_cycle({h, k, s, a2 * (1 - 1e-2)}));
}

TEST_CASE("cusp normal form at h=0.5, k=1") {
    const BTCusp c = bt_cusp(0.5, 1.0);
    CHECK(c.sigma2 == doctest::Approx(0.5532).epsilon(1e-4));
    CHECK(c.alpha_star == doctest::Approx(15.94).epsilon(1e-3));
    CHECK(c.cusp_B20 < 0.0);
    CHECK(c.cusp_2A20_B11 > 0.0);
    CHECK(c.normalized[0] == doctest::Approx(1.0));
    CHECK(c.normalized[1] == doctest::Approx(-1.0));
    CHECK(std::abs(c.normalized[2]) < 1e-8);
    CHECK(c.residual < 1e-8);
    const Mat2 J = jacobian({0.5, 1.0, c.sigma2, c.alpha_star}, {c.x_star, c.y_star});
    CHECK(std::abs(J[0][0] + J[1][1]) < 1e-10);
    CHECK(std::abs(J[0][0] * J[1][1] - J[0][1] * J[1][0]) < 1e-10);
}

TEST_CASE("unfolding vanishes at the cusp and is nondegenerate") {
    const auto [b1, b2] = bt_unfolding(0.5, 1.0, 0.0, 0.0);
    CHECK(std::abs(b1) <= 1e-8);
    CHECK(std::abs(b2) <= 1e-8);
    const MuCoefficients mu = bt_mu(0.5, 1.0);
    CHECK(std::abs(mu.det_beta) > 1e-6);
    CHECK(std::abs(mu.det_normalized) > 1e-6);
    // beta1 = B^4 mu1 / A^3, so its sigma-derivative at the cusp is fixed by mu101.
    const double e = 1e-5 * sigma2_of(0.5, 1.0);
    const double fd = (bt_unfolding(0.5, 1.0, 0.0, e).first - bt_unfolding(0.5, 1.0, 0.0, -e).first) / (2 * e);
    CHECK(fd == doctest::Approx(std::pow(mu.B0, 4) / std::pow(mu.A0, 3) * mu.mu101).epsilon(1e-6));
    const auto ref = reference::bt_mu_terms(0.5, 1.0, sigma2_of(0.5, 1.0));
    CHECK(fd * std::pow(mu.B0, 4) / std::pow(mu.A0, 3) * ref.at("mu101") > 0.0);
}

TEST_CASE("curve slopes at the cusp agree with the saddle-node closed form") {
    const double h = 0.5, k = 1.0;
    const BTCusp c = bt_cusp(h, k);
    const MuCoefficients mu = bt_mu(h, k);
    // alpha1 is proportional to 1/sigma, so its expansion about sigma2 is known exactly.
    CHECK(mu.c1 == doctest::Approx(-c.alpha_star / c.sigma2).epsilon(1e-6));
    CHECK(mu.c2_sn == doctest::Approx(c.alpha_star / (c.sigma2 * c.sigma2)).epsilon(1e-3));
    // Hopf curve from the unfolding against alpha2 to second order.
    const double e2 = 1e-3;
    const double pred = c.alpha_star + mu.c1 * e2 + mu.c2_hopf * e2 * e2;
    CHECK(std::abs(pred - alpha2_of(h, k, c.sigma2 + e2)) < 50 * e2 * e2 * e2 * std::abs(mu.c2_hopf) + 1e-9);
}

TEST_CASE("curves meet at the cusp and order above it") {
    const BTData d = bt_curves(0.5, 1.0, 0.5, 0.7, 41);
    REQUIRE(d.curves.size() == 41);
    for (const auto& cs : d.curves) {
        if (cs.sigma < d.cusp.sigma2) {
            CHECK_FALSE(cs.alpha_h);
            CHECK_FALSE(cs.alpha_hl);
        } else if (cs.alpha_h && cs.alpha_hl) {
            CHECK(cs.alpha_sn < *cs.alpha_h);
            CHECK(*cs.alpha_h < *cs.alpha_hl);
        }
    }
    const CurveSample at = d.curves.front();
    CHECK(at.alpha_sn == doctest::Approx(alpha1_of(0.5, 1.0, 0.5)));
    CHECK_THROWS(bt_curves(0.5, 1.0, 0.7, 0.5, 10));
    const MuCoefficients mu = bt_mu(0.5, 1.0);
    const double a3 = alpha3_of(mu, d.cusp.alpha_star, d.cusp.sigma2, 0.62);
    CHECK(a3 > alpha2_of(0.5, 1.0, 0.62));
    for (const auto& cs : d.curves)
        if (cs.alpha_hl) CHECK(*cs.alpha_hl == doctest::Approx(alpha3_of(mu, d.cusp.alpha_star, d.cusp.sigma2, cs.sigma)));
}

TEST_CASE("saddle-node terms against the transcribed closed forms") {
    const double h = 0.5, k = 1.0, s = 0.62;
    const CenterManifoldReduction r = estar_sn_reduction(h, k, s);
    const auto ref = reference::sn_taylor_terms(h, k, s, r.coeffs.at("alpha1"), r.coeffs.at("x_star"));
    for (const auto& [name, want] : ref) {
        const double got = r.coeffs.count(name) ? r.coeffs.at(name) : 0.0;
        CHECK_MESSAGE(std::abs(got - want) <= 1e-6 * std::max(std::abs(want), 1e-12), name);
    }
    const auto c = reference::sn_reduced_terms(ref);
    CHECK(r.coeffs.at("c20") == doctest::Approx(c[0]).epsilon(1e-6));
    CHECK(r.coeffs.at("c11") == doctest::Approx(c[1]).epsilon(1e-6));
    CHECK(r.coeffs.at("c02") == doctest::Approx(c[2]).epsilon(1e-6));
}

TEST_CASE("unfolding derivatives against the transcribed closed forms") {
    const MuCoefficients mu = bt_mu(0.5, 1.0);
    const auto ref = reference::bt_mu_terms(0.5, 1.0, sigma2_of(0.5, 1.0));
    CHECK(mu.mu110 == doctest::Approx(ref.at("mu110")).epsilon(1e-6));
    CHECK(mu.mu101 == doctest::Approx(ref.at("mu101")).epsilon(1e-6));
    CHECK(mu.mu201 == doctest::Approx(ref.at("mu201")).epsilon(1e-6));
}

TEST_CASE("nondegeneracy polynomials keep their sign on (0, k1)") {
    const std::vector<Rat> hs{Rat(1, 10), Rat(1, 2), Rat(9, 10)};
    for (const auto& row : g2_g3_nondegeneracy(hs)) {
        CHECK(row.g2_roots == 0);
        CHECK(row.g3_roots == 0);
        CHECK(row.zeta1_roots == 0);
        CHECK(row.g2_negative);
        CHECK(row.g3_negative);
        CHECK(row.zeta1_positive);
    }
    // Direct sampling of g2 and zeta1 in k at h = 1/2.
    const Poly g2 = g2_poly(Rat(1, 2)), z1 = zeta1_poly(Rat(1, 2));
    for (double k = 0.01; k < 2.0; k += 0.01) {
        CHECK(g2.eval(k) < 0.0);
        CHECK(z1.eval(k) > 0.0);
    }
}
