#include "facilidyn/model.hpp"
#include "facilidyn/regions.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace facilidyn;

namespace {

Params random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> H(0.05, 0.95), K(0.1, 10.0), S(0.1, 5.0), A(0.1, 30.0);
    return {H(rng), K(rng), S(rng), A(rng)};
}

// Transcribed quadratic whose positive root is sigma2.
double f2(double h, double k, double s) {
    const double m = h - 1.0;
    return (-h * m * m * k - h * h + h + 2.0) * s * s + m * (h * h * k - h * k + 3.0 * h + 3.0) * (h * k - k + 1.0) * s +
           k * m * m * m * (h * k - k + 1.0);
}

double bisect(double (*f)(double, double, double), double h, double k, double lo, double hi) {
    double flo = f(h, k, lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(h, k, mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("capacity thresholds at h=0.5") {
    CHECK(k1_of(0.5) == doctest::Approx(2.0));
    CHECK(k2_of(0.5) == doctest::Approx(6.0));
    CHECK(k3_of(0.5) == doctest::Approx(54.0 / 11.0));
}

TEST_CASE("k1 < k3 < k2 on (0, 1)") {
    for (double h = 0.01; h < 1.0; h += 0.01) {
        CHECK(k1_of(h) < k3_of(h));
        CHECK(k3_of(h) < k2_of(h));
    }
}

TEST_CASE("sigma2, alpha1 and alpha2 at h=0.5, k=1") {
    const double s2 = sigma2_of(0.5, 1.0);
    CHECK(s2 == doctest::Approx(0.5532).epsilon(1e-4));
    CHECK(alpha1_of(0.5, 1.0, s2) == doctest::Approx(15.94).epsilon(1e-3));
    CHECK(alpha1_of(0.5, 1.0, s2) == doctest::Approx(alpha2_of(0.5, 1.0, s2)).epsilon(1e-12));
    CHECK(alpha1_of(0.5, 1.0, 0.62) == doctest::Approx(14.22).epsilon(1e-3));
    CHECK(alpha2_of(0.5, 1.0, 0.62) == doctest::Approx(14.34).epsilon(1e-3));
}

TEST_CASE("sigma2 closed form is the root of the transcribed quadratic") {
    for (double h : {0.1, 0.4, 0.7, 0.9})
        for (double frac : {0.1, 0.5, 0.95}) {
            const double k = frac * k1_of(h);
            const double s2 = sigma2_of(h, k);
            const double root = bisect(f2, h, k, 1e-9, 1e3);
            CHECK(s2 == doctest::Approx(root).epsilon(1e-9));
            CHECK(s2 > 1.0 - h - k * (1.0 - h) * (1.0 - h));
        }
}

TEST_CASE("alpha1 gives a double root of F at x*") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> H(0.05, 0.95), F(0.05, 0.95), S(0.1, 5.0);
    for (int i = 0; i < 100; ++i) {
        const double h = H(rng), k = F(rng) * k1_of(h), s = S(rng);
        const double a1 = alpha1_of(h, k, s);
        CHECK(a1 > 1.0 / (s * k));
        CHECK(a1 < (27.0 - 9.0 * k * (1.0 - h)) / (2.0 * k * k * s * (1.0 - h)));
        const Params p{h, k, s, a1};
        const double xs = x_star_of(k, s, a1);
        CHECK(x_star_on_alpha1(h, k, s) == doctest::Approx(xs).epsilon(1e-9));
        CHECK(std::abs(equilibrium_poly_value(p, xs)) <= 1e-9 * k);
        CHECK(std::abs(equilibrium_poly_slope(p, xs)) <= 1e-9 * (1.0 + k));
        // Two interior equilibria just above alpha1, none below.
        CHECK(equilibrium_poly_value({h, k, s, a1 * (1.0 - 1e-6)}, xs) < 0.0);
        CHECK(equilibrium_poly_value({h, k, s, a1 * (1.0 + 1e-6)}, xs) > 0.0);
    }
}

TEST_CASE("vector field vanishes at E0, Ek and near E*") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        const Params p = random_params(rng);
        const Vec2 f0 = vector_field(p, {0.0, 0.0});
        const Vec2 fk = vector_field(p, {p.k, 0.0});
        CHECK(f0[0] == 0.0);
        CHECK(f0[1] == 0.0);
        CHECK(std::abs(fk[0]) <= 1e-12 * p.k);
        CHECK(fk[1] == 0.0);
    }
    const Vec2 f = vector_field({0.5, 1.0, 0.5532, 15.94}, {0.72, 0.11});
    CHECK(std::abs(f[0]) < 1e-2);
    CHECK(std::abs(f[1]) < 1e-2);
}

TEST_CASE("axes are invariant: the normal component vanishes") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(0.0, 10.0);
    for (int i = 0; i < 100; ++i) {
        const Params p = random_params(rng);
        CHECK(vector_field(p, {0.0, U(rng)})[0] == 0.0);
        CHECK(vector_field(p, {U(rng), 0.0})[1] == 0.0);
    }
}

TEST_CASE("orbital field is a positive multiple of the polynomial field") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const Params p = random_params(rng);
        const State s{U(rng) * p.k, U(rng) * 5.0};
        const Vec2 a = vector_field(p, s), b = vector_field_orbital(p, s);
        const double cross = a[0] * b[1] - a[1] * b[0];
        CHECK(std::abs(cross) <= 1e-12 * (std::hypot(a[0], a[1]) * std::hypot(b[0], b[1]) + 1e-300));
        CHECK(a[0] * b[0] + a[1] * b[1] >= 0.0);
        const double mult = p.k * (1.0 + p.h * (1.0 + p.alpha * s.y) * s.x);
        CHECK(a[0] == doctest::Approx(mult * b[0]).epsilon(1e-10));
    }
}

TEST_CASE("jacobian matches central differences") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const Params p = random_params(rng);
        const State s{U(rng) * p.k, U(rng) * 3.0};
        const Mat2 J = jacobian(p, s);
        const double hx = 1e-6 * std::max(1.0, s.x), hy = 1e-6 * std::max(1.0, s.y);
        const Vec2 xp = vector_field(p, {s.x + hx, s.y}), xm = vector_field(p, {s.x - hx, s.y});
        const Vec2 yp = vector_field(p, {s.x, s.y + hy}), ym = vector_field(p, {s.x, s.y - hy});
        double scale = 0.0;
        for (const auto& row : J)
            for (double v : row) scale = std::max(scale, std::abs(v));
        for (int r = 0; r < 2; ++r) {
            CHECK(std::abs(J[r][0] - (xp[r] - xm[r]) / (2 * hx)) <= 1e-6 * scale);
            CHECK(std::abs(J[r][1] - (yp[r] - ym[r]) / (2 * hy)) <= 1e-6 * scale);
        }
    }
}

TEST_CASE("determinant and trace at E0 and Ek") {
    const Params p{0.4, 3.0, 0.8, 2.0};
    const Mat2 J0 = jacobian(p, {0, 0});
    CHECK(J0[0][0] * J0[1][1] - J0[0][1] * J0[1][0] == doctest::Approx(-p.sigma * p.k * p.k));
    const Mat2 Jk = jacobian(p, {p.k, 0});
    const double h = p.h, k = p.k, s = p.sigma;
    CHECK(Jk[0][0] * Jk[1][1] - Jk[0][1] * Jk[1][0] ==
          doctest::Approx(k * k * s * (h * k + 1) * (h * k - k + 1)));
    CHECK(Jk[0][0] + Jk[1][1] == doctest::Approx(-k * ((s + 1) * (h * k + 1) - k)));
}

TEST_CASE("F is increasing before x* and decreasing after") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        const Params p = random_params(rng);
        const double xs = x_star_of(p.k, p.sigma, p.alpha);
        CHECK(equilibrium_poly_value(p, 0.0) == doctest::Approx(-p.k));
        CHECK(equilibrium_poly_slope(p, 0.5 * xs) > 0.0);
        CHECK(equilibrium_poly_slope(p, 1.5 * xs) < 0.0);
    }
}

TEST_CASE("equilibrium polynomial root counts on known parameters") {
    auto interior = [](const Params& p) {
        int n = 0;
        for (const auto& e : equilibria(p))
            if (e.role == Role::E1 || e.role == Role::E2 || e.role == Role::Estar) ++n;
        return n;
    };
    CHECK(interior({0.5, 5.5, 1.0, 0.1}) == 1);
    CHECK(interior({0.5, 1.0, 0.62, 14.3}) == 2);
}

TEST_CASE("trace sign along E1 and x0") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 50; ++i) {
        const Params p = random_params(rng);
        const double h = p.h, k = p.k, s = p.sigma;
        CHECK((-h * h * k + 2 * h * k - h * s - k - s) / (1 - h) < 0.0);
        if (k >= k1_of(h)) CHECK(x0_of(h, k, s) < k);
    }
}

TEST_CASE("closed-form trace and determinant") {
    const Params p{0.5, 1.0, 0.62, 14.3};
    const auto eqs = equilibria(p);
    for (const auto& e : eqs) {
        if (e.role != Role::E2) continue;
        CHECK(trace_det_closed_form(p, e.x).det < 0.0);
    }
    const double a1 = alpha1_of(0.5, 1.0, 0.62);
    const Params q{0.5, 1.0, 0.62, a1};
    CHECK(std::abs(trace_det_closed_form(q, x_star_of(1.0, 0.62, a1)).det) < 1e-9);
    CHECK_THROWS(trace_det_closed_form(p, 0.1));
}

TEST_CASE("nullcline") {
    const Params p{0.5, 2.0, 0.8, 1.0};
    CHECK(nullcline_y(p, 1.0) == doctest::Approx(0.8 * 2.0 / 4.0));
    CHECK_THROWS(nullcline_y(p, 2.5));
    CHECK(nullcline_y({0.5, 1.0, 0.5532, 1.0}, 0.7192) == doctest::Approx(0.112).epsilon(1e-2));
}

TEST_CASE("sigma1 comes from the exact cubic") {
    const double s1 = sigma1_of(0.5, 2.5);
    const Poly f = sigma1_poly(0.5, 2.5);
    CHECK(f.eval(s1 * 0.999) * f.eval(s1 * 1.001) < 0.0);
    int changes = 0;
    double prev = f.eval(1e-6);
    for (double s = 1e-3; s < 1e3; s *= 1.01) {
        const double v = f.eval(s);
        if ((v < 0) != (prev < 0)) ++changes;
        prev = v;
    }
    CHECK(changes == 1);
}

TEST_CASE("thresholds report fields by validity window") {
    const Thresholds a = thresholds(0.5, 1.0, 0.62);
    CHECK(a.alpha1.has_value());
    CHECK(a.sigma2.has_value());
    CHECK_FALSE(a.sigma1.has_value());
    const Thresholds b = thresholds(0.5, 3.0, 1.0);
    CHECK(b.sigma1.has_value());
    CHECK_FALSE(b.sigma2.has_value());
    CHECK_THROWS_AS(thresholds(1.2, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("params validation and JSON") {
    CHECK_THROWS_AS((Params{0.5, -1.0, 1.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Params{0.5, 1.0, NAN, 1.0}.validate()), std::invalid_argument);
    const Params p{0.5, 1.0, 0.62, 14.42};
    const Params r = Params::from_json(nlohmann::json::parse(p.to_json().dump()));
    CHECK(r.h == p.h);
    CHECK(r.alpha == p.alpha);
    CHECK(classify(r).name() == classify(p).name());
}

TEST_CASE("dimensional conversion") {
    const Params p = from_dimensional({1.0, 5.5, 1.0, 1.0, 1.0, 1.0, 0.5});
    CHECK(p.h == doctest::Approx(0.5));
    CHECK(p.k == doctest::Approx(5.5));
    CHECK(p.sigma == doctest::Approx(1.0));
    CHECK(p.alpha == doctest::Approx(1.0));
}
