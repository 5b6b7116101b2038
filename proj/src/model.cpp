#include "facilidyn/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace facilidyn {

void Params::validate() const {
    for (double v : {h, k, sigma, alpha})
        if (!std::isfinite(v) || v <= 0.0)
            throw std::invalid_argument("parameters h, k, sigma, alpha must be finite and positive");
}

nlohmann::json Params::to_json() const {
    return {{"h", h}, {"k", k}, {"sigma", sigma}, {"alpha", alpha}};
}

Params Params::from_json(const nlohmann::json& j) {
    return {j.at("h").get<double>(), j.at("k").get<double>(), j.at("sigma").get<double>(),
            j.at("alpha").get<double>()};
}

nlohmann::json Thresholds::to_json() const {
    nlohmann::json j{{"k1", k1}, {"k2", k2}, {"k3", k3}, {"alpha_sk", alpha_sk}, {"tol", tol}};
    auto put = [&](const char* name, const std::optional<double>& v) {
        j[name] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    put("alpha1", alpha1);
    put("alpha2", alpha2);
    put("sigma1", sigma1);
    put("sigma2", sigma2);
    put("x_star", x_star);
    put("x0", x0);
    return j;
}

Vec2 vector_field(const Params& p, const State& s) {
    auto f = field(p.h, p.k, p.sigma, p.alpha, s.x, s.y);
    return {f[0], f[1]};
}

Vec2 vector_field_orbital(const Params& p, const State& s) {
    const double den = p.k * (1.0 + p.h * (1.0 + p.alpha * s.y) * s.x);
    if (!(den > 0.0)) throw std::domain_error("orbital form: nonpositive denominator");
    Vec2 f = vector_field(p, s);
    return {f[0] / den, f[1] / den};
}

Mat2 jacobian(const Params& p, const State& s) {
    const double h = p.h, k = p.k, sg = p.sigma, a = p.alpha, x = s.x, y = s.y;
    const double c = a * y + 1.0;
    Mat2 J;
    J[0][0] = sg * (k - 2.0 * x) * (1.0 + h * c * x) + (h * sg * x * (k - x) - y * k) * c;
    J[0][1] = x * ((h * x * (k - x) * sg - 2.0 * k * y) * a - k);
    J[1][0] = -k * y * (h - 1.0) * c;
    J[1][1] = -k * (x * (h - 1.0) * (2.0 * a * y + 1.0) + 1.0);
    return J;
}

Poly equilibrium_poly(const Params& p) {
    const Rat h(p.h), k(p.k), s(p.sigma), a(p.alpha);
    const Rat one(1);
    return Poly{Rat(-k), Rat(k * (one - h)), Rat(a * s * k * (one - h)), Rat(a * s * (h - one))};
}

double equilibrium_poly_value(const Params& p, double x) {
    const double h = p.h, k = p.k, as = p.alpha * p.sigma;
    return ((as * (h - 1.0) * x + as * k * (1.0 - h)) * x + k * (1.0 - h)) * x - k;
}

double equilibrium_poly_slope(const Params& p, double x) {
    const double as = p.alpha * p.sigma;
    return (1.0 - p.h) * (-3.0 * as * x * x + 2.0 * as * p.k * x + p.k);
}

double nullcline_y(const Params& p, double x) {
    if (!(x > 0.0 && x < p.k)) throw std::domain_error("nullcline_y: x outside (0, k)");
    return p.sigma * x * (p.k - x) / p.k;
}

double k1_of(double h) { return 1.0 / (1.0 - h); }
double k2_of(double h) { return (1.0 + h) / (h * (1.0 - h)); }
double k3_of(double h) {
    return std::pow(h + 1.0, 3) / (h * (1.0 - h) * (h * h + 3.0 * h + 1.0));
}

double alpha1_of(double h, double k, double s) {
    const double hk = h * k - k;
    const double root = std::sqrt((hk + 1.0) * (hk + 9.0));
    return (-(h - 1.0) * (h - 1.0) * k * k + 18.0 * (h - 1.0) * k + 27.0 + (hk + 9.0) * root) /
           (8.0 * s * (1.0 - h) * k * k);
}

double alpha2_of(double h, double k, double s) {
    const double a = k * h * (h - 1.0) + h + 1.0;
    const double b = k * (h - 1.0) * (h - 1.0) + h * s + s;
    const double c = h * s + 1.0 - h;
    const double d = k * (h - 1.0) * (h - 1.0) + h + s - 1.0;
    return a * b * b / (k * k * (1.0 - h) * c * c * d);
}

double sigma2_of(double h, double k) {
    const double hk = h * k - k;
    const double root = std::sqrt((hk + 9.0) * (hk + 1.0));
    const double num = (1.0 - h) * (h * h * k - h * k + 3.0 * h + 3.0) * (hk + 1.0) +
                       (1.0 - h) * (h * h * k - h * k + h + 1.0) * root;
    return num / (2.0 * (h * (-h * h + 2.0 * h - 1.0) * k - h * h + h + 2.0));
}

double x0_of(double h, double k, double s) {
    return k * (h * s - h + 1.0) / (k * (h - 1.0) * (h - 1.0) + s * (h + 1.0));
}

double x_star_of(double k, double s, double a) {
    const double kas = k * a * s;
    return (kas + std::sqrt(kas * (kas + 3.0))) / (3.0 * a * s);
}

double x_star_on_alpha1(double h, double k, double s) {
    const double a1 = alpha1_of(h, k, s);
    return (9.0 - k * (1.0 - h)) / (2.0 * (k * a1 * s + 3.0) * (1.0 - h));
}

Poly sigma1_poly(double h_, double k_) {
    const Rat h(h_), k(k_), one(1);
    const Rat hm = h - one;
    // Numerator of alpha2 * sigma * k - 1; its sigma^3 coefficient is linear in k and vanishes at k3.
    const Rat c3 = h * k * hm * (h * h + 3 * h + one) + (h + one) * (h + one) * (h + one);
    const Rat c2 = k * hm * hm * (h * (3 * h + 2) * hm * k + 3 * h * h + 2 * h + 2);
    const Rat c1 = k * hm * hm * hm * (k * h - k + one) * (h * h * k - h * k - 2 * h + one);
    const Rat c0 = k * hm * hm * hm * hm * (h * k - k + one);
    return Poly{c0, c1, c2, c3};
}

double sigma1_of(double h, double k) {
    const Poly f = sigma1_poly(h, k);
    const Rat bound = root_bound(f);
    auto roots = sturm_isolate(f, {Rat(0), bound}, bound);
    std::vector<RootInterval> positive;
    for (const auto& r : roots)
        if (sgn(r.hi) > 0 && !(r.exact && sgn(r.lo) == 0)) positive.push_back(r);
    if (positive.size() != 1) throw std::domain_error("sigma1: expected a unique positive root");
    RootInterval iv = positive.front();
    // Relative 1e-12: refine until the width is below 1e-13 of the lower end.
    while (!iv.exact) {
        Rat tol = iv.lo * Rat(mpz_class(1), mpz_class("10000000000000"));
        if (sgn(tol) <= 0) tol = Rat(mpz_class(1), mpz_class("10000000000000"));
        if (iv.width() <= tol) break;
        iv = refine_root(f, iv, Rat(iv.width() / 1024));
    }
    return iv.midpoint();
}

Thresholds thresholds(double h, double k, double sigma, std::optional<double> alpha) {
    if (!(h > 0.0 && h < 1.0) || !(k > 0.0) || !(sigma > 0.0))
        throw std::invalid_argument("thresholds require 0 < h < 1 and k, sigma > 0");
    Thresholds t;
    t.k1 = k1_of(h);
    t.k2 = k2_of(h);
    t.k3 = k3_of(h);
    t.alpha_sk = 1.0 / (sigma * k);
    t.x0 = x0_of(h, k, sigma);
    if (k < t.k1) {
        t.alpha1 = alpha1_of(h, k, sigma);
        t.sigma2 = sigma2_of(h, k);
    }
    if (k * h * (h - 1.0) + h + 1.0 > 0.0 && k * (h - 1.0) * (h - 1.0) + h + sigma - 1.0 > 0.0)
        t.alpha2 = alpha2_of(h, k, sigma);
    if (k > t.k1 && k < t.k3) t.sigma1 = sigma1_of(h, k);
    if (alpha) t.x_star = x_star_of(k, sigma, *alpha);
    else if (t.alpha1) t.x_star = x_star_on_alpha1(h, k, sigma);
    return t;
}

TraceDet trace_det_closed_form(const Params& p, double xi) {
    const double h = p.h, k = p.k, s = p.sigma, a = p.alpha;
    if (!(xi > 0.0 && xi < k)) throw std::domain_error("trace_det_closed_form: x outside (0, k)");
    const double as = a * s;
    const double scale =
        std::max({std::abs(as * (h - 1.0)) * xi * xi * xi, std::abs(as * k * (1.0 - h)) * xi * xi,
                  std::abs(k * (1.0 - h)) * xi, k});
    if (std::abs(equilibrium_poly_value(p, xi)) > 1e-6 * scale)
        throw std::domain_error("trace_det_closed_form: x is not a root of F");
    TraceDet td;
    td.trace = ((-h * h * k + 2.0 * h * k - h * s - k - s) * xi + k * (h * s - h + 1.0)) / (1.0 - h);
    td.det = s * (k - xi) * (as * xi * (k - xi) + k) * xi * xi * equilibrium_poly_slope(p, xi) / k;
    return td;
}

Params from_dimensional(const DimensionalParams& d) {
    Params p;
    p.sigma = d.r / d.m;
    p.k = d.e * d.e1 * d.e2 * d.K / d.m;
    p.alpha = d.m / (d.e1 * d.e2 * d.e2);
    p.h = d.m * d.H / d.e;
    return p;
}

} // namespace facilidyn
