#pragma once

#include "facilidyn/poly.hpp"

#include <array>
#include <json.hpp>
#include <optional>

namespace facilidyn {

struct Params {
    double h = 0.0;
    double k = 0.0;
    double sigma = 0.0;
    double alpha = 0.0;

    // Throws std::invalid_argument unless all four are finite and positive.
    void validate() const;
    nlohmann::json to_json() const;
    static Params from_json(const nlohmann::json& j);
};

struct State {
    double x = 0.0;
    double y = 0.0;
};

using Vec2 = std::array<double, 2>;
using Mat2 = std::array<std::array<double, 2>, 2>;

struct Thresholds {
    double k1 = 0.0, k2 = 0.0, k3 = 0.0;
    double alpha_sk = 0.0;  // 1/(sigma k)
    std::optional<double> alpha1, alpha2, sigma1, sigma2, x_star, x0;
    double tol = 1e-12;
    nlohmann::json to_json() const;
};

struct DimensionalParams {
    double r = 0.0, K = 0.0, e = 0.0, m = 0.0, e1 = 0.0, e2 = 0.0, H = 0.0;
};

// Quartic right-hand side; T may be double or Series.
template <class T>
std::array<T, 2> field(const T& h, const T& k, const T& sigma, const T& alpha, const T& x,
                       const T& y) {
    const T coop = 1.0 + alpha * y;
    const T dx = x * (sigma * (k - x) * (1.0 + h * coop * x) - k * y * coop);
    const T dy = k * y * (x * coop * (1.0 - h) - 1.0);
    return {dx, dy};
}

Vec2 vector_field(const Params& p, const State& s);
Vec2 vector_field_orbital(const Params& p, const State& s);
Mat2 jacobian(const Params& p, const State& s);

// F(x) with coefficients taken exactly from the binary values of p.
Poly equilibrium_poly(const Params& p);
double equilibrium_poly_value(const Params& p, double x);
double equilibrium_poly_slope(const Params& p, double x);
double nullcline_y(const Params& p, double x);

double k1_of(double h);
double k2_of(double h);
double k3_of(double h);
double alpha1_of(double h, double k, double sigma);
double alpha2_of(double h, double k, double sigma);
double sigma2_of(double h, double k);
double x0_of(double h, double k, double sigma);
// Vertex of F for any alpha.
double x_star_of(double k, double sigma, double alpha);
// Vertex of F on the alpha = alpha1 surface.
double x_star_on_alpha1(double h, double k, double sigma);
// f(sigma) whose unique positive root is sigma1, exact in sigma.
Poly sigma1_poly(double h, double k);
double sigma1_of(double h, double k);

Thresholds thresholds(double h, double k, double sigma,
                      std::optional<double> alpha = std::nullopt);

struct TraceDet {
    double trace = 0.0;
    double det = 0.0;
};

// Trace and determinant at an interior equilibrium using the branch identity.
TraceDet trace_det_closed_form(const Params& p, double xi);

Params from_dimensional(const DimensionalParams& d);

} // namespace facilidyn
