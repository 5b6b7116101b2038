#pragma once

#include "facilidyn/poly.hpp"
#include "facilidyn/series.hpp"

#include <array>
#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace facilidyn {

enum class Bifurcation { Transcritical, Pitchfork, SaddleNode };

std::string bifurcation_name(Bifurcation b);

struct CenterManifoldReduction {
    double quadratic = 0.0;   // u^2 coefficient of the reduced equation
    double cubic = 0.0;       // u^3 coefficient
    double linear_eps = 0.0;  // u*eps coefficient at Ek, eps coefficient at E*
    Bifurcation classification = Bifurcation::Transcritical;
    std::optional<double> zeta_prime;
    // Named intermediate coefficients: Taylor, transformed and manifold terms.
    std::map<std::string, double> coeffs;
    nlohmann::json to_json() const;
};

struct CenterManifold {
    Series manifold;  // v = h(u, eps) in variables 0 and 2
    Series reduced;   // du/dt restricted to the manifold
};

// u' = P(u, v, e), v' = Q(u, v, e) with Q linear part lambda*v; variables (u, v, e).
CenterManifold center_manifold(const Series& P, const Series& Q, int order);

// Transcritical or pitchfork reduction at Ek for k = k1 + eps.
CenterManifoldReduction ek_reduction(double h, double sigma, double alpha, double tol = 1e-9);
// Saddle-node reduction at E* for alpha = alpha1 + eps.
CenterManifoldReduction estar_sn_reduction(double h, double k, double sigma, double tol = 1e-9);
// Sign of the trace at E* on the alpha = alpha1 surface.
int sign_trace_estar(double h, double k, double sigma, double tol = 1e-9);
double trace_estar(double h, double k, double sigma);

struct HopfData {
    double alpha2 = 0.0;
    double x1 = 0.0, y1 = 0.0;
    double beta = 0.0;
    double G_value = 0.0;
    int focal_sign = 0;
    double focal_value = 0.0;  // g including its positive prefactor
    double lyapunov = 0.0;     // first Lyapunov coefficient in normalized time
    double transversality = 0.0;
    std::array<double, 5> L{};
    std::optional<std::array<double, 5>> Ltilde;  // shifted coefficients about sigma2
    nlohmann::json to_json() const;
};

std::array<double, 5> hopf_G_coeffs(double h, double k);
// d/d alpha of the trace at E1 with x held at x1.
double hopf_transversality(double h, double k, double sigma);
bool in_hopf_scope(double h, double k, double sigma);
HopfData hopf(double h, double k, double sigma);
// First Lyapunov coefficient of u' = -v + f, v' = u + g from the series f, g.
double first_lyapunov(const Series& f, const Series& g);

struct BTCusp {
    double sigma2 = 0.0, alpha_star = 0.0, x_star = 0.0, y_star = 0.0;
    std::map<std::string, double> taylor;  // A_ij, B_ij at E*
    double A20 = 0.0, A11 = 0.0, B20 = 0.0, B11 = 0.0, B02 = 0.0;
    double cusp_B20 = 0.0;       // u^2 coefficient after the Kukles step
    double cusp_2A20_B11 = 0.0;  // u*v coefficient after the Kukles step
    std::array<double, 3> normalized{};  // u^2, u*v, v^2 coefficients of the final form
    double residual = 0.0;
    nlohmann::json to_json() const;
};

BTCusp bt_cusp(double h, double k);

struct UnfoldingTerms {
    double mu1 = 0.0, mu2 = 0.0, A = 0.0, B = 0.0;
    double beta1 = 0.0, beta2 = 0.0;
    std::map<std::string, double> E, F, C;  // transformed, Kukles-form coefficients
    double residual = 0.0;  // size of the terms that the normal form must remove
};

UnfoldingTerms bt_unfolding_terms(double h, double k, double eps1, double eps2);
std::pair<double, double> bt_unfolding(double h, double k, double eps1, double eps2);

struct MuCoefficients {
    double mu110 = 0.0, mu101 = 0.0, mu120 = 0.0, mu111 = 0.0, mu102 = 0.0;
    double mu210 = 0.0, mu201 = 0.0;
    double A0 = 0.0, B0 = 0.0;
    double det_mu = 0.0;      // mu110*mu201 - mu101*mu210
    double det_beta = 0.0;    // Jacobian of (beta1, beta2) at the origin
    double det_normalized = 0.0;
    double c1 = 0.0;          // common slope d eps1 / d eps2 of all three curves
    double c2_sn = 0.0, c2_hopf = 0.0, c2_hl = 0.0;
    nlohmann::json to_json() const;
};

MuCoefficients bt_mu(double h, double k);

struct CurveSample {
    double sigma = 0.0;
    double alpha_sn = 0.0;
    std::optional<double> alpha_h, alpha_hl;
};

struct BTData {
    BTCusp cusp;
    MuCoefficients mu;
    std::vector<CurveSample> curves;
    nlohmann::json to_json() const;
};

BTData bt_curves(double h, double k, double sigma_min, double sigma_max, int n_samples);
// Second-order homoclinic prediction at sigma.
double alpha3_of(const MuCoefficients& mu, double alpha_star, double sigma2, double sigma);

struct NondegeneracyRow {
    Rat h;
    SignList g2_signs;
    int g2_roots = 0;
    int g2_at_zero = 0;
    SignList g3_signs;
    int g3_roots = 0;
    int g3_at_zero = 0;
    SignList zeta1_signs;
    int zeta1_roots = 0;
    int zeta1_at_zero = 0;
    bool g2_negative = false, g3_negative = false, zeta1_positive = false;
    nlohmann::json to_json() const;
};

// Polynomials in k at rational h.
Poly g2_poly(const Rat& h);
Poly g3_poly(const Rat& h);
Poly zeta1_poly(const Rat& h);
// (1 + x^2)^d g(1/((1 - h)(1 + x^2))) as a polynomial in x.
Poly substitute_capacity(const Poly& g, const Rat& h, int d);
std::vector<NondegeneracyRow> g2_g3_nondegeneracy(const std::vector<Rat>& hs);

} // namespace facilidyn
