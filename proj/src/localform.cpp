#include "facilidyn/localform.hpp"

#include "facilidyn/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace facilidyn {

namespace {

Series cst(double c, int ord) { return Series::constant(c, ord); }
Series var(int i, int ord, double offset = 0.0) { return Series::variable(i, ord, offset); }

std::array<Series, 2> model_series(double h, const Series& k, const Series& sigma,
                                   const Series& alpha, const Series& x, const Series& y) {
    const int ord = x.order();
    return field(cst(h, ord), k, sigma, alpha, x, y);
}

nlohmann::json map_json(const std::map<std::string, double>& m) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [key, v] : m) j[key] = v;
    return j;
}

nlohmann::json opt_json(const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

void put_coeffs(std::map<std::string, double>& out, const std::string& prefix, const Series& s,
                int max_total) {
    for (const auto& [e, v] : s.terms()) {
        if (e[0] + e[1] + e[2] > max_total) continue;
        out[prefix + std::to_string(e[0]) + std::to_string(e[1]) + std::to_string(e[2])] = v;
    }
}

// Given u' = v1 := E(u, v) and v' = F(u, v), return d v1/dt as a series in (u, v1).
Series kukles(const Series& E_full, const Series& F_full) {
    const Series E = E_full.truncated(2), F = F_full.truncated(2);
    const double e01 = E.coeff(0, 1);
    if (std::abs(e01) < 1e-300) throw std::domain_error("kukles: vanishing v coefficient");
    const Series u = var(0, 2), v1 = var(1, 2), zero = cst(0.0, 2);
    Series rest = E;
    rest.set({0, 1, 0}, 0.0);
    // Fixed point v = (v1 - rest(u, v)) / e01 solved order by order.
    Series v = zero;
    for (int it = 0; it < 200; ++it) {
        Series next = (v1 - rest.compose({u, v, zero})) * (1.0 / e01);
        double change = 0.0;
        const Series diff = next - v;
        for (const auto& [ex, c] : diff.terms()) change = std::max(change, std::abs(c));
        v = next;
        if (change == 0.0) break;
    }
    const Series rate = E.derivative(0) * E + E.derivative(1) * F;
    return rate.compose({u, v, zero}).truncated(2);
}

struct NearIdentity {
    Series dv;
    double residual = 0.0;
};

// For u' = v, v' = dv(u, v): v -> v - c u v with time scaled by 1 + c u.
NearIdentity remove_v_squared(const Series& dv_in, double c) {
    const int ord = 2;
    const Series u = var(0, ord), v = var(1, ord), zero = cst(0.0, ord);
    const Series dv = dv_in.truncated(ord);
    const Series inv_time = (1.0 + c * u).inverse();
    const Series rate = (dv * (1.0 - c * u) - c * v * v) * inv_time;
    const Series v_of_v3 = v * (1.0 - c * u).inverse();
    NearIdentity out;
    out.dv = rate.compose({u, v_of_v3, zero}).truncated(ord);
    const Series du = (v_of_v3 * inv_time).truncated(ord) - v;
    for (const auto& [e, val] : du.terms()) out.residual = std::max(out.residual, std::abs(val));
    return out;
}

struct EstarPoint {
    double sigma2, alpha_star, x, y;
};

EstarPoint cusp_point(double h, double k) {
    if (!(h > 0.0 && h < 1.0) || !(k > 0.0) || !(k < k1_of(h)))
        throw std::domain_error("cusp point requires 0 < h < 1 and 0 < k < k1");
    const double s2 = sigma2_of(h, k);
    const double as = alpha1_of(h, k, s2);
    const double xs = (h * k * s2 + k * (1.0 - h)) / (k * (1.0 - h) * (1.0 - h) + s2 * (h + 1.0));
    return {s2, as, xs, s2 * xs * (k - xs) / k};
}

} // namespace

std::string bifurcation_name(Bifurcation b) {
    switch (b) {
    case Bifurcation::Transcritical: return "Transcritical";
    case Bifurcation::Pitchfork: return "Pitchfork";
    case Bifurcation::SaddleNode: return "SaddleNode";
    }
    return "?";
}

nlohmann::json CenterManifoldReduction::to_json() const {
    return {{"quadratic", quadratic}, {"cubic", cubic}, {"linear_eps", linear_eps},
            {"classification", bifurcation_name(classification)},
            {"zeta_prime", opt_json(zeta_prime)}, {"coeffs", map_json(coeffs)}};
}

CenterManifold center_manifold(const Series& P, const Series& Q, int order) {
    const double lambda = Q.coeff(0, 1, 0);
    if (std::abs(lambda) < 1e-300) throw std::domain_error("center_manifold: zero hyperbolic eigenvalue");
    const int ord = std::min(P.order(), Q.order());
    const Series u = var(0, ord), e = var(2, ord);
    Series Nv = Q;
    Nv.set({0, 1, 0}, 0.0);
    Series hm = cst(0.0, ord);
    for (int it = 0; it <= order + 1; ++it) {
        const std::array<Series, 3> sub{u, hm, e};
        const Series next = (hm.derivative(0) * P.compose(sub) - Nv.compose(sub)) * (1.0 / lambda);
        hm = cst(0.0, ord);
        for (const auto& [e, c] : next.terms())
            if (e[0] + e[1] + e[2] <= order) hm.set(e, c);
    }
    return {hm, P.compose({u, hm, e})};
}

CenterManifoldReduction ek_reduction(double h, double sigma, double alpha, double tol) {
    if (!(h > 0.0 && h < 1.0) || !(sigma > 0.0) || !(alpha > 0.0))
        throw std::domain_error("ek_reduction requires 0 < h < 1 and sigma, alpha > 0");
    const int ord = 3;
    const Series u = var(0, ord), v = var(1, ord), eps = var(2, ord);
    const Series K = eps + k1_of(h);
    const auto fg = model_series(h, K, cst(sigma, ord), cst(alpha, ord), u + v + K, -sigma * u);
    const double time = -(h - 1.0) * (h - 1.0) / sigma;
    const Series P = (-fg[1] / sigma) * time;
    const Series Q = (fg[0] + fg[1] / sigma) * time;
    const CenterManifold cm = center_manifold(P, Q, 2);
    const Series& R = cm.reduced;
    CenterManifoldReduction out;
    out.quadratic = R.coeff(2, 0, 0);
    out.cubic = R.coeff(3, 0, 0);
    out.linear_eps = R.coeff(1, 0, 1);
    out.coeffs = {{"lambda", Q.coeff(0, 1, 0)},   {"a", cm.manifold.coeff(2, 0, 0)},
                  {"b", cm.manifold.coeff(1, 0, 1)}, {"c", cm.manifold.coeff(0, 0, 2)},
                  {"c1", R.coeff(2, 0, 1)},          {"c2", R.coeff(3, 0, 0)},
                  {"u_eps2", R.coeff(1, 0, 2)},      {"u_eps", R.coeff(1, 0, 1)}};
    const double scale = std::abs(alpha * (1.0 - h)) + (1.0 - h) * (1.0 - h) / sigma;
    out.classification =
        std::abs(out.quadratic) <= tol * scale ? Bifurcation::Pitchfork : Bifurcation::Transcritical;
    return out;
}

CenterManifoldReduction estar_sn_reduction(double h, double k, double sigma, double tol) {
    if (!(h > 0.0 && h < 1.0) || !(k > 0.0) || !(k < k1_of(h)) || !(sigma > 0.0))
        throw std::domain_error("estar_sn_reduction requires 0 < h < 1, 0 < k < k1, sigma > 0");
    const double s2 = sigma2_of(h, k);
    if (std::abs(sigma - s2) <= tol * s2)
        throw std::domain_error("estar_sn_reduction: sigma equals sigma2, the point is a cusp");
    const double a1 = alpha1_of(h, k, sigma);
    const double xs = x_star_on_alpha1(h, k, sigma);
    const double ys = sigma * xs * (k - xs) / k;
    const int ord = 3;
    const Series X = var(0, ord), Y = var(1, ord), e = var(2, ord);
    const auto fg = model_series(h, cst(k, ord), cst(sigma, ord), e + a1, X + xs, Y + ys);
    const Series &f = fg[0], &g = fg[1];
    const double a100 = f.coeff(1, 0, 0), a010 = f.coeff(0, 1, 0), a001 = f.coeff(0, 0, 1);
    const double b100 = g.coeff(1, 0, 0), b010 = g.coeff(0, 1, 0);
    const double shift = a001 * (a010 - a100) / (a100 * (a100 + b010));
    // x = u + m01 v + shift*eps, y = m10 u + v
    const double m01 = a100 / b100, m10 = -b100 / b010;
    const Series u = var(0, ord), v = var(1, ord);
    const std::array<Series, 3> sub{u + m01 * v + shift * e, m10 * u + v, e};
    const Series fs = f.compose(sub), gs = g.compose(sub);
    const double det = 1.0 - m01 * m10;
    const Series P = (fs - m01 * gs) * (1.0 / det);
    const Series Q = (gs - m10 * fs) * (1.0 / det);
    const CenterManifold cm = center_manifold(P, Q, 2);
    const Series& R = cm.reduced;
    CenterManifoldReduction out;
    out.classification = Bifurcation::SaddleNode;
    out.quadratic = R.coeff(2, 0, 0);
    out.cubic = R.coeff(3, 0, 0);
    out.linear_eps = R.coeff(0, 0, 1);
    out.zeta_prime = out.linear_eps / out.quadratic;
    put_coeffs(out.coeffs, "a", f, 2);
    put_coeffs(out.coeffs, "b", g, 2);
    put_coeffs(out.coeffs, "p", P, 2);
    put_coeffs(out.coeffs, "q", Q, 2);
    for (const char* name : {"p100", "p010", "q100", "q001"})
        if (!out.coeffs.count(name)) out.coeffs[name] = 0.0;
    out.coeffs["c20"] = cm.manifold.coeff(2, 0, 0);
    out.coeffs["c11"] = cm.manifold.coeff(1, 0, 1);
    out.coeffs["c02"] = cm.manifold.coeff(0, 0, 2);
    out.coeffs["d1_prime"] = R.coeff(1, 0, 1);
    out.coeffs["alpha1"] = a1;
    out.coeffs["x_star"] = xs;
    out.coeffs["y_star"] = ys;
    return out;
}

double trace_estar(double h, double k, double sigma) {
    const double hk = h * k - k;
    const double a1 = alpha1_of(h, k, sigma);
    const double bracket = (h * sigma - h + 1.0) * std::sqrt((hk + 1.0) * (hk + 9.0)) -
                           (k * h * h - h * k + h + 4.0) * sigma + 3.0 * (1.0 - h) * (hk + 1.0);
    return (hk + 9.0) / (8.0 * (1.0 - h) * (1.0 - h) * (a1 * k * sigma + 3.0)) * bracket;
}

int sign_trace_estar(double h, double k, double sigma, double tol) {
    const double s2 = sigma2_of(h, k);
    if (std::abs(sigma - s2) <= tol * s2) return 0;
    const double t = trace_estar(h, k, sigma);
    return t > 0.0 ? 1 : (t < 0.0 ? -1 : 0);
}

nlohmann::json HopfData::to_json() const {
    nlohmann::json j{{"alpha2", alpha2},
                     {"x1", x1},
                     {"y1", y1},
                     {"beta", beta},
                     {"G_value", G_value},
                     {"focal_sign", focal_sign},
                     {"focal_value", focal_value},
                     {"lyapunov", lyapunov},
                     {"transversality", transversality},
                     {"L", L}};
    j["Ltilde"] = Ltilde ? nlohmann::json(*Ltilde) : nlohmann::json(nullptr);
    return j;
}

std::array<double, 5> hopf_G_coeffs(double h, double k) {
    const double m = h - 1.0, p = h + 1.0;
    std::array<double, 5> L{};
    L[4] = h * (h * m * (h * h - h + 2.0) * k + h * h * h + 3.0 * h + 4.0) * (h * m * m * k + h * h - h - 2.0);
    L[3] = m * (3.0 * h * h * h * std::pow(m, 4) * k * k * k -
                h * h * (h - 3.0) * (4.0 * h * h - 3.0 * h - 5.0) * m * m * k * k -
                h * m * p * (8.0 * h * h * h - 25.0 * h * h + 20.0 * h + 17.0) * k -
                (4.0 * h * h * h - 13.0 * h * h + 16.0 * h - 3.0) * p * p);
    L[2] = std::pow(m, 3) * (h * h * (3.0 * h - 4.0) * m * m * k * k * k +
                             h * m * (6.0 * h * h * h + 3.0 * h * h - 17.0 * h - 8.0) * k * k +
                             (12.0 * h * h - 21.0 * h + 8.0) * p * p * k + 3.0 * (2.0 * h - 1.0) * p * p);
    L[1] = k * std::pow(m, 4) *
           (h * h * h * std::pow(m, 4) * std::pow(k, 4) + h * h * (8.0 * h + 5.0) * std::pow(m, 3) * k * k * k +
            h * (2.0 * h + 1.0) * (11.0 * h + 3.0) * m * m * k * k +
            m * (24.0 * h * h * h + 23.0 * h * h + 10.0 * h + 7.0) * k + p * (9.0 * h * h + 2.0 * h + 5.0));
    L[0] = k * k * std::pow(m, 6) * (h * k - k + 1.0) *
           (2.0 * h * h * m * m * k * k + h * (5.0 * h + 2.0) * m * k + 3.0 * h * h + 3.0 * h + 2.0);
    return L;
}

double hopf_transversality(double h, double k, double sigma) {
    const double x1 = x0_of(h, k, sigma);
    const double m = h - 1.0;
    return k * sigma * x1 * x1 * (k - x1) * m * m * (h * sigma - h + 1.0) /
           (k * m * m + sigma * (1.0 + h));
}

bool in_hopf_scope(double h, double k, double sigma) {
    if (!(h > 0.0 && h < 1.0) || !(k > 0.0) || !(sigma > 0.0)) return false;
    const double k1 = k1_of(h);
    if (k >= k1 * (1.0 - 1e-12)) return k < k2_of(h);
    return sigma > sigma2_of(h, k);
}

double first_lyapunov(const Series& f, const Series& g) {
    const double fxx = 2.0 * f.coeff(2, 0), fxy = f.coeff(1, 1), fyy = 2.0 * f.coeff(0, 2);
    const double gxx = 2.0 * g.coeff(2, 0), gxy = g.coeff(1, 1), gyy = 2.0 * g.coeff(0, 2);
    const double fxxx = 6.0 * f.coeff(3, 0), fxyy = 2.0 * f.coeff(1, 2);
    const double gxxy = 2.0 * g.coeff(2, 1), gyyy = 6.0 * g.coeff(0, 3);
    return (fxxx + fxyy + gxxy + gyyy) / 16.0 +
           (fxy * (fxx + fyy) - gxy * (gxx + gyy) - fxx * gxx + fyy * gyy) / 16.0;
}

HopfData hopf(double h, double k, double sigma) {
    if (!in_hopf_scope(h, k, sigma))
        throw std::domain_error("hopf: (h, k, sigma) outside the Hopf parameter set");
    HopfData out;
    out.alpha2 = alpha2_of(h, k, sigma);
    out.x1 = x0_of(h, k, sigma);
    out.y1 = sigma * out.x1 * (k - out.x1) / k;
    const double m = h - 1.0;
    const double f2 = (-h * m * m * k - h * h + h + 2.0) * sigma * sigma +
                      m * (h * h * k - h * k + 3.0 * h + 3.0) * (h * k - k + 1.0) * sigma +
                      k * m * m * m * (h * k - k + 1.0);
    const double wide = k * m * m + sigma * (h + 1.0);
    out.beta = k * std::sqrt(sigma * f2) / (wide * std::sqrt(1.0 - h));

    const int ord = 3;
    const Series X = var(0, ord), Y = var(1, ord);
    const auto fg = model_series(h, cst(k, ord), cst(sigma, ord), cst(out.alpha2, ord), X + out.x1, Y + out.y1);
    const double a10 = fg[0].coeff(1, 0), b10 = fg[1].coeff(1, 0);
    const double beta = out.beta;
    const Series u = var(0, ord), v = var(1, ord), zero = cst(0.0, ord);
    const std::array<Series, 3> sub{(u + (a10 / beta) * v) * (1.0 / b10), v * (1.0 / beta), zero};
    const Series fs = fg[0].compose(sub), gs = fg[1].compose(sub);
    const Series du = (b10 * fs - a10 * gs) * (1.0 / beta);
    const Series dv = gs;
    out.lyapunov = first_lyapunov(du + v, dv - u);

    out.L = hopf_G_coeffs(h, k);
    out.G_value = 0.0;
    for (int i = 4; i >= 0; --i) out.G_value = out.G_value * sigma + out.L[static_cast<size_t>(i)];
    out.focal_sign = out.G_value < 0.0 ? -1 : (out.G_value > 0.0 ? 1 : 0);
    const double hs = h * sigma - h + 1.0;
    out.focal_value = out.x1 * out.y1 * wide * out.G_value /
                      (8.0 * b10 * beta * beta * std::sqrt(beta) * hs * hs * hs * std::pow(1.0 - h, 3) * wide);
    out.transversality = hopf_transversality(h, k, sigma);
    if (k < k1_of(h)) {
        const double s2 = sigma2_of(h, k);
        std::array<double, 5> lt{};
        const double binom[5][5] = {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
        for (int j = 0; j <= 4; ++j)
            for (int i = j; i <= 4; ++i)
                lt[static_cast<size_t>(j)] += binom[i][j] * out.L[static_cast<size_t>(i)] * std::pow(s2, i - j);
        out.Ltilde = lt;
    }
    return out;
}

nlohmann::json BTCusp::to_json() const {
    return {{"sigma2", sigma2},       {"alpha_star", alpha_star}, {"x_star", x_star},
            {"y_star", y_star},       {"A20", A20},               {"A11", A11},
            {"B20", B20},             {"B11", B11},               {"B02", B02},
            {"cusp_B20", cusp_B20},   {"cusp_2A20_B11", cusp_2A20_B11},
            {"normalized", normalized}, {"residual", residual},   {"taylor", map_json(taylor)}};
}

BTCusp bt_cusp(double h, double k) {
    const EstarPoint pt = cusp_point(h, k);
    BTCusp out;
    out.sigma2 = pt.sigma2;
    out.alpha_star = pt.alpha_star;
    out.x_star = pt.x;
    out.y_star = pt.y;
    const int ord = 3;
    const Series X = var(0, ord), Y = var(1, ord), zero = cst(0.0, ord);
    const auto fg = model_series(h, cst(k, ord), cst(pt.sigma2, ord), cst(pt.alpha_star, ord), X + pt.x, Y + pt.y);
    for (const auto& [e, v] : fg[0].terms())
        out.taylor["A" + std::to_string(e[0]) + std::to_string(e[1])] = v;
    for (const auto& [e, v] : fg[1].terms())
        out.taylor["B" + std::to_string(e[0]) + std::to_string(e[1])] = v;
    const double B10 = fg[1].coeff(1, 0), B01 = fg[1].coeff(0, 1);
    const Series u = var(0, ord), v = var(1, ord);
    const std::array<Series, 3> sub{-(B01 / B10) * u + v, u, zero};
    const Series fs = fg[0].compose(sub), gs = fg[1].compose(sub);
    const Series du = gs * (1.0 / B10);
    const Series dv = (fs + (B01 / B10) * gs) * (1.0 / B10);
    out.A20 = du.coeff(2, 0);
    out.A11 = du.coeff(1, 1);
    out.B20 = dv.coeff(2, 0);
    out.B11 = dv.coeff(1, 1);
    out.B02 = dv.coeff(0, 2);

    const Series dv1 = kukles(du, dv);
    const NearIdentity ni = remove_v_squared(dv1, dv1.coeff(0, 2));
    const double a = ni.dv.coeff(2, 0), b = ni.dv.coeff(1, 1);
    out.cusp_B20 = a;
    out.cusp_2A20_B11 = b;

    // u = lam U, v = nu V, t = kap T maps u' = v, v' = a u^2 + b u v to V' = U^2 - U V.
    const double lam = a / (b * b), nu = -a * a / (b * b * b), kap = -b / a;
    const Series U = var(0, 2), V = var(1, 2), z2 = cst(0.0, 2);
    const Series dU = (V * nu) * (kap / lam);
    const Series dV = ni.dv.compose({lam * U, nu * V, z2}) * (kap / nu);
    out.normalized = {dV.coeff(2, 0), dV.coeff(1, 1), dV.coeff(0, 2)};
    out.residual = std::max({std::abs(out.normalized[0] - 1.0), std::abs(out.normalized[1] + 1.0),
                             std::abs(out.normalized[2]), std::abs(dU.coeff(0, 1) - 1.0), ni.residual,
                             std::abs(dV.coeff(0, 0)), std::abs(dV.coeff(1, 0)), std::abs(dV.coeff(0, 1))});
    return out;
}

UnfoldingTerms bt_unfolding_terms(double h, double k, double eps1, double eps2) {
    const EstarPoint pt = cusp_point(h, k);
    const int ord = 2;
    const Series X = var(0, ord), Y = var(1, ord), zero = cst(0.0, ord);
    const auto base = model_series(h, cst(k, ord), cst(pt.sigma2, ord), cst(pt.alpha_star, ord), X + pt.x, Y + pt.y);
    const double B10 = base[1].coeff(1, 0), B01 = base[1].coeff(0, 1);
    const Series u = var(0, ord), v = var(1, ord);
    const auto fg = model_series(h, cst(k, ord), cst(pt.sigma2 + eps2, ord), cst(pt.alpha_star + eps1, ord),
                                 -(B01 / B10) * u + v + pt.x, u + pt.y);
    const Series E = fg[1] * (1.0 / B10);
    const Series F = (fg[0] + (B01 / B10) * fg[1]) * (1.0 / B10);
    UnfoldingTerms out;
    for (const auto& [e, c] : E.terms()) out.E[std::to_string(e[0]) + std::to_string(e[1])] = c;
    for (const auto& [e, c] : F.terms()) out.F[std::to_string(e[0]) + std::to_string(e[1])] = c;
    const Series C = kukles(E, F);
    for (const auto& [e, c] : C.terms()) out.C[std::to_string(e[0]) + std::to_string(e[1])] = c;
    if (std::abs(C.coeff(1, 1)) < 1e-300) throw std::domain_error("bt_unfolding: vanishing u*v coefficient");
    const double delta = C.coeff(0, 1) / C.coeff(1, 1);
    const Series shifted = C.compose({u - delta, v, zero}).truncated(ord);
    const NearIdentity ni = remove_v_squared(shifted, shifted.coeff(0, 2));
    out.mu1 = ni.dv.coeff(0, 0);
    out.mu2 = ni.dv.coeff(1, 0);
    out.A = ni.dv.coeff(2, 0);
    out.B = ni.dv.coeff(1, 1);
    out.residual = std::max({std::abs(ni.dv.coeff(0, 1)), std::abs(ni.dv.coeff(0, 2)), ni.residual});
    out.beta1 = std::pow(out.B, 4) * out.mu1 / std::pow(out.A, 3);
    out.beta2 = out.B * out.B * out.mu2 / (out.A * out.A);
    return out;
}

std::pair<double, double> bt_unfolding(double h, double k, double eps1, double eps2) {
    const UnfoldingTerms t = bt_unfolding_terms(h, k, eps1, eps2);
    return {t.beta1, t.beta2};
}

nlohmann::json MuCoefficients::to_json() const {
    return {{"mu110", mu110}, {"mu101", mu101}, {"mu120", mu120}, {"mu111", mu111},
            {"mu102", mu102}, {"mu210", mu210}, {"mu201", mu201}, {"A0", A0},
            {"B0", B0},       {"det_mu", det_mu}, {"det_beta", det_beta},
            {"det_normalized", det_normalized}, {"c1", c1}, {"c2_sn", c2_sn},
            {"c2_hopf", c2_hopf}, {"c2_hl", c2_hl}};
}

MuCoefficients bt_mu(double h, double k) {
    const EstarPoint pt = cusp_point(h, k);
    auto mu = [&](double e1, double e2) {
        const UnfoldingTerms t = bt_unfolding_terms(h, k, e1, e2);
        return std::array<double, 2>{t.mu1, t.mu2};
    };
    const double t1 = 1e-5 * pt.alpha_star, t2 = 1e-5 * pt.sigma2;
    const auto m00 = mu(0.0, 0.0);
    auto richardson = [](auto step) {
        const auto coarse = step(1.0), fine = step(0.5);
        return std::array<double, 2>{(4.0 * fine[0] - coarse[0]) / 3.0, (4.0 * fine[1] - coarse[1]) / 3.0};
    };
    auto first = [&](bool along1) {
        return richardson([&](double s) {
            const double a = along1 ? s * t1 : 0.0, b = along1 ? 0.0 : s * t2, d = along1 ? s * t1 : s * t2;
            const auto p = mu(a, b), q = mu(-a, -b);
            return std::array<double, 2>{(p[0] - q[0]) / (2.0 * d), (p[1] - q[1]) / (2.0 * d)};
        });
    };
    auto second = [&](bool along1) {
        return richardson([&](double s) {
            const double a = along1 ? s * t1 : 0.0, b = along1 ? 0.0 : s * t2, d = along1 ? s * t1 : s * t2;
            const auto p = mu(a, b), q = mu(-a, -b);
            return std::array<double, 2>{(p[0] - 2.0 * m00[0] + q[0]) / (d * d),
                                         (p[1] - 2.0 * m00[1] + q[1]) / (d * d)};
        });
    };
    const auto mixed = richardson([&](double s) {
        const double a = s * t1, b = s * t2;
        const auto pp = mu(a, b), pm = mu(a, -b), mp = mu(-a, b), mm = mu(-a, -b);
        return std::array<double, 2>{(pp[0] - pm[0] - mp[0] + mm[0]) / (4.0 * a * b),
                                     (pp[1] - pm[1] - mp[1] + mm[1]) / (4.0 * a * b)};
    });
    const auto d1 = first(true), d2 = first(false), dd1 = second(true), dd2 = second(false);
    MuCoefficients out;
    out.mu110 = d1[0];
    out.mu210 = d1[1];
    out.mu101 = d2[0];
    out.mu201 = d2[1];
    out.mu120 = dd1[0];
    out.mu102 = dd2[0];
    out.mu111 = mixed[0];
    const UnfoldingTerms t0 = bt_unfolding_terms(h, k, 0.0, 0.0);
    out.A0 = t0.A;
    out.B0 = t0.B;
    out.det_mu = out.mu110 * out.mu201 - out.mu101 * out.mu210;
    out.det_beta = std::pow(out.B0, 6) / std::pow(out.A0, 5) * out.det_mu;
    out.det_normalized = out.det_beta * pt.alpha_star * pt.sigma2;
    out.c1 = -out.mu101 / out.mu110;
    const double quad = 0.5 * out.mu120 * out.c1 * out.c1 + out.mu111 * out.c1 + 0.5 * out.mu102;
    const double lin2 = out.mu210 * out.c1 + out.mu201;
    out.c2_hopf = -quad / out.mu110;
    out.c2_sn = (-quad + lin2 * lin2 / (4.0 * out.A0)) / out.mu110;
    out.c2_hl = -(quad + 6.0 / (25.0 * out.A0) * lin2 * lin2) / out.mu110;
    return out;
}

double alpha3_of(const MuCoefficients& mu, double alpha_star, double sigma2, double sigma) {
    const double e2 = sigma - sigma2;
    return alpha_star + mu.c1 * e2 + mu.c2_hl * e2 * e2;
}

nlohmann::json BTData::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : curves)
        rows.push_back({{"sigma", c.sigma}, {"alpha_SN", c.alpha_sn}, {"alpha_H", opt_json(c.alpha_h)},
                        {"alpha_HL", opt_json(c.alpha_hl)}});
    return {{"cusp", cusp.to_json()}, {"mu", mu.to_json()}, {"curves", rows}};
}

BTData bt_curves(double h, double k, double sigma_min, double sigma_max, int n_samples) {
    if (n_samples < 1 || !(sigma_min <= sigma_max) || !(sigma_min > 0.0))
        throw std::invalid_argument("bt_curves: empty sigma range");
    BTData out;
    out.cusp = bt_cusp(h, k);
    out.mu = bt_mu(h, k);
    for (int i = 0; i < n_samples; ++i) {
        const double s = n_samples == 1 ? sigma_min
                                        : sigma_min + (sigma_max - sigma_min) * i / (n_samples - 1);
        CurveSample c;
        c.sigma = s;
        c.alpha_sn = alpha1_of(h, k, s);
        if (s > out.cusp.sigma2) {
            c.alpha_h = alpha2_of(h, k, s);
            c.alpha_hl = alpha3_of(out.mu, out.cusp.alpha_star, out.cusp.sigma2, s);
        }
        out.curves.push_back(c);
    }
    return out;
}

namespace {

Rat rpow(const Rat& x, int n) {
    Rat r(1);
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

} // namespace

Poly g2_poly(const Rat& h) {
    const Rat m = h - 1, p = h + 1;
    auto P = [&](std::initializer_list<long> desc) {
        Rat acc(0);
        for (long c : desc) acc = acc * h + c;
        return acc;
    };
    return Poly{Rat(3 * (h - 2) * (h + 2) * rpow(p, 4)), Rat(m * P({11, 0, -34, 1}) * rpow(p, 3)),
                Rat(P({15, 28, -20, -60, -31, 24, -8}) * rpow(m, 2)),
                Rat(P({9, 5, -13, -6, -1, 3, -1}) * rpow(m, 3)), Rat(2 * rpow(h, 5) * rpow(m, 5))};
}

Poly g3_poly(const Rat& h) {
    const Rat m = h - 1, p = h + 1;
    auto P = [&](std::initializer_list<long> desc) {
        Rat acc(0);
        for (long c : desc) acc = acc * h + c;
        return acc;
    };
    return Poly{Rat(9 * (h - 2) * (h + 2) * rpow(p, 5)), Rat(m * P({37, -2, -118, 11}) * rpow(p, 4)),
                Rat(P({59, -10, -143, 40, -6}) * rpow(m, 2) * rpow(p, 3)),
                Rat(P({45, 74, -64, -125, -5, -4, 4, -1}) * rpow(m, 3)),
                Rat(2 * rpow(h, 5) * P({8, 3, -13}) * rpow(m, 4)), Rat(2 * rpow(h, 6) * rpow(m, 6))};
}

Poly zeta1_poly(const Rat& h) {
    const Rat m = h - 1, p = h + 1;
    auto P = [&](std::initializer_list<long> desc) {
        Rat acc(0);
        for (long c : desc) acc = acc * h + c;
        return acc;
    };
    return Poly{Rat(3 * rpow(p, 4)), Rat(8 * h * m * rpow(p, 3)), Rat(P({7, 12, 6, -4, 1}) * rpow(m, 2)),
                Rat(2 * rpow(h, 4) * rpow(m, 3))};
}

Poly substitute_capacity(const Poly& g, const Rat& h, int d) {
    if (g.degree() > d) throw std::invalid_argument("substitute_capacity: degree exceeds d");
    const Poly w{Rat(1), Rat(0), Rat(1)};  // 1 + x^2
    const Rat inv = 1 / (1 - h);
    Poly out;
    for (int j = 0; j <= g.degree(); ++j) out += w.pow(d - j) * Rat(g.coeff(j) * rpow(inv, j));
    return out;
}

nlohmann::json NondegeneracyRow::to_json() const {
    return {{"h", rat_string(h)},
            {"g2_signs", g2_signs.signs},
            {"g2_revised", g2_signs.revised},
            {"g2_roots", g2_roots},
            {"g2_at_zero", g2_at_zero},
            {"g3_signs", g3_signs.signs},
            {"g3_revised", g3_signs.revised},
            {"g3_roots", g3_roots},
            {"g3_at_zero", g3_at_zero},
            {"zeta1_signs", zeta1_signs.signs},
            {"zeta1_roots", zeta1_roots},
            {"zeta1_at_zero", zeta1_at_zero},
            {"g2_negative", g2_negative},
            {"g3_negative", g3_negative},
            {"zeta1_positive", zeta1_positive}};
}

std::vector<NondegeneracyRow> g2_g3_nondegeneracy(const std::vector<Rat>& hs) {
    std::vector<NondegeneracyRow> rows;
    for (const Rat& h : hs) {
        if (!(sgn(h) > 0 && h < 1)) throw std::invalid_argument("g2_g3_nondegeneracy: h must lie in (0, 1)");
        NondegeneracyRow r;
        r.h = h;
        const Poly g2 = g2_poly(h), g3 = g3_poly(h), z1 = zeta1_poly(h);
        const Poly t2 = substitute_capacity(g2, h, 4), t3 = substitute_capacity(g3, h, 5),
                   tz = substitute_capacity(z1, h, 3);
        r.g2_signs = sign_list(discriminant_sequence(t2));
        r.g2_roots = count_from_revised(r.g2_signs.revised);
        r.g2_at_zero = sgn(g2.coeff(0));
        r.g3_signs = sign_list(discriminant_sequence(t3));
        r.g3_roots = count_from_revised(r.g3_signs.revised);
        r.g3_at_zero = sgn(g3.coeff(0));
        r.zeta1_signs = sign_list(discriminant_sequence(tz));
        r.zeta1_roots = count_from_revised(r.zeta1_signs.revised);
        r.zeta1_at_zero = sgn(z1.coeff(0));
        r.g2_negative = r.g2_roots == 0 && r.g2_at_zero < 0;
        r.g3_negative = r.g3_roots == 0 && r.g3_at_zero < 0;
        r.zeta1_positive = r.zeta1_roots == 0 && r.zeta1_at_zero > 0;
        rows.push_back(r);
    }
    return rows;
}

} // namespace facilidyn
