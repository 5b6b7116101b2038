#include "facilidyn/regions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace facilidyn {

namespace {

constexpr std::array<const char*, 22> kRegionNames{
    "P11", "P12", "S11", "P2",  "S1",  "S21", "S22", "L21", "L1",  "S3",  "P31",
    "P32", "S31", "S41", "L41", "S42", "P4",  "P51", "P52", "S51", "S5",  "H_GE_1"};

bool is_boundary_cell(Region r) {
    const std::string n = region_name(r);
    return n[0] == 'S' || n[0] == 'L';
}

// -1, 0, +1 comparison where 0 means within the relative band.
int cmp_band(double a, double b, double band) {
    const double d = a - b;
    if (std::abs(d) <= band * std::max(std::abs(a), std::abs(b))) return 0;
    return d < 0.0 ? -1 : 1;
}

Kind kind_from(double T, double D, double t_tol) {
    if (D < 0.0) return Kind::Saddle;
    if (std::abs(T) <= t_tol) return Kind::CenterType;
    const bool node = T * T - 4.0 * D >= 0.0;
    if (T < 0.0) return node ? Kind::StableNode : Kind::StableFocus;
    return node ? Kind::UnstableNode : Kind::UnstableFocus;
}

} // namespace

std::string region_name(Region r) { return kRegionNames[static_cast<size_t>(r)]; }

Region region_from_name(const std::string& name) {
    for (size_t i = 0; i < kRegionNames.size(); ++i)
        if (name == kRegionNames[i]) return static_cast<Region>(i);
    throw std::invalid_argument("unknown region label: " + name);
}

std::string RegionLabel::name() const { return region_name(cell); }

std::string kind_name(Kind k) {
    switch (k) {
    case Kind::Saddle: return "Saddle";
    case Kind::StableNode: return "StableNode";
    case Kind::StableFocus: return "StableFocus";
    case Kind::UnstableNode: return "UnstableNode";
    case Kind::UnstableFocus: return "UnstableFocus";
    case Kind::CenterType: return "CenterType";
    case Kind::DegenerateSaddleNode: return "DegenerateSaddleNode";
    case Kind::Cusp: return "Cusp";
    }
    return "?";
}

std::string role_name(Role r) {
    switch (r) {
    case Role::E0: return "E0";
    case Role::Ek: return "Ek";
    case Role::E1: return "E1";
    case Role::E2: return "E2";
    case Role::Estar: return "Estar";
    }
    return "?";
}

std::string kind_class_name(KindClass c) {
    switch (c) {
    case KindClass::Saddle: return "saddle";
    case KindClass::StableNode: return "stable node";
    case KindClass::StableFocusOrNode: return "stable focus or node";
    case KindClass::UnstableFocusOrNode: return "unstable focus or node";
    case KindClass::CenterType: return "center type";
    case KindClass::Degenerate: return "degenerate";
    }
    return "?";
}

bool kind_in_class(Kind k, KindClass c) {
    switch (c) {
    case KindClass::Saddle: return k == Kind::Saddle;
    case KindClass::StableNode: return k == Kind::StableNode;
    case KindClass::StableFocusOrNode: return k == Kind::StableFocus || k == Kind::StableNode;
    case KindClass::UnstableFocusOrNode: return k == Kind::UnstableFocus || k == Kind::UnstableNode;
    case KindClass::CenterType: return k == Kind::CenterType;
    case KindClass::Degenerate: return k == Kind::DegenerateSaddleNode || k == Kind::Cusp;
    }
    return false;
}

nlohmann::json Equilibrium::to_json() const {
    return {{"role", role_name(role)}, {"x", x}, {"y", y}, {"trace", trace}, {"det", det},
            {"kind", kind_name(kind)}};
}

RegionLabel classify(const Params& p, double band) {
    p.validate();
    if (p.h >= 1.0) return {Region::H_GE_1, false};
    const Thresholds t = thresholds(p.h, p.k, p.sigma);
    const double a = p.alpha;
    const int ck = cmp_band(p.k, t.k1, band);
    const int ca = cmp_band(a, t.alpha_sk, band);
    auto vs = [&](const std::optional<double>& v, const char* what) {
        if (!v) throw std::logic_error(std::string("classify: threshold unavailable: ") + what);
        return cmp_band(a, *v, band);
    };
    Region r;
    if (ck == 0) {
        if (ca < 0) r = Region::S1;
        else if (ca == 0) r = Region::L1;
        else {
            const int c2 = vs(t.alpha2, "alpha2");
            r = c2 < 0 ? Region::S41 : c2 == 0 ? Region::L41 : Region::S42;
        }
    } else if (ck < 0) {
        if (ca < 0) r = Region::P2;
        else if (ca == 0) r = Region::S3;
        else {
            const int c1 = vs(t.alpha1, "alpha1");
            if (c1 < 0) r = Region::P4;
            else if (c1 == 0) r = Region::S5;
            else if (p.sigma <= *t.sigma2) r = Region::P51;
            else {
                const int c2 = vs(t.alpha2, "alpha2");
                r = c2 < 0 ? Region::P52 : c2 == 0 ? Region::S51 : Region::P51;
            }
        }
    } else {
        // Order alpha2 < 1/(sigma k) holds for k >= k3 and for sigma < sigma1.
        bool alpha2_below = p.k >= t.k3;
        int cs1 = -1;
        if (!alpha2_below) {
            cs1 = cmp_band(p.sigma, *t.sigma1, band);
            alpha2_below = cs1 < 0;
        }
        if (p.k >= t.k2) {
            r = ca < 0 ? Region::P11 : ca == 0 ? Region::S21 : Region::P31;
        } else if (alpha2_below) {
            if (ca < 0) {
                const int c2 = vs(t.alpha2, "alpha2");
                r = c2 < 0 ? Region::P12 : c2 == 0 ? Region::S11 : Region::P11;
            } else {
                r = ca == 0 ? Region::S21 : Region::P31;
            }
        } else if (cs1 > 0) {
            if (ca < 0) r = Region::P12;
            else if (ca == 0) r = Region::S22;
            else {
                const int c2 = vs(t.alpha2, "alpha2");
                r = c2 < 0 ? Region::P32 : c2 == 0 ? Region::S31 : Region::P31;
            }
        } else {
            // sigma = sigma1: alpha2 coincides with 1/(sigma k).
            r = ca < 0 ? Region::P12 : ca == 0 ? Region::L21 : Region::P31;
        }
    }
    return {r, is_boundary_cell(r)};
}

std::vector<Equilibrium> equilibria(const Params& p, double tol) {
    p.validate();
    const double h = p.h, k = p.k, s = p.sigma, a = p.alpha;
    std::vector<Equilibrium> out;

    const Mat2 j0 = jacobian(p, {0.0, 0.0});
    Equilibrium e0{0.0, 0.0, j0[0][0] + j0[1][1], j0[0][0] * j0[1][1] - j0[0][1] * j0[1][0],
                   Kind::Saddle, Role::E0};
    out.push_back(e0);

    const Mat2 jk = jacobian(p, {k, 0.0});
    Equilibrium ek{k, 0.0, jk[0][0] + jk[1][1], jk[0][0] * jk[1][1], Kind::Saddle, Role::Ek};
    const double j22_scale = k * (std::abs(k * (h - 1.0)) + 1.0);
    if (std::abs(jk[1][1]) <= 1e-10 * j22_scale) {
        ek.det = 0.0;
        ek.kind = Kind::DegenerateSaddleNode;
    } else {
        ek.kind = kind_from(ek.trace, ek.det, 0.0);
    }
    out.push_back(ek);
    if (h >= 1.0) return out;

    const Poly F = equilibrium_poly(p);
    const Rat K(k);
    auto roots = sturm_isolate(F, {Rat(0), K}, Rat(K / (1 << 20)));
    std::vector<double> xs;
    const Rat width = K * Rat(std::max(tol, 1e-300)) / 10000;
    for (const auto& iv : roots) {
        if (iv.exact && (sgn(iv.lo) == 0 || iv.lo == K)) continue;
        const double x = refine_root(F, iv, width).midpoint();
        // A root at x = k coincides with Ek and is not an interior equilibrium.
        if (k - x <= 1e-12 * k || x <= 0.0) continue;
        xs.push_back(x);
    }

    const double as = a * s;
    const double slope_scale =
        std::max({std::abs(3.0 * as * (1.0 - h)), std::abs(2.0 * as * k * (1.0 - h)), std::abs(k * (1.0 - h))});
    const double dtol = 1e-7 * slope_scale;
    const double xv = x_star_of(k, s, a);
    bool merged = false;
    for (double x : xs)
        if (std::abs(equilibrium_poly_slope(p, x)) <= dtol) merged = true;
    if (xs.empty() && xv > 0.0 && xv < k) {
        const double curv = std::abs(2.0 * as * (1.0 - h) * (k - 3.0 * xv));
        const double fv = equilibrium_poly_value(p, xv);
        if (curv > 0.0 && std::abs(fv) <= dtol * dtol / (2.0 * curv)) merged = true;
    }

    auto trace_scale = [&](double x) {
        return (std::abs((-h * h * k + 2.0 * h * k - h * s - k - s) * x) + std::abs(k * (h * s - h + 1.0))) /
               (1.0 - h);
    };
    auto interior = [&](double x, Role role) {
        Equilibrium e;
        e.x = x;
        e.y = nullcline_y(p, x);
        e.role = role;
        TraceDet td = trace_det_closed_form(p, x);
        e.trace = td.trace;
        e.det = td.det;
        return e;
    };

    if (merged) {
        Equilibrium e = interior(xv, Role::Estar);
        e.det = 0.0;
        e.kind = std::abs(e.trace) <= 1e-10 * trace_scale(xv) ? Kind::Cusp : Kind::DegenerateSaddleNode;
        out.push_back(e);
        return out;
    }
    for (double x : xs) {
        const Role role = equilibrium_poly_slope(p, x) > 0.0 ? Role::E1 : Role::E2;
        Equilibrium e = interior(x, role);
        e.kind = kind_from(e.trace, e.det, 1e-10 * trace_scale(x));
        out.push_back(e);
    }
    return out;
}

std::vector<CensusEntry> predicted_census(Region label) {
    using R = Region;
    using C = KindClass;
    std::vector<CensusEntry> c{{Role::E0, C::Saddle}};
    auto add = [&](Role r, C k) { c.push_back({r, k}); };
    switch (label) {
    case R::P11: case R::S21: case R::P31:
        add(Role::Ek, C::Saddle); add(Role::E1, C::UnstableFocusOrNode); break;
    case R::S11: case R::L21: case R::S31:
        add(Role::Ek, C::Saddle); add(Role::E1, C::CenterType); break;
    case R::P12: case R::S22: case R::P32:
        add(Role::Ek, C::Saddle); add(Role::E1, C::StableFocusOrNode); break;
    case R::S1: case R::L1:
        add(Role::Ek, C::Degenerate); break;
    case R::P2: case R::S3: case R::P4: case R::H_GE_1:
        add(Role::Ek, C::StableNode); break;
    case R::S41:
        add(Role::Ek, C::Degenerate); add(Role::E1, C::StableFocusOrNode); break;
    case R::L41:
        add(Role::Ek, C::Degenerate); add(Role::E1, C::CenterType); break;
    case R::S42:
        add(Role::Ek, C::Degenerate); add(Role::E1, C::UnstableFocusOrNode); break;
    case R::P51:
        add(Role::Ek, C::StableNode); add(Role::E1, C::UnstableFocusOrNode); add(Role::E2, C::Saddle); break;
    case R::S51:
        add(Role::Ek, C::StableNode); add(Role::E1, C::CenterType); add(Role::E2, C::Saddle); break;
    case R::P52:
        add(Role::Ek, C::StableNode); add(Role::E1, C::StableFocusOrNode); add(Role::E2, C::Saddle); break;
    case R::S5:
        add(Role::Ek, C::StableNode); add(Role::Estar, C::Degenerate); break;
    default:
        throw std::invalid_argument("predicted_census: unknown label");
    }
    return c;
}

CensusReport verify_census(const Params& p, double band) {
    CensusReport rep;
    rep.label = classify(p, band);
    rep.advisory = rep.label.boundary;
    rep.predicted = predicted_census(rep.label.cell);
    rep.computed = equilibria(p);
    rep.match = rep.predicted.size() == rep.computed.size();
    for (size_t i = 0; rep.match && i < rep.predicted.size(); ++i)
        rep.match = rep.predicted[i].role == rep.computed[i].role &&
                    kind_in_class(rep.computed[i].kind, rep.predicted[i].kind);
    return rep;
}

nlohmann::json CensusReport::to_json() const {
    nlohmann::json pred = nlohmann::json::array(), comp = nlohmann::json::array();
    for (const auto& e : predicted) pred.push_back({{"role", role_name(e.role)}, {"kind", kind_class_name(e.kind)}});
    for (const auto& e : computed) comp.push_back(e.to_json());
    return {{"label", label.name()}, {"boundary", label.boundary}, {"predicted", pred},
            {"computed", comp}, {"match", match}, {"advisory", advisory}};
}

} // namespace facilidyn
