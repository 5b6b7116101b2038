#include "facilidyn/verify.hpp"

#include "facilidyn/localform.hpp"
#include "facilidyn/model.hpp"
#include "facilidyn/poly.hpp"
#include "facilidyn/reference_forms.hpp"
#include "facilidyn/regions.hpp"
#include "facilidyn/simulate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

namespace facilidyn {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double v, int digits = 10) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

CheckResult timed(int id, std::string name, double budget, const std::function<void(CheckResult&)>& body) {
    CheckResult r;
    r.id = id;
    r.name = std::move(name);
    r.budget = budget;
    const auto t0 = Clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.pass = false;
        r.measured += std::string(r.measured.empty() ? "" : "; ") + "exception: " + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (budget > 0.0 && r.seconds > budget) {
        r.pass = false;
        r.measured += "; over time budget";
    }
    return r;
}

const Equilibrium* find(const std::vector<Equilibrium>& eqs, Role role) {
    for (const auto& e : eqs)
        if (e.role == role) return &e;
    return nullptr;
}

int interior_count(const std::vector<Equilibrium>& eqs) {
    int n = 0;
    for (const auto& e : eqs)
        if (e.role == Role::E1 || e.role == Role::E2 || e.role == Role::Estar) ++n;
    return n;
}

bool has_stable_cycle(const Params& p, const CycleSearchOptions& opt = {}) {
    const auto c = find_limit_cycle(p, std::nullopt, opt);
    return c && c->stability == Stability::Stable;
}

Rat rat(long long num, long long den) {
    Rat r(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    r.canonicalize();
    return r;
}

Poly from_ll(const long long* c, size_t n) {
    std::vector<Rat> v;
    for (size_t i = 0; i < n; ++i) v.emplace_back(mpz_class(std::to_string(c[i])));
    return Poly(v);
}

template <size_t N>
Poly even_poly(const std::array<Rat, N>& c) {
    std::vector<Rat> v(2 * N - 1, Rat(0));
    for (size_t i = 0; i < N; ++i) v[2 * i] = c[i];
    return Poly(v);
}

// Distinct roots of p in the open interval (lo, hi) by Sturm variations.
int roots_in(const Poly& p, const Rat& lo, const Rat& hi) {
    const auto chain = sturm_chain(squarefree(p));
    int n = sign_variations(chain, lo) - sign_variations(chain, hi);
    if (p.sign_at(hi) == 0) --n;
    return n;
}

Poly poly_h(std::initializer_list<long long> asc) {
    std::vector<Rat> v;
    for (long long c : asc) v.emplace_back(mpz_class(std::to_string(c)));
    return Poly(v);
}

// Factorized discriminant sequence of the substituted g2 as polynomials in h.
std::vector<Poly> factored_g2_minors() {
    const Poly hm2 = poly_h({-2, 1}), hp2 = poly_h({2, 1}), hp1 = poly_h({1, 1});
    const Poly twomh = poly_h({2, -1}), hm5 = poly_h({-5, 1}), tm1 = poly_h({-1, 2});
    const Poly cub = poly_h({-49, -14, 12, 1});
    const Poly D31 = from_ll(reference::kD31, std::size(reference::kD31));
    const Poly D41 = from_ll(reference::kD41, std::size(reference::kD41));
    const Poly D51 = from_ll(reference::kD51, std::size(reference::kD51));
    const Poly D61 = from_ll(reference::kD61, std::size(reference::kD61));
    const Poly D71 = from_ll(reference::kD71, std::size(reference::kD71));
    const Poly D1 = hm2.pow(2) * hp2.pow(2) * hp1.pow(8);
    const Poly D2 = twomh * hp2 * hp1.pow(7) * cub * D1;
    const Poly D3 = hp1.pow(4) * D2 * D31;
    const Poly D4 = hm2 * hp2 * hp1.pow(12) * D1 * D31 * D41;
    const Poly D5 = hm2 * hp2 * hp1.pow(12) * D1 * D41 * D51;
    const Poly D6 = twomh * hp2 * hp1.pow(12) * D1 * D61 * D51;
    const Poly D7 = tm1.pow(2) * twomh * hp2 * hp1.pow(12) * D1 * D61 * D71;
    const Poly D8 = hm5 * hm2 * hp2 * tm1.pow(4) * hp1.pow(12) * D1 * D71.pow(2);
    return {D1, D2, D3, D4, D5, D6, D7, D8};
}

Poly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> deg(0, 8), coef(-9, 9), den(1, 4), kind(0, 1), mult(1, 3), pick(0, 2);
    if (kind(rng) == 0) {
        const int d = deg(rng);
        std::vector<Rat> c;
        for (int i = 0; i <= d; ++i) c.push_back(rat(coef(rng), den(rng)));
        while (c.back() == 0) c.back() = rat(coef(rng), den(rng));
        return Poly(c);
    }
    // Product of small factors, with repeated roots.
    Poly p = Poly::constant(rat(std::max(1, std::abs(coef(rng))), den(rng)));
    while (true) {
        Poly f;
        const int which = pick(rng);
        if (which == 0) f = Poly{-rat(coef(rng), den(rng)), Rat(1)};
        else if (which == 1) f = Poly{rat(std::abs(coef(rng)) + 1, den(rng)), Rat(0), Rat(1)};
        else f = Poly{-rat(std::abs(coef(rng)) + 1, den(rng)), Rat(0), Rat(1)};
        const int m = mult(rng);
        if (p.degree() + m * f.degree() > 8) break;
        p *= f.pow(m);
    }
    return p;
}

} // namespace

nlohmann::json CheckResult::to_json() const {
    return {{"id", id},           {"name", name},       {"pass", pass},    {"measured", measured},
            {"expected", expected}, {"seconds", seconds}, {"budget", budget}};
}

CheckResult check_constants() {
    return timed(1, "cusp constants at h=0.5, k=1", 1.0, [](CheckResult& r) {
        const BTCusp c = bt_cusp(0.5, 1.0);
        r.measured = "sigma2=" + fmt(c.sigma2) + " alpha*=" + fmt(c.alpha_star) + " E*=(" + fmt(c.x_star) + ", " +
                     fmt(c.y_star) + ")";
        r.expected = "sigma2=0.55+-0.005 alpha*=15.94+-0.01 E*=(0.72, 0.11)+-0.005";
        r.pass = std::abs(c.sigma2 - 0.55) <= 0.005 && std::abs(c.alpha_star - 15.94) <= 0.01 &&
                 std::abs(c.x_star - 0.72) <= 0.005 && std::abs(c.y_star - 0.11) <= 0.005;
    });
}

CheckResult check_fig3_quartet() {
    return timed(2, "alpha quartet at h=0.5, k=1, sigma=0.62", 30.0, [](CheckResult& r) {
        bool ok = true;
        std::ostringstream m;
        for (double a : {14.2, 14.3, 14.42, 14.55}) {
            const Params p{0.5, 1.0, 0.62, a};
            const CensusReport cr = verify_census(p);
            const auto c = find_limit_cycle(p);
            const bool stable_cycle = c && c->stability == Stability::Stable;
            const Equilibrium* e1 = find(cr.computed, Role::E1);
            const Equilibrium* e2 = find(cr.computed, Role::E2);
            m << "alpha=" << a << ": " << cr.label.name() << " interior=" << interior_count(cr.computed);
            if (e1) m << " E1=" << kind_name(e1->kind);
            if (e2) m << " E2=" << kind_name(e2->kind);
            m << " cycle=" << (c ? (stable_cycle ? "stable" : "unstable") : "none") << "; ";
            bool row = cr.match;
            if (a == 14.2) row = row && interior_count(cr.computed) == 0 && !c;
            if (a == 14.3)
                row = row && e1 && e1->kind == Kind::StableFocus && e2 && e2->kind == Kind::Saddle && !c;
            if (a == 14.42) row = row && e1 && e1->kind == Kind::UnstableFocus && stable_cycle;
            if (a == 14.55) row = row && e1 && e1->kind == Kind::UnstableFocus && !c;
            ok = ok && row;
        }
        r.measured = m.str();
        r.expected = "14.2: no interior; 14.3: stable focus E1, saddle E2, no cycle; 14.42: unstable focus E1, "
                     "stable cycle; 14.55: unstable focus E1, no cycle; census matches";
        r.pass = ok;
    });
}

CheckResult check_fig4_cycle() {
    return timed(3, "cycle at h=0.5, k=5.5, sigma=1, alpha=0.1", 20.0, [](CheckResult& r) {
        const Params p{0.5, 5.5, 1.0, 0.1};
        const CensusReport cr = verify_census(p);
        const Equilibrium* e0 = find(cr.computed, Role::E0);
        const Equilibrium* ek = find(cr.computed, Role::Ek);
        const Equilibrium* e1 = find(cr.computed, Role::E1);
        const bool kinds = e0 && e0->kind == Kind::Saddle && ek && ek->kind == Kind::Saddle && e1 &&
                           (e1->kind == Kind::UnstableFocus || e1->kind == Kind::UnstableNode);
        const auto c = find_limit_cycle(p);
        r.expected = "E0 saddle, Ek saddle, E1 unstable focus-or-node, stable cycle, inside/outside seeds within 1e-3";
        if (!kinds || !c || c->stability != Stability::Stable) {
            r.measured = "census or cycle missing: " + cr.label.name();
            r.pass = false;
            return;
        }
        const int n = 4000;
        const State on = c->section.point(c->section_s);
        const auto ref = sample_trajectory(p, on, 0.0, c->period, n);
        const State inside{e1->x + 1e-3, e1->y};
        const State outside = c->section.point(c->section_s + 0.5 * (c->section.s_max - c->section_s));
        const auto a = sample_trajectory(p, inside, 500.0, c->period, n);
        const auto b = sample_trajectory(p, outside, 500.0, c->period, n);
        const double dab = hausdorff(a, b, true), da = hausdorff(a, ref, true), db = hausdorff(b, ref, true);
        r.measured = "E1=" + kind_name(e1->kind) + " period=" + fmt(c->period) + " amplitude=" + fmt(c->amplitude) +
                     " d(in,out)=" + fmt(dab, 3) + " d(in,cycle)=" + fmt(da, 3) + " d(out,cycle)=" + fmt(db, 3);
        r.pass = cr.match && dab <= 1e-3 && da <= 1e-3 && db <= 1e-3;
    });
}

CheckResult check_census_property(int draws, std::uint64_t seed) {
    return timed(4, "equilibrium census on random draws", 60.0, [&](CheckResult& r) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> H(0.05, 0.95), K(0.1, 10.0), S(0.1, 5.0), A(0.1, 30.0);
        int tested = 0, matched = 0, skipped = 0;
        std::string first_fail;
        while (tested < draws) {
            const Params p{H(rng), K(rng), S(rng), A(rng)};
            const CensusReport cr = verify_census(p);
            if (cr.advisory) {
                ++skipped;
                continue;
            }
            ++tested;
            if (cr.match) ++matched;
            else if (first_fail.empty()) first_fail = " first mismatch " + p.to_json().dump();
        }
        r.measured = std::to_string(matched) + "/" + std::to_string(tested) + " matched, " + std::to_string(skipped) +
                     " band draws skipped" + first_fail;
        r.expected = std::to_string(draws) + "/" + std::to_string(draws);
        r.pass = matched == tested;
    });
}

CheckResult check_root_counting(int draws, std::uint64_t seed) {
    return timed(5, "discriminant-sequence root counting", 60.0, [&](CheckResult& r) {
        std::mt19937_64 rng(seed ^ 0x5157u);
        int agree = 0;
        for (int i = 0; i < draws; ++i) {
            const Poly p = random_poly(rng);
            if (count_distinct_real_roots(p) == count_roots_sturm(p)) ++agree;
        }
        std::ostringstream m;
        m << "random agree " << agree << "/" << draws;
        bool ok = agree == draws;

        // Substituted g2 and zeta1: no real roots, and the sign table.
        int table_ok = 0, g2_zero = 0, z1_zero = 0;
        for (const auto& row : reference::kG2SignTable) {
            const Rat h = rat(row.num, row.den);
            const Poly g = even_poly(reference::g2_substituted(h));
            const Poly z = even_poly(reference::zeta1_substituted(h));
            const SignList sl = sign_list(discriminant_sequence(g));
            if (std::equal(sl.signs.begin(), sl.signs.end(), row.signs.begin(), row.signs.end())) ++table_ok;
            if (count_distinct_real_roots(g) == 0 && count_roots_sturm(g) == 0) ++g2_zero;
            if (count_distinct_real_roots(z) == 0 && count_roots_sturm(z) == 0) ++z1_zero;
        }
        const int rows = static_cast<int>(std::size(reference::kG2SignTable));
        m << "; sign table " << table_ok << "/" << rows << "; g2 rootless " << g2_zero << "/" << rows
          << "; zeta1 rootless " << z1_zero << "/" << rows;
        ok = ok && table_ok == rows && g2_zero == rows && z1_zero == rows;

        // The factorized minors agree with the computed ones up to a positive factor.
        const auto fac = factored_g2_minors();
        int ratio_ok = 0, ratio_total = 0;
        for (const auto& row : reference::kG2SignTable) {
            const Rat h = rat(row.num, row.den);
            const auto seq = discriminant_sequence(even_poly(reference::g2_substituted(h)));
            for (size_t i = 0; i < fac.size() && i < seq.size(); ++i) {
                ++ratio_total;
                if (sgn(seq[i]) == fac[i].sign_at(h)) ++ratio_ok;
            }
        }
        m << "; factorized minor signs " << ratio_ok << "/" << ratio_total;
        ok = ok && ratio_ok == ratio_total && ratio_total == 8 * rows;

        auto bracket_check = [&](const char* name, const long long* c, size_t n, const reference::Bracket* br,
                                 size_t nb) {
            const Poly d = from_ll(c, n);
            const int total = roots_in(d, Rat(0), Rat(1));
            int inside = 0;
            for (size_t i = 0; i < nb; ++i)
                inside += roots_in(d, rat(br[i].lo_num, br[i].lo_den), rat(br[i].hi_num, br[i].hi_den)) == 1;
            m << "; " << name << " roots in (0,1)=" << total << " bracketed=" << inside;
            ok = ok && total == static_cast<int>(nb) && inside == static_cast<int>(nb);
        };
        using namespace reference;
        bracket_check("D31", kD31, std::size(kD31), kD31Brackets, std::size(kD31Brackets));
        bracket_check("D51", kD51, std::size(kD51), kD51Brackets, std::size(kD51Brackets));
        bracket_check("D61", kD61, std::size(kD61), kD61Brackets, std::size(kD61Brackets));
        bracket_check("D71", kD71, std::size(kD71), kD71Brackets, std::size(kD71Brackets));
        r.measured = m.str();
        r.expected = "all agree; g2 and zeta1 rootless; D31 one root, D51/D61/D71 three roots, each in its bracket";
        r.pass = ok;
    });
}

CheckResult check_trace_det_identity(int draws, std::uint64_t seed) {
    return timed(6, "closed-form trace and determinant", 0.0, [&](CheckResult& r) {
        std::mt19937_64 rng(seed ^ 0x7ace7u);
        std::uniform_real_distribution<double> H(0.05, 0.95), K(0.1, 10.0), S(0.1, 5.0), A(0.1, 30.0);
        using C = std::complex<double>;
        int tested = 0, attempts = 0;
        double worst = 0.0;
        while (tested < draws && attempts < 200000) {
            ++attempts;
            const Params p{H(rng), K(rng), S(rng), A(rng)};
            for (const auto& e : equilibria(p)) {
                if (e.role != Role::E1 && e.role != Role::E2) continue;
                if (tested >= draws) break;
                const double eps = 1e-30;
                const C h(p.h), k(p.k), s(p.sigma), a(p.alpha);
                const auto fx = field<C>(h, k, s, a, C(e.x, eps), C(e.y));
                const auto fy = field<C>(h, k, s, a, C(e.x), C(e.y, eps));
                const double j00 = fx[0].imag() / eps, j10 = fx[1].imag() / eps;
                const double j01 = fy[0].imag() / eps, j11 = fy[1].imag() / eps;
                const TraceDet td = trace_det_closed_form(p, e.x);
                const double et = std::abs(td.trace - (j00 + j11)) / (std::abs(j00) + std::abs(j11));
                const double ed = std::abs(td.det - (j00 * j11 - j01 * j10)) /
                                  (std::abs(j00 * j11) + std::abs(j01 * j10));
                worst = std::max({worst, et, ed});
                ++tested;
            }
        }
        r.measured = "max relative error " + fmt(worst, 3) + " over " + std::to_string(tested) + " equilibria";
        r.expected = "<= 1e-8 over " + std::to_string(draws);
        r.pass = tested == draws && worst <= 1e-8;
    });
}

CheckResult check_hopf_onset() {
    return timed(7, "Hopf onset at h=0.5, k=1, sigma=0.62", 0.0, [](CheckResult& r) {
        const double h = 0.5, k = 1.0, s = 0.62;
        const double a2 = alpha2_of(h, k, s);
        double lo = a2 * (1.0 - 2e-3), hi = a2 * (1.0 + 2e-3);
        const bool ends = !has_stable_cycle({h, k, s, lo}) && has_stable_cycle({h, k, s, hi});
        while (ends && hi - lo > 1e-4) {
            const double mid = 0.5 * (lo + hi);
            (has_stable_cycle({h, k, s, mid}) ? hi : lo) = mid;
        }
        const double onset = 0.5 * (lo + hi);
        const double rel = std::abs(onset - a2) / a2;
        std::vector<double> dx, dy;
        for (double d : {1e-4, 4e-4, 1.6e-3}) {
            const auto c = find_limit_cycle({h, k, s, a2 * (1.0 + d)});
            if (!c) break;
            dx.push_back(a2 * d);
            dy.push_back(c->amplitude * c->amplitude);
        }
        double r2 = 0.0;
        if (dx.size() == 3) {
            const double mx = (dx[0] + dx[1] + dx[2]) / 3.0, my = (dy[0] + dy[1] + dy[2]) / 3.0;
            double sxy = 0.0, sxx = 0.0, syy = 0.0;
            for (int i = 0; i < 3; ++i) {
                sxy += (dx[i] - mx) * (dy[i] - my);
                sxx += (dx[i] - mx) * (dx[i] - mx);
                syy += (dy[i] - my) * (dy[i] - my);
            }
            r2 = sxy * sxy / (sxx * syy);
        }
        const HopfData hd = hopf(h, k, s);
        r.measured = "alpha2=" + fmt(a2) + " onset=" + fmt(onset) + " rel=" + fmt(rel, 3) + " R2=" + fmt(r2, 8) +
                     " focal_sign=" + std::to_string(hd.focal_sign);
        r.expected = "rel <= 5e-4, R2 > 0.99, focal_sign = -1";
        r.pass = ends && rel <= 5e-4 && r2 > 0.99 && hd.focal_sign == -1;
    });
}

CheckResult check_bt_nondegeneracy() {
    return timed(8, "cusp nondegeneracy at h=0.5, k=1", 0.0, [](CheckResult& r) {
        const auto [b1, b2] = bt_unfolding(0.5, 1.0, 0.0, 0.0);
        const MuCoefficients mu = bt_mu(0.5, 1.0);
        const BTCusp c = bt_cusp(0.5, 1.0);
        r.measured = "beta=(" + fmt(b1, 3) + ", " + fmt(b2, 3) + ") det_normalized=" + fmt(mu.det_normalized, 6) +
                     " B20=" + fmt(c.cusp_B20, 8) + " 2A20+B11=" + fmt(c.cusp_2A20_B11, 8);
        r.expected = "|beta| <= 1e-8, |det| > 1e-6, B20 < 0, 2A20+B11 > 0";
        r.pass = std::abs(b1) <= 1e-8 && std::abs(b2) <= 1e-8 && std::abs(mu.det_normalized) > 1e-6 &&
                 c.cusp_B20 < 0.0 && c.cusp_2A20_B11 > 0.0;
    });
}

CheckResult check_homoclinic_and_sweep(unsigned threads) {
    return timed(9, "homoclinic location and region sweep at h=0.5, k=1", 300.0, [threads](CheckResult& r) {
        const double h = 0.5, k = 1.0;
        const BTCusp cusp = bt_cusp(h, k);
        const MuCoefficients mu = bt_mu(h, k);
        const double s = cusp.sigma2 + 0.05;
        const double a2 = alpha2_of(h, k, s);
        const double a3 = alpha3_of(mu, cusp.alpha_star, cusp.sigma2, s);
        const double width = a3 - a2;
        const auto hom = find_homoclinic(h, k, s, a2 * (1.0 + 1e-3), a3 + width);
        std::ostringstream m;
        m << "sigma=" << fmt(s) << " alpha2=" << fmt(a2) << " alpha3=" << fmt(a3);
        bool ok = width > 0.0 && static_cast<bool>(hom);
        if (hom) {
            m << " alpha_hom=" << fmt(hom->alpha);
            ok = ok && hom->alpha >= a2 && hom->alpha <= a3 + 0.2 * width;
        }

        SweepGrid g;
        g.h = h;
        g.k = k;
        g.sigma_min = 0.5;
        g.sigma_max = 0.7;
        g.n_sigma = 11;
        g.alpha_min = 13.0;
        g.alpha_max = 17.0;
        g.n_alpha = 81;
        const auto pts = sweep(g, {}, threads);
        int seen[5] = {0, 0, 0, 0, 0};
        int wrong = 0;
        std::string first_wrong;
        for (int i = 0; i < g.n_sigma; ++i) {
            const double sig = pts[static_cast<size_t>(i) * g.n_alpha].params.sigma;
            const double a1 = alpha1_of(h, k, sig);
            const double ah = alpha2_of(h, k, sig);
            const bool above = sig > cusp.sigma2;
            int last = 0;
            for (int j = 0; j < g.n_alpha; ++j) {
                const SweepPoint& sp = pts[static_cast<size_t>(i) * g.n_alpha + j];
                const double a = sp.params.alpha;
                const int reg = static_cast<int>(sp.observed);
                seen[reg]++;
                bool good = reg != static_cast<int>(PortraitRegion::Other) && reg >= last;
                const bool near = std::abs(a - a1) <= 2e-3 * a1 || (above && std::abs(a - ah) <= 2e-3 * ah);
                if (!near) {
                    if (a < a1) good = good && sp.observed == PortraitRegion::R1;
                    else if (!above) good = good && sp.observed == PortraitRegion::R4;
                    else if (a < ah) good = good && sp.observed == PortraitRegion::R2;
                    else good = good && (sp.observed == PortraitRegion::R3 || sp.observed == PortraitRegion::R4);
                }
                if (!good) {
                    ++wrong;
                    if (first_wrong.empty())
                        first_wrong = " first off-pattern sigma=" + fmt(sig) + " alpha=" + fmt(a) +
                                      " region=" + portrait_region_name(sp.observed);
                }
                last = std::max(last, reg);
            }
        }
        const bool all_four = seen[0] && seen[1] && seen[2] && seen[3];
        m << "; sweep R1/R2/R3/R4/Other=" << seen[0] << "/" << seen[1] << "/" << seen[2] << "/" << seen[3] << "/"
          << seen[4] << " off-pattern=" << wrong << first_wrong;
        ok = ok && wrong == 0 && all_four;
        r.measured = m.str();
        r.expected = "alpha2 <= alpha_hom <= alpha3 + 0.2(alpha3 - alpha2); regions ordered R1 < R2 < R3 < R4 per "
                     "column, only R1/R4 below sigma2, all four present";
        r.pass = ok;
    });
}

CheckResult check_reduction_forms() {
    return timed(10, "reduction coefficients against closed forms at h=0.5, k=1", 0.0, [](CheckResult& r) {
        const double h = 0.5, k = 1.0, s = 0.62;
        const CenterManifoldReduction red = estar_sn_reduction(h, k, s);
        const auto ref = reference::sn_taylor_terms(h, k, s, red.coeffs.at("alpha1"), red.coeffs.at("x_star"));
        double worst = 0.0;
        std::string worst_name;
        auto cmp = [&](const std::string& name, double got, double want) {
            const double e = std::abs(got - want) / std::max(std::abs(want), 1e-12);
            if (e > worst) {
                worst = e;
                worst_name = name;
            }
        };
        for (const auto& [name, want] : ref) cmp(name, red.coeffs.count(name) ? red.coeffs.at(name) : 0.0, want);
        const auto c = reference::sn_reduced_terms(ref);
        cmp("c20", red.coeffs.at("c20"), c[0]);
        cmp("c11", red.coeffs.at("c11"), c[1]);
        cmp("c02", red.coeffs.at("c02"), c[2]);
        const MuCoefficients mu = bt_mu(h, k);
        const auto mref = reference::bt_mu_terms(h, k, sigma2_of(h, k));
        cmp("mu110", mu.mu110, mref.at("mu110"));
        cmp("mu101", mu.mu101, mref.at("mu101"));
        cmp("mu201", mu.mu201, mref.at("mu201"));
        r.measured = "max relative error " + fmt(worst, 3) + (worst_name.empty() ? "" : " at " + worst_name) +
                     " over " + std::to_string(ref.size() + 6) + " coefficients";
        r.expected = "<= 1e-6";
        r.pass = worst <= 1e-6;
    });
}

std::vector<CheckResult> run_acceptance(const VerifyOptions& opt) {
    if (opt.quick) return {check_census_property(100, opt.seed)};
    return {check_constants(),
            check_fig3_quartet(),
            check_fig4_cycle(),
            check_census_property(opt.census_draws, opt.seed),
            check_root_counting(opt.poly_draws, opt.seed),
            check_trace_det_identity(opt.jacobian_draws, opt.seed),
            check_hopf_onset(),
            check_bt_nondegeneracy(),
            check_homoclinic_and_sweep(opt.threads),
            check_reduction_forms()};
}

nlohmann::json acceptance_report(const std::vector<CheckResult>& results) {
    nlohmann::json checks = nlohmann::json::array();
    bool all = true;
    double total = 0.0;
    for (const auto& r : results) {
        checks.push_back(r.to_json());
        all = all && r.pass;
        total += r.seconds;
    }
    return {{"pass", all}, {"seconds", total}, {"checks", checks}};
}

} // namespace facilidyn
