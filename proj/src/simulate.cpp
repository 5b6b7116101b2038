#include "facilidyn/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <boost/math/tools/toms748_solve.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace facilidyn {

namespace {

namespace ode = boost::numeric::odeint;
using S = std::array<double, 2>;

enum class End { Done, Stopped, Escaped, Failed };

double norm2(double a, double b) { return std::hypot(a, b); }

// Drives the dense-output Dormand-Prince pair; on_step(ta, xa, tb, xb, at) returns true to stop.
template <class OnStep>
End run(const Params& p, const State& s0, double t_end, const IntegrateOptions& opt, OnStep&& on_step,
        std::string& diag) {
    const double dir = opt.backward ? -1.0 : 1.0;
    auto sys = [&](const S& x, S& dx, double) {
        const auto f = field(p.h, p.k, p.sigma, p.alpha, x[0], x[1]);
        dx = {dir * f[0], dir * f[1]};
    };
    auto stepper = ode::make_dense_output(opt.atol, opt.rtol, ode::runge_kutta_dopri5<S>());
    S xa{s0.x, s0.y};
    double ta = 0.0;
    stepper.initialize(xa, 0.0, std::min(1e-3, t_end / 16.0));
    size_t steps = 0;
    while (ta < t_end) {
        if (++steps > opt.max_steps) {
            diag = "step limit reached";
            return End::Failed;
        }
        std::pair<double, double> iv;
        try {
            iv = stepper.do_step(sys);
        } catch (const std::exception& e) {
            diag = std::string("step size underflow: ") + e.what();
            return End::Failed;
        }
        double tb = iv.second;
        S xb = stepper.current_state();
        if (tb > t_end) {
            tb = t_end;
            stepper.calc_state(tb, xb);
        }
        if (!std::isfinite(xb[0]) || !std::isfinite(xb[1])) {
            diag = "non-finite state";
            return End::Escaped;
        }
        bool clipped = false;
        for (double& c : xb)
            if (c < 0.0) {
                if (c < -opt.atol) diag = "negative excursion beyond atol";
                c = 0.0;
                clipped = true;
            }
        auto at = [&](double t) {
            S out;
            stepper.calc_state(t, out);
            return out;
        };
        if (on_step(ta, xa, tb, xb, at)) return End::Stopped;
        if (std::abs(xb[0]) > opt.escape_bound || std::abs(xb[1]) > opt.escape_bound) {
            diag = "left the bounded domain";
            return End::Escaped;
        }
        if (clipped) stepper.initialize(xb, tb, stepper.current_time_step());
        if (stepper.current_time_step() < 1e-14 * std::max(1.0, std::abs(tb))) {
            diag = "step size underflow";
            return End::Failed;
        }
        xa = xb;
        ta = tb;
    }
    return End::Done;
}

// Root of g(at(t)) on [ta, tb] with g(ta) and g(tb) of opposite sign.
template <class At, class G>
double locate(At& at, G&& g, double ta, double tb) {
    auto fn = [&](double t) { return g(at(t)); };
    const double fa = fn(ta), fb = fn(tb);
    if (fa == 0.0) return ta;
    if (fb == 0.0) return tb;
    boost::uintmax_t iters = 200;
    auto r = boost::math::tools::toms748_solve(fn, ta, tb, fa, fb, boost::math::tools::eps_tolerance<double>(52),
                                               iters);
    return 0.5 * (r.first + r.second);
}

struct RayHit {
    bool hit = false;
    double s = 0.0, time = 0.0;
    State at;
};

// First crossing of the ray c + s d (s > 0); orientation 0 accepts both directions.
RayHit first_ray_crossing(const Params& p, const State& start, const IntegrateOptions& opt, const State& c,
                          const Vec2& d, int orientation, double horizon, bool from_section = false) {
    const Vec2 n{-d[1], d[0]};
    const double o = orientation == 0 ? 1.0 : static_cast<double>(orientation);
    auto g = [&](const S& x) { return o * (n[0] * (x[0] - c.x) + n[1] * (x[1] - c.y)); };
    auto proj = [&](const S& x) { return d[0] * (x[0] - c.x) + d[1] * (x[1] - c.y); };
    RayHit out;
    std::string diag;
    const double stall = 1e-14 * std::max(1.0, p.k);
    // A start on the section counts only after the orbit has passed to the back side.
    bool armed = !from_section;
    run(p, start, horizon, opt,
        [&](double ta, const S& xa, double tb, const S& xb, auto& at) {
            const double ga = g(xa), gb = g(xb);
            if (!armed) {
                if (gb < 0.0 && proj(xb) < 0.0) armed = true;
                return false;
            }
            const bool cross = orientation == 0 ? (ga < 0.0) != (gb < 0.0) : (ga < 0.0 && gb >= 0.0);
            if (cross) {
                const double t = locate(at, g, ta, tb);
                const S x = at(t);
                if (proj(x) > 0.0) {
                    out = {true, proj(x), t, {x[0], x[1]}};
                    return true;
                }
            }
            const auto f = field(p.h, p.k, p.sigma, p.alpha, xb[0], xb[1]);
            return norm2(f[0], f[1]) < stall;
        },
        diag);
    return out;
}

Vec2 eigenvector(const Mat2& J, double lambda) {
    Vec2 a{J[0][1], lambda - J[0][0]}, b{lambda - J[1][1], J[1][0]};
    Vec2 v = norm2(a[0], a[1]) >= norm2(b[0], b[1]) ? a : b;
    const double n = norm2(v[0], v[1]);
    if (n == 0.0) return {1.0, 0.0};
    return {v[0] / n, v[1] / n};
}

const Equilibrium* find_role(const std::vector<Equilibrium>& eqs, Role r) {
    for (const auto& e : eqs)
        if (e.role == r) return &e;
    return nullptr;
}

bool is_antisaddle(const Equilibrium& e) {
    return e.kind == Kind::StableFocus || e.kind == Kind::UnstableFocus || e.kind == Kind::StableNode ||
           e.kind == Kind::UnstableNode || e.kind == Kind::CenterType;
}

} // namespace

std::string OrbitClassification::name() const {
    switch (kind) {
    case OrbitClass::ConvergedTo: return "ConvergedTo(" + (role ? role_name(*role) : std::string("?")) + ")";
    case OrbitClass::PeriodicCycle: return "PeriodicCycle(" + std::to_string(cycle_id) + ")";
    case OrbitClass::EscapedDomain: return "EscapedDomain";
    case OrbitClass::Undetermined: return "Undetermined";
    }
    return "?";
}

nlohmann::json OrbitClassification::to_json() const {
    nlohmann::json j{{"name", name()}};
    if (role) j["role"] = role_name(*role);
    if (kind == OrbitClass::PeriodicCycle) j["cycle_id"] = cycle_id;
    return j;
}

nlohmann::json Orbit::to_json() const {
    nlohmann::json pts = nlohmann::json::array();
    for (size_t i = 0; i < times.size(); ++i) pts.push_back({times[i], states[i].x, states[i].y});
    return {{"params", params.to_json()},
            {"backward", options.backward},
            {"classification", classification.to_json()},
            {"diagnostic", diagnostic},
            {"points", pts}};
}

Orbit integrate(const Params& p, const State& s0, double t_end, double rtol, double atol) {
    IntegrateOptions opt;
    opt.rtol = rtol;
    opt.atol = atol;
    return integrate(p, s0, t_end, opt);
}

Orbit integrate(const Params& p, const State& s0, double t_end, const IntegrateOptions& opt) {
    p.validate();
    if (!(t_end > 0.0)) throw std::invalid_argument("integrate: t_end must be positive");
    if (!(s0.x >= 0.0 && s0.y >= 0.0) || !std::isfinite(s0.x) || !std::isfinite(s0.y))
        throw std::invalid_argument("integrate: initial state outside the closed first quadrant");
    Orbit o;
    o.params = p;
    o.options = opt;
    o.times.push_back(0.0);
    o.states.push_back(s0);
    const End end = run(p, s0, t_end, opt,
                        [&](double, const S&, double tb, const S& xb, auto&) {
                            if (tb > o.times.back()) {
                                o.times.push_back(tb);
                                o.states.push_back({xb[0], xb[1]});
                            }
                            return false;
                        },
                        o.diagnostic);
    if (end == End::Failed) {
        o.classification.kind = OrbitClass::Undetermined;
    } else if (end == End::Escaped) {
        o.classification.kind = OrbitClass::EscapedDomain;
    } else {
        try {
            o.classification = classify_orbit(o, equilibria(p), std::min(200.0, 0.4 * t_end));
        } catch (const std::exception& e) {
            o.diagnostic = e.what();
        }
    }
    return o;
}

Section focus_section(const Params& p, const Equilibrium& focus) {
    const Mat2 J = jacobian(p, {focus.x, focus.y});
    const double T = J[0][0] + J[1][1], D = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    const double disc = T * T - 4.0 * D;
    Section sec;
    sec.center = {focus.x, focus.y};
    if (disc < -1e-8 * (T * T + std::abs(D))) {
        Vec2 d{J[0][1], 0.5 * T - J[0][0]};
        const double n = norm2(d[0], d[1]);
        sec.direction = {d[0] / n, d[1] / n};
    } else {
        sec.direction = {1.0, 0.0};
        sec.horizontal_fallback = true;
    }
    const Vec2& d = sec.direction;
    const Vec2 nrm{-d[1], d[0]};
    const Vec2 Jd{J[0][0] * d[0] + J[0][1] * d[1], J[1][0] * d[0] + J[1][1] * d[1]};
    const double turn = nrm[0] * Jd[0] + nrm[1] * Jd[1];
    sec.orientation = turn >= 0.0 ? 1 : -1;
    // Exit distance from the box [0, k] x [0, y_top].
    const double y_top = 20.0 * std::max(1.0, p.sigma * p.k);
    double s_max = std::numeric_limits<double>::infinity();
    auto limit = [&](double pos, double dir, double lo, double hi) {
        if (dir > 0) s_max = std::min(s_max, (hi - pos) / dir);
        else if (dir < 0) s_max = std::min(s_max, (lo - pos) / dir);
    };
    limit(focus.x, d[0], 0.0, p.k);
    limit(focus.y, d[1], 0.0, y_top);
    sec.s_max = s_max;
    return sec;
}

ReturnResult return_map(const Params& p, const Section& sec, double s, double horizon, double rtol, double atol) {
    IntegrateOptions opt;
    opt.rtol = rtol;
    opt.atol = atol;
    const RayHit hit =
        first_ray_crossing(p, sec.point(s), opt, sec.center, sec.direction, sec.orientation, horizon, true);
    ReturnResult r;
    r.returned = hit.hit;
    r.s = hit.s;
    r.time = hit.time;
    r.end = hit.at;
    return r;
}

OrbitClassification classify_orbit(const Orbit& orbit, const std::vector<Equilibrium>& eqs, double window) {
    OrbitClassification c;
    if (orbit.states.empty()) return c;
    const double T = orbit.times.back();
    const State end = orbit.states.back();
    size_t i0 = 0;
    while (i0 + 1 < orbit.times.size() && orbit.times[i0] < T - window) ++i0;
    const State begin = orbit.states[i0];
    const double tol = 1e-6;
    const Equilibrium* best = nullptr;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& e : eqs) {
        const double d = norm2(end.x - e.x, end.y - e.y);
        if (d < best_d) {
            best_d = d;
            best = &e;
        }
    }
    if (best && best_d <= tol && best_d <= norm2(begin.x - best->x, begin.y - best->y)) {
        c.kind = OrbitClass::ConvergedTo;
        c.role = best->role;
        return c;
    }
    const Equilibrium* focus = nullptr;
    for (const auto& e : eqs)
        if ((e.role == Role::E1 || e.role == Role::Estar) && is_antisaddle(e)) focus = &e;
    if (!focus) return c;
    const Section sec = focus_section(orbit.params, *focus);
    const Vec2 n{-sec.direction[1], sec.direction[0]};
    auto g = [&](const State& x) {
        return sec.orientation * (n[0] * (x.x - sec.center.x) + n[1] * (x.y - sec.center.y));
    };
    std::vector<double> hits;
    IntegrateOptions opt = orbit.options;
    for (size_t i = i0; i + 1 < orbit.states.size(); ++i) {
        if (!(g(orbit.states[i]) < 0.0 && g(orbit.states[i + 1]) >= 0.0)) continue;
        const double dt = orbit.times[i + 1] - orbit.times[i];
        const RayHit hit = first_ray_crossing(orbit.params, orbit.states[i], opt, sec.center, sec.direction,
                                              sec.orientation, dt * (1.0 + 1e-9) + 1e-12);
        if (hit.hit) hits.push_back(hit.s);
    }
    if (hits.size() >= 3) {
        const double a = hits[hits.size() - 1], b = hits[hits.size() - 2];
        if (std::abs(a - b) < 1e-7) {
            c.kind = OrbitClass::PeriodicCycle;
            c.cycle_id = 0;
        }
    }
    return c;
}

nlohmann::json CycleRecord::to_json() const {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& s : points) pts.push_back({s.x, s.y});
    return {{"period", period},
            {"stability", stability == Stability::Stable ? "Stable" : "Unstable"},
            {"amplitude", amplitude},
            {"section_s", section_s},
            {"multiplier", multiplier},
            {"residual", residual},
            {"section", {{"center", {section.center.x, section.center.y}},
                         {"direction", section.direction},
                         {"horizontal", section.horizontal_fallback}}},
            {"points", pts}};
}

std::vector<CycleRecord> find_limit_cycles(const Params& p, std::optional<State> seed, const CycleSearchOptions& opt) {
    p.validate();
    const auto eqs = equilibria(p);
    const Equilibrium* focus = nullptr;
    for (const auto& e : eqs)
        if ((e.role == Role::E1 || e.role == Role::Estar) && is_antisaddle(e)) focus = &e;
    std::vector<CycleRecord> cycles;
    if (!focus) return cycles;
    const Section sec = focus_section(p, *focus);
    if (!(sec.s_max > 0.0) || !std::isfinite(sec.s_max)) return cycles;

    struct Sample {
        double s;
        bool returned;
        double D;
        double time;
    };
    auto sample = [&](double s) {
        const ReturnResult r = return_map(p, sec, s, opt.horizon, opt.rtol, opt.atol);
        return Sample{s, r.returned, r.returned ? r.s - s : 0.0, r.time};
    };
    std::vector<double> grid;
    const double lo = sec.s_max * 1e-6, hi = sec.s_max * (1.0 - 1e-3);
    for (int i = 0; i < opt.scan_points; ++i)
        grid.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (opt.scan_points - 1)));
    if (seed) {
        IntegrateOptions io;
        io.rtol = opt.rtol;
        io.atol = opt.atol;
        const RayHit hit = first_ray_crossing(p, *seed, io, sec.center, sec.direction, sec.orientation, opt.horizon);
        if (hit.hit) {
            // Follow the transient for several turns before using its section point.
            double s = hit.s;
            for (int turn = 0; turn < 64; ++turn) {
                const ReturnResult r = return_map(p, sec, s, opt.horizon, opt.rtol, opt.atol);
                if (!r.returned) break;
                s = r.s;
            }
            if (s > lo && s < hi) grid.push_back(s);
        }
    }
    std::sort(grid.begin(), grid.end());
    std::vector<Sample> samples;
    for (double s : grid) samples.push_back(sample(s));

    const double noise = 1e-10 * sec.s_max;
    std::vector<std::pair<double, double>> brackets;
    for (size_t i = 0; i + 1 < samples.size(); ++i) {
        const Sample &a = samples[i], &b = samples[i + 1];
        if (a.returned && b.returned && std::abs(a.D) > noise && std::abs(b.D) > noise && (a.D > 0) != (b.D > 0))
            brackets.push_back({a.s, b.s});
        if (a.returned && !b.returned && a.D > noise) {
            // Outward drift up to the return boundary: look for inward returns just below it.
            double l = a.s, r = b.s;
            for (int it = 0; it < 48; ++it) {
                const double m = 0.5 * (l + r);
                const Sample sm = sample(m);
                if (!sm.returned) {
                    r = m;
                    continue;
                }
                if (sm.D < -noise) {
                    brackets.push_back({l, m});
                    break;
                }
                l = m;
            }
        }
    }

    for (const auto& [a, b] : brackets) {
        auto D = [&](double s) {
            const ReturnResult r = return_map(p, sec, s, opt.horizon, opt.rtol, opt.atol);
            if (!r.returned) throw std::runtime_error("no return inside bracket");
            return r.s - s;
        };
        double s_star;
        try {
            boost::uintmax_t iters = 100;
            auto r = boost::math::tools::toms748_solve(D, a, b, boost::math::tools::eps_tolerance<double>(48), iters);
            s_star = 0.5 * (r.first + r.second);
        } catch (const std::exception&) {
            continue;
        }
        CycleRecord c;
        c.section = sec;
        c.section_s = s_star;
        const ReturnResult r0 = return_map(p, sec, s_star, opt.horizon, opt.rtol, opt.atol);
        if (!r0.returned || !(r0.time > 0.0)) continue;
        c.period = r0.time;
        c.residual = std::abs(r0.s - s_star);
        const double ds = std::max(1e-7 * s_star, 1e-10 * sec.s_max);
        const ReturnResult rp = return_map(p, sec, s_star + ds, opt.horizon, opt.rtol, opt.atol);
        const ReturnResult rm = return_map(p, sec, s_star - ds, opt.horizon, opt.rtol, opt.atol);
        c.multiplier = (rp.returned && rm.returned) ? (rp.s - rm.s) / (2.0 * ds) : std::nan("");
        c.stability = std::abs(c.multiplier) < 1.0 ? Stability::Stable : Stability::Unstable;
        // Sample one period on a uniform time grid.
        IntegrateOptions io;
        io.rtol = opt.rtol;
        io.atol = opt.atol;
        const double dt = c.period / opt.samples;
        double next = 0.0;
        std::string diag;
        const State start = sec.point(s_star);
        c.points.push_back(start);
        next = dt;
        run(p, start, c.period, io,
            [&](double, const S&, double tb, const S&, auto& at) {
                while (next <= tb && c.points.size() < static_cast<size_t>(opt.samples)) {
                    const S x = at(next);
                    c.points.push_back({x[0], x[1]});
                    next += dt;
                }
                return false;
            },
            diag);
        double xmin = c.points.front().x, xmax = xmin;
        for (const auto& s : c.points) {
            xmin = std::min(xmin, s.x);
            xmax = std::max(xmax, s.x);
        }
        c.amplitude = xmax - xmin;
        cycles.push_back(std::move(c));
    }
    return cycles;
}

std::optional<CycleRecord> find_limit_cycle(const Params& p, std::optional<State> seed, const CycleSearchOptions& opt) {
    auto cycles = find_limit_cycles(p, seed, opt);
    if (cycles.empty()) return std::nullopt;
    for (auto& c : cycles)
        if (c.stability == Stability::Stable) return c;
    return cycles.front();
}

std::vector<ManifoldBranch> saddle_manifolds(const Params& p, const Equilibrium& saddle, double length, double rtol,
                                             double atol) {
    if (saddle.kind != Kind::Saddle) throw std::invalid_argument("saddle_manifolds: equilibrium is not a saddle");
    const Mat2 J = jacobian(p, {saddle.x, saddle.y});
    const double T = J[0][0] + J[1][1], D = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    const double root = std::sqrt(std::max(0.0, T * T - 4.0 * D));
    const double lu = 0.5 * (T + root), ls = 0.5 * (T - root);
    const Vec2 vu = eigenvector(J, lu), vs = eigenvector(J, ls);
    const double delta = 1e-6 * std::max({1.0, saddle.x, saddle.y});
    std::vector<ManifoldBranch> out;
    for (int stable = 0; stable < 2; ++stable)
        for (int sign : {1, -1}) {
            const Vec2& v = stable ? vs : vu;
            const State s0{saddle.x + sign * delta * v[0], saddle.y + sign * delta * v[1]};
            ManifoldBranch b;
            b.stable = stable != 0;
            b.sign = sign;
            if (s0.x < 0.0 || s0.y < 0.0) {
                b.orbit.params = p;
                b.orbit.diagnostic = "offset leaves the closed quadrant";
                b.orbit.times.push_back(0.0);
                b.orbit.states.push_back({saddle.x, saddle.y});
                out.push_back(std::move(b));
                continue;
            }
            IntegrateOptions opt;
            opt.rtol = rtol;
            opt.atol = atol;
            opt.backward = b.stable;
            b.orbit = integrate(p, s0, length, opt);
            out.push_back(std::move(b));
        }
    return out;
}

std::optional<double> homoclinic_gap(const Params& p, double length) {
    const auto eqs = equilibria(p);
    const Equilibrium* e1 = find_role(eqs, Role::E1);
    const Equilibrium* e2 = find_role(eqs, Role::E2);
    if (!e1 || !e2 || e2->kind != Kind::Saddle) return std::nullopt;
    const double dx = e1->x - e2->x, dy = e1->y - e2->y, dn = norm2(dx, dy);
    const Vec2 d{dx / dn, dy / dn};
    const State c{e1->x, e1->y};
    const Mat2 J = jacobian(p, {e2->x, e2->y});
    const double T = J[0][0] + J[1][1], D = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    const double root = std::sqrt(std::max(0.0, T * T - 4.0 * D));
    const Vec2 vu = eigenvector(J, 0.5 * (T + root)), vs = eigenvector(J, 0.5 * (T - root));
    const double delta = 1e-6 * std::max({1.0, e2->x, e2->y});
    auto branch_hit = [&](const Vec2& v, bool backward) {
        RayHit best;
        for (int sign : {1, -1}) {
            const State s0{e2->x + sign * delta * v[0], e2->y + sign * delta * v[1]};
            IntegrateOptions opt;
            opt.rtol = 1e-11;
            opt.atol = 1e-13;
            opt.backward = backward;
            const RayHit hit = first_ray_crossing(p, s0, opt, c, d, 0, length);
            if (hit.hit && (!best.hit || hit.time < best.time)) best = hit;
        }
        return best;
    };
    const RayHit u = branch_hit(vu, false), s = branch_hit(vs, true);
    if (!u.hit && !s.hit) return std::nullopt;
    const double inf = std::numeric_limits<double>::infinity();
    if (!u.hit) return inf;
    if (!s.hit) return -inf;
    return u.s - s.s;
}

nlohmann::json HomoclinicResult::to_json() const {
    return {{"alpha", alpha}, {"lo", lo}, {"hi", hi}, {"iterations", iterations}};
}

std::optional<HomoclinicResult> find_homoclinic(double h, double k, double sigma, double alpha_lo, double alpha_hi,
                                                double tol) {
    auto gap = [&](double a) { return homoclinic_gap({h, k, sigma, a}); };
    auto glo = gap(alpha_lo), ghi = gap(alpha_hi);
    if (!glo || !ghi || (*glo > 0) == (*ghi > 0)) return std::nullopt;
    HomoclinicResult r;
    r.lo = alpha_lo;
    r.hi = alpha_hi;
    while (r.hi - r.lo > tol * std::max(1.0, std::abs(r.lo)) && r.iterations < 200) {
        const double m = 0.5 * (r.lo + r.hi);
        const auto gm = gap(m);
        if (!gm) return std::nullopt;
        if ((*gm > 0) == (*glo > 0)) r.lo = m;
        else r.hi = m;
        ++r.iterations;
    }
    r.alpha = 0.5 * (r.lo + r.hi);
    return r;
}

std::string portrait_region_name(PortraitRegion r) {
    switch (r) {
    case PortraitRegion::R1: return "R1";
    case PortraitRegion::R2: return "R2";
    case PortraitRegion::R3: return "R3";
    case PortraitRegion::R4: return "R4";
    case PortraitRegion::Other: return "Other";
    }
    return "?";
}

nlohmann::json SweepPoint::to_json() const {
    nlohmann::json j{{"params", params.to_json()},
                     {"label", census.label.name()},
                     {"census_match", census.match},
                     {"advisory", census.advisory},
                     {"has_cycle", has_cycle},
                     {"region", portrait_region_name(observed)}};
    nlohmann::json eqs = nlohmann::json::array();
    for (const auto& e : census.computed) eqs.push_back(e.to_json());
    j["equilibria"] = eqs;
    if (cycle) {
        j["cycle_amplitude"] = cycle->amplitude;
        j["cycle_period"] = cycle->period;
        j["cycle_stable"] = cycle->stability == Stability::Stable;
    }
    return j;
}

PortraitRegion observed_region(const CensusReport& census, bool has_cycle) {
    const Equilibrium* e1 = find_role(census.computed, Role::E1);
    bool interior = false;
    for (const auto& e : census.computed)
        if (e.role == Role::E1 || e.role == Role::E2 || e.role == Role::Estar) interior = true;
    if (!interior) return PortraitRegion::R1;
    if (!e1) return PortraitRegion::Other;
    const bool stable = e1->kind == Kind::StableFocus || e1->kind == Kind::StableNode;
    const bool unstable = e1->kind == Kind::UnstableFocus || e1->kind == Kind::UnstableNode;
    if (stable && !has_cycle) return PortraitRegion::R2;
    if (unstable && has_cycle) return PortraitRegion::R3;
    if (unstable && !has_cycle) return PortraitRegion::R4;
    return PortraitRegion::Other;
}

std::vector<SweepPoint> sweep(const SweepGrid& grid, const CycleSearchOptions& opt, unsigned threads) {
    if (grid.n_sigma < 1 || grid.n_alpha < 1 || grid.sigma_min > grid.sigma_max || grid.alpha_min > grid.alpha_max)
        throw std::invalid_argument("sweep: empty or unordered grid");
    const size_t n = static_cast<size_t>(grid.n_sigma) * static_cast<size_t>(grid.n_alpha);
    std::vector<SweepPoint> out(n);
    auto axis = [](double lo, double hi, int m, int i) { return m == 1 ? lo : lo + (hi - lo) * i / (m - 1); };
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t idx = next++; idx < n; idx = next++) {
            const int i = static_cast<int>(idx / static_cast<size_t>(grid.n_alpha));
            const int j = static_cast<int>(idx % static_cast<size_t>(grid.n_alpha));
            SweepPoint sp;
            sp.params = {grid.h, grid.k, axis(grid.sigma_min, grid.sigma_max, grid.n_sigma, i),
                         axis(grid.alpha_min, grid.alpha_max, grid.n_alpha, j)};
            sp.census = verify_census(sp.params);
            sp.cycle = find_limit_cycle(sp.params, std::nullopt, opt);
            sp.has_cycle = sp.cycle && sp.cycle->stability == Stability::Stable;
            sp.observed = observed_region(sp.census, sp.has_cycle);
            out[idx] = std::move(sp);
        }
    };
    unsigned t = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    t = static_cast<unsigned>(std::min<size_t>(t, n));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < t; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return out;
}

double hausdorff(const std::vector<State>& a, const std::vector<State>& b, bool closed) {
    auto seg_dist = [](const State& u, const State& p0, const State& p1) {
        const double vx = p1.x - p0.x, vy = p1.y - p0.y, len2 = vx * vx + vy * vy;
        double t = len2 > 0.0 ? ((u.x - p0.x) * vx + (u.y - p0.y) * vy) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        return norm2(u.x - p0.x - t * vx, u.y - p0.y - t * vy);
    };
    auto directed = [&](const std::vector<State>& p, const std::vector<State>& q) {
        double worst = 0.0;
        for (const auto& u : p) {
            double best = std::numeric_limits<double>::infinity();
            if (closed && q.size() > 1) {
                for (size_t i = 0; i < q.size(); ++i) best = std::min(best, seg_dist(u, q[i], q[(i + 1) % q.size()]));
            } else {
                for (const auto& v : q) best = std::min(best, norm2(u.x - v.x, u.y - v.y));
            }
            worst = std::max(worst, best);
        }
        return worst;
    };
    if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
    return std::max(directed(a, b), directed(b, a));
}

std::vector<State> sample_trajectory(const Params& p, const State& s0, double t_skip, double duration, int n,
                                     double rtol, double atol) {
    if (n < 1 || !(duration > 0.0) || t_skip < 0.0) throw std::invalid_argument("sample_trajectory: bad window");
    IntegrateOptions opt;
    opt.rtol = rtol;
    opt.atol = atol;
    std::vector<State> out;
    const double dt = n == 1 ? 0.0 : duration / (n - 1);
    double next = t_skip;
    std::string diag;
    run(p, s0, t_skip + duration, opt,
        [&](double, const S&, double tb, const S&, auto& at) {
            while (out.size() < static_cast<size_t>(n) && next <= tb) {
                const S x = at(next);
                out.push_back({x[0], x[1]});
                next = t_skip + dt * static_cast<double>(out.size());
            }
            return false;
        },
        diag);
    return out;
}

} // namespace facilidyn
