#pragma once

#include "facilidyn/model.hpp"
#include "facilidyn/regions.hpp"

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace facilidyn {

enum class OrbitClass { ConvergedTo, PeriodicCycle, EscapedDomain, Undetermined };

struct OrbitClassification {
    OrbitClass kind = OrbitClass::Undetermined;
    std::optional<Role> role;      // set for ConvergedTo
    int cycle_id = -1;             // set for PeriodicCycle
    std::string name() const;      // e.g. "ConvergedTo(E1)"
    nlohmann::json to_json() const;
};

struct IntegrateOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    bool backward = false;         // integrate the time-reversed field
    double escape_bound = 1e6;     // |x| or |y| above this counts as escape
    size_t max_steps = 20'000'000;
};

struct Orbit {
    Params params;
    IntegrateOptions options;
    std::vector<double> times;
    std::vector<State> states;
    OrbitClassification classification;
    std::string diagnostic;
    nlohmann::json to_json() const;
};

Orbit integrate(const Params& p, const State& s0, double t_end, double rtol = 1e-10, double atol = 1e-12);
Orbit integrate(const Params& p, const State& s0, double t_end, const IntegrateOptions& opt);

// A ray c + s d (s > 0) crossed in the rotation sense of the flow around c.
struct Section {
    State center;
    Vec2 direction{1.0, 0.0};
    double s_max = 0.0;
    int orientation = 1;
    bool horizontal_fallback = false;
    State point(double s) const { return {center.x + s * direction[0], center.y + s * direction[1]}; }
};

// Section at an anti-saddle: eigenvector real part, horizontal if the eigenvalues are real or nearly equal.
Section focus_section(const Params& p, const Equilibrium& focus);

struct ReturnResult {
    bool returned = false;
    double s = 0.0;
    double time = 0.0;
    State end;
};

ReturnResult return_map(const Params& p, const Section& sec, double s, double horizon = 500.0,
                        double rtol = 1e-12, double atol = 1e-14);

OrbitClassification classify_orbit(const Orbit& orbit, const std::vector<Equilibrium>& eqs, double window = 200.0);

enum class Stability { Stable, Unstable };

struct CycleRecord {
    double period = 0.0;           // in the time of the polynomial field
    std::vector<State> points;
    Stability stability = Stability::Stable;
    double amplitude = 0.0;        // max - min of x
    double section_s = 0.0;
    double multiplier = 0.0;       // return-map slope at the fixed point
    double residual = 0.0;         // |P(s) - s|
    Section section;
    nlohmann::json to_json() const;
};

struct CycleSearchOptions {
    double horizon = 500.0;        // transient and per-return time limit
    double window = 200.0;
    int scan_points = 48;
    double rtol = 1e-12;
    double atol = 1e-14;
    int samples = 400;             // points stored along the cycle
};

std::vector<CycleRecord> find_limit_cycles(const Params& p, std::optional<State> seed = std::nullopt,
                                           const CycleSearchOptions& opt = {});
// First stable cycle if any, otherwise the first cycle found.
std::optional<CycleRecord> find_limit_cycle(const Params& p, std::optional<State> seed = std::nullopt,
                                            const CycleSearchOptions& opt = {});

struct ManifoldBranch {
    bool stable = false;           // stable branches are integrated backward
    int sign = 1;                  // side of the eigenvector
    Orbit orbit;
};

std::vector<ManifoldBranch> saddle_manifolds(const Params& p, const Equilibrium& saddle, double length,
                                             double rtol = 1e-11, double atol = 1e-13);

// Signed gap between the inner E2 unstable and stable branches on the ray from E1 away from E2.
std::optional<double> homoclinic_gap(const Params& p, double length = 500.0);

struct HomoclinicResult {
    double alpha = 0.0;
    double lo = 0.0, hi = 0.0;
    int iterations = 0;
    nlohmann::json to_json() const;
};

// Bisection on the sign of homoclinic_gap over alpha in [alpha_lo, alpha_hi], to relative width tol.
std::optional<HomoclinicResult> find_homoclinic(double h, double k, double sigma, double alpha_lo,
                                                double alpha_hi, double tol = 1e-6);

enum class PortraitRegion { R1, R2, R3, R4, Other };
std::string portrait_region_name(PortraitRegion r);

struct SweepPoint {
    Params params;
    CensusReport census;
    bool has_cycle = false;
    std::optional<CycleRecord> cycle;
    PortraitRegion observed = PortraitRegion::Other;
    nlohmann::json to_json() const;
};

struct SweepGrid {
    double h = 0.5, k = 1.0;
    double sigma_min = 0.5, sigma_max = 0.7;
    int n_sigma = 1;
    double alpha_min = 13.0, alpha_max = 17.0;
    int n_alpha = 1;
};

// Region observed from the census and the cycle search.
PortraitRegion observed_region(const CensusReport& census, bool has_cycle);
std::vector<SweepPoint> sweep(const SweepGrid& grid, const CycleSearchOptions& opt = {}, unsigned threads = 0);

// Symmetric Hausdorff distance; with closed = true each set is read as a closed polyline
// and vertices are measured against the other polyline's segments.
double hausdorff(const std::vector<State>& a, const std::vector<State>& b, bool closed = false);

// States at n uniform times over [t_skip, t_skip + duration].
std::vector<State> sample_trajectory(const Params& p, const State& s0, double t_skip, double duration, int n,
                                     double rtol = 1e-12, double atol = 1e-14);

} // namespace facilidyn
