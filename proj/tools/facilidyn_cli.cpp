#include "facilidyn/io.hpp"
#include "facilidyn/localform.hpp"
#include "facilidyn/model.hpp"
#include "facilidyn/regions.hpp"
#include "facilidyn/simulate.hpp"
#include "facilidyn/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

using namespace facilidyn;

namespace {

struct Common {
    double h = 0.0, k = 0.0, sigma = 0.0, alpha = 0.0;
    std::string format = "json";
    std::string out;
    double tol = kDefaultBand;
};

// Emits to --out when given, otherwise to stdout.
void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + c.out);
    f << text;
}

// --h is a model parameter, so help is --help only.
void add_params(CLI::App* app, Common& c, bool with_alpha = true) {
    app->set_help_flag("--help", "print help");
    app->add_option("--h", c.h, "handling-time parameter")->required();
    app->add_option("--k", c.k, "capacity parameter")->required();
    if (with_alpha) {
        app->add_option("--sigma", c.sigma, "prey growth parameter")->required();
        app->add_option("--alpha", c.alpha, "cooperation intensity")->required();
    }
}

void add_output(CLI::App* app, Common& c, const std::string& default_format) {
    c.format = default_format;
    app->add_option("--format", c.format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
    app->add_option("--out", c.out, "output path, stdout when omitted");
    app->add_option("--tol", c.tol, "boundary band for classification; FACILIDYN_TOL sets the default");
}

Params params_of(const Common& c) {
    Params p{c.h, c.k, c.sigma, c.alpha};
    p.validate();
    return p;
}

void unsupported(const Common& c, const char* cmd) {
    throw std::invalid_argument(std::string(cmd) + " does not support --format " + c.format);
}

nlohmann::json classify_json(const Params& p, double tol) {
    const RegionLabel label = classify(p, tol);
    const auto eqs = equilibria(p);
    int interior = 0;
    for (const auto& e : eqs)
        if (e.role == Role::E1 || e.role == Role::E2 || e.role == Role::Estar) ++interior;
    nlohmann::json j{{"params", p.to_json()},
                     {"label", label.name()},
                     {"boundary", label.boundary},
                     {"interior_equilibria", interior}};
    if (p.h < 1.0) j["thresholds"] = thresholds(p.h, p.k, p.sigma, p.alpha).to_json();
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equilibrium and bifurcation analysis of a predator-prey model with hunting cooperation"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    double env_tol = kDefaultBand;
    if (const char* t = std::getenv("FACILIDYN_TOL")) {
        try {
            env_tol = std::stod(t);
        } catch (const std::exception&) {
            std::fprintf(stderr, "invalid FACILIDYN_TOL: %s\n", t);
            return 2;
        }
        if (!(env_tol > 0.0)) {
            std::fprintf(stderr, "invalid FACILIDYN_TOL: %s\n", t);
            return 2;
        }
    }

    Common cc, ce, cs, cw, cu, cv;
    for (Common* c : {&cc, &ce, &cs, &cw, &cu, &cv}) c->tol = env_tol;

    auto* classify_cmd = app.add_subcommand("classify", "region label and thresholds");
    add_params(classify_cmd, cc);
    add_output(classify_cmd, cc, "json");

    auto* eq_cmd = app.add_subcommand("equilibria", "equilibria with kinds and the census check");
    add_params(eq_cmd, ce);
    add_output(eq_cmd, ce, "csv");

    double x0 = 0.0, y0 = 0.0, t_end = 100.0, rtol = 1e-10, atol = 1e-12;
    bool backward = false;
    auto* sim_cmd = app.add_subcommand("simulate", "integrate one orbit");
    add_params(sim_cmd, cs);
    add_output(sim_cmd, cs, "csv");
    sim_cmd->add_option("--x0", x0, "initial prey density")->required();
    sim_cmd->add_option("--y0", y0, "initial predator density")->required();
    sim_cmd->add_option("--t", t_end, "integration time");
    sim_cmd->add_option("--rtol", rtol);
    sim_cmd->add_option("--atol", atol);
    sim_cmd->add_flag("--backward", backward, "integrate in reversed time");

    SweepGrid grid;
    unsigned threads = 0;
    auto* sweep_cmd = app.add_subcommand("sweep", "region census over a (sigma, alpha) grid");
    add_params(sweep_cmd, cw, false);
    add_output(sweep_cmd, cw, "csv");
    sweep_cmd->add_option("--sigma-min", grid.sigma_min);
    sweep_cmd->add_option("--sigma-max", grid.sigma_max);
    sweep_cmd->add_option("--n-sigma", grid.n_sigma);
    sweep_cmd->add_option("--alpha-min", grid.alpha_min);
    sweep_cmd->add_option("--alpha-max", grid.alpha_max);
    sweep_cmd->add_option("--n-alpha", grid.n_alpha);
    sweep_cmd->add_option("--threads", threads, "worker threads, 0 for all cores");

    double smin = 0.5, smax = 0.7;
    int n_curve = 100;
    auto* curves_cmd = app.add_subcommand("curves", "saddle-node, Hopf and homoclinic curves near the cusp");
    add_params(curves_cmd, cu, false);
    add_output(curves_cmd, cu, "csv");
    curves_cmd->add_option("--sigma-min", smin);
    curves_cmd->add_option("--sigma-max", smax);
    curves_cmd->add_option("--n", n_curve);

    VerifyOptions vopt;
    auto* verify_cmd = app.add_subcommand("verify-paper", "run the acceptance suite");
    add_output(verify_cmd, cv, "json");
    verify_cmd->add_flag("--quick", vopt.quick, "census property on 100 draws only");
    verify_cmd->add_option("--seed", vopt.seed, "seed of the random draws");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*classify_cmd) {
            const Params p = params_of(cc);
            const auto j = classify_json(p, cc.tol);
            if (cc.format == "json") emit(cc, j.dump(2));
            else if (cc.format == "csv") {
                std::ostringstream os;
                os << "h,k,sigma,alpha,label,boundary,interior_equilibria\n"
                   << format_double(p.h) << ',' << format_double(p.k) << ',' << format_double(p.sigma) << ','
                   << format_double(p.alpha) << ',' << j["label"].get<std::string>() << ','
                   << (j["boundary"].get<bool>() ? 1 : 0) << ',' << j["interior_equilibria"].get<int>() << '\n';
                emit(cc, os.str());
            } else unsupported(cc, "classify");
        } else if (*eq_cmd) {
            const Params p = params_of(ce);
            const CensusReport cr = verify_census(p, ce.tol);
            if (ce.format == "csv") {
                std::ostringstream os;
                write_equilibria_csv(os, cr.computed);
                emit(ce, os.str());
            } else if (ce.format == "json") emit(ce, cr.to_json().dump(2));
            else unsupported(ce, "equilibria");
        } else if (*sim_cmd) {
            const Params p = params_of(cs);
            if (!(x0 >= 0.0 && y0 >= 0.0 && t_end > 0.0 && rtol > 0.0 && atol > 0.0))
                throw std::invalid_argument("simulate needs x0, y0 >= 0 and positive t, rtol, atol");
            IntegrateOptions io;
            io.rtol = rtol;
            io.atol = atol;
            io.backward = backward;
            Orbit orbit = integrate(p, {x0, y0}, t_end, io);
            orbit.classification = classify_orbit(orbit, equilibria(p));
            std::ostringstream os;
            if (cs.format == "csv") write_orbit_csv(os, orbit);
            else if (cs.format == "json") os << orbit.to_json().dump(2);
            else write_phase_svg(os, {orbit.states}, equilibria(p));
            emit(cs, os.str());
            std::fprintf(stderr, "%s\n", orbit.classification.name().c_str());
        } else if (*sweep_cmd) {
            grid.h = cw.h;
            grid.k = cw.k;
            Params{grid.h, grid.k, grid.sigma_min, grid.alpha_min}.validate();
            if (!(grid.sigma_max >= grid.sigma_min && grid.alpha_max >= grid.alpha_min && grid.n_sigma >= 1 &&
                  grid.n_alpha >= 1))
                throw std::invalid_argument("sweep grid bounds must be ordered with at least one point");
            const auto pts = sweep(grid, {}, threads);
            std::ostringstream os;
            if (cw.format == "csv") write_sweep_csv(os, pts);
            else if (cw.format == "json") {
                nlohmann::json a = nlohmann::json::array();
                for (const auto& sp : pts) a.push_back(sp.to_json());
                os << a.dump(2);
            } else unsupported(cw, "sweep");
            emit(cw, os.str());
        } else if (*curves_cmd) {
            Params{cu.h, cu.k, smin, 1.0}.validate();
            if (!(smax > smin) || n_curve < 2) throw std::invalid_argument("curves needs sigma-max > sigma-min, n >= 2");
            const BTData data = bt_curves(cu.h, cu.k, smin, smax, n_curve);
            std::ostringstream os;
            if (cu.format == "csv") write_curves_csv(os, data);
            else if (cu.format == "json") os << data.to_json().dump(2);
            else unsupported(cu, "curves");
            emit(cu, os.str());
        } else if (*verify_cmd) {
            if (cv.format != "json") unsupported(cv, "verify-paper");
            const auto results = run_acceptance(vopt);
            bool all = true;
            for (const auto& r : results) {
                std::fprintf(stderr, "%s %d %s: %s (expected %s) %.2f s\n", r.pass ? "PASS" : "FAIL", r.id,
                             r.name.c_str(), r.measured.c_str(), r.expected.c_str(), r.seconds);
                all = all && r.pass;
            }
            emit(cv, acceptance_report(results).dump(2));
            return all ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
