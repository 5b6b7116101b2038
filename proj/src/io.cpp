#include "facilidyn/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace facilidyn {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_orbit_csv(std::ostream& os, const Orbit& orbit) {
    os << "t,x,y\n";
    for (size_t i = 0; i < orbit.times.size(); ++i)
        os << format_double(orbit.times[i]) << ',' << format_double(orbit.states[i].x) << ','
           << format_double(orbit.states[i].y) << '\n';
}

void write_curves_csv(std::ostream& os, const BTData& data) {
    os << "sigma,alpha_SN,alpha_H,alpha_HL\n";
    for (const auto& c : data.curves) {
        os << format_double(c.sigma) << ',' << format_double(c.alpha_sn) << ',';
        if (c.alpha_h) os << format_double(*c.alpha_h);
        os << ',';
        if (c.alpha_hl) os << format_double(*c.alpha_hl);
        os << '\n';
    }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepPoint>& points) {
    os << "h,k,sigma,alpha,label,region,has_cycle,census_match,advisory,n_equilibria\n";
    for (const auto& p : points)
        os << format_double(p.params.h) << ',' << format_double(p.params.k) << ',' << format_double(p.params.sigma)
           << ',' << format_double(p.params.alpha) << ',' << p.census.label.name() << ','
           << portrait_region_name(p.observed) << ',' << (p.has_cycle ? 1 : 0) << ',' << (p.census.match ? 1 : 0)
           << ',' << (p.census.advisory ? 1 : 0) << ',' << p.census.computed.size() << '\n';
}

void write_equilibria_csv(std::ostream& os, const std::vector<Equilibrium>& eqs) {
    os << "role,x,y,trace,det,kind\n";
    for (const auto& e : eqs)
        os << role_name(e.role) << ',' << format_double(e.x) << ',' << format_double(e.y) << ','
           << format_double(e.trace) << ',' << format_double(e.det) << ',' << kind_name(e.kind) << '\n';
}

void write_phase_svg(std::ostream& os, const std::vector<std::vector<State>>& paths,
                     const std::vector<Equilibrium>& eqs, int width, int height) {
    double xmin = 0.0, ymin = 0.0, xmax = 1e-9, ymax = 1e-9;
    auto grow = [&](double x, double y) {
        if (!std::isfinite(x) || !std::isfinite(y)) return;
        xmax = std::max(xmax, x);
        ymax = std::max(ymax, y);
    };
    for (const auto& path : paths)
        for (const auto& s : path) grow(s.x, s.y);
    for (const auto& e : eqs) grow(e.x, e.y);
    xmax *= 1.05;
    ymax *= 1.05;
    const double margin = 40.0;
    auto X = [&](double x) { return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin); };
    auto Y = [&](double y) { return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin); };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(xmax) << "\" y2=\"" << Y(0)
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(ymax)
       << "\" stroke=\"black\"/>\n";
    for (const auto& path : paths) {
        if (path.empty()) continue;
        os << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\" points=\"";
        for (const auto& s : path)
            if (std::isfinite(s.x) && std::isfinite(s.y)) os << X(s.x) << ',' << Y(s.y) << ' ';
        os << "\"/>\n";
    }
    for (const auto& e : eqs) {
        const bool saddle = e.kind == Kind::Saddle;
        const bool stable = e.kind == Kind::StableFocus || e.kind == Kind::StableNode;
        os << "<circle cx=\"" << X(e.x) << "\" cy=\"" << Y(e.y) << "\" r=\"5\" fill=\""
           << (stable ? "black" : "white") << "\" stroke=\"" << (saddle ? "red" : "black") << "\"><title>"
           << role_name(e.role) << ' ' << kind_name(e.kind) << "</title></circle>\n";
    }
    os << "</svg>\n";
}

} // namespace facilidyn
