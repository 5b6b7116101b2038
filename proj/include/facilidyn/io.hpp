#pragma once

#include "facilidyn/localform.hpp"
#include "facilidyn/regions.hpp"
#include "facilidyn/simulate.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace facilidyn {

// Shortest round-trip decimal form with '.' as separator.
std::string format_double(double v);

void write_orbit_csv(std::ostream& os, const Orbit& orbit);
void write_curves_csv(std::ostream& os, const BTData& data);
void write_sweep_csv(std::ostream& os, const std::vector<SweepPoint>& points);
void write_equilibria_csv(std::ostream& os, const std::vector<Equilibrium>& eqs);

// Phase portrait: one polyline per path plus a glyph per equilibrium.
void write_phase_svg(std::ostream& os, const std::vector<std::vector<State>>& paths,
                     const std::vector<Equilibrium>& eqs, int width = 800, int height = 600);

} // namespace facilidyn
