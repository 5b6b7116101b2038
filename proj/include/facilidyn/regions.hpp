#pragma once

#include "facilidyn/model.hpp"

#include <json.hpp>
#include <string>
#include <vector>

namespace facilidyn {

enum class Region {
    P11, P12, S11, P2, S1, S21, S22, L21, L1, S3, P31,
    P32, S31, S41, L41, S42, P4, P51, P52, S51, S5, H_GE_1
};

struct RegionLabel {
    Region cell = Region::H_GE_1;
    bool boundary = false;  // an S or L cell reached within the band
    std::string name() const;
};

std::string region_name(Region r);
Region region_from_name(const std::string& name);

enum class Kind {
    Saddle, StableNode, StableFocus, UnstableNode, UnstableFocus,
    CenterType, DegenerateSaddleNode, Cusp
};

enum class Role { E0, Ek, E1, E2, Estar };

std::string kind_name(Kind k);
std::string role_name(Role r);

struct Equilibrium {
    double x = 0.0;
    double y = 0.0;
    double trace = 0.0;
    double det = 0.0;
    Kind kind = Kind::Saddle;
    Role role = Role::E0;
    nlohmann::json to_json() const;
};

// Table-1 entries; the focus-or-node classes accept either concrete kind.
enum class KindClass { Saddle, StableNode, StableFocusOrNode, UnstableFocusOrNode, CenterType, Degenerate };

std::string kind_class_name(KindClass c);
bool kind_in_class(Kind k, KindClass c);

struct CensusEntry {
    Role role;
    KindClass kind;
};

constexpr double kDefaultBand = 1e-9;

RegionLabel classify(const Params& p, double band = kDefaultBand);
std::vector<Equilibrium> equilibria(const Params& p, double tol = 1e-12);
std::vector<CensusEntry> predicted_census(Region label);

struct CensusReport {
    RegionLabel label;
    std::vector<CensusEntry> predicted;
    std::vector<Equilibrium> computed;
    bool match = false;
    bool advisory = false;  // label lies in a boundary band
    nlohmann::json to_json() const;
};

CensusReport verify_census(const Params& p, double band = kDefaultBand);

} // namespace facilidyn
