#pragma once

#include <gmpxx.h>

#include <json.hpp>
#include <string>
#include <vector>

namespace facilidyn {

using Rat = mpq_class;

// Univariate polynomial with exact rational coefficients, ascending degree.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs);

    static Poly constant(const Rat& c);
    static Poly monomial(const Rat& c, int degree);
    static Poly x() { return monomial(Rat(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const;
    const Rat& lead() const;

    Rat eval(const Rat& x) const;
    double eval(double x) const;
    int sign_at(const Rat& x) const;

    Poly derivative() const;
    Poly compose(const Poly& inner) const;
    // Positive rational multiple with coprime integer coefficients.
    Poly primitive() const;
    Poly monic() const;
    std::vector<double> to_double() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
    bool operator==(const Poly& o) const { return c_ == o.c_; }
    Poly pow(int e) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

struct PremResult {
    Rat m;
    Poly q;
    Poly r;
};

struct DivResult {
    Poly q;
    Poly r;
};

// Pseudo-division: m*f = q*g + r with m = lc(g)^(deg f - deg g + 1).
PremResult prem(const Poly& f, const Poly& g);
// Euclidean division over the rationals.
DivResult divmod(const Poly& f, const Poly& g);
Poly gcd(const Poly& a, const Poly& b);
Poly squarefree(const Poly& p);
// Sturm chain p, p', -rem(...), each scaled by a positive constant.
std::vector<Poly> sturm_chain(const Poly& p);
int sign_variations(const std::vector<Poly>& chain, const Rat& x);
// Cauchy bound: every real root lies in (-B, B).
Rat root_bound(const Poly& p);

struct RootInterval {
    Rat lo;
    Rat hi;
    bool exact = false;  // lo == hi is itself a root

    Rat width() const { return hi - lo; }
    double midpoint() const;
    nlohmann::json to_json() const;
};

// Disjoint isolating intervals for the distinct real roots of p in [lo, hi].
std::vector<RootInterval> sturm_isolate(const Poly& p, const RootInterval& domain,
                                        const Rat& width);
RootInterval refine_root(const Poly& p, const RootInterval& iv, const Rat& tol);
int count_roots_sturm(const Poly& p);

// Leading even principal minors D1..Dn of the discrimination matrix.
std::vector<Rat> discriminant_sequence(const Poly& p);

struct SignList {
    std::vector<int> signs;
    std::vector<int> revised;
};

std::vector<int> revise_signs(const std::vector<int>& signs);
SignList sign_list(const std::vector<Rat>& seq);
int count_from_revised(const std::vector<int>& revised);
int count_distinct_real_roots(const Poly& p);

int sgn(const Rat& r);
Rat parse_rat(const std::string& s);
std::string rat_string(const Rat& r);
nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

} // namespace facilidyn
