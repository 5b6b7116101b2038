#pragma once

#include <array>
#include <map>

namespace facilidyn {

// Truncated multivariate power series in up to three variables with real
// coefficients; products drop every term above the total-degree order.
class Series {
public:
    using Exp = std::array<int, 3>;

    explicit Series(int order = 4) : order_(order) {}
    static Series constant(double c, int order);
    // Variable number `var` plus an optional constant offset.
    static Series variable(int var, int order, double offset = 0.0);

    int order() const { return order_; }
    double coeff(int i, int j = 0, int l = 0) const;
    double constant_term() const { return coeff(0, 0, 0); }
    void set(const Exp& e, double v);
    const std::map<Exp, double>& terms() const { return t_; }

    Series truncated(int order) const;
    Series derivative(int var) const;
    // Multiplicative inverse; requires a nonzero constant term.
    Series inverse() const;
    // Substitute series for each variable.
    Series compose(const std::array<Series, 3>& subs) const;
    double eval(double a, double b = 0.0, double c = 0.0) const;

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(double s);
    Series& operator+=(double s);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, double s) { return a *= s; }
    friend Series operator*(double s, Series a) { return a *= s; }
    friend Series operator+(Series a, double s) { return a += s; }
    friend Series operator+(double s, Series a) { return a += s; }
    friend Series operator-(Series a, double s) { return a += -s; }
    friend Series operator-(double s, const Series& a) { return -a + s; }
    friend Series operator/(Series a, double s) { return a *= 1.0 / s; }

private:
    int order_;
    std::map<Exp, double> t_;
};

} // namespace facilidyn
