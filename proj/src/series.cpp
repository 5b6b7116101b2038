#include "facilidyn/series.hpp"

#include <cmath>
#include <stdexcept>

namespace facilidyn {

namespace {

int total(const Series::Exp& e) { return e[0] + e[1] + e[2]; }

} // namespace

Series Series::constant(double c, int order) {
    Series s(order);
    s.set({0, 0, 0}, c);
    return s;
}

Series Series::variable(int var, int order, double offset) {
    Series s = constant(offset, order);
    Exp e{0, 0, 0};
    e[static_cast<size_t>(var)] = 1;
    s.set(e, 1.0);
    return s;
}

double Series::coeff(int i, int j, int l) const {
    auto it = t_.find({i, j, l});
    return it == t_.end() ? 0.0 : it->second;
}

void Series::set(const Exp& e, double v) {
    if (total(e) > order_) return;
    if (v == 0.0) t_.erase(e);
    else t_[e] = v;
}

Series Series::truncated(int order) const {
    Series r(order);
    for (const auto& [e, v] : t_)
        if (total(e) <= order) r.t_[e] = v;
    return r;
}

Series Series::derivative(int var) const {
    Series r(order_);
    for (const auto& [e, v] : t_) {
        if (e[static_cast<size_t>(var)] == 0) continue;
        Exp d = e;
        --d[static_cast<size_t>(var)];
        r.t_[d] += v * e[static_cast<size_t>(var)];
    }
    return r;
}

Series Series::inverse() const {
    const double c = constant_term();
    if (c == 0.0) throw std::domain_error("Series::inverse: zero constant term");
    // 1/(c(1+n)) = (1/c) sum (-n)^i
    Series n = *this * (1.0 / c);
    n.t_.erase({0, 0, 0});
    Series acc = constant(1.0, order_), power = constant(1.0, order_);
    for (int i = 1; i <= order_; ++i) {
        power = power * (-n);
        acc += power;
    }
    return acc * (1.0 / c);
}

Series Series::compose(const std::array<Series, 3>& subs) const {
    const int ord = std::min({order_, subs[0].order(), subs[1].order(), subs[2].order()});
    Series acc(ord);
    std::array<std::map<int, Series>, 3> powers;
    auto power = [&](int var, int p) -> const Series& {
        auto& cache = powers[static_cast<size_t>(var)];
        if (cache.empty()) cache.emplace(0, constant(1.0, ord));
        for (int q = static_cast<int>(cache.size()); q <= p; ++q)
            cache.emplace(q, (cache.at(q - 1) * subs[static_cast<size_t>(var)]).truncated(ord));
        return cache.at(p);
    };
    for (const auto& [e, v] : t_) {
        Series term = constant(v, ord);
        for (int var = 0; var < 3; ++var)
            if (e[static_cast<size_t>(var)] > 0) term = term * power(var, e[static_cast<size_t>(var)]);
        acc += term;
    }
    return acc;
}

double Series::eval(double a, double b, double c) const {
    double s = 0.0;
    for (const auto& [e, v] : t_) s += v * std::pow(a, e[0]) * std::pow(b, e[1]) * std::pow(c, e[2]);
    return s;
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& kv : r.t_) kv.second = -kv.second;
    return r;
}

Series& Series::operator+=(const Series& o) {
    order_ = std::min(order_, o.order_);
    for (const auto& [e, v] : o.t_) t_[e] += v;
    for (auto it = t_.begin(); it != t_.end();) {
        if (total(it->first) > order_) it = t_.erase(it);
        else ++it;
    }
    return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series& Series::operator*=(double s) {
    for (auto& kv : t_) kv.second *= s;
    return *this;
}

Series& Series::operator+=(double s) {
    t_[{0, 0, 0}] += s;
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    const int ord = std::min(a.order_, b.order_);
    Series r(ord);
    for (const auto& [ea, va] : a.t_)
        for (const auto& [eb, vb] : b.t_) {
            Series::Exp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            if (total(e) <= ord) r.t_[e] += va * vb;
        }
    return r;
}

} // namespace facilidyn
