#include "facilidyn/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace facilidyn {

int sgn(const Rat& r) { return sgn(r.get_num()); }

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    for (auto& c : c_) c.canonicalize();
    trim();
}

Poly::Poly(std::initializer_list<Rat> coeffs) : Poly(std::vector<Rat>(coeffs)) {}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, int degree) {
    std::vector<Rat> v(static_cast<size_t>(degree) + 1, Rat(0));
    v.back() = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i > degree()) return Rat(0);
    return c_[static_cast<size_t>(i)];
}

const Rat& Poly::lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

int Poly::sign_at(const Rat& x) const { return sgn(eval(x)); }

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
    return acc;
}

Poly Poly::primitive() const {
    if (c_.empty()) return *this;
    mpz_class den(1), num(0);
    for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& c : c_) mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    Rat scale(den, num);
    scale.canonicalize();
    return *this * scale;
}

Poly Poly::monic() const { return *this * Rat(1 / lead()); }

std::vector<double> Poly::to_double() const {
    std::vector<double> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.get_d());
    return out;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

Poly Poly::pow(int e) const {
    Poly r = constant(Rat(1));
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

std::string Poly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[static_cast<size_t>(i)];
        if (sgn(c) == 0) continue;
        if (!first) os << (sgn(c) > 0 ? " + " : " - ");
        else if (sgn(c) < 0) os << "-";
        Rat a = abs(c);
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) os << (i == 0 || a != 1 ? "*" : "") << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

PremResult prem(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("prem: division by zero polynomial");
    const int df = f.degree(), dg = g.degree();
    if (df < dg) return {Rat(1), Poly(), f};
    const Rat lc = g.lead();
    int e = df - dg + 1;
    Poly q, r = f;
    while (!r.is_zero() && r.degree() >= dg) {
        Poly t = Poly::monomial(r.lead(), r.degree() - dg);
        q = q * lc + t;
        r = r * lc - t * g;
        --e;
    }
    Rat scale(1);
    for (int i = 0; i < e; ++i) scale *= lc;
    Rat m(1);
    for (int i = 0; i < df - dg + 1; ++i) m *= lc;
    return {m, q * scale, r * scale};
}

DivResult divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    Poly q, r = f;
    const int dg = g.degree();
    const Rat lc = g.lead();
    while (!r.is_zero() && r.degree() >= dg) {
        Poly t = Poly::monomial(Rat(r.lead() / lc), r.degree() - dg);
        q += t;
        r -= t * g;
    }
    return {q, r};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a.is_zero() ? a : a.primitive();
    Poly y = b.is_zero() ? b : b.primitive();
    while (!y.is_zero()) {
        Poly r = divmod(x, y).r;
        x = y;
        y = r.is_zero() ? r : r.primitive();
    }
    return x.is_zero() ? x : x.monic();
}

Poly squarefree(const Poly& p) {
    if (p.degree() <= 0) return p;
    Poly g = gcd(p, p.derivative());
    return divmod(p, g).q.primitive();
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain{p.primitive()};
    Poly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d.primitive());
    while (true) {
        Poly r = divmod(chain[chain.size() - 2], chain.back()).r;
        if (r.is_zero()) break;
        chain.push_back((-r).primitive());
    }
    return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Rat& x) {
    int count = 0, prev = 0;
    for (const auto& q : chain) {
        int s = q.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

Rat root_bound(const Poly& p) {
    if (p.degree() < 1) return Rat(1);
    Rat m(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat r = abs(p.coeff(i) / p.lead());
        if (r > m) m = r;
    }
    return m + 1;
}

double RootInterval::midpoint() const { return Rat((lo + hi) / 2).get_d(); }

nlohmann::json RootInterval::to_json() const {
    return {{"lo", rat_string(lo)}, {"hi", rat_string(hi)}, {"exact", exact}};
}

namespace {

struct Pending {
    Rat a, b;
    int count;
};

} // namespace

std::vector<RootInterval> sturm_isolate(const Poly& p, const RootInterval& domain,
                                        const Rat& width) {
    if (p.is_zero()) throw std::domain_error("sturm_isolate: zero polynomial");
    if (sgn(width) <= 0) throw std::domain_error("sturm_isolate: width must be positive");
    std::vector<RootInterval> out;
    Poly q = squarefree(p);
    const Rat lo = domain.lo, hi = domain.hi;
    if (q.degree() < 1) return out;
    if (lo == hi) {
        if (q.sign_at(lo) == 0) out.push_back({lo, lo, true});
        return out;
    }
    for (const Rat& e : {lo, hi}) {
        if (q.sign_at(e) == 0) {
            out.push_back({e, e, true});
            q = divmod(q, Poly{Rat(-e), Rat(1)}).q;
        }
    }
    if (q.degree() >= 1) {
        const auto chain = sturm_chain(q);
        std::vector<Pending> stack;
        const int total = sign_variations(chain, lo) - sign_variations(chain, hi);
        if (total > 0) stack.push_back({lo, hi, total});
        while (!stack.empty()) {
            Pending cur = stack.back();
            stack.pop_back();
            if (cur.count == 1) {
                RootInterval iv{cur.a, cur.b, false};
                if (iv.width() > width) iv = refine_root(q, iv, width);
                out.push_back(iv);
                continue;
            }
            Rat m = (cur.a + cur.b) / 2;
            Rat ml = m, mr = m;
            if (q.sign_at(m) == 0) {
                // Step off the exact root so that child endpoints stay non-roots.
                out.push_back({m, m, true});
                Rat delta = (cur.b - cur.a) / 4;
                while (true) {
                    ml = m - delta;
                    mr = m + delta;
                    if (q.sign_at(ml) != 0 && q.sign_at(mr) != 0 &&
                        sign_variations(chain, ml) - sign_variations(chain, mr) == 1)
                        break;
                    delta /= 2;
                }
            }
            const int left = sign_variations(chain, cur.a) - sign_variations(chain, ml);
            const int right = sign_variations(chain, mr) - sign_variations(chain, cur.b);
            if (left > 0) stack.push_back({cur.a, ml, left});
            if (right > 0) stack.push_back({mr, cur.b, right});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& u, const RootInterval& v) { return u.lo < v.lo; });
    return out;
}

RootInterval refine_root(const Poly& p, const RootInterval& iv, const Rat& tol) {
    if (iv.exact || iv.lo == iv.hi) return {iv.lo, iv.lo, true};
    const Poly q = squarefree(p);
    Rat a = iv.lo, b = iv.hi;
    int sa = q.sign_at(a), sb = q.sign_at(b);
    if (sa == 0) return {a, a, true};
    if (sb == 0) return {b, b, true};
    if (sa == sb) throw std::domain_error("refine_root: interval has no sign change");
    while (Rat(b - a) > tol) {
        Rat m = (a + b) / 2;
        int sm = q.sign_at(m);
        if (sm == 0) return {m, m, true};
        if (sm == sa) a = m;
        else b = m;
    }
    return {a, b, false};
}

int count_roots_sturm(const Poly& p) {
    if (p.degree() < 1) return 0;
    Rat b = root_bound(p);
    return static_cast<int>(sturm_isolate(p, {Rat(-b), b}, Rat(2) * b).size());
}

namespace {

// Determinant of an integer matrix by fraction-free elimination with pivoting.
mpz_class bareiss(std::vector<std::vector<mpz_class>> a) {
    const size_t n = a.size();
    mpz_class prev(1);
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = v;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

} // namespace

std::vector<Rat> discriminant_sequence(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("discriminant_sequence: zero polynomial");
    const int n = p.degree();
    if (n < 1) throw std::domain_error("discriminant_sequence: degree must be at least 1");
    const Poly prim = p.primitive();
    std::vector<mpz_class> f(static_cast<size_t>(n) + 1), d(static_cast<size_t>(n));
    for (int j = 0; j <= n; ++j) f[static_cast<size_t>(j)] = prim.coeff(n - j).get_num();
    for (int j = 0; j < n; ++j) d[static_cast<size_t>(j)] = f[static_cast<size_t>(j)] * (n - j);
    const size_t N = 2 * static_cast<size_t>(n);
    std::vector<std::vector<mpz_class>> m(N, std::vector<mpz_class>(N, 0));
    for (size_t r = 0; r < static_cast<size_t>(n); ++r) {
        for (size_t j = 0; j < f.size(); ++j)
            if (r + j < N) m[2 * r][r + j] = f[j];
        for (size_t j = 0; j < d.size(); ++j)
            if (r + 1 + j < N) m[2 * r + 1][r + 1 + j] = d[j];
    }
    std::vector<Rat> out;
    for (size_t i = 1; i <= static_cast<size_t>(n); ++i) {
        std::vector<std::vector<mpz_class>> sub(2 * i, std::vector<mpz_class>(2 * i));
        for (size_t r = 0; r < 2 * i; ++r)
            for (size_t c = 0; c < 2 * i; ++c) sub[r][c] = m[r][c];
        out.emplace_back(bareiss(std::move(sub)));
    }
    return out;
}

std::vector<int> revise_signs(const std::vector<int>& signs) {
    std::vector<int> out = signs;
    size_t last = out.size();
    while (last > 0 && out[last - 1] == 0) --last;
    for (size_t i = 0; i < last; ++i) {
        if (out[i] != 0) continue;
        // out[i-1] is nonzero here; i > 0 since a leading zero has no anchor.
        if (i == 0) continue;
        const int anchor = out[i - 1];
        size_t r = 1;
        while (i < last && out[i] == 0) {
            out[i] = ((r + 1) / 2) % 2 == 1 ? -anchor : anchor;
            ++i;
            ++r;
        }
        --i;
    }
    return out;
}

SignList sign_list(const std::vector<Rat>& seq) {
    SignList sl;
    for (const auto& v : seq) sl.signs.push_back(sgn(v));
    sl.revised = revise_signs(sl.signs);
    return sl;
}

int count_from_revised(const std::vector<int>& revised) {
    int nonzero = 0, changes = 0, prev = 0;
    for (int s : revised) {
        if (s == 0) continue;
        ++nonzero;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return nonzero - 2 * changes;
}

int count_distinct_real_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("count_distinct_real_roots: zero polynomial");
    if (p.degree() < 1) return 0;
    return count_from_revised(sign_list(discriminant_sequence(p)).revised);
}

Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
    r.canonicalize();
    return r;
}

std::string rat_string(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : p.coeffs()) j.push_back(rat_string(c));
    return j;
}

Poly poly_from_json(const nlohmann::json& j) {
    std::vector<Rat> c;
    for (const auto& e : j) c.push_back(parse_rat(e.get<std::string>()));
    return Poly(std::move(c));
}

} // namespace facilidyn
