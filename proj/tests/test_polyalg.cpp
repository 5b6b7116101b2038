#include "facilidyn/localform.hpp"
#include "facilidyn/model.hpp"
#include "facilidyn/poly.hpp"
#include "facilidyn/reference_forms.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace facilidyn;

namespace {

Rat q(long num, long den = 1) {
    Rat r{mpz_class(num), mpz_class(den)};
    r.canonicalize();
    return r;
}

// (x - r1)(x - r2)... with the given multiplicities.
Poly from_roots(const std::vector<std::pair<Rat, int>>& roots) {
    Poly p = Poly::constant(Rat(1));
    for (const auto& [r, m] : roots) p *= Poly{-r, Rat(1)}.pow(m);
    return p;
}

} // namespace

TEST_CASE("poly arithmetic and evaluation") {
    const Poly p{q(1), q(-3), q(0), q(2)};  // 2x^3 - 3x + 1
    CHECK(p.degree() == 3);
    CHECK(p.eval(q(1)) == 0);
    CHECK(p.eval(q(1, 2)) == q(-1, 4));
    CHECK(p.derivative() == Poly{q(-3), q(0), q(6)});
    CHECK((p - p).is_zero());
    CHECK((p * Poly{q(0), q(1)}).degree() == 4);
    CHECK(Poly{q(2), q(4)}.primitive() == Poly{q(1), q(2)});
    CHECK(p.compose(Poly{q(1), q(1)}).eval(q(0)) == p.eval(q(1)));
}

TEST_CASE("pseudo-remainder identity m f = q g + r") {
    const Poly f{q(3), q(-1), q(4), q(1), q(5)};
    const Poly g{q(1), q(2), q(3)};
    const PremResult pr = prem(f, g);
    CHECK(pr.m * f == pr.q * g + pr.r);
    CHECK(pr.r.degree() < g.degree());
    CHECK(pr.m == Rat(27));
}

TEST_CASE("gcd and squarefree recover repeated factors") {
    const Poly a = from_roots({{q(1), 2}, {q(-2), 1}});
    const Poly b = from_roots({{q(1), 1}, {q(3), 1}});
    CHECK(gcd(a, b).monic() == Poly{q(-1), q(1)});
    CHECK(squarefree(a).monic() == from_roots({{q(1), 1}, {q(-2), 1}}));
}

TEST_CASE("Sturm isolation brackets known roots") {
    const Poly p = from_roots({{q(-3, 2), 1}, {q(1, 3), 2}, {q(5), 1}});
    const Rat b = root_bound(p);
    const auto ivs = sturm_isolate(p, {-b, b}, q(1, 100));
    REQUIRE(ivs.size() == 3);
    const Rat roots[] = {q(-3, 2), q(1, 3), q(5)};
    for (int i = 0; i < 3; ++i) {
        CHECK(ivs[i].lo <= roots[i]);
        CHECK(roots[i] <= ivs[i].hi);
        CHECK(ivs[i].width() <= q(1, 100));
    }
    CHECK(count_roots_sturm(p) == 3);
    CHECK(count_roots_sturm(Poly{q(1), q(0), q(1)}) == 0);
}

TEST_CASE("refined roots reach the requested width") {
    const Poly p{q(-2), q(0), q(1)};
    const auto ivs = sturm_isolate(p, {q(0), q(2)}, q(1));
    REQUIRE(ivs.size() == 1);
    const RootInterval r = refine_root(p, ivs[0], Rat(mpz_class(1), mpz_class("1000000000000")));
    CHECK(doctest::Approx(r.midpoint()).epsilon(1e-12) == std::sqrt(2.0));
}

TEST_CASE("discriminant sequence of a quadratic is (1, -discriminant) up to positive factors") {
    // x^2 + b x + c
    for (auto [b, c] : std::vector<std::pair<long, long>>{{0, -1}, {2, 1}, {0, 1}, {3, -4}}) {
        const auto seq = discriminant_sequence(Poly{q(c), q(b), q(1)});
        REQUIRE(seq.size() == 2);
        CHECK(sgn(seq[0]) == 1);
        CHECK(sgn(seq[1]) == sgn(q(b * b - 4 * c)));
    }
}

TEST_CASE("revised sign list rules") {
    CHECK(revise_signs({1, 0, 0, 1}) == std::vector<int>{1, -1, -1, 1});
    CHECK(revise_signs({1, -1, 0, 1}) == std::vector<int>{1, -1, 1, 1});
    CHECK(revise_signs({1, 1, 0, 0}) == std::vector<int>{1, 1, 0, 0});
    CHECK(count_from_revised({1, 1, 1}) == 3);
    CHECK(count_from_revised({1, -1, -1}) == 1);
}

TEST_CASE("discriminant counting agrees with Sturm counting on constructed polynomials") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 3), mult(1, 3), count(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::pair<Rat, int>> roots;
        int deg = 0;
        const int n = count(rng);
        for (int i = 0; i < n; ++i) {
            const int m = mult(rng);
            if (deg + m > 8) break;
            roots.push_back({q(num(rng), den(rng)), m});
            deg += m;
        }
        Poly p = from_roots(roots);
        if (deg + 2 <= 8 && trial % 2 == 0) p *= Poly{q(1), q(0), q(1)};  // no real roots
        std::vector<Rat> distinct;
        for (const auto& r : roots)
            if (std::find(distinct.begin(), distinct.end(), r.first) == distinct.end()) distinct.push_back(r.first);
        CHECK(count_roots_sturm(p) == static_cast<int>(distinct.size()));
        CHECK(count_distinct_real_roots(p) == static_cast<int>(distinct.size()));
    }
}

TEST_CASE("rational parsing and JSON round trip") {
    CHECK(parse_rat("6/4") == q(3, 2));
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
    const Poly p{q(1, 3), q(-2), q(7, 5)};
    CHECK(poly_from_json(poly_to_json(p)) == p);
}

TEST_CASE("sigma1 cubic vanishes where alpha2 equals 1/(sigma k)") {
    for (auto [h, k] : std::vector<std::pair<double, double>>{{0.5, 2.5}, {0.5, 3.0}, {0.3, 2.0}, {0.7, 5.0}}) {
        REQUIRE(k > k1_of(h));
        REQUIRE(k < k3_of(h));
        const double s1 = sigma1_of(h, k);
        CHECK(s1 > 0.0);
        CHECK(doctest::Approx(alpha2_of(h, k, s1) * s1 * k).epsilon(1e-9) == 1.0);
    }
}

TEST_CASE("substituted g2 and zeta1 have no real roots and match the sign table") {
    for (const auto& row : reference::kG2SignTable) {
        const Rat h = q(row.num, row.den);
        const auto c = reference::g2_substituted(h);
        const Poly g{c[0], Rat(0), c[1], Rat(0), c[2], Rat(0), c[3], Rat(0), c[4]};
        const SignList sl = sign_list(discriminant_sequence(g));
        CHECK(std::equal(sl.signs.begin(), sl.signs.end(), row.signs.begin(), row.signs.end()));
        CHECK(count_distinct_real_roots(g) == 0);
    }
}

TEST_CASE("substitute_capacity reproduces the transcribed substituted forms") {
    for (const Rat& h : {q(1, 4), q(1, 2), q(9, 10)}) {
        const Poly sg = substitute_capacity(g2_poly(h), h, 4);
        const auto c = reference::g2_substituted(h);
        const Poly ref{c[0], Rat(0), c[1], Rat(0), c[2], Rat(0), c[3], Rat(0), c[4]};
        // Equal up to a constant positive factor.
        CHECK(sg.primitive() == ref.primitive());
        CHECK(sgn(sg.lead()) == sgn(ref.lead()));
        const Poly sz = substitute_capacity(zeta1_poly(h), h, 3);
        const auto z = reference::zeta1_substituted(h);
        const Poly zref{z[0], Rat(0), z[1], Rat(0), z[2], Rat(0), z[3]};
        CHECK(sz.primitive() == zref.primitive());
        CHECK(sgn(sz.lead()) == sgn(zref.lead()));
    }
}
