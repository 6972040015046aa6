#include <doctest.h>

#include <random>

#include "pfaffcubic/bigcomplex.hpp"
#include "pfaffcubic/cubic_io.hpp"
#include "pfaffcubic/multipoly.hpp"
#include "pfaffcubic/roots.hpp"
#include "pfaffcubic/tolerance.hpp"

using namespace pfc;

namespace {

BigComplex random_complex(std::mt19937& rng, double span = 10.0) {
    std::uniform_real_distribution<double> d(-span, span);
    return BigComplex::from_double(d(rng), d(rng));
}

}  // namespace

TEST_CASE("principal_sqrt basic values") {
    CHECK(abs(principal_sqrt(BigComplex(4)) - BigComplex(2)) < BigFloat(1e-70));
    CHECK(abs(principal_sqrt(BigComplex(-4)) - BigComplex(0, 2)) < BigFloat(1e-70));
    // 9/4 - 4 = -7/4 -> i sqrt(7)/2; oracle: square the output.
    BigComplex v = BigComplex(BigFloat("-1.75"));
    BigComplex s = principal_sqrt(v);
    CHECK(abs(s * s - v) < BigFloat(1e-70));
    CHECK(s.real().to_double() == doctest::Approx(0.0));
    CHECK(s.imag().to_double() == doctest::Approx(1.3228756555));
}

TEST_CASE("principal_sqrt branch convention") {
    std::mt19937 rng(7);
    for (int k = 0; k < 1000; ++k) {
        BigComplex v = random_complex(rng);
        BigComplex s = principal_sqrt(v);
        CHECK(abs(s * s - v) <= BigFloat::pow2(-Precision::bits() + 20) * max(abs(v), BigFloat(1)));
        CHECK(s.real().sign() >= 0);
        if (s.real().is_zero()) CHECK(s.imag().sign() >= 0);
    }
}

TEST_CASE("principal_cbrt cubes back") {
    std::mt19937 rng(11);
    for (int k = 0; k < 200; ++k) {
        BigComplex v = random_complex(rng);
        BigComplex c = principal_cbrt(v);
        CHECK(abs(c * c * c - v) <= BigFloat::pow2(-Precision::bits() + 24) * max(abs(v), BigFloat(1)));
    }
}

TEST_CASE("division by near-zero is an error") {
    CHECK_THROWS_AS(BigComplex(1) / BigComplex(), DivideByZero);
}

TEST_CASE("roots of z^2 - 1") {
    auto r = roots_univariate({BigComplex(-1), BigComplex(0), BigComplex(1)});
    REQUIRE(r.size() == 2);
    BigFloat tol(1e-70);
    bool plus = abs(r[0] - BigComplex(1)) < tol || abs(r[1] - BigComplex(1)) < tol;
    bool minus = abs(r[0] + BigComplex(1)) < tol || abs(r[1] + BigComplex(1)) < tol;
    CHECK(plus);
    CHECK(minus);
}

TEST_CASE("roots of z^3 - 1 are the cube roots of unity") {
    auto r = roots_univariate({BigComplex(-1), BigComplex(0), BigComplex(0), BigComplex(1)});
    REQUIRE(r.size() == 3);
    for (const auto& z : r) {
        CHECK(abs(z * z * z - BigComplex(1)) < BigFloat(1e-70));
    }
}

TEST_CASE("roots of z^3 - 2z + 5 have tiny residuals") {
    std::vector<BigComplex> c = {BigComplex(5), BigComplex(-2), BigComplex(0), BigComplex(1)};
    auto r = roots_univariate(c);
    REQUIRE(r.size() == 3);
    for (const auto& z : r) CHECK(abs(eval_univariate(c, z)) < BigFloat(1e-70));
}

TEST_CASE("leading zero coefficient is rejected") {
    CHECK_THROWS_AS(roots_univariate({BigComplex(1), BigComplex(1), BigComplex()}), LeadingZero);
}

TEST_CASE("random polynomials reconstruct from their roots") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> deg_d(1, 9);
    for (int trial = 0; trial < 25; ++trial) {
        int n = deg_d(rng);
        std::vector<BigComplex> c(n + 1);
        for (auto& v : c) v = random_complex(rng);
        if (abs(c[n]) < BigFloat(1)) c[n] += BigComplex(2);
        auto roots = roots_univariate(c);
        // prod (z - r_i) * c[n]
        std::vector<BigComplex> rec = {BigComplex(1)};
        for (const auto& r : roots) {
            std::vector<BigComplex> nxt(rec.size() + 1);
            for (std::size_t k = 0; k < rec.size(); ++k) {
                nxt[k + 1] += rec[k];
                nxt[k] -= r * rec[k];
            }
            rec = std::move(nxt);
        }
        BigFloat scale;
        for (const auto& v : c) scale = max(scale, abs(v));
        BigFloat tol = BigFloat::pow2(-Precision::bits() + 40) * scale;
        for (std::size_t k = 0; k < c.size(); ++k) {
            CHECK(abs(c[n] * rec[k] - c[k]) <= tol);
        }
    }
}
