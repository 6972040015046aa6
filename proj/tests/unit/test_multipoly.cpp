#include <doctest.h>

#include <complex>
#include <random>

#include "pfaffcubic/cubic_io.hpp"
#include "pfaffcubic/multipoly.hpp"

using namespace pfc;

namespace {

LinearChange random_gl(std::mt19937& rng, int dim, double span = 5.0) {
    std::uniform_real_distribution<double> d(-span, span);
    for (;;) {
        std::vector<BigComplex> m;
        for (int k = 0; k < dim * dim; ++k) m.push_back(BigComplex::from_double(d(rng), d(rng)));
        try {
            LinearChange a(dim, m);
            if (abs(a.det()) > BigFloat(0.1)) return a;
        } catch (const SingularMatrix&) {
        }
    }
}

MultiPoly random_poly(std::mt19937& rng, int arity, int degree, int nterms) {
    std::uniform_int_distribution<int> ed(0, degree);
    std::uniform_real_distribution<double> cd(-5.0, 5.0);
    MultiPoly p(arity);
    for (int k = 0; k < nterms; ++k) {
        Expo e{0, 0, 0, 0};
        int left = degree;
        for (int v = 0; v < arity; ++v) {
            e[v] = std::uniform_int_distribution<int>(0, left)(rng);
            left -= e[v];
        }
        p.add_term(e, BigComplex::from_double(cd(rng), cd(rng)));
    }
    return p;
}

BigFloat coeff_distance(const MultiPoly& a, const MultiPoly& b) {
    return (a - b).max_coeff_abs();
}

}  // namespace

TEST_CASE("substitute_linear identity and scaling") {
    MultiPoly x3 = parse_poly("x^3");
    CHECK(coeff_distance(substitute_linear(x3, LinearChange::identity(4)), x3).is_zero());

    auto scaled = substitute_linear(
        x3, LinearChange::diagonal({BigComplex(2), BigComplex(1), BigComplex(1), BigComplex(1)}));
    CHECK(coeff_distance(scaled, parse_poly("8*x^3")) < BigFloat(1e-70));
}

TEST_CASE("substitute_linear round-trips through the inverse") {
    std::mt19937 rng(5);
    MultiPoly p = parse_poly("x^3 - t^2*z");
    for (int trial = 0; trial < 20; ++trial) {
        LinearChange a = random_gl(rng, 4);
        MultiPoly q = substitute_linear(substitute_linear(p, a), a.inverse());
        CHECK(coeff_distance(q, p) <= BigFloat::pow2(-Precision::bits() + 40) * BigFloat(1000));
    }
}

TEST_CASE("hessian3 of x^3+z^3+t^3 is 216 xzt") {
    MultiPoly p(3);
    p.add_term({3, 0, 0, 0}, BigComplex(1));
    p.add_term({0, 3, 0, 0}, BigComplex(1));
    p.add_term({0, 0, 3, 0}, BigComplex(1));
    MultiPoly h = hessian3(p);
    MultiPoly expect(3);
    expect.add_term({1, 1, 1, 0}, BigComplex(216));
    CHECK(coeff_distance(h, expect) < BigFloat(1e-70));
}

TEST_CASE("hessian3 of x^3 vanishes") {
    MultiPoly p(3);
    p.add_term({3, 0, 0, 0}, BigComplex(1));
    CHECK(hessian3(p).is_zero());
}

TEST_CASE("hessian3 of x^3 - t^2 z vanishes at the flex direction") {
    MultiPoly p(3);
    p.add_term({3, 0, 0, 0}, BigComplex(1));
    p.add_term({0, 1, 2, 0}, BigComplex(-1));
    MultiPoly h = hessian3(p);
    CHECK_FALSE(h.is_zero());
    CHECK(abs(h.eval({BigComplex(), BigComplex(1), BigComplex()})) < BigFloat(1e-70));
}

TEST_CASE("hessian3 is GL3-covariant with factor det^2") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly p(3);
        p.add_term({3, 0, 0, 0}, BigComplex(1));
        p.add_term({0, 3, 0, 0}, BigComplex(2));
        p.add_term({0, 0, 3, 0}, BigComplex(-1));
        p.add_term({1, 1, 1, 0}, BigComplex(3));
        LinearChange a = random_gl(rng, 3, 2.0);
        MultiPoly lhs = hessian3(substitute_linear(p, a));
        MultiPoly rhs = (a.det() * a.det()) * substitute_linear(hessian3(p), a);
        BigFloat scale = max(lhs.max_coeff_abs(), BigFloat(1));
        CHECK(coeff_distance(lhs, rhs) <= BigFloat::pow2(-Precision::bits() + 60) * scale);
    }
}

TEST_CASE("resultant of u-v and u+v eliminating u") {
    MultiPoly p(2), q(2);
    p.add_term({1, 0, 0, 0}, BigComplex(1));
    p.add_term({0, 1, 0, 0}, BigComplex(-1));
    q.add_term({1, 0, 0, 0}, BigComplex(1));
    q.add_term({0, 1, 0, 0}, BigComplex(1));
    MultiPoly r = resultant(p, q, 0);
    // Standard Sylvester determinant: det [[1, -v], [1, v]] = 2v.
    MultiPoly expect(2);
    expect.add_term({0, 1, 0, 0}, BigComplex(2));
    CHECK(coeff_distance(r, expect).is_zero());
}

TEST_CASE("resultant of u^2-v and u-1 eliminating u") {
    MultiPoly p(2), q(2);
    p.add_term({2, 0, 0, 0}, BigComplex(1));
    p.add_term({0, 1, 0, 0}, BigComplex(-1));
    q.add_term({1, 0, 0, 0}, BigComplex(1));
    q.add_term({0, 0, 0, 0}, BigComplex(-1));
    MultiPoly r = resultant(p, q, 0);
    // Res(u^2 - v, u - 1) = 1 - v.
    MultiPoly expect(2);
    expect.add_term({0, 0, 0, 0}, BigComplex(1));
    expect.add_term({0, 1, 0, 0}, BigComplex(-1));
    CHECK(coeff_distance(r, expect) < BigFloat(1e-70));
}

TEST_CASE("resultant vanishes exactly at a planted common root") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        BigComplex u0 = BigComplex::from_double(d(rng), d(rng));
        BigComplex v0 = BigComplex::from_double(d(rng), d(rng));
        // p = (u - u0) * a(u,v), q = (u - u0) * b(u,v) at v = v0: plant by
        // shifting random polys to vanish at (u0, v0).
        MultiPoly pa = random_poly(rng, 2, 2, 4);
        MultiPoly qa = random_poly(rng, 2, 2, 4);
        MultiPoly u_min(2), v_min(2);
        u_min.add_term({1, 0, 0, 0}, BigComplex(1));
        u_min.add_term({0, 0, 0, 0}, -u0);
        v_min.add_term({0, 1, 0, 0}, BigComplex(1));
        v_min.add_term({0, 0, 0, 0}, -v0);
        MultiPoly p = u_min * pa + v_min * random_poly(rng, 2, 2, 3);
        MultiPoly q = u_min * qa + v_min * random_poly(rng, 2, 2, 3);
        if (p.degree_in(0) < 1 || q.degree_in(0) < 1) continue;
        MultiPoly r = resultant(p, q, 0);
        BigFloat scale = max(r.max_coeff_abs(), BigFloat(1));
        CHECK(abs(r.eval({BigComplex(), v0})) <= cert_eps() * scale * BigFloat(100));
    }
}

TEST_CASE("resultant swap symmetry up to sign") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly p = random_poly(rng, 2, 3, 6);
        MultiPoly q = random_poly(rng, 2, 3, 6);
        if (p.degree_in(0) < 1 || q.degree_in(0) < 1) continue;
        MultiPoly r1 = resultant(p, q, 0);
        MultiPoly r2 = resultant(q, p, 0);
        int sign = (p.degree_in(0) * q.degree_in(0)) % 2 == 0 ? 1 : -1;
        MultiPoly diff = sign == 1 ? r1 - r2 : r1 + r2;
        BigFloat scale = max(r1.max_coeff_abs(), BigFloat(1));
        CHECK(diff.max_coeff_abs() <= BigFloat::pow2(-Precision::bits() + 60) * scale);
    }
}

TEST_CASE("eval matches double-precision term summation") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly p = random_poly(rng, 4, 4, 10);
        std::vector<BigComplex> pt;
        std::vector<std::complex<double>> ptd;
        for (int v = 0; v < 4; ++v) {
            double re = d(rng), im = d(rng);
            pt.push_back(BigComplex::from_double(re, im));
            ptd.emplace_back(re, im);
        }
        std::complex<double> expect = 0;
        for (const auto& [e, c] : p.terms()) {
            std::complex<double> t = c.to_complex_double();
            for (int v = 0; v < 4; ++v) {
                for (int k = 0; k < e[v]; ++k) t *= ptd[v];
            }
            expect += t;
        }
        auto got = p.eval(pt).to_complex_double();
        CHECK(std::abs(got - expect) < 1e-10);
    }
}

TEST_CASE("eval simple cases for x^3 - t^2 z (vars x,z,t)") {
    MultiPoly p(3);
    p.add_term({3, 0, 0, 0}, BigComplex(1));
    p.add_term({0, 1, 2, 0}, BigComplex(-1));
    CHECK(abs(p.eval({BigComplex(1), BigComplex(), BigComplex()}) - BigComplex(1)) < BigFloat(1e-70));
    CHECK(abs(p.eval({BigComplex(), BigComplex(1), BigComplex(1)}) + BigComplex(1)) < BigFloat(1e-70));
}

TEST_CASE("divide_by_linear recovers an exact factor") {
    MultiPoly f = parse_poly("y*(x^2+t*z)");
    MultiPoly l = parse_poly("y");
    BigFloat rem;
    MultiPoly q = divide_by_linear(f, l, &rem);
    CHECK(rem < BigFloat(1e-70));
    CHECK(coeff_distance(q, parse_poly("x^2+t*z")) < BigFloat(1e-70));

    MultiPoly l2 = parse_poly("x+2*y-z+3*t");
    MultiPoly f2 = l2 * parse_poly("x^2 - y*t + z^2");
    MultiPoly q2 = divide_by_linear(f2, l2, &rem);
    CHECK(rem < BigFloat(1e-65));
    CHECK(coeff_distance(q2, parse_poly("x^2 - y*t + z^2")) < BigFloat(1e-65));
}

TEST_CASE("divide_by_linear reports a remainder for non-factors") {
    BigFloat rem;
    divide_by_linear(parse_poly("x^3+y^3"), parse_poly("y"), &rem);
    CHECK(rem > BigFloat(0.5));
}
