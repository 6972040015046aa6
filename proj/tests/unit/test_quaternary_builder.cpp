#include <doctest.h>

#include <random>

#include "pfaffcubic/quaternary_builder.hpp"

using namespace pfc;

namespace {

CanonicalQuaternary canonical_from(const std::string& expr) {
    CubicSurface c = parse_cubic(expr);
    CanonicalTernary ct = weierstrass_reduce(slice_y0(c));
    return embed_and_shear(c, ct);
}

CanonicalQuaternary random_lams(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-5, 5);
    auto pick = [&] { return BigComplex(d(rng), d(rng)); };
    CanonicalQuaternary cq;
    cq.lam2 = pick();
    cq.lam3 = pick();
    cq.lam5 = pick();
    cq.lam6 = pick();
    cq.lam7 = pick();
    cq.lam8 = pick();
    cq.lam11 = pick();
    cq.lam12 = pick();
    cq.lam13 = pick();
    cq.lam17 = pick();
    cq.lam18 = pick();
    cq.lam20 = pick();
    return cq;
}

int nonzero_count(const LinearMatrix::Constant6& b) {
    int n = 0;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            if (abs(b[i][j]) > BigFloat(1e-70)) ++n;
        }
    }
    return n;
}

}  // namespace

TEST_CASE("embed_and_shear on y-free input gives zero y-coefficients") {
    CanonicalQuaternary cq = canonical_from("x^3-t^2*z");
    CHECK(abs(cq.lam2) <= cert_eps());
    CHECK(abs(cq.lam5) <= cert_eps());
    CHECK(abs(cq.lam18) <= cert_eps());
    CHECK(abs(cq.lam3) <= cert_eps());
    CHECK(abs(cq.lam7) <= cert_eps());
    CHECK(abs(cq.lam8) <= cert_eps());
}

TEST_CASE("embed_and_shear clears the y*t^2 coefficient") {
    CubicSurface c = parse_cubic("x^3-t^2*z+y*t^2");
    CanonicalTernary ct = weierstrass_reduce(slice_y0(c));
    CanonicalQuaternary cq = embed_and_shear(c, ct);
    MultiPoly h = substitute_linear(to_poly(c), cq.transform);
    CHECK(abs(h.coeff({0, 1, 0, 2})) <= cert_eps() * max(h.max_coeff_abs(), BigFloat(1)));
    MultiPoly target = canonical_quaternary_poly(cq);
    CHECK((h - target).max_coeff_abs() <= cert_eps() * max(target.max_coeff_abs(), BigFloat(1)));
}

TEST_CASE("embed_and_shear reads off a pure x^2*y term") {
    CanonicalQuaternary cq = canonical_from("x^3-t^2*z+x^2*y");
    CHECK(abs(cq.lam5 - BigComplex(1)) <= cert_eps() * BigFloat(16));
    CHECK(abs(cq.lam2) <= cert_eps());
    CHECK(abs(cq.lam6) <= cert_eps());
}

TEST_CASE("compute_d11 closed-form examples") {
    D11 a = compute_d11(BigComplex(BigFloat(2.5)), 1);
    CHECK(abs(a.value + BigComplex(BigFloat(0.5))) < BigFloat(1e-70));

    D11 b1 = compute_d11(BigComplex(2), 1);
    D11 b2 = compute_d11(BigComplex(2), -1);
    CHECK(abs(b1.value + BigComplex(1)) < BigFloat(1e-70));
    CHECK(abs(b2.value + BigComplex(1)) < BigFloat(1e-70));

    D11 c = compute_d11(BigComplex(0), 1);
    CHECK(abs(c.value - BigComplex::i()) < BigFloat(1e-70));
}

TEST_CASE("compute_d11 satisfies its quadratic on random inputs") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> d(-10.0, 10.0);
    for (int k = 0; k < 200; ++k) {
        BigComplex lam18 = BigComplex::from_double(d(rng), d(rng));
        for (int branch : {1, -1}) {
            BigComplex v = compute_d11(lam18, branch).value;
            CHECK(abs(v * v + lam18 * v + BigComplex(1)) <= cert_eps());
        }
    }
}

TEST_CASE("build_M0 matches the pinned entry layout") {
    CanonicalQuaternary cq;  // all Lam zero
    PfaffianRep rep = build_M0(cq, compute_d11(cq.lam18, 1));

    const auto& b2 = rep.m.coefficient_matrix(2);
    CHECK(abs(b2[0][3] + BigComplex(1)) < BigFloat(1e-70));
    CHECK(abs(b2[1][4] - BigComplex(1)) < BigFloat(1e-70));
    CHECK(nonzero_count(b2) == 4);

    const auto& b1 = rep.m.coefficient_matrix(1);
    CHECK(abs(b1[0][4] + BigComplex(1)) < BigFloat(1e-70));
    CHECK(abs(b1[3][5] - BigComplex(1)) < BigFloat(1e-70));

    const auto& b0 = rep.m.coefficient_matrix(0);
    CHECK(abs(b0[0][1] - BigComplex(1)) < BigFloat(1e-70));
    CHECK(abs(b0[2][3] + BigComplex(1)) < BigFloat(1e-70));
    CHECK(abs(b0[5][4] - BigComplex(1)) < BigFloat(1e-70));

    // d = i and zero Lam force B3 to the pair positions (3,5) and (2,6)
    // in 1-based indexing and their mates.
    const auto& b3 = rep.m.coefficient_matrix(3);
    CHECK(abs(b3[2][4] - BigComplex::i()) < BigFloat(1e-70));
    CHECK(abs(b3[1][5] + BigComplex::i()) < BigFloat(1e-70));
    CHECK(nonzero_count(b3) == 4);
    CHECK(abs(b3[0][2]) < BigFloat(1e-70));
}

TEST_CASE("M0 represents the canonical polynomial for random Lam tuples") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        CanonicalQuaternary cq = random_lams(rng);
        for (int branch : {1, -1}) {
            PfaffianRep rep = build_M0(cq, compute_d11(cq.lam18, branch));
            MultiPoly target = canonical_quaternary_poly(cq);
            PfaffianRep fixed = normalize_sign(rep, target);
            Certificate cert = certify(fixed.m, from_poly(target));
            CHECK(cert.pass);
        }
    }
}

TEST_CASE("normalize_sign flips a negated representation") {
    CanonicalQuaternary cq;
    cq.lam3 = BigComplex(1);
    MultiPoly target = canonical_quaternary_poly(cq);
    PfaffianRep rep = normalize_sign(build_M0(cq, compute_d11(cq.lam18, 1)), target);

    PfaffianRep neg = rep;
    for (int v = 0; v < 4; ++v) {
        auto& a = neg.m.coefficient_matrix(v);
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < 6; ++j) a[i][j] = -a[i][j];
        }
    }
    MultiPoly pf_neg = pfaffian_symbolic(neg.m);
    CHECK((pf_neg + target).max_coeff_abs() <= cert_eps() * max(target.max_coeff_abs(), BigFloat(1)));

    PfaffianRep fixed = normalize_sign(neg, target);
    MultiPoly pf_fixed = pfaffian_symbolic(fixed.m);
    CHECK((pf_fixed - target).max_coeff_abs() <= cert_eps() * max(target.max_coeff_abs(), BigFloat(1)));

    CHECK_THROWS_AS(normalize_sign(rep, target + target), SignIndeterminate);
}

TEST_CASE("pull_back through simple transforms") {
    CanonicalQuaternary cq;
    cq.lam8 = BigComplex(2);
    MultiPoly target = canonical_quaternary_poly(cq);
    PfaffianRep rep = normalize_sign(build_M0(cq, compute_d11(cq.lam18, 1)), target);

    PfaffianRep same = pull_back(rep, LinearChange::identity(4));
    CHECK((pfaffian_symbolic(same.m) - target).max_coeff_abs() < BigFloat(1e-60));

    std::vector<BigComplex> d{BigComplex(2), BigComplex(1), BigComplex(1), BigComplex(1)};
    PfaffianRep scaled = pull_back(rep, LinearChange::diagonal(d));
    const auto& a0 = rep.m.coefficient_matrix(0);
    const auto& a0s = scaled.m.coefficient_matrix(0);
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            CHECK(abs(a0s[i][j] - a0[i][j] / BigComplex(2)) < BigFloat(1e-60));
        }
    }
}

TEST_CASE("pull_back commutes with verification") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> d(-3, 3);
    CanonicalQuaternary cq = random_lams(rng);
    MultiPoly target = canonical_quaternary_poly(cq);
    PfaffianRep rep = normalize_sign(build_M0(cq, compute_d11(cq.lam18, 1)), target);

    for (int trial = 0; trial < 3; ++trial) {
        std::vector<BigComplex> m;
        for (int k = 0; k < 16; ++k) m.push_back(BigComplex(d(rng)));
        LinearChange t = [&] {
            try {
                return LinearChange(4, m);
            } catch (const SingularMatrix&) {
                return LinearChange::identity(4);
            }
        }();
        // target = f o t defines f.
        MultiPoly f = substitute_linear(target, t.inverse());
        Certificate cert = certify(pull_back(rep, t).m, from_poly(f));
        CHECK(cert.pass);
    }
}

TEST_CASE("rotate_until_irreducible on an irreducible surface with reducible slice") {
    CubicSurface c = parse_cubic("x*t*z+y^3");
    RotationResult r = rotate_until_irreducible(c, 7);
    CHECK(find_lines(slice_y0(r.g)).empty());
    MultiPoly g = substitute_linear(to_poly(c), r.rotation);
    CHECK((g - to_poly(r.g)).max_coeff_abs() < BigFloat(1e-60));
}

TEST_CASE("rotate_until_irreducible gives up on a genuinely split surface") {
    CubicSurface c = parse_cubic("z*(x^2+t*z)");
    CHECK_THROWS_AS(rotate_until_irreducible(c, 3, 6), RotationExhausted);
}

TEST_CASE("split_plane on direct products") {
    PlaneSplit s1 = split_plane(parse_cubic("y*(x^2+t*z)"));
    CHECK(s1.plane.degree_in(1) == 1);
    CHECK((s1.plane * s1.quadric - parse_poly("y*(x^2+t*z)")).max_coeff_abs() <= cert_eps() * BigFloat(16));

    PlaneSplit s2 = split_plane(parse_cubic("z*(x^2+t^2+z^2)"));
    CHECK((s2.plane * s2.quadric - parse_poly("z*(x^2+t^2+z^2)")).max_coeff_abs() <=
          cert_eps() * BigFloat(16));

    PlaneSplit s3 = split_plane(parse_cubic("x^3"));
    CHECK((s3.plane * s3.quadric - parse_poly("x^3")).max_coeff_abs() <= cert_eps() * BigFloat(16));
}

TEST_CASE("split_plane lifts a slice line to a plane with a y term") {
    MultiPoly f = parse_poly("(x+2*y+z)*(x^2+t*z)");
    PlaneSplit s = split_plane(from_poly(f));
    CHECK((s.plane * s.quadric - f).max_coeff_abs() <= cert_eps() * BigFloat(1024));
    // The plane must carry the y coefficient in ratio 2 : 1 to x.
    BigComplex cx = s.plane.coeff({1, 0, 0, 0});
    BigComplex cy = s.plane.coeff({0, 1, 0, 0});
    CHECK(abs(cy - BigComplex(2) * cx) <= cert_eps() * BigFloat(1024));
}

TEST_CASE("split_plane rejects irreducible surfaces") {
    CHECK_THROWS_AS(split_plane(parse_cubic("x^3+y^3+z^3+t^3")), NotSplit);
}

TEST_CASE("quadric_to_pfaffian_pair reconstruction") {
    auto reconstruct_ok = [](const std::string& expr, int want_rank) {
        MultiPoly q = parse_poly(expr);
        QuadricPairs p = quadric_to_pfaffian_pair(q);
        CHECK(p.rank == want_rank);
        MultiPoly recon = p.l[0] * p.l[1] + p.l[2] * p.l[3];
        CHECK((recon - q).max_coeff_abs() <=
              cert_eps() * max(q.max_coeff_abs(), BigFloat(1)) * BigFloat(1024));
    };
    reconstruct_ok("x^2+z^2", 2);
    reconstruct_ok("x*t", 2);
    reconstruct_ok("x^2+y^2+z^2+t^2", 4);
    reconstruct_ok("x^2", 1);
    reconstruct_ok("x^2+2*x*y+y^2+t*z", 3);
}

TEST_CASE("quadric_to_pfaffian_pair on random quadrics") {
    std::mt19937 rng(83);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly q(4);
        for (int i = 0; i < 4; ++i) {
            for (int j = i; j < 4; ++j) {
                Expo e{0, 0, 0, 0};
                ++e[i];
                ++e[j];
                q.add_term(e, BigComplex::from_double(d(rng), d(rng)));
            }
        }
        QuadricPairs p = quadric_to_pfaffian_pair(q);
        MultiPoly recon = p.l[0] * p.l[1] + p.l[2] * p.l[3];
        CHECK((recon - q).max_coeff_abs() <=
              cert_eps() * max(q.max_coeff_abs(), BigFloat(1)) * BigFloat(4096));
    }
}

TEST_CASE("block_representation realizes plane times quadric") {
    MultiPoly x = MultiPoly::variable(4, 0);
    QuadricPairs pair = quadric_to_pfaffian_pair(parse_poly("z*t"));
    PfaffianRep rep = block_representation(x, pair);
    MultiPoly target = parse_poly("x*z*t");
    PfaffianRep fixed = normalize_sign(rep, target);
    Certificate cert = certify(fixed.m, from_poly(target));
    CHECK(cert.pass);
    CHECK(fixed.branch == Branch::plane_split);

    QuadricPairs pair2 = quadric_to_pfaffian_pair(parse_poly("x^2"));
    MultiPoly target2 = parse_poly("x^3");
    PfaffianRep rep2 = normalize_sign(block_representation(x, pair2), target2);
    CHECK(certify(rep2.m, from_poly(target2)).pass);
}
