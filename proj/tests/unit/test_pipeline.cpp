#include <doctest.h>

#include "pfaffcubic/pipeline.hpp"

using namespace pfc;

TEST_CASE("represent handles the Fermat cubic on the irreducible branch") {
    PipelineResult r = represent(parse_cubic("x^3+y^3+z^3+t^3"));
    CHECK(r.rep.branch == Branch::irreducible);
    CHECK(r.rep.certificate.pass);
    CHECK(r.rep.pf_sign == 1);
    MultiPoly pf = pfaffian_symbolic(r.rep.m);
    MultiPoly f = parse_poly("x^3+y^3+z^3+t^3");
    CHECK((pf - f).max_coeff_abs() <= cert_eps());
}

TEST_CASE("represent rotates a reducible slice of an irreducible surface") {
    PipelineResult r = represent(parse_cubic("x*t*z+y^3"));
    CHECK(r.rep.branch == Branch::rotated);
    CHECK(r.rep.certificate.pass);
    CHECK(r.rotation.has_value());
    MultiPoly pf = pfaffian_symbolic(r.rep.m);
    CHECK((pf - parse_poly("x*t*z+y^3")).max_coeff_abs() <= cert_eps());
}

TEST_CASE("represent splits a plane component") {
    PipelineResult r = represent(parse_cubic("z*(x^2+t^2+z^2)"));
    CHECK(r.rep.branch == Branch::plane_split);
    CHECK(r.rep.certificate.pass);
    CHECK(r.classification == "surface_reducible");
    CHECK(r.plane.has_value());
}

TEST_CASE("represent routes a zero slice through the plane split") {
    PipelineResult r = represent(parse_cubic("y*(x^2+t*z)"));
    CHECK(r.rep.branch == Branch::plane_split);
    CHECK(r.rep.certificate.pass);
    REQUIRE(r.plane.has_value());
    CHECK(r.plane->degree_in(1) == 1);
}

TEST_CASE("represent clears the y*t^2 monomial before building") {
    PipelineResult r = represent(parse_cubic("x^3-t^2*z+y*t^2"));
    CHECK(r.rep.certificate.pass);
    REQUIRE(r.composite.has_value());
    MultiPoly h = substitute_linear(parse_poly("x^3-t^2*z+y*t^2"), *r.composite);
    CHECK(abs(h.coeff({0, 1, 0, 2})) <= cert_eps() * max(h.max_coeff_abs(), BigFloat(1)));
}

TEST_CASE("represent rejects the zero cubic") {
    CubicSurface zero{};
    CHECK_THROWS_AS(represent(zero), ZeroPolynomial);
}

TEST_CASE("output documents verify and react to perturbation") {
    PipelineResult r = represent(parse_cubic("x^3+y^3+z^3+t^3"));
    nlohmann::json doc = result_to_json(r);
    doc["cubic"] = "x^3+y^3+z^3+t^3";

    Certificate pass_cert = verify_document(doc);
    CHECK(pass_cert.pass);

    nlohmann::json bad = doc;
    LinearMatrix m = matrices_from_json(bad["matrices"]);
    m.coefficient_matrix(0)[0][1] += BigComplex::from_double(1e-3);
    m.coefficient_matrix(0)[1][0] -= BigComplex::from_double(1e-3);
    bad["matrices"] = matrices_to_json(m);
    Certificate fail_cert = verify_document(bad);
    CHECK_FALSE(fail_cert.pass);
    CHECK(fail_cert.pf_residual > BigFloat(1e-5));
    CHECK(fail_cert.pf_residual < BigFloat(1e-1));

    nlohmann::json skewless = doc;
    LinearMatrix m2 = matrices_from_json(skewless["matrices"]);
    m2.coefficient_matrix(2)[0][3] += BigComplex(1);
    skewless["matrices"] = matrices_to_json(m2);
    CHECK_THROWS_AS(verify_document(skewless), NotSkew);

    CHECK_THROWS_AS(verify_document(nlohmann::json::object()), SchemaError);
}

TEST_CASE("identical runs give byte-identical JSON") {
    PipelineOptions opts;
    opts.seed = 42;
    std::string a = result_to_json(represent(parse_cubic("x^3+2*y^3-z^3+t^3+x*y*z"), opts)).dump();
    std::string b = result_to_json(represent(parse_cubic("x^3+2*y^3-z^3+t^3+x*y*z"), opts)).dump();
    CHECK(a == b);
}

TEST_CASE("both d11 branches certify") {
    for (int branch : {1, -1}) {
        PipelineOptions opts;
        opts.d11_branch = branch;
        PipelineResult r = represent(parse_cubic("x^3+y^3+z^3+t^3+x*y*t"), opts);
        CHECK(r.rep.certificate.pass);
    }
}
