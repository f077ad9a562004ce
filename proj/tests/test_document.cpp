#include <doctest.h>

#include "discrimina/document.hpp"
#include "discrimina/errors.hpp"
#include "support.hpp"

using namespace discrimina;
using nlohmann::json;
using testing_support::q;

namespace {

const std::string data_dir = DISCRIMINA_DATA_DIR;

json minimal(int n) {
    const json one = json::parse(R"({"pieces":[{"on":["0","1"],"coeffs":["1"]}]})");
    return json{{"version", 1}, {"n", n}, {"mode", "exact"}, {"phi1", one}, {"phi2", one}, {"psi1", one}, {"psi2", one}};
}

}  // namespace

TEST_CASE("factors") {
    const auto pieces = parse_factor(json::parse(R"({"pieces":[{"on":["0","1/2"],"coeffs":["1","-2"]},
                                                          {"on":["1/2","1"],"coeffs":["0"]}]})"));
    CHECK(pieces == PiecewisePoly::max_affine(0, 0, 1, -2));
    const auto affine = parse_factor(json::parse(R"({"maxAffine":[["6","0"],["-130","272"]]})"));
    CHECK(affine.breakpoints()[1] == q(1, 2));
    CHECK_THROWS_AS(parse_factor(json::parse(R"({"pieces":[{"on":["0","1/2"],"coeffs":["1"]}]})")), ParseError);
    CHECK_THROWS_AS(parse_factor(json::parse(R"({"pieces":[{"on":["0","1/2"],"coeffs":["1"]},
                                                           {"on":["2/3","1"],"coeffs":["1"]}]})")),
                    ParseError);
    CHECK_THROWS_AS(parse_factor(json::parse(R"({"maxAffine":[["1"]]})")), ParseError);
    CHECK_THROWS_AS(parse_factor(json::parse(R"({"spline":[]})")), ParseError);
}

TEST_CASE("rationals and coefficients") {
    CHECK(parse_rational_json(json("-7/21")) == q(-1, 3));
    CHECK(parse_rational_json(json(4)) == 4);
    CHECK_THROWS_AS(parse_rational_json(json(0.5)), ParseError);
    CHECK(parse_coefficients(json::parse(R"(["-1", 0, "1"])")) == Polynomial{-1, 0, 1});
    CHECK(parse_coefficients_argument(R"(["1","2"])") == Polynomial{1, 2});
    CHECK_THROWS_AS(parse_coefficients_argument("[1,"), ParseError);
    CHECK_THROWS_AS(parse_coefficients_argument("/nonexistent/coefficients.json"), ParseError);
    CHECK(parse_tolerance("1e-12") == 1e-12);
    CHECK_THROWS_AS(parse_tolerance("0"), ParseError);
    CHECK_THROWS_AS(parse_tolerance("abc"), ParseError);
}

TEST_CASE("documents") {
    auto doc = minimal(2);
    doc["phi1"] = json::parse(R"({"maxAffine":[["0","0"],["1","-2"]]})");
    const auto parsed = parse_kernel_document(doc);
    CHECK(parsed.n == 2);
    CHECK(parsed.mode == Mode::Exact);
    CHECK(parsed.psi2 == PiecewisePoly::constant(1));
    CHECK(parsed.phi1 == PiecewisePoly::max_affine(0, 0, 1, -2));

    auto missing = minimal(2);
    missing.erase("psi1");
    CHECK_THROWS_AS(parse_kernel_document(missing), ParseError);

    auto bad = minimal(2);
    bad["colour"] = "blue";
    CHECK_THROWS_AS(parse_kernel_document(bad), ParseError);
    bad = minimal(2);
    bad["version"] = 2;
    CHECK_THROWS_AS(parse_kernel_document(bad), ParseError);
    bad = minimal(0);
    CHECK_THROWS_AS(parse_kernel_document(bad), ParseError);
    bad = minimal(2);
    bad["mode"] = "symbolic";
    CHECK_THROWS_AS(parse_kernel_document(bad), ParseError);
    CHECK_THROWS_AS(load_kernel_document("/nonexistent/kernel.json"), ParseError);
}

TEST_CASE("round trip preserves exact moments") {
    for (const char* name : {"max_affine_n2_eps0.json", "max_affine_n3_eps2.json", "max_affine_n3_eps1_5.json",
                             "linear_xy_kernel.json", "constant_kernel_n2.json"}) {
        const auto doc = load_kernel_document(data_dir + "/" + name);
        const auto again = parse_kernel_document(json::parse(to_json(doc).dump()));
        CHECK(compute_moments(to_kernel_spec(doc)) == compute_moments(to_kernel_spec(again)));
        CHECK(to_json(again) == to_json(doc));
    }
}

TEST_CASE("numeric documents") {
    const auto doc = load_kernel_document(data_dir + "/max_affine_n2_eps0_numeric.json");
    CHECK(doc.mode == Mode::Numeric);
    REQUIRE(doc.tol);
    CHECK(*doc.tol == 1e-12);
    const auto nk = to_numeric_kernel(doc);
    CHECK(nk.psi2(1.0) == doctest::Approx(142));
    CHECK(nk.phi1(0.0) == doctest::Approx(1));
}
