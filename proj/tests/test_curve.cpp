#include <doctest.h>

#include <stdexcept>

#include "agcodes/curve.hpp"

using namespace agcodes;

namespace {

CurveSpec f4_spec(Field::Enc mu) {
    CurveSpec spec;
    spec.field = Field::make(2, 2);
    spec.q = 2;
    spec.mu = spec.field->element(mu);
    for (Field::Enc a : {0u, 1u, 2u}) spec.alphas.push_back(spec.field->element(a));
    return spec;
}

CurveSpec f9_spec() {
    CurveSpec spec;
    spec.field = Field::make(3, 2);
    spec.q = 3;
    spec.mu = spec.field->element(2);
    for (Field::Enc a : {0u, 1u, 2u, 3u}) spec.alphas.push_back(spec.field->element(a));
    return spec;
}

std::vector<Field::Enc> encs(const std::vector<FieldElement>& v) {
    std::vector<Field::Enc> out;
    for (const auto& e : v) out.push_back(e.enc());
    return out;
}

} // namespace

TEST_CASE("y^2 + w y = x(x-1)(x-w) over GF(4)") {
    const Curve cv = validate_curve(f4_spec(2));
    CHECK(cv.genus == 1);
    CHECK(cv.n == 6);
    CHECK(encs(cv.betas) == std::vector<Field::Enc>{0, 2});
    CHECK(cv.points.size() == 6);
    // Canonical order: alphas as given, betas ascending.
    CHECK(cv.points[0].alpha.enc() == 0);
    CHECK(cv.points[1].beta.enc() == 2);
    CHECK(cv.points[4].alpha.enc() == 2);
    for (const auto& pt : cv.points) CHECK(pt.beta.pow(2) + cv.spec.mu * pt.beta == cv.field().zero());
    CHECK(cv.points[3].index == 3);
}

TEST_CASE("mu = 1 variant: T^2 + T = T(T+1)") {
    const Curve cv = validate_curve(f4_spec(1));
    CHECK(encs(cv.betas) == std::vector<Field::Enc>{0, 1});
    CHECK(cv.genus == 1);
    CHECK(cv.n == 6);
}

TEST_CASE("GF(9), q = 3, m = 4") {
    // mu found by scanning: T^3 + mu T needs 3 roots.
    auto f9 = Field::make(3, 2);
    const auto mus = scan_mu(f9, 3);
    REQUIRE(!mus.empty());
    CHECK(mus.front().enc() == 1); // first splitting mu by encoding

    const Curve cv = validate_curve(f9_spec());
    CHECK(cv.genus == 3);
    CHECK(cv.n == 12);
    CHECK(encs(cv.betas) == std::vector<Field::Enc>{0, 1, 2});
}

TEST_CASE("beta sets form additive subgroups") {
    for (const Curve& cv : {validate_curve(f4_spec(2)), validate_curve(f9_spec())}) {
        CHECK(static_cast<long>(cv.betas.size()) == cv.q);
        bool zero = false;
        for (const auto& b : cv.betas)
            if (b.is_zero()) zero = true;
        CHECK(zero);
        for (const auto& b1 : cv.betas)
            for (const auto& b2 : cv.betas) {
                bool closed = false;
                for (const auto& b3 : cv.betas)
                    if (b3 == b1 + b2) closed = true;
                CHECK(closed);
            }
    }
}

TEST_CASE("validation errors") {
    auto spec = f4_spec(2);
    spec.mu = spec.field->zero();
    CHECK_THROWS_WITH_AS(validate_curve(spec), doctest::Contains("MuZero"), std::invalid_argument);

    spec = f4_spec(2);
    spec.q = 3;
    CHECK_THROWS_WITH_AS(validate_curve(spec), doctest::Contains("QNotPowerOfP"), std::invalid_argument);

    spec = f4_spec(2);
    spec.q = 4; // T^4 + w T has only its roots in GF(16), not GF(4)
    CHECK_THROWS_WITH_AS(validate_curve(spec), doctest::Contains("RootsNotSplit"), std::invalid_argument);

    spec = f4_spec(2);
    spec.alphas.push_back(spec.field->element(3)); // m = 4 = 2^2 divisible by p
    CHECK_THROWS_WITH_AS(validate_curve(spec), doctest::Contains("MDivisibleByP"), std::invalid_argument);

    spec = f4_spec(2);
    spec.alphas = {spec.field->element(0), spec.field->element(1), spec.field->element(1)};
    CHECK_THROWS_WITH_AS(validate_curve(spec), doctest::Contains("AlphasNotDistinct"), std::invalid_argument);

    spec = f9_spec();
    spec.alphas.clear();
    for (Field::Enc a = 0; a < 9; ++a) spec.alphas.push_back(spec.field->element(a)); // hits m < p^s first
    CHECK_THROWS_AS(validate_curve(spec), std::invalid_argument);

    spec = f4_spec(2);
    spec.alphas = {spec.field->element(0)};
    CHECK_THROWS_WITH_AS(validate_curve(spec), doctest::Contains("Degenerate"), std::invalid_argument);
}

TEST_CASE("Riemann-Roch basis") {
    const Curve cv = validate_curve(f4_spec(2));
    const auto b4 = rr_basis(cv, 4);
    REQUIRE(b4.size() == 4);
    // {1, x, y, x^2} in pole order 0, 2, 3, 4
    CHECK((b4[0].i == 0 && b4[0].j == 0));
    CHECK((b4[1].i == 1 && b4[1].j == 0));
    CHECK((b4[2].i == 0 && b4[2].j == 1));
    CHECK((b4[3].i == 2 && b4[3].j == 0));

    CHECK(rr_basis(cv, 0).size() == 1);
    CHECK(rr_basis(cv, 2 * cv.genus - 1).size() == 1);
    CHECK(rr_basis(cv, -1).empty());
    CHECK(rr_basis(cv, -100).empty());

    // Sizes match the semigroup count everywhere, and the pole orders
    // are strictly increasing (no ties since gcd(q, m) = 1).
    long members = 0;
    for (long r = 0; r <= 2 * cv.n; ++r) {
        if (cv.semigroup.member(r)) ++members;
        const auto basis = rr_basis(cv, r);
        CHECK(static_cast<long>(basis.size()) == members);
        for (std::size_t i = 1; i < basis.size(); ++i)
            CHECK(cv.q * basis[i - 1].i + cv.m * basis[i - 1].j < cv.q * basis[i].i + cv.m * basis[i].j);
        if (r >= 2 * cv.genus - 1) CHECK(static_cast<long>(basis.size()) == r + 1 - cv.genus);
    }
}

TEST_CASE("monomial evaluation") {
    const Curve cv = validate_curve(f4_spec(2));
    const auto& pts = cv.points;
    CHECK(eval_monomial(cv, {0, 0}, pts[3]) == cv.field().one());
    // (1,0) at P_{w,0}: x-coordinate projection.
    CHECK(eval_monomial(cv, {1, 0}, pts[4]).enc() == 2);
    // (1,1) at P_{1,w}: 1 * w.
    CHECK(pts[3].alpha.enc() == 1);
    CHECK(pts[3].beta.enc() == 2);
    CHECK(eval_monomial(cv, {1, 1}, pts[3]).enc() == 2);
}

TEST_CASE("weak Castle check") {
    for (const Curve& cv : {validate_curve(f4_spec(2)), validate_curve(f4_spec(1)), validate_curve(f9_spec())})
        CHECK(weak_castle_check(cv));

    Curve broken = validate_curve(f4_spec(2));
    broken.points.pop_back(); // truncated fiber
    CHECK_FALSE(weak_castle_check(broken));
    CHECK_FALSE(fibers_complete(broken.points, broken.spec.alphas, broken.q));
}

TEST_CASE("point order is deterministic") {
    const Curve a = validate_curve(f4_spec(2));
    const Curve b = validate_curve(f4_spec(2));
    REQUIRE(a.points.size() == b.points.size());
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].alpha == b.points[i].alpha);
        CHECK(a.points[i].beta == b.points[i].beta);
    }
}
