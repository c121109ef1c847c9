#ifndef AGCODES_CURVE_HPP
#define AGCODES_CURVE_HPP

#include <memory>
#include <vector>

#include "agcodes/field.hpp"
#include "agcodes/semigroup.hpp"

namespace agcodes {

/// Input description of the curve y^q + mu*y = f(x) over GF(p^s),
/// with f(x) = prod (x - alpha_i) over the given alphas.
struct CurveSpec {
    std::shared_ptr<const Field> field;
    long q = 0;
    FieldElement mu;
    std::vector<FieldElement> alphas;
};

/// A rational point P_{alpha, beta}: beta^q + mu*beta = f(alpha) = 0.
struct RationalPoint {
    FieldElement alpha;
    FieldElement beta;
    long index = 0;
};

/// Monomial x^i y^j; its pole order at the place at infinity is qi + mj.
struct Monomial {
    long i = 0;
    long j = 0;
};

/// A validated curve: genus, the additive roots beta of T^q + mu*T,
/// the qm rational points in canonical order (alphas as given, betas
/// by ascending encoding), the Weierstrass semigroup <q, m>, and the
/// expanded f(x) with its formal derivative.
struct Curve {
    CurveSpec spec;
    long q = 0;
    long m = 0;
    long n = 0; // qm
    long genus = 0;
    std::vector<FieldElement> betas;
    std::vector<RationalPoint> points;
    NumericalSemigroup semigroup;
    std::vector<FieldElement> f;       // coefficients, constant term first
    std::vector<FieldElement> f_prime; // formal derivative of f

    const Field& field() const { return *spec.field; }
};

/// Checks every invariant of the spec and builds the derived data.
/// Throws std::invalid_argument naming the violated condition.
Curve validate_curve(const CurveSpec& spec);

/// Monomial basis of L(r * Q_infinity): all x^i y^j with i >= 0,
/// 0 <= j <= q-1 and qi + mj <= r, ordered by pole order (unique since
/// gcd(q, m) = 1).  Empty for r < 0.
std::vector<Monomial> rr_basis(const Curve& curve, long r);

FieldElement eval_monomial(const Curve& curve, const Monomial& mono, const RationalPoint& pt);

/// True iff every fiber over an alpha holds exactly q of the listed
/// points and the Weierstrass semigroup is symmetric.
bool weak_castle_check(const Curve& curve);

/// Fiber-completeness part of the weak-Castle check, on its own so a
/// doctored point list can be probed directly.
bool fibers_complete(const std::vector<RationalPoint>& points, const std::vector<FieldElement>& alphas, long q);

/// All mu (ascending encoding) for which T^q + mu*T has q distinct
/// roots in the field; the helper behind `curve scan-mu`.
std::vector<FieldElement> scan_mu(const std::shared_ptr<const Field>& field, long q);

} // namespace agcodes

#endif
