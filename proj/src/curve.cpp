#include "agcodes/curve.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace agcodes {

namespace {

bool is_power_of(long q, long p) {
    if (q < p) return false;
    while (q % p == 0) q /= p;
    return q == 1;
}

// Roots in K of T^q + mu*T, ascending by encoding.
std::vector<FieldElement> additive_roots(const Field& f, long q, Field::Enc mu) {
    std::vector<FieldElement> roots;
    for (Field::Enc t = 0; t < static_cast<Field::Enc>(f.order()); ++t) {
        if (f.add(f.pow(t, q), f.mul(mu, t)) == 0) roots.push_back(f.element(t));
    }
    return roots;
}

} // namespace

Curve validate_curve(const CurveSpec& spec) {
    if (!spec.field) throw std::invalid_argument("curve needs a field");
    const Field& K = *spec.field;

    if (spec.mu.is_zero()) throw std::invalid_argument("MuZero: mu must be nonzero");
    if (&spec.mu.field() != &K) throw std::invalid_argument("SpecMismatch: mu from a different field");
    if (!is_power_of(spec.q, K.p()))
        throw std::invalid_argument("QNotPowerOfP: q must be a positive power of p");

    const long m = static_cast<long>(spec.alphas.size());
    if (m % K.p() == 0) throw std::invalid_argument("MDivisibleByP: m must be coprime to p");
    if (m >= K.order()) throw std::invalid_argument("MTooLarge: m must be < p^s");
    if (spec.q < 2 || m < 2) throw std::invalid_argument("Degenerate: min{q, m} must be >= 2");

    std::set<Field::Enc> seen;
    for (const auto& a : spec.alphas) {
        if (&a.field() != &K) throw std::invalid_argument("SpecMismatch: alpha from a different field");
        if (!seen.insert(a.enc()).second) throw std::invalid_argument("AlphasNotDistinct: alphas must be pairwise distinct");
    }

    auto betas = additive_roots(K, spec.q, spec.mu.enc());
    if (static_cast<long>(betas.size()) != spec.q)
        throw std::invalid_argument("RootsNotSplit: T^q + mu*T must have q roots in the field");

    Curve cv{spec, spec.q, m, spec.q * m, (spec.q - 1) * (m - 1) / 2,
             std::move(betas), {}, NumericalSemigroup(spec.q, m), {}, {}};

    cv.points.reserve(cv.n);
    long idx = 0;
    for (const auto& a : spec.alphas)
        for (const auto& b : cv.betas) cv.points.push_back({a, b, idx++});

    // Expand f(x) = prod (x - alpha_i).
    cv.f = {K.one()};
    for (const auto& a : spec.alphas) {
        std::vector<FieldElement> next(cv.f.size() + 1, K.zero());
        for (std::size_t i = 0; i < cv.f.size(); ++i) {
            next[i + 1] = next[i + 1] + cv.f[i];
            next[i] = next[i] - a * cv.f[i];
        }
        cv.f = std::move(next);
    }
    cv.f_prime = poly_derivative(cv.f);
    return cv;
}

std::vector<Monomial> rr_basis(const Curve& curve, long r) {
    std::vector<Monomial> basis;
    if (r < 0) return basis;
    for (long j = 0; j < curve.q && j * curve.m <= r; ++j)
        for (long i = 0; curve.q * i + curve.m * j <= r; ++i) basis.push_back({i, j});
    std::sort(basis.begin(), basis.end(), [&](const Monomial& a, const Monomial& b) {
        return curve.q * a.i + curve.m * a.j < curve.q * b.i + curve.m * b.j;
    });
    return basis;
}

FieldElement eval_monomial(const Curve& curve, const Monomial& mono, const RationalPoint& pt) {
    (void)curve;
    return pt.alpha.pow(mono.i) * pt.beta.pow(mono.j);
}

bool fibers_complete(const std::vector<RationalPoint>& points, const std::vector<FieldElement>& alphas, long q) {
    for (const auto& a : alphas) {
        long count = 0;
        for (const auto& pt : points)
            if (pt.alpha == a) ++count;
        if (count != q) return false;
    }
    return true;
}

bool weak_castle_check(const Curve& curve) {
    if (!fibers_complete(curve.points, curve.spec.alphas, curve.q)) return false;
    const long two_g = 2 * curve.genus;
    for (long x = 0; x <= two_g - 1; ++x)
        if (curve.semigroup.member(x) == curve.semigroup.member(two_g - 1 - x)) return false;
    return true;
}

std::vector<FieldElement> scan_mu(const std::shared_ptr<const Field>& field, long q) {
    if (!field) throw std::invalid_argument("scan_mu needs a field");
    if (!is_power_of(q, field->p()))
        throw std::invalid_argument("QNotPowerOfP: q must be a positive power of p");
    std::vector<FieldElement> out;
    for (Field::Enc mu = 1; mu < static_cast<Field::Enc>(field->order()); ++mu) {
        if (static_cast<long>(additive_roots(*field, q, mu).size()) == q) out.push_back(field->element(mu));
    }
    return out;
}

} // namespace agcodes
