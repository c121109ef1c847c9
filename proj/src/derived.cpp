#include "agcodes/derived.hpp"

#include <algorithm>
#include <stdexcept>

namespace agcodes {

QuantumParams quantum_from_nested(const Curve& curve, long a, long b) {
    const long n = curve.n;
    if (!(n - curve.q - curve.m - 1 < a && a < b && b < n))
        throw std::invalid_argument("RangeViolation: need qm-q-m-1 < a < b < qm");

    const auto ca = build_code(curve, a);
    const auto cb = build_code(curve, b);
    if (!cb.code.contains(ca.code) || ca.code.k() >= cb.code.k())
        throw std::logic_error("NotNested: C_a not strictly inside C_b");

    // Both r sit above 2g-2, so dim C_r = r + 1 - g; cross-check ranks.
    const long ka = dimension_formula(curve, a);
    const long kb = dimension_formula(curve, b);
    if (ka != static_cast<long>(ca.code.k()) || kb != static_cast<long>(cb.code.k()))
        throw std::logic_error("dimension formula disagrees with matrix rank");

    QuantumParams qp;
    qp.n = n;
    qp.k = kb - ka; // = b - a in this range
    qp.d_lower = std::min(n - b, a - n + curve.q + curve.m + 1);
    qp.defect = n - qp.k - 2 * qp.d_lower + 2;
    qp.defect_den = n;
    qp.relative_defect = static_cast<double>(qp.defect) / static_cast<double>(n);
    return qp;
}

ConvolutionalParams convolutional_params(const Curve& curve, long r, long a) {
    const long n = curve.n;
    if (!(n - curve.q - curve.m - 1 < r && r < n))
        throw std::invalid_argument("RangeViolation: need qm-q-m-1 < r < qm");
    if (!curve.semigroup.has_property_star(r))
        throw std::invalid_argument("NoStarProperty: r must have property (*)");
    if (a < 1 || 2 * a > r + 1 - curve.genus)
        throw std::invalid_argument("AbundanceTooLarge: need 1 <= a <= (r+1-g)/2");

    ConvolutionalParams cp;
    cp.n = n;
    cp.k = r + 1 - curve.genus - a;
    cp.gamma = a;
    cp.memory = 1;
    cp.df_lower = n - r; // exact distance of C_r by the property-(*) criterion
    return cp;
}

std::vector<std::pair<long, long>> find_convolutional_params(const Curve& curve, long k, long gamma, long df_lower) {
    std::vector<std::pair<long, long>> found;
    for (long r = curve.n - curve.q - curve.m; r < curve.n; ++r) {
        if (!curve.semigroup.has_property_star(r)) continue;
        for (long a = 1; 2 * a <= r + 1 - curve.genus; ++a) {
            const auto cp = convolutional_params(curve, r, a);
            if (cp.k == k && cp.gamma == gamma && cp.df_lower == df_lower) found.emplace_back(r, a);
        }
    }
    return found;
}

LrcCode lrc_build(const Curve& curve, long l) {
    if (l < 1) throw std::invalid_argument("l must be >= 1");
    const long q = curve.q;
    const long m = curve.m;
    if (2 * m - l * q < 1)
        throw std::invalid_argument("DistanceBoundNonpositive: need 2m - lq >= 1");

    Matrix rows(curve.spec.field, 0, curve.n);
    std::vector<Field::Enc> row(curve.n);
    for (long i = 0; i <= q - 2; ++i)
        for (long j = 0; j <= l; ++j) {
            for (const auto& pt : curve.points) row[pt.index] = eval_monomial(curve, {j, i}, pt).enc();
            rows.append_row(row);
        }

    LrcCode lrc{LinearCode::from_rows(rows), l,     q - 1, m, (q - 1) * (l + 1),
                2 * m - l * q,               q == 2, false, curve.betas};
    const long k = static_cast<long>(lrc.code.k());
    if (k < lrc.k_lower) throw std::logic_error("LRC rank below (q-1)(l+1)");
    // Rate cap k/n <= r0/(r0+1); tight when l >= m-1 (and then equal).
    lrc.rate_tight = l >= m - 1 || k * (lrc.r0 + 1) == lrc.r0 * curve.n;
    return lrc;
}

FieldElement lrc_recover(const LrcCode& lrc, std::span<const Field::Enc> codeword, long erased) {
    const LinearCode& code = lrc.code;
    if (erased < 0 || erased >= static_cast<long>(code.n())) throw std::invalid_argument("erased index out of range");
    if (!code.contains(codeword)) throw std::invalid_argument("NotACodeword: word is not in the code");

    const Field& f = *code.field();
    const long q = lrc.r0 + 1;
    const long fiber_base = lrc.fiber(erased) * q;
    const FieldElement x = lrc.betas[lrc.position(erased)];

    // Lagrange interpolation of the degree <= r0-1 polynomial in y through
    // the r0 surviving points of the fiber.
    FieldElement acc = f.zero();
    for (long t = 0; t < q; ++t) {
        if (fiber_base + t == erased) continue;
        FieldElement term = f.element(codeword[fiber_base + t]);
        for (long u = 0; u < q; ++u) {
            if (u == t || fiber_base + u == erased) continue;
            term = term * ((x - lrc.betas[u]) / (lrc.betas[t] - lrc.betas[u]));
        }
        acc = acc + term;
    }
    return acc;
}

} // namespace agcodes
