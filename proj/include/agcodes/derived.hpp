#ifndef AGCODES_DERIVED_HPP
#define AGCODES_DERIVED_HPP

#include <vector>

#include "agcodes/curve.hpp"
#include "agcodes/goppa.hpp"
#include "agcodes/linear_code.hpp"

namespace agcodes {

/// Parameters of the CSS-style quantum code obtained from the nested
/// pair C_a strictly inside C_b.
struct QuantumParams {
    long n = 0;
    long k = 0;
    long d_lower = 0;
    long defect = 0; // n - k - 2*d_lower + 2
    long defect_den = 0; // denominator of the relative defect (= n)
    double relative_defect = 0.0;
};

/// Requires qm-q-m-1 < a < b < qm.  Verifies C_a strictly inside C_b
/// as row spaces and cross-checks the closed-form dimensions against
/// matrix ranks.
QuantumParams quantum_from_nested(const Curve& curve, long a, long b);

struct ConvolutionalParams {
    long n = 0;
    long k = 0;
    long gamma = 0;
    long memory = 1;
    long df_lower = 0;
};

/// Unit-memory convolutional code parameters from C_r with abundance a.
/// Requires qm-q-m-1 < r < qm, r with property (*), 1 <= a <= (r+1-g)/2.
ConvolutionalParams convolutional_params(const Curve& curve, long r, long a);

/// All (r, a) pairs whose parameter tuple is (n, k, gamma; 1, df_lower).
std::vector<std::pair<long, long>> find_convolutional_params(const Curve& curve, long k, long gamma, long df_lower);

/// Locally recoverable code: evaluations of x^j y^i (0 <= j <= l,
/// 0 <= i <= q-2) at the qm points, whose fibers (the q points sharing
/// an alpha) are the recovery sets.
struct LrcCode {
    LinearCode code;
    long l = 0;
    long r0 = 0;      // locality, q-1
    long s0 = 0;      // number of fibers, m
    long k_lower = 0; // (q-1)(l+1)
    long d_lower = 0; // 2m - lq
    bool optimal = false;    // q = 2 case
    bool rate_tight = false; // l >= m-1 or rate equals r0/(r0+1)
    std::vector<FieldElement> betas;
    long fiber(long coordinate) const { return coordinate / (r0 + 1); }
    long position(long coordinate) const { return coordinate % (r0 + 1); }
};

/// Requires l >= 1 and 2m - lq >= 1.
LrcCode lrc_build(const Curve& curve, long l);

/// Recovers the erased coordinate of a codeword from the other r0
/// coordinates of its fiber by interpolating the degree <= r0-1
/// polynomial in y.  Throws if the word is not a codeword.
FieldElement lrc_recover(const LrcCode& lrc, std::span<const Field::Enc> codeword, long erased);

} // namespace agcodes

#endif
