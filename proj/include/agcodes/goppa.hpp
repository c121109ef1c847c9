#ifndef AGCODES_GOPPA_HPP
#define AGCODES_GOPPA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "agcodes/curve.hpp"
#include "agcodes/linear_code.hpp"

namespace agcodes {

/// An integer interval certified by named results; exact means the two
/// endpoints coincide.
struct Bound {
    long lower = 1;
    long upper = 1;
    bool exact = false;
    std::string source;
};

/// C_r: evaluations of L(r * Q_infinity) at the qm rational points.
struct OnePointCode {
    long r = 0;
    LinearCode code;
};

/// Evaluation code of the monomial basis at the canonical point order;
/// zero code for r < 0, the full space once r exceeds 2qm - q - m - 1.
OnePointCode build_code(const Curve& curve, long r);

/// Closed-form dimension of C_r for 0 <= r <= 2qm - q - m - 1:
/// |H(r)| below qm, and qm - |H(2qm-q-m-1-r)| from qm on.
long dimension_formula(const Curve& curve, long r);

/// The vector that twists C_{2qm-q-m-1-r} into the dual of C_r:
/// component at P is 1 / f'(alpha(P)).
std::vector<FieldElement> dual_scaling_vector(const Curve& curve);

/// Generator of the dual of C_r, built as the scaled C_{2qm-q-m-1-r}.
LinearCode dual_code(const Curve& curve, long r);

/// Minimum-distance bound for C_r, intersecting every applicable
/// named result; exact for r = qb (b < m), r = cm (c < q), for r or
/// qm-r with property (*), and in the high range via the largest pole
/// number below the dual degree.
Bound min_distance(const Curve& curve, long r);

/// l-th generalized Hamming weight bound for C_r, 1 <= l <= dim C_r.
Bound ghw(const Curve& curve, long r, long l);

/// True iff r = (2qm - q - m - 1)/2; requires qm-q-m+1 <= r <= qm-2.
/// A true result is additionally certified by comparing the dual with
/// the scaled code as row spaces.
bool quasi_self_dual(const Curve& curve, long r);

/// Everything the CLI reports for one (curve, r).
struct ParamReport {
    long r = 0;
    long n = 0;
    long k = 0;
    Bound d;
    std::map<long, Bound> ghw; // keyed by l
    bool quasi_self_dual = false;
    bool mds = false;
    std::optional<long> oracle_d;
    std::map<long, long> oracle_ghw;
};

/// Builds the report; oracle fields are filled by the caller when
/// requested (they live in the oracle module).
ParamReport make_report(const Curve& curve, long r, const std::vector<long>& ghw_ls);

} // namespace agcodes

#endif
