#include "agcodes/verify.hpp"

#include <algorithm>
#include <sstream>

#include "agcodes/goppa.hpp"
#include "agcodes/oracle.hpp"

namespace agcodes {

std::vector<CheckResult> run_verification(const Curve& curve, bool with_oracle, const std::vector<long>& ghw_ls) {
    std::vector<CheckResult> out;
    const auto check = [&](const std::string& name, bool pass, const std::string& detail = "") {
        out.push_back({name, pass, detail});
    };
    const Field& K = curve.field();
    const long R = 2 * curve.n - curve.q - curve.m - 1;

    {
        bool ok = static_cast<long>(curve.points.size()) == curve.n;
        std::vector<Field::Enc> f_enc;
        for (const auto& c : curve.f) f_enc.push_back(c.enc());
        for (const auto& pt : curve.points) {
            const Field::Enc lhs = K.add(K.pow(pt.beta.enc(), curve.q), K.mul(curve.spec.mu.enc(), pt.beta.enc()));
            if (lhs != K.poly_eval(f_enc, pt.alpha.enc()) || lhs != 0) ok = false;
        }
        check("point-validity", ok);
    }
    {
        bool ok = static_cast<long>(curve.betas.size()) == curve.q;
        bool has_zero = false;
        for (const auto& b1 : curve.betas) {
            if (b1.is_zero()) has_zero = true;
            for (const auto& b2 : curve.betas)
                if (std::none_of(curve.betas.begin(), curve.betas.end(),
                                 [&](const FieldElement& b3) { return b3 == b1 + b2; }))
                    ok = false;
        }
        check("beta-subgroup", ok && has_zero);
    }
    check("weak-castle", weak_castle_check(curve));
    {
        bool ok = true;
        long members = 0; // running |H(r)|
        for (long r = 0; r <= 2 * curve.n; ++r) {
            if (curve.semigroup.member(r)) ++members;
            if (static_cast<long>(rr_basis(curve, r).size()) != members) ok = false;
            if (r >= 2 * curve.genus - 1 && members != r + 1 - curve.genus) ok = false;
        }
        check("rr-basis-sizes", ok);
    }

    std::vector<LinearCode> codes;
    codes.reserve(R + 1);
    for (long r = 0; r <= R; ++r) codes.push_back(build_code(curve, r).code);

    {
        bool ok = true;
        std::ostringstream bad;
        for (long r = 0; r <= R; ++r)
            if (static_cast<long>(codes[r].k()) != dimension_formula(curve, r)) {
                ok = false;
                bad << ' ' << r;
            }
        check("rank-vs-formula", ok, ok ? "" : "r:" + bad.str());
    }
    {
        const auto scale = dual_scaling_vector(curve);
        bool ok = true;
        for (long r = 0; r <= R; ++r) {
            const long s = R - r;
            Matrix scaled = codes[s].generator();
            for (std::size_t c = 0; c < scaled.cols(); ++c) scaled.scale_column(c, scale[c].enc());
            if (!(codes[r].generator() * scaled.transposed()).is_zero()) ok = false;
            if (static_cast<long>(codes[r].k() + dual_code(curve, r).k()) != curve.n) ok = false;
        }
        check("duality", ok);
    }
    {
        bool ok = true;
        for (long r = 1; r <= R; ++r)
            if (!codes[r].contains(codes[r - 1])) ok = false;
        check("nesting", ok);
    }
    {
        bool ok = true;
        for (long r = curve.n - curve.q - curve.m + 1; r <= curve.n - 2; ++r)
            if (quasi_self_dual(curve, r) != (2 * r == R)) ok = false;
        check("quasi-self-dual", ok);
    }

    if (with_oracle && curve.n <= 24) {
        bool d_ok = true, ghw_ok = true, dk_ok = true, mds_ok = true;
        std::ostringstream d_bad, ghw_bad;
        for (long r = 0; r <= R; ++r) {
            const long d = oracle::exact_min_distance_auto(codes[r]);
            const Bound b = min_distance(curve, r);
            if (d < b.lower || d > b.upper || (b.exact && d != b.lower)) {
                d_ok = false;
                d_bad << ' ' << r;
            }
            // Exact distances at multiples of q or m in the Riemann-Roch
            // range rule out meeting the Singleton bound.
            const long k = static_cast<long>(codes[r].k());
            const bool mult = (r % curve.q == 0 && r / curve.q < curve.m) || (r % curve.m == 0 && r / curve.m < curve.q);
            if (mult && r >= curve.n - curve.q - curve.m && d == curve.n - k + 1) mds_ok = false;

            for (long l : ghw_ls) {
                if (l < 1 || l > k) continue;
                const long g = oracle::exact_ghw(codes[r], l);
                const Bound gb = ghw(curve, r, l);
                if (g < gb.lower || g > gb.upper || (gb.exact && g != gb.lower)) {
                    ghw_ok = false;
                    ghw_bad << " (" << r << ',' << l << ')';
                }
            }
            if (oracle::exact_ghw(codes[r], k) != curve.n) dk_ok = false;
        }
        check("oracle-distance-bounds", d_ok, d_ok ? "" : "r:" + d_bad.str());
        check("oracle-ghw-bounds", ghw_ok, ghw_ok ? "" : "(r,l):" + ghw_bad.str());
        check("oracle-top-weight", dk_ok);
        check("oracle-non-mds", mds_ok);
    }
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.pass; });
}

} // namespace agcodes
