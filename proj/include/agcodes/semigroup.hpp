#ifndef AGCODES_SEMIGROUP_HPP
#define AGCODES_SEMIGROUP_HPP

#include <vector>

namespace agcodes {

/// The numerical semigroup H = <q, m> with gcd(q, m) = 1 and q, m >= 2.
///
/// Membership is tabulated over [0, 2c + q + m] where c = (q-1)(m-1) is
/// the conductor; every integer >= c is a member, so queries beyond the
/// table answer true.  Genus g = (q-1)(m-1)/2 and the semigroup is
/// symmetric: x in H iff 2g-1-x not in H for 0 <= x <= 2g-1.
class NumericalSemigroup {
public:
    NumericalSemigroup(long q, long m);

    long q() const { return q_; }
    long m() const { return m_; }
    long genus() const { return genus_; }
    long conductor() const { return conductor_; }
    long table_bound() const { return bound_; }

    bool member(long x) const;

    /// |H(b)| = number of members <= b.  Requires 0 <= b <= table_bound().
    long count_upto(long b) const;

    /// a-th pole number, 1-indexed: pole_number(1) = 0.
    long pole_number(long a) const;

    std::vector<long> gaps() const;

    /// D(y) = { a in H : y - a in H }.  Requires y in H.
    std::vector<long> divisor_set(long y) const;

    /// Feng-Rao distance: min |D(m1)| over m1 in H with m1 >= x.
    /// Requires x in H.  The search stops at 2c - 1; past that point
    /// |D(m1)| = m1 + 1 - 2g grows strictly, so the tail minimum is
    /// taken in closed form.
    long feng_rao(long x) const;

    /// Property (*): 0 <= r <= qm, r in H, and r = iq (i >= 0) or
    /// r = jm with 0 <= j <= q-1.
    bool has_property_star(long r) const;

    /// Largest r' <= v with property (*); 0 always qualifies.
    /// Requires v >= 0.
    long largest_star_below(long v) const;

private:
    long q_, m_, genus_, conductor_, bound_;
    std::vector<char> member_;
    std::vector<long> pole_numbers_;
};

} // namespace agcodes

#endif
