#include "agcodes/semigroup.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace agcodes {

NumericalSemigroup::NumericalSemigroup(long q, long m) : q_(q), m_(m) {
    if (q < 2 || m < 2) throw std::invalid_argument("Degenerate: semigroup generators must be >= 2");
    if (std::gcd(q, m) != 1) throw std::invalid_argument("NotCoprime: gcd(q, m) must be 1");
    genus_ = (q - 1) * (m - 1) / 2;
    conductor_ = (q - 1) * (m - 1);
    bound_ = 2 * conductor_ + q + m;

    member_.assign(bound_ + 1, 0);
    for (long a = 0; a * q <= bound_; ++a)
        for (long b = 0; a * q + b * m <= bound_; ++b) member_[a * q + b * m] = 1;

    pole_numbers_.reserve(bound_ + 1);
    for (long x = 0; x <= bound_; ++x)
        if (member_[x]) pole_numbers_.push_back(x);
}

bool NumericalSemigroup::member(long x) const {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return member_[x] != 0;
}

long NumericalSemigroup::count_upto(long b) const {
    if (b < 0 || b > bound_) throw std::out_of_range("OutOfRange: count_upto argument outside table");
    long n = 0;
    for (long x = 0; x <= b; ++x) n += member_[x];
    return n;
}

long NumericalSemigroup::pole_number(long a) const {
    if (a < 1 || a > static_cast<long>(pole_numbers_.size()))
        throw std::out_of_range("OutOfRange: pole number index outside table");
    return pole_numbers_[a - 1];
}

std::vector<long> NumericalSemigroup::gaps() const {
    std::vector<long> g;
    for (long x = 0; x < conductor_; ++x)
        if (!member_[x]) g.push_back(x);
    return g;
}

std::vector<long> NumericalSemigroup::divisor_set(long y) const {
    if (!member(y)) throw std::invalid_argument("NotMember: " + std::to_string(y) + " is not in the semigroup");
    std::vector<long> d;
    for (long a = 0; a <= y; ++a)
        if (member(a) && member(y - a)) d.push_back(a);
    return d;
}

long NumericalSemigroup::feng_rao(long x) const {
    if (!member(x)) throw std::invalid_argument("NotMember: Feng-Rao distance needs a semigroup member");
    long best = -1;
    for (long m1 = x; m1 <= 2 * conductor_ - 1; ++m1) {
        if (!member(m1)) continue;
        const long d = static_cast<long>(divisor_set(m1).size());
        if (best < 0 || d < best) best = d;
    }
    // Tail: |D(m1)| = m1 + 1 - 2g for m1 >= 2c - 1, strictly increasing.
    const long tail_start = std::max(x, 2 * conductor_);
    const long tail = tail_start + 1 - 2 * genus_;
    if (best < 0 || tail < best) best = tail;
    return best;
}

bool NumericalSemigroup::has_property_star(long r) const {
    if (r < 0 || r > q_ * m_) return false;
    if (r % q_ == 0) return true;
    if (r % m_ == 0 && r / m_ <= q_ - 1) return true;
    return false;
}

long NumericalSemigroup::largest_star_below(long v) const {
    if (v < 0) throw std::invalid_argument("largest_star_below needs v >= 0");
    for (long r = std::min(v, q_ * m_);; --r)
        if (has_property_star(r)) return r;
}

} // namespace agcodes
