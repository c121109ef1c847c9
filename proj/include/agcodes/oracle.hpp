#ifndef AGCODES_ORACLE_HPP
#define AGCODES_ORACLE_HPP

#include <cstdint>
#include <map>
#include <stdexcept>

#include "agcodes/linear_code.hpp"

namespace agcodes {

/// Thrown when an enumeration would exceed the hard caps (2^24 codewords,
/// length 24 for subset searches).  The caps never truncate silently.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace oracle {

/// Effective codeword-enumeration cap: 2^24, lowered (never raised) by
/// the AGCODE_CAP environment variable.
std::uint64_t word_cap();

long rank_over_field(const Matrix& m);

/// Minimum Hamming weight over all nonzero codewords, by exhaustive
/// message enumeration.  Requires k >= 1 and (p^s)^k within the cap.
long exact_min_distance(const LinearCode& code);

/// Full weight enumerator; counts sum to (p^s)^k.
std::map<long, std::uint64_t> weight_distribution(const LinearCode& code);

/// l-th generalized Hamming weight via the parity-check criterion:
/// the smallest |I| with |I| - rank(columns of H in I) >= l, subsets
/// enumerated by increasing size.  Requires n <= 24.
long exact_ghw(const LinearCode& code, long l);

/// (n-k) x n matrix H with G H^T = 0 and full rank, derived from the
/// reduced generator.  Requires k < n; the zero code gets the identity.
Matrix parity_check(const LinearCode& code);

/// Minimum weight over codewords of `outer` that are not in `inner`.
/// Requires inner strictly contained in outer.
long relative_min_weight(const LinearCode& outer, const LinearCode& inner);

/// exact_min_distance when the word count fits the cap, otherwise the
/// subset-rank route through exact_ghw(code, 1).
long exact_min_distance_auto(const LinearCode& code);

} // namespace oracle

} // namespace agcodes

#endif
