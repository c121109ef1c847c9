#include "agcodes/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace agcodes {
namespace oracle {

namespace {

constexpr std::uint64_t kDefaultWordCap = std::uint64_t{1} << 24;
constexpr std::size_t kLengthCap = 24;

std::uint64_t message_count(const LinearCode& code) {
    std::uint64_t n = 1;
    const std::uint64_t order = static_cast<std::uint64_t>(code.field()->order());
    for (std::size_t i = 0; i < code.k(); ++i) {
        n *= order;
        if (n > word_cap()) return n; // already over; no need to finish
    }
    return n;
}

// Depth-first walk over all linear combinations of the generator rows;
// visit(weight) fires once per codeword, the zero word included.
template <typename Visit>
void enumerate_words(const LinearCode& code, Visit&& visit) {
    const Field& f = *code.field();
    const std::size_t n = code.n();
    const std::size_t k = code.k();
    const long order = f.order();

    std::vector<Field::Enc> acc((k + 1) * n, 0);
    // Iterative DFS keeps one partial sum per level.
    struct Frame {
        std::size_t depth;
        long next_scalar;
    };
    std::vector<Frame> frames;
    frames.push_back({0, 0});
    while (!frames.empty()) {
        Frame& fr = frames.back();
        if (fr.depth == k) {
            const Field::Enc* word = acc.data() + fr.depth * n;
            visit(word, n);
            frames.pop_back();
            continue;
        }
        if (fr.next_scalar >= order) {
            frames.pop_back();
            continue;
        }
        const Field::Enc c = static_cast<Field::Enc>(fr.next_scalar++);
        const Field::Enc* src = acc.data() + fr.depth * n;
        Field::Enc* dst = acc.data() + (fr.depth + 1) * n;
        const auto row = code.generator().row(fr.depth);
        if (c == 0) {
            std::copy(src, src + n, dst);
        } else {
            for (std::size_t i = 0; i < n; ++i) dst[i] = f.add(src[i], f.mul(c, row[i]));
        }
        frames.push_back({fr.depth + 1, 0});
    }
}

long weight(const Field::Enc* word, std::size_t n) {
    long w = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (word[i] != 0) ++w;
    return w;
}

void check_word_cap(const LinearCode& code) {
    if (message_count(code) > word_cap())
        throw CapExceeded("TooLarge: codeword enumeration exceeds the cap");
}

// Next k-combination of {0, ..., n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

std::uint64_t word_cap() {
    static const std::uint64_t cap = [] {
        std::uint64_t c = kDefaultWordCap;
        if (const char* env = std::getenv("AGCODE_CAP")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0 && v < c) c = v;
        }
        return c;
    }();
    return cap;
}

long rank_over_field(const Matrix& m) { return static_cast<long>(m.rank()); }

long exact_min_distance(const LinearCode& code) {
    if (code.k() == 0) throw std::invalid_argument("ZeroCode: the zero code has no minimum distance");
    check_word_cap(code);
    long best = static_cast<long>(code.n()) + 1;
    enumerate_words(code, [&](const Field::Enc* word, std::size_t n) {
        const long w = weight(word, n);
        if (w > 0 && w < best) best = w;
    });
    return best;
}

std::map<long, std::uint64_t> weight_distribution(const LinearCode& code) {
    check_word_cap(code);
    std::vector<std::uint64_t> counts(code.n() + 1, 0);
    enumerate_words(code, [&](const Field::Enc* word, std::size_t n) { ++counts[weight(word, n)]; });
    std::map<long, std::uint64_t> out;
    for (std::size_t w = 0; w < counts.size(); ++w)
        if (counts[w] > 0) out[static_cast<long>(w)] = counts[w];
    return out;
}

Matrix parity_check(const LinearCode& code) {
    if (code.k() == code.n()) throw std::invalid_argument("FullSpace: the full space has no parity-check matrix");
    if (code.k() == 0) return Matrix::identity(code.field(), code.n());
    return code.generator().nullspace();
}

long exact_ghw(const LinearCode& code, long l) {
    const long n = static_cast<long>(code.n());
    const long k = static_cast<long>(code.k());
    if (l < 1 || l > k) throw std::invalid_argument("OutOfRange: l outside [1, k]");
    if (code.n() > kLengthCap) throw CapExceeded("TooLarge: subset search limited to length 24");
    if (k == n) return l; // full space: coordinate subcodes of any support size

    const Matrix h = parity_check(code);
    for (long w = l; w <= n; ++w) {
        std::vector<std::size_t> idx(w);
        for (long i = 0; i < w; ++i) idx[i] = static_cast<std::size_t>(i);
        do {
            Matrix sub(code.field(), h.rows(), idx.size());
            for (std::size_t r = 0; r < h.rows(); ++r)
                for (std::size_t c = 0; c < idx.size(); ++c) sub.set(r, c, h(r, idx[c]));
            if (w - static_cast<long>(sub.rank()) >= l) return w;
        } while (next_combination(idx, code.n()));
    }
    throw std::logic_error("generalized Hamming weight search exhausted"); // unreachable for l <= k
}

long exact_min_distance_auto(const LinearCode& code) {
    if (message_count(code) <= word_cap()) return exact_min_distance(code);
    return exact_ghw(code, 1);
}

long relative_min_weight(const LinearCode& outer, const LinearCode& inner) {
    if (!outer.contains(inner) || inner.k() >= outer.k())
        throw std::invalid_argument("relative_min_weight needs inner strictly inside outer");
    check_word_cap(outer);
    long best = static_cast<long>(outer.n()) + 1;
    enumerate_words(outer, [&](const Field::Enc* word, std::size_t n) {
        const long w = weight(word, n);
        if (w > 0 && w < best && !inner.contains({word, n})) best = w;
    });
    return best;
}

} // namespace oracle
} // namespace agcodes
