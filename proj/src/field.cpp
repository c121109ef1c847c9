#include "agcodes/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace agcodes {

namespace {

constexpr long kSizeCap = 1L << 20;
constexpr long kTableCap = 1L << 16;

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Dense polynomials over GF(p) as int vectors, constant term first.
// Used only during field construction; element arithmetic afterwards
// goes through encodings.
using Poly = std::vector<int>;

int poly_deg(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[i] != 0) return i;
    return -1;
}

// Remainder of f by monic g.
Poly poly_mod(Poly f, const Poly& g, long p) {
    const int dg = poly_deg(g);
    for (int i = poly_deg(f); i >= dg; --i) {
        const long c = f[i];
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j)
            f[i - dg + j] = static_cast<int>(((f[i - dg + j] - c * g[j]) % p + p * p) % p);
    }
    f.resize(dg);
    return f;
}

bool poly_is_zero(const Poly& f) { return poly_deg(f) < 0; }

// Irreducibility over GF(p) by trial division with all monic divisors of
// degree up to deg/2.  Desk-scale fields keep the divisor count tiny.
bool is_irreducible(const Poly& f, long p) {
    const int d = poly_deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    for (int dd = 1; dd <= d / 2; ++dd) {
        long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long v = 0; v < count; ++v) {
            Poly g(dd + 1, 0);
            long t = v;
            for (int i = 0; i < dd; ++i) {
                g[i] = static_cast<int>(t % p);
                t /= p;
            }
            g[dd] = 1;
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> fs;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

std::shared_ptr<const Field> Field::make(long p, int s) {
    if (!is_prime(p)) throw std::invalid_argument("NonPrime: p = " + std::to_string(p) + " is not prime");
    if (s < 1 || s > 8) throw std::invalid_argument("SizeCap: extension degree s must be in [1, 8]");
    long order = 1;
    for (int i = 0; i < s; ++i) {
        order *= p;
        if (order > kSizeCap) throw std::invalid_argument("SizeCap: p^s exceeds 2^20");
    }

    static std::mutex mu;
    static std::map<std::pair<long, int>, std::shared_ptr<const Field>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[{p, s}];
    if (!slot) slot = std::shared_ptr<const Field>(new Field(p, s));
    return slot;
}

Field::Field(long p, int s) : p_(p), s_(s) {
    order_ = 1;
    for (int i = 0; i < s; ++i) order_ *= p;

    // Canonical modulus: scan candidates by the base-p value of
    // (c_{s-1}, ..., c_0) ascending; take the first irreducible.
    for (long v = 0;; ++v) {
        Poly f(s + 1, 0);
        long t = v;
        for (int i = 0; i < s; ++i) {
            f[i] = static_cast<int>(t % p);
            t /= p;
        }
        f[s] = 1;
        if (t == 0 && is_irreducible(f, p)) {
            modulus_ = f;
            break;
        }
        if (t != 0) throw std::logic_error("no irreducible modulus found"); // cannot happen
    }

    if (order_ <= kTableCap) {
        // Find a primitive element by order test, then build exp/log.
        const auto factors = prime_factors(order_ - 1);
        for (Enc g = 1; g < static_cast<Enc>(order_); ++g) {
            bool ok = true;
            for (long f : factors) {
                Enc x = 1;
                long long e = (order_ - 1) / f;
                Enc base = g;
                while (e > 0) {
                    if (e & 1) x = mul_poly(x, base);
                    base = mul_poly(base, base);
                    e >>= 1;
                }
                if (x == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                primitive_ = g;
                break;
            }
        }
        exp_.resize(order_ - 1);
        log_.assign(order_, -1);
        Enc x = 1;
        for (long i = 0; i < order_ - 1; ++i) {
            exp_[i] = x;
            log_[x] = static_cast<std::int32_t>(i);
            x = mul_poly(x, primitive_);
        }
    } else {
        const auto factors = prime_factors(order_ - 1);
        for (Enc g = 1; g < static_cast<Enc>(order_); ++g) {
            bool ok = true;
            for (long f : factors) {
                if (pow(g, (order_ - 1) / f) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                primitive_ = g;
                break;
            }
        }
    }
}

Field::Enc Field::add(Enc a, Enc b) const {
    if (p_ == 2) return a ^ b;
    Enc r = 0, pw = 1;
    for (int i = 0; i < s_; ++i) {
        const long da = (a / pw) % p_;
        const long db = (b / pw) % p_;
        r += static_cast<Enc>(((da + db) % p_) * pw);
        pw *= static_cast<Enc>(p_);
    }
    return r;
}

Field::Enc Field::neg(Enc a) const {
    if (p_ == 2) return a;
    Enc r = 0, pw = 1;
    for (int i = 0; i < s_; ++i) {
        const long da = (a / pw) % p_;
        r += static_cast<Enc>(((p_ - da) % p_) * pw);
        pw *= static_cast<Enc>(p_);
    }
    return r;
}

Field::Enc Field::sub(Enc a, Enc b) const { return add(a, neg(b)); }

Field::Enc Field::mul_poly(Enc a, Enc b) const {
    // Coefficient convolution followed by reduction mod the monic modulus.
    std::vector<long> da(s_), db(s_), prod(2 * s_ - 1, 0);
    for (int i = 0; i < s_; ++i) {
        da[i] = (a % p_);
        a /= static_cast<Enc>(p_);
        db[i] = (b % p_);
        b /= static_cast<Enc>(p_);
    }
    for (int i = 0; i < s_; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < s_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    for (int i = 2 * s_ - 2; i >= s_; --i) {
        const long c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < s_; ++j)
            prod[i - s_ + j] = ((prod[i - s_ + j] - c * modulus_[j]) % p_ + p_ * static_cast<long>(p_)) % p_;
    }
    Enc r = 0, pw = 1;
    for (int i = 0; i < s_; ++i) {
        r += static_cast<Enc>(prod[i] * pw);
        pw *= static_cast<Enc>(p_);
    }
    return r;
}

Field::Enc Field::mul(Enc a, Enc b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) {
        long e = log_[a] + log_[b];
        if (e >= order_ - 1) e -= order_ - 1;
        return exp_[e];
    }
    return mul_poly(a, b);
}

Field::Enc Field::inv(Enc a) const {
    if (a == 0) throw std::invalid_argument("DivisionByZero: inverse of zero");
    if (!exp_.empty()) {
        const long e = (order_ - 1 - log_[a]) % (order_ - 1);
        return exp_[e];
    }
    return pow(a, order_ - 2);
}

Field::Enc Field::div(Enc a, Enc b) const {
    if (b == 0) throw std::invalid_argument("DivisionByZero: division by zero");
    return mul(a, inv(b));
}

Field::Enc Field::pow(Enc a, long long e) const {
    if (a == 0) {
        if (e < 0) throw std::invalid_argument("DivisionByZero: zero to a negative power");
        return e == 0 ? 1 : 0;
    }
    long long m = e % (order_ - 1);
    if (m < 0) m += order_ - 1;
    Enc r = 1, base = a;
    while (m > 0) {
        if (m & 1) r = mul(r, base);
        base = mul(base, base);
        m >>= 1;
    }
    return r;
}

long Field::multiplicative_order(Enc a) const {
    if (a == 0) throw std::invalid_argument("DivisionByZero: order of zero");
    long n = order_ - 1;
    for (long f : prime_factors(order_ - 1)) {
        while (n % f == 0 && pow(a, n / f) == 1) n /= f;
    }
    return n;
}

std::vector<int> Field::coeffs(Enc a) const {
    std::vector<int> c(s_);
    for (int i = 0; i < s_; ++i) {
        c[i] = static_cast<int>(a % p_);
        a /= static_cast<Enc>(p_);
    }
    return c;
}

Field::Enc Field::from_coeffs(std::span<const int> c) const {
    if (static_cast<int>(c.size()) != s_) throw std::invalid_argument("coefficient vector must have length s");
    Enc r = 0, pw = 1;
    for (int i = 0; i < s_; ++i) {
        if (c[i] < 0 || c[i] >= p_) throw std::invalid_argument("coefficient out of [0, p)");
        r += static_cast<Enc>(c[i]) * pw;
        pw *= static_cast<Enc>(p_);
    }
    return r;
}

FieldElement Field::element(Enc a) const {
    if (a >= static_cast<Enc>(order_)) throw std::invalid_argument("encoding out of range");
    return FieldElement(this, a);
}

FieldElement Field::zero() const { return FieldElement(this, 0); }
FieldElement Field::one() const { return FieldElement(this, 1); }
FieldElement Field::primitive_element() const { return FieldElement(this, primitive_); }

Field::Enc Field::poly_eval(std::span<const Enc> coeffs, Enc x) const {
    if (coeffs.empty()) throw std::invalid_argument("poly_eval: empty coefficient list");
    Enc r = coeffs.back();
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) r = add(mul(r, x), coeffs[i]);
    return r;
}

std::vector<Field::Enc> Field::poly_derivative(std::span<const Enc> coeffs) const {
    std::vector<Enc> d(coeffs.size() > 1 ? coeffs.size() - 1 : 1, 0);
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        const Enc factor = static_cast<Enc>(i % p_); // integer i as prime-field element
        d[i - 1] = mul(factor, coeffs[i]);
    }
    return d;
}

std::string Field::power_string(Enc a) const {
    if (a == 0) return "0";
    if (a == 1) return "1";
    long k;
    if (!exp_.empty()) {
        k = log_[a];
    } else {
        Enc x = primitive_;
        k = 1;
        while (x != a) {
            x = mul(x, primitive_);
            ++k;
        }
    }
    return k == 1 ? "w" : "w^" + std::to_string(k);
}

const Field& FieldElement::field() const {
    if (!f_) throw std::invalid_argument("SpecMismatch: detached field element");
    return *f_;
}

namespace {
const Field* common_field(const FieldElement& a, const FieldElement& b) {
    const Field* fa = &a.field();
    const Field* fb = &b.field();
    if (fa != fb) throw std::invalid_argument("SpecMismatch: elements of different fields");
    return fa;
}
} // namespace

FieldElement FieldElement::operator-() const { return field().element(field().neg(v_)); }
FieldElement FieldElement::pow(long long e) const { return field().element(field().pow(v_, e)); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const Field* f = common_field(a, b);
    return f->element(f->add(a.v_, b.v_));
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    const Field* f = common_field(a, b);
    return f->element(f->sub(a.v_, b.v_));
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const Field* f = common_field(a, b);
    return f->element(f->mul(a.v_, b.v_));
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    const Field* f = common_field(a, b);
    return f->element(f->div(a.v_, b.v_));
}
bool operator==(const FieldElement& a, const FieldElement& b) { return a.f_ == b.f_ && a.v_ == b.v_; }
bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

FieldElement poly_eval(std::span<const FieldElement> coeffs, const FieldElement& x) {
    if (coeffs.empty()) throw std::invalid_argument("poly_eval: empty coefficient list");
    std::vector<Field::Enc> enc(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        common_field(coeffs[i], x);
        enc[i] = coeffs[i].enc();
    }
    return x.field().element(x.field().poly_eval(enc, x.enc()));
}

std::vector<FieldElement> poly_derivative(std::span<const FieldElement> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("poly_derivative: empty coefficient list");
    const Field& f = coeffs.front().field();
    std::vector<Field::Enc> enc(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) enc[i] = coeffs[i].enc();
    const auto d = f.poly_derivative(enc);
    std::vector<FieldElement> out;
    out.reserve(d.size());
    for (auto v : d) out.push_back(f.element(v));
    return out;
}

} // namespace agcodes
