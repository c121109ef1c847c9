#ifndef AGCODES_FIELD_HPP
#define AGCODES_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace agcodes {

class FieldElement;

/// Exact arithmetic in GF(p^s).
///
/// Elements are encoded as integers in [0, p^s): the element with
/// coefficient vector (c_0, ..., c_{s-1}) over GF(p) encodes as
/// sum c_i * p^i.  The modulus is canonical (see Field::make), so two
/// fields with equal (p, s) are the same interned instance and element
/// encodings are reproducible across runs.
class Field {
public:
    using Enc = std::uint32_t;

    /// Returns the interned field with the canonical irreducible modulus:
    /// the monic degree-s polynomial whose coefficient vector
    /// (c_{s-1}, ..., c_0), read as a base-p integer, is minimal.
    /// Requires p prime, 1 <= s <= 8 and p^s <= 2^20.
    static std::shared_ptr<const Field> make(long p, int s);

    long p() const { return p_; }
    int s() const { return s_; }
    long order() const { return order_; }
    /// Modulus coefficients, constant term first, length s+1, monic.
    const std::vector<int>& modulus() const { return modulus_; }

    // Arithmetic on encodings.  Inputs must be < order().
    Enc add(Enc a, Enc b) const;
    Enc sub(Enc a, Enc b) const;
    Enc neg(Enc a) const;
    Enc mul(Enc a, Enc b) const;
    Enc inv(Enc a) const;        // throws on 0
    Enc div(Enc a, Enc b) const; // throws on b == 0
    Enc pow(Enc a, long long e) const;

    /// Smallest encoding with multiplicative order p^s - 1.
    Enc primitive_element_enc() const { return primitive_; }
    long multiplicative_order(Enc a) const; // throws on 0

    std::vector<int> coeffs(Enc a) const;
    Enc from_coeffs(std::span<const int> c) const;

    FieldElement element(Enc a) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement primitive_element() const;

    /// Horner evaluation of a polynomial given by its coefficients
    /// (constant term first) at x.
    Enc poly_eval(std::span<const Enc> coeffs, Enc x) const;
    /// Formal derivative: coefficient i of the result is (i+1)*c_{i+1}
    /// with the integer factor reduced mod p.
    std::vector<Enc> poly_derivative(std::span<const Enc> coeffs) const;

    /// "0", "1", or "w^k" with w the primitive element.
    std::string power_string(Enc a) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    Field(long p, int s);

    long p_;
    int s_;
    long order_;
    std::vector<int> modulus_;
    Enc primitive_ = 0;
    // exp/log tables for orders up to 2^16; larger fields fall back to
    // polynomial multiplication.
    std::vector<Enc> exp_;
    std::vector<std::int32_t> log_;

    Enc mul_poly(Enc a, Enc b) const;
};

/// A field element: canonical encoding plus a handle to its field.
/// Plain value type; arithmetic between elements of different fields
/// throws std::invalid_argument.
class FieldElement {
public:
    FieldElement() = default; // detached zero; unusable in arithmetic

    Field::Enc enc() const { return v_; }
    const Field& field() const;
    bool is_zero() const { return v_ == 0; }
    std::vector<int> coeffs() const { return field().coeffs(v_); }

    FieldElement operator-() const;
    FieldElement pow(long long e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b);

private:
    friend class Field;
    FieldElement(const Field* f, Field::Enc v) : f_(f), v_(v) {}

    const Field* f_ = nullptr;
    Field::Enc v_ = 0;
};

/// Horner evaluation over FieldElement coefficients (constant first).
FieldElement poly_eval(std::span<const FieldElement> coeffs, const FieldElement& x);
std::vector<FieldElement> poly_derivative(std::span<const FieldElement> coeffs);

} // namespace agcodes

#endif
