#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "blpack/error.hpp"

namespace blpack {

namespace detail {

/// Limb storage for BigInt: little-endian base 2^32 digits with a small
/// inline buffer so that values up to 128 bits never touch the heap.
class LimbVec {
public:
    LimbVec() = default;
    LimbVec(const LimbVec& other) { assign_from(other); }
    LimbVec(LimbVec&& other) noexcept { steal_from(other); }
    LimbVec& operator=(const LimbVec& other) {
        if (this != &other) {
            release();
            assign_from(other);
        }
        return *this;
    }
    LimbVec& operator=(LimbVec&& other) noexcept {
        if (this != &other) {
            release();
            steal_from(other);
        }
        return *this;
    }
    ~LimbVec() { release(); }

    std::uint32_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    std::uint32_t* data() { return cap_ == kInline ? inline_ : heap_; }
    const std::uint32_t* data() const { return cap_ == kInline ? inline_ : heap_; }
    std::uint32_t& operator[](std::uint32_t i) { return data()[i]; }
    std::uint32_t operator[](std::uint32_t i) const { return data()[i]; }
    std::uint32_t back() const { return data()[size_ - 1]; }

    void clear() { size_ = 0; }
    void push_back(std::uint32_t v) {
        if (size_ == cap_) grow(cap_ * 2);
        data()[size_++] = v;
    }
    void pop_back() { --size_; }
    void resize(std::uint32_t n, std::uint32_t fill = 0) {
        if (n > cap_) grow(n);
        for (std::uint32_t i = size_; i < n; ++i) data()[i] = fill;
        size_ = n;
    }
    /// Drop most-significant zero limbs.
    void normalize() {
        while (size_ > 0 && data()[size_ - 1] == 0) --size_;
    }

private:
    static constexpr std::uint32_t kInline = 4;

    void grow(std::uint32_t new_cap);
    void assign_from(const LimbVec& other);
    void steal_from(LimbVec& other) noexcept;
    void release() {
        if (cap_ != kInline) delete[] heap_;
        cap_ = kInline;
    }

    std::uint32_t size_ = 0;
    std::uint32_t cap_ = kInline;
    union {
        std::uint32_t inline_[kInline];
        std::uint32_t* heap_;
    };
};

}  // namespace detail

/// Arbitrary-precision signed integer (sign + magnitude).
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT: implicit by design, mirrors int literals
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    /// Parse an optionally signed decimal integer string. Throws ParseError.
    static BigInt from_string(std::string_view text);

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& b) { return *this = *this + b; }
    BigInt& operator-=(const BigInt& b) { return *this = *this - b; }
    BigInt& operator*=(const BigInt& b) { return *this = *this * b; }

    /// Truncated division: q = trunc(a/b), r = a - q*b (r has a's sign).
    /// Throws Error on division by zero.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    /// Quotient of an exact division; throws Error if b does not divide a.
    static BigInt exact_div(const BigInt& a, const BigInt& b);

    /// Non-negative greatest common divisor; gcd(0, 0) = 0.
    static BigInt gcd(const BigInt& a, const BigInt& b);

    /// Three-way compare: -1, 0, +1.
    int compare(const BigInt& other) const;

    friend bool operator==(const BigInt& a, const BigInt& b) { return a.compare(b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return a.compare(b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.compare(b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a.compare(b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return a.compare(b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return a.compare(b) >= 0; }

    bool fits_uint64() const { return mag_.size() <= 2; }
    std::uint64_t magnitude_uint64() const;
    bool fits_int64() const;
    long long to_int64() const;

    std::string to_string() const;

private:
    int sign_ = 0;  // -1, 0, +1; 0 iff mag_ empty
    detail::LimbVec mag_;

    void trim() {
        mag_.normalize();
        if (mag_.empty()) sign_ = 0;
    }
};

/// Exact rational number. Canonical form: reduced fraction, positive
/// denominator, zero represented as 0/1. All arithmetic is exact.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    Rational(int v) : num_(v), den_(1) {}        // NOLINT
    Rational(BigInt num, BigInt den);
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parse "42", "-4.25" or "7/3" exactly (decimal strings become exact
    /// rationals, e.g. "0.1" -> 1/10). Throws ParseError on anything else.
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.sign() < 0; }
    bool is_positive() const { return num_.sign() > 0; }
    bool is_integer() const { return den_.is_one(); }

    Rational operator-() const;
    Rational abs() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    /// Throws Error on division by zero.
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    int compare(const Rational& other) const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.compare(b) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.compare(b) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.compare(b) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.compare(b) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.compare(b) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.compare(b) >= 0; }

    /// Canonical text form: "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    /// Decimal expansion truncated toward zero after max_frac_digits digits
    /// (used for rendering; exact when the expansion terminates early).
    std::string decimal_string(int max_frac_digits) const;

private:
    BigInt num_;
    BigInt den_;

    void reduce();
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace blpack
