#include "blpack/rational.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <numeric>

namespace blpack {

namespace detail {

void LimbVec::grow(std::uint32_t new_cap) {
    new_cap = std::max(new_cap, std::uint32_t{8});
    auto* fresh = new std::uint32_t[new_cap];
    std::memcpy(fresh, data(), size_ * sizeof(std::uint32_t));
    release();
    heap_ = fresh;
    cap_ = new_cap;
}

void LimbVec::assign_from(const LimbVec& other) {
    size_ = other.size_;
    if (other.cap_ == kInline) {
        cap_ = kInline;
        std::memcpy(inline_, other.inline_, sizeof(inline_));
    } else {
        cap_ = other.cap_;
        heap_ = new std::uint32_t[cap_];
        std::memcpy(heap_, other.heap_, size_ * sizeof(std::uint32_t));
    }
}

void LimbVec::steal_from(LimbVec& other) noexcept {
    size_ = other.size_;
    cap_ = other.cap_;
    if (other.cap_ == kInline) {
        std::memcpy(inline_, other.inline_, sizeof(inline_));
    } else {
        heap_ = other.heap_;
        other.cap_ = kInline;
        other.size_ = 0;
    }
}

namespace {

constexpr std::uint64_t kBase = std::uint64_t{1} << 32;

int cmp_mag(const LimbVec& a, const LimbVec& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::uint32_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

// a += b
void add_mag(LimbVec& a, const LimbVec& b) {
    std::uint64_t carry = 0;
    std::uint32_t n = std::max(a.size(), b.size());
    a.resize(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        std::uint64_t sum = carry + a[i] + (i < b.size() ? b[i] : 0);
        a[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    if (carry != 0) a.push_back(static_cast<std::uint32_t>(carry));
}

// a -= b, requires a >= b
void sub_mag(LimbVec& a, const LimbVec& b) {
    std::int64_t borrow = 0;
    for (std::uint32_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                            (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        a[i] = static_cast<std::uint32_t>(diff);
    }
    a.normalize();
}

LimbVec mul_mag(const LimbVec& a, const LimbVec& b) {
    LimbVec out;
    if (a.empty() || b.empty()) return out;
    out.resize(a.size() + b.size(), 0);
    for (std::uint32_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t av = a[i];
        for (std::uint32_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] + av * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        std::uint32_t k = i + b.size();
        while (carry != 0) {
            std::uint64_t cur = out[k] + carry;
            out[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    out.normalize();
    return out;
}

// a = a * m + add (single-limb helpers for decimal parsing)
void mul_add_small(LimbVec& a, std::uint32_t m, std::uint32_t add) {
    std::uint64_t carry = add;
    for (std::uint32_t i = 0; i < a.size(); ++i) {
        std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * m + carry;
        a[i] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
    }
    while (carry != 0) {
        a.push_back(static_cast<std::uint32_t>(carry));
        carry >>= 32;
    }
}

std::uint64_t mag_to_u64(const LimbVec& a) {
    std::uint64_t v = 0;
    if (a.size() >= 2) v = static_cast<std::uint64_t>(a[1]) << 32;
    if (a.size() >= 1) v |= a[0];
    return v;
}

LimbVec mag_from_u64(std::uint64_t v) {
    LimbVec out;
    if (v != 0) out.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) out.push_back(static_cast<std::uint32_t>(v >> 32));
    return out;
}

// Divide by a u64 divisor; returns remainder.
std::uint64_t divmod_u64(const LimbVec& a, std::uint64_t d, LimbVec& q) {
    q.clear();
    q.resize(a.size(), 0);
    unsigned __int128 rem = 0;
    for (std::uint32_t i = a.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 32) | a[i];
        q[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    q.normalize();
    return static_cast<std::uint64_t>(rem);
}

std::uint32_t bit_width(const LimbVec& a) {
    if (a.empty()) return 0;
    std::uint32_t top = a.back();
    std::uint32_t w = 0;
    while (top != 0) {
        ++w;
        top >>= 1;
    }
    return (a.size() - 1) * 32 + w;
}

bool bit_set(const LimbVec& a, std::uint32_t i) {
    return (a[i / 32] >> (i % 32)) & 1u;
}

void shl1(LimbVec& a) {
    std::uint32_t carry = 0;
    for (std::uint32_t i = 0; i < a.size(); ++i) {
        std::uint32_t next = a[i] >> 31;
        a[i] = (a[i] << 1) | carry;
        carry = next;
    }
    if (carry != 0) a.push_back(carry);
}

// Schoolbook binary long division for multi-limb divisors. Divisors larger
// than 64 bits are rare here (coordinates stay small), so simplicity wins.
void divmod_mag(const LimbVec& a, const LimbVec& b, LimbVec& q, LimbVec& r) {
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    if (b.size() <= 2) {
        std::uint64_t rem = divmod_u64(a, mag_to_u64(b), q);
        r = mag_from_u64(rem);
        return;
    }
    q.resize(a.size(), 0);
    for (std::uint32_t i = bit_width(a); i-- > 0;) {
        shl1(r);
        if (bit_set(a, i)) {
            if (r.empty()) {
                r.push_back(1);
            } else {
                r[0] |= 1u;
            }
        }
        if (cmp_mag(r, b) >= 0) {
            sub_mag(r, b);
            q[i / 32] |= (1u << (i % 32));
        }
    }
    q.normalize();
}

LimbVec gcd_mag(LimbVec a, LimbVec b) {
    // Euclid; single/double-limb operands take the hardware path.
    while (!b.empty()) {
        if (a.size() <= 2 && b.size() <= 2) {
            return mag_from_u64(std::gcd(mag_to_u64(a), mag_to_u64(b)));
        }
        LimbVec q, r;
        divmod_mag(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

}  // namespace detail

using detail::LimbVec;

BigInt::BigInt(long long v) {
    if (v == 0) {
        sign_ = 0;
        return;
    }
    sign_ = v < 0 ? -1 : 1;
    // Avoid overflow on LLONG_MIN by negating in unsigned space.
    std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    mag_ = detail::mag_from_u64(mag);
}

BigInt BigInt::from_string(std::string_view text) {
    BigInt out;
    std::size_t i = 0;
    int sign = 1;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        if (text[i] == '-') sign = -1;
        ++i;
    }
    if (i == text.size()) throw ParseError("empty integer literal");
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9') throw ParseError("invalid digit in integer literal");
        detail::mul_add_small(out.mag_, 10, static_cast<std::uint32_t>(c - '0'));
    }
    out.mag_.normalize();
    out.sign_ = out.mag_.empty() ? 0 : sign;
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt out;
    if (a.sign_ == b.sign_) {
        out.mag_ = a.mag_;
        detail::add_mag(out.mag_, b.mag_);
        out.sign_ = a.sign_;
        return out;
    }
    int c = detail::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    const BigInt& big = c > 0 ? a : b;
    const BigInt& small = c > 0 ? b : a;
    out.mag_ = big.mag_;
    detail::sub_mag(out.mag_, small.mag_);
    out.sign_ = big.sign_;
    return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) {
    return a + (-b);
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt out;
    if (a.sign_ == 0 || b.sign_ == 0) return out;
    out.mag_ = detail::mul_mag(a.mag_, b.mag_);
    out.sign_ = a.sign_ * b.sign_;
    return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw Error("division by zero");
    LimbVec qm, rm;
    detail::divmod_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    r.mag_ = std::move(rm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt BigInt::exact_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw Error("exact_div: not divisible");
    return q;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt out;
    out.mag_ = detail::gcd_mag(a.mag_, b.mag_);
    out.sign_ = out.mag_.empty() ? 0 : 1;
    return out;
}

int BigInt::compare(const BigInt& other) const {
    if (sign_ != other.sign_) return sign_ < other.sign_ ? -1 : 1;
    if (sign_ == 0) return 0;
    int c = detail::cmp_mag(mag_, other.mag_);
    return sign_ > 0 ? c : -c;
}

std::uint64_t BigInt::magnitude_uint64() const {
    return detail::mag_to_u64(mag_);
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    std::uint64_t m = detail::mag_to_u64(mag_);
    if (sign_ >= 0) return m <= static_cast<std::uint64_t>(std::numeric_limits<long long>::max());
    return m <= static_cast<std::uint64_t>(std::numeric_limits<long long>::max()) + 1;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw Error("BigInt does not fit in 64 bits");
    std::uint64_t m = detail::mag_to_u64(mag_);
    if (sign_ < 0) return static_cast<long long>(~m + 1);
    return static_cast<long long>(m);
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    // Peel off base-10^9 digits.
    LimbVec cur = mag_;
    std::string out;
    while (!cur.empty()) {
        LimbVec q;
        std::uint64_t rem = detail::divmod_u64(cur, 1000000000u, q);
        cur = std::move(q);
        if (cur.empty()) {
            out.insert(0, std::to_string(rem));
        } else {
            std::string chunk = std::to_string(rem);
            out.insert(0, std::string(9 - chunk.size(), '0') + chunk);
        }
    }
    if (sign_ < 0) out.insert(0, "-");
    return out;
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("rational with zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = BigInt::exact_div(num_, g);
        den_ = BigInt::exact_div(den_, g);
    }
}

Rational Rational::parse(std::string_view text) {
    std::size_t slash = text.find('/');
    if (slash != std::string_view::npos) {
        if (text.find('.') != std::string_view::npos || text.find('/', slash + 1) != std::string_view::npos) {
            throw ParseError("invalid rational literal: '" + std::string(text) + "'");
        }
        BigInt num = BigInt::from_string(text.substr(0, slash));
        BigInt den = BigInt::from_string(text.substr(slash + 1));
        if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(text) + "'");
        if (slash + 1 < text.size() && (text[slash + 1] == '+' || text[slash + 1] == '-')) {
            throw ParseError("signed denominator in '" + std::string(text) + "'");
        }
        return Rational(std::move(num), std::move(den));
    }
    std::size_t dot = text.find('.');
    if (dot == std::string_view::npos) {
        return Rational(BigInt::from_string(text), BigInt(1));
    }
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.empty() || frac_part.find_first_not_of("0123456789") != std::string_view::npos) {
        throw ParseError("invalid decimal literal: '" + std::string(text) + "'");
    }
    if (int_part.empty() || int_part == "-" || int_part == "+") {
        throw ParseError("invalid decimal literal: '" + std::string(text) + "'");
    }
    std::string digits(int_part);
    digits.append(frac_part);
    BigInt num = BigInt::from_string(digits);
    BigInt den(1);
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= BigInt(10);
    return Rational(std::move(num), std::move(den));
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational Rational::abs() const {
    Rational out = *this;
    out.num_ = out.num_.abs();
    return out;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return Rational(a.num_ - b.num_, a.den_);
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    // Reduce across the diagonal first to keep limbs small.
    BigInt g1 = BigInt::gcd(a.num_, b.den_);
    BigInt g2 = BigInt::gcd(b.num_, a.den_);
    BigInt an = g1.is_one() ? a.num_ : BigInt::exact_div(a.num_, g1);
    BigInt bd = g1.is_one() ? b.den_ : BigInt::exact_div(b.den_, g1);
    BigInt bn = g2.is_one() ? b.num_ : BigInt::exact_div(b.num_, g2);
    BigInt ad = g2.is_one() ? a.den_ : BigInt::exact_div(a.den_, g2);
    return Rational(an * bn, ad * bd);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

int Rational::compare(const Rational& other) const {
    if (num_.sign() != other.num_.sign()) {
        return num_.sign() < other.num_.sign() ? -1 : 1;
    }
    return (num_ * other.den_).compare(other.num_ * den_);
}

std::string Rational::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::string Rational::decimal_string(int max_frac_digits) const {
    BigInt q, r;
    BigInt::divmod(num_.abs(), den_, q, r);
    std::string out = q.to_string();
    if (!r.is_zero() && max_frac_digits > 0) {
        std::string frac;
        for (int i = 0; i < max_frac_digits && !r.is_zero(); ++i) {
            r *= BigInt(10);
            BigInt digit;
            BigInt::divmod(r, den_, digit, r);
            frac += digit.to_string();
        }
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    }
    if (num_.sign() < 0 && out != "0") out.insert(0, "-");
    return out;
}

}  // namespace blpack
