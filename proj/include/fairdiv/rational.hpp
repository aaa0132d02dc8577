#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fairdiv {

/// Arbitrary-precision rational number, always in lowest terms with a positive
/// denominator. All valuations in the library are held in this type; there is
/// no floating point anywhere on the value path.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

    template <std::unsigned_integral T>
    Rational(T value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT(google-explicit-constructor)

    /// num / den; throws InstanceError when den == 0.
    Rational(long num, long den);

    explicit Rational(mpq_class value);

    /// Parses "-18.1", "7", "1e-3", "+0.25" or "p/q" exactly.
    /// Throws InstanceError on anything else.
    static Rational parse(std::string_view text);

    /// Exact decimal when the denominator divides a power of ten, "p/q" otherwise.
    std::string str() const;

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    Rational abs() const;

    const mpq_class& raw() const { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    /// Lossy; only for display and diagnostics.
    double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace fairdiv
