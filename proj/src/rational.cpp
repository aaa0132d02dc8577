#include "fairdiv/rational.hpp"

#include <cctype>
#include <ostream>

#include "fairdiv/error.hpp"

namespace fairdiv {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

[[noreturn]] void bad_number(std::string_view text) {
    throw InstanceError("not an exact number: \"" + std::string(text) + "\"");
}

mpz_class pow10(unsigned long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw InstanceError("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) bad_number(text);

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) bad_number(text);
        mpq_class q{mpz_class(std::string(num), 10), mpz_class(std::string(den), 10)};
        if (q.get_den() == 0) bad_number(text);
        q.canonicalize();
        return Rational(negative ? mpq_class(-q) : q);
    }

    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        auto exp_text = s.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6) bad_number(text);
        exponent = std::stol(std::string(exp_text));
        if (exp_negative) exponent = -exponent;
        s = s.substr(0, e);
    }

    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) bad_number(text);
    if (!int_part.empty() && !all_digits(int_part)) bad_number(text);
    if (!frac_part.empty() && !all_digits(frac_part)) bad_number(text);

    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    long scale = static_cast<long>(frac_part.size()) - exponent;
    mpq_class q;
    if (scale >= 0) {
        q = mpq_class(num, pow10(static_cast<unsigned long>(scale)));
    } else {
        q = mpq_class(num * pow10(static_cast<unsigned long>(-scale)));
    }
    q.canonicalize();
    return Rational(negative ? mpq_class(-q) : q);
}

std::string Rational::str() const {
    mpz_class den = value_.get_den();
    unsigned long twos = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(2).get_mpz_t());
    unsigned long fives = mpz_remove(den.get_mpz_t(), den.get_mpz_t(), mpz_class(5).get_mpz_t());
    if (den != 1) {
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }
    const unsigned long places = std::max(twos, fives);
    if (places == 0) return value_.get_num().get_str();

    mpz_class scaled = value_.get_num() * pow10(places) / value_.get_den();
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string digits = scaled.get_str();
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, 1, '.');
    return negative ? "-" + digits : digits;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw InstanceError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace fairdiv
