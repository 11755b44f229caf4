#include "ainfty/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "ainfty/errors.hpp"

namespace ainfty {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

bool is_natural_literal(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class to_mpz(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Scalar::Scalar(long numerator, long denominator) {
    if (denominator == 0) throw InputError("Scalar: zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_literal(text)) {
            throw InputError("malformed rational '" + std::string(text) + "'");
        }
        return Scalar(mpq_class(to_mpz(text)));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_natural_literal(den)) {
        throw InputError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class d = to_mpz(den);
    if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(to_mpz(num), d);
    q.canonicalize();
    return Scalar(std::move(q));
}

std::string Scalar::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-value_)); }

Scalar& Scalar::operator+=(const Scalar& rhs) {
    value_ += rhs.value_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (rhs.is_zero()) throw InputError("Scalar: division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace ainfty
