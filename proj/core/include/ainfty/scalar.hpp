#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ainfty {

/// Exact rational coefficient. Always canonical: lowest terms, positive
/// denominator.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Scalar(long numerator, long denominator);

    /// Accepts `n`, `-n`, `+n`, `p/q`. Throws InputError on anything else or
    /// on a zero denominator.
    static Scalar parse(std::string_view text);

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string numerator() const { return value_.get_num().get_str(); }
    std::string denominator() const { return value_.get_den().get_str(); }

    /// `n` for integers, `p/q` otherwise. Inverse of parse().
    std::string to_string() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        return cmp(a.value_, b.value_) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    explicit Scalar(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

}  // namespace ainfty
