#pragma once

// Every sign rule used by the engine. Exponents may be negative (desuspended
// degrees are), so signs are derived from exponent parity only:
// (-1)^e == (-1)^(-e) for all integers e.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ainfty {

class Sign {
public:
    constexpr Sign() = default;

    static constexpr Sign plus() { return Sign(false); }
    static constexpr Sign minus() { return Sign(true); }

    /// (-1)^exponent.
    static constexpr Sign from_exponent(long long exponent) { return Sign(exponent % 2 != 0); }

    constexpr bool is_negative() const { return negative_; }
    constexpr int value() const { return negative_ ? -1 : 1; }

    constexpr Sign operator*(Sign rhs) const { return Sign(negative_ != rhs.negative_); }
    constexpr Sign& operator*=(Sign rhs) { return *this = *this * rhs; }
    constexpr Sign operator-() const { return Sign(!negative_); }

    friend constexpr bool operator==(Sign, Sign) = default;

private:
    explicit constexpr Sign(bool negative) : negative_(negative) {}

    bool negative_ = false;
};

/// Permutation in "gather" form: applying `p` to a sequence x yields y with
/// y[i] = x[p[i]].
using Permutation = std::vector<std::size_t>;

bool is_permutation(std::span<const std::size_t> p);

template <class T>
std::vector<T> permuted(std::span<const T> xs, std::span<const std::size_t> p) {
    std::vector<T> out;
    out.reserve(p.size());
    for (std::size_t i : p) out.push_back(xs[i]);
    return out;
}

/// Koszul sign of reordering graded symbols: the product of (-1)^{pq} over
/// every pair of symbols whose relative order `p` reverses. `degrees` are
/// those of the unpermuted sequence. Throws InputError on length mismatch or
/// if `p` is not a permutation.
Sign koszul_permutation_sign(std::span<const int> degrees, std::span<const std::size_t> p);

/// Sign picked up when an operator of degree `op_degree` moves past a symbol
/// of degree `passed_degree`.
Sign pass_operator_sign(int op_degree, int passed_degree);

/// ↑^{⊗n} ∘ ↓^{⊗n} = (-1)^{n(n-1)/2} id. Requires n >= 1.
Sign susp_iso_sign(int n);

/// Sign relating ↓x_1 ⊗ ... ⊗ ↓x_n to ↓^{⊗n}(x_1 ⊗ ... ⊗ x_n):
/// (-1)^{Σ_i (n-i)|x_i|} with 1-based i. `degrees` are the |x_i| in V.
Sign desusp_word_sign(std::span<const int> degrees);

/// Coefficient sign of the term m_{n-k+1}(x_1..x_λ ⊗ m_k(...) ⊗ ...) in the
/// Stasheff identity at arity n:
/// (-1)^{k + λ + kλ + kn + k(|x_1| + ... + |x_λ|)}.
/// Requires 0 <= lambda <= n-1 and 1 <= k <= n - lambda.
Sign alpha_sign(int k, int lambda, int n, int prefix_degree_sum);

/// s_n = (-1)^{(n+1)(n+2)/2}. Requires n >= 1. Repeats with period 4.
Sign s_sign(int n);

}  // namespace ainfty
