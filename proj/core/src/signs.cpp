#include "ainfty/signs.hpp"

#include <string>

#include "ainfty/errors.hpp"

namespace ainfty {

bool is_permutation(std::span<const std::size_t> p) {
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i : p) {
        if (i >= p.size() || seen[i]) return false;
        seen[i] = true;
    }
    return true;
}

Sign koszul_permutation_sign(std::span<const int> degrees, std::span<const std::size_t> p) {
    if (degrees.size() != p.size()) {
        throw InputError("koszul_permutation_sign: " + std::to_string(degrees.size()) +
                         " degrees for a permutation of length " + std::to_string(p.size()));
    }
    if (!is_permutation(p)) throw InputError("koszul_permutation_sign: not a permutation");

    // Output slots a < b holding inputs p[a] > p[b] are exactly the pairs
    // whose relative order flips.
    long long exponent = 0;
    for (std::size_t a = 0; a < p.size(); ++a) {
        if (degrees[p[a]] % 2 == 0) continue;
        for (std::size_t b = a + 1; b < p.size(); ++b) {
            if (p[a] > p[b] && degrees[p[b]] % 2 != 0) ++exponent;
        }
    }
    return Sign::from_exponent(exponent);
}

Sign pass_operator_sign(int op_degree, int passed_degree) {
    return Sign::from_exponent(static_cast<long long>(op_degree) * passed_degree);
}

Sign susp_iso_sign(int n) {
    if (n < 1) throw InputError("susp_iso_sign: arity must be >= 1");
    return Sign::from_exponent(static_cast<long long>(n) * (n - 1) / 2);
}

Sign desusp_word_sign(std::span<const int> degrees) {
    if (degrees.empty()) throw InputError("desusp_word_sign: empty word");
    const auto n = static_cast<long long>(degrees.size());
    long long exponent = 0;
    for (long long i = 1; i <= n; ++i) exponent += (n - i) * degrees[static_cast<std::size_t>(i - 1)];
    return Sign::from_exponent(exponent);
}

Sign alpha_sign(int k, int lambda, int n, int prefix_degree_sum) {
    if (lambda < 0 || lambda > n - 1) {
        throw InputError("alpha_sign: lambda " + std::to_string(lambda) + " outside [0, n-1]");
    }
    if (k < 1 || k > n - lambda) {
        throw InputError("alpha_sign: k " + std::to_string(k) + " outside [1, n-lambda]");
    }
    const long long kk = k;
    const long long l = lambda;
    return Sign::from_exponent(kk + l + kk * l + kk * n + kk * prefix_degree_sum);
}

Sign s_sign(int n) {
    if (n < 1) throw InputError("s_sign: arity must be >= 1");
    const long long m = n;
    return Sign::from_exponent((m + 1) * (m + 2) / 2);
}

}  // namespace ainfty
