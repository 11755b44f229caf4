#include "ainfty/signs.hpp"

#include <gtest/gtest.h>

#include "ainfty/errors.hpp"
#include "test_support.hpp"

namespace ainfty {
namespace {

constexpr Sign plus = Sign::plus();
constexpr Sign minus = Sign::minus();

TEST(Sign, NegativeExponentParity) {
    EXPECT_EQ(Sign::from_exponent(-1), minus);
    EXPECT_EQ(Sign::from_exponent(-2), plus);
    EXPECT_EQ(Sign::from_exponent(-13), minus);
    EXPECT_EQ(minus * minus, plus);
}

TEST(KoszulPermutationSign, Examples) {
    const std::vector<int> odd{-1, -1};
    const std::vector<int> mixed{0, -1};
    const Permutation id{0, 1};
    const Permutation swap{1, 0};
    EXPECT_EQ(koszul_permutation_sign(std::vector<int>{3, -1, 2}, Permutation{0, 1, 2}), plus);
    EXPECT_EQ(koszul_permutation_sign(odd, swap), minus);
    EXPECT_EQ(koszul_permutation_sign(mixed, swap), plus);
    EXPECT_EQ(koszul_permutation_sign(odd, id), plus);
}

TEST(KoszulPermutationSign, Errors) {
    EXPECT_THROW(koszul_permutation_sign(std::vector<int>{1, 1}, Permutation{0}), InputError);
    EXPECT_THROW(koszul_permutation_sign(std::vector<int>{1, 1}, Permutation{0, 0}), InputError);
}

TEST(KoszulPermutationSign, MatchesAdjacentSwapOracle) {
    testing::Rng rng(21);
    std::uniform_int_distribution<int> deg(-3, 3);
    for (int i = 0; i < testing::kPropertyCases; ++i) {
        const std::size_t n = 1 + rng() % 8;
        std::vector<int> d(n);
        for (auto& x : d) x = deg(rng);
        const Permutation p = testing::random_permutation(rng, n);
        EXPECT_EQ(koszul_permutation_sign(d, p).value(), testing::koszul_by_swaps(d, p));
    }
}

TEST(KoszulPermutationSign, Homomorphism) {
    testing::Rng rng(22);
    std::uniform_int_distribution<int> deg(-3, 3);
    for (int i = 0; i < testing::kPropertyCases; ++i) {
        const std::size_t n = 1 + rng() % 8;
        std::vector<int> d(n);
        for (auto& x : d) x = deg(rng);
        const Permutation tau = testing::random_permutation(rng, n);
        const Permutation sigma = testing::random_permutation(rng, n);
        // Applying tau then sigma gathers input tau[sigma[i]] into slot i.
        Permutation composite(n);
        for (std::size_t k = 0; k < n; ++k) composite[k] = tau[sigma[k]];
        const auto tau_degrees = permuted<int>(d, tau);
        EXPECT_EQ(koszul_permutation_sign(d, composite),
                  koszul_permutation_sign(tau_degrees, sigma) * koszul_permutation_sign(d, tau));
    }
}

int classical_sign(const Permutation& p) {
    int inversions = 0;
    for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b = a + 1; b < p.size(); ++b) inversions += p[a] > p[b];
    }
    return inversions % 2 ? -1 : 1;
}

TEST(KoszulPermutationSign, EvenAndOddExtremes) {
    testing::Rng rng(23);
    for (int i = 0; i < testing::kPropertyCases; ++i) {
        const std::size_t n = 1 + rng() % 8;
        const Permutation p = testing::random_permutation(rng, n);
        std::vector<int> even(n), odd(n);
        for (std::size_t k = 0; k < n; ++k) {
            even[k] = 2 * static_cast<int>(rng() % 5) - 4;
            odd[k] = 2 * static_cast<int>(rng() % 5) - 3;
        }
        EXPECT_EQ(koszul_permutation_sign(even, p), plus);
        EXPECT_EQ(koszul_permutation_sign(odd, p).value(), classical_sign(p));
    }
}

TEST(PassOperatorSign, Examples) {
    EXPECT_EQ(pass_operator_sign(1, -1), minus);
    EXPECT_EQ(pass_operator_sign(1, 0), plus);
    EXPECT_EQ(pass_operator_sign(2 - 3, 1), minus);
}

TEST(SuspIsoSign, Examples) {
    EXPECT_EQ(susp_iso_sign(1), plus);
    EXPECT_EQ(susp_iso_sign(2), minus);
    EXPECT_EQ(susp_iso_sign(4), plus);
    EXPECT_THROW(susp_iso_sign(0), InputError);
}

// (↑ ⊗ ... ⊗ ↑) ∘ (↓ ⊗ ... ⊗ ↓): bring the 2n symbols ↑^n ↓^n into the order
// ↑↓ ↑↓ ... by adjacent swaps, paying (-1)^{pq} per swap.
TEST(SuspIsoSign, MatchesOperatorPassing) {
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> degrees;
        for (int i = 0; i < n; ++i) degrees.push_back(1);
        for (int i = 0; i < n; ++i) degrees.push_back(-1);
        Permutation interleave;
        for (int i = 0; i < n; ++i) {
            interleave.push_back(static_cast<std::size_t>(i));
            interleave.push_back(static_cast<std::size_t>(n + i));
        }
        EXPECT_EQ(susp_iso_sign(n).value(), testing::koszul_by_swaps(degrees, interleave)) << n;
        EXPECT_EQ(susp_iso_sign(n) * susp_iso_sign(n), plus);
    }
}

TEST(DesuspWordSign, Examples) {
    EXPECT_EQ(desusp_word_sign(std::vector<int>{0, 1}), plus);
    EXPECT_EQ(desusp_word_sign(std::vector<int>{1, 1}), minus);
    EXPECT_EQ(desusp_word_sign(std::vector<int>{1, 0, 1}), plus);
    EXPECT_THROW(desusp_word_sign(std::vector<int>{}), InputError);
}

// ↓x_1 ⊗ ... ⊗ ↓x_n vs ↓^{⊗n}(x_1 ⊗ ... ⊗ x_n): move every ↓ to the front,
// each passing the x's to its left.
TEST(DesuspWordSign, MatchesOperatorPassing) {
    testing::Rng rng(24);
    for (int i = 0; i < testing::kPropertyCases; ++i) {
        const std::size_t n = 1 + rng() % 7;
        std::vector<int> x(n);
        for (auto& d : x) d = static_cast<int>(rng() % 5) - 2;
        // Symbols in order ↓ x_1 ↓ x_2 ... ; target ↓...↓ x_1...x_n.
        std::vector<int> degrees;
        for (std::size_t k = 0; k < n; ++k) {
            degrees.push_back(-1);
            degrees.push_back(x[k]);
        }
        Permutation target;
        for (std::size_t k = 0; k < n; ++k) target.push_back(2 * k);
        for (std::size_t k = 0; k < n; ++k) target.push_back(2 * k + 1);
        EXPECT_EQ(desusp_word_sign(x).value(), testing::koszul_by_swaps(degrees, target));
    }
}

TEST(AlphaSign, Examples) {
    EXPECT_EQ(alpha_sign(1, 0, 2, 0), minus);
    EXPECT_EQ(alpha_sign(2, 0, 2, 0), plus);
    EXPECT_EQ(alpha_sign(2, 1, 3, 1), minus);
}

TEST(AlphaSign, RangeErrors) {
    EXPECT_THROW(alpha_sign(1, 2, 2, 0), InputError);
    EXPECT_THROW(alpha_sign(0, 0, 2, 0), InputError);
    EXPECT_THROW(alpha_sign(3, 0, 2, 0), InputError);
    EXPECT_THROW(alpha_sign(2, 1, 2, 0), InputError);
    EXPECT_THROW(alpha_sign(1, -1, 2, 0), InputError);
}

TEST(SSign, Examples) {
    EXPECT_EQ(s_sign(2), plus);
    EXPECT_EQ(s_sign(4), minus);
    EXPECT_EQ(s_sign(6), plus);
    EXPECT_THROW(s_sign(0), InputError);
}

TEST(SSign, PeriodFour) {
    for (int n = 1; n <= 200; ++n) EXPECT_EQ(s_sign(n + 4), s_sign(n)) << n;
    const Sign pattern[] = {plus, plus, minus, minus};
    for (int n = 2; n <= 9; ++n) EXPECT_EQ(s_sign(n), pattern[(n - 2) % 4]) << n;
}

}  // namespace
}  // namespace ainfty
