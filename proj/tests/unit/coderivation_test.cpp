#include "ainfty/coderivation.hpp"

#include <gtest/gtest.h>

#include "ainfty/errors.hpp"
#include "ainfty/example.hpp"
#include "test_support.hpp"

namespace ainfty {
namespace {

using example::v1;
using example::v2;
using example::w;

TensorPoly poly(std::initializer_list<std::pair<Word, long>> terms) {
    TensorPoly p(example::space());
    for (const auto& [word, c] : terms) p.add(word, c);
    return p;
}

// Brute-force Stasheff sum: every (λ, k) term with α written out from its
// exponent, evaluated through apply_map on the unprimed maps.
Vector stasheff_oracle(const AStructure& s, const Word& x) {
    const auto& space = *s.space();
    const int n = static_cast<int>(x.arity());
    Vector total;
    for (int lambda = 0; lambda <= n - 1; ++lambda) {
        for (int k = 1; k <= n - lambda; ++k) {
            int prefix = 0;
            for (int i = 0; i < lambda; ++i) prefix += space.degree(x[static_cast<std::size_t>(i)]);
            const int exponent = k + lambda + k * lambda + k * n + k * prefix;
            const int alpha = (exponent % 2 == 0) ? 1 : -1;
            std::vector<BasisIndex> window(x.begin() + lambda, x.begin() + lambda + k);
            const Vector inner = apply_map(s.map(static_cast<std::size_t>(k)), window);
            for (const auto& [b, c] : inner) {
                std::vector<BasisIndex> outer_word(x.begin(), x.begin() + lambda);
                outer_word.push_back(b);
                outer_word.insert(outer_word.end(), x.begin() + lambda + k, x.end());
                total += apply_map(s.map(static_cast<std::size_t>(n - k + 1)), outer_word).scaled(c * alpha);
            }
        }
    }
    return total;
}

TEST(CoderivationApply, ExampleValues) {
    const MultiMap m1p = example::mprime(1);
    const MultiMap m2p = example::mprime(2);
    EXPECT_EQ(coderivation_apply(m1p, Word{v1, v2}), poly({{Word{w, v2}, 1}, {Word{v1, w}, -1}}));
    EXPECT_EQ(coderivation_apply(m2p, Word{v1, w, v2}), poly({{Word{w, v2}, 1}}));
    EXPECT_EQ(coderivation_apply(m2p, Word{v1, w}), poly({{Word{w}, 1}}));
}

TEST(CoderivationApply, ArityAboveWordIsZero) {
    EXPECT_TRUE(coderivation_apply(example::mprime(3), Word{v1, w}).is_zero());
    EXPECT_THROW(coderivation_apply(example::m(2), Word{v1, w}), InputError);
}

TEST(CoderivationTerm, SumOfTermsIsApply) {
    const MultiMap m1p = example::mprime(1);
    const Word x{v1, w, v2, v1};
    TensorPoly sum(example::space());
    for (std::size_t i = 0; i < x.arity(); ++i) sum = sum + coderivation_term(m1p, x, i);
    EXPECT_EQ(sum, coderivation_apply(m1p, x));
    EXPECT_TRUE(coderivation_term(m1p, x, 4).is_zero());
}

TEST(DApply, ExampleValues) {
    const AStructure s = example::structure();
    EXPECT_EQ(d_apply(s, TensorPoly::unit(example::space(), Word{v1})), poly({{Word{w}, 1}}));
    EXPECT_EQ(d_apply(s, TensorPoly::unit(example::space(), Word{v1, v2})),
              poly({{Word{v1}, 1}, {Word{w, v2}, 1}, {Word{v1, w}, -1}}));
    EXPECT_TRUE(d_apply(s, TensorPoly(example::space())).is_zero());
    EXPECT_TRUE(d_apply(s, TensorPoly()).is_zero());
}

TEST(DApply, RejectsUnprimedFamily) {
    const AStructure s = example::structure();
    EXPECT_THROW(d_apply(s.unprimed_family(2), TensorPoly::unit(example::space(), Word{v1})), InputError);
}

TEST(DSquared, ExampleValues) {
    const AStructure s = example::structure();
    EXPECT_TRUE(d_squared(s, Word{v1, v2}).is_zero());
    EXPECT_TRUE(d_squared(s, Word{v1, w, v2}).is_zero());
}

TEST(DSquared, MutationDetected) {
    const TensorPoly d = d_squared(testing::mutated_example(), Word{v1, v2});
    EXPECT_EQ(d, poly({{Word{w}, -2}}));
}

TEST(StasheffDefect, ExampleValues) {
    const AStructure s = example::structure();
    EXPECT_TRUE(stasheff_defect(s, Word{v1}).is_zero());
    EXPECT_TRUE(stasheff_defect(s, Word{v1, v2}).is_zero());
    EXPECT_TRUE(stasheff_defect(s, Word{v1, w, v2}).is_zero());
    EXPECT_TRUE(stasheff_oracle(s, Word{v1, w, v2}).is_zero());
}

TEST(StasheffDefect, ArityTwoTermsByHand) {
    // -m_2(m_1 v1 ⊗ v2) + m_1(m_2(v1 ⊗ v2)) - m_2(v1 ⊗ m_1 v2) = 0 + w - w.
    const auto m1 = example::m(1);
    const auto m2 = example::m(2);
    EXPECT_EQ(apply_map(m2, Word{w, v2}), Vector());
    EXPECT_EQ(apply_map(m1, Word{v1}), Vector::basis(w));
    EXPECT_EQ(apply_map(m2, Word{v1, w}), Vector::basis(w));
}

TEST(StasheffDefect, MatchesOracleOnMutations) {
    testing::Rng rng(41);
    const AStructure base = example::structure();
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t k = 1 + rng() % 3;
        const MultiMap mk = base.map(k);
        // Perturb one existing entry.
        auto it = mk.table().begin();
        std::advance(it, static_cast<long>(rng() % mk.size()));
        const AStructure mutated =
            base.with_entry(k, it->first, it->second.scaled(testing::random_scalar(rng)), "perturbed");
        for (std::size_t n = 1; n <= 4; ++n) {
            for (std::size_t idx = 0; idx < word_count(3, n); ++idx) {
                const Word x = word_at(3, n, idx);
                ASSERT_EQ(stasheff_defect(mutated, x), stasheff_oracle(mutated, x)) << format_word(*example::space(), x);
            }
        }
    }
}

TEST(StasheffDefect, MutationDetected) {
    EXPECT_EQ(stasheff_defect(testing::mutated_example(), Word{v1, v2}), Vector::basis(w, -2));
}

}  // namespace
}  // namespace ainfty
