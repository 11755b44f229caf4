#pragma once

// Graded symmetrization of the primed A∞ maps into the degree-1 form l_n' of
// an L∞ structure, and the L∞ relations in unshuffle form. Everything here
// lives on the desuspended space, where only plain Koszul signs occur.

#include <cstddef>
#include <span>
#include <vector>

#include "ainfty/multimap.hpp"
#include "ainfty/report.hpp"
#include "ainfty/signs.hpp"
#include "ainfty/structure.hpp"
#include "ainfty/verify.hpp"

namespace ainfty {

/// A primed map certified graded-symmetric:
/// l(y∘σ) = ε(σ; deg↓ y) l(y) for every permutation σ.
class SymMultiMap {
public:
    /// Throws InputError if `m` is not primed or not graded-symmetric.
    static SymMultiMap certify(MultiMap m);

    const MultiMap& map() const noexcept { return map_; }
    std::size_t arity() const noexcept { return map_.arity(); }
    const Vector* find(WordView y) const { return map_.find(y); }

private:
    explicit SymMultiMap(MultiMap m) : map_(std::move(m)) {}

    MultiMap map_;
};

/// Graded symmetry, checked on adjacent transpositions (they generate S_n
/// and ε is multiplicative).
bool is_graded_symmetric(const MultiMap& primed);

/// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

/// (i, r)-unshuffles: permutations of i + r slots increasing on the first i
/// and on the last r slots (gather form).
std::vector<Permutation> unshuffles(std::size_t i, std::size_t r);

/// l'(y) = Σ_{σ∈S_n} ε(σ) m'(y∘σ), over every word y whose letters can be
/// rearranged into the support of m'.
SymMultiMap symmetrize_prime(const MultiMap& primed);

/// Symmetrized primed maps of arities 1..n.
std::vector<SymMultiMap> symmetrized_family(const AStructure& s, std::size_t n);

/// Σ_{i+j=n+1} Σ_{σ unshuffle(i, n-i)} ε(σ) l_j'(l_i'(y_σ(1..i)) ⊗ y_σ(i+1..n)).
/// `family[k-1]` holds arity k; missing arities count as zero.
TensorPoly linfty_defect(std::span<const SymMultiMap> family, const Word& y);

/// Symmetrizes the primed maps up to max_arity and evaluates linfty_defect on
/// every basis word of arity 1..max_arity.
Report verify_linfty(const AStructure& s, std::size_t max_arity, VerifyOptions options = {});

}  // namespace ainfty
