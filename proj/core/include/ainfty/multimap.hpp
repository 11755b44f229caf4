#pragma once

#include <cstddef>
#include <map>

#include "ainfty/graded.hpp"
#include "ainfty/signs.hpp"

namespace ainfty {

/// Degree of the unprimed arity-k structure map in the cochain convention.
constexpr int structure_map_degree(std::size_t arity) { return 2 - static_cast<int>(arity); }

/// Degree of every primed map on the desuspended space.
inline constexpr int primed_map_degree = 1;

/// Multilinear map of fixed arity and degree, stored as a sparse table from
/// basis words to output vectors. Words absent from the table map to zero.
///
/// `grading` says whether inputs and outputs are read in V (unprimed maps) or
/// in the desuspension of V (primed maps). Every entry must be homogeneous:
/// deg(output) == deg(input) + degree, measured in that grading.
class MultiMap {
public:
    using Table = std::map<Word, Vector, ShortLex>;

    MultiMap(SpacePtr space, std::size_t arity, int degree, Grading grading);

    /// Inserts or replaces an entry; a zero output erases it. Throws
    /// InputError on arity mismatch, unknown basis index, or an
    /// inhomogeneous entry.
    void set(Word input, Vector output);

    bool contains(WordView input) const { return table_.find(input) != table_.end(); }

    /// Table lookup without copying; nullptr when the entry is zero.
    const Vector* find(WordView input) const {
        auto it = table_.find(input);
        return it == table_.end() ? nullptr : &it->second;
    }

    const SpacePtr& space() const noexcept { return space_; }
    std::size_t arity() const noexcept { return arity_; }
    int degree() const noexcept { return degree_; }
    Grading grading() const noexcept { return grading_; }
    const Table& table() const noexcept { return table_; }
    std::size_t size() const noexcept { return table_.size(); }
    bool is_zero() const noexcept { return table_.empty(); }

    friend bool operator==(const MultiMap& a, const MultiMap& b);

private:
    SpacePtr space_;
    std::size_t arity_;
    int degree_;
    Grading grading_;
    Table table_;
};

/// Evaluates m on a basis word. Throws InputError on arity mismatch.
Vector apply_map(const MultiMap& m, WordView w);

/// m' = (-1)^{k(k-1)/2} ↓ ∘ m ∘ ↑^{⊗k}: the degree-1 map on the desuspended
/// space. Requires an unprimed map of degree 2 - k.
MultiMap prime(const MultiMap& m);

/// Inverse of prime(). Requires a primed map of degree 1.
MultiMap unprime(const MultiMap& primed);

/// Sign c such that m'(↓x_1 ⊗ ... ⊗ ↓x_k) = c ↓ m(x_1 ⊗ ... ⊗ x_k).
Sign prime_sign(const GradedSpace& space, WordView input);

}  // namespace ainfty
