#pragma once

// The three-dimensional example: V_0 = <v1, v2>, V_1 = <w>, with
//
//   m_1(v1) = m_1(v2) = w
//   m_n(v1 ⊗ w^k ⊗ v1 ⊗ w^{n-2-k}) = (-1)^k s_n v1,   0 <= k <= n-2
//   m_n(v1 ⊗ w^{n-2} ⊗ v2)         = s_{n+1} v1
//   m_n(v1 ⊗ w^{n-1})              = s_{n+1} w
//
// for n >= 2, and zero on every other basis word.

#include <cstddef>

#include "ainfty/structure.hpp"

namespace ainfty::example {

inline constexpr BasisIndex v1 = 0;
inline constexpr BasisIndex v2 = 1;
inline constexpr BasisIndex w = 2;

inline constexpr const char* builtin_name = "paper-example";

/// Shared immutable space {v1:0, v2:0, w:1}, cochain convention.
const SpacePtr& space();

/// Unprimed m_n. Throws InputError for n < 1.
MultiMap m(std::size_t n);

/// The primed maps in closed form: every nonzero entry is +1 on ↓v1 or ↓w.
MultiMap mprime(std::size_t n);

/// Generator-backed structure named "paper-example".
AStructure structure();

/// prime(m(n)) == mprime(n), entry for entry.
bool lemma1_check(std::size_t n);

/// For every arity-n word, D²(w) equals Σ_{i+j=n+1} m_i'(m_j'(w)), the two
/// sides computed independently. Returns false if D² fails to vanish below
/// arity n, where the reduction does not apply.
bool top_sum_check(const AStructure& s, std::size_t n);

bool lemma2_top_sum_check(std::size_t n);

}  // namespace ainfty::example
