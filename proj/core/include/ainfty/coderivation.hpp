#pragma once

// The bar-side formulation (coderivation D on the tensor coalgebra of the
// desuspended space) and the direct Stasheff identity on V.

#include <cstddef>

#include "ainfty/graded.hpp"
#include "ainfty/multimap.hpp"
#include "ainfty/structure.hpp"

namespace ainfty {

/// The single term (1^{⊗i} ⊗ m' ⊗ 1^{⊗rest}) of the coderivation extension,
/// with i = `offset`. Since m' has degree 1 the sign is (-1)^{deg of the
/// length-i prefix in the desuspended grading}. Zero when the window does not
/// fit inside the word.
TensorPoly coderivation_term(const MultiMap& primed, WordView w, std::size_t offset);

/// Σ_i coderivation_term(primed, w, i); zero when arity(primed) > arity(w).
TensorPoly coderivation_apply(const MultiMap& primed, WordView w);

/// D(p) = Σ_k m_k'(p), linearly extended. Maps above the family's
/// max_arity count as zero.
TensorPoly d_apply(const MapFamily& primed, const TensorPoly& p);
TensorPoly d_apply(const AStructure& s, const TensorPoly& p);

/// D(D(w)). Zero for every word iff the family is an A∞ structure.
TensorPoly d_squared(const MapFamily& primed, const Word& w);
TensorPoly d_squared(const AStructure& s, const Word& w);

/// Left-hand side of the Stasheff identity at arity n = arity(x):
/// Σ_{λ=0}^{n-1} Σ_{k=1}^{n-λ} α m_{n-k+1}(x_1..x_λ ⊗ m_k(x_{λ+1}..x_{λ+k}) ⊗ ...).
Vector stasheff_defect(const MapFamily& unprimed, WordView x);
Vector stasheff_defect(const AStructure& s, WordView x);

}  // namespace ainfty
