#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>

#include "ainfty/report.hpp"
#include "ainfty/structure.hpp"

namespace ainfty {

enum class CheckMode { direct, coderivation, both };

std::optional<CheckMode> parse_check_mode(std::string_view text);

struct VerifyOptions {
    /// Worker count; 0 picks default_thread_count().
    std::size_t threads = 0;
};

/// Hardware concurrency, capped by the AINFTY_THREADS environment variable
/// when it holds a positive integer.
std::size_t default_thread_count();

/// Number of words of the given arity over a basis of the given size.
std::size_t word_count(std::size_t basis_size, std::size_t arity);

/// The index-th word of the given arity in lexicographic order.
Word word_at(std::size_t basis_size, std::size_t arity, std::size_t index);

/// Evaluates `defect` on every basis word of `arity` (lexicographic order),
/// split across workers, and returns the words with a nonzero result in
/// enumeration order. `defect` must be safe to call concurrently.
std::vector<Failure> sweep_words(std::size_t basis_size, std::size_t arity,
                                 const std::function<TensorPoly(const Word&)>& defect,
                                 std::size_t threads);

/// Exhaustive check of every basis word of arity 1..max_arity under the
/// direct identity, the square-zero coderivation, or both. Records are
/// ordered by arity, with the direct check first when both run.
Report verify_structure(const AStructure& s, std::size_t max_arity, CheckMode mode, VerifyOptions options = {});

}  // namespace ainfty
