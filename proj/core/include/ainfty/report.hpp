#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ainfty/graded.hpp"

namespace ainfty {

struct Failure {
    Word word;
    TensorPoly defect;
};

/// Outcome of one check at one arity.
struct CheckRecord {
    std::string check;       // "direct", "coderivation", "linfty"
    std::size_t arity = 0;
    Grading grading = Grading::plain;  // how `word` and `defect` are read
    std::size_t words_enumerated = 0;
    std::vector<Failure> failures;     // lexicographic by word

    bool passed() const noexcept { return failures.empty(); }
};

struct Report {
    std::string structure;
    SpacePtr space;
    std::size_t max_arity = 0;
    std::vector<CheckRecord> checks;  // arity ascending

    Convention convention() const { return space ? space->convention() : Convention::cochain; }
    bool pass() const noexcept;
    std::size_t failure_count() const noexcept;
    std::size_t words_enumerated() const noexcept;

    struct Located {
        const CheckRecord* record;
        const Failure* failure;
    };
    std::optional<Located> first_failure() const noexcept;
};

enum class ReportFormat { text, machine };

std::optional<ReportFormat> parse_report_format(std::string_view text);

/// Deterministic rendering. `machine` is a JSON document whose keys mirror
/// Report; `text` is a human-readable summary listing every failure.
/// Words and defects are printed by basis name.
std::string emit_report(const Report& report, ReportFormat format);

}  // namespace ainfty
