#include "ainfty/report.hpp"

#include <sstream>

#include <json.hpp>

namespace ainfty {

namespace {

std::string_view grading_name(Grading g) { return g == Grading::desuspended ? "desuspended" : "plain"; }

nlohmann::ordered_json word_json(const GradedSpace& space, WordView w) {
    auto out = nlohmann::ordered_json::array();
    for (BasisIndex i : w) out.push_back(space.name(i));
    return out;
}

std::string machine(const Report& r) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["structure"] = r.structure;
    doc["convention"] = std::string(to_string(r.convention()));
    doc["max_arity"] = r.max_arity;
    doc["pass"] = r.pass();
    auto checks = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json rec;
        rec["check"] = c.check;
        rec["arity"] = c.arity;
        rec["grading"] = std::string(grading_name(c.grading));
        rec["words_enumerated"] = c.words_enumerated;
        auto failures = ordered_json::array();
        for (const auto& f : c.failures) {
            ordered_json fr;
            fr["word"] = word_json(*r.space, f.word);
            auto defect = ordered_json::array();
            for (const auto& [w, coeff] : f.defect) {
                defect.push_back(ordered_json{{"coefficient", coeff.to_string()}, {"word", word_json(*r.space, w)}});
            }
            fr["defect"] = std::move(defect);
            failures.push_back(std::move(fr));
        }
        rec["failures"] = std::move(failures);
        checks.push_back(std::move(rec));
    }
    doc["checks"] = std::move(checks);
    return doc.dump(2) + "\n";
}

std::string text(const Report& r) {
    std::ostringstream os;
    os << "structure: " << r.structure << " (" << to_string(r.convention()) << ")\n";
    os << "max arity: " << r.max_arity << "\n";
    for (const auto& c : r.checks) {
        os << "  " << c.check << " arity " << c.arity << ": " << c.words_enumerated << " words, "
           << c.failures.size() << " failures\n";
        for (const auto& f : c.failures) {
            os << "    " << format_word(*r.space, f.word) << " -> " << format_poly(*r.space, f.defect) << "\n";
        }
    }
    os << (r.pass() ? "PASS" : "FAIL") << " (" << r.words_enumerated() << " word evaluations, "
       << r.failure_count() << " failures)\n";
    return os.str();
}

}  // namespace

bool Report::pass() const noexcept {
    for (const auto& c : checks) {
        if (!c.passed()) return false;
    }
    return true;
}

std::size_t Report::failure_count() const noexcept {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.failures.size();
    return n;
}

std::size_t Report::words_enumerated() const noexcept {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.words_enumerated;
    return n;
}

std::optional<Report::Located> Report::first_failure() const noexcept {
    for (const auto& c : checks) {
        if (!c.failures.empty()) return Located{&c, &c.failures.front()};
    }
    return std::nullopt;
}

std::optional<ReportFormat> parse_report_format(std::string_view t) {
    if (t == "text") return ReportFormat::text;
    if (t == "machine") return ReportFormat::machine;
    return std::nullopt;
}

std::string emit_report(const Report& report, ReportFormat format) {
    return format == ReportFormat::machine ? machine(report) : text(report);
}

}  // namespace ainfty
