#include "ainfty/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>
#include <vector>

#include "ainfty/coderivation.hpp"
#include "ainfty/errors.hpp"

namespace ainfty {

std::optional<CheckMode> parse_check_mode(std::string_view text) {
    if (text == "direct") return CheckMode::direct;
    if (text == "coderivation") return CheckMode::coderivation;
    if (text == "both") return CheckMode::both;
    return std::nullopt;
}

std::size_t default_thread_count() {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("AINFTY_THREADS")) {
        std::size_t cap = 0;
        const char* end = env + std::strlen(env);
        auto [ptr, ec] = std::from_chars(env, end, cap);
        if (ec == std::errc() && ptr == end && cap > 0) n = std::min(n, cap);
    }
    return n;
}

std::size_t word_count(std::size_t basis_size, std::size_t arity) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < arity; ++i) n *= basis_size;
    return n;
}

Word word_at(std::size_t basis_size, std::size_t arity, std::size_t index) {
    std::vector<BasisIndex> letters(arity);
    for (std::size_t i = arity; i-- > 0;) {
        letters[i] = static_cast<BasisIndex>(index % basis_size);
        index /= basis_size;
    }
    return Word(std::move(letters));
}

std::vector<Failure> sweep_words(std::size_t basis_size, std::size_t arity,
                                 const std::function<TensorPoly(const Word&)>& defect, std::size_t threads) {
    const std::size_t total = word_count(basis_size, arity);
    if (threads == 0) threads = default_thread_count();
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(total, 1));

    std::vector<std::vector<Failure>> partial(threads);
    auto work = [&](std::size_t worker) {
        const std::size_t begin = total * worker / threads;
        const std::size_t end = total * (worker + 1) / threads;
        for (std::size_t i = begin; i < end; ++i) {
            Word w = word_at(basis_size, arity, i);
            TensorPoly d = defect(w);
            if (!d.is_zero()) partial[worker].push_back(Failure{std::move(w), std::move(d)});
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }

    std::vector<Failure> merged;
    for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(merged));
    return merged;
}

Report verify_structure(const AStructure& s, std::size_t max_arity, CheckMode mode, VerifyOptions options) {
    if (max_arity < 1) throw InputError("verify_structure: max_arity must be >= 1");
    const std::size_t threads = options.threads ? options.threads : default_thread_count();
    const std::size_t basis_size = s.space()->size();

    const bool direct = mode != CheckMode::coderivation;
    const bool coder = mode != CheckMode::direct;
    std::optional<MapFamily> unprimed;
    std::optional<MapFamily> primed;
    if (direct) unprimed.emplace(s.unprimed_family(max_arity));
    if (coder) primed.emplace(s.primed_family(max_arity));

    Report report;
    report.structure = s.name();
    report.space = s.space();
    report.max_arity = max_arity;

    for (std::size_t n = 1; n <= max_arity; ++n) {
        if (direct) {
            CheckRecord rec{"direct", n, Grading::plain, word_count(basis_size, n), {}};
            rec.failures = sweep_words(
                basis_size, n,
                [&](const Word& w) { return as_poly(s.space(), stasheff_defect(*unprimed, w)); }, threads);
            report.checks.push_back(std::move(rec));
        }
        if (coder) {
            CheckRecord rec{"coderivation", n, Grading::desuspended, word_count(basis_size, n), {}};
            rec.failures =
                sweep_words(basis_size, n, [&](const Word& w) { return d_squared(*primed, w); }, threads);
            report.checks.push_back(std::move(rec));
        }
    }
    return report;
}

}  // namespace ainfty
