#include "ainfty/linfty.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ainfty/errors.hpp"

namespace ainfty {

namespace {

std::vector<int> desuspended_degrees(const GradedSpace& space, WordView y) {
    std::vector<int> out;
    out.reserve(y.size());
    for (BasisIndex i : y) out.push_back(space.degree(i) - 1);
    return out;
}

Word permuted_word(WordView y, std::span<const std::size_t> p) { return Word(permuted(y, p)); }

}  // namespace

bool is_graded_symmetric(const MultiMap& primed) {
    const GradedSpace& space = *primed.space();
    for (const auto& [y, value] : primed.table()) {
        for (std::size_t t = 0; t + 1 < y.arity(); ++t) {
            std::vector<BasisIndex> swapped(y.begin(), y.end());
            std::swap(swapped[t], swapped[t + 1]);
            const Sign eps = pass_operator_sign(space.degree(y[t]) - 1, space.degree(y[t + 1]) - 1);
            const Vector* other = primed.find(swapped);
            const Vector expected = value.scaled(eps.value());
            if (!other || !(*other == expected)) return false;
        }
    }
    return true;
}

SymMultiMap SymMultiMap::certify(MultiMap m) {
    if (m.grading() != Grading::desuspended || m.degree() != primed_map_degree) {
        throw InputError("SymMultiMap: expected a primed (degree 1) map");
    }
    if (!is_graded_symmetric(m)) throw InputError("SymMultiMap: map is not graded-symmetric");
    return SymMultiMap(std::move(m));
}

std::vector<Permutation> all_permutations(std::size_t n) {
    std::vector<Permutation> out;
    Permutation p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Permutation> unshuffles(std::size_t i, std::size_t r) {
    const std::size_t n = i + r;
    // Choose which i inputs go first; both blocks keep their original order.
    std::vector<bool> chosen(n, false);
    std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(i), true);
    std::vector<Permutation> out;
    do {
        Permutation p;
        p.reserve(n);
        for (std::size_t s = 0; s < n; ++s) {
            if (chosen[s]) p.push_back(s);
        }
        for (std::size_t s = 0; s < n; ++s) {
            if (!chosen[s]) p.push_back(s);
        }
        out.push_back(std::move(p));
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return out;
}

SymMultiMap symmetrize_prime(const MultiMap& primed) {
    if (primed.grading() != Grading::desuspended || primed.degree() != primed_map_degree) {
        throw InputError("symmetrize_prime: expected a primed (degree 1) map");
    }
    const GradedSpace& space = *primed.space();
    const auto perms = all_permutations(primed.arity());

    std::set<Word> done;
    MultiMap out(primed.space(), primed.arity(), primed_map_degree, Grading::desuspended);
    for (const auto& [support, unused] : primed.table()) {
        std::vector<BasisIndex> letters(support.begin(), support.end());
        std::sort(letters.begin(), letters.end());
        do {
            Word y(letters);
            if (!done.insert(y).second) continue;
            const auto degrees = desuspended_degrees(space, y);
            Vector value;
            for (const auto& p : perms) {
                if (const Vector* v = primed.find(permuted<BasisIndex>(y.letters(), p))) {
                    value += v->scaled(koszul_permutation_sign(degrees, p).value());
                }
            }
            out.set(std::move(y), std::move(value));
        } while (std::next_permutation(letters.begin(), letters.end()));
    }
    return SymMultiMap::certify(std::move(out));
}

std::vector<SymMultiMap> symmetrized_family(const AStructure& s, std::size_t n) {
    const MapFamily primed = s.primed_family(n);
    std::vector<SymMultiMap> out;
    out.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) out.push_back(symmetrize_prime(*primed.at(k)));
    return out;
}

TensorPoly linfty_defect(std::span<const SymMultiMap> family, const Word& y) {
    if (family.empty()) return {};
    const SpacePtr& space = family.front().map().space();
    for (std::size_t k = 0; k < family.size(); ++k) {
        if (family[k].arity() != k + 1) throw InputError("linfty_defect: family[k] must have arity k + 1");
    }
    const std::size_t n = y.arity();
    const auto degrees = desuspended_degrees(*space, y);

    Vector total;
    for (std::size_t i = 1; i <= n && i <= family.size(); ++i) {
        const std::size_t j = n + 1 - i;
        if (j > family.size()) continue;
        const SymMultiMap& inner_map = family[i - 1];
        const SymMultiMap& outer_map = family[j - 1];
        for (const auto& sigma : unshuffles(i, n - i)) {
            const Word shuffled = permuted_word(y, sigma);
            const Vector* inner = inner_map.find(shuffled.letters().first(i));
            if (!inner) continue;
            const Sign eps = koszul_permutation_sign(degrees, sigma);
            for (const auto& [b, c] : *inner) {
                if (const Vector* outer = outer_map.find(shuffled.splice(0, i, b))) {
                    total += outer->scaled(eps.is_negative() ? -c : c);
                }
            }
        }
    }
    return as_poly(space, total);
}

Report verify_linfty(const AStructure& s, std::size_t max_arity, VerifyOptions options) {
    if (max_arity < 1) throw InputError("verify_linfty: max_arity must be >= 1");
    const auto family = symmetrized_family(s, max_arity);
    const std::size_t basis = s.space()->size();

    Report report;
    report.structure = s.name();
    report.space = s.space();
    report.max_arity = max_arity;
    for (std::size_t n = 1; n <= max_arity; ++n) {
        CheckRecord rec{"linfty", n, Grading::desuspended, word_count(basis, n), {}};
        rec.failures = sweep_words(
            basis, n, [&](const Word& y) { return linfty_defect(family, y); }, options.threads);
        report.checks.push_back(std::move(rec));
    }
    return report;
}

}  // namespace ainfty
