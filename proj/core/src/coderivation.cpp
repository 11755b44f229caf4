#include "ainfty/coderivation.hpp"

#include <algorithm>
#include <vector>

#include "ainfty/errors.hpp"
#include "ainfty/signs.hpp"

namespace ainfty {

namespace {

void require_primed(const MultiMap& m) {
    if (m.grading() != Grading::desuspended || m.degree() != primed_map_degree) {
        throw InputError("coderivation: expected a primed (degree 1) map");
    }
}

// Adds coefficient * (1^{⊗offset} ⊗ m' ⊗ 1^{⊗rest})(w) to `out`.
// `prefix_degree` is the desuspended degree of w[0, offset).
void accumulate_term(const MultiMap& primed, WordView w, std::size_t offset, int prefix_degree,
                     const Scalar& coefficient, TensorPoly& out) {
    const std::size_t k = primed.arity();
    const Vector* value = primed.find(w.subspan(offset, k));
    if (!value) return;
    const Sign sign = pass_operator_sign(primed_map_degree, prefix_degree);
    const Scalar c = sign.is_negative() ? -coefficient : coefficient;
    for (const auto& [b, x] : *value) {
        std::vector<BasisIndex> letters;
        letters.reserve(w.size() - k + 1);
        letters.insert(letters.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(offset));
        letters.push_back(b);
        letters.insert(letters.end(), w.begin() + static_cast<std::ptrdiff_t>(offset + k), w.end());
        out.add(Word(std::move(letters)), c * x);
    }
}

void accumulate_apply(const MultiMap& primed, WordView w, const Scalar& coefficient, TensorPoly& out) {
    const std::size_t k = primed.arity();
    if (k > w.size() || primed.is_zero()) return;
    const GradedSpace& space = *primed.space();
    int prefix_degree = 0;
    for (std::size_t i = 0; i + k <= w.size(); ++i) {
        accumulate_term(primed, w, i, prefix_degree, coefficient, out);
        prefix_degree += space.degree(w[i]) - 1;
    }
}

}  // namespace

TensorPoly coderivation_term(const MultiMap& primed, WordView w, std::size_t offset) {
    require_primed(primed);
    TensorPoly out(primed.space());
    if (offset + primed.arity() > w.size()) return out;
    const int prefix_degree = word_degree(*primed.space(), w.first(offset), Grading::desuspended);
    accumulate_term(primed, w, offset, prefix_degree, 1, out);
    return out;
}

TensorPoly coderivation_apply(const MultiMap& primed, WordView w) {
    require_primed(primed);
    TensorPoly out(primed.space());
    accumulate_apply(primed, w, 1, out);
    return out;
}

TensorPoly d_apply(const MapFamily& primed, const TensorPoly& p) {
    if (primed.grading() != Grading::desuspended) throw InputError("d_apply: expected a primed family");
    if (p.space() && !same_space(p.space(), primed.space())) {
        throw InputError("d_apply: polynomial over a foreign space");
    }
    TensorPoly out(primed.space());
    for (const auto& [w, c] : p) {
        for (std::size_t k = 1; k <= w.arity(); ++k) {
            if (const MultiMap* m = primed.at(k)) accumulate_apply(*m, w, c, out);
        }
    }
    return out;
}

TensorPoly d_apply(const AStructure& s, const TensorPoly& p) {
    std::size_t top = 0;
    for (const auto& [w, c] : p) top = std::max(top, w.arity());
    return d_apply(s.primed_family(top), p);
}

TensorPoly d_squared(const MapFamily& primed, const Word& w) {
    return d_apply(primed, d_apply(primed, TensorPoly::unit(primed.space(), w)));
}

TensorPoly d_squared(const AStructure& s, const Word& w) { return d_squared(s.primed_family(w.arity()), w); }

Vector stasheff_defect(const MapFamily& unprimed, WordView x) {
    if (unprimed.grading() != Grading::plain) throw InputError("stasheff_defect: expected an unprimed family");
    const GradedSpace& space = *unprimed.space();
    const int n = static_cast<int>(x.size());
    if (n < 1) throw InputError("stasheff_defect: empty word");

    Vector defect;
    int prefix_degree = 0;
    for (int lambda = 0; lambda < n; ++lambda) {
        for (int k = 1; k <= n - lambda; ++k) {
            const MultiMap* inner_map = unprimed.at(static_cast<std::size_t>(k));
            const MultiMap* outer_map = unprimed.at(static_cast<std::size_t>(n - k + 1));
            if (!inner_map || !outer_map) continue;
            const Vector* inner =
                inner_map->find(x.subspan(static_cast<std::size_t>(lambda), static_cast<std::size_t>(k)));
            if (!inner) continue;
            const Sign alpha = alpha_sign(k, lambda, n, prefix_degree);
            const Word source(x);
            for (const auto& [b, c] : *inner) {
                const Word spliced = source.splice(static_cast<std::size_t>(lambda), static_cast<std::size_t>(k), b);
                if (const Vector* outer = outer_map->find(spliced)) {
                    defect += outer->scaled(alpha.is_negative() ? -c : c);
                }
            }
        }
        prefix_degree += space.degree(x[static_cast<std::size_t>(lambda)]);
    }
    return defect;
}

Vector stasheff_defect(const AStructure& s, WordView x) { return stasheff_defect(s.unprimed_family(x.size()), x); }

}  // namespace ainfty
