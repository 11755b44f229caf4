#pragma once

// Random generators and independent oracles shared by the test binaries.
// Nothing here calls into the code paths it is used to check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ainfty/coderivation.hpp"
#include "ainfty/example.hpp"
#include "ainfty/graded.hpp"
#include "ainfty/multimap.hpp"
#include "ainfty/signs.hpp"
#include "ainfty/structure.hpp"
#include "ainfty/verify.hpp"

namespace ainfty::testing {

using Rng = std::mt19937_64;

inline constexpr int kPropertyCases = 1000;

inline Scalar random_scalar(Rng& rng, bool allow_zero = false) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    while (true) {
        Scalar s(num(rng), den(rng));
        if (allow_zero || !s.is_zero()) return s;
    }
}

inline SpacePtr random_space(Rng& rng, Convention convention = Convention::cochain) {
    std::uniform_int_distribution<int> size(1, 4);
    std::uniform_int_distribution<int> degree(-2, 2);
    std::vector<BasisElement> basis;
    const int n = size(rng);
    for (int i = 0; i < n; ++i) basis.push_back({"e" + std::to_string(i), degree(rng)});
    return make_space(std::move(basis), convention);
}

inline Word random_word(Rng& rng, std::size_t basis_size, std::size_t arity) {
    std::uniform_int_distribution<BasisIndex> letter(0, static_cast<BasisIndex>(basis_size - 1));
    std::vector<BasisIndex> letters(arity);
    for (auto& l : letters) l = letter(rng);
    return Word(std::move(letters));
}

inline Permutation random_permutation(Rng& rng, std::size_t n) {
    Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

/// Random degree-homogeneous table: up to `entries` random input words, each
/// mapped to a random combination of the basis elements of the right degree.
inline MultiMap random_map(Rng& rng, const SpacePtr& space, std::size_t arity, int degree, Grading grading,
                           int entries = 6) {
    MultiMap m(space, arity, degree, grading);
    const int shift = grading == Grading::desuspended ? 1 : 0;
    for (int e = 0; e < entries; ++e) {
        const Word input = random_word(rng, space->size(), arity);
        const int target = word_degree(*space, input, grading) + degree;
        Vector out;
        for (BasisIndex b = 0; b < space->size(); ++b) {
            if (space->degree(b) - shift == target && rng() % 2 == 0) out.add(b, random_scalar(rng));
        }
        m.set(input, out);
    }
    return m;
}

/// Independent reference for the Koszul sign: sort the sequence by adjacent
/// swaps (bubble sort on target positions) and multiply (-1)^{pq} per swap.
inline int koszul_by_swaps(std::vector<int> degrees, const Permutation& p) {
    // Build the permuted sequence, then bubble it back to identity order.
    std::vector<std::size_t> labels(p.begin(), p.end());
    std::vector<int> degs;
    for (std::size_t i : p) degs.push_back(degrees[i]);
    int sign = 1;
    for (std::size_t pass = 0; pass < labels.size(); ++pass) {
        for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
            if (labels[i] > labels[i + 1]) {
                if ((degs[i] % 2 != 0) && (degs[i + 1] % 2 != 0)) sign = -sign;
                std::swap(labels[i], labels[i + 1]);
                std::swap(degs[i], degs[i + 1]);
            }
        }
    }
    return sign;
}

/// The example with the sign of m_2(v1 ⊗ v2) flipped.
inline AStructure mutated_example() {
    using namespace example;
    return structure().with_entry(2, Word{v1, v2}, Vector::basis(v1, -1), "mutated");
}

/// Square matrix inverse over the rationals; columns are images of basis
/// vectors. Assumes invertibility.
inline std::vector<Vector> invert(const std::vector<Vector>& columns) {
    const std::size_t n = columns.size();
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(2 * n));
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) a[r][c] = columns[c].coefficient(static_cast<BasisIndex>(r));
        a[c][n + c] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (a[pivot][c].is_zero()) ++pivot;
        std::swap(a[pivot], a[c]);
        const Scalar inv = Scalar(1) / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            const Scalar f = a[r][c];
            for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    std::vector<Vector> out(n);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) out[c].add(static_cast<BasisIndex>(r), a[r][n + c]);
    }
    return out;
}

inline Vector apply_linear(const std::vector<Vector>& columns, const Vector& v) {
    Vector out;
    for (const auto& [i, c] : v) out += columns[i].scaled(c);
    return out;
}

/// Random degree-preserving automorphism of the example space: arbitrary
/// invertible mixing of v1, v2 and a nonzero rescaling of w.
inline std::vector<Vector> random_example_automorphism(Rng& rng) {
    using namespace example;
    while (true) {
        const Scalar a = random_scalar(rng, true), b = random_scalar(rng, true);
        const Scalar c = random_scalar(rng, true), d = random_scalar(rng, true);
        if ((a * d - b * c).is_zero()) continue;
        Vector e1, e2;
        e1.add(v1, a);
        e1.add(v2, c);
        e2.add(v1, b);
        e2.add(v2, d);
        return {e1, e2, Vector::basis(w, random_scalar(rng))};
    }
}

/// φ · m · (φ^{-1})^{⊗k} for each arity 1..n: an isomorphic copy of the
/// structure, hence valid exactly where the original is.
inline AStructure transport(const AStructure& s, const std::vector<Vector>& phi, std::size_t n,
                            std::string name = "transported") {
    const auto inverse = invert(phi);
    const SpacePtr& space = s.space();
    const std::size_t basis = space->size();
    std::vector<MultiMap> maps;
    for (std::size_t k = 1; k <= n; ++k) {
        const MultiMap m = s.map(k);
        MultiMap out(space, k, m.degree(), m.grading());
        for (std::size_t idx = 0; idx < word_count(basis, k); ++idx) {
            const Word x = word_at(basis, k, idx);
            // Expand (φ^{-1} x_1) ⊗ ... ⊗ (φ^{-1} x_k) into basis words.
            std::vector<std::pair<std::vector<BasisIndex>, Scalar>> expansion{{{}, Scalar(1)}};
            for (BasisIndex letter : x) {
                std::vector<std::pair<std::vector<BasisIndex>, Scalar>> next;
                for (const auto& [prefix, c] : expansion) {
                    for (const auto& [b, y] : inverse[letter]) {
                        auto longer = prefix;
                        longer.push_back(b);
                        next.emplace_back(std::move(longer), c * y);
                    }
                }
                expansion = std::move(next);
            }
            Vector value;
            for (const auto& [letters, c] : expansion) {
                if (const Vector* v = m.find(letters)) value += v->scaled(c);
            }
            out.set(x, apply_linear(phi, value));
        }
        maps.push_back(std::move(out));
    }
    return AStructure::finite(space, std::move(maps), std::move(name), s.primed());
}

}  // namespace ainfty::testing
