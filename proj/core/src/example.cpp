#include "ainfty/example.hpp"

#include <stdexcept>
#include <vector>

#include "ainfty/coderivation.hpp"
#include "ainfty/errors.hpp"
#include "ainfty/signs.hpp"
#include "ainfty/verify.hpp"

namespace ainfty::example {

namespace {

// The three families for n >= 2, with w^{⊗0} read as the empty block.
Word first_family(std::size_t n, std::size_t k) {
    std::vector<BasisIndex> letters{v1};
    letters.insert(letters.end(), k, w);
    letters.push_back(v1);
    letters.insert(letters.end(), n - 2 - k, w);
    return Word(std::move(letters));
}

Word second_family(std::size_t n) {
    std::vector<BasisIndex> letters{v1};
    letters.insert(letters.end(), n - 2, w);
    letters.push_back(v2);
    return Word(std::move(letters));
}

Word third_family(std::size_t n) {
    std::vector<BasisIndex> letters{v1};
    letters.insert(letters.end(), n - 1, w);
    return Word(std::move(letters));
}

// Fills `out` with the table; `coefficient(family, k)` gives each row's value.
template <class Coefficient>
void fill(MultiMap& out, std::size_t n, Coefficient coefficient) {
    if (n == 1) {
        out.set(Word{v1}, Vector::basis(w, coefficient(0, 0)));
        out.set(Word{v2}, Vector::basis(w, coefficient(0, 0)));
        return;
    }
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        const Word input = first_family(n, k);
        if (out.contains(input)) throw std::logic_error("example: overlapping table rows");
        out.set(input, Vector::basis(v1, coefficient(1, k)));
    }
    for (auto [family, input, target] : {std::tuple{2, second_family(n), v1}, std::tuple{3, third_family(n), w}}) {
        if (out.contains(input)) throw std::logic_error("example: overlapping table rows");
        out.set(input, Vector::basis(target, coefficient(family, 0)));
    }
}

void require_arity(std::size_t n) {
    if (n < 1) throw InputError("example: arity must be >= 1");
}

}  // namespace

const SpacePtr& space() {
    static const SpacePtr instance = make_space({{"v1", 0}, {"v2", 0}, {"w", 1}});
    return instance;
}

MultiMap m(std::size_t n) {
    require_arity(n);
    const int a = static_cast<int>(n);
    MultiMap out(space(), n, structure_map_degree(n), Grading::plain);
    fill(out, n, [a](int family, std::size_t k) -> Scalar {
        switch (family) {
            case 0: return 1;
            case 1: return (Sign::from_exponent(static_cast<long long>(k)) * s_sign(a)).value();
            default: return s_sign(a + 1).value();
        }
    });
    return out;
}

MultiMap mprime(std::size_t n) {
    require_arity(n);
    MultiMap out(space(), n, primed_map_degree, Grading::desuspended);
    fill(out, n, [](int, std::size_t) -> Scalar { return 1; });
    return out;
}

AStructure structure() {
    return AStructure::generated(space(), [](std::size_t n) { return m(n); }, builtin_name);
}

bool lemma1_check(std::size_t n) { return prime(m(n)) == mprime(n); }

bool top_sum_check(const AStructure& s, std::size_t n) {
    if (n < 2) throw InputError("top_sum_check: arity must be >= 2");
    const MapFamily primed = s.primed_family(n);
    const std::size_t basis = s.space()->size();

    for (std::size_t lower = 1; lower < n; ++lower) {
        for (std::size_t i = 0; i < word_count(basis, lower); ++i) {
            if (!d_squared(primed, word_at(basis, lower, i)).is_zero()) return false;
        }
    }

    for (std::size_t idx = 0; idx < word_count(basis, n); ++idx) {
        const Word x = word_at(basis, n, idx);
        const TensorPoly full = d_squared(primed, x);

        TensorPoly top(s.space());
        for (std::size_t j = 1; j <= n; ++j) {
            const std::size_t i = n + 1 - j;
            const TensorPoly inner = coderivation_apply(*primed.at(j), x);
            for (const auto& [u, c] : inner) {
                top.add_scaled(coderivation_apply(*primed.at(i), u), c);
            }
        }
        if (!(full == top)) return false;
    }
    return true;
}

bool lemma2_top_sum_check(std::size_t n) { return top_sum_check(structure(), n); }

}  // namespace ainfty::example
