#pragma once

// Graded basis, sparse vectors, tensor words and mixed-arity tensor
// polynomials. Everything downstream computes on these types.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ainfty/scalar.hpp"

namespace ainfty {

using BasisIndex = std::uint32_t;
using WordView = std::span<const BasisIndex>;

enum class Convention { cochain, chain };

/// Whether a word's letters are read in V or in the desuspension of V,
/// where each letter has degree one less.
enum class Grading { plain, desuspended };

std::string_view to_string(Convention c);
std::optional<Convention> parse_convention(std::string_view text);

struct BasisElement {
    std::string name;
    int degree = 0;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Finite ordered basis with integer degrees.
///
/// Degrees are always stored in the cochain grading used by the engine. The
/// `convention` field records how the source document wrote them; a chain
/// source has its degrees negated on the way in (see structure_file.hpp).
class GradedSpace {
public:
    explicit GradedSpace(std::vector<BasisElement> basis,
                         Convention convention = Convention::cochain);

    std::size_t size() const noexcept { return basis_.size(); }
    Convention convention() const noexcept { return convention_; }
    std::span<const BasisElement> elements() const noexcept { return basis_; }

    const BasisElement& element(BasisIndex i) const;
    int degree(BasisIndex i) const { return element(i).degree; }
    const std::string& name(BasisIndex i) const { return element(i).name; }

    std::optional<BasisIndex> find(std::string_view name) const;
    BasisIndex index_of(std::string_view name) const;  // throws InputError

    friend bool operator==(const GradedSpace&, const GradedSpace&) = default;

private:
    std::vector<BasisElement> basis_;
    Convention convention_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

SpacePtr make_space(std::vector<BasisElement> basis, Convention convention = Convention::cochain);

/// Same space (identity or equal basis and convention).
bool same_space(const SpacePtr& a, const SpacePtr& b);

/// Tensor word x_1 ⊗ ... ⊗ x_n over basis indices. Ordered shortlex:
/// first by arity, then lexicographically by index.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<BasisIndex> letters) : letters_(letters) {}
    explicit Word(std::vector<BasisIndex> letters) : letters_(std::move(letters)) {}
    explicit Word(WordView letters) : letters_(letters.begin(), letters.end()) {}

    std::size_t arity() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    WordView letters() const noexcept { return letters_; }
    operator WordView() const noexcept { return letters_; }  // NOLINT(google-explicit-constructor)

    BasisIndex operator[](std::size_t i) const { return letters_[i]; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    /// Window [offset, offset + length) replaced by the single letter `letter`.
    Word splice(std::size_t offset, std::size_t length, BasisIndex letter) const;

    friend Word operator+(const Word& a, const Word& b);
    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    std::vector<BasisIndex> letters_;
};

/// Transparent shortlex comparator so tables can be probed with a WordView.
struct ShortLex {
    using is_transparent = void;
    bool operator()(WordView a, WordView b) const noexcept;
};

/// Sparse linear combination of basis elements.
class Vector {
public:
    using Terms = std::map<BasisIndex, Scalar>;

    Vector() = default;
    static Vector basis(BasisIndex i, Scalar coefficient = 1);

    void add(BasisIndex i, const Scalar& c);

    Scalar coefficient(BasisIndex i) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Terms& terms() const noexcept { return terms_; }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }

    Vector& operator+=(const Vector& rhs);
    Vector& operator-=(const Vector& rhs);
    Vector scaled(const Scalar& c) const;

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend bool operator==(const Vector&, const Vector&) = default;

private:
    Terms terms_;
};

/// Element of the tensor algebra: a finite sum of words of any positive
/// arity with rational coefficients. Zero coefficients are never stored.
///
/// A default-constructed TensorPoly is the zero element with no space
/// attached; it combines with a polynomial over any space.
class TensorPoly {
public:
    using Terms = std::map<Word, Scalar, ShortLex>;

    TensorPoly() = default;
    explicit TensorPoly(SpacePtr space) : space_(std::move(space)) {}

    static TensorPoly unit(SpacePtr space, Word w, Scalar coefficient = 1);

    /// Sums duplicate words and drops zero coefficients.
    static TensorPoly from_terms(SpacePtr space, std::span<const std::pair<Word, Scalar>> raw);

    const SpacePtr& space() const noexcept { return space_; }

    void add(const Word& w, const Scalar& c);
    void add(Word&& w, const Scalar& c);
    void add_scaled(const TensorPoly& other, const Scalar& c);

    Scalar coefficient(const Word& w) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const Terms& terms() const noexcept { return terms_; }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }

    /// Terms of arity exactly `n`.
    TensorPoly arity_component(std::size_t n) const;

    friend bool operator==(const TensorPoly& a, const TensorPoly& b) { return a.terms_ == b.terms_; }

private:
    SpacePtr space_;
    Terms terms_;
};

/// Σ|x_i| for Grading::plain, Σ(|x_i| − 1) for Grading::desuspended.
int word_degree(const GradedSpace& space, WordView w, Grading grading);

TensorPoly poly_add(const TensorPoly& a, const TensorPoly& b);  // throws on space mismatch
TensorPoly poly_scale(const Scalar& c, const TensorPoly& p);

/// Bilinear concatenation a ⊗ b (no signs: words are just juxtaposed).
TensorPoly tensor(const TensorPoly& a, const TensorPoly& b);

/// A vector viewed as an arity-1 polynomial.
TensorPoly as_poly(SpacePtr space, const Vector& v);

inline TensorPoly operator+(const TensorPoly& a, const TensorPoly& b) { return poly_add(a, b); }
inline TensorPoly operator-(const TensorPoly& a, const TensorPoly& b) {
    return poly_add(a, poly_scale(-1, b));
}

// Display helpers: `a|b|c` for words, `c1 x + c2 y` for sums, `0` for zero.
std::string format_word(const GradedSpace& space, WordView w);
std::string format_vector(const GradedSpace& space, const Vector& v);
std::string format_poly(const GradedSpace& space, const TensorPoly& p);

/// Parses comma-separated basis names (`v1,w,v2`) into a word.
Word parse_word(const GradedSpace& space, std::string_view text);

}  // namespace ainfty
