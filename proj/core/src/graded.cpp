#include "ainfty/graded.hpp"

#include <algorithm>
#include <set>

#include "ainfty/errors.hpp"

namespace ainfty {

std::string_view to_string(Convention c) { return c == Convention::chain ? "chain" : "cochain"; }

std::optional<Convention> parse_convention(std::string_view text) {
    if (text == "cochain") return Convention::cochain;
    if (text == "chain") return Convention::chain;
    return std::nullopt;
}

GradedSpace::GradedSpace(std::vector<BasisElement> basis, Convention convention)
    : basis_(std::move(basis)), convention_(convention) {
    std::set<std::string_view> seen;
    for (const auto& e : basis_) {
        if (e.name.empty()) throw InputError("basis element with empty name");
        if (!seen.insert(e.name).second) throw InputError("duplicate basis name '" + e.name + "'");
    }
}

const BasisElement& GradedSpace::element(BasisIndex i) const {
    if (i >= basis_.size()) throw InputError("basis index " + std::to_string(i) + " out of range");
    return basis_[i];
}

std::optional<BasisIndex> GradedSpace::find(std::string_view name) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].name == name) return static_cast<BasisIndex>(i);
    }
    return std::nullopt;
}

BasisIndex GradedSpace::index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw InputError("unknown basis name '" + std::string(name) + "'");
}

SpacePtr make_space(std::vector<BasisElement> basis, Convention convention) {
    return std::make_shared<const GradedSpace>(std::move(basis), convention);
}

bool same_space(const SpacePtr& a, const SpacePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

Word Word::splice(std::size_t offset, std::size_t length, BasisIndex letter) const {
    if (offset + length > letters_.size()) throw InputError("Word::splice: window out of range");
    std::vector<BasisIndex> out;
    out.reserve(letters_.size() - length + 1);
    out.insert(out.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(offset));
    out.push_back(letter);
    out.insert(out.end(), letters_.begin() + static_cast<std::ptrdiff_t>(offset + length), letters_.end());
    return Word(std::move(out));
}

Word operator+(const Word& a, const Word& b) {
    std::vector<BasisIndex> out(a.letters_);
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (a.arity() != b.arity()) return a.arity() <=> b.arity();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

bool ShortLex::operator()(WordView a, WordView b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Vector Vector::basis(BasisIndex i, Scalar coefficient) {
    Vector v;
    v.add(i, coefficient);
    return v;
}

void Vector::add(BasisIndex i, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(i, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar Vector::coefficient(BasisIndex i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? Scalar() : it->second;
}

Vector& Vector::operator+=(const Vector& rhs) {
    for (const auto& [i, c] : rhs.terms_) add(i, c);
    return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
    for (const auto& [i, c] : rhs.terms_) add(i, -c);
    return *this;
}

Vector Vector::scaled(const Scalar& c) const {
    Vector out;
    if (c.is_zero()) return out;
    for (const auto& [i, x] : terms_) out.terms_.emplace(i, x * c);
    return out;
}

TensorPoly TensorPoly::unit(SpacePtr space, Word w, Scalar coefficient) {
    TensorPoly p(std::move(space));
    p.add(std::move(w), coefficient);
    return p;
}

TensorPoly TensorPoly::from_terms(SpacePtr space, std::span<const std::pair<Word, Scalar>> raw) {
    TensorPoly p(std::move(space));
    for (const auto& [w, c] : raw) p.add(w, c);
    return p;
}

void TensorPoly::add(const Word& w, const Scalar& c) {
    if (w.empty()) throw InputError("TensorPoly: arity-0 words are not representable");
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void TensorPoly::add(Word&& w, const Scalar& c) {
    if (w.empty()) throw InputError("TensorPoly: arity-0 words are not representable");
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(std::move(w), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void TensorPoly::add_scaled(const TensorPoly& other, const Scalar& c) {
    if (!space_) {
        space_ = other.space_;
    } else if (other.space_ && !same_space(space_, other.space_)) {
        throw InputError("TensorPoly: operands live over different graded spaces");
    }
    if (c.is_zero()) return;
    for (const auto& [w, x] : other.terms_) add(w, x * c);
}

Scalar TensorPoly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

TensorPoly TensorPoly::arity_component(std::size_t n) const {
    TensorPoly out(space_);
    for (const auto& [w, c] : terms_) {
        if (w.arity() == n) out.terms_.emplace(w, c);
    }
    return out;
}

int word_degree(const GradedSpace& space, WordView w, Grading grading) {
    int total = 0;
    for (BasisIndex i : w) total += space.degree(i);
    if (grading == Grading::desuspended) total -= static_cast<int>(w.size());
    return total;
}

TensorPoly poly_add(const TensorPoly& a, const TensorPoly& b) {
    TensorPoly out = a;
    out.add_scaled(b, 1);
    return out;
}

TensorPoly poly_scale(const Scalar& c, const TensorPoly& p) {
    TensorPoly out(p.space());
    out.add_scaled(p, c);
    return out;
}

TensorPoly tensor(const TensorPoly& a, const TensorPoly& b) {
    if (a.space() && b.space() && !same_space(a.space(), b.space())) {
        throw InputError("tensor: operands live over different graded spaces");
    }
    TensorPoly out(a.space() ? a.space() : b.space());
    for (const auto& [u, x] : a) {
        for (const auto& [v, y] : b) out.add(u + v, x * y);
    }
    return out;
}

TensorPoly as_poly(SpacePtr space, const Vector& v) {
    TensorPoly out(std::move(space));
    for (const auto& [i, c] : v) out.add(Word{i}, c);
    return out;
}

std::string format_word(const GradedSpace& space, WordView w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += '|';
        out += space.name(w[i]);
    }
    return out;
}

std::string format_vector(const GradedSpace& space, const Vector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [i, c] : v) {
        if (!out.empty()) out += " + ";
        out += c.to_string() + " " + space.name(i);
    }
    return out;
}

std::string format_poly(const GradedSpace& space, const TensorPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : p) {
        if (!out.empty()) out += " + ";
        out += c.to_string() + " " + format_word(space, w);
    }
    return out;
}

Word parse_word(const GradedSpace& space, std::string_view text) {
    std::vector<BasisIndex> letters;
    while (true) {
        const auto comma = text.find(',');
        const auto token = text.substr(0, comma);
        if (token.empty()) throw InputError("empty basis name in word");
        letters.push_back(space.index_of(token));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Word(std::move(letters));
}

}  // namespace ainfty
