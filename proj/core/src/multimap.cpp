#include "ainfty/multimap.hpp"

#include <string>
#include <vector>

#include "ainfty/errors.hpp"
#include "ainfty/signs.hpp"

namespace ainfty {

namespace {

int output_degree(const GradedSpace& space, BasisIndex i, Grading grading) {
    return space.degree(i) - (grading == Grading::desuspended ? 1 : 0);
}

MultiMap transfer(const MultiMap& from, int degree, Grading grading) {
    MultiMap out(from.space(), from.arity(), degree, grading);
    for (const auto& [input, value] : from.table()) {
        const Sign sign = prime_sign(*from.space(), input);
        out.set(input, value.scaled(sign.value()));
    }
    return out;
}

}  // namespace

MultiMap::MultiMap(SpacePtr space, std::size_t arity, int degree, Grading grading)
    : space_(std::move(space)), arity_(arity), degree_(degree), grading_(grading) {
    if (!space_) throw InputError("MultiMap: null space");
    if (arity_ < 1) throw InputError("MultiMap: arity must be >= 1");
}

void MultiMap::set(Word input, Vector output) {
    if (input.arity() != arity_) {
        throw InputError("MultiMap: word of length " + std::to_string(input.arity()) +
                         " given to an arity-" + std::to_string(arity_) + " map");
    }
    const int in_degree = word_degree(*space_, input, grading_);
    for (const auto& [i, c] : output) {
        if (output_degree(*space_, i, grading_) != in_degree + degree_) {
            throw InputError("MultiMap: inhomogeneous entry " + format_word(*space_, input) + " -> " +
                             space_->name(i) + " (expected output degree " +
                             std::to_string(in_degree + degree_) + ")");
        }
    }
    if (output.is_zero()) {
        table_.erase(input);
        return;
    }
    table_.insert_or_assign(std::move(input), std::move(output));
}

bool operator==(const MultiMap& a, const MultiMap& b) {
    return same_space(a.space_, b.space_) && a.arity_ == b.arity_ && a.degree_ == b.degree_ &&
           a.grading_ == b.grading_ && a.table_ == b.table_;
}

Vector apply_map(const MultiMap& m, WordView w) {
    if (w.size() != m.arity()) {
        throw InputError("apply_map: word of length " + std::to_string(w.size()) + " given to an arity-" +
                         std::to_string(m.arity()) + " map");
    }
    for (BasisIndex i : w) (void)m.space()->element(i);
    const Vector* v = m.find(w);
    return v ? *v : Vector();
}

Sign prime_sign(const GradedSpace& space, WordView input) {
    const int k = static_cast<int>(input.size());
    std::vector<int> degrees;
    degrees.reserve(input.size());
    for (BasisIndex i : input) degrees.push_back(space.degree(i));
    // Global prefactor, then ↓x_1⊗...⊗↓x_k = ± ↓^{⊗k}(x_1⊗...⊗x_k), then
    // ↑^{⊗k}∘↓^{⊗k} = ± id. The trailing ↓ on the output passes nothing.
    return Sign::from_exponent(static_cast<long long>(k) * (k - 1) / 2) * desusp_word_sign(degrees) *
           susp_iso_sign(k);
}

MultiMap prime(const MultiMap& m) {
    if (m.grading() != Grading::plain) throw InputError("prime: map is already primed");
    if (m.degree() != structure_map_degree(m.arity())) {
        throw InputError("prime: arity-" + std::to_string(m.arity()) + " map has degree " +
                         std::to_string(m.degree()) + ", expected " +
                         std::to_string(structure_map_degree(m.arity())));
    }
    return transfer(m, primed_map_degree, Grading::desuspended);
}

MultiMap unprime(const MultiMap& primed) {
    if (primed.grading() != Grading::desuspended) throw InputError("unprime: map is not primed");
    if (primed.degree() != primed_map_degree) {
        throw InputError("unprime: primed map has degree " + std::to_string(primed.degree()) +
                         ", expected 1");
    }
    return transfer(primed, structure_map_degree(primed.arity()), Grading::plain);
}

}  // namespace ainfty
