#include "ainfty/structure.hpp"

#include <string>

#include "ainfty/errors.hpp"

namespace ainfty {

MapFamily::MapFamily(SpacePtr space, Grading grading, std::vector<MultiMap> maps)
    : space_(std::move(space)), grading_(grading), maps_(std::move(maps)) {
    for (std::size_t i = 0; i < maps_.size(); ++i) {
        const auto& m = maps_[i];
        if (m.arity() != i + 1 || m.grading() != grading_ || !same_space(m.space(), space_)) {
            throw InputError("MapFamily: map at slot " + std::to_string(i + 1) + " does not fit the family");
        }
    }
}

AStructure AStructure::finite(SpacePtr space, std::vector<MultiMap> maps, std::string name, bool primed) {
    AStructure s(std::move(space), std::move(name), primed);
    for (auto& m : maps) {
        s.check_member(m);
        const auto k = m.arity();
        if (!s.finite_.emplace(k, std::move(m)).second) {
            throw InputError("AStructure: two maps of arity " + std::to_string(k));
        }
    }
    return s;
}

AStructure AStructure::generated(SpacePtr space, Generator generator, std::string name, bool primed) {
    if (!generator) throw InputError("AStructure: empty generator");
    AStructure s(std::move(space), std::move(name), primed);
    s.generator_ = std::move(generator);
    return s;
}

void AStructure::check_member(const MultiMap& m) const {
    if (!same_space(m.space(), space_)) throw InputError("AStructure: map over a foreign space");
    const Grading expected_grading = primed_ ? Grading::desuspended : Grading::plain;
    const int expected_degree = primed_ ? primed_map_degree : structure_map_degree(m.arity());
    if (m.grading() != expected_grading || m.degree() != expected_degree) {
        throw InputError("AStructure: arity-" + std::to_string(m.arity()) + " map has degree " +
                         std::to_string(m.degree()) + ", expected " + std::to_string(expected_degree));
    }
}

MultiMap AStructure::empty_map(std::size_t k) const {
    if (primed_) return MultiMap(space_, k, primed_map_degree, Grading::desuspended);
    return MultiMap(space_, k, structure_map_degree(k), Grading::plain);
}

std::optional<std::size_t> AStructure::max_arity() const {
    if (generator_) return std::nullopt;
    std::size_t top = 0;
    for (const auto& [k, m] : finite_) {
        if (!m.is_zero()) top = k;
    }
    return top;
}

MultiMap AStructure::map(std::size_t k) const {
    if (k < 1) throw InputError("AStructure::map: arity must be >= 1");
    if (generator_) {
        MultiMap m = generator_(k);
        if (m.arity() != k) throw InputError("AStructure: generator returned the wrong arity");
        check_member(m);
        return m;
    }
    auto it = finite_.find(k);
    return it == finite_.end() ? empty_map(k) : it->second;
}

MapFamily AStructure::family(std::size_t n) const {
    std::vector<MultiMap> maps;
    maps.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) maps.push_back(map(k));
    return MapFamily(space_, primed_ ? Grading::desuspended : Grading::plain, std::move(maps));
}

MapFamily AStructure::primed_family(std::size_t n) const {
    if (primed_) return family(n);
    std::vector<MultiMap> maps;
    maps.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) maps.push_back(prime(map(k)));
    return MapFamily(space_, Grading::desuspended, std::move(maps));
}

MapFamily AStructure::unprimed_family(std::size_t n) const {
    if (!primed_) return family(n);
    std::vector<MultiMap> maps;
    maps.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) maps.push_back(unprime(map(k)));
    return MapFamily(space_, Grading::plain, std::move(maps));
}

AStructure AStructure::with_entry(std::size_t k, Word input, Vector output, std::string name) const {
    if (input.arity() != k) throw InputError("with_entry: word length does not match arity");
    AStructure out = *this;
    out.name_ = std::move(name);
    if (generator_) {
        out.generator_ = [base = generator_, k, input = std::move(input),
                          output = std::move(output)](std::size_t arity) {
            MultiMap m = base(arity);
            if (arity == k) m.set(input, output);
            return m;
        };
        return out;
    }
    auto it = out.finite_.find(k);
    if (it == out.finite_.end()) it = out.finite_.emplace(k, empty_map(k)).first;
    it->second.set(std::move(input), std::move(output));
    return out;
}

AStructure AStructure::truncated(std::size_t n) const {
    std::vector<MultiMap> maps;
    for (std::size_t k = 1; k <= n; ++k) {
        MultiMap m = map(k);
        if (!m.is_zero()) maps.push_back(std::move(m));
    }
    return finite(space_, std::move(maps), name_, primed_);
}

}  // namespace ainfty
