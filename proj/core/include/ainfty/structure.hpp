#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ainfty/multimap.hpp"

namespace ainfty {

/// The maps of one family for arities 1..max_arity, all of the same
/// grading. Arities above max_arity are treated as zero, so a MapFamily is
/// also the natural representation of a truncated structure.
class MapFamily {
public:
    MapFamily(SpacePtr space, Grading grading, std::vector<MultiMap> maps);

    const SpacePtr& space() const noexcept { return space_; }
    Grading grading() const noexcept { return grading_; }
    std::size_t max_arity() const noexcept { return maps_.size(); }

    /// nullptr when k is 0 or above max_arity().
    const MultiMap* at(std::size_t k) const noexcept {
        return k >= 1 && k <= maps_.size() ? &maps_[k - 1] : nullptr;
    }

private:
    SpacePtr space_;
    Grading grading_;
    std::vector<MultiMap> maps_;
};

/// A family {m_k}, either a finite table (arities not listed are zero) or a
/// rule producing m_k for any k. `primed()` records whether the family lives
/// on V (degree 2-k maps) or on the desuspension (degree 1 maps).
class AStructure {
public:
    using Generator = std::function<MultiMap(std::size_t arity)>;

    /// Throws InputError on two maps of one arity, a foreign space, or a map
    /// whose grading/degree does not fit the family.
    static AStructure finite(SpacePtr space, std::vector<MultiMap> maps, std::string name,
                             bool primed = false);
    static AStructure generated(SpacePtr space, Generator generator, std::string name,
                                bool primed = false);

    const SpacePtr& space() const noexcept { return space_; }
    const std::string& name() const noexcept { return name_; }
    bool primed() const noexcept { return primed_; }
    bool is_finite() const noexcept { return !generator_; }

    /// Largest arity with a nonzero finite map; nullopt for generators.
    std::optional<std::size_t> max_arity() const;

    /// The arity-k map (an empty table when absent). Generated maps are
    /// checked against the family's degree invariant.
    MultiMap map(std::size_t k) const;

    /// Stored maps for arities 1..n, as given.
    MapFamily family(std::size_t n) const;
    /// Maps for arities 1..n, converted to the primed side if necessary.
    MapFamily primed_family(std::size_t n) const;
    /// Maps for arities 1..n, converted to the unprimed side if necessary.
    MapFamily unprimed_family(std::size_t n) const;

    /// Copy with one table entry overridden (a zero output removes it).
    AStructure with_entry(std::size_t k, Word input, Vector output, std::string name) const;

    /// Finite copy keeping arities 1..n.
    AStructure truncated(std::size_t n) const;

    /// Finite maps by arity. Empty for generated structures.
    const std::map<std::size_t, MultiMap>& finite_maps() const noexcept { return finite_; }

private:
    AStructure(SpacePtr space, std::string name, bool primed)
        : space_(std::move(space)), name_(std::move(name)), primed_(primed) {}

    MultiMap empty_map(std::size_t k) const;
    void check_member(const MultiMap& m) const;

    SpacePtr space_;
    std::string name_;
    bool primed_;
    std::map<std::size_t, MultiMap> finite_;
    Generator generator_;
};

}  // namespace ainfty
