#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace dwfs {

// Dense index of an interned atom.
enum class Atom : std::uint32_t {};

constexpr std::uint32_t index(Atom a) noexcept { return static_cast<std::uint32_t>(a); }
constexpr Atom atom(std::uint32_t i) noexcept { return static_cast<Atom>(i); }

// Duplicate-free set of atoms kept as a sorted vector.  Iteration is in id
// order; comparison is lexicographic on the sorted ids.
class AtomSet {
public:
    using const_iterator = std::vector<Atom>::const_iterator;

    AtomSet() = default;
    AtomSet(std::initializer_list<Atom> atoms) : atoms_(atoms) { normalize(); }
    explicit AtomSet(std::vector<Atom> atoms) : atoms_(std::move(atoms)) { normalize(); }

    template <class It>
    AtomSet(It first, It last) : atoms_(first, last) {
        normalize();
    }

    static AtomSet single(Atom a) { return AtomSet{a}; }

    bool empty() const noexcept { return atoms_.empty(); }
    std::size_t size() const noexcept { return atoms_.size(); }
    const_iterator begin() const noexcept { return atoms_.begin(); }
    const_iterator end() const noexcept { return atoms_.end(); }
    Atom front() const { return atoms_.front(); }
    std::span<const Atom> atoms() const noexcept { return atoms_; }

    bool contains(Atom a) const { return std::binary_search(atoms_.begin(), atoms_.end(), a); }
    bool subset_of(const AtomSet& other) const {
        return std::includes(other.atoms_.begin(), other.atoms_.end(), atoms_.begin(), atoms_.end());
    }
    bool proper_subset_of(const AtomSet& other) const { return size() < other.size() && subset_of(other); }
    bool intersects(const AtomSet& other) const {
        auto i = atoms_.begin();
        auto j = other.atoms_.begin();
        while (i != atoms_.end() && j != other.atoms_.end()) {
            if (*i < *j) {
                ++i;
            }
            else if (*j < *i) {
                ++j;
            }
            else {
                return true;
            }
        }
        return false;
    }

    void insert(Atom a) {
        auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
        if (it == atoms_.end() || *it != a) {
            atoms_.insert(it, a);
        }
    }
    void erase(Atom a) {
        auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
        if (it != atoms_.end() && *it == a) {
            atoms_.erase(it);
        }
    }

    AtomSet operator|(const AtomSet& o) const {
        AtomSet r;
        r.atoms_.reserve(size() + o.size());
        std::set_union(begin(), end(), o.begin(), o.end(), std::back_inserter(r.atoms_));
        return r;
    }
    AtomSet operator&(const AtomSet& o) const {
        AtomSet r;
        std::set_intersection(begin(), end(), o.begin(), o.end(), std::back_inserter(r.atoms_));
        return r;
    }
    AtomSet operator-(const AtomSet& o) const {
        AtomSet r;
        std::set_difference(begin(), end(), o.begin(), o.end(), std::back_inserter(r.atoms_));
        return r;
    }
    AtomSet without(Atom a) const {
        AtomSet r = *this;
        r.erase(a);
        return r;
    }
    AtomSet& operator|=(const AtomSet& o) { return *this = *this | o; }
    AtomSet& operator-=(const AtomSet& o) { return *this = *this - o; }

    friend bool operator==(const AtomSet&, const AtomSet&) = default;
    friend auto operator<=>(const AtomSet&, const AtomSet&) = default;

private:
    void normalize() {
        std::sort(atoms_.begin(), atoms_.end());
        atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
    }

    std::vector<Atom> atoms_;
};

// Every subset of `universe`, by increasing cardinality (then by mask).
// Requires universe.size() < 64.
std::vector<AtomSet> subsets_by_size(const AtomSet& universe);

} // namespace dwfs
