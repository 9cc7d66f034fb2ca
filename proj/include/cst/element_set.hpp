#ifndef CST_ELEMENT_SET_HPP_
#define CST_ELEMENT_SET_HPP_

#include <string>
#include <vector>

#include "cst/errors.hpp"

namespace cst {

// A subset of the elements {0, ..., n-1} of a finite semigroup, with dense
// membership semantics. The empty set and the full set are both representable.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe) : bits_(universe, false) {}
  ElementSet(int universe, std::initializer_list<int> members)
      : bits_(universe, false) {
    for (int x : members) insert(x);
  }

  static ElementSet full(int universe) {
    ElementSet s(universe);
    s.bits_.assign(universe, true);
    return s;
  }

  int universe() const { return static_cast<int>(bits_.size()); }

  bool contains(int x) const {
    return x >= 0 && x < universe() && bits_[x];
  }

  void insert(int x) {
    if (x < 0 || x >= universe()) throw BoundsError("element index out of range");
    bits_[x] = true;
  }

  void erase(int x) {
    if (x >= 0 && x < universe()) bits_[x] = false;
  }

  int size() const {
    int c = 0;
    for (bool b : bits_) c += b ? 1 : 0;
    return c;
  }

  bool empty() const { return size() == 0; }

  bool is_subset_of(const ElementSet& other) const {
    check_same_universe(other);
    for (int x = 0; x < universe(); ++x)
      if (bits_[x] && !other.bits_[x]) return false;
    return true;
  }

  ElementSet intersect(const ElementSet& other) const {
    check_same_universe(other);
    ElementSet r(universe());
    for (int x = 0; x < universe(); ++x) r.bits_[x] = bits_[x] && other.bits_[x];
    return r;
  }

  ElementSet unite(const ElementSet& other) const {
    check_same_universe(other);
    ElementSet r(universe());
    for (int x = 0; x < universe(); ++x) r.bits_[x] = bits_[x] || other.bits_[x];
    return r;
  }

  ElementSet complement() const {
    ElementSet r(universe());
    for (int x = 0; x < universe(); ++x) r.bits_[x] = !bits_[x];
    return r;
  }

  bool intersects(const ElementSet& other) const {
    check_same_universe(other);
    for (int x = 0; x < universe(); ++x)
      if (bits_[x] && other.bits_[x]) return true;
    return false;
  }

  std::vector<int> members() const {
    std::vector<int> m;
    for (int x = 0; x < universe(); ++x)
      if (bits_[x]) m.push_back(x);
    return m;
  }

  bool operator==(const ElementSet& other) const { return bits_ == other.bits_; }
  bool operator!=(const ElementSet& other) const { return bits_ != other.bits_; }

  // Lexicographic order on sorted member lists ({0} < {0,1} < {1}); keeps
  // ideal lists deterministic.
  bool operator<(const ElementSet& other) const {
    return members() < other.members();
  }

 private:
  void check_same_universe(const ElementSet& other) const {
    if (universe() != other.universe())
      throw PreconditionError("universe mismatch between element sets");
  }

  std::vector<bool> bits_;
};

}  // namespace cst

#endif  // CST_ELEMENT_SET_HPP_
