#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace rumflow {

// Hard size cap shared by every component: alternatives are indexed 0..15 and
// menus live in a uint32_t bitmask, so nothing here ever allocates per subset
// beyond 2^16 rows.
inline constexpr int kMaxAlternatives = 16;

// A menu is a subset of the universe, stored as a bitmask over alternative
// indices. Bit i set means alternative i is offered.
class Menu {
 public:
  constexpr Menu() = default;
  constexpr explicit Menu(uint32_t bits) : bits_(bits) {}

  constexpr uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int x) const { return (bits_ >> x) & 1u; }
  constexpr bool subset_of(Menu other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr Menu with(int x) const { return Menu(bits_ | (1u << x)); }
  constexpr Menu without(int x) const { return Menu(bits_ & ~(1u << x)); }
  constexpr Menu intersect(Menu other) const { return Menu(bits_ & other.bits_); }

  constexpr bool operator==(const Menu&) const = default;

  // Iterates member indices in ascending order.
  class const_iterator {
   public:
    constexpr explicit const_iterator(uint32_t bits) : bits_(bits) {}
    constexpr int operator*() const { return std::countr_zero(bits_); }
    constexpr const_iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    constexpr bool operator!=(const const_iterator& o) const { return bits_ != o.bits_; }

   private:
    uint32_t bits_ = 0;
  };
  constexpr const_iterator begin() const { return const_iterator(bits_); }
  constexpr const_iterator end() const { return const_iterator(0); }

 private:
  uint32_t bits_ = 0;
};

// Canonical scan order used everywhere a deterministic sweep over menus is
// needed: larger menus first, ties by ascending bit pattern.
bool menu_canonical_less(Menu a, Menu b);

// All non-empty subsets of an n-element universe in canonical scan order.
std::vector<Menu> canonical_menus(int n);

// The fixed, ordered ground set of alternatives. Labels are unique non-empty
// strings; all numeric indices elsewhere refer to positions in this list.
class Universe {
 public:
  explicit Universe(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int x) const;
  // Returns -1 when the label is unknown.
  int find(const std::string& label) const;
  // Throws InputError when the label is unknown.
  int index_of(const std::string& label) const;

  Menu full_menu() const { return Menu((uint32_t{1} << size()) - 1); }
  bool contains_menu(Menu m) const { return m.subset_of(full_menu()); }

  bool operator==(const Universe& o) const { return labels_ == o.labels_; }

 private:
  std::vector<std::string> labels_;
};

// Renders a menu as "{a,b,c}" with labels in index order; "{}" when empty.
std::string format_menu(const Universe& u, Menu m);

}  // namespace rumflow
