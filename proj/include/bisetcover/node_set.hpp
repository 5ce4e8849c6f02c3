#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bisetcover {

inline constexpr int kMaxNodes = 64;

// A subset of {0, ..., 63}.
class NodeSet {
 public:
  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint64_t bits) : bits_(bits) {}
  NodeSet(std::initializer_list<int> nodes) {
    for (int v : nodes) insert(v);
  }

  static NodeSet from_vector(const std::vector<int>& nodes) {
    NodeSet s;
    for (int v : nodes) s.insert(v);
    return s;
  }
  static constexpr NodeSet full(int n) {
    return NodeSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr NodeSet single(int v) { return NodeSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(NodeSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(NodeSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return 63 - std::countl_zero(bits_); }

  void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr NodeSet complement(int n) const { return NodeSet(~bits_ & full(n).bits_); }

  friend constexpr NodeSet operator|(NodeSet a, NodeSet b) { return NodeSet(a.bits_ | b.bits_); }
  friend constexpr NodeSet operator&(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & b.bits_); }
  // Set difference.
  friend constexpr NodeSet operator-(NodeSet a, NodeSet b) { return NodeSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(NodeSet a, NodeSet b) = default;

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

// Lexicographic comparison of the sorted element lists.
bool lex_less(NodeSet a, NodeSet b);

}  // namespace bisetcover
