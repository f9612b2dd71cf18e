#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

namespace clarcube {

/// Fixed-universe bitset over edge indices.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }

  void insert(int e) { words_[word(e)] |= bit(e); }
  void erase(int e) { words_[word(e)] &= ~bit(e); }
  bool contains(int e) const { return (words_[word(e)] & bit(e)) != 0; }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept { return size() == 0; }

  EdgeSet& operator^=(const EdgeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  EdgeSet& operator&=(const EdgeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  EdgeSet& operator|=(const EdgeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  EdgeSet& operator-=(const EdgeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }

  bool is_subset_of(const EdgeSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const EdgeSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (auto w = words_[i]; w; w &= w - 1)
        out.push_back(static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
    }
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ULL;
    return h;
  }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet& a, const EdgeSet& b) { return a.words_ <=> b.words_; }

 private:
  static std::size_t word(int e) { return static_cast<std::size_t>(e) / 64; }
  static std::uint64_t bit(int e) { return std::uint64_t{1} << (static_cast<unsigned>(e) % 64); }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const noexcept { return s.hash(); }
};

}  // namespace clarcube
