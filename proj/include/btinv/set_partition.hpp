// Set partitions of {0..n-1} and permutations in one-line notation.
//
// Both are small fixed-capacity value types: they are used as map keys in
// the algebra engine, where n rarely exceeds six.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace btinv {

inline constexpr int kMaxStrands = 16;

class Perm;

/// Blocks stored as element -> block id, ids normalized by least element
/// (restricted growth string), so equal partitions compare equal.
class SetPartition {
 public:
  SetPartition() = default;
  /// The discrete partition (all singletons) of {0..n-1}.
  explicit SetPartition(int n);
  static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  static SetPartition full(int n);

  int size() const { return size_; }
  int block_of(int i) const { return label_[i]; }
  bool same_block(int i, int j) const { return label_[i] == label_[j]; }
  bool is_singleton(int i) const;
  int num_blocks() const;
  bool is_discrete() const { return num_blocks() == size_; }
  std::vector<std::vector<int>> blocks() const;
  /// Other members of i's block, ascending.
  std::vector<int> block_members(int i) const;

  /// Partition-lattice join.
  SetPartition join(const SetPartition& other) const;
  SetPartition join_pair(int i, int j) const;
  /// Image under w: blocks {w(x) : x in B}.
  SetPartition permuted(const Perm& w) const;
  /// Removes element i from its block (it becomes a singleton).
  SetPartition isolate(int i) const;
  /// Adds a new singleton element n.
  SetPartition extended(int new_size) const;
  /// Drops the last element, which must be a singleton.
  SetPartition truncated() const;

  /// "{1,3}{2}" with 1-based elements; singletons included.
  std::string render() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  void normalize();
  std::uint8_t size_ = 0;
  std::array<std::uint8_t, kMaxStrands> label_{};
};

/// Permutation of {0..n-1}; composition is function composition,
/// (x * y)(k) = x(y(k)).  The simple transposition s_i (1-based i) swaps
/// i-1 and i, and right multiplication by s_i swaps the entries at
/// positions i-1, i of the one-line notation.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);
  static Perm from_one_line(const std::vector<int>& images);

  int size() const { return size_; }
  int operator()(int k) const { return image_[k]; }
  bool is_identity() const;
  int length() const;
  Perm inverse() const;
  Perm operator*(const Perm& rhs) const;
  /// this * s_i
  Perm times_simple(int i) const;
  /// true iff l(this * s_i) = l(this) + 1, i.e. w(i-1) < w(i).
  bool ascends_at(int i) const { return image_[i - 1] < image_[i]; }
  /// Reduced word (1-based indices i_1..i_k with this = s_i1 * ... * s_ik).
  std::vector<int> reduced_word() const;
  Perm extended(int new_size) const;
  /// Requires w(n-1) = n-1.
  Perm truncated() const;
  /// Number of cycles.
  int cycle_count() const;

  std::string render() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::uint8_t size_ = 0;
  std::array<std::uint8_t, kMaxStrands> image_{};
};

/// Bell number B(n).
std::uint64_t bell_number(int n);
std::uint64_t factorial(int n);

}  // namespace btinv

template <>
struct std::hash<btinv::SetPartition> {
  std::size_t operator()(const btinv::SetPartition& p) const noexcept;
};

template <>
struct std::hash<btinv::Perm> {
  std::size_t operator()(const btinv::Perm& p) const noexcept;
};
