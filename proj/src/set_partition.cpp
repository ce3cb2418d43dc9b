#include "btinv/set_partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace btinv {

namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxStrands) throw std::invalid_argument("size out of range: " + std::to_string(n));
}

}  // namespace

SetPartition::SetPartition(int n) {
  check_size(n);
  size_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) label_[i] = static_cast<std::uint8_t>(i);
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  SetPartition p(n);
  for (const auto& block : blocks) {
    for (std::size_t k = 1; k < block.size(); ++k) p = p.join_pair(block[0], block[k]);
  }
  return p;
}

SetPartition SetPartition::full(int n) {
  SetPartition p(n);
  for (int i = 0; i < n; ++i) p.label_[i] = 0;
  return p;
}

void SetPartition::normalize() {
  std::array<int, kMaxStrands> remap;
  remap.fill(-1);
  int next = 0;
  for (int i = 0; i < size_; ++i) {
    int& r = remap[label_[i]];
    if (r < 0) r = next++;
    label_[i] = static_cast<std::uint8_t>(r);
  }
}

bool SetPartition::is_singleton(int i) const {
  for (int j = 0; j < size_; ++j) {
    if (j != i && label_[j] == label_[i]) return false;
  }
  return true;
}

int SetPartition::num_blocks() const {
  int m = 0;
  for (int i = 0; i < size_; ++i) m = std::max(m, label_[i] + 1);
  return m;
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(num_blocks());
  for (int i = 0; i < size_; ++i) out[label_[i]].push_back(i);
  return out;
}

std::vector<int> SetPartition::block_members(int i) const {
  std::vector<int> out;
  for (int j = 0; j < size_; ++j) {
    if (j != i && label_[j] == label_[i]) out.push_back(j);
  }
  return out;
}

SetPartition SetPartition::join(const SetPartition& other) const {
  if (other.size_ != size_) throw std::invalid_argument("join of partitions of different sizes");
  // Union-find over block labels of *this, merged along other's blocks.
  std::array<int, kMaxStrands> parent;
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::array<int, kMaxStrands> first_in_other;
  first_in_other.fill(-1);
  for (int i = 0; i < size_; ++i) {
    int& f = first_in_other[other.label_[i]];
    if (f < 0) {
      f = i;
    } else {
      int x = find(label_[f]), y = find(label_[i]);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  SetPartition r = *this;
  for (int i = 0; i < size_; ++i) r.label_[i] = static_cast<std::uint8_t>(find(label_[i]));
  r.normalize();
  return r;
}

SetPartition SetPartition::join_pair(int i, int j) const {
  if (label_[i] == label_[j]) return *this;
  SetPartition r = *this;
  std::uint8_t from = std::max(label_[i], label_[j]);
  std::uint8_t to = std::min(label_[i], label_[j]);
  for (int k = 0; k < size_; ++k) {
    if (r.label_[k] == from) r.label_[k] = to;
  }
  r.normalize();
  return r;
}

SetPartition SetPartition::permuted(const Perm& w) const {
  SetPartition r = *this;
  for (int i = 0; i < size_; ++i) r.label_[w(i)] = label_[i];
  r.normalize();
  return r;
}

SetPartition SetPartition::isolate(int i) const {
  if (is_singleton(i)) return *this;
  SetPartition r = *this;
  r.label_[i] = static_cast<std::uint8_t>(kMaxStrands - 1);
  r.normalize();
  return r;
}

SetPartition SetPartition::extended(int new_size) const {
  check_size(new_size);
  SetPartition r = *this;
  for (int i = size_; i < new_size; ++i) r.label_[i] = static_cast<std::uint8_t>(kMaxStrands - 1 - (i - size_));
  r.size_ = static_cast<std::uint8_t>(new_size);
  r.normalize();
  return r;
}

SetPartition SetPartition::truncated() const {
  if (size_ == 0 || !is_singleton(size_ - 1)) throw std::logic_error("truncating a non-singleton element");
  SetPartition r = *this;
  r.label_[size_ - 1] = 0;
  r.size_ = static_cast<std::uint8_t>(size_ - 1);
  return r;
}

std::string SetPartition::render() const {
  std::ostringstream out;
  for (const auto& block : blocks()) {
    out << '{';
    for (std::size_t k = 0; k < block.size(); ++k) out << (k ? "," : "") << block[k] + 1;
    out << '}';
  }
  return out.str();
}

Perm::Perm(int n) {
  check_size(n);
  size_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) image_[i] = static_cast<std::uint8_t>(i);
}

Perm Perm::from_one_line(const std::vector<int>& images) {
  Perm p(static_cast<int>(images.size()));
  std::array<bool, kMaxStrands> seen{};
  for (std::size_t i = 0; i < images.size(); ++i) {
    int x = images[i];
    if (x < 0 || x >= p.size_ || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
    p.image_[i] = static_cast<std::uint8_t>(x);
  }
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < size_; ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

int Perm::length() const {
  int inversions = 0;
  for (int i = 0; i < size_; ++i) {
    for (int j = i + 1; j < size_; ++j) inversions += image_[i] > image_[j];
  }
  return inversions;
}

Perm Perm::inverse() const {
  Perm r(size_);
  for (int i = 0; i < size_; ++i) r.image_[image_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (rhs.size_ != size_) throw std::invalid_argument("composing permutations of different sizes");
  Perm r(size_);
  for (int i = 0; i < size_; ++i) r.image_[i] = image_[rhs.image_[i]];
  return r;
}

Perm Perm::times_simple(int i) const {
  Perm r = *this;
  std::swap(r.image_[i - 1], r.image_[i]);
  return r;
}

std::vector<int> Perm::reduced_word() const {
  std::vector<int> word;
  Perm w = *this;
  // Strip right descents: w = (w s_i) s_i with l(w s_i) = l(w) - 1.
  while (true) {
    int descent = 0;
    for (int i = 1; i < w.size_; ++i) {
      if (!w.ascends_at(i)) {
        descent = i;
        break;
      }
    }
    if (descent == 0) break;
    word.push_back(descent);
    w = w.times_simple(descent);
  }
  return {word.rbegin(), word.rend()};
}

Perm Perm::extended(int new_size) const {
  check_size(new_size);
  Perm r = *this;
  for (int i = size_; i < new_size; ++i) r.image_[i] = static_cast<std::uint8_t>(i);
  r.size_ = static_cast<std::uint8_t>(new_size);
  return r;
}

Perm Perm::truncated() const {
  if (size_ == 0 || image_[size_ - 1] != size_ - 1) throw std::logic_error("truncating a moved point");
  Perm r = *this;
  r.image_[size_ - 1] = 0;
  r.size_ = static_cast<std::uint8_t>(size_ - 1);
  return r;
}

int Perm::cycle_count() const {
  std::array<bool, kMaxStrands> seen{};
  int cycles = 0;
  for (int i = 0; i < size_; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = image_[j]) seen[j] = true;
  }
  return cycles;
}

std::string Perm::render() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < size_; ++i) out << (i ? " " : "") << image_[i] + 1;
  out << ']';
  return out.str();
}

std::uint64_t bell_number(int n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int k = 0; k < n; ++k) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

}  // namespace btinv

namespace {

template <typename T>
std::size_t hash_bytes(const T& bytes, int n) noexcept {
  std::size_t h = static_cast<std::size_t>(n) * 0x9e3779b97f4a7c15ULL;
  for (int i = 0; i < n; ++i) h = (h ^ bytes[i]) * 0x100000001b3ULL;
  return h;
}

}  // namespace

std::size_t std::hash<btinv::SetPartition>::operator()(const btinv::SetPartition& p) const noexcept {
  std::array<int, btinv::kMaxStrands> labels{};
  for (int i = 0; i < p.size(); ++i) labels[i] = p.block_of(i);
  return hash_bytes(labels, p.size());
}

std::size_t std::hash<btinv::Perm>::operator()(const btinv::Perm& p) const noexcept {
  std::array<int, btinv::kMaxStrands> images{};
  for (int i = 0; i < p.size(); ++i) images[i] = p(i);
  return hash_bytes(images, p.size());
}
