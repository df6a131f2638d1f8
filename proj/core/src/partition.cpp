#include "bss/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace bss {

namespace {

constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

}  // namespace

Partition::Partition(std::size_t n, std::vector<std::vector<std::size_t>> blocks)
    : blocks_(std::move(blocks)), block_of_(n, kUnassigned) {
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("partition block is empty");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    for (auto i : blocks_[k]) {
      if (i >= n) throw std::invalid_argument("partition element out of range");
      if (block_of_[i] != kUnassigned)
        throw std::invalid_argument("partition blocks overlap");
      block_of_[i] = k;
    }
  }
  if (std::find(block_of_.begin(), block_of_.end(), kUnassigned) != block_of_.end())
    throw std::invalid_argument("partition blocks do not cover every element");
}

Partition Partition::from_keys(std::span<const std::size_t> keys) {
  std::map<std::size_t, std::size_t> slot;
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto [it, inserted] = slot.emplace(keys[i], blocks.size());
    if (inserted) blocks.emplace_back();
    blocks[it->second].push_back(i);
  }
  return Partition(keys.size(), std::move(blocks));
}

Partition Partition::universal(std::size_t n) {
  std::vector<std::size_t> keys(n, 0);
  return from_keys(keys);
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::size_t> keys(n);
  for (std::size_t i = 0; i < n; ++i) keys[i] = i;
  return from_keys(keys);
}

bool Partition::refines(const Partition& coarser) const {
  if (element_count() != coarser.element_count()) return false;
  for (const auto& b : blocks_) {
    const auto target = coarser.block_of(b.front());
    for (auto i : b)
      if (coarser.block_of(i) != target) return false;
  }
  return true;
}

Partition Partition::meet(const Partition& other) const {
  if (element_count() != other.element_count())
    throw std::invalid_argument("meet of partitions over different sets");
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;
  std::vector<std::size_t> keys(element_count());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto [it, inserted] = slot.emplace(std::pair{block_of_[i], other.block_of_[i]}, slot.size());
    keys[i] = it->second;
  }
  return from_keys(keys);
}

std::string Partition::to_string(const Universe& u) const {
  std::string out;
  for (const auto& b : blocks_) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (k) out += ',';
      out += u[b[k]];
    }
    out += '}';
  }
  return out;
}

}  // namespace bss
