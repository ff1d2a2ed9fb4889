#ifndef LOGITLAB_PROFILE_SPACE_HPP
#define LOGITLAB_PROFILE_SPACE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "logitlab/errors.hpp"

namespace logitlab {

// A strategy profile: one strategy index per player. Index s of player i
// ranges over 0..sizes[i]-1; for binary games, index 0 is the "-1" strategy
// and index 1 is the "+1" strategy (project-wide convention).
using Profile = std::vector<int>;

// The product space of strategy profiles, with mixed-radix flat indexing.
// Player n-1 is the fastest-varying digit: index = sum_i x_i * stride_i,
// stride_{n-1} = 1. Enumeration-free operations (per-player digit reads,
// unilateral replacement) work directly on flat indices.
class ProfileSpace {
 public:
  explicit ProfileSpace(std::vector<int> sizes);

  int players() const { return int(sizes_.size()); }
  int size(int player) const { return sizes_[std::size_t(player)]; }
  const std::vector<int>& sizes() const { return sizes_; }

  // True when the profile count fits in 64 bits; huge spaces stay usable
  // for simulation but refuse table-building operations.
  bool enumerable() const { return enumerable_; }
  std::uint64_t count() const;

  std::uint64_t stride(int player) const { return strides_[std::size_t(player)]; }
  int digit(std::uint64_t index, int player) const {
    return int((index / strides_[std::size_t(player)]) % std::uint64_t(sizes_[std::size_t(player)]));
  }

  Profile decode(std::uint64_t index) const;
  std::uint64_t encode(std::span<const int> profile) const;

  // Flat index of `index` with player's digit replaced by `strategy`.
  std::uint64_t with(std::uint64_t index, int player, int strategy) const {
    std::uint64_t s = strides_[std::size_t(player)];
    return index + (std::uint64_t(strategy) - std::uint64_t(digit(index, player))) * s;
  }

  // Advance a profile in flat-index order; returns false after the last one.
  bool next(Profile& p) const;

  // Throws CapExceeded unless count() <= cap (and the space is enumerable).
  void require_within(std::uint64_t cap, const std::string& what) const;

  void validate(std::span<const int> profile) const;

  bool operator==(const ProfileSpace& other) const { return sizes_ == other.sizes_; }

 private:
  std::vector<int> sizes_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t count_ = 1;
  bool enumerable_ = true;
};

}  // namespace logitlab

#endif  // LOGITLAB_PROFILE_SPACE_HPP
