#include "logitlab/profile_space.hpp"

#include <limits>

namespace logitlab {

ProfileSpace::ProfileSpace(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw InputError("a game needs at least one player");
  for (int s : sizes_) {
    if (s < 1) throw InputError("every player needs at least one strategy");
  }
  const int n = players();
  strides_.assign(std::size_t(n), 1);
  for (int i = n - 2; i >= 0; --i) {
    std::uint64_t below = strides_[std::size_t(i + 1)];
    std::uint64_t sz = std::uint64_t(sizes_[std::size_t(i + 1)]);
    if (below > std::numeric_limits<std::uint64_t>::max() / sz) {
      enumerable_ = false;
      break;
    }
    strides_[std::size_t(i)] = below * sz;
  }
  if (enumerable_) {
    std::uint64_t s0 = strides_[0];
    std::uint64_t sz0 = std::uint64_t(sizes_[0]);
    if (s0 > std::numeric_limits<std::uint64_t>::max() / sz0) {
      enumerable_ = false;
    } else {
      count_ = s0 * sz0;
    }
  }
}

std::uint64_t ProfileSpace::count() const {
  if (!enumerable_) {
    throw CapExceeded("profile count does not fit in 64 bits");
  }
  return count_;
}

Profile ProfileSpace::decode(std::uint64_t index) const {
  Profile p(std::size_t(players()), 0);
  for (int i = 0; i < players(); ++i) p[std::size_t(i)] = digit(index, i);
  return p;
}

std::uint64_t ProfileSpace::encode(std::span<const int> profile) const {
  validate(profile);
  std::uint64_t index = 0;
  for (int i = 0; i < players(); ++i) {
    index += std::uint64_t(profile[std::size_t(i)]) * strides_[std::size_t(i)];
  }
  return index;
}

bool ProfileSpace::next(Profile& p) const {
  for (int i = players() - 1; i >= 0; --i) {
    if (++p[std::size_t(i)] < sizes_[std::size_t(i)]) return true;
    p[std::size_t(i)] = 0;
  }
  return false;
}

void ProfileSpace::require_within(std::uint64_t cap, const std::string& what) const {
  if (!enumerable_ || count_ > cap) {
    throw CapExceeded(what + ": profile space exceeds budget of " +
                      std::to_string(cap) + " states");
  }
}

void ProfileSpace::validate(std::span<const int> profile) const {
  if (int(profile.size()) != players()) {
    throw InputError("profile length does not match player count");
  }
  for (int i = 0; i < players(); ++i) {
    int s = profile[std::size_t(i)];
    if (s < 0 || s >= sizes_[std::size_t(i)]) {
      throw InputError("strategy index out of range for player " + std::to_string(i));
    }
  }
}

}  // namespace logitlab
