#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace forge {

uint64_t mix64(uint64_t x);
uint64_t hash_str(std::string_view s);
uint64_t hash_combine(uint64_t a, uint64_t b);

// Counter-based deterministic stream. Draws are mix64(key ^ counter-derived
// state), so streams derived from distinct labels never share a sequence and
// draw order is independent of call-site history.
class Stream {
 public:
  explicit Stream(uint64_t key) : key_(key) {}

  uint64_t next();

  // Unbiased integer in [0, n), n >= 1.
  uint64_t below(uint64_t n);
  int range(int lo, int hi);  // inclusive bounds
  bool chance(double p);
  double unit();  // [0, 1)

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

  Stream fork(std::string_view label) const;
  Stream fork(uint64_t salt) const;

 private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

Stream seeded_stream(uint64_t parent_seed, std::string_view label);

// Seed for instance (task, level, index) under a master seed; order-independent.
uint64_t instance_seed(std::string_view task, int level, int index, uint64_t master_seed);

}  // namespace forge
