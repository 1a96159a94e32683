#include "taskforge/rng.hpp"

namespace forge {

uint64_t mix64(uint64_t x) {
  // splitmix64 finalizer
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t hash_str(std::string_view s) {
  // FNV-1a, then one mixing round to spread short labels
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix64(h);
}

uint64_t hash_combine(uint64_t a, uint64_t b) {
  return mix64(a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

uint64_t Stream::next() {
  return mix64(key_ + 0x632be59bd9b4e019ULL * ++counter_);
}

uint64_t Stream::below(uint64_t n) {
  if (n <= 1) return 0;
  uint64_t bound = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = next();
  } while (x >= bound);
  return x % n;
}

int Stream::range(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
}

bool Stream::chance(double p) {
  return unit() < p;
}

double Stream::unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Stream Stream::fork(std::string_view label) const {
  return Stream(hash_combine(key_, hash_str(label)));
}

Stream Stream::fork(uint64_t salt) const {
  return Stream(hash_combine(key_, mix64(salt)));
}

Stream seeded_stream(uint64_t parent_seed, std::string_view label) {
  return Stream(hash_combine(mix64(parent_seed), hash_str(label)));
}

uint64_t instance_seed(std::string_view task, int level, int index, uint64_t master_seed) {
  uint64_t h = hash_str(task);
  h = hash_combine(h, static_cast<uint64_t>(level));
  h = hash_combine(h, static_cast<uint64_t>(index));
  return hash_combine(h, mix64(master_seed));
}

}  // namespace forge
