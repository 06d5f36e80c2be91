// Copyright 2026 The Proofsmith Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROOFSMITH_UTIL_HPP_
#define PROOFSMITH_UTIL_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace proofsmith {

// 64-bit FNV-1a. Stable across platforms; used for file digests and the
// mock embedder's feature hashing.
constexpr std::uint64_t fnv1a64(std::string_view data,
                                std::uint64_t seed = 0xcbf29ce484222325ULL) {
  std::uint64_t h = seed;
  for (char c : data) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value);

// Reads a whole file; throws IoError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);
std::string file_digest(const std::string& path);

std::vector<std::string> split(std::string_view s, char sep);
std::string_view trim(std::string_view s);

// Seeded generator with platform-independent draws. std::mt19937_64 output
// is fixed by the standard; the distributions in <random> are not, so the
// bounded draw and the shuffle are implemented here.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

  // k distinct indices from [0, n), in draw order.
  std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k);

 private:
  std::mt19937_64 engine_;
};

// Mixes a base seed with a stream index (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace proofsmith

#endif  // PROOFSMITH_UTIL_HPP_
