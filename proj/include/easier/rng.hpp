// Copyright 2026 The easier Authors
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

#ifndef EASIER_RNG_HPP
#define EASIER_RNG_HPP

#include <cmath>
#include <cstdint>
#include <vector>

namespace easier {

/// Deterministic 64-bit generator (splitmix64). The standard library's
/// distributions are implementation-defined, so every stochastic component
/// (init, shuffling, data synthesis, augmentation) draws from this instead;
/// identical seeds give identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; draws two uniforms per call so the
    /// stream position does not depend on call history.
    double gaussian() {
        double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Uniform integer in [0, n). Lemire multiply-shift; n must be > 0.
    std::size_t below(std::size_t n) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

/// Derives an independent child seed from a base seed and a salt, so that
/// per-epoch / per-layer / per-iteration streams never overlap.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
    Rng r(base ^ (salt * 0x9e3779b97f4a7c15ull + 0x7f4a7c15ull));
    r.next_u64();
    return r.next_u64();
}

}  // namespace easier

#endif  // EASIER_RNG_HPP
