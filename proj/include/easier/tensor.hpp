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

#ifndef EASIER_TENSOR_HPP
#define EASIER_TENSOR_HPP

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "easier/error.hpp"

namespace easier {

/// Dense n-dimensional array over a floating-point scalar. The single value
/// carrier for inputs, activations, parameters and gradients. Row-major,
/// contiguous storage; data.size() always equals the product of the shape.
template <typename Scalar = double>
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<Scalar> data;

    Tensor() = default;

    explicit Tensor(std::vector<std::size_t> s) : shape(std::move(s)) {
        data.assign(numel_of(shape), Scalar(0));
    }

    Tensor(std::vector<std::size_t> s, std::vector<Scalar> d)
        : shape(std::move(s)), data(std::move(d)) {
        if (data.size() != numel_of(shape))
            throw ShapeError("tensor data length " + std::to_string(data.size()) +
                             " does not match shape product " + std::to_string(numel_of(shape)));
    }

    static std::size_t numel_of(const std::vector<std::size_t>& s) {
        std::size_t n = 1;
        for (std::size_t d : s) n *= d;
        return n;
    }

    std::size_t numel() const { return data.size(); }
    std::size_t rank() const { return shape.size(); }

    Scalar& operator[](std::size_t i) { return data[i]; }
    const Scalar& operator[](std::size_t i) const { return data[i]; }

    // 2-d indexing (rows, cols)
    Scalar& at2(std::size_t r, std::size_t c) { return data[r * shape[1] + c]; }
    const Scalar& at2(std::size_t r, std::size_t c) const { return data[r * shape[1] + c]; }

    // 4-d indexing (n, c, h, w)
    Scalar& at4(std::size_t n, std::size_t c, std::size_t h, std::size_t w) {
        return data[((n * shape[1] + c) * shape[2] + h) * shape[3] + w];
    }
    const Scalar& at4(std::size_t n, std::size_t c, std::size_t h, std::size_t w) const {
        return data[((n * shape[1] + c) * shape[2] + h) * shape[3] + w];
    }

    void fill(Scalar v) { std::fill(data.begin(), data.end(), v); }

    bool all_finite() const {
        for (Scalar v : data)
            if (!std::isfinite(static_cast<double>(v))) return false;
        return true;
    }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    static Tensor zeros_like(const Tensor& o) { return Tensor(o.shape); }
};

inline std::string shape_string(const std::vector<std::size_t>& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + ")";
}

}  // namespace easier

#endif  // EASIER_TENSOR_HPP
