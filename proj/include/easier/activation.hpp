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

#ifndef EASIER_ACTIVATION_HPP
#define EASIER_ACTIVATION_HPP

#include <cmath>
#include <string>

#include "easier/error.hpp"
#include "easier/tensor.hpp"

namespace easier {

/// The activation family the depth-reduction loop operates over. `none`
/// means the layer has no activation at all (e.g. the output layer);
/// `identity` is the explicit linear replacement installed when a layer is
/// linearized. The two are functionally equal and both are transparent to
/// folding, but they are kept distinct so a checkpoint records which layers
/// were linearized.
enum class ActKind { none, identity, relu, leakyrelu, prelu, gelu, silu };

/// Activation attached to a layer. `slope` is the fixed LeakyReLU slope;
/// the PReLU slope is a trainable per-layer parameter held by the network,
/// initialized to 0.25.
struct ActivationSpec {
    ActKind kind = ActKind::none;
    double slope = 0.01;  // leakyrelu only; must be in (0, 1)

    bool is_rectifier() const {
        return kind == ActKind::relu || kind == ActKind::leakyrelu || kind == ActKind::prelu ||
               kind == ActKind::gelu || kind == ActKind::silu;
    }
    bool is_transparent() const { return kind == ActKind::none || kind == ActKind::identity; }
};

inline std::string act_name(ActKind k) {
    switch (k) {
        case ActKind::none: return "none";
        case ActKind::identity: return "identity";
        case ActKind::relu: return "relu";
        case ActKind::leakyrelu: return "leakyrelu";
        case ActKind::prelu: return "prelu";
        case ActKind::gelu: return "gelu";
        case ActKind::silu: return "silu";
    }
    return "none";
}

inline ActKind act_from_name(const std::string& s) {
    if (s == "none") return ActKind::none;
    if (s == "identity") return ActKind::identity;
    if (s == "relu") return ActKind::relu;
    if (s == "leakyrelu") return ActKind::leakyrelu;
    if (s == "prelu") return ActKind::prelu;
    if (s == "gelu") return ActKind::gelu;
    if (s == "silu") return ActKind::silu;
    throw ConfigError("unknown activation name: '" + s + "'");
}

namespace detail {

// 1/sqrt(2) and 1/sqrt(2*pi)
inline constexpr double kInvSqrt2 = 0.70710678118654752440;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;

}  // namespace detail

/// Scalar activation. `slope` is the LeakyReLU constant or the current
/// PReLU parameter, ignored by the other kinds. GELU uses the exact
/// erf-based form, not the tanh approximation.
template <typename Scalar>
inline Scalar act_value(ActKind kind, Scalar slope, Scalar z) {
    switch (kind) {
        case ActKind::none:
        case ActKind::identity:
            return z;
        case ActKind::relu:
            return z > Scalar(0) ? z : Scalar(0);
        case ActKind::leakyrelu:
        case ActKind::prelu:
            return z > Scalar(0) ? z : slope * z;
        case ActKind::gelu:
            return Scalar(0.5) * z *
                   (Scalar(1) + Scalar(std::erf(static_cast<double>(z) * detail::kInvSqrt2)));
        case ActKind::silu: {
            double zd = static_cast<double>(z);
            return Scalar(zd / (1.0 + std::exp(-zd)));
        }
    }
    return z;
}

/// d(act)/dz. The kink of the piecewise kinds is resolved as the negative
/// branch at z == 0, matching act_value's `z > 0` test.
template <typename Scalar>
inline Scalar act_grad(ActKind kind, Scalar slope, Scalar z) {
    switch (kind) {
        case ActKind::none:
        case ActKind::identity:
            return Scalar(1);
        case ActKind::relu:
            return z > Scalar(0) ? Scalar(1) : Scalar(0);
        case ActKind::leakyrelu:
        case ActKind::prelu:
            return z > Scalar(0) ? Scalar(1) : slope;
        case ActKind::gelu: {
            double zd = static_cast<double>(z);
            double phi = 0.5 * (1.0 + std::erf(zd * detail::kInvSqrt2));
            double pdf = detail::kInvSqrt2Pi * std::exp(-0.5 * zd * zd);
            return Scalar(phi + zd * pdf);
        }
        case ActKind::silu: {
            double zd = static_cast<double>(z);
            double s = 1.0 / (1.0 + std::exp(-zd));
            return Scalar(s * (1.0 + zd * (1.0 - s)));
        }
    }
    return Scalar(1);
}

/// Elementwise activation over a tensor.
template <typename Scalar>
Tensor<Scalar> act_apply(const ActivationSpec& spec, Scalar prelu_slope, const Tensor<Scalar>& z) {
    Scalar slope = spec.kind == ActKind::prelu ? prelu_slope : Scalar(spec.slope);
    Tensor<Scalar> y = z;
    for (Scalar& v : y.data) v = act_value(spec.kind, slope, v);
    return y;
}

/// Backward through the activation: dz = upstream * act'(z). For PReLU also
/// accumulates d(loss)/d(slope) = sum over z <= 0 of upstream * z.
template <typename Scalar>
Tensor<Scalar> act_backward(const ActivationSpec& spec, Scalar prelu_slope,
                            const Tensor<Scalar>& z, const Tensor<Scalar>& upstream,
                            Scalar* dslope = nullptr) {
    if (!z.same_shape(upstream))
        throw ShapeError("activation backward: z shape " + shape_string(z.shape) +
                         " != upstream shape " + shape_string(upstream.shape));
    Scalar slope = spec.kind == ActKind::prelu ? prelu_slope : Scalar(spec.slope);
    Tensor<Scalar> dz = Tensor<Scalar>::zeros_like(z);
    Scalar ds(0);
    for (std::size_t i = 0; i < z.numel(); ++i) {
        dz[i] = upstream[i] * act_grad(spec.kind, slope, z[i]);
        if (spec.kind == ActKind::prelu && !(z[i] > Scalar(0))) ds += upstream[i] * z[i];
    }
    if (dslope) *dslope = spec.kind == ActKind::prelu ? ds : Scalar(0);
    return dz;
}

}  // namespace easier

#endif  // EASIER_ACTIVATION_HPP
