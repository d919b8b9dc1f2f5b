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

#ifndef EASIER_LAYER_HPP
#define EASIER_LAYER_HPP

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "easier/activation.hpp"
#include "easier/error.hpp"

namespace easier {

enum class LayerKind { dense, conv2d, batchnorm, pool, flatten, residual_begin, residual_end };

enum class PoolKind { max, avg };

inline std::string layer_kind_name(LayerKind k) {
    switch (k) {
        case LayerKind::dense: return "dense";
        case LayerKind::conv2d: return "conv";
        case LayerKind::batchnorm: return "batchnorm";
        case LayerKind::pool: return "pool";
        case LayerKind::flatten: return "flatten";
        case LayerKind::residual_begin: return "resbegin";
        case LayerKind::residual_end: return "resend";
    }
    return "?";
}

/// Architecture IR: one entry per layer of a sequential network with
/// optional residual skip edges (resbegin saves its input, the matching
/// resend adds it back). `in` / `in_ch` are resolved at build time from the
/// preceding shape; a nonzero value acts as an assertion.
struct LayerSpec {
    LayerKind kind = LayerKind::dense;
    std::string id;              // unique within a network; auto-assigned if empty
    ActivationSpec activation;   // applied after the layer op (after the add, for resend)

    // dense
    std::size_t in = 0, out = 0;
    bool bias = true;
    // conv2d
    std::size_t in_ch = 0, out_ch = 0, kernel = 0, stride = 1, padding = 0;
    // batchnorm
    std::size_t channels = 0;
    // pool
    PoolKind pool = PoolKind::max;
    std::size_t pool_size = 2;
    // residual pairing
    std::string tag;

    static LayerSpec dense_layer(std::size_t out, ActivationSpec act = {}, bool bias = true,
                                 std::string id = "") {
        LayerSpec s;
        s.kind = LayerKind::dense;
        s.out = out;
        s.activation = act;
        s.bias = bias;
        s.id = std::move(id);
        return s;
    }
    static LayerSpec conv_layer(std::size_t out_ch, std::size_t kernel, std::size_t stride = 1,
                                std::size_t padding = 0, ActivationSpec act = {}, bool bias = true,
                                std::string id = "") {
        LayerSpec s;
        s.kind = LayerKind::conv2d;
        s.out_ch = out_ch;
        s.kernel = kernel;
        s.stride = stride;
        s.padding = padding;
        s.activation = act;
        s.bias = bias;
        s.id = std::move(id);
        return s;
    }
    static LayerSpec batchnorm_layer(ActivationSpec act = {}, std::string id = "") {
        LayerSpec s;
        s.kind = LayerKind::batchnorm;
        s.activation = act;
        s.id = std::move(id);
        return s;
    }
    static LayerSpec pool_layer(PoolKind p, std::size_t size, std::string id = "") {
        LayerSpec s;
        s.kind = LayerKind::pool;
        s.pool = p;
        s.pool_size = size;
        s.id = std::move(id);
        return s;
    }
    static LayerSpec flatten_layer(std::string id = "") {
        LayerSpec s;
        s.kind = LayerKind::flatten;
        s.id = std::move(id);
        return s;
    }
    static LayerSpec residual_begin_layer(std::string tag, std::string id = "") {
        LayerSpec s;
        s.kind = LayerKind::residual_begin;
        s.tag = std::move(tag);
        s.id = std::move(id);
        return s;
    }
    static LayerSpec residual_end_layer(std::string tag, ActivationSpec act = {},
                                        std::string id = "") {
        LayerSpec s;
        s.kind = LayerKind::residual_end;
        s.tag = std::move(tag);
        s.activation = act;
        s.id = std::move(id);
        return s;
    }
};

/// A full architecture: input feature shape (without the batch dimension)
/// plus the ordered layer list.
struct NetworkSpec {
    std::vector<std::size_t> input_shape;
    std::vector<LayerSpec> layers;
};

namespace detail {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string act_text(const ActivationSpec& a) {
    if (a.kind == ActKind::leakyrelu) return "leakyrelu:" + format_double(a.slope);
    return act_name(a.kind);
}

inline ActivationSpec act_from_text(const std::string& s) {
    ActivationSpec a;
    auto colon = s.find(':');
    if (colon == std::string::npos) {
        a.kind = act_from_name(s);
        return a;
    }
    a.kind = act_from_name(s.substr(0, colon));
    if (a.kind != ActKind::leakyrelu)
        throw ConfigError("slope suffix only valid for leakyrelu: '" + s + "'");
    a.slope = std::stod(s.substr(colon + 1));
    if (!(a.slope > 0.0 && a.slope < 1.0))
        throw ConfigError("leakyrelu slope must lie in (0,1), got " + s.substr(colon + 1));
    return a;
}

}  // namespace detail

/// Serializes a NetworkSpec to the line-oriented text used by checkpoints
/// and configs. One layer per line; options as key=value pairs. The output
/// is canonical: parse(serialize(x)) == x and serialize is stable, so
/// checkpoint round-trips are byte-exact.
inline std::string serialize_network_spec(const NetworkSpec& spec) {
    std::ostringstream out;
    out << "input ";
    for (std::size_t i = 0; i < spec.input_shape.size(); ++i) {
        if (i) out << 'x';
        out << spec.input_shape[i];
    }
    out << '\n';
    for (const LayerSpec& l : spec.layers) {
        switch (l.kind) {
            case LayerKind::dense:
                out << "dense " << l.out << " bias=" << (l.bias ? 1 : 0);
                break;
            case LayerKind::conv2d:
                out << "conv " << l.out_ch << " k=" << l.kernel << " s=" << l.stride
                    << " p=" << l.padding << " bias=" << (l.bias ? 1 : 0);
                break;
            case LayerKind::batchnorm:
                out << "batchnorm";
                break;
            case LayerKind::pool:
                out << "pool " << (l.pool == PoolKind::max ? "max" : "avg") << ' ' << l.pool_size;
                break;
            case LayerKind::flatten:
                out << "flatten";
                break;
            case LayerKind::residual_begin:
                out << "resbegin " << l.tag;
                break;
            case LayerKind::residual_end:
                out << "resend " << l.tag;
                break;
        }
        if (l.kind != LayerKind::pool && l.kind != LayerKind::flatten &&
            l.kind != LayerKind::residual_begin)
            out << " act=" << detail::act_text(l.activation);
        out << " id=" << l.id << '\n';
    }
    return out.str();
}

/// Parses the netspec text grammar. Blank lines and '#' comments allowed.
inline NetworkSpec parse_network_spec(const std::string& text) {
    NetworkSpec spec;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool saw_input = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;

        if (word == "input") {
            std::string dims;
            if (!(ls >> dims))
                throw ConfigError("netspec line " + std::to_string(lineno) + ": input needs dims");
            spec.input_shape.clear();
            std::size_t pos = 0;
            while (pos < dims.size()) {
                auto x = dims.find('x', pos);
                std::string tok = dims.substr(pos, x == std::string::npos ? x : x - pos);
                spec.input_shape.push_back(std::stoul(tok));
                if (x == std::string::npos) break;
                pos = x + 1;
            }
            saw_input = true;
            continue;
        }

        LayerSpec l;
        std::vector<std::string> pos_args;
        std::vector<std::pair<std::string, std::string>> kv;
        std::string tok;
        while (ls >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos)
                pos_args.push_back(tok);
            else
                kv.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
        }
        auto need_pos = [&](std::size_t n) {
            if (pos_args.size() < n)
                throw ConfigError("netspec line " + std::to_string(lineno) + ": '" + word +
                                  "' needs " + std::to_string(n) + " positional argument(s)");
        };
        if (word == "dense") {
            need_pos(1);
            l.kind = LayerKind::dense;
            l.out = std::stoul(pos_args[0]);
        } else if (word == "conv") {
            need_pos(1);
            l.kind = LayerKind::conv2d;
            l.out_ch = std::stoul(pos_args[0]);
        } else if (word == "batchnorm") {
            l.kind = LayerKind::batchnorm;
        } else if (word == "pool") {
            need_pos(2);
            l.kind = LayerKind::pool;
            if (pos_args[0] == "max")
                l.pool = PoolKind::max;
            else if (pos_args[0] == "avg")
                l.pool = PoolKind::avg;
            else
                throw ConfigError("netspec line " + std::to_string(lineno) +
                                  ": pool kind must be max or avg");
            l.pool_size = std::stoul(pos_args[1]);
        } else if (word == "flatten") {
            l.kind = LayerKind::flatten;
        } else if (word == "resbegin") {
            need_pos(1);
            l.kind = LayerKind::residual_begin;
            l.tag = pos_args[0];
        } else if (word == "resend") {
            need_pos(1);
            l.kind = LayerKind::residual_end;
            l.tag = pos_args[0];
        } else {
            throw ConfigError("netspec line " + std::to_string(lineno) + ": unknown layer kind '" +
                              word + "'");
        }
        for (auto& [k, v] : kv) {
            if (k == "act")
                l.activation = detail::act_from_text(v);
            else if (k == "id")
                l.id = v;
            else if (k == "bias")
                l.bias = v != "0";
            else if (k == "k")
                l.kernel = std::stoul(v);
            else if (k == "s")
                l.stride = std::stoul(v);
            else if (k == "p")
                l.padding = std::stoul(v);
            else
                throw ConfigError("netspec line " + std::to_string(lineno) + ": unknown option '" +
                                  k + "'");
        }
        spec.layers.push_back(std::move(l));
    }
    if (!saw_input) throw ConfigError("netspec is missing the 'input' line");
    if (spec.layers.empty()) throw ConfigError("netspec has no layers");
    return spec;
}

}  // namespace easier

#endif  // EASIER_LAYER_HPP
