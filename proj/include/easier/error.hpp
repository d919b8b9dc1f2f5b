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

#ifndef EASIER_ERROR_HPP
#define EASIER_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace easier {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Network construction or tensor shape mismatch; the message names the
/// offending layer id where one exists.
struct ShapeError : Error {
    using Error::Error;
};

/// Invalid experiment configuration or CLI arguments.
struct ConfigError : Error {
    using Error::Error;
};

/// Malformed binary or text input. Carries the byte offset at which
/// parsing failed.
struct ParseError : Error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t at)
        : Error(msg + " (at byte offset " + std::to_string(at) + ")"), offset(at) {}
};

/// Training diverged (non-finite loss). Carries epoch and step indices.
struct TrainError : Error {
    std::size_t epoch, step;
    TrainError(const std::string& msg, std::size_t e, std::size_t s)
        : Error(msg + " (epoch " + std::to_string(e) + ", step " + std::to_string(s) + ")"),
          epoch(e), step(s) {}
};

/// A layer chain cannot be fused exactly; the message carries the reason.
struct NotFoldableError : Error {
    using Error::Error;
};

/// Argument outside the mathematical domain of a numeric routine.
struct DomainError : Error {
    using Error::Error;
};

}  // namespace easier

#endif  // EASIER_ERROR_HPP
