// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace mvd {

/// I/O and configuration failures carry a machine-checkable kind next to
/// the human-readable message.
class IoError : public std::runtime_error {
public:
    enum class Kind {
        FileNotFound,
        TruncatedFile,
        BadDimensions,
        MalformedHeader,
        UnexpectedMaxval,
        UnknownKey,
        MissingRequired,
        BadValue,
        BadCameraFile,
    };

    IoError(Kind kind, const std::string& message)
        : std::runtime_error(message), kind(kind) {}

    Kind kind;
};

/// Thrown by the synthetic-scene renderer when some pixel is covered by no
/// surface (a full background plane is mandatory).
class DegenerateSpec : public std::runtime_error {
public:
    explicit DegenerateSpec(const std::string& message)
        : std::runtime_error(message) {}
};

} // namespace mvd
