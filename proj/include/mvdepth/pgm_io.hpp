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

#include <cstdint>
#include <string>
#include <vector>

#include "mvdepth/image.hpp"

namespace mvd {

/// Binary P5, maxval 65535, samples big-endian; zNear/zFar ride in a
/// `# znear=<v> zfar=<v>` comment so read-after-write is the identity.
void writeDepthPgm(const DepthMapImage& map, const std::string& path);
DepthMapImage readDepthPgm(const std::string& path);

/// Plain 16-bit P5 without the depth-range comment (label maps, masks).
void writePgm16(const std::vector<uint16_t>& values, int width, int height,
                const std::string& path);
std::vector<uint16_t> readPgm16(const std::string& path, int& width, int& height);

/// Binary P6, 8-bit RGB.
void writePpm(const std::vector<uint8_t>& rgb, int width, int height,
              const std::string& path);

} // namespace mvd
