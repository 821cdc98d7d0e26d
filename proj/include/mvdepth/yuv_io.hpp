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

#include <string>

#include "mvdepth/image.hpp"

namespace mvd {

/// Reads one frame of planar 8-bit YUV 4:2:0 video. Chroma is upsampled to
/// full resolution by nearest-neighbor replication. Throws IoError with
/// kind BadDimensions (odd or < 16 sides) or TruncatedFile.
Frame loadYuvFrame(const std::string& path, int width, int height,
                   int frameIndex);

/// Appends one frame as planar 4:2:0, subsampling chroma by taking the
/// top-left sample of each 2x2 block.
void appendYuvFrame(const std::string& path, const Frame& frame);

} // namespace mvd
