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

#include <cmath>
#include <cstdint>
#include <vector>

namespace mvd {

/// One frame of video as full-resolution 8-bit Y, Cb, Cr planes (chroma is
/// upsampled to full resolution at load time).
struct Frame {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> y;
    std::vector<uint8_t> cb;
    std::vector<uint8_t> cr;

    static Frame allocate(int w, int h, uint8_t fillY = 0, uint8_t fillC = 128) {
        Frame f;
        f.width = w;
        f.height = h;
        f.y.assign(static_cast<size_t>(w) * h, fillY);
        f.cb.assign(static_cast<size_t>(w) * h, fillC);
        f.cr.assign(static_cast<size_t>(w) * h, fillC);
        return f;
    }

    size_t index(int x, int y_) const {
        return static_cast<size_t>(y_) * width + x;
    }
};

/// 16-bit depth map with inverse-depth normalization:
///   v = round(65535 * ((1/z - 1/zFar) / (1/zNear - 1/zFar)))
/// so v = 65535 encodes zNear and v = 0 encodes zFar.
struct DepthMapImage {
    int width = 0;
    int height = 0;
    double zNear = 0.0;
    double zFar = 0.0;
    std::vector<uint16_t> values;

    static DepthMapImage allocate(int w, int h, double zn, double zf) {
        DepthMapImage m;
        m.width = w;
        m.height = h;
        m.zNear = zn;
        m.zFar = zf;
        m.values.assign(static_cast<size_t>(w) * h, 0);
        return m;
    }

    uint16_t encode(double z) const {
        const double num = 1.0 / z - 1.0 / zFar;
        const double den = 1.0 / zNear - 1.0 / zFar;
        double v = std::round(65535.0 * (num / den));
        if (v < 0.0) v = 0.0;
        if (v > 65535.0) v = 65535.0;
        return static_cast<uint16_t>(v);
    }

    double decode(uint16_t v) const {
        const double inv =
            1.0 / zFar + (static_cast<double>(v) / 65535.0) * (1.0 / zNear - 1.0 / zFar);
        return 1.0 / inv;
    }
};

} // namespace mvd
