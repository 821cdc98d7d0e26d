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

#include "mvdepth/yuv_io.hpp"

#include <fstream>

#include "mvdepth/errors.hpp"

namespace mvd {

Frame loadYuvFrame(const std::string& path, int width, int height,
                   int frameIndex) {
    if (width < 16 || height < 16 || width % 2 != 0 || height % 2 != 0) {
        throw IoError(IoError::Kind::BadDimensions,
                      "frame size must be even and at least 16x16, got " +
                          std::to_string(width) + "x" + std::to_string(height));
    }
    if (frameIndex < 0) {
        throw IoError(IoError::Kind::BadValue, "negative frame index");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError(IoError::Kind::FileNotFound, "cannot open: " + path);
    }
    const size_t lumaSize = static_cast<size_t>(width) * height;
    const size_t chromaSize = lumaSize / 4;
    const size_t frameSize = lumaSize + 2 * chromaSize;

    in.seekg(0, std::ios::end);
    const auto fileSize = static_cast<size_t>(in.tellg());
    if (fileSize < frameSize * (static_cast<size_t>(frameIndex) + 1)) {
        throw IoError(IoError::Kind::TruncatedFile,
                      path + ": no frame " + std::to_string(frameIndex) +
                          " (file holds " + std::to_string(fileSize / frameSize) +
                          " frames)");
    }
    in.seekg(static_cast<std::streamoff>(frameSize * frameIndex));

    std::vector<uint8_t> yPlane(lumaSize);
    std::vector<uint8_t> cbHalf(chromaSize);
    std::vector<uint8_t> crHalf(chromaSize);
    in.read(reinterpret_cast<char*>(yPlane.data()), static_cast<std::streamsize>(lumaSize));
    in.read(reinterpret_cast<char*>(cbHalf.data()), static_cast<std::streamsize>(chromaSize));
    in.read(reinterpret_cast<char*>(crHalf.data()), static_cast<std::streamsize>(chromaSize));
    if (!in) {
        throw IoError(IoError::Kind::TruncatedFile, path + ": short read");
    }

    Frame frame = Frame::allocate(width, height);
    frame.y = std::move(yPlane);
    const int cw = width / 2;
    for (int y = 0; y < height; ++y) {
        const size_t crow = static_cast<size_t>(y / 2) * cw;
        for (int x = 0; x < width; ++x) {
            const size_t ci = crow + x / 2;
            frame.cb[frame.index(x, y)] = cbHalf[ci];
            frame.cr[frame.index(x, y)] = crHalf[ci];
        }
    }
    return frame;
}

void appendYuvFrame(const std::string& path, const Frame& frame) {
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) {
        throw IoError(IoError::Kind::FileNotFound, "cannot open for append: " + path);
    }
    out.write(reinterpret_cast<const char*>(frame.y.data()),
              static_cast<std::streamsize>(frame.y.size()));
    const int cw = frame.width / 2;
    const int ch = frame.height / 2;
    std::vector<uint8_t> half(static_cast<size_t>(cw) * ch);
    for (int y = 0; y < ch; ++y)
        for (int x = 0; x < cw; ++x)
            half[static_cast<size_t>(y) * cw + x] = frame.cb[frame.index(2 * x, 2 * y)];
    out.write(reinterpret_cast<const char*>(half.data()),
              static_cast<std::streamsize>(half.size()));
    for (int y = 0; y < ch; ++y)
        for (int x = 0; x < cw; ++x)
            half[static_cast<size_t>(y) * cw + x] = frame.cr[frame.index(2 * x, 2 * y)];
    out.write(reinterpret_cast<const char*>(half.data()),
              static_cast<std::streamsize>(half.size()));
    if (!out) {
        throw IoError(IoError::Kind::BadValue, "short write: " + path);
    }
}

} // namespace mvd
