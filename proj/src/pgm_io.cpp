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

#include "mvdepth/pgm_io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>

#include "mvdepth/errors.hpp"

namespace mvd {

namespace {

std::string formatDouble(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void writeSamplesBigEndian(std::ostream& out, const std::vector<uint16_t>& values) {
    std::vector<uint8_t> bytes(values.size() * 2);
    for (size_t i = 0; i < values.size(); ++i) {
        bytes[2 * i] = static_cast<uint8_t>(values[i] >> 8);
        bytes[2 * i + 1] = static_cast<uint8_t>(values[i] & 0xff);
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

struct PgmHeader {
    int width = 0;
    int height = 0;
    int maxval = 0;
    std::optional<double> zNear;
    std::optional<double> zFar;
};

// Reads the P5 header; comment lines may carry `znear=`/`zfar=` metadata.
PgmHeader readHeader(std::istream& in, const std::string& path) {
    PgmHeader h;
    std::string magic;
    in >> magic;
    if (magic != "P5") {
        throw IoError(IoError::Kind::MalformedHeader,
                      path + ": expected P5, got '" + magic + "'");
    }
    int fields[3];
    int got = 0;
    while (got < 3) {
        const int ch = in.peek();
        if (ch == EOF) {
            throw IoError(IoError::Kind::MalformedHeader, path + ": header cut short");
        }
        if (std::isspace(ch)) {
            in.get();
            continue;
        }
        if (ch == '#') {
            std::string comment;
            std::getline(in, comment);
            for (const char* key : {"znear=", "zfar="}) {
                const auto pos = comment.find(key);
                if (pos == std::string::npos) continue;
                const char* begin = comment.data() + pos + std::string(key).size();
                const char* end = comment.data() + comment.size();
                double value = 0.0;
                const auto res = std::from_chars(begin, end, value);
                if (res.ec == std::errc()) {
                    if (key[1] == 'n') h.zNear = value;
                    else h.zFar = value;
                }
            }
            continue;
        }
        if (!(in >> fields[got])) {
            throw IoError(IoError::Kind::MalformedHeader, path + ": bad header field");
        }
        ++got;
    }
    in.get(); // single whitespace after maxval
    h.width = fields[0];
    h.height = fields[1];
    h.maxval = fields[2];
    if (h.width <= 0 || h.height <= 0) {
        throw IoError(IoError::Kind::MalformedHeader, path + ": bad dimensions");
    }
    return h;
}

std::vector<uint16_t> readSamplesBigEndian(std::istream& in, size_t count,
                                           const std::string& path) {
    std::vector<uint8_t> bytes(count * 2);
    in.read(reinterpret_cast<char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (!in) {
        throw IoError(IoError::Kind::TruncatedFile, path + ": sample data cut short");
    }
    std::vector<uint16_t> values(count);
    for (size_t i = 0; i < count; ++i) {
        values[i] = static_cast<uint16_t>((bytes[2 * i] << 8) | bytes[2 * i + 1]);
    }
    return values;
}

} // namespace

void writeDepthPgm(const DepthMapImage& map, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError(IoError::Kind::FileNotFound, "cannot write: " + path);
    }
    out << "P5\n"
        << "# znear=" << formatDouble(map.zNear) << " zfar=" << formatDouble(map.zFar)
        << "\n"
        << map.width << " " << map.height << "\n65535\n";
    writeSamplesBigEndian(out, map.values);
    if (!out) {
        throw IoError(IoError::Kind::BadValue, "short write: " + path);
    }
}

DepthMapImage readDepthPgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError(IoError::Kind::FileNotFound, "cannot open: " + path);
    }
    const PgmHeader h = readHeader(in, path);
    if (h.maxval != 65535) {
        throw IoError(IoError::Kind::UnexpectedMaxval,
                      path + ": maxval " + std::to_string(h.maxval) +
                          ", this format requires 65535");
    }
    if (!h.zNear || !h.zFar) {
        throw IoError(IoError::Kind::MalformedHeader,
                      path + ": missing znear/zfar comment");
    }
    DepthMapImage map = DepthMapImage::allocate(h.width, h.height, *h.zNear, *h.zFar);
    map.values = readSamplesBigEndian(in, map.values.size(), path);
    return map;
}

void writePgm16(const std::vector<uint16_t>& values, int width, int height,
                const std::string& path) {
    if (static_cast<size_t>(width) * height != values.size()) {
        throw IoError(IoError::Kind::BadDimensions, "size mismatch writing " + path);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError(IoError::Kind::FileNotFound, "cannot write: " + path);
    }
    out << "P5\n" << width << " " << height << "\n65535\n";
    writeSamplesBigEndian(out, values);
}

std::vector<uint16_t> readPgm16(const std::string& path, int& width, int& height) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError(IoError::Kind::FileNotFound, "cannot open: " + path);
    }
    const PgmHeader h = readHeader(in, path);
    if (h.maxval != 65535) {
        throw IoError(IoError::Kind::UnexpectedMaxval,
                      path + ": maxval " + std::to_string(h.maxval));
    }
    width = h.width;
    height = h.height;
    return readSamplesBigEndian(in, static_cast<size_t>(width) * height, path);
}

void writePpm(const std::vector<uint8_t>& rgb, int width, int height,
              const std::string& path) {
    if (static_cast<size_t>(width) * height * 3 != rgb.size()) {
        throw IoError(IoError::Kind::BadDimensions, "size mismatch writing " + path);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw IoError(IoError::Kind::FileNotFound, "cannot write: " + path);
    }
    out << "P6\n" << width << " " << height << "\n255\n";
    out.write(reinterpret_cast<const char*>(rgb.data()),
              static_cast<std::streamsize>(rgb.size()));
}

} // namespace mvd
