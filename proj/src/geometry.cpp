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

#include "mvdepth/geometry.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "mvdepth/errors.hpp"

namespace mvd {

namespace {
constexpr double kOrthoTol = 1e-9;
constexpr double kParallelEps = 1e-12;
constexpr double kBehindEps = 1e-12;
} // namespace

void CameraParams::validate() const {
    const Mat3 gram = rotation.transpose() * rotation;
    const double orthoErr = (gram - Mat3::Identity()).cwiseAbs().maxCoeff();
    if (orthoErr > kOrthoTol) {
        throw std::invalid_argument("camera '" + name +
                                    "': rotation is not orthonormal");
    }
    if (std::abs(rotation.determinant() - 1.0) > kOrthoTol) {
        throw std::invalid_argument("camera '" + name +
                                    "': rotation determinant is not +1");
    }
    if (!(intrinsics(0, 0) > 0.0) || !(intrinsics(1, 1) > 0.0)) {
        throw std::invalid_argument("camera '" + name +
                                    "': focal lengths must be positive");
    }
}

void Rig::validate() const {
    if (cameras.size() < 2) {
        throw std::invalid_argument("rig needs at least 2 cameras");
    }
    if (centerIndex < 0 || centerIndex >= viewCount()) {
        throw std::invalid_argument("rig center index out of range");
    }
    if (width <= 0 || height <= 0) {
        throw std::invalid_argument("rig image size must be positive");
    }
    for (const CameraParams& cam : cameras) {
        cam.validate();
    }
}

NeighborTopology NeighborTopology::fromRig(const Rig& rig) {
    NeighborTopology topo;
    const int n = rig.viewCount();
    topo.neighbors.resize(n);
    for (int c = 0; c < n; ++c) {
        if (c - 1 >= 0) topo.neighbors[c].push_back(c - 1);
        if (c + 1 < n) topo.neighbors[c].push_back(c + 1);
    }
    return topo;
}

double centerPlaneDepth(const Vec3& point, const Rig& rig) {
    const CameraParams& cam = rig.centerCamera();
    return cam.rotation.row(2).dot(point) + cam.translation.z();
}

GeomStatus unprojectAtDepth(const Vec2& pixel, const CameraParams& view,
                            double depth, const Rig& rig, Vec3& out) {
    const Vec3 origin = view.center();
    const Vec3 dir = view.rotation.transpose() *
                     (view.intrinsics.inverse() *
                      Vec3(pixel.x(), pixel.y(), 1.0));
    const CameraParams& center = rig.centerCamera();
    const Vec3 axis = center.rotation.row(2).transpose();
    const double denom = axis.dot(dir);
    if (std::abs(denom) < kParallelEps) {
        return GeomStatus::RayParallelToPlane;
    }
    const double s = (depth - center.translation.z() - axis.dot(origin)) / denom;
    if (s <= 0.0) {
        return GeomStatus::BehindCamera;
    }
    out = origin + s * dir;
    return GeomStatus::Ok;
}

GeomStatus project(const Vec3& point, const CameraParams& view, Vec2& out) {
    const Vec3 cam = view.rotation * point + view.translation;
    if (cam.z() <= kBehindEps) {
        return GeomStatus::BehindCamera;
    }
    const Vec3 img = view.intrinsics * cam;
    out = Vec2(img.x() / cam.z(), img.y() / cam.z());
    return GeomStatus::Ok;
}

std::optional<Vec2> correspond(const Vec2& pixel, const CameraParams& fromView,
                               const CameraParams& toView, double depth,
                               const Rig& rig) {
    Vec3 world;
    if (unprojectAtDepth(pixel, fromView, depth, rig, world) != GeomStatus::Ok) {
        return std::nullopt;
    }
    Vec2 px;
    if (project(world, toView, px) != GeomStatus::Ok) {
        return std::nullopt;
    }
    if (px.x() < 0.0 || px.x() >= rig.width || px.y() < 0.0 ||
        px.y() >= rig.height) {
        return std::nullopt;
    }
    return px;
}

namespace {

// Strips '#' comments and splits the file into blank-line-separated blocks
// of whitespace tokens.
std::vector<std::vector<std::string>> tokenizeBlocks(std::istream& in) {
    std::vector<std::vector<std::string>> blocks;
    std::vector<std::string> current;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty()) {
            if (!current.empty()) {
                blocks.push_back(std::move(current));
                current.clear();
            }
            continue;
        }
        current.insert(current.end(), tokens.begin(), tokens.end());
    }
    if (!current.empty()) blocks.push_back(std::move(current));
    return blocks;
}

double parseNumber(const std::string& token, const std::string& context) {
    try {
        size_t used = 0;
        const double v = std::stod(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        throw IoError(IoError::Kind::BadCameraFile,
                      context + ": bad number '" + token + "'");
    }
}

} // namespace

std::vector<CameraParams> loadCameraFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError(IoError::Kind::FileNotFound,
                      "cannot open camera file: " + path);
    }
    const auto blocks = tokenizeBlocks(in);
    if (blocks.empty()) {
        throw IoError(IoError::Kind::BadCameraFile,
                      "camera file has no camera blocks: " + path);
    }
    std::vector<CameraParams> cameras;
    cameras.reserve(blocks.size());
    for (const auto& block : blocks) {
        if (block.size() != 1 + 9 + 9 + 3) {
            throw IoError(IoError::Kind::BadCameraFile,
                          "camera block '" + block.front() + "' needs name + 21 values, got " +
                              std::to_string(block.size() - 1));
        }
        CameraParams cam;
        cam.name = block[0];
        size_t k = 1;
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                cam.intrinsics(r, c) = parseNumber(block[k++], cam.name);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                cam.rotation(r, c) = parseNumber(block[k++], cam.name);
        for (int r = 0; r < 3; ++r)
            cam.translation(r) = parseNumber(block[k++], cam.name);
        try {
            cam.validate();
        } catch (const std::invalid_argument& e) {
            throw IoError(IoError::Kind::BadCameraFile, e.what());
        }
        cameras.push_back(std::move(cam));
    }
    return cameras;
}

Rig makeRig(std::vector<CameraParams> cameras, int width, int height,
            int centerOverride) {
    Rig rig;
    rig.cameras = std::move(cameras);
    rig.width = width;
    rig.height = height;
    rig.centerIndex = centerOverride >= 0
                          ? centerOverride
                          : static_cast<int>(rig.cameras.size()) / 2;
    rig.validate();
    return rig;
}

} // namespace mvd
