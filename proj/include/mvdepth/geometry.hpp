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

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mvd {

using Mat3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;

/// Pinhole camera. Extrinsics are world-to-camera throughout: x_cam = R*X + t.
struct CameraParams {
    std::string name;
    Mat3 intrinsics = Mat3::Identity(); // upper-triangular K
    Mat3 rotation = Mat3::Identity();
    Vec3 translation = Vec3::Zero();

    /// Optical center in world coordinates, -R^T * t.
    Vec3 center() const { return -rotation.transpose() * translation; }

    /// Throws std::invalid_argument on a non-orthonormal rotation
    /// (tolerance 1e-9 on R^T R - I and det(R) - 1) or non-positive focals.
    void validate() const;
};

/// Ordered multi-camera setup sharing one image resolution. Depth is always
/// measured against the plane of the center camera, so depth labels are
/// comparable across views.
struct Rig {
    std::vector<CameraParams> cameras;
    int centerIndex = 0;
    int width = 0;
    int height = 0;

    const CameraParams& centerCamera() const { return cameras[centerIndex]; }
    int viewCount() const { return static_cast<int>(cameras.size()); }
    void validate() const;
};

/// Per-view neighbor sets derived from the rig ordering: the nearest left
/// and nearest right view, one of them for the terminal views.
struct NeighborTopology {
    std::vector<std::vector<int>> neighbors;

    static NeighborTopology fromRig(const Rig& rig);
};

enum class GeomStatus { Ok, RayParallelToPlane, BehindCamera };

/// z-coordinate of a world point expressed in the center camera's frame.
double centerPlaneDepth(const Vec3& point, const Rig& rig);

/// World point on the ray of `pixel` through `view`'s optical center whose
/// centerPlaneDepth equals `depth`.
GeomStatus unprojectAtDepth(const Vec2& pixel, const CameraParams& view,
                            double depth, const Rig& rig, Vec3& out);

/// Perspective projection K*(R*P + t) divided by camera-frame z.
GeomStatus project(const Vec3& point, const CameraParams& view, Vec2& out);

/// Pixel in `toView` corresponding to `pixel` in `fromView` at the given
/// center-plane depth. Out-of-image results and any sub-step failure fold
/// into std::nullopt (matching treats all of them as "no contribution").
std::optional<Vec2> correspond(const Vec2& pixel, const CameraParams& fromView,
                               const CameraParams& toView, double depth,
                               const Rig& rig);

/// Camera-parameter text file: blocks separated by blank lines; each block
/// is a name line followed by 9 intrinsics, 9 rotation and 3 translation
/// values (row-major, whitespace-tolerant, `#` comments).
std::vector<CameraParams> loadCameraFile(const std::string& path);

/// Assembles and validates a rig. centerOverride < 0 picks index N/2.
Rig makeRig(std::vector<CameraParams> cameras, int width, int height,
            int centerOverride = -1);

} // namespace mvd
