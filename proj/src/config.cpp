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

#include "mvdepth/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "mvdepth/errors.hpp"

namespace mvd {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

int parseInt(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw IoError(IoError::Kind::BadValue, key + ": bad integer '" + value + "'");
    }
}

double parseDouble(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw IoError(IoError::Kind::BadValue, key + ": bad number '" + value + "'");
    }
}

std::vector<std::string> splitCommaList(const std::string& value) {
    std::vector<std::string> items;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

void setKey(EstimationConfig& c, const std::string& key, const std::string& value) {
    if (key == "views") {
        c.viewPaths = splitCommaList(value);
    } else if (key == "cameras") {
        c.cameraFile = value;
    } else if (key == "width") {
        c.width = parseInt(key, value);
    } else if (key == "height") {
        c.height = parseInt(key, value);
    } else if (key == "frames") {
        c.frames = parseInt(key, value);
    } else if (key == "z_near") {
        c.zNear = parseDouble(key, value);
    } else if (key == "z_far") {
        c.zFar = parseDouble(key, value);
    } else if (key == "depth_levels") {
        c.depthLevels = parseInt(key, value);
    } else if (key == "segments") {
        c.segments = parseInt(key, value);
    } else if (key == "window") {
        c.window = parseInt(key, value);
    } else if (key == "beta0") {
        c.beta0 = parseDouble(key, value);
    } else if (key == "K") {
        c.matchPenaltyK = parseDouble(key, value);
    } else if (key == "p_frames") {
        c.pFrames = parseInt(key, value);
    } else if (key == "threads") {
        c.threads = parseInt(key, value);
    } else if (key == "partition") {
        if (value == "interleaved") c.partition = PartitionMode::Interleaved;
        else if (value == "blocks") c.partition = PartitionMode::Blocks;
        else throw IoError(IoError::Kind::BadValue,
                           "partition: expected 'interleaved' or 'blocks', got '" + value + "'");
    } else if (key == "out_dir") {
        c.outDir = value;
    } else if (key == "center_view") {
        c.centerView = parseInt(key, value);
    } else {
        throw IoError(IoError::Kind::UnknownKey, "unknown config key '" + key + "'");
    }
}

} // namespace

int EstimationConfig::segmentsOrAuto() const {
    if (segments > 0) return segments;
    return std::max(1, static_cast<int>(std::lround(width * height / 20.0)));
}

void EstimationConfig::validate() const {
    if (viewPaths.empty())
        throw IoError(IoError::Kind::MissingRequired, "config: 'views' is required");
    if (cameraFile.empty())
        throw IoError(IoError::Kind::MissingRequired, "config: 'cameras' is required");
    if (width <= 0 || height <= 0)
        throw IoError(IoError::Kind::MissingRequired, "config: 'width'/'height' are required");
    if (!(zNear > 0.0) || !(zFar > 0.0))
        throw IoError(IoError::Kind::MissingRequired, "config: 'z_near'/'z_far' are required");
    if (!(zNear < zFar))
        throw IoError(IoError::Kind::BadValue, "config: z_near must be below z_far");
    if (depthLevels < 2)
        throw IoError(IoError::Kind::BadValue, "config: depth_levels must be at least 2");
    if (window < 1 || window % 2 == 0)
        throw IoError(IoError::Kind::BadValue, "config: window must be odd");
    if (!(beta0 > 0.0))
        throw IoError(IoError::Kind::BadValue, "config: beta0 must be positive");
    if (!(matchPenaltyK > 0.0))
        throw IoError(IoError::Kind::BadValue, "config: K must be positive");
    if (frames < 1)
        throw IoError(IoError::Kind::BadValue, "config: frames must be at least 1");
    if (pFrames < 0)
        throw IoError(IoError::Kind::BadValue, "config: p_frames must be non-negative");
    if (threads < 1)
        throw IoError(IoError::Kind::BadValue, "config: threads must be at least 1");
    if (threads > depthLevels)
        throw IoError(IoError::Kind::BadValue,
                      "config: threads must not exceed depth_levels");
    if (segments < 0)
        throw IoError(IoError::Kind::BadValue, "config: segments must be positive");
    if (!(tL <= tP))
        throw IoError(IoError::Kind::BadValue, "config: I-frame threshold must not exceed P-frame threshold");
}

EstimationConfig loadConfig(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError(IoError::Kind::FileNotFound, "cannot open config: " + path);
    }
    EstimationConfig config;
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw IoError(IoError::Kind::BadValue,
                          path + ":" + std::to_string(lineNo) + ": expected key = value");
        }
        setKey(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    config.validate();
    return config;
}

void applyOverride(EstimationConfig& config, const std::string& keyValue) {
    const auto eq = keyValue.find('=');
    if (eq == std::string::npos) {
        throw IoError(IoError::Kind::BadValue,
                      "--set expects key=value, got '" + keyValue + "'");
    }
    setKey(config, trim(keyValue.substr(0, eq)), trim(keyValue.substr(eq + 1)));
}

void writeConfig(const EstimationConfig& config, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError(IoError::Kind::FileNotFound, "cannot write config: " + path);
    }
    char buf[64];
    out << "views = ";
    for (size_t i = 0; i < config.viewPaths.size(); ++i) {
        if (i) out << ", ";
        out << config.viewPaths[i];
    }
    out << "\ncameras = " << config.cameraFile;
    out << "\nwidth = " << config.width << "\nheight = " << config.height;
    out << "\nframes = " << config.frames;
    std::snprintf(buf, sizeof(buf), "%.17g", config.zNear);
    out << "\nz_near = " << buf;
    std::snprintf(buf, sizeof(buf), "%.17g", config.zFar);
    out << "\nz_far = " << buf;
    out << "\ndepth_levels = " << config.depthLevels;
    if (config.segments > 0) out << "\nsegments = " << config.segments;
    out << "\nwindow = " << config.window;
    std::snprintf(buf, sizeof(buf), "%.17g", config.beta0);
    out << "\nbeta0 = " << buf;
    std::snprintf(buf, sizeof(buf), "%.17g", config.matchPenaltyK);
    out << "\nK = " << buf;
    out << "\np_frames = " << config.pFrames;
    out << "\nthreads = " << config.threads;
    out << "\npartition = "
        << (config.partition == PartitionMode::Interleaved ? "interleaved" : "blocks");
    out << "\nout_dir = " << config.outDir;
    if (config.centerView >= 0) out << "\ncenter_view = " << config.centerView;
    out << "\n";
}

} // namespace mvd
