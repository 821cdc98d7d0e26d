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
#include <vector>

namespace mvd {

enum class PartitionMode { Interleaved, Blocks };

/// Run parameters for an estimation job. Defaults match the method's
/// standard operating point; see the README for the file format.
struct EstimationConfig {
    std::vector<std::string> viewPaths;
    std::string cameraFile;
    int width = 0;
    int height = 0;
    int frames = 1;
    double zNear = 0.0;
    double zFar = 0.0;
    int depthLevels = 250;
    int segments = 0; // 0 = auto: one segment per ~20 pixels
    int window = 3;
    double beta0 = 4.0;
    double matchPenaltyK = 30.0;
    int pFrames = 0; // P-type depth frames per I-type frame; 0 = all I
    int threads = 1;
    PartitionMode partition = PartitionMode::Interleaved;
    std::string outDir = "out";
    int centerView = -1; // -1 = middle camera

    // Temporal change thresholds for the P-frame (tP) and I-frame (tL)
    // references; a segment freezes when every mean-color component moved
    // less than the threshold.
    double tP = 3.0;
    double tL = 1.0;

    int segmentsOrAuto() const;
    void validate() const;
};

/// Parses the flat `key = value` configuration file (`#` comments).
/// Unknown keys and missing required keys raise IoError.
EstimationConfig loadConfig(const std::string& path);

/// Applies one `key=value` override on top of a parsed config (the CLI's
/// --set flag). Same key set and validation as the file parser.
void applyOverride(EstimationConfig& config, const std::string& keyValue);

/// Writes a config back out (used by the scene generator to emit a
/// ready-to-run job file).
void writeConfig(const EstimationConfig& config, const std::string& path);

} // namespace mvd
