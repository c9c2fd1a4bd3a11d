// Copyright 2026 The lexsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEXSYNTH_OUTPUT_HPP_
#define LEXSYNTH_OUTPUT_HPP_

#include <filesystem>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

namespace lexsynth {

/// Opens a file for reading in binary mode; throws IoError on failure.
std::ifstream open_input(const std::filesystem::path& path);
/// Opens (truncates) a file for writing in binary mode; throws IoError.
std::ofstream open_output(const std::filesystem::path& path);
/// Flushes and closes, throwing IoError if any write failed.
void finish_output(std::ofstream& out, const std::filesystem::path& path);

/// Collects output files under temporary names next to their final
/// location and renames them all on commit(). Anything not committed is
/// removed on destruction, so a failed run leaves no partial outputs.
class StagedOutputs {
 public:
  StagedOutputs() = default;
  StagedOutputs(const StagedOutputs&) = delete;
  StagedOutputs& operator=(const StagedOutputs&) = delete;
  ~StagedOutputs();

  /// Returns the temporary path to write `final_path` to.
  std::filesystem::path stage(const std::filesystem::path& final_path);
  void commit();

 private:
  std::vector<std::pair<std::filesystem::path, std::filesystem::path>> staged_;
  bool committed_ = false;
};

}  // namespace lexsynth

#endif  // LEXSYNTH_OUTPUT_HPP_
