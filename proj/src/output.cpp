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

#include "lexsynth/output.hpp"

#include <unistd.h>

#include "lexsynth/error.hpp"

namespace fs = std::filesystem;

namespace lexsynth {

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  return in;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void finish_output(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
  out.close();
}

StagedOutputs::~StagedOutputs() {
  if (committed_) return;
  for (const auto& [tmp, final_path] : staged_) {
    std::error_code ec;
    fs::remove(tmp, ec);
  }
}

fs::path StagedOutputs::stage(const fs::path& final_path) {
  fs::path tmp = final_path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." +
         std::to_string(staged_.size());
  staged_.emplace_back(tmp, final_path);
  return tmp;
}

void StagedOutputs::commit() {
  for (const auto& [tmp, final_path] : staged_) {
    std::error_code ec;
    fs::rename(tmp, final_path, ec);
    if (ec) {
      throw IoError("cannot move " + tmp.string() + " to " +
                    final_path.string() + ": " + ec.message());
    }
  }
  committed_ = true;
}

}  // namespace lexsynth
