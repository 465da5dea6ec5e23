// Copyright 2026 The readgrade Authors.
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

#include "readgrade/errors.hpp"

#include <utility>

namespace readgrade {
namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ", ";
    out += item;
  }
  return out;
}

}  // namespace

LoadError::LoadError(std::string path, const std::string& what)
    : Error("cannot load '" + path + "': " + what), path_(std::move(path)) {}

SchemaError::SchemaError(std::string path, std::size_t line, const std::string& what)
    : Error(path + ":" + std::to_string(line) + ": " + what), line_(line) {}

TreeSyntaxError::TreeSyntaxError(std::size_t offset, const std::string& what)
    : Error("tree syntax error at offset " + std::to_string(offset) + ": " + what),
      offset_(offset) {}

PatternSyntaxError::PatternSyntaxError(std::size_t position, const std::string& what)
    : Error("pattern syntax error at position " + std::to_string(position) + ": " +
            what),
      position_(position) {}

SingularDesign::SingularDesign(std::vector<std::string> features)
    : Error("design matrix is rank deficient; offending features: " + join(features)),
      features_(std::move(features)) {}

MissingFeature::MissingFeature(std::vector<std::string> features, const std::string& hint)
    : Error("missing required features: " + join(features) +
            (hint.empty() ? std::string() : " (" + hint + ")")),
      features_(std::move(features)) {}

}  // namespace readgrade
