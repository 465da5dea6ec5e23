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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace readgrade {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyDocument : public Error {
 public:
  using Error::Error;
};

class LoadError : public Error {
 public:
  LoadError(std::string path, const std::string& what);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class ManifestError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  SchemaError(std::string path, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class TreeSyntaxError : public Error {
 public:
  TreeSyntaxError(std::size_t offset, const std::string& what);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class PatternSyntaxError : public Error {
 public:
  PatternSyntaxError(std::size_t position, const std::string& what);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class AnnotationMismatch : public Error {
 public:
  using Error::Error;
};

// Lists the features whose columns made the design rank deficient.
class SingularDesign : public Error {
 public:
  explicit SingularDesign(std::vector<std::string> features);
  const std::vector<std::string>& features() const { return features_; }

 private:
  std::vector<std::string> features_;
};

class MissingFeature : public Error {
 public:
  MissingFeature(std::vector<std::string> features, const std::string& hint = {});
  const std::vector<std::string>& features() const { return features_; }

 private:
  std::vector<std::string> features_;
};

class UndefinedCorrelation : public Error {
 public:
  using Error::Error;
};

class BicUndefined : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace readgrade
