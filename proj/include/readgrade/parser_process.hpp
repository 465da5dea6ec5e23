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

#include <mutex>
#include <string>
#include <vector>

#include "readgrade/corpus.hpp"
#include "readgrade/tree.hpp"

namespace readgrade::syntax {

// A constituency parser running as a child process: one space-joined
// sentence per input line, one bracketed tree per output line.
class ParserProcess {
 public:
  // Runs command through /bin/sh -c. Throws IoError if it cannot start.
  explicit ParserProcess(const std::string& command);
  ~ParserProcess();
  ParserProcess(const ParserProcess&) = delete;
  ParserProcess& operator=(const ParserProcess&) = delete;

  // Thread-safe; requests are serialized. Throws IoError if the process
  // exits, TreeSyntaxError on a malformed reply.
  ParseTree parse(const std::vector<std::string>& words);

  std::vector<ParseTree> parse_document(const Document& doc);

 private:
  std::mutex mu_;
  int pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
};

}  // namespace readgrade::syntax
