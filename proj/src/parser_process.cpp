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

#include "readgrade/parser_process.hpp"

#include <csignal>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>

#include "readgrade/errors.hpp"

namespace readgrade::syntax {

ParserProcess::ParserProcess(const std::string& command) {
  int in[2];
  int out[2];
  if (pipe(in) != 0) throw IoError("pipe failed");
  if (pipe(out) != 0) {
    close(in[0]);
    close(in[1]);
    throw IoError("pipe failed");
  }
  pid_ = fork();
  if (pid_ < 0) throw IoError("fork failed");
  if (pid_ == 0) {
    dup2(in[0], STDIN_FILENO);
    dup2(out[1], STDOUT_FILENO);
    close(in[0]);
    close(in[1]);
    close(out[0]);
    close(out[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(in[0]);
  close(out[1]);
  to_child_ = in[1];
  from_child_ = out[0];
  std::signal(SIGPIPE, SIG_IGN);
}

ParserProcess::~ParserProcess() {
  if (to_child_ >= 0) close(to_child_);
  if (from_child_ >= 0) close(from_child_);
  if (pid_ > 0) {
    kill(pid_, SIGTERM);
    waitpid(pid_, nullptr, 0);
  }
}

ParseTree ParserProcess::parse(const std::vector<std::string>& words) {
  std::lock_guard lock(mu_);
  std::string line;
  for (const auto& w : words) line += (line.empty() ? "" : " ") + w;
  line += '\n';
  std::size_t sent = 0;
  while (sent < line.size()) {
    const ssize_t n = write(to_child_, line.data() + sent, line.size() - sent);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) throw IoError("parser process closed its input");
    sent += static_cast<std::size_t>(n);
  }
  for (;;) {
    const auto newline = buffer_.find('\n');
    if (newline != std::string::npos) {
      const std::string reply = buffer_.substr(0, newline);
      buffer_.erase(0, newline + 1);
      return parse_bracket_tree(reply);
    }
    char chunk[4096];
    const ssize_t n = read(from_child_, chunk, sizeof(chunk));
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) throw IoError("parser process exited before replying");
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

std::vector<ParseTree> ParserProcess::parse_document(const Document& doc) {
  std::vector<ParseTree> trees;
  for (const auto& sentence : doc.sentences()) {
    std::vector<std::string> words;
    for (const auto& t : sentence.tokens) words.push_back(t.surface);
    trees.push_back(parse(words));
  }
  return trees;
}

}  // namespace readgrade::syntax
