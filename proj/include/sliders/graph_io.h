// Copyright 2026 The Authors.
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

// Edge-list text format:
//
//   n m
//   <n characters from {1,2}: the type of vertex i>
//   u v          (m lines, 0-based ids)
//
// Lines starting with '#' and blank lines are ignored. The canonical form
// written by FormatGraph has u < v on every line and lines sorted
// lexicographically; the reader accepts either endpoint order and any line
// order. For n = 0 the type line is omitted.

#ifndef SLIDERS_GRAPH_IO_H_
#define SLIDERS_GRAPH_IO_H_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sliders/typed_graph.h"

namespace sliders {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  // 1-based physical line number of the offending line.
  int line() const { return line_; }

 private:
  int line_;
};

TypedGraph ParseGraph(std::string_view text);
TypedGraph ReadGraph(std::istream& in);
TypedGraph ReadGraphFile(const std::filesystem::path& path);

std::string FormatGraph(const TypedGraph& g);
void WriteGraph(std::ostream& out, const TypedGraph& g);
void WriteGraphFile(const std::filesystem::path& path, const TypedGraph& g);

}  // namespace sliders

#endif  // SLIDERS_GRAPH_IO_H_
