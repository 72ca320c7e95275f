// Copyright 2026 The Kempe Authors
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

#include <iosfwd>
#include <string>
#include <string_view>

#include "kempe/engine.hpp"
#include "kempe/graph.hpp"

namespace kempe::io {

// Graph text format:
//   c <comment>        (optional, any number, before the header)
//   p edge <n> <m>
//   e <u> <v>          (exactly m lines, 1 <= u < v <= n)
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g, std::string_view comment = {});

// Coloring text format:
//   t <k>
//   e <u> <v> <c>      (each edge of the graph exactly once, 1 <= c <= k)
EdgeColoring parse_coloring(const Graph& g, std::string_view text);
std::string format_coloring(const Graph& g, const EdgeColoring& f);

// Transcript text format:
//   # <comment>
//   K <a> <b> <u> <v>[\t<annotation>]
Transcript parse_transcript(const Graph& g, std::string_view text);
std::string format_transcript(const Graph& g, const Transcript& tr,
                              std::string_view comment = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace kempe::io
