// Copyright 2026 The sdpi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SDPI_CHANNEL_IO_H
#define SDPI_CHANNEL_IO_H

#include <filesystem>
#include <string>
#include <string_view>

#include "sdpi/info.h"

namespace sdpi {

// Channel files come in two flavours:
//
//   JSON: {"rows": [[0.9, 0.1], [0.1, 0.9]]}
//   CSV:  one row per line, comma-separated decimals. Blank lines and lines
//         starting with '#' are ignored.
//
// Row i is the output distribution for input state i. For channels over bit
// strings, bit k of the state index is bit k of the string (little-endian).
// Rows must sum to 1 within 1e-9. All failures throw std::invalid_argument
// with a message naming the offending row.

Channel parse_channel_json(std::string_view text);
Channel parse_channel_csv(std::string_view text);

/// Dispatches on the first non-blank character: '{' means JSON, else CSV.
Channel parse_channel(std::string_view text);

Channel load_channel(const std::filesystem::path& path);

std::string channel_to_json(const Channel& c);

/// Distribution files: {"probs": [...]} or a single CSV line.
Distribution parse_distribution(std::string_view text);
Distribution load_distribution(const std::filesystem::path& path);

/// Reads a whole file; throws std::invalid_argument if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace sdpi

#endif  // SDPI_CHANNEL_IO_H
