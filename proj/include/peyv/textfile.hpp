/*
 * Copyright 2026 The Peyv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <vector>

namespace peyv {

// Whole file as bytes. Throws IoError if the file cannot be read.
std::string read_file(const std::string& path);

// File split on '\n', with trailing '\r' and a UTF-8 BOM on the first line
// removed. A trailing newline does not produce an extra empty line.
std::vector<std::string> read_lines(const std::string& path);

// The same splitting applied to an in-memory buffer.
std::vector<std::string> split_lines(const std::string& data);

// Writes bytes, replacing any existing file. Throws IoError on failure.
void write_file(const std::string& path, const std::string& data);

// Splits on a single delimiter byte; returns one empty field for "".
std::vector<std::string> split(const std::string& line, char delim);

} // namespace peyv
