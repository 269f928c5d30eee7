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
#include <string_view>

namespace peyv {

// Decodes UTF-8 into a codepoint sequence. Invalid sequences (truncation,
// overlong forms, surrogates, codepoints past U+10FFFF) raise ParseError;
// input is never silently replaced.
std::u32string utf8_decode(std::string_view bytes);

// Encodes a codepoint sequence back to UTF-8.
std::string utf8_encode(std::u32string_view text);

} // namespace peyv
