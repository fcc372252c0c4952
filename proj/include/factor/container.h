/*
 * Copyright 2026 The FACTOR Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Binary embedding container.
//
// Layout (all integers little-endian):
//
//   offset  size  field
//   0       4     magic "FCTR"
//   4       2     format version (u16) = 1
//   6       1     dtype code (u8), 1 = f32
//   7       1     reserved (u8) = 0
//   8       4     dim (u32)
//   12      8     count (u64)
//   20      ...   count records:
//                   id length (u16), id bytes (UTF-8), dim x f32 (LE)
//
// Nothing may follow the last record.

#ifndef FACTOR_CONTAINER_H_
#define FACTOR_CONTAINER_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "factor/embedding.h"

namespace factor {

inline constexpr char kContainerMagic[4] = {'F', 'C', 'T', 'R'};
inline constexpr std::uint16_t kContainerVersion = 1;
inline constexpr std::uint8_t kDtypeF32 = 1;
inline constexpr std::size_t kContainerHeaderSize = 20;

// Serializes `set`. Throws InvalidArgument for an empty dim or an id longer
// than 65535 bytes.
std::vector<std::uint8_t> EncodeContainer(const EmbeddingSet& set);

// Parses a container image. Throws FormatError for a bad header, truncation,
// a count that disagrees with the payload, or trailing bytes; DegenerateVector
// or NonFiniteValue for invalid vectors; DuplicateRecord for repeated ids.
// When `expected_dim` is nonzero a different declared dim throws
// DimensionMismatch.
EmbeddingSet DecodeContainer(std::span<const std::uint8_t> bytes,
                             std::size_t expected_dim = 0);

// File variants. The writer goes through a temporary file and rename.
void WriteContainer(const EmbeddingSet& set, const std::filesystem::path& path);
EmbeddingSet ReadContainer(const std::filesystem::path& path,
                           std::size_t expected_dim = 0);

}  // namespace factor

#endif  // FACTOR_CONTAINER_H_
