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

#include "factor/container.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>

#include "factor/errors.h"

namespace factor {
namespace {

static_assert(sizeof(float) == 4 && std::numeric_limits<float>::is_iec559);

template <typename T>
void PutLe(std::vector<std::uint8_t>& out, T value) {
  using U = std::make_unsigned_t<T>;
  U u = static_cast<U>(value);
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<std::uint8_t>(u & 0xFF));
    u = static_cast<U>(u >> 8);
  }
}

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  template <typename T>
  T GetLe(const char* what) {
    Require(sizeof(T), what);
    std::make_unsigned_t<T> u = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      u |= static_cast<std::make_unsigned_t<T>>(
          static_cast<std::make_unsigned_t<T>>(bytes_[pos_ + i]) << (8 * i));
    }
    pos_ += sizeof(T);
    return static_cast<T>(u);
  }

  std::span<const std::uint8_t> Take(std::size_t n, const char* what) {
    Require(n, what);
    auto out = bytes_.subspan(pos_, n);
    pos_ += n;
    return out;
  }

  std::size_t remaining() const { return bytes_.size() - pos_; }
  std::size_t position() const { return pos_; }

 private:
  void Require(std::size_t n, const char* what) const {
    if (remaining() < n) {
      throw FormatError(std::string("truncated container: ") + what +
                        " at byte " + std::to_string(pos_) + " needs " +
                        std::to_string(n) + " bytes, " +
                        std::to_string(remaining()) + " left");
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> EncodeContainer(const EmbeddingSet& set) {
  if (set.dim() == 0) {
    throw InvalidArgument("cannot encode a container with dim 0");
  }
  if (set.dim() > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidArgument("dim does not fit in u32");
  }
  std::vector<std::uint8_t> out;
  out.reserve(kContainerHeaderSize + set.size() * (set.dim() * 4 + 16));
  out.insert(out.end(), std::begin(kContainerMagic), std::end(kContainerMagic));
  PutLe<std::uint16_t>(out, kContainerVersion);
  out.push_back(kDtypeF32);
  out.push_back(0);
  PutLe<std::uint32_t>(out, static_cast<std::uint32_t>(set.dim()));
  PutLe<std::uint64_t>(out, set.size());
  for (const auto& rec : set.records()) {
    if (rec.id.size() > std::numeric_limits<std::uint16_t>::max()) {
      throw InvalidArgument("record id longer than 65535 bytes");
    }
    PutLe<std::uint16_t>(out, static_cast<std::uint16_t>(rec.id.size()));
    out.insert(out.end(), rec.id.begin(), rec.id.end());
    for (float v : rec.embedding.values()) {
      PutLe<std::uint32_t>(out, std::bit_cast<std::uint32_t>(v));
    }
  }
  return out;
}

EmbeddingSet DecodeContainer(std::span<const std::uint8_t> bytes,
                             std::size_t expected_dim) {
  ByteReader in(bytes);
  auto magic = in.Take(4, "magic");
  if (std::memcmp(magic.data(), kContainerMagic, 4) != 0) {
    throw FormatError("bad magic: not an FCTR container");
  }
  const auto version = in.GetLe<std::uint16_t>("version");
  if (version != kContainerVersion) {
    throw FormatError("unsupported container version " +
                      std::to_string(version));
  }
  const auto dtype = in.GetLe<std::uint8_t>("dtype");
  if (dtype != kDtypeF32) {
    throw FormatError("unsupported dtype code " + std::to_string(dtype));
  }
  const auto reserved = in.GetLe<std::uint8_t>("reserved");
  if (reserved != 0) {
    throw FormatError("reserved header byte must be 0");
  }
  const std::size_t dim = in.GetLe<std::uint32_t>("dim");
  if (dim == 0) throw FormatError("container declares dim 0");
  if (expected_dim != 0 && dim != expected_dim) {
    throw DimensionMismatch("container dim " + std::to_string(dim) +
                            " does not match expected " +
                            std::to_string(expected_dim));
  }
  const std::uint64_t count = in.GetLe<std::uint64_t>("count");
  // Every record takes at least 2 + 4*dim bytes; reject impossible counts
  // before allocating anything.
  const std::uint64_t min_record = 2 + 4 * static_cast<std::uint64_t>(dim);
  if (count > in.remaining() / min_record) {
    throw FormatError("header count " + std::to_string(count) +
                      " exceeds what the payload can hold");
  }

  EmbeddingSet set(EncoderId{"", dim, ""});
  std::vector<float> values(dim);
  for (std::uint64_t r = 0; r < count; ++r) {
    const std::size_t id_len = in.GetLe<std::uint16_t>("record id length");
    auto id_bytes = in.Take(id_len, "record id");
    std::string id(reinterpret_cast<const char*>(id_bytes.data()), id_len);
    auto payload = in.Take(4 * dim, "record vector");
    for (std::size_t i = 0; i < dim; ++i) {
      std::uint32_t u = 0;
      for (std::size_t b = 0; b < 4; ++b) {
        u |= static_cast<std::uint32_t>(payload[4 * i + b]) << (8 * b);
      }
      values[i] = std::bit_cast<float>(u);
    }
    try {
      set.Add(std::move(id), Embedding(values));
    } catch (const DegenerateVector& e) {
      throw DegenerateVector("record " + std::to_string(r) + ": " + e.what());
    } catch (const NonFiniteValue& e) {
      throw NonFiniteValue("record " + std::to_string(r) + ": " + e.what());
    }
  }
  if (in.remaining() != 0) {
    throw FormatError(std::to_string(in.remaining()) +
                      " trailing bytes after the last declared record");
  }
  return set;
}

void WriteContainer(const EmbeddingSet& set,
                    const std::filesystem::path& path) {
  const auto bytes = EncodeContainer(set);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw IoError("cannot rename '" + tmp.string() + "': " + ec.message());
  }
}

EmbeddingSet ReadContainer(const std::filesystem::path& path,
                           std::size_t expected_dim) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open container '" + path.string() + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return DecodeContainer(bytes, expected_dim);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace factor
