// Copyright 2026 The mwkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mw {

using Bytes = std::vector<uint8_t>;
using BytesView = std::span<const uint8_t>;

std::string hex_encode(BytesView data);
Bytes hex_decode(const std::string& hex);  // throws std::invalid_argument

Bytes sha256(BytesView data);

/// Canonical binary encoder: fixed big-endian integers, length-prefixed
/// blobs. Used for everything that gets hashed or signed, so the layout
/// must never change.
class ByteWriter {
public:
    void u8(uint8_t v) { out_.push_back(v); }
    void u32(uint32_t v);
    void u64(uint64_t v);
    void raw(BytesView data) { out_.insert(out_.end(), data.begin(), data.end()); }
    void blob(BytesView data);  // u32 length + raw bytes
    void str(const std::string& s);

    const Bytes& bytes() const { return out_; }
    Bytes take() { return std::move(out_); }

private:
    Bytes out_;
};

/// Mirror of ByteWriter. Throws std::out_of_range on truncated input.
class ByteReader {
public:
    explicit ByteReader(BytesView data) : data_(data) {}

    uint8_t u8();
    uint32_t u32();
    uint64_t u64();
    Bytes raw(size_t len);
    Bytes blob();

    bool done() const { return pos_ == data_.size(); }
    size_t remaining() const { return data_.size() - pos_; }

private:
    void need(size_t len) const;
    BytesView data_;
    size_t pos_ = 0;
};

}  // namespace mw
