#pragma once

#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dcnet {

using Bytes = std::vector<uint8_t>;

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline std::string to_string(const Bytes& b) {
    return std::string(b.begin(), b.end());
}

inline std::string hex_encode(std::span<const uint8_t> b) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(b.size() * 2);
    for (uint8_t v : b) {
        out.push_back(digits[v >> 4]);
        out.push_back(digits[v & 0xf]);
    }
    return out;
}

inline Bytes hex_decode(std::string_view s) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (s.size() % 2 != 0) throw std::invalid_argument("hex: odd length");
    Bytes out(s.size() / 2);
    for (size_t i = 0; i < out.size(); i++) {
        int hi = nibble(s[2 * i]), lo = nibble(s[2 * i + 1]);
        if (hi < 0 || lo < 0) throw std::invalid_argument("hex: bad digit");
        out[i] = static_cast<uint8_t>(hi << 4 | lo);
    }
    return out;
}

/// Incremental big-endian serializer used by every wire format in the
/// toolkit. All multi-byte integers are big-endian.
class ByteWriter {
  public:
    void u8(uint8_t v) { buf_.push_back(v); }
    void u16(uint16_t v) {
        buf_.push_back(static_cast<uint8_t>(v >> 8));
        buf_.push_back(static_cast<uint8_t>(v));
    }
    void u32(uint32_t v) {
        for (int i = 3; i >= 0; i--) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    void u64(uint64_t v) {
        for (int i = 7; i >= 0; i--) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    void raw(std::span<const uint8_t> b) { buf_.insert(buf_.end(), b.begin(), b.end()); }
    void raw(const Bytes& b) { buf_.insert(buf_.end(), b.begin(), b.end()); }
    /// u32 length prefix followed by the bytes.
    void blob(std::span<const uint8_t> b) {
        u32(static_cast<uint32_t>(b.size()));
        raw(b);
    }
    void str(std::string_view s) {
        u32(static_cast<uint32_t>(s.size()));
        buf_.insert(buf_.end(), s.begin(), s.end());
    }

    const Bytes& bytes() const { return buf_; }
    Bytes take() { return std::move(buf_); }

  private:
    Bytes buf_;
};

/// Matching reader. Throws ParseError on truncation or malformed input so
/// protocol code can map any failure to the "un-parseable message" case.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class ByteReader {
  public:
    explicit ByteReader(std::span<const uint8_t> b) : data_(b) {}

    uint8_t u8() { return take(1)[0]; }
    uint16_t u16() {
        auto b = take(2);
        return static_cast<uint16_t>(b[0]) << 8 | b[1];
    }
    uint32_t u32() {
        auto b = take(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; i++) v = v << 8 | b[i];
        return v;
    }
    uint64_t u64() {
        auto b = take(8);
        uint64_t v = 0;
        for (int i = 0; i < 8; i++) v = v << 8 | b[i];
        return v;
    }
    Bytes raw(size_t n) {
        auto b = take(n);
        return Bytes(b.begin(), b.end());
    }
    Bytes blob() {
        uint32_t n = u32();
        if (n > remaining()) throw ParseError("blob length exceeds input");
        return raw(n);
    }
    std::string str() {
        Bytes b = blob();
        return std::string(b.begin(), b.end());
    }

    size_t remaining() const { return data_.size() - pos_; }
    bool done() const { return remaining() == 0; }
    void expect_done() const {
        if (!done()) throw ParseError("trailing bytes");
    }

  private:
    std::span<const uint8_t> take(size_t n) {
        if (n > remaining()) throw ParseError("input truncated");
        auto s = data_.subspan(pos_, n);
        pos_ += n;
        return s;
    }
    std::span<const uint8_t> data_;
    size_t pos_ = 0;
};

inline Bytes base64_encode(std::span<const uint8_t> in) {
    static const char* tbl = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
    Bytes out;
    out.reserve((in.size() + 2) / 3 * 4);
    size_t i = 0;
    for (; i + 3 <= in.size(); i += 3) {
        uint32_t v = in[i] << 16 | in[i + 1] << 8 | in[i + 2];
        out.push_back(tbl[v >> 18]);
        out.push_back(tbl[(v >> 12) & 63]);
        out.push_back(tbl[(v >> 6) & 63]);
        out.push_back(tbl[v & 63]);
    }
    if (i + 1 == in.size()) {
        uint32_t v = in[i] << 16;
        out.push_back(tbl[v >> 18]);
        out.push_back(tbl[(v >> 12) & 63]);
        out.push_back('=');
        out.push_back('=');
    } else if (i + 2 == in.size()) {
        uint32_t v = in[i] << 16 | in[i + 1] << 8;
        out.push_back(tbl[v >> 18]);
        out.push_back(tbl[(v >> 12) & 63]);
        out.push_back(tbl[(v >> 6) & 63]);
        out.push_back('=');
    }
    return out;
}

inline Bytes base64_decode(std::string_view in) {
    auto val = [](char c) -> int {
        if (c >= 'A' && c <= 'Z') return c - 'A';
        if (c >= 'a' && c <= 'z') return c - 'a' + 26;
        if (c >= '0' && c <= '9') return c - '0' + 52;
        if (c == '+') return 62;
        if (c == '/') return 63;
        return -1;
    };
    if (in.size() % 4 != 0) throw ParseError("base64: bad length");
    Bytes out;
    for (size_t i = 0; i < in.size(); i += 4) {
        int pad = 0;
        uint32_t v = 0;
        for (int k = 0; k < 4; k++) {
            char c = in[i + k];
            if (c == '=') {
                if (i + 4 != in.size() || k < 2) throw ParseError("base64: bad padding");
                pad++;
                v <<= 6;
            } else {
                int d = val(c);
                if (d < 0 || pad > 0) throw ParseError("base64: bad digit");
                v = v << 6 | static_cast<uint32_t>(d);
            }
        }
        out.push_back(static_cast<uint8_t>(v >> 16));
        if (pad < 2) out.push_back(static_cast<uint8_t>(v >> 8));
        if (pad < 1) out.push_back(static_cast<uint8_t>(v));
    }
    return out;
}

}  // namespace dcnet
