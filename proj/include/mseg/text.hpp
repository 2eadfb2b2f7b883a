#pragma once

#include <cctype>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "multisegment.hpp"

namespace mseg {

/// Malformed text input. `position()` is the 0-based offset into the
/// original string where parsing failed.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
            ++i_;
        }
    }
    bool at_end() {
        skip_ws();
        return i_ == s_.size();
    }
    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++i_;
    }
    int integer() {
        skip_ws();
        std::size_t start = i_;
        bool neg = false;
        if (i_ < s_.size() && s_[i_] == '-') {
            neg = true;
            ++i_;
            skip_ws();
        }
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            i_ = start;
            fail("expected integer");
        }
        long long v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            v = v * 10 + (s_[i_] - '0');
            if (v > std::numeric_limits<int>::max()) {
                i_ = start;
                fail("integer out of range");
            }
            ++i_;
        }
        return static_cast<int>(neg ? -v : v);
    }
    std::size_t pos() {
        skip_ws();
        return i_;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos()); }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

inline Segment segment(Lexer& lx) {
    std::size_t start = lx.pos();
    lx.expect('[');
    int a = lx.integer();
    int b = a;
    if (lx.peek() == ',') {
        lx.expect(',');
        b = lx.integer();
    }
    lx.expect(']');
    if (b < a) {
        throw ParseError("empty segment", start);
    }
    return Segment(a, b);
}

}  // namespace detail

/// `[a,b]` or `[a]`, whitespace-insensitive.
inline Segment parse_segment(std::string_view text) {
    detail::Lexer lx(text);
    Segment d = detail::segment(lx);
    if (!lx.at_end()) {
        lx.fail("trailing input");
    }
    return d;
}

/// `0` for the empty multisegment, otherwise `+`-separated segments in any
/// order.
inline Multisegment parse_multisegment(std::string_view text) {
    detail::Lexer lx(text);
    if (lx.at_end()) {
        lx.fail("expected multisegment");
    }
    if (lx.peek() == '0') {
        lx.expect('0');
        if (!lx.at_end()) {
            lx.fail("trailing input after empty multisegment");
        }
        return {};
    }
    std::vector<Segment> segs;
    segs.push_back(detail::segment(lx));
    while (!lx.at_end()) {
        lx.expect('+');
        segs.push_back(detail::segment(lx));
    }
    return Multisegment(std::move(segs));
}

inline std::string format_segment(const Segment& d) {
    if (d.a() == d.b()) {
        return "[" + std::to_string(d.a()) + "]";
    }
    return "[" + std::to_string(d.a()) + "," + std::to_string(d.b()) + "]";
}

/// Ordered sequence of segments joined by `+` (no reordering).
inline std::string format_sequence(std::span<const Segment> seq) {
    if (seq.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& d : seq) {
        if (!out.empty()) {
            out += '+';
        }
        out += format_segment(d);
    }
    return out;
}

inline std::string format_multisegment(const Multisegment& m) { return format_sequence(m.segments()); }

}  // namespace mseg
