#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace thompsonv {

// A finite word over {0,1}. Ordering is dictionary order: e < 0 < 00 < 01 < 1 < ...
class BitString {
public:
    BitString() = default;
    // Throws Error(ParseError) on any symbol other than '0' or '1'.
    explicit BitString(std::string_view bits);

    static BitString zeros(std::size_t n) { return BitString(std::string(n, '0'), Trusted{}); }
    static BitString ones(std::size_t n) { return BitString(std::string(n, '1'), Trusted{}); }
    static BitString bit(int b) { return BitString(std::string(1, b ? '1' : '0'), Trusted{}); }
    // The k low-order bits of v, most significant first.
    static BitString from_uint(unsigned long long v, std::size_t k);

    std::size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }
    int operator[](std::size_t i) const { return s_[i] - '0'; }
    const std::string& str() const { return s_; }

    BitString prefix(std::size_t n) const { return BitString(s_.substr(0, n), Trusted{}); }
    BitString suffix_from(std::size_t n) const { return BitString(s_.substr(n), Trusted{}); }
    BitString without_last() const { return prefix(s_.size() - 1); }
    BitString reversed() const;
    BitString with(int b) const { return BitString(s_ + (b ? '1' : '0'), Trusted{}); }
    void push_back(int b) { s_.push_back(b ? '1' : '0'); }
    void pop_back() { s_.pop_back(); }

    bool is_prefix_of(const BitString& other) const {
        return s_.size() <= other.s_.size() && other.s_.compare(0, s_.size(), s_) == 0;
    }
    bool comparable(const BitString& other) const {
        return is_prefix_of(other) || other.is_prefix_of(*this);
    }

    BitString& operator+=(const BitString& o) { s_ += o.s_; return *this; }
    friend BitString operator+(BitString a, const BitString& b) { a += b; return a; }

    friend bool operator==(const BitString&, const BitString&) = default;
    friend std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
        return a.s_ <=> b.s_;
    }

    // Text form used by all file formats: "e" for the empty word.
    std::string text() const { return s_.empty() ? "e" : s_; }
    static BitString parse_text(std::string_view t);

private:
    struct Trusted {};
    BitString(std::string s, Trusted) : s_(std::move(s)) {}
    std::string s_;
};

inline bool is_prefix(const BitString& u, const BitString& v) { return u.is_prefix_of(v); }

}  // namespace thompsonv

template <>
struct std::hash<thompsonv::BitString> {
    std::size_t operator()(const thompsonv::BitString& b) const noexcept {
        return std::hash<std::string>{}(b.str());
    }
};
