#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace schubert {

/// Unsigned 128-bit counter with overflow-checked arithmetic.
///
/// Subdiagram and order-ideal tallies stay far below 2^128 at the sizes
/// this library sweeps, but the check costs nothing and turns a silent
/// wrap into a loud error.
class Count {
public:
    Count() = default;
    Count(std::uint64_t v) : v_(v) {}

    Count& operator+=(Count o) {
        unsigned __int128 s = v_ + o.v_;
        if (s < v_) throw std::overflow_error("Count: addition overflow");
        v_ = s;
        return *this;
    }

    Count& operator*=(Count o) {
        if (v_ != 0 && o.v_ != 0) {
            unsigned __int128 p = v_ * o.v_;
            if (p / v_ != o.v_) throw std::overflow_error("Count: multiplication overflow");
            v_ = p;
        } else {
            v_ = 0;
        }
        return *this;
    }

    friend Count operator+(Count a, Count b) { return a += b; }
    friend Count operator*(Count a, Count b) { return a *= b; }
    friend bool operator==(Count a, Count b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(Count a, Count b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Decimal form; the native type has no ostream or to_string support.
    std::string str() const {
        if (v_ == 0) return "0";
        std::string out;
        for (unsigned __int128 x = v_; x != 0; x /= 10)
            out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
        return out;
    }

    std::uint64_t low64() const { return static_cast<std::uint64_t>(v_); }
    bool fits64() const { return v_ <= ~std::uint64_t{0}; }

private:
    unsigned __int128 v_{0};
};

} // namespace schubert
