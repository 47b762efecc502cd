// Copyright 2026 The grantgame Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace grantgame {

/// Exact fraction over 64-bit integers, always kept in lowest terms with a
/// positive denominator. Intermediate products are formed in 128 bits; a
/// result that does not fit back into 64 bits throws std::overflow_error.
class Rational {
public:
    using int_type = std::int64_t;

    constexpr Rational() noexcept = default;
    constexpr Rational(int_type value) noexcept : num_(value) {}  // NOLINT(implicit)
    constexpr Rational(int_type num, int_type den) { assign(num, den); }

    [[nodiscard]] constexpr int_type num() const noexcept { return num_; }
    [[nodiscard]] constexpr int_type den() const noexcept { return den_; }
    [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }
    [[nodiscard]] constexpr bool is_zero() const noexcept { return num_ == 0; }
    [[nodiscard]] constexpr int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

    [[nodiscard]] double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// "p/q", or "p" when the value is an integer.
    [[nodiscard]] std::string str() const {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "p", "-p", "p/q" with optional surrounding blanks.
    static Rational parse(std::string_view text) {
        auto trim = [](std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
            return s;
        };
        text = trim(text);
        auto slash = text.find('/');
        int_type n = parse_int(trim(text.substr(0, slash)));
        int_type d = 1;
        if (slash != std::string_view::npos) d = parse_int(trim(text.substr(slash + 1)));
        if (d == 0) throw std::invalid_argument("rational with zero denominator: " + std::string(text));
        return Rational(n, d);
    }

    friend constexpr Rational operator+(const Rational& a, const Rational& b) {
        if (a.den_ == b.den_) return from_wide(static_cast<wide>(a.num_) + b.num_, a.den_);
        return from_wide(static_cast<wide>(a.num_) * b.den_ + static_cast<wide>(b.num_) * a.den_,
                         static_cast<wide>(a.den_) * b.den_);
    }
    friend constexpr Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend constexpr Rational operator*(const Rational& a, const Rational& b) {
        return from_wide(static_cast<wide>(a.num_) * b.num_, static_cast<wide>(a.den_) * b.den_);
    }
    friend constexpr Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from_wide(static_cast<wide>(a.num_) * b.den_, static_cast<wide>(a.den_) * b.num_);
    }
    constexpr Rational operator-() const {
        if (num_ == std::numeric_limits<int_type>::min()) throw std::overflow_error("rational negation");
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    constexpr Rational& operator+=(const Rational& o) { return *this = *this + o; }
    constexpr Rational& operator-=(const Rational& o) { return *this = *this - o; }
    constexpr Rational& operator*=(const Rational& o) { return *this = *this * o; }
    constexpr Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
        if (a.den_ == b.den_) return a.num_ <=> b.num_;
        return static_cast<wide>(a.num_) * b.den_ <=> static_cast<wide>(b.num_) * a.den_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    __extension__ typedef __int128 wide;

    static constexpr wide wide_gcd(wide a, wide b) noexcept {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            wide t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static constexpr Rational from_wide(wide n, wide d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        wide g = wide_gcd(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr wide lo = std::numeric_limits<int_type>::min();
        constexpr wide hi = std::numeric_limits<int_type>::max();
        if (n < lo || n > hi || d > hi) throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<int_type>(n);
        r.den_ = static_cast<int_type>(d);
        return r;
    }

    constexpr void assign(int_type n, int_type d) { *this = from_wide(n, d); }

    static int_type parse_int(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty rational component");
        std::size_t pos = 0;
        bool neg = false;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            pos = 1;
        }
        if (pos == s.size()) throw std::invalid_argument("malformed rational: " + std::string(s));
        wide v = 0;
        for (; pos < s.size(); ++pos) {
            char c = s[pos];
            if (c < '0' || c > '9') throw std::invalid_argument("malformed rational: " + std::string(s));
            v = v * 10 + (c - '0');
            if (v > static_cast<wide>(std::numeric_limits<int_type>::max()))
                throw std::overflow_error("rational component out of range: " + std::string(s));
        }
        return static_cast<int_type>(neg ? -v : v);
    }

    int_type num_ = 0;
    int_type den_ = 1;
};

}  // namespace grantgame
