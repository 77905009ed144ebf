// Copyright 2026 The tcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace thompson {

/// Base class of every error raised by the library.
struct Error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `position` is a byte offset into the input.
struct ParseError : Error {
    ParseError(const std::string &what, size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"), position(position) {}
    size_t position;
};

/// An operation was called with arguments outside its domain.
struct PreconditionError : Error {
    using Error::Error;
};

/// Exact rationals. Only used where non-dyadic values genuinely arise
/// (isolated fixed points, rotation numbers, test oracles).
using Rational = mpq_class;

/// A dyadic rational num / 2^exp, kept normalized (exp == 0 or num odd).
class Dyadic {
   public:
    Dyadic() = default;
    Dyadic(long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    Dyadic(mpz_class num, uint32_t exp);

    /// 2^k for any integer k.
    static Dyadic pow2(int64_t k);
    /// Parses "a/b" (b a power of two), "num/2^exp", or a bare integer.
    static Dyadic parse(std::string_view text);

    const mpz_class &num() const { return num_; }
    uint32_t exp() const { return exp_; }

    Dyadic operator-() const;
    friend Dyadic operator+(const Dyadic &a, const Dyadic &b);
    friend Dyadic operator-(const Dyadic &a, const Dyadic &b);
    friend Dyadic operator*(const Dyadic &a, const Dyadic &b);
    Dyadic &operator+=(const Dyadic &o) { return *this = *this + o; }
    Dyadic &operator-=(const Dyadic &o) { return *this = *this - o; }

    friend bool operator==(const Dyadic &a, const Dyadic &b) { return a.exp_ == b.exp_ && a.num_ == b.num_; }
    friend std::strong_ordering operator<=>(const Dyadic &a, const Dyadic &b);

    /// this * 2^k.
    Dyadic mul_pow2(int64_t k) const;
    /// Largest integer <= this.
    mpz_class floor() const;
    /// this - floor(this), in [0, 1).
    Dyadic frac() const;
    int sign() const { return sgn(num_); }
    bool is_integer() const { return exp_ == 0; }

    /// k such that this == 2^k, if there is one.
    std::optional<int64_t> log2() const;
    /// True iff this is an integer multiple of 2^k.
    bool is_multiple_of_pow2(int64_t k) const;

    Rational to_rational() const;
    /// "a/b" with b a power of two; integers render without a denominator.
    std::string str() const;
    /// "num/2^exp".
    std::string str_pow() const;

   private:
    void normalize();

    mpz_class num_{0};
    uint32_t exp_ = 0;
};

/// k such that a / b == 2^k, if the ratio is a positive power of two.
std::optional<int64_t> log2_ratio(const Dyadic &a, const Dyadic &b);

std::ostream &operator<<(std::ostream &out, const Dyadic &d);

/// A point of the circle R/Z, stored by its representative in [0, 1).
class CirclePoint {
   public:
    CirclePoint() = default;
    CirclePoint(const Dyadic &x) : pos_(x.frac()) {}  // NOLINT(google-explicit-constructor)
    CirclePoint(long x) : pos_(Dyadic(x).frac()) {}   // NOLINT(google-explicit-constructor)

    const Dyadic &pos() const { return pos_; }
    friend bool operator==(const CirclePoint &, const CirclePoint &) = default;
    friend CirclePoint operator+(const CirclePoint &a, const Dyadic &t) { return CirclePoint(a.pos_ + t); }
    friend CirclePoint operator-(const CirclePoint &a, const Dyadic &t) { return CirclePoint(a.pos_ - t); }

    /// Length in (0, 1] of the counterclockwise arc from this to `to`;
    /// equal points give the full turn.
    Dyadic arc_length_to(const CirclePoint &to) const;
    std::string str() const { return pos_.str(); }

   private:
    Dyadic pos_;
};

std::ostream &operator<<(std::ostream &out, const CirclePoint &p);

/// True iff walking counterclockwise from a, b is met strictly before c.
/// Requires a != c.
bool circ_between(const CirclePoint &a, const CirclePoint &b, const CirclePoint &c);

/// The point at fraction t along the counterclockwise arc from a to b.
/// Requires a != b and 0 <= t <= 1.
CirclePoint circ_interp(const CirclePoint &a, const CirclePoint &b, const Dyadic &t);

/// True iff the points are pairwise distinct and occur in this
/// counterclockwise order starting from the first.
bool circ_chain(const std::vector<CirclePoint> &points);

/// Rational counterparts of the circle helpers, used by support/fixed-point code.
Rational rational_frac(const Rational &x);
/// (to - from) mod 1, in [0, 1).
Rational circ_offset(const Rational &from, const Rational &to);

}  // namespace thompson
