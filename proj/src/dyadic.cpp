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

#include "thompson/dyadic.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace thompson {

namespace {

mpz_class shifted(const mpz_class &v, uint32_t bits) {
    mpz_class r;
    mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), bits);
    return r;
}

// Strips the power of two from v != 0; returns (odd part, valuation).
std::pair<mpz_class, uint64_t> split_two(const mpz_class &v) {
    uint64_t k = mpz_scan1(v.get_mpz_t(), 0);
    mpz_class odd;
    mpz_tdiv_q_2exp(odd.get_mpz_t(), v.get_mpz_t(), k);
    return {odd, k};
}

mpz_class parse_integer(std::string_view text, size_t offset) {
    size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        i++;
    }
    if (i == text.size()) {
        throw ParseError("expected an integer", offset + i);
    }
    for (size_t j = i; j < text.size(); j++) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw ParseError("unexpected character '" + std::string(1, text[j]) + "' in integer", offset + j);
        }
    }
    std::string s(text);
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    return mpz_class(s, 10);
}

}  // namespace

Dyadic::Dyadic(mpz_class num, uint32_t exp) : num_(std::move(num)), exp_(exp) { normalize(); }

void Dyadic::normalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    if (exp_ == 0) {
        return;
    }
    uint64_t k = std::min<uint64_t>(mpz_scan1(num_.get_mpz_t(), 0), exp_);
    if (k > 0) {
        mpz_tdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), k);
        exp_ -= static_cast<uint32_t>(k);
    }
}

Dyadic Dyadic::pow2(int64_t k) {
    if (k >= 0) {
        return Dyadic(shifted(1, static_cast<uint32_t>(k)), 0);
    }
    return Dyadic(1, static_cast<uint32_t>(-k));
}

Dyadic Dyadic::parse(std::string_view text) {
    size_t lead = 0;
    while (lead < text.size() && std::isspace(static_cast<unsigned char>(text[lead]))) {
        lead++;
    }
    size_t end = text.size();
    while (end > lead && std::isspace(static_cast<unsigned char>(text[end - 1]))) {
        end--;
    }
    std::string_view body = text.substr(lead, end - lead);
    size_t slash = body.find('/');
    if (slash == std::string_view::npos) {
        return Dyadic(parse_integer(body, lead), 0);
    }
    mpz_class num = parse_integer(body.substr(0, slash), lead);
    std::string_view den = body.substr(slash + 1);
    size_t den_offset = lead + slash + 1;
    if (den.starts_with("2^")) {
        mpz_class e = parse_integer(den.substr(2), den_offset + 2);
        if (e < 0 || !e.fits_uint_p() || e > 1u << 24) {
            throw ParseError("exponent out of range", den_offset + 2);
        }
        return Dyadic(num, static_cast<uint32_t>(e.get_ui()));
    }
    mpz_class d = parse_integer(den, den_offset);
    if (d <= 0) {
        throw ParseError("denominator must be positive", den_offset);
    }
    auto [odd, k] = split_two(d);
    if (odd != 1) {
        throw ParseError("denominator " + d.get_str() + " is not a power of two", den_offset);
    }
    return Dyadic(num, static_cast<uint32_t>(k));
}

Dyadic Dyadic::operator-() const {
    Dyadic r = *this;
    r.num_ = -r.num_;
    return r;
}

Dyadic operator+(const Dyadic &a, const Dyadic &b) {
    uint32_t e = std::max(a.exp_, b.exp_);
    return Dyadic(shifted(a.num_, e - a.exp_) + shifted(b.num_, e - b.exp_), e);
}

Dyadic operator-(const Dyadic &a, const Dyadic &b) {
    uint32_t e = std::max(a.exp_, b.exp_);
    return Dyadic(shifted(a.num_, e - a.exp_) - shifted(b.num_, e - b.exp_), e);
}

Dyadic operator*(const Dyadic &a, const Dyadic &b) { return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_); }

std::strong_ordering operator<=>(const Dyadic &a, const Dyadic &b) {
    uint32_t e = std::max(a.exp_, b.exp_);
    int c = cmp(shifted(a.num_, e - a.exp_), shifted(b.num_, e - b.exp_));
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

Dyadic Dyadic::mul_pow2(int64_t k) const {
    if (num_ == 0) {
        return *this;
    }
    if (k >= 0) {
        if (static_cast<uint64_t>(k) <= exp_) {
            return Dyadic(num_, exp_ - static_cast<uint32_t>(k));
        }
        return Dyadic(shifted(num_, static_cast<uint32_t>(k - exp_)), 0);
    }
    return Dyadic(num_, exp_ + static_cast<uint32_t>(-k));
}

mpz_class Dyadic::floor() const {
    mpz_class r;
    mpz_fdiv_q_2exp(r.get_mpz_t(), num_.get_mpz_t(), exp_);
    return r;
}

Dyadic Dyadic::frac() const {
    mpz_class r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), num_.get_mpz_t(), exp_);
    return Dyadic(r, exp_);
}

std::optional<int64_t> Dyadic::log2() const {
    if (num_ <= 0) {
        return std::nullopt;
    }
    auto [odd, k] = split_two(num_);
    if (odd != 1) {
        return std::nullopt;
    }
    return static_cast<int64_t>(k) - static_cast<int64_t>(exp_);
}

bool Dyadic::is_multiple_of_pow2(int64_t k) const {
    if (num_ == 0) {
        return true;
    }
    int64_t valuation = static_cast<int64_t>(mpz_scan1(num_.get_mpz_t(), 0)) - static_cast<int64_t>(exp_);
    return valuation >= k;
}

Rational Dyadic::to_rational() const {
    Rational r(num_, shifted(1, exp_));
    r.canonicalize();
    return r;
}

std::string Dyadic::str() const {
    if (exp_ == 0) {
        return num_.get_str();
    }
    return num_.get_str() + "/" + shifted(1, exp_).get_str();
}

std::string Dyadic::str_pow() const { return num_.get_str() + "/2^" + std::to_string(exp_); }

std::optional<int64_t> log2_ratio(const Dyadic &a, const Dyadic &b) {
    if (a.sign() == 0 || b.sign() == 0 || a.sign() != b.sign()) {
        return std::nullopt;
    }
    auto [oa, ka] = split_two(a.num());
    auto [ob, kb] = split_two(b.num());
    if (oa != ob) {
        return std::nullopt;
    }
    return static_cast<int64_t>(ka) - static_cast<int64_t>(kb) - static_cast<int64_t>(a.exp()) +
           static_cast<int64_t>(b.exp());
}

std::ostream &operator<<(std::ostream &out, const Dyadic &d) { return out << d.str(); }

Dyadic CirclePoint::arc_length_to(const CirclePoint &to) const {
    Dyadic d = (to.pos_ - pos_).frac();
    return d.sign() == 0 ? Dyadic(1) : d;
}

std::ostream &operator<<(std::ostream &out, const CirclePoint &p) { return out << p.pos(); }

bool circ_between(const CirclePoint &a, const CirclePoint &b, const CirclePoint &c) {
    if (a == c) {
        throw PreconditionError("circ_between: degenerate arc, a == c");
    }
    Dyadic ob = (b.pos() - a.pos()).frac();
    Dyadic oc = (c.pos() - a.pos()).frac();
    return ob.sign() > 0 && ob < oc;
}

CirclePoint circ_interp(const CirclePoint &a, const CirclePoint &b, const Dyadic &t) {
    if (a == b) {
        throw PreconditionError("circ_interp: degenerate arc, a == b");
    }
    if (t < Dyadic(0) || t > Dyadic(1)) {
        throw PreconditionError("circ_interp: fraction " + t.str() + " outside [0,1]");
    }
    return a + t * a.arc_length_to(b);
}

bool circ_chain(const std::vector<CirclePoint> &points) {
    if (points.empty()) {
        return true;
    }
    Dyadic prev(0);
    for (size_t i = 1; i < points.size(); i++) {
        Dyadic off = (points[i].pos() - points[0].pos()).frac();
        if (off <= prev) {
            return false;
        }
        prev = off;
    }
    return true;
}

Rational rational_frac(const Rational &x) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Rational r = x - Rational(fl);
    r.canonicalize();
    return r;
}

Rational circ_offset(const Rational &from, const Rational &to) { return rational_frac(to - from); }

}  // namespace thompson
