/*
   Copyright 2026 The Azumaya Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef AZUMAYA_RATIONAL_HPP
#define AZUMAYA_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "azumaya/error.hpp"

namespace azumaya {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator (GMP keeps mpq_class canonical for us).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den) {
        if (den == 0) throw arithmetic_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    static Rat from_string(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw parse_error("bad rational literal: '" + s + "'");
        if (v.get_den() == 0) throw arithmetic_error("rational with zero denominator");
        v.canonicalize();
        return Rat(std::move(v));
    }

    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw arithmetic_error("rational division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    Rat inverse() const {
        if (is_zero()) throw arithmetic_error("inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    Rat pow(unsigned e) const {
        Rat r(1), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= b;
            if (e > 1) b *= b;
        }
        return r;
    }

    /// Exact square root, when the value is a square in Q.
    std::optional<Rat> sqrt() const {
        if (sign() < 0) return std::nullopt;
        mpz_class n = v_.get_num(), d = v_.get_den();
        if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
        if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return Rat(mpq_class(rn, rd));
    }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    std::string to_string() const { return v_.get_str(); }

private:
    mpq_class v_;
};

/// Prime-field element; the modulus travels with the value so fields with
/// different p cannot be mixed silently.
class Fp {
public:
    Fp(uint64_t p, uint64_t v) : p_(p), v_(v % p) {
        if (p < 2) throw arithmetic_error("modulus must be >= 2");
    }
    static Fp from_int(uint64_t p, long long v) {
        long long m = v % static_cast<long long>(p);
        if (m < 0) m += static_cast<long long>(p);
        return Fp(p, static_cast<uint64_t>(m));
    }
    /// Reduction of an exact rational, defined when p does not divide the denominator.
    static Fp from_rat(uint64_t p, const Rat& r) {
        mpz_class num = r.numerator(), den = r.denominator(), pm(static_cast<unsigned long>(p));
        mpz_class dm = den % pm;
        if (dm == 0) throw arithmetic_error("denominator not invertible mod " + std::to_string(p));
        mpz_class nm = num % pm;
        if (nm < 0) nm += pm;
        Fp result(p, nm.get_ui());
        return result * Fp(p, dm.get_ui()).inverse();
    }

    uint64_t p() const { return p_; }
    uint64_t value() const { return v_; }

    Fp zero() const { return Fp(p_, 0); }
    Fp one() const { return Fp(p_, 1); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return Fp(p_, v_ == 0 ? 0 : p_ - v_); }
    Fp operator+(const Fp& o) const { check(o); return Fp(p_, (v_ + o.v_) % p_); }
    Fp operator-(const Fp& o) const { check(o); return Fp(p_, (v_ + p_ - o.v_) % p_); }
    Fp operator*(const Fp& o) const {
        check(o);
        return Fp(p_, static_cast<uint64_t>((static_cast<__uint128_t>(v_) * o.v_) % p_));
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inverse() const {
        if (v_ == 0) throw arithmetic_error("inverse of zero in F_" + std::to_string(p_));
        return pow(p_ - 2);
    }

    Fp pow(uint64_t e) const {
        Fp r(p_, 1), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= b;
            b *= b;
        }
        return r;
    }

    bool is_square() const {
        if (v_ == 0) return true;
        if (p_ == 2) return true;
        return pow((p_ - 1) / 2).is_one();
    }
    /// Smallest square root by value scan; fine for the small oracle primes.
    std::optional<Fp> sqrt() const {
        for (uint64_t r = 0; r < p_; ++r)
            if ((static_cast<__uint128_t>(r) * r) % p_ == v_) return Fp(p_, r);
        return std::nullopt;
    }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string to_string() const { return std::to_string(v_); }

private:
    void check(const Fp& o) const {
        if (p_ != o.p_) throw arithmetic_error("mixed prime fields");
    }
    uint64_t p_;
    uint64_t v_;
};

/// Quadratic extension F_p(sqrt(rad)) for a non-square rad; used as the
/// specialization target of K = Q(sqrt(x), y) at points where x0 is not a
/// square mod p.
class FpQuad {
public:
    FpQuad(Fp re, Fp im, Fp rad) : re_(re), im_(im), rad_(rad) {
        if (rad.is_zero() || rad.is_square())
            throw arithmetic_error("radicand must be a non-square for a field extension");
    }

    const Fp& re() const { return re_; }
    const Fp& im() const { return im_; }
    const Fp& rad() const { return rad_; }
    uint64_t p() const { return rad_.p(); }

    FpQuad zero() const { return FpQuad(re_.zero(), re_.zero(), rad_); }
    FpQuad one() const { return FpQuad(re_.one(), re_.zero(), rad_); }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }

    FpQuad operator-() const { return FpQuad(-re_, -im_, rad_); }
    FpQuad operator+(const FpQuad& o) const { return FpQuad(re_ + o.re_, im_ + o.im_, rad_); }
    FpQuad operator-(const FpQuad& o) const { return FpQuad(re_ - o.re_, im_ - o.im_, rad_); }
    FpQuad operator*(const FpQuad& o) const {
        return FpQuad(re_ * o.re_ + rad_ * im_ * o.im_, re_ * o.im_ + im_ * o.re_, rad_);
    }
    FpQuad operator/(const FpQuad& o) const { return *this * o.inverse(); }

    FpQuad inverse() const {
        Fp n = re_ * re_ - rad_ * im_ * im_;
        if (n.is_zero()) throw arithmetic_error("inverse of zero in F_p(sqrt)");
        Fp ni = n.inverse();
        return FpQuad(re_ * ni, -(im_ * ni), rad_);
    }

    FpQuad conj() const { return FpQuad(re_, -im_, rad_); }

    bool operator==(const FpQuad& o) const { return re_ == o.re_ && im_ == o.im_ && rad_ == o.rad_; }
    bool operator!=(const FpQuad& o) const { return !(*this == o); }

    std::string to_string() const {
        return "(" + re_.to_string() + ") + (" + im_.to_string() + ")*r";
    }

private:
    Fp re_, im_;
    Fp rad_;
};

} // namespace azumaya

#endif
