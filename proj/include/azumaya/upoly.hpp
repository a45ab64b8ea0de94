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

#ifndef AZUMAYA_UPOLY_HPP
#define AZUMAYA_UPOLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "azumaya/field.hpp"

namespace azumaya {

/// Dense univariate polynomial over a field. Coefficients ascend by degree;
/// the zero polynomial is the empty vector.
template <Field F>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly constant(const F& c) {
        if (c.is_zero()) return UPoly();
        return UPoly(std::vector<F>{c});
    }
    /// c * t^k
    static UPoly monomial(const F& c, size_t k) {
        if (c.is_zero()) return UPoly();
        std::vector<F> v(k + 1, c.zero());
        v[k] = c;
        return UPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }
    const F& leading() const {
        if (is_zero()) throw arithmetic_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    F coeff(size_t k, const F& zero) const { return k < c_.size() ? c_[k] : zero; }

    UPoly operator-() const {
        std::vector<F> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(-c);
        return UPoly(std::move(v));
    }

    UPoly operator+(const UPoly& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        const F z = c_[0].zero();
        std::vector<F> v;
        size_t n = std::max(c_.size(), o.c_.size());
        v.reserve(n);
        for (size_t i = 0; i < n; ++i) v.push_back(coeff(i, z) + o.coeff(i, z));
        return UPoly(std::move(v));
    }
    UPoly operator-(const UPoly& o) const { return *this + (-o); }

    UPoly operator*(const UPoly& o) const {
        if (is_zero() || o.is_zero()) return UPoly();
        const F z = c_[0].zero();
        std::vector<F> v(c_.size() + o.c_.size() - 1, z);
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
        return UPoly(std::move(v));
    }

    UPoly scaled(const F& s) const {
        if (s.is_zero()) return UPoly();
        std::vector<F> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(c * s);
        return UPoly(std::move(v));
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return scaled(leading().inverse());
    }

    /// Quotient and remainder by a nonzero divisor.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw arithmetic_error("polynomial division by zero");
        if (is_zero() || degree() < d.degree()) return {UPoly(), *this};
        const F z = c_[0].zero();
        F lcinv = d.leading().inverse();
        std::vector<F> rem = c_;
        std::vector<F> quo(static_cast<size_t>(degree() - d.degree()) + 1, z);
        for (long k = degree(); k >= d.degree(); --k) {
            F q = rem[static_cast<size_t>(k)] * lcinv;
            if (q.is_zero()) continue;
            quo[static_cast<size_t>(k - d.degree())] = q;
            for (long j = 0; j <= d.degree(); ++j)
                rem[static_cast<size_t>(k - d.degree() + j)] =
                    rem[static_cast<size_t>(k - d.degree() + j)] - q * d.c_[static_cast<size_t>(j)];
        }
        return {UPoly(std::move(quo)), UPoly(std::move(rem))};
    }

    UPoly divexact(const UPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw arithmetic_error("inexact polynomial division");
        return q;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        const F z = c_[0].zero();
        const F one = c_[0].one();
        std::vector<F> v;
        v.reserve(c_.size() - 1);
        F k = one;
        for (size_t i = 1; i < c_.size(); ++i) {
            v.push_back(c_[i] * k);
            k = k + one;
        }
        return UPoly(std::move(v));
    }

    F eval(const F& t) const {
        F acc = t.zero();
        for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
        return acc;
    }

    bool operator==(const UPoly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<F> c_;
};

/// Monic gcd by the Euclidean algorithm.
template <Field F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Yun's squarefree decomposition, characteristic zero.
/// Returns a_1, a_2, ... with f = lc * prod a_i^i and the a_i squarefree,
/// pairwise coprime, monic.
inline std::vector<UPoly<Rat>> squarefree_decomposition(const UPoly<Rat>& f) {
    std::vector<UPoly<Rat>> out;
    if (f.is_constant()) return out;
    UPoly<Rat> fm = f.monic();
    UPoly<Rat> df = fm.derivative();
    UPoly<Rat> g = gcd(fm, df);
    UPoly<Rat> w = fm.divexact(g);
    UPoly<Rat> z = df.divexact(g) - w.derivative();
    while (!w.is_constant()) {
        UPoly<Rat> a = gcd(w, z);
        out.push_back(a.monic());
        w = w.divexact(a);
        z = z.divexact(a) - w.derivative();
    }
    return out;
}

/// True iff f is a square in kbar[t] up to a constant: every irreducible
/// factor occurs with even multiplicity. Constants count as squares.
inline bool is_square_geometric(const UPoly<Rat>& f) {
    if (f.is_zero()) throw arithmetic_error("square class of zero");
    auto parts = squarefree_decomposition(f);
    for (size_t i = 0; i < parts.size(); ++i)
        if (i % 2 == 0 && !parts[i].is_constant()) return false; // odd multiplicity i+1
    return true;
}

/// Exact square root in Q[t], if one exists.
inline std::optional<UPoly<Rat>> upoly_sqrt(const UPoly<Rat>& f) {
    if (f.is_zero()) return UPoly<Rat>();
    long d = f.degree();
    if (d % 2 != 0) return std::nullopt;
    auto lead = f.leading().sqrt();
    if (!lead) return std::nullopt;
    const Rat z = Rat(0);
    long h = d / 2;
    std::vector<Rat> w(static_cast<size_t>(h) + 1, z);
    w[static_cast<size_t>(h)] = *lead;
    Rat two_lead = Rat(2) * *lead;
    for (long j = h - 1; j >= 0; --j) {
        Rat acc = f.coeff(static_cast<size_t>(h + j), z);
        for (long a = j + 1; a < h; ++a) {
            long b = h + j - a;
            if (b > j && b <= h) acc -= w[static_cast<size_t>(a)] * w[static_cast<size_t>(b)];
        }
        w[static_cast<size_t>(j)] = acc / two_lead;
    }
    UPoly<Rat> cand{std::vector<Rat>(w)};
    if (cand * cand == f) return cand;
    return std::nullopt;
}

/// All roots in F_p with multiplicity, by scanning the field and deflating.
inline std::vector<Fp> roots_over_fp(UPoly<Fp> f, const Fp& ctx) {
    std::vector<Fp> out;
    if (f.is_zero()) throw arithmetic_error("roots of zero polynomial");
    for (uint64_t v = 0; v < ctx.p() && !f.is_constant(); ++v) {
        Fp t(ctx.p(), v);
        while (!f.is_constant() && f.eval(t).is_zero()) {
            out.push_back(t);
            std::vector<Fp> lin{-t, ctx.one()};
            f = f.divexact(UPoly<Fp>(std::move(lin)));
        }
    }
    return out;
}

inline std::vector<FpQuad> roots_over_fp(UPoly<FpQuad> f, const FpQuad& ctx) {
    std::vector<FpQuad> out;
    if (f.is_zero()) throw arithmetic_error("roots of zero polynomial");
    uint64_t q = ctx.p() * ctx.p();
    for (uint64_t v = 0; v < q && !f.is_constant(); ++v) {
        FpQuad t = field_element(ctx, v);
        while (!f.is_constant() && f.eval(t).is_zero()) {
            out.push_back(t);
            std::vector<FpQuad> lin{-t, ctx.one()};
            f = f.divexact(UPoly<FpQuad>(std::move(lin)));
        }
    }
    return out;
}

/// Rational roots with multiplicity. Returns nullopt when completeness
/// cannot be certified (coefficient factorization beyond the trial bound).
std::optional<std::vector<Rat>> rational_roots(const UPoly<Rat>& f);

} // namespace azumaya

#endif
