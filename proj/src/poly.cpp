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

#include "azumaya/poly.hpp"

#include <algorithm>
#include <map>

namespace azumaya {

namespace {

struct GlexDesc {
    bool operator()(const Mono& a, const Mono& b) const { return glex_greater(a, b); }
};

Poly collect(std::map<Mono, Rat, GlexDesc>&& acc) {
    std::vector<Poly::Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.push_back({m, std::move(c)});
    return Poly::from_terms(std::move(out));
}

} // namespace

void Poly::normalize() {
    std::sort(t_.begin(), t_.end(),
              [](const Term& a, const Term& b) { return glex_greater(a.m, b.m); });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.c.is_zero(); }),
              out.end());
    t_ = std::move(out);
}

Poly Poly::constant(const Rat& c) {
    Poly p;
    if (!c.is_zero()) p.t_.push_back({{0, 0}, c});
    return p;
}

Poly Poly::monomial(const Rat& c, unsigned ex, unsigned ey) {
    Poly p;
    if (!c.is_zero()) p.t_.push_back({{ex, ey}, c});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    Poly p;
    p.t_ = std::move(terms);
    p.normalize();
    return p;
}

Rat Poly::constant_value() const {
    if (t_.empty()) return Rat(0);
    if (t_.size() != 1 || t_[0].m.total() != 0)
        throw arithmetic_error("polynomial is not constant: " + to_string());
    return t_[0].c;
}

unsigned Poly::degree_x() const {
    unsigned d = 0;
    for (const auto& t : t_) d = std::max(d, t.m.ex);
    return d;
}

unsigned Poly::degree_y() const {
    unsigned d = 0;
    for (const auto& t : t_) d = std::max(d, t.m.ey);
    return d;
}

const Poly::Term& Poly::leading() const {
    if (t_.empty()) throw arithmetic_error("leading term of zero polynomial");
    return t_[0];
}

Poly Poly::operator-() const {
    Poly p;
    p.t_.reserve(t_.size());
    for (const auto& t : t_) p.t_.push_back({t.m, -t.c});
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    std::map<Mono, Rat, GlexDesc> acc;
    for (const auto& t : t_) acc.emplace(t.m, Rat(0)).first->second += t.c;
    for (const auto& t : o.t_) acc.emplace(t.m, Rat(0)).first->second += t.c;
    return collect(std::move(acc));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    std::map<Mono, Rat, GlexDesc> acc;
    for (const auto& a : t_)
        for (const auto& b : o.t_) {
            Mono m{a.m.ex + b.m.ex, a.m.ey + b.m.ey};
            acc.emplace(m, Rat(0)).first->second += a.c * b.c;
        }
    return collect(std::move(acc));
}

Poly Poly::scaled(const Rat& s) const {
    if (s.is_zero()) return Poly();
    Poly p;
    p.t_.reserve(t_.size());
    for (const auto& t : t_) p.t_.push_back({t.m, t.c * s});
    return p;
}

Poly Poly::pow(unsigned e) const {
    Poly r = constant(Rat(1));
    Poly b = *this;
    for (; e; e >>= 1) {
        if (e & 1) r = r * b;
        if (e > 1) b = b * b;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
    return true;
}

Poly Poly::divexact(const Poly& d) const {
    if (d.is_zero()) throw arithmetic_error("polynomial division by zero");
    Poly rem = *this;
    std::vector<Term> quo;
    const Term& lead_d = d.leading();
    while (!rem.is_zero()) {
        const Term& lead_r = rem.leading();
        if (lead_r.m.ex < lead_d.m.ex || lead_r.m.ey < lead_d.m.ey)
            throw arithmetic_error("inexact polynomial division");
        Term q{{lead_r.m.ex - lead_d.m.ex, lead_r.m.ey - lead_d.m.ey}, lead_r.c / lead_d.c};
        quo.push_back(q);
        rem = rem - d * monomial(q.c, q.m.ex, q.m.ey);
    }
    return from_terms(std::move(quo));
}

Rat Poly::eval(const Rat& x0, const Rat& y0) const {
    Rat acc(0);
    for (const auto& t : t_) acc += t.c * x0.pow(t.m.ex) * y0.pow(t.m.ey);
    return acc;
}

Fp Poly::eval_fp(const Fp& x0, const Fp& y0) const {
    Fp acc = x0.zero();
    for (const auto& t : t_)
        acc += Fp::from_rat(x0.p(), t.c) * x0.pow(t.m.ex) * y0.pow(t.m.ey);
    return acc;
}

unsigned Poly::x_multiplicity() const {
    if (t_.empty()) throw arithmetic_error("x-multiplicity of zero polynomial");
    unsigned m = t_[0].m.ex;
    for (const auto& t : t_) m = std::min(m, t.m.ex);
    return m;
}

Poly Poly::divide_by_x_power(unsigned k) const {
    Poly p;
    p.t_.reserve(t_.size());
    for (const auto& t : t_) {
        if (t.m.ex < k) throw arithmetic_error("inexact division by x^" + std::to_string(k));
        p.t_.push_back({{t.m.ex - k, t.m.ey}, t.c});
    }
    p.normalize();
    return p;
}

Poly Poly::at_x_zero() const {
    std::vector<Term> out;
    for (const auto& t : t_)
        if (t.m.ex == 0) out.push_back(t);
    return from_terms(std::move(out));
}

UPoly<Rat> Poly::as_univariate_y() const {
    if (degree_x() != 0) throw arithmetic_error("polynomial involves x: " + to_string());
    std::vector<Rat> cs(degree_y() + 1, Rat(0));
    for (const auto& t : t_) cs[t.m.ey] = t.c;
    return UPoly<Rat>(std::move(cs));
}

Poly Poly::from_univariate_y(const UPoly<Rat>& u) {
    std::vector<Term> out;
    for (size_t i = 0; i < u.coeffs().size(); ++i)
        if (!u.coeffs()[i].is_zero()) out.push_back({{0, static_cast<unsigned>(i)}, u.coeffs()[i]});
    return from_terms(std::move(out));
}

std::vector<UPoly<Rat>> Poly::x_coefficients() const {
    std::vector<std::vector<Rat>> raw(degree_x() + 1);
    for (const auto& t : t_) {
        auto& v = raw[t.m.ex];
        if (v.size() <= t.m.ey) v.resize(t.m.ey + 1, Rat(0));
        v[t.m.ey] = t.c;
    }
    std::vector<UPoly<Rat>> out;
    out.reserve(raw.size());
    for (auto& v : raw) out.emplace_back(std::move(v));
    return out;
}

Poly Poly::from_x_coefficients(const std::vector<UPoly<Rat>>& cs) {
    std::vector<Term> out;
    for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = 0; j < cs[i].coeffs().size(); ++j)
            if (!cs[i].coeffs()[j].is_zero())
                out.push_back({{static_cast<unsigned>(i), static_cast<unsigned>(j)}, cs[i].coeffs()[j]});
    return from_terms(std::move(out));
}

std::optional<Poly> Poly::sqrt() const {
    if (is_zero()) return Poly();
    auto cs = x_coefficients();
    size_t m = cs.size() - 1;
    if (m % 2 != 0) return std::nullopt;
    size_t h = m / 2;
    auto top = upoly_sqrt(cs[m]);
    if (!top) return std::nullopt;
    std::vector<UPoly<Rat>> w(h + 1);
    w[h] = *top;
    UPoly<Rat> two_top = top->scaled(Rat(2));
    for (size_t jj = h; jj-- > 0;) {
        UPoly<Rat> acc = (h + jj < cs.size()) ? cs[h + jj] : UPoly<Rat>();
        for (size_t a = jj + 1; a < h; ++a) {
            size_t b = h + jj - a;
            if (b > jj && b <= h) acc = acc - w[a] * w[b];
        }
        auto [q, r] = acc.divmod(two_top);
        if (!r.is_zero()) return std::nullopt;
        w[jj] = q;
    }
    Poly cand = from_x_coefficients(w);
    if (cand * cand == *this) return cand;
    return std::nullopt;
}

bool Poly::integer_coeffs_within(long bound) const {
    for (const auto& t : t_) {
        if (!t.c.is_integer()) return false;
        if (t.c.abs() < Rat(-bound) || Rat(bound) < t.c.abs()) return false;
    }
    return true;
}

std::string Poly::to_string() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : t_) {
        Rat mag = t.c.abs();
        bool neg = t.c.sign() < 0;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        if (t.m.ex > 0) {
            mono += "x";
            if (t.m.ex > 1) mono += "^" + std::to_string(t.m.ex);
        }
        if (t.m.ey > 0) {
            if (!mono.empty()) mono += "*";
            mono += "y";
            if (t.m.ey > 1) mono += "^" + std::to_string(t.m.ey);
        }
        if (mono.empty()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += mono;
        } else {
            out += mag.to_string() + "*" + mono;
        }
    }
    return out;
}

namespace {

// gcd machinery in (Q[y])[x]: contents are univariate gcds in y, the
// primitive-part gcd comes from a pseudo-remainder sequence reduced to
// primitive form at every step.

using YPoly = UPoly<Rat>;
using XView = std::vector<YPoly>; // index = degree in x

long xdeg(const XView& p) {
    for (size_t i = p.size(); i-- > 0;)
        if (!p[i].is_zero()) return static_cast<long>(i);
    return -1;
}

bool xz(const XView& p) { return xdeg(p) < 0; }

YPoly content_y(const XView& p) {
    YPoly g;
    for (const auto& c : p)
        if (!c.is_zero()) g = gcd(g, c);
    return g;
}

XView divide_coeffs(const XView& p, const YPoly& d) {
    XView out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(c.is_zero() ? c : c.divexact(d));
    return out;
}

XView scale_coeffs(const XView& p, const YPoly& s) {
    XView out;
    out.reserve(p.size());
    for (const auto& c : p) out.push_back(c * s);
    return out;
}

XView sub(const XView& a, const XView& b) {
    XView out(std::max(a.size(), b.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        YPoly av = i < a.size() ? a[i] : YPoly();
        YPoly bv = i < b.size() ? b[i] : YPoly();
        out[i] = av - bv;
    }
    return out;
}

XView shift_mul(const XView& p, const YPoly& c, size_t k) {
    XView out(p.size() + k);
    for (size_t i = 0; i < p.size(); ++i) out[i + k] = p[i] * c;
    return out;
}

// pseudo-remainder of a by b in x
XView prem(XView a, const XView& b) {
    long db = xdeg(b);
    const YPoly& lb = b[static_cast<size_t>(db)];
    while (true) {
        long da = xdeg(a);
        if (da < db) return a;
        const YPoly la = a[static_cast<size_t>(da)];
        a = sub(scale_coeffs(a, lb), shift_mul(b, la, static_cast<size_t>(da - db)));
    }
}

} // namespace

Poly gcd(const Poly& a, const Poly& b) {
    auto normalized = [](const Poly& p) {
        if (p.is_zero()) return p;
        return p.scaled(p.leading().c.inverse());
    };
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);

    XView pa = a.x_coefficients();
    XView pb = b.x_coefficients();
    YPoly ca = content_y(pa), cb = content_y(pb);
    YPoly cg = gcd(ca, cb);
    XView p = divide_coeffs(pa, ca);
    XView q = divide_coeffs(pb, cb);
    if (xdeg(p) < xdeg(q)) std::swap(p, q);
    while (true) {
        XView r = prem(p, q);
        if (xz(r)) break;
        p = std::move(q);
        q = divide_coeffs(r, content_y(r));
        if (xdeg(q) == 0) { // coprime primitive parts
            q = XView{YPoly::constant(Rat(1))};
            break;
        }
    }
    Poly pp = Poly::from_x_coefficients(q);
    Poly result = pp * Poly::from_univariate_y(cg);
    return normalized(result);
}

std::optional<std::vector<Rat>> rational_roots(const UPoly<Rat>& f) {
    if (f.is_zero()) throw arithmetic_error("roots of zero polynomial");
    std::vector<Rat> out;
    UPoly<Rat> g = f;

    // strip roots at zero first
    while (!g.is_constant() && g.coeffs()[0].is_zero()) {
        out.push_back(Rat(0));
        std::vector<Rat> shifted(g.coeffs().begin() + 1, g.coeffs().end());
        g = UPoly<Rat>(std::move(shifted));
    }
    if (g.is_constant()) return out;

    // clear denominators to land in Z[t]
    mpz_class scale(1);
    for (const auto& c : g.coeffs()) {
        mpz_class d = c.denominator();
        mpz_class gg;
        mpz_gcd(gg.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
        scale = scale / gg * d;
    }
    std::vector<mpz_class> zc;
    zc.reserve(g.coeffs().size());
    for (const auto& c : g.coeffs()) zc.push_back(c.numerator() * (scale / c.denominator()));

    auto divisors = [](mpz_class n) -> std::optional<std::vector<mpz_class>> {
        n = abs(n);
        std::vector<std::pair<mpz_class, unsigned>> fac;
        mpz_class d(2);
        while (d * d <= n) {
            if (n % d == 0) {
                unsigned e = 0;
                while (n % d == 0) {
                    n /= d;
                    ++e;
                }
                fac.emplace_back(d, e);
            }
            d += (d == 2) ? 1 : 2;
            if (d > 1000000) return std::nullopt; // cannot certify the divisor list
        }
        if (n > 1) fac.emplace_back(n, 1);
        std::vector<mpz_class> divs{mpz_class(1)};
        for (auto& [pp, e] : fac) {
            size_t sz = divs.size();
            mpz_class pk(1);
            for (unsigned k = 1; k <= e; ++k) {
                pk *= pp;
                for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
            }
        }
        return divs;
    };

    auto dn = divisors(zc.front());
    auto dl = divisors(zc.back());
    if (!dn || !dl) return std::nullopt;

    std::vector<Rat> candidates;
    for (const auto& p : *dn)
        for (const auto& q : *dl) {
            Rat r(mpq_class(p, q));
            candidates.push_back(r);
            candidates.push_back(-r);
        }
    for (const auto& r : candidates) {
        while (!g.is_constant() && g.eval(r).is_zero()) {
            out.push_back(r);
            std::vector<Rat> lin{-r, Rat(1)};
            g = g.divexact(UPoly<Rat>(std::move(lin)));
        }
    }
    // any remaining degree means irrational roots; the list is still complete
    return out;
}

} // namespace azumaya
