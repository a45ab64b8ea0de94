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

#ifndef AZUMAYA_POLY_HPP
#define AZUMAYA_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "azumaya/rational.hpp"
#include "azumaya/upoly.hpp"

namespace azumaya {

/// Monomial x^ex * y^ey under graded-lex order (total degree first, then x).
struct Mono {
    unsigned ex = 0;
    unsigned ey = 0;

    unsigned total() const { return ex + ey; }
    bool operator==(const Mono& o) const { return ex == o.ex && ey == o.ey; }
};

/// true when a > b in graded-lex
inline bool glex_greater(const Mono& a, const Mono& b) {
    if (a.total() != b.total()) return a.total() > b.total();
    return a.ex > b.ex;
}

/// Sparse polynomial in Q[x, y]. Terms are kept sorted in descending
/// graded-lex order with no zero coefficients, so equality is structural and
/// serialization is canonical.
class Poly {
public:
    struct Term {
        Mono m;
        Rat c;
    };

    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly constant(const Rat& c);
    static Poly x() { return monomial(Rat(1), 1, 0); }
    static Poly y() { return monomial(Rat(1), 0, 1); }
    static Poly monomial(const Rat& c, unsigned ex, unsigned ey);
    /// Sums an arbitrary term list into canonical form.
    static Poly from_terms(std::vector<Term> terms);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.total() == 0); }
    bool is_one() const { return t_.size() == 1 && t_[0].m.total() == 0 && t_[0].c.is_one(); }
    Rat constant_value() const; // requires is_constant()

    const std::vector<Term>& terms() const { return t_; }
    unsigned total_degree() const { return t_.empty() ? 0 : t_[0].m.total(); }
    unsigned degree_x() const;
    unsigned degree_y() const;
    const Term& leading() const; // graded-lex leading term

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rat& s) const;
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Exact division; throws when the divisor does not divide exactly.
    Poly divexact(const Poly& d) const;

    Rat eval(const Rat& x0, const Rat& y0) const;
    Fp eval_fp(const Fp& x0, const Fp& y0) const;

    /// Multiplicity of the factor x.
    unsigned x_multiplicity() const;
    Poly divide_by_x_power(unsigned k) const;
    /// Substitution x = 0; the result lives in Q[y].
    Poly at_x_zero() const;
    /// Substitution y = t for a polynomial with no x part.
    UPoly<Rat> as_univariate_y() const; // requires degree_x() == 0
    static Poly from_univariate_y(const UPoly<Rat>& u);

    /// View as a polynomial in x with coefficients in Q[y].
    std::vector<UPoly<Rat>> x_coefficients() const;
    static Poly from_x_coefficients(const std::vector<UPoly<Rat>>& cs);

    /// Exact square root in Q[x, y], if one exists.
    std::optional<Poly> sqrt() const;

    /// All integer coefficients within |bound|? Used by the conic search.
    bool integer_coeffs_within(long bound) const;

    std::string to_string() const;

private:
    void normalize();
    std::vector<Term> t_;
};

/// gcd in Q[x, y], normalized with graded-lex leading coefficient 1.
Poly gcd(const Poly& a, const Poly& b);

} // namespace azumaya

#endif
