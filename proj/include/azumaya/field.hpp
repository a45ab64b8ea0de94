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

#ifndef AZUMAYA_FIELD_HPP
#define AZUMAYA_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <optional>

#include "azumaya/rational.hpp"

namespace azumaya {

/// What the generic linear algebra needs from a field element type.
/// Constants are produced from an existing element so that types carrying a
/// runtime context (the prime p, a radicand) work uniformly.
template <class T>
concept Field = requires(const T a, const T b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a.inverse() } -> std::convertible_to<T>;
    { a.zero() } -> std::convertible_to<T>;
    { a.one() } -> std::convertible_to<T>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
    { a.to_string() } -> std::convertible_to<std::string>;
};

// Cardinality hooks; nullopt means "not a finite field" and disables the
// exhaustive enumeration oracles.
inline std::optional<uint64_t> field_order(const Rat&) { return std::nullopt; }
inline std::optional<uint64_t> field_order(const Fp& ctx) { return ctx.p(); }
inline std::optional<uint64_t> field_order(const FpQuad& ctx) { return ctx.p() * ctx.p(); }

inline Fp field_element(const Fp& ctx, uint64_t i) { return Fp(ctx.p(), i); }
inline FpQuad field_element(const FpQuad& ctx, uint64_t i) {
    uint64_t p = ctx.p();
    return FpQuad(Fp(p, i % p), Fp(p, i / p), ctx.rad());
}
inline Rat field_element(const Rat&, uint64_t) {
    throw method_error("enumeration requires a finite field");
}

// Total orders used only to make reported lists deterministic.
inline bool canonical_less(const Rat& a, const Rat& b) { return a < b; }
inline bool canonical_less(const Fp& a, const Fp& b) { return a.value() < b.value(); }
inline bool canonical_less(const FpQuad& a, const FpQuad& b) {
    if (a.re().value() != b.re().value()) return a.re().value() < b.re().value();
    return a.im().value() < b.im().value();
}

} // namespace azumaya

#endif
