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

#ifndef AZUMAYA_ERROR_HPP
#define AZUMAYA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace azumaya {

/// Error taxonomy shared by the library and the CLI exit-code contract.
class Error : public std::runtime_error {
public:
    enum class Kind {
        arithmetic,            // division by zero, undefined valuation, ...
        pole,                  // evaluation at a pole
        shape,                 // dimension mismatch
        singular,              // inversion of a singular matrix
        parse,                 // malformed text / JSON input
        spec,                  // invalid witness or run specification
        method_not_applicable, // preconditions of a detection method fail
        budget,                // enumeration / search budget exceeded
    };

    Error(Kind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

inline Error arithmetic_error(std::string msg) { return {Error::Kind::arithmetic, std::move(msg)}; }
inline Error pole_error(std::string msg) { return {Error::Kind::pole, std::move(msg)}; }
inline Error shape_error(std::string msg) { return {Error::Kind::shape, std::move(msg)}; }
inline Error singular_error(std::string msg) { return {Error::Kind::singular, std::move(msg)}; }
inline Error parse_error(std::string msg) { return {Error::Kind::parse, std::move(msg)}; }
inline Error spec_error(std::string msg) { return {Error::Kind::spec, std::move(msg)}; }
inline Error method_error(std::string msg) { return {Error::Kind::method_not_applicable, std::move(msg)}; }
inline Error budget_error(std::string msg) { return {Error::Kind::budget, std::move(msg)}; }

} // namespace azumaya

#endif
