/*
   Copyright 2026 the conseq authors

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

#ifndef CONSEQ_TEXT_HPP
#define CONSEQ_TEXT_HPP

#include <string>

#include "conseq/poly.hpp"
#include "conseq/seq.hpp"

namespace conseq {

/// "p", "p^s" (deterministic modulus) or "p^s:c0,c1,...,1" (explicit monic
/// modulus, constant term first).
Field parse_field_spec(const std::string& spec);
std::string format_field_spec(const Field& F);

/// Prime fields print the residue in decimal. Extension fields print the
/// base-p digit string c_{s-1}...c_0 (coefficient of x^i = digit i from the
/// right); digits are dot-separated when p > 10.
std::string format_elem(const Field& F, Elem e);
Elem parse_elem(const Field& F, const std::string& s);

/// Comma-separated coefficients, constant term first.
std::string format_poly(const Poly& f);
Poly parse_poly(const Field& F, const std::string& s);

std::string format_seq(const CoeffSeq& seq);
CoeffSeq parse_seq(const Field& F, const std::string& s);

}  // namespace conseq

#endif
