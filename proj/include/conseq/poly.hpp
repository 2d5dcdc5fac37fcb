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

#ifndef CONSEQ_POLY_HPP
#define CONSEQ_POLY_HPP

#include <utility>
#include <vector>

#include "conseq/field.hpp"

namespace conseq {

/// Dense univariate polynomial over a fixed field. Coefficients are stored
/// constant term first with the leading coefficient nonzero; the zero
/// polynomial has an empty coefficient vector and degree -1.
class Poly {
  public:
    Poly() = default;
    Poly(const Field& f, std::vector<Elem> coeffs);
    static Poly zero(const Field& f) { return Poly(f, {}); }
    static Poly constant(const Field& f, Elem c) { return Poly(f, {c}); }
    static Poly x(const Field& f) { return Poly(f, {f.zero(), f.one()}); }
    /// Polynomial from small integer coefficients, constant term first.
    static Poly from_ints(const Field& f, const std::vector<int64_t>& coeffs);

    const Field& field() const { return *fld_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    Elem coeff(size_t i) const { return i < c_.size() ? c_[i] : Elem{0}; }
    Elem lead() const;
    bool is_monic() const { return !c_.empty() && c_.back().v == 1; }

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    /// Total order: degree first, then coefficient indices from the top.
    friend bool operator<(const Poly& a, const Poly& b);

  private:
    const Field* fld_ = nullptr;
    std::vector<Elem> c_;
    void normalize();
    friend void require_same_field(const Poly& a, const Poly& b);
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly mul(const Poly& a, Elem c);
/// Quotient and remainder; g must be nonzero.
std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g);
Poly mod(const Poly& f, const Poly& g);
/// Monic gcd; not both zero.
Poly gcd(const Poly& f, const Poly& g);
Poly monic(const Poly& f);
Poly derivative(const Poly& f);
Elem eval(const Poly& f, Elem x);
/// a^e mod m over F_q[X].
Poly powmod(const Poly& a, uint64_t e, const Poly& m);

/// Sylvester-determinant resultant at the actual degrees of f and g.
Elem resultant(const Poly& f, const Poly& g);

/// Resultant with f taken at nominal degree df and g at nominal degree dg
/// (missing leading coefficients treated as zero). The determinant is the
/// one of the (df+dg) x (df+dg) Sylvester matrix.
Elem resultant_nominal(const Poly& f, int df, const Poly& g, int dg);

/// Disc(f) = (-1)^{d(d-1)/2} lc(f)^{-1} Res_{d,d-1}(f, f'), with f' padded
/// to nominal degree d-1. Degree-1 polynomials have discriminant 1.
Elem discriminant(const Poly& f);

/// The discriminant expression at nominal degree d. For deg f == d this is
/// discriminant(f). For deg f == d-1 (leading coefficient set to zero) the
/// division by a_d is carried out symbolically over dual numbers, so the
/// specialized expression stays computable.
Elem discriminant_nominal(const Poly& f, int d);

/// X^{deg f} f(1/X); requires f(0) != 0.
Poly reciprocal(const Poly& f);

/// R(X) = X^3 + 2aX^2 + (a^2 - 4c)X - b^2 for the depressed quartic
/// X^4 + aX^2 + bX + c. Characteristic must not be 3 (2 is excluded at the
/// field level already).
Poly cubic_resolvent(const Field& f, Elem a, Elem b, Elem c);

struct QuarticRoots {
    std::vector<Elem> roots;  // roots in F_q, with multiplicity
    bool fallback = false;    // true when exhaustive evaluation was used
};

/// Roots in F_q of X^4 + aX^2 + bX + c via Euler's resolvent procedure.
/// Falls back to exhaustive evaluation when the resolvent does not split
/// with square roots in F_q.
QuarticRoots quartic_roots_via_resolvent(const Field& f, Elem a, Elem b, Elem c);

}  // namespace conseq

#endif
