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

#ifndef CONSEQ_FIELD_HPP
#define CONSEQ_FIELD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace conseq {

/// One element of F_q, stored as its canonical index in [0, q).
/// For q = p^s the index encodes the coefficient vector (c_0,...,c_{s-1})
/// of the residue class as c_0 + c_1 p + ... + c_{s-1} p^{s-1}.
struct Elem {
    uint32_t v = 0;
    friend bool operator==(Elem a, Elem b) { return a.v == b.v; }
    friend bool operator!=(Elem a, Elem b) { return a.v != b.v; }
    friend bool operator<(Elem a, Elem b) { return a.v < b.v; }
};

/// Immutable description of F_q = F_{p^s}, p an odd prime, with all
/// arithmetic. For q = p the modulus is the trivial X. Extension fields
/// get either a user-supplied monic irreducible modulus or the
/// lexicographically first one (coefficient tuples (a_0,...,a_{s-1})
/// ascending), so runs are reproducible.
class Field {
  public:
    /// modulus, when given, lists the s+1 coefficients of a monic degree-s
    /// polynomial over F_p, constant term first.
    static Field make(uint64_t p, uint32_t s = 1,
                      const std::vector<uint32_t>* modulus = nullptr);

    uint64_t p() const { return p_; }
    uint32_t s() const { return s_; }
    uint64_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }
    /// Element with canonical index v (the iteration order of elements()).
    Elem element(uint64_t v) const;
    /// Embedding of the integer n (reduction mod p into the prime subfield).
    Elem from_int(int64_t n) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    /// 0^0 = 1 by convention.
    Elem pow(Elem a, uint64_t e) const;

    /// Quadratic character chi: 0 at 0, +1 on nonzero squares, -1 otherwise.
    int quadratic_character(Elem a) const;
    /// Least t >= 1 with a^t = 1; requires a != 0. Divides q-1.
    uint64_t multiplicative_order(Elem a) const;
    /// Square root in F_q if one exists (a^{(q+1)/4} when q = 3 mod 4,
    /// Tonelli-Shanks otherwise, with the first non-residue in element
    /// order as the deterministic auxiliary).
    std::optional<Elem> sqrt(Elem a) const;

    /// All elements / nonzero elements in canonical index order.
    std::vector<Elem> elements() const;
    std::vector<Elem> nonzero_elements() const;

    friend bool operator==(const Field& a, const Field& b) {
        return a.p_ == b.p_ && a.s_ == b.s_ && a.modulus_ == b.modulus_;
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

    void check(Elem a) const {
        if (a.v >= q_) throw std::invalid_argument("element out of range for this field");
    }

  private:
    Field() = default;
    void build_tables();
    Elem mul_generic(Elem a, Elem b) const;

    uint64_t p_ = 0;
    uint32_t s_ = 0;
    uint64_t q_ = 0;
    std::vector<uint32_t> modulus_;   // constant term first, size s+1, monic
    std::vector<uint64_t> ppow_;      // p^0..p^s
    // multiplication/inverse tables for small extension fields
    bool tabled_ = false;
    std::vector<uint32_t> mul_tab_;
    std::vector<uint32_t> inv_tab_;
};

bool is_prime_u64(uint64_t n);

/// Prime factors of n, ascending, without multiplicity.
std::vector<uint64_t> prime_factors(uint64_t n);

}  // namespace conseq

#endif
