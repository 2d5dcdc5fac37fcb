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

#ifndef CONSEQ_FACTOR_HPP
#define CONSEQ_FACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "conseq/poly.hpp"

namespace conseq {

/// unit * prod factor^mult reconstructs the input; factors are monic
/// irreducible, pairwise distinct, sorted by (degree, coefficient order).
struct Factorization {
    Elem unit;
    std::vector<std::pair<Poly, int>> factors;

    int largest_degree() const;        // D(f)
    int omega() const;                 // number of distinct factors
    Poly radical(const Field& F) const;
};

/// Rabin's criterion; deg f >= 1 required.
bool is_irreducible(const Poly& f);

/// Square-free decomposition in characteristic p. p-th power parts are
/// detected through the vanishing derivative and rewritten with the p-th
/// root map on coefficients.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

Poly squarefree_part(const Poly& f);

/// Complete factorization: square-free decomposition, distinct-degree
/// splitting, then Cantor-Zassenhaus equal-degree splitting. Deterministic
/// for a fixed seed (the per-input stream is derived from the seed and a
/// canonical hash of the input).
Factorization factor(const Poly& f, uint64_t seed = 0);

int largest_factor_degree(const Poly& f, uint64_t seed = 0);  // D(f)
int omega(const Poly& f, uint64_t seed = 0);                  // omega(f)
Poly radical(const Poly& f, uint64_t seed = 0);               // rad(f)

struct StickelbergerParity {
    bool disc_is_square;
    int predicted_omega_parity;  // omega(f) mod 2
};

/// Parity of omega(f) predicted from chi(Disc(f)) for square-free f of
/// degree >= 2 over odd q. Not-square-free input is a hard error.
StickelbergerParity stickelberger_parity(const Poly& f);

/// Gauss count pi_q(n) of monic irreducibles of degree n (Moebius sum).
uint64_t count_irreducibles(const Field& F, uint32_t n);

/// pi*_q(n): monic irreducibles of degree n with all coefficients nonzero,
/// by exhaustive enumeration. Throws if (q-1)^n exceeds the budget.
uint64_t count_irreducibles_all_nonzero(const Field& F, uint32_t n,
                                        uint64_t budget = uint64_t(1) << 24);

}  // namespace conseq

#endif
