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

#ifndef CONSEQ_SEQ_HPP
#define CONSEQ_SEQ_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "conseq/factor.hpp"
#include "conseq/poly.hpp"

namespace conseq {

/// Coefficient sequence u_0,...,u_L of nonzero field elements. The derived
/// polynomials are f_n = u_n X^n + ... + u_1 X + u_0 for 1 <= n <= L.
class CoeffSeq {
  public:
    CoeffSeq(const Field& F, std::vector<Elem> u);
    const Field& field() const { return *fld_; }
    const std::vector<Elem>& u() const { return u_; }
    int length() const { return int(u_.size()) - 1; }  // L

    /// f_n for 1 <= n <= L.
    Poly polynomial_at(int n) const;

  private:
    const Field* fld_;
    std::vector<Elem> u_;
};

struct ConsecCheck {
    bool ok = true;
    int first_failure = -1;  // smallest n with f_n reducible, when !ok
};

/// True iff every f_n, 1 <= n <= L, is irreducible; short-circuits and
/// reports the first failing index.
ConsecCheck is_consecutive_irreducible(const CoeffSeq& seq);

/// All v in F_q* whose append keeps the sequence consecutive irreducible,
/// in canonical element order.
std::vector<Elem> extensions(const CoeffSeq& seq);

struct EnumerationResult {
    uint64_t q = 0;
    uint32_t N = 0;
    uint64_t count = 0;  // I_N
    bool symmetry_reduced = true;
    bool exact = true;  // false when the node budget cut the search short
    uint64_t nodes_visited = 0;
    double elapsed_seconds = 0;
};

/// Exact I_N by depth-first traversal of the extension tree. With symmetry
/// on, u_0 = u_1 = 1 is fixed and the count is multiplied by (q-1)^2.
/// The node budget is split evenly over the root children so results do
/// not depend on thread count.
EnumerationResult count_sequences(const Field& F, uint32_t N, bool symmetry = true,
                                  uint64_t budget = uint64_t(1) << 30,
                                  uint32_t threads = 1);

struct LengthResult {
    uint64_t q = 0;
    int max_length_found = 0;
    bool exhausted = false;  // true => the value is exactly L(q)
    std::optional<CoeffSeq> witness;
    uint64_t nodes_visited = 0;
    double elapsed_seconds = 0;
};

/// Exhaustive depth-first search for L(q) with the u_0 = u_1 = 1 symmetry
/// normalization. exhausted is only set when the whole tree was traversed
/// within budget.
LengthResult max_length_search(const Field& F, uint64_t budget = uint64_t(1) << 30,
                               uint32_t threads = 1);

/// Deterministic backtracking search (u_0 = 1 fixed) for a sequence whose
/// f_1,...,f_H are pairwise coprime. Guaranteed to succeed for
/// H <= floor((3q)^{1/3}).
std::optional<CoeffSeq> coprime_sequence_search(const Field& F, int H);

struct DivisorStats {
    int T = 0;       // #{n in [m+1, m+H] : g | f_n}
    int e = 0;       // multiplicity of g in f_{m+1}...f_{m+H}
};

DivisorStats divisor_stats(const CoeffSeq& seq, int m, int H, const Poly& g);

/// omega(f_{m+1}...f_{m+H}) as the size of the union of the factor sets.
int omega_product(const CoeffSeq& seq, int m, int H, uint64_t seed = 0);

/// Q(m,H;S): count of n in [m+1, m+H] whose f_n has all its irreducible
/// factors inside S.
int s_polynomial_count(const CoeffSeq& seq, int m, int H,
                       const std::vector<Poly>& S, uint64_t seed = 0);

struct Theorem31Check {
    int lhs = 0;  // max(D(f_n), D(f_{n+d}))
    double rhs_general = 0;
    double rhs_strong = 0;
    bool strong_applicable = false;
    bool holds_general = false;
    bool holds_strong = false;  // meaningful only when strong_applicable
};

/// Evaluates both sides of the largest-degree inequality for a pair
/// (n, n+d); natural logarithms throughout.
Theorem31Check theorem31_check(const CoeffSeq& seq, int n, int d, uint64_t seed = 0);

/// D(f_n) for the all-ones sequence, through the order identity: write
/// n+1 = p^k m with gcd(m, p) = 1; the answer is 1 when m = 1 and the
/// multiplicative order of q mod m otherwise.
uint64_t all_ones_largest_degree(const Field& F, uint64_t n);

/// Least t >= 1 with g^t = 1 mod m; requires gcd(g, m) = 1.
uint64_t integer_multiplicative_order(uint64_t g, uint64_t m);

/// The all-ones coefficient sequence of length L.
CoeffSeq all_ones_seq(const Field& F, int L);

}  // namespace conseq

#endif
