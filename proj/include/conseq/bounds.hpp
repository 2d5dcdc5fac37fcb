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

#ifndef CONSEQ_BOUNDS_HPP
#define CONSEQ_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conseq/field.hpp"

namespace conseq {

/// Exact rational on 64-bit parts; enough for every rational-valued bound
/// at desk scale. Overflow throws.
struct Rat {
    int64_t num = 0;
    int64_t den = 1;

    Rat() = default;
    Rat(int64_t n, int64_t d = 1);
    double to_double() const { return double(num) / double(den); }
    friend Rat operator*(Rat a, Rat b);
    friend Rat operator/(Rat a, Rat b);
    friend bool operator<(Rat a, Rat b);
    friend bool operator<=(Rat a, Rat b);
    friend bool operator==(Rat a, Rat b);
    std::string str() const;
};

Rat rat_pow(Rat base, uint32_t e);

/// (q-1) q^N / N, exact.
Rat trivial_upper(uint64_t q, uint32_t N);

struct Thm52Upper {
    long double general = 0;                 // 2^{-N/5} q^{N+1}
    std::optional<long double> strong;       // 3^{-N/7} q^{N+1}, N >= 7
};
Thm52Upper thm52_upper(uint64_t q, uint32_t N);

/// q^{N+1}/2^{N-1} + 2(N^2 q^{N+1/2} + N^4 q^N)/3 in extended precision.
long double thm55_upper(uint64_t q, uint32_t N);

/// (q-1)^2 prod_{n=2}^N pi*_q(n) / (q (q-1)^{n-2}), exact.
Rat heuristic_estimate(uint64_t q, uint32_t N, const std::map<uint32_t, uint64_t>& pi_star);

/// (q-1)^{N+1} / N!, exact.
Rat heuristic_upper(uint64_t q, uint32_t N);

struct LengthBounds {
    double lower = 0;          // ln q / (2 ln ln q); exact L(3) = 3 special case
    uint64_t heuristic_upper;  // 3q
    bool lower_is_exact = false;
};
LengthBounds length_bounds(uint64_t q);

struct I3I4Lower {
    std::optional<long double> i3;  // present iff q > 7
    std::optional<long double> i4;  // present iff q >= 23 and p not in {2,3}
};
I3I4Lower i3_i4_lower_bounds(uint64_t q, uint64_t p);

/// 2 q^{n-r+1} / (n-r), for 1 <= r < n.
long double johnsen_bound(uint64_t q, uint32_t n, uint32_t r);

/// exact <= / < comparison against an extended-precision bound with a
/// doubled-precision recheck near ties.
bool exact_below_bound(uint64_t exact, long double bound, bool strict);

struct BoundsRow {
    uint64_t q = 0;
    uint32_t N = 0;
    std::optional<uint64_t> exact_I_N;
    Rat trivial;
    long double thm52 = 0;
    std::optional<long double> thm52_strong;
    long double thm55 = 0;
    std::optional<Rat> heuristic_est;
    Rat heuristic_upper_v;
};

struct ReportOptions {
    uint32_t N_max = 5;
    uint64_t enum_budget = uint64_t(1) << 30;
    uint64_t pi_star_budget = uint64_t(1) << 24;
    uint32_t threads = 1;
};

/// One row per N in [2, N_max] with exact I_N when the budget allows and
/// all closed-form bounds.
std::vector<BoundsRow> build_report(const Field& F, const ReportOptions& opt);

/// CSV with the fixed column order
/// q,N,I_N_exact,trivial,thm52,thm52_strong,thm55,heuristic_est,heuristic_upper
std::string report_csv(const std::vector<BoundsRow>& rows);

/// All applicable upper/lower-bound inequalities plus the Johnsen
/// recursion across rows; returns a list of violated checks (empty = ok).
std::vector<std::string> verify_report(const std::vector<BoundsRow>& rows, uint64_t p);

}  // namespace conseq

#endif
