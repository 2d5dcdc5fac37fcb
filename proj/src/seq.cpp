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

#include "conseq/seq.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <thread>

namespace conseq {

CoeffSeq::CoeffSeq(const Field& F, std::vector<Elem> u) : fld_(&F), u_(std::move(u)) {
    if (u_.empty()) throw std::invalid_argument("coefficient sequence must contain u_0");
    for (Elem e : u_) {
        F.check(e);
        if (e.v == 0) throw std::invalid_argument("coefficient sequence elements must be nonzero");
    }
}

Poly CoeffSeq::polynomial_at(int n) const {
    if (n < 1 || n > length()) throw std::invalid_argument("polynomial index out of range");
    std::vector<Elem> c(u_.begin(), u_.begin() + n + 1);
    return Poly(*fld_, std::move(c));
}

ConsecCheck is_consecutive_irreducible(const CoeffSeq& seq) {
    ConsecCheck r;
    for (int n = 1; n <= seq.length(); ++n) {
        if (!is_irreducible(seq.polynomial_at(n))) {
            r.ok = false;
            r.first_failure = n;
            return r;
        }
    }
    return r;
}

std::vector<Elem> extensions(const CoeffSeq& seq) {
    const Field& F = seq.field();
    std::vector<Elem> out;
    std::vector<Elem> c(seq.u());
    c.push_back(F.zero());
    for (Elem v : F.nonzero_elements()) {
        c.back() = v;
        if (is_irreducible(Poly(F, c))) out.push_back(v);
    }
    return out;
}

namespace {

struct DfsCounter {
    const Field* F;
    uint32_t target_len;  // number of coefficients u_0..u_N
    uint64_t budget;
    uint64_t nodes = 0;
    uint64_t leaves = 0;
    bool truncated = false;

    // u holds an accepted consecutive-irreducible prefix; extend to depth
    // target_len counting leaves.
    void run(std::vector<Elem>& u) {
        if (truncated) return;
        if (++nodes > budget) {
            truncated = true;
            return;
        }
        if (u.size() == target_len) {
            ++leaves;
            return;
        }
        u.push_back(F->zero());
        for (uint64_t v = 1; v < F->q(); ++v) {
            u.back() = Elem{uint32_t(v)};
            if (is_irreducible(Poly(*F, u))) run(u);
            if (truncated) break;
        }
        u.pop_back();
    }
};

struct DfsDeepest {
    const Field* F;
    uint64_t budget;
    uint64_t nodes = 0;
    bool truncated = false;
    int best_depth = -1;
    std::vector<Elem> best;

    void run(std::vector<Elem>& u) {
        if (truncated) return;
        if (++nodes > budget) {
            truncated = true;
            return;
        }
        if (int(u.size()) - 1 > best_depth) {
            best_depth = int(u.size()) - 1;
            best = u;
        }
        u.push_back(F->zero());
        for (uint64_t v = 1; v < F->q(); ++v) {
            u.back() = Elem{uint32_t(v)};
            if (is_irreducible(Poly(*F, u))) run(u);
            if (truncated) break;
        }
        u.pop_back();
    }
};

}  // namespace

EnumerationResult count_sequences(const Field& F, uint32_t N, bool symmetry,
                                  uint64_t budget, uint32_t threads) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    auto t0 = std::chrono::steady_clock::now();
    EnumerationResult r;
    r.q = F.q();
    r.N = N;
    r.symmetry_reduced = symmetry;

    // root prefixes: (u_0, u_1) pairs; f_1 is linear, always irreducible
    std::vector<std::vector<Elem>> roots;
    if (symmetry) {
        roots.push_back({F.one(), F.one()});
    } else {
        for (Elem a : F.nonzero_elements())
            for (Elem b : F.nonzero_elements()) roots.push_back({a, b});
    }
    uint64_t per_root = std::max<uint64_t>(1, budget / roots.size());

    std::vector<DfsCounter> tasks(roots.size());
    for (size_t i = 0; i < roots.size(); ++i)
        tasks[i] = DfsCounter{&F, N + 1, per_root};

    auto work = [&](size_t i) {
        std::vector<Elem> u = roots[i];
        tasks[i].run(u);
    };
    if (threads <= 1 || roots.size() == 1) {
        for (size_t i = 0; i < roots.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        std::atomic<size_t> next{0};
        for (uint32_t t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < roots.size(); i = next.fetch_add(1))
                    work(i);
            });
        for (auto& th : pool) th.join();
    }

    for (const auto& t : tasks) {
        r.count += t.leaves;
        r.nodes_visited += t.nodes;
        if (t.truncated) r.exact = false;
    }
    if (symmetry) r.count *= (F.q() - 1) * (F.q() - 1);

    if (r.exact) {
        uint64_t qm1 = F.q() - 1;
        if (r.count % (qm1 * qm1) != 0)
            throw std::logic_error("I_N not divisible by (q-1)^2");
        // trivial bound q^{N+1}/N
        long double bound = 1;
        for (uint32_t i = 0; i <= N; ++i) bound *= (long double)F.q();
        if ((long double)r.count > bound / N)
            throw std::logic_error("I_N exceeds the trivial bound");
    }
    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

LengthResult max_length_search(const Field& F, uint64_t budget, uint32_t threads) {
    (void)threads;  // tree sizes at desk scale do not need the parallel path
    auto t0 = std::chrono::steady_clock::now();
    LengthResult r;
    r.q = F.q();
    DfsDeepest dfs{&F, budget};
    std::vector<Elem> u = {F.one(), F.one()};
    dfs.run(u);
    r.max_length_found = dfs.best_depth;
    r.exhausted = !dfs.truncated;
    r.nodes_visited = dfs.nodes;
    if (!dfs.best.empty()) r.witness = CoeffSeq(F, dfs.best);
    r.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::optional<CoeffSeq> coprime_sequence_search(const Field& F, int H) {
    if (H < 2) throw std::invalid_argument("H must be >= 2");
    // u_0 = 1 fixed; extend u_1..u_H keeping all f_i pairwise coprime
    std::vector<Elem> u = {F.one()};
    std::vector<Poly> polys;  // f_1..f_{|u|-1}

    std::function<bool()> rec = [&]() -> bool {
        if (int(u.size()) - 1 == H) return true;
        u.push_back(F.zero());
        for (uint64_t v = 1; v < F.q(); ++v) {
            u.back() = Elem{uint32_t(v)};
            Poly f(F, u);
            bool ok = true;
            for (const Poly& g : polys)
                if (gcd(f, g).degree() != 0) { ok = false; break; }
            if (ok) {
                polys.push_back(f);
                if (rec()) return true;
                polys.pop_back();
            }
        }
        u.pop_back();
        return false;
    };
    if (!rec()) return std::nullopt;
    return CoeffSeq(F, u);
}

DivisorStats divisor_stats(const CoeffSeq& seq, int m, int H, const Poly& g) {
    if (g.degree() < 1) throw std::invalid_argument("g must be non-constant");
    if (g.coeff(0).v == 0) throw std::invalid_argument("g(0) must be nonzero");
    if (m < 0 || H < 1 || m + H > seq.length())
        throw std::invalid_argument("range [m+1, m+H] exceeds sequence length");
    DivisorStats st;
    for (int n = m + 1; n <= m + H; ++n) {
        Poly f = seq.polynomial_at(n);
        if (mod(f, g).is_zero()) {
            ++st.T;
            while (true) {
                auto [quot, rem] = divrem(f, g);
                if (!rem.is_zero()) break;
                ++st.e;
                f = quot;
                if (f.degree() < g.degree()) break;
            }
        }
    }
    return st;
}

int omega_product(const CoeffSeq& seq, int m, int H, uint64_t seed) {
    if (m < 0 || H < 2 || m + H > seq.length())
        throw std::invalid_argument("range [m+1, m+H] exceeds sequence length");
    std::vector<Poly> all;
    for (int n = m + 1; n <= m + H; ++n)
        for (const auto& [g, mult] : factor(seq.polynomial_at(n), seed).factors)
            all.push_back(g);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return int(all.size());
}

int s_polynomial_count(const CoeffSeq& seq, int m, int H,
                       const std::vector<Poly>& S, uint64_t seed) {
    if (m < 0 || H < 1 || m + H > seq.length())
        throw std::invalid_argument("range [m+1, m+H] exceeds sequence length");
    std::vector<Poly> set;
    for (const Poly& g : S) {
        if (!is_irreducible(g)) throw std::invalid_argument("S contains a reducible polynomial");
        set.push_back(monic(g));
    }
    std::sort(set.begin(), set.end());
    int count = 0;
    for (int n = m + 1; n <= m + H; ++n) {
        bool inside = true;
        for (const auto& [g, mult] : factor(seq.polynomial_at(n), seed).factors)
            if (!std::binary_search(set.begin(), set.end(), g)) { inside = false; break; }
        if (inside) ++count;
    }
    return count;
}

Theorem31Check theorem31_check(const CoeffSeq& seq, int n, int d, uint64_t seed) {
    const Field& F = seq.field();
    double lnq = std::log(double(F.q()));
    if (n < int(2 * F.q())) throw std::invalid_argument("n must be >= 2q");
    if (d <= 0 || double(d) > std::log(n / 2.0) / lnq)
        throw std::invalid_argument("d out of range (0, log(n/2)/log q]");
    if (n + d > seq.length()) throw std::invalid_argument("n + d exceeds sequence length");

    Theorem31Check r;
    r.lhs = std::max(largest_factor_degree(seq.polynomial_at(n), seed),
                     largest_factor_degree(seq.polynomial_at(n + d), seed));
    r.rhs_general =
        (std::log((n + 1) / 2.0) + std::log(lnq) - std::log(std::log(n / 2.0))) / lnq;
    r.rhs_strong = std::log((n + 1) / 2.0) / lnq;
    uint64_t p = F.p();
    r.strong_applicable = (uint64_t(n + 1) % p != 0) || (uint64_t(d) % p != 0);
    r.holds_general = double(r.lhs) > r.rhs_general;
    r.holds_strong = double(r.lhs) > r.rhs_strong;
    return r;
}

uint64_t integer_multiplicative_order(uint64_t g, uint64_t m) {
    if (m < 1) throw std::invalid_argument("modulus must be >= 1");
    if (m == 1) return 1;
    g %= m;
    if (std::gcd(g, m) != 1) throw std::invalid_argument("g and m must be coprime");
    uint64_t t = 1;
    uint64_t x = g;
    while (x != 1) {
        x = (x * g) % m;
        ++t;
        if (t > m) throw std::logic_error("order computation overran the group size");
    }
    return t;
}

uint64_t all_ones_largest_degree(const Field& F, uint64_t n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    uint64_t m = n + 1;
    while (m % F.p() == 0) m /= F.p();
    if (m == 1) return 1;
    return integer_multiplicative_order(F.q() % m, m);
}

CoeffSeq all_ones_seq(const Field& F, int L) {
    std::vector<Elem> u(size_t(L) + 1, F.one());
    return CoeffSeq(F, std::move(u));
}

}  // namespace conseq
