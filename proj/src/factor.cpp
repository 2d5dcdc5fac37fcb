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

#include "conseq/factor.hpp"

#include <algorithm>
#include <random>

namespace conseq {

namespace {

// X^{q^k} mod f from X^{q^{k-1}} mod f is one application of Frobenius.
Poly frobenius(const Poly& h, const Poly& f) { return powmod(h, h.field().q(), f); }

uint64_t poly_hash(const Poly& f) {
    uint64_t h = 1469598103934665603ull ^ f.field().q();
    for (Elem e : f.coeffs()) {
        h ^= e.v;
        h *= 1099511628211ull;
    }
    return h;
}

Poly pth_root(const Poly& f) {
    // f = g(X^p); coefficient-wise p-th root via c^{q/p}
    const Field& F = f.field();
    uint64_t p = F.p();
    std::vector<Elem> c;
    for (size_t i = 0; size_t(i * p) <= size_t(f.degree()); ++i)
        c.push_back(F.pow(f.coeff(i * p), F.q() / p));
    return Poly(F, std::move(c));
}

void squarefree_rec(const Poly& f, int mult_scale,
                    std::vector<std::pair<Poly, int>>& out) {
    const Field& F = f.field();
    if (f.degree() < 1) return;
    Poly fp = derivative(f);
    if (fp.is_zero()) {
        squarefree_rec(pth_root(f), mult_scale * int(F.p()), out);
        return;
    }
    Poly g = gcd(f, fp);
    Poly w = divrem(f, g).first;
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, g);
        Poly fac = divrem(w, y).first;
        if (fac.degree() > 0) out.emplace_back(monic(fac), i * mult_scale);
        w = y;
        g = divrem(g, y).first;
        ++i;
    }
    // whatever survives the loop is a perfect p-th power; the recursive call
    // lands in the vanishing-derivative branch which applies the p scale
    if (g.degree() > 0) squarefree_rec(g, mult_scale, out);
}

// h^{(q^k-1)/2} mod g, written as (h^{1+q+...+q^{k-1}})^{(q-1)/2} so the
// exponent never overflows.
Poly cz_power(const Poly& h, uint32_t k, const Poly& g) {
    const Field& F = h.field();
    Poly acc = mod(h, g);
    Poly frob = mod(h, g);
    for (uint32_t i = 1; i < k; ++i) {
        frob = frobenius(frob, g);
        acc = mod(mul(acc, frob), g);
    }
    return powmod(acc, (F.q() - 1) / 2, g);
}

void equal_degree_split(const Poly& g, uint32_t k, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
    const Field& F = g.field();
    if (g.degree() == int(k)) {
        out.push_back(g);
        return;
    }
    while (true) {
        std::vector<Elem> hc(size_t(g.degree()), F.zero());
        for (Elem& e : hc) e = Elem{uint32_t(rng() % F.q())};
        Poly h(F, std::move(hc));
        if (h.degree() < 1) continue;
        Poly d = gcd(h, g);
        if (d.degree() == 0) {
            Poly t = cz_power(h, k, g);
            t = sub(t, Poly::constant(F, F.one()));
            if (t.is_zero()) continue;
            d = gcd(t, g);
        }
        if (d.degree() > 0 && d.degree() < g.degree()) {
            equal_degree_split(d, k, rng, out);
            equal_degree_split(divrem(g, d).first, k, rng, out);
            return;
        }
    }
}

// (product of irreducibles of degree k, k) pairs for square-free monic g
std::vector<std::pair<Poly, uint32_t>> distinct_degree(const Poly& g_in) {
    const Field& F = g_in.field();
    std::vector<std::pair<Poly, uint32_t>> out;
    Poly g = g_in;
    Poly h = mod(Poly::x(F), g);
    uint32_t k = 0;
    while (g.degree() >= 2 * int(k + 1)) {
        ++k;
        h = frobenius(h, g);
        Poly d = gcd(sub(h, Poly::x(F)), g);
        if (d.degree() > 0) {
            out.emplace_back(d, k);
            g = divrem(g, d).first;
            h = mod(h, g);
        }
    }
    if (g.degree() > 0) out.emplace_back(g, uint32_t(g.degree()));
    return out;
}

}  // namespace

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) throw std::domain_error("irreducibility of constant polynomial");
    if (f.degree() == 1) return true;
    const Field& F = f.field();
    Poly m = monic(f);
    uint32_t n = uint32_t(m.degree());
    Poly x = Poly::x(F);
    Poly w = mod(x, m);
    std::vector<Poly> frob_chain;  // X^{q^i} mod m for i = 1..n
    for (uint32_t i = 0; i < n; ++i) {
        w = frobenius(w, m);
        frob_chain.push_back(w);
    }
    if (!sub(frob_chain.back(), x).is_zero()) return false;
    for (uint64_t r : prime_factors(n)) {
        const Poly& v = frob_chain[n / r - 1];
        if (gcd(sub(v, x), m).degree() != 0) return false;
    }
    return true;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
    if (f.is_zero() || f.degree() < 1)
        throw std::domain_error("square-free decomposition needs degree >= 1");
    std::vector<std::pair<Poly, int>> out;
    squarefree_rec(monic(f), 1, out);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    return out;
}

Poly squarefree_part(const Poly& f) {
    const Field& F = f.field();
    Poly acc = Poly::constant(F, F.one());
    for (const auto& [g, m] : squarefree_decomposition(f)) acc = mul(acc, g);
    return acc;
}

Factorization factor(const Poly& f, uint64_t seed) {
    if (f.is_zero() || f.degree() < 1)
        throw std::domain_error("factorization needs degree >= 1");
    const Field& F = f.field();
    std::mt19937_64 rng(seed ^ poly_hash(f));
    Factorization out;
    out.unit = f.lead();
    for (const auto& [sf, mult] : squarefree_decomposition(f)) {
        for (const auto& [prod, k] : distinct_degree(sf)) {
            std::vector<Poly> irr;
            equal_degree_split(prod, k, rng, irr);
            for (const Poly& g : irr) out.factors.emplace_back(monic(g), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

int Factorization::largest_degree() const {
    int d = 0;
    for (const auto& [g, m] : factors) d = std::max(d, g.degree());
    return d;
}

int Factorization::omega() const { return int(factors.size()); }

Poly Factorization::radical(const Field& F) const {
    Poly acc = Poly::constant(F, F.one());
    for (const auto& [g, m] : factors) acc = mul(acc, g);
    return acc;
}

int largest_factor_degree(const Poly& f, uint64_t seed) {
    return factor(f, seed).largest_degree();
}

int omega(const Poly& f, uint64_t seed) { return factor(f, seed).omega(); }

Poly radical(const Poly& f, uint64_t seed) {
    return factor(f, seed).radical(f.field());
}

StickelbergerParity stickelberger_parity(const Poly& f) {
    const Field& F = f.field();
    int d = f.degree();
    if (d < 2) throw std::domain_error("Stickelberger parity needs degree >= 2");
    Poly fp = derivative(f);
    if (fp.is_zero() || gcd(f, fp).degree() != 0)
        throw std::domain_error("Stickelberger parity needs square-free input");
    int chi = F.quadratic_character(discriminant(f));
    StickelbergerParity r;
    r.disc_is_square = chi == 1;
    r.predicted_omega_parity = chi == 1 ? d % 2 : (d + 1) % 2;
    return r;
}

uint64_t count_irreducibles(const Field& F, uint32_t n) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    // Gauss: pi_q(n) = (1/n) sum_{d | n} mu(d) q^{n/d}
    __int128 total = 0;
    for (uint32_t d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        // mu(d)
        int mu = 1;
        uint32_t m = d;
        for (uint64_t r : prime_factors(d)) {
            uint32_t cnt = 0;
            while (m % r == 0) { m /= uint32_t(r); ++cnt; }
            if (cnt > 1) { mu = 0; break; }
            mu = -mu;
        }
        if (mu == 0) continue;
        __int128 pw = 1;
        for (uint32_t i = 0; i < n / d; ++i) pw *= F.q();
        total += mu * pw;
    }
    return uint64_t(total / n);
}

uint64_t count_irreducibles_all_nonzero(const Field& F, uint32_t n, uint64_t budget) {
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    uint64_t q = F.q();
    __int128 cells = 1;
    for (uint32_t i = 0; i < n; ++i) {
        cells *= (q - 1);
        if (cells > __int128(budget))
            throw std::domain_error("pi*_q(n) enumeration budget exceeded");
    }
    // monic, all lower coefficients nonzero
    std::vector<uint64_t> idx(n, 1);  // values in [1, q-1]
    uint64_t count = 0;
    while (true) {
        std::vector<Elem> c(n + 1);
        for (uint32_t i = 0; i < n; ++i) c[i] = Elem{uint32_t(idx[i])};
        c[n] = F.one();
        if (is_irreducible(Poly(F, std::move(c)))) ++count;
        uint32_t i = 0;
        while (i < n && idx[i] == q - 1) idx[i++] = 1;
        if (i == n) break;
        ++idx[i];
    }
    return count;
}

}  // namespace conseq
