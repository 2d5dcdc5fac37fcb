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

#include "conseq/field.hpp"

#include <algorithm>

namespace conseq {

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

// Minimal F_p[X] arithmetic used only to pick/validate the modulus.
using PPoly = std::vector<uint64_t>;  // constant term first, normalized

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    // m is monic; reduce
    while (c.size() >= m.size()) {
        uint64_t lead = c.back();
        size_t shift = c.size() - m.size();
        if (lead != 0)
            for (size_t i = 0; i < m.size(); ++i)
                c[shift + i] = (c[shift + i] + (p - m[i] % p) * lead) % p;
        c.pop_back();
        ptrim(c);
        if (c.size() < m.size()) break;
    }
    ptrim(c);
    return c;
}

PPoly ppowmod(PPoly base, uint64_t e, const PPoly& m, uint64_t p) {
    PPoly r{1};
    while (e) {
        if (e & 1) r = pmulmod(r, base, m, p);
        base = pmulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, uint64_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b
        uint64_t binv = 1;
        {   // inverse of lc(b) mod p
            uint64_t x = b.back() % p;
            for (uint64_t t = 1; t < p; ++t)
                if ((x * t) % p == 1) { binv = t; break; }
        }
        while (a.size() >= b.size()) {
            uint64_t c = (a.back() * binv) % p;
            size_t shift = a.size() - b.size();
            if (c != 0)
                for (size_t i = 0; i < b.size(); ++i)
                    a[shift + i] = (a[shift + i] + (p - b[i] % p) * c) % p;
            a.pop_back();
            ptrim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

// Rabin's criterion over F_p for the modulus candidate (monic, degree s).
bool irreducible_over_fp(const PPoly& f, uint64_t p) {
    size_t n = f.size() - 1;
    if (n == 1) return true;
    PPoly x{0, 1};
    // X^{p^n} mod f, via n successive p-th powers
    PPoly w = x;
    for (size_t i = 0; i < n; ++i) w = ppowmod(w, p, f, p);
    PPoly wx = w;  // w - X
    if (wx.size() < 2) wx.resize(2, 0);
    wx[1] = (wx[1] + p - 1) % p;
    ptrim(wx);
    if (!wx.empty()) return false;
    for (uint64_t r : prime_factors(n)) {
        PPoly v = x;
        for (size_t i = 0; i < n / r; ++i) v = ppowmod(v, p, f, p);
        PPoly vx = v;
        if (vx.size() < 2) vx.resize(2, 0);
        vx[1] = (vx[1] + p - 1) % p;
        ptrim(vx);
        PPoly g = pgcd(f, vx, p);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

Field Field::make(uint64_t p, uint32_t s, const std::vector<uint32_t>* modulus) {
    if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime: " + std::to_string(p));
    if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
    if (s < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (s > 16) throw std::invalid_argument("extension degree above 16 not supported");

    Field f;
    f.p_ = p;
    f.s_ = s;
    f.q_ = 1;
    for (uint32_t i = 0; i < s; ++i) {
        if (f.q_ > (uint64_t(1) << 20) / p)
            throw std::invalid_argument("q = p^s too large");
        f.q_ *= p;
    }
    f.ppow_.resize(s + 1);
    f.ppow_[0] = 1;
    for (uint32_t i = 1; i <= s; ++i) f.ppow_[i] = f.ppow_[i - 1] * p;

    if (s == 1) {
        f.modulus_ = {0, 1};  // X
        if (modulus) {
            if (modulus->size() != 2 || (*modulus)[1] % p != 1)
                throw std::invalid_argument("modulus for s=1 must be X");
            f.modulus_ = {(*modulus)[0] % uint32_t(p), 1};
        }
    } else if (modulus) {
        if (modulus->size() != s + 1)
            throw std::invalid_argument("modulus must have degree s");
        if ((*modulus)[s] % p != 1)
            throw std::invalid_argument("modulus must be monic");
        PPoly m(s + 1);
        f.modulus_.resize(s + 1);
        for (uint32_t i = 0; i <= s; ++i) {
            m[i] = (*modulus)[i] % p;
            f.modulus_[i] = uint32_t(m[i]);
        }
        if (!irreducible_over_fp(m, p))
            throw std::invalid_argument("supplied modulus is reducible over F_p");
    } else {
        // first monic irreducible of degree s in ascending lexicographic
        // order of (a_0,...,a_{s-1})
        PPoly m(s + 1, 0);
        m[s] = 1;
        bool found = false;
        std::vector<uint64_t> a(s, 0);
        while (true) {
            for (uint32_t i = 0; i < s; ++i) m[i] = a[i];
            if (irreducible_over_fp(m, p)) { found = true; break; }
            // increment (a_0,...,a_{s-1}) lexicographically: last varies fastest
            int i = int(s) - 1;
            while (i >= 0 && a[i] == p - 1) a[i--] = 0;
            if (i < 0) break;
            ++a[i];
        }
        if (!found) throw std::logic_error("no irreducible modulus found");
        f.modulus_.resize(s + 1);
        for (uint32_t i = 0; i <= s; ++i) f.modulus_[i] = uint32_t(m[i]);
    }

    f.build_tables();
    return f;
}

void Field::build_tables() {
    if (s_ == 1 || q_ > 2048) { tabled_ = false; }
    else {
        mul_tab_.assign(q_ * q_, 0);
        for (uint64_t a = 0; a < q_; ++a)
            for (uint64_t b = a; b < q_; ++b) {
                uint32_t r = mul_generic(Elem{uint32_t(a)}, Elem{uint32_t(b)}).v;
                mul_tab_[a * q_ + b] = r;
                mul_tab_[b * q_ + a] = r;
            }
        tabled_ = true;
    }
    // inverses by Fermat: a^{q-2}
    inv_tab_.assign(q_, 0);
    for (uint64_t a = 1; a < q_; ++a) {
        Elem r{uint32_t(1)};
        Elem base{uint32_t(a)};
        uint64_t e = q_ - 2;
        while (e) {
            if (e & 1) r = tabled_ ? Elem{mul_tab_[uint64_t(r.v) * q_ + base.v]} : mul_generic(r, base);
            base = tabled_ ? Elem{mul_tab_[uint64_t(base.v) * q_ + base.v]} : mul_generic(base, base);
            e >>= 1;
        }
        inv_tab_[a] = r.v;
    }
}

Elem Field::element(uint64_t v) const {
    if (v >= q_) throw std::invalid_argument("element index out of range");
    return Elem{uint32_t(v)};
}

Elem Field::from_int(int64_t n) const {
    int64_t r = n % int64_t(p_);
    if (r < 0) r += int64_t(p_);
    return Elem{uint32_t(r)};
}

Elem Field::add(Elem a, Elem b) const {
    check(a);
    check(b);
    if (s_ == 1) {
        uint64_t r = a.v + uint64_t(b.v);
        if (r >= p_) r -= p_;
        return Elem{uint32_t(r)};
    }
    uint64_t r = 0, x = a.v, y = b.v;
    for (uint32_t i = 0; i < s_; ++i) {
        uint64_t d = (x % p_ + y % p_) % p_;
        r += d * ppow_[i];
        x /= p_;
        y /= p_;
    }
    return Elem{uint32_t(r)};
}

Elem Field::neg(Elem a) const {
    check(a);
    if (s_ == 1) return Elem{uint32_t(a.v == 0 ? 0 : p_ - a.v)};
    uint64_t r = 0, x = a.v;
    for (uint32_t i = 0; i < s_; ++i) {
        uint64_t d = x % p_;
        r += (d == 0 ? 0 : p_ - d) * ppow_[i];
        x /= p_;
    }
    return Elem{uint32_t(r)};
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul_generic(Elem a, Elem b) const {
    if (s_ == 1) return Elem{uint32_t((uint64_t(a.v) * b.v) % p_)};
    // digit convolution, then reduction by the monic modulus
    uint64_t da[16], db[16];
    uint64_t x = a.v, y = b.v;
    for (uint32_t i = 0; i < s_; ++i) {
        da[i] = x % p_;
        db[i] = y % p_;
        x /= p_;
        y /= p_;
    }
    uint64_t c[32] = {0};
    for (uint32_t i = 0; i < s_; ++i)
        for (uint32_t j = 0; j < s_; ++j)
            c[i + j] = (c[i + j] + da[i] * db[j]) % p_;
    for (int k = 2 * int(s_) - 2; k >= int(s_); --k) {
        uint64_t lead = c[k];
        if (lead) {
            c[k] = 0;
            for (uint32_t i = 0; i < s_; ++i)
                c[k - s_ + i] = (c[k - s_ + i] + (p_ - modulus_[i]) * lead) % p_;
        }
    }
    uint64_t r = 0;
    for (uint32_t i = 0; i < s_; ++i) r += c[i] * ppow_[i];
    return Elem{uint32_t(r)};
}

Elem Field::mul(Elem a, Elem b) const {
    check(a);
    check(b);
    if (tabled_) return Elem{mul_tab_[uint64_t(a.v) * q_ + b.v]};
    return mul_generic(a, b);
}

Elem Field::inv(Elem a) const {
    check(a);
    if (a.v == 0) throw std::domain_error("inverse of zero");
    return Elem{inv_tab_[a.v]};
}

Elem Field::pow(Elem a, uint64_t e) const {
    check(a);
    Elem r = one();
    Elem base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

int Field::quadratic_character(Elem a) const {
    check(a);
    if (a.v == 0) return 0;
    Elem r = pow(a, (q_ - 1) / 2);
    return r.v == 1 ? 1 : -1;
}

uint64_t Field::multiplicative_order(Elem a) const {
    check(a);
    if (a.v == 0) throw std::domain_error("order of zero");
    uint64_t t = q_ - 1;
    for (uint64_t r : prime_factors(q_ - 1))
        while (t % r == 0 && pow(a, t / r).v == 1) t /= r;
    return t;
}

std::optional<Elem> Field::sqrt(Elem a) const {
    check(a);
    if (a.v == 0) return zero();
    if (quadratic_character(a) != 1) return std::nullopt;
    if (q_ % 4 == 3) return pow(a, (q_ + 1) / 4);
    // Tonelli-Shanks, q = 1 mod 4
    uint64_t Q = q_ - 1;
    uint32_t S = 0;
    while (Q % 2 == 0) { Q /= 2; ++S; }
    Elem z = zero();
    for (uint64_t v = 1; v < q_; ++v)
        if (quadratic_character(Elem{uint32_t(v)}) == -1) { z = Elem{uint32_t(v)}; break; }
    Elem c = pow(z, Q);
    Elem x = pow(a, (Q + 1) / 2);
    Elem t = pow(a, Q);
    uint32_t m = S;
    while (t.v != 1) {
        uint32_t i = 0;
        Elem tt = t;
        while (tt.v != 1) { tt = mul(tt, tt); ++i; }
        Elem b = c;
        for (uint32_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
        x = mul(x, b);
        c = mul(b, b);
        t = mul(t, c);
        m = i;
    }
    return x;
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out;
    out.reserve(q_);
    for (uint64_t v = 0; v < q_; ++v) out.push_back(Elem{uint32_t(v)});
    return out;
}

std::vector<Elem> Field::nonzero_elements() const {
    std::vector<Elem> out;
    out.reserve(q_ - 1);
    for (uint64_t v = 1; v < q_; ++v) out.push_back(Elem{uint32_t(v)});
    return out;
}

}  // namespace conseq
