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

#include "conseq/poly.hpp"

#include <algorithm>
#include <cassert>

namespace conseq {

void require_same_field(const Poly& a, const Poly& b) {
    if (a.fld_ == nullptr || b.fld_ == nullptr)
        throw std::invalid_argument("uninitialized polynomial");
    if (a.fld_ != b.fld_ && *a.fld_ != *b.fld_)
        throw std::invalid_argument("polynomials over different fields");
}

Poly::Poly(const Field& f, std::vector<Elem> coeffs) : fld_(&f), c_(std::move(coeffs)) {
    for (Elem e : c_) f.check(e);
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

Poly Poly::from_ints(const Field& f, const std::vector<int64_t>& coeffs) {
    std::vector<Elem> c;
    c.reserve(coeffs.size());
    for (int64_t n : coeffs) c.push_back(f.from_int(n));
    return Poly(f, std::move(c));
}

Elem Poly::lead() const {
    if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return c_.back();
}

bool operator==(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    return a.c_ == b.c_;
}

bool operator<(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (size_t i = a.c_.size(); i-- > 0;)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
}

Poly add(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& F = a.field();
    std::vector<Elem> c(std::max(a.coeffs().size(), b.coeffs().size()), F.zero());
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.add(a.coeff(i), b.coeff(i));
    return Poly(F, std::move(c));
}

Poly neg(const Poly& a) {
    const Field& F = a.field();
    std::vector<Elem> c(a.coeffs());
    for (Elem& e : c) e = F.neg(e);
    return Poly(F, std::move(c));
}

Poly sub(const Poly& a, const Poly& b) { return add(a, neg(b)); }

Poly mul(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const Field& F = a.field();
    if (a.is_zero() || b.is_zero()) return Poly::zero(F);
    std::vector<Elem> c(a.coeffs().size() + b.coeffs().size() - 1, F.zero());
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        Elem ai = a.coeffs()[i];
        if (ai.v == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(ai, b.coeffs()[j]));
    }
    return Poly(F, std::move(c));
}

Poly mul(const Poly& a, Elem s) {
    const Field& F = a.field();
    std::vector<Elem> c(a.coeffs());
    for (Elem& e : c) e = F.mul(e, s);
    return Poly(F, std::move(c));
}

std::pair<Poly, Poly> divrem(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    const Field& F = f.field();
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    if (f.degree() < g.degree()) return {Poly::zero(F), f};
    Elem inv_lead = F.inv(g.lead());
    std::vector<Elem> r(f.coeffs());
    std::vector<Elem> q(f.degree() - g.degree() + 1, F.zero());
    for (int k = f.degree(); k >= g.degree(); --k) {
        Elem c = F.mul(r[k], inv_lead);
        if (c.v == 0) continue;
        q[k - g.degree()] = c;
        for (int i = 0; i <= g.degree(); ++i)
            r[k - g.degree() + i] = F.sub(r[k - g.degree() + i], F.mul(c, g.coeffs()[i]));
    }
    return {Poly(F, std::move(q)), Poly(F, std::move(r))};
}

Poly mod(const Poly& f, const Poly& g) { return divrem(f, g).second; }

Poly monic(const Poly& f) {
    if (f.is_zero()) return f;
    return mul(f, f.field().inv(f.lead()));
}

Poly gcd(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    if (f.is_zero() && g.is_zero()) throw std::domain_error("gcd(0, 0)");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = mod(a, b);
        a = b;
        b = r;
    }
    return monic(a);
}

Poly derivative(const Poly& f) {
    const Field& F = f.field();
    if (f.degree() < 1) return Poly::zero(F);
    std::vector<Elem> c(f.degree(), F.zero());
    for (int i = 1; i <= f.degree(); ++i)
        c[i - 1] = F.mul(f.coeffs()[i], F.from_int(i));
    return Poly(F, std::move(c));
}

Elem eval(const Poly& f, Elem x) {
    const Field& F = f.field();
    Elem r = F.zero();
    for (size_t i = f.coeffs().size(); i-- > 0;)
        r = F.add(F.mul(r, x), f.coeffs()[i]);
    return r;
}

Poly powmod(const Poly& a, uint64_t e, const Poly& m) {
    require_same_field(a, m);
    const Field& F = a.field();
    Poly r = Poly::constant(F, F.one());
    Poly base = mod(a, m);
    while (e) {
        if (e & 1) r = mod(mul(r, base), m);
        base = mod(mul(base, base), m);
        e >>= 1;
    }
    return r;
}

namespace {

// Determinant over F_q by Gaussian elimination with row swaps.
Elem det_gauss(const Field& F, std::vector<std::vector<Elem>> m) {
    size_t n = m.size();
    Elem det = F.one();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col].v == 0) ++piv;
        if (piv == n) return F.zero();
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = F.neg(det);
        }
        det = F.mul(det, m[col][col]);
        Elem inv_p = F.inv(m[col][col]);
        for (size_t row = col + 1; row < n; ++row) {
            if (m[row][col].v == 0) continue;
            Elem factor = F.mul(m[row][col], inv_p);
            for (size_t k = col; k < n; ++k)
                m[row][k] = F.sub(m[row][k], F.mul(factor, m[col][k]));
        }
    }
    return det;
}

// Sylvester matrix at nominal degrees (df, dg): dg rows of f shifts followed
// by df rows of g shifts, coefficients in descending order.
std::vector<std::vector<Elem>> sylvester(const Field& F, const Poly& f, int df,
                                         const Poly& g, int dg) {
    size_t n = size_t(df + dg);
    std::vector<std::vector<Elem>> m(n, std::vector<Elem>(n, F.zero()));
    for (int r = 0; r < dg; ++r)
        for (int i = 0; i <= df; ++i)
            m[r][r + i] = f.coeff(size_t(df - i));
    for (int r = 0; r < df; ++r)
        for (int i = 0; i <= dg; ++i)
            m[dg + r][r + i] = g.coeff(size_t(dg - i));
    return m;
}

}  // namespace

Elem resultant_nominal(const Poly& f, int df, const Poly& g, int dg) {
    require_same_field(f, g);
    const Field& F = f.field();
    if (df < 0 || dg < 0 || f.degree() > df || g.degree() > dg)
        throw std::invalid_argument("nominal degree below actual degree");
    if (df + dg == 0) return F.one();
    if (dg == 0) return F.pow(g.coeff(0), uint64_t(df));
    if (df == 0) {
        Elem r = F.pow(f.coeff(0), uint64_t(dg));
        // (-1)^{df*dg} factor is trivial here since df = 0
        return r;
    }
    return det_gauss(F, sylvester(F, f, df, g, dg));
}

Elem resultant(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("resultant of zero polynomial");
    return resultant_nominal(f, f.degree(), g, g.degree());
}

Elem discriminant(const Poly& f) {
    const Field& F = f.field();
    int d = f.degree();
    if (d < 1) throw std::domain_error("discriminant of constant polynomial");
    if (d == 1) return F.one();
    Elem res = resultant_nominal(f, d, derivative(f), d - 1);
    Elem disc = F.mul(F.inv(f.lead()), res);
    if ((uint64_t(d) * (d - 1) / 2) % 2 == 1) disc = F.neg(disc);
    return disc;
}

namespace {

// F_q[eps]/(eps^2); enough to divide the Sylvester determinant by a_d = eps
// symbolically in the deficient-degree discriminant evaluation.
struct Dual {
    Elem a, b;  // a + b eps
};

Dual dadd(const Field& F, Dual x, Dual y) { return {F.add(x.a, y.a), F.add(x.b, y.b)}; }
Dual dmul(const Field& F, Dual x, Dual y) {
    return {F.mul(x.a, y.a), F.add(F.mul(x.a, y.b), F.mul(x.b, y.a))};
}

// Division-free determinant via Laplace expansion with memoization on
// column subsets. Only used for small matrices (n <= 20).
Dual det_dual(const Field& F, const std::vector<std::vector<Dual>>& m) {
    size_t n = m.size();
    if (n > 20) throw std::invalid_argument("dual determinant limited to n <= 20");
    std::vector<Dual> memo(size_t(1) << n, Dual{F.zero(), F.zero()});
    std::vector<bool> seen(size_t(1) << n, false);
    // iterate over masks by popcount: mask = set of still-free columns used
    // by rows [n - popcount, n)
    memo[0] = Dual{F.one(), F.zero()};
    seen[0] = true;
    std::vector<uint32_t> order(size_t(1) << n);
    for (uint32_t i = 0; i < (uint32_t(1) << n); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [](uint32_t x, uint32_t y) {
        int px = __builtin_popcount(x), py = __builtin_popcount(y);
        return px != py ? px < py : x < y;
    });
    for (uint32_t mask : order) {
        if (mask == 0) continue;
        int k = __builtin_popcount(mask);
        size_t row = n - size_t(k);
        Dual acc{F.zero(), F.zero()};
        int sign = 1;
        for (size_t col = 0; col < n; ++col) {
            if (!(mask & (uint32_t(1) << col))) continue;
            uint32_t rest = mask & ~(uint32_t(1) << col);
            Dual term = dmul(F, m[row][col], memo[rest]);
            if (sign < 0) term = Dual{F.neg(term.a), F.neg(term.b)};
            acc = dadd(F, acc, term);
            sign = -sign;
        }
        memo[mask] = acc;
        seen[mask] = true;
    }
    return memo[(size_t(1) << n) - 1];
}

}  // namespace

Elem discriminant_nominal(const Poly& f, int d) {
    const Field& F = f.field();
    if (d < 1) throw std::domain_error("nominal degree must be >= 1");
    if (f.degree() == d) return discriminant(f);
    if (f.degree() != d - 1)
        throw std::invalid_argument("discriminant_nominal expects deg f in {d, d-1}");
    if (d == 1) return F.one();
    // f = eps X^d + g, f' = d eps X^{d-1} + g'; build the (2d-1)-dim
    // Sylvester matrix over dual numbers and read off the eps coefficient.
    Poly g = f;
    Poly gp = derivative(g);
    size_t n = size_t(2 * d - 1);
    std::vector<std::vector<Dual>> m(n, std::vector<Dual>(n, Dual{F.zero(), F.zero()}));
    Elem de = F.from_int(d);
    for (int r = 0; r < d - 1; ++r)
        for (int i = 0; i <= d; ++i) {
            Elem a = (i == 0) ? F.zero() : g.coeff(size_t(d - i));
            Elem b = (i == 0) ? F.one() : F.zero();
            m[size_t(r)][size_t(r + i)] = Dual{a, b};
        }
    for (int r = 0; r < d; ++r)
        for (int i = 0; i <= d - 1; ++i) {
            Elem a = (i == 0) ? F.zero() : gp.coeff(size_t(d - 1 - i));
            Elem b = (i == 0) ? de : F.zero();
            m[size_t(d - 1 + r)][size_t(r + i)] = Dual{a, b};
        }
    Dual det = det_dual(F, m);
    // Res = a_d * (+-Disc); at a_d = eps the determinant is pure eps, and
    // Disc is its linear coefficient up to the usual sign.
    Elem disc = det.b;
    if ((uint64_t(d) * (d - 1) / 2) % 2 == 1) disc = F.neg(disc);
    return disc;
}

Poly reciprocal(const Poly& f) {
    const Field& F = f.field();
    if (f.is_zero() || f.coeff(0).v == 0)
        throw std::domain_error("reciprocal requires nonzero constant term");
    std::vector<Elem> c(f.coeffs());
    std::reverse(c.begin(), c.end());
    return Poly(F, std::move(c));
}

Poly cubic_resolvent(const Field& F, Elem a, Elem b, Elem c) {
    if (F.p() == 3) throw std::domain_error("cubic resolvent needs characteristic != 3");
    Elem two = F.from_int(2);
    Elem four = F.from_int(4);
    std::vector<Elem> r(4, F.zero());
    r[3] = F.one();
    r[2] = F.mul(two, a);
    r[1] = F.sub(F.mul(a, a), F.mul(four, c));
    r[0] = F.neg(F.mul(b, b));
    return Poly(F, std::move(r));
}

namespace {

// Roots in F_q with multiplicity, by scan and deflation.
std::vector<Elem> roots_with_multiplicity(const Poly& f) {
    const Field& F = f.field();
    std::vector<Elem> out;
    Poly g = f;
    for (uint64_t v = 0; v < F.q() && g.degree() > 0; ++v) {
        Elem x{uint32_t(v)};
        while (g.degree() > 0 && eval(g, x).v == 0) {
            out.push_back(x);
            Poly lin(F, {F.neg(x), F.one()});
            g = divrem(g, lin).first;
        }
    }
    return out;
}

}  // namespace

QuarticRoots quartic_roots_via_resolvent(const Field& F, Elem a, Elem b, Elem c) {
    if (F.p() == 3) throw std::domain_error("resolvent procedure needs characteristic != 3");
    std::vector<Elem> qc = {c, b, a, F.zero(), F.one()};
    Poly quartic(F, qc);

    Poly R = cubic_resolvent(F, a, b, c);
    std::vector<Elem> rr = roots_with_multiplicity(R);
    QuarticRoots result;
    bool ok = rr.size() == 3;
    std::vector<Elem> gam(3, F.zero());
    if (ok) {
        for (int i = 0; i < 3; ++i) {
            auto s = F.sqrt(rr[size_t(i)]);
            if (!s) { ok = false; break; }
            gam[size_t(i)] = *s;
        }
    }
    if (ok) {
        // enforce gamma1*gamma2*gamma3 = -b by flipping one sign
        Elem prod = F.mul(F.mul(gam[0], gam[1]), gam[2]);
        Elem target = F.neg(b);
        if (prod != target) {
            bool fixed = false;
            for (int i = 0; i < 3 && !fixed; ++i) {
                Elem save = gam[size_t(i)];
                gam[size_t(i)] = F.neg(save);
                Elem pr = F.mul(F.mul(gam[0], gam[1]), gam[2]);
                if (pr == target) fixed = true;
                else gam[size_t(i)] = save;
            }
            ok = fixed;
        }
    }
    if (ok) {
        Elem half = F.inv(F.from_int(2));
        Elem g1 = gam[0], g2 = gam[1], g3 = gam[2];
        std::vector<Elem> beta = {
            F.mul(half, F.add(F.add(g1, g2), g3)),
            F.mul(half, F.sub(F.sub(g1, g2), g3)),
            F.mul(half, F.sub(F.sub(g2, g1), g3)),
            F.mul(half, F.sub(F.sub(g3, g1), g2)),
        };
        for (Elem be : beta)
            if (eval(quartic, be).v == 0) result.roots.push_back(be);
        std::sort(result.roots.begin(), result.roots.end());
        return result;
    }
    result.fallback = true;
    result.roots = roots_with_multiplicity(quartic);
    std::sort(result.roots.begin(), result.roots.end());
    return result;
}

}  // namespace conseq
