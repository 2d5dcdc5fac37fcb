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

#include "conseq/text.hpp"

#include <sstream>

namespace conseq {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

uint64_t parse_u64(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    size_t pos = 0;
    uint64_t v = std::stoull(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad number: " + s);
    return v;
}

}  // namespace

Field parse_field_spec(const std::string& spec) {
    std::string head = spec;
    std::string mod_part;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        head = spec.substr(0, colon);
        mod_part = spec.substr(colon + 1);
    }
    uint64_t p;
    uint32_t s = 1;
    if (auto caret = head.find('^'); caret != std::string::npos) {
        p = parse_u64(head.substr(0, caret));
        s = uint32_t(parse_u64(head.substr(caret + 1)));
    } else {
        p = parse_u64(head);
    }
    if (mod_part.empty()) return Field::make(p, s);
    std::vector<uint32_t> mod;
    for (const std::string& part : split(mod_part, ','))
        mod.push_back(uint32_t(parse_u64(part)));
    return Field::make(p, s, &mod);
}

std::string format_field_spec(const Field& F) {
    if (F.s() == 1) return std::to_string(F.p());
    std::ostringstream os;
    os << F.p() << "^" << F.s() << ":";
    for (size_t i = 0; i < F.modulus().size(); ++i) {
        if (i) os << ",";
        os << F.modulus()[i];
    }
    return os.str();
}

std::string format_elem(const Field& F, Elem e) {
    F.check(e);
    if (F.s() == 1) return std::to_string(e.v);
    std::vector<uint32_t> digits(F.s());
    uint64_t x = e.v;
    for (uint32_t i = 0; i < F.s(); ++i) {
        digits[i] = uint32_t(x % F.p());
        x /= F.p();
    }
    uint32_t top = F.s() - 1;
    while (top > 0 && digits[top] == 0) --top;
    std::ostringstream os;
    for (uint32_t i = top + 1; i-- > 0;) {
        os << digits[i];
        if (F.p() > 10 && i > 0) os << '.';
    }
    return os.str();
}

Elem parse_elem(const Field& F, const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty element literal");
    if (F.s() == 1) {
        uint64_t v = parse_u64(s);
        if (v >= F.q()) throw std::invalid_argument("element out of range: " + s);
        return Elem{uint32_t(v)};
    }
    std::vector<uint64_t> digits;
    if (F.p() > 10) {
        for (const std::string& part : split(s, '.')) digits.push_back(parse_u64(part));
    } else {
        for (char c : s) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad digit in element: " + s);
            digits.push_back(uint64_t(c - '0'));
        }
    }
    if (digits.size() > F.s()) throw std::invalid_argument("too many digits: " + s);
    uint64_t v = 0;
    for (uint64_t d : digits) {
        if (d >= F.p()) throw std::invalid_argument("digit out of range: " + s);
        v = v * F.p() + d;
    }
    return Elem{uint32_t(v)};
}

std::string format_poly(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) os << ",";
        os << format_elem(f.field(), f.coeffs()[i]);
    }
    return os.str();
}

Poly parse_poly(const Field& F, const std::string& s) {
    std::vector<Elem> c;
    for (const std::string& part : split(s, ',')) c.push_back(parse_elem(F, part));
    return Poly(F, std::move(c));
}

std::string format_seq(const CoeffSeq& seq) {
    std::ostringstream os;
    for (size_t i = 0; i < seq.u().size(); ++i) {
        if (i) os << ",";
        os << format_elem(seq.field(), seq.u()[i]);
    }
    return os.str();
}

CoeffSeq parse_seq(const Field& F, const std::string& s) {
    std::vector<Elem> u;
    for (const std::string& part : split(s, ',')) u.push_back(parse_elem(F, part));
    return CoeffSeq(F, std::move(u));
}

}  // namespace conseq
