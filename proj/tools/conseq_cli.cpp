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

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "conseq/bounds.hpp"
#include "conseq/factor.hpp"
#include "conseq/poly.hpp"
#include "conseq/seq.hpp"
#include "conseq/text.hpp"

using json = nlohmann::ordered_json;
using namespace conseq;

namespace {

struct Config {
    std::string field_spec;
    std::string poly, poly2, seq_str, set_str;
    uint32_t N = 2;
    int n = 1, d = 1, m = 0, H = 2;
    uint64_t seed = 0;
    uint64_t budget = uint64_t(1) << 30;
    std::string format = "json";
    std::string out;
    uint32_t threads = 1;
    bool no_symmetry = false;
};

void emit(const Config& cfg, const std::string& payload) {
    if (cfg.out.empty()) {
        std::cout << payload << "\n";
    } else {
        std::ofstream os(cfg.out);
        if (!os) throw std::runtime_error("cannot open output file: " + cfg.out);
        os << payload << "\n";
    }
}

json base_doc(const Config& cfg, const Field& F) {
    json doc;
    doc["schema"] = 1;
    doc["field"] = format_field_spec(F);
    doc["q"] = F.q();
    doc["seed"] = cfg.seed;
    return doc;
}

json factorization_json(const Field& F, const Factorization& fac) {
    json out;
    out["unit"] = format_elem(F, fac.unit);
    json list = json::array();
    for (const auto& [g, mult] : fac.factors)
        list.push_back({{"poly", format_poly(g)}, {"multiplicity", mult}});
    out["factors"] = list;
    out["D"] = fac.largest_degree();
    out["omega"] = fac.omega();
    out["rad"] = format_poly(fac.radical(F));
    return out;
}

int run(const Config& cfg, const std::string& cmd) {
    Field F = parse_field_spec(cfg.field_spec);
    json doc = base_doc(cfg, F);

    if (cmd == "factor") {
        Poly f = parse_poly(F, cfg.poly);
        doc["poly"] = format_poly(f);
        doc.update(factorization_json(F, factor(f, cfg.seed)));
    } else if (cmd == "irred") {
        Poly f = parse_poly(F, cfg.poly);
        doc["poly"] = format_poly(f);
        doc["irreducible"] = is_irreducible(f);
    } else if (cmd == "disc") {
        Poly f = parse_poly(F, cfg.poly);
        doc["poly"] = format_poly(f);
        doc["disc"] = format_elem(F, discriminant(f));
        if (cfg.format == "text") {
            std::cout << format_elem(F, discriminant(f)) << "\n";
            return 0;
        }
    } else if (cmd == "res") {
        Poly f = parse_poly(F, cfg.poly);
        Poly g = parse_poly(F, cfg.poly2);
        doc["poly"] = format_poly(f);
        doc["poly2"] = format_poly(g);
        doc["res"] = format_elem(F, resultant(f, g));
    } else if (cmd == "quartic") {
        Poly f = parse_poly(F, cfg.poly);
        if (f.degree() != 4 || !f.is_monic() || f.coeff(3).v != 0)
            throw std::invalid_argument("quartic expects a monic depressed quartic c,b,a,0,1");
        QuarticRoots roots = quartic_roots_via_resolvent(F, f.coeff(2), f.coeff(1), f.coeff(0));
        json list = json::array();
        for (Elem r : roots.roots) list.push_back(format_elem(F, r));
        doc["poly"] = format_poly(f);
        doc["roots"] = list;
        doc["fallback"] = roots.fallback;
    } else if (cmd == "seq-check") {
        CoeffSeq seq = parse_seq(F, cfg.seq_str);
        ConsecCheck chk = is_consecutive_irreducible(seq);
        doc["seq"] = format_seq(seq);
        doc["consecutive_irreducible"] = chk.ok;
        if (!chk.ok) doc["first_failure"] = chk.first_failure;
    } else if (cmd == "enumerate") {
        EnumerationResult r =
            count_sequences(F, cfg.N, !cfg.no_symmetry, cfg.budget, cfg.threads);
        doc["N"] = r.N;
        doc["I_N"] = r.count;
        doc["exact"] = r.exact;
        doc["symmetry"] = r.symmetry_reduced;
        doc["telemetry"] = {{"nodes", r.nodes_visited}, {"elapsed_seconds", r.elapsed_seconds}};
    } else if (cmd == "max-length") {
        LengthResult r = max_length_search(F, cfg.budget, cfg.threads);
        doc["L"] = r.max_length_found;
        doc["exhausted"] = r.exhausted;
        if (r.witness) doc["witness"] = format_seq(*r.witness);
        doc["telemetry"] = {{"nodes", r.nodes_visited}, {"elapsed_seconds", r.elapsed_seconds}};
    } else if (cmd == "coprime-search") {
        auto seq = coprime_sequence_search(F, cfg.H);
        doc["H"] = cfg.H;
        if (seq) {
            doc["seq"] = format_seq(*seq);
            bool verified = true;
            for (int i = 1; i <= cfg.H && verified; ++i)
                for (int j = i + 1; j <= cfg.H; ++j)
                    if (resultant(seq->polynomial_at(i), seq->polynomial_at(j)).v == 0) {
                        verified = false;
                        break;
                    }
            doc["resultants_nonzero"] = verified;
        } else {
            doc["found"] = false;
        }
    } else if (cmd == "all-ones") {
        doc["n"] = cfg.n;
        doc["D"] = all_ones_largest_degree(F, uint64_t(cfg.n));
    } else if (cmd == "stats") {
        CoeffSeq seq = parse_seq(F, cfg.seq_str);
        doc["seq"] = format_seq(seq);
        doc["m"] = cfg.m;
        doc["H"] = cfg.H;
        if (!cfg.poly.empty()) {
            Poly g = parse_poly(F, cfg.poly);
            DivisorStats st = divisor_stats(seq, cfg.m, cfg.H, g);
            doc["g"] = format_poly(g);
            doc["T"] = st.T;
            doc["e"] = st.e;
        }
        doc["omega_product"] = omega_product(seq, cfg.m, cfg.H, cfg.seed);
        if (!cfg.set_str.empty()) {
            std::vector<Poly> S;
            std::string cur;
            for (char c : cfg.set_str + ";") {
                if (c == ';') {
                    if (!cur.empty()) S.push_back(parse_poly(F, cur));
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            doc["Q"] = s_polynomial_count(seq, cfg.m, cfg.H, S, cfg.seed);
        }
    } else if (cmd == "bounds-report") {
        ReportOptions opt;
        opt.N_max = cfg.N;
        opt.enum_budget = cfg.budget;
        opt.threads = cfg.threads;
        std::vector<BoundsRow> rows = build_report(F, opt);
        if (cfg.format == "csv") {
            emit(cfg, report_csv(rows));
            return 0;
        }
        json list = json::array();
        for (const auto& r : rows) {
            json row;
            row["q"] = r.q;
            row["N"] = r.N;
            if (r.exact_I_N) row["I_N_exact"] = *r.exact_I_N;
            row["trivial"] = r.trivial.to_double();
            row["thm52"] = double(r.thm52);
            if (r.thm52_strong) row["thm52_strong"] = double(*r.thm52_strong);
            row["thm55"] = double(r.thm55);
            if (r.heuristic_est) row["heuristic_est"] = r.heuristic_est->to_double();
            row["heuristic_upper"] = r.heuristic_upper_v.to_double();
            list.push_back(row);
        }
        doc["rows"] = list;
        LengthBounds lb = length_bounds(F.q());
        doc["length_bounds"] = {{"chow_cohen_lower", lb.lower},
                                {"lower_is_exact", lb.lower_is_exact},
                                {"heuristic_upper", lb.heuristic_upper}};
        doc["metadata"] = {{"seed", cfg.seed},
                           {"budget", cfg.budget},
                           {"precision", "long double (x87 extended), round-to-nearest; "
                                         "guarded recheck in binary128"}};
        std::vector<std::string> bad = verify_report(rows, F.p());
        doc["violations"] = bad;
    } else {
        return 2;
    }
    emit(cfg, doc.dump(2));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"consecutive irreducible polynomial sequences over F_q"};
    app.require_subcommand(1);
    Config cfg;

    std::vector<std::string> cmds = {"factor",        "irred",     "disc",
                                     "res",           "quartic",   "seq-check",
                                     "enumerate",     "max-length", "coprime-search",
                                     "all-ones",      "stats",     "bounds-report"};
    for (const std::string& name : cmds) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--field", cfg.field_spec)->required();
        sub->add_option("--poly", cfg.poly);
        sub->add_option("--poly2", cfg.poly2);
        sub->add_option("--seq", cfg.seq_str);
        sub->add_option("--set", cfg.set_str);
        sub->add_option("--N", cfg.N);
        sub->add_option("--n", cfg.n);
        sub->add_option("--d", cfg.d);
        sub->add_option("--m", cfg.m);
        sub->add_option("--H", cfg.H);
        sub->add_option("--seed", cfg.seed);
        sub->add_option("--budget", cfg.budget);
        sub->add_option("--format", cfg.format);
        sub->add_option("--out", cfg.out);
        sub->add_option("--threads", cfg.threads);
        sub->add_flag("--no-symmetry", cfg.no_symmetry);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return run(cfg, cmd);
    } catch (const std::exception& e) {
        json err;
        err["schema"] = 1;
        err["error"] = e.what();
        std::cout << err.dump(2) << "\n";
        return 1;
    }
}
