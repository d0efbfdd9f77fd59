// persalg: exact multigraded commutative algebra for multiparameter
// persistence. Subcommands cover generic matrices and their minors, Fitting
// ideals, complexes with their multiplier tables, standard monomials of
// varieties of complexes, straightening, and bifiltration homology.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "persalg/complexes.hpp"
#include "persalg/determinantal.hpp"
#include "persalg/groebner.hpp"
#include "persalg/persistence.hpp"
#include "persalg/selftest.hpp"
#include "persalg/tableaux.hpp"
#include "persalg/varieties.hpp"

#include <nlohmann/json.hpp>

using namespace persalg;
using json = nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string num;
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            num.push_back(c);
        } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!num.empty()) {
                out.push_back(std::stoi(num));
                num.clear();
            }
        } else {
            throw std::runtime_error("bad integer list: " + text);
        }
    }
    if (!num.empty()) out.push_back(std::stoi(num));
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

MonomialOrder order_from(const std::string& name) {
    if (name == "grevlex") return MonomialOrder::GradedRevLex;
    if (name == "lex") return MonomialOrder::Lex;
    throw std::runtime_error("unknown order " + name + " (use grevlex or lex)");
}

void print_ideal(const std::vector<Polynomial>& gens) {
    if (gens.empty()) {
        std::cout << "zero ideal\n";
        return;
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        std::cout << (i ? ", " : "") << gens[i].to_string();
    std::cout << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact multigraded algebra for multiparameter persistence"};
    app.require_subcommand(1);

    // generic-matrix
    auto* gm = app.add_subcommand("generic-matrix", "print a generic matrix");
    int gm_vars = 0, gm_rows = 0, gm_cols = 0, gm_start = 1;
    std::string gm_stem = "x";
    gm->add_option("--vars", gm_vars, "number of ring variables")->required();
    gm->add_option("--rows", gm_rows)->required();
    gm->add_option("--cols", gm_cols)->required();
    gm->add_option("--start", gm_start, "1-based index of the first variable");
    gm->add_option("--stem", gm_stem, "variable name stem");
    gm->callback([&] {
        auto R = make_ring(gm_vars, CoeffDomain::Integers, 0, {}, MonomialOrder::GradedRevLex,
                           gm_stem);
        std::cout << generic_matrix(R, gm_start - 1, gm_rows, gm_cols).to_string() << "\n";
    });

    // matmul
    auto* mm = app.add_subcommand("matmul", "multiply two matrices from JSON");
    std::string mm_left, mm_right;
    bool mm_json = false;
    mm->add_option("--left", mm_left)->required();
    mm->add_option("--right", mm_right)->required();
    mm->add_flag("--json", mm_json, "emit JSON instead of text");
    mm->callback([&] {
        auto A = PolyMatrix::from_json(slurp(mm_left));
        auto B = PolyMatrix::from_json(slurp(mm_right));
        auto C = A * B;
        std::cout << (mm_json ? C.to_json() : C.to_string()) << "\n";
    });

    // extpower
    auto* ep = app.add_subcommand("extpower", "exterior power of a matrix");
    std::string ep_matrix;
    int ep_k = 1;
    bool ep_transpose = false, ep_json = false;
    ep->add_option("--matrix", ep_matrix)->required();
    ep->add_option("--k", ep_k)->required();
    ep->add_flag("--transpose", ep_transpose);
    ep->add_flag("--json", ep_json);
    ep->callback([&] {
        auto A = PolyMatrix::from_json(slurp(ep_matrix));
        auto W = exterior_power(ep_k, A);
        if (ep_transpose) W = W.transpose();
        std::cout << (ep_json ? W.to_json() : W.to_string()) << "\n";
    });

    // minors
    auto* mi = app.add_subcommand("minors", "size-r minors of a matrix");
    std::string mi_matrix;
    int mi_r = 1;
    mi->add_option("--matrix", mi_matrix)->required();
    mi->add_option("--r", mi_r)->required();
    mi->callback([&] {
        auto A = PolyMatrix::from_json(slurp(mi_matrix));
        print_ideal(minors_ideal(mi_r, A));
    });

    // rank
    auto* rk = app.add_subcommand("rank", "rank of a polynomial matrix");
    std::string rk_matrix, rk_eval;
    rk->add_option("--matrix", rk_matrix)->required();
    rk->add_option("--evaluate", rk_eval, "integer point; rank of the evaluated matrix");
    rk->callback([&] {
        auto A = PolyMatrix::from_json(slurp(rk_matrix));
        if (rk_eval.empty()) {
            std::cout << rank(A) << "\n";
        } else {
            std::vector<mpz_class> pt;
            for (int v : parse_int_list(rk_eval)) pt.emplace_back(v);
            std::cout << rank_integer(A.evaluate(pt)) << "\n";
        }
    });

    // fitting
    auto* fi = app.add_subcommand("fitting", "Fitting ideal of a presentation");
    std::string fi_matrix;
    int fi_j = 0, fi_verify = 0;
    fi->add_option("--matrix", fi_matrix)->required();
    fi->add_option("--j", fi_j)->required();
    fi->add_option("--verify", fi_verify, "also run N randomized invariance checks");
    fi->callback([&] {
        Presentation P{PolyMatrix::from_json(slurp(fi_matrix))};
        auto gens = fitting_ideal(P, fi_j);
        if (gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero() &&
            gens[0].leading_term().coeff == 1) {
            std::cout << "unit ideal\n";
        } else {
            print_ideal(gens);
        }
        if (fi_verify > 0) {
            bool ok = fitting_invariance_check(P, fi_verify);
            std::cout << "invariance: " << (ok ? "pass" : "FAIL") << "\n";
            if (!ok) throw std::runtime_error("fitting invariance check failed");
        }
    });

    // rank-conditions
    auto* rc = app.add_subcommand("rank-conditions", "alternating rank sums of a Betti format");
    std::string rc_betti, rc_compare;
    bool rc_maximal = false;
    rc->add_option("--betti", rc_betti)->required();
    rc->add_flag("--maximal", rc_maximal, "list the maximal rank sequences instead");
    rc->add_option("--compare", rc_compare,
                   "second rank sequence: compare in the degeneration order");
    rc->callback([&] {
        auto betti = parse_int_list(rc_betti);
        if (rc_maximal) {
            for (const auto& r : maximal_rank_sequences(betti)) {
                for (std::size_t i = 0; i < r.size(); ++i)
                    std::cout << (i ? "," : "") << r[i];
                std::cout << "\n";
            }
            return;
        }
        auto r = rank_conditions(betti);
        if (!r) throw std::runtime_error("rank conditions fail: negative alternating sum");
        std::cout << "r = ";
        for (std::size_t i = 0; i < r->size(); ++i) std::cout << (i ? "," : "") << (*r)[i];
        std::cout << "\n";
        if (!rc_compare.empty()) {
            auto ranks = std::vector<int>(r->begin() + 1, r->end());
            RankedFormat a(betti, ranks), b(betti, parse_int_list(rc_compare));
            auto cmp = degeneration_order(a, b);
            const char* name = cmp.cmp == PartialCmp::Less      ? "less"
                               : cmp.cmp == PartialCmp::Greater ? "greater"
                               : cmp.cmp == PartialCmp::Equal   ? "equal"
                                                                : "incomparable";
            std::cout << "degeneration order: " << name << "; meet = ";
            for (std::size_t i = 0; i < cmp.meet.size(); ++i)
                std::cout << (i ? "," : "") << cmp.meet[i];
            std::cout << "\n";
        }
    });

    // be-multipliers
    auto* be = app.add_subcommand("be-multipliers", "Buchsbaum-Eisenbud multiplier table");
    std::string be_complex, be_ranks;
    long be_check = 0;
    be->add_option("--complex", be_complex)->required();
    be->add_option("--ranks", be_ranks)->required();
    be->add_option("--tchernev", be_check, "verify N instances of the quadratic identities");
    be->callback([&] {
        auto C = FreeComplex::from_json(slurp(be_complex));
        auto ranks = parse_int_list(be_ranks);
        auto T = be_multipliers(C, ranks);
        for (std::size_t k = 1; k <= T.levels.size(); ++k) {
            for (const auto& [key, poly] : T.levels[k - 1]) {
                std::cout << "<";
                for (std::size_t i = 0; i < key.size(); ++i)
                    std::cout << (i ? "," : "") << key[i];
                std::cout << ">_" << k << " = " << poly.to_string() << "\n";
            }
        }
        bool ok = be_diagram_check(C, ranks, T);
        std::cout << "diagram check: " << (ok ? "pass" : "FAIL") << "\n";
        if (!ok) throw std::runtime_error("multiplier factorization failed");
        if (be_check > 0) {
            long n = tchernev_spot_check(C, ranks, T, be_check);
            std::cout << "tchernev identities verified on " << n << " instances\n";
        }
    });

    // generic-complex
    auto* gc = app.add_subcommand("generic-complex", "universal complex ring of a format");
    std::string gc_betti, gc_cycles;
    gc->add_option("--betti", gc_betti)->required();
    gc->add_option("--exactify", gc_cycles,
                   "JSON file of cycles {level, coords: [poly,...]} to eliminate");
    gc->callback([&] {
        auto G = generic_complex_ring(parse_int_list(gc_betti));
        std::cout << "variables: " << G.ring->nvars() << "\n";
        for (std::size_t k = 0; k < G.product_blocks.size(); ++k) {
            std::cout << "block " << k + 1 << ":\n";
            print_ideal(G.product_blocks[k]);
        }
        if (!gc_cycles.empty()) {
            json j = json::parse(slurp(gc_cycles));
            std::vector<ExactificationCycle> cycles;
            for (const auto& e : j) {
                ExactificationCycle c;
                c.level = e.at("level").get<int>();
                for (const auto& s : e.at("coords"))
                    c.coords.push_back(Polynomial::parse(G.ring, s.get<std::string>()));
                cycles.push_back(std::move(c));
            }
            auto step = exactification_step(G, cycles);
            std::cout << "new variables:";
            for (const auto& nm : step.z_names) std::cout << " " << nm;
            std::cout << "\ngenerators:\n";
            print_ideal(step.generators);
        }
    });

    // standard-monomials
    auto* sm = app.add_subcommand("standard-monomials", "standard monomial theory of a format");
    std::string sm_dims, sm_ranks, sm_classify, sm_tableau, sm_member;
    int sm_degree = -1, sm_faces = -1;
    bool sm_json = false;
    sm->add_option("--dims", sm_dims)->required();
    sm->add_option("--ranks", sm_ranks)->required();
    sm->add_option("--degree", sm_degree, "enumerate standard monomials of this degree");
    sm->add_option("--classify", sm_classify, "classify one monomial");
    sm->add_option("--tableau", sm_tableau, "print the multitableau of a monomial");
    sm->add_option("--member", sm_member, "test membership in the nonstandard monomial ideal");
    sm->add_option("--faces", sm_faces, "emit simplicial faces up to this cardinality");
    sm->add_flag("--json", sm_json);
    sm->callback([&] {
        RankedFormat fmt(parse_int_list(sm_dims), parse_int_list(sm_ranks));
        if (!sm_classify.empty()) {
            auto m = SymbolMonomial::parse(fmt, sm_classify);
            switch (classify_monomial(m, fmt)) {
                case MonomialClass::Standard: std::cout << "standard\n"; break;
                case MonomialClass::NonstandardTableau:
                    std::cout << "nonstandard (multitableau)\n";
                    break;
                case MonomialClass::NonstandardVmax:
                    std::cout << "nonstandard (maximal-rank symbol divides)\n";
                    break;
            }
            return;
        }
        if (!sm_tableau.empty()) {
            auto m = SymbolMonomial::parse(fmt, sm_tableau);
            for (const auto& t : tableau_of(m, fmt)) std::cout << "(" << t.to_string() << ")\n";
            return;
        }
        if (!sm_member.empty()) {
            auto m = SymbolMonomial::parse(fmt, sm_member);
            std::cout << (initial_ideal_member(m, fmt) ? "member" : "not a member") << "\n";
            return;
        }
        if (sm_faces >= 0) {
            auto faces = delta_complex_faces(fmt, sm_faces);
            json arr = json::array();
            for (const auto& face : faces) {
                json f = json::array();
                for (const auto& v : face) f.push_back(v.to_string());
                arr.push_back(f);
            }
            std::cout << arr.dump(2) << "\n";
            return;
        }
        if (sm_degree < 0) throw std::runtime_error("choose one of --degree/--classify/...");
        auto ms = enumerate_standard(fmt, sm_degree);
        if (sm_json) {
            json arr = json::array();
            for (const auto& m : ms) arr.push_back(m.to_string());
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const auto& m : ms) std::cout << m.to_string() << "\n";
            std::cout << "count: " << ms.size() << "\n";
        }
    });

    // straighten
    auto* st = app.add_subcommand("straighten", "straightening law for bitableaux");
    std::string st_input, st_standard;
    int st_d1 = 3, st_d2 = 5;
    st->add_option("--d1", st_d1, "row bound");
    st->add_option("--d2", st_d2, "column bound");
    st->add_option("--bitableau", st_input, "bitableau (left | right)");
    st->add_option("--check-standard", st_standard, "report standardness of a tableau");
    st->callback([&] {
        if (!st_standard.empty()) {
            std::cout << (is_standard(Tableau::parse(st_standard)) ? "standard" : "nonstandard")
                      << "\n";
            return;
        }
        if (st_input.empty()) throw std::runtime_error("need --bitableau or --check-standard");
        auto bt = Bitableau::parse(st_input);
        auto out = straighten(bt, st_d1, st_d2);
        for (const auto& [t, c] : out)
            std::cout << c.get_str() << " * " << t.to_string() << "\n";
    });

    // plucker
    auto* pl = app.add_subcommand("plucker", "quadratic relations among maximal minors");
    int pl_r = 2, pl_k = 4;
    pl->add_option("--r", pl_r)->required();
    pl->add_option("--k", pl_k)->required();
    pl->callback([&] { print_ideal(plucker_relations(pl_r, pl_k)); });

    // hilbert
    auto* hi = app.add_subcommand("hilbert", "graded dimensions via Groebner staircases");
    std::string hi_matrix, hi_order = "grevlex", hi_schur;
    int hi_minors = 0, hi_maxdeg = 4, hi_rank = 2;
    hi->add_option("--matrix", hi_matrix, "matrix JSON; uses its minors ideal");
    hi->add_option("--minors-size", hi_minors, "size of the minors generating the ideal");
    hi->add_option("--max-degree", hi_maxdeg);
    hi->add_option("--order", hi_order);
    hi->add_option("--schur", hi_schur, "partition: print the Schur dimension instead");
    hi->add_option("--rank", hi_rank, "rank for --schur");
    hi->callback([&] {
        if (!hi_schur.empty()) {
            Partition lam(parse_int_list(hi_schur));
            std::cout << schur_dimension(lam, hi_rank) << "\n";
            return;
        }
        if (hi_matrix.empty()) throw std::runtime_error("need --matrix or --schur");
        auto A = PolyMatrix::from_json(slurp(hi_matrix));
        if (hi_minors <= 0) throw std::runtime_error("need --minors-size");
        auto o = order_from(hi_order);
        auto gb = groebner_basis(minors_ideal(hi_minors, A), o);
        for (int d = 0; d <= hi_maxdeg; ++d)
            std::cout << "degree " << d << ": "
                      << staircase_dimension(gb, o, A.ring()->nvars(), d) << "\n";
    });

    // bifiltration
    auto* bf = app.add_subcommand("bifiltration", "bifiltration pipeline");
    bf->require_subcommand(1);

    auto* bfb = bf->add_subcommand("build", "clique bifiltration from graph snapshots");
    std::string bfb_snaps, bfb_thresholds;
    int bfb_maxdim = 3;
    bfb->add_option("--snapshots", bfb_snaps)->required();
    bfb->add_option("--thresholds", bfb_thresholds, "strictly decreasing weights")->required();
    bfb->add_option("--max-dim", bfb_maxdim);
    bfb->callback([&] {
        auto res = flag_bifiltration(parse_snapshots_json(slurp(bfb_snaps)),
                                     parse_double_list(bfb_thresholds), bfb_maxdim);
        std::cout << res.bifiltration.to_json() << "\n";
        for (const auto& fl : res.flags) std::cerr << "flag: " << fl << "\n";
    });

    auto* bfr = bf->add_subcommand("rank-invariant", "rank of induced homology maps");
    std::string bfr_file, bfr_u, bfr_v;
    int bfr_i = 0;
    long bfr_prime = 0;
    bool bfr_all = false, bfr_csv = false;
    bfr->add_option("--bifiltration", bfr_file)->required();
    bfr->add_option("--degree", bfr_i)->required();
    bfr->add_option("--u", bfr_u);
    bfr->add_option("--v", bfr_v);
    bfr->add_option("--prime", bfr_prime, "0 for rational coefficients");
    bfr->add_flag("--all", bfr_all, "every pair u <= v on the grid");
    bfr->add_flag("--csv", bfr_csv);
    bfr->callback([&] {
        auto b = Bifiltration::from_json(slurp(bfr_file));
        auto emit = [&](const std::array<int, 2>& u, const std::array<int, 2>& v) {
            long r = rank_invariant(b, bfr_i, u, v, bfr_prime);
            if (bfr_csv) {
                std::cout << bfr_i << "," << u[0] << "," << u[1] << "," << v[0] << "," << v[1]
                          << "," << r << "\n";
            } else {
                std::cout << "rho_" << bfr_i << "((" << u[0] << "," << u[1] << ") -> (" << v[0]
                          << "," << v[1] << ")) = " << r << "\n";
            }
        };
        if (bfr_all) {
            if (bfr_csv) std::cout << "i,u1,u2,v1,v2,rank\n";
            for (int u0 = 0; u0 <= b.grid[0]; ++u0)
                for (int u1 = 0; u1 <= b.grid[1]; ++u1)
                    for (int v0 = u0; v0 <= b.grid[0]; ++v0)
                        for (int v1 = u1; v1 <= b.grid[1]; ++v1)
                            emit({u0, u1}, {v0, v1});
        } else {
            auto uu = parse_int_list(bfr_u);
            auto vv = parse_int_list(bfr_v);
            emit({uu.at(0), uu.at(1)}, {vv.at(0), vv.at(1)});
        }
    });

    auto* bfp = bf->add_subcommand("presentation", "minimal presentation of H_i");
    std::string bfp_file;
    int bfp_i = 0;
    long bfp_prime = 0;
    bfp->add_option("--bifiltration", bfp_file)->required();
    bfp->add_option("--degree", bfp_i)->required();
    bfp->add_option("--prime", bfp_prime);
    bfp->callback([&] {
        auto b = Bifiltration::from_json(slurp(bfp_file));
        auto pres = presentation_of_homology(b, bfp_i, bfp_prime);
        json j;
        auto pack = [](const std::vector<std::pair<Grade, int>>& v) {
            json arr = json::array();
            for (const auto& [g, m] : v) {
                json e;
                e["grade"] = g;
                e["multiplicity"] = m;
                arr.push_back(e);
            }
            return arr;
        };
        j["generators"] = pack(pres.generators);
        j["relations"] = pack(pres.relations);
        json rows = json::array();
        for (int r = 0; r < pres.map.mat.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < pres.map.mat.cols(); ++c)
                row.push_back(pres.map.mat.at(r, c).to_string());
            rows.push_back(row);
        }
        j["matrix"] = rows;
        std::cout << j.dump(2) << "\n";
    });

    auto* bfi = bf->add_subcommand("integral", "integral homology of one slice");
    std::string bfi_file, bfi_u;
    int bfi_i = 0;
    bfi->add_option("--bifiltration", bfi_file)->required();
    bfi->add_option("--degree", bfi_i)->required();
    bfi->add_option("--u", bfi_u)->required();
    bfi->callback([&] {
        auto b = Bifiltration::from_json(slurp(bfi_file));
        auto uu = parse_int_list(bfi_u);
        auto h = integral_homology(b, bfi_i, {uu.at(0), uu.at(1)});
        std::cout << "betti: " << h.betti << "\n";
        std::cout << "torsion:";
        for (const auto& t : h.torsion) std::cout << " " << t.get_str();
        std::cout << "\n";
    });

    // selftest
    auto* se = app.add_subcommand("selftest", "run the built-in golden and property checks");
    std::string se_filter;
    se->add_option("--filter", se_filter, "keep cases whose name contains this string");
    se->callback([&] {
        auto results = run_selftest(se_filter);
        bool all_ok = true;
        for (const auto& c : results) {
            std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
            if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
            std::cout << "\n";
            all_ok = all_ok && c.pass;
        }
        std::cout << results.size() << " case(s)\n";
        if (!all_ok) throw std::runtime_error("selftest failed");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;  // domain error
    }
}
