// Command-line front end: load complexes and chains, run homology and
// symmetric-squaring computations and the theorem checks, and emit
// JSON reports.
//
// Exit codes: 0 success (and check true), 1 check false, 2 input
// error, 3 resource guard.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symsq/borel.hpp"
#include "symsq/homology.hpp"
#include "symsq/io.hpp"
#include "symsq/manifolds.hpp"
#include "symsq/product.hpp"
#include "symsq/symsq.hpp"

using namespace symsq;

namespace {

struct Options {
    std::string complex_path, second_path, chain_path, perturb_path, map_path;
    std::string ring = "Z";
    std::string rel_label, rel_second;
    std::string out_path;
    int dim = -1;
    int level = 0;
    int max_level = 1;
    int level_cap = 2;
    int sphere = 1;
    std::string degrees = "0";
};

void emit(const Json& report, const Options& opt) {
    std::string text = report.dump(2) + "\n";
    if (opt.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out_path);
        if (!out) throw InputError("cannot write " + opt.out_path);
        out << text;
    }
}

void check_level(const Options& opt, int level) {
    if (level < 0 || level > opt.level_cap)
        throw InputError("tower level must be between 0 and " +
                         std::to_string(opt.level_cap));
}

template <class T>
std::string coeff_str(const T& c) {
    if constexpr (RingTraits<T>::is_field)
        return c == T(0) ? "0" : "1";
    else
        return c.str();
}

Json simplex_json(const Simplex& s) {
    Json a = Json::array();
    for (int v : s) a.push_back(v);
    return a;
}

template <class T>
Json chain_json(const SimplicialChains<T>& XA, const Chain<T>& c) {
    Json terms = Json::array();
    for (const auto& [cell, g] : c.terms)
        terms.push_back(Json::array(
            {coeff_str(g), simplex_json(XA.cell(c.degree, cell))}));
    return terms;
}

template <class T>
Json quotient_chain_json(const ProductPair<T>& P, const QuotientPair<T>& Q,
                         const Chain<T>& c) {
    Json terms = Json::array();
    for (const auto& [orbit, g] : c.terms) {
        const ProductCell& pc =
            P.rel_cells[c.degree][Q.rep_of_orbit[c.degree][orbit]];
        Json cell = Json::array({simplex_json(P.X->cell(pc.p, pc.i)),
                                 simplex_json(P.X->cell(c.degree - pc.p, pc.j))});
        terms.push_back(Json{{"coef", coeff_str(g)},
                             {"cell", cell},
                             {"orbit", true}});
    }
    return terms;
}

Subcomplex chosen_subcomplex(const ComplexFile& cf, const std::string& label) {
    if (label.empty()) return Subcomplex::empty(cf.K);
    return cf.subcomplex(label);
}

template <class T>
int run_homology(const Options& opt) {
    ComplexFile cf = load_complex(opt.complex_path);
    auto XA = relative_complex<T>(cf.K, chosen_subcomplex(cf, opt.rel_label));
    Json rep{{"schema", 1},
             {"command", "homology"},
             {"name", cf.name},
             {"ring", RingTraits<T>::name()}};
    auto group_json = [&](int k) {
        auto H = homology(XA.C, k);
        Json torsion = Json::array();
        for (const Int& t : H.torsion) torsion.push_back(t.str());
        return Json{{"degree", k}, {"betti", H.betti}, {"torsion", torsion}};
    };
    if (opt.dim >= 0) {
        Json g = group_json(opt.dim);
        rep["betti"] = g["betti"];
        rep["torsion"] = g["torsion"];
        rep["degree"] = opt.dim;
    } else {
        Json groups = Json::array();
        for (int k = 0; k <= XA.C.top(); ++k) groups.push_back(group_json(k));
        rep["groups"] = groups;
    }
    emit(rep, opt);
    return 0;
}

template <class T>
Chain<T> load_input_chain(const Options& opt, const std::string& path,
                          const SimplicialChains<T>& XA) {
    ChainFile ch = load_chain(path);
    if (ch.ring != opt.ring)
        throw InputError("chain ring " + ch.ring +
                         " does not match requested ring " + opt.ring);
    return chain_from_file(ch, XA);
}

template <class T>
int run_symsq(const Options& opt) {
    check_level(opt, opt.level);
    ComplexFile cf = load_complex(opt.complex_path);
    DiagonalTower<T> tower(cf.K, chosen_subcomplex(cf, opt.rel_label));
    Chain<T> z = load_input_chain<T>(opt, opt.chain_path, tower.level(0).rel);
    for (int l = 0; l < opt.level; ++l) z = tower.subdivide_chain(l, z);
    const auto& L = tower.level(opt.level);
    Chain<T> s = sym_square_class<T>(L, z);
    Json rep{{"schema", 1},
             {"command", "symsq"},
             {"name", cf.name},
             {"ring", RingTraits<T>::name()},
             {"level", opt.level},
             {"degree", s.degree},
             {"cycle", true},
             {"terms", quotient_chain_json(L.prod, L.quot, s)}};
    emit(rep, opt);
    return 0;
}

template <class T>
int run_half_square(const Options& opt) {
    check_level(opt, opt.level);
    ComplexFile cf = load_complex(opt.complex_path);
    DiagonalTower<T> tower(cf.K, chosen_subcomplex(cf, opt.rel_label));
    Chain<T> z = load_input_chain<T>(opt, opt.chain_path, tower.level(0).rel);
    auto r = half_square_check(tower, opt.level, z);
    Json rep{{"schema", 1},
             {"check", "half-square"},
             {"ring", RingTraits<T>::name()},
             {"level", r.level},
             {"result", r.result},
             {"details", {{"projected_square_null", r.projected_square_null}}}};
    emit(rep, opt);
    return r.result ? 0 : 1;
}

template <class T>
int run_well_defined(const Options& opt) {
    check_level(opt, opt.max_level);
    ComplexFile cf = load_complex(opt.complex_path);
    DiagonalTower<T> tower(cf.K, chosen_subcomplex(cf, opt.rel_label));
    const auto& L0 = tower.level(0);
    Chain<T> z = load_input_chain<T>(opt, opt.chain_path, L0.rel);
    Chain<T> w(z.degree + 1);
    if (!opt.perturb_path.empty())
        w = load_input_chain<T>(opt, opt.perturb_path, L0.rel);
    auto r = well_definedness_check(tower, z, w, opt.max_level);
    Json equal_at = Json::array();
    for (char e : r.equal_at) equal_at.push_back(e != 0);
    Json rep{{"schema", 1},
             {"check", "well-defined"},
             {"ring", RingTraits<T>::name()},
             {"level", r.first_level},
             {"result", r.result},
             {"details",
              {{"first_agree_level", r.first_level}, {"equal_at", equal_at}}}};
    emit(rep, opt);
    return r.result ? 0 : 1;
}

template <class T>
int run_naturality(const Options& opt) {
    check_level(opt, opt.level);
    ComplexFile dom = load_complex(opt.complex_path);
    ComplexFile cod = load_complex(opt.second_path);
    DiagonalTower<T> src(dom.K, chosen_subcomplex(dom, opt.rel_label));
    DiagonalTower<T> dst(cod.K, chosen_subcomplex(cod, opt.rel_second));
    SimplicialMap g(dom.K, cod.K, load_vertex_map(opt.map_path));
    Chain<T> z = load_input_chain<T>(opt, opt.chain_path, src.level(0).rel);
    auto r = naturality_check(g, src, dst, z, opt.level);
    Json rep{{"schema", 1},
             {"check", "naturality"},
             {"ring", RingTraits<T>::name()},
             {"level", r.level},
             {"result", r.result},
             {"details", Json::object()}};
    emit(rep, opt);
    return r.result ? 0 : 1;
}

template <class T>
int run_compat(const Options& opt) {
    check_level(opt, opt.level);
    ComplexFile dom = load_complex(opt.complex_path);
    ComplexFile cod = load_complex(opt.second_path);
    PseudomanifoldReport pm = analyze(dom.K);
    if (!pm.pure || !pm.ridge_ok)
        throw StructureError("compat: domain is not a pseudomanifold");
    Subcomplex bd = pm.boundary;
    DiagonalTower<T> src(dom.K, bd);
    DiagonalTower<T> dst(cod.K, chosen_subcomplex(cod, opt.rel_second));
    SimplicialMap f(dom.K, cod.K, load_vertex_map(opt.map_path));
    auto r = compat_check(f, src, dst, opt.level);
    Json rep{{"schema", 1},
             {"check", "compat"},
             {"ring", RingTraits<T>::name()},
             {"level", r.level},
             {"result", r.result},
             {"details", Json::object()}};
    emit(rep, opt);
    return r.result ? 0 : 1;
}

template <class T>
int run_fund_square(const Options& opt) {
    check_level(opt, opt.level);
    check_level(opt, opt.max_level);
    ComplexFile cf = load_complex(opt.complex_path);
    DiagonalTower<T> tower(cf.K, Subcomplex::empty(cf.K));
    auto r = fundamental_square_check(tower, opt.level,
                                      std::max(opt.level, opt.max_level));
    Json rep{{"schema", 1},
             {"check", "fund-square"},
             {"ring", RingTraits<T>::name()},
             {"level", r.level},
             {"result", r.result},
             {"details",
              {{"escalated", r.escalated}, {"reason", r.reason}}}};
    emit(rep, opt);
    return r.result ? 0 : 1;
}

int run_borel_compare(const Options& opt) {
    check_level(opt, opt.level);
    if (opt.ring == "Z")
        throw InputError("borel-compare supports only ring Z2");
    ComplexFile cf = load_complex(opt.complex_path);
    std::vector<int> degrees;
    std::stringstream ss(opt.degrees);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            degrees.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw InputError("--degrees must be a comma-separated int list");
        }
    }
    if (degrees.empty()) throw InputError("--degrees must be nonempty");
    auto r = borel_compare(cf.K, opt.sphere, degrees, opt.level);
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back(Json{{"degree", e.degree},
                               {"betti_borel", e.betti_borel},
                               {"betti_sys", e.betti_sys},
                               {"betti_sys_next", e.betti_sys_next},
                               {"equal", e.equal},
                               {"stable", e.stable},
                               {"reliable", e.reliable}});
    Json rep{{"schema", 1},
             {"check", "borel-compare"},
             {"ring", "Z2"},
             {"sphere", r.N},
             {"level", r.level},
             {"result", r.result},
             {"entries", entries}};
    emit(rep, opt);
    return r.result ? 0 : 1;
}

template <class F>
int dispatch_ring(const std::string& ring, F&& f) {
    if (ring == "Z") return f(Int{});
    if (ring == "Z2") return f(GF2(0));
    throw InputError("ring must be Z or Z2");
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"symmetric-squaring toolkit"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* c) {
        c->add_option("--ring", opt.ring, "coefficient ring: Z or Z2");
        c->add_option("--out", opt.out_path, "write the JSON report here");
        c->add_option("--level-cap", opt.level_cap, "maximum tower level");
    };

    auto* hom = app.add_subcommand("homology", "homology of a complex");
    hom->add_option("complex", opt.complex_path)->required();
    hom->add_option("--rel", opt.rel_label, "subcomplex label");
    hom->add_option("--dim", opt.dim, "single degree");
    add_common(hom);

    auto* sq = app.add_subcommand("symsq", "symmetric square of a cycle");
    sq->add_option("complex", opt.complex_path)->required();
    sq->add_option("chain", opt.chain_path)->required();
    sq->add_option("--rel", opt.rel_label);
    sq->add_option("--level", opt.level);
    add_common(sq);

    auto* check = app.add_subcommand("check", "theorem checks");
    check->require_subcommand(1);

    auto* hs = check->add_subcommand("half-square");
    hs->add_option("complex", opt.complex_path)->required();
    hs->add_option("chain", opt.chain_path)->required();
    hs->add_option("--rel", opt.rel_label);
    hs->add_option("--level", opt.level);
    add_common(hs);

    auto* wd = check->add_subcommand("well-defined");
    wd->add_option("complex", opt.complex_path)->required();
    wd->add_option("chain", opt.chain_path)->required();
    wd->add_option("--perturb", opt.perturb_path, "chain w; z + boundary(w)");
    wd->add_option("--rel", opt.rel_label);
    wd->add_option("--max-level", opt.max_level);
    add_common(wd);

    auto* nat = check->add_subcommand("naturality");
    nat->add_option("domain", opt.complex_path)->required();
    nat->add_option("codomain", opt.second_path)->required();
    nat->add_option("chain", opt.chain_path)->required();
    nat->add_option("--map", opt.map_path, "vertex map JSON file")->required();
    nat->add_option("--rel", opt.rel_label);
    nat->add_option("--rel-codomain", opt.rel_second);
    nat->add_option("--level", opt.level);
    add_common(nat);

    auto* cp = check->add_subcommand("compat");
    cp->add_option("domain", opt.complex_path)->required();
    cp->add_option("codomain", opt.second_path)->required();
    cp->add_option("--map", opt.map_path, "vertex map JSON file")->required();
    cp->add_option("--rel-codomain", opt.rel_second);
    cp->add_option("--level", opt.level);
    add_common(cp);

    auto* fs = check->add_subcommand("fund-square");
    fs->add_option("complex", opt.complex_path)->required();
    fs->add_option("--level", opt.level);
    fs->add_option("--max-level", opt.max_level);
    add_common(fs);

    auto* bc = app.add_subcommand("borel-compare", "Borel vs sys Betti");
    bc->add_option("complex", opt.complex_path)->required();
    bc->add_option("--sphere", opt.sphere, "sphere dimension N")->required();
    bc->add_option("--degrees", opt.degrees, "comma-separated degrees")
        ->required();
    bc->add_option("--level", opt.level);
    add_common(bc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (bc->parsed() && bc->count("--ring") == 0) opt.ring = "Z2";

    try {
        if (hom->parsed())
            return dispatch_ring(opt.ring, [&](auto tag) {
                return run_homology<decltype(tag)>(opt);
            });
        if (sq->parsed())
            return dispatch_ring(opt.ring, [&](auto tag) {
                return run_symsq<decltype(tag)>(opt);
            });
        if (hs->parsed())
            return dispatch_ring(opt.ring, [&](auto tag) {
                return run_half_square<decltype(tag)>(opt);
            });
        if (wd->parsed())
            return dispatch_ring(opt.ring, [&](auto tag) {
                return run_well_defined<decltype(tag)>(opt);
            });
        if (nat->parsed())
            return dispatch_ring(opt.ring, [&](auto tag) {
                return run_naturality<decltype(tag)>(opt);
            });
        if (cp->parsed())
            return dispatch_ring(opt.ring, [&](auto tag) {
                return run_compat<decltype(tag)>(opt);
            });
        if (fs->parsed())
            return dispatch_ring(opt.ring, [&](auto tag) {
                return run_fund_square<decltype(tag)>(opt);
            });
        if (bc->parsed()) return run_borel_compare(opt);
        throw InputError("no command");
    } catch (const ResourceError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
