// Batch frontend: JSON in, JSON + text report out.
// Exit codes: 0 ok, 2 schema/input violation, 3 result unknown at the
// configured bound, 4 internal invariant failure.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <json.hpp>

#include "tropbund/complex.hpp"
#include "tropbund/finite_semiring.hpp"
#include "tropbund/labelled.hpp"
#include "tropbund/picard.hpp"
#include "tropbund/submodule.hpp"

using json = nlohmann::ordered_json;
using namespace tropbund;

namespace {

constexpr int kExitSchema = 2;
constexpr int kExitBound = 3;
constexpr int kExitInvariant = 4;

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json load_input(const std::string& path, const std::string& schema) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw SchemaError("invalid JSON in " + path + ": " + e.what());
    }
    if (!j.is_object() || j.value("schema", "") != schema)
        throw SchemaError(path + ": expected object with \"schema\": \"" + schema + "\"");
    return j;
}

void emit(const json& result, const std::string& json_out) {
    if (json_out.empty()) return;
    std::ofstream out(json_out);
    if (!out) throw SchemaError("cannot write " + json_out);
    out << result.dump(2) << "\n";
}

Q parse_q(const std::string& s) {
    Q v;
    if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
        throw SchemaError("invalid rational: " + s);
    v.canonicalize();
    return v;
}

BaseSemifield parse_base(const std::string& s) {
    if (s == "boolean") return BaseSemifield::boolean;
    if (s == "tropicalQ") return BaseSemifield::tropicalQ;
    throw SchemaError("unknown base semifield: " + s);
}

std::string base_name(BaseSemifield b) { return b == BaseSemifield::boolean ? "boolean" : "tropicalQ"; }

std::vector<std::string> chart_vars(int dim) {
    static const char* names[] = {"x", "y", "z"};
    std::vector<std::string> v;
    for (int i = 0; i < dim; ++i) v.push_back(i < 3 ? names[i] : "x" + std::to_string(i));
    return v;
}

std::string lat_monomial(const ZVec& lat) {
    auto vars = chart_vars(static_cast<int>(lat.size()));
    std::string s;
    for (std::size_t i = 0; i < lat.size(); ++i) {
        if (lat[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (lat[i] != 1) s += "^" + lat[i].get_str();
    }
    return s.empty() ? "1" : s;
}

std::string group_str(const ZQuotient& h, std::size_t divisible_rank) {
    std::string s;
    if (h.free_rank() > 0) s = h.free_rank() == 1 ? "Z" : "Z^" + std::to_string(h.free_rank());
    for (const Z& d : h.torsion()) s += (s.empty() ? "" : " + ") + ("Z/" + d.get_str());
    if (divisible_rank > 0) s += (s.empty() ? "" : " + ") + ("Q^" + std::to_string(divisible_rank));
    return s.empty() ? "0" : s;
}

// ---- shared JSON -> library object builders ----

FiniteSemiring semiring_from_json(const json& j) {
    FiniteSemiring r;
    if (!j.contains("elements") || !j.contains("add") || !j.contains("mul"))
        throw SchemaError("semiring-table/1 needs elements, add, mul");
    r.names = j["elements"].get<std::vector<std::string>>();
    r.size = r.names.size();
    r.add_t = j["add"].get<std::vector<std::vector<int>>>();
    r.mul_t = j["mul"].get<std::vector<std::vector<int>>>();
    r.zero = j.value("zero", 0);
    r.one = j.value("one", 1);
    try {
        r.validate();
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("table is not a commutative semiring: ") + e.what());
    }
    return r;
}

FiniteSemiring semiring_preset(const std::string& name) {
    if (name == "boolean") return boolean_semiring();
    if (name == "z2") return z2_ring();
    if (name == "bool-dual") return boolean_dual_number();
    if (name.rfind("chain", 0) == 0) return chain_semiring(std::stoi(name.substr(5)));
    throw SchemaError("unknown semiring preset: " + name);
}

AlgElem elem_from_json(const NormalFormAlgebra& a, const json& j) {
    if (!j.is_array()) throw SchemaError("element must be an array of [coeff, exponents] terms");
    AlgElem e;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2) throw SchemaError("term must be [coeff, exponents]");
        PuiseuxScalar c = parse_puiseux(term[0].get<std::string>());
        AlgKey k = term[1].get<std::vector<long>>();
        if (!a.key_ok(k)) throw SchemaError("exponent vector not a normal-form monomial of " + a.name());
        e.add_term(k, c);
    }
    return e;
}

json elem_to_json(const NormalFormAlgebra& a, const AlgElem& e) { return ae_str(a, e); }

NormalFormAlgebra algebra_by_name(const std::string& s) {
    if (s == "K[x]" || s == "poly") return NormalFormAlgebra{AlgebraKind::poly_line};
    if (s == "K[x^+-]" || s == "laurent") return NormalFormAlgebra{AlgebraKind::laurent_line};
    if (s == "K[x,y]/(x^2-y^3)" || s == "cusp") return NormalFormAlgebra{AlgebraKind::cusp};
    throw SchemaError("unknown algebra (use K[x], K[x^+-], or K[x,y]/(x^2-y^3)): " + s);
}

LabelledAlgebra labelled_from_json(const json& j) {
    LabelledAlgebra a = free_algebra(j.at("vars").get<std::vector<std::string>>());
    if (j.contains("monoid_relations"))
        for (const auto& rel : j["monoid_relations"]) {
            if (!rel.is_array() || rel.size() != 2) throw SchemaError("monoid relation must be [word, word]");
            a.monoid.relations.emplace_back(rel[0].get<std::vector<int>>(), rel[1].get<std::vector<int>>());
        }
    if (j.contains("lattice_gens")) {
        std::vector<ZVec> lat;
        int rank = 0;
        for (const auto& row : j["lattice_gens"]) {
            ZVec v;
            for (const auto& x : row) v.push_back(Z(x.get<long>()));
            rank = static_cast<int>(v.size());
            lat.push_back(std::move(v));
        }
        a.monoid.lattice_gens = std::move(lat);
        a.monoid.lattice_rank = rank;
    }
    for (const auto& rel : j.value("relations", json::array())) {
        AlgebraRelation r;
        for (const auto& term : rel) {
            if (!term.is_array() || term.size() != 2) throw SchemaError("relation term must be [coeff, exponents]");
            Mono m = term[1].get<Mono>();
            if (m.size() != a.nvars()) throw SchemaError("relation monomial arity mismatch");
            r.terms.emplace_back(parse_puiseux(term[0].get<std::string>()), std::move(m));
        }
        a.relations.push_back(std::move(r));
    }
    return a;
}

FiniteComplex complex_preset(const std::string& name) {
    if (name == "circle") return circle_complex();
    if (name == "path") return path_complex();
    if (name == "theta") return theta_complex();
    if (name == "wedge") return wedge_complex();
    if (name == "disc") return disc_complex();
    throw SchemaError("unknown complex preset: " + name);
}

// ---- subcommand runners ----

int run_analyze_semiring(const std::string& input, const std::string& preset, const std::string& json_out) {
    FiniteSemiring r = input.empty() ? semiring_preset(preset) : semiring_from_json(load_input(input, "semiring-table/1"));
    auto pairs = idempotent_pairs(r);
    bool trivial_only = only_trivial_idempotent_pairs(r);
    auto nil = nilradical(r);
    auto spec = spec_primes(r);
    bool zsf = r.is_zero_sum_free();
    bool gl_perm = zsf && trivial_only;

    std::cout << "semiring with " << r.size << " elements\n";
    std::cout << "zero-sum-free: " << (zsf ? "true" : "false") << "\n";
    std::cout << "idempotent pairs: " << (trivial_only ? "trivial only" : std::to_string(pairs.size()) + " (nontrivial present)") << "\n";
    std::cout << "nilradical size: " << nil.size() << ", saturated: "
              << (is_saturated_ideal(r, nil) ? "true" : "false") << "\n";
    std::cout << "spectrum: " << spec.primes.size() << " primes, "
              << (spec.connected ? "connected" : "disconnected") << "\n";
    std::cout << "invertible matrices are generalized permutation matrices: "
              << (gl_perm ? "yes" : "criterion not satisfied") << "\n";

    json out{{"schema", "result/1"},
             {"command", "analyze-semiring"},
             {"size", r.size},
             {"zero_sum_free", zsf},
             {"idempotent_pairs", pairs.size()},
             {"trivial_idempotent_pairs_only", trivial_only},
             {"nilradical_size", nil.size()},
             {"nilradical_saturated", is_saturated_ideal(r, nil)},
             {"primes", spec.primes.size()},
             {"spectrum_connected", spec.connected},
             {"gl_generalized_permutation", gl_perm}};
    emit(out, json_out);
    return 0;
}

int run_pic(const std::string& preset, const std::string& base, const std::string& json_out) {
    ToricCover cover = make_cover(fan_preset(preset), parse_base(base));
    PicardResult pic = picard_group(cover);
    std::string grp = group_str(pic.h1, static_cast<std::size_t>(pic.divisible_rank));
    std::cout << "Pic = " << grp;
    json gens = json::array();
    std::string gen_text;
    for (const auto& g : pic.generators) {
        ZVec lat = g.vals.at(0).diag.at(0).lat;
        for (const auto& v : g.vals) {
            bool nz = false;
            for (const Z& c : v.diag.at(0).lat) nz = nz || c != 0;
            if (nz) {
                lat = v.diag.at(0).lat;
                break;
            }
        }
        std::string m = lat_monomial(lat);
        gens.push_back(m);
        gen_text += (gen_text.empty() ? "" : ", ") + m;
    }
    if (!gen_text.empty()) std::cout << ", generator " << gen_text;
    std::cout << "\n";
    json out{{"schema", "result/1"}, {"command", "pic"},      {"preset", preset},
             {"base", base},         {"group", grp},          {"free_rank", pic.h1.free_rank()},
             {"divisible_rank", pic.divisible_rank},          {"generators", gens}};
    emit(out, json_out);
    return 0;
}

int run_classify(const std::string& preset, const std::string& base, int rank, long box,
                 const std::string& json_out) {
    if (rank < 1 || rank > 4) throw SchemaError("--rank must be in 1..4");
    ToricCover cover = make_cover(fan_preset(preset), parse_base(base));
    PicardResult pic = picard_group(cover);
    if (pic.h1.free_rank() > 0 && box < 1) throw SchemaError("--box must be >= 1 for infinite Pic");
    VectClassification cls = classify_vect_n(pic, rank, box);
    std::cout << "rank-" << rank << " bundle classes on " << preset << " over " << base
              << (pic.h1.free_rank() > 0 ? " (free classes in box " + std::to_string(box) + ")" : "")
              << ": " << cls.representatives.size() << "\n";
    std::cout << "classification: unordered " << rank << "-tuples of line classes\n";
    json jc = json::array();
    for (const auto& tuple : cls.representatives) {
        json jt = json::array();
        for (const auto& line : tuple) {
            json jl = json::array();
            for (const Z& v : line) jl.push_back(v.get_str());
            jt.push_back(jl);
        }
        jc.push_back(jt);
    }
    json out{{"schema", "result/1"}, {"command", "classify-bundles"}, {"preset", preset},
             {"base", base},         {"rank", rank},                  {"box", box},
             {"count", cls.representatives.size()},                           {"classes", jc}};
    emit(out, json_out);
    return 0;
}

CechCocycle cocycle_from_json(const ToricCover& cover, const json& j) {
    CechCocycle x;
    x.rank = j.at("rank").get<int>();
    if (x.rank < 1) throw SchemaError("rank must be positive");
    const auto& jv = j.at("vals");
    if (!jv.is_array() || jv.size() != cover.pairs().size())
        throw SchemaError("vals must list one value per nerve pair (" + std::to_string(cover.pairs().size()) + ")");
    for (const auto& val : jv) {
        GlnVal g;
        std::vector<int> p = val.at("perm").get<std::vector<int>>();
        if (static_cast<int>(p.size()) != x.rank) throw SchemaError("perm size must equal rank");
        g.perm = Perm(p);
        for (const auto& d : val.at("diag")) {
            Unit u = zero_unit(cover.dim());
            u.qpart = parse_q(d.value("q", "0"));
            std::vector<long> lat = d.at("lat").get<std::vector<long>>();
            if (static_cast<int>(lat.size()) != cover.dim()) throw SchemaError("lat size must equal fan rank");
            for (std::size_t i = 0; i < lat.size(); ++i) u.lat[i] = lat[i];
            g.diag.push_back(std::move(u));
        }
        if (static_cast<int>(g.diag.size()) != x.rank) throw SchemaError("diag size must equal rank");
        x.vals.push_back(std::move(g));
    }
    if (!validate_cocycle(cover, x)) throw SchemaError("transition data violates the cocycle identity");
    return x;
}

int run_decompose(const std::string& input, const std::string& json_out) {
    json j = load_input(input, "cocycle/1");
    ToricCover cover = make_cover(fan_preset(j.at("fan").get<std::string>()),
                                  parse_base(j.value("base", "tropicalQ")));
    CechCocycle x = cocycle_from_json(cover, j);
    PicardResult pic = picard_group(cover);
    auto lines = decompose_into_lines(cover, x);
    auto classes = line_class_multiset(cover, pic, x);
    std::cout << "rank-" << x.rank << " cocycle splits into " << lines.size()
              << " line summands, unique up to reordering\n";
    json jc = json::array();
    for (const auto& cls : classes) {
        json jl = json::array();
        std::string s;
        for (const Z& v : cls) {
            jl.push_back(v.get_str());
            s += (s.empty() ? "" : ",") + v.get_str();
        }
        std::cout << "line class: (" << s << ")\n";
        jc.push_back(jl);
    }
    json out{{"schema", "result/1"}, {"command", "decompose"}, {"rank", x.rank}, {"line_classes", jc}};
    emit(out, json_out);
    return 0;
}

int run_covering(const std::string& input, const std::string& json_out) {
    json j = load_input(input, "top-cocycle/1");
    FiniteComplex x = complex_preset(j.at("complex").get<std::string>());
    TopCocycle c;
    c.rank = j.at("rank").get<int>();
    if (c.rank < 1) throw SchemaError("rank must be positive");
    const auto& jp = j.at("perms");
    if (!jp.is_array() || jp.size() != x.edges.size())
        throw SchemaError("perms must list one permutation per edge (" + std::to_string(x.edges.size()) + ")");
    c.vals.clear();
    for (std::size_t e = 0; e < x.edges.size(); ++e) {
        std::vector<int> p = jp[e].get<std::vector<int>>();
        if (static_cast<int>(p.size()) != c.rank) throw SchemaError("perm size must equal rank");
        TopVal v = TopVal::id(c.rank, x.sample_count(static_cast<int>(e)));
        v.perm = Perm(p);
        c.vals.push_back(std::move(v));
    }
    if (!validate_top_cocycle(x, c)) throw SchemaError("permutation data violates the cocycle identity");
    CoveringComplex cov = covering_from_perm(x, c);
    TrivialityResult tr = is_trivial_bundle(x, c);
    std::cout << c.rank << "-fold covering has " << cov.n_components << " component(s)\n";
    std::cout << "bundle trivial iff covering trivial: " << (tr.trivial ? "trivial" : "nontrivial") << "\n";
    if (!tr.certificate.empty()) std::cout << "certificate: " << tr.certificate << "\n";
    json out{{"schema", "result/1"},       {"command", "covering"},
             {"rank", c.rank},             {"components", cov.n_components},
             {"trivial", tr.trivial},      {"certificate", tr.certificate}};
    emit(out, json_out);
    return 0;
}

int run_trop(const std::string& input, const std::string& json_out) {
    json j = load_input(input, "labelled-algebra/1");
    LabelledAlgebra a = labelled_from_json(j);
    TropPresentation t = trop_algebra(a);
    auto vars = a.monoid.gen_names;
    std::cout << "tropicalization of the labelled algebra on {";
    for (std::size_t i = 0; i < vars.size(); ++i) std::cout << (i ? "," : "") << vars[i];
    std::cout << "}\n";
    json jb = json::array(), jm = json::array();
    for (const auto& f : t.bend_generators) {
        std::cout << "bend relations of: " << f.str(vars) << "\n";
        jb.push_back(f.str(vars));
    }
    for (const auto& [u, v] : a.monoid.relations) {
        TropPoly mu = TropPoly::monomial(t.nvars, u), mv = TropPoly::monomial(t.nvars, v);
        std::cout << "monomial identification: " << mu.str(vars) << " = " << mv.str(vars) << "\n";
        jm.push_back(mu.str(vars) + " = " + mv.str(vars));
    }
    std::size_t nm = a.monoid.relations.size();
    std::cout << "congruence generated by " << (t.congruence.pairs.size() - nm) << " bend pair(s) and "
              << nm << " monomial identification(s)\n";
    json out{{"schema", "result/1"},       {"command", "trop"},
             {"vars", vars},               {"bend_generators", jb},
             {"monomial_identifications", jm},
             {"congruence_pairs", t.congruence.pairs.size()}};
    emit(out, json_out);
    return 0;
}

int run_check_valuation(const std::string& input, const std::vector<std::string>& wvals,
                        int closure_bound, const std::string& json_out) {
    json j = load_input(input, "labelled-algebra/1");
    LabelledAlgebra a = labelled_from_json(j);
    if (wvals.size() != a.nvars())
        throw SchemaError("-w needs one value per variable (" + std::to_string(a.nvars()) + ")");
    MonomialValuationWitness w;
    for (const auto& s : wvals)
        w.gen_values.push_back(s == "-inf" ? TropQ::neg_inf() : TropQ(parse_q(s)));
    WValuationReport rep = check_monomial_valuation(a, w, closure_bound);
    const char* verdict = rep.verdict == WVerdict::valid        ? "valid"
                          : rep.verdict == WVerdict::violated   ? "violated"
                                                                : "valid-at-bound";
    std::cout << "monomial valuation verdict: " << verdict << "\n";
    if (!rep.witness.empty()) std::cout << "witness: " << rep.witness << "\n";
    json out{{"schema", "result/1"},  {"command", "check-valuation"}, {"closure_bound", closure_bound},
             {"verdict", verdict},    {"witness", rep.witness}};
    emit(out, json_out);
    return rep.verdict == WVerdict::valid_at_bound ? kExitBound : 0;
}

int run_submodules(const std::string& input, const std::string& json_out) {
    json j = load_input(input, "submodule/1");
    NormalFormAlgebra alg = algebra_by_name(j.at("algebra").get<std::string>());
    std::vector<AlgElem> gens;
    for (const auto& g : j.at("generators")) gens.push_back(elem_from_json(alg, g));
    OKSubmodule n = submodule(alg, std::move(gens));
    submodule_canonicalize(n);
    std::string op = j.value("op", "canonicalize");
    json out{{"schema", "result/1"}, {"command", "submodules"}, {"algebra", alg.name()}, {"op", op}};

    auto second = [&]() {
        std::vector<AlgElem> g2;
        for (const auto& g : j.at("other")) g2.push_back(elem_from_json(alg, g));
        OKSubmodule m = submodule(alg, std::move(g2));
        submodule_canonicalize(m);
        return m;
    };
    auto print_module = [&](const OKSubmodule& m) {
        std::cout << "canonical generators: " << submodule_str(m) << "\n";
        json jg = json::array();
        for (const auto& g : m.gens) jg.push_back(elem_to_json(alg, g));
        out["generators"] = jg;
    };

    if (op == "canonicalize") {
        print_module(n);
    } else if (op == "sum" || op == "product") {
        OKSubmodule m = second();
        print_module(op == "sum" ? submodule_sum(n, m) : submodule_product(n, m));
    } else if (op == "equal") {
        bool eq = submodule_equal(n, second());
        std::cout << "equal as O_K-submodules: " << (eq ? "true" : "false") << "\n";
        out["equal"] = eq;
    } else if (op == "member") {
        AlgElem e = elem_from_json(alg, j.at("element"));
        bool mem = submodule_member(n, e);
        std::cout << "member: " << (mem ? "true" : "false") << "\n";
        out["member"] = mem;
    } else if (op == "localize") {
        if (alg.kind != AlgebraKind::poly_line) throw SchemaError("localize expects algebra K[x]");
        long pow = j.value("pow", 0);
        OKSubmodule loc = localization_psi(n, pow);
        std::cout << "image under the localization isomorphism at x (class /x^" << pow << ")\n";
        print_module(loc);
    } else {
        throw SchemaError("unknown op: " + op);
    }
    emit(out, json_out);
    return 0;
}

int run_lift(const std::string& input, const std::string& qpart, const std::vector<long>& lat,
             const std::string& json_out) {
    NormalFormAlgebra lau{AlgebraKind::laurent_line};
    AlgElem lifted;
    if (!input.empty()) {
        json j = load_input(input, "submodule/1");
        NormalFormAlgebra alg = algebra_by_name(j.at("algebra").get<std::string>());
        if (alg.kind != AlgebraKind::laurent_line) throw SchemaError("lift expects a K[x^+-] submodule");
        std::vector<AlgElem> gens;
        for (const auto& g : j.at("generators")) gens.push_back(elem_from_json(alg, g));
        OKSubmodule n = submodule(alg, std::move(gens));
        submodule_canonicalize(n);
        lifted = lift_line_value(n);
    } else {
        if (lat.size() != 1) throw SchemaError("--lat expects exactly one exponent for the rank-1 lift");
        Unit u = zero_unit(1);
        u.qpart = parse_q(qpart);
        u.lat[0] = lat[0];
        lifted = lift_line_value_unsaturated(u);
    }
    std::cout << "lifted unit: " << ae_str(lau, lifted) << "\n";
    std::cout << "well-defined up to valuation-0 units; class fixed by the principal-generator normalization\n";
    json out{{"schema", "result/1"}, {"command", "lift"}, {"unit", ae_str(lau, lifted)}};
    emit(out, json_out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tropical semiring algebra, bundle classification, and valuation toolkit"};
    app.require_subcommand(1);

    std::string json_out;
    app.add_option("--json-out", json_out, "write the machine-readable result to PATH");

    std::string as_input, as_preset = "boolean";
    auto* as = app.add_subcommand("analyze-semiring", "axioms, idempotent pairs, spectrum of a finite semiring table");
    as->add_option("input", as_input, "semiring-table/1 JSON file");
    as->add_option("--preset", as_preset, "boolean | z2 | bool-dual | chainN");

    std::string pic_preset = "P1", pic_base = "tropicalQ";
    auto* pc = app.add_subcommand("pic", "Picard group of a toric preset");
    pc->add_option("--preset", pic_preset, "P1 | P2 | P1xP1 | An | Fa(a)");
    pc->add_option("--base", pic_base, "boolean | tropicalQ");

    std::string cb_preset = "P1", cb_base = "tropicalQ";
    int cb_rank = 2;
    long cb_box = 1;
    auto* cb = app.add_subcommand("classify-bundles", "rank-n bundle classes as unordered line-class tuples");
    cb->add_option("--preset", cb_preset, "P1 | P2 | P1xP1 | An | Fa(a)");
    cb->add_option("--base", cb_base, "boolean | tropicalQ");
    cb->add_option("--rank", cb_rank, "bundle rank (1..4)");
    cb->add_option("--box", cb_box, "coordinate box for free Pic classes");

    std::string dc_input;
    auto* dc = app.add_subcommand("decompose", "split a cocycle into line summands");
    dc->add_option("input", dc_input, "cocycle/1 JSON file")->required();

    std::string cv_input;
    auto* cv = app.add_subcommand("covering", "covering space and triviality of a permutation cocycle");
    cv->add_option("input", cv_input, "top-cocycle/1 JSON file")->required();

    std::string tr_input;
    auto* tr = app.add_subcommand("trop", "tropicalize a labelled algebra");
    tr->add_option("input", tr_input, "labelled-algebra/1 JSON file")->required();

    std::string cw_input;
    std::vector<std::string> cw_w;
    int closure_bound = 6;
    auto* cw = app.add_subcommand("check-valuation", "check a monomial valuation witness");
    cw->add_option("input", cw_input, "labelled-algebra/1 JSON file")->required();
    cw->add_option("-w,--witness", cw_w, "one rational (or -inf) per variable")->required();
    cw->add_option("--closure-bound", closure_bound, "degree bound for the derived-relation closure");

    std::string sm_input;
    auto* sm = app.add_subcommand("submodules", "canonicalize / combine / compare O_K-submodules");
    sm->add_option("input", sm_input, "submodule/1 JSON file")->required();

    std::string lf_input, lf_q = "0";
    std::vector<long> lf_lat;
    auto* lf = app.add_subcommand("lift", "lift a tropical line value to a classical unit");
    lf->add_option("input", lf_input, "submodule/1 JSON file (invertible monomial submodule of K[x^+-])");
    lf->add_option("--qpart", lf_q, "rational part of the tropical unit");
    lf->add_option("--lat", lf_lat, "lattice exponent(s) of the tropical unit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitSchema;
    }

    try {
        if (*as) return run_analyze_semiring(as_input, as_preset, json_out);
        if (*pc) return run_pic(pic_preset, pic_base, json_out);
        if (*cb) return run_classify(cb_preset, cb_base, cb_rank, cb_box, json_out);
        if (*dc) return run_decompose(dc_input, json_out);
        if (*cv) return run_covering(cv_input, json_out);
        if (*tr) return run_trop(tr_input, json_out);
        if (*cw) return run_check_valuation(cw_input, cw_w, closure_bound, json_out);
        if (*sm) return run_submodules(sm_input, json_out);
        if (*lf) return run_lift(lf_input, lf_q, lf_lat, json_out);
    } catch (const SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return kExitInvariant;
    }
    return kExitSchema;
}
