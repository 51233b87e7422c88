#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nslat/checks.hpp"
#include "nslat/chern.hpp"
#include "nslat/ns_lattice.hpp"

namespace nslat {

using Json = nlohmann::ordered_json;

/// Everything a full verification run produces for one prime.
struct RunReport {
    AlgebraParams params;
    std::array<std::string, 4> order_basis;
    GramResult gram;
    Int t_squared;
    std::vector<std::vector<Fp2>> chern;  // 4 rows x 6 columns
    KernelBasis kernel;
    KernelAudit audit;
    KummerReport kummer;
    std::vector<CheckResult> checks;
    bool pass = false;
    bool operator==(const RunReport&) const = default;
};

inline std::array<std::string, 4> order_basis_labels() {
    return {"w0 = 1", "w1 = (1+alpha)/2", "w2 = F(1+alpha)/2", "w3 = (a+F)alpha/q"};
}

inline RunReport build_run_report(const AlgebraParams& par,
                                  std::size_t samples = kDefaultSamples,
                                  std::uint64_t seed = kDefaultSeed) {
    RunReport r;
    r.params = par;
    r.order_basis = order_basis_labels();
    r.gram = gram_matrix(par);
    const auto cd = make_chern(par);
    r.t_squared = cd.field.t_squared();
    r.chern = cd.entries;
    r.kernel = kernel_basis(cd);
    r.audit = audit_kernel_candidates(cd);
    r.kummer = kummer_report(par, r.kernel);
    r.checks = run_invariant_checks(par, samples, seed);
    r.pass = true;
    for (const auto& c : r.checks)
        if (!c.pass) r.pass = false;
    return r;
}

// ---- JSON (integers and rationals as decimal strings, F_{p^2} elements
// ---- as [c0, c1] pairs; field order is fixed, so output bytes are stable)

inline Json to_json(const Fp2& x) { return Json::array({x.c0.get_str(), x.c1.get_str()}); }

inline Fp2 fp2_from_json(const Json& j) {
    return {Int(j.at(0).get<std::string>()), Int(j.at(1).get<std::string>())};
}

inline Json to_json(const AlgebraParams& par) {
    return Json{{"p", par.p.get_str()}, {"q", par.q.get_str()}, {"a", par.a.get_str()}};
}

inline AlgebraParams params_from_json(const Json& j) {
    return {Int(j.at("p").get<std::string>()), Int(j.at("q").get<std::string>()),
            Int(j.at("a").get<std::string>())};
}

inline Json to_json(const GramResult& g) {
    Json rows = Json::array();
    for (const auto& row : g.entries) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x.get_str());
        rows.push_back(r);
    }
    return Json{{"matrix", rows},
                {"rank", g.rank},
                {"signature", Json{{"positive", g.positive}, {"negative", g.negative}}},
                {"determinant", g.det.get_str()}};
}

inline GramResult gram_from_json(const Json& j) {
    GramResult g;
    for (int i = 0; i < 6; ++i)
        for (int k = 0; k < 6; ++k)
            g.entries[i][k] = Int(j.at("matrix").at(i).at(k).get<std::string>());
    g.rank = j.at("rank").get<int>();
    g.positive = j.at("signature").at("positive").get<int>();
    g.negative = j.at("signature").at("negative").get<int>();
    g.det = Int(j.at("determinant").get<std::string>());
    return g;
}

inline Json coords_to_json(const std::array<Int, 6>& v) {
    Json a = Json::array();
    for (const auto& c : v) a.push_back(c.get_str());
    return a;
}

inline std::array<Int, 6> coords_from_json(const Json& j) {
    std::array<Int, 6> v;
    for (int i = 0; i < 6; ++i) v[i] = Int(j.at(i).get<std::string>());
    return v;
}

inline Json to_json(const KernelBasis& kb) {
    Json basis = Json::array();
    for (const auto& v : kb.vectors) basis.push_back(coords_to_json(v));
    return Json{{"dimension", kb.dimension},
                {"image_dimension", kb.image_dimension},
                {"basis", basis}};
}

inline KernelBasis kernel_from_json(const Json& j) {
    KernelBasis kb;
    kb.dimension = j.at("dimension").get<int>();
    kb.image_dimension = j.at("image_dimension").get<int>();
    for (const auto& v : j.at("basis")) kb.vectors.push_back(coords_from_json(v));
    return kb;
}

inline Json residual_to_json(const std::array<Fp2, 4>& r) {
    Json a = Json::array();
    for (const auto& x : r) a.push_back(to_json(x));
    return a;
}

inline std::array<Fp2, 4> residual_from_json(const Json& j) {
    std::array<Fp2, 4> r;
    for (int i = 0; i < 4; ++i) r[i] = fp2_from_json(j.at(i));
    return r;
}

inline Rat rat_from_str(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

inline Json to_json(const KernelAudit& a) {
    Json lit_coords = Json::array();
    for (const auto& c : a.literal_coords) lit_coords.push_back(c.get_str());
    Json cands = Json::array();
    for (const auto& c : a.candidates)
        cands.push_back(Json{{"name", c.name},
                             {"coords", coords_to_json(c.coords)},
                             {"member", c.member},
                             {"residual", residual_to_json(c.residual)}});
    return Json{{"literal_subscript",
                 Json{{"in_order", a.literal_in_order}, {"rational_coords", lit_coords}}},
                {"ell", a.ell.get_str()},
                {"candidates", cands},
                {"recomputed",
                 Json{{"coords", coords_to_json(a.recomputed)}, {"member", a.recomputed_member}}}};
}

inline KernelAudit audit_from_json(const Json& j) {
    KernelAudit a;
    const auto& lit = j.at("literal_subscript");
    a.literal_in_order = lit.at("in_order").get<bool>();
    for (int i = 0; i < 4; ++i)
        a.literal_coords[i] = rat_from_str(lit.at("rational_coords").at(i).get<std::string>());
    a.ell = Int(j.at("ell").get<std::string>());
    for (const auto& c : j.at("candidates"))
        a.candidates.push_back({c.at("name").get<std::string>(), coords_from_json(c.at("coords")),
                                c.at("member").get<bool>(),
                                residual_from_json(c.at("residual"))});
    a.recomputed = coords_from_json(j.at("recomputed").at("coords"));
    a.recomputed_member = j.at("recomputed").at("member").get<bool>();
    return a;
}

inline Json to_json(const KummerReport& k) {
    return Json{{"p", k.p.get_str()},
                {"abelian_kernel_dim", k.abelian_kernel_dim},
                {"km_kernel_dim", k.km_kernel_dim},
                {"ns_rank_blowup", k.ns_rank_blowup},
                {"artin_invariant", k.artin_invariant},
                {"mod_p_transfer", k.mod_p_transfer}};
}

inline KummerReport kummer_from_json(const Json& j) {
    return {Int(j.at("p").get<std::string>()),
            j.at("abelian_kernel_dim").get<int>(),
            j.at("km_kernel_dim").get<int>(),
            j.at("ns_rank_blowup").get<int>(),
            j.at("artin_invariant").get<int>(),
            j.at("mod_p_transfer").get<bool>()};
}

inline Json chern_rows_to_json(const std::vector<std::vector<Fp2>>& rows) {
    Json out = Json::array();
    for (const auto& row : rows) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(to_json(x));
        out.push_back(r);
    }
    return out;
}

inline std::vector<std::vector<Fp2>> chern_rows_from_json(const Json& j) {
    std::vector<std::vector<Fp2>> rows;
    for (const auto& jr : j) {
        std::vector<Fp2> row;
        for (const auto& x : jr) row.push_back(fp2_from_json(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json to_json(const RunReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    Json basis = Json::array();
    for (const auto& s : r.order_basis) basis.push_back(s);
    return Json{{"params", to_json(r.params)},
                {"order_basis", basis},
                {"gram", to_json(r.gram)},
                {"chern", Json{{"t_squared", r.t_squared.get_str()},
                               {"matrix", chern_rows_to_json(r.chern)}}},
                {"kernel", to_json(r.kernel)},
                {"audit", to_json(r.audit)},
                {"kummer", to_json(r.kummer)},
                {"checks", checks},
                {"pass", r.pass}};
}

inline RunReport report_from_json(const Json& j) {
    RunReport r;
    r.params = params_from_json(j.at("params"));
    for (int i = 0; i < 4; ++i) r.order_basis[i] = j.at("order_basis").at(i).get<std::string>();
    r.gram = gram_from_json(j.at("gram"));
    r.t_squared = Int(j.at("chern").at("t_squared").get<std::string>());
    r.chern = chern_rows_from_json(j.at("chern").at("matrix"));
    r.kernel = kernel_from_json(j.at("kernel"));
    r.audit = audit_from_json(j.at("audit"));
    r.kummer = kummer_from_json(j.at("kummer"));
    for (const auto& c : j.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                            c.at("detail").get<std::string>()});
    r.pass = j.at("pass").get<bool>();
    return r;
}

// ---- text rendering

// Kernel vectors read best as signed combinations of the basis divisors;
// residues above p/2 are lifted to their negative representatives.
inline std::string symbolic_combination(const std::array<Int, 6>& v, const Int& p) {
    std::string out;
    for (int i = 0; i < 6; ++i) {
        Int c = mod_reduce(v[i], p);
        if (2 * c > p) c -= p;
        if (c == 0) continue;
        const bool negative = c < 0;
        const Int abs_c = negative ? Int(-c) : c;
        std::string term =
            abs_c == 1 ? std::string(basis_labels()[i])
                       : abs_c.get_str() + "*" + std::string(basis_labels()[i]);
        if (out.empty())
            out = (negative ? "-" : "") + term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

inline std::string coords_line(const std::array<Int, 6>& v) {
    std::string out = "(";
    for (int i = 0; i < 6; ++i) {
        if (i) out += ", ";
        out += v[i].get_str();
    }
    return out + ")";
}

inline std::string residual_line(const std::array<Fp2, 4>& r) {
    std::string out = "(";
    for (int i = 0; i < 4; ++i) {
        if (i) out += ", ";
        out += to_string(r[i]);
    }
    return out + ")";
}

inline void render_params(const AlgebraParams& par, std::ostream& out) {
    out << "p=" << par.p.get_str() << " q=" << par.q.get_str() << " a=" << par.a.get_str()
        << "\n";
}

inline void render_gram(const GramResult& g, std::ostream& out) {
    out << "gram matrix (basis";
    for (const auto* l : basis_labels()) out << " " << l;
    out << "):\n";
    for (const auto& row : g.entries) {
        out << " ";
        for (const auto& x : row) out << " " << x.get_str();
        out << "\n";
    }
    out << "rank=" << g.rank << " signature=(" << g.positive << "," << g.negative
        << ") det=" << g.det.get_str() << "\n";
}

inline void render_chern(const Int& t_squared, const std::vector<std::vector<Fp2>>& rows,
                         std::ostream& out) {
    out << "chern matrix over F_p(t), t^2=" << t_squared.get_str()
        << " (rows Omega_1..Omega_4, columns";
    for (const auto* l : basis_labels()) out << " " << l;
    out << "):\n";
    for (const auto& row : rows) {
        out << " ";
        for (const auto& x : row) out << " " << to_string(x);
        out << "\n";
    }
}

inline void render_kernel(const KernelBasis& kb, const Int& p, std::ostream& out) {
    out << "kernel dimension=" << kb.dimension << " image dimension=" << kb.image_dimension
        << "\n";
    out << "kernel basis:\n";
    for (const auto& v : kb.vectors)
        out << "  " << coords_line(v) << "  =  " << symbolic_combination(v, p) << "\n";
}

inline void render_audit(const KernelAudit& a, const Int& p, std::ostream& out) {
    out << "audit:\n";
    out << "  literal subscript (2+F*alpha)/q: "
        << (a.literal_in_order ? "in the order" : "NOT an order element")
        << "; rational order coordinates (";
    for (int i = 0; i < 4; ++i) out << (i ? ", " : "") << a.literal_coords[i].get_str();
    out << ")\n";
    out << "  ell = a/(2q) = " << a.ell.get_str() << " mod p\n";
    for (const auto& c : a.candidates) {
        out << "  " << c.name << " " << coords_line(c.coords) << " = "
            << symbolic_combination(c.coords, p) << ": ";
        if (c.member)
            out << "kernel member\n";
        else
            out << "NOT a kernel member, residual " << residual_line(c.residual) << "\n";
    }
    out << "  recomputed " << coords_line(a.recomputed) << " = "
        << symbolic_combination(a.recomputed, p) << ": "
        << (a.recomputed_member ? "kernel member" : "NOT a kernel member") << "\n";
}

inline void render_kummer(const KummerReport& k, std::ostream& out) {
    out << "kummer surface (p=" << k.p.get_str() << "):\n";
    out << "  kernel dimension on the abelian surface: " << k.abelian_kernel_dim << "\n";
    out << "  kernel dimension on the Kummer surface:  " << k.km_kernel_dim << "\n";
    out << "  NS rank of the blown-up surface: 6 + 16 = " << k.ns_rank_blowup << "\n";
    out << "  mod-p classes transfer through the blow-up (p odd): "
        << (k.mod_p_transfer ? "yes" : "no") << "\n";
    out << "  artin invariant of the superspecial K3: " << k.artin_invariant << "\n";
}

inline void render_checks(const std::vector<CheckResult>& checks, std::ostream& out) {
    int passed = 0;
    for (const auto& c : checks) {
        out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << " (" << c.detail << ")\n";
        if (c.pass) ++passed;
    }
    out << "checks: " << passed << "/" << checks.size() << " passed\n";
}

inline void render_run_report(const RunReport& r, std::ostream& out) {
    render_params(r.params, out);
    out << "order basis:";
    for (const auto& s : r.order_basis) out << " " << s << ";";
    out << "\n";
    render_gram(r.gram, out);
    render_chern(r.t_squared, r.chern, out);
    render_kernel(r.kernel, r.params.p, out);
    render_audit(r.audit, r.params.p, out);
    render_kummer(r.kummer, out);
    render_checks(r.checks, out);
    out << "verify: " << (r.pass ? "PASS" : "FAIL") << "\n";
}

}  // namespace nslat
