#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "../tests/selftest.hpp"
#include "hkade/ade.hpp"
#include "hkade/delta.hpp"
#include "hkade/fermat.hpp"
#include "hkade/hkm.hpp"
#include "hkade/matfac.hpp"
#include "hkade/oracle.hpp"
#include "hkade/parse.hpp"
#include "hkade/series.hpp"

using json = nlohmann::ordered_json;
using namespace hkade;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Output {
    std::string format = "text";
    std::string command;
    json inputs = json::object();
    json result = json::object();
    std::string provenance = "formula";
    std::vector<std::pair<std::string, std::string>> rows; // text/csv lines

    void add(const std::string& key, const std::string& value) { rows.emplace_back(key, value); }

    void emit() const {
        if (format == "json") {
            json env;
            env["command"] = command;
            env["inputs"] = inputs;
            env["result"] = result;
            env["provenance"] = provenance;
            env["version"] = kVersion;
            std::cout << env.dump(2) << "\n";
        } else if (format == "csv") {
            for (const auto& [k, v] : rows) std::cout << k << "," << v << "\n";
        } else {
            for (const auto& [k, v] : rows) {
                if (k.empty()) std::cout << v << "\n";
                else std::cout << k << " = " << v << "\n";
            }
        }
    }
};

Triple parse_triple(const std::string& t) {
    std::vector<Rational> parts;
    size_t start = 0;
    for (size_t i = 0; i <= t.size(); ++i)
        if (i == t.size() || t[i] == ',') {
            parts.push_back(parse_rat(t.substr(start, i - start)));
            start = i + 1;
        }
    if (parts.size() != 3) throw domain_error("BadTriple", "expected three comma-separated values");
    return {parts[0], parts[1], parts[2]};
}

std::vector<long> parse_longs(const std::string& t) {
    std::vector<long> out;
    size_t start = 0;
    for (size_t i = 0; i <= t.size(); ++i)
        if (i == t.size() || t[i] == ',') {
            out.push_back(std::stol(t.substr(start, i - start)));
            start = i + 1;
        }
    return out;
}

std::vector<std::string> split_names(const std::string& t) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= t.size(); ++i)
        if (i == t.size() || t[i] == ',') {
            out.push_back(t.substr(start, i - start));
            start = i + 1;
        }
    return out;
}

json triple_json(const Triple& t) {
    return json::array({rat_str(t[0]), rat_str(t[1]), rat_str(t[2])});
}

json series_json(const HilbertSeries& h) {
    json num = json::object();
    for (const auto& [d, c] : h.numerator()) num[std::to_string(d)] = c.get_str();
    json den = json::array();
    for (long a : h.denominator_factors()) den.push_back(a);
    return json{{"numerator", num}, {"denominator_factors", den}, {"display", h.str()}};
}

std::string den_str(const HilbertSeries& h) {
    std::string s = "[";
    bool first = true;
    for (long a : h.denominator_factors()) {
        if (!first) s += ",";
        s += std::to_string(a);
        first = false;
    }
    return s + "]";
}

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_prime_flag(long p) {
    if (p < 2) throw usage_error("--p must be a prime >= 2");
}

RingSpec build_spec(const std::string& names_csv, const std::string& weights_csv,
                    const std::string& relation) {
    std::vector<std::string> names = split_names(names_csv);
    std::vector<long> weights = parse_longs(weights_csv);
    std::optional<Poly<Int>> rel;
    if (!relation.empty()) rel = to_int(parse_poly(relation, names));
    return RingSpec::make(names, weights, rel);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hilbert-Kunz, syzygy-gap and matrix-factorization calculator"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    // delta
    long p = 0, e = 0, nn = 0, L = 0, a_exp = 1;
    std::string t_csv, f_text, weights_csv = "1,1,1", names_csv = "X,Y,Z";
    std::string relation, gens_csv, d_csv, type_name, kind_name, params_csv, file_path;
    std::string vhead_csv, vtail_csv;
    long max_degree = -1, expand_to = -1, prime1 = 101, prime2 = 103;
    bool full = false, quick = false, do_json_alias = false;

    auto* cdelta = app.add_subcommand("delta", "Evaluate the delta function");
    cdelta->add_option("--p", p, "characteristic")->required();
    cdelta->add_option("--t", t_csv, "triple, e.g. 1/7,1/7,1/7")->required();
    cdelta->add_flag("--json", do_json_alias, "shorthand for --format json");

    auto* csg = app.add_subcommand("sg", "Syzygy gap of homogeneous generators in two variables");
    csg->add_option("--p", p)->required();
    csg->add_option("--gens", gens_csv, "comma-separated generators")->required();
    csg->add_option("--weights", weights_csv, "two variable weights (default 1,1)");
    csg->add_option("--names", names_csv, "variable names (default X,Y)");

    auto* chkm = app.add_subcommand("hkm", "Hilbert-Kunz multiplicities");
    chkm->require_subcommand(1);
    auto* ctri = chkm->add_subcommand("tri", "regular trinomial, standard grading");
    ctri->add_option("--p", p)->required();
    ctri->add_option("--f", f_text)->required();
    ctri->add_option("--t", t_csv)->required();
    ctri->add_option("--names", names_csv);
    auto* cwei = chkm->add_subcommand("weighted", "quasi-homogeneous trinomial");
    cwei->add_option("--p", p)->required();
    cwei->add_option("--f", f_text)->required();
    cwei->add_option("--weights", weights_csv)->required();
    cwei->add_option("--names", names_csv, "variable names (default U,V,W for this command)");
    auto* cdia = chkm->add_subcommand("diag", "diagonal hypersurface");
    cdia->add_option("--p", p)->required();
    cdia->add_option("--d", d_csv, "three exponents d1,d2,d3")->required();
    auto* cbin = chkm->add_subcommand("binomial", "binomial hypersurface X^d - Y1^a1*...*Yn^an");
    cbin->add_option("--d", nn, "degree d")->required();
    cbin->add_option("--a", d_csv, "exponents a1,...,an")->required();
    auto* cfam = chkm->add_subcommand("family", "trinomial family value and limit");
    cfam->add_option("--kind", kind_name, "F1|FU|FV|FW")->required();
    cfam->add_option("--params", params_csv, "five family exponents")->required();
    cfam->add_option("--L", L, "family parameter")->required();
    cfam->add_option("--p", p)->required();

    auto* chkf = app.add_subcommand("hkf", "Hilbert-Kunz function of the catalogued rings");
    chkf->add_option("--type", type_name, "A|D|E6|E7|E8|Ainf|Dinf|Veronese")->required();
    chkf->add_option("--n", nn, "index for A/D/Veronese");
    chkf->add_option("--p", p)->required();
    chkf->add_option("--e", e)->required();
    chkf->add_flag("--json", do_json_alias);

    auto* cfsig = app.add_subcommand("fsig", "F-signature function");
    cfsig->add_option("--type", type_name)->required();
    cfsig->add_option("--n", nn);
    cfsig->add_option("--p", p)->required();
    cfsig->add_option("--e", e)->required();

    auto* cser = app.add_subcommand("series", "Hilbert series");
    cser->require_subcommand(1);
    auto* cma = cser->add_subcommand("ma", "syzygy module of X^a V_i, V_j via the recursion");
    cma->add_option("--weights", weights_csv)->required();
    cma->add_option("--relation", relation, "X^d - F(Y1,Y2), distinguished variable first")
        ->required();
    cma->add_option("--a", a_exp)->required();
    cma->add_option("--vhead", vhead_csv, "monomials multiplied by X^a")->required();
    cma->add_option("--vtail", vtail_csv, "monomials without X");
    cma->add_option("--names", names_csv);
    cma->add_option("--expand", expand_to, "also print coefficients up to this degree");
    cma->add_option("--p1", prime1);
    cma->add_option("--p2", prime2);
    auto* cring = cser->add_subcommand("ring", "series of the ring itself");
    cring->add_option("--weights", weights_csv)->required();
    cring->add_option("--relation", relation);
    cring->add_option("--names", names_csv);
    cring->add_option("--expand", expand_to);
    auto* cmod = cser->add_subcommand("module", "catalogued module series");
    cmod->add_option("--type", type_name)->required();
    cmod->add_option("--n", nn);
    cmod->add_option("--index", a_exp)->required();
    cmod->add_option("--expand", expand_to);

    auto* cfer = app.add_subcommand("fermat", "Fermat ring analysis");
    cfer->require_subcommand(1);
    auto* cfst = cfer->add_subcommand("status", "semistability, class, filtration");
    cfst->add_option("--n", nn)->required();
    cfst->add_option("--p", p)->required();
    auto* cfhk = cfer->add_subcommand("hkf", "Hilbert-Kunz value");
    cfhk->add_option("--n", nn)->required();
    cfhk->add_option("--p", p)->required();
    cfhk->add_option("--e", e)->required();
    cfhk->add_flag("--no-oracle", full, "do not fall back to the oracle in the gap");
    auto* cfpe = cfer->add_subcommand("period", "Frobenius periodicity");
    cfpe->add_option("--n", nn)->required();
    cfpe->add_option("--p", p)->required();

    auto* cmat = app.add_subcommand("matfac", "matrix factorizations");
    cmat->require_subcommand(1);
    auto* cver = cmat->add_subcommand("verify", "check phi*psi = psi*phi = sign*f*Id");
    cver->add_option("--file", file_path, "JSON file {f, sign, phi, psi}")->required();
    auto* ccat = cmat->add_subcommand("catalog", "list a catalog");
    ccat->add_option("--type", type_name, "A|D|E6|E7|E8|Ainf|Dinf|Fermat")->required();
    ccat->add_option("--n", nn, "index/parameter where applicable");
    ccat->add_flag("--json", do_json_alias);

    auto* corc = app.add_subcommand("oracle", "degreewise brute force over F_p");
    corc->require_subcommand(1);
    std::map<std::string, CLI::App*> orc_subs;
    for (const char* name : {"quotdim", "hf", "sg", "syzdegs"}) {
        auto* s = corc->add_subcommand(name);
        s->add_option("--p", p)->required();
        s->add_option("--weights", weights_csv);
        s->add_option("--names", names_csv);
        s->add_option("--relation", relation);
        s->add_option("--gens", gens_csv)->required();
        s->add_option("--max-degree", max_degree);
        orc_subs[name] = s;
    }

    auto* cself = app.add_subcommand("selftest", "run the acceptance fixture suite");
    cself->add_flag("--quick", quick, "skip the heavy oracle confirmations (default)");
    cself->add_flag("--full", full, "include the q=27 and q=49 oracle confirmations");

    // let --format appear after subcommand arguments too
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; })) {
            sub->fallthrough();
            allow_fallthrough(sub);
        }
    };
    allow_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return err.get_name() == "CallForHelp" ? 0 : 1;
    }

    Output out;
    out.format = do_json_alias ? "json" : format;

    try {
        if (cdelta->parsed()) {
            check_prime_flag(p);
            Triple t = parse_triple(t_csv);
            DeltaResult r = delta(p, t);
            out.command = "delta";
            out.inputs = {{"p", p}, {"t", triple_json(t)}};
            out.result["value"] = rat_str(r.value);
            if (r.s) out.result["s"] = *r.s;
            if (r.witness) {
                json w = json::array();
                for (const auto& u : *r.witness) w.push_back(u.get_str());
                out.result["witness_corner"] = w;
            }
            out.add("", rat_str(r.value));
        } else if (csg->parsed()) {
            check_prime_flag(p);
            if (weights_csv == "1,1,1") weights_csv = "1,1";
            if (names_csv == "X,Y,Z") names_csv = "X,Y";
            auto names = split_names(names_csv);
            auto weights = parse_longs(weights_csv);
            std::vector<Poly<Fp>> gens;
            for (const auto& g : parse_poly_list(gens_csv, names))
                gens.push_back(to_fp(g, static_cast<uint32_t>(p)));
            long m = syz_min_degree(weights, static_cast<uint32_t>(p), gens);
            long gap = syz_gap(weights, static_cast<uint32_t>(p), gens);
            out.command = "sg";
            out.inputs = {{"p", p}, {"gens", gens_csv}, {"weights", weights_csv}};
            out.result = {{"min_degree", m}, {"sg", gap}};
            out.provenance = "oracle";
            out.add("min_degree", std::to_string(m));
            out.add("sg", std::to_string(gap));
        } else if (chkm->parsed()) {
            out.command = "hkm";
            HkmResult r;
            std::optional<Rational> plain;
            if (ctri->parsed()) {
                check_prime_flag(p);
                auto names = split_names(names_csv);
                Triple t = parse_triple(t_csv);
                r = hkm_standard(to_int(parse_poly(f_text, names)), p, t);
                out.inputs = {{"mode", "tri"}, {"p", p}, {"f", f_text}, {"t", triple_json(t)}};
            } else if (cwei->parsed()) {
                check_prime_flag(p);
                if (names_csv == "X,Y,Z") names_csv = "U,V,W";
                auto names = split_names(names_csv);
                r = hkm_weighted(parse_longs(weights_csv), to_int(parse_poly(f_text, names)), p);
                out.inputs = {{"mode", "weighted"}, {"p", p}, {"f", f_text},
                              {"weights", weights_csv}};
            } else if (cdia->parsed()) {
                check_prime_flag(p);
                auto d = parse_longs(d_csv);
                if (d.size() != 3) throw domain_error("BadTriple", "--d needs three exponents");
                plain = hkm_diagonal(d[0], d[1], d[2], p);
                out.inputs = {{"mode", "diag"}, {"p", p}, {"d", d_csv}};
            } else if (cbin->parsed()) {
                plain = hkm_binomial(nn, parse_longs(d_csv));
                out.inputs = {{"mode", "binomial"}, {"d", nn}, {"a", d_csv}};
            } else {
                check_prime_flag(p);
                auto q = parse_longs(params_csv);
                if (q.size() != 5)
                    throw domain_error("BadFamilyExponents", "--params needs five exponents");
                FamilySpec fam;
                std::string k = kind_name;
                std::transform(k.begin(), k.end(), k.begin(), ::toupper);
                if (k == "F1") fam = FamilySpec::f1(q[0], q[1], q[2], q[3], q[4]);
                else if (k == "FU") fam = FamilySpec::fu(q[0], q[1], q[2], q[3], q[4]);
                else if (k == "FV") fam = FamilySpec::fv(q[0], q[1], q[2], q[3], q[4]);
                else if (k == "FW") fam = FamilySpec::fw(q[0], q[1], q[2], q[3], q[4]);
                else throw domain_error("BadFamilyExponents", "unknown family kind " + kind_name);
                r = family_hkm(fam, p, L);
                out.inputs = {{"mode", "family"}, {"kind", k}, {"params", params_csv},
                              {"L", L}, {"p", p}};
                out.result["limit"] = rat_str(family_limit(fam));
            }
            if (plain) {
                out.result["value"] = rat_str(*plain);
                out.add("value", rat_str(*plain));
            } else {
                out.result["value"] = rat_str(r.value);
                out.result["lambda"] = r.lambda.get_str();
                out.result["type"] = r.kind == TrinomialType::I ? "I" : "II";
                out.result["regular"] = r.regular;
                out.result["delta_args"] = triple_json(r.delta_args);
                out.result["delta"] = rat_str(r.delta_value);
                out.add("value", rat_str(r.value));
                out.add("lambda", r.lambda.get_str());
                out.add("delta", rat_str(r.delta_value));
                if (out.result.contains("limit"))
                    out.add("limit", out.result["limit"].get<std::string>());
            }
        } else if (chkf->parsed() || cfsig->parsed()) {
            check_prime_flag(p);
            ADEKind kind = ADEKind::parse(type_name, nn);
            Int q = pow_int(Int(p), static_cast<unsigned long>(e));
            out.command = chkf->parsed() ? "hkf" : "fsig";
            out.inputs = {{"type", kind.str()}, {"p", p}, {"e", e}};
            out.result["q"] = q.get_str();
            if (chkf->parsed()) {
                Int v = hkf(kind, p, e);
                out.result["value"] = v.get_str();
                out.add("value", v.get_str());
            } else {
                Rational v = fsig(kind, p, e);
                out.result["value"] = rat_str(v);
                out.add("value", rat_str(v));
            }
            if (kind.tag <= ADEKind::E8 && e >= 1) {
                SyzClassDescriptor d = syz_class(kind, p, e);
                json cls;
                cls["branch"] = d.branch;
                if (d.free) {
                    cls["free"] = true;
                    cls["shifts"] = json::array({rat_str(d.free_shift_a), rat_str(d.free_shift_b)});
                } else {
                    cls["ideal"] = d.ideal;
                    cls["shift"] = rat_str(d.shift);
                }
                out.result["branch"] = d.branch;
                out.result["class"] = cls;
            }
        } else if (cser->parsed()) {
            out.command = "series";
            HilbertSeries h;
            if (cma->parsed()) {
                RingSpec spec = build_spec(names_csv, weights_csv, relation);
                std::vector<Poly<Int>> vh, vt;
                for (const auto& g : parse_poly_list(vhead_csv, spec.names))
                    vh.push_back(to_int(g));
                if (!vtail_csv.empty())
                    for (const auto& g : parse_poly_list(vtail_csv, spec.names))
                        vt.push_back(to_int(g));
                h = hs_ma(spec, a_exp, vh, vt, static_cast<uint32_t>(prime1),
                          static_cast<uint32_t>(prime2));
                out.inputs = {{"mode", "ma"}, {"weights", weights_csv}, {"relation", relation},
                              {"a", a_exp}, {"vhead", vhead_csv}, {"vtail", vtail_csv}};
                out.provenance = "oracle";
            } else if (cring->parsed()) {
                h = hs_ring(build_spec(names_csv, weights_csv, relation));
                out.inputs = {{"mode", "ring"}, {"weights", weights_csv}, {"relation", relation}};
            } else {
                ADEKind kind = ADEKind::parse(type_name, nn);
                h = ade_module_series(kind, a_exp);
                out.inputs = {{"mode", "module"}, {"type", kind.str()}, {"index", a_exp}};
            }
            out.result = series_json(h);
            out.result["numerator_at_one"] = h.numerator_at_one().get_str();
            out.add("num", h.str());
            out.add("den", den_str(h));
            if (expand_to >= 0) {
                json coeffs = json::array();
                std::string line;
                for (const Int& c : h.expand(expand_to)) {
                    coeffs.push_back(c.get_str());
                    line += (line.empty() ? "" : ",") + c.get_str();
                }
                out.result["expansion"] = coeffs;
                out.add("expansion", line);
            }
        } else if (cfer->parsed()) {
            out.command = "fermat";
            out.inputs = {{"n", nn}, {"p", p}};
            if (cfst->parsed()) {
                Semistability st = is_strongly_semistable(nn, p);
                std::string sts = st == Semistability::No ? "No"
                                  : st == Semistability::Yes ? "Yes"
                                                             : "YesIfNotTrivialized";
                out.result["semistable"] = sts;
                out.add("semistable", sts);
                if (st == Semistability::No) {
                    HNData h = hn_filtration(nn, p);
                    out.result["filtration"] = {{"s", h.s},
                                                {"sub_degree", h.sub_degree},
                                                {"quot_degree", h.quot_degree},
                                                {"split_threshold", h.split_threshold}};
                    out.add("s", std::to_string(h.s));
                    out.add("twists", std::to_string(h.sub_degree) + "," +
                                          std::to_string(h.quot_degree));
                    out.add("split_threshold", std::to_string(h.split_threshold));
                } else {
                    FermatClass cls = fermat_syz_class(nn, p, pow_int(Int(p), 1));
                    out.result["class"] = {{"exp", cls.class_exp}, {"shift", rat_str(cls.shift)}};
                    out.add("class_exp", std::to_string(cls.class_exp));
                }
            } else if (cfhk->parsed()) {
                out.inputs["e"] = e;
                FermatHkf r = hkf_fermat(nn, p, e);
                out.result["branch"] = r.branch;
                if (!r.value && !full) {
                    Int v = fermat_hkf_oracle(nn, p, e);
                    out.result["value"] = v.get_str();
                    out.provenance = "oracle";
                    out.add("value", v.get_str());
                    out.add("branch", r.branch);
                } else if (r.value) {
                    out.result["value"] = r.value->get_str();
                    out.add("value", r.value->get_str());
                    out.add("branch", r.branch);
                } else {
                    out.result["value"] = nullptr;
                    out.add("indeterminate", r.branch);
                }
            } else {
                auto pr = period(nn, p);
                if (pr) {
                    out.result["period"] = {{"s", pr->s}, {"t", pr->t}};
                    out.add("period", "(" + std::to_string(pr->s) + "," + std::to_string(pr->t) +
                                          ")");
                } else {
                    out.result["period"] = nullptr;
                    out.add("period", "absent");
                }
                out.provenance = "oracle";
            }
        } else if (cmat->parsed()) {
            out.command = "matfac";
            if (cver->parsed()) {
                std::ifstream in(file_path);
                if (!in) throw domain_error("BadFile", "cannot open " + file_path);
                json j = json::parse(in);
                std::vector<std::string> names =
                    j.contains("names") ? j["names"].get<std::vector<std::string>>()
                                        : matfac_variables();
                auto read_mat = [&](const json& rows) {
                    PolyMatrix<GaussInt> m(rows.size(), static_cast<int>(names.size()));
                    for (size_t i = 0; i < rows.size(); ++i)
                        for (size_t k = 0; k < rows.size(); ++k)
                            m.at(i, k) = parse_poly(rows[i][k].get<std::string>(), names);
                    return m;
                };
                MatFac mf{read_mat(j["phi"]), read_mat(j["psi"]),
                          parse_poly(j["f"].get<std::string>(), names),
                          j.value("sign", 1)};
                VerifyResult v = verify(mf);
                out.inputs = {{"file", file_path}};
                out.result["ok"] = v.ok;
                if (!v.ok)
                    out.result["witness"] = {{"product", v.which}, {"row", v.row}, {"col", v.col}};
                out.add("ok", v.ok ? "true" : "false");
            } else {
                auto entries = catalog(type_name, nn == 0 ? 4 : nn);
                out.inputs = {{"type", type_name}, {"n", nn}};
                json list = json::array();
                auto nmv = matfac_variables();
                for (const auto& en : entries) {
                    json row;
                    row["index"] = en.index;
                    row["rank"] = en.rank;
                    row["dual_index"] = en.dual_index;
                    row["ideal"] = en.ideal;
                    row["f"] = poly_str(en.mf.f, nmv);
                    row["sign"] = en.mf.sign;
                    json phi = json::array(), psi = json::array();
                    for (size_t i = 0; i < en.mf.phi.n; ++i) {
                        json prow = json::array(), qrow = json::array();
                        for (size_t k = 0; k < en.mf.phi.n; ++k) {
                            prow.push_back(poly_str(en.mf.phi.at(i, k), nmv));
                            qrow.push_back(poly_str(en.mf.psi.at(i, k), nmv));
                        }
                        phi.push_back(prow);
                        psi.push_back(qrow);
                    }
                    row["phi"] = phi;
                    row["psi"] = psi;
                    list.push_back(row);
                    out.add(en.kind + "#" + std::to_string(en.index),
                            "rank " + std::to_string(en.rank) + ", dual " +
                                std::to_string(en.dual_index));
                }
                out.result["entries"] = list;
            }
        } else if (corc->parsed()) {
            check_prime_flag(p);
            out.command = "oracle";
            out.provenance = "oracle";
            RingSpec spec = build_spec(names_csv, weights_csv, relation);
            std::vector<Poly<Fp>> gens;
            for (const auto& g : parse_poly_list(gens_csv, spec.names))
                gens.push_back(to_fp(g, static_cast<uint32_t>(p)));
            out.inputs = {{"p", p}, {"weights", weights_csv}, {"relation", relation},
                          {"gens", gens_csv}};
            std::optional<long> maxd;
            if (max_degree >= 0) maxd = max_degree;
            if (orc_subs["quotdim"]->parsed()) {
                Int v = quotient_dim(QuotientProblem::make(spec, static_cast<uint32_t>(p), gens),
                                     maxd);
                out.result["total"] = v.get_str();
                out.add("total", v.get_str());
            } else if (orc_subs["hf"]->parsed()) {
                HilbertFn hf = quotient_hilbert_function(
                    QuotientProblem::make(spec, static_cast<uint32_t>(p), gens), maxd);
                json vals = json::array();
                std::string line;
                for (long v : hf.values) {
                    vals.push_back(v);
                    line += (line.empty() ? "" : ",") + std::to_string(v);
                }
                out.result["values"] = vals;
                out.result["artinian"] = hf.artinian;
                if (hf.artinian) out.result["total"] = hf.total.get_str();
                out.add("values", line);
                out.add("artinian", hf.artinian ? "true" : "false");
                if (hf.artinian) out.add("total", hf.total.get_str());
            } else if (orc_subs["sg"]->parsed()) {
                long gap = syz_gap(spec.weights, static_cast<uint32_t>(p), gens);
                out.result["sg"] = gap;
                out.add("sg", std::to_string(gap));
            } else {
                auto degs = syz_generator_degrees(spec.weights, static_cast<uint32_t>(p), gens);
                json vals = json::array();
                std::string line;
                for (long v : degs) {
                    vals.push_back(v);
                    line += (line.empty() ? "" : ",") + std::to_string(v);
                }
                out.result["generator_degrees"] = vals;
                out.add("generator_degrees", line);
            }
        } else if (cself->parsed()) {
            auto results = run_acceptance(full);
            bool all = true;
            for (const auto& r : results) {
                std::printf("[%s] %-45s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                            r.seconds, r.detail.empty() ? "" : "  ", r.detail.c_str());
                all = all && r.pass;
            }
            return all ? 0 : 1;
        }
    } catch (const usage_error& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return 1;
    } catch (const domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    out.emit();
    return 0;
}
