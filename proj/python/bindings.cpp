#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hkade/ade.hpp"
#include "hkade/delta.hpp"
#include "hkade/fermat.hpp"
#include "hkade/hkm.hpp"
#include "hkade/matfac.hpp"
#include "hkade/oracle.hpp"
#include "hkade/parse.hpp"
#include "hkade/series.hpp"
#include "../tests/selftest.hpp"

namespace py = pybind11;
using namespace hkade;

namespace {

Triple to_triple(const std::vector<std::string>& t) {
    if (t.size() != 3) throw domain_error("BadTriple", "expected three rationals");
    return {parse_rat(t[0]), parse_rat(t[1]), parse_rat(t[2])};
}

RingSpec make_spec(const std::vector<std::string>& names, const std::vector<long>& weights,
                   const std::string& relation) {
    std::optional<Poly<Int>> rel;
    if (!relation.empty()) rel = to_int(parse_poly(relation, names));
    return RingSpec::make(names, weights, rel);
}

std::vector<Poly<Fp>> make_gens(const RingSpec& spec, uint32_t p,
                                const std::vector<std::string>& gens) {
    std::vector<Poly<Fp>> out;
    for (const auto& g : gens) out.push_back(to_fp(parse_poly(g, spec.names), p));
    return out;
}

py::dict series_dict(const HilbertSeries& h, long expand_to) {
    py::dict num;
    for (const auto& [d, c] : h.numerator()) num[py::int_(d)] = c.get_str();
    py::list den;
    for (long a : h.denominator_factors()) den.append(a);
    py::dict out;
    out["numerator"] = num;
    out["denominator_factors"] = den;
    out["display"] = h.str();
    out["numerator_at_one"] = h.numerator_at_one().get_str();
    if (expand_to >= 0) {
        py::list coeffs;
        for (const Int& c : h.expand(expand_to)) coeffs.append(c.get_str());
        out["expansion"] = coeffs;
    }
    return out;
}

py::dict hkm_dict(const HkmResult& r) {
    py::dict out;
    out["value"] = rat_str(r.value);
    out["lambda"] = r.lambda.get_str();
    out["type"] = r.kind == TrinomialType::I ? "I" : "II";
    out["regular"] = r.regular;
    py::list args;
    for (const auto& a : r.delta_args) args.append(rat_str(a));
    out["delta_args"] = args;
    out["delta"] = rat_str(r.delta_value);
    return out;
}

ADEKind kind_of(const std::string& type, long n) { return ADEKind::parse(type, n); }

} // namespace

PYBIND11_MODULE(_hkade, m) {
    m.doc() = "exact Hilbert-Kunz / syzygy-gap / matrix-factorization kernel";

    py::register_exception<domain_error>(m, "DomainError");

    m.def("delta", [](long p, const std::vector<std::string>& t) {
        DeltaResult r = delta(p, to_triple(t));
        py::dict out;
        out["value"] = rat_str(r.value);
        if (r.s) out["s"] = *r.s;
        if (r.witness) {
            py::list w;
            for (const auto& u : *r.witness) w.append(u.get_str());
            out["witness_corner"] = w;
        }
        return out;
    });
    m.def("tau", [](long p, long a, long b, long c, long d, const std::vector<std::string>& t) {
        return rat_str(tau(p, a, b, c, d, to_triple(t)));
    });

    m.def(
        "syz_gap",
        [](long p, const std::vector<std::string>& gens, const std::vector<long>& weights,
           const std::vector<std::string>& names) {
            RingSpec spec = make_spec(names, weights, "");
            return syz_gap(weights, static_cast<uint32_t>(p), make_gens(spec, p, gens));
        },
        py::arg("p"), py::arg("gens"), py::arg("weights") = std::vector<long>{1, 1},
        py::arg("names") = std::vector<std::string>{"X", "Y"});
    m.def(
        "syz_generator_degrees",
        [](long p, const std::vector<std::string>& gens, const std::vector<long>& weights,
           const std::vector<std::string>& names) {
            RingSpec spec = make_spec(names, weights, "");
            return syz_generator_degrees(weights, static_cast<uint32_t>(p),
                                         make_gens(spec, p, gens));
        },
        py::arg("p"), py::arg("gens"), py::arg("weights") = std::vector<long>{1, 1},
        py::arg("names") = std::vector<std::string>{"X", "Y"});

    m.def(
        "quotient_dim",
        [](long p, const std::vector<long>& weights, const std::string& relation,
           const std::vector<std::string>& gens, const std::vector<std::string>& names) {
            RingSpec spec = make_spec(names, weights, relation);
            return quotient_dim(
                       QuotientProblem::make(spec, static_cast<uint32_t>(p),
                                             make_gens(spec, p, gens)))
                .get_str();
        },
        py::arg("p"), py::arg("weights"), py::arg("relation"), py::arg("gens"),
        py::arg("names") = std::vector<std::string>{"X", "Y", "Z"});
    m.def(
        "hilbert_function",
        [](long p, const std::vector<long>& weights, const std::string& relation,
           const std::vector<std::string>& gens, const std::vector<std::string>& names,
           long max_degree) {
            RingSpec spec = make_spec(names, weights, relation);
            std::optional<long> maxd;
            if (max_degree >= 0) maxd = max_degree;
            HilbertFn hf = quotient_hilbert_function(
                QuotientProblem::make(spec, static_cast<uint32_t>(p), make_gens(spec, p, gens)),
                maxd);
            py::dict out;
            out["values"] = hf.values;
            out["artinian"] = hf.artinian;
            if (hf.artinian) out["total"] = hf.total.get_str();
            return out;
        },
        py::arg("p"), py::arg("weights"), py::arg("relation"), py::arg("gens"),
        py::arg("names") = std::vector<std::string>{"X", "Y", "Z"}, py::arg("max_degree") = -1);

    m.def(
        "hkm_trinomial",
        [](const std::string& f, long p, const std::vector<std::string>& t,
           const std::vector<std::string>& names) {
            return hkm_dict(hkm_standard(to_int(parse_poly(f, names)), p, to_triple(t)));
        },
        py::arg("f"), py::arg("p"), py::arg("t"),
        py::arg("names") = std::vector<std::string>{"X", "Y", "Z"});
    m.def(
        "hkm_weighted",
        [](const std::vector<long>& weights, const std::string& f, long p,
           const std::vector<std::string>& names) {
            return hkm_dict(hkm_weighted(weights, to_int(parse_poly(f, names)), p));
        },
        py::arg("weights"), py::arg("f"), py::arg("p"),
        py::arg("names") = std::vector<std::string>{"U", "V", "W"});
    m.def("hkm_diagonal", [](long d1, long d2, long d3, long p) {
        return rat_str(hkm_diagonal(d1, d2, d3, p));
    });
    m.def("hkm_binomial", [](long d, const std::vector<long>& a) {
        return rat_str(hkm_binomial(d, a));
    });

    m.def(
        "hkf",
        [](const std::string& type, long n, long p, long e) {
            return hkf(kind_of(type, n), p, e).get_str();
        },
        py::arg("type"), py::arg("n"), py::arg("p"), py::arg("e"));
    m.def(
        "fsig",
        [](const std::string& type, long n, long p, long e) {
            return rat_str(fsig(kind_of(type, n), p, e));
        },
        py::arg("type"), py::arg("n"), py::arg("p"), py::arg("e"));
    m.def("hkf_gen_a", [](long n, long m) { return hkf_gen_a(n, m).get_str(); });
    m.def("veronese_hkf", [](long n, long p, long e) { return veronese_hkf(n, p, e).get_str(); });
    m.def(
        "syz_class",
        [](const std::string& type, long n, long p, long e) {
            SyzClassDescriptor d = syz_class(kind_of(type, n), p, e);
            py::dict out;
            out["branch"] = d.branch;
            out["free"] = d.free;
            if (d.free) {
                out["shifts"] = py::make_tuple(rat_str(d.free_shift_a), rat_str(d.free_shift_b));
            } else {
                out["ideal"] = d.ideal;
                out["shift"] = rat_str(d.shift);
            }
            return out;
        },
        py::arg("type"), py::arg("n"), py::arg("p"), py::arg("e"));
    m.def("e8_ideal_hkf", [](const std::string& ideal, long p, long e) {
        E8Ideal which = ideal == "XYZ2" ? E8Ideal::XYZ2 : E8Ideal::XY2YZZ2;
        return e8_ideal_hkf(which, p, e).get_str();
    });

    m.def(
        "module_series",
        [](const std::string& type, long n, long index, long expand_to) {
            return series_dict(ade_module_series(kind_of(type, n), index), expand_to);
        },
        py::arg("type"), py::arg("n"), py::arg("index"), py::arg("expand_to") = -1);
    m.def(
        "series_ma",
        [](const std::vector<long>& weights, const std::string& relation, long a,
           const std::vector<std::string>& vhead, const std::vector<std::string>& vtail,
           const std::vector<std::string>& names, long expand_to) {
            RingSpec spec = make_spec(names, weights, relation);
            std::vector<Poly<Int>> vh, vt;
            for (const auto& g : vhead) vh.push_back(to_int(parse_poly(g, names)));
            for (const auto& g : vtail) vt.push_back(to_int(parse_poly(g, names)));
            return series_dict(hs_ma(spec, a, vh, vt), expand_to);
        },
        py::arg("weights"), py::arg("relation"), py::arg("a"), py::arg("vhead"),
        py::arg("vtail"), py::arg("names") = std::vector<std::string>{"X", "Y", "Z"},
        py::arg("expand_to") = -1);

    m.def("fermat_status", [](long n, long p) {
        Semistability st = is_strongly_semistable(n, p);
        py::dict out;
        out["semistable"] = st == Semistability::No ? "No"
                            : st == Semistability::Yes ? "Yes"
                                                       : "YesIfNotTrivialized";
        if (st == Semistability::No) {
            HNData h = hn_filtration(n, p);
            out["s"] = h.s;
            out["twists"] = py::make_tuple(h.sub_degree, h.quot_degree);
            out["split_threshold"] = h.split_threshold;
        }
        return out;
    });
    m.def(
        "fermat_hkf",
        [](long n, long p, long e, bool use_oracle) -> py::object {
            FermatHkf r = hkf_fermat(n, p, e);
            py::dict out;
            out["branch"] = r.branch;
            if (r.value) out["value"] = r.value->get_str();
            else if (use_oracle) {
                out["value"] = fermat_hkf_oracle(n, p, e).get_str();
                out["branch"] = r.branch + " (oracle)";
            } else out["value"] = py::none();
            return out;
        },
        py::arg("n"), py::arg("p"), py::arg("e"), py::arg("use_oracle") = true);
    m.def("fermat_period", [](long n, long p) -> py::object {
        auto pr = period(n, p);
        if (!pr) return py::none();
        return py::make_tuple(pr->s, pr->t);
    });
    m.def("finite_projdim", [](long n, long p, long N) { return finite_projdim(n, p, Int(N)); });

    m.def(
        "catalog",
        [](const std::string& kind, long n) {
            py::list out;
            auto nmv = matfac_variables();
            for (const auto& e : catalog(kind, n)) {
                py::dict row;
                row["index"] = e.index;
                row["rank"] = e.rank;
                row["dual_index"] = e.dual_index;
                row["ideal"] = e.ideal;
                row["f"] = poly_str(e.mf.f, nmv);
                row["sign"] = e.mf.sign;
                py::list phi, psi;
                for (size_t i = 0; i < e.mf.phi.n; ++i) {
                    py::list prow, qrow;
                    for (size_t k = 0; k < e.mf.phi.n; ++k) {
                        prow.append(poly_str(e.mf.phi.at(i, k), nmv));
                        qrow.append(poly_str(e.mf.psi.at(i, k), nmv));
                    }
                    phi.append(prow);
                    psi.append(qrow);
                }
                row["phi"] = phi;
                row["psi"] = psi;
                out.append(row);
            }
            return out;
        },
        py::arg("kind"), py::arg("n") = 4);
    m.def(
        "matfac_verify",
        [](const std::string& f, const std::vector<std::vector<std::string>>& phi,
           const std::vector<std::vector<std::string>>& psi, int sign,
           const std::vector<std::string>& names) {
            PolyMatrix<GaussInt> mphi(phi.size(), static_cast<int>(names.size()));
            PolyMatrix<GaussInt> mpsi(psi.size(), static_cast<int>(names.size()));
            for (size_t i = 0; i < phi.size(); ++i)
                for (size_t k = 0; k < phi.size(); ++k) {
                    mphi.at(i, k) = parse_poly(phi[i][k], names);
                    mpsi.at(i, k) = parse_poly(psi[i][k], names);
                }
            MatFac mf{std::move(mphi), std::move(mpsi), parse_poly(f, names), sign};
            VerifyResult v = verify(mf);
            py::dict out;
            out["ok"] = v.ok;
            if (!v.ok) out["witness"] = py::make_tuple(v.which, v.row, v.col);
            return out;
        },
        py::arg("f"), py::arg("phi"), py::arg("psi"), py::arg("sign") = 1,
        py::arg("names") = std::vector<std::string>{"X", "Y", "Z"});

    m.def(
        "acceptance",
        [](bool full) {
            py::list out;
            for (const auto& r : run_acceptance(full)) {
                py::dict row;
                row["name"] = r.name;
                row["pass"] = r.pass;
                row["detail"] = r.detail;
                row["seconds"] = r.seconds;
                out.append(row);
            }
            return out;
        },
        py::arg("full") = false);
}
