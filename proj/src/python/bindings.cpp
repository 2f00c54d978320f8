#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oacensus/census.hpp"
#include "oacensus/coloring.hpp"
#include "oacensus/extremal.hpp"
#include "oacensus/identities.hpp"
#include "oacensus/io.hpp"
#include "oacensus/oa.hpp"

namespace py = pybind11;
using namespace oac;

namespace {

// Census counts are exact 128-bit integers; hand them to Python as
// arbitrary-precision ints via their decimal form.
py::object big(i128 x) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(to_string(x).c_str(), nullptr, 10));
}

py::tuple frac(const Rational& r) { return py::make_tuple(big(r.num), big(r.den)); }

py::dict census_dict(const PatternCensus& pc) {
    py::dict d;
    d["d"] = pc.d;
    d["k"] = pc.k;
    d["n"] = pc.n;
    d["r"] = pc.r;
    py::dict counts;
    for (const auto& [v, s] : pc.counts) counts[py::tuple(py::cast(v))] = big(s);
    d["counts"] = counts;
    d["total"] = big(pc.total);
    d["M"] = big(pc.mono);
    py::list mi, si;
    for (auto m : pc.mono_color) mi.append(big(m));
    for (auto s : pc.missing) si.append(big(s));
    d["M_i"] = mi;
    d["S_i"] = si;
    d["R_strict"] = big(pc.r_strict);
    d["R_covering"] = big(pc.r_covering);
    if (pc.d == 3) d["T21"] = big(pc.t21);
    return d;
}

py::dict report_dict(const IdentityReport& rep) {
    py::dict d;
    d["identity"] = rep.identity;
    d["lhs"] = big(rep.lhs);
    d["rhs"] = big(rep.rhs);
    d["residual"] = big(rep.residual);
    d["relation"] = rep.relation == IdentityReport::Relation::equal ? "==" : ">=";
    d["pass"] = rep.pass;
    d["hard"] = rep.hard;
    d["witness"] = rep.witness;
    d["note"] = rep.note;
    return d;
}

py::list reports_list(const std::vector<IdentityReport>& reps) {
    py::list out;
    for (const auto& rep : reps) out.append(report_dict(rep));
    return out;
}

py::dict search_dict(const SearchResult& sr) {
    py::dict d;
    d["objective"] = sr.objective_name;
    d["n"] = sr.n;
    d["r"] = sr.r;
    d["mode"] = sr.mode;
    d["min"] = big(sr.objective);
    d["argmin"] = sr.argmin;
    d["examined"] = sr.examined;
    d["seed"] = sr.seed;
    d["achieved_zero"] = sr.achieved_zero;
    d["elapsed_ms"] = sr.elapsed_ms;
    return d;
}

SearchObjective parse_objective(const std::string& name) {
    if (name == "mono") return SearchObjective::mono;
    if (name == "rainbow") return SearchObjective::rainbow_strict;
    throw py::value_error("objective must be 'rainbow' or 'mono'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Orthogonal arrays from algebraic sources, exact color-pattern "
              "censuses, and integer identity verification";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<AbelianGroup>(m, "AbelianGroup")
        .def(py::init<std::vector<long>>(), py::arg("orders"))
        .def_property_readonly("order", &AbelianGroup::order)
        .def_property_readonly("exponent", &AbelianGroup::exponent)
        .def_property_readonly("orders", &AbelianGroup::orders)
        .def("add", &AbelianGroup::add)
        .def("neg", &AbelianGroup::neg)
        .def("scale", &AbelianGroup::scale)
        .def("encode", &AbelianGroup::encode)
        .def("decode", &AbelianGroup::decode)
        .def("__repr__", [](const AbelianGroup& g) {
            std::string s = "AbelianGroup([";
            for (size_t i = 0; i < g.orders().size(); ++i)
                s += (i ? "," : "") + std::to_string(g.orders()[i]);
            return s + "])";
        });

    py::class_<FiniteGroup>(m, "FiniteGroup")
        .def(py::init([](long n, std::vector<int> table, int identity) {
                 FiniteGroup g{n, std::move(table), identity};
                 auto chk = validate_group(g);
                 if (!chk.pass) fail_precondition("not a group: " + chk.detail);
                 return g;
             }),
             py::arg("n"), py::arg("table"), py::arg("identity") = 0)
        .def_readonly("n", &FiniteGroup::n)
        .def_readonly("table", &FiniteGroup::table)
        .def_readonly("identity", &FiniteGroup::identity)
        .def("mul", &FiniteGroup::mul)
        .def("inv", &FiniteGroup::inv)
        .def("pow", &FiniteGroup::pow);

    py::class_<Quasigroup>(m, "Quasigroup")
        .def(py::init([](long n, std::vector<int> table) {
                 Quasigroup q{n, std::move(table)};
                 auto chk = validate_latin(q);
                 if (!chk.pass) fail_precondition("not a latin square: " + chk.detail);
                 return q;
             }),
             py::arg("n"), py::arg("table"))
        .def_readonly("n", &Quasigroup::n)
        .def_readonly("table", &Quasigroup::table)
        .def("mul", &Quasigroup::mul);

    py::class_<Coloring>(m, "Coloring")
        .def(py::init<long, int, std::vector<int>>(), py::arg("n"), py::arg("r"),
             py::arg("assign"))
        .def_property_readonly("n", &Coloring::n)
        .def_property_readonly("r", &Coloring::r)
        .def_property_readonly("assign", &Coloring::assign)
        .def_property_readonly("class_sizes", &Coloring::class_sizes)
        .def("color", &Coloring::color)
        .def("equitable", &Coloring::equitable);

    py::class_<OrthogonalArray>(m, "OrthogonalArray")
        .def_readonly("d", &OrthogonalArray::d)
        .def_readonly("k", &OrthogonalArray::k)
        .def_readonly("n", &OrthogonalArray::n)
        .def_readonly("provenance", &OrthogonalArray::provenance)
        .def_property_readonly("row_count",
                               [](const OrthogonalArray& oa) { return oa.row_count(); })
        .def("rows",
             [](const OrthogonalArray& oa) {
                 py::list rows;
                 for (size_t i = 0; i < oa.row_count(); ++i) {
                     py::list row;
                     for (int c = 0; c < oa.d; ++c) row.append(oa.at(i, c));
                     rows.append(row);
                 }
                 return rows;
             })
        .def("to_json", &oa_to_json)
        .def("to_text", &oa_to_text);

    // ground structures; the validators take raw tables so that candidate
    // (possibly invalid) tables can be checked without constructing the types
    m.def(
        "validate_group",
        [](long n, const std::vector<int>& table, int identity) {
            auto chk = validate_group(FiniteGroup{n, table, identity});
            py::dict d;
            d["pass"] = chk.pass;
            d["axiom"] = chk.axiom;
            d["witness"] = chk.witness;
            d["exhaustive"] = chk.exhaustive;
            d["detail"] = chk.detail;
            return d;
        },
        py::arg("n"), py::arg("table"), py::arg("identity") = 0);
    m.def(
        "validate_latin",
        [](long n, const std::vector<int>& table) {
            auto chk = validate_latin(Quasigroup{n, table});
            py::dict d;
            d["pass"] = chk.pass;
            d["row_violation"] = chk.row_violation;
            d["index"] = chk.index;
            d["detail"] = chk.detail;
            return d;
        },
        py::arg("n"), py::arg("table"));
    m.def("cayley_table", &cayley_table, py::arg("group"));
    m.def("dihedral_group", &dihedral_group, py::arg("m"));
    m.def("as_quasigroup", &as_quasigroup);
    m.def(
        "invert_submatrix_mod",
        [](const std::vector<std::vector<long>>& matrix, const std::vector<int>& columns, long q) {
            if (matrix.empty()) fail_precondition("empty matrix");
            std::vector<long> flat;
            for (const auto& row : matrix) {
                if (row.size() != matrix.front().size())
                    fail_precondition("ragged matrix rows");
                flat.insert(flat.end(), row.begin(), row.end());
            }
            ModMatrix a(long(matrix.size()), long(matrix.front().size()), q, flat);
            auto inv = invert_submatrix_mod(a, columns, q);
            long mm = long(matrix.size());
            std::vector<std::vector<long>> out(static_cast<size_t>(mm),
                                               std::vector<long>(static_cast<size_t>(mm)));
            for (long i = 0; i < mm; ++i)
                for (long j = 0; j < mm; ++j) out[size_t(i)][size_t(j)] = inv[size_t(i) * mm + j];
            return out;
        },
        py::arg("matrix"), py::arg("columns"), py::arg("q"));

    // OA constructors and checks
    m.def("from_linear_equation", &from_linear_equation, py::arg("group"), py::arg("coeffs"),
          py::arg("t") = 0);
    m.def(
        "from_linear_system",
        [](const AbelianGroup& g, const std::vector<std::vector<long>>& matrix,
           const std::vector<long>& b) {
            if (matrix.empty()) fail_precondition("empty matrix");
            std::vector<long> flat;
            for (const auto& row : matrix) flat.insert(flat.end(), row.begin(), row.end());
            ModMatrix a(long(matrix.size()), long(matrix.front().size()), g.exponent(), flat);
            return from_linear_system(g, a, b);
        },
        py::arg("group"), py::arg("matrix"), py::arg("b"));
    m.def("schur_triples", py::overload_cast<const FiniteGroup&>(&schur_triples),
          py::arg("group"));
    m.def("schur_triples", py::overload_cast<const Quasigroup&>(&schur_triples),
          py::arg("quasigroup"));
    m.def("ap3_triples", &ap3_triples, py::arg("group"));
    m.def("verify_strength", [](const OrthogonalArray& oa) {
        auto chk = verify_strength(oa);
        py::dict d;
        d["pass"] = chk.pass;
        d["columns"] = chk.columns;
        d["tuple"] = chk.tuple;
        d["count"] = chk.count;
        d["detail"] = chk.detail;
        return d;
    });
    m.def("same_row_set", &same_row_set);
    m.def("build_z3_extension", &build_z3_extension, py::arg("y"));
    m.def(
        "swap_block",
        [](const Quasigroup& l, const std::vector<int>& u, const std::vector<int>& v, int layer_a,
           int layer_b) { return swap_block(l, {u, v, layer_a, layer_b}); },
        py::arg("l"), py::arg("u"), py::arg("v"), py::arg("layer_a") = 0, py::arg("layer_b") = 1);

    // colorings
    m.def(
        "equitable_coloring",
        [](long n, int r, const std::string& mode) {
            if (mode != "blocks" && mode != "round-robin")
                throw py::value_error("mode must be 'blocks' or 'round-robin'");
            return equitable_coloring(
                n, r, mode == "blocks" ? EquitableMode::blocks : EquitableMode::round_robin);
        },
        py::arg("n"), py::arg("r"), py::arg("mode") = "blocks");
    m.def("rainbow_free_ap_coloring", &rainbow_free_ap_coloring, py::arg("n"), py::arg("t"));
    m.def("subgroup_chain_coloring", &subgroup_chain_coloring, py::arg("group"), py::arg("k"),
          py::arg("h"));
    m.def("random_coloring", &random_coloring, py::arg("n"), py::arg("class_sizes"),
          py::arg("seed"));
    m.def("stats", [](const Coloring& c) {
        auto st = stats(c);
        py::dict d;
        d["alpha_c"] = frac(st.alpha_c);
        d["variance"] = frac(st.variance);
        d["min_density"] = frac(st.min_density);
        return d;
    });

    // censuses
    m.def(
        "full_census",
        [](const OrthogonalArray& oa, const Coloring& c, int workers) {
            return census_dict(full_census(oa, c, workers));
        },
        py::arg("oa"), py::arg("coloring"), py::arg("workers") = 1);
    m.def(
        "census_via_convolution",
        [](const AbelianGroup& g, const std::vector<long>& coeffs, long t, const Coloring& c) {
            return census_dict(census_via_convolution(g, coeffs, t, c));
        },
        py::arg("group"), py::arg("coeffs"), py::arg("t"), py::arg("coloring"));
    m.def("interval_schur_census", [](const Coloring& c) {
        auto r = interval_schur_census(c);
        py::dict d;
        d["M"] = big(r.mono);
        d["R_strict"] = big(r.rainbow_strict);
        py::list mi;
        for (auto v : r.mono_color) mi.append(big(v));
        d["M_i"] = mi;
        d["solutions"] = r.solutions;
        return d;
    });
    m.def("embed_interval_coloring", &embed_interval_coloring, py::arg("coloring"));

    // identity checks: each returns a dict (or list of dicts) with exact sides
    m.def("verify_counting_identity",
          [](const OrthogonalArray& oa, const Coloring& c) {
              return reports_list(verify_counting_identity(full_census(oa, c), c));
          });
    m.def("check_2m_r", [](const OrthogonalArray& oa, const Coloring& c) {
        return report_dict(check_2m_r(full_census(oa, c), c));
    });
    m.def("check_cor_32_2", [](const OrthogonalArray& oa, const Coloring& c) {
        return report_dict(check_cor_32_2(full_census(oa, c), c));
    });
    m.def("check_cor_32_3", [](const OrthogonalArray& oa, const Coloring& c) {
        return report_dict(check_cor_32_3(full_census(oa, c), c));
    });
    m.def("check_alpha_bounds", [](const OrthogonalArray& oa, const Coloring& c) {
        return report_dict(check_alpha_bounds(full_census(oa, c), c));
    });
    m.def("check_thm_dd1", [](const OrthogonalArray& oa, const Coloring& c) {
        return reports_list(check_thm_dd1(full_census(oa, c), c));
    });
    m.def("check_cor_dr3", [](const OrthogonalArray& oa, const Coloring& c) {
        return report_dict(check_cor_dr3(full_census(oa, c), c));
    });
    m.def("check_thm_asym", [](const OrthogonalArray& oa, const Coloring& c) {
        return reports_list(check_thm_asym(full_census(oa, c), c));
    });
    m.def("is_regular_equation", [](const std::vector<long>& coeffs) {
        auto r = is_regular_equation(coeffs);
        py::dict d;
        d["regular"] = r.regular;
        d["subset"] = r.subset;
        d["subset_values"] = r.subset_values;
        return d;
    });
    m.def("check_rainbowpr",
          [](const AbelianGroup& g, const std::vector<long>& coeffs, const Coloring& c) {
              return report_dict(check_rainbowpr(g, coeffs, c));
          });
    m.def("check_3ap_rainbow", [](const FiniteGroup& g, const Coloring& c) {
        return report_dict(check_3ap_rainbow(g, c));
    });
    m.def("smallest_prime_divisor", &smallest_prime_divisor);

    // extremal searches
    m.def(
        "min_schur_all_2colorings",
        [](int n, int workers) { return search_dict(min_schur_all_2colorings(n, workers)); },
        py::arg("n"), py::arg("workers") = 1);
    m.def(
        "min_schur_equitable",
        [](int n, int r, uint64_t seed, unsigned long long samples) {
            return search_dict(min_schur_equitable(n, r, seed, samples));
        },
        py::arg("n"), py::arg("r"), py::arg("seed") = 0, py::arg("samples") = 100000);
    m.def(
        "search_rainbow_free",
        [](const OrthogonalArray& oa, int r, unsigned long long budget, uint64_t seed,
           const std::string& objective, bool maximize, long min_class_size) {
            return search_dict(search_rainbow_free(oa, r, budget, seed,
                                                   parse_objective(objective), maximize,
                                                   min_class_size));
        },
        py::arg("oa"), py::arg("r"), py::arg("budget") = 20000, py::arg("seed") = 0,
        py::arg("objective") = "rainbow", py::arg("maximize") = false,
        py::arg("min_class_size") = 0);
}
