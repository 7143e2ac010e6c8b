// Python bindings for the core operations.  Weights cross the boundary as
// integer sequences in fundamental-weight coordinates; characters as lists
// of (weight, multiplicity) pairs; words as 1-based letter lists matching
// the CLI serialization; structured results as plain dicts mirroring the
// CLI's canonical JSON.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liecoh/json_io.hpp"
#include "liecoh/verify.hpp"

namespace py = pybind11;
using namespace liecoh;

namespace {

using CharPairs = std::vector<std::pair<Weight, long long>>;

FormalCharacter char_in(const CharPairs& pairs) {
    FormalCharacter f;
    for (const auto& [w, m] : pairs)
        f.add(w, m);
    return f;
}

CharPairs char_out(const FormalCharacter& f) {
    CharPairs out;
    for (const auto& [w, m] : f.terms())
        out.emplace_back(w, m);
    return out;
}

ReducedWord word_in(const std::vector<int>& letters_1based) {
    ReducedWord w;
    for (int v : letters_1based) {
        if (v < 1)
            throw std::invalid_argument("word letters are 1-based simple-root indices");
        w.letters.push_back(v - 1);
    }
    return w;
}

std::vector<int> word_out(const ReducedWord& w) {
    std::vector<int> out;
    for (int v : w.letters)
        out.push_back(v + 1);
    return out;
}

std::set<int> subset_in(const std::vector<int>& j_1based) {
    std::set<int> j;
    for (int v : j_1based) {
        if (v < 1)
            throw std::invalid_argument("subset indices are 1-based");
        j.insert(v - 1);
    }
    return j;
}

DecomposeMode mode_in(const std::string& mode) {
    if (mode == "greedy")
        return DecomposeMode::Greedy;
    if (mode == "strict")
        return DecomposeMode::Strict;
    throw std::invalid_argument("mode must be greedy or strict");
}

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<long long>());
        case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& v : j)
                out.append(json_to_py(v));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& [k, v] : j.items())
                out[py::str(k)] = json_to_py(v);
            return out;
        }
        default: return py::none();
    }
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact cohomology calculator for flag varieties and fibration towers";

    py::class_<RootSystem>(m, "RootSystem")
        .def(py::init([](const std::string& type) { return RootSystem::build(type); }), py::arg("type"))
        .def_property_readonly("rank", &RootSystem::rank)
        .def_property_readonly("type", [](const RootSystem& rs) { return rs.type().str(); })
        .def_property_readonly("simply_laced", &RootSystem::simply_laced)
        .def_property_readonly("cartan_matrix", [](const RootSystem& rs) { return rs.cartan_matrix(); })
        .def_property_readonly("rho", &RootSystem::rho)
        .def_property_readonly("positive_roots",
                               [](const RootSystem& rs) {
                                   std::vector<std::pair<std::vector<int>, Weight>> out;
                                   for (const Root& r : rs.positive_roots())
                                       out.emplace_back(r.root_coords, r.weight);
                                   return out;
                               },
                               "list of (root_coords, weight) pairs")
        .def_property_readonly("highest_root",
                               [](const RootSystem& rs) {
                                   return std::make_pair(rs.highest_root().root_coords,
                                                         rs.highest_root().weight);
                               })
        .def("simple_root", [](const RootSystem& rs, int i) { return rs.alpha(i - 1); }, py::arg("i"),
             "weight of the i-th simple root, 1-based")
        .def("from_root_coords", &RootSystem::from_root_coords, py::arg("root_coords"))
        .def("pairing",
             [](const RootSystem& rs, const Weight& lambda, const std::vector<int>& beta_rc) {
                 auto [idx, sign] = rs.root_lookup(rs.from_root_coords(beta_rc));
                 if (idx < 0)
                     throw std::invalid_argument("not a root of the system");
                 return sign * rs.pairing(lambda, rs.positive_roots()[idx]);
             },
             py::arg("weight"), py::arg("beta_root_coords"),
             "pairing of a weight with the coroot of the given root")
        .def("reflect", [](const RootSystem& rs, const Weight& w, int i) { return rs.reflect(w, i - 1); },
             py::arg("weight"), py::arg("i"))
        .def("dominant", &RootSystem::dominant, py::arg("weight"))
        .def("is_singular", &RootSystem::is_singular, py::arg("weight"))
        .def("index", &RootSystem::index, py::arg("weight"))
        .def("__repr__", [](const RootSystem& rs) { return "RootSystem('" + rs.type().str() + "')"; });

    m.def("length", [](const RootSystem& rs, const std::vector<int>& w) {
        return evaluate(rs, word_in(w)).length();
    }, py::arg("rs"), py::arg("word"));
    m.def("canonical_word", [](const RootSystem& rs, const std::vector<int>& w) {
        return word_out(ReducedWord{evaluate(rs, word_in(w)).word()});
    }, py::arg("rs"), py::arg("word"));
    m.def("is_reduced", [](const RootSystem& rs, const std::vector<int>& w) {
        return is_reduced(rs, word_in(w));
    }, py::arg("rs"), py::arg("word"));
    m.def("left_descents", [](const RootSystem& rs, const std::vector<int>& w) {
        return subset_to_1based(left_descents(rs, evaluate(rs, word_in(w))));
    }, py::arg("rs"), py::arg("word"));
    m.def("all_reduced_words", [](const RootSystem& rs, const std::vector<int>& w, int cap) {
        std::vector<std::vector<int>> out;
        for (const ReducedWord& rw : all_reduced_words(rs, evaluate(rs, word_in(w)), cap))
            out.push_back(word_out(rw));
        return out;
    }, py::arg("rs"), py::arg("word"), py::arg("cap") = 12);
    m.def("w0_word", [](const RootSystem& rs) { return word_out(w0_word(rs)); }, py::arg("rs"));
    m.def("longest_word", [](const RootSystem& rs, const std::vector<int>& j) {
        return word_out(ReducedWord{longest_element(rs, subset_in(j)).word()});
    }, py::arg("rs"), py::arg("j"));
    m.def("weyl_order", [](const RootSystem& rs, const std::vector<int>& j) {
        return parabolic_order(rs, subset_in(j));
    }, py::arg("rs"), py::arg("j"));
    m.def("enumerate_words", [](const RootSystem& rs, long long guard) {
        std::vector<std::vector<int>> out;
        for (const WeylElt& w : enumerate(rs, guard))
            out.push_back(word_out(ReducedWord{w.word()}));
        return out;
    }, py::arg("rs"), py::arg("guard") = 1'000'000, "canonical words of all elements, BFS by length");
    m.def("bruhat_leq", [](const RootSystem& rs, const std::vector<int>& u, const std::vector<int>& w) {
        return bruhat_leq(rs, evaluate(rs, word_in(u)), evaluate(rs, word_in(w)));
    }, py::arg("rs"), py::arg("u"), py::arg("w"));
    m.def("dot_action", [](const RootSystem& rs, const std::vector<int>& w, const Weight& lambda) {
        return dot_action(rs, evaluate(rs, word_in(w)), lambda);
    }, py::arg("rs"), py::arg("word"), py::arg("weight"));
    m.def("act", [](const RootSystem& rs, const std::vector<int>& w, const Weight& lambda) {
        check_weight(rs, lambda);
        return evaluate(rs, word_in(w)).apply(lambda);
    }, py::arg("rs"), py::arg("word"), py::arg("weight"));

    m.def("demazure_op", [](const RootSystem& rs, const CharPairs& f, int i) {
        return char_out(demazure_op(rs, char_in(f), i - 1));
    }, py::arg("rs"), py::arg("character"), py::arg("i"));
    m.def("decompose",
          [](const RootSystem& rs, const CharPairs& f, int i, const std::string& mode) {
              return json_to_py(string_decomposition_json(decompose(rs, char_in(f), i - 1, mode_in(mode))));
          },
          py::arg("rs"), py::arg("character"), py::arg("i"), py::arg("mode") = "greedy",
          "alpha-string decomposition of a nonnegative character (debug view)");
    m.def("demazure_char", [](const RootSystem& rs, const std::vector<int>& w, const Weight& lambda) {
        return char_out(demazure_char(rs, word_in(w), lambda));
    }, py::arg("rs"), py::arg("word"), py::arg("weight"));
    m.def("weyl_character", [](const RootSystem& rs, const Weight& lambda) {
        return char_out(weyl_character(rs, lambda));
    }, py::arg("rs"), py::arg("weight"));
    m.def("weyl_dim", &weyl_dim, py::arg("rs"), py::arg("weight"));

    m.def("h_line_bundle",
          [](const RootSystem& rs, const std::vector<int>& w, const Weight& lambda,
             const std::string& mode) {
              return json_to_py(graded_json(h_line_bundle(rs, word_in(w), lambda, mode_in(mode))));
          },
          py::arg("rs"), py::arg("word"), py::arg("weight"), py::arg("mode") = "greedy");
    m.def("h_full_flag", [](const RootSystem& rs, const Weight& lambda) {
        return json_to_py(graded_json(h_full_flag(rs, lambda)));
    }, py::arg("rs"), py::arg("weight"));
    m.def("h_module_coefficients",
          [](const RootSystem& rs, const CharPairs& module, const std::string& mode) {
              return json_to_py(
                  graded_json(h_module_coefficients(rs, w0_word(rs), char_in(module), mode_in(mode))));
          },
          py::arg("rs"), py::arg("module"), py::arg("mode") = "greedy",
          "cohomology of weight-module coefficients on the full flag variety");

    m.def("g_mod_b_weights", [](const RootSystem& rs) { return char_out(g_mod_b_weights(rs)); },
          py::arg("rs"));
    m.def("adjoint_weights", [](const RootSystem& rs) { return char_out(adjoint_weights(rs)); },
          py::arg("rs"));
    m.def("p_j_weights", [](const RootSystem& rs, const std::vector<int>& j) {
        return char_out(p_j_weights(rs, subset_in(j)));
    }, py::arg("rs"), py::arg("j"));
    m.def("j_set", [](const RootSystem& rs, const std::vector<int>& w) {
        return subset_to_1based(j_set(rs, word_in(w)));
    }, py::arg("rs"), py::arg("word"));
    m.def("schubert_stabilizer", [](const RootSystem& rs, const std::vector<int>& w) {
        return subset_to_1based(schubert_stabilizer(rs, evaluate(rs, word_in(w))));
    }, py::arg("rs"), py::arg("word"));
    m.def("bsdh_tangent",
          [](const RootSystem& rs, const std::vector<int>& w, const std::string& mode) {
              return json_to_py(graded_json(bsdh_tangent(rs, word_in(w), mode_in(mode))));
          },
          py::arg("rs"), py::arg("word"), py::arg("mode") = "greedy");
    m.def("h0_parabolic_check", [](const RootSystem& rs, const std::vector<int>& w) {
        ParabolicBoundReport rep = h0_parabolic_check(rs, word_in(w));
        py::dict out;
        out["pass"] = rep.pass;
        out["j_set"] = subset_to_1based(rep.j);
        out["excess"] = char_out(rep.excess);
        out["h0"] = char_out(rep.h0);
        return out;
    }, py::arg("rs"), py::arg("word"));

    m.def("twisted_schubert_report", [](const RootSystem& rs, const std::vector<int>& w) {
        return json_to_py(twisted_report_json(twisted_schubert_report(rs, evaluate(rs, word_in(w)))));
    }, py::arg("rs"), py::arg("word"));
    m.def("twisted_bsdh_report", [](const RootSystem& rs, const std::vector<int>& w) {
        return json_to_py(twisted_report_json(twisted_bsdh_report(rs, word_in(w))));
    }, py::arg("rs"), py::arg("word"));

    m.def("verify_suite", [](const std::string& name) {
        py::list out;
        for (const auto& r : liecoh::verify::run_suite(name)) {
            py::dict d;
            d["id"] = r.id;
            d["pass"] = r.pass;
            d["detail"] = r.detail;
            d["seconds"] = r.seconds;
            out.append(d);
        }
        return out;
    }, py::arg("name"));
    m.def("verify_suite_names", [] { return liecoh::verify::suite_names(); });

    py::register_exception<std::domain_error>(m, "RefusalError");
}
