#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sympdeg/io.hpp"
#include "sympdeg/pbw.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace sympdeg;

namespace {

// {(i, j): m} -> Representation
Representation rep_from_dict(int n, const py::dict& d) {
    Representation::Multiplicities mult;
    for (auto [k, v] : d) {
        const auto seg = k.cast<std::pair<int, int>>();
        mult[{seg.first, seg.second}] += v.cast<int>();
    }
    return Representation(n, mult);
}

py::dict rep_to_dict(const Representation& r) {
    py::dict d;
    for (const auto& [s, m] : r.multiplicities()) d[py::make_tuple(s.i, s.j)] = m;
    return d;
}

// JSON built by the io layer, handed to Python as plain objects.
py::object to_py(const io::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Degenerations of type-A quiver representations and symplectic PBW combinatorics";

    static py::exception<Error> error_type(m, "SympdegError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(error_type.ptr(), (e.name() + ": " + e.what()).c_str());
        }
    });

    py::class_<Representation>(m, "Representation")
        .def(py::init(&rep_from_dict), "n"_a, "mult"_a)
        .def_property_readonly("n", &Representation::n)
        .def("multiplicities", &rep_to_dict)
        .def("summand_count", &Representation::summand_count)
        .def("__add__", &Representation::operator+)
        .def("__eq__", [](const Representation& a, const Representation& b) { return a == b; })
        .def("__hash__", [](const Representation& r) { return py::hash(py::str(r.str())); })
        .def("__repr__", [](const Representation& r) { return "Representation(" + r.str() + ")"; })
        .def("__str__", &Representation::str);

    py::class_<RankSequence>(m, "RankSequence")
        .def_static("from_rows", &RankSequence::from_rows, "rows"_a)
        .def_property_readonly("n", &RankSequence::n)
        .def("rows", &RankSequence::rows)
        .def("__call__", &RankSequence::operator(), "i"_a, "j"_a)
        .def("is_valid", &RankSequence::is_valid)
        .def("dominates", &RankSequence::dominates)
        .def("__eq__", [](const RankSequence& a, const RankSequence& b) { return a == b; })
        .def("__repr__", [](const RankSequence& r) { return "RankSequence(" + io::to_json(r).dump() + ")"; });

    py::class_<SymmetricType>(m, "SymmetricType")
        .def(py::init<int, int>(), "n"_a, "epsilon"_a)
        .def_static("parse", &SymmetricType::parse, "name"_a, "n"_a)
        .def_readonly("n", &SymmetricType::n)
        .def_readonly("epsilon", &SymmetricType::epsilon)
        .def("split", &SymmetricType::split)
        .def("name", &SymmetricType::name);

    m.def("ranks_of", &ranks_of, "rep"_a);
    m.def("rep_of", &rep_of, "ranks"_a);
    m.def("dual", py::overload_cast<const Representation&>(&dual), "rep"_a);
    m.def("dim_vector", &dim_vector, "rep"_a);
    m.def("hom_dim", py::overload_cast<const Representation&, const Representation&>(&hom_dim), "m"_a, "n"_a);
    m.def("ext_dim", py::overload_cast<const Representation&, const Representation&>(&ext_dim), "m"_a, "n"_a);
    m.def("euler_form", &euler_form, "d"_a, "e"_a);
    m.def("degenerates", &degenerates, "m"_a, "n"_a);
    m.def(
        "generic_quotient",
        [](const Representation& r, int q, int s) { return to_py(io::to_json(generic_quotient(r, q, s))); }, "rep"_a,
        "q"_a, "s"_a);
    m.def(
        "degeneration_path",
        [](const Representation& a, const Representation& b) { return to_py(io::to_json(degeneration_path(a, b))); },
        "m"_a, "n"_a);

    m.def("is_epsilon_rep", &is_epsilon_rep, "rep"_a, "sym"_a);
    m.def("is_epsilon_rank", &is_epsilon_rank, "ranks"_a, "sym"_a);
    m.def(
        "sym_degenerates",
        [](const Representation& a, const Representation& b, const SymmetricType& sym) {
            return sym_degenerates(EpsilonRep(a, sym), EpsilonRep(b, sym));
        },
        "m"_a, "n"_a, "sym"_a);
    m.def(
        "sym_degeneration_path",
        [](const Representation& a, const Representation& b, const SymmetricType& sym, std::vector<int> peels) {
            const EpsilonRep ea(a, sym), eb(b, sym);
            return to_py(io::to_json(peels.empty() ? sym_degeneration_path(ea, eb)
                                                   : sym_degeneration_path(ea, eb, peels)));
        },
        "m"_a, "n"_a, "sym"_a, "peels"_a = std::vector<int>{});

    m.def(
        "build_Mi",
        [](int n, std::vector<int> i) {
            const PbwModule mod = build_Mi(PbwSubset(n, std::move(i)));
            return py::make_tuple(mod.half, mod.total.rep());
        },
        "n"_a, "subset"_a);
    m.def(
        "w_i_word", [](int n, std::vector<int> i) { return w_i_word(PbwSubset(n, std::move(i))).letters; }, "n"_a,
        "subset"_a);
    m.def(
        "u_iprime_word", [](int n, std::vector<int> i) { return u_iprime_word(PbwSubset(n, std::move(i))).letters; },
        "n"_a, "subset"_a);
    m.def(
        "is_reduced",
        [](const std::string& type, int rank, std::vector<int> letters) {
            const WeylType t = type == "A" ? WeylType::A : type == "C" ? WeylType::C : throw InvalidType(type);
            return is_reduced(WeylWord{t, rank, std::move(letters)});
        },
        "type"_a, "rank"_a, "letters"_a);
    m.def(
        "lagrangian_fixed_point_count",
        [](int n, std::vector<int> i) { return lagrangian_fixed_points(PbwSubset(n, std::move(i))).size(); }, "n"_a,
        "subset"_a);
    m.def(
        "check_lemma_ui", [](int n, std::vector<int> i) { return to_py(io::to_json(check_lemma_ui(PbwSubset(n, std::move(i))))); },
        "n"_a, "subset"_a);
    m.def(
        "dynkin_face_contains_zero",
        [](int n, std::vector<int> i) { return dynkin_face_contains(PbwSubset(n, std::move(i)), CRootVector(n), false); },
        "n"_a, "subset"_a);
    m.def(
        "find_relative_interior_point",
        [](int n, std::vector<int> i) { return to_py(io::to_json(find_relative_interior_point(PbwSubset(n, std::move(i))))); },
        "n"_a, "subset"_a);

    m.attr("__version__") = "0.1.0";
}
