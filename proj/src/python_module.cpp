#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scrollfano/census.hpp"
#include "scrollfano/logfano.hpp"
#include "scrollfano/parse.hpp"
#include "scrollfano/sections.hpp"

namespace py = pybind11;
using namespace scrollfano;

namespace {

py::int_ to_py(const Int& v) {
    return py::reinterpret_steal<py::int_>(
        PyLong_FromString(v.str().c_str(), nullptr, 10));
}

ScrollVariety variety_from(const std::string& literal) {
    return parse_variety(literal).variety;
}

DivisorClass class_from(const ScrollVariety& x, const std::string& literal) {
    return parse_class(literal, x.base().pic_rank());
}

py::dict report_dict(const ScrollVariety& x, const PairReport& report) {
    py::dict d;
    d["adjoint_class"] = to_string(report.adjoint_class);
    d["is_log_fano"] = report.is_log_fano;
    d["index"] = report.index;
    d["pseudoindex"] =
        report.pseudoindex ? py::object(py::int_(*report.pseudoindex)) : py::none();
    d["fundamental_class"] = to_string(report.fundamental_class);
    if (report.witness) {
        py::dict w;
        w["curve"] = to_string(*report.witness);
        w["degree"] = degree(x, report.adjoint_class, *report.witness);
        d["witness"] = w;
    } else {
        d["witness"] = py::none();
    }
    return d;
}

std::string status_name(MemberStatus::Kind kind) {
    switch (kind) {
        case MemberStatus::Kind::NoMember: return "no-member";
        case MemberStatus::Kind::ForcedNonReduced: return "forced-non-reduced";
        case MemberStatus::Kind::ForcedDecomposition: return "forced-decomposition";
        case MemberStatus::Kind::Unconstrained: return "unconstrained";
    }
    return {};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact divisor arithmetic, section counts and log Fano censuses "
              "on split projective bundles";

    py::class_<ScrollVariety>(m, "Variety")
        .def_static("parse", &variety_from, py::arg("literal"))
        .def_property_readonly("dim", &ScrollVariety::dim)
        .def_property_readonly("picard_rank", &ScrollVariety::picard_rank)
        .def_property_readonly("t", &ScrollVariety::t)
        .def_property_readonly("twists",
                               [](const ScrollVariety& x) { return x.twists(); })
        .def("__str__", [](const ScrollVariety& x) { return to_string(x); })
        .def("__repr__", [](const ScrollVariety& x) { return to_string(x); })
        .def("__eq__", [](const ScrollVariety& a, const ScrollVariety& b) { return a == b; });

    m.def("anticanonical", [](const ScrollVariety& x) { return to_string(anticanonical(x)); });
    m.def("h0", [](const ScrollVariety& x, const std::string& cls) {
        return to_py(h0_scroll(x, class_from(x, cls)));
    });
    m.def("h0_lattice",
          [](const ScrollVariety& x, const std::vector<std::int64_t>& c, std::int64_t d) {
              return to_py(h0_lattice(x, c, d));
          });
    m.def("is_ample", [](const ScrollVariety& x, const std::string& cls) {
        return is_ample(x, class_from(x, cls));
    });
    m.def("is_nef", [](const ScrollVariety& x, const std::string& cls) {
        return is_nef(x, class_from(x, cls));
    });
    m.def("is_effective", [](const ScrollVariety& x, const std::string& cls) {
        return is_effective(x, class_from(x, cls));
    });
    m.def("index_of", [](const ScrollVariety& x, const std::string& cls) {
        return index_of(class_from(x, cls));
    });
    m.def("pseudoindex_of", [](const ScrollVariety& x, const std::string& cls) {
        return pseudoindex_of(x, class_from(x, cls));
    });
    m.def("member_status", [](const ScrollVariety& x, const std::string& cls) {
        const DivisorClass c = class_from(x, cls);
        const MonomialSummary summary = monomial_summary(x, c);
        const MemberStatus status = member_status(x, c);
        py::dict d;
        d["count"] = to_py(summary.count);
        d["forced_multiplicities"] = summary.forced_multiplicities;
        d["residual_class"] = to_string(summary.residual_class);
        d["status"] = status_name(status.kind);
        py::list parts;
        for (const DivisorClass& part : status.parts) parts.append(to_string(part));
        d["parts"] = parts;
        d["snc_member_exists"] = snc_member_exists(x, c);
        return d;
    });
    m.def("check", [](const ScrollVariety& x, const std::vector<std::string>& boundary) {
        std::vector<BoundarySpec> specs;
        for (const std::string& literal : boundary)
            specs.push_back(BoundarySpec::general_member(class_from(x, literal)));
        const LogFanoPair pair(x, specs);
        return report_dict(x, check_pair(pair));
    });
    m.def(
        "census",
        [](int n, py::object index, py::object pseudoindex, std::int64_t max_twist) {
            CensusQuery q;
            q.n = n;
            q.twist_cap = max_twist;
            if (!index.is_none()) {
                q.mode = CensusMode::IndexAtLeast;
                q.bound = index.cast<std::int64_t>();
            } else if (!pseudoindex.is_none()) {
                q.mode = CensusMode::PseudoindexAtLeast;
                q.bound = pseudoindex.cast<std::int64_t>();
            } else {
                throw std::invalid_argument("census needs index or pseudoindex");
            }
            py::list rows;
            for (const CensusRow& row : enumerate_census(q)) {
                py::dict d;
                d["variety"] = to_string(row.x);
                d["boundary_class"] = to_string(row.boundary_class);
                d["status"] = status_name(row.decomposition.kind);
                d["report"] = report_dict(row.x, row.report);
                d["family"] = row.matched_family
                                  ? py::object(py::str(describe(*row.matched_family)))
                                  : py::none();
                rows.append(d);
            }
            return rows;
        },
        py::arg("n"), py::arg("index") = py::none(), py::arg("pseudoindex") = py::none(),
        py::arg("max_twist") = 1);
    m.def(
        "gallery",
        [](int r, std::int64_t max_param) {
            py::list out;
            for (const FamilyInstance& inst : gallery_instances(r, max_param)) {
                const FamilyReport report = verify_family(inst);
                py::dict d;
                d["family"] = family_id_string(inst.id);
                d["ok"] = report.ok;
                d["expected_dim_linear_system"] = to_py(inst.expected.dim_linear_system);
                if (report.computed_dim_linear_system)
                    d["dim_linear_system"] = to_py(*report.computed_dim_linear_system);
                out.append(d);
            }
            return out;
        },
        py::arg("r"), py::arg("max_param") = 3);
}
