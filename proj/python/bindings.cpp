#include <repcount/counting.hpp>
#include <repcount/extrema.hpp>
#include <repcount/identities.hpp>
#include <repcount/numeral.hpp>
#include <repcount/oracle.hpp>
#include <repcount/pattern.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;

// Python int <-> Integer through decimal text.
namespace pybind11::detail {

template <>
struct type_caster<repcount::Integer> {
    PYBIND11_TYPE_CASTER(repcount::Integer, const_name("int"));

    bool load(handle src, bool) {
        if (!src || PyFloat_Check(src.ptr()) || !PyIndex_Check(src.ptr())) {
            return false;
        }
        auto index = reinterpret_steal<object>(PyNumber_Index(src.ptr()));
        if (!index) {
            PyErr_Clear();
            return false;
        }
        value = repcount::parse_integer(std::string(py::str(index)));
        return true;
    }

    static handle cast(const repcount::Integer& src, return_value_policy, handle) {
        const std::string text = src.str();
        return PyLong_FromString(text.c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using namespace repcount;

Alphabet alphabet_named(const std::string& kind) {
    if (kind == "hyper") return Alphabet::hyper();
    if (kind == "balanced") return Alphabet::balanced();
    if (kind == "standard") return Alphabet::standard();
    throw DomainError("unknown alphabet '" + kind + "'");
}

CountKind count_kind_named(const std::string& kind) {
    if (kind == "hyper") return CountKind::Hyper;
    if (kind == "balanced") return CountKind::Balanced;
    throw DomainError("unknown counting function '" + kind + "'");
}

ScanOptions scan_options(std::size_t budget, unsigned workers) {
    ScanOptions options;
    options.budget = budget;
    options.workers = workers;
    return options;
}

py::tuple interval_tuple(const Interval& interval) {
    return py::make_tuple(interval.lo(), interval.hi());
}

py::dict max_report_dict(const MaxReport& report) {
    py::dict out;
    out["interval"] = interval_tuple(report.interval);
    out["max"] = report.max_value;
    out["first_argmax"] = report.first_argmax;
    out["predicted_argmax"] = report.predicted_argmax;
    out["predicted_value"] = report.predicted_value;
    out["agree"] = report.agree;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Hyper-d-ary and balanced d-ary representation counts";

    static py::exception<BudgetExceeded> budget_error(m, "BudgetExceeded", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const BudgetExceeded& e) {
            py::set_error(budget_error, e.what());
        } catch (const DomainError& e) {
            py::set_error(PyExc_ValueError, e.what());
        } catch (const InternalCheckFailed& e) {
            py::set_error(PyExc_AssertionError, e.what());
        }
    });

    // numeral / pattern
    m.def("eval_digits", [](const std::vector<int>& msf, int d) {
        return eval(DigitVec::from_display(BaseParams(d), msf));
    }, py::arg("digits"), py::arg("base"), "Value of most-significant-first digits in base d.");
    m.def("expand_pattern", [](const std::string& text) {
        const auto v = expand(parse_pattern(text));
        return py::make_tuple(v.display_digits(), v.base().d());
    }, py::arg("pattern"), "Returns (digits, base) with digits most-significant-first.");
    m.def("format_pattern", [](const std::string& text) { return format(parse_pattern(text)); },
          py::arg("pattern"));
    m.def("eval_pattern", [](const std::string& text) { return eval(expand(parse_pattern(text))); },
          py::arg("pattern"));
    m.def("validate", [](const std::vector<int>& msf, int d, const std::string& kind) {
        return validate(DigitVec::from_display(BaseParams(d), msf), alphabet_named(kind));
    }, py::arg("digits"), py::arg("base"), py::arg("alphabet"));
    m.def("to_standard_digits", [](const Integer& n, int d) {
        return to_standard_digits(n, d).display_digits();
    }, py::arg("n"), py::arg("base"));
    m.def("repunit", [](int d, unsigned j) { return repunit(d, j); }, py::arg("base"), py::arg("j"));
    m.def("interval_I", [](int d, unsigned j) { return interval_tuple(interval_I(d, j)); },
          py::arg("base"), py::arg("j"));
    m.def("interval_I_shifted",
          [](int d, unsigned j) { return interval_tuple(interval_I_shifted(d, j)); },
          py::arg("base"), py::arg("j"));

    // counting
    py::class_<MemoCache>(m, "Counter", "Counting functions for one base with a shared memo.")
        .def(py::init([](int d, std::optional<std::size_t> capacity) {
                 return MemoCache(d, capacity.value_or(MemoCache::kUnbounded));
             }),
             py::arg("base"), py::arg("capacity") = py::none())
        .def_property_readonly("base", [](const MemoCache& c) { return c.base().d(); })
        .def("__len__", &MemoCache::size)
        .def("hyper", [](MemoCache& c, const Integer& n) { return hyper_count(n, c); })
        .def("balanced", [](MemoCache& c, const Integer& n) { return balanced_count(n, c); })
        .def("shift_difference",
             [](MemoCache& c, unsigned j, const Integer& n) { return shift_difference(j, n, c); });

    m.def("hyper_count", [](const Integer& n, int d) { return hyper_count(n, d); },
          py::arg("n"), py::arg("base"));
    m.def("balanced_count", [](const Integer& n, int d) { return balanced_count(n, d); },
          py::arg("n"), py::arg("base"));
    m.def("stern", &stern, py::arg("n"));
    m.def("fibonacci", &fibonacci, py::arg("k"));
    m.def("shift_difference",
          [](unsigned j, const Integer& n, int d) { return shift_difference(j, n, d); },
          py::arg("j"), py::arg("n"), py::arg("base"));

    // oracle
    m.def("enumerate_reps", [](const Integer& n, int d, const std::string& kind) {
        std::vector<std::vector<int>> out;
        for (const auto& rep : enumerate_reps(n, d, alphabet_named(kind))) {
            out.push_back(rep.display_digits());
        }
        return out;
    }, py::arg("n"), py::arg("base"), py::arg("alphabet"));
    m.def("count_via_enumeration", [](const Integer& n, int d, const std::string& kind) {
        return count_via_enumeration(n, d, alphabet_named(kind));
    }, py::arg("n"), py::arg("base"), py::arg("alphabet"));
    m.def("hyper_is_one_predicate", &hyper_is_one_predicate, py::arg("n"));
    m.def("balanced_is_one_predicate", &balanced_is_one_predicate, py::arg("n"));
    m.def("normalize_balanced", [](const std::vector<int>& msf, int d) {
        return normalize_balanced(DigitVec::from_display(BaseParams(d), msf)).display_digits();
    }, py::arg("digits"), py::arg("base"));

    // identities
    m.def("verify_shift_interval", [](unsigned j, int d, std::size_t budget, unsigned workers) {
        std::optional<ShiftReport> report;
        {
            py::gil_scoped_release release;
            report = verify_shift_interval(j, d, scan_options(budget, workers));
        }
        py::list failures;
        for (const auto& [n, value] : report->failures) {
            failures.append(py::make_tuple(n, value));
        }
        py::dict out;
        out["base"] = report->d;
        out["j"] = report->j;
        out["interval"] = interval_tuple(report->interval);
        out["zero_on_interval"] = report->zero_on_interval;
        out["left_boundary"] = report->left_boundary_value;
        out["right_boundary"] = report->right_boundary_value;
        out["failures"] = failures;
        out["holds"] = report->holds();
        return out;
    }, py::arg("j"), py::arg("base"), py::arg("budget") = kDefaultBudget, py::arg("workers") = 1u);
    m.def("covering_index", &covering_index, py::arg("n"), py::arg("base"));
    m.def("witness_against_shift", &witness_against_shift, py::arg("k"), py::arg("base"));

    // extrema
    m.def("defant_A", &defant_A, py::arg("k"), py::arg("base"));
    m.def("balanced_argmax", &balanced_argmax, py::arg("r"));
    m.def("max_scan", [](const std::string& kind, int d, const Integer& lo, const Integer& hi,
                         std::size_t budget, unsigned workers) {
        const Interval interval(lo, hi);
        const CountKind which = count_kind_named(kind);
        std::optional<MaxScan> scan;
        {
            py::gil_scoped_release release;
            scan = max_scan(which, d, interval, scan_options(budget, workers));
        }
        return py::make_tuple(scan->max_value, scan->first_argmax);
    }, py::arg("kind"), py::arg("base"), py::arg("lo"), py::arg("hi"),
       py::arg("budget") = kDefaultBudget, py::arg("workers") = 1u,
       "Returns (max, first_argmax) over [lo, hi].");
    m.def("verify_hyper_maxima", [](unsigned k, int d, std::size_t budget, unsigned workers) {
        std::optional<MaxReport> report;
        {
            py::gil_scoped_release release;
            report = verify_hyper_maxima(k, d, scan_options(budget, workers));
        }
        return max_report_dict(*report);
    }, py::arg("k"), py::arg("base"), py::arg("budget") = kDefaultBudget,
       py::arg("workers") = 1u);
    m.def("verify_balanced_maxima", [](unsigned r, std::size_t budget, unsigned workers) {
        std::optional<MaxReport> report;
        {
            py::gil_scoped_release release;
            report = verify_balanced_maxima(r, scan_options(budget, workers));
        }
        return max_report_dict(*report);
    }, py::arg("r"), py::arg("budget") = kDefaultBudget, py::arg("workers") = 1u);
}
