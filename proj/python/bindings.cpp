#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moltm/assignment.hpp"
#include "moltm/design.hpp"
#include "moltm/error.hpp"
#include "moltm/layout.hpp"
#include "moltm/machine.hpp"
#include "moltm/reference_tm.hpp"
#include "moltm/strand.hpp"

namespace py = pybind11;

namespace {

moltm::BaseAssignment pick(const std::optional<std::string>& text) {
  return text ? moltm::parse_assignment(*text) : moltm::default_assignment();
}

moltm::TransitionVariant variant(bool t8_copies_t7) {
  return t8_copies_t7 ? moltm::TransitionVariant::T8CopiesT7 : moltm::TransitionVariant::Standard;
}

}  // namespace

PYBIND11_MODULE(_moltm, m) {
  m.doc() = "Molecular NAND Turing machine simulator";
  m.attr("__version__") = "0.1.0";

  py::register_exception<moltm::Error>(m, "MoltmError");

  m.def("reverse_complement", [](const std::string& s) { return moltm::reverse_complement(moltm::BaseSeq::parse(s)).str(); });
  m.def("nand_oracle", &moltm::nand_oracle, py::arg("a"), py::arg("b"));
  m.def("default_assignment_text", [] { return std::string(moltm::default_assignment_text()); });

  m.def(
      "run",
      [](const std::string& a, const std::string& b, std::optional<std::string> assignment, bool allow_unequal,
         bool t8_copies_t7) {
        moltm::RunOptions o;
        o.allow_unequal = allow_unequal;
        o.variant = variant(t8_copies_t7);
        o.step.record_renderings = false;
        const auto r = moltm::run(pick(assignment), a, b, o);
        py::dict d;
        d["output"] = r.output;
        d["errored"] = r.errored;
        d["steps"] = r.steps;
        d["tape"] = moltm::glyphs(r.symbols);
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("assignment") = py::none(), py::arg("allow_unequal") = false,
      py::arg("t8_copies_t7") = false);

  m.def(
      "run_symbolic",
      [](const std::string& a, const std::string& b) {
        const auto r = moltm::run_symbolic(a, b);
        py::dict d;
        d["output"] = r.output;
        d["errored"] = r.errored;
        d["transitions"] = r.transitions;
        d["tape"] = moltm::glyphs(r.tape);
        return d;
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "trace",
      [](const std::string& a, const std::string& b, bool structured, bool full, std::optional<std::string> assignment) {
        const auto r = moltm::run(pick(assignment), a, b);
        return moltm::format_trace(r.trace, structured ? moltm::TraceFormat::Structured : moltm::TraceFormat::Text,
                                   full);
      },
      py::arg("a"), py::arg("b"), py::arg("structured") = false, py::arg("full") = false,
      py::arg("assignment") = py::none());

  m.def(
      "check_equivalence",
      [](std::size_t max_len, bool t8_copies_t7, bool include_unequal, std::optional<std::string> assignment) {
        const auto r = moltm::check_equivalence(pick(assignment), max_len, {variant(t8_copies_t7), include_unequal});
        py::list divergences;
        for (const auto& d : r.divergences) divergences.append(py::make_tuple(d.a, d.b));
        py::dict out;
        out["ok"] = r.ok();
        out["equal_pairs"] = r.equal_pairs;
        out["unequal_pairs"] = r.unequal_pairs;
        out["divergences"] = divergences;
        return out;
      },
      py::arg("max_len"), py::arg("t8_copies_t7") = false, py::arg("include_unequal") = false,
      py::arg("assignment") = py::none());

  m.def(
      "verify_assignment",
      [](const std::string& text, std::size_t max_len) {
        const auto r = moltm::verify_assignment(moltm::parse_assignment(text), max_len);
        py::dict out;
        out["ok"] = r.ok();
        out["violations"] = r.violations.size();
        out["report"] = moltm::format_verification(r);
        return out;
      },
      py::arg("assignment"), py::arg("max_len") = 2);

  m.def(
      "design",
      [](std::uint64_t seed, std::size_t max_len) {
        moltm::DesignOptions o;
        o.max_len = max_len;
        return moltm::format_assignment(moltm::design(seed, o));
      },
      py::arg("seed"), py::arg("max_len") = 2);

  m.def(
      "render_tape",
      [](const std::string& a, const std::string& b, std::optional<std::string> assignment) {
        const auto as = pick(assignment);
        const auto tape = moltm::build_tape(as, a, b);
        return py::make_tuple(moltm::layout_string(moltm::describe_layout(tape, as)), moltm::render(tape));
      },
      py::arg("a"), py::arg("b"), py::arg("assignment") = py::none());
}
