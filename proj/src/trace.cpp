#include "moltm/trace.hpp"

#include <sstream>

#include "moltm/error.hpp"

namespace moltm {

const char* to_string(EventKind k) noexcept {
  switch (k) {
    case EventKind::Cleave: return "Cleave";
    case EventKind::Activate: return "Activate";
    case EventKind::Insert: return "Insert";
    case EventKind::Excise: return "Excise";
    case EventKind::Circularize: return "Circularize";
    case EventKind::Halt: return "Halt";
  }
  return "?";
}

namespace {

void indent(std::ostringstream& out, const std::string& label, const std::string& rendering) {
  out << "  " << label << ":\n";
  std::istringstream rows(rendering);
  for (std::string row; std::getline(rows, row);) out << "    " << row << '\n';
}

}  // namespace

std::string format_trace(const ReactionTrace& trace, TraceFormat format, bool full) {
  std::ostringstream out;
  for (const auto& e : trace) {
    if (format == TraceFormat::Text) {
      out << '#' << e.index << " step " << e.step << ' ' << to_string(e.kind);
      if (!e.subject.empty()) out << ' ' << e.subject;
      out << "  " << e.before_bp << "bp -> " << e.after_bp << "bp";
      if (!e.layout.empty()) out << "  " << e.layout;
      out << '\n';
    } else {
      out << "event index=" << e.index << " step=" << e.step << " kind=" << to_string(e.kind)
          << " subject=" << (e.subject.empty() ? "-" : e.subject) << " before_bp=" << e.before_bp
          << " after_bp=" << e.after_bp << " main_nt=" << e.main_nt << " loose_nt=" << e.loose_nt << " waste_nt=" << e.waste_nt
          << " drawn_nt=" << e.drawn_nt << " layout=" << (e.layout.empty() ? "-" : e.layout) << '\n';
    }
    if (full) {
      indent(out, "before", e.before_render);
      indent(out, "after", e.after_render);
    }
  }
  return out.str();
}

void check_trace_shape(const ReactionTrace& trace) {
  using K = EventKind;
  static const std::vector<K> kHead = {K::Cleave, K::Cleave, K::Excise, K::Activate, K::Insert};
  static const std::vector<K> kTail = {K::Cleave, K::Cleave, K::Excise, K::Circularize};
  std::size_t i = 0;
  auto expect = [&](const std::vector<K>& kinds) {
    for (K k : kinds) {
      if (i >= trace.size() || trace[i].kind != k) {
        throw InvariantViolation("trace event " + std::to_string(i) + " should be " + to_string(k));
      }
      ++i;
    }
  };
  while (i < trace.size()) {
    expect(kHead);
    if (i < trace.size() && trace[i].kind == K::Halt) {
      ++i;
      if (i != trace.size()) throw InvariantViolation("events after Halt");
      return;
    }
    expect(kTail);
  }
}

}  // namespace moltm
