#include "moltm/assignment.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "moltm/error.hpp"

namespace moltm {

namespace {

// Label order is the file order.
std::vector<std::string> slot_labels() {
  std::vector<std::string> labels = {"payload.0", "payload.1", "payload.blank", "payload.error",
                                     "suffix",    "halt",      "head.pre_bseri", "head.post_foki"};
  for (int t = 1; t <= 9; ++t) {
    const std::string p = "T" + std::to_string(t) + ".";
    if (t == 3) {
      labels.push_back(p + "pre_bbvi");
      continue;
    }
    for (const char* slot : {"pre_bseri", "post_foki", "pre_bpmi", "post_bpmi", "pre_bbvi"}) labels.push_back(p + slot);
  }
  return labels;
}

BaseSeq& slot(BaseAssignment& a, const std::string& label) {
  if (label == "payload.0") return a.payload[0];
  if (label == "payload.1") return a.payload[1];
  if (label == "payload.blank") return a.payload[2];
  if (label == "payload.error") return a.payload[3];
  if (label == "suffix") return a.suffix;
  if (label == "halt") return a.halt;
  if (label == "head.pre_bseri") return a.head_pre_bseri;
  if (label == "head.post_foki") return a.head_post_foki;
  if (label.size() > 3 && label[0] == 'T' && label[2] == '.' && label[1] >= '1' && label[1] <= '9') {
    TransitionFill& f = a.transitions[label[1] - '1'];
    const std::string name = label.substr(3);
    if (name == "pre_bseri") return f.pre_bseri;
    if (name == "post_foki") return f.post_foki;
    if (name == "pre_bpmi") return f.pre_bpmi;
    if (name == "post_bpmi") return f.post_bpmi;
    if (name == "pre_bbvi") return f.pre_bbvi;
  }
  throw ParseError("unknown assignment label '" + label + "'");
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string format_assignment(const BaseAssignment& a) {
  std::ostringstream out;
  out << "# base assignment for the molecular NAND machine\n";
  out << "seed: " << a.seed << '\n';
  BaseAssignment copy = a;
  for (const auto& label : slot_labels()) out << label << ": " << slot(copy, label).str() << '\n';
  return out.str();
}

BaseAssignment parse_assignment(std::string_view text) {
  BaseAssignment a;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("assignment line " + std::to_string(line_no) + ": missing ':'");
    const std::string label = trim(line.substr(0, colon));
    const std::string value = trim(line.substr(colon + 1));
    if (label == "seed") {
      try {
        a.seed = std::stoull(value);
      } catch (const std::exception&) {
        throw ParseError("assignment line " + std::to_string(line_no) + ": bad seed '" + value + "'");
      }
      continue;
    }
    try {
      slot(a, label) = BaseSeq::parse(value);
    } catch (const InvalidSequence& e) {
      throw ParseError("assignment line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return a;
}

BaseAssignment load_assignment(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open assignment file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_assignment(buf.str());
}

void save_assignment(const BaseAssignment& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write assignment file '" + path + "'");
  out << format_assignment(a);
}

const BaseAssignment& default_assignment() {
  static const BaseAssignment kDefault = parse_assignment(default_assignment_text());
  return kDefault;
}

}  // namespace moltm
