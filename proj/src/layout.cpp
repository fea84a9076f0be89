#include "moltm/layout.hpp"

#include <algorithm>

#include "moltm/enzyme.hpp"

namespace moltm {

namespace {

struct Pattern {
  std::string bases;
  std::string token;
};

std::vector<Pattern> patterns(const BaseAssignment& a) {
  std::vector<Pattern> out;
  for (const auto& e : standard_enzymes()) {
    out.push_back({e.recognition.str(), e.name});
    out.push_back({reverse_complement(e.recognition).str(), e.name});
  }
  if (!a.halt.empty()) out.push_back({a.halt.str(), "HALT"});
  for (Symbol s : kAllSymbols) {
    if (!a.payload_of(s).empty()) out.push_back({a.payload_of(s).str(), "6_" + std::string(glyph(s))});
  }
  if (!a.suffix.empty()) out.push_back({a.suffix.str(), "4_F"});
  return out;
}

Layout tokenize(const std::string& s, const std::vector<Pattern>& pats) {
  Layout out;
  std::size_t spacer = 0;
  auto flush = [&] {
    if (spacer > 0) out.push_back(std::to_string(spacer));
    spacer = 0;
  };
  std::size_t i = 0;
  while (i < s.size()) {
    const Pattern* hit = nullptr;
    for (const auto& p : pats) {
      if (s.compare(i, p.bases.size(), p.bases) == 0) {
        hit = &p;
        break;
      }
    }
    if (hit == nullptr) {
      ++spacer;
      ++i;
      continue;
    }
    flush();
    out.push_back(hit->token);
    i += hit->bases.size();
  }
  flush();
  return out;
}

}  // namespace

Layout describe_layout(const Molecule& m, const BaseAssignment& a) {
  const auto pats = patterns(a);
  if (m.is_linear()) return tokenize(m.top().str(), pats);

  const std::string& ring = m.top().str();
  const std::string doubled = ring + ring;
  std::size_t start = 0;
  const std::string& foki = standard_enzyme("FokI").recognition.str();
  if (auto p = doubled.find(foki); p != std::string::npos && p < ring.size()) {
    start = (p + foki.size()) % ring.size();
  } else if (!a.halt.empty()) {
    if (auto h = doubled.find(a.halt.str()); h != std::string::npos && h < ring.size()) {
      start = (h + a.halt.size()) % ring.size();
    }
  }
  return tokenize(doubled.substr(start, ring.size()), pats);
}

std::string layout_string(const Layout& layout) {
  std::string out;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (i > 0) out += '|';
    out += layout[i];
  }
  return out;
}

bool cyclic_equal(const Layout& a, const Layout& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (std::equal(a.begin() + static_cast<long>(r), a.end(), b.begin()) &&
        std::equal(a.begin(), a.begin() + static_cast<long>(r), b.end() - static_cast<long>(r))) {
      return true;
    }
  }
  return false;
}

Layout rotate_to(const Layout& layout, const std::string& token) {
  auto it = std::find(layout.begin(), layout.end(), token);
  if (it == layout.end()) return layout;
  Layout out(it, layout.end());
  out.insert(out.end(), layout.begin(), it);
  return out;
}

}  // namespace moltm
