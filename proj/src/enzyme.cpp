#include "moltm/enzyme.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace moltm {

Polarity EnzymeSpec::overhang_polarity() const noexcept {
  if (cut_top == cut_bottom) return Polarity::Blunt;
  const bool top_shorter = cut_top < cut_bottom;
  // Cutting the top strand nearer the site than the bottom leaves 5' tails.
  return top_shorter == (direction == CutDirection::Rightward) ? Polarity::FivePrime : Polarity::ThreePrime;
}

void EnzymeSpec::validate() const {
  if (name.empty()) throw InvalidSequence("enzyme without a name");
  if (recognition.empty()) throw InvalidSequence(name + ": empty recognition sequence");
  if (recognition == reverse_complement(recognition)) throw InvalidSequence(name + ": recognition is palindromic");
  if (cut_top < 0 || cut_bottom < 0) throw InvalidSequence(name + ": negative cut offset");
  if (cut_top == cut_bottom) throw InvalidSequence(name + ": blunt cutter");
}

namespace {

EnzymeSpec make(std::string name, std::string_view site, CutDirection dir, int top, int bottom) {
  EnzymeSpec e{std::move(name), BaseSeq::parse(site), dir, top, bottom};
  e.validate();
  return e;
}

}  // namespace

const EnzymeSet& standard_enzymes() {
  static const EnzymeSet kSet = {
      make("FokI", "GGATG", CutDirection::Rightward, 9, 13),
      make("BsrDI", "GCAATG", CutDirection::Rightward, 2, 0),
      make("BpmI", "CTGGAG", CutDirection::Rightward, 16, 14),
      make("BserI", "CTCCTC", CutDirection::Leftward, 8, 10),
      make("BbvI", "GCTGC", CutDirection::Leftward, 12, 8),
  };
  return kSet;
}

const EnzymeSpec& standard_enzyme(std::string_view name) {
  for (const auto& e : standard_enzymes()) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("unknown enzyme: " + std::string(name));
}

const EnzymeSet& mirrored_enzyme_rows() {
  static const EnzymeSet kRows = [] {
    EnzymeSet rows = standard_enzymes();
    rows.insert(rows.begin() + 3, make("BpmI", "CTCCAG", CutDirection::Leftward, 14, 16));
    return rows;
  }();
  return kRows;
}

EnzymeSet parse_enzyme_table(std::string_view text) {
  EnzymeSet out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name, site, dir;
    int top = 0, bottom = 0;
    if (!(fields >> name)) continue;
    if (!(fields >> site >> dir >> top >> bottom)) {
      throw ParseError("enzyme table line " + std::to_string(line_no) + ": expected 5 fields");
    }
    CutDirection direction;
    if (dir == "right" || dir == "->") {
      direction = CutDirection::Rightward;
    } else if (dir == "left" || dir == "<-") {
      direction = CutDirection::Leftward;
    } else {
      throw ParseError("enzyme table line " + std::to_string(line_no) + ": bad direction '" + dir + "'");
    }
    try {
      out.push_back(make(name, site, direction, top, bottom));
    } catch (const InvalidSequence& e) {
      throw ParseError("enzyme table line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::string format_enzyme_table(const EnzymeSet& enzymes) {
  std::ostringstream out;
  for (const auto& e : enzymes) {
    out << e.name << ' ' << e.recognition.str() << ' '
        << (e.direction == CutDirection::Rightward ? "right" : "left") << ' ' << e.cut_top << ' '
        << e.cut_bottom << '\n';
  }
  return out.str();
}

std::string describe(const SiteHit& hit) {
  std::ostringstream out;
  out << hit.enzyme.name << (hit.strand == SiteStrand::Top ? ":top@" : ":bottom@") << hit.position;
  return out.str();
}

namespace {

long mod(long x, long n) { return ((x % n) + n) % n; }

std::vector<long> occurrences(const std::string& hay, const std::string& needle, long limit) {
  std::vector<long> at;
  for (auto p = hay.find(needle); p != std::string::npos && static_cast<long>(p) < limit;
       p = hay.find(needle, p + 1)) {
    at.push_back(static_cast<long>(p));
  }
  return at;
}

SiteHit resolve(const EnzymeSpec& e, long p, SiteStrand strand) {
  const long len = static_cast<long>(e.recognition.size());
  SiteHit hit{e, p, strand, e.direction, 0, 0, 0};
  const bool mirrored = strand == SiteStrand::BottomMirror;
  // On the bottom strand the enzyme's own top offset applies to our bottom.
  const long near = mirrored ? e.cut_bottom : e.cut_top;
  const long far = mirrored ? e.cut_top : e.cut_bottom;
  const bool rightward = (e.direction == CutDirection::Rightward) != mirrored;
  hit.acting_direction = rightward ? CutDirection::Rightward : CutDirection::Leftward;
  if (rightward) {
    hit.top_cut = p + len + near;
    hit.bottom_cut = p + len + far;
  } else {
    hit.top_cut = p - near;
    hit.bottom_cut = p - far;
  }
  hit.overhang_shift = hit.bottom_cut - hit.top_cut;
  return hit;
}

}  // namespace

std::vector<SiteHit> find_sites(const Molecule& m, const EnzymeSpec& e) {
  std::vector<SiteHit> hits;
  const std::string& site = e.recognition.str();
  const std::string mirror = reverse_complement(e.recognition).str();
  const long len = static_cast<long>(site.size());
  const std::string& top = m.top().str();
  const long n = static_cast<long>(top.size());

  if (m.is_circular()) {
    if (n < len) return hits;
    const std::string hay = top + top.substr(0, static_cast<std::size_t>(len - 1));
    for (auto [needle, strand] : {std::pair{&site, SiteStrand::Top}, std::pair{&mirror, SiteStrand::BottomMirror}}) {
      if (strand == SiteStrand::BottomMirror && mirror == site) break;
      for (long p : occurrences(hay, *needle, n)) {
        SiteHit hit = resolve(e, p, strand);
        hit.top_cut = mod(hit.top_cut, n);
        hit.bottom_cut = mod(hit.bottom_cut, n);
        hits.push_back(hit);
      }
    }
  } else {
    const long lo = m.paired_lo();
    const long hi = m.paired_hi();
    for (auto [needle, strand] : {std::pair{&site, SiteStrand::Top}, std::pair{&mirror, SiteStrand::BottomMirror}}) {
      if (strand == SiteStrand::BottomMirror && mirror == site) break;
      for (long p : occurrences(top, *needle, n)) {
        if (p < lo || p + len > hi) continue;  // recognition needs duplex DNA
        SiteHit hit = resolve(e, p, strand);
        // Both fragments must keep a paired core; no cutting inside overhangs.
        if (std::min(hit.top_cut, hit.bottom_cut) <= lo || std::max(hit.top_cut, hit.bottom_cut) >= hi) continue;
        hits.push_back(hit);
      }
    }
  }
  std::sort(hits.begin(), hits.end(), [](const SiteHit& a, const SiteHit& b) {
    return std::tie(a.position, a.strand) < std::tie(b.position, b.strand);
  });
  return hits;
}

std::vector<SiteHit> find_sites(const Molecule& m, const EnzymeSet& enzymes) {
  std::vector<SiteHit> all;
  for (const auto& e : enzymes) {
    auto hits = find_sites(m, e);
    all.insert(all.end(), hits.begin(), hits.end());
  }
  return all;
}

std::size_t count_recognition(const Molecule& m, const EnzymeSpec& e) {
  const std::string& site = e.recognition.str();
  const std::string mirror = reverse_complement(e.recognition).str();
  const std::string& top = m.top().str();
  const long n = static_cast<long>(top.size());
  std::string hay = top;
  long limit = n;
  if (m.is_circular()) {
    if (n < static_cast<long>(site.size())) return 0;
    hay += top.substr(0, site.size() - 1);
  }
  std::size_t count = occurrences(hay, site, limit).size();
  if (mirror != site) count += occurrences(hay, mirror, limit).size();
  return count;
}

std::vector<Molecule> cleave(const Molecule& m, const SiteHit& hit) {
  const auto valid = find_sites(m, hit.enzyme);
  if (std::find(valid.begin(), valid.end(), hit) == valid.end()) {
    throw StaleHit("site " + describe(hit) + " does not belong to this molecule");
  }
  const std::string& top = m.top().str();
  const std::string& bottom = m.bottom().str();

  if (m.is_circular()) {
    const Molecule opened_top = m.rotated(hit.top_cut);
    const Molecule opened_bottom = m.rotated(hit.top_cut + hit.overhang_shift);
    return {Molecule::linear(opened_top.top(), opened_bottom.bottom(), hit.overhang_shift)};
  }

  const auto ct = static_cast<std::size_t>(hit.top_cut);
  const auto cb = static_cast<std::size_t>(hit.bottom_cut - m.offset());
  Molecule left = Molecule::linear(BaseSeq::parse(top.substr(0, ct)), BaseSeq::parse(bottom.substr(0, cb)), m.offset());
  Molecule right = Molecule::linear(BaseSeq::parse(top.substr(ct)), BaseSeq::parse(bottom.substr(cb)),
                                    hit.bottom_cut - hit.top_cut);
  return {std::move(left), std::move(right)};
}

std::optional<Digestion> digest_step(const Molecule& m, const EnzymeSet& enzymes, std::span<const std::string> priority,
                                     bool strict) {
  auto rank_of = [&](const EnzymeSpec& e) {
    auto it = std::find(priority.begin(), priority.end(), e.name);
    if (it != priority.end()) return static_cast<long>(it - priority.begin());
    auto jt = std::find(enzymes.begin(), enzymes.end(), e);
    return static_cast<long>(priority.size()) + static_cast<long>(jt - enzymes.begin());
  };
  auto hits = find_sites(m, enzymes);
  if (hits.empty()) return std::nullopt;
  auto key = [&](const SiteHit& h) { return std::pair{rank_of(h.enzyme), static_cast<int>(h.strand)}; };
  std::stable_sort(hits.begin(), hits.end(), [&](const SiteHit& a, const SiteHit& b) { return key(a) < key(b); });
  if (strict && hits.size() > 1 && key(hits[0]) == key(hits[1])) {
    throw AmbiguityError("two equally ranked sites: " + describe(hits[0]) + " and " + describe(hits[1]));
  }
  Digestion d{hits.front(), cleave(m, hits.front())};
  return d;
}

}  // namespace moltm
