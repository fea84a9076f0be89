#include "moltm/strand.hpp"

#include <algorithm>

namespace moltm {

char to_char(Base b) noexcept {
  constexpr char kChars[] = {'A', 'C', 'G', 'T'};
  return kChars[static_cast<int>(b)];
}

Base base_from_char(char c) {
  switch (c) {
    case 'A': return Base::A;
    case 'C': return Base::C;
    case 'G': return Base::G;
    case 'T': return Base::T;
    default: break;
  }
  throw InvalidSequence(std::string("not a DNA base: '") + c + "'");
}

namespace {

char complement_char(char c) { return to_char(complement(base_from_char(c))); }

}  // namespace

BaseSeq::BaseSeq(std::initializer_list<Base> bases) {
  text_.reserve(bases.size());
  for (Base b : bases) text_.push_back(to_char(b));
}

BaseSeq BaseSeq::parse(std::string_view text) {
  std::string out(text);
  for (char c : out) base_from_char(c);
  return BaseSeq(std::move(out));
}

BaseSeq BaseSeq::substr(std::size_t pos, std::size_t len) const {
  return BaseSeq(text_.substr(pos, len));
}

BaseSeq BaseSeq::reversed() const { return BaseSeq(std::string(text_.rbegin(), text_.rend())); }

BaseSeq BaseSeq::complemented() const {
  std::string out = text_;
  std::transform(out.begin(), out.end(), out.begin(), complement_char);
  return BaseSeq(std::move(out));
}

BaseSeq reverse_complement(const BaseSeq& s) { return s.complemented().reversed(); }

const char* to_string(Polarity p) noexcept {
  switch (p) {
    case Polarity::FivePrime: return "5'";
    case Polarity::ThreePrime: return "3'";
    case Polarity::Blunt: return "blunt";
  }
  return "?";
}

bool can_ligate(const StickyEnd& a, const StickyEnd& b, LigationPolicy policy) {
  if (a.side == b.side) return false;
  if (a.polarity != b.polarity) return false;
  if (a.polarity == Polarity::Blunt) return policy.allow_blunt;
  if (a.overhang.size() != b.overhang.size() || a.overhang.size() < 2) return false;
  return b.overhang == reverse_complement(a.overhang);
}

Molecule Molecule::linear(BaseSeq top, BaseSeq bottom_aligned, long offset) {
  Molecule m;
  m.top_ = std::move(top);
  m.bottom_ = std::move(bottom_aligned);
  m.offset_ = offset;
  if (m.top_.empty() || m.bottom_.empty()) throw InvalidMolecule("linear duplex needs two non-empty strands");
  const long lo = m.paired_lo();
  const long hi = m.paired_hi();
  if (lo >= hi) throw InvalidMolecule("strands do not overlap");
  const std::string& t = m.top_.str();
  const std::string& b = m.bottom_.str();
  for (long col = lo; col < hi; ++col) {
    if (complement_char(t[col]) != b[col - offset]) {
      throw InvalidMolecule("mismatched pair at column " + std::to_string(col));
    }
  }
  return m;
}

Molecule Molecule::circular(BaseSeq ring) {
  if (ring.empty()) throw InvalidMolecule("empty ring");
  Molecule m;
  m.bottom_ = ring.complemented();
  m.top_ = std::move(ring);
  m.ring_only_ = true;
  return m;
}

long Molecule::paired_lo() const noexcept { return std::max(0L, offset_); }

long Molecule::paired_hi() const noexcept {
  return std::min(static_cast<long>(top_.size()), offset_ + static_cast<long>(bottom_.size()));
}

StickyEnd Molecule::left_end() const {
  if (ring_only_) throw InvalidMolecule("circular molecules have no ends");
  StickyEnd e{Polarity::Blunt, {}, Side::Left};
  if (offset_ > 0) {
    e.polarity = Polarity::FivePrime;
    e.overhang = top_.substr(0, static_cast<std::size_t>(offset_));
  } else if (offset_ < 0) {
    e.polarity = Polarity::ThreePrime;
    e.overhang = bottom_.substr(0, static_cast<std::size_t>(-offset_)).reversed();
  }
  return e;
}

StickyEnd Molecule::right_end() const {
  if (ring_only_) throw InvalidMolecule("circular molecules have no ends");
  StickyEnd e{Polarity::Blunt, {}, Side::Right};
  const long top_end = static_cast<long>(top_.size());
  const long bottom_end = offset_ + static_cast<long>(bottom_.size());
  if (top_end > bottom_end) {
    e.polarity = Polarity::ThreePrime;
    e.overhang = top_.substr(static_cast<std::size_t>(bottom_end));
  } else if (bottom_end > top_end) {
    e.polarity = Polarity::FivePrime;
    e.overhang = bottom_.substr(static_cast<std::size_t>(top_end - offset_)).reversed();
  }
  return e;
}

BaseCounts Molecule::base_counts() const noexcept {
  BaseCounts counts{};
  for (const std::string* s : {&top_.str(), &bottom_.str()}) {
    for (char c : *s) ++counts[static_cast<int>(base_from_char(c))];
  }
  return counts;
}

Molecule Molecule::rotated(long start) const {
  if (!ring_only_) throw InvalidMolecule("only circular molecules rotate");
  const long n = static_cast<long>(top_.size());
  const long s = ((start % n) + n) % n;
  const std::string& t = top_.str();
  return circular(BaseSeq::parse(t.substr(s) + t.substr(0, s)));
}

Molecule make_blunt_duplex(const BaseSeq& top) {
  if (top.empty()) throw InvalidMolecule("blunt duplex needs a non-empty top strand");
  return Molecule::linear(top, top.complemented(), 0);
}

std::size_t length_bp(const Molecule& m) noexcept {
  if (m.is_circular()) return m.top().size();
  return static_cast<std::size_t>(m.paired_hi() - m.paired_lo());
}

std::size_t unpaired_count(const Molecule& m) noexcept { return m.nucleotide_count() - 2 * length_bp(m); }

namespace {

Molecule join(const Molecule& a, const Molecule& b) {
  // Valid only when b's bottom strand starts exactly where a's ends.
  return Molecule::linear(a.top() + b.top(), a.bottom() + b.bottom(), a.offset());
}

}  // namespace

Molecule ligate(const Molecule& a, const Molecule& b, LigationPolicy policy) {
  if (!a.is_linear() || !b.is_linear()) throw IncompatibleEnds("ligation needs two linear molecules");
  if (can_ligate(a.right_end(), b.left_end(), policy)) return join(a, b);
  if (can_ligate(b.right_end(), a.left_end(), policy)) return join(b, a);
  throw IncompatibleEnds("sticky ends are not complementary");
}

Molecule circularize(const Molecule& a, LigationPolicy policy) {
  if (!a.is_linear()) throw IncompatibleEnds("molecule is already circular");
  if (!can_ligate(a.right_end(), a.left_end(), policy)) {
    throw IncompatibleEnds("ends of the molecule are not complementary");
  }
  const std::string& top = a.top().str();
  const std::string& bottom = a.bottom().str();
  const long n = static_cast<long>(top.size());
  if (static_cast<long>(bottom.size()) != n) throw IncompatibleEnds("strand lengths differ; ring cannot close");
  for (long j = 0; j < n; ++j) {
    const long col = (((a.offset() + j) % n) + n) % n;
    if (complement_char(top[col]) != bottom[j]) throw InvalidMolecule("ring closure mispairs");
  }
  return Molecule::circular(a.top());
}

Molecule flipped(const Molecule& a) {
  if (a.is_circular()) return Molecule::circular(reverse_complement(a.top()));
  // The old bottom, read 5'->3', becomes the new top; columns mirror.
  const long top_end = static_cast<long>(a.top().size());
  const long bottom_end = a.offset() + static_cast<long>(a.bottom().size());
  return Molecule::linear(a.bottom().reversed(), a.top().reversed(), bottom_end - top_end);
}

bool same_ring(const Molecule& a, const Molecule& b) {
  if (!a.is_circular() || !b.is_circular()) return false;
  if (a.top().size() != b.top().size()) return false;
  const std::string doubled = a.top().str() + a.top().str();
  return doubled.find(b.top().str()) != std::string::npos;
}

std::string render(const Molecule& m) {
  if (m.is_circular()) {
    return "5' (" + m.top().str() + ") 3'\n3' (" + m.bottom().str() + ") 5'";
  }
  const long lo = std::min(0L, m.offset());
  const long hi = std::max(static_cast<long>(m.top().size()), m.offset() + static_cast<long>(m.bottom().size()));
  std::string top_row(static_cast<std::size_t>(hi - lo), ' ');
  std::string bottom_row = top_row;
  std::copy(m.top().str().begin(), m.top().str().end(), top_row.begin() + (0 - lo));
  std::copy(m.bottom().str().begin(), m.bottom().str().end(), bottom_row.begin() + (m.offset() - lo));
  return "5' [" + top_row + "] 3'\n3' [" + bottom_row + "] 5'";
}

}  // namespace moltm
