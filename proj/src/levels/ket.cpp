#include "molsim/levels/ket.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>

#include "molsim/foundation/errors.hpp"

namespace molsim::levels {
namespace {

std::size_t trimmed_size(const std::vector<unsigned>& v) noexcept {
  std::size_t n = v.size();
  while (n > 0 && v[n - 1] == 0) --n;
  return n;
}

std::strong_ordering compare_occupations(const std::vector<unsigned>& a,
                                         const std::vector<unsigned>& b) noexcept {
  const std::size_t na = trimmed_size(a);
  const std::size_t nb = trimmed_size(b);
  return std::lexicographical_compare_three_way(a.begin(), a.begin() + na, b.begin(),
                                                b.begin() + nb);
}

std::string half_to_string(HalfInt h, bool signed_form) {
  const int t = std::abs(h.twice);
  std::string body = (t % 2 == 0) ? std::to_string(t / 2) : std::to_string(t) + "/2";
  if (!signed_form || h.twice == 0) return body;
  return (h.twice > 0 ? "+" : "-") + body;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LevelKet parse() {
    LevelKet ket;
    ket.manifold = manifold();
    if (peek() == ',') {
      ++pos_;
      ket.sublevel = axis();
    }
    expect(";v=");
    ket.vibrons = uint_list();
    expect(";p=");
    ket.phonons = uint_list();
    expect(";n=");
    ket.nuclei = nuclear_list();
    if (pos_ != text_.size()) fail("trailing characters");
    try {
      ket.validate();
    } catch (const InvalidArgument& e) {
      fail(e.what());
    }
    return ket;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw KetSyntaxError("'" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " +
                         why);
  }

  char peek() const noexcept { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) fail("expected '" + std::string(token) + "'");
    pos_ += token.size();
  }

  unsigned uint() {
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (pos_ == begin) fail("expected a non-negative integer");
    if (pos_ - begin > 1 && text_[begin] == '0') fail("leading zero");
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + begin, text_.data() + pos_, value);
    if (ec != std::errc{}) fail("integer out of range");
    return value;
  }

  Manifold manifold() {
    Manifold m;
    if (peek() == 'S') {
      m.multiplicity = Multiplicity::Singlet;
    } else if (peek() == 'T') {
      m.multiplicity = Multiplicity::Triplet;
    } else {
      fail("expected manifold 'S' or 'T'");
    }
    ++pos_;
    m.index = uint();
    return m;
  }

  TripletAxis axis() {
    const char c = peek();
    ++pos_;
    switch (c) {
      case 'x': return TripletAxis::X;
      case 'y': return TripletAxis::Y;
      case 'z': return TripletAxis::Z;
      default: --pos_; fail("expected sublevel x, y or z");
    }
  }

  std::vector<unsigned> uint_list() {
    std::vector<unsigned> out;
    expect("[");
    if (peek() == ']') {
      ++pos_;
      return out;
    }
    for (;;) {
      out.push_back(uint());
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect("]");
      return out;
    }
  }

  HalfInt half(bool signed_form) {
    int sign = 1;
    if (signed_form) {
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        const unsigned v = uint();
        if (v == 0) fail("zero projection is written without a sign");
        return finish_half(v, sign);
      }
      const unsigned v = uint();
      if (v != 0) fail("non-zero projection needs an explicit sign");
      return HalfInt{0};
    }
    return finish_half(uint(), sign);
  }

  HalfInt finish_half(unsigned numerator, int sign) {
    if (peek() == '/') {
      expect("/2");
      if (numerator % 2 == 0) fail("half-integer numerator must be odd");
      return HalfInt{sign * static_cast<int>(numerator)};
    }
    return HalfInt{sign * 2 * static_cast<int>(numerator)};
  }

  std::vector<NuclearLabel> nuclear_list() {
    std::vector<NuclearLabel> out;
    expect("[");
    if (peek() == ']') {
      ++pos_;
      return out;
    }
    for (;;) {
      expect("(");
      NuclearLabel label;
      label.spin = half(false);
      expect(",");
      label.projection = half(true);
      expect(")");
      out.push_back(label);
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect("]");
      return out;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

template <typename T, typename F>
std::string join(const std::vector<T>& items, F&& format) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ',';
    out += format(items[i]);
  }
  return out + "]";
}

}  // namespace

unsigned LevelKet::total_vibrons() const noexcept {
  return std::accumulate(vibrons.begin(), vibrons.end(), 0u);
}

unsigned LevelKet::total_phonons() const noexcept {
  return std::accumulate(phonons.begin(), phonons.end(), 0u);
}

LevelKet LevelKet::relaxed() const {
  LevelKet k = *this;
  k.vibrons.clear();
  k.phonons.clear();
  return k;
}

void LevelKet::validate() const {
  if (manifold.is_triplet() && manifold.index == 0) {
    throw InvalidArgument("there is no T0 manifold");
  }
  if (manifold.is_triplet() != sublevel.has_value()) {
    throw InvalidArgument(manifold.is_triplet() ? "triplet ket needs a sublevel (x, y or z)"
                                                : "singlet ket cannot carry a sublevel");
  }
  for (const NuclearLabel& n : nuclei) {
    if (n.spin.twice < 0) throw InvalidArgument("nuclear spin I must be >= 0");
    if (std::abs(n.projection.twice) > n.spin.twice) throw InvalidArgument("|m_I| exceeds I");
    if ((n.spin.twice - n.projection.twice) % 2 != 0) {
      throw InvalidArgument("I - m_I must be an integer");
    }
  }
}

bool operator==(const LevelKet& a, const LevelKet& b) noexcept {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const LevelKet& a, const LevelKet& b) noexcept {
  if (auto c = a.manifold <=> b.manifold; c != 0) return c;
  if (auto c = a.sublevel <=> b.sublevel; c != 0) return c;
  if (auto c = compare_occupations(a.vibrons, b.vibrons); c != 0) return c;
  if (auto c = compare_occupations(a.phonons, b.phonons); c != 0) return c;
  return a.nuclei <=> b.nuclei;
}

LevelKet make_ket(Manifold manifold, std::optional<TripletAxis> sublevel) {
  LevelKet k;
  k.manifold = manifold;
  k.sublevel = sublevel;
  k.validate();
  return k;
}

std::string_view to_string(TripletAxis axis) noexcept {
  switch (axis) {
    case TripletAxis::X: return "x";
    case TripletAxis::Y: return "y";
    case TripletAxis::Z: return "z";
  }
  return "?";
}

std::string to_string(Manifold manifold) {
  return (manifold.is_triplet() ? "T" : "S") + std::to_string(manifold.index);
}

std::string to_string(const LevelKet& ket) {
  std::string out = to_string(ket.manifold);
  if (ket.sublevel) {
    out += ',';
    out += to_string(*ket.sublevel);
  }
  const auto num = [](unsigned v) { return std::to_string(v); };
  out += ";v=" + join(ket.vibrons, num);
  out += ";p=" + join(ket.phonons, num);
  out += ";n=" + join(ket.nuclei, [](const NuclearLabel& n) {
           return "(" + half_to_string(n.spin, false) + "," + half_to_string(n.projection, true) +
                  ")";
         });
  return out;
}

LevelKet parse_ket(std::string_view text) { return Parser(text).parse(); }

}  // namespace molsim::levels
