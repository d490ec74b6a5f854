#ifndef GSALG_GRADED_HPP
#define GSALG_GRADED_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsalg {

enum class Parity : unsigned char { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<unsigned>(a) + static_cast<unsigned>(b)) & 1u);
}
inline bool is_odd(Parity p) { return p == Parity::Odd; }
inline int parity_bit(Parity p) { return p == Parity::Odd ? 1 : 0; }
// Koszul sign (-1)^{|a||b|}
inline int koszul(Parity a, Parity b) { return (is_odd(a) && is_odd(b)) ? -1 : 1; }

struct ParityError : std::runtime_error {
  explicit ParityError(const std::string& what) : std::runtime_error(what) {}
};

struct GradedDim {
  std::size_t even = 0;
  std::size_t odd = 0;

  std::size_t total() const { return even + odd; }
  friend GradedDim operator+(GradedDim a, GradedDim b) { return {a.even + b.even, a.odd + b.odd}; }
  friend bool operator==(const GradedDim& a, const GradedDim& b) {
    return a.even == b.even && a.odd == b.odd;
  }
  friend bool operator!=(const GradedDim& a, const GradedDim& b) { return !(a == b); }
  std::string str() const { return std::to_string(even) + "|" + std::to_string(odd); }
};

// Parity assignment per coordinate slot.  Model spaces put all even slots
// first; derived spaces (Hom towers, realifications) inherit whatever order
// the construction produces, so the layout is stored explicitly.
struct AmbientLayout {
  std::vector<Parity> slots;
  bool realified = false; // slots come in (Re, Im) pairs of equal parity

  static AmbientLayout model(GradedDim d) {
    AmbientLayout l;
    l.slots.assign(d.even, Parity::Even);
    l.slots.insert(l.slots.end(), d.odd, Parity::Odd);
    return l;
  }

  std::size_t size() const { return slots.size(); }

  GradedDim dim() const {
    GradedDim d;
    for (Parity p : slots) (is_odd(p) ? d.odd : d.even)++;
    return d;
  }

  AmbientLayout realify() const {
    if (realified) throw std::logic_error("AmbientLayout: already realified");
    AmbientLayout l;
    l.realified = true;
    l.slots.reserve(2 * slots.size());
    for (Parity p : slots) {
      l.slots.push_back(p);
      l.slots.push_back(p);
    }
    return l;
  }

  // Hom(V, W) flattened source-major: slot (j, beta) at index j*|W| + beta,
  // parity |w_beta| + |v_j|.
  static AmbientLayout hom(const AmbientLayout& src, const std::vector<Parity>& dst) {
    AmbientLayout l;
    l.slots.reserve(src.size() * dst.size());
    for (Parity pj : src.slots)
      for (Parity pb : dst) l.slots.push_back(pj + pb);
    return l;
  }

  friend bool operator==(const AmbientLayout& a, const AmbientLayout& b) {
    return a.realified == b.realified && a.slots == b.slots;
  }
  friend bool operator!=(const AmbientLayout& a, const AmbientLayout& b) { return !(a == b); }
};

} // namespace gsalg

#endif
