#pragma once

#include <map>
#include <utility>

#include "hecketl/coxeter.hpp"
#include "hecketl/laurent.hpp"

namespace hecketl {

/// Sparse coordinate map over group elements; zero entries are never stored.
using Coords = std::map<ElementId, Laurent>;

/// coords[w] += c, erasing the entry if it cancels.
inline void accumulate(Coords& coords, ElementId w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coords.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coords.erase(it);
  }
}

/// acc += c * x.
inline void axpy(Coords& acc, const Laurent& c, const Coords& x) {
  if (c.is_zero()) return;
  for (const auto& [w, a] : x) accumulate(acc, w, c * a);
}

/// A-linear combination of basis vectors indexed by group elements. The tag
/// keeps Hecke-algebra (T-basis) and Temperley-Lieb (t-basis) elements apart.
template <class Tag>
class Combination {
 public:
  Combination() = default;
  explicit Combination(Coords coords) : coords_(std::move(coords)) {
    std::erase_if(coords_, [](const auto& kv) { return kv.second.is_zero(); });
  }
  static Combination basis(ElementId w, const Laurent& c = 1) {
    Combination r;
    accumulate(r.coords_, w, c);
    return r;
  }

  const Coords& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  std::size_t size() const { return coords_.size(); }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  Laurent coeff(ElementId w) const {
    auto it = coords_.find(w);
    return it == coords_.end() ? Laurent{} : it->second;
  }
  void add(ElementId w, const Laurent& c) { accumulate(coords_, w, c); }

  Combination& operator+=(const Combination& o) {
    for (const auto& [w, c] : o.coords_) accumulate(coords_, w, c);
    return *this;
  }
  Combination& operator-=(const Combination& o) {
    for (const auto& [w, c] : o.coords_) accumulate(coords_, w, -c);
    return *this;
  }
  /// this += c * o.
  void add_scaled(const Laurent& c, const Combination& o) { axpy(coords_, c, o.coords_); }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const Laurent& c, const Combination& x) {
    Combination r;
    axpy(r.coords_, c, x.coords_);
    return r;
  }
  Combination operator-() const { return Laurent(-1) * *this; }
  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  Coords coords_;
};

struct HeckeTag;
struct TLTag;
using HeckeElt = Combination<HeckeTag>;
using TLElt = Combination<TLTag>;

}  // namespace hecketl
