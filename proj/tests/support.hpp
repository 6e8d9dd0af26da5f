#pragma once

// Helpers shared by the unit tests: cached groups and seeded random elements.

#include <map>
#include <memory>
#include <random>
#include <string>

#include "hecketl/temperley_lieb.hpp"

namespace testing_support {

using namespace hecketl;

/// Group, Hecke algebra and TL quotient for a named graph, built once per
/// process.
struct Algebras {
  std::unique_ptr<GroupTable> group;
  std::unique_ptr<HeckeAlgebra> hecke;
  std::unique_ptr<TemperleyLieb> tl;
};

inline const Algebras& algebras(const std::string& spec) {
  static std::map<std::string, Algebras> cache;
  auto it = cache.find(spec);
  if (it == cache.end()) {
    Algebras a;
    a.group = std::make_unique<GroupTable>(GroupTable::enumerate(parse_graph(spec)));
    a.hecke = std::make_unique<HeckeAlgebra>(*a.group);
    a.tl = std::make_unique<TemperleyLieb>(*a.hecke);
    it = cache.emplace(spec, std::move(a)).first;
  }
  return it->second;
}

inline const GroupTable& group(const std::string& spec) { return *algebras(spec).group; }

inline Laurent random_laurent(std::mt19937_64& rng, int max_terms = 4, int span = 4, int max_coeff = 5) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> exponent(-span, span);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::vector<LaurentTerm> t;
  for (int k = terms(rng); k > 0; --k) t.push_back({exponent(rng), coeff(rng)});
  return Laurent::from_terms(std::move(t));
}

inline HeckeElt random_hecke(std::mt19937_64& rng, const GroupTable& g, int max_terms = 3) {
  std::uniform_int_distribution<ElementId> elt(0, static_cast<ElementId>(g.size() - 1));
  std::uniform_int_distribution<int> terms(1, max_terms);
  HeckeElt h;
  for (int k = terms(rng); k > 0; --k) h.add(elt(rng), random_laurent(rng, 2, 2, 3));
  return h;
}

inline TLElt random_tl(std::mt19937_64& rng, const GroupTable& g, int max_terms = 3) {
  const auto& fc = g.fully_commutative();
  std::uniform_int_distribution<std::size_t> elt(0, fc.size() - 1);
  std::uniform_int_distribution<int> terms(1, max_terms);
  TLElt x;
  for (int k = terms(rng); k > 0; --k) x.add(fc[elt(rng)], random_laurent(rng, 2, 2, 3));
  return x;
}

}  // namespace testing_support
