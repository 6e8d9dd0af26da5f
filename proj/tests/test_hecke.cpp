#include <doctest.h>

#include "support.hpp"

using namespace hecketl;
using testing_support::algebras;
using testing_support::random_hecke;

namespace {

// Classical Kazhdan-Lusztig polynomials P_{x,w}(q) as integer coefficient
// vectors, from the standard recursion on a left descent s of w (w = s v):
//
//   P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v} - sum_{z < v, sz < z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}
//
// with c = 1 if sx < x and 0 otherwise. Uses only the group table and the
// Bruhat order.
using Poly = std::vector<long long>;

void add_shifted(Poly& acc, const Poly& p, int shift, long long scale) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t k = 0; k < p.size(); ++k) acc[k + shift] += scale * p[k];
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<std::vector<Poly>> classical_kl(const GroupTable& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<Poly>> P(n, std::vector<Poly>(n));
  auto mu = [&](ElementId z, ElementId w) -> long long {
    const int d = g.length(w) - g.length(z) - 1;
    if (d < 0 || d % 2) return 0;
    const auto& p = P[z][w];
    return static_cast<std::size_t>(d / 2) < p.size() ? p[d / 2] : 0;
  };
  for (ElementId w = 0; w < n; ++w) {
    if (w == g.identity()) {
      P[w][w] = {1};
      continue;
    }
    Generator s = 0;
    while (!g.is_left_descent(w, s)) ++s;
    const ElementId v = g.left_mul(w, s);
    for (ElementId x = 0; x <= w; ++x) {
      if (!g.bruhat_leq(x, w)) continue;
      const ElementId sx = g.left_mul(x, s);
      const bool c = g.length(sx) < g.length(x);
      Poly acc;
      add_shifted(acc, P[sx][v], c ? 0 : 1, 1);
      add_shifted(acc, P[x][v], c ? 1 : 0, 1);
      for (ElementId z = 0; z < v; ++z) {
        if (!g.is_left_descent(z, s) || !g.bruhat_leq(z, v) || !g.bruhat_leq(x, z)) continue;
        const long long m = mu(z, v);
        if (m) add_shifted(acc, P[x][z], (g.length(w) - g.length(z)) / 2, -m);
      }
      trim(acc);
      P[x][w] = acc;
    }
  }
  return P;
}

// v^{l(x) - l(w)} P_{x,w}(v^2).
Laurent normalized(const Poly& p, int lx, int lw) {
  std::vector<LaurentTerm> terms;
  for (std::size_t k = 0; k < p.size(); ++k) terms.push_back({2 * static_cast<int>(k) + lx - lw, p[k]});
  return Laurent::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("quadratic and braid relations") {
  for (const char* name : {"A3", "B3", "H3", "I2:5"}) {
    INFO(name);
    const auto& a = algebras(name);
    const auto& g = *a.group;
    const auto& H = *a.hecke;
    const Laurent q = Laurent::q();
    for (int si = 0; si < g.rank(); ++si) {
      const auto s = static_cast<Generator>(si);
      const ElementId es = g.right_mul(g.identity(), s);
      HeckeElt expected = H.T(es, q - 1);
      expected.add(g.identity(), q);
      CHECK(H.mul(H.T(es), H.T(es)) == expected);
      CHECK(H.mul(H.T(es), H.inverse_gen(s)) == H.T(g.identity()));
      for (int ti = si + 1; ti < g.rank(); ++ti) {
        const auto t = static_cast<Generator>(ti);
        const int m = g.graph().bond(s, t);
        HeckeElt lhs = H.T(g.identity()), rhs = H.T(g.identity());
        for (int k = 0; k < m; ++k) {
          lhs = H.mul_gen(Side::right, k % 2 ? t : s, lhs);
          rhs = H.mul_gen(Side::right, k % 2 ? s : t, rhs);
        }
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("T_x T_y = T_xy when lengths add") {
  const auto& a = algebras("B3");
  const auto& g = *a.group;
  for (ElementId x = 0; x < g.size(); ++x)
    for (ElementId y = 0; y < g.size(); ++y) {
      const ElementId xy = g.multiply(x, y);
      if (g.length(xy) == g.length(x) + g.length(y)) CHECK(a.hecke->mul(a.hecke->T(x), a.hecke->T(y)) == a.hecke->T(xy));
    }
}

TEST_CASE("multiplication is associative with identity T_e") {
  std::mt19937_64 rng(23);
  for (const char* name : {"A3", "B3"}) {
    const auto& a = algebras(name);
    for (int trial = 0; trial < 40; ++trial) {
      const auto x = random_hecke(rng, *a.group), y = random_hecke(rng, *a.group), z = random_hecke(rng, *a.group);
      CHECK(a.hecke->mul(a.hecke->mul(x, y), z) == a.hecke->mul(x, a.hecke->mul(y, z)));
      CHECK(a.hecke->mul(a.hecke->T(0), x) == x);
    }
  }
}

TEST_CASE("inverses and the bar involution") {
  std::mt19937_64 rng(29);
  const auto& a = algebras("B3");
  const auto& g = *a.group;
  const auto& H = *a.hecke;
  const auto bars = bar_of_basis(H);
  for (ElementId w = 0; w < g.size(); ++w) {
    CHECK(H.mul(H.invert_T(w), H.T(w)) == H.T(g.identity()));
    // Two routes to bar(T_w): the recursion and inversion of T_{w^-1}.
    CHECK(bars[w] == H.bar(H.T(w)));
  }
  for (int trial = 0; trial < 40; ++trial) {
    const auto x = random_hecke(rng, g), y = random_hecke(rng, g);
    CHECK(H.bar(H.bar(x)) == x);
    CHECK(H.bar(H.mul(x, y)) == H.mul(H.bar(x), H.bar(y)));
  }
  const ElementId s = g.right_mul(0, 0);
  // bar(T_s) = T_s^-1 = v^-2 T_s + (v^-2 - 1) T_e.
  HeckeElt expected = H.T(s, Laurent::monomial(-2));
  expected.add(0, Laurent::monomial(-2) - 1);
  CHECK(H.bar(H.T(s)) == expected);
  CHECK(H.bar(H.T(0, Laurent::v())) == H.T(0, Laurent::v_inv()));
}

TEST_CASE("C'_s and C'_w0 in A2") {
  const auto& a = algebras("A2");
  const auto& g = *a.group;
  const KLTable kl = kl_table(*a.hecke);
  const ElementId s = g.parse_element("s1");
  HeckeElt cs = a.hecke->T(s, Laurent::v_inv());
  cs.add(0, Laurent::v_inv());
  CHECK(kl_basis(*a.hecke, kl, s) == cs);
  HeckeElt w0;
  for (ElementId w = 0; w < g.size(); ++w) w0.add(w, Laurent::monomial(-3));
  CHECK(kl_basis(*a.hecke, kl, g.longest()) == w0);
}

TEST_CASE("dihedral KL polynomials are trivial") {
  for (int m = 3; m <= 8; ++m) {
    const auto& a = algebras("I2:" + std::to_string(m));
    const auto& g = *a.group;
    const KLTable kl = kl_table(*a.hecke);
    for (ElementId w = 0; w < g.size(); ++w)
      for (ElementId x = 0; x < g.size(); ++x) {
        const Laurent expected = g.bruhat_leq(x, w) ? Laurent::monomial(g.length(x) - g.length(w)) : Laurent();
        CHECK(kl.p_tilde(x, w) == expected);
      }
  }
}

TEST_CASE("KL table matches the classical recursion") {
  for (const char* name : {"A3", "A4", "B3", "B4", "D4", "H3"}) {
    INFO(name);
    const auto& a = algebras(name);
    const auto& g = *a.group;
    const KLTable kl = kl_table(*a.hecke);
    const auto P = classical_kl(g);
    for (ElementId w = 0; w < g.size(); ++w)
      for (ElementId x = 0; x <= w; ++x) CHECK(kl.p_tilde(x, w) == normalized(P[x][w], g.length(x), g.length(w)));
  }
}

TEST_CASE("a nontrivial KL polynomial in A3") {
  const auto& a = algebras("A3");
  const auto& g = *a.group;
  const KLTable kl = kl_table(*a.hecke);
  // P_{s2, s2s1s3s2} = 1 + q.
  CHECK(kl.p_tilde(g.parse_element("s2"), g.parse_element("s2s1s3s2")) == parse_laurent("v^-1 + v^-3"));
}

TEST_CASE("inverse KL expansion and C'-coordinates") {
  const auto& a = algebras("B3");
  const auto& g = *a.group;
  KLTable kl = kl_table(*a.hecke);
  kl.compute_inverse(g);
  for (ElementId w = 0; w < g.size(); ++w) {
    HeckeElt sum;
    for (const auto& [x, c] : inverse_kl_expansion(*a.hecke, kl, w)) sum.add_scaled(c, kl_basis(*a.hecke, kl, x));
    CHECK(sum == a.hecke->T(w, Laurent::monomial(-g.length(w))));
    CHECK(to_kl_coords(*a.hecke, kl, kl_basis(*a.hecke, kl, w)) == Coords{{w, Laurent(1)}});
  }
}

TEST_CASE("standard coordinates rescale by v^l") {
  const auto& g = *algebras("A2").group;
  const HeckeElt h = HeckeElt::basis(g.longest(), Laurent::monomial(-3));
  CHECK(to_standard_coords(g, h) == Coords{{g.longest(), Laurent(1)}});
}
