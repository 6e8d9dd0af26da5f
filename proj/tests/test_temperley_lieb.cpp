#include <doctest.h>

#include "support.hpp"

using namespace hecketl;
using testing_support::algebras;
using testing_support::random_hecke;
using testing_support::random_tl;

namespace {

std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t p) {
  std::uint64_t r = 1;
  for (std::uint64_t e = p - 2; e; e >>= 1, x = x * x % p)
    if (e & 1) r = r * x % p;
  return r;
}

// Rank over F_p of the matrix specialized at v = x: a lower bound for the
// rank over A that is attained for all but finitely many (x, p).
std::size_t rank_mod_p(const std::vector<std::vector<Laurent>>& rows, std::uint64_t x, std::uint64_t p) {
  const std::uint64_t xi = inverse_mod(x, p);
  std::vector<std::vector<std::uint64_t>> m;
  for (const auto& row : rows) {
    std::vector<std::uint64_t> r;
    for (const auto& c : row) r.push_back(c.eval_mod(x, xi, p));
    m.push_back(std::move(r));
  }
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    const std::uint64_t inv = inverse_mod(m[rank][c], p);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      const std::uint64_t f = m[r][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = (m[r][k] + (p - f) * m[rank][k]) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("theta on the T-basis") {
  const auto& a = algebras("A2");
  const auto& g = *a.group;
  const auto& tl = *a.tl;
  CHECK(tl.theta_T(0) == TLElt::basis(0));
  TLElt expected;
  for (ElementId w = 0; w < g.longest(); ++w) expected.add(w, -1);
  CHECK(tl.theta_T(g.longest()) == expected);
  for (const char* name : {"A4", "B4", "D4", "H3"}) {
    const auto& b = algebras(name);
    for (auto w : b.group->fully_commutative()) CHECK(b.tl->theta_T(w) == TLElt::basis(w));
    for (ElementId w = 0; w < b.group->size(); ++w)
      for (const auto& [x, c] : b.tl->theta_T(w)) CHECK(b.group->is_fully_commutative(x));
  }
}

TEST_CASE("theta annihilates the ideal") {
  for (const char* name : {"A3", "B3", "I2:5"}) {
    const auto& a = algebras(name);
    const auto& g = *a.group;
    const auto& H = *a.hecke;
    const auto gens = a.tl->ideal_generators();
    for (const auto& gen : gens) {
      for (ElementId x = 0; x < g.size(); x += 3)
        for (ElementId y = 0; y < g.size(); y += 5)
          CHECK(a.tl->theta(H.mul(H.mul(H.T(x), gen), H.T(y))).is_zero());
    }
  }
  // One generator per non-commuting pair, with 2m terms.
  const auto& b3 = algebras("B3");
  const auto gens = b3.tl->ideal_generators();
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].size() == 8);
  CHECK(gens[1].size() == 6);
}

TEST_CASE("TL multiplication") {
  const auto& a = algebras("A2");
  const auto& g = *a.group;
  const auto& tl = *a.tl;
  const ElementId s1 = g.parse_element("s1");
  TLElt expected = TLElt::basis(0, Laurent::q());
  expected.add(s1, Laurent::q() - 1);
  CHECK(tl.mul(tl.t(s1), tl.t(s1)) == expected);
  std::mt19937_64 rng(37);
  const auto x = random_tl(rng, g);
  CHECK(tl.mul(tl.t(0), x) == x);
  CHECK(tl.mul(x, tl.t(0)) == x);
  CHECK_THROWS_AS(tl.t(g.longest()), PreconditionError);

  // B2: t_{s1s2s1} t_{s2} agrees with theta(T_{s1s2s1} T_{s2}).
  const auto& b = algebras("B2");
  const ElementId u = b.group->parse_element("s1s2s1");
  const ElementId s2 = b.group->parse_element("s2");
  CHECK(b.tl->mul(b.tl->t(u), b.tl->t(s2)) == b.tl->theta(b.hecke->mul(b.hecke->T(u), b.hecke->T(s2))));
  CHECK(b.tl->mul(b.tl->t(u), b.tl->t(s2)) == b.tl->theta_T(b.group->parse_element("s1s2s1s2")));
}

TEST_CASE("theta is multiplicative and TL is associative") {
  std::mt19937_64 rng(41);
  const auto& b2 = algebras("B2");
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = random_hecke(rng, *b2.group), y = random_hecke(rng, *b2.group);
    CHECK(b2.tl->theta(b2.hecke->mul(x, y)) == b2.tl->mul(b2.tl->theta(x), b2.tl->theta(y)));
  }
  for (const char* name : {"B3", "A3", "H3"}) {
    const auto& a = algebras(name);
    for (int trial = 0; trial < 25; ++trial) {
      const auto x = random_tl(rng, *a.group), y = random_tl(rng, *a.group), z = random_tl(rng, *a.group);
      CHECK(a.tl->mul(a.tl->mul(x, y), z) == a.tl->mul(x, a.tl->mul(y, z)));
    }
  }
}

TEST_CASE("TL bar involution") {
  std::mt19937_64 rng(43);
  const auto& a = algebras("B2");
  const auto& tl = *a.tl;
  CHECK(tl.bar(tl.t(0)) == tl.t(0));
  CHECK(tl.bar(tl.t(0, Laurent::v())) == tl.t(0, Laurent::v_inv()));
  for (int trial = 0; trial < 40; ++trial) {
    const auto h = random_hecke(rng, *a.group);
    CHECK(tl.bar(tl.theta(h)) == tl.theta(a.hecke->bar(h)));
  }
  for (const char* name : {"B3", "A3", "D4"}) {
    const auto& b = algebras(name);
    for (auto w : b.group->fully_commutative()) {
      const TLElt barred = b.tl->bar(TLElt::basis(w));
      // Independent route: the product of generator inverses inside TL.
      CHECK(barred == b.tl->inverse_t(b.group->inverse(w)));
      CHECK(b.tl->bar(barred) == TLElt::basis(w));
    }
    for (int trial = 0; trial < 20; ++trial) {
      const auto x = random_tl(rng, *b.group), y = random_tl(rng, *b.group);
      CHECK(b.tl->bar(b.tl->mul(x, y)) == b.tl->mul(b.tl->bar(x), b.tl->bar(y)));
    }
  }
}

TEST_CASE("monomial basis") {
  const auto& a = algebras("A2");
  const auto& g = *a.group;
  const auto& tl = *a.tl;
  CHECK(tl.b_monomial(0) == tl.t(0));
  const ElementId s1 = g.parse_element("s1");
  TLElt bs = TLElt::basis(s1, Laurent::v_inv());
  bs.add(0, Laurent::v_inv());
  CHECK(tl.b_gen(0) == bs);
  CHECK(tl.mul(bs, bs) == Laurent::qc() * bs);
  CHECK(tl.b_word(Word{0, 1, 0}) == bs);
  CHECK(tl.mul(tl.b_gen(0), tl.b_gen(1)) == tl.b_monomial(g.parse_element("s1s2")));
  CHECK_THROWS_AS(tl.b_monomial(g.longest()), PreconditionError);
  const auto& b2 = algebras("B2");
  CHECK(b2.tl->b_word(Word{0, 1, 0, 1}) == Laurent(2) * b2.tl->b_word(Word{0, 1}));
}

TEST_CASE("b_w does not depend on the reduced expression") {
  for (const char* name : {"A3", "A4", "B3", "B4", "D4", "H3", "I2:6"}) {
    INFO(name);
    const auto& a = algebras(name);
    REQUIRE(a.group->size() <= 400);
    for (auto w : a.group->fully_commutative()) {
      const TLElt bw = a.tl->b_monomial(w);
      for (const auto& word : a.group->reduced_words(w)) CHECK(a.tl->b_word(word) == bw);
    }
  }
}

TEST_CASE("b-product rewriting") {
  const auto& g2 = *algebras("A2").group;
  CHECK(b_product_reduce(g2, Word{0}) == BProduct{1, 0, g2.parse_element("s1")});
  CHECK(b_product_reduce(g2, Word{0, 1, 0}) == BProduct{1, 0, g2.parse_element("s1")});
  CHECK(b_product_reduce(g2, Word{}) == BProduct{1, 0, g2.identity()});
  CHECK(b_product_reduce(g2, Word{0, 0, 0}) == BProduct{1, 2, g2.parse_element("s1")});
  const auto& gb = *algebras("B2").group;
  CHECK(b_product_reduce(gb, Word{0, 1, 0, 1}) == BProduct{2, 0, gb.parse_element("s1s2")});
  CHECK(b_product_reduce(gb, Word{1, 0, 1, 0}) == BProduct{2, 0, gb.parse_element("s2s1")});
  CHECK_THROWS_AS(b_product_reduce(*algebras("H3").group, Word{0}), PreconditionError);
  CHECK_THROWS_AS(b_product_reduce(*algebras("I2:5").group, Word{0}), PreconditionError);

  std::mt19937_64 rng(47);
  for (const char* name : {"A4", "B3", "D4"}) {
    const auto& a = algebras(name);
    std::uniform_int_distribution<int> len(0, 8), letter(0, a.group->rank() - 1);
    for (int trial = 0; trial < 150; ++trial) {
      Word word(static_cast<std::size_t>(len(rng)));
      for (auto& s : word) s = static_cast<Generator>(letter(rng));
      CHECK(expand(*a.tl, b_product_reduce(*a.group, word)) == a.tl->b_word(word));
    }
  }
}

TEST_CASE("canonical basis against the monomial basis") {
  for (const char* name : {"A1", "A2", "A3", "A4", "D4"}) {
    INFO(name);
    const auto& a = algebras(name);
    CHECK(ic_basis_tl(*a.tl) == monomial_table(*a.tl));
  }
  const auto& b2 = algebras("B2");
  const auto ic = ic_basis_tl(*b2.tl);
  const auto mono = monomial_table(*b2.tl);
  const ElementId w = b2.group->parse_element("s1s2s1");
  CHECK(ic.column(w) != mono.column(w));
  // c_{s1s2s1} = b_{s1s2s1} - b_{s1} in B2, checked bar-fixed directly.
  const TLElt c = from_standard_coords(*b2.group, ic.column(w));
  CHECK(c == b2.tl->b_monomial(w) - b2.tl->b_gen(0));
  CHECK(b2.tl->bar(c) == c);
  CHECK(ic.column(0) == Coords{{0, Laurent(1)}});
}

TEST_CASE("structure constants") {
  const auto& a = algebras("A2");
  const auto& g = *a.group;
  const StructureConstants b(*a.tl, TLBasis::b);
  CHECK(b.product(g.parse_element("s1"), g.parse_element("s2")) == Coords{{g.parse_element("s1s2"), Laurent(1)}});
  CHECK(b.product(g.parse_element("s1"), g.parse_element("s1")) == Coords{{g.parse_element("s1"), Laurent::qc()}});
  const StructureConstants c(*a.tl, TLBasis::c);
  for (auto w : g.fully_commutative()) {
    CHECK(c.product(0, w) == Coords{{w, Laurent(1)}});
    CHECK(c.product(w, 0) == Coords{{w, Laurent(1)}});
  }
  const StructureConstants t(*a.tl, TLBasis::t);
  CHECK(t.product(1, 1) == a.tl->mul(a.tl->t(1), a.tl->t(1)).coords());
  CHECK_THROWS(c.product(g.longest(), 0));

  // c-basis constants agree with direct multiplication in B3.
  const auto& b3 = algebras("B3");
  const auto ic = ic_basis_tl(*b3.tl);
  const StructureConstants cb(*b3.tl, TLBasis::c, &ic);
  const auto& fc = b3.group->fully_commutative();
  for (std::size_t i = 0; i < fc.size(); i += 3)
    for (std::size_t j = 0; j < fc.size(); j += 4) {
      const TLElt direct = b3.tl->mul(from_standard_coords(*b3.group, ic.column(fc[i])),
                                      from_standard_coords(*b3.group, ic.column(fc[j])));
      TLElt via;
      for (const auto& [z, k] : cb.product(fc[i], fc[j])) via.add_scaled(k, from_standard_coords(*b3.group, ic.column(z)));
      CHECK(via == direct);
    }
}

TEST_CASE("exact rank agrees with modular specialization") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 2 + rng() % 5, cols = 2 + rng() % 5;
    // Low-rank products plus noise rows.
    std::vector<std::vector<Laurent>> m(rows, std::vector<Laurent>(cols));
    const std::size_t k = 1 + rng() % 3;
    std::vector<std::vector<Laurent>> basis(k, std::vector<Laurent>(cols));
    for (auto& r : basis)
      for (auto& c : r) c = testing_support::random_laurent(rng, 2, 2, 3);
    for (auto& r : m) {
      for (std::size_t b = 0; b < k; ++b) {
        const Laurent f = testing_support::random_laurent(rng, 2, 2, 3);
        for (std::size_t c = 0; c < cols; ++c) r[c] += f * basis[b][c];
      }
    }
    const std::size_t expected = std::max(rank_mod_p(m, 91823, 1000003), rank_mod_p(m, 5, 998244353));
    CHECK(exact_rank(m) == expected);
  }
  CHECK(exact_rank({}) == 0);
  CHECK(exact_rank({{Laurent(), Laurent()}}) == 0);
}

TEST_CASE("kernel of theta for dihedral groups") {
  for (int m = 3; m <= 7; ++m) {
    const auto& a = algebras("I2:" + std::to_string(m));
    const auto& g = *a.group;
    const KLTable kl = kl_table(*a.hecke);
    const auto report = kernel_basis_check(*a.tl, kl);
    CHECK(report.kernel_kl == std::vector<ElementId>{g.longest()});
    CHECK(report.ideal_annihilated);
    CHECK(report.ideal_rank == g.size() - g.fully_commutative().size());
    CHECK(report.theta_rank == g.fully_commutative().size());
    CHECK(report.spanned_by_kl);
  }
}
