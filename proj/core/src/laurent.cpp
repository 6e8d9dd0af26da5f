#include "hecketl/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hecketl {

namespace {

// Merges two ascending term lists, scaling the second by `sign`.
std::vector<LaurentTerm> merge(const std::vector<LaurentTerm>& a, const std::vector<LaurentTerm>& b,
                               int sign) {
  std::vector<LaurentTerm> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->exponent < j->exponent)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->exponent < i->exponent) {
      out.push_back({j->exponent, sign > 0 ? j->coeff : Integer(-j->coeff)});
      ++j;
    } else {
      Integer c = sign > 0 ? Integer(i->coeff + j->coeff) : Integer(i->coeff - j->coeff);
      if (!c.is_zero()) out.push_back({i->exponent, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(boost::multiprecision::uint128_t(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

Laurent::Laurent(const Integer& constant) {
  if (!constant.is_zero()) terms_.push_back({0, constant});
}

Laurent Laurent::monomial(int exponent, Integer coeff) {
  if (coeff.is_zero()) return {};
  return Laurent(std::vector<LaurentTerm>{{exponent, std::move(coeff)}});
}

Laurent Laurent::qc() { return monomial(1) + monomial(-1); }

Laurent Laurent::from_terms(std::vector<LaurentTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const LaurentTerm& a, const LaurentTerm& b) { return a.exponent < b.exponent; });
  std::vector<LaurentTerm> out;
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponent == t.exponent)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const LaurentTerm& t) { return t.coeff.is_zero(); });
  return Laurent(std::move(out));
}

bool Laurent::is_one() const { return terms_.size() == 1 && terms_[0].exponent == 0 && terms_[0].coeff == 1; }

Integer Laurent::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const LaurentTerm& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coeff;
  return 0;
}

int Laurent::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
  return terms_.front().exponent;
}

int Laurent::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
  return terms_.back().exponent;
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  terms_ = merge(terms_, other.terms_, +1);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) {
  if (other.is_zero()) return *this;
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1 && a.terms_[0].coeff == 1) return b.shifted(a.terms_[0].exponent);
  if (b.size() == 1 && b.terms_[0].coeff == 1) return a.shifted(b.terms_[0].exponent);
  const int lo = a.min_exponent() + b.min_exponent();
  const int hi = a.max_exponent() + b.max_exponent();
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) dense[static_cast<std::size_t>(x.exponent + y.exponent - lo)] += x.coeff * y.coeff;
  std::vector<LaurentTerm> out;
  for (std::size_t k = 0; k < dense.size(); ++k)
    if (!dense[k].is_zero()) out.push_back({static_cast<int>(k) + lo, std::move(dense[k])});
  return Laurent(std::move(out));
}

Laurent& Laurent::operator*=(const Laurent& other) { return *this = *this * other; }

void Laurent::add_product(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return;
  *this += a * b;
}

Laurent Laurent::shifted(int k) const {
  Laurent r = *this;
  for (auto& t : r.terms_) t.exponent += k;
  return r;
}

Laurent Laurent::bar() const {
  std::vector<LaurentTerm> out(terms_.rbegin(), terms_.rend());
  for (auto& t : out) t.exponent = -t.exponent;
  return Laurent(std::move(out));
}

Laurent Laurent::negative_part() const {
  std::vector<LaurentTerm> out;
  for (const auto& t : terms_) {
    if (t.exponent >= 0) break;
    out.push_back(t);
  }
  return Laurent(std::move(out));
}

Laurent exact_div(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return {};
  // Long division from the top exponent; b's leading coefficient must divide
  // every intermediate leading coefficient.
  Laurent rem = a;
  std::vector<LaurentTerm> quotient;
  const auto& lead = b.terms_.back();
  const int span = b.max_exponent() - b.min_exponent();
  while (!rem.is_zero()) {
    const auto& top = rem.terms_.back();
    if (top.exponent - span < rem.min_exponent()) throw std::domain_error("inexact Laurent division");
    Integer q;
    Integer r;
    boost::multiprecision::divide_qr(top.coeff, lead.coeff, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact Laurent division");
    const int e = top.exponent - lead.exponent;
    quotient.push_back({e, q});
    rem -= Laurent::monomial(e, q) * b;
  }
  return Laurent::from_terms(std::move(quotient));
}

bool Laurent::in_A_minus() const { return terms_.empty() || terms_.back().exponent <= 0; }

bool Laurent::in_v_inv_A_minus() const { return terms_.empty() || terms_.back().exponent <= -1; }

bool Laurent::has_nonneg_coeffs() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const LaurentTerm& t) { return t.coeff >= 0; });
}

std::uint64_t Laurent::eval_mod(std::uint64_t v_value, std::uint64_t v_inverse, std::uint64_t prime) const {
  std::uint64_t acc = 0;
  for (const auto& t : terms_) {
    Integer c = t.coeff % prime;
    if (c < 0) c += prime;
    const auto cm = c.convert_to<std::uint64_t>();
    const auto pw = t.exponent >= 0 ? powmod(v_value, static_cast<std::uint64_t>(t.exponent), prime)
                                    : powmod(v_inverse, static_cast<std::uint64_t>(-t.exponent), prime);
    acc = (acc + mulmod(cm, pw, prime)) % prime;
  }
  return acc;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Integer c = it->coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (it->exponent == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << "v";
    if (it->exponent != 1) os << "^" << it->exponent;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.to_string(); }

nlohmann::ordered_json to_json(const Laurent& p) {
  auto arr = nlohmann::ordered_json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    nlohmann::ordered_json c;
    if (it->coeff >= std::numeric_limits<std::int64_t>::min() && it->coeff <= std::numeric_limits<std::int64_t>::max())
      c = it->coeff.convert_to<std::int64_t>();
    else
      c = it->coeff.str();
    arr.push_back(nlohmann::ordered_json::array({it->exponent, c}));
  }
  return arr;
}

Laurent laurent_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array()) throw std::invalid_argument("Laurent JSON must be an array");
  std::vector<LaurentTerm> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw std::invalid_argument("Laurent JSON term must be [exponent, coeff]");
    Integer c = t[1].is_string() ? Integer(t[1].get<std::string>()) : Integer(t[1].get<std::int64_t>());
    terms.push_back({t[0].get<int>(), std::move(c)});
  }
  return Laurent::from_terms(std::move(terms));
}

Laurent parse_laurent(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty Laurent polynomial");
  if (s == "0") return {};
  std::vector<LaurentTerm> terms;
  std::size_t pos = 0;
  auto fail = [&] { throw std::invalid_argument("malformed Laurent polynomial: " + text); };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!terms.empty()) {
      fail();
    }
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
    Integer c = digits.empty() ? Integer(1) : Integer(digits);
    int e = 0;
    if (pos < s.size() && s[pos] == 'v') {
      ++pos;
      e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string exp;
        if (pos < s.size() && s[pos] == '-') exp += s[pos++];
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) exp += s[pos++];
        if (exp.empty() || exp == "-") fail();
        e = std::stoi(exp);
      }
    } else if (digits.empty()) {
      fail();
    }
    terms.push_back({e, sign * c});
  }
  return Laurent::from_terms(std::move(terms));
}

}  // namespace hecketl
