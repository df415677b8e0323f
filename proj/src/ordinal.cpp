#include "posetlab/ordinal.hpp"

#include <algorithm>
#include <cctype>

namespace posetlab {

Ordinal::Ordinal(std::uint64_t n) {
  if (n > 0) terms_.push_back(Term{Ordinal(), n});
}

Ordinal Ordinal::omega() { return omega_pow(Ordinal(1), 1); }

Ordinal Ordinal::omega_pow(const Ordinal& exponent, std::uint64_t coefficient) {
  Ordinal o;
  if (coefficient == 0) return o;
  o.terms_.push_back(Term{exponent, coefficient});
  return o;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (terms[k].coefficient == 0) throw std::logic_error("zero coefficient in CNF");
    if (k + 1 < terms.size() && compare(terms[k].exponent, terms[k + 1].exponent) != std::strong_ordering::greater)
      throw std::logic_error("CNF exponents not strictly decreasing");
  }
  Ordinal o;
  o.terms_ = std::move(terms);
  return o;
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent.is_zero());
}

std::uint64_t Ordinal::finite_value() const {
  if (!is_finite()) throw Error("ordinal is infinite");
  return terms_.empty() ? 0 : terms_.front().coefficient;
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& o) const { return compare(*this, o); }

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t k = 0; k < ta.size() && k < tb.size(); ++k) {
    auto ce = compare(ta[k].exponent, tb[k].exponent);
    if (ce != 0) return ce;
    if (ta[k].coefficient != tb[k].coefficient)
      return ta[k].coefficient < tb[k].coefficient ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (ta.size() == tb.size()) return std::strong_ordering::equal;
  return ta.size() < tb.size() ? std::strong_ordering::less : std::strong_ordering::greater;
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const Ordinal& lead_exp = b.terms().front().exponent;
  Ordinal out;
  std::vector<Ordinal::Term> terms;
  for (const auto& t : a.terms()) {
    auto c = compare(t.exponent, lead_exp);
    if (c == std::strong_ordering::greater) {
      terms.push_back(t);
    } else if (c == std::strong_ordering::equal) {
      terms.push_back(Ordinal::Term{t.exponent, t.coefficient + b.terms().front().coefficient});
      for (std::size_t k = 1; k < b.terms().size(); ++k) terms.push_back(b.terms()[k]);
      return Ordinal::from_terms(std::move(terms));
    } else {
      break;  // absorbed by b's leading term
    }
  }
  for (const auto& t : b.terms()) terms.push_back(t);
  return Ordinal::from_terms(std::move(terms));
}

Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  std::vector<Ordinal::Term> terms;
  std::size_t i = 0, j = 0;
  while (i < a.terms().size() || j < b.terms().size()) {
    if (i == a.terms().size()) {
      terms.push_back(b.terms()[j++]);
    } else if (j == b.terms().size()) {
      terms.push_back(a.terms()[i++]);
    } else {
      auto c = compare(a.terms()[i].exponent, b.terms()[j].exponent);
      if (c == std::strong_ordering::greater) {
        terms.push_back(a.terms()[i++]);
      } else if (c == std::strong_ordering::less) {
        terms.push_back(b.terms()[j++]);
      } else {
        terms.push_back(Ordinal::Term{a.terms()[i].exponent, a.terms()[i].coefficient + b.terms()[j].coefficient});
        ++i;
        ++j;
      }
    }
  }
  return Ordinal::from_terms(std::move(terms));
}

LimitPart limit_part(const Ordinal& a) {
  LimitPart out;
  std::vector<Ordinal::Term> terms;
  for (const auto& t : a.terms()) {
    if (t.exponent.is_zero())
      out.remainder = t.coefficient;
    else
      terms.push_back(t);
  }
  out.limit = Ordinal::from_terms(std::move(terms));
  return out;
}

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    if (k > 0) out += "+";
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += "w";
    if (t.exponent != Ordinal(1)) {
      if (t.exponent.is_finite())
        out += "^" + std::to_string(t.exponent.finite_value());
      else if (t.exponent == omega())
        out += "^w";
      else
        out += "^(" + t.exponent.to_string() + ")";
    }
    if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("ordinal syntax error at offset " + std::to_string(i) + ": " + what);
  }

  std::uint64_t number() {
    ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected a number");
    std::uint64_t v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
      ++i;
    }
    return v;
  }

  Ordinal::Term term() {
    ws();
    if (i < s.size() && s[i] == 'w') {
      ++i;
      Ordinal exp(1);
      if (eat('^')) {
        ws();
        if (i < s.size() && s[i] == '(') {
          ++i;
          exp = ordinal();
          if (!eat(')')) fail("expected ')'");
        } else if (i < s.size() && s[i] == 'w') {
          ++i;
          exp = Ordinal::omega();
        } else {
          exp = Ordinal(number());
        }
      }
      std::uint64_t c = 1;
      if (eat('*')) c = number();
      if (c == 0) fail("coefficient must be positive");
      return Ordinal::Term{exp, c};
    }
    std::uint64_t v = number();
    if (v == 0) fail("zero terms are not in normal form");
    return Ordinal::Term{Ordinal(), v};
  }

  Ordinal ordinal() {
    ws();
    // bare zero
    if (i < s.size() && s[i] == '0') {
      std::size_t save = i;
      std::uint64_t v = number();
      ws();
      if (v == 0) {
        if (i < s.size() && s[i] != ')' ) fail("zero cannot be combined with other terms");
        return Ordinal();
      }
      i = save;
    }
    std::vector<Ordinal::Term> terms;
    terms.push_back(term());
    while (eat('+')) terms.push_back(term());
    for (std::size_t k = 0; k + 1 < terms.size(); ++k)
      if (compare(terms[k].exponent, terms[k + 1].exponent) != std::strong_ordering::greater)
        fail("exponents must strictly decrease (input is not in Cantor normal form)");
    return Ordinal::from_terms(std::move(terms));
  }
};

}  // namespace

Ordinal Ordinal::parse(const std::string& text) {
  Parser p(text);
  Ordinal o = p.ordinal();
  p.ws();
  if (p.i != text.size()) p.fail("trailing input");
  return o;
}

}  // namespace posetlab
