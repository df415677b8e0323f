#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "posetlab/errors.hpp"

namespace posetlab {

// Ordinal below epsilon_0 in Cantor normal form: a finite sum of terms
// w^exponent * coefficient with strictly decreasing exponents, which are
// themselves ordinals. The empty sum is 0.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;
  Ordinal(std::uint64_t n);  // NOLINT: implicit finite ordinals are intended

  static Ordinal omega();
  static Ordinal omega_pow(const Ordinal& exponent, std::uint64_t coefficient = 1);
  // `terms` must already be normal form (strictly decreasing exponents,
  // positive coefficients); verified.
  static Ordinal from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  std::uint64_t finite_value() const;  // requires is_finite()

  const std::vector<Term>& terms() const { return terms_; }

  std::strong_ordering operator<=>(const Ordinal& o) const;
  bool operator==(const Ordinal& o) const { return (*this <=> o) == 0; }

  std::string to_string() const;
  // Accepts the CLI syntax `w^E*c` terms joined by `+`; rejects inputs that
  // are not already in Cantor normal form.
  static Ordinal parse(const std::string& text);

 private:
  std::vector<Term> terms_;  // strictly decreasing exponents, coefficients >= 1
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coefficient = 0;
  bool operator==(const Term& o) const { return exponent == o.exponent && coefficient == o.coefficient; }
};

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);
// Ordinal (non-commutative) sum.
Ordinal add(const Ordinal& a, const Ordinal& b);
// Hessenberg sum: coefficient-wise merge of CNF terms.
Ordinal natural_sum(const Ordinal& a, const Ordinal& b);

struct LimitPart {
  Ordinal limit;               // w * beta
  std::uint64_t remainder = 0;  // < w
};
// Unique decomposition a = w*beta + r.
LimitPart limit_part(const Ordinal& a);

inline Ordinal operator+(const Ordinal& a, const Ordinal& b) { return add(a, b); }

}  // namespace posetlab
