#include <optional>

#include "doctest.h"
#include "posetlab/ordinal.hpp"
#include "support.hpp"

using namespace posetlab;
using posetlab::testing::Rng;

namespace {

Ordinal ord(const std::string& s) { return Ordinal::parse(s); }

// Random ordinal below w^(max_exp+1) with small coefficients.
Ordinal random_ordinal(Rng& rng, int max_exp) {
  Ordinal out;
  for (int e = max_exp; e >= 0; --e) {
    std::uint64_t c = rng() % 4;
    if (c > 0) out = natural_sum(out, Ordinal::omega_pow(Ordinal(static_cast<std::uint64_t>(e)), c));
  }
  return out;
}

// Left subtraction: the unique c with a + c = b when a <= b. Implemented on
// CNF directly, independent of add's internals.
std::optional<Ordinal> subtract_left(const Ordinal& a, const Ordinal& b) {
  if (compare(a, b) == std::strong_ordering::greater) return std::nullopt;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t k = 0;
  while (k < ta.size() && k < tb.size() && ta[k].exponent == tb[k].exponent &&
         ta[k].coefficient == tb[k].coefficient)
    ++k;
  std::vector<Ordinal::Term> rest;
  if (k == ta.size()) {
    for (std::size_t i = k; i < tb.size(); ++i) rest.push_back(tb[i]);
  } else {
    // first divergence: b's term must dominate, the difference keeps b's tail
    rest.push_back(Ordinal::Term{tb[k].exponent, tb[k].coefficient - (ta[k].exponent == tb[k].exponent ? ta[k].coefficient : 0)});
    for (std::size_t i = k + 1; i < tb.size(); ++i) rest.push_back(tb[i]);
  }
  return Ordinal::from_terms(std::move(rest));
}

}  // namespace

TEST_CASE("compare basics") {
  CHECK(compare(Ordinal(0), Ordinal(0)) == std::strong_ordering::equal);
  CHECK(compare(Ordinal::omega(), Ordinal(5)) == std::strong_ordering::greater);
  CHECK(ord("w^2") > ord("w*5+3"));
  CHECK(ord("w*2") < ord("w*2+1"));
}

TEST_CASE("ordinal addition") {
  CHECK(add(Ordinal(1), Ordinal::omega()) == Ordinal::omega());
  CHECK(add(Ordinal::omega(), Ordinal(1)) == ord("w+1"));
  CHECK(add(ord("w*2+3"), ord("w+1")) == ord("w*3+1"));
  CHECK(add(ord("w^2+w"), ord("w^2")) == ord("w^2*2"));
}

TEST_CASE("natural sum") {
  CHECK(natural_sum(Ordinal::omega(), Ordinal::omega()) == ord("w*2"));
  CHECK(natural_sum(ord("w+1"), Ordinal::omega()) == ord("w*2+1"));
  CHECK(natural_sum(Ordinal(0), ord("w^3+5")) == ord("w^3+5"));
}

TEST_CASE("two-copies-then-tail identities") {
  // height w + w gives type (w (+) w) + w = w*3, strictly above the height
  CHECK(add(natural_sum(ord("w"), ord("w")), ord("w")) == ord("w*3"));
  // an indecomposable tail above the copies absorbs them
  CHECK(add(natural_sum(ord("w"), ord("w")), ord("w^2")) == ord("w^2"));
  CHECK(add(natural_sum(ord("w^2"), ord("w^2")), ord("w^3")) == ord("w^3"));
}

TEST_CASE("limit part") {
  LimitPart a = limit_part(Ordinal(5));
  CHECK(a.limit == Ordinal(0));
  CHECK(a.remainder == 5);
  LimitPart b = limit_part(ord("w*2+3"));
  CHECK(b.limit == ord("w*2"));
  CHECK(b.remainder == 3);
  LimitPart c = limit_part(ord("w^2"));
  CHECK(c.limit == ord("w^2"));
  CHECK(c.remainder == 0);
}

TEST_CASE("algebra on random ordinals") {
  Rng rng(61);
  for (int it = 0; it < 1500; ++it) {
    Ordinal a = random_ordinal(rng, 3);
    Ordinal b = random_ordinal(rng, 3);
    Ordinal c = random_ordinal(rng, 3);
    CHECK(natural_sum(a, b) == natural_sum(b, a));
    CHECK(natural_sum(natural_sum(a, b), c) == natural_sum(a, natural_sum(b, c)));
    CHECK(add(add(a, b), c) == add(a, add(b, c)));
    CHECK(compare(a, natural_sum(a, b)) != std::strong_ordering::greater);
    CHECK(compare(a, add(a, b)) != std::strong_ordering::greater);
    if (compare(b, c) == std::strong_ordering::less) CHECK(add(a, b) < add(a, c));
    LimitPart lp = limit_part(a);
    CHECK(add(lp.limit, Ordinal(lp.remainder)) == a);
  }
}

TEST_CASE("compare matches the additive order") {
  // a < b iff some nonzero c has a + c = b, witnessed by left subtraction
  Rng rng(67);
  for (int it = 0; it < 1500; ++it) {
    Ordinal a = random_ordinal(rng, 2);
    Ordinal b = random_ordinal(rng, 2);
    auto diff = subtract_left(a, b);
    if (compare(a, b) == std::strong_ordering::less) {
      REQUIRE(diff.has_value());
      CHECK_FALSE(diff->is_zero());
      CHECK(add(a, *diff) == b);
    } else if (compare(a, b) == std::strong_ordering::equal) {
      REQUIRE(diff.has_value());
      CHECK(diff->is_zero());
    } else {
      CHECK_FALSE(diff.has_value());
    }
  }
}

TEST_CASE("parser accepts normal forms and rejects the rest") {
  CHECK(ord("w^2*3 + w + 4").to_string() == "w^2*3+w+4");
  CHECK(ord("0") == Ordinal(0));
  CHECK(ord("w^w") == Ordinal::omega_pow(Ordinal::omega()));
  CHECK(ord("w^(w+1)*2+w^w+1").to_string() == "w^(w+1)*2+w^w+1");

  CHECK_THROWS_AS(ord("w+w^2"), ParseError);   // increasing exponents
  CHECK_THROWS_AS(ord("w+w"), ParseError);     // repeated exponent
  CHECK_THROWS_AS(ord("4+w"), ParseError);     // finite part first
  CHECK_THROWS_AS(ord("w*0"), ParseError);     // zero coefficient
  CHECK_THROWS_AS(ord("0+w"), ParseError);     // zero cannot combine
  CHECK_THROWS_AS(ord(""), ParseError);
  CHECK_THROWS_AS(ord("w^"), ParseError);
  CHECK_THROWS_AS(ord("w+1 junk"), ParseError);

  Rng rng(71);
  for (int it = 0; it < 300; ++it) {
    Ordinal a = random_ordinal(rng, 3);
    CHECK(Ordinal::parse(a.to_string()) == a);
  }
}
