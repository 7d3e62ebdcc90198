#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "lcdc/field.hpp"
#include "support/bridge.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

using lcdc::Elem;
using lcdc::errc;
using lcdc::FieldSpec;
using testutil::thrown;

TEST_CASE("field parameters") {
  const FieldSpec& f4 = lcdc::gf4();
  CHECK(f4.p() == 2);
  CHECK(f4.s() == 1);
  CHECK(f4.r() == 2);
  CHECK(f4.q() == 4);

  const FieldSpec& f9 = lcdc::gf9();
  CHECK(f9.r() == 3);
  CHECK(f9.q() == 9);

  const FieldSpec& f25 = lcdc::gf25();
  CHECK(f25.r() == 5);
  CHECK(f25.q() == 25);

  const FieldSpec& f169 = FieldSpec::get(13, {11, 0, 1});
  CHECK(f169.r() == 13);
  CHECK(f169.q() == 169);

  // Degree 4 over F_2: q = 16, r = 4. x^4 + x + 1 is primitive.
  const FieldSpec& f16 = FieldSpec::get(2, {1, 1, 0, 0, 1});
  CHECK(f16.s() == 2);
  CHECK(f16.r() == 4);
  CHECK(f16.q() == 16);
}

TEST_CASE("field interning returns one instance per normalized spec") {
  CHECK(&lcdc::gf9() == &FieldSpec::get(3, {2, 2, 1}));
  CHECK(&lcdc::gf9() == &FieldSpec::get(3, {5, 5, 4}));  // coefficients mod p
  CHECK(&lcdc::gf9() != &FieldSpec::get(3, {1, 0, 1}));  // different modulus
}

TEST_CASE("field validation errors") {
  CHECK(thrown([] { FieldSpec::get(4, {1, 1, 1}); }) == errc::not_prime);
  CHECK(thrown([] { FieldSpec::get(1, {1, 1, 1}); }) == errc::not_prime);
  CHECK(thrown([] { FieldSpec::get(3, {1, 1, 2}); }) == errc::not_monic);
  CHECK(thrown([] { FieldSpec::get(2, {1, 1, 0, 1}); }) == errc::odd_degree);
  CHECK(thrown([] { FieldSpec::get(3, {1, 0}); }) == errc::odd_degree);
  CHECK(thrown([] { FieldSpec::get(2, {1, 0, 1}); }) == errc::reducible);  // (x+1)^2
  CHECK(thrown([] { FieldSpec::get(3, {2, 0, 1}); }) == errc::reducible);  // (x+1)(x+2)
  CHECK(thrown([] { FieldSpec::get(4099, {1, 1, 1}); }) == errc::too_large);
}

TEST_CASE("arithmetic agrees with reference pairs on all of F4, F9, F25") {
  for (const FieldSpec* fp : {&lcdc::gf4(), &lcdc::gf9(), &lcdc::gf25()}) {
    const FieldSpec& f = *fp;
    const oracle::Field& of = bridge::oracle_field(f);
    for (uint64_t i = 0; i < f.q(); ++i) {
      Elem a = f.element(i);
      oracle::P oa = of.element(unsigned(i));
      CHECK(bridge::to_oracle(a.conj()) == of.conj(oa));
      CHECK(bridge::to_oracle(-a) == of.neg(oa));
      CHECK(bridge::to_oracle(a.trace()) == of.trace(oa));
      CHECK(lcdc::is_in_subfield(a.trace()));
      if (!a.is_zero()) CHECK(a * a.inv() == f.one());
      for (uint64_t j = 0; j < f.q(); ++j) {
        Elem b = f.element(j);
        oracle::P ob = of.element(unsigned(j));
        CHECK(bridge::to_oracle(a + b) == of.add(oa, ob));
        CHECK(bridge::to_oracle(a - b) == of.sub(oa, ob));
        CHECK(bridge::to_oracle(a * b) == of.mul(oa, ob));
      }
    }
  }
}

TEST_CASE("conjugation is the r-power involution fixing exactly F_r") {
  for (const FieldSpec* fp : {&lcdc::gf9(), &lcdc::gf25()}) {
    const FieldSpec& f = *fp;
    size_t fixed = 0;
    for (uint64_t i = 0; i < f.q(); ++i) {
      Elem a = f.element(i);
      CHECK(a.conj().conj() == a);
      CHECK((a * a).conj() == a.conj() * a.conj());
      if (a.conj() == a) ++fixed;
    }
    CHECK(fixed == f.r());
    CHECK(f.subfield_elements().size() == f.r());
  }
}

TEST_CASE("inverting zero fails") {
  CHECK(thrown([] { lcdc::gf9().zero().inv(); }) == errc::singular);
}

TEST_CASE("powers of w in F9 follow the frozen table") {
  const FieldSpec& f = lcdc::gf9();
  // w^0 .. w^7 as (c0, c1) pairs; w generates the multiplicative group.
  std::vector<std::vector<uint32_t>> table = {{1, 0}, {0, 1}, {1, 1}, {1, 2},
                                              {2, 0}, {0, 2}, {2, 2}, {2, 1}};
  for (size_t i = 0; i < table.size(); ++i)
    CHECK(f.omega().pow(i) == f.from_coeffs(table[i]));
  CHECK(f.omega().pow(8) == f.one());
}

TEST_CASE("powers of w in F25 follow the frozen values") {
  const FieldSpec& f = lcdc::gf25();
  Elem w = f.omega();
  CHECK(w.pow(2) == f.from_coeffs({3, 1}));
  CHECK(w.pow(3) == f.from_coeffs({3, 4}));
  CHECK(w.pow(5) == f.from_coeffs({1, 4}));
  CHECK(w.pow(19) == f.from_coeffs({0, 3}));
  CHECK(w.pow(22) == f.from_coeffs({1, 1}));
  CHECK(w.pow(24) == f.one());
  for (unsigned k = 1; k < 24; ++k) CHECK(w.pow(k) != f.one());
}

TEST_CASE("alpha choice: canonical-first element with conj(a) = -a != 0") {
  const FieldSpec& f9 = lcdc::gf9();
  Elem a9 = lcdc::find_alpha(f9);
  CHECK(a9 == f9.from_coeffs({1, 1}));
  CHECK(a9.conj() == -a9);
  CHECK_FALSE(a9.is_zero());
  for (uint64_t i = 0; i < f9.index_of(a9); ++i) {
    Elem e = f9.element(i);
    CHECK((e.is_zero() || e.conj() != -e));
  }

  Elem a25 = lcdc::find_alpha(lcdc::gf25());
  CHECK(a25 == lcdc::gf25().from_coeffs({2, 1}));
  CHECK(a25.conj() == -a25);

  CHECK(thrown([] { lcdc::find_alpha(lcdc::gf4()); }) == errc::even_characteristic);
}

TEST_CASE("square root of -1") {
  Elem l25 = lcdc::sqrt_minus_one(lcdc::gf25());
  CHECK(l25 == lcdc::gf25().from_int(2));
  CHECK(l25 * l25 == -lcdc::gf25().one());
  CHECK(lcdc::is_in_subfield(l25));

  Elem l169 = lcdc::sqrt_minus_one(FieldSpec::get(13, {11, 0, 1}));
  CHECK(l169 == FieldSpec::get(13, {11, 0, 1}).from_int(5));

  CHECK(thrown([] { lcdc::sqrt_minus_one(lcdc::gf9()); }) ==
        errc::no_square_root_of_minus_one);
  CHECK(thrown([] { lcdc::sqrt_minus_one(lcdc::gf4()); }) ==
        errc::no_square_root_of_minus_one);
}

TEST_CASE("element index round trip and canonical order") {
  const FieldSpec& f = lcdc::gf9();
  for (uint64_t i = 0; i < f.q(); ++i) CHECK(f.index_of(f.element(i)) == i);
  // Constant coefficient varies fastest.
  CHECK(f.element(1) == f.one());
  CHECK(f.element(3) == f.omega());
  CHECK(f.element(4) == f.one() + f.omega());
}

TEST_CASE("element formatting") {
  const FieldSpec& f = lcdc::gf9();
  CHECK(lcdc::format_element(f.zero()) == "0");
  CHECK(lcdc::format_element(f.from_int(2)) == "2");
  CHECK(lcdc::format_element(f.omega()) == "w");
  CHECK(lcdc::format_element(f.omega() + f.omega()) == "2*w");
  CHECK(lcdc::format_element(f.one() + f.omega()) == "1+w");
}

TEST_CASE("element parsing") {
  const FieldSpec& f = lcdc::gf9();
  CHECK(lcdc::parse_element(f, "0") == f.zero());
  CHECK(lcdc::parse_element(f, "7") == f.from_int(7));
  CHECK(lcdc::parse_element(f, "w") == f.omega());
  CHECK(lcdc::parse_element(f, "w^2") == f.omega().pow(2));
  CHECK(lcdc::parse_element(f, "2*w") == f.omega() + f.omega());
  CHECK(lcdc::parse_element(f, "2*w^3") == f.from_int(2) * f.omega().pow(3));
  CHECK(lcdc::parse_element(f, "1+w") == f.one() + f.omega());
  CHECK(lcdc::parse_element(f, "2+2*w^2") ==
        f.from_int(2) + f.from_int(2) * f.omega().pow(2));

  for (const char* bad : {"", "x", "w^", "^2", "1.5", "+", "1++w", "3w", "w*2", "*"}) {
    CAPTURE(bad);
    CHECK(thrown([&] { lcdc::parse_element(f, bad); }) == errc::parse_error);
  }
}

TEST_CASE("format and parse round trip every element") {
  for (const FieldSpec* fp : {&lcdc::gf4(), &lcdc::gf9(), &lcdc::gf25()}) {
    const FieldSpec& f = *fp;
    for (uint64_t i = 0; i < f.q(); ++i) {
      Elem e = f.element(i);
      CHECK(lcdc::parse_element(f, lcdc::format_element(e)) == e);
    }
  }
}

TEST_CASE("field text form round trips") {
  CHECK(lcdc::format_field(lcdc::gf9()) == "GF(9) mod 2,2,1");
  CHECK(&lcdc::parse_field("GF(9) mod 2,2,1") == &lcdc::gf9());
  CHECK(&lcdc::parse_field(lcdc::format_field(lcdc::gf25())) == &lcdc::gf25());
  CHECK(&lcdc::parse_field("GF(16) mod 1,1,0,0,1") == &FieldSpec::get(2, {1, 1, 0, 0, 1}));

  for (const char* bad :
       {"", "GF(9)", "GF(9) mod", "GF(10) mod 1,1,1", "GF(9) 2,2,1", "GF() mod 1,1,1",
        "GF(9) mod 2,2"}) {
    CAPTURE(bad);
    CHECK(thrown([&] { lcdc::parse_field(bad); }) == errc::parse_error);
  }
  // Degree and size internally inconsistent with any prime power.
  CHECK(thrown([] { lcdc::parse_field("GF(12) mod 1,1,1"); }) == errc::parse_error);
}

TEST_CASE("trace hits every subfield value equally often") {
  for (const FieldSpec* fp : {&lcdc::gf9(), &lcdc::gf25()}) {
    const FieldSpec& f = *fp;
    size_t zero_traces = 0;
    for (uint64_t i = 0; i < f.q(); ++i)
      if (f.element(i).trace().is_zero()) ++zero_traces;
    CHECK(zero_traces == f.r());  // kernel of the trace has size r
  }
}
