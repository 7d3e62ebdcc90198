#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "lcdc/construct.hpp"
#include "lcdc/lcd.hpp"
#include "support/bridge.hpp"
#include "support/oracles.hpp"
#include "support/testutil.hpp"

using lcdc::Elem;
using lcdc::errc;
using lcdc::FieldSpec;
using lcdc::InnerProduct;
using lcdc::LinearCode;
using lcdc::Matrix;
using lcdc::SubfieldLinearCode;
using lcdc::Vec;
using testutil::thrown;

namespace {

bool is_permutation_of_columns(const std::vector<size_t>& perm, size_t n) {
  if (perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (size_t p : perm) {
    if (p >= n || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

bool has_block_shape(const Matrix& g, size_t k) {
  const FieldSpec& f = g.field();
  Elem w = f.omega();
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (g.at(i, j) != ((i == j) ? f.one() : f.zero())) return false;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < g.cols(); ++j)
      if (g.at(k + i, j) != w * g.at(i, j)) return false;
  for (size_t i = 2 * k; i < g.rows(); ++i)
    for (size_t j = 0; j < k; ++j)
      if (!g.at(i, j).is_zero()) return false;
  return true;
}

// (4, 2^6, 2)_4 block-form fixture: A = w I_2, B Hermitian self-orthogonal.
SubfieldLinearCode fixture_f4_block() {
  const FieldSpec& f = lcdc::gf4();
  return SubfieldLinearCode(Matrix::parse(f, {{"1", "0", "w", "0"},
                                              {"0", "1", "0", "w"},
                                              {"w", "0", "w^2", "0"},
                                              {"0", "w", "0", "w^2"},
                                              {"0", "0", "1", "w"},
                                              {"0", "0", "w^2", "1"}}));
}

}  // namespace

TEST_CASE("standard form of a linear code") {
  std::mt19937_64 rng(441);
  for (const FieldSpec* fp : {&lcdc::gf4(), &lcdc::gf9()}) {
    for (int trial = 0; trial < 15; ++trial) {
      LinearCode c = bridge::random_linear_code(*fp, 5, 2, rng);
      lcdc::StandardFormLinear sf = lcdc::standard_form_linear(c);
      CHECK(sf.code.n() == c.n());
      CHECK(sf.code.k() == c.k());
      CHECK(is_permutation_of_columns(sf.column_permutation, c.n()));
      // Leading identity block, P holds the rest.
      for (size_t i = 0; i < c.k(); ++i)
        for (size_t j = 0; j < c.k(); ++j)
          CHECK(sf.code.generator().at(i, j) ==
                ((i == j) ? c.field().one() : c.field().zero()));
      CHECK(lcdc::hcat(Matrix::identity(c.field(), c.k()), sf.P) ==
            sf.code.generator());
      // Row operations and column permutations preserve the distance.
      CHECK(lcdc::min_distance(sf.code) == lcdc::min_distance(c));
    }
  }
}

TEST_CASE("standard form is idempotent on systematic input") {
  LinearCode c(Matrix::parse(lcdc::gf4(), {{"1", "0", "w", "0"}, {"0", "1", "1", "w"}}));
  lcdc::StandardFormLinear sf = lcdc::standard_form_linear(c);
  CHECK(sf.code.generator() == c.generator());
  for (size_t j = 0; j < c.n(); ++j) CHECK(sf.column_permutation[j] == j);
}

TEST_CASE("length-doubling construction, characteristic 2") {
  const FieldSpec& f = lcdc::gf4();
  LinearCode c(Matrix::parse(f, {{"1", "0", "w", "0"}, {"0", "1", "1", "w"}}));
  CHECK(lcdc::min_distance(c) == 2);  // 16 codewords
  lcdc::StandardFormLinear sf = lcdc::standard_form_linear(c);
  LinearCode out = lcdc::construct_hermitian_even(sf);
  Matrix expected = Matrix::parse(
      f, {{"1", "0", "w", "0", "w", "0"}, {"0", "1", "1", "w", "1", "w"}});
  CHECK(out.generator() == expected);
  CHECK(out.n() == 2 * c.n() - c.k());
  CHECK(out.k() == c.k());
  auto res = lcdc::is_hermitian_lcd(out);
  CHECK(res.lcd);
  CHECK(res.gram == Matrix::identity(f, 2));
  CHECK(lcdc::min_distance(out) == 3);
  CHECK(lcdc::min_distance(out) >= lcdc::min_distance(c));
}

TEST_CASE("length-doubling construction, r = 1 (mod 4)") {
  const FieldSpec& f = lcdc::gf25();
  LinearCode c(Matrix::parse(
      f, {{"1", "0", "w^22", "w^5"}, {"0", "1", "w^19", "w^22"}}));
  CHECK(lcdc::min_distance(c) == 3);  // 625 codewords
  lcdc::StandardFormLinear sf = lcdc::standard_form_linear(c);
  CHECK(lcdc::sqrt_minus_one(f) == f.from_int(2));
  LinearCode out = lcdc::construct_hermitian_odd(sf);
  Matrix expected =
      Matrix::parse(f, {{"1", "0", "w^22", "w^5", "2*w^22", "2*w^5"},
                        {"0", "1", "w^19", "w^22", "2*w^19", "2*w^22"}});
  CHECK(out.generator() == expected);
  auto res = lcdc::is_hermitian_lcd(out);
  CHECK(res.lcd);
  CHECK(res.gram == Matrix::identity(f, 2));
  // Exact value frozen by the 625-word enumeration; the theorem promises >= 3.
  CHECK(lcdc::min_distance(out) == 4);
}

TEST_CASE("length-doubling construction characteristic guards") {
  std::mt19937_64 rng(442);
  lcdc::StandardFormLinear sf9 =
      bridge::random_standard_form_linear(lcdc::gf9(), 4, 2, rng);
  CHECK(thrown([&] { lcdc::construct_hermitian_even(sf9); }) ==
        errc::wrong_characteristic);
  CHECK(thrown([&] { lcdc::construct_hermitian_odd(sf9); }) ==
        errc::no_square_root_of_minus_one);
  lcdc::StandardFormLinear sf4 =
      bridge::random_standard_form_linear(lcdc::gf4(), 4, 2, rng);
  CHECK(thrown([&] { lcdc::construct_hermitian_odd(sf4); }) ==
        errc::no_square_root_of_minus_one);
}

TEST_CASE("doubled codes satisfy the exact Gram identity on random inputs") {
  std::mt19937_64 rng(443);
  for (int trial = 0; trial < 25; ++trial) {
    lcdc::StandardFormLinear sf =
        bridge::random_standard_form_linear(lcdc::gf4(), 5, 2, rng);
    LinearCode out = lcdc::construct_hermitian_even(sf);
    Matrix gram = out.generator() * lcdc::conj_matrix(out.generator()).transpose();
    CHECK(gram == Matrix::identity(lcdc::gf4(), 2));
    CHECK(lcdc::is_hermitian_lcd(out).lcd);

    lcdc::StandardFormLinear sf25 =
        bridge::random_standard_form_linear(lcdc::gf25(), 4, 2, rng);
    LinearCode out25 = lcdc::construct_hermitian_odd(sf25);
    Matrix gram25 =
        out25.generator() * lcdc::conj_matrix(out25.generator()).transpose();
    CHECK(gram25 == Matrix::identity(lcdc::gf25(), 2));
    CHECK(lcdc::is_hermitian_lcd(out25).lcd);
  }
}

TEST_CASE("subfield standard form keeps block-form input unchanged") {
  SubfieldLinearCode c = fixture_f4_block();
  lcdc::StandardFormSubfield sf = lcdc::standard_form_subfield(c);
  CHECK(sf.input_was_in_block_form);
  CHECK(sf.k == 2);
  CHECK(sf.code.generator() == c.generator());
  const FieldSpec& f = lcdc::gf4();
  CHECK(sf.A == Matrix::parse(f, {{"w", "0"}, {"0", "w"}}));
  CHECK(sf.B == Matrix::parse(f, {{"1", "w"}, {"w^2", "1"}}));
  for (size_t j = 0; j < c.n(); ++j) CHECK(sf.column_permutation[j] == j);
}

TEST_CASE("subfield standard form reaches the block shape with maximal k") {
  std::mt19937_64 rng(444);
  for (const FieldSpec* fp : {&lcdc::gf4(), &lcdc::gf9()}) {
    const FieldSpec& f = *fp;
    Elem w = f.omega();
    for (int trial = 0; trial < 12; ++trial) {
      size_t ell = 1 + trial % 5;
      SubfieldLinearCode c = bridge::random_subfield_code(f, 4, ell, rng);
      lcdc::StandardFormSubfield sf = lcdc::standard_form_subfield(c);
      CHECK(sf.code.n() == c.n());
      CHECK(sf.code.ell() == c.ell());
      CHECK(is_permutation_of_columns(sf.column_permutation, c.n()));
      CHECK(has_block_shape(sf.code.generator(), sf.k));
      CHECK(sf.A.rows() == sf.k);
      CHECK(sf.B.rows() == c.ell() - 2 * sf.k);
      CHECK(lcdc::min_distance(sf.code) == lcdc::min_distance(c));
      // k counts the F_q-dimension of W = {v in C : w v in C}: the number of
      // codewords staying inside C under w-scaling must be exactly q^k.
      uint64_t in_w = 0;
      lcdc::for_each_codeword(c, lcdc::kDefaultEnumerationLimit, [&](const Vec& v) {
        if (lcdc::contains(c, lcdc::vec_scale(w, v))) ++in_w;
      });
      uint64_t expect = 1;
      for (size_t i = 0; i < sf.k; ++i) expect *= f.q();
      CHECK(in_w == expect);
    }
  }
}

TEST_CASE("widened linear codes recover their full F_q-dimension") {
  std::mt19937_64 rng(445);
  LinearCode c = bridge::random_linear_code(lcdc::gf9(), 4, 2, rng);
  SubfieldLinearCode s = lcdc::to_subfield_linear(c);
  lcdc::StandardFormSubfield sf = lcdc::standard_form_subfield(s);
  CHECK(sf.k == 2);
  CHECK(sf.B.rows() == 0);
}

TEST_CASE("ell = 1 codes have no F_q-linear part") {
  SubfieldLinearCode c(Matrix::parse(lcdc::gf9(), {{"1", "w", "2"}}));
  lcdc::StandardFormSubfield sf = lcdc::standard_form_subfield(c);
  CHECK(sf.k == 0);
  CHECK(sf.B.rows() == 1);
  CHECK(sf.code.generator() == c.generator());
}

TEST_CASE("delta_b is alternating and singular for an odd row count") {
  std::mt19937_64 rng(446);
  const FieldSpec& f = lcdc::gf9();
  for (int trial = 0; trial < 10; ++trial) {
    Matrix b = bridge::random_matrix(f, 3, 4, rng);
    Matrix d = lcdc::delta_b(b);
    CHECK(d.transpose() == d.scaled(-f.one()));
    for (size_t i = 0; i < 3; ++i) CHECK(d.at(i, i).is_zero());
    CHECK(lcdc::rank(d) < 3);
  }
}

TEST_CASE("block construction on the self-orthogonal B fixture") {
  // B conj(B)^T vanishes here, so Delta_B = 0 and the construction
  // hypothesis fails; the faithful behavior is to refuse.
  SubfieldLinearCode c = fixture_f4_block();
  CHECK(lcdc::min_distance(c) == 2);  // 64 codewords
  lcdc::StandardFormSubfield sf = lcdc::standard_form_subfield(c);
  CHECK(lcdc::delta_b(sf.B).is_zero());
  CHECK(thrown([&] { lcdc::construct_trace_hermitian_even(sf); }) ==
        errc::b_block_singular);

  // Assembling the blocks mechanically anyway gives a code that is NOT
  // trace-Hermitian LCD: its hull is 2-dimensional over F_2.
  const FieldSpec& f = lcdc::gf4();
  Matrix gp = Matrix::parse(f, {{"1", "0", "w", "0", "w", "0", "0", "0"},
                                {"0", "1", "0", "w", "0", "w", "0", "0"},
                                {"w", "0", "w^2", "0", "w^2", "0", "0", "0"},
                                {"0", "w", "0", "w^2", "0", "w^2", "0", "0"},
                                {"0", "0", "1", "w", "1", "w", "1", "w"},
                                {"0", "0", "w^2", "1", "w^2", "1", "w^2", "1"}});
  SubfieldLinearCode cp(gp);
  CHECK(cp.n() == 8);
  CHECK(cp.ell() == 6);
  auto res = lcdc::is_trace_hermitian_lcd(cp);
  CHECK_FALSE(res.lcd);
  CHECK(lcdc::rank(res.delta) == 4);
  // The three-block shape still holds, with a vanishing B block.
  CHECK(res.delta == lcdc::expected_delta_prime(sf));
  CHECK(lcdc::subfield_rank(lcdc::hull_oracle_trace_hermitian(cp)) == 2);
  CHECK(oracle::trherm_hull_size(oracle::f4, bridge::rows_to_oracle(gp),
                                 oracle::f4.one()) == 4);
  CHECK(lcdc::min_distance(cp) == 3);  // 64 codewords
}

TEST_CASE("block construction with invertible Delta_B, characteristic 2") {
  std::mt19937_64 rng(447);
  const FieldSpec& f = lcdc::gf4();
  for (int trial = 0; trial < 15; ++trial) {
    lcdc::StandardFormSubfield sf = bridge::random_block_input(f, 4, 1, 2, rng);
    SubfieldLinearCode out = lcdc::construct_trace_hermitian_even(sf);
    CHECK(out.n() == 3 * sf.code.n() - 2 * sf.k);
    CHECK(out.ell() == sf.code.ell());
    auto res = lcdc::is_trace_hermitian_lcd(out);
    CHECK(res.lcd);
    CHECK(res.delta == lcdc::expected_delta_prime(sf));
    CHECK(lcdc::min_distance(out) >= lcdc::min_distance(sf.code));
  }
}

TEST_CASE("block construction with invertible Delta_B, r = 1 (mod 4)") {
  std::mt19937_64 rng(448);
  const FieldSpec& f = lcdc::gf25();
  for (int trial = 0; trial < 6; ++trial) {
    lcdc::StandardFormSubfield sf = bridge::random_block_input(f, 3, 1, 2, rng);
    SubfieldLinearCode out = lcdc::construct_trace_hermitian_odd(sf);
    CHECK(out.n() == 3 * sf.code.n() - 2 * sf.k);
    CHECK(out.ell() == sf.code.ell());
    auto res = lcdc::is_trace_hermitian_lcd(out);
    CHECK(res.lcd);
    CHECK(res.delta == lcdc::expected_delta_prime(sf));
    CHECK(lcdc::min_distance(out) >= lcdc::min_distance(sf.code));
  }
}

TEST_CASE("block construction guards") {
  std::mt19937_64 rng(449);
  lcdc::StandardFormSubfield sf9 = bridge::random_block_input(lcdc::gf9(), 3, 1, 0, rng);
  CHECK(thrown([&] { lcdc::construct_trace_hermitian_even(sf9); }) ==
        errc::wrong_characteristic);
  CHECK(thrown([&] { lcdc::construct_trace_hermitian_odd(sf9); }) ==
        errc::no_square_root_of_minus_one);

  // An odd number of B rows makes Delta_B alternating of odd size: singular.
  const FieldSpec& f = lcdc::gf4();
  Matrix g = Matrix::parse(f, {{"1", "w", "0"}, {"w", "w^2", "0"}, {"0", "1", "w"}});
  lcdc::StandardFormSubfield sf = lcdc::standard_form_subfield(SubfieldLinearCode(g));
  REQUIRE(sf.B.rows() == 1);
  CHECK(thrown([&] { lcdc::construct_trace_hermitian_even(sf); }) ==
        errc::b_block_singular);
}
