#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lcdc/code.hpp"
#include "lcdc/error.hpp"
#include "lcdc/field.hpp"
#include "lcdc/matrix.hpp"

namespace lcdc {

/// Equivalent code with generator [I_k | P]. column_permutation[j] is the
/// input column now sitting at position j; row operations plus a column
/// permutation preserve length, dimension, and minimum distance.
struct StandardFormLinear {
  LinearCode code;
  Matrix P;  // k x (n-k)
  std::vector<size_t> column_permutation;
};

namespace detail {

inline std::vector<size_t> pivots_first_permutation(const std::vector<size_t>& pivots,
                                                    size_t cols) {
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<size_t> perm;
  perm.reserve(cols);
  for (size_t c : pivots) perm.push_back(c);
  for (size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) perm.push_back(c);
  return perm;
}

inline Matrix permute_columns(const Matrix& m, const std::vector<size_t>& perm) {
  Matrix out(m.field(), m.rows(), m.cols());
  for (size_t j = 0; j < perm.size(); ++j)
    for (size_t i = 0; i < m.rows(); ++i) out.at(i, j) = m.at(i, perm[j]);
  return out;
}

}  // namespace detail

inline StandardFormLinear standard_form_linear(const LinearCode& c) {
  Echelon e = echelon(c.generator());
  std::vector<size_t> perm = detail::pivots_first_permutation(e.pivots, c.n());
  Matrix g = detail::permute_columns(e.rref, perm);
  Matrix p(c.field(), c.k(), c.n() - c.k());
  for (size_t i = 0; i < c.k(); ++i)
    for (size_t j = 0; j < p.cols(); ++j) p.at(i, j) = g.at(i, c.k() + j);
  return StandardFormLinear{LinearCode(std::move(g)), std::move(p), std::move(perm)};
}

/// Equivalent F_r-linear code with generator in the block form
/// [I_k A; w I_k w A; 0 B]. Transformations are F_r-row operations and a
/// column permutation, so n, ell, and the minimum distance are preserved.
struct StandardFormSubfield {
  SubfieldLinearCode code;
  size_t k;
  Matrix A;  // k x (n-k)
  Matrix B;  // (ell-2k) x (n-k)
  std::vector<size_t> column_permutation;
  bool input_was_in_block_form;  // true: input returned unchanged
};

namespace detail {

// Largest k >= 1 for which g already has the exact block shape; 0 if none.
// An input already in block form is returned unchanged (idempotence), even
// when row mixing could expose a larger F_q-linear part.
inline size_t detect_block_form(const Matrix& g) {
  const FieldSpec& f = g.field();
  Elem w = f.omega();
  size_t ell = g.rows(), n = g.cols();
  size_t max_k = std::min(ell / 2, n);
  for (size_t k = max_k; k >= 1; --k) {
    bool ok = true;
    for (size_t i = 0; i < k && ok; ++i)
      for (size_t j = 0; j < k && ok; ++j) {
        Elem want = (i == j) ? f.one() : f.zero();
        if (g.at(i, j) != want) ok = false;
      }
    for (size_t i = 0; i < k && ok; ++i)
      for (size_t j = 0; j < n && ok; ++j)
        if (g.at(k + i, j) != w * g.at(i, j)) ok = false;
    for (size_t i = 2 * k; i < ell && ok; ++i)
      for (size_t j = 0; j < k && ok; ++j)
        if (!g.at(i, j).is_zero()) ok = false;
    if (ok) return k;
  }
  return 0;
}

}  // namespace detail

inline StandardFormSubfield standard_form_subfield(const SubfieldLinearCode& c) {
  const FieldSpec& f = c.field();
  const Matrix& g = c.generator();
  size_t ell = c.ell(), n = c.n();
  Elem w = f.omega();

  std::vector<size_t> identity_perm(n);
  for (size_t j = 0; j < n; ++j) identity_perm[j] = j;

  if (size_t k = detail::detect_block_form(g); k > 0) {
    Matrix a(f, k, n - k), b(f, ell - 2 * k, n - k);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < n - k; ++j) a.at(i, j) = g.at(i, k + j);
    for (size_t i = 0; i < ell - 2 * k; ++i)
      for (size_t j = 0; j < n - k; ++j) b.at(i, j) = g.at(2 * k + i, k + j);
    return StandardFormSubfield{c, k, std::move(a), std::move(b),
                                std::move(identity_perm), true};
  }

  // W = {v in C : w v in C} is the largest F_q-linear subspace of C: a kernel
  // row (x | y) over F_r of [wG; -G] encodes w(xG) = yG, and x -> xG is
  // injective. dim_Fr W = 2k.
  Matrix kernel = left_nullspace(expand_to_base(vcat(g.scaled(w), g.scaled(-f.one()))));
  Matrix x(f, kernel.rows(), ell);
  for (size_t i = 0; i < kernel.rows(); ++i)
    for (size_t j = 0; j < ell; ++j) x.at(i, j) = kernel.at(i, j);
  Matrix wbasis_fr = x * g;

  // Greedy F_q-basis of W from its F_r-basis rows.
  Matrix wbasis(f, 0, n);
  for (size_t i = 0; i < wbasis_fr.rows(); ++i) {
    Matrix trial = vcat(wbasis, row_matrix(f, wbasis_fr.row(i)));
    if (rank(trial) > wbasis.rows()) wbasis = std::move(trial);
  }
  size_t k = wbasis.rows();

  Echelon we = echelon(wbasis);
  std::vector<size_t> perm = detail::pivots_first_permutation(we.pivots, n);
  Matrix r = we.rref;  // rows lie in W; unit columns at the pivots

  // Extend {r rows, w r rows} by original generator rows to an F_r-basis of C.
  Matrix span = vcat(r, r.scaled(w));
  std::vector<Vec> extras;
  for (size_t i = 0; i < ell && extras.size() < ell - 2 * k; ++i) {
    Matrix trial = vcat(span, row_matrix(f, g.row(i)));
    if (subfield_rank(trial) > span.rows()) {
      extras.push_back(g.row(i));
      span = std::move(trial);
    }
  }

  // Clear the pivot entries of each extra row with F_r-combinations of the
  // r rows and their w-multiples; the residuals stay inside C.
  for (Vec& b : extras) {
    for (size_t t = 0; t < k; ++t) {
      auto [ca, cb] = omega_coordinates(b[we.pivots[t]]);
      Vec adjust = vec_add(vec_scale(ca, r.row(t)), vec_scale(cb * w, r.row(t)));
      b = vec_sub(b, adjust);
    }
  }

  Matrix top = detail::permute_columns(r, perm);
  Matrix bot(f, extras.size(), n);
  for (size_t i = 0; i < extras.size(); ++i) bot.set_row(i, extras[i]);
  bot = detail::permute_columns(bot, perm);

  Matrix gnew = vcat(vcat(top, top.scaled(w)), bot);
  Matrix a(f, k, n - k), bmat(f, extras.size(), n - k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < n - k; ++j) a.at(i, j) = top.at(i, k + j);
  for (size_t i = 0; i < extras.size(); ++i)
    for (size_t j = 0; j < n - k; ++j) bmat.at(i, j) = bot.at(i, k + j);
  return StandardFormSubfield{SubfieldLinearCode(std::move(gnew)), k, std::move(a),
                              std::move(bmat), std::move(perm), false};
}

/// Hypothesis matrix of the block constructions:
/// Delta_B = B conj(B)^T - conj(B) B^T. Alternating, so it can only be
/// invertible when B has an even number of rows.
inline Matrix delta_b(const Matrix& b) {
  Matrix bbar = conj_matrix(b);
  return b * bbar.transpose() - bbar * b.transpose();
}

/// [2n-k, k] Hermitian LCD code from [I_k | P] over even q: G' = [I_k P P].
/// The Gram identity G' conj(G')^T = I_k holds exactly.
inline LinearCode construct_hermitian_even(const StandardFormLinear& sf) {
  const FieldSpec& f = sf.code.field();
  if (f.p() != 2)
    fail(errc::wrong_characteristic, "construction needs characteristic 2");
  return LinearCode(hcat(sf.code.generator(), sf.P));
}

/// [2n-k, k] Hermitian LCD code from [I_k | P] with r = 1 (mod 4):
/// G' = [I_k P lambda P] with lambda^2 = -1.
inline LinearCode construct_hermitian_odd(const StandardFormLinear& sf) {
  const FieldSpec& f = sf.code.field();
  Elem lambda = sqrt_minus_one(f);
  return LinearCode(hcat(sf.code.generator(), sf.P.scaled(lambda)));
}

namespace detail {

inline void require_delta_b_invertible(const Matrix& b) {
  Matrix d = delta_b(b);
  if (rank(d) != d.rows())
    fail(errc::b_block_singular,
         "B conj(B)^T - conj(B) B^T is singular; the construction hypothesis fails");
}

inline SubfieldLinearCode assemble_block_construction(const StandardFormSubfield& sf,
                                                      const Elem& lambda) {
  const FieldSpec& f = sf.code.field();
  size_t k = sf.k;
  size_t m = sf.B.rows();
  size_t nk = sf.A.cols();
  Elem w = f.omega();
  Matrix zero_k(f, k, nk), zero_m(f, m, k);
  Matrix top = hcat(hcat(hcat(Matrix::identity(f, k), sf.A), sf.A.scaled(lambda)),
                    zero_k);
  Matrix bot = hcat(hcat(hcat(zero_m, sf.B), sf.B.scaled(lambda)), sf.B);
  return SubfieldLinearCode(vcat(vcat(top, top.scaled(w)), bot));
}

}  // namespace detail

/// (3n-2k, r^ell) trace-Hermitian LCD code over even q:
/// G' = [I_k A A 0; w I_k w A w A 0; 0 B B B].
/// Requires Delta_B invertible and Tr(w) != 0; the latter always holds in
/// characteristic 2 because w never lies in F_r so w^r != w.
inline SubfieldLinearCode construct_trace_hermitian_even(const StandardFormSubfield& sf) {
  const FieldSpec& f = sf.code.field();
  if (f.p() != 2)
    fail(errc::wrong_characteristic, "construction needs characteristic 2");
  if (f.omega().trace().is_zero())
    fail(errc::omega_trace_zero, "Tr(w) = 0 breaks the block invertibility");
  detail::require_delta_b_invertible(sf.B);
  return detail::assemble_block_construction(sf, f.one());
}

/// (3n-2k, r^ell) trace-Hermitian LCD code with r = 1 (mod 4):
/// G' = [I_k A lambda A 0; w I_k w A lambda w A 0; 0 B lambda B B].
inline SubfieldLinearCode construct_trace_hermitian_odd(const StandardFormSubfield& sf) {
  const FieldSpec& f = sf.code.field();
  Elem lambda = sqrt_minus_one(f);
  detail::require_delta_b_invertible(sf.B);
  return detail::assemble_block_construction(sf, lambda);
}

/// Exact block structure of Delta' = G' conj(G')^T - conj(G') G'^T for both
/// block constructions, with t = conj(w) - w:
///   [[0, t I_k, 0], [-t I_k, 0, 0], [0, 0, Delta_B]].
/// In characteristic 2 this coincides with t = conj(w) + w = Tr(w).
inline Matrix expected_delta_prime(const StandardFormSubfield& sf) {
  const FieldSpec& f = sf.code.field();
  size_t k = sf.k, m = sf.B.rows();
  Elem w = f.omega();
  Elem t = w.conj() - w;
  Matrix out(f, 2 * k + m, 2 * k + m);
  for (size_t i = 0; i < k; ++i) {
    out.at(i, k + i) = t;
    out.at(k + i, i) = -t;
  }
  Matrix db = delta_b(sf.B);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) out.at(2 * k + i, 2 * k + j) = db.at(i, j);
  return out;
}

}  // namespace lcdc
