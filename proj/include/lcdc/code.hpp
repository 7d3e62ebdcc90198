#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lcdc/error.hpp"
#include "lcdc/field.hpp"
#include "lcdc/matrix.hpp"

namespace lcdc {

using Vec = std::vector<Elem>;

inline Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(errc::length_mismatch, "vector length mismatch");
  Vec out(a.size(), a.empty() ? Elem() : a[0]);
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(errc::length_mismatch, "vector length mismatch");
  Vec out(a.size(), a.empty() ? Elem() : a[0]);
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Vec vec_scale(const Elem& c, const Vec& v) {
  Vec out(v);
  for (Elem& x : out) x = c * x;
  return out;
}

inline bool vec_is_zero(const Vec& v) {
  for (const Elem& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Matrix row_matrix(const FieldSpec& f, const Vec& v) {
  Matrix m(f, 1, v.size());
  m.set_row(0, v);
  return m;
}

inline size_t hamming_weight(const Vec& v) {
  size_t w = 0;
  for (const Elem& x : v)
    if (!x.is_zero()) ++w;
  return w;
}

inline size_t hamming_distance(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) fail(errc::length_mismatch, "vector length mismatch");
  size_t d = 0;
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) ++d;
  return d;
}

enum class Inner { euclidean, hermitian, trace_hermitian };

inline const char* inner_name(Inner k) {
  switch (k) {
    case Inner::euclidean: return "euclidean";
    case Inner::hermitian: return "hermitian";
    case Inner::trace_hermitian: return "trace-hermitian";
  }
  return "?";
}

/// Inner product selector. The trace-Hermitian form over odd q carries the
/// scaling element alpha with conj(alpha) = -alpha; over even q no alpha is
/// involved. The dual and the projection are independent of which valid
/// alpha is chosen (any two differ by a factor in F_r*).
struct InnerProduct {
  Inner kind;
  std::optional<Elem> alpha;

  static InnerProduct euclidean() { return {Inner::euclidean, std::nullopt}; }
  static InnerProduct hermitian() { return {Inner::hermitian, std::nullopt}; }

  static InnerProduct trace_hermitian(const FieldSpec& f) {
    if (f.p() == 2) return {Inner::trace_hermitian, std::nullopt};
    return {Inner::trace_hermitian, find_alpha(f)};
  }

  static InnerProduct trace_hermitian_alpha(const Elem& alpha) {
    if (alpha.is_zero() || alpha.conj() != -alpha)
      fail(errc::missing_alpha,
           "alpha must be nonzero and satisfy conj(alpha) = -alpha");
    return {Inner::trace_hermitian, alpha};
  }
};

inline Elem inner_product(const Vec& u, const Vec& v, const InnerProduct& ip) {
  if (u.size() != v.size()) fail(errc::length_mismatch, "vector length mismatch");
  if (u.empty()) throw std::invalid_argument("inner product of empty vectors");
  const FieldSpec& f = u[0].field();
  Elem acc = f.zero();
  switch (ip.kind) {
    case Inner::euclidean:
      for (size_t i = 0; i < u.size(); ++i) acc = acc + u[i] * v[i];
      return acc;
    case Inner::hermitian:
      for (size_t i = 0; i < u.size(); ++i) acc = acc + u[i] * v[i].conj();
      return acc;
    case Inner::trace_hermitian: {
      for (size_t i = 0; i < u.size(); ++i) acc = acc + u[i] * v[i].conj();
      if (f.p() == 2) return acc.trace();
      if (!ip.alpha)
        fail(errc::missing_alpha, "trace-hermitian over odd q needs alpha");
      return (*ip.alpha * acc).trace();
    }
  }
  return acc;
}

/// An [n, k]_q F_q-linear code, held as a full-rank generator matrix.
class LinearCode {
 public:
  explicit LinearCode(Matrix g) : g_(std::move(g)) {
    if (rank(g_) != g_.rows())
      fail(errc::singular, "generator matrix is rank-deficient over F_q");
  }

  const FieldSpec& field() const { return g_.field(); }
  const Matrix& generator() const { return g_; }
  size_t n() const { return g_.cols(); }
  size_t k() const { return g_.rows(); }

 private:
  Matrix g_;
};

/// An (n, r^ell)_q F_r-linear code: the generator rows are F_r-independent
/// but the codeword set need not be closed under F_q-scaling.
class SubfieldLinearCode {
 public:
  explicit SubfieldLinearCode(Matrix g) : g_(std::move(g)) {
    if (subfield_rank(g_) != g_.rows())
      fail(errc::singular, "generator rows are F_r-dependent");
  }

  const FieldSpec& field() const { return g_.field(); }
  const Matrix& generator() const { return g_; }
  size_t n() const { return g_.cols(); }
  size_t ell() const { return g_.rows(); }

 private:
  Matrix g_;
};

/// Row-reduce and drop dependent rows, producing the induced code.
inline LinearCode canonicalize_linear(const Matrix& g) {
  Echelon e = echelon(g);
  Matrix basis(g.field(), e.rank, g.cols());
  for (size_t i = 0; i < e.rank; ++i) basis.set_row(i, e.rref.row(i));
  return LinearCode(std::move(basis));
}

inline SubfieldLinearCode canonicalize_subfield(const Matrix& g) {
  Echelon e = echelon(expand_to_base(g));
  Matrix basis(g.field(), e.rank, 2 * g.cols());
  for (size_t i = 0; i < e.rank; ++i) basis.set_row(i, e.rref.row(i));
  return SubfieldLinearCode(contract_from_base(basis));
}

/// Reinterpret an F_q-linear code as F_r-linear with rows [G; w*G], ell = 2k.
inline SubfieldLinearCode to_subfield_linear(const LinearCode& c) {
  return SubfieldLinearCode(
      vcat(c.generator(), c.generator().scaled(c.field().omega())));
}

/// Default guard for codeword enumeration.
inline constexpr uint64_t kDefaultEnumerationLimit = uint64_t(1) << 24;

namespace detail {

inline uint64_t checked_power(uint64_t base, size_t exp, uint64_t limit,
                              const char* what) {
  uint64_t size = 1;
  for (size_t i = 0; i < exp; ++i) {
    if (size > limit / base)
      fail(errc::too_large, std::string(what) + " exceeds the enumeration limit");
    size *= base;
  }
  if (size > limit)
    fail(errc::too_large, std::string(what) + " exceeds the enumeration limit");
  return size;
}

// Enumerates all scalar combinations sum_i m_i * row_i with m_i drawn from
// `scalars`, in canonical message order: the coefficient of row 0 varies
// fastest, and within a digit scalars appear in the given (canonical) order.
template <typename Fn>
void for_each_combination(const Matrix& g, const std::vector<Elem>& scalars,
                          uint64_t limit, Fn&& fn) {
  const FieldSpec& f = g.field();
  uint64_t total = checked_power(scalars.size(), g.rows(), limit, "codeword count");
  std::vector<size_t> digit(g.rows(), 0);
  Vec word(g.cols(), f.zero());
  for (uint64_t m = 0;; ++m) {
    fn(const_cast<const Vec&>(word));
    if (m + 1 == total) break;
    // Mixed-radix increment, updating the word by scaled generator rows.
    for (size_t i = 0; i < g.rows(); ++i) {
      size_t next = digit[i] + 1;
      if (next < scalars.size()) {
        Elem delta = scalars[next] - scalars[digit[i]];
        digit[i] = next;
        if (!delta.is_zero())
          for (size_t j = 0; j < g.cols(); ++j)
            word[j] = word[j] + delta * g.at(i, j);
        break;
      }
      Elem delta = scalars[0] - scalars[digit[i]];
      digit[i] = 0;
      if (!delta.is_zero())
        for (size_t j = 0; j < g.cols(); ++j)
          word[j] = word[j] + delta * g.at(i, j);
    }
  }
}

}  // namespace detail

inline uint64_t code_size(const LinearCode& c,
                          uint64_t limit = kDefaultEnumerationLimit) {
  return detail::checked_power(c.field().q(), c.k(), limit, "codeword count");
}

inline uint64_t code_size(const SubfieldLinearCode& c,
                          uint64_t limit = kDefaultEnumerationLimit) {
  return detail::checked_power(c.field().r(), c.ell(), limit, "codeword count");
}

template <typename Fn>
void for_each_codeword(const LinearCode& c, uint64_t limit, Fn&& fn) {
  std::vector<Elem> scalars;
  scalars.reserve(size_t(c.field().q()));
  for (uint64_t i = 0; i < c.field().q(); ++i) scalars.push_back(c.field().element(i));
  detail::for_each_combination(c.generator(), scalars, limit, std::forward<Fn>(fn));
}

template <typename Fn>
void for_each_codeword(const SubfieldLinearCode& c, uint64_t limit, Fn&& fn) {
  detail::for_each_combination(c.generator(), c.field().subfield_elements(), limit,
                               std::forward<Fn>(fn));
}

template <typename Code>
std::vector<Vec> enumerate_codewords(const Code& c,
                                     uint64_t limit = kDefaultEnumerationLimit) {
  std::vector<Vec> out;
  out.reserve(size_t(code_size(c, limit)));
  for_each_codeword(c, limit, [&](const Vec& w) { out.push_back(w); });
  return out;
}

/// Exact minimum distance as the minimum nonzero codeword weight; valid
/// because both code categories are additive groups, so d(u, v) = wt(u - v)
/// ranges over nonzero codeword weights.
template <typename Code>
size_t min_distance(const Code& c, uint64_t limit = kDefaultEnumerationLimit) {
  if (code_size(c, limit) < 2)
    fail(errc::trivial_code, "minimum distance of the zero code");
  size_t best = c.n() + 1;
  bool first = true;
  for_each_codeword(c, limit, [&](const Vec& w) {
    if (first) {  // canonical order starts at the zero word
      first = false;
      return;
    }
    size_t wt = hamming_weight(w);
    if (wt != 0 && wt < best) best = wt;
  });
  return best;
}

/// Pairwise-distance oracle for tiny codes; agrees with min_distance.
template <typename Code>
size_t min_distance_pairwise(const Code& c, uint64_t limit = 4096) {
  if (code_size(c, limit) < 2)
    fail(errc::trivial_code, "minimum distance of the zero code");
  std::vector<Vec> words = enumerate_codewords(c, limit);
  size_t best = c.n() + 1;
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = i + 1; j < words.size(); ++j)
      best = std::min(best, hamming_distance(words[i], words[j]));
  return best;
}

/// Euclidean or Hermitian dual of an F_q-linear code, dimension n - k.
inline LinearCode dual(const LinearCode& c, Inner kind) {
  if (kind == Inner::trace_hermitian)
    fail(errc::category_mismatch,
         "trace-hermitian dual is F_r-linear; use dual_trace_hermitian");
  const Matrix& g = c.generator();
  Matrix m = (kind == Inner::euclidean) ? g.transpose() : conj_matrix(g).transpose();
  return LinearCode(left_nullspace(m));
}

/// Trace-Hermitian dual of an F_r-linear code: the solution space over F_r of
/// <v, g_i>_TrH = 0 for all generator rows, of F_r-dimension 2n - ell. The
/// form is F_r-bilinear, so the conditions are F_r-linear in the coordinates
/// of v in the basis {e_j, w e_j}.
inline SubfieldLinearCode dual_trace_hermitian(const SubfieldLinearCode& c,
                                               const InnerProduct& ip) {
  if (ip.kind != Inner::trace_hermitian)
    fail(errc::category_mismatch, "dual_trace_hermitian needs a trace-hermitian kind");
  const FieldSpec& f = c.field();
  const Matrix& g = c.generator();
  size_t n = c.n(), ell = c.ell();
  Elem w = f.omega();
  Matrix m(f, 2 * n, ell);
  for (size_t i = 0; i < ell; ++i)
    for (size_t j = 0; j < n; ++j) {
      Elem base = g.at(i, j).conj();  // <e_j, g_i>_H
      Elem h1 = base, h2 = w * base;  // and <w e_j, g_i>_H
      if (f.p() == 2) {
        m.at(2 * j, i) = h1.trace();
        m.at(2 * j + 1, i) = h2.trace();
      } else {
        if (!ip.alpha)
          fail(errc::missing_alpha, "trace-hermitian over odd q needs alpha");
        m.at(2 * j, i) = (*ip.alpha * h1).trace();
        m.at(2 * j + 1, i) = (*ip.alpha * h2).trace();
      }
    }
  Matrix kernel = left_nullspace(m);  // rows are F_r coordinate vectors
  return SubfieldLinearCode(contract_from_base(kernel));
}

inline SubfieldLinearCode dual_trace_hermitian(const SubfieldLinearCode& c) {
  return dual_trace_hermitian(c, InnerProduct::trace_hermitian(c.field()));
}

/// F_q-linear codes enter the trace-Hermitian world via rows [G; w*G].
inline SubfieldLinearCode dual_trace_hermitian(const LinearCode& c) {
  return dual_trace_hermitian(to_subfield_linear(c));
}

/// Hull C ∩ C^⊥ by exact linear algebra: stack the two generators S = [G; H]
/// and read the intersection off the left kernel of S. A kernel row (x | y)
/// means xG = -yH lies in both row spaces, and (x, y) -> xG is injective
/// because both generators have full rank, so kernel bases map to hull bases.
inline Matrix hull_oracle(const LinearCode& c, Inner kind) {
  const Matrix& g = c.generator();
  Matrix h = dual(c, kind).generator();
  Matrix kernel = left_nullspace(vcat(g, h));
  Matrix x(c.field(), kernel.rows(), c.k());
  for (size_t i = 0; i < kernel.rows(); ++i)
    for (size_t j = 0; j < c.k(); ++j) x.at(i, j) = kernel.at(i, j);
  return x * g;
}

/// Trace-Hermitian hull over F_r: same stacked-kernel idea with F_r scalars,
/// obtained by running the elimination on the {1, w}-expansion.
inline Matrix hull_oracle_trace_hermitian(const SubfieldLinearCode& c,
                                          const InnerProduct& ip) {
  const Matrix& g = c.generator();
  Matrix h = dual_trace_hermitian(c, ip).generator();
  Matrix kernel = left_nullspace(expand_to_base(vcat(g, h)));
  Matrix x(c.field(), kernel.rows(), c.ell());
  for (size_t i = 0; i < kernel.rows(); ++i)
    for (size_t j = 0; j < c.ell(); ++j) x.at(i, j) = kernel.at(i, j);
  return x * g;
}

inline Matrix hull_oracle_trace_hermitian(const SubfieldLinearCode& c) {
  return hull_oracle_trace_hermitian(c, InnerProduct::trace_hermitian(c.field()));
}

namespace detail {

template <typename RankFn>
Matrix greedy_basis(const FieldSpec& f, const std::vector<Vec>& members, size_t n,
                    RankFn&& rank_of) {
  Matrix basis(f, 0, n);
  size_t current = 0;
  for (const Vec& v : members) {
    if (vec_is_zero(v)) continue;
    Matrix trial = vcat(basis, row_matrix(f, v));
    size_t r = rank_of(trial);
    if (r > current) {
      basis = std::move(trial);
      current = r;
    }
  }
  return basis;
}

}  // namespace detail

/// Brute-force hull: enumerate every codeword and keep those orthogonal to
/// all generator rows under the given inner product. Independent of the
/// dual/kernel machinery; guarded by the enumeration limit.
inline Matrix hull_enumeration(const LinearCode& c, const InnerProduct& ip,
                               uint64_t limit = kDefaultEnumerationLimit) {
  std::vector<Vec> members;
  const Matrix& g = c.generator();
  for_each_codeword(c, limit, [&](const Vec& word) {
    for (size_t i = 0; i < g.rows(); ++i)
      if (!inner_product(word, g.row(i), ip).is_zero()) return;
    members.push_back(word);
  });
  return detail::greedy_basis(c.field(), members, c.n(),
                              [](const Matrix& m) { return rank(m); });
}

inline Matrix hull_enumeration(const SubfieldLinearCode& c, const InnerProduct& ip,
                               uint64_t limit = kDefaultEnumerationLimit) {
  std::vector<Vec> members;
  const Matrix& g = c.generator();
  for_each_codeword(c, limit, [&](const Vec& word) {
    for (size_t i = 0; i < g.rows(); ++i)
      if (!inner_product(word, g.row(i), ip).is_zero()) return;
    members.push_back(word);
  });
  return detail::greedy_basis(c.field(), members, c.n(),
                              [](const Matrix& m) { return subfield_rank(m); });
}

inline bool contains(const LinearCode& c, const Vec& v) {
  if (v.size() != c.n()) fail(errc::length_mismatch, "vector length mismatch");
  return rank(vcat(c.generator(), row_matrix(c.field(), v))) == c.k();
}

inline bool contains(const SubfieldLinearCode& c, const Vec& v) {
  if (v.size() != c.n()) fail(errc::length_mismatch, "vector length mismatch");
  return subfield_rank(vcat(c.generator(), row_matrix(c.field(), v))) == c.ell();
}

}  // namespace lcdc
