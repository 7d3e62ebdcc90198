#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "lcdc/error.hpp"
#include "lcdc/field.hpp"

namespace lcdc {

/// Dense matrix over F_q with exact arithmetic. Row-vector convention
/// throughout: codewords are u*G and kernels are left kernels {u : uM = 0}.
class Matrix {
 public:
  Matrix(const FieldSpec& f, size_t rows, size_t cols)
      : f_(&f), rows_(rows), cols_(cols), e_(rows * cols, f.zero()) {}

  static Matrix identity(const FieldSpec& f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }

  /// Build from element tokens, e.g. {{"1","0","w"},{"0","1","w^2"}}.
  static Matrix parse(const FieldSpec& f,
                      std::initializer_list<std::initializer_list<const char*>> rows) {
    size_t r = rows.size();
    size_t c = r ? rows.begin()->size() : 0;
    Matrix m(f, r, c);
    size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) fail(errc::parse_error, "ragged matrix literal");
      size_t j = 0;
      for (const char* tok : row) m.at(i, j++) = parse_element(f, tok);
      ++i;
    }
    return m;
  }

  const FieldSpec& field() const { return *f_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Elem& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const Elem& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  std::vector<Elem> row(size_t i) const {
    return std::vector<Elem>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
  }

  void set_row(size_t i, const std::vector<Elem>& v) {
    for (size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
  }

  bool operator==(const Matrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix m(*f_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix m(*f_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
    return m;
  }

  Matrix operator*(const Matrix& o) const {
    if (f_ != o.f_) throw std::invalid_argument("matrices over different fields");
    if (cols_ != o.rows_)
      fail(errc::length_mismatch, "matrix product shape mismatch");
    Matrix m(*f_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t t = 0; t < cols_; ++t) {
        const Elem& a = at(i, t);
        if (a.is_zero()) continue;
        for (size_t j = 0; j < o.cols_; ++j)
          m.at(i, j) = m.at(i, j) + a * o.at(t, j);
      }
    return m;
  }

  Matrix scaled(const Elem& c) const {
    Matrix m(*f_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = c * e_[i];
    return m;
  }

  Matrix transpose() const {
    Matrix m(*f_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  bool is_zero() const {
    for (const Elem& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (f_ != o.f_) throw std::invalid_argument("matrices over different fields");
    if (rows_ != o.rows_ || cols_ != o.cols_)
      fail(errc::length_mismatch, "matrix shape mismatch");
  }

  const FieldSpec* f_;
  size_t rows_, cols_;
  std::vector<Elem> e_;
};

inline Matrix conj_matrix(const Matrix& m) {
  Matrix out(m.field(), m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).conj();
  return out;
}

inline Matrix trace_matrix(const Matrix& m) {
  Matrix out(m.field(), m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j).trace();
  return out;
}

inline Matrix hcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) fail(errc::length_mismatch, "hcat row mismatch");
  Matrix m(a.field(), a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (size_t j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

inline Matrix vcat(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) fail(errc::length_mismatch, "vcat column mismatch");
  Matrix m(a.field(), a.rows() + b.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

/// Row echelon data from Gauss-Jordan elimination with first-nonzero pivoting.
struct Echelon {
  Matrix rref;                 // reduced row echelon form
  std::vector<size_t> pivots;  // pivot column per pivot row, increasing
  size_t rank;
  Elem det;                    // determinant of the leading square part; the
                               // field zero when rank-deficient (square input)
};

inline Echelon echelon(const Matrix& m) {
  const FieldSpec& f = m.field();
  Matrix a = m;
  std::vector<size_t> pivots;
  Elem det = f.one();
  size_t rank = 0;
  for (size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    size_t piv = rank;
    while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != rank) {
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(rank, j));
      det = -det;
    }
    Elem lead = a.at(rank, col);
    det = det * lead;
    Elem inv = lead.inv();
    for (size_t j = col; j < a.cols(); ++j) a.at(rank, j) = inv * a.at(rank, j);
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == rank || a.at(i, col).is_zero()) continue;
      Elem factor = a.at(i, col);
      for (size_t j = col; j < a.cols(); ++j)
        a.at(i, j) = a.at(i, j) - factor * a.at(rank, j);
    }
    pivots.push_back(col);
    ++rank;
  }
  if (m.rows() == m.cols() && rank < m.rows()) det = f.zero();
  return Echelon{std::move(a), std::move(pivots), rank, det};
}

inline size_t rank(const Matrix& m) { return echelon(m).rank; }

inline Elem det(const Matrix& m) {
  if (m.rows() != m.cols()) fail(errc::non_square, "determinant of a non-square matrix");
  return echelon(m).det;
}

inline Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) fail(errc::non_square, "inverse of a non-square matrix");
  size_t n = m.rows();
  Echelon e = echelon(hcat(m, Matrix::identity(m.field(), n)));
  if (e.rank < n || (n > 0 && e.pivots[n - 1] >= n))
    fail(errc::singular, "matrix is singular");
  Matrix inv(m.field(), n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = e.rref.at(i, n + j);
  return inv;
}

/// Basis of the left kernel {u : uM = 0} as rows of a (rows-rank) x rows
/// matrix. Rows are F_q-independent; with all entries of M in F_r the
/// elimination never leaves F_r, so the basis is F_r-valued as well.
inline Matrix left_nullspace(const Matrix& m) {
  const FieldSpec& f = m.field();
  Matrix t = m.transpose();  // kernel vectors x of t (as columns): t x = 0
  Echelon e = echelon(t);
  size_t n = t.cols();
  std::vector<bool> is_pivot(n, false);
  for (size_t c : e.pivots) is_pivot[c] = true;
  Matrix basis(f, n - e.rank, n);
  size_t bi = 0;
  for (size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis.at(bi, free) = f.one();
    for (size_t pr = 0; pr < e.rank; ++pr)
      basis.at(bi, e.pivots[pr]) = -e.rref.at(pr, free);
    ++bi;
  }
  return basis;
}

/// Coordinates of an element in the F_r-basis {1, w} of F_q:
/// e = a + b*w with a = e - b*w and b = (e - conj(e)) / (w - conj(w)).
/// Both coordinates are conjugation-fixed; w is never in F_r so the divisor
/// is nonzero.
inline std::pair<Elem, Elem> omega_coordinates(const Elem& e) {
  const FieldSpec& f = e.field();
  Elem w = f.omega();
  Elem b = (e - e.conj()) * (w - w.conj()).inv();
  Elem a = e - b * w;
  return {a, b};
}

/// Expand an m x n matrix over F_q to an m x 2n matrix over F_r in the basis
/// {1, w}: entry e = a + b*w becomes the adjacent column pair (a, b).
/// F_r-row-rank is preserved: rank(expand_to_base(M)) is the F_r-rank of M.
inline Matrix expand_to_base(const Matrix& m) {
  Matrix out(m.field(), m.rows(), 2 * m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      auto [a, b] = omega_coordinates(m.at(i, j));
      out.at(i, 2 * j) = a;
      out.at(i, 2 * j + 1) = b;
    }
  return out;
}

/// Inverse of expand_to_base: column pairs (a, b) contract to a + b*w.
inline Matrix contract_from_base(const Matrix& m) {
  if (m.cols() % 2 != 0)
    fail(errc::length_mismatch, "contract_from_base needs an even column count");
  const FieldSpec& f = m.field();
  Elem w = f.omega();
  Matrix out(f, m.rows(), m.cols() / 2);
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < out.cols(); ++j)
      out.at(i, j) = m.at(i, 2 * j) + m.at(i, 2 * j + 1) * w;
  return out;
}

/// F_r-row-rank of a matrix over F_q.
inline size_t subfield_rank(const Matrix& m) { return rank(expand_to_base(m)); }

inline std::string format_matrix(const Matrix& m, const std::string& indent = "") {
  std::vector<std::string> cells(m.rows() * m.cols());
  std::vector<size_t> width(m.cols(), 0);
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      cells[i * m.cols() + j] = format_element(m.at(i, j));
      width[j] = std::max(width[j], cells[i * m.cols() + j].size());
    }
  std::string out;
  for (size_t i = 0; i < m.rows(); ++i) {
    out += indent + "[";
    for (size_t j = 0; j < m.cols(); ++j) {
      const std::string& c = cells[i * m.cols() + j];
      out += std::string(width[j] - c.size(), ' ') + c;
      if (j + 1 < m.cols()) out += " ";
    }
    out += "]\n";
  }
  return out;
}

}  // namespace lcdc
