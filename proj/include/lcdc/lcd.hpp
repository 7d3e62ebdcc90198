#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lcdc/code.hpp"
#include "lcdc/error.hpp"
#include "lcdc/matrix.hpp"

namespace lcdc {

struct HermitianLcdResult {
  bool lcd;
  Matrix gram;  // G conj(G)^T
};

/// Hermitian LCD criterion: C is LCD precisely when the Hermitian Gram
/// matrix is invertible. The verdict does not depend on which full-rank
/// generator of the code is supplied.
inline HermitianLcdResult is_hermitian_lcd(const LinearCode& c) {
  Matrix gram = c.generator() * conj_matrix(c.generator()).transpose();
  bool lcd = rank(gram) == gram.rows();
  return {lcd, std::move(gram)};
}

/// Orthogonal projection onto C along C's Hermitian dual, as the matrix
/// P = conj(G)^T (G conj(G)^T)^(-1) G acting on row vectors v -> vP.
inline Matrix hermitian_projection(const LinearCode& c) {
  const Matrix& g = c.generator();
  Matrix gbar_t = conj_matrix(g).transpose();
  Matrix gram = g * gbar_t;
  if (rank(gram) != gram.rows())
    fail(errc::not_lcd, "Hermitian Gram matrix is singular");
  return gbar_t * inverse(gram) * g;
}

struct TraceHermitianLcdResult {
  bool lcd;
  Matrix delta;  // G conj(G)^T - conj(G) G^T
};

/// Trace-Hermitian LCD criterion: C is LCD precisely when
/// Delta = G conj(G)^T - conj(G) G^T is invertible. Delta is alternating
/// (Delta^T = -Delta, zero diagonal), so its rank is even and an odd ell can
/// never be LCD.
inline TraceHermitianLcdResult is_trace_hermitian_lcd(const SubfieldLinearCode& c) {
  const Matrix& g = c.generator();
  Matrix gbar = conj_matrix(g);
  Matrix delta = g * gbar.transpose() - gbar * g.transpose();
  bool lcd = rank(delta) == delta.rows();
  return {lcd, std::move(delta)};
}

/// Evaluator for the trace-Hermitian projection Lambda_C. The map is
/// F_r-linear but not F_q-linear, so it is exposed as a vector operation
/// rather than an F_q matrix:
///   even q:  Lambda(v) = Tr(v conj(G)^T) Delta^(-1) G
///   odd q:   Lambda(v) = alpha^(-1) Tr(alpha v conj(G)^T) Delta^(-1) G
class TraceHermitianProjector {
 public:
  TraceHermitianProjector(const SubfieldLinearCode& c, const InnerProduct& ip)
      : gbar_t_(conj_matrix(c.generator()).transpose()),
        w_(Matrix(c.field(), 0, 0)),
        alpha_(std::nullopt) {
    const FieldSpec& f = c.field();
    const Matrix& g = c.generator();
    if (ip.kind != Inner::trace_hermitian)
      fail(errc::category_mismatch, "projector needs a trace-hermitian kind");
    if (f.p() != 2) {
      if (!ip.alpha)
        fail(errc::missing_alpha, "trace-hermitian over odd q needs alpha");
      alpha_ = *ip.alpha;
    }
    Matrix gbar = conj_matrix(g);
    Matrix delta = g * gbar.transpose() - gbar * g.transpose();
    if (rank(delta) != delta.rows())
      fail(errc::not_lcd, "Delta matrix is singular");
    w_ = inverse(delta) * g;
  }

  Vec operator()(const Vec& v) const {
    const FieldSpec& f = w_.field();
    Matrix row = row_matrix(f, v);
    Matrix t = row * gbar_t_;  // 1 x ell
    for (size_t i = 0; i < t.cols(); ++i) {
      Elem x = alpha_ ? (*alpha_ * t.at(0, i)) : t.at(0, i);
      t.at(0, i) = x.trace();
    }
    Matrix out = t * w_;  // 1 x n
    Vec result = out.row(0);
    if (alpha_) result = vec_scale(alpha_->inv(), result);
    return result;
  }

 private:
  Matrix gbar_t_;
  Matrix w_;  // Delta^(-1) G
  std::optional<Elem> alpha_;
};

inline TraceHermitianProjector trace_hermitian_projector(const SubfieldLinearCode& c) {
  return TraceHermitianProjector(c, InnerProduct::trace_hermitian(c.field()));
}

inline Vec trace_hermitian_projection(const SubfieldLinearCode& c, const Vec& v) {
  return trace_hermitian_projector(c)(v);
}

/// Verdict of checking a candidate projection map against a code and inner
/// product: idempotence, fixing the code, annihilating the dual, and
/// orthogonality of image and kernel. All four true means the map is the
/// orthogonal projection onto C for that inner product.
struct ProjectionReport {
  bool idempotent = true;
  bool fixes_code = true;
  bool kills_dual = true;
  bool image_kernel_orthogonal = true;
  std::optional<Vec> witness;  // first input vector violating a law
  std::string violated;        // which law the witness breaks

  bool all() const {
    return idempotent && fixes_code && kills_dual && image_kernel_orthogonal;
  }
};

using VectorMap = std::function<Vec(const Vec&)>;

namespace detail {

// The laws are checked on F_r-spanning sets; for F_r-linear maps (which
// includes all F_q-linear maps) a spanning-set check is complete.
inline ProjectionReport verify_projection_impl(const VectorMap& map,
                                               const FieldSpec& f, size_t n,
                                               const std::vector<Vec>& code_span,
                                               const std::vector<Vec>& dual_span,
                                               const InnerProduct& ip) {
  ProjectionReport rep;
  std::vector<Vec> ambient;
  ambient.reserve(2 * n);
  for (size_t j = 0; j < n; ++j) {
    Vec e(n, f.zero());
    e[j] = f.one();
    ambient.push_back(e);
    e[j] = f.omega();
    ambient.push_back(e);
  }
  auto note = [&](bool& flag, const Vec& v, const char* law) {
    if (flag) {
      flag = false;
      if (!rep.witness) {
        rep.witness = v;
        rep.violated = law;
      }
    }
  };
  for (const Vec& b : ambient) {
    Vec once = map(b);
    if (map(once) != once) note(rep.idempotent, b, "idempotence");
  }
  for (const Vec& g : code_span)
    if (map(g) != g) note(rep.fixes_code, g, "fixes code basis");
  for (const Vec& u : dual_span)
    if (!vec_is_zero(map(u))) note(rep.kills_dual, u, "annihilates dual basis");
  std::vector<Vec> images, kernels;
  for (const Vec& b : ambient) {
    Vec im = map(b);
    kernels.push_back(vec_sub(b, im));
    images.push_back(std::move(im));
  }
  for (const Vec& im : images) {
    for (const Vec& ker : kernels)
      if (!inner_product(im, ker, ip).is_zero()) {
        note(rep.image_kernel_orthogonal, im, "image orthogonal to kernel");
        break;
      }
    if (!rep.image_kernel_orthogonal) break;
  }
  return rep;
}

inline std::vector<Vec> rows_and_omega_rows(const Matrix& g) {
  std::vector<Vec> out;
  out.reserve(2 * g.rows());
  Elem w = g.field().omega();
  for (size_t i = 0; i < g.rows(); ++i) {
    out.push_back(g.row(i));
    out.push_back(vec_scale(w, g.row(i)));
  }
  return out;
}

inline std::vector<Vec> rows_of(const Matrix& g) {
  std::vector<Vec> out;
  out.reserve(g.rows());
  for (size_t i = 0; i < g.rows(); ++i) out.push_back(g.row(i));
  return out;
}

}  // namespace detail

/// Verify a map against an F_q-linear code under the Euclidean or Hermitian
/// inner product. Code and dual spanning sets include the w-multiples so the
/// check is complete even for maps that are only F_r-linear.
inline ProjectionReport verify_projection(const VectorMap& map, const LinearCode& c,
                                          const InnerProduct& ip) {
  if (ip.kind == Inner::trace_hermitian)
    fail(errc::category_mismatch,
         "use the SubfieldLinearCode overload for trace-hermitian checks");
  Matrix d = dual(c, ip.kind).generator();
  return detail::verify_projection_impl(
      map, c.field(), c.n(), detail::rows_and_omega_rows(c.generator()),
      detail::rows_and_omega_rows(d), ip);
}

inline ProjectionReport verify_projection(const VectorMap& map,
                                          const SubfieldLinearCode& c,
                                          const InnerProduct& ip) {
  if (ip.kind != Inner::trace_hermitian)
    fail(errc::category_mismatch,
         "use the LinearCode overload for euclidean or hermitian checks");
  Matrix d = dual_trace_hermitian(c, ip).generator();
  return detail::verify_projection_impl(map, c.field(), c.n(),
                                        detail::rows_of(c.generator()),
                                        detail::rows_of(d), ip);
}

/// Convenience: v -> vP for a projection matrix P.
inline VectorMap matrix_map(const Matrix& p) {
  return [p](const Vec& v) {
    Matrix out = row_matrix(p.field(), v) * p;
    return out.row(0);
  };
}

}  // namespace lcdc
