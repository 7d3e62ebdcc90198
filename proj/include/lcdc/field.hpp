#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lcdc/error.hpp"

namespace lcdc {

class FieldSpec;

/// Element of F_q in the polynomial basis {1, w, ..., w^(2s-1)} over F_p.
/// Coefficients are stored low degree first, always reduced into [0, p).
class Elem {
 public:
  Elem() : f_(nullptr) {}
  Elem(const FieldSpec* f, std::vector<uint32_t> c) : f_(f), c_(std::move(c)) {}

  const FieldSpec& field() const { return *f_; }
  const std::vector<uint32_t>& coeffs() const { return c_; }

  bool is_zero() const {
    for (uint32_t x : c_)
      if (x != 0) return false;
    return true;
  }

  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator*(const Elem& o) const;
  Elem operator-() const;
  Elem inv() const;
  Elem pow(uint64_t e) const;
  Elem conj() const;
  Elem trace() const;

  bool operator==(const Elem& o) const { return f_ == o.f_ && c_ == o.c_; }
  bool operator!=(const Elem& o) const { return !(*this == o); }

 private:
  const FieldSpec* f_;
  std::vector<uint32_t> c_;
};

/// Immutable description of F_q with q = r^2 = p^(2s), defined by a monic
/// irreducible modulus of even degree 2s over F_p. Instances are interned:
/// FieldSpec::get returns a reference valid for the program lifetime, and
/// pointer equality decides whether two elements live in the same field.
class FieldSpec {
 public:
  /// Desk-scale guard: fields larger than this are rejected with TooLarge.
  static constexpr uint64_t kMaxFieldSize = uint64_t(1) << 24;

  static const FieldSpec& get(uint32_t p, const std::vector<uint32_t>& modulus);

  uint32_t p() const { return p_; }
  uint32_t s() const { return s_; }
  uint64_t r() const { return r_; }
  uint64_t q() const { return q_; }
  uint32_t degree() const { return 2 * s_; }
  const std::vector<uint32_t>& modulus() const { return mod_; }

  Elem zero() const { return Elem(this, std::vector<uint32_t>(degree(), 0)); }
  Elem one() const { return from_int(1); }
  Elem omega() const {
    std::vector<uint32_t> c(degree(), 0);
    c[1] = 1;
    return Elem(this, c);
  }

  /// Prime-subfield element from an integer, reduced mod p.
  Elem from_int(uint64_t v) const {
    std::vector<uint32_t> c(degree(), 0);
    c[0] = uint32_t(v % p_);
    return Elem(this, c);
  }

  /// Element from coefficients (low degree first), reduced mod p and padded
  /// or rejected to length 2s.
  Elem from_coeffs(const std::vector<uint32_t>& c) const {
    if (c.size() > degree())
      fail(errc::parse_error, "coefficient vector longer than field degree");
    std::vector<uint32_t> cc(degree(), 0);
    for (size_t i = 0; i < c.size(); ++i) cc[i] = c[i] % p_;
    return Elem(this, cc);
  }

  /// Canonical enumeration: index i maps to coefficients c_j = (i / p^j) % p,
  /// so the constant term varies fastest. index_of inverts element().
  Elem element(uint64_t index) const {
    std::vector<uint32_t> c(degree(), 0);
    for (uint32_t j = 0; j < degree(); ++j) {
      c[j] = uint32_t(index % p_);
      index /= p_;
    }
    return Elem(this, c);
  }

  uint64_t index_of(const Elem& e) const {
    uint64_t idx = 0;
    for (uint32_t j = degree(); j-- > 0;) idx = idx * p_ + e.coeffs()[j];
    return idx;
  }

  /// The r conjugation-fixed elements in canonical order. For s = 1 this is
  /// the prime subfield; otherwise found by scanning, so desk-scale only.
  std::vector<Elem> subfield_elements() const {
    std::vector<Elem> out;
    out.reserve(size_t(r_));
    if (s_ == 1) {
      for (uint32_t v = 0; v < p_; ++v) out.push_back(from_int(v));
      return out;
    }
    for (uint64_t i = 0; i < q_; ++i) {
      Elem e = element(i);
      if (e.conj() == e) out.push_back(e);
    }
    return out;
  }

  // Polynomial arithmetic mod (p, modulus); coefficient vectors length 2s.
  std::vector<uint32_t> poly_add(const std::vector<uint32_t>& a,
                                 const std::vector<uint32_t>& b) const {
    std::vector<uint32_t> c(degree());
    for (uint32_t i = 0; i < degree(); ++i) c[i] = (a[i] + b[i]) % p_;
    return c;
  }

  std::vector<uint32_t> poly_sub(const std::vector<uint32_t>& a,
                                 const std::vector<uint32_t>& b) const {
    std::vector<uint32_t> c(degree());
    for (uint32_t i = 0; i < degree(); ++i) c[i] = (a[i] + p_ - b[i]) % p_;
    return c;
  }

  std::vector<uint32_t> poly_neg(const std::vector<uint32_t>& a) const {
    std::vector<uint32_t> c(degree());
    for (uint32_t i = 0; i < degree(); ++i) c[i] = (p_ - a[i]) % p_;
    return c;
  }

  std::vector<uint32_t> poly_mul(const std::vector<uint32_t>& a,
                                 const std::vector<uint32_t>& b) const {
    uint32_t d = degree();
    std::vector<uint64_t> w(2 * d - 1, 0);
    for (uint32_t i = 0; i < d; ++i) {
      if (a[i] == 0) continue;
      for (uint32_t j = 0; j < d; ++j) w[i + j] += uint64_t(a[i]) * b[j];
    }
    // Reduce by the monic modulus: w^(d+t) = -(m_0 w^t + ... + m_(d-1) w^(d-1+t)).
    for (uint32_t i = 2 * d - 2; i >= d; --i) {
      uint64_t c = w[i] % p_;
      if (c) {
        uint64_t neg = p_ - c;
        for (uint32_t j = 0; j < d; ++j) w[i - d + j] += neg * mod_[j];
      }
      w[i] = 0;
      if (i == d) break;
    }
    std::vector<uint32_t> out(d);
    for (uint32_t i = 0; i < d; ++i) out[i] = uint32_t(w[i] % p_);
    return out;
  }

 private:
  FieldSpec(uint32_t p, std::vector<uint32_t> mod);

  uint32_t p_;
  uint32_t s_;
  uint64_t r_;
  uint64_t q_;
  std::vector<uint32_t> mod_;
};

inline Elem Elem::operator+(const Elem& o) const {
  if (f_ != o.f_) throw std::invalid_argument("elements of different fields");
  return Elem(f_, f_->poly_add(c_, o.c_));
}

inline Elem Elem::operator-(const Elem& o) const {
  if (f_ != o.f_) throw std::invalid_argument("elements of different fields");
  return Elem(f_, f_->poly_sub(c_, o.c_));
}

inline Elem Elem::operator*(const Elem& o) const {
  if (f_ != o.f_) throw std::invalid_argument("elements of different fields");
  return Elem(f_, f_->poly_mul(c_, o.c_));
}

inline Elem Elem::operator-() const { return Elem(f_, f_->poly_neg(c_)); }

inline Elem Elem::pow(uint64_t e) const {
  Elem base = *this;
  Elem acc = f_->one();
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

inline Elem Elem::inv() const {
  if (is_zero()) fail(errc::singular, "inverse of zero field element");
  return pow(f_->q() - 2);
}

/// Conjugation a -> a^r, the automorphism of F_q fixing exactly F_r.
inline Elem Elem::conj() const { return pow(f_->r()); }

/// Trace to the subfield: Tr(a) = a + a^r; the result is conjugation-fixed.
inline Elem Elem::trace() const { return *this + conj(); }

inline bool is_in_subfield(const Elem& a) { return a.conj() == a; }

namespace detail {

inline bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Plain polynomials over F_p, low degree first, arbitrary length.
inline std::vector<uint32_t> poly_trim(std::vector<uint32_t> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Remainder of a mod b with b monic, over F_p.
inline std::vector<uint32_t> poly_rem(std::vector<uint32_t> a,
                                      const std::vector<uint32_t>& b,
                                      uint32_t p) {
  size_t db = b.size() - 1;
  while (a.size() > db) {
    uint32_t lead = a.back();
    if (lead != 0) {
      size_t shift = a.size() - 1 - db;
      for (size_t i = 0; i <= db; ++i) {
        uint64_t sub = uint64_t(lead) * b[i] % p;
        a[shift + i] = uint32_t((a[shift + i] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  return poly_trim(std::move(a));
}

// Irreducibility over F_p by trial division: a reducible monic polynomial of
// degree d has a monic factor of degree at most d/2.
inline bool poly_irreducible(const std::vector<uint32_t>& m, uint32_t p) {
  uint32_t d = uint32_t(m.size() - 1);
  for (uint32_t fd = 1; fd <= d / 2; ++fd) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < fd; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      std::vector<uint32_t> f(fd + 1, 0);
      uint64_t t = idx;
      for (uint32_t i = 0; i < fd; ++i) {
        f[i] = uint32_t(t % p);
        t /= p;
      }
      f[fd] = 1;
      if (poly_rem(m, f, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace detail

inline FieldSpec::FieldSpec(uint32_t p, std::vector<uint32_t> mod)
    : p_(p), mod_(std::move(mod)) {
  if (!detail::is_prime_u32(p_))
    fail(errc::not_prime, "characteristic " + std::to_string(p_) + " is not prime");
  if (mod_.size() < 3)
    fail(errc::odd_degree, "modulus degree must be even and at least 2");
  for (uint32_t& c : mod_) c %= p_;
  if (mod_.back() != 1) fail(errc::not_monic, "modulus is not monic");
  uint32_t deg = uint32_t(mod_.size() - 1);
  if (deg % 2 != 0)
    fail(errc::odd_degree, "modulus degree " + std::to_string(deg) + " is odd");
  s_ = deg / 2;
  r_ = 1;
  for (uint32_t i = 0; i < s_; ++i) {
    r_ *= p_;
    if (r_ * r_ > kMaxFieldSize)
      fail(errc::too_large, "field size exceeds the 2^24 guard");
  }
  q_ = r_ * r_;
  if (!detail::poly_irreducible(mod_, p_))
    fail(errc::reducible, "modulus is reducible over F_" + std::to_string(p_));
}

inline const FieldSpec& FieldSpec::get(uint32_t p,
                                       const std::vector<uint32_t>& modulus) {
  static std::mutex mu;
  static std::map<std::pair<uint32_t, std::vector<uint32_t>>,
                  std::unique_ptr<FieldSpec>>
      registry;
  // Normalize the key the same way the constructor normalizes coefficients.
  std::vector<uint32_t> key_mod = modulus;
  if (p >= 2)
    for (uint32_t& c : key_mod) c %= p;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, key_mod);
  auto it = registry.find(key);
  if (it == registry.end()) {
    auto spec = std::unique_ptr<FieldSpec>(new FieldSpec(p, modulus));
    it = registry.emplace(std::move(key), std::move(spec)).first;
  }
  return *it->second;
}

/// Shipped default fields; their moduli fix the generator w bit-exactly.
inline const FieldSpec& gf4() { return FieldSpec::get(2, {1, 1, 1}); }
inline const FieldSpec& gf9() { return FieldSpec::get(3, {2, 2, 1}); }
inline const FieldSpec& gf25() { return FieldSpec::get(5, {2, 4, 1}); }

/// First nonzero alpha in canonical order with conj(alpha) = -alpha.
/// Defined for odd q only; any two valid alpha differ by a factor in F_r*.
inline Elem find_alpha(const FieldSpec& f) {
  if (f.p() == 2)
    fail(errc::even_characteristic, "alpha requires odd field size");
  for (uint64_t i = 1; i < f.q(); ++i) {
    Elem a = f.element(i);
    if (a.conj() == -a) return a;
  }
  fail(errc::even_characteristic, "no alpha found");  // unreachable for odd q
}

/// First lambda in canonical order with lambda^2 = -1. Exists iff
/// r = 1 (mod 4); such lambda lies in F_r, so lambda^(r+1) = -1 too.
inline Elem sqrt_minus_one(const FieldSpec& f) {
  if (f.r() % 4 != 1)
    fail(errc::no_square_root_of_minus_one,
         "-1 is not a square: r = " + std::to_string(f.r()) + " != 1 (mod 4)");
  Elem minus_one = -f.one();
  for (uint64_t i = 1; i < f.q(); ++i) {
    Elem a = f.element(i);
    if (a * a == minus_one) return a;
  }
  fail(errc::no_square_root_of_minus_one, "no square root of -1 found");
}

// ---- Text syntax -----------------------------------------------------------
//
// Field description: GF(q) mod c0,c1,...,c2s   (coefficients low degree first)
// Element tokens: "0", a base-10 integer, "w", "w^k", "c*w^k", and sums of
// such terms joined by "+". Tokens carry no internal whitespace.

inline std::string format_element(const Elem& e) {
  if (e.is_zero()) return "0";
  const auto& c = e.coeffs();
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]) + "*";
      out += "w";
      if (i != 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace detail {

inline uint64_t parse_u64(const std::string& s, const std::string& context) {
  if (s.empty()) fail(errc::parse_error, "empty number in " + context);
  uint64_t v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9')
      fail(errc::parse_error, "bad digit '" + std::string(1, ch) + "' in " + context);
    v = v * 10 + uint64_t(ch - '0');
    if (v > (uint64_t(1) << 40))
      fail(errc::parse_error, "number too large in " + context);
  }
  return v;
}

}  // namespace detail

inline Elem parse_element(const FieldSpec& f, const std::string& token) {
  if (token.empty()) fail(errc::parse_error, "empty element token");
  Elem acc = f.zero();
  size_t pos = 0;
  while (pos <= token.size()) {
    size_t plus = token.find('+', pos);
    std::string term = token.substr(pos, plus - pos);
    if (term.empty())
      fail(errc::parse_error, "empty term in element token '" + token + "'");
    uint64_t coeff = 1;
    size_t wpos = term.find('w');
    if (wpos == std::string::npos) {
      coeff = detail::parse_u64(term, "element token '" + token + "'");
      acc = acc + f.from_int(coeff);
    } else {
      std::string head = term.substr(0, wpos);
      if (!head.empty()) {
        if (head.back() != '*')
          fail(errc::parse_error, "expected '*' before w in '" + token + "'");
        coeff = detail::parse_u64(head.substr(0, head.size() - 1),
                                  "element token '" + token + "'");
      }
      std::string tail = term.substr(wpos + 1);
      uint64_t k = 1;
      if (!tail.empty()) {
        if (tail[0] != '^')
          fail(errc::parse_error, "expected '^' after w in '" + token + "'");
        k = detail::parse_u64(tail.substr(1), "element token '" + token + "'");
        if (k > 1000000)
          fail(errc::parse_error, "exponent too large in '" + token + "'");
      }
      acc = acc + f.from_int(coeff) * f.omega().pow(k);
    }
    if (plus == std::string::npos) break;
    pos = plus + 1;
    if (pos == token.size())
      fail(errc::parse_error, "trailing '+' in element token '" + token + "'");
  }
  return acc;
}

inline std::string format_field(const FieldSpec& f) {
  std::string out = "GF(" + std::to_string(f.q()) + ") mod ";
  for (size_t i = 0; i < f.modulus().size(); ++i) {
    if (i) out += ",";
    out += std::to_string(f.modulus()[i]);
  }
  return out;
}

inline const FieldSpec& parse_field(const std::string& text) {
  std::istringstream in(text);
  std::string gf, modkw, coeffs;
  in >> gf >> modkw >> coeffs;
  std::string rest;
  if (in >> rest) fail(errc::parse_error, "trailing text in field description");
  if (gf.size() < 5 || gf.substr(0, 3) != "GF(" || gf.back() != ')')
    fail(errc::parse_error, "field description must start with GF(q)");
  if (modkw != "mod")
    fail(errc::parse_error, "expected 'mod' in field description");
  uint64_t q = detail::parse_u64(gf.substr(3, gf.size() - 4), "field size");
  std::vector<uint32_t> mod;
  size_t pos = 0;
  while (pos <= coeffs.size()) {
    size_t comma = coeffs.find(',', pos);
    std::string tok =
        coeffs.substr(pos, comma == std::string::npos ? comma : comma - pos);
    mod.push_back(uint32_t(detail::parse_u64(tok, "modulus coefficient")));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (mod.size() < 3 || mod.size() % 2 == 0)
    fail(errc::parse_error, "modulus must have odd length 2s+1 with s >= 1");
  uint32_t deg = uint32_t(mod.size() - 1);
  // Recover p from q = p^deg by integer root extraction; deg >= 2 bounds the
  // candidate by sqrt(q), and x^deg is strictly monotone so the root is unique.
  uint32_t p = 0;
  for (uint64_t cand = 2; cand * cand <= q; ++cand) {
    uint64_t pw = 1;
    bool over = false;
    for (uint32_t i = 0; i < deg && !over; ++i) {
      pw *= cand;
      over = pw > q;
    }
    if (!over && pw == q) {
      p = uint32_t(cand);
      break;
    }
    if (over) break;
  }
  if (p == 0)
    fail(errc::parse_error,
         "field size " + std::to_string(q) + " is not p^" + std::to_string(deg));
  return FieldSpec::get(p, mod);
}

}  // namespace lcdc
