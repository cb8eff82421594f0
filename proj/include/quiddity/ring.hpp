#pragma once

// Exact arithmetic over the coefficient rings used throughout the library.
//
// Every supported ring is Z[zeta_d] or Q(zeta_d) for a root of unity zeta_d,
// so one representation covers all of them: a coefficient vector of length
// phi(d) in the power basis {1, zeta_d, ..., zeta_d^(phi(d)-1)}, reduced
// modulo the d-th cyclotomic polynomial.
//
//   Integers            d = 1   basis {1}
//   GaussianIntegers    d = 4   basis {1, i}
//   EisensteinIntegers  d = 6   basis {1, w},  w = (1 + i*sqrt(3)) / 2
//   Rationals           d = 1   (field)
//   GaussianRationals   d = 4   (field)
//   Cyclotomic(d)       any other d, integral, no ordering
//
// Integral rings keep every coordinate integral; that is checked on
// construction and by divide_exact.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "quiddity/error.hpp"

namespace quiddity {

using Integer = mpz_class;
using Rational = mpq_class;

enum class RingKind {
  integers,
  gaussian_integers,
  eisenstein_integers,
  rationals,
  gaussian_rationals,
  cyclotomic,
};

inline unsigned euler_phi(unsigned d) {
  unsigned result = d;
  unsigned n = d;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace detail {

// Coefficients of Phi_d, lowest degree first. Computed once per d.
inline std::vector<Integer> compute_cyclotomic_polynomial(unsigned d) {
  // x^d - 1 divided by Phi_e for every proper divisor e of d.
  std::vector<Integer> num(d + 1, 0);
  num[0] = -1;
  num[d] = 1;
  for (unsigned e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    std::vector<Integer> den = compute_cyclotomic_polynomial(e);
    // den is monic; long division.
    std::size_t deg_num = num.size() - 1;
    std::size_t deg_den = den.size() - 1;
    std::vector<Integer> quot(deg_num - deg_den + 1, 0);
    for (std::size_t k = deg_num + 1; k-- > deg_den;) {
      Integer coef = num[k];
      quot[k - deg_den] = coef;
      for (std::size_t j = 0; j <= deg_den; ++j) num[k - deg_den + j] -= coef * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace detail

inline const std::vector<Integer>& cyclotomic_polynomial(unsigned d) {
  static std::mutex mutex;
  static std::map<unsigned, std::vector<Integer>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, detail::compute_cyclotomic_polynomial(d)).first;
  return it->second;
}

struct RingDescriptor {
  RingKind kind = RingKind::integers;
  unsigned order = 1;  // d: the ring is generated by a primitive d-th root of unity

  static constexpr RingDescriptor integers() { return {RingKind::integers, 1}; }
  static constexpr RingDescriptor gaussian_integers() { return {RingKind::gaussian_integers, 4}; }
  static constexpr RingDescriptor eisenstein_integers() { return {RingKind::eisenstein_integers, 6}; }
  static constexpr RingDescriptor rationals() { return {RingKind::rationals, 1}; }
  static constexpr RingDescriptor gaussian_rationals() { return {RingKind::gaussian_rationals, 4}; }

  // Z[zeta_d]; collapses to the named discrete rings where they coincide.
  static RingDescriptor cyclotomic(unsigned d) {
    if (d == 0) throw error(errc::usage, "cyclotomic order must be positive");
    switch (d) {
      case 1:
      case 2: return integers();
      case 4: return gaussian_integers();
      case 3:
      case 6: return eisenstein_integers();
      default: return {RingKind::cyclotomic, d};
    }
  }

  bool is_field() const {
    return kind == RingKind::rationals || kind == RingKind::gaussian_rationals;
  }

  // Discrete in C, equivalently min nonzero norm_sq = 1.
  bool is_discrete() const {
    return kind == RingKind::integers || kind == RingKind::gaussian_integers ||
           kind == RingKind::eisenstein_integers;
  }

  // norm_sq, compare and the enumerations below need an exact |x|^2.
  bool has_norm() const { return kind != RingKind::cyclotomic; }

  std::size_t degree() const { return euler_phi(order); }

  const std::vector<Integer>& modulus() const { return cyclotomic_polynomial(order); }

  std::string tag() const {
    switch (kind) {
      case RingKind::integers: return "Z";
      case RingKind::gaussian_integers: return "Zi";
      case RingKind::eisenstein_integers: return "Zzeta6";
      case RingKind::rationals: return "Q";
      case RingKind::gaussian_rationals: return "Qi";
      case RingKind::cyclotomic: return "Zzeta" + std::to_string(order);
    }
    return "?";
  }

  static RingDescriptor from_tag(std::string_view tag) {
    if (tag == "Z") return integers();
    if (tag == "Zi") return gaussian_integers();
    if (tag == "Zzeta6") return eisenstein_integers();
    if (tag == "Q") return rationals();
    if (tag == "Qi") return gaussian_rationals();
    constexpr std::string_view prefix = "Zzeta";
    if (tag.substr(0, prefix.size()) == prefix && tag.size() > prefix.size()) {
      unsigned d = 0;
      for (char ch : tag.substr(prefix.size())) {
        if (ch < '0' || ch > '9' || d > 100000) throw error(errc::usage, "bad ring tag '" + std::string(tag) + "'");
        d = d * 10 + static_cast<unsigned>(ch - '0');
      }
      return cyclotomic(d);
    }
    throw error(errc::usage, "unknown ring tag '" + std::string(tag) + "'");
  }

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

class RingElement {
 public:
  RingElement() : coords_(1, Rational(0)) {}

  RingElement(RingDescriptor ring, std::vector<Rational> coords) : ring_(ring), coords_(std::move(coords)) {
    if (coords_.size() != ring_.degree())
      throw error(errc::usage, "ring " + ring_.tag() + " expects " + std::to_string(ring_.degree()) +
                                   " coordinates, got " + std::to_string(coords_.size()));
    for (auto& q : coords_) {
      q.canonicalize();
      if (!ring_.is_field() && q.get_den() != 1)
        throw error(errc::usage, "non-integral coordinate in ring " + ring_.tag());
    }
  }

  static RingElement from_integer(RingDescriptor ring, const Integer& value) {
    std::vector<Rational> c(ring.degree(), Rational(0));
    c[0] = value;
    return RingElement(ring, std::move(c));
  }
  static RingElement from_rational(RingDescriptor ring, const Rational& value) {
    std::vector<Rational> c(ring.degree(), Rational(0));
    c[0] = value;
    return RingElement(ring, std::move(c));
  }
  static RingElement zero(RingDescriptor ring) { return from_integer(ring, 0); }
  static RingElement one(RingDescriptor ring) { return from_integer(ring, 1); }

  static RingElement integer(const Integer& v) { return from_integer(RingDescriptor::integers(), v); }
  static RingElement rational(const Rational& q) { return from_rational(RingDescriptor::rationals(), q); }
  static RingElement gaussian(const Integer& re, const Integer& im) {
    return RingElement(RingDescriptor::gaussian_integers(), {Rational(re), Rational(im)});
  }
  static RingElement gaussian_rational(const Rational& re, const Rational& im) {
    return RingElement(RingDescriptor::gaussian_rationals(), {re, im});
  }
  // a + b*w with w = zeta_6.
  static RingElement eisenstein(const Integer& a, const Integer& b) {
    return RingElement(RingDescriptor::eisenstein_integers(), {Rational(a), Rational(b)});
  }
  // zeta_d^k in the ring Z[zeta_d] (or the named ring it collapses to).
  static RingElement root_of_unity(unsigned d, unsigned k);

  const RingDescriptor& ring() const { return ring_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return sgn(q) == 0; });
  }
  bool is_one() const {
    if (coords_[0] != 1) return false;
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& q) { return sgn(q) == 0; });
  }
  // Lies in the prime subring/field (all non-constant coordinates vanish).
  bool is_rational() const {
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& q) { return sgn(q) == 0; });
  }

  RingElement operator-() const {
    RingElement r = *this;
    for (auto& q : r.coords_) q = -q;
    return r;
  }

  RingElement& operator+=(const RingElement& o) {
    same_ring(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
    return *this;
  }
  RingElement& operator-=(const RingElement& o) {
    same_ring(o);
    for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
    return *this;
  }
  RingElement& operator*=(const RingElement& o) {
    same_ring(o);
    const std::size_t n = coords_.size();
    if (n == 1) {
      coords_[0] *= o.coords_[0];
      return *this;
    }
    std::vector<Rational> prod(2 * n - 1, Rational(0));
    for (std::size_t a = 0; a < n; ++a) {
      if (sgn(coords_[a]) == 0) continue;
      for (std::size_t b = 0; b < n; ++b) prod[a + b] += coords_[a] * o.coords_[b];
    }
    reduce(prod);
    coords_ = std::move(prod);
    return *this;
  }

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring_ == b.ring_ && a.coords_ == b.coords_;
  }

  // Polynomial of any length reduced modulo the ring's cyclotomic polynomial.
  void reduce(std::vector<Rational>& poly) const {
    const auto& f = ring_.modulus();
    const std::size_t n = f.size() - 1;
    for (std::size_t k = poly.size(); k-- > n;) {
      if (sgn(poly[k]) == 0) continue;
      Rational t = poly[k];
      for (std::size_t j = 0; j <= n; ++j) poly[k - n + j] -= t * f[j];
    }
    poly.resize(n, Rational(0));
  }

 private:
  void same_ring(const RingElement& o) const {
    if (!(ring_ == o.ring_))
      throw error(errc::usage, "mixed rings: " + ring_.tag() + " and " + o.ring_.tag());
  }

  RingDescriptor ring_{};
  std::vector<Rational> coords_;
};

inline RingElement zero_like(const RingElement& x) { return RingElement::zero(x.ring()); }
inline RingElement one_like(const RingElement& x) { return RingElement::one(x.ring()); }
inline bool is_zero(const RingElement& x) { return x.is_zero(); }

inline RingElement RingElement::root_of_unity(unsigned d, unsigned k) {
  RingDescriptor ring = RingDescriptor::cyclotomic(d);
  // Express zeta_d^k in the basis of the (possibly collapsed) ring.
  if (ring.order == d || (ring.kind == RingKind::cyclotomic)) {
    std::vector<Rational> poly(k % ring.order + 1, Rational(0));
    poly.back() = 1;
    RingElement r = zero(ring);
    r.reduce(poly);
    return RingElement(ring, std::move(poly));
  }
  // d in {2, 3}: zeta_2 = -1, zeta_3 = zeta_6^2.
  unsigned scale = ring.order / d;
  return root_of_unity(ring.order, (k * scale) % ring.order);
}

inline RingElement pow(RingElement base, unsigned long exponent) {
  RingElement result = one_like(base);
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

// Quotient a / b computed in the fraction field; nullopt when it leaves an
// integral ring. Division by zero is singular.
inline std::optional<RingElement> divide_exact(const RingElement& a, const RingElement& b) {
  if (!(a.ring() == b.ring())) throw error(errc::usage, "mixed rings: " + a.ring().tag() + " and " + b.ring().tag());
  if (b.is_zero()) throw error(errc::singular, "division by zero");
  const std::size_t n = a.coords().size();
  std::vector<Rational> x(n, Rational(0));
  if (n == 1) {
    x[0] = a.coords()[0] / b.coords()[0];
  } else {
    // Column j of the multiplication matrix is b * zeta^j.
    std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n + 1, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> poly(2 * n - 1, Rational(0));
      for (std::size_t k = 0; k < n; ++k) poly[k + j] = b.coords()[k];
      b.reduce(poly);
      for (std::size_t r = 0; r < n; ++r) mat[r][j] = poly[r];
    }
    for (std::size_t r = 0; r < n; ++r) mat[r][n] = a.coords()[r];
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t piv = col;
      while (piv < n && sgn(mat[piv][col]) == 0) ++piv;
      if (piv == n) throw invariant_violation("multiplication matrix of a nonzero element is singular");
      std::swap(mat[piv], mat[col]);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || sgn(mat[r][col]) == 0) continue;
        Rational f = mat[r][col] / mat[col][col];
        for (std::size_t c = col; c <= n; ++c) mat[r][c] -= f * mat[col][c];
      }
    }
    for (std::size_t r = 0; r < n; ++r) x[r] = mat[r][n] / mat[r][r];
  }
  if (!a.ring().is_field()) {
    for (auto& q : x) {
      q.canonicalize();
      if (q.get_den() != 1) return std::nullopt;
    }
  }
  return RingElement(a.ring(), std::move(x));
}

// a / b, raising not_representable when the quotient leaves the ring.
inline RingElement divide(const RingElement& a, const RingElement& b) {
  auto q = divide_exact(a, b);
  if (!q) throw error(errc::not_representable, "quotient is not in ring " + a.ring().tag());
  return *q;
}

inline bool is_unit(const RingElement& x) {
  return !x.is_zero() && divide_exact(one_like(x), x).has_value();
}

// |x|^2, exact.
inline Rational norm_sq(const RingElement& x) {
  const auto& c = x.coords();
  switch (x.ring().kind) {
    case RingKind::integers:
    case RingKind::rationals: return c[0] * c[0];
    case RingKind::gaussian_integers:
    case RingKind::gaussian_rationals: return c[0] * c[0] + c[1] * c[1];
    case RingKind::eisenstein_integers: return c[0] * c[0] + c[0] * c[1] + c[1] * c[1];
    case RingKind::cyclotomic: break;
  }
  throw error(errc::unsupported, "norm_sq is not available for ring " + x.ring().tag());
}

inline Rational real_part(const RingElement& x) {
  const auto& c = x.coords();
  switch (x.ring().kind) {
    case RingKind::integers:
    case RingKind::rationals:
    case RingKind::gaussian_integers:
    case RingKind::gaussian_rationals: return c[0];
    case RingKind::eisenstein_integers: return c[0] + c[1] / 2;
    case RingKind::cyclotomic: break;
  }
  throw error(errc::unsupported, "real_part is not available for ring " + x.ring().tag());
}

// A rational that is a positive multiple of Im(x): Im(a + b*w) = b*sqrt(3)/2.
inline Rational imag_key(const RingElement& x) {
  switch (x.ring().kind) {
    case RingKind::integers:
    case RingKind::rationals: return 0;
    case RingKind::gaussian_integers:
    case RingKind::gaussian_rationals:
    case RingKind::eisenstein_integers: return x.coords()[1];
    case RingKind::cyclotomic: break;
  }
  throw error(errc::unsupported, "imaginary part is not available for ring " + x.ring().tag());
}

// Total order: ascending (norm_sq, real part, imaginary part).
inline std::strong_ordering compare(const RingElement& x, const RingElement& y) {
  if (!(x.ring() == y.ring())) throw error(errc::usage, "compare across rings " + x.ring().tag() + " / " + y.ring().tag());
  auto three_way = [](const Rational& a, const Rational& b) {
    int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  };
  if (auto c = three_way(norm_sq(x), norm_sq(y)); c != 0) return c;
  if (auto c = three_way(real_part(x), real_part(y)); c != 0) return c;
  return three_way(imag_key(x), imag_key(y));
}

struct RingLess {
  bool operator()(const RingElement& a, const RingElement& b) const { return compare(a, b) < 0; }
};

inline std::string to_string(const RingElement& x) {
  const auto& c = x.coords();
  auto str = [](const Rational& q) { return q.get_str(); };
  const RingKind kind = x.ring().kind;
  if (c.size() == 1) return str(c[0]);
  // Sum of coefficient * basis-symbol terms.
  std::string symbol = kind == RingKind::eisenstein_integers ? "w" : kind == RingKind::cyclotomic ? "z" : "i";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    std::string basis = k == 0 ? "" : k == 1 ? symbol : symbol + "^" + std::to_string(k);
    Rational mag = abs(c[k]);
    if (!first) out << (sgn(c[k]) < 0 ? "-" : "+");
    else if (sgn(c[k]) < 0) out << "-";
    if (k == 0 || mag != 1) out << str(mag);
    out << basis;
    first = false;
  }
  if (first) return "0";
  return out.str();
}

inline std::ostream& operator<<(std::ostream& os, const RingElement& x) { return os << to_string(x); }

namespace detail {

inline Integer floor_sqrt(const Rational& bound) {
  if (sgn(bound) <= 0) return 0;
  Integer fl = bound.get_num() / bound.get_den();
  Integer root;
  mpz_sqrt(root.get_mpz_t(), fl.get_mpz_t());
  return root;
}

inline void require_discrete(RingDescriptor ring) {
  if (!ring.is_discrete()) throw error(errc::unsupported, "ring " + ring.tag() + " is not discrete");
}

}  // namespace detail

// All nonzero x with norm_sq(x) <= bound_sq, sorted by compare.
inline std::vector<RingElement> elements_norm_at_most(RingDescriptor ring, const Rational& bound_sq) {
  detail::require_discrete(ring);
  std::vector<RingElement> out;
  const Integer r = detail::floor_sqrt(bound_sq);
  const long radius = r.get_si();
  switch (ring.kind) {
    case RingKind::integers:
      for (long a = -radius; a <= radius; ++a)
        if (a != 0) out.push_back(RingElement::integer(a));
      break;
    case RingKind::gaussian_integers:
      for (long a = -radius; a <= radius; ++a)
        for (long b = -radius; b <= radius; ++b)
          if ((a != 0 || b != 0) && a * a + b * b <= bound_sq) out.push_back(RingElement::gaussian(a, b));
      break;
    case RingKind::eisenstein_integers: {
      // a^2 + ab + b^2 >= 3b^2/4 and >= 3a^2/4, so |a|, |b| <= 2r/sqrt(3) < 2r + 1.
      const long box = 2 * radius + 1;
      for (long a = -box; a <= box; ++a)
        for (long b = -box; b <= box; ++b)
          if ((a != 0 || b != 0) && a * a + a * b + b * b <= bound_sq) out.push_back(RingElement::eisenstein(a, b));
      break;
    }
    default: break;
  }
  std::sort(out.begin(), out.end(), RingLess{});
  return out;
}

namespace detail {

// A unit of infinite order in Z[zeta_d]; exists exactly when phi(d) > 2.
inline RingElement infinite_order_unit(RingDescriptor ring) {
  const std::size_t n = ring.degree();
  const RingElement one = RingElement::one(ring);
  // Coefficient vectors over {-1, 0, 1}, by increasing support size.
  for (std::size_t weight = 2; weight <= n; ++weight) {
    std::vector<int> digits(n, 0);
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t rest = code;
      std::size_t support = 0;
      for (std::size_t k = 0; k < n; ++k) {
        digits[k] = static_cast<int>(rest % 3) - 1;
        rest /= 3;
        support += digits[k] != 0;
      }
      if (support != weight) continue;
      std::vector<Rational> coords(n);
      for (std::size_t k = 0; k < n; ++k) coords[k] = digits[k];
      RingElement x(ring, std::move(coords));
      if (!is_unit(x)) continue;
      // Roots of unity in Q(zeta_d) have order dividing 2d.
      if (pow(x, 2ul * ring.order) == one) continue;
      return x;
    }
  }
  throw error(errc::unsupported, "no unit of infinite order in " + ring.tag());
}

}  // namespace detail

// Up to `limit` distinct t with 2/t in the ring. For discrete rings the
// complete (finite) set, sorted by compare; for the fields and Z[zeta_d]
// an infinite family listed in a fixed order.
inline std::vector<RingElement> divisors_of_two(RingDescriptor ring, std::size_t limit) {
  std::vector<RingElement> out;
  const RingElement two = RingElement::from_integer(ring, 2);
  if (ring.is_discrete()) {
    // norm_sq(t) divides norm_sq(2) = 4.
    for (const auto& t : elements_norm_at_most(ring, 4))
      if (divide_exact(two, t)) out.push_back(t);
    if (out.size() > limit) out.resize(limit);
    return out;
  }
  auto push = [&](const RingElement& t) {
    if (out.size() < limit && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  };
  if (ring.is_field()) {
    for (long k = 1; out.size() < limit; ++k) {
      for (const Rational& q : {Rational(k), Rational(-k), Rational(1, k), Rational(-1, k)})
        push(RingElement::from_rational(ring, q));
    }
    return out;
  }
  const RingElement unit = detail::infinite_order_unit(ring);
  const RingElement inverse = divide(RingElement::one(ring), unit);
  RingElement up = RingElement::one(ring);
  RingElement down = RingElement::one(ring);
  for (unsigned k = 0; out.size() < limit; ++k) {
    for (const RingElement* u : {&up, &down}) {
      push(*u);
      push(-*u);
      push(two * *u);
      push(-(two * *u));
    }
    up *= unit;
    down *= inverse;
  }
  return out;
}

}  // namespace quiddity
