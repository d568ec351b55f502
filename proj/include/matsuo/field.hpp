#ifndef MATSUO_FIELD_HPP
#define MATSUO_FIELD_HPP

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <deque>
#include <mutex>
#include <ostream>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include <Eigen/Core>

#include "matsuo/errors.hpp"

namespace matsuo {

// ---------------------------------------------------------------------------
// Rational numbers, GMP backed. Always canonical (lowest terms, positive
// denominator).
// ---------------------------------------------------------------------------
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT: implicit, Eigen needs Scalar(0)
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  // Accepts "n" or "n/d" with optional sign.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational inverse() const;
  std::string to_string() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

 private:
  mpq_class v_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline std::string to_string(const Rational& x) { return x.to_string(); }

// ---------------------------------------------------------------------------
// Residues modulo an odd prime. The modulus travels with the value; p == 0
// marks an integer constant not yet bound to a field (what Eigen produces
// from Scalar(0) or Scalar(1)). Unbound constants adopt the modulus of the
// other operand.
// ---------------------------------------------------------------------------
class ModP {
 public:
  ModP() = default;
  ModP(long value) : v_(value) {}  // NOLINT: implicit, Eigen needs Scalar(0)
  ModP(std::int64_t value, std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  bool bound() const { return p_ != 0; }
  // Residue in [0, p) for bound values, the raw integer otherwise.
  std::int64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  ModP inverse() const;
  ModP pow(std::uint64_t e) const;
  std::string to_string() const { return std::to_string(v_); }

  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend ModP operator-(const ModP& a) { return ModP() - a; }
  friend bool operator==(const ModP& a, const ModP& b);

 private:
  std::uint64_t unify(const ModP& o);

  std::int64_t v_ = 0;
  std::uint64_t p_ = 0;
};

inline bool is_zero(const ModP& x) { return x.is_zero(); }
inline std::string to_string(const ModP& x) { return x.to_string(); }

namespace detail {

// Stable storage for extension radicands, so elements can carry a pointer as
// their field identity and compare identities by address.
template <class Base>
const Base* intern_radicand(const Base& d) {
  static std::mutex mutex;
  static std::deque<Base> store;
  std::lock_guard lock(mutex);
  for (const Base& existing : store) {
    if (existing == d) return &existing;
  }
  store.push_back(d);
  return &store.back();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// a + b*sqrt(d) over a base field in which d is not a square.
// ---------------------------------------------------------------------------
template <class Base>
class Quadratic {
 public:
  Quadratic() = default;
  Quadratic(long value) : a_(value) {}  // NOLINT: implicit, Eigen needs Scalar(0)
  Quadratic(Base a, Base b, const Base* radicand)
      : a_(std::move(a)), b_(std::move(b)), d_(radicand) {}

  const Base& a() const { return a_; }
  const Base& b() const { return b_; }
  const Base* radicand() const { return d_; }
  bool is_zero() const { return matsuo::is_zero(a_) && matsuo::is_zero(b_); }

  // a^2 - d b^2
  Base norm() const {
    if (!d_) return a_ * a_;
    return a_ * a_ - *d_ * b_ * b_;
  }

  Quadratic conjugate() const { return Quadratic(a_, -b_, d_); }

  Quadratic inverse() const {
    if (is_zero()) throw DivisionByZero();
    Base n = norm();
    return Quadratic(a_ / n, -b_ / n, d_);
  }

  std::string to_string() const {
    using matsuo::to_string;
    if (matsuo::is_zero(b_)) return to_string(a_);
    std::string root = "sqrt" + radicand_string();
    std::string coeff = to_string(b_) + "*" + root;
    if (matsuo::is_zero(a_)) return coeff;
    std::string bs = to_string(b_);
    if (!bs.empty() && bs.front() == '-') return to_string(a_) + coeff;
    return to_string(a_) + "+" + coeff;
  }

  Quadratic& operator+=(const Quadratic& o) {
    d_ = unify(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Quadratic& operator-=(const Quadratic& o) {
    d_ = unify(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  Quadratic& operator*=(const Quadratic& o) {
    d_ = unify(o);
    Base a = a_ * o.a_;
    if (d_) a += *d_ * b_ * o.b_;
    Base b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  Quadratic& operator/=(const Quadratic& o) { return *this *= o.inverse(); }

  friend Quadratic operator+(Quadratic x, const Quadratic& y) { return x += y; }
  friend Quadratic operator-(Quadratic x, const Quadratic& y) { return x -= y; }
  friend Quadratic operator*(Quadratic x, const Quadratic& y) { return x *= y; }
  friend Quadratic operator/(Quadratic x, const Quadratic& y) { return x /= y; }
  friend Quadratic operator-(const Quadratic& x) { return Quadratic(-x.a_, -x.b_, x.d_); }
  friend bool operator==(const Quadratic& x, const Quadratic& y) {
    x.unify(y);
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  const Base* unify(const Quadratic& o) const {
    if (d_ && o.d_ && d_ != o.d_) {
      throw MixedFields("operands from different quadratic extensions");
    }
    return d_ ? d_ : o.d_;
  }

  std::string radicand_string() const {
    if (!d_) return "(?)";
    std::string s = matsuo::to_string(*d_);
    if (s.find_first_of("-/") != std::string::npos) return "(" + s + ")";
    return s;
  }

  Base a_{};
  Base b_{};
  const Base* d_ = nullptr;
};

template <class Base>
bool is_zero(const Quadratic<Base>& x) {
  return x.is_zero();
}
template <class Base>
std::string to_string(const Quadratic<Base>& x) {
  return x.to_string();
}

inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.to_string(); }
template <class Base>
std::ostream& operator<<(std::ostream& os, const Quadratic<Base>& x) {
  return os << x.to_string();
}

// ---------------------------------------------------------------------------
// Field descriptors. A descriptor builds constants and answers structural
// questions; elements carry enough identity to reject silent mixing.
// ---------------------------------------------------------------------------
template <class F>
concept ExactField = requires(const F& f, const typename F::Element& x, long n,
                              const Rational& q, std::mt19937_64& rng) {
  { f.zero() } -> std::same_as<typename F::Element>;
  { f.one() } -> std::same_as<typename F::Element>;
  { f.from_int(n) } -> std::same_as<typename F::Element>;
  { f.from_rational(q) } -> std::same_as<typename F::Element>;
  { f.sqrt(x) } -> std::same_as<std::optional<typename F::Element>>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.name() } -> std::convertible_to<std::string>;
  { f.random(rng) } -> std::same_as<typename F::Element>;
};

class RationalField {
 public:
  using Element = Rational;

  Element zero() const { return Rational(); }
  Element one() const { return Rational(1); }
  Element from_int(long n) const { return Rational(n); }
  Element from_rational(const Rational& q) const { return q; }
  // Integer square test on numerator and denominator.
  std::optional<Element> sqrt(const Element& x) const;
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }
  // Small-height rationals: numerator in [-9, 9], denominator in [1, 9].
  Element random(std::mt19937_64& rng) const;
  bool contains(const Element&) const { return true; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

class PrimeField {
 public:
  using Element = ModP;

  // p must be an odd prime below 2^62.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const { return p_; }
  Element zero() const { return ModP(0, p_); }
  Element one() const { return ModP(1, p_); }
  Element from_int(long n) const { return ModP(n, p_); }
  Element from_rational(const Rational& q) const;
  // Euler's criterion decides existence, Tonelli-Shanks finds the root; the
  // smaller of the two representatives is returned.
  std::optional<Element> sqrt(const Element& x) const;
  std::uint64_t characteristic() const { return p_; }
  std::string name() const { return "Fp:" + std::to_string(p_); }
  Element random(std::mt19937_64& rng) const;
  bool contains(const Element& x) const { return !x.bound() || x.modulus() == p_; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

template <ExactField BaseField>
class QuadraticField {
 public:
  using BaseElement = typename BaseField::Element;
  using Element = Quadratic<BaseElement>;

  // Rejects radicands that are zero or already squares in the base field.
  QuadraticField(BaseField base, const BaseElement& d) : base_(std::move(base)) {
    if (is_zero(d)) throw Error("quadratic extension radicand must be nonzero");
    if (base_.sqrt(d)) {
      throw Error("radicand " + to_string(d) + " is already a square in " + base_.name() +
                  "; drop the extension and use " + base_.name() + " directly");
    }
    d_ = detail::intern_radicand(base_.from_int(0) + d);
  }

  const BaseField& base() const { return base_; }
  const BaseElement& radicand() const { return *d_; }

  Element zero() const { return embed(base_.zero()); }
  Element one() const { return embed(base_.one()); }
  Element from_int(long n) const { return embed(base_.from_int(n)); }
  Element from_rational(const Rational& q) const { return embed(base_.from_rational(q)); }
  Element embed(const BaseElement& a) const { return Element(a, base_.zero(), d_); }
  Element make(const BaseElement& a, const BaseElement& b) const { return Element(a, b, d_); }
  // The adjoined root sqrt(d).
  Element generator() const { return Element(base_.zero(), base_.one(), d_); }

  std::optional<Element> sqrt(const Element& x) const {
    if (x.is_zero()) return zero();
    // (u + v sqrt d)^2 = x  <=>  u^2 + d v^2 = a, 2uv = b.
    BaseElement a = base_.zero() + x.a();
    BaseElement b = base_.zero() + x.b();
    if (is_zero(b)) {
      if (auto r = base_.sqrt(a)) return embed(*r);
      if (auto r = base_.sqrt(a / *d_)) return make(base_.zero(), *r);
      return std::nullopt;
    }
    auto n = base_.sqrt(a * a - *d_ * b * b);
    if (!n) return std::nullopt;
    BaseElement half = base_.from_rational(Rational(1, 2));
    for (const BaseElement& cand : {(a + *n) * half, (a - *n) * half}) {
      auto u = base_.sqrt(cand);
      if (!u || is_zero(*u)) continue;
      Element r = make(*u, b / (base_.from_int(2) * *u));
      if (r * r == x) return r;
    }
    return std::nullopt;
  }

  std::uint64_t characteristic() const { return base_.characteristic(); }
  std::string name() const {
    return base_.name() + "(sqrt:" + to_string(*d_) + ")";
  }
  Element random(std::mt19937_64& rng) const {
    BaseElement a = base_.random(rng);
    BaseElement b = base_.random(rng);
    return make(a, b);
  }
  bool contains(const Element& x) const { return !x.radicand() || x.radicand() == d_; }

  friend bool operator==(const QuadraticField& x, const QuadraticField& y) {
    return x.base_ == y.base_ && x.d_ == y.d_;
  }

 private:
  BaseField base_;
  const BaseElement* d_ = nullptr;
};

using RationalSqrtField = QuadraticField<RationalField>;
using PrimeSqrtField = QuadraticField<PrimeField>;

// Every field a descriptor string can name.
using AnyField = std::variant<RationalField, PrimeField, RationalSqrtField, PrimeSqrtField>;

// "Q", "Fp:<p>", "F<p>", "Q(sqrt:<d>)", "Fp:<p>(sqrt:<d>)".
AnyField parse_field(std::string_view text);
std::string field_name(const AnyField& f);

// Convenience free function matching the descriptor method.
template <ExactField F>
std::optional<typename F::Element> sqrt_in_field(const F& f, const typename F::Element& d) {
  return f.sqrt(d);
}

}  // namespace matsuo

namespace Eigen {

template <>
struct NumTraits<matsuo::Rational> : GenericNumTraits<matsuo::Rational> {
  using Real = matsuo::Rational;
  using NonInteger = matsuo::Rational;
  using Literal = matsuo::Rational;
  using Nested = matsuo::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 100
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<matsuo::ModP> : GenericNumTraits<matsuo::ModP> {
  using Real = matsuo::ModP;
  using NonInteger = matsuo::ModP;
  using Literal = matsuo::ModP;
  using Nested = matsuo::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 3,
    MulCost = 6
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <class Base>
struct NumTraits<matsuo::Quadratic<Base>> : GenericNumTraits<matsuo::Quadratic<Base>> {
  using Real = matsuo::Quadratic<Base>;
  using NonInteger = matsuo::Quadratic<Base>;
  using Literal = matsuo::Quadratic<Base>;
  using Nested = matsuo::Quadratic<Base>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2 * NumTraits<Base>::ReadCost,
    AddCost = 2 * NumTraits<Base>::AddCost,
    MulCost = 5 * NumTraits<Base>::MulCost
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // MATSUO_FIELD_HPP
