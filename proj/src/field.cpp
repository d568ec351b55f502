#include "matsuo/field.hpp"

#include <cctype>

namespace matsuo {

namespace {

std::int64_t reduce(std::int64_t v, std::uint64_t p) {
  auto m = static_cast<std::int64_t>(p);
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit integers.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

// --- Rational ---------------------------------------------------------------

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto fail = [&](std::size_t col) {
    throw DescriptorError("malformed rational", s, col);
  };
  if (s.empty()) fail(1);
  std::size_t slash = s.find('/');
  auto check_int = [&](std::size_t from, std::size_t to) {
    std::size_t i = from;
    if (i < to && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == to) fail(i + 1);
    for (; i < to; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail(i + 1);
    }
  };
  if (slash == std::string::npos) {
    check_int(0, s.size());
    std::string digits = s[0] == '+' ? s.substr(1) : s;
    return Rational(mpq_class(mpz_class(digits)));
  }
  check_int(0, slash);
  check_int(slash + 1, s.size());
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw DivisionByZero();
  return Rational(mpq_class(mpz_class(num), d));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

std::optional<Rational> RationalField::sqrt(const Rational& x) const {
  if (x.sign() < 0) return std::nullopt;
  const mpz_class& num = x.value().get_num();
  const mpz_class& den = x.value().get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

Rational RationalField::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 9);
  long n = num(rng);
  long d = den(rng);
  return Rational(n, d);
}

// --- ModP -------------------------------------------------------------------

ModP::ModP(std::int64_t value, std::uint64_t p) : v_(reduce(value, p)), p_(p) {}

std::uint64_t ModP::unify(const ModP& o) {
  if (p_ && o.p_ && p_ != o.p_) {
    throw MixedFields("residues modulo " + std::to_string(p_) + " and " + std::to_string(o.p_));
  }
  if (!p_ && o.p_) {
    p_ = o.p_;
    v_ = reduce(v_, p_);
  }
  return p_;
}

ModP& ModP::operator+=(const ModP& o) {
  std::uint64_t p = unify(o);
  if (!p) {
    v_ += o.v_;
    return *this;
  }
  std::int64_t w = o.p_ ? o.v_ : reduce(o.v_, p);
  v_ = reduce(v_ + w, p);
  return *this;
}

ModP& ModP::operator-=(const ModP& o) {
  std::uint64_t p = unify(o);
  if (!p) {
    v_ -= o.v_;
    return *this;
  }
  std::int64_t w = o.p_ ? o.v_ : reduce(o.v_, p);
  v_ = reduce(v_ - w, p);
  return *this;
}

ModP& ModP::operator*=(const ModP& o) {
  std::uint64_t p = unify(o);
  if (!p) {
    v_ *= o.v_;
    return *this;
  }
  std::int64_t w = o.p_ ? o.v_ : reduce(o.v_, p);
  v_ = static_cast<std::int64_t>(
      mulmod(static_cast<std::uint64_t>(v_), static_cast<std::uint64_t>(w), p));
  return *this;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw DivisionByZero();
  if (!p_) {
    if (v_ == 1 || v_ == -1) return *this;
    throw Error("cannot invert an integer constant not bound to a prime field");
  }
  return ModP(static_cast<std::int64_t>(powmod(static_cast<std::uint64_t>(v_), p_ - 2, p_)), p_);
}

ModP ModP::pow(std::uint64_t e) const {
  if (!p_) throw Error("pow on an unbound residue");
  return ModP(static_cast<std::int64_t>(powmod(static_cast<std::uint64_t>(v_), e, p_)), p_);
}

bool operator==(const ModP& a, const ModP& b) {
  if (a.p_ && b.p_ && a.p_ != b.p_) {
    throw MixedFields("residues modulo " + std::to_string(a.p_) + " and " + std::to_string(b.p_));
  }
  std::uint64_t p = a.p_ ? a.p_ : b.p_;
  if (!p) return a.v_ == b.v_;
  return reduce(a.v_, p) == reduce(b.v_, p);
}

// --- PrimeField -------------------------------------------------------------

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p == 2) throw BadCharacteristic("characteristic 2 is not supported");
  if (p >= (std::uint64_t{1} << 62) || !is_prime(p)) {
    throw Error(std::to_string(p) + " is not an odd prime below 2^62");
  }
}

ModP PrimeField::from_rational(const Rational& q) const {
  mpz_class pz(static_cast<unsigned long>(p_));
  mpz_class num = q.value().get_num() % pz;
  mpz_class den = q.value().get_den() % pz;
  if (den == 0) throw DivisionByZero();
  ModP n(num.get_si(), p_);
  ModP d(den.get_si(), p_);
  return n / d;
}

std::optional<ModP> PrimeField::sqrt(const ModP& x0) const {
  ModP x = zero() + x0;
  if (x.is_zero()) return zero();
  auto a = static_cast<std::uint64_t>(x.value());
  if (powmod(a, (p_ - 1) / 2, p_) != 1) return std::nullopt;

  // Tonelli-Shanks.
  std::uint64_t q = p_ - 1;
  std::uint64_t s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p_ - 1) / 2, p_) != p_ - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = powmod(z, q, p_);
  std::uint64_t t = powmod(a, q, p_);
  std::uint64_t r = powmod(a, (q + 1) / 2, p_);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p_);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p_);
    m = i;
    c = mulmod(b, b, p_);
    t = mulmod(t, c, p_);
    r = mulmod(r, b, p_);
  }
  std::uint64_t other = p_ - r;
  return ModP(static_cast<std::int64_t>(std::min(r, other)), p_);
}

ModP PrimeField::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, p_ - 1);
  return ModP(static_cast<std::int64_t>(dist(rng)), p_);
}

// --- descriptors ------------------------------------------------------------

namespace {

struct FieldParser {
  std::string text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw DescriptorError(what, text, pos + 1);
  }

  bool consume(std::string_view lit) {
    if (text.compare(pos, lit.size(), lit) == 0) {
      pos += lit.size();
      return true;
    }
    return false;
  }

  std::uint64_t prime() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a prime");
    if (pos - start > 19) {
      pos = start;
      fail("prime too large");
    }
    return std::stoull(text.substr(start, pos - start));
  }

  // Radicand up to the closing parenthesis.
  std::string radicand() {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ')') ++pos;
    if (start == pos) fail("expected a radicand");
    if (pos == text.size()) fail("expected ')'");
    std::string r = text.substr(start, pos - start);
    ++pos;
    return r;
  }
};

}  // namespace

AnyField parse_field(std::string_view text) {
  FieldParser in{std::string(text)};
  std::optional<PrimeField> prime;
  if (in.consume("Q")) {
    // rationals
  } else if (in.consume("Fp:") || in.consume("F")) {
    std::size_t at = in.pos;
    std::uint64_t p = in.prime();
    try {
      prime.emplace(p);
    } catch (const Error& e) {
      in.pos = at;
      in.fail(e.what());
    }
  } else {
    in.fail("expected 'Q', 'Fp:<p>' or 'F<p>'");
  }

  if (in.pos == in.text.size()) {
    if (prime) return *prime;
    return RationalField{};
  }
  if (!in.consume("(sqrt:")) in.fail("expected '(sqrt:<d>)' or end of descriptor");
  std::size_t at = in.pos;
  std::string d = in.radicand();
  if (in.pos != in.text.size()) in.fail("trailing characters");
  try {
    Rational rd = Rational::parse(d);
    if (prime) return PrimeSqrtField(*prime, prime->from_rational(rd));
    return RationalSqrtField(RationalField{}, rd);
  } catch (const DescriptorError&) {
    in.pos = at;
    in.fail("malformed radicand");
  } catch (const Error& e) {
    in.pos = at;
    in.fail(e.what());
  }
}

std::string field_name(const AnyField& f) {
  return std::visit([](const auto& field) { return field.name(); }, f);
}

}  // namespace matsuo
