#pragma once

// Exact scalar fields: the rationals (GMP) and prime fields F_p.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lrc/errors.hpp"

namespace lrc {

using Rational = mpq_class;

// Element of F_p. The modulus travels with the value; a default-constructed
// Zp is the zero of every prime field and adopts the modulus of whatever it
// is combined with.
class Zp {
 public:
  Zp() = default;
  Zp(std::uint64_t value, std::uint32_t modulus) : v_(0), p_(modulus) {
    if (modulus < 2) throw std::invalid_argument("Zp: modulus must be a prime >= 2");
    v_ = static_cast<std::uint32_t>(value % modulus);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  friend Zp operator+(const Zp& a, const Zp& b) {
    const auto p = common(a, b);
    if (p == 0) return {};
    return Zp(std::uint64_t{a.v_} + b.v_, p);
  }
  friend Zp operator-(const Zp& a, const Zp& b) {
    const auto p = common(a, b);
    if (p == 0) return {};
    return Zp(std::uint64_t{a.v_} + p - b.v_, p);
  }
  friend Zp operator*(const Zp& a, const Zp& b) {
    const auto p = common(a, b);
    if (a.v_ == 0 || b.v_ == 0) return p == 0 ? Zp{} : Zp(0, p);
    return Zp(std::uint64_t{a.v_} * b.v_, p);
  }
  friend Zp operator/(const Zp& a, const Zp& b) { return a * b.inverse(); }
  Zp operator-() const { return v_ == 0 ? *this : Zp(p_ - v_, p_); }
  Zp& operator+=(const Zp& o) { return *this = *this + o; }
  Zp& operator-=(const Zp& o) { return *this = *this - o; }
  Zp& operator*=(const Zp& o) { return *this = *this * o; }
  Zp& operator/=(const Zp& o) { return *this = *this / o; }

  friend bool operator==(const Zp& a, const Zp& b) {
    if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) return false;
    return a.v_ == b.v_;
  }

  Zp inverse() const {
    if (v_ == 0) throw std::domain_error("Zp: division by zero");
    // Fermat: v^(p-2).
    std::uint64_t result = 1, base = v_, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return Zp(result, p_);
  }

 private:
  static std::uint32_t common(const Zp& a, const Zp& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ != 0 && b.p_ != a.p_) throw std::logic_error("Zp: mixing different prime fields");
    return a.p_;
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Zp& x) { return x.value() == 0; }

inline Rational inverse(const Rational& x) {
  if (is_zero(x)) throw std::domain_error("Rational: division by zero");
  return 1 / x;
}
inline Zp inverse(const Zp& x) { return x.inverse(); }

inline std::string to_string(const Rational& x) { return x.get_str(); }
inline std::string to_string(const Zp& x) { return std::to_string(x.value()); }

// x * n for a machine integer n, without needing a field handle.
inline Rational times(const Rational& x, long n) { return x * n; }
inline Zp times(const Zp& x, long n) {
  if (x.modulus() == 0) return {};
  const long p = x.modulus();
  const long r = ((n % p) + p) % p;
  return x * Zp(static_cast<std::uint64_t>(r), x.modulus());
}

namespace detail {
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  mpz_class num, den(1);
  try {
    if (slash == std::string::npos) {
      num = mpz_class(s, 10);
    } else {
      num = mpz_class(s.substr(0, slash), 10);
      den = mpz_class(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational number: \"" + s + "\"");
  }
  if (den == 0) throw ParseError("zero denominator in \"" + s + "\"");
  Rational q(num, den);
  q.canonicalize();
  return q;
}
}  // namespace detail

template <class K>
class Field;

template <>
class Field<Rational> {
 public:
  using Scalar = Rational;

  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  Rational from_int(long n) const { return n; }
  Rational from_rational(const Rational& q) const { return q; }
  Rational parse(std::string_view s) const { return detail::parse_rational(s); }
  unsigned characteristic() const { return 0; }
  std::string name() const { return "Q"; }

  bool operator==(const Field&) const = default;
};

template <>
class Field<Zp> {
 public:
  using Scalar = Zp;

  explicit Field(std::uint32_t p) : p_(p) {
    if (p < 2 || p > (1u << 31) || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0)
      throw std::invalid_argument("Field<Zp>: " + std::to_string(p) + " is not a supported prime");
  }

  Zp zero() const { return Zp(0, p_); }
  Zp one() const { return Zp(1, p_); }
  Zp from_int(long n) const { return times(one(), n); }
  Zp from_rational(const Rational& q) const {
    const mpz_class pm(p_);
    mpz_class num = q.get_num() % pm, den = q.get_den() % pm;
    if (num < 0) num += pm;
    if (den < 0) den += pm;
    if (den == 0) throw ParseError("denominator of " + q.get_str() + " vanishes mod " + std::to_string(p_));
    return Zp(num.get_ui(), p_) / Zp(den.get_ui(), p_);
  }
  Zp parse(std::string_view s) const { return from_rational(detail::parse_rational(s)); }
  unsigned characteristic() const { return p_; }
  std::string name() const { return "F_" + std::to_string(p_); }

  bool operator==(const Field&) const = default;

 private:
  std::uint32_t p_;
};

// Runtime choice of field, resolved to a template instantiation by callers.
struct FieldSpec {
  enum class Kind { rational, prime };
  Kind kind = Kind::rational;
  std::uint32_t p = 0;

  std::string name() const { return kind == Kind::rational ? "Q" : "F_" + std::to_string(p); }
  bool operator==(const FieldSpec&) const = default;

  // Accepts "Q", "rational", "prime:P", "F_P", "FP" or a bare prime "P".
  static FieldSpec parse(std::string_view text) {
    std::string s(text);
    if (s == "Q" || s == "rational" || s == "rationals") return {};
    std::string digits;
    for (const std::string prefix : {"prime:", "F_", "F", "p="}) {
      if (s.rfind(prefix, 0) == 0) {
        digits = s.substr(prefix.size());
        break;
      }
    }
    if (digits.empty()) digits = s;
    if (digits.empty() || digits.size() > 10 || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("unrecognised field \"" + s + "\"");
    const unsigned long long value = std::stoull(digits);
    if (value > (1ull << 31)) throw ParseError("prime " + digits + " is too large");
    FieldSpec f{Kind::prime, static_cast<std::uint32_t>(value)};
    try {
      (void)Field<Zp>(f.p);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    return f;
  }
};

}  // namespace lrc
