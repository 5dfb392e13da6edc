#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace corings {

// exact rational; mpq_class keeps lowest terms, positive denominator
struct Rat {
  mpq_class v;

  Rat() : v(0) {}
  explicit Rat(long n) : v(n) {}
  Rat(long n, long d) : v(n, d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    v.canonicalize();
  }
  explicit Rat(mpq_class q) : v(std::move(q)) { v.canonicalize(); }

  friend Rat operator+(const Rat& x, const Rat& y) { return Rat(mpq_class(x.v + y.v)); }
  friend Rat operator-(const Rat& x, const Rat& y) { return Rat(mpq_class(x.v - y.v)); }
  friend Rat operator*(const Rat& x, const Rat& y) { return Rat(mpq_class(x.v * y.v)); }
  friend Rat operator-(const Rat& x) { return Rat(mpq_class(-x.v)); }
  friend Rat operator/(const Rat& x, const Rat& y) {
    if (y.v == 0) throw std::domain_error("division by zero");
    return Rat(mpq_class(x.v / y.v));
  }
  friend bool operator==(const Rat& x, const Rat& y) { return x.v == y.v; }
  friend bool operator!=(const Rat& x, const Rat& y) { return x.v != y.v; }

  bool is_zero() const { return v == 0; }
  std::string str() const { return v.get_str(); }
};

inline Rat inv(const Rat& x) {
  if (x.v == 0) throw std::domain_error("inverse of zero");
  return Rat(mpq_class(1 / x.v));
}

// prime-field element carrying its modulus; moduli must match in arithmetic
struct Fp {
  std::uint64_t v = 0;
  std::uint64_t p = 0;

  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t modulus) : v(value % modulus), p(modulus) {}

  static void same(const Fp& x, const Fp& y) {
    if (x.p != y.p) throw std::logic_error("mixed moduli");
  }

  friend Fp operator+(const Fp& x, const Fp& y) { same(x, y); return Fp(x.v + y.v, x.p); }
  friend Fp operator-(const Fp& x, const Fp& y) { same(x, y); return Fp(x.v + (x.p - y.v), x.p); }
  friend Fp operator*(const Fp& x, const Fp& y) { same(x, y); return Fp(x.v * y.v, x.p); }
  friend Fp operator-(const Fp& x) { return Fp(x.p - x.v, x.p); }
  friend bool operator==(const Fp& x, const Fp& y) { same(x, y); return x.v == y.v; }
  friend bool operator!=(const Fp& x, const Fp& y) { return !(x == y); }

  bool is_zero() const { return v == 0; }
  std::string str() const { return std::to_string(v); }
};

inline Fp inv(const Fp& x) {
  if (x.v == 0) throw std::domain_error("inverse of zero");
  // extended euclid on (v, p)
  std::int64_t a = static_cast<std::int64_t>(x.v), m = static_cast<std::int64_t>(x.p);
  std::int64_t r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1; r0 = r1; r1 = r2;
    std::int64_t s2 = s0 - q * s1; s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw std::domain_error("non-unit in prime field");
  std::int64_t u = s0 % m; if (u < 0) u += m;
  return Fp(static_cast<std::uint64_t>(u), x.p);
}

inline Fp operator/(const Fp& x, const Fp& y) { return x * inv(y); }

namespace detail {
inline void check_integer_literal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bad scalar literal: " + s);
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad scalar literal: " + s);
}
}  // namespace detail

// field contexts; every matrix carries one so Fp values agree on the modulus
struct QField {
  using K = Rat;
  K zero() const { return Rat(); }
  K one() const { return Rat(1); }
  K from_long(long n) const { return Rat(n); }
  K parse(const std::string& s) const {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      detail::check_integer_literal(s);
      return Rat(mpq_class(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    detail::check_integer_literal(num);
    detail::check_integer_literal(den);
    mpq_class q(s);
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator: " + s);
    return Rat(std::move(q));
  }
  std::string name() const { return "q"; }
  friend bool operator==(const QField&, const QField&) { return true; }
};

struct FpField {
  std::uint64_t p = 2;
  using K = Fp;
  K zero() const { return Fp(0, p); }
  K one() const { return Fp(1, p); }
  K from_long(long n) const {
    std::int64_t m = static_cast<std::int64_t>(p);
    std::int64_t r = n % m; if (r < 0) r += m;
    return Fp(static_cast<std::uint64_t>(r), p);
  }
  K parse(const std::string& s) const {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      // a/b is accepted only when b stays invertible mod p
      auto num = reduce(s.substr(0, slash)), den = reduce(s.substr(slash + 1));
      if (den.v == 0)
        throw std::domain_error("denominator divisible by the modulus: " + s);
      return num * inv(den);
    }
    return reduce(s);
  }
  std::string name() const { return "fp:" + std::to_string(p); }
  friend bool operator==(const FpField& a, const FpField& b) { return a.p == b.p; }

 private:
  K reduce(const std::string& s) const {
    detail::check_integer_literal(s);
    mpz_class z(s);
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return Fp(r.get_ui(), p);
  }
};

}  // namespace corings
