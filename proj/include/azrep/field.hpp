#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace azrep {

// Prime fields GF(p), p <= 251. Elements are canonical residues 0..p-1.
struct GF {
  using Elem = std::int64_t;

  int p = 2;

  GF() = default;
  explicit GF(int prime) : p(prime) {
    if (prime < 2 || prime > 251 || !is_prime(prime))
      throw std::invalid_argument("GF: p must be a prime <= 251");
  }

  static bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t n) const {
    Elem r = n % p;
    return r < 0 ? r + p : r;
  }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return from_int(a - b); }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return from_int(-a); }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("GF: inverse of zero");
    // Fermat: a^(p-2)
    Elem r = 1, base = a;
    int e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  std::string name() const { return "gf" + std::to_string(p); }
  std::string str(Elem a) const { return std::to_string(a); }
  Elem parse(const std::string& s) const { return from_int(std::stoll(s)); }

  bool operator==(const GF& o) const { return p == o.p; }
};

// Exact rationals, stored in lowest terms with positive denominator
// (cpp_rational maintains that canonical form).
struct QQ {
  using Elem = boost::multiprecision::cpp_rational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(std::int64_t n) const { return Elem(n); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("QQ: inverse of zero");
    return Elem(1) / a;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  std::string name() const { return "rational"; }
  std::string str(const Elem& a) const {
    if (denominator(a) == 1) return numerator(a).str();
    return numerator(a).str() + "/" + denominator(a).str();
  }
  Elem parse(const std::string& s) const {
    auto slash = s.find('/');
    if (slash == std::string::npos)
      return Elem(boost::multiprecision::cpp_int(s));
    return Elem(boost::multiprecision::cpp_int(s.substr(0, slash)),
                boost::multiprecision::cpp_int(s.substr(slash + 1)));
  }

  bool operator==(const QQ&) const { return true; }
};

}  // namespace azrep
