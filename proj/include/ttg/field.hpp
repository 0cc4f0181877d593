#ifndef TTG_FIELD_HPP
#define TTG_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "ttg/error.hpp"

namespace ttg {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// A field element. For F_p only `ip` is meaningful (a residue in [0,p)),
// for Q only `rq`. Elements carry no field tag of their own; all arithmetic
// goes through a Field, which knows which member to use.
struct Scalar {
  std::int64_t ip = 0;
  BigRat rq = 0;
};

// Exact coefficient field: either a prime field F_p or the rationals.
// No floating point anywhere.
class Field {
 public:
  enum class Kind { Fp, Q };

  static Field fp(std::int64_t p) {
    require(p >= 2 && is_prime(p), errc::invalid_params,
            "field characteristic must be prime, got " + std::to_string(p));
    Field f;
    f.kind_ = Kind::Fp;
    f.p_ = p;
    return f;
  }
  static Field rationals() {
    Field f;
    f.kind_ = Kind::Q;
    return f;
  }
  // char 0 selects Q, otherwise F_p.
  static Field of_characteristic(std::int64_t p) {
    return p == 0 ? rationals() : fp(p);
  }

  Kind kind() const { return kind_; }
  bool is_fp() const { return kind_ == Kind::Fp; }
  std::int64_t characteristic() const { return kind_ == Kind::Fp ? p_ : 0; }

  bool operator==(const Field& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const Field& o) const { return !(*this == o); }

  Scalar zero() const { return Scalar{}; }
  Scalar one() const { return from_int(1); }

  Scalar from_int(std::int64_t n) const {
    Scalar s;
    if (is_fp()) {
      s.ip = n % p_;
      if (s.ip < 0) s.ip += p_;
    } else {
      s.rq = n;
    }
    return s;
  }

  Scalar from_fraction(std::int64_t num, std::int64_t den) const {
    require(den != 0, errc::invalid_params, "zero denominator");
    if (is_fp()) return mul(from_int(num), inv(from_int(den)));
    Scalar s;
    s.rq = BigRat(BigInt(num), BigInt(den));
    return s;
  }

  bool is_zero(const Scalar& a) const {
    return is_fp() ? a.ip == 0 : a.rq == 0;
  }
  bool eq(const Scalar& a, const Scalar& b) const {
    return is_fp() ? a.ip == b.ip : a.rq == b.rq;
  }

  Scalar add(const Scalar& a, const Scalar& b) const {
    Scalar s;
    if (is_fp()) {
      s.ip = a.ip + b.ip;
      if (s.ip >= p_) s.ip -= p_;
    } else {
      s.rq = a.rq + b.rq;
    }
    return s;
  }
  Scalar sub(const Scalar& a, const Scalar& b) const {
    Scalar s;
    if (is_fp()) {
      s.ip = a.ip - b.ip;
      if (s.ip < 0) s.ip += p_;
    } else {
      s.rq = a.rq - b.rq;
    }
    return s;
  }
  Scalar neg(const Scalar& a) const { return sub(zero(), a); }
  Scalar mul(const Scalar& a, const Scalar& b) const {
    Scalar s;
    if (is_fp()) {
      s.ip = mulmod(a.ip, b.ip);
    } else {
      s.rq = a.rq * b.rq;
    }
    return s;
  }
  Scalar inv(const Scalar& a) const {
    require(!is_zero(a), errc::invalid_params, "division by zero");
    Scalar s;
    if (is_fp()) {
      s.ip = powmod(a.ip, p_ - 2);  // Fermat
    } else {
      s.rq = 1 / a.rq;
    }
    return s;
  }
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  std::string to_string(const Scalar& a) const {
    if (is_fp()) return std::to_string(a.ip);
    return a.rq.str();
  }

  std::string name() const {
    return is_fp() ? "F" + std::to_string(p_) : "Q";
  }

  // Only sensible over F_p; n-th roots of unity are the solutions of x^n = 1
  // in F_p^*, of which there are gcd(n, p-1).
  std::int64_t multiplicative_order(const Scalar& a) const {
    require(is_fp() && !is_zero(a), errc::invalid_params,
            "multiplicative_order needs a nonzero F_p element");
    std::int64_t r = 1, x = a.ip;
    while (x != 1) {
      x = mulmod(x, a.ip);
      ++r;
      require(r <= p_, errc::invalid_params, "order overflow");
    }
    return r;
  }

  static bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::int64_t mulmod(std::int64_t a, std::int64_t b) const {
    return static_cast<std::int64_t>(
        static_cast<__int128>(a) * b % p_);
  }
  std::int64_t powmod(std::int64_t a, std::int64_t e) const {
    std::int64_t r = 1;
    while (e > 0) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  }

  Kind kind_ = Kind::Q;
  std::int64_t p_ = 0;
};

}  // namespace ttg

#endif
