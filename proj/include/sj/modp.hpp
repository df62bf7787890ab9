#ifndef SJ_MODP_HPP
#define SJ_MODP_HPP

#include "sj/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sj {

struct bad_prime : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_small_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Element of F_p for a small prime p > 3 (the Jordan identities need 2 and 3
// invertible). modulus 0 marks a detached zero so that default-constructed
// values behave as additive identity in generic code.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(long long v, long long p) : p_(p) {
    if (p != 0) {
      v_ = v % p;
      if (v_ < 0) v_ += p;
    } else {
      if (v != 0) throw bad_prime("Fp with modulus 0 must be zero");
      v_ = 0;
    }
  }

  long long value() const { return v_; }
  long long modulus() const { return p_; }

  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    long long p = join(a, b);
    if (p == 0) return Fp();
    return Fp(a.v_ + b.v_, p);
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    long long p = join(a, b);
    if (p == 0) return Fp();
    return Fp(a.v_ - b.v_, p);
  }
  friend Fp operator-(const Fp& a) {
    if (a.p_ == 0) return a;
    return Fp(-a.v_, a.p_);
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    long long p = join(a, b);
    if (p == 0 || a.v_ == 0 || b.v_ == 0) return Fp(0, p);
    return Fp(a.v_ * b.v_, p);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }
  Fp& operator/=(const Fp& b) { return *this = *this / b; }

  Fp inverse() const {
    if (v_ == 0 || p_ == 0) throw bad_prime("division by zero in F_p");
    long long t = 0, nt = 1, r = p_, nr = v_;
    while (nr != 0) {
      long long q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    return Fp(t, p_);
  }

 private:
  static long long join(const Fp& a, const Fp& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0) return a.p_;
    if (a.p_ != b.p_) throw bad_prime("mixed moduli in F_p arithmetic");
    return a.p_;
  }

  long long v_;
  long long p_;
};

inline bool is_zero(const Fp& x) { return x.value() == 0; }
inline std::string to_string(const Fp& x) { return std::to_string(x.value()); }

inline void require_odd_prime_gt3(long long p) {
  if (!is_small_prime(p) || p == 2 || p == 3)
    throw bad_prime("modulus must be a prime > 3, got " + std::to_string(p));
}

// Residue of an exact rational; BadPrime when the denominator vanishes mod p,
// which tells the caller to pick another prime.
inline Fp reduce_mod_p(const Rational& x, long long p) {
  require_odd_prime_gt3(p);
  BigInt num = numerator(x) % p;
  BigInt den = denominator(x) % p;
  if (den == 0)
    throw bad_prime("denominator divisible by " + std::to_string(p));
  return Fp(static_cast<long long>(num), p) /
         Fp(static_cast<long long>(den), p);
}

}  // namespace sj

#endif
