#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gtcat {

// Element of Q/Z stored as a reduced fraction in [0, 1).  Models the root of
// unity e^{2*pi*i*q} in k^x; multiplying scalars corresponds to adding phases.
class Phase {
 public:
  Phase() = default;
  Phase(long long num, long long den) : num_(num), den_(den) {
    if (den_ <= 0) throw std::invalid_argument("Phase: denominator must be positive");
    reduce();
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Phase operator+(const Phase& o) const {
    long long g = std::gcd(den_, o.den_);
    long long d = den_ / g * o.den_;
    return Phase(num_ * (o.den_ / g) + o.num_ * (den_ / g), d);
  }
  Phase operator-() const { return Phase(-num_, den_); }
  Phase operator-(const Phase& o) const { return *this + (-o); }
  Phase& operator+=(const Phase& o) { return *this = *this + o; }
  Phase& operator-=(const Phase& o) { return *this = *this - o; }

  // Integer multiple n*q (repeated addition in Q/Z).
  Phase times(long long n) const {
    long long r = ((n % den_) * (num_ % den_)) % den_;
    return Phase(r, den_);
  }

  bool operator==(const Phase& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Phase& o) const { return !(*this == o); }
  bool operator<(const Phase& o) const { return num_ * o.den_ < o.num_ * den_; }

  std::string str() const {
    if (num_ == 0) return "0";
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Accepts "0", "p/q" and bare integers (taken mod 1).
  static Phase parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Phase(std::stoll(s), 1);
    long long p = std::stoll(s.substr(0, slash));
    long long q = std::stoll(s.substr(slash + 1));
    return Phase(p, q);
  }

 private:
  void reduce() {
    num_ %= den_;
    if (num_ < 0) num_ += den_;
    long long g = std::gcd(num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace gtcat
