#include "qudo/phase.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qudo {

namespace {
constexpr double kPi = 3.14159265358979323846;

std::int64_t positive_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}
}  // namespace

Phase Phase::turns(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Phase: zero denominator");
  if (den < 0) { den = -den; num = -num; }
  num = positive_mod(num, den);
  std::int64_t g = std::gcd(num, den);  // gcd(0, den) == den, so 0 turns reduce to 0/1
  return Phase(num / g, den / g);
}

Phase Phase::operator*(const Phase& o) const {
  // common denominator add of turn fractions
  std::int64_t g = std::gcd(den_, o.den_);
  std::int64_t d = den_ / g * o.den_;
  std::int64_t n = num_ * (o.den_ / g) + o.num_ * (den_ / g);
  return turns(n, d);
}

Phase Phase::inverse() const { return turns(-num_, den_); }

Phase Phase::pow(std::int64_t k) const { return turns(num_ * k, den_); }

bool Phase::operator<(const Phase& o) const {
  // compare num_/den_ < o.num_/o.den_ without overflow worries (small dens)
  return num_ * o.den_ < o.num_ * den_;
}

std::complex<double> Phase::to_complex() const {
  double t = 2.0 * kPi * static_cast<double>(num_) / static_cast<double>(den_);
  return {std::cos(t), std::sin(t)};
}

std::string Phase::str() const {
  if (num_ == 0) return "1";
  if (den_ == 2) return "-1";
  if (den_ == 4) return num_ == 1 ? "i" : "-i";
  // exponent as multiple of pi: 2*num_/den_
  std::int64_t p = 2 * num_, q = den_;
  std::int64_t g = std::gcd(p, q);
  p /= g; q /= g;
  std::string s = "exp(i*pi";
  if (p != 1) s += "*" + std::to_string(p);
  if (q != 1) s += "/" + std::to_string(q);
  return s + ")";
}

// ---------------------------------------------------------------------------
// Cyclotomic

namespace {

// exact division of integer polynomials: num / den, remainder must vanish
std::vector<std::int64_t> poly_divide_exact(std::vector<std::int64_t> num,
                                            const std::vector<std::int64_t>& den) {
  int dn = static_cast<int>(num.size()) - 1;
  int dd = static_cast<int>(den.size()) - 1;
  if (den.back() != 1) throw std::logic_error("poly_divide_exact: divisor not monic");
  std::vector<std::int64_t> q(dn - dd + 1, 0);
  for (int i = dn; i >= dd; --i) {
    std::int64_t c = num[i];
    if (c == 0) continue;
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (std::int64_t c : num)
    if (c != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
  return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int q) {
  static std::map<int, std::vector<std::int64_t>> cache;
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  // x^q - 1
  std::vector<std::int64_t> f(q + 1, 0);
  f[0] = -1;
  f[q] = 1;
  for (int d = 1; d < q; ++d)
    if (q % d == 0) f = poly_divide_exact(std::move(f), cyclotomic_polynomial(d));
  cache[q] = f;
  return f;
}

Cyclotomic Cyclotomic::from_phase(const Phase& p, std::int64_t coeff) {
  Cyclotomic r;
  r.order_ = static_cast<int>(p.den());
  r.c_.assign(r.order_, 0);
  r.c_[static_cast<size_t>(p.num())] = coeff;
  return r;
}

Cyclotomic Cyclotomic::rescaled(int new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0) throw std::logic_error("Cyclotomic: bad rescale");
  Cyclotomic r;
  r.order_ = new_order;
  r.c_.assign(new_order, 0);
  int f = new_order / order_;
  for (int k = 0; k < order_; ++k) r.c_[static_cast<size_t>(k) * f] = c_[k];
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  int m = std::lcm(order_, o.order_);
  Cyclotomic a = rescaled(m), b = o.rescaled(m);
  for (int k = 0; k < m; ++k) a.c_[k] += b.c_[k];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  int m = std::lcm(order_, o.order_);
  Cyclotomic a = rescaled(m), b = o.rescaled(m);
  for (int k = 0; k < m; ++k) a.c_[k] -= b.c_[k];
  return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  int m = std::lcm(order_, o.order_);
  Cyclotomic a = rescaled(m), b = o.rescaled(m);
  Cyclotomic r;
  r.order_ = m;
  r.c_.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < m; ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[(i + j) % m] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic r;
  r.order_ = order_;
  r.c_.assign(order_, 0);
  for (int k = 0; k < order_; ++k) r.c_[(order_ - k) % order_] = c_[k];
  return r;
}

bool Cyclotomic::is_zero() const {
  // reduce the coefficient polynomial mod Phi_order_; zero iff remainder is 0
  std::vector<std::int64_t> rem = c_;
  const std::vector<std::int64_t> phi = cyclotomic_polynomial(order_);
  int dd = static_cast<int>(phi.size()) - 1;
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    std::int64_t c = rem[i];
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= c * phi[j];
  }
  for (int i = 0; i < dd && i < static_cast<int>(rem.size()); ++i)
    if (rem[i] != 0) return false;
  return true;
}

bool Cyclotomic::as_phase(Phase& out) const {
  for (int k = 0; k < order_; ++k) {
    Phase cand = Phase::turns(k, order_);
    if ((*this - Cyclotomic::from_phase(cand)).is_zero()) {
      out = cand;
      return true;
    }
  }
  return false;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0.0;
  for (int k = 0; k < order_; ++k) {
    if (c_[k] == 0) continue;
    z += static_cast<double>(c_[k]) * Phase::turns(k, order_).to_complex();
  }
  return z;
}

}  // namespace qudo
