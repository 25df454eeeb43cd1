#pragma once
// Exact arithmetic for roots of unity (Phase) and integer linear combinations
// of roots of unity (Cyclotomic).  All stabilizer eigenvalues, cocycle values
// and gate phases in this project are roots of unity of small order, so every
// verification can compare phases exactly instead of through floating point.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qudo {

/// A unit-modulus complex number e^{2*pi*i*num/den}, stored as a reduced
/// fraction of a full turn with den >= 1 and 0 <= num < den.
class Phase {
 public:
  Phase() : num_(0), den_(1) {}

  /// e^{2*pi*i*num/den}; the fraction is reduced and brought into [0,1).
  static Phase turns(std::int64_t num, std::int64_t den);
  static Phase one() { return Phase(); }
  static Phase minus_one() { return turns(1, 2); }
  static Phase i() { return turns(1, 4); }
  static Phase minus_i() { return turns(3, 4); }
  /// Primitive q-th root of unity to the k-th power: e^{2*pi*i*k/q}.
  static Phase root_of_unity(std::int64_t q, std::int64_t k = 1) { return turns(k, q); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_one() const { return num_ == 0; }
  bool is_real() const { return den_ <= 2; }

  Phase operator*(const Phase& o) const;
  Phase inverse() const;
  Phase conj() const { return inverse(); }
  Phase pow(std::int64_t k) const;

  bool operator==(const Phase& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Phase& o) const { return !(*this == o); }
  bool operator<(const Phase& o) const;  // orders by turn fraction

  std::complex<double> to_complex() const;
  /// "1", "-1", "i", "-i" or "exp(i*pi*p/q)" with p/q reduced, p/q in [0,2).
  std::string str() const;

 private:
  Phase(std::int64_t n, std::int64_t d) : num_(n), den_(d) {}
  std::int64_t num_, den_;
};

/// Exact element of Z[zeta_Q]: an integer linear combination of Q-th roots of
/// unity.  Zero testing reduces the coefficient polynomial modulo the Q-th
/// cyclotomic polynomial, so equalities like 1 + zeta_4^2 = 0 are decided
/// exactly.  Used for characters and their orthogonality relations.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), c_{0} {}                       // zero
  explicit Cyclotomic(std::int64_t n) : order_(1), c_{n} {}
  static Cyclotomic from_phase(const Phase& p, std::int64_t coeff = 1);

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { *this = *this + o; return *this; }
  Cyclotomic conj() const;

  bool is_zero() const;
  bool operator==(const Cyclotomic& o) const { return (*this - o).is_zero(); }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
  bool equals_integer(std::int64_t n) const { return (*this - Cyclotomic(n)).is_zero(); }

  /// True if the value is exactly a single root of unity times `coeff` 1,
  /// in which case `out` receives it.  (Best-effort convenience; exact.)
  bool as_phase(Phase& out) const;

  std::complex<double> to_complex() const;
  int order() const { return order_; }

 private:
  int order_;                       // values live in Z[zeta_order_]
  std::vector<std::int64_t> c_;     // c_[k] multiplies zeta_order_^k; size == order_
  Cyclotomic rescaled(int new_order) const;
  friend class CyclotomicTest;
};

/// Coefficients (ascending degree) of the Q-th cyclotomic polynomial.
/// Exact integer computation by dividing x^Q - 1 by Phi_d for proper d | Q.
std::vector<std::int64_t> cyclotomic_polynomial(int q);

}  // namespace qudo
