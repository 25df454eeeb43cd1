#include "qudo/compiler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace qudo {

namespace {

void require_n(int n) {
  if (n < 3 || n > 16)
    throw std::invalid_argument(
        "qubit compiler: need 3 <= n <= 16 (group order 8N = 2^n)");
}

std::string gate_label(GateKind k) {
  switch (k) {
    case GateKind::X: return "x";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::P: return "p";
    case GateKind::Pdg: return "pdg";
    case GateKind::CZ: return "cz";
    case GateKind::CX: return "cx";
    case GateKind::CS: return "cs";
  }
  return "?";
}

bool is_single_qubit(GateKind k) {
  switch (k) {
    case GateKind::X:
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::P:
    case GateKind::Pdg:
      return true;
    default:
      return false;
  }
}

/// diag(1, e^{2 pi i / 2^k}) on `qubit`, spelled with the named kinds for
/// k = 1, 2, 3 (Z, S, T) and the generic P beyond.
void add_phase_gate(QubitCircuit& c, int qubit, int k, bool dagger = false) {
  switch (k) {
    case 1: c.z(qubit); return;  // self-inverse
    case 2: dagger ? c.sdg(qubit) : c.s(qubit); return;
    case 3: dagger ? c.tdg(qubit) : c.t(qubit); return;
    default: dagger ? c.pdg(k, qubit) : c.p(k, qubit); return;
  }
}

/// P(2 pi / 2^k)^e on `qubit`, e reduced mod 2^k and split into its binary
/// digits: the 2^b-th power of P(2 pi / 2^k) is P(2 pi / 2^{k-b}).
void add_phase_power(QubitCircuit& c, int qubit, int k, std::int64_t e) {
  const std::int64_t m = std::int64_t{1} << k;
  e = ((e % m) + m) % m;
  for (int b = 0; b < k; ++b)
    if ((e >> b) & 1) add_phase_gate(c, qubit, k - b);
}

/// Controlled P(2 pi / 2^m) between `control` and `target`.  CZ and CS cover
/// m = 1, 2; larger m uses the conjugation identity
///   CP(theta) = P(theta/2)_c P(theta/2)_t CX (P(theta/2)_t)^dag CX.
void add_controlled_phase(QubitCircuit& c, int control, int target, int m) {
  if (m == 1) {
    c.cz(control, target);
  } else if (m == 2) {
    c.cs(target, {control});
  } else {
    add_phase_gate(c, control, m + 1);
    add_phase_gate(c, target, m + 1);
    c.cx(target, {control});
    add_phase_gate(c, target, m + 1, /*dagger=*/true);
    c.cx(target, {control});
  }
}

/// CP(2 pi / 2^k)^e, digit by digit as above.
void add_controlled_phase_power(QubitCircuit& c, int control, int target,
                                int k, std::int64_t e) {
  const std::int64_t m = std::int64_t{1} << k;
  e = ((e % m) + m) % m;
  for (int b = 0; b < k; ++b)
    if ((e >> b) & 1) add_controlled_phase(c, control, target, k - b);
}

/// Appends src's gates to dst, optionally adding one extra control qubit to
/// every gate (only the X / CX kinds appear in the lists this is used on).
void append_gates(QubitCircuit& dst, const std::vector<QubitGate>& src,
                  int extra_control = -1) {
  for (QubitGate g : src) {
    if (extra_control >= 0) {
      if (g.kind == GateKind::X)
        g.kind = GateKind::CX;
      else if (g.kind != GateKind::CX)
        throw std::logic_error("append_gates: cannot control this gate kind");
      g.controls.push_back(extra_control);
    }
    dst.add(std::move(g));
  }
}

void require_group_element(int n, const GroupElement& g, const char* who) {
  const int rot = 1 << (n - 1);
  if (g.x < 0 || g.x >= rot || (g.y != 0 && g.y != 1))
    throw std::invalid_argument(std::string(who) +
                                ": element outside the dihedral range for n=" +
                                std::to_string(n));
}

}  // namespace

// ---------------------------------------------------------------------------
// QubitCircuit
// ---------------------------------------------------------------------------

QubitCircuit::QubitCircuit(int qubits) : n_(qubits) {
  if (qubits < 1)
    throw std::invalid_argument("QubitCircuit: need at least one qubit");
}

QubitCircuit& QubitCircuit::add(QubitGate g) {
  if (g.target < 0 || g.target >= n_)
    throw std::invalid_argument("QubitCircuit: target index out of range");
  for (std::size_t i = 0; i < g.controls.size(); ++i) {
    const int c = g.controls[i];
    if (c < 0 || c >= n_)
      throw std::invalid_argument("QubitCircuit: control index out of range");
    if (c == g.target)
      throw std::invalid_argument("QubitCircuit: control equals target");
    for (std::size_t j = 0; j < i; ++j)
      if (g.controls[j] == c)
        throw std::invalid_argument("QubitCircuit: repeated control index");
  }
  if (is_single_qubit(g.kind) && !g.controls.empty())
    throw std::invalid_argument("QubitCircuit: " + gate_label(g.kind) +
                                " takes no controls");
  if (g.kind == GateKind::CZ && g.controls.size() != 1)
    throw std::invalid_argument("QubitCircuit: cz takes exactly one control");
  if ((g.kind == GateKind::CX || g.kind == GateKind::CS) && g.controls.empty())
    throw std::invalid_argument("QubitCircuit: " + gate_label(g.kind) +
                                " needs at least one control");
  if (g.kind == GateKind::P || g.kind == GateKind::Pdg) {
    if (g.k < 1 || g.k > 30)
      throw std::invalid_argument(
          "QubitCircuit: phase exponent k outside 1..30");
  } else if (g.k != 0) {
    throw std::invalid_argument("QubitCircuit: only p/pdg carry an exponent");
  }
  gates_.push_back(std::move(g));
  return *this;
}

QubitCircuit& QubitCircuit::x(int t) { return add({GateKind::X, t, {}, 0}); }
QubitCircuit& QubitCircuit::z(int t) { return add({GateKind::Z, t, {}, 0}); }
QubitCircuit& QubitCircuit::s(int t) { return add({GateKind::S, t, {}, 0}); }
QubitCircuit& QubitCircuit::sdg(int t) { return add({GateKind::Sdg, t, {}, 0}); }
QubitCircuit& QubitCircuit::t(int tq) { return add({GateKind::T, tq, {}, 0}); }
QubitCircuit& QubitCircuit::tdg(int tq) { return add({GateKind::Tdg, tq, {}, 0}); }
QubitCircuit& QubitCircuit::p(int k, int t) { return add({GateKind::P, t, {}, k}); }
QubitCircuit& QubitCircuit::pdg(int k, int t) { return add({GateKind::Pdg, t, {}, k}); }
QubitCircuit& QubitCircuit::cz(int control, int t) {
  return add({GateKind::CZ, t, {control}, 0});
}
QubitCircuit& QubitCircuit::cx(int t, std::vector<int> controls) {
  return add({GateKind::CX, t, std::move(controls), 0});
}
QubitCircuit& QubitCircuit::cs(int t, std::vector<int> controls) {
  return add({GateKind::CS, t, std::move(controls), 0});
}

QubitCircuit QubitCircuit::inverse() const {
  QubitCircuit inv(n_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    QubitGate g = *it;
    switch (g.kind) {
      case GateKind::X:
      case GateKind::Z:
      case GateKind::CZ:
      case GateKind::CX:
        inv.add(g);
        break;
      case GateKind::S: g.kind = GateKind::Sdg; inv.add(g); break;
      case GateKind::Sdg: g.kind = GateKind::S; inv.add(g); break;
      case GateKind::T: g.kind = GateKind::Tdg; inv.add(g); break;
      case GateKind::Tdg: g.kind = GateKind::T; inv.add(g); break;
      case GateKind::P: g.kind = GateKind::Pdg; inv.add(g); break;
      case GateKind::Pdg: g.kind = GateKind::P; inv.add(g); break;
      case GateKind::CS:
        inv.add(g); inv.add(g); inv.add(g);  // (C^l S)^4 = 1
        break;
    }
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Encoding
// ---------------------------------------------------------------------------

std::string encode(int n, const GroupElement& g) {
  require_n(n);
  require_group_element(n, g, "encode");
  std::string bits(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n - 1; ++i)
    bits[static_cast<std::size_t>(i)] =
        ((g.x >> (n - 2 - i)) & 1) ? '1' : '0';
  bits[static_cast<std::size_t>(n - 1)] = g.y ? '1' : '0';
  return bits;
}

GroupElement decode(int n, const std::string& bits) {
  require_n(n);
  if (bits.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("decode: bit string length does not match n");
  GroupElement g{0, 0};
  for (int i = 0; i < n - 1; ++i) {
    const char c = bits[static_cast<std::size_t>(i)];
    if (c != '0' && c != '1')
      throw std::invalid_argument("decode: bit string must be 0/1");
    g.x = (g.x << 1) | (c == '1' ? 1 : 0);
  }
  const char j = bits[static_cast<std::size_t>(n - 1)];
  if (j != '0' && j != '1')
    throw std::invalid_argument("decode: bit string must be 0/1");
  g.y = (j == '1') ? 1 : 0;
  return g;
}

std::size_t encode_index(int n, const GroupElement& g) {
  require_n(n);
  require_group_element(n, g, "encode_index");
  return (static_cast<std::size_t>(g.x) << 1) | static_cast<std::size_t>(g.y);
}

// ---------------------------------------------------------------------------
// Rotation-register primitives
// ---------------------------------------------------------------------------

QubitCircuit compile_calX(int n) {
  require_n(n);
  QubitCircuit c(n - 1);
  for (int t = 0; t + 1 <= n - 2; ++t) {
    std::vector<int> controls;
    for (int q = t + 1; q <= n - 2; ++q) controls.push_back(q);
    c.cx(t, std::move(controls));
  }
  c.x(n - 2);
  return c;
}

QubitCircuit compile_calC(int n) {
  require_n(n);
  QubitCircuit c(n - 1);
  if (n == 3) {
    c.cx(0, {1});  // two-bit negation collapses to one gate
    return c;
  }
  for (int q = 0; q <= n - 2; ++q) c.x(q);
  append_gates(c, compile_calX(n).gates());
  return c;
}

QubitCircuit compile_calZ(int n) {
  require_n(n);
  QubitCircuit c(n - 1);
  for (int k = 0; k <= n - 2; ++k) add_phase_gate(c, k, k + 1);
  return c;
}

// ---------------------------------------------------------------------------
// Edge operators
// ---------------------------------------------------------------------------

namespace {

QubitCircuit compile_L_r(int n) {
  QubitCircuit c(n);
  append_gates(c, compile_calX(n).gates());
  return c;
}

QubitCircuit compile_L_s(int n) {
  QubitCircuit c(n);
  append_gates(c, compile_calC(n).gates());
  c.x(n - 1);
  return c;
}

QubitCircuit compile_R_r(int n) {
  QubitCircuit c(n);
  if (n == 3) {
    // Compressed three-gate form of calX^{-Z} on two rotation bits.
    c.cx(0, {2});
    c.x(1);
    c.cx(0, {1});
    return c;
  }
  // Branch decomposition: calX^{dag} on the reflection-0 branch (reached by
  // conjugating the control with X), calX on the reflection-1 branch.  The
  // calX gate list is its own inverse gate-by-gate, so the dagger is the
  // reversed list.
  const auto fwd = compile_calX(n).gates();
  std::vector<QubitGate> rev(fwd.rbegin(), fwd.rend());
  c.x(n - 1);
  append_gates(c, rev, /*extra_control=*/n - 1);
  c.x(n - 1);
  append_gates(c, fwd, /*extra_control=*/n - 1);
  return c;
}

QubitCircuit compile_R_s(int n) {
  QubitCircuit c(n);
  c.x(n - 1);
  return c;
}

}  // namespace

QubitCircuit compile_Z_E(int n, int ell) {
  require_n(n);
  QubitCircuit c(n);
  const std::int64_t rot = std::int64_t{1} << (n - 1);
  const std::int64_t e = ((ell % rot) + rot) % rot;
  // calZ^ell on the rotation register: zeta^{ell a} regardless of the
  // reflection bit.
  for (int k = 0; k <= n - 2; ++k) add_phase_power(c, k, k + 1, e);
  // Reflection-controlled calZ^{-2 ell}: flips the sign of the exponent on
  // the j = 1 branch.  On qubit k the correction is CP(2 pi / 2^k)^{-ell}
  // (the k = 0 term is a full turn and drops).
  for (int k = 1; k <= n - 2; ++k)
    add_controlled_phase_power(c, n - 1, k, k, -e);
  return c;
}

GroupOpCircuits compile_group_ops(int n) {
  require_n(n);
  GroupOpCircuits ops{QubitCircuit(n), QubitCircuit(n), QubitCircuit(n),
                      QubitCircuit(n), QubitCircuit(n), QubitCircuit(n),
                      QubitCircuit(n), {}};
  ops.L_r = compile_L_r(n);
  ops.L_s = compile_L_s(n);
  ops.R_r = compile_R_r(n);
  ops.R_s = compile_R_s(n);
  ops.Z_1r = QubitCircuit(n).z(n - 1);
  ops.Z_1s = QubitCircuit(n).z(n - 2);
  ops.Z_1rs = QubitCircuit(n).z(n - 2).z(n - 1);
  const int half = 1 << (n - 2);  // 2N
  for (int ell = 1; ell <= half - 1; ++ell)
    ops.Z_E.push_back(compile_Z_E(n, ell));
  return ops;
}

QubitCircuit compile_left_mult(int n, const GroupElement& g) {
  require_n(n);
  require_group_element(n, g, "compile_left_mult");
  QubitCircuit c(n);
  // L^{r^a s^j} = (L^r)^a (L^s)^j, right factor applied first.
  if (g.y) append_gates(c, compile_L_s(n).gates());
  const auto lr = compile_L_r(n).gates();
  for (int i = 0; i < g.x; ++i) append_gates(c, lr);
  return c;
}

QubitCircuit compile_right_mult(int n, const GroupElement& g) {
  require_n(n);
  require_group_element(n, g, "compile_right_mult");
  QubitCircuit c(n);
  // R^{r^a s^j} = (R^r)^a (R^s)^j, right factor applied first.
  if (g.y) c.x(n - 1);
  const auto rr = compile_R_r(n).gates();
  for (int i = 0; i < g.x; ++i) append_gates(c, rr);
  return c;
}

QubitCircuit compile_M_beta(int n) {
  require_n(n);
  QubitCircuit c(n);
  // Normalization kappa: -i exactly at a = 2N (binary 10...0, reached by
  // X-conjugating the lower rotation bits under C^{n-2}S) and -1 on the
  // whole a > 2N half (Z on the top bit).
  for (int q = 1; q <= n - 2; ++q) c.x(q);
  {
    std::vector<int> controls;
    for (int q = 0; q <= n - 3; ++q) controls.push_back(q);
    c.cs(n - 2, std::move(controls));
  }
  for (int q = 1; q <= n - 2; ++q) c.x(q);
  c.z(0);
  // Bare ramp beta'(r^a) = e^{i pi a / 4N}: qubit k carries P(2 pi / 2^{k+2}).
  for (int k = 0; k <= n - 2; ++k) add_phase_gate(c, k, k + 2);
  return c;
}

QubitCircuit compile_boundary_diagonal(int n, Region side) {
  require_n(n);
  QubitCircuit c(n);
  switch (side) {
    case Region::Left:  // zeta^{a-j}
      for (int k = 0; k <= n - 2; ++k) add_phase_gate(c, k, k + 1);
      add_phase_gate(c, n - 1, n - 1, /*dagger=*/true);
      return c;
    case Region::Top:  // zeta^{a}
      for (int k = 0; k <= n - 2; ++k) add_phase_gate(c, k, k + 1);
      return c;
    case Region::Right:
    case Region::Bottom:  // zeta^{j}
      add_phase_gate(c, n - 1, n - 1);
      return c;
    case Region::Bulk:
      break;
  }
  throw std::invalid_argument(
      "compile_boundary_diagonal: bulk edges carry no single-edge stabilizer");
}

QubitCircuit compile_plaquette_s_phase(int n) {
  if (n < 3 || n > 5)
    throw std::invalid_argument(
        "compile_plaquette_s_phase: phase exponent 2^{n-1} exceeds the "
        "4-qubit alphabet bound beyond n = 5");
  QubitCircuit c(4);
  c.cx(3, {0}).cx(3, {1}).cx(3, {2});
  add_phase_gate(c, 3, n - 1);
  c.cx(3, {2}).cx(3, {1}).cx(3, {0});
  return c;
}

// ---------------------------------------------------------------------------
// Dense matrices
// ---------------------------------------------------------------------------

std::pair<std::size_t, Phase> apply_to_basis(const QubitCircuit& c,
                                             std::size_t index) {
  const int n = c.qubits();
  const std::size_t dim = std::size_t{1} << n;
  if (index >= dim)
    throw std::invalid_argument("apply_to_basis: index out of range");
  std::size_t idx = index;
  Phase ph = Phase::one();
  const auto bit = [&](int q) -> bool {
    return (idx >> (n - 1 - q)) & std::size_t{1};
  };
  const auto flip = [&](int q) { idx ^= std::size_t{1} << (n - 1 - q); };
  for (const QubitGate& g : c.gates()) {
    bool controls_on = true;
    for (int q : g.controls) controls_on = controls_on && bit(q);
    switch (g.kind) {
      case GateKind::X:
        flip(g.target);
        break;
      case GateKind::CX:
        if (controls_on) flip(g.target);
        break;
      case GateKind::Z:
        if (bit(g.target)) ph = ph * Phase::minus_one();
        break;
      case GateKind::S:
        if (bit(g.target)) ph = ph * Phase::i();
        break;
      case GateKind::Sdg:
        if (bit(g.target)) ph = ph * Phase::minus_i();
        break;
      case GateKind::T:
        if (bit(g.target)) ph = ph * Phase::turns(1, 8);
        break;
      case GateKind::Tdg:
        if (bit(g.target)) ph = ph * Phase::turns(-1, 8);
        break;
      case GateKind::P:
        if (bit(g.target)) ph = ph * Phase::turns(1, std::int64_t{1} << g.k);
        break;
      case GateKind::Pdg:
        if (bit(g.target)) ph = ph * Phase::turns(-1, std::int64_t{1} << g.k);
        break;
      case GateKind::CZ:
        if (controls_on && bit(g.target)) ph = ph * Phase::minus_one();
        break;
      case GateKind::CS:
        if (controls_on && bit(g.target)) ph = ph * Phase::i();
        break;
    }
  }
  return {idx, ph};
}

Eigen::MatrixXcd circuit_to_matrix(const QubitCircuit& c) {
  if (c.qubits() > 6)
    throw std::invalid_argument(
        "circuit_to_matrix: dimension overflow beyond 6 qubits");
  const std::size_t dim = std::size_t{1} << c.qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    const auto [row, ph] = apply_to_basis(c, col);
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
        ph.to_complex();
  }
  return m;
}

bool unitary_equal(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                   bool up_to_global_phase, double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) return false;
  if (!up_to_global_phase) return (u - v).cwiseAbs().maxCoeff() <= tol;
  Eigen::Index mi = 0, mj = 0;
  double best = -1.0;
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    for (Eigen::Index j = 0; j < u.cols(); ++j)
      if (std::abs(u(i, j)) > best) {
        best = std::abs(u(i, j));
        mi = i;
        mj = j;
      }
  if (best < tol) return (u - v).cwiseAbs().maxCoeff() <= tol;
  const std::complex<double> lambda = v(mi, mj) / u(mi, mj);
  if (std::abs(std::abs(lambda) - 1.0) > tol) return false;
  return (u * lambda - v).cwiseAbs().maxCoeff() <= tol;
}

// ---------------------------------------------------------------------------
// Clifford-hierarchy analyzer
// ---------------------------------------------------------------------------

namespace {

constexpr double kLevelTol = 1e-10;

int exact_log2(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return ((Eigen::Index{1} << n) == dim) ? n : -1;
}

Eigen::MatrixXcd pauli_x_matrix(int n, int qubit) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const Eigen::Index mask = Eigen::Index{1} << (n - 1 - qubit);
  for (Eigen::Index j = 0; j < dim; ++j) m(j ^ mask, j) = 1.0;
  return m;
}

Eigen::MatrixXcd pauli_z_matrix(int n, int qubit) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const Eigen::Index mask = Eigen::Index{1} << (n - 1 - qubit);
  for (Eigen::Index j = 0; j < dim; ++j) m(j, j) = (j & mask) ? -1.0 : 1.0;
  return m;
}

bool is_identity_proportional(const Eigen::MatrixXcd& u, double tol) {
  const std::complex<double> c = u(0, 0);
  if (std::abs(std::abs(c) - 1.0) > tol) return false;
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
      const std::complex<double> want = (i == j) ? c : 0.0;
      if (std::abs(u(i, j) - want) > tol) return false;
    }
  return true;
}

/// Pauli test: a monomial matrix whose permutation is an XOR mask, whose
/// relative phases are a +-1 character of the bit group, and whose global
/// phase is a power of i.
bool is_pauli(const Eigen::MatrixXcd& u, double tol) {
  const Eigen::Index dim = u.rows();
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(dim), -1);
  std::vector<std::complex<double>> phase(static_cast<std::size_t>(dim));
  for (Eigen::Index j = 0; j < dim; ++j) {
    Eigen::Index hit = -1;
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (std::abs(u(i, j)) > tol) {
        if (hit >= 0) return false;  // two entries in one column
        hit = i;
      }
    }
    if (hit < 0) return false;
    if (std::abs(std::abs(u(hit, j)) - 1.0) > tol) return false;
    perm[static_cast<std::size_t>(j)] = hit;
    phase[static_cast<std::size_t>(j)] = u(hit, j);
  }
  const Eigen::Index mask = perm[0];
  for (Eigen::Index j = 0; j < dim; ++j)
    if (perm[static_cast<std::size_t>(j)] != (j ^ mask)) return false;
  // Relative signs must be multiplicative over the XOR group.
  std::vector<int> sign(static_cast<std::size_t>(dim), 0);
  for (Eigen::Index j = 0; j < dim; ++j) {
    const std::complex<double> s =
        phase[static_cast<std::size_t>(j)] / phase[0];
    if (std::abs(s - 1.0) <= tol)
      sign[static_cast<std::size_t>(j)] = 0;
    else if (std::abs(s + 1.0) <= tol)
      sign[static_cast<std::size_t>(j)] = 1;
    else
      return false;
  }
  for (Eigen::Index j = 0; j < dim; ++j) {
    int expect = 0;
    for (Eigen::Index b = 1; b < dim; b <<= 1)
      if (j & b) expect ^= sign[static_cast<std::size_t>(b)];
    if (sign[static_cast<std::size_t>(j)] != expect) return false;
  }
  // Global phase must be a fourth root of unity.
  static const std::complex<double> roots[4] = {
      {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& r : roots)
    if (std::abs(phase[0] - r) <= tol) return true;
  return false;
}

/// Memo key: quotient out the global phase at the first large entry, round
/// to an 1e-8 grid, serialize.
std::string matrix_key(const Eigen::MatrixXcd& u) {
  std::complex<double> pivot = 0.0;
  for (Eigen::Index i = 0; i < u.rows() && std::abs(pivot) <= 0.5; ++i)
    for (Eigen::Index j = 0; j < u.cols(); ++j)
      if (std::abs(u(i, j)) > 0.5) {
        pivot = u(i, j);
        break;
      }
  const std::complex<double> lambda =
      (std::abs(pivot) > 0.5) ? std::conj(pivot) / std::abs(pivot)
                              : std::complex<double>(1.0, 0.0);
  std::string key;
  key.reserve(static_cast<std::size_t>(u.size()) * 24 + 16);
  key += std::to_string(u.rows());
  key += ':';
  char buf[64];
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
      const std::complex<double> v = u(i, j) * lambda;
      double re = std::round(v.real() * 1e8) / 1e8;
      double im = std::round(v.imag() * 1e8) / 1e8;
      if (re == 0.0) re = 0.0;  // normalize -0.0
      if (im == 0.0) im = 0.0;
      std::snprintf(buf, sizeof(buf), "%.8f,%.8f;", re, im);
      key += buf;
    }
  return key;
}

std::unordered_map<std::string, int>& level_memo() {
  static std::unordered_map<std::string, int> memo;
  return memo;
}
std::mutex& level_memo_mutex() {
  static std::mutex m;
  return m;
}

std::optional<int> memo_lookup(const std::string& key) {
  std::lock_guard<std::mutex> lock(level_memo_mutex());
  auto it = level_memo().find(key);
  if (it == level_memo().end()) return std::nullopt;
  return it->second;
}

void memo_store(const std::string& key, int level) {
  std::lock_guard<std::mutex> lock(level_memo_mutex());
  level_memo()[key] = level;  // last write wins on identical keys
}

/// Exact level when it fits within `budget`, std::nullopt otherwise.
std::optional<int> level_of(const Eigen::MatrixXcd& u, int budget) {
  if (is_identity_proportional(u, kLevelTol) || is_pauli(u, kLevelTol))
    return budget >= 1 ? std::optional<int>(1) : std::nullopt;
  const std::string key = matrix_key(u);
  if (auto hit = memo_lookup(key))
    return *hit <= budget ? hit : std::nullopt;
  if (budget <= 1) return std::nullopt;
  const int n = exact_log2(u.rows());
  int worst = 1;
  for (int q = 0; q < n; ++q) {
    for (int type = 0; type < 2; ++type) {
      const Eigen::MatrixXcd p =
          type == 0 ? pauli_x_matrix(n, q) : pauli_z_matrix(n, q);
      const Eigen::MatrixXcd conj = u * p * u.adjoint();
      const auto child = level_of(conj, budget - 1);
      if (!child) return std::nullopt;
      worst = std::max(worst, *child);
    }
  }
  memo_store(key, 1 + worst);
  return 1 + worst;
}

}  // namespace

std::string HierarchyLevel::str() const {
  if (exceeds)
    return name + ": exceeds max_k=" + std::to_string(max_k);
  return name + ": level " + std::to_string(level);
}

HierarchyLevel clifford_level(const Eigen::MatrixXcd& u, int max_k,
                              const std::string& name) {
  if (u.rows() != u.cols())
    throw std::invalid_argument("clifford_level: matrix must be square");
  const int n = exact_log2(u.rows());
  if (n < 1 || n > 5)
    throw std::invalid_argument(
        "clifford_level: dense analyzer supports 1..5 qubits (dim <= 32)");
  if (max_k < 1 || max_k > 6)
    throw std::invalid_argument("clifford_level: max_k must be in 1..6");
  const Eigen::MatrixXcd gram = u * u.adjoint();
  if (!is_identity_proportional(gram, 1e-8) ||
      std::abs(gram(0, 0) - std::complex<double>(1.0, 0.0)) > 1e-8)
    throw std::invalid_argument("clifford_level: input is not unitary");

  HierarchyLevel out;
  out.name = name;
  out.max_k = max_k;
  if (is_identity_proportional(u, kLevelTol)) {
    out.level = 1;
    out.certificate = {"proportional to the identity"};
    return out;
  }
  if (is_pauli(u, kLevelTol)) {
    out.level = 1;
    out.certificate = {"Pauli: XOR permutation with +-1 phase pattern"};
    return out;
  }
  const auto top = level_of(u, max_k);
  for (int q = 0; q < n; ++q) {
    for (int type = 0; type < 2; ++type) {
      const std::string gen =
          (type == 0 ? "X_" : "Z_") + std::to_string(q);
      const Eigen::MatrixXcd p =
          type == 0 ? pauli_x_matrix(n, q) : pauli_z_matrix(n, q);
      const auto child = level_of(u * p * u.adjoint(), max_k - 1);
      out.certificate.push_back(
          child ? gen + " -> level " + std::to_string(*child)
                : gen + " -> not in level <= " + std::to_string(max_k - 1));
    }
  }
  if (top) {
    out.level = *top;
  } else {
    out.level = 0;
    out.exceeds = true;
  }
  return out;
}

std::vector<std::pair<std::string, Eigen::MatrixXcd>> stabilizer_gate_set(
    int n) {
  if (n < 3 || n > 5)
    throw std::invalid_argument(
        "stabilizer_gate_set: dense level analysis capped at n = 5; n >= 6 "
        "is conjectured level n-1, unverified");
  const GroupOpCircuits ops = compile_group_ops(n);
  const int rot = 1 << (n - 1);
  std::vector<std::pair<std::string, Eigen::MatrixXcd>> out;
  out.emplace_back("gauge-move edge factor L^r", circuit_to_matrix(ops.L_r));
  out.emplace_back("gauge-move edge factor R^r", circuit_to_matrix(ops.R_r));
  out.emplace_back("gauge-move edge factor L^s", circuit_to_matrix(ops.L_s));
  out.emplace_back("gauge-move edge factor R^s", circuit_to_matrix(ops.R_s));
  out.emplace_back("flux-detector edge factor calZ",
                   circuit_to_matrix(compile_calZ(n)));
  out.emplace_back("flux-detector edge factor calZ^Z",
                   circuit_to_matrix(compile_Z_E(n, 1)));
  out.emplace_back("flux-detector edge factor calZ^-Z",
                   circuit_to_matrix(compile_Z_E(n, rot - 1)));
  out.emplace_back("reflection-parity plaquette factor",
                   circuit_to_matrix(compile_plaquette_s_phase(n)));
  out.emplace_back("boundary diagonal (left)",
                   circuit_to_matrix(compile_boundary_diagonal(n, Region::Left)));
  out.emplace_back("boundary diagonal (top)",
                   circuit_to_matrix(compile_boundary_diagonal(n, Region::Top)));
  out.emplace_back(
      "boundary diagonal (right/bottom)",
      circuit_to_matrix(compile_boundary_diagonal(n, Region::Right)));
  return out;
}

StabilizerLevelReport analyze_stabilizer_levels(int n, int max_k) {
  StabilizerLevelReport report;
  report.n = n;
  report.caveat =
      "levels are per generator; elements of the generated stabilizer group "
      "can sit in lower levels";
  for (const auto& [name, m] : stabilizer_gate_set(n)) {
    report.generators.push_back(clifford_level(m, max_k, name));
    const HierarchyLevel& h = report.generators.back();
    if (h.exceeds)
      report.any_exceeds = true;
    else
      report.max_level = std::max(report.max_level, h.level);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Emission / parsing
// ---------------------------------------------------------------------------

namespace {

std::string qasm_angle(int k, bool dagger) {
  std::string a = dagger ? "-pi" : "pi";
  if (k > 1) a += "/" + std::to_string(1 << (k - 1));
  return a;
}

std::string emit_plain(const QubitCircuit& c) {
  std::ostringstream os;
  os << "qubits " << c.qubits() << "\n";
  for (const QubitGate& g : c.gates()) {
    os << gate_label(g.kind);
    if (g.kind == GateKind::P || g.kind == GateKind::Pdg) os << ' ' << g.k;
    for (int q : g.controls) os << ' ' << q;
    os << ' ' << g.target << "\n";
  }
  return os.str();
}

std::string emit_qasm(const QubitCircuit& c) {
  std::ostringstream os;
  os << "qreg q[" << c.qubits() << "];\n";
  for (const QubitGate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::P:
      case GateKind::Pdg:
        os << "p(" << qasm_angle(g.k, g.kind == GateKind::Pdg) << ")";
        break;
      case GateKind::CX:
        os << std::string(g.controls.size(), 'c') << "x";
        break;
      case GateKind::CS:
        os << std::string(g.controls.size(), 'c') << "s";
        break;
      default:
        os << gate_label(g.kind);
        break;
    }
    os << ' ';
    bool first = true;
    for (int q : g.controls) {
      os << (first ? "" : ", ") << "q[" << q << "]";
      first = false;
    }
    os << (first ? "" : ", ") << "q[" << g.target << "];\n";
  }
  return os.str();
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void parse_fail(const std::string& line) {
  throw std::invalid_argument("parse_circuit: unrecognized line: " + line);
}

int parse_int(const std::string& s, const std::string& line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) parse_fail(line);
    return v;
  } catch (const std::invalid_argument&) {
    parse_fail(line);
  } catch (const std::out_of_range&) {
    parse_fail(line);
  }
}

GateKind plain_kind(const std::string& mn, const std::string& line) {
  if (mn == "x") return GateKind::X;
  if (mn == "z") return GateKind::Z;
  if (mn == "s") return GateKind::S;
  if (mn == "sdg") return GateKind::Sdg;
  if (mn == "t") return GateKind::T;
  if (mn == "tdg") return GateKind::Tdg;
  if (mn == "p") return GateKind::P;
  if (mn == "pdg") return GateKind::Pdg;
  if (mn == "cz") return GateKind::CZ;
  if (mn == "cx") return GateKind::CX;
  if (mn == "cs") return GateKind::CS;
  parse_fail(line);
}

QubitCircuit parse_plain(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::optional<QubitCircuit> c;
  while (std::getline(is, line)) {
    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (!c) {
      if (toks.size() != 2 || toks[0] != "qubits") parse_fail(line);
      c.emplace(parse_int(toks[1], line));
      continue;
    }
    QubitGate g;
    g.kind = plain_kind(toks[0], line);
    std::size_t at = 1;
    if (g.kind == GateKind::P || g.kind == GateKind::Pdg) {
      if (toks.size() < 3) parse_fail(line);
      g.k = parse_int(toks[1], line);
      at = 2;
    }
    if (toks.size() <= at) parse_fail(line);
    for (std::size_t i = at; i + 1 < toks.size(); ++i)
      g.controls.push_back(parse_int(toks[i], line));
    g.target = parse_int(toks.back(), line);
    c->add(std::move(g));
  }
  if (!c) throw std::invalid_argument("parse_circuit: missing qubits header");
  return *c;
}

QubitCircuit parse_qasm(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::optional<QubitCircuit> c;
  while (std::getline(is, line)) {
    std::string body = line;
    while (!body.empty() && (body.back() == '\r' || body.back() == ' '))
      body.pop_back();
    std::size_t start = body.find_first_not_of(' ');
    if (start == std::string::npos) continue;
    body = body.substr(start);
    if (body.back() != ';') parse_fail(line);
    body.pop_back();
    // Collect the q[<int>] operands in order.
    std::vector<int> qubits;
    for (std::size_t pos = body.find("q["); pos != std::string::npos;
         pos = body.find("q[", pos + 1)) {
      const std::size_t close = body.find(']', pos);
      if (close == std::string::npos) parse_fail(line);
      qubits.push_back(parse_int(body.substr(pos + 2, close - pos - 2), line));
    }
    const std::string name = body.substr(0, body.find_first_of(" ("));
    if (!c) {
      if (name != "qreg" || qubits.size() != 1) parse_fail(line);
      c.emplace(qubits[0]);
      continue;
    }
    if (qubits.empty()) parse_fail(line);
    QubitGate g;
    g.target = qubits.back();
    if (name == "p") {
      const std::size_t open = body.find('(');
      const std::size_t close = body.find(')');
      if (open == std::string::npos || close == std::string::npos ||
          close < open)
        parse_fail(line);
      std::string angle = body.substr(open + 1, close - open - 1);
      g.kind = GateKind::P;
      if (!angle.empty() && angle[0] == '-') {
        g.kind = GateKind::Pdg;
        angle = angle.substr(1);
      }
      if (angle == "pi") {
        g.k = 1;
      } else if (angle.rfind("pi/", 0) == 0) {
        const int den = parse_int(angle.substr(3), line);
        int k = 1;
        while ((1 << (k - 1)) < den && k < 30) ++k;
        if ((1 << (k - 1)) != den) parse_fail(line);
        g.k = k;
      } else {
        parse_fail(line);
      }
    } else if (name == "cz") {
      g.kind = GateKind::CZ;
    } else if (!name.empty() &&
               (name.back() == 'x' || name.back() == 's') &&
               name.find_first_not_of('c') == name.size() - 1 &&
               name.size() >= 2) {
      g.kind = name.back() == 'x' ? GateKind::CX : GateKind::CS;
      if (name.size() - 1 != qubits.size() - 1) parse_fail(line);
    } else {
      g.kind = plain_kind(name, line);
    }
    g.controls.assign(qubits.begin(), qubits.end() - 1);
    c->add(std::move(g));
  }
  if (!c) throw std::invalid_argument("parse_circuit: missing qreg header");
  return *c;
}

}  // namespace

std::string emit_circuit(const QubitCircuit& c, CircuitFormat fmt) {
  return fmt == CircuitFormat::Plain ? emit_plain(c) : emit_qasm(c);
}

QubitCircuit parse_circuit(const std::string& text, CircuitFormat fmt) {
  return fmt == CircuitFormat::Plain ? parse_plain(text) : parse_qasm(text);
}

// ---------------------------------------------------------------------------
// Summary tables
// ---------------------------------------------------------------------------

std::vector<ResourceRow> table_resources() {
  return {
      {"1", "3", "D_4", "T = P(pi/4)", "3 x N_edges"},
      {"2", "4", "D_8", "T^(1/2) = P(pi/8)", "4 x N_edges"},
      {"4", "5", "D_16", "T^(1/4) = P(pi/16)", "5 x N_edges"},
      {"2^(n-3)", "n", "D_(2^(n-1))", "T^(2^(3-n)) = P(pi/2^(n-1))",
       "n x N_edges"},
  };
}

std::vector<LevelRow> table_levels() {
  return {
      {"1", "3", "D_4", "2", "3", ""},
      {"2", "4", "D_8", "3", "4", ""},
      {"4", "5", "D_16", "4", "5", ""},
      {"2^(n-3)", "n", "D_(2^(n-1))", "n-1", "n",
       "conjecture; analyzer verifies n = 3, 4, 5 only"},
  };
}

}  // namespace qudo
