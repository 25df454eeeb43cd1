#pragma once
// Qubit compilation of the dihedral edge operators when the group order is a
// power of two (8N = 2^n): the binary encoding |r^a s^j> -> |bin(a)>|j>, the
// arithmetic primitives calX / calC / calZ on the rotation register, circuits
// for the left/right multiplication operators, the character diagonals, the
// boundary cochain factor M^beta, dense matrix extraction, a Clifford-
// hierarchy level analyzer, circuit emission/parsing, and the resource/level
// summary tables.

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qudo/group.hpp"
#include "qudo/lattice.hpp"
#include "qudo/phase.hpp"

namespace qudo {

// ---------------------------------------------------------------------------
// Circuit representation
// ---------------------------------------------------------------------------

/// Fixed gate alphabet.  P / Pdg carry the phase exponent k and denote
/// diag(1, e^{+-2*pi*i / 2^k}); CX and CS may carry any positive number of
/// controls (C^l X, C^l S); CZ carries exactly one.
enum class GateKind { X, Z, S, Sdg, T, Tdg, P, Pdg, CZ, CX, CS };

struct QubitGate {
  GateKind kind = GateKind::X;
  int target = 0;
  std::vector<int> controls;  // ordered control list; empty for 1-qubit gates
  int k = 0;                  // P / Pdg only: phase angle 2*pi / 2^k

  bool operator==(const QubitGate&) const = default;
};

/// An ordered gate list on a fixed number of qubits.  Gates are stored in
/// application order: gates()[0] acts on the state first.
class QubitCircuit {
 public:
  explicit QubitCircuit(int qubits);

  int qubits() const { return n_; }
  const std::vector<QubitGate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  /// Appends one gate after validating the alphabet invariants: indices in
  /// range and distinct; CZ has one control, CX/CS at least one, 1-qubit
  /// kinds none; P/Pdg exponents bounded by 1 <= k <= 30.
  QubitCircuit& add(QubitGate g);

  // Convenience adders (all return *this).
  QubitCircuit& x(int t);
  QubitCircuit& z(int t);
  QubitCircuit& s(int t);
  QubitCircuit& sdg(int t);
  QubitCircuit& t(int t);
  QubitCircuit& tdg(int t);
  QubitCircuit& p(int k, int t);
  QubitCircuit& pdg(int k, int t);
  QubitCircuit& cz(int control, int t);
  QubitCircuit& cx(int t, std::vector<int> controls);
  QubitCircuit& cs(int t, std::vector<int> controls);

  /// Reversed gate list with every gate inverted.  CS inverts to three
  /// copies of itself on the same qubits ((C^l S)^4 = 1), keeping the
  /// alphabet closed.
  QubitCircuit inverse() const;

  bool operator==(const QubitCircuit&) const = default;

 private:
  int n_;
  std::vector<QubitGate> gates_;
};

// ---------------------------------------------------------------------------
// Binary encoding of dihedral labels
// ---------------------------------------------------------------------------

/// |r^a s^j> -> first n-1 characters big-endian bin(a), last character j.
/// Requires 0 <= a < 2^{n-1} and j in {0,1}; throws std::invalid_argument on
/// a size mismatch.
std::string encode(int n, const GroupElement& g);

/// Inverse of encode; throws std::invalid_argument on length or character
/// mismatch.
GroupElement decode(int n, const std::string& bits);

/// Computational-basis index of encode(n, g) with qubit 0 most significant:
/// index = 2a + j.
std::size_t encode_index(int n, const GroupElement& g);

// ---------------------------------------------------------------------------
// Rotation-register primitives (circuits on n-1 qubits)
// ---------------------------------------------------------------------------

/// calX |a> = |a+1 mod 2^{n-1}>: the binary +1 cascade
/// [C^{n-2}X, C^{n-3}X, ..., CX, X] in application order.
QubitCircuit compile_calX(int n);

/// calC |a> = |-a mod 2^{n-1}>: bitwise complement followed by +1.  For n = 3
/// this collapses to the single gate CX(target 0, control 1).
QubitCircuit compile_calC(int n);

/// calZ |a> = e^{i pi a / 2^{n-2}} |a>: qubit k carries P(2*pi / 2^{k+1}),
/// i.e. Z x S x T x ... down the register.
QubitCircuit compile_calZ(int n);

// ---------------------------------------------------------------------------
// Edge operators (circuits on n qubits; qubit n-1 is the reflection bit)
// ---------------------------------------------------------------------------

/// The generating set of single-edge operators:
///   L^r = calX x I            R^r = calX^{-Z}         (branch decomposition)
///   L^s = calC x X            R^s = I x X
///   Z_1r = Z on the reflection bit, Z_1s = Z on the low rotation bit,
///   Z_1rs = both, and the two-dimensional character diagonals
///   Z_E[l-1] (l = 1 .. 2N-1) with eigenvalue zeta_{4N}^{l(1-2j)a}.
struct GroupOpCircuits {
  QubitCircuit L_r, L_s, R_r, R_s, Z_1r, Z_1s, Z_1rs;
  std::vector<QubitCircuit> Z_E;
};
GroupOpCircuits compile_group_ops(int n);

/// Left multiplication by an arbitrary g = r^a s^j: j copies of the L^s gates
/// followed by a copies of the L^r gates (L^{gh} = L^g L^h).
QubitCircuit compile_left_mult(int n, const GroupElement& g);
/// Right multiplication R^g |h> = |h g^{-1}>, composed the same way.
QubitCircuit compile_right_mult(int n, const GroupElement& g);

/// Character diagonal zeta_{4N}^{l(1-2j)a}: the per-qubit phases of calZ^l on
/// the rotation register and a reflection-controlled calZ^{-2l} correction,
/// decomposed into CZ / CS / controlled-phase conjugation patterns.
QubitCircuit compile_Z_E(int n, int ell);

/// Boundary cochain factor: diagonal beta_N(r^a) on |bin(a)>|j>, independent
/// of j.  Two layers: the normalization kappa (X-conjugated C^{n-2}S plus Z)
/// and the bare phase ramp beta'(r^a) = e^{i pi a / 4N} (S x T x ... pattern).
QubitCircuit compile_M_beta(int n);

/// Single-edge boundary stabilizer diagonals by side: left zeta^{a-j},
/// top zeta^{a}, right/bottom zeta^{j}.  Throws for Region::Bulk.
QubitCircuit compile_boundary_diagonal(int n, Region side);

/// The reflection-parity plaquette factor on the four s-qubits of a
/// plaquette: diag entries zeta_{4N}^{parity(j1..j4)}, compiled as a CX
/// parity cascade around P(2*pi / 2^{n-1}).  Requires 3 <= n <= 5 so the
/// phase exponent fits the alphabet bound on a 4-qubit circuit.
QubitCircuit compile_plaquette_s_phase(int n);

// ---------------------------------------------------------------------------
// Dense matrices
// ---------------------------------------------------------------------------

/// Exact monomial action of a circuit on one computational basis state:
/// every alphabet gate permutes basis states up to a root-of-unity phase.
std::pair<std::size_t, Phase> apply_to_basis(const QubitCircuit& c,
                                             std::size_t index);

/// Dense unitary of the circuit; throws std::invalid_argument beyond
/// 6 qubits (dimension overflow guard).
Eigen::MatrixXcd circuit_to_matrix(const QubitCircuit& c);

/// Entrywise comparison with tolerance, optionally after aligning the global
/// phase at the largest entry of u.  Mismatched dimensions compare unequal.
bool unitary_equal(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                   bool up_to_global_phase, double tol = 1e-10);

// ---------------------------------------------------------------------------
// Clifford-hierarchy analyzer
// ---------------------------------------------------------------------------

struct HierarchyLevel {
  std::string name;
  int level = 1;        // meaningful when exceeds == false
  bool exceeds = false; // true: not in any level <= max_k
  int max_k = 6;
  /// Per-Pauli-generator classification of the top-layer conjugates, e.g.
  /// "X_0 -> level 2"; a single descriptive line for Pauli/identity inputs.
  std::vector<std::string> certificate;

  std::string str() const;
};

/// Minimal k with u in level k: level 1 is the Pauli group (monomial XOR
/// pattern with +-1 phase linearity and i^t global phase; operators
/// proportional to the identity report level 1), level k requires every
/// conjugate u P u^dag of the 2n Pauli generators to sit in level k-1.
/// Intermediate results are memoized by the global-phase-normalized matrix
/// rounded to the comparison tolerance (1e-10).  Requires a unitary of
/// dimension 2^n with n <= 5 and max_k <= 6.
HierarchyLevel clifford_level(const Eigen::MatrixXcd& u, int max_k = 6,
                              const std::string& name = "U");

/// The single-edge/single-plaquette tensor factors generating the stabilizer
/// group, as named dense matrices: the four gauge-move factors L^r, R^r,
/// L^s, R^s; the flux-detector factors calZ and its reflection-dressed
/// variants (Z_E with l = +-1); the reflection-parity plaquette factor; and
/// the three boundary diagonals.  Requires 3 <= n <= 5 (the dense analyzer
/// cap); larger n is conjectured to sit in level n-1 but is unverified here.
std::vector<std::pair<std::string, Eigen::MatrixXcd>> stabilizer_gate_set(
    int n);

struct StabilizerLevelReport {
  int n = 3;
  int max_level = 0;     // over all generators (when none exceeds)
  bool any_exceeds = false;
  std::vector<HierarchyLevel> generators;
  /// Reported per generator: some elements of the generated group can sit in
  /// lower levels than the maximum shown.
  std::string caveat;
};

/// clifford_level over stabilizer_gate_set(n).
StabilizerLevelReport analyze_stabilizer_levels(int n, int max_k = 6);

// ---------------------------------------------------------------------------
// Emission / parsing
// ---------------------------------------------------------------------------

enum class CircuitFormat { Plain, QasmLike };

/// Deterministic text form.  Plain: a "qubits <n>" header, then one
/// mnemonic per line with controls before the target ("cx 1 0").  QasmLike:
/// a "qreg q[n];" header, then lines like "ccx q[1], q[2], q[0];",
/// "p(pi/16) q[3];", "cs q[0], q[1];".  Both round-trip through
/// parse_circuit.
std::string emit_circuit(const QubitCircuit& c, CircuitFormat fmt);

/// Inverse of emit_circuit; throws std::invalid_argument on malformed text.
QubitCircuit parse_circuit(const std::string& text, CircuitFormat fmt);

// ---------------------------------------------------------------------------
// Summary tables
// ---------------------------------------------------------------------------

/// One row of the resource table: dihedral parameter, qubits per edge, group
/// name, realized logical gate, and total physical qubit count formula.
struct ResourceRow {
  std::string N, n, group, gate, qubits;
};
/// One row of the level table: hierarchy level of the stabilizer generators
/// and of the logical gate; the general-n row is marked as a conjecture.
struct LevelRow {
  std::string N, n, group, stabilizer_level, gate_level, note;
};

std::vector<ResourceRow> table_resources();
std::vector<LevelRow> table_levels();

}  // namespace qudo
