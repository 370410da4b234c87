#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tricode/pauli.hpp"
#include "tricode/rng.hpp"

namespace tricode {

enum class Basis { X, Z };

enum class GroupMembership { InGroupPlus, InGroupMinus, Anticommuting };

struct MeasurementOutcome {
  int value;           // +1 or -1
  bool deterministic;  // true iff the outcome was forced by the group
};

// A pure N-qubit stabilizer state as N independent, mutually commuting signed
// generators. Rows are packed into 64-bit words with separate X and Z planes;
// signs live in a parallel bit vector. There is no destabilizer half:
// deterministic measurement outcomes are recovered on demand by Gaussian
// elimination over GF(2).
class Tableau {
 public:
  // Product state in the given basis: generators are single-qubit operators
  // with the requested sign on every qubit.
  static Tableau product_state(std::size_t n_qubits, Basis basis, int sign = +1);

  std::size_t n_qubits() const { return n_; }

  PauliOperator generator(std::size_t i) const;
  int generator_sign(std::size_t i) const;
  void flip_generator_sign(std::size_t i);

  // Membership of p in the stabilizer group. Anticommuting if p fails to
  // commute with some generator; otherwise the sign with which p appears as a
  // generator product decides Plus vs Minus.
  GroupMembership group_membership(const PauliOperator& p) const;

  // Eigenvalue of p on this state, valid only when p commutes with every
  // generator: +1 for InGroupPlus, -1 for InGroupMinus.
  int expectation_sign(const PauliOperator& p) const;

  // Projective measurement of p (a nontrivial Hermitian Pauli with sign +1).
  // If p commutes with every generator the state is unchanged and the forced
  // outcome is computed by elimination; otherwise the lowest-index
  // anticommuting generator is the pivot, every other anticommuting generator
  // is multiplied by it, and the pivot is replaced by (+/-)p with the sign
  // drawn from rng.
  MeasurementOutcome measure(const PauliOperator& p, RngStream& rng);

  // Same state update and rng consumption as measure(), but deterministic
  // outcomes are left unresolved (resolving one costs a full elimination and
  // the circuit driver never reads it). Returns the outcome for random
  // measurements, nullopt for deterministic ones.
  std::optional<int> project(const PauliOperator& p, RngStream& rng);

  // Measurement with a post-selected outcome for the random branch. The
  // deterministic branch resolves the forced value as usual (the caller is
  // expected to check it against `desired`).
  MeasurementOutcome measure_postselect(const PauliOperator& p, int desired);

  // True iff p commutes with every generator (the Renyi-2 evaluation rule for
  // pure stabilizer states).
  bool commutes_with_all(const PauliOperator& p) const;

  // GF(2) rank of the generator matrix restricted to the X and Z columns of
  // the given qubits. The tableau is not modified.
  std::size_t rank_restricted(std::span<const std::uint32_t> qubits) const;

  // S_A in bits: rank_restricted(A) - |A|. Integer-valued for pure states.
  double entanglement_entropy(std::span<const std::uint32_t> qubits) const;

  // Both structural invariants: pairwise commuting generators and full GF(2)
  // rank (purity). Quadratic; intended for tests.
  bool invariants_hold() const;

  // One generator per line, a sign character followed by {I,X,Y,Z}^N.
  std::string dump() const;

 private:
  explicit Tableau(std::size_t n_qubits);

  word_t* row_x(std::size_t i) { return x_rows_.data() + i * words_; }
  word_t* row_z(std::size_t i) { return z_rows_.data() + i * words_; }
  const word_t* row_x(std::size_t i) const { return x_rows_.data() + i * words_; }
  const word_t* row_z(std::size_t i) const { return z_rows_.data() + i * words_; }

  bool row_sign_negative(std::size_t i) const { return get_bit(signs_.data(), i); }

  // row i *= row k, sign bookkeeping included. Rows must commute.
  void multiply_row(std::size_t i, std::size_t k);

  bool row_anticommutes(std::size_t i, const PauliOperator& p) const;

  // Shared implementation of the three measurement entry points.
  MeasurementOutcome measure_impl(const PauliOperator& p, RngStream* rng,
                                  std::optional<int> forced, bool want_value);

  int deterministic_value(const PauliOperator& p) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<word_t> x_rows_, z_rows_;
  std::vector<word_t> signs_;
};

}  // namespace tricode
