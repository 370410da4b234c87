#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tricode/bitops.hpp"

namespace tricode {

// An N-qubit Pauli operator as two bit planes (X part, Z part) plus a sign.
// A qubit with both bits set carries Y, with the phase convention Y = iXZ;
// signs are restricted to {+1, -1} (generators and measured operators are
// Hermitian, so no bare i ever survives a product we form).
class PauliOperator {
 public:
  PauliOperator() = default;

  explicit PauliOperator(std::size_t n_qubits, int sign = +1);

  // Parses strings like "+XIZY" or "-ZZ". A leading sign is optional.
  static PauliOperator from_string(const std::string& s);

  // Single-qubit X/Z/Y on qubit q of an n-qubit register.
  static PauliOperator single_x(std::size_t n_qubits, std::size_t q);
  static PauliOperator single_z(std::size_t n_qubits, std::size_t q);

  std::size_t n_qubits() const { return n_; }
  int sign() const { return negative_ ? -1 : +1; }
  void set_sign(int sign);
  void negate() { negative_ = !negative_; }

  bool x_bit(std::size_t q) const { return get_bit(x_.data(), q); }
  bool z_bit(std::size_t q) const { return get_bit(z_.data(), q); }
  void set_x(std::size_t q, bool v) { set_bit(x_.data(), q, v); }
  void set_z(std::size_t q, bool v) { set_bit(z_.data(), q, v); }

  std::span<const word_t> x_words() const { return x_; }
  std::span<const word_t> z_words() const { return z_; }

  std::size_t weight() const;
  bool is_identity() const;

  // True iff the symplectic inner product x_a.z_b + z_a.x_b vanishes mod 2.
  // Symmetric and sign-independent.
  bool commutes_with(const PauliOperator& other) const;

  // In-place product *this = *this * other, with exponent-mod-4 phase
  // bookkeeping folded into the sign. Throws std::logic_error if the product
  // is anti-Hermitian (odd i exponent), which only happens for anticommuting
  // factors.
  void multiply_by(const PauliOperator& other);

  // Sorted list of qubits the operator acts on.
  std::vector<std::uint32_t> support() const;

  std::string to_string() const;

  bool operator==(const PauliOperator& other) const = default;

 private:
  friend class Tableau;

  std::size_t n_ = 0;
  bool negative_ = false;
  std::vector<word_t> x_, z_;
};

bool commutes(const PauliOperator& a, const PauliOperator& b);

// i exponent (mod 4) of the qubit-wise phase picked up when multiplying the
// Pauli with bit planes (x1,z1) by the one with (x2,z2), restricted to the
// given words. Returns (#plus - #minus) which the caller reduces mod 4.
int phase_exponent_words(std::span<const word_t> x1, std::span<const word_t> z1,
                         std::span<const word_t> x2, std::span<const word_t> z2);

}  // namespace tricode
