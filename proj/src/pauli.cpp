#include "tricode/pauli.hpp"

#include <stdexcept>

namespace tricode {

PauliOperator::PauliOperator(std::size_t n_qubits, int sign)
    : n_(n_qubits),
      x_(words_for_bits(n_qubits), 0),
      z_(words_for_bits(n_qubits), 0) {
  if (n_qubits == 0) {
    throw std::invalid_argument("PauliOperator: qubit count must be positive");
  }
  set_sign(sign);
}

PauliOperator PauliOperator::from_string(const std::string& s) {
  std::size_t start = 0;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = (s[0] == '-');
    start = 1;
  }
  const std::size_t n = s.size() - start;
  PauliOperator p(n, negative ? -1 : +1);
  for (std::size_t q = 0; q < n; ++q) {
    switch (s[start + q]) {
      case 'I':
        break;
      case 'X':
        p.set_x(q, true);
        break;
      case 'Z':
        p.set_z(q, true);
        break;
      case 'Y':
        p.set_x(q, true);
        p.set_z(q, true);
        break;
      default:
        throw std::invalid_argument("PauliOperator: bad character in string");
    }
  }
  return p;
}

PauliOperator PauliOperator::single_x(std::size_t n_qubits, std::size_t q) {
  PauliOperator p(n_qubits);
  p.set_x(q, true);
  return p;
}

PauliOperator PauliOperator::single_z(std::size_t n_qubits, std::size_t q) {
  PauliOperator p(n_qubits);
  p.set_z(q, true);
  return p;
}

void PauliOperator::set_sign(int sign) {
  if (sign != +1 && sign != -1) {
    throw std::invalid_argument("PauliOperator: sign must be +1 or -1");
  }
  negative_ = (sign == -1);
}

std::size_t PauliOperator::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    w += std::popcount(x_[i] | z_[i]);
  }
  return w;
}

bool PauliOperator::is_identity() const {
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (x_[i] | z_[i]) {
      return false;
    }
  }
  return true;
}

bool PauliOperator::commutes_with(const PauliOperator& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("commutes: qubit count mismatch");
  }
  word_t acc = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    acc ^= (x_[i] & other.z_[i]) ^ (z_[i] & other.x_[i]);
  }
  return (std::popcount(acc) & 1) == 0;
}

int phase_exponent_words(std::span<const word_t> x1, std::span<const word_t> z1,
                         std::span<const word_t> x2, std::span<const word_t> z2) {
  // Per-qubit i exponents under Y = iXZ:
  //   +1 for (X,Y), (Y,Z), (Z,X);  -1 for (X,Z), (Y,X), (Z,Y).
  int plus = 0, minus = 0;
  for (std::size_t i = 0; i < x1.size(); ++i) {
    const word_t a = x1[i], b = z1[i], c = x2[i], d = z2[i];
    const word_t p = (a & ~b & c & d) | (a & b & ~c & d) | (~a & b & c & ~d);
    const word_t m = (a & ~b & ~c & d) | (a & b & c & ~d) | (~a & b & c & d);
    plus += std::popcount(p);
    minus += std::popcount(m);
  }
  return plus - minus;
}

void PauliOperator::multiply_by(const PauliOperator& other) {
  if (n_ != other.n_) {
    throw std::invalid_argument("multiply_by: qubit count mismatch");
  }
  const int e = ((phase_exponent_words(x_, z_, other.x_, other.z_) % 4) + 4) % 4;
  if (e & 1) {
    throw std::logic_error("multiply_by: anti-Hermitian product");
  }
  if (e == 2) {
    negative_ = !negative_;
  }
  negative_ ^= other.negative_;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    x_[i] ^= other.x_[i];
    z_[i] ^= other.z_[i];
  }
}

std::vector<std::uint32_t> PauliOperator::support() const {
  std::vector<std::uint32_t> out;
  for (std::size_t q = 0; q < n_; ++q) {
    if (x_bit(q) || z_bit(q)) {
      out.push_back(static_cast<std::uint32_t>(q));
    }
  }
  return out;
}

std::string PauliOperator::to_string() const {
  std::string s;
  s.reserve(n_ + 1);
  s.push_back(negative_ ? '-' : '+');
  for (std::size_t q = 0; q < n_; ++q) {
    const bool x = x_bit(q), z = z_bit(q);
    s.push_back(x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I'));
  }
  return s;
}

bool commutes(const PauliOperator& a, const PauliOperator& b) {
  return a.commutes_with(b);
}

}  // namespace tricode
