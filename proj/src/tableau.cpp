#include "tricode/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tricode {

Tableau::Tableau(std::size_t n_qubits)
    : n_(n_qubits),
      words_(words_for_bits(n_qubits)),
      x_rows_(n_qubits * words_, 0),
      z_rows_(n_qubits * words_, 0),
      signs_(words_for_bits(n_qubits), 0) {}

Tableau Tableau::product_state(std::size_t n_qubits, Basis basis, int sign) {
  if (n_qubits == 0) {
    throw std::invalid_argument("product_state: qubit count must be positive");
  }
  if (sign != +1 && sign != -1) {
    throw std::invalid_argument("product_state: sign must be +1 or -1");
  }
  Tableau t(n_qubits);
  for (std::size_t q = 0; q < n_qubits; ++q) {
    word_t* row = (basis == Basis::X) ? t.row_x(q) : t.row_z(q);
    set_bit(row, q, true);
    if (sign == -1) {
      set_bit(t.signs_.data(), q, true);
    }
  }
  return t;
}

PauliOperator Tableau::generator(std::size_t i) const {
  if (i >= n_) {
    throw std::out_of_range("generator: index out of range");
  }
  PauliOperator p(n_, row_sign_negative(i) ? -1 : +1);
  std::copy(row_x(i), row_x(i) + words_, p.x_.begin());
  std::copy(row_z(i), row_z(i) + words_, p.z_.begin());
  return p;
}

int Tableau::generator_sign(std::size_t i) const {
  if (i >= n_) {
    throw std::out_of_range("generator_sign: index out of range");
  }
  return row_sign_negative(i) ? -1 : +1;
}

void Tableau::flip_generator_sign(std::size_t i) {
  if (i >= n_) {
    throw std::out_of_range("flip_generator_sign: index out of range");
  }
  flip_bit(signs_.data(), i);
}

void Tableau::multiply_row(std::size_t i, std::size_t k) {
  word_t* xi = row_x(i);
  word_t* zi = row_z(i);
  const word_t* xk = row_x(k);
  const word_t* zk = row_z(k);
  int e = phase_exponent_words({xi, words_}, {zi, words_}, {xk, words_},
                               {zk, words_});
  e = ((e % 4) + 4) % 4;
  assert((e & 1) == 0);
  bool flip = (e == 2);
  flip ^= row_sign_negative(k);
  if (flip) {
    flip_bit(signs_.data(), i);
  }
  for (std::size_t w = 0; w < words_; ++w) {
    xi[w] ^= xk[w];
    zi[w] ^= zk[w];
  }
}

bool Tableau::row_anticommutes(std::size_t i, const PauliOperator& p) const {
  const word_t* xi = row_x(i);
  const word_t* zi = row_z(i);
  const auto px = p.x_words();
  const auto pz = p.z_words();
  word_t acc = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    acc ^= (xi[w] & pz[w]) ^ (zi[w] & px[w]);
  }
  return std::popcount(acc) & 1;
}

bool Tableau::commutes_with_all(const PauliOperator& p) const {
  if (p.n_qubits() != n_) {
    throw std::invalid_argument("commutes_with_all: qubit count mismatch");
  }
  // Only words where p has support can contribute to the symplectic product.
  std::size_t lo = words_, hi = 0;
  const auto px = p.x_words();
  const auto pz = p.z_words();
  for (std::size_t w = 0; w < words_; ++w) {
    if (px[w] | pz[w]) {
      lo = std::min(lo, w);
      hi = std::max(hi, w + 1);
    }
  }
  for (std::size_t i = 0; i < n_; ++i) {
    const word_t* xi = row_x(i);
    const word_t* zi = row_z(i);
    word_t acc = 0;
    for (std::size_t w = lo; w < hi; ++w) {
      acc ^= (xi[w] & pz[w]) ^ (zi[w] & px[w]);
    }
    if (std::popcount(acc) & 1) {
      return false;
    }
  }
  return true;
}

GroupMembership Tableau::group_membership(const PauliOperator& p) const {
  if (p.n_qubits() != n_) {
    throw std::invalid_argument("group_membership: qubit count mismatch");
  }
  if (p.is_identity()) {
    throw std::invalid_argument("group_membership: identity operator");
  }
  if (!commutes_with_all(p)) {
    return GroupMembership::Anticommuting;
  }
  const int value = deterministic_value(p);
  return value > 0 ? GroupMembership::InGroupPlus : GroupMembership::InGroupMinus;
}

int Tableau::expectation_sign(const PauliOperator& p) const {
  const GroupMembership m = group_membership(p);
  if (m == GroupMembership::Anticommuting) {
    throw std::invalid_argument("expectation_sign: operator anticommutes");
  }
  return m == GroupMembership::InGroupPlus ? +1 : -1;
}

int Tableau::deterministic_value(const PauliOperator& p) const {
  // Bring a scratch copy of the generators into row echelon form over the 2N
  // columns (X plane first), then peel p off the echelon rows. The
  // accumulated sign of the visited rows is the eigenvalue.
  const std::size_t total_words = 2 * words_;
  std::vector<word_t> rows(n_ * total_words);
  std::vector<bool> neg(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::copy(row_x(i), row_x(i) + words_, rows.begin() + i * total_words);
    std::copy(row_z(i), row_z(i) + words_,
              rows.begin() + i * total_words + words_);
    neg[i] = row_sign_negative(i);
  }

  auto bit_at = [&](std::size_t r, std::size_t col) -> bool {
    return get_bit(rows.data() + r * total_words, col);
  };
  auto mult_into = [&](std::size_t dst, std::size_t src) {
    word_t* d = rows.data() + dst * total_words;
    const word_t* s = rows.data() + src * total_words;
    int e = phase_exponent_words({d, words_}, {d + words_, words_},
                                 {s, words_}, {s + words_, words_});
    e = ((e % 4) + 4) % 4;
    assert((e & 1) == 0);
    neg[dst] = neg[dst] ^ neg[src] ^ (e == 2);
    for (std::size_t w = 0; w < total_words; ++w) {
      d[w] ^= s[w];
    }
  };

  std::vector<std::size_t> pivot_col(n_);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 2 * n_ && rank < n_; ++col) {
    std::size_t pivot = n_;
    for (std::size_t r = rank; r < n_; ++r) {
      if (bit_at(r, col)) {
        pivot = r;
        break;
      }
    }
    if (pivot == n_) {
      continue;
    }
    if (pivot != rank) {
      for (std::size_t w = 0; w < total_words; ++w) {
        std::swap(rows[rank * total_words + w], rows[pivot * total_words + w]);
      }
      std::swap(neg[rank], neg[pivot]);
    }
    for (std::size_t r = rank + 1; r < n_; ++r) {
      if (bit_at(r, col)) {
        mult_into(r, rank);
      }
    }
    pivot_col[rank] = col;
    ++rank;
  }
  assert(rank == n_);

  // Residual starts as p's bits; multiply echelon rows in while tracking the
  // phase of the accumulated generator product.
  std::vector<word_t> residual(total_words, 0);
  std::copy(p.x_words().begin(), p.x_words().end(), residual.begin());
  std::copy(p.z_words().begin(), p.z_words().end(), residual.begin() + words_);
  std::vector<word_t> acc(total_words, 0);
  bool acc_neg = false;
  for (std::size_t r = 0; r < rank; ++r) {
    if (!get_bit(residual.data(), pivot_col[r])) {
      continue;
    }
    const word_t* row = rows.data() + r * total_words;
    int e = phase_exponent_words({acc.data(), words_},
                                 {acc.data() + words_, words_}, {row, words_},
                                 {row + words_, words_});
    e = ((e % 4) + 4) % 4;
    assert((e & 1) == 0);
    acc_neg = acc_neg ^ neg[r] ^ (e == 2);
    for (std::size_t w = 0; w < total_words; ++w) {
      acc[w] ^= row[w];
      residual[w] ^= row[w];
    }
  }
  for (word_t w : residual) {
    if (w != 0) {
      throw std::logic_error(
          "deterministic_value: operator not in the group span");
    }
  }
  const int group_sign = acc_neg ? -1 : +1;
  return group_sign * p.sign();
}

MeasurementOutcome Tableau::measure_impl(const PauliOperator& p, RngStream* rng,
                                         std::optional<int> forced,
                                         bool want_value) {
  if (p.n_qubits() != n_) {
    throw std::invalid_argument("measure: qubit count mismatch");
  }
  if (p.is_identity()) {
    throw std::invalid_argument("measure: identity operator");
  }
  if (p.sign() != +1) {
    throw std::invalid_argument("measure: operator sign must be +1");
  }

  std::size_t pivot = n_;
  for (std::size_t i = 0; i < n_; ++i) {
    if (row_anticommutes(i, p)) {
      pivot = i;
      break;
    }
  }

  if (pivot == n_) {
    const int value = want_value ? deterministic_value(p) : +1;
    return {value, true};
  }

  int outcome;
  if (forced.has_value()) {
    outcome = *forced;
  } else {
    outcome = rng->next_bool() ? -1 : +1;
  }

  for (std::size_t i = pivot + 1; i < n_; ++i) {
    if (row_anticommutes(i, p)) {
      multiply_row(i, pivot);
    }
  }

  word_t* xp = row_x(pivot);
  word_t* zp = row_z(pivot);
  std::copy(p.x_words().begin(), p.x_words().end(), xp);
  std::copy(p.z_words().begin(), p.z_words().end(), zp);
  set_bit(signs_.data(), pivot, outcome < 0);
  return {outcome, false};
}

MeasurementOutcome Tableau::measure(const PauliOperator& p, RngStream& rng) {
  return measure_impl(p, &rng, std::nullopt, true);
}

std::optional<int> Tableau::project(const PauliOperator& p, RngStream& rng) {
  const MeasurementOutcome out = measure_impl(p, &rng, std::nullopt, false);
  if (out.deterministic) {
    return std::nullopt;
  }
  return out.value;
}

MeasurementOutcome Tableau::measure_postselect(const PauliOperator& p,
                                               int desired) {
  if (desired != +1 && desired != -1) {
    throw std::invalid_argument("measure_postselect: desired sign must be +/-1");
  }
  return measure_impl(p, nullptr, desired, true);
}

std::size_t Tableau::rank_restricted(
    std::span<const std::uint32_t> qubits) const {
  if (qubits.empty()) {
    throw std::invalid_argument("rank_restricted: empty qubit subset");
  }
  std::vector<std::uint32_t> cols(qubits.begin(), qubits.end());
  std::sort(cols.begin(), cols.end());
  if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) {
    throw std::invalid_argument("rank_restricted: duplicate qubit index");
  }
  if (cols.back() >= n_) {
    throw std::out_of_range("rank_restricted: qubit index out of range");
  }

  const std::size_t m = cols.size();
  const std::size_t width = 2 * m;
  const std::size_t row_words = words_for_bits(width);
  std::vector<word_t> restricted(n_ * row_words, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    word_t* out = restricted.data() + i * row_words;
    const word_t* xi = row_x(i);
    const word_t* zi = row_z(i);
    for (std::size_t j = 0; j < m; ++j) {
      if (get_bit(xi, cols[j])) {
        set_bit(out, j, true);
      }
      if (get_bit(zi, cols[j])) {
        set_bit(out, m + j, true);
      }
    }
  }

  // Destructive elimination with one stored pivot row per leading column.
  std::vector<const word_t*> pivot_of_col(width, nullptr);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    word_t* row = restricted.data() + i * row_words;
    while (true) {
      std::size_t lead = width;
      for (std::size_t w = 0; w < row_words; ++w) {
        if (row[w]) {
          lead = w * kWordBits + std::countr_zero(row[w]);
          break;
        }
      }
      if (lead >= width) {
        break;
      }
      const word_t* pivot = pivot_of_col[lead];
      if (pivot == nullptr) {
        pivot_of_col[lead] = row;
        ++rank;
        break;
      }
      for (std::size_t w = 0; w < row_words; ++w) {
        row[w] ^= pivot[w];
      }
    }
  }
  return rank;
}

double Tableau::entanglement_entropy(
    std::span<const std::uint32_t> qubits) const {
  const std::size_t rank = rank_restricted(qubits);
  return static_cast<double>(rank) - static_cast<double>(qubits.size());
}

bool Tableau::invariants_hold() const {
  for (std::size_t i = 0; i < n_; ++i) {
    const PauliOperator gi = generator(i);
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (row_anticommutes(j, gi)) {
        return false;
      }
    }
  }
  std::vector<std::uint32_t> all(n_);
  for (std::size_t q = 0; q < n_; ++q) {
    all[q] = static_cast<std::uint32_t>(q);
  }
  return rank_restricted(all) == n_;
}

std::string Tableau::dump() const {
  std::string out;
  out.reserve(n_ * (n_ + 2));
  for (std::size_t i = 0; i < n_; ++i) {
    out += generator(i).to_string();
    out.push_back('\n');
  }
  return out;
}

}  // namespace tricode
