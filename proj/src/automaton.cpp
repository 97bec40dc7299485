#include "penney/automaton.hpp"

#include <utility>

#include "penney/errors.hpp"

namespace penney {

AvoidanceAutomaton::AvoidanceAutomaton(Pattern pattern) : pattern_(std::move(pattern)) {
  const std::size_t m = pattern_.length();

  failure_.assign(m, 0);
  for (std::size_t i = 1, k = 0; i < m; ++i) {
    while (k > 0 && pattern_[i] != pattern_[k]) k = failure_[k - 1];
    if (pattern_[i] == pattern_[k]) ++k;
    failure_[i] = k;
  }

  table_.resize(m);
  for (std::size_t state = 0; state < m; ++state) {
    for (std::uint8_t bit = 0; bit < 2; ++bit) {
      if (pattern_[state] == bit) {
        table_[state][bit] = state + 1;
      } else if (state == 0) {
        table_[state][bit] = 0;
      } else {
        table_[state][bit] = table_[failure_[state - 1]][bit];
      }
    }
  }
}

AvoidanceAutomaton build_automaton(const Pattern& p) { return AvoidanceAutomaton(p); }

std::vector<BigRational> expected_steps_to_absorption(const AvoidanceAutomaton& automaton) {
  const std::size_t m = automaton.accepting_state();
  // Rows: 2E_k - E_{δ(k,0)} - E_{δ(k,1)} = 2, unknowns E_0..E_{m-1}.
  std::vector<std::vector<BigRational>> a(m, std::vector<BigRational>(m + 1, BigRational(0)));
  for (std::size_t k = 0; k < m; ++k) {
    a[k][k] += 2;
    for (std::uint8_t bit = 0; bit < 2; ++bit) {
      const std::size_t to = automaton.next(k, bit);
      if (to != m) a[k][to] -= 1;
    }
    a[k][m] = 2;
  }

  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) throw Error(ErrorKind::InvalidArgument, "absorption system is singular");
    std::swap(a[col], a[pivot]);
    for (std::size_t row = 0; row < m; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const BigRational factor = a[row][col] / a[col][col];
      for (std::size_t c = col; c <= m; ++c) a[row][c] -= factor * a[col][c];
    }
  }

  std::vector<BigRational> steps(m);
  for (std::size_t k = 0; k < m; ++k) steps[k] = a[k][m] / a[k][k];
  return steps;
}

}  // namespace penney
