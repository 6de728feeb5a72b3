#include "joinmeet/linalg.hpp"

namespace joinmeet {

namespace {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<mpq_class>>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const mpq_class inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const mpq_class f = m[i][c];
      for (std::size_t k = c; k < ncols; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rational_rank(std::vector<std::vector<mpq_class>> rows) {
  if (rows.empty()) return 0;
  return rref(rows, rows.front().size()).size();
}

std::vector<std::vector<mpz_class>> integer_null_space(std::vector<std::vector<mpq_class>> rows,
                                                       std::size_t ncols) {
  for (auto& r : rows) r.resize(ncols);
  auto pivots = rref(rows, ncols);
  std::vector<char> is_pivot(ncols, 0);
  for (auto c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<mpz_class>> out;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> w(ncols, 0);
    w[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) w[pivots[i]] = -rows[i][free];
    mpz_class den = 1;
    for (const auto& x : w) den = lcm(den, x.get_den());
    std::vector<mpz_class> iw(ncols);
    mpz_class g = 0;
    for (std::size_t k = 0; k < ncols; ++k) {
      mpq_class s = w[k] * den;
      iw[k] = s.get_num();
      g = gcd(g, iw[k]);
    }
    if (g > 1)
      for (auto& x : iw) x /= g;
    out.push_back(std::move(iw));
  }
  return out;
}

}  // namespace joinmeet
