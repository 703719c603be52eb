#include "polyexp/resultant.hpp"

#include "polyexp/errors.hpp"

namespace polyexp {

BiPoly bareiss_determinant(std::vector<std::vector<BiPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return BiPoly(1);
  int sign = 1;
  BiPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return BiPoly();
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BiPoly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = divide_exact(t, prev);
        if (!q) throw InternalError("Bareiss step is not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = BiPoly();
    }
    prev = m[k][k];
  }
  BiPoly det = m[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

BiPoly resultant_z(const ZPoly& f, const ZPoly& g) {
  if (f.size() < 2 || g.size() < 2) throw InputError("resultant: both inputs need positive degree in z");
  if (f.back().is_zero() || g.back().is_zero()) throw InputError("resultant: leading z-coefficient is zero");
  const std::size_t df = f.size() - 1, dg = g.size() - 1, n = df + dg;
  std::vector<std::vector<BiPoly>> s(n, std::vector<BiPoly>(n));
  for (std::size_t i = 0; i < dg; ++i)
    for (std::size_t j = 0; j <= df; ++j) s[i][i + j] = f[df - j];
  for (std::size_t i = 0; i < df; ++i)
    for (std::size_t j = 0; j <= dg; ++j) s[dg + i][i + j] = g[dg - j];
  return bareiss_determinant(std::move(s));
}

}  // namespace polyexp
