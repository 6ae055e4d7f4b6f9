#include "packlab/simplex.hpp"

#include <stdexcept>

namespace packlab {

namespace {

// dense tableau; column layout [variables | rhs], objective row kept reduced
struct Tableau {
  int m, n;
  std::vector<std::vector<Rational>> row;  // m rows of n+1
  std::vector<Rational> obj;               // n+1, obj[n] = -objective value
  std::vector<int> basis;

  Tableau(int m_, int n_) : m(m_), n(n_), row(m_, std::vector<Rational>(n_ + 1)), obj(n_ + 1), basis(m_) {}

  void pivot(int r, int c) {
    Rational p = row[r][c];
    for (auto& x : row[r]) x /= p;
    for (int i = 0; i < m; ++i) {
      if (i == r || row[i][c] == 0) continue;
      Rational f = row[i][c];
      for (int j = 0; j <= n; ++j) row[i][j] -= f * row[r][j];
    }
    if (obj[c] != 0) {
      Rational f = obj[c];
      for (int j = 0; j <= n; ++j) obj[j] -= f * row[r][j];
    }
    basis[r] = c;
  }

  // minimize; returns false when unbounded
  bool solve() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n; ++j)
        if (obj[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m; ++i) {
        if (row[i][enter] <= 0) continue;
        Rational ratio = row[i][n] / row[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

EqFeasResult solve_equality_feasibility(const std::vector<std::vector<Rational>>& A,
                                        const std::vector<Rational>& b) {
  int m = (int)b.size();
  int n = m ? (int)A[0].size() : 0;
  for (const auto& r : A)
    if ((int)r.size() != n) throw std::invalid_argument("simplex: ragged matrix");
  if ((int)A.size() != m) throw std::invalid_argument("simplex: row count mismatch");

  std::vector<int> sign(m, 1);
  Tableau t(m, n + m);
  for (int i = 0; i < m; ++i) {
    if (b[i] < 0) sign[i] = -1;
    for (int j = 0; j < n; ++j) t.row[i][j] = sign[i] < 0 ? -A[i][j] : A[i][j];
    t.row[i][n + i] = 1;
    t.row[i][n + m] = sign[i] < 0 ? -b[i] : b[i];
    t.basis[i] = n + i;
  }
  // cost 1 on artificials; with them basic, reduced costs are -(column sums)
  for (int j = 0; j <= n + m; ++j) {
    Rational s = 0;
    for (int i = 0; i < m; ++i) s += t.row[i][j];
    t.obj[j] = (j >= n && j < n + m ? Rational(1) : Rational(0)) - s;
  }
  if (!t.solve()) throw std::logic_error("phase-1 simplex cannot be unbounded");

  EqFeasResult res;
  Rational opt = -t.obj[n + m];
  if (opt == 0) {
    res.feasible = true;
    res.x.assign(n, 0);
    for (int i = 0; i < m; ++i)
      if (t.basis[i] < n) res.x[t.basis[i]] = t.row[i][n + m];
    return res;
  }
  res.feasible = false;
  // simplex multiplier y_i = cost(artificial i) - reduced cost(artificial i)
  res.farkas.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    Rational y = Rational(1) - t.obj[n + i];
    res.farkas[i] = sign[i] < 0 ? -y : y;
  }
  Rational yb = 0;
  for (int i = 0; i < m; ++i) yb += res.farkas[i] * b[i];
  if (!(yb > 0)) throw std::logic_error("farkas certificate: y^T b not positive");
  for (int j = 0; j < n; ++j) {
    Rational ya = 0;
    for (int i = 0; i < m; ++i) ya += res.farkas[i] * A[i][j];
    if (ya > 0) throw std::logic_error("farkas certificate: y^T A has a positive entry");
  }
  return res;
}

MaxResult maximize_leq(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                       const std::vector<Rational>& c) {
  int m = (int)b.size();
  int n = (int)c.size();
  for (const auto& r : A)
    if ((int)r.size() != n) throw std::invalid_argument("simplex: ragged matrix");
  for (const auto& v : b)
    if (v < 0) throw std::invalid_argument("maximize_leq: needs b >= 0");

  Tableau t(m, n + m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t.row[i][j] = A[i][j];
    t.row[i][n + i] = 1;
    t.row[i][n + m] = b[i];
    t.basis[i] = n + i;
  }
  for (int j = 0; j < n; ++j) t.obj[j] = -c[j];  // minimize -c^T x

  MaxResult res;
  if (!t.solve()) {
    res.bounded = false;
    return res;
  }
  res.bounded = true;
  res.x.assign(n, 0);
  for (int i = 0; i < m; ++i)
    if (t.basis[i] < n) res.x[t.basis[i]] = t.row[i][n + m];
  res.value = 0;
  for (int j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

}  // namespace packlab
