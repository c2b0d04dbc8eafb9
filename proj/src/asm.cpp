#include "tplab/asm.hpp"

#include <algorithm>
#include <sstream>

#include "tplab/errors.hpp"

namespace tplab {

bool is_valid_asm(const AsmMatrix& A) {
  const int n = A.n;
  if (n <= 0 || int(A.e.size()) != n * n) return false;
  for (int i = 0; i < n; ++i) {
    int rowsum = 0, last = 0;
    for (int j = 0; j < n; ++j) {
      int v = A.at(i, j);
      if (v < -1 || v > 1) return false;
      if (v != 0) {
        if (last == v) return false;  // consecutive nonzeros must alternate
        if (last == 0 && v != 1) return false;  // first nonzero is +1
        last = v;
      }
      rowsum += v;
    }
    if (rowsum != 1 || last != 1) return false;
  }
  for (int j = 0; j < n; ++j) {
    int colsum = 0, last = 0;
    for (int i = 0; i < n; ++i) {
      int v = A.at(i, j);
      if (v != 0) {
        if (last == v) return false;
        if (last == 0 && v != 1) return false;
        last = v;
      }
      colsum += v;
    }
    if (colsum != 1 || last != 1) return false;
  }
  return true;
}

namespace {

// Cell-by-cell DFS.  Invariant: running column sums stay in {0,1} (and end
// at 1 because the grand total is n), running row prefix stays in {0,1} and
// ends at 1 -- together these are exactly the two ASM line conditions.
struct AsmDfs {
  int n;
  AsmMatrix buf;
  std::vector<int> colsum;
  const std::function<void(const AsmMatrix&)>* fn;

  void run(int i, int j, int rowprefix) {
    if (j == n) {
      if (rowprefix != 1) return;
      if (i + 1 == n) (*fn)(buf);
      else run(i + 1, 0, 0);
      return;
    }
    int8_t* cell = &buf.e[size_t(i) * n + j];
    // entries in ascending order -1 < 0 < +1 => row-lexicographic stream
    if (rowprefix == 1 && colsum[j] == 1) {
      *cell = -1;
      --colsum[j];
      run(i, j + 1, 0);
      ++colsum[j];
    }
    *cell = 0;
    run(i, j + 1, rowprefix);
    if (rowprefix == 0 && colsum[j] == 0) {
      *cell = 1;
      ++colsum[j];
      run(i, j + 1, 1);
      --colsum[j];
    }
    *cell = 0;
  }
};

}  // namespace

void for_each_asm(int n, const std::function<void(const AsmMatrix&)>& fn) {
  if (n < 1) throw domain_error("for_each_asm: n must be >= 1");
  if (n > 8) throw cap_error("for_each_asm: n capped at 8");
  AsmDfs dfs;
  dfs.n = n;
  dfs.buf.n = n;
  dfs.buf.e.assign(size_t(n) * n, 0);
  dfs.colsum.assign(size_t(n), 0);
  dfs.fn = &fn;
  dfs.run(0, 0, 0);
}

std::vector<AsmMatrix> all_asms(int n) {
  if (n > 7) throw cap_error("all_asms: n capped at 7 (memory)");
  std::vector<AsmMatrix> out;
  for_each_asm(n, [&](const AsmMatrix& a) { out.push_back(a); });
  return out;
}

std::uint64_t asm_count(int n) {
  std::uint64_t c = 0;
  for_each_asm(n, [&](const AsmMatrix&) { ++c; });
  return c;
}

AsmStats asm_stats(const AsmMatrix& A) {
  const int n = A.n;
  AsmStats s;
  s.muRow.assign(size_t(n), 0);
  s.muCol.assign(size_t(n), 0);

  // S(i,j) = sum of entries in rows <= i, cols <= j (1-based offsets below).
  std::vector<int> S(size_t(n + 1) * (n + 1), 0);
  auto at = [&](int i, int j) -> int& { return S[size_t(i) * (n + 1) + j]; };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      at(i, j) = A.at(i - 1, j - 1) + at(i - 1, j) + at(i, j - 1) - at(i - 1, j - 1);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = A.at(i, j);
      if (v == -1) {
        ++s.mu;
        ++s.muRow[size_t(i)];
        ++s.muCol[size_t(j)];
      }
      if (v != 0) {
        // this cell as the lower element of a pair; upper partner counted
        // above-and-strictly-right for inv, above-and-weakly-right for nu
        s.inv += v * (i - at(i, j + 1));
        s.nu += v * (i - at(i, j));
      }
    }

  // J: zero cells with equal running sums (column down to row i, row out to col j).
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (A.at(i, j) != 0) continue;
      int col = at(i + 1, j + 1) - at(i + 1, j);  // sum_{k<=i} a_{kj}
      int row = at(i + 1, j + 1) - at(i, j + 1);  // sum_{l<=j} a_{il}
      if (col == row) ++s.j;
    }
  }
  return s;
}

AsmMatrix quarter_turn(const AsmMatrix& A) {
  const int n = A.n;
  AsmMatrix r;
  r.n = n;
  r.e.assign(size_t(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.e[size_t(i) * n + j] = int8_t(A.at(j, n - 1 - i));
  return r;
}

int mu_max(int n) {
  if (n < 1) throw domain_error("mu_max: n must be >= 1");
  return (n - 1) * (n - 1) / 4;
}

const GroupedCounts& group_by_stats(int n) {
  static std::map<int, GroupedCounts> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  GroupedCounts g;
  for_each_asm(n, [&](const AsmMatrix& a) {
    AsmStats s = asm_stats(a);
    ++g[{s.mu, s.nu}];
  });
  return cache.emplace(n, std::move(g)).first->second;
}

void IntPoly::set(int i, const mpz_class& v) {
  if (i >= int(c.size())) c.resize(size_t(i) + 1, mpz_class(0));
  c[size_t(i)] = v;
  trim();
}

void IntPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

mpz_class IntPoly::eval_one() const {
  mpz_class s = 0;
  for (const auto& x : c) s += x;
  return s;
}

Complex IntPoly::eval(const Complex& t) const {
  mpfr_prec_t prec = t.prec();
  Complex acc(Real(0l).at_prec(prec), Real(0l).at_prec(prec));
  for (size_t i = c.size(); i-- > 0;) acc = acc * t + Complex(Real(c[i], prec));
  return acc;
}

std::string IntPoly::str(const std::string& var) const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool firstTerm = true;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    mpz_class a = c[i];
    if (!firstTerm) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    mpz_class mag = abs(a);
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) {
      os << var;
      if (i >= 2) os << "^" << i;
    }
    firstTerm = false;
  }
  return os.str();
}

IntPoly q_factorial_poly(int n) {
  IntPoly p;
  p.c = {mpz_class(1)};
  for (int i = 2; i <= n; ++i) {
    std::vector<mpz_class> next(p.c.size() + size_t(i) - 1, mpz_class(0));
    for (size_t d = 0; d < p.c.size(); ++d)
      for (int r = 0; r < i; ++r) next[d + size_t(r)] += p.c[d];
    p.c = std::move(next);
  }
  p.trim();
  return p;
}

IntPoly z_nk_poly(int n, int k) {
  IntPoly p;
  if (k < 0 || k > mu_max(n)) return p;  // zero polynomial
  for (const auto& [key, cnt] : group_by_stats(n)) {
    if (key.first != k) continue;
    int deg = key.second;
    if (deg >= int(p.c.size())) p.c.resize(size_t(deg) + 1, mpz_class(0));
    p.c[size_t(deg)] += cnt;
  }
  p.trim();
  return p;
}

BivarPoly z_bivariate(int n) {
  BivarPoly z;
  for (const auto& [key, cnt] : group_by_stats(n))
    z.c[{key.second, key.first}] += cnt;  // x^nu y^mu
  return z;
}

Complex ik_direct(const Complex& q, const PointTuple& x, const PointTuple& y) {
  if (x.size() != y.size()) throw domain_error("ik_direct: size mismatch");
  const int n = x.size();
  mpfr_prec_t prec = q.prec();
  Mat<Complex> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Real s = x[i] + y[j];
      Complex t = q * x[i] + Complex(y[j].at_prec(prec));
      if (s.is_zero() || t.is_zero()) throw domain_error("ik_direct: pole");
      Complex one(Real(1l).at_prec(prec));
      m(i, j) = one / (t * s);
    }
  return det(std::move(m));
}

Complex ik_propp_sum(const Complex& q, const PointTuple& x, const PointTuple& y) {
  if (x.size() != y.size()) throw domain_error("ik_propp_sum: size mismatch");
  const int n = x.size();
  if (n > 7) throw cap_error("ik_propp_sum: n capped at 7 (enumeration)");
  mpfr_prec_t prec = q.prec();

  Complex one(Real(1l).at_prec(prec));
  Complex oneMinusQ = one - q;
  Complex oneMinusQ2 = oneMinusQ * oneMinusQ;

  // prefactor V_X V_Y / prod (x_i+y_j)(q x_i + y_j)
  Real vxy = vandermonde(x) * vandermonde(y);
  Complex denom = one;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Real s = x[i] + y[j];
      Complex t = q * x[i] + Complex(y[j].at_prec(prec));
      if (s.is_zero() || t.is_zero()) throw domain_error("ik_propp_sum: pole");
      denom = denom * (t * s);
    }
  Complex pref = Complex(vxy.at_prec(prec)) / denom;

  Complex acc(Real(0l).at_prec(prec), Real(0l).at_prec(prec));
  long c2n = long(n) * (n - 1) / 2;

  for_each_asm(n, [&](const AsmMatrix& A) {
    AsmStats st = asm_stats(A);
    Complex term = pow_si(q, c2n - st.inv);
    if (st.mu & 1) term = -term;
    term = term * pow_si(oneMinusQ2, st.mu);
    for (int i = 0; i < n; ++i) {
      if (st.muRow[size_t(i)]) term = term * pow_si(Complex(x[i].at_prec(prec)), st.muRow[size_t(i)]);
      if (st.muCol[size_t(i)]) term = term * pow_si(Complex(y[i].at_prec(prec)), st.muCol[size_t(i)]);
    }
    // zero cells: factor (alpha_ij x_i + y_j), alpha_ij = q iff the running
    // sums agree at (i,j)
    std::vector<int> colpart(size_t(n), 0);
    for (int i = 0; i < n; ++i) {
      int rowpart = 0;
      for (int j = 0; j < n; ++j) {
        int v = A.at(i, j);
        rowpart += v;
        colpart[size_t(j)] += v;
        if (v != 0) continue;
        if (colpart[size_t(j)] == rowpart)
          term = term * (q * x[i] + Complex(y[j].at_prec(prec)));
        else
          term = term * Complex((x[i] + y[j]).at_prec(prec));
      }
    }
    acc += term;
  });

  return pref * acc;
}

}  // namespace tplab
