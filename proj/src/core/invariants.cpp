#include "core/invariants.hpp"

#include <algorithm>

#include "core/errors.hpp"

namespace gromov {

namespace {

using Mat = std::vector<BigInt>;  // n x n, row-major

Mat to_bigint(const StructureMatrix& g) {
  Mat m(static_cast<std::size_t>(g.dim()) * g.dim());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.entries()[i];
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b, int n) {
  Mat c(static_cast<std::size_t>(n) * n, BigInt(0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const BigInt& aik = a[static_cast<std::size_t>(i) * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j)
        c[static_cast<std::size_t>(i) * n + j] += aik * b[static_cast<std::size_t>(k) * n + j];
    }
  return c;
}

BigInt mat_trace(const Mat& a, int n) {
  BigInt t(0);
  for (int i = 0; i < n; ++i) t += a[static_cast<std::size_t>(i) * n + i];
  return t;
}

}  // namespace

int rank_rational(const StructureMatrix& g) {
  int n = g.dim();
  Mat m = to_bigint(g);
  int rank = 0;
  BigInt prev_pivot(1);
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot_row = -1;
    for (int r = rank; r < n; ++r)
      if (m[static_cast<std::size_t>(r) * n + col] != 0) {
        pivot_row = r;
        break;
      }
    if (pivot_row < 0) continue;
    if (pivot_row != rank)
      for (int j = 0; j < n; ++j)
        std::swap(m[static_cast<std::size_t>(pivot_row) * n + j],
                  m[static_cast<std::size_t>(rank) * n + j]);
    const BigInt pivot = m[static_cast<std::size_t>(rank) * n + col];
    for (int r = rank + 1; r < n; ++r) {
      const BigInt lead = m[static_cast<std::size_t>(r) * n + col];
      for (int j = 0; j < n; ++j) {
        BigInt v = m[static_cast<std::size_t>(r) * n + j] * pivot -
                   lead * m[static_cast<std::size_t>(rank) * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        m[static_cast<std::size_t>(r) * n + j] = std::move(v);
      }
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

std::vector<BigInt> trace_powers(const StructureMatrix& g) {
  int n = g.dim();
  Mat base = to_bigint(g);
  Mat power = base;
  std::vector<BigInt> traces;
  traces.reserve(static_cast<std::size_t>(n));
  traces.push_back(mat_trace(power, n));
  for (int k = 2; k <= n; ++k) {
    power = mat_mul(power, base, n);
    traces.push_back(mat_trace(power, n));
  }
  return traces;
}

IntPoly char_poly(const StructureMatrix& g) {
  int n = g.dim();
  Mat base = to_bigint(g);
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, BigInt(0));
  coeffs[static_cast<std::size_t>(n)] = 1;

  Mat m = base;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      // M_k = G (M_{k-1} + c_{n-k+1} I)
      Mat shifted = m;
      const BigInt& c = coeffs[static_cast<std::size_t>(n - k + 1)];
      for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i) * n + i] += c;
      m = mat_mul(base, shifted, n);
    }
    BigInt tr = mat_trace(m, n);
    BigInt c;
    mpz_divexact_ui(c.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
    coeffs[static_cast<std::size_t>(n - k)] = -c;
  }
  return IntPoly(std::move(coeffs));
}

RatPoly min_poly(const StructureMatrix& g) {
  int n = g.dim();
  const std::size_t dim = static_cast<std::size_t>(n) * n;
  Mat base = to_bigint(g);

  std::vector<Mat> powers;
  powers.push_back(Mat(dim, BigInt(0)));
  for (int i = 0; i < n; ++i) powers[0][static_cast<std::size_t>(i) * n + i] = 1;

  for (int k = 1; k <= n; ++k) {
    powers.push_back(mat_mul(powers.back(), base, n));

    // Solve sum_{i<k} x_i vec(G^i) = vec(G^k) over the rationals.
    std::vector<std::vector<Rat>> rows(dim, std::vector<Rat>(static_cast<std::size_t>(k) + 1));
    for (std::size_t r = 0; r < dim; ++r) {
      for (int i = 0; i < k; ++i) rows[r][static_cast<std::size_t>(i)] = Rat(powers[static_cast<std::size_t>(i)][r]);
      rows[r][static_cast<std::size_t>(k)] = Rat(powers[static_cast<std::size_t>(k)][r]);
    }

    // Gaussian elimination on the augmented system.
    std::size_t pivot_row = 0;
    std::vector<int> pivot_col_of_row;
    for (int col = 0; col < k && pivot_row < dim; ++col) {
      std::size_t found = pivot_row;
      while (found < dim && rows[found][static_cast<std::size_t>(col)] == 0) ++found;
      if (found == dim) continue;
      std::swap(rows[pivot_row], rows[found]);
      const Rat pivot = rows[pivot_row][static_cast<std::size_t>(col)];
      for (std::size_t r = 0; r < dim; ++r) {
        if (r == pivot_row || rows[r][static_cast<std::size_t>(col)] == 0) continue;
        Rat f = rows[r][static_cast<std::size_t>(col)] / pivot;
        for (int j = col; j <= k; ++j)
          rows[r][static_cast<std::size_t>(j)] -= f * rows[pivot_row][static_cast<std::size_t>(j)];
      }
      pivot_col_of_row.push_back(col);
      ++pivot_row;
    }
    bool consistent = true;
    for (std::size_t r = pivot_row; r < dim; ++r)
      if (rows[r][static_cast<std::size_t>(k)] != 0) {
        consistent = false;
        break;
      }
    if (!consistent) continue;

    std::vector<Rat> coeffs(static_cast<std::size_t>(k) + 1, Rat(0));
    coeffs[static_cast<std::size_t>(k)] = 1;
    for (std::size_t r = 0; r < pivot_row; ++r) {
      int col = pivot_col_of_row[r];
      coeffs[static_cast<std::size_t>(col)] =
          -rows[r][static_cast<std::size_t>(k)] / rows[r][static_cast<std::size_t>(col)];
    }
    RatPoly m(std::move(coeffs));

    // belt: m(G) must vanish
    std::vector<Rat> acc(dim, Rat(0));
    for (int i = 0; i <= k; ++i) {
      const Rat& c = m.coeff(i);
      if (c == 0) continue;
      for (std::size_t r = 0; r < dim; ++r) acc[r] += c * Rat(powers[static_cast<std::size_t>(i)][r]);
    }
    for (const Rat& v : acc)
      if (v != 0) throw Error(ErrorCode::InvariantViolation, "minimal polynomial does not annihilate G");

    if (!RatPoly::from_int(char_poly(g)).is_divisible_by(m))
      throw Error(ErrorCode::InvariantViolation,
                  "minimal polynomial does not divide the characteristic polynomial");
    return m;
  }
  throw Error(ErrorCode::InvariantViolation, "no annihilating polynomial up to degree n");
}

int ends_count(const StructureMatrix& g) {
  int n = g.dim();
  int count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (g.at(i, j) == 1 && g.at(j, i) == 0) ++count;
  return count;
}

namespace {

bool reaches_all(const std::vector<std::vector<int>>& adj, int n) {
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int visited = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++visited;
        stack.push_back(w);
      }
  }
  return visited == n;
}

}  // namespace

bool is_irreducible(const StructureMatrix& g) {
  int n = g.dim();
  std::vector<std::vector<int>> fwd(static_cast<std::size_t>(n)), rev(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (g.at(i, j) == 1) {
        fwd[static_cast<std::size_t>(i - 1)].push_back(j - 1);
        rev[static_cast<std::size_t>(j - 1)].push_back(i - 1);
      }
  bool strongly_connected = reaches_all(fwd, n) && reaches_all(rev, n);

  // cross-check: positivity of P = I + G + ... + G^n
  Mat base = to_bigint(g);
  Mat power(static_cast<std::size_t>(n) * n, BigInt(0));
  Mat total(static_cast<std::size_t>(n) * n, BigInt(0));
  for (int i = 0; i < n; ++i) {
    power[static_cast<std::size_t>(i) * n + i] = 1;
    total[static_cast<std::size_t>(i) * n + i] = 1;
  }
  for (int k = 1; k <= n; ++k) {
    power = mat_mul(power, base, n);
    for (std::size_t idx = 0; idx < total.size(); ++idx) total[idx] += power[idx];
  }
  bool all_positive = std::all_of(total.begin(), total.end(), [](const BigInt& v) { return v > 0; });

  if (strongly_connected != all_positive)
    throw Error(ErrorCode::InvariantViolation,
                "strong-connectivity and matrix-positivity tests disagree");
  return strongly_connected;
}

namespace {

void check_newton_identities(const std::vector<BigInt>& powers, const IntPoly& k_poly, int n) {
  // For monic k(t) = sum c_i t^i (c_n = 1):
  //   p_m + c_{n-1} p_{m-1} + ... + c_{n-m+1} p_1 + m c_{n-m} = 0, m = 1..n
  for (int m = 1; m <= n; ++m) {
    BigInt acc = powers[static_cast<std::size_t>(m - 1)];
    for (int i = 1; i < m; ++i)
      acc += k_poly.coeff(n - i) * powers[static_cast<std::size_t>(m - i - 1)];
    acc += BigInt(m) * k_poly.coeff(n - m);
    if (acc != 0)
      throw Error(ErrorCode::InvariantViolation,
                  "trace powers and characteristic polynomial fail Newton's identities");
  }
}

}  // namespace

InvariantFingerprint fingerprint(const GromovStructure& s) {
  StructureMatrix g = matrix_rep(s);
  InvariantFingerprint fp;
  fp.n = s.point_count();
  fp.rank = rank_rational(g);
  fp.trace_powers = trace_powers(g);
  fp.char_poly = char_poly(g);
  fp.min_poly = min_poly(g);
  fp.ends = ends_count(g);
  fp.irreducible = is_irreducible(g);
  fp.removed_edge_count = static_cast<int>(removed_edges(s).size());

  // rank and removed_edge_count coincide for every structure on up to six
  // points, but not beyond: a removed-edge set containing an even cycle is
  // rank-deficient, and such sets are realizable from seven points on. Both
  // fields are kept and compared; equality is not enforced.
  if (fp.ends % 2 != 0)
    throw Error(ErrorCode::InvariantViolation, "ends count must be even");
  check_newton_identities(fp.trace_powers, fp.char_poly, fp.n);
  return fp;
}

}  // namespace gromov
