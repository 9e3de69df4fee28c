#include "mnewton/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "mnewton/error.hpp"
#include "mnewton/kernels.hpp"

namespace mnewton {

Matrix::Matrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

Matrix::Matrix(std::size_t n, std::vector<double> row_major) : n_(n), a_(std::move(row_major)) {
  if (a_.size() != n_ * n_) {
    throw InputError("matrix of order " + std::to_string(n_) + " needs " +
                     std::to_string(n_ * n_) + " entries, got " + std::to_string(a_.size()));
  }
  if (!all_finite()) throw InputError("matrix entries must be finite");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> d) {
  Matrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  if (!m.all_finite()) throw InputError("matrix entries must be finite");
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw InputError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                       " entries, expected " + std::to_string(n));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return Matrix(n, std::move(flat));
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_symmetric(double tol) const {
  const double bound = tol * max_abs();
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > bound) return false;
  return true;
}

bool Matrix::all_finite() const {
  return std::all_of(a_.begin(), a_.end(), [](double v) { return std::isfinite(v); });
}

Matrix Matrix::transpose() const {
  Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (rhs.n_ != n_) throw InputError("matrix product: order mismatch");
  Matrix out(n_);
  kernels::gemm(a_, rhs.a_, out.a_, n_, n_, n_);
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rhs.n_ != n_) throw InputError("matrix sum: order mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rhs.n_ != n_) throw InputError("matrix difference: order mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] -= rhs.a_[i];
  return out;
}

Matrix Matrix::operator*(double s) const {
  Matrix out = *this;
  for (double& v : out.a_) v *= s;
  return out;
}

IndexSet::IndexSet(std::size_t ambient, std::vector<int> elements)
    : ambient_(ambient), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const int e = elements_[i];
    if (e < 1 || static_cast<std::size_t>(e) > ambient_) {
      throw InputError("index " + std::to_string(e) + " outside 1.." + std::to_string(ambient_));
    }
    if (i > 0 && elements_[i - 1] >= e) throw InputError("index set must be strictly increasing");
  }
}

IndexSet IndexSet::full(std::size_t ambient) {
  std::vector<int> e(ambient);
  for (std::size_t i = 0; i < ambient; ++i) e[i] = static_cast<int>(i + 1);
  return IndexSet(ambient, std::move(e));
}

IndexSet IndexSet::from_mask(std::size_t ambient, std::uint64_t mask) {
  if (ambient > 64) throw InputError("bit-mask index sets need ambient order <= 64");
  if (ambient < 64 && (mask >> ambient) != 0) throw InputError("mask has bits beyond ambient order");
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    e.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return IndexSet(ambient, std::move(e));
}

IndexSet IndexSet::dual() const {
  std::vector<int> d;
  d.reserve(ambient_ - elements_.size());
  std::size_t p = 0;
  for (int i = 1; i <= static_cast<int>(ambient_); ++i) {
    if (p < elements_.size() && elements_[p] == i) {
      ++p;
    } else {
      d.push_back(i);
    }
  }
  return IndexSet(ambient_, std::move(d));
}

bool IndexSet::contains(int i) const {
  return std::binary_search(elements_.begin(), elements_.end(), i);
}

std::size_t IndexSet::intersection_size(const IndexSet& other) const {
  std::size_t count = 0;
  auto a = elements_.begin();
  auto b = other.elements_.begin();
  while (a != elements_.end() && b != other.elements_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

std::uint64_t IndexSet::mask() const {
  if (ambient_ > 64) throw InputError("bit-mask index sets need ambient order <= 64");
  std::uint64_t m = 0;
  for (int e : elements_) m |= std::uint64_t{1} << (e - 1);
  return m;
}

std::vector<std::uint64_t> subset_masks(std::size_t n, std::size_t m) {
  if (m > n) {
    throw InputError("subset size " + std::to_string(m) + " exceeds ground set size " +
                     std::to_string(n));
  }
  if (n > 63) throw InputError("subset enumeration supports n <= 63");
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(binomial(n, m)));
  if (m == 0) {
    out.push_back(0);
    return out;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t x = (std::uint64_t{1} << m) - 1;
  while (x < limit) {
    out.push_back(x);
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

std::vector<IndexSet> enumerate_subsets(std::size_t n, std::size_t m) {
  const auto masks = subset_masks(n, m);
  std::vector<IndexSet> out;
  out.reserve(masks.size());
  for (auto mask : masks) out.push_back(IndexSet::from_mask(n, mask));
  return out;
}

namespace {

std::uint64_t binomial_u64(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    // C(n, i+1) = C(n, i) (n-i)/(i+1). With num/den in lowest terms, den | r.
    const std::uint64_t g = std::gcd<std::uint64_t, std::uint64_t>(n - i, i + 1);
    const std::uint64_t num = (n - i) / g;
    const std::uint64_t den = (i + 1) / g;
    r = (r / den) * num;
  }
  return r;
}

}  // namespace

std::size_t colex_rank(std::uint64_t mask) {
  std::size_t rank = 0;
  std::size_t i = 1;
  while (mask != 0) {
    const auto pos = static_cast<std::size_t>(std::countr_zero(mask));
    rank += binomial_u64(pos, i);
    mask &= mask - 1;
    ++i;
  }
  return rank;
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  if (n <= 62) return static_cast<double>(binomial_u64(n, k));
  k = std::min(k, n - k);
  double r = 1.0;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return std::round(r);
}

Matrix principal_submatrix(const Matrix& a, const IndexSet& alpha) {
  if (alpha.ambient() != a.order()) {
    throw InputError("index set ambient order " + std::to_string(alpha.ambient()) +
                     " does not match matrix order " + std::to_string(a.order()));
  }
  const auto idx = alpha.elements();
  Matrix sub(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      sub(i, j) = a(static_cast<std::size_t>(idx[i] - 1), static_cast<std::size_t>(idx[j] - 1));
  return sub;
}

}  // namespace mnewton
