#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mnewton {

/// Dense real square matrix, row-major. Entries are finite.
class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix of order n.
  explicit Matrix(std::size_t n);
  /// Takes n*n row-major entries; throws InputError on size mismatch or
  /// non-finite entries.
  Matrix(std::size_t n, std::vector<double> row_major);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> d);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t order() const { return n_; }
  bool empty() const { return n_ == 0; }

  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  std::span<const double> row(std::size_t i) const { return {a_.data() + i * n_, n_}; }
  std::span<double> row(std::size_t i) { return {a_.data() + i * n_, n_}; }
  std::span<const double> data() const { return a_; }
  std::span<double> data() { return a_; }

  double max_abs() const;
  double trace() const;
  bool is_symmetric(double tol) const;
  bool all_finite() const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(double s) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

inline Matrix operator*(double s, const Matrix& m) { return m * s; }

/// Strictly increasing subset of {1..n}. Addresses principal submatrices and
/// minors; the empty set is allowed.
class IndexSet {
 public:
  IndexSet() = default;
  /// Elements are 1-based. Throws InputError unless strictly increasing and
  /// within 1..ambient.
  IndexSet(std::size_t ambient, std::vector<int> elements);

  static IndexSet empty_set(std::size_t ambient) { return IndexSet(ambient, {}); }
  static IndexSet full(std::size_t ambient);
  /// Bit i-1 of mask selects element i. Requires ambient <= 64.
  static IndexSet from_mask(std::size_t ambient, std::uint64_t mask);

  std::size_t ambient() const { return ambient_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  std::span<const int> elements() const { return elements_; }

  /// Complement in {1..n}.
  IndexSet dual() const;
  bool contains(int i) const;
  std::size_t intersection_size(const IndexSet& other) const;
  /// Requires ambient <= 64.
  std::uint64_t mask() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<int> elements_;
};

/// All size-m subsets of {1..n} as bit masks in colexicographic order, which
/// for fixed m coincides with increasing integer order of the masks.
/// Requires n <= 63; throws InputError when m > n.
std::vector<std::uint64_t> subset_masks(std::size_t n, std::size_t m);

/// Same subsets as IndexSet values, colex order.
std::vector<IndexSet> enumerate_subsets(std::size_t n, std::size_t m);

/// Position of a size-m mask in the colex enumeration (combinatorial number
/// system).
std::size_t colex_rank(std::uint64_t mask);

/// Binomial coefficient as a double; exact while the value fits in 2^53.
double binomial(std::size_t n, std::size_t k);

/// Principal submatrix on the rows/columns of alpha.
Matrix principal_submatrix(const Matrix& a, const IndexSet& alpha);

}  // namespace mnewton
