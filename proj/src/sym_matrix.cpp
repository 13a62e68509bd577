#include "asclt/sym_matrix.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace asclt {

SymMatrix::SymMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, 0.0) {
  if (dim == 0) throw std::invalid_argument("SymMatrix: dimension must be positive");
}

SymMatrix::SymMatrix(std::size_t dim, const std::vector<double>& row_major)
    : dim_(dim), a_(row_major) {
  if (dim == 0) throw std::invalid_argument("SymMatrix: dimension must be positive");
  if (row_major.size() != dim * dim)
    throw std::invalid_argument("SymMatrix: entry count does not match dimension");
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const double aij = a_[i * dim_ + j];
      const double aji = a_[j * dim_ + i];
      if (std::abs(aij - aji) > 1e-12 * (1.0 + std::abs(aij)))
        throw std::invalid_argument("SymMatrix: entries (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") break symmetry");
      const double v = 0.5 * (aij + aji);
      a_[i * dim_ + j] = v;
      a_[j * dim_ + i] = v;
    }
  }
}

SymMatrix SymMatrix::identity(std::size_t dim) {
  SymMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& diag) {
  SymMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

void SymMatrix::add_outer(std::span<const double> x, double w) {
  for (std::size_t i = 0; i < dim_; ++i) {
    const double wxi = w * x[i];
    a_[i * dim_ + i] += wxi * x[i];
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const double v = wxi * x[j];
      a_[i * dim_ + j] += v;
      a_[j * dim_ + i] += v;
    }
  }
}

void SymMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  for (std::size_t i = 0; i < dim_; ++i) {
    double s = 0.0;
    const double* row = &a_[i * dim_];
    for (std::size_t j = 0; j < dim_; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

double SymMatrix::quad(std::span<const double> x) const {
  double diag = 0.0, off = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    diag += a_[i * dim_ + i] * x[i] * x[i];
    for (std::size_t j = i + 1; j < dim_; ++j) off += a_[i * dim_ + j] * x[i] * x[j];
  }
  return diag + 2.0 * off;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += a_[i * dim_ + i];
  return t;
}

double SymMatrix::max_abs_diff(const SymMatrix& other) const {
  double m = 0.0;
  for (std::size_t k = 0; k < a_.size(); ++k) m = std::max(m, std::abs(a_[k] - other.a_[k]));
  return m;
}

Cholesky::Cholesky(const SymMatrix& m) : dim_(m.dim()), l_(dim_ * dim_, 0.0) {
  for (std::size_t j = 0; j < dim_; ++j) {
    double d = m(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l_[j * dim_ + k] * l_[j * dim_ + k];
    if (!(d > 0.0) || !std::isfinite(d))
      throw std::invalid_argument("Cholesky: leading principal minor " + std::to_string(j + 1) +
                                  " is not positive");
    const double ljj = std::sqrt(d);
    l_[j * dim_ + j] = ljj;
    for (std::size_t i = j + 1; i < dim_; ++i) {
      double s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l_[i * dim_ + k] * l_[j * dim_ + k];
      l_[i * dim_ + j] = s / ljj;
    }
  }
}

double Cholesky::log_det() const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) s += std::log(l_[i * dim_ + i]);
  return 2.0 * s;
}

void Cholesky::solve(std::span<double> b) const {
  // forward L y = b
  for (std::size_t i = 0; i < dim_; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= l_[i * dim_ + k] * b[k];
    b[i] = s / l_[i * dim_ + i];
  }
  // backward L^T x = y
  for (std::size_t ii = dim_; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t k = ii + 1; k < dim_; ++k) s -= l_[k * dim_ + ii] * b[k];
    b[ii] = s / l_[ii * dim_ + ii];
  }
}

SymMatrix Cholesky::inverse() const {
  SymMatrix inv(dim_);
  std::vector<double> e(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    std::fill(e.begin(), e.end(), 0.0);
    e[j] = 1.0;
    solve(e);
    for (std::size_t i = 0; i < dim_; ++i) inv(i, j) = e[i];
  }
  // the column solves agree only up to rounding; mirror to exact symmetry
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const double v = 0.5 * (inv(i, j) + inv(j, i));
      inv(i, j) = v;
      inv(j, i) = v;
    }
  return inv;
}

bool is_symmetric_within(const SymMatrix& m, double tol) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i + 1; j < m.dim(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > tol * (1.0 + std::abs(m(i, j)))) return false;
  return true;
}

std::string format_vector(std::span<const double> x) {
  std::string out = "(";
  char buf[40];
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%g", x[i]);
    out += buf;
    if (i + 1 < x.size()) out += ", ";
  }
  return out + ")";
}

}  // namespace asclt
