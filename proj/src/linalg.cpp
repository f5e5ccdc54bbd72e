#include "bures/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "bures/errors.hpp"

namespace bures {

namespace {

void require_supported_dim(int dim) {
  if (dim != 2 && dim != 3) {
    throw DimensionError("matrix dimension must be 2 or 3, got " + std::to_string(dim));
  }
}

void require_same_dim(const ComplexSquareMatrix& a, const ComplexSquareMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

double off_diagonal_norm2(const ComplexSquareMatrix& a) {
  double sum = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c)
      if (r != c) sum += std::norm(a(r, c));
  return sum;
}

}  // namespace

ComplexSquareMatrix::ComplexSquareMatrix(int dim) : dim_(dim) { require_supported_dim(dim); }

ComplexSquareMatrix::ComplexSquareMatrix(int dim, std::initializer_list<complex> row_major)
    : dim_(dim) {
  require_supported_dim(dim);
  if (row_major.size() != static_cast<std::size_t>(dim * dim)) {
    throw DimensionError("expected " + std::to_string(dim * dim) + " entries, got " +
                         std::to_string(row_major.size()));
  }
  auto it = row_major.begin();
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) (*this)(r, c) = *it++;
}

ComplexSquareMatrix ComplexSquareMatrix::identity(int dim) {
  ComplexSquareMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexSquareMatrix ComplexSquareMatrix::diagonal(std::span<const double> values) {
  ComplexSquareMatrix m(static_cast<int>(values.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = values[i];
  return m;
}

ComplexSquareMatrix& ComplexSquareMatrix::operator+=(const ComplexSquareMatrix& other) {
  require_same_dim(*this, other, "operator+");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexSquareMatrix& ComplexSquareMatrix::operator-=(const ComplexSquareMatrix& other) {
  require_same_dim(*this, other, "operator-");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexSquareMatrix& ComplexSquareMatrix::operator*=(complex scale) noexcept {
  for (auto& e : entries_) e *= scale;
  return *this;
}

bool operator==(const ComplexSquareMatrix& a, const ComplexSquareMatrix& b) noexcept {
  return a.dim_ == b.dim_ && a.entries_ == b.entries_;
}

ComplexSquareMatrix operator+(ComplexSquareMatrix a, const ComplexSquareMatrix& b) { return a += b; }
ComplexSquareMatrix operator-(ComplexSquareMatrix a, const ComplexSquareMatrix& b) { return a -= b; }
ComplexSquareMatrix operator*(complex scale, ComplexSquareMatrix a) noexcept { return a *= scale; }
ComplexSquareMatrix operator*(const ComplexSquareMatrix& a, const ComplexSquareMatrix& b) {
  return matmul(a, b);
}

ComplexSquareMatrix matmul(const ComplexSquareMatrix& a, const ComplexSquareMatrix& b) {
  require_same_dim(a, b, "matmul");
  const int n = a.dim();
  ComplexSquareMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      complex sum = 0.0;
      for (int k = 0; k < n; ++k) sum += a(r, k) * b(k, c);
      out(r, c) = sum;
    }
  return out;
}

ComplexSquareMatrix dagger(const ComplexSquareMatrix& a) {
  ComplexSquareMatrix out(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) out(c, r) = std::conj(a(r, c));
  return out;
}

complex trace(const ComplexSquareMatrix& a) noexcept {
  complex sum = 0.0;
  for (int i = 0; i < a.dim(); ++i) sum += a(i, i);
  return sum;
}

complex determinant(const ComplexSquareMatrix& a) noexcept {
  if (a.dim() == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

double frobenius_norm(const ComplexSquareMatrix& a) noexcept {
  double sum = 0.0;
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) sum += std::norm(a(r, c));
  return std::sqrt(sum);
}

ComplexSquareMatrix commutator(const ComplexSquareMatrix& a, const ComplexSquareMatrix& b) {
  return matmul(a, b) - matmul(b, a);
}

bool is_hermitian(const ComplexSquareMatrix& a) noexcept {
  const double scale = std::max(1.0, frobenius_norm(a));
  return frobenius_norm(a - dagger(a)) <= hermitian_tolerance * scale;
}

HermitianEigenResult eig_hermitian(const ComplexSquareMatrix& input) {
  if (!is_hermitian(input)) throw DomainError("eig_hermitian: input is not Hermitian");
  const int n = input.dim();

  // Work on the exact Hermitian part.
  ComplexSquareMatrix a = 0.5 * (input + dagger(input));
  ComplexSquareMatrix v = ComplexSquareMatrix::identity(n);

  const double scale2 = std::max(std::norm(frobenius_norm(a)), 1e-300);
  for (int sweep = 0; sweep < 64; ++sweep) {
    if (off_diagonal_norm2(a) <= 1e-34 * scale2) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const complex phase = apq / r;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Unitary rotation in the (p, q) plane: diag(1, e^{-i phi}) followed by a real rotation.
        ComplexSquareMatrix g = ComplexSquareMatrix::identity(n);
        g(p, p) = c;
        g(p, q) = s;
        g(q, p) = -s * std::conj(phase);
        g(q, q) = c * std::conj(phase);

        a = matmul(matmul(dagger(g), a), g);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        v = matmul(v, g);
      }
    }
  }

  std::array<int, ComplexSquareMatrix::max_dim> order{0, 1, 2};
  std::stable_sort(order.begin(), order.begin() + n,
                   [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  HermitianEigenResult result;
  result.eigenvectors = ComplexSquareMatrix(n);
  for (int k = 0; k < n; ++k) {
    result.eigenvalues[k] = a(order[k], order[k]).real();
    for (int r = 0; r < n; ++r) result.eigenvectors(r, k) = v(r, order[k]);
  }
  return result;
}

HermitianExponential::HermitianExponential(const ComplexSquareMatrix& generator)
    : generator_(generator) {
  const HermitianEigenResult spectrum = eig_hermitian(generator);
  const int n = generator.dim();
  const double scale = std::max(1.0, std::abs(spectrum.eigenvalues[0]) +
                                         std::abs(spectrum.eigenvalues[n - 1]));

  // Clusters of (numerically) equal eigenvalues; eigenvalues are sorted descending.
  std::array<int, ComplexSquareMatrix::max_dim> cluster_of{};
  std::array<double, ComplexSquareMatrix::max_dim> values{};
  int clusters = 0;
  double min_gap = std::numeric_limits<double>::infinity();
  for (int k = 0; k < n; ++k) {
    const double mu = spectrum.eigenvalues[k];
    if (clusters > 0 && values[clusters - 1] - mu <= 1e-12 * scale) {
      cluster_of[k] = clusters - 1;
      continue;
    }
    if (clusters > 0) min_gap = std::min(min_gap, values[clusters - 1] - mu);
    values[clusters] = mu;
    cluster_of[k] = clusters++;
  }

  terms_ = clusters;
  const ComplexSquareMatrix id = ComplexSquareMatrix::identity(n);
  if (min_gap >= 1e-2 * scale) {
    for (int c = 0; c < clusters; ++c) {
      ComplexSquareMatrix p = id;
      for (int j = 0; j < clusters; ++j) {
        if (j == c) continue;
        p = (1.0 / (values[c] - values[j])) * matmul(p, generator - complex(values[j]) * id);
      }
      frequencies_[c] = values[c];
      projectors_[c] = p;
    }
    return;
  }

  const ComplexSquareMatrix& v = spectrum.eigenvectors;
  for (int c = 0; c < clusters; ++c) {
    frequencies_[c] = values[c];
    projectors_[c] = ComplexSquareMatrix(n);
  }
  for (int k = 0; k < n; ++k)
    for (int r = 0; r < n; ++r)
      for (int col = 0; col < n; ++col) projectors_[cluster_of[k]](r, col) += v(r, k) * std::conj(v(col, k));
}

ComplexSquareMatrix HermitianExponential::at(double angle) const {
  ComplexSquareMatrix out(dim());
  for (int c = 0; c < terms_; ++c) {
    const complex phase = std::polar(1.0, frequencies_[c] * angle);
    for (int r = 0; r < dim(); ++r)
      for (int col = 0; col < dim(); ++col) out(r, col) += phase * projectors_[c](r, col);
  }
  return out;
}

ComplexSquareMatrix HermitianExponential::derivative_at(double angle) const {
  return complex(0.0, 1.0) * matmul(generator_, at(angle));
}

ComplexSquareMatrix expm_i_generator(const ComplexSquareMatrix& g, double angle) {
  if (!is_hermitian(g)) throw DomainError("expm_i_generator: generator is not Hermitian");
  return HermitianExponential(g).at(angle);
}

}  // namespace bures
