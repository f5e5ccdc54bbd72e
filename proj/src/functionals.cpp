#include "bures/functionals.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "bures/euler.hpp"

namespace bures {

double von_neumann_entropy(const ComplexSquareMatrix& rho) {
  require_density_matrix(rho);
  double entropy = 0.0;
  for (double l : eig_hermitian(rho).values())
    if (l > 0.0) entropy -= l * std::log(l);
  return std::max(entropy, 0.0);
}

double purity(const ComplexSquareMatrix& rho) {
  require_density_matrix(rho);
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  const double f = frobenius_norm(rho);
  return f * f;
}

double eigenvalue_moment(const ComplexSquareMatrix& rho, int k) {
  if (k < 1) throw std::invalid_argument("eigenvalue_moment: k must be >= 1");
  require_density_matrix(rho);
  double sum = 0.0;
  for (double l : eig_hermitian(rho).values()) sum += std::pow(std::max(l, 0.0), k);
  return sum;
}

FunctionalId FunctionalId::parse(std::string_view text) {
  if (text == "entropy" || text == "von_neumann_entropy") return {FunctionalKind::von_neumann_entropy};
  if (text == "purity") return {FunctionalKind::purity};
  if (text == "constant") return {FunctionalKind::constant};
  constexpr std::string_view prefix = "moment:";
  if (text.starts_with(prefix)) {
    const auto digits = text.substr(prefix.size());
    int k = -1;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc() && end == digits.data() + digits.size() && k >= 0) {
      if (k == 0) return {FunctionalKind::constant};
      return {FunctionalKind::eigenvalue_moment, k};
    }
  }
  throw std::invalid_argument("unknown functional '" + std::string(text) + "'");
}

std::string FunctionalId::name() const {
  switch (kind) {
    case FunctionalKind::constant: return "constant";
    case FunctionalKind::von_neumann_entropy: return "entropy";
    case FunctionalKind::purity: return "purity";
    case FunctionalKind::eigenvalue_moment: return "moment:" + std::to_string(k);
  }
  return "unknown";
}

double FunctionalId::evaluate(const ComplexSquareMatrix& rho) const {
  switch (kind) {
    case FunctionalKind::constant: return 1.0;
    case FunctionalKind::von_neumann_entropy: return von_neumann_entropy(rho);
    case FunctionalKind::purity: return purity(rho);
    case FunctionalKind::eigenvalue_moment: return eigenvalue_moment(rho, k);
  }
  return 0.0;
}

}  // namespace bures
