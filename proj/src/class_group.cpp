#include "toric/class_group.hpp"

#include <sstream>
#include <stdexcept>

namespace toric {

bool ClassElement::is_zero() const {
  for (const Integer& x : free_part)
    if (x != 0) return false;
  for (const Integer& x : torsion_part)
    if (x != 0) return false;
  return true;
}

std::string ClassElement::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < free_part.size(); ++i) os << (i ? "," : "") << free_part[i];
  if (!torsion_part.empty()) {
    os << ";";
    for (std::size_t i = 0; i < torsion_part.size(); ++i)
      os << (i ? "," : "") << torsion_part[i];
  }
  os << ")";
  return os.str();
}

bool operator<(const ClassElement& a, const ClassElement& b) {
  if (a.free_part != b.free_part) return a.free_part < b.free_part;
  return a.torsion_part < b.torsion_part;
}

ClassGroup::ClassGroup(const Fan& fan) : n_(fan.ray_count()), d_(fan.dim) {
  const IntegerMatrix a = ray_matrix(fan);
  if (rank(a) != static_cast<std::size_t>(d_))
    throw std::invalid_argument("class_group: rays do not span (rank < dim)");
  auto s = smith_normal_form(a);
  diag_ = s.diagonal();
  for (std::size_t k = 0; k < diag_.size(); ++k)
    if (diag_[k] > 1) {
      torsion_rows_.push_back(static_cast<int>(k));
      torsion_invariants_.push_back(diag_[k]);
    }
  uinv_ = inverse_unimodular(s.u);
  u_ = std::move(s.u);
}

ClassElement ClassGroup::divisor_class(std::span<const Integer> a) const {
  if (a.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("divisor_class: coefficient vector has wrong length");
  const std::vector<Integer> y = u_.multiply(a);
  ClassElement e;
  e.free_part.assign(y.begin() + d_, y.end());
  for (std::size_t t = 0; t < torsion_rows_.size(); ++t)
    e.torsion_part.push_back(mod_canonical(
        y[static_cast<std::size_t>(torsion_rows_[t])], torsion_invariants_[t]));
  return e;
}

ClassElement ClassGroup::divisor_class(std::span<const long long> a) const {
  std::vector<Integer> v(a.begin(), a.end());
  return divisor_class(v);
}

std::vector<Integer> ClassGroup::particular_preimage(const ClassElement& c) const {
  if (c.free_part.size() != static_cast<std::size_t>(free_rank()) ||
      c.torsion_part.size() != torsion_invariants_.size())
    throw std::invalid_argument("particular_preimage: class element has wrong shape");
  std::vector<Integer> y(static_cast<std::size_t>(n_), 0);
  for (std::size_t t = 0; t < torsion_rows_.size(); ++t)
    y[static_cast<std::size_t>(torsion_rows_[t])] = c.torsion_part[t];
  for (std::size_t i = 0; i < c.free_part.size(); ++i)
    y[static_cast<std::size_t>(d_) + i] = c.free_part[i];
  return uinv_.multiply(y);
}

std::vector<std::vector<Integer>> kernel_basis(const Fan& fan) {
  std::vector<std::vector<Integer>> cols(
      static_cast<std::size_t>(fan.dim),
      std::vector<Integer>(static_cast<std::size_t>(fan.ray_count())));
  for (int rho = 0; rho < fan.ray_count(); ++rho)
    for (int j = 0; j < fan.dim; ++j)
      cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(rho)] =
          fan.rays[static_cast<std::size_t>(rho)][static_cast<std::size_t>(j)];
  return cols;
}

}  // namespace toric
