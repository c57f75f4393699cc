#include "rb2s/cvm.hpp"

#include <algorithm>

namespace rb2s {

double cvm_distance(const DiscreteMeasure& p, const DiscreteMeasure& q) {
  const auto p_atoms = p.atoms();
  const auto p_weights = p.weights();
  const auto q_atoms = q.atoms();
  const auto q_weights = q.weights();

  double f_p = 0.0;
  double f_q = 0.0;
  double total = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (j < q_atoms.size()) {
    const double z = q_atoms[j];
    // Tied Q atoms share one CDF value; accumulate them in atom order so
    // cvm_distance(P, P) is exactly zero.
    double group_weight = 0.0;
    while (j < q_atoms.size() && q_atoms[j] == z) {
      f_q += q_weights[j];
      group_weight += q_weights[j];
      ++j;
    }
    while (i < p_atoms.size() && p_atoms[i] <= z) f_p += p_weights[i++];
    const double diff = f_p - f_q;
    total += group_weight * diff * diff;
  }
  return std::clamp(total, 0.0, 1.0);
}

}  // namespace rb2s
