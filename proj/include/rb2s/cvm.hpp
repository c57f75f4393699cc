#pragma once

#include "rb2s/dirichlet.hpp"

namespace rb2s {

/**
 * Cramér-von Mises distance ∫ (F_P - F_Q)^2 dQ between discrete measures.
 *
 * Both CDFs are right-continuous, so an atom of Q counts toward F_Q at its
 * own location. Asymmetric: the integral is against Q. One merge pass over
 * the two sorted atom lists, O(|P| + |Q|). Result lies in [0, 1].
 */
double cvm_distance(const DiscreteMeasure& p, const DiscreteMeasure& q);

}  // namespace rb2s
