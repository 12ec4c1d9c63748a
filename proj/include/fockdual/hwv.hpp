#pragma once

#include <string>
#include <vector>

#include "fockdual/weights.hpp"

namespace fockdual {

// One theorem vector: a pair, a label in its Sigma-set, and which branch of
// the theorem formula (h1/h2 for the paired cases, even/odd for the parity
// split, default otherwise).
struct HwvRecipe {
  DualPair pair;
  FiniteWeightLabel label;
  std::string branch = "default";

  std::string str() const;  // "pair=O(4)/dinf label=[2,1~] branch=h1"
};

// Fermionic building blocks.
StateVector xi_vector(const PairConfig&, int sign, int flavor, int m);
StateVector sigma_vector(const PairConfig&, int sign, int flavor, int m);
StateVector xi_det_vector(const PairConfig&, int i);

// Bosonic determinant blocks.
StateVector gamma_vector_plus(const PairConfig&, int i, int m);
StateVector gamma_vector_minus(const PairConfig&, int b, int m);
StateVector gamma_det_vector(const PairConfig&, int j);
StateVector gamma_tilde_plus_vector(const PairConfig&, int m);
StateVector gamma_tilde_det_vector(const PairConfig&, int j);

// Product of vectors whose terms are commuting creator monomials.
StateVector creator_product(const StateVector&, const StateVector&);

StateVector build_hwv(const HwvRecipe&);

struct HwvReport {
  bool ok = false;
  std::string failed_generator;
  std::vector<Rat> finite_weight;
  InfiniteWeight infinite_weight;
};

// Applies every finite raising generator and every positive canonical
// generator of the infinite algebra (within the degree window); on success
// reads off the joint weight from the Cartan actions.
HwvReport verify_hwv(const DualPair&, const StateVector& v);

}  // namespace fockdual
