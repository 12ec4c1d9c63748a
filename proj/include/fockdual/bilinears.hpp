#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fockdual/fock.hpp"

namespace fockdual {

// The five infinite-rank algebras acting on the Fock spaces.
enum class Algebra { A, B, Bt, C, D };

std::string algebra_name(Algebra);
Algebra parse_algebra(const std::string&);

// Finitely supported infinite matrices, used for the cocycle and for
// decomposing brackets of canonical generators.
using SparseMat = std::map<std::pair<int, int>, Rat>;

SparseMat mat_bracket(const SparseMat& a, const SparseMat& b);

// 2-cocycle C(A,B) = Tr([J,A]B), J = sum_{j<=0} E_jj.
Rat cocycle(const SparseMat& a, const SparseMat& b);

// Canonical generator of the subalgebra: E_ij plus its reflected partner.
//   d:  E_ij - E_{1-j,1-i}         bt: E_ij - E_{-j,-i}
//   c:  E_ij - (-1)^{i+j} E_{1-j,1-i}   b: E_ij - (-1)^{i+j} E_{-j,-i}
struct InfiniteGen {
  Algebra alg = Algebra::A;
  int i = 0, j = 0;
  std::string str() const;
};

std::pair<int, int> gen_partner(Algebra, int i, int j);
bool gen_is_zero(Algebra, int i, int j);
bool gen_is_canonical(Algebra, int i, int j);
SparseMat gen_matrix(Algebra, int i, int j);

// M = sum coef_k * g_{(i_k,j_k)} over canonical generators; throws if M is
// not in the subalgebra's span.
std::vector<std::pair<Rat, std::pair<int, int>>> decompose_in_gens(Algebra, SparseMat m);

bool algebra_admissible(const PairConfig&, Algebra);

// hat-E_ij, the charged-pair gl-hat action (eq. of E(z,w); bosonic carries
// the global minus sign).
StateVector apply_E(const PairConfig&, int i, int j, const StateVector&);

// Action of the canonical combination, including the neutral-field bilinear
// term when the configuration has a neutral field.
StateVector apply_infinite_gen(const PairConfig&, const InfiniteGen&, const StateVector&);

// Fourier components of the finite-type generating functions.
//   ee    :psi-^p psi-^q:        estar  :psi+^p psi-^q: (+ eps shift at n=0)
//   estar2:psi+^p psi+^q:        et/ett twisted variants with (-z)
//   en    :psi-^p phi:   enstar :psi+^p phi:
//   etn   :psi-^p chi(-z):  etnstar :psi+^p chi(z):    zeta :chi(z)chi(-z):
// (psi read as gamma on bosonic configurations, phi as the row's neutral field)
enum class GenFamily { ee, estar, estar2, et, ett, en, enstar, etn, etnstar, zeta };

struct FiniteGen {
  GenFamily family = GenFamily::estar;
  int p = 0, q = 0;  // flavors (q unused for neutral families)
  int n = 0;         // Fourier index
  std::string str() const;
};

StateVector apply_finite_gen(const PairConfig&, const FiniteGen&, const StateVector&);

enum class OuterOp { tau, g_diag };

// tau swaps the two fields of the last flavor (with the twist-dependent mode
// signs fixed by commutation with the infinite algebra); g_diag negates the
// neutral field.
StateVector apply_outer(const PairConfig&, OuterOp, const StateVector&);

// Measures the scalar by which the represented bracket of two canonical
// generators differs from the abstract one, normalized by the restricted
// cocycle: returns c with defect = c * C(g1, g2) on all states of degree
// <= d2max/2.  Throws if the defect fails to be scalar.
Rat bracket_defect(const PairConfig&, Algebra, std::pair<int, int> g1,
                   std::pair<int, int> g2, int d2max);

// Central charge measured through a standard probe pair of generators.
Rat measure_central_charge(const PairConfig&, Algebra, int d2max = 2);

// ---- generator catalogs -------------------------------------------------

// How the horizontal subalgebra of a flavor block is organized.
enum class GroupStyle { gl, so_even, sp, so_odd, osp };

struct FlavorBlock {
  int lo = 1, hi = 0;          // 1-based inclusive flavor range
  bool with_neutral = false;   // neutral field belongs to this block's group
};

std::vector<FiniteGen> finite_raising(const PairConfig&, GroupStyle, const FlavorBlock&);
std::vector<FiniteGen> finite_lowering(const PairConfig&, GroupStyle, const FlavorBlock&);
std::vector<FiniteGen> finite_cartan(const FlavorBlock&);
std::vector<FiniteGen> finite_horizontal(const PairConfig&, GroupStyle, const FlavorBlock&);

// Canonical generators with |i|,|j| <= box; sign = +1 raising (j > i),
// 0 diagonal, -1 lowering.
std::vector<InfiniteGen> infinite_gens(Algebra, int box, int sign);

// Eigenvalue extraction: w = op(v) must be a scalar multiple of v.
Rat eigenvalue_on(const StateVector& w, const StateVector& v);

// Finite Cartan weights: eigenvalues of the horizontal Cartan h_p; on
// bosonic rows the geometric Cartan is minus the zero mode of :gamma+gamma-:.
std::vector<Rat> finite_weight_of(const PairConfig&, const StateVector& v,
                                  const FlavorBlock&);

// lambda^x_k = value on E_kk - E_(reflected) for k = 1..K (subalgebras), or
// on E_kk for k = -K..K (gl-hat, returned with offset K).
std::vector<Rat> diag_evals_subalg(const PairConfig&, Algebra, const StateVector& v, int K);
std::vector<Rat> diag_evals_A(const PairConfig&, const StateVector& v, int K);

}  // namespace fockdual
