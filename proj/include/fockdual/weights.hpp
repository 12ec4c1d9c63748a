#pragma once

#include <map>
#include <string>
#include <vector>

#include "fockdual/bilinears.hpp"
#include "fockdual/fock.hpp"

namespace fockdual {

enum class GroupFamily { GL, O_even, SO_even, O_odd, Sp, Spin_even, Pin, Spin_odd, Osp };

struct GroupKind {
  GroupFamily fam = GroupFamily::GL;
  int l = 1;

  std::string str() const;
  static GroupKind parse(const std::string&);
  auto operator<=>(const GroupKind&) const = default;
};

struct ValidationResult {
  bool ok = true;
  std::string reason;
};

// An element of one of the Sigma-sets: integer parts plus decorations.  The
// 1/2-shift of spin weights is the spin_shift flag, so validation stays
// integral; the overline of induced labels is overline_last.
struct FiniteWeightLabel {
  GroupKind group;
  std::vector<int> parts;
  bool overline_last = false;
  bool det_twist = false;
  bool spin_shift = false;

  std::string str() const;  // e.g. "O(4):[2,1~]", "Pin(4):half+[2,1~]", "[1,0]*det"
  static FiniteWeightLabel parse(const GroupKind&, const std::string&);

  // Cartan weight tuple of the h1 branch (h2 flips the sign of the last
  // entry).  Spin labels add the 1/2 shift.
  std::vector<Rat> weight_tuple(bool minus_branch = false) const;

  auto operator<=>(const FiniteWeightLabel&) const = default;
};

ValidationResult validate_label(const FiniteWeightLabel&);

// All valid labels of the group with |parts| <= max_part.
std::vector<FiniteWeightLabel> enumerate_labels(const GroupKind&, int max_part);

// Exact dimension of the irreducible parametrized per section-2 conventions
// (overline labels count both SO-constituents; det twists preserve it).
long long weyl_dim(const GroupKind&, const FiniteWeightLabel&);

// Finitely supported combination of fundamental weights; the central charge
// is derived from the coefficients by the algebra-specific formula.
struct InfiniteWeight {
  Algebra alg = Algebra::A;
  std::map<int, Rat> coeffs;
  Rat charge;

  static InfiniteWeight make(Algebra, std::map<int, Rat> coeffs);
  Rat coroot_eval(int k) const;
  std::string json() const;  // {"algebra":"d","coeffs":{"0":3,...},"charge":"2"}
  friend bool operator==(const InfiniteWeight& a, const InfiniteWeight& b) {
    return a.alg == b.alg && a.coeffs == b.coeffs;
  }
};

Rat charge_from_coeffs(Algebra, const std::map<int, Rat>&);

// Assemble a weight from the diagonal eigenvalue lists produced by the
// bilinears module.
InfiniteWeight weight_from_lambdas_subalg(Algebra, const std::vector<Rat>& lam_1_to_K,
                                          const Rat& charge);
InfiniteWeight weight_from_lambdas_A(const std::vector<Rat>& lam_negK_to_K, const Rat& charge);

// The dual pairs of Tables 1 and 2, plus (GL(l), gl-hat) on both statistics.
enum class PairKind {
  gl_fermi,     // (GL(l), glhat)  on F^l
  gl_bose,      // (GL(l), glhat)  on F^-l
  o_even_d,     // (O(2l), dinf)   on F^l
  pin_bt,       // (Pin(2l), btinf) on F^l, Z
  sp_c,         // (Sp(2l), cinf)  on F^l, twisted
  pin_b,        // (Pin(2l), binf) on F^l, Z twisted
  o_odd_d,      // (O(2l+1), dinf) on F^{l+1/2}
  spin_odd_bt,  // (Spin(2l+1), btinf) on F^{l+1/2}, Z
  osp_c,        // (Osp(1,2l), cinf) on F^{l-1/2}, twisted
  spin_odd_b,   // (Spin(2l+1), binf) on F^{l+1/2}, Z twisted
  sp_d,         // (Sp(2l), dinf)  on F^-l
  o_even_c,     // (O(2l), cinf)   on F^-l, twisted
  osp_d,        // (Osp(1,2l), dinf) on F^{-l+1/2}
  o_odd_c       // (O(2l+1), cinf) on F^{-l-1/2}, twisted
};

struct DualPair {
  PairKind kind = PairKind::gl_fermi;
  int l = 1;

  PairConfig config() const;
  GroupKind group() const;
  Algebra algebra() const;
  GroupStyle style() const;
  Rat central_charge() const { return config().central_charge(); }
  std::string str() const;  // "O(4)/dinf", "GL(2)/glhat+"
  static DualPair parse(const std::string&);

  // Branch names of the theorem vector(s) attached to a label.
  std::vector<std::string> branches(const FiniteWeightLabel&) const;
};

std::vector<DualPair> all_pairs(int l);

// The highest-weight maps Lambda^{xx} of the duality theorems.
InfiniteWeight lambda_map(const DualPair&, const FiniteWeightLabel&);

}  // namespace fockdual
