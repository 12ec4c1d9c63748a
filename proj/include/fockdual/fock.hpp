#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "fockdual/rat.hpp"

namespace fockdual {

// Mode indices, degrees and Fourier exponents are stored doubled (2n) so
// that half-integer and integer index sets share one integer representation.

enum class NeutralField { none, phi, varphi, chi };

// One row of Table 1/2: l charged pairs plus an optional neutral field.
struct PairConfig {
  int l = 1;
  bool bosonic = false;      // charged pairs: fermions psi or ghosts gamma
  bool half_modes = true;    // charged/neutral index set 1/2+Z vs Z
  NeutralField neutral = NeutralField::none;
  bool twisted = false;

  void validate() const;
  bool has_neutral() const { return neutral != NeutralField::none; }
  bool neutral_fermionic() const {
    return neutral == NeutralField::phi || neutral == NeutralField::varphi;
  }
  // Parity of doubled charged-field modes (1 = odd = half-integer modes).
  int charged_parity() const { return half_modes ? 1 : 0; }
  int neutral_parity() const {
    switch (neutral) {
      case NeutralField::phi: return half_modes ? 1 : 0;
      case NeutralField::varphi: return 0;   // varphi lives on Z
      case NeutralField::chi: return 1;      // chi lives on 1/2+Z
      default: return 0;
    }
  }
  // C acts on this Fock space by this scalar (the dual-pair central charge).
  Rat central_charge() const;

  std::string str() const;
  static PairConfig parse(const std::string&);
  auto operator<=>(const PairConfig&) const = default;
};

// A canonical basis monomial: creation modes per flavor and charge, plus
// neutral-field occupation.  Modes are doubled and sorted strictly
// decreasing for fermions, weakly decreasing (multiset) for bosons.
struct FockState {
  std::vector<std::array<std::vector<int>, 2>> charged;  // [flavor][0:+,1:-]
  std::vector<int> neutral;

  explicit FockState(int l = 0) : charged(l) {}
  auto operator<=>(const FockState&) const = default;

  int degree2() const {
    int d = 0;
    for (const auto& fl : charged)
      for (const auto& lst : fl)
        for (int m2 : lst) d -= m2;
    for (int m2 : neutral) d -= m2;
    return d;
  }
  int max_abs_mode2() const {
    int m = 0;
    for (const auto& fl : charged)
      for (const auto& lst : fl)
        for (int m2 : lst) m = std::max(m, m2 < 0 ? -m2 : m2);
    for (int m2 : neutral) m = std::max(m, m2 < 0 ? -m2 : m2);
    return m;
  }
  bool empty() const {
    for (const auto& fl : charged)
      if (!fl[0].empty() || !fl[1].empty()) return false;
    return neutral.empty();
  }
  std::string str() const;  // e.g. "p1+:[-3/2] p1-:[-1/2] n:[0]"
};

// Finite sparse linear combination over the canonical basis.
struct StateVector {
  std::map<FockState, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  void add(const FockState& s, const Rat& c) {
    if (c.is_zero()) return;
    auto it = terms.find(s);
    if (it == terms.end()) {
      terms.emplace(s, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  StateVector& operator+=(const StateVector& o) {
    for (const auto& [s, c] : o.terms) add(s, c);
    return *this;
  }
  StateVector& operator-=(const StateVector& o) {
    for (const auto& [s, c] : o.terms) add(s, -c);
    return *this;
  }
  StateVector& operator*=(const Rat& c) {
    if (c.is_zero()) {
      terms.clear();
      return *this;
    }
    for (auto& [s, v] : terms) v *= c;
    return *this;
  }
  friend StateVector operator*(const Rat& c, StateVector v) { return v *= c; }
  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  friend bool operator==(const StateVector& a, const StateVector& b) {
    return a.terms == b.terms;
  }

  int max_abs_mode2() const {
    int m = 0;
    for (const auto& [s, c] : terms) m = std::max(m, s.max_abs_mode2());
    return m;
  }
  // Degree of a homogeneous vector; throws if mixed.
  int degree2() const;
  std::string str() const;
  std::string json() const;  // {"state": "p/q", ...}
};

// A single field mode: charge +1/-1 with flavor 1..l, or charge 0 for the
// neutral field (flavor ignored).
struct FieldOp {
  int charge = 0;  // +1, -1, 0 = neutral
  int flavor = 0;  // 1..l for charged
  int mode2 = 0;   // doubled mode index

  std::string str() const;
};

StateVector vacuum(const PairConfig& cfg);

// Exact action of one creation/annihilation operator.
StateVector apply_mode(const PairConfig& cfg, const FieldOp& op, const StateVector& v);

Rat degree_of(const FockState& s);  // = degree2 / 2

// All canonical states of degree <= d2max/2, ordered by (degree, canonical form).
std::vector<FockState> enumerate_states(const PairConfig& cfg, int d2max);

long long graded_dimension(const PairConfig& cfg, int d2);

// Vacuum expectation <0| A B |0> of a product of two modes.
Rat vev_pair(const PairConfig& cfg, const FieldOp& a, const FieldOp& b);

// Normal-ordered bilinear :AB: v = A B v - <AB> v.
StateVector apply_normal_pair(const PairConfig& cfg, const FieldOp& a, const FieldOp& b,
                              const StateVector& v);

std::string format_mode2(int m2);  // "-3/2", "0", "2"
int parse_mode2(const std::string&);

FockState parse_state(const PairConfig& cfg, const std::string&);

}  // namespace fockdual
