#include "fockdual/bilinears.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fockdual {

namespace {

int neg_pow(long long k) { return (k % 2 + 2) % 2 == 0 ? 1 : -1; }

struct BilTerm {
  FieldOp a, b;
  Rat coef;
};

StateVector apply_terms(const PairConfig& cfg, const std::vector<BilTerm>& terms,
                        const Rat& const_shift, const StateVector& v) {
  StateVector out;
  for (const auto& t : terms) {
    StateVector w = apply_normal_pair(cfg, t.a, t.b, v);
    w *= t.coef;
    out += w;
  }
  if (!const_shift.is_zero()) out += const_shift * StateVector(v);
  return out;
}

// Doubled modes of the charged bilinear pair matched against z^{i-1+2eps} w^{-j}.
void charged_pair_modes(const PairConfig& cfg, int i, int j, int& a2, int& b2) {
  if (cfg.half_modes) {
    a2 = 1 - 2 * i;  // psi+/gamma+ mode 1/2 - i
    b2 = 2 * j - 1;  // psi-/gamma- mode j - 1/2
  } else {
    a2 = -2 * i;
    b2 = 2 * j;
  }
}

void neutral_pair_modes(const PairConfig& cfg, int i, int j, int& a2, int& b2) {
  if (cfg.neutral_parity() == 1) {
    a2 = 1 - 2 * i;
    b2 = 2 * j - 1;
  } else {
    a2 = -2 * i;
    b2 = 2 * j;
  }
}

}  // namespace

std::string algebra_name(Algebra a) {
  switch (a) {
    case Algebra::A: return "a";
    case Algebra::B: return "b";
    case Algebra::Bt: return "bt";
    case Algebra::C: return "c";
    case Algebra::D: return "d";
  }
  return "?";
}

Algebra parse_algebra(const std::string& s) {
  if (s == "a") return Algebra::A;
  if (s == "b") return Algebra::B;
  if (s == "bt") return Algebra::Bt;
  if (s == "c") return Algebra::C;
  if (s == "d") return Algebra::D;
  throw std::invalid_argument("unknown algebra '" + s + "'");
}

std::string InfiniteGen::str() const {
  std::string base = alg == Algebra::A ? "E" : algebra_name(alg);
  return base + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

SparseMat mat_bracket(const SparseMat& a, const SparseMat& b) {
  SparseMat out;
  auto acc = [&](std::pair<int, int> key, const Rat& val) {
    if (val.is_zero()) return;
    auto it = out.find(key);
    if (it == out.end())
      out.emplace(key, val);
    else {
      it->second += val;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  for (const auto& [ij, x] : a)
    for (const auto& [km, y] : b) {
      if (ij.second == km.first) acc({ij.first, km.second}, x * y);
      if (km.second == ij.first) acc({km.first, ij.second}, -(x * y));
    }
  return out;
}

Rat cocycle(const SparseMat& a, const SparseMat& b) {
  Rat c(0);
  for (const auto& [ij, x] : a) {
    auto it = b.find({ij.second, ij.first});
    if (it == b.end()) continue;
    int w = (ij.first <= 0 ? 1 : 0) - (ij.second <= 0 ? 1 : 0);
    if (w) c += Rat(w) * x * it->second;
  }
  return c;
}

std::pair<int, int> gen_partner(Algebra alg, int i, int j) {
  switch (alg) {
    case Algebra::D:
    case Algebra::C: return {1 - j, 1 - i};
    case Algebra::B:
    case Algebra::Bt: return {-j, -i};
    default: return {i, j};
  }
}

bool gen_is_zero(Algebra alg, int i, int j) {
  switch (alg) {
    case Algebra::D: return i + j == 1;
    case Algebra::B:
    case Algebra::Bt: return i + j == 0;
    default: return false;  // c: fixed points i+j=1 give 2E_ij, nonzero
  }
}

bool gen_is_canonical(Algebra alg, int i, int j) {
  if (gen_is_zero(alg, i, j)) return false;
  auto [pi, pj] = gen_partner(alg, i, j);
  return std::make_pair(i, j) <= std::make_pair(pi, pj);
}

SparseMat gen_matrix(Algebra alg, int i, int j) {
  SparseMat m;
  m[{i, j}] = Rat(1);
  if (alg == Algebra::A) return m;
  auto [pi, pj] = gen_partner(alg, i, j);
  Rat sign(-1);
  if (alg == Algebra::C || alg == Algebra::B) sign = Rat(-neg_pow(i + j));
  auto it = m.find({pi, pj});
  if (it != m.end()) {
    it->second += sign;
    if (it->second.is_zero()) m.erase(it);
  } else {
    m[{pi, pj}] = sign;
  }
  return m;
}

std::vector<std::pair<Rat, std::pair<int, int>>> decompose_in_gens(Algebra alg, SparseMat m) {
  std::vector<std::pair<Rat, std::pair<int, int>>> out;
  while (!m.empty()) {
    auto it = std::prev(m.end());  // lexicographically largest entry
    auto key = it->first;
    SparseMat g = gen_matrix(alg, key.first, key.second);
    auto git = g.find(key);
    if (git == g.end())
      throw std::logic_error("decompose_in_gens: matrix not in subalgebra span");
    Rat coef = it->second / git->second;
    for (const auto& [k, val] : g) {
      auto mit = m.find(k);
      Rat nv = (mit == m.end() ? Rat(0) : mit->second) - coef * val;
      if (mit != m.end()) m.erase(mit);
      if (!nv.is_zero()) m[k] = nv;
    }
    out.push_back({coef, key});
  }
  return out;
}

bool algebra_admissible(const PairConfig& cfg, Algebra alg) {
  switch (alg) {
    case Algebra::A: return true;
    case Algebra::D: return !cfg.twisted && cfg.half_modes;
    case Algebra::Bt: return !cfg.twisted && !cfg.half_modes;
    case Algebra::C: return cfg.twisted && cfg.half_modes;
    case Algebra::B: return cfg.twisted && !cfg.half_modes;
  }
  return false;
}

StateVector apply_E(const PairConfig& cfg, int i, int j, const StateVector& v) {
  std::vector<BilTerm> terms;
  int a2, b2;
  charged_pair_modes(cfg, i, j, a2, b2);
  Rat coef = cfg.bosonic ? Rat(-1) : Rat(1);
  for (int p = 1; p <= cfg.l; ++p)
    terms.push_back({FieldOp{+1, p, a2}, FieldOp{-1, p, b2}, coef});
  return apply_terms(cfg, terms, Rat(0), v);
}

StateVector apply_infinite_gen(const PairConfig& cfg, const InfiniteGen& g,
                               const StateVector& v) {
  if (!algebra_admissible(cfg, g.alg))
    throw std::invalid_argument("apply_infinite_gen: " + algebra_name(g.alg) +
                                " not admissible on " + cfg.str());
  StateVector out = apply_E(cfg, g.i, g.j, v);
  if (g.alg != Algebra::A) {
    auto [pi, pj] = gen_partner(g.alg, g.i, g.j);
    Rat sign(-1);
    if (g.alg == Algebra::C || g.alg == Algebra::B) sign = Rat(-neg_pow(g.i + g.j));
    out += sign * apply_E(cfg, pi, pj, v);
    if (cfg.has_neutral()) {
      int a2, b2;
      neutral_pair_modes(cfg, g.i, g.j, a2, b2);
      Rat ncoef(1);
      if (g.alg == Algebra::C || g.alg == Algebra::B) ncoef = Rat(neg_pow(g.j));
      StateVector w = apply_normal_pair(cfg, FieldOp{0, 0, a2}, FieldOp{0, 0, b2}, v);
      out += ncoef * w;
    }
  }
  return out;
}

std::string FiniteGen::str() const {
  std::ostringstream os;
  switch (family) {
    case GenFamily::ee: os << "e[" << p << "," << q << "]"; break;
    case GenFamily::estar: os << "e*[" << p << "," << q << "]"; break;
    case GenFamily::estar2: os << "e**[" << p << "," << q << "]"; break;
    case GenFamily::et: os << "et[" << p << "," << q << "]"; break;
    case GenFamily::ett: os << "ett[" << p << "," << q << "]"; break;
    case GenFamily::en: os << "e[" << p << "]"; break;
    case GenFamily::enstar: os << "e*[" << p << "]"; break;
    case GenFamily::etn: os << "et[" << p << "]"; break;
    case GenFamily::etnstar: os << "et*[" << p << "]"; break;
    case GenFamily::zeta: os << "zeta"; break;
  }
  os << "@" << n;
  return os.str();
}

namespace {

struct FamilyShape {
  int charge_a = 0, charge_b = 0;  // +1/-1 charged, 0 neutral
  bool twisted_b = false;          // second factor evaluated at -z
  bool needs_twisted_cfg = false;
  bool needs_neutral = false;
};

FamilyShape family_shape(GenFamily f) {
  switch (f) {
    case GenFamily::ee: return {-1, -1, false, false, false};
    case GenFamily::estar: return {+1, -1, false, false, false};
    case GenFamily::estar2: return {+1, +1, false, false, false};
    case GenFamily::et: return {-1, -1, true, true, false};
    case GenFamily::ett: return {+1, +1, true, true, false};
    case GenFamily::en: return {-1, 0, false, false, true};
    case GenFamily::enstar: return {+1, 0, false, false, true};
    case GenFamily::etn: return {-1, 0, true, true, true};
    case GenFamily::etnstar: return {+1, 0, false, true, true};
    case GenFamily::zeta: return {0, 0, true, true, true};
  }
  return {};
}

// Antisymmetric two-flavor families vanish at p = q; symmetric ones do not.
bool family_symmetric(const PairConfig& cfg, GenFamily f) {
  bool twisted = (f == GenFamily::et || f == GenFamily::ett);
  if (twisted) return !cfg.bosonic && cfg.half_modes;
  return cfg.bosonic;
}

int field_parity(const PairConfig& cfg, int charge) {
  return charge != 0 ? cfg.charged_parity() : cfg.neutral_parity();
}

}  // namespace

StateVector apply_finite_gen(const PairConfig& cfg, const FiniteGen& g, const StateVector& v) {
  FamilyShape sh = family_shape(g.family);
  if (sh.needs_twisted_cfg && !cfg.twisted)
    throw std::invalid_argument("apply_finite_gen: twisted family on untwisted config");
  if ((sh.charge_a == 0 || sh.charge_b == 0 || sh.needs_neutral) &&
      (sh.charge_a == 0 || sh.charge_b == 0) && !cfg.has_neutral() && sh.needs_neutral)
    throw std::invalid_argument("apply_finite_gen: neutral family without neutral field");
  bool two_flavor = sh.charge_a != 0 && sh.charge_b != 0;
  if (two_flavor && sh.charge_a == sh.charge_b && g.p == g.q &&
      !family_symmetric(cfg, g.family))
    throw std::invalid_argument("apply_finite_gen: antisymmetric family at p=q");

  int par_a = field_parity(cfg, sh.charge_a);
  int par_b = field_parity(cfg, sh.charge_b);
  if ((par_a + par_b) % 2 != 0)
    throw std::logic_error("apply_finite_gen: incompatible field parities");

  int n2 = 2 * g.n;
  int D2 = v.max_abs_mode2();
  int W2 = D2 + std::abs(n2) + 6;

  std::vector<BilTerm> terms;
  for (int a2 = -W2; a2 <= W2; ++a2) {
    if (((a2 % 2) + 2) % 2 != par_a) continue;
    int b2 = n2 - a2;
    Rat coef(1);
    if (sh.twisted_b) {
      // exponent of (-z) on the second factor is an integer
      long long e = par_b == 1 ? -(b2 + 1) / 2 : -b2 / 2;
      coef = Rat(neg_pow(e));
    }
    FieldOp A{sh.charge_a, sh.charge_a != 0 ? g.p : 0, a2};
    FieldOp B{sh.charge_b, sh.charge_b != 0 ? (sh.charge_a != 0 ? g.q : g.p) : 0, b2};
    terms.push_back({A, B, coef});
  }

  Rat shift(0);
  if (g.family == GenFamily::estar && g.p == g.q && g.n == 0 && !cfg.half_modes)
    shift = Rat(1, 2);  // the eps-constant of e*^{pp}(z), attached to the zero mode

  return apply_terms(cfg, terms, shift, v);
}

StateVector apply_outer(const PairConfig& cfg, OuterOp which, const StateVector& v) {
  if (which == OuterOp::g_diag) {
    if (!cfg.has_neutral())
      throw std::invalid_argument("apply_outer: g_diag needs a neutral field");
    StateVector out;
    for (const auto& [s, c] : v.terms)
      out.add(s, s.neutral.size() % 2 ? -c : c);
    return out;
  }

  // tau: swap the two fields of flavor l.
  if (cfg.l < 1) throw std::invalid_argument("apply_outer: tau needs l >= 1");
  enum class TauKind { plain, twisted_z, twisted_boson } kind;
  if (!cfg.twisted && !cfg.bosonic)
    kind = TauKind::plain;
  else if (cfg.twisted && !cfg.bosonic && !cfg.half_modes)
    kind = TauKind::twisted_z;
  else if (cfg.twisted && cfg.bosonic)
    kind = TauKind::twisted_boson;
  else
    throw std::invalid_argument("apply_outer: tau not defined on " + cfg.str());

  StateVector out;
  for (const auto& [s, c] : v.terms) {
    FockState t = s;
    auto& plus = t.charged[cfg.l - 1][0];
    auto& minus = t.charged[cfg.l - 1][1];
    Rat coef = c;
    if (!cfg.bosonic && (plus.size() * minus.size()) % 2) coef = -coef;
    if (kind == TauKind::twisted_z) {
      for (int m2 : plus) coef *= Rat(neg_pow(m2 / 2));
      for (int m2 : minus) coef *= Rat(neg_pow(m2 / 2));
    } else if (kind == TauKind::twisted_boson) {
      for (int m2 : plus) coef *= Rat(neg_pow((m2 + 1) / 2));
      for (int m2 : minus) coef *= Rat(neg_pow((m2 - 1) / 2));
    }
    std::swap(plus, minus);
    out.add(t, coef);
  }
  return out;
}

Rat eigenvalue_on(const StateVector& w, const StateVector& v) {
  if (v.is_zero()) throw std::invalid_argument("eigenvalue_on: zero vector");
  if (w.is_zero()) return Rat(0);
  const auto& [s0, c0] = *v.terms.begin();
  auto it = w.terms.find(s0);
  if (it == w.terms.end()) throw std::domain_error("eigenvalue_on: not an eigenvector");
  Rat lambda = it->second / c0;
  StateVector diff = w;
  diff -= lambda * StateVector(v);
  if (!diff.is_zero()) throw std::domain_error("eigenvalue_on: not an eigenvector");
  return lambda;
}

Rat bracket_defect(const PairConfig& cfg, Algebra alg, std::pair<int, int> g1,
                   std::pair<int, int> g2, int d2max) {
  InfiniteGen G1{alg, g1.first, g1.second}, G2{alg, g2.first, g2.second};
  SparseMat m1 = gen_matrix(alg, g1.first, g1.second);
  SparseMat m2 = gen_matrix(alg, g2.first, g2.second);
  auto expect = decompose_in_gens(alg, mat_bracket(m1, m2));
  Rat c_restr = cocycle(m1, m2);

  bool have = false;
  Rat defect(0);
  for (const auto& s : enumerate_states(cfg, d2max)) {
    StateVector e;
    e.add(s, Rat(1));
    StateVector w = apply_infinite_gen(cfg, G1, apply_infinite_gen(cfg, G2, e));
    w -= apply_infinite_gen(cfg, G2, apply_infinite_gen(cfg, G1, e));
    for (const auto& [coef, key] : expect)
      w -= coef * apply_infinite_gen(cfg, InfiniteGen{alg, key.first, key.second}, e);
    Rat d = eigenvalue_on(w, e);  // throws when defect is not scalar
    if (!have) {
      defect = d;
      have = true;
    } else if (d != defect) {
      throw std::domain_error("bracket_defect: non-scalar defect");
    }
  }
  if (c_restr.is_zero()) {
    if (!defect.is_zero()) throw std::domain_error("bracket_defect: defect with zero cocycle");
    return Rat(0);
  }
  return defect / c_restr;
}

Rat measure_central_charge(const PairConfig& cfg, Algebra alg, int d2max) {
  std::pair<int, int> a, b;
  switch (alg) {
    case Algebra::A: a = {0, 1}; b = {1, 0}; break;
    case Algebra::D: a = {0, 2}; b = {2, 0}; break;  // cocycle 2
    default: a = {0, 1}; b = {1, 0}; break;          // b/bt cocycle 1, c cocycle 4
  }
  return bracket_defect(cfg, alg, a, b, d2max);
}

namespace {

GenFamily charged_pair_family(const PairConfig& cfg, bool star2) {
  if (cfg.twisted) return star2 ? GenFamily::ett : GenFamily::et;
  return star2 ? GenFamily::estar2 : GenFamily::ee;
}

GenFamily neutral_family(const PairConfig& cfg, bool star) {
  if (cfg.twisted) return star ? GenFamily::etnstar : GenFamily::etn;
  return star ? GenFamily::enstar : GenFamily::en;
}

}  // namespace

std::vector<FiniteGen> finite_raising(const PairConfig& cfg, GroupStyle style,
                                      const FlavorBlock& blk) {
  std::vector<FiniteGen> out;
  GenFamily up = charged_pair_family(cfg, true);
  bool sym = family_symmetric(cfg, up);
  for (int p = blk.lo; p <= blk.hi; ++p)
    for (int q = p; q <= blk.hi; ++q) {
      if (p < q) out.push_back({GenFamily::estar, p, q, 0});
      if (style == GroupStyle::gl) continue;
      if (p == q && !(sym && (style == GroupStyle::sp || style == GroupStyle::osp))) continue;
      if (p == q && !sym) continue;
      out.push_back({up, p, q, 0});
    }
  if ((style == GroupStyle::so_odd || style == GroupStyle::osp) && blk.with_neutral)
    for (int p = blk.lo; p <= blk.hi; ++p)
      out.push_back({neutral_family(cfg, true), p, 0, 0});
  return out;
}

std::vector<FiniteGen> finite_lowering(const PairConfig& cfg, GroupStyle style,
                                       const FlavorBlock& blk) {
  std::vector<FiniteGen> out;
  GenFamily dn = charged_pair_family(cfg, false);
  bool sym = family_symmetric(cfg, dn);
  for (int p = blk.lo; p <= blk.hi; ++p)
    for (int q = p; q <= blk.hi; ++q) {
      if (p < q) out.push_back({GenFamily::estar, q, p, 0});
      if (style == GroupStyle::gl) continue;
      if (p == q && !sym) continue;
      if (p == q && !(style == GroupStyle::sp || style == GroupStyle::osp)) continue;
      out.push_back({dn, p, q, 0});
    }
  if ((style == GroupStyle::so_odd || style == GroupStyle::osp) && blk.with_neutral)
    for (int p = blk.lo; p <= blk.hi; ++p)
      out.push_back({neutral_family(cfg, false), p, 0, 0});
  return out;
}

std::vector<FiniteGen> finite_cartan(const FlavorBlock& blk) {
  std::vector<FiniteGen> out;
  for (int p = blk.lo; p <= blk.hi; ++p) out.push_back({GenFamily::estar, p, p, 0});
  return out;
}

std::vector<FiniteGen> finite_horizontal(const PairConfig& cfg, GroupStyle style,
                                         const FlavorBlock& blk) {
  auto out = finite_raising(cfg, style, blk);
  auto c = finite_cartan(blk);
  auto low = finite_lowering(cfg, style, blk);
  out.insert(out.end(), c.begin(), c.end());
  out.insert(out.end(), low.begin(), low.end());
  return out;
}

std::vector<InfiniteGen> infinite_gens(Algebra alg, int box, int sign) {
  std::vector<InfiniteGen> out;
  for (int i = -box; i <= box; ++i)
    for (int j = -box; j <= box; ++j) {
      if (sign > 0 && j <= i) continue;
      if (sign == 0 && j != i) continue;
      if (sign < 0 && j >= i) continue;
      if (alg != Algebra::A && !gen_is_canonical(alg, i, j)) continue;
      out.push_back({alg, i, j});
    }
  return out;
}

std::vector<Rat> finite_weight_of(const PairConfig& cfg, const StateVector& v,
                                  const FlavorBlock& blk) {
  std::vector<Rat> w;
  for (int p = blk.lo; p <= blk.hi; ++p) {
    StateVector r = apply_finite_gen(cfg, {GenFamily::estar, p, p, 0}, v);
    Rat lam = eigenvalue_on(r, v);
    w.push_back(cfg.bosonic ? -lam : lam);
  }
  return w;
}

std::vector<Rat> diag_evals_subalg(const PairConfig& cfg, Algebra alg, const StateVector& v,
                                   int K) {
  std::vector<Rat> out;
  for (int k = 1; k <= K; ++k) {
    StateVector w = apply_infinite_gen(cfg, InfiniteGen{alg, k, k}, v);
    out.push_back(eigenvalue_on(w, v));
  }
  return out;
}

std::vector<Rat> diag_evals_A(const PairConfig& cfg, const StateVector& v, int K) {
  std::vector<Rat> out;
  for (int k = -K; k <= K; ++k) {
    StateVector w = apply_E(cfg, k, k, v);
    out.push_back(eigenvalue_on(w, v));
  }
  return out;
}

}  // namespace fockdual
