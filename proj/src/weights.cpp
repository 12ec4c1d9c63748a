#include "fockdual/weights.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fockdual {

namespace {

bool weakly_decreasing(const std::vector<int>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i]) return false;
  return true;
}

int count_ge(const std::vector<int>& v, int bound) {
  int n = 0;
  for (int x : v)
    if (x >= bound) ++n;
  return n;
}

}  // namespace

std::string GroupKind::str() const {
  switch (fam) {
    case GroupFamily::GL: return "GL(" + std::to_string(l) + ")";
    case GroupFamily::O_even: return "O(" + std::to_string(2 * l) + ")";
    case GroupFamily::SO_even: return "SO(" + std::to_string(2 * l) + ")";
    case GroupFamily::O_odd: return "O(" + std::to_string(2 * l + 1) + ")";
    case GroupFamily::Sp: return "Sp(" + std::to_string(2 * l) + ")";
    case GroupFamily::Spin_even: return "Spin(" + std::to_string(2 * l) + ")";
    case GroupFamily::Pin: return "Pin(" + std::to_string(2 * l) + ")";
    case GroupFamily::Spin_odd: return "Spin(" + std::to_string(2 * l + 1) + ")";
    case GroupFamily::Osp: return "Osp(1," + std::to_string(2 * l) + ")";
  }
  return "?";
}

GroupKind GroupKind::parse(const std::string& s) {
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw std::invalid_argument("GroupKind: cannot parse '" + s + "'");
  std::string name = s.substr(0, open);
  std::string body = s.substr(open + 1, s.size() - open - 2);
  auto num = [&](const std::string& t) { return std::stoi(t); };
  GroupKind g;
  if (name == "Osp") {
    auto comma = body.find(',');
    if (comma == std::string::npos || body.substr(0, comma) != "1")
      throw std::invalid_argument("GroupKind: expected Osp(1,2l)");
    int n = num(body.substr(comma + 1));
    if (n % 2) throw std::invalid_argument("GroupKind: Osp(1,odd)");
    g = {GroupFamily::Osp, n / 2};
  } else {
    int n = num(body);
    if (name == "GL") g = {GroupFamily::GL, n};
    else if (name == "O") g = {n % 2 ? GroupFamily::O_odd : GroupFamily::O_even, n / 2};
    else if (name == "SO" && n % 2 == 0) g = {GroupFamily::SO_even, n / 2};
    else if (name == "Sp" && n % 2 == 0) g = {GroupFamily::Sp, n / 2};
    else if (name == "Spin") g = {n % 2 ? GroupFamily::Spin_odd : GroupFamily::Spin_even, n / 2};
    else if (name == "Pin" && n % 2 == 0) g = {GroupFamily::Pin, n / 2};
    else throw std::invalid_argument("GroupKind: unknown group '" + s + "'");
  }
  if (g.l < 1) throw std::invalid_argument("GroupKind: rank must be >= 1");
  return g;
}

std::string FiniteWeightLabel::str() const {
  std::ostringstream os;
  os << group.str() << ':';
  if (spin_shift) os << "half+";
  os << '[';
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
    if (overline_last && i + 1 == parts.size()) os << '~';
  }
  os << ']';
  if (det_twist) os << "*det";
  return os.str();
}

FiniteWeightLabel FiniteWeightLabel::parse(const GroupKind& g, const std::string& in) {
  FiniteWeightLabel lab;
  lab.group = g;
  std::string s = in;
  auto colon = s.find(":[");
  auto colon2 = s.find(":half+[");
  if (colon2 != std::string::npos) {
    if (s.substr(0, colon2) != g.str())
      throw std::invalid_argument("label: group prefix mismatch in '" + in + "'");
    s = s.substr(colon2 + 1);
  } else if (colon != std::string::npos) {
    if (s.substr(0, colon) != g.str())
      throw std::invalid_argument("label: group prefix mismatch in '" + in + "'");
    s = s.substr(colon + 1);
  }
  if (s.rfind("half+", 0) == 0) {
    lab.spin_shift = true;
    s = s.substr(5);
  }
  if (s.size() >= 4 && s.substr(s.size() - 4) == "*det") {
    lab.det_twist = true;
    s = s.substr(0, s.size() - 4);
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("label: expected [..] in '" + in + "'");
  std::string body = s.substr(1, s.size() - 2);
  if (!body.empty()) {
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (!tok.empty() && tok.back() == '~') {
        lab.overline_last = true;
        tok.pop_back();
      }
      lab.parts.push_back(std::stoi(tok));
    }
  }
  // Pin labels are always induced; the overline is intrinsic.
  if (g.fam == GroupFamily::Pin) {
    lab.overline_last = true;
    lab.spin_shift = true;
  }
  if (g.fam == GroupFamily::Spin_odd) lab.spin_shift = true;
  return lab;
}

std::vector<Rat> FiniteWeightLabel::weight_tuple(bool minus_branch) const {
  std::vector<Rat> w;
  Rat shift = spin_shift ? Rat(1, 2) : Rat(0);
  for (size_t i = 0; i < parts.size(); ++i) {
    Rat x = Rat(parts[i]) + shift;
    if (minus_branch && i + 1 == parts.size()) x = -x;
    w.push_back(x);
  }
  return w;
}

ValidationResult validate_label(const FiniteWeightLabel& lab) {
  auto fail = [](const std::string& r) { return ValidationResult{false, r}; };
  const auto& g = lab.group;
  const auto& m = lab.parts;
  if ((int)m.size() != g.l) return fail("label has " + std::to_string(m.size()) +
                                        " parts, rank is " + std::to_string(g.l));
  int last = m.empty() ? 0 : m.back();
  bool decr = weakly_decreasing(m);
  bool decr_butlast = true;
  for (size_t i = 1; i + 1 < m.size(); ++i)
    if (m[i - 1] < m[i]) decr_butlast = false;
  if (m.size() >= 2 && m[m.size() - 2] < std::abs(last)) decr_butlast = false;

  auto no_flags = [&](bool ov, bool det, bool spin) -> ValidationResult {
    if (lab.overline_last && !ov) return fail("overline not allowed for " + g.str());
    if (lab.det_twist && !det) return fail("det twist not allowed for " + g.str());
    if (lab.spin_shift && !spin) return fail("spin shift not allowed for " + g.str());
    return {};
  };

  switch (g.fam) {
    case GroupFamily::GL:
      if (!decr) return fail("Sigma(A): parts must be weakly decreasing");
      return no_flags(false, false, false);
    case GroupFamily::O_even:
      if (auto r = no_flags(true, true, false); !r.ok) return r;
      if (!decr) return fail("Sigma(D): parts must be weakly decreasing");
      if (last < 0) return fail("Sigma(D): last part must be >= 0");
      if (lab.overline_last) {
        if (last <= 0) return fail("overline requires m_l > 0");
        if (lab.det_twist) return fail("overline label cannot carry det");
      } else if (last > 0) {
        return fail("O(2l) label with m_l > 0 must be an overline label");
      }
      if (lab.det_twist && last != 0) return fail("det twist requires m_l = 0");
      return {};
    case GroupFamily::SO_even:
      if (auto r = no_flags(false, false, false); !r.ok) return r;
      if (!decr_butlast) return fail("SO(2l): require m_1 >= ... >= m_{l-1} >= |m_l|");
      return {};
    case GroupFamily::O_odd:
      if (auto r = no_flags(false, true, false); !r.ok) return r;
      if (!decr || last < 0) return fail("Sigma(B): parts weakly decreasing, m_l >= 0");
      return {};
    case GroupFamily::Sp:
      if (auto r = no_flags(false, false, false); !r.ok) return r;
      if (!decr || last < 0) return fail("Sigma(C): parts weakly decreasing, m_l >= 0");
      return {};
    case GroupFamily::Spin_even:
      if (!lab.spin_shift) return fail("Spin label requires the spin shift");
      if (auto r = no_flags(false, false, true); !r.ok) return r;
      if (!decr_butlast) return fail("Spin(2l): require m_1 >= ... >= m_{l-1} >= |m_l|");
      return {};
    case GroupFamily::Pin:
      if (!lab.spin_shift) return fail("Sigma(Pin) requires the spin shift");
      if (!lab.overline_last) return fail("Sigma(Pin) labels are induced (overline)");
      if (lab.det_twist) return fail("det twist not allowed for Pin labels");
      if (!decr || last < 0) return fail("Sigma(Pin): parts weakly decreasing, m_l >= 0");
      return {};
    case GroupFamily::Spin_odd:
      if (!lab.spin_shift) return fail("Sigma(PB) requires the spin shift");
      if (auto r = no_flags(false, false, true); !r.ok) return r;
      if (!decr || last < 0) return fail("Sigma(PB): parts weakly decreasing, m_l >= 0");
      return {};
    case GroupFamily::Osp:
      if (auto r = no_flags(false, false, false); !r.ok) return r;
      if (!decr || last < 0) return fail("Sigma(Osp): parts weakly decreasing, m_l >= 0");
      return {};
  }
  return {};
}

std::vector<FiniteWeightLabel> enumerate_labels(const GroupKind& g, int max_part) {
  const bool gl_like = g.fam == GroupFamily::GL;
  const bool neg_last = g.fam == GroupFamily::SO_even || g.fam == GroupFamily::Spin_even;

  std::vector<std::vector<int>> tuples;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int idx, int hi) -> void {
    if (idx == g.l) {
      tuples.push_back(cur);
      return;
    }
    const bool is_last = idx == g.l - 1;
    int top = hi, low = gl_like ? -max_part : 0;
    if (is_last && neg_last) low = g.l >= 2 ? -hi : -max_part;
    for (int v = top; v >= low; --v) {
      cur.push_back(v);
      self(self, idx + 1, is_last ? v : std::min(v, hi));
      cur.pop_back();
    }
  };
  rec(rec, 0, max_part);

  std::vector<FiniteWeightLabel> out;
  for (const auto& parts : tuples) {
    FiniteWeightLabel lab;
    lab.group = g;
    lab.parts = parts;
    if (g.fam == GroupFamily::Pin) {
      lab.spin_shift = lab.overline_last = true;
      if (validate_label(lab).ok) out.push_back(lab);
    } else if (g.fam == GroupFamily::Spin_odd || g.fam == GroupFamily::Spin_even) {
      lab.spin_shift = true;
      if (validate_label(lab).ok) out.push_back(lab);
    } else if (g.fam == GroupFamily::O_even) {
      for (int ov = 0; ov <= 1; ++ov)
        for (int det = 0; det <= 1; ++det) {
          FiniteWeightLabel x = lab;
          x.overline_last = ov;
          x.det_twist = det;
          if (validate_label(x).ok) out.push_back(x);
        }
    } else if (g.fam == GroupFamily::O_odd) {
      for (int det = 0; det <= 1; ++det) {
        FiniteWeightLabel x = lab;
        x.det_twist = det;
        if (validate_label(x).ok) out.push_back(x);
      }
    } else {
      if (validate_label(lab).ok) out.push_back(lab);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// prod over positive roots of <lam+rho, a> / <rho, a>, exact.
Rat weyl_product(const std::vector<Rat>& lam, const std::vector<Rat>& rho,
                 const std::vector<std::vector<int>>& pos_roots) {
  Rat num(1), den(1);
  size_t r = rho.size();
  for (const auto& a : pos_roots) {
    Rat n(0), d(0);
    for (size_t i = 0; i < r; ++i) {
      n += Rat(a[i]) * (lam[i] + rho[i]);
      d += Rat(a[i]) * rho[i];
    }
    num *= n;
    den *= d;
  }
  return num / den;
}

std::vector<std::vector<int>> pos_roots_D(int l) {
  std::vector<std::vector<int>> roots;
  for (int a = 0; a < l; ++a)
    for (int b = a + 1; b < l; ++b) {
      std::vector<int> r1(l, 0), r2(l, 0);
      r1[a] = 1; r1[b] = -1;
      r2[a] = 1; r2[b] = 1;
      roots.push_back(r1);
      roots.push_back(r2);
    }
  return roots;
}

std::vector<std::vector<int>> pos_roots_B(int l) {
  auto roots = pos_roots_D(l);
  for (int a = 0; a < l; ++a) {
    std::vector<int> r(l, 0);
    r[a] = 1;
    roots.push_back(r);
  }
  return roots;
}

std::vector<std::vector<int>> pos_roots_C(int l) {
  auto roots = pos_roots_D(l);
  for (int a = 0; a < l; ++a) {
    std::vector<int> r(l, 0);
    r[a] = 2;
    roots.push_back(r);
  }
  return roots;
}

Rat dim_typeD(const std::vector<Rat>& lam) {
  int l = (int)lam.size();
  if (l <= 1) return Rat(1);
  std::vector<Rat> rho;
  for (int i = 0; i < l; ++i) rho.push_back(Rat(l - 1 - i));
  return weyl_product(lam, rho, pos_roots_D(l));
}

Rat dim_typeB(const std::vector<Rat>& lam) {
  int l = (int)lam.size();
  std::vector<Rat> rho;
  for (int i = 0; i < l; ++i) rho.push_back(Rat(2 * (l - i) - 1, 2));
  return weyl_product(lam, rho, pos_roots_B(l));
}

Rat dim_typeC(const std::vector<Rat>& lam) {
  int l = (int)lam.size();
  std::vector<Rat> rho;
  for (int i = 0; i < l; ++i) rho.push_back(Rat(l - i));
  return weyl_product(lam, rho, pos_roots_C(l));
}

Rat dim_gl(const std::vector<Rat>& lam) {
  int l = (int)lam.size();
  Rat num(1), den(1);
  for (int a = 0; a < l; ++a)
    for (int b = a + 1; b < l; ++b) {
      num *= lam[a] - lam[b] + Rat(b - a);
      den *= Rat(b - a);
    }
  return num / den;
}

}  // namespace

long long weyl_dim(const GroupKind& g, const FiniteWeightLabel& lab) {
  auto v = validate_label(lab);
  if (!v.ok || lab.group != g) throw std::invalid_argument("weyl_dim: invalid label: " + v.reason);
  std::vector<Rat> w = lab.weight_tuple(false);
  Rat d(0);
  switch (g.fam) {
    case GroupFamily::GL: d = dim_gl(w); break;
    case GroupFamily::SO_even:
    case GroupFamily::Spin_even: d = dim_typeD(w); break;
    case GroupFamily::O_even: d = lab.overline_last ? Rat(2) * dim_typeD(w) : dim_typeD(w); break;
    case GroupFamily::Pin: d = Rat(2) * dim_typeD(w); break;
    case GroupFamily::O_odd:
    case GroupFamily::Spin_odd: d = dim_typeB(w); break;
    case GroupFamily::Sp: d = dim_typeC(w); break;
    // osp(1|2l) irreducibles have the dimension given by the C_l product
    // with the super rho = (l-1/2, ..., 1/2), which coincides with the B_l
    // Weyl product at integral weights.
    case GroupFamily::Osp: d = dim_typeB(w); break;
  }
  return d.as_integer();
}

Rat charge_from_coeffs(Algebra alg, const std::map<int, Rat>& h) {
  auto at = [&](int k) {
    auto it = h.find(k);
    return it == h.end() ? Rat(0) : it->second;
  };
  Rat c(0);
  switch (alg) {
    case Algebra::A:
      for (const auto& [k, v] : h) c += v;
      return c;
    case Algebra::B:
    case Algebra::Bt:
      c = Rat(1, 2) * at(0);
      for (const auto& [k, v] : h)
        if (k >= 1) c += v;
      return c;
    case Algebra::C:
      for (const auto& [k, v] : h)
        if (k >= 0) c += v;
      return c;
    case Algebra::D:
      c = Rat(1, 2) * (at(0) + at(1));
      for (const auto& [k, v] : h)
        if (k >= 2) c += v;
      return c;
  }
  return c;
}

InfiniteWeight InfiniteWeight::make(Algebra alg, std::map<int, Rat> coeffs) {
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    if (alg != Algebra::A && it->first < 0)
      throw std::invalid_argument("InfiniteWeight: negative index for type " +
                                  algebra_name(alg));
    it = it->second.is_zero() ? coeffs.erase(it) : std::next(it);
  }
  InfiniteWeight w;
  w.alg = alg;
  w.coeffs = std::move(coeffs);
  w.charge = charge_from_coeffs(alg, w.coeffs);
  return w;
}

Rat InfiniteWeight::coroot_eval(int k) const {
  if (alg != Algebra::A && k < 0)
    throw std::invalid_argument("coroot_eval: index out of range for type " +
                                algebra_name(alg));
  auto it = coeffs.find(k);
  return it == coeffs.end() ? Rat(0) : it->second;
}

std::string InfiniteWeight::json() const {
  std::ostringstream os;
  os << "{\"algebra\":\"" << algebra_name(alg) << "\",\"coeffs\":{";
  bool first = true;
  for (const auto& [k, v] : coeffs) {
    if (!first) os << ',';
    first = false;
    os << '"' << k << "\":";
    if (v.is_integer())
      os << v.num();
    else
      os << '"' << v.str() << '"';
  }
  os << "},\"charge\":\"" << charge.str() << "\"}";
  return os.str();
}

InfiniteWeight weight_from_lambdas_subalg(Algebra alg, const std::vector<Rat>& lam,
                                          const Rat& charge) {
  auto at = [&](size_t k) { return k >= 1 && k <= lam.size() ? lam[k - 1] : Rat(0); };
  std::map<int, Rat> h;
  for (size_t k = 1; k <= lam.size(); ++k) {
    Rat v = at(k) - at(k + 1);
    if (!v.is_zero()) h[(int)k] = v;
  }
  Rat h0;
  switch (alg) {
    case Algebra::D: h0 = -at(1) - at(2) + Rat(2) * charge; break;
    case Algebra::B:
    case Algebra::Bt: h0 = Rat(-2) * at(1) + Rat(2) * charge; break;
    case Algebra::C: h0 = -at(1) + charge; break;
    default: throw std::invalid_argument("weight_from_lambdas_subalg: use type b/bt/c/d");
  }
  if (!h0.is_zero()) h[0] = h0;
  return InfiniteWeight::make(alg, std::move(h));
}

InfiniteWeight weight_from_lambdas_A(const std::vector<Rat>& lam, const Rat& charge) {
  int K = ((int)lam.size() - 1) / 2;
  auto at = [&](int k) {
    int idx = k + K;
    return idx >= 0 && idx < (int)lam.size() ? lam[idx] : Rat(0);
  };
  std::map<int, Rat> h;
  for (int k = -K; k <= K; ++k) {
    Rat v = at(k) - at(k + 1);
    if (k == 0) v += charge;
    if (!v.is_zero()) h[k] = v;
  }
  return InfiniteWeight::make(Algebra::A, std::move(h));
}

PairConfig DualPair::config() const {
  PairConfig c;
  c.l = l;
  switch (kind) {
    case PairKind::gl_fermi: c = {l, false, true, NeutralField::none, false}; break;
    case PairKind::gl_bose: c = {l, true, true, NeutralField::none, false}; break;
    case PairKind::o_even_d: c = {l, false, true, NeutralField::none, false}; break;
    case PairKind::pin_bt: c = {l, false, false, NeutralField::none, false}; break;
    case PairKind::sp_c: c = {l, false, true, NeutralField::none, true}; break;
    case PairKind::pin_b: c = {l, false, false, NeutralField::none, true}; break;
    case PairKind::o_odd_d: c = {l, false, true, NeutralField::phi, false}; break;
    case PairKind::spin_odd_bt: c = {l, false, false, NeutralField::phi, false}; break;
    case PairKind::osp_c: c = {l, false, true, NeutralField::chi, true}; break;
    case PairKind::spin_odd_b: c = {l, false, false, NeutralField::varphi, true}; break;
    case PairKind::sp_d: c = {l, true, true, NeutralField::none, false}; break;
    case PairKind::o_even_c: c = {l, true, true, NeutralField::none, true}; break;
    case PairKind::osp_d: c = {l, true, true, NeutralField::phi, false}; break;
    case PairKind::o_odd_c: c = {l, true, true, NeutralField::chi, true}; break;
  }
  c.validate();
  return c;
}

GroupKind DualPair::group() const {
  switch (kind) {
    case PairKind::gl_fermi:
    case PairKind::gl_bose: return {GroupFamily::GL, l};
    case PairKind::o_even_d:
    case PairKind::o_even_c: return {GroupFamily::O_even, l};
    case PairKind::pin_bt:
    case PairKind::pin_b: return {GroupFamily::Pin, l};
    case PairKind::sp_c:
    case PairKind::sp_d: return {GroupFamily::Sp, l};
    case PairKind::o_odd_d:
    case PairKind::o_odd_c: return {GroupFamily::O_odd, l};
    case PairKind::spin_odd_bt:
    case PairKind::spin_odd_b: return {GroupFamily::Spin_odd, l};
    case PairKind::osp_c:
    case PairKind::osp_d: return {GroupFamily::Osp, l};
  }
  return {GroupFamily::GL, l};
}

Algebra DualPair::algebra() const {
  switch (kind) {
    case PairKind::gl_fermi:
    case PairKind::gl_bose: return Algebra::A;
    case PairKind::o_even_d:
    case PairKind::o_odd_d:
    case PairKind::sp_d:
    case PairKind::osp_d: return Algebra::D;
    case PairKind::pin_bt:
    case PairKind::spin_odd_bt: return Algebra::Bt;
    case PairKind::sp_c:
    case PairKind::osp_c:
    case PairKind::o_even_c:
    case PairKind::o_odd_c: return Algebra::C;
    case PairKind::pin_b:
    case PairKind::spin_odd_b: return Algebra::B;
  }
  return Algebra::A;
}

GroupStyle DualPair::style() const {
  switch (group().fam) {
    case GroupFamily::GL: return GroupStyle::gl;
    case GroupFamily::O_even:
    case GroupFamily::Pin: return GroupStyle::so_even;
    case GroupFamily::Sp: return GroupStyle::sp;
    case GroupFamily::O_odd:
    case GroupFamily::Spin_odd: return GroupStyle::so_odd;
    case GroupFamily::Osp: return GroupStyle::osp;
    default: return GroupStyle::gl;
  }
}

std::string DualPair::str() const {
  std::string alg;
  switch (kind) {
    case PairKind::gl_fermi: alg = "glhat+"; break;
    case PairKind::gl_bose: alg = "glhat-"; break;
    default:
      switch (algebra()) {
        case Algebra::B: alg = "binf"; break;
        case Algebra::Bt: alg = "btinf"; break;
        case Algebra::C: alg = "cinf"; break;
        case Algebra::D: alg = "dinf"; break;
        default: alg = "glhat"; break;
      }
  }
  return group().str() + "/" + alg;
}

DualPair DualPair::parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("DualPair: expected GROUP/ALG");
  GroupKind g = GroupKind::parse(s.substr(0, slash));
  std::string alg = s.substr(slash + 1);
  for (const auto& p : all_pairs(g.l))
    if (p.group() == g && p.str() == s) return p;
  throw std::invalid_argument("DualPair: unknown pair '" + s + "'");
}

std::vector<DualPair> all_pairs(int l) {
  std::vector<DualPair> out;
  for (PairKind k : {PairKind::gl_fermi, PairKind::gl_bose, PairKind::o_even_d,
                     PairKind::pin_bt, PairKind::sp_c, PairKind::pin_b, PairKind::o_odd_d,
                     PairKind::spin_odd_bt, PairKind::osp_c, PairKind::spin_odd_b,
                     PairKind::sp_d, PairKind::o_even_c, PairKind::osp_d, PairKind::o_odd_c})
    out.push_back({k, l});
  return out;
}

std::vector<std::string> DualPair::branches(const FiniteWeightLabel& lab) const {
  switch (kind) {
    case PairKind::o_even_d:
    case PairKind::o_even_c:
      if (lab.overline_last) return {"h1", "h2"};
      return {"h1"};
    case PairKind::pin_bt:
    case PairKind::pin_b: return {"h1", "h2"};
    case PairKind::spin_odd_bt:
    case PairKind::spin_odd_b: return {"even", "odd"};
    default: return {"default"};
  }
}

InfiniteWeight lambda_map(const DualPair& pair, const FiniteWeightLabel& lab) {
  if (lab.group != pair.group())
    throw std::invalid_argument("lambda_map: label group does not match the pair");
  auto v = validate_label(lab);
  if (!v.ok) throw std::invalid_argument("lambda_map: invalid label: " + v.reason);

  const int l = pair.l;
  const auto& m = lab.parts;
  auto mk = [&](int k) { return k >= 1 && k <= l ? m[k - 1] : 0; };  // m_k, 1-based
  const int i2 = count_ge(m, 2);
  const int j1 = count_ge(m, 1);
  std::map<int, Rat> h;
  auto add = [&](int k, Rat val) {
    if (val.is_zero()) return;
    h[k] += val;
    if (h[k].is_zero()) h.erase(k);
  };

  switch (pair.kind) {
    case PairKind::gl_fermi:
      for (int k = 1; k <= l; ++k) add(mk(k), Rat(1));
      break;

    case PairKind::gl_bose: {
      // Weight table of the theorem: E_kk eigenvalue m_k for 1<=k<=i and
      // m_{l+k} for j-l+1<=k<=0, where i counts positive, j non-negative parts.
      const int ip = count_ge(m, 1);
      int jz = 0;
      for (int x : m)
        if (x >= 0) ++jz;
      auto lamk = [&](int k) -> Rat {
        if (k >= 1 && k <= ip) return Rat(mk(k));
        if (k <= 0 && k >= jz + 1 - l) return Rat(mk(l + k));
        return Rat(0);
      };
      for (int k = -l - 1; k <= l + 1; ++k) {
        Rat v2 = lamk(k) - lamk(k + 1);
        if (k == 0) v2 += Rat(-l);
        add(k, v2);
      }
      break;
    }

    case PairKind::o_even_d: {
      int jeff = lab.overline_last ? l : j1;
      if (lab.det_twist) {
        add(0, Rat(j1 - i2));
        add(1, Rat(2 * l - i2 - j1));
      } else {
        add(0, Rat(2 * l - i2 - jeff));
        add(1, Rat(jeff - i2));
      }
      for (int k = 1; k <= i2; ++k) add(mk(k), Rat(1));
      break;
    }

    case PairKind::o_odd_d: {
      if (lab.det_twist) {
        add(0, Rat(j1 - i2));
        add(1, Rat(2 * l + 1 - i2 - j1));
      } else {
        add(0, Rat(2 * l + 1 - i2 - j1));
        add(1, Rat(j1 - i2));
      }
      for (int k = 1; k <= i2; ++k) add(mk(k), Rat(1));
      break;
    }

    case PairKind::pin_bt:
    case PairKind::pin_b:
      add(0, Rat(2 * l - 2 * j1));
      for (int k = 1; k <= j1; ++k) add(mk(k), Rat(1));
      break;

    case PairKind::spin_odd_bt:
    case PairKind::spin_odd_b:
      add(0, Rat(2 * l + 1 - 2 * j1));
      for (int k = 1; k <= j1; ++k) add(mk(k), Rat(1));
      break;

    case PairKind::sp_c:
      add(0, Rat(l - j1));
      for (int k = 1; k <= j1; ++k) add(mk(k), Rat(1));
      break;

    case PairKind::osp_c:
      add(0, Rat(l) - Rat(1, 2) - Rat(j1));
      for (int k = 1; k <= j1; ++k) add(mk(k), Rat(1));
      break;

    case PairKind::sp_d:
    case PairKind::osp_d:
      add(0, Rat(pair.kind == PairKind::sp_d ? -2 * l : -2 * l + 1) - Rat(mk(1)) - Rat(mk(2)));
      for (int k = 1; k <= l; ++k) add(k, Rat(mk(k) - mk(k + 1)));
      break;

    case PairKind::o_even_c:
    case PairKind::o_odd_c: {
      Rat h0 = Rat(-l - mk(1));
      if (pair.kind == PairKind::o_odd_c) h0 -= Rat(1, 2);
      add(0, h0);
      if (lab.det_twist) {
        for (int k = 1; k < j1; ++k) add(k, Rat(mk(k) - mk(k + 1)));
        add(j1, Rat(mk(j1) - 1));
        add(pair.kind == PairKind::o_even_c ? 2 * l - j1 : 2 * l - j1 + 1, Rat(1));
      } else {
        for (int k = 1; k <= l; ++k) add(k, Rat(mk(k) - mk(k + 1)));
      }
      break;
    }
  }

  InfiniteWeight w = InfiniteWeight::make(pair.algebra(), std::move(h));
  if (w.charge != pair.central_charge())
    throw std::logic_error("lambda_map: central charge mismatch for " + lab.str());
  return w;
}

}  // namespace fockdual
