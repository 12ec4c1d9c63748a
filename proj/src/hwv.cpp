#include "fockdual/hwv.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fockdual {

namespace {

StateVector apply_product(const PairConfig& cfg, const std::vector<FieldOp>& ops,
                          StateVector v) {
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) v = apply_mode(cfg, *it, v);
  return v;
}

FockState merge_creators(const FockState& a, const FockState& b) {
  FockState out((int)a.charged.size());
  auto merge = [](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> m;
    std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(m),
               std::greater<int>());
    return m;
  };
  for (size_t p = 0; p < a.charged.size(); ++p) {
    out.charged[p][0] = merge(a.charged[p][0], b.charged[p][0]);
    out.charged[p][1] = merge(a.charged[p][1], b.charged[p][1]);
  }
  out.neutral = merge(a.neutral, b.neutral);
  return out;
}

struct DetEntry {
  FieldOp op;
  int sign = 1;
};

// det of a matrix of commuting creation operators, applied to |0>.
StateVector det_vector(const PairConfig& cfg, const std::vector<std::vector<DetEntry>>& m) {
  int n = (int)m.size();
  StateVector out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inv = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inv;
    Rat coef(inv % 2 ? -1 : 1);
    StateVector term = vacuum(cfg);
    for (int r = 0; r < n; ++r) {
      const DetEntry& e = m[r][perm[r]];
      coef *= Rat(e.sign);
      term = apply_mode(cfg, e.op, term);
    }
    out += coef * term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

StateVector det_power(const PairConfig& cfg, const std::vector<std::vector<DetEntry>>& m,
                      int power) {
  StateVector out = vacuum(cfg);
  if (power == 0) return out;
  StateVector d = det_vector(cfg, m);
  for (int k = 0; k < power; ++k) out = creator_product(out, d);
  return out;
}

}  // namespace

StateVector creator_product(const StateVector& a, const StateVector& b) {
  StateVector out;
  for (const auto& [sa, ca] : a.terms)
    for (const auto& [sb, cb] : b.terms) out.add(merge_creators(sa, sb), ca * cb);
  return out;
}

std::string HwvRecipe::str() const {
  std::ostringstream os;
  os << "pair=" << pair.str() << " label=" << label.str() << " branch=" << branch;
  return os.str();
}

StateVector xi_vector(const PairConfig& cfg, int sign, int flavor, int m) {
  if (!cfg.half_modes || cfg.bosonic)
    throw std::invalid_argument("xi_vector: needs fermionic 1/2+Z modes");
  if (m < 0) throw std::invalid_argument("xi_vector: m >= 0");
  std::vector<FieldOp> ops;
  for (int k = m; k >= 1; --k) ops.push_back({sign, flavor, -(2 * k - 1)});
  return apply_product(cfg, ops, vacuum(cfg));
}

StateVector sigma_vector(const PairConfig& cfg, int sign, int flavor, int m) {
  if (cfg.half_modes || cfg.bosonic)
    throw std::invalid_argument("sigma_vector: needs fermionic Z modes");
  if (m < 0) throw std::invalid_argument("sigma_vector: m >= 0");
  std::vector<FieldOp> ops;
  if (sign > 0) {
    for (int k = m; k >= 1; --k) ops.push_back({+1, flavor, -2 * k});
  } else {
    for (int k = m; k >= 0; --k) ops.push_back({-1, flavor, -2 * k});
  }
  return apply_product(cfg, ops, vacuum(cfg));
}

StateVector xi_det_vector(const PairConfig& cfg, int i) {
  std::vector<FieldOp> ops;
  for (int p = i + 1; p <= cfg.l; ++p) {
    ops.push_back({+1, p, -1});
    ops.push_back({-1, p, -1});
  }
  return apply_product(cfg, ops, vacuum(cfg));
}

StateVector gamma_vector_plus(const PairConfig& cfg, int i, int m) {
  std::vector<std::vector<DetEntry>> mat(i, std::vector<DetEntry>(i));
  for (int r = 0; r < i; ++r)
    for (int c = 0; c < i; ++c) mat[r][c] = {FieldOp{+1, r + 1, -(2 * c + 1)}, 1};
  return det_power(cfg, mat, m);
}

StateVector gamma_vector_minus(const PairConfig& cfg, int b, int m) {
  int n = cfg.l + 1 - b;
  std::vector<std::vector<DetEntry>> mat(n, std::vector<DetEntry>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) mat[r][c] = {FieldOp{-1, cfg.l - r, -(2 * c + 1)}, 1};
  return det_power(cfg, mat, m);
}

StateVector gamma_det_vector(const PairConfig& cfg, int j) {
  int n = 2 * cfg.l - j;
  std::vector<std::vector<DetEntry>> mat(n, std::vector<DetEntry>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int mode2 = -(2 * r + 1);
      if (c < cfg.l)
        mat[r][c] = {FieldOp{+1, c + 1, mode2}, 1};
      else
        mat[r][c] = {FieldOp{-1, j + (c - cfg.l) + 1, mode2}, r % 2 ? -1 : 1};
    }
  return det_power(cfg, mat, 1);
}

StateVector gamma_tilde_plus_vector(const PairConfig& cfg, int m) {
  int n = cfg.l;
  std::vector<std::vector<DetEntry>> mat(n, std::vector<DetEntry>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int mode2 = -(2 * c + 1);
      if (r + 1 < n)
        mat[r][c] = {FieldOp{+1, r + 1, mode2}, 1};
      else
        mat[r][c] = {FieldOp{-1, cfg.l, mode2}, c % 2 ? -1 : 1};
    }
  return det_power(cfg, mat, m);
}

StateVector gamma_tilde_det_vector(const PairConfig& cfg, int j) {
  int n = 2 * cfg.l - j + 1;
  std::vector<std::vector<DetEntry>> mat(n, std::vector<DetEntry>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      int mode2 = -(2 * r + 1);
      int sgn = r % 2 ? -1 : 1;
      if (c < cfg.l)
        mat[r][c] = {FieldOp{+1, c + 1, mode2}, 1};
      else if (c < n - 1)
        mat[r][c] = {FieldOp{-1, j + (c - cfg.l) + 1, mode2}, sgn};
      else
        mat[r][c] = {FieldOp{0, 0, mode2}, sgn};
    }
  return det_power(cfg, mat, 1);
}

namespace {

int count_ge(const std::vector<int>& v, int bound) {
  int n = 0;
  for (int x : v)
    if (x >= bound) ++n;
  return n;
}

StateVector build_fermionic(const HwvRecipe& r, const PairConfig& cfg) {
  const auto& m = r.label.parts;
  const int l = cfg.l;
  auto xi_ops = [&](int sign, int flavor, int count, std::vector<FieldOp>& ops) {
    for (int k = count; k >= 1; --k) ops.push_back({sign, flavor, -(2 * k - 1)});
  };
  auto sigma_ops = [&](int sign, int flavor, int count, std::vector<FieldOp>& ops) {
    if (sign > 0)
      for (int k = count; k >= 1; --k) ops.push_back({+1, flavor, -2 * k});
    else
      for (int k = count; k >= 0; --k) ops.push_back({-1, flavor, -2 * k});
  };

  std::vector<FieldOp> ops;
  switch (r.pair.kind) {
    case PairKind::gl_fermi:
      for (int p = 1; p <= l; ++p)
        if (m[p - 1] > 0) xi_ops(+1, p, m[p - 1], ops);
      for (int p = 1; p <= l; ++p)
        if (m[p - 1] < 0) xi_ops(-1, p, -m[p - 1], ops);
      break;
    case PairKind::o_even_d:
    case PairKind::sp_c:
    case PairKind::osp_c: {
      if (r.label.det_twist) {  // eq_h4
        int j = count_ge(m, 1);
        for (int p = 1; p <= j; ++p) xi_ops(+1, p, m[p - 1], ops);
        for (int p = j + 1; p <= l; ++p) {
          ops.push_back({+1, p, -1});
          ops.push_back({-1, p, -1});
        }
      } else {
        int upto = r.branch == "h2" ? l - 1 : l;
        for (int p = 1; p <= upto; ++p) xi_ops(+1, p, m[p - 1], ops);
        if (r.branch == "h2") xi_ops(-1, l, m[l - 1], ops);
      }
      break;
    }
    case PairKind::o_odd_d: {
      if (r.label.det_twist) {  // eq_high2
        int j = count_ge(m, 1);
        for (int p = 1; p <= j; ++p) xi_ops(+1, p, m[p - 1], ops);
        for (int p = j + 1; p <= l; ++p) {
          ops.push_back({+1, p, -1});
          ops.push_back({-1, p, -1});
        }
        ops.push_back({0, 0, -1});  // phi_{-1/2}
      } else {
        for (int p = 1; p <= l; ++p) xi_ops(+1, p, m[p - 1], ops);
      }
      break;
    }
    case PairKind::pin_bt:
    case PairKind::pin_b: {
      int upto = r.branch == "h2" ? l - 1 : l;
      for (int p = 1; p <= upto; ++p) sigma_ops(+1, p, m[p - 1], ops);
      if (r.branch == "h2") sigma_ops(-1, l, m[l - 1], ops);
      break;
    }
    case PairKind::spin_odd_bt:
    case PairKind::spin_odd_b: {
      for (int p = 1; p <= l; ++p) sigma_ops(+1, p, m[p - 1], ops);
      if (r.branch == "odd") ops.push_back({0, 0, 0});  // phi_0
      break;
    }
    default:
      throw std::invalid_argument("build_hwv: unhandled fermionic pair");
  }
  return apply_product(cfg, ops, vacuum(cfg));
}

StateVector build_bosonic(const HwvRecipe& r, const PairConfig& cfg) {
  const auto& m = r.label.parts;
  const int l = cfg.l;
  auto mk = [&](int k) { return k >= 1 && k <= l ? m[k - 1] : 0; };

  switch (r.pair.kind) {
    case PairKind::gl_bose: {
      // eq_vec: Gamma^+ factors down to the last positive part, Gamma^-
      // factors from the first negative part.
      StateVector v = vacuum(cfg);
      for (int p = 1; p <= l; ++p) {
        if (mk(p) <= 0) continue;
        int e = mk(p) - std::max(mk(p + 1), 0);
        if (e > 0) v = creator_product(v, gamma_vector_plus(cfg, p, e));
      }
      for (int b = 1; b <= l; ++b) {
        if (mk(b) >= 0) continue;
        int e = std::min(mk(b - 1), 0) - mk(b);
        if (e > 0) v = creator_product(v, gamma_vector_minus(cfg, b, e));
      }
      return v;
    }
    case PairKind::sp_d:
    case PairKind::osp_d: {
      StateVector v = vacuum(cfg);
      for (int p = 1; p <= l; ++p) {
        int e = mk(p) - mk(p + 1);
        if (e > 0) v = creator_product(v, gamma_vector_plus(cfg, p, e));
      }
      return v;
    }
    case PairKind::o_even_c:
    case PairKind::o_odd_c: {
      StateVector v = vacuum(cfg);
      if (r.label.det_twist) {  // eq_hwt4 and its odd analogue
        int j = count_ge(m, 1);
        for (int p = 1; p < j; ++p) {
          int e = mk(p) - mk(p + 1);
          if (e > 0) v = creator_product(v, gamma_vector_plus(cfg, p, e));
        }
        if (j >= 1 && mk(j) - 1 > 0)
          v = creator_product(v, gamma_vector_plus(cfg, j, mk(j) - 1));
        v = creator_product(v, r.pair.kind == PairKind::o_even_c
                                   ? gamma_det_vector(cfg, j)
                                   : gamma_tilde_det_vector(cfg, j));
        return v;
      }
      int upto = r.branch == "h2" ? l - 1 : l;
      for (int p = 1; p <= upto; ++p) {
        int e = mk(p) - (p == l ? 0 : mk(p + 1));
        if (e > 0) v = creator_product(v, gamma_vector_plus(cfg, p, e));
      }
      if (r.branch == "h2" && mk(l) > 0)
        v = creator_product(v, gamma_tilde_plus_vector(cfg, mk(l)));
      return v;
    }
    default:
      throw std::invalid_argument("build_hwv: unhandled bosonic pair");
  }
}

}  // namespace

StateVector build_hwv(const HwvRecipe& r) {
  auto val = validate_label(r.label);
  if (!val.ok) throw std::invalid_argument("build_hwv: invalid label: " + val.reason);
  if (r.label.group != r.pair.group())
    throw std::invalid_argument("build_hwv: label group does not match the pair");
  auto allowed = r.pair.branches(r.label);
  if (std::find(allowed.begin(), allowed.end(), r.branch) == allowed.end())
    throw std::invalid_argument("build_hwv: branch '" + r.branch + "' not admissible for " +
                                r.label.str());
  PairConfig cfg = r.pair.config();
  return cfg.bosonic ? build_bosonic(r, cfg) : build_fermionic(r, cfg);
}

HwvReport verify_hwv(const DualPair& pair, const StateVector& v) {
  if (v.is_zero()) throw std::invalid_argument("verify_hwv: zero vector");
  PairConfig cfg = pair.config();
  HwvReport rep;

  FlavorBlock blk{1, cfg.l, cfg.has_neutral()};
  for (const auto& g : finite_raising(cfg, pair.style(), blk)) {
    if (!apply_finite_gen(cfg, g, v).is_zero()) {
      rep.failed_generator = g.str();
      return rep;
    }
  }
  int W = v.degree2() / 2 + 3;
  for (const auto& g : infinite_gens(pair.algebra(), W, +1)) {
    if (!apply_infinite_gen(cfg, g, v).is_zero()) {
      rep.failed_generator = g.str();
      return rep;
    }
  }

  rep.ok = true;
  rep.finite_weight = finite_weight_of(cfg, v, blk);
  Rat c = cfg.central_charge();
  if (pair.algebra() == Algebra::A)
    rep.infinite_weight = weight_from_lambdas_A(diag_evals_A(cfg, v, W), c);
  else
    rep.infinite_weight =
        weight_from_lambdas_subalg(pair.algebra(), diag_evals_subalg(cfg, pair.algebra(), v, W), c);
  return rep;
}

}  // namespace fockdual
