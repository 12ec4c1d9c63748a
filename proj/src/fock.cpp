#include "fockdual/fock.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fockdual {

namespace {

bool parity_ok(int mode2, int parity) { return ((mode2 % 2) + 2) % 2 == parity; }

// (-1)^k for possibly negative k.
int neg_pow(long long k) { return (k % 2 + 2) % 2 == 0 ? 1 : -1; }

}  // namespace

void PairConfig::validate() const {
  if (l < 0) throw std::invalid_argument("PairConfig: l must be >= 0");
  if (bosonic && !half_modes)
    throw std::invalid_argument("PairConfig: bosonic ghosts are indexed by 1/2+Z");
  switch (neutral) {
    case NeutralField::phi:
      if (twisted) throw std::invalid_argument("PairConfig: phi occurs in untwisted rows");
      break;
    case NeutralField::varphi:
      if (!twisted || half_modes || bosonic)
        throw std::invalid_argument("PairConfig: varphi requires twisted fermionic Z row");
      break;
    case NeutralField::chi:
      if (!twisted) throw std::invalid_argument("PairConfig: chi requires a twisted row");
      break;
    default: break;
  }
}

Rat PairConfig::central_charge() const {
  Rat c = bosonic ? Rat(-l) : Rat(l);
  if (neutral_fermionic()) c += Rat(1, 2);
  if (neutral == NeutralField::chi) c -= Rat(1, 2);
  return c;
}

std::string PairConfig::str() const {
  std::string s = "Fock(l=" + std::to_string(l);
  s += bosonic ? ",boson" : ",fermion";
  s += half_modes ? ",halfZ" : ",Z";
  s += ",neutral=";
  switch (neutral) {
    case NeutralField::none: s += "none"; break;
    case NeutralField::phi: s += "phi"; break;
    case NeutralField::varphi: s += "varphi"; break;
    case NeutralField::chi: s += "chi"; break;
  }
  s += twisted ? ",twisted)" : ",untwisted)";
  return s;
}

PairConfig PairConfig::parse(const std::string& in) {
  if (in.size() < 7 || in.substr(0, 5) != "Fock(" || in.back() != ')')
    throw std::invalid_argument("PairConfig: expected Fock(...): " + in);
  std::string body = in.substr(5, in.size() - 6);
  PairConfig cfg;
  cfg.neutral = NeutralField::none;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.rfind("l=", 0) == 0)
      cfg.l = std::stoi(tok.substr(2));
    else if (tok == "fermion")
      cfg.bosonic = false;
    else if (tok == "boson")
      cfg.bosonic = true;
    else if (tok == "halfZ")
      cfg.half_modes = true;
    else if (tok == "Z")
      cfg.half_modes = false;
    else if (tok == "neutral=none")
      cfg.neutral = NeutralField::none;
    else if (tok == "neutral=phi")
      cfg.neutral = NeutralField::phi;
    else if (tok == "neutral=varphi")
      cfg.neutral = NeutralField::varphi;
    else if (tok == "neutral=chi")
      cfg.neutral = NeutralField::chi;
    else if (tok == "untwisted")
      cfg.twisted = false;
    else if (tok == "twisted")
      cfg.twisted = true;
    else
      throw std::invalid_argument("PairConfig: unknown token '" + tok + "'");
  }
  cfg.validate();
  return cfg;
}

std::string format_mode2(int m2) {
  if (m2 % 2 == 0) return std::to_string(m2 / 2);
  return std::to_string(m2) + "/2";
}

int parse_mode2(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return 2 * std::stoi(s);
  if (s.substr(slash + 1) != "2") throw std::invalid_argument("mode: bad denominator in " + s);
  return std::stoi(s.substr(0, slash));
}

std::string FockState::str() const {
  if (empty()) return "|0>";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& slot, const std::vector<int>& modes) {
    if (modes.empty()) return;
    if (!first) os << ' ';
    first = false;
    os << slot << ":[";
    for (size_t i = 0; i < modes.size(); ++i) {
      if (i) os << ',';
      os << format_mode2(modes[i]);
    }
    os << ']';
  };
  for (size_t p = 0; p < charged.size(); ++p) {
    emit("p" + std::to_string(p + 1) + "+", charged[p][0]);
    emit("p" + std::to_string(p + 1) + "-", charged[p][1]);
  }
  emit("n", neutral);
  return os.str();
}

FockState parse_state(const PairConfig& cfg, const std::string& in) {
  FockState s(cfg.l);
  if (in == "|0>") return s;
  std::stringstream ss(in);
  std::string tok;
  while (ss >> tok) {
    auto colon = tok.find(':');
    if (colon == std::string::npos || tok.size() < colon + 3 || tok[colon + 1] != '[' ||
        tok.back() != ']')
      throw std::invalid_argument("FockState: bad slot '" + tok + "'");
    std::string slot = tok.substr(0, colon);
    std::string body = tok.substr(colon + 2, tok.size() - colon - 3);
    std::vector<int>* dest = nullptr;
    if (slot == "n") {
      dest = &s.neutral;
    } else if (slot.size() >= 3 && slot[0] == 'p') {
      int p = std::stoi(slot.substr(1, slot.size() - 2));
      if (p < 1 || p > cfg.l) throw std::invalid_argument("FockState: flavor out of range");
      char c = slot.back();
      dest = &s.charged[p - 1][c == '+' ? 0 : 1];
      if (c != '+' && c != '-') throw std::invalid_argument("FockState: bad slot charge");
    } else {
      throw std::invalid_argument("FockState: bad slot name '" + slot + "'");
    }
    std::stringstream bs(body);
    std::string m;
    while (std::getline(bs, m, ',')) dest->push_back(parse_mode2(m));
    for (size_t i = 1; i < dest->size(); ++i)
      if ((*dest)[i - 1] < (*dest)[i])
        throw std::invalid_argument("FockState: modes not in decreasing order");
  }
  return s;
}

int StateVector::degree2() const {
  if (terms.empty()) return 0;
  int d = terms.begin()->first.degree2();
  for (const auto& [s, c] : terms)
    if (s.degree2() != d) throw std::logic_error("StateVector: not degree-homogeneous");
  return d;
}

std::string StateVector::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str() << ")·" << s.str();
  }
  return os.str();
}

std::string StateVector::json() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [s, c] : terms) {
    if (!first) os << ',';
    first = false;
    os << '"' << s.str() << "\":\"" << c.str() << '"';
  }
  os << '}';
  return os.str();
}

std::string FieldOp::str() const {
  std::ostringstream os;
  if (charge == 0)
    os << "n_" << format_mode2(mode2);
  else
    os << 'p' << flavor << (charge > 0 ? '+' : '-') << '_' << format_mode2(mode2);
  return os.str();
}

StateVector vacuum(const PairConfig& cfg) {
  StateVector v;
  v.add(FockState(cfg.l), Rat(1));
  return v;
}

Rat degree_of(const FockState& s) { return Rat::half(s.degree2()); }

namespace {

bool op_is_fermionic(const PairConfig& cfg, const FieldOp& op) {
  if (op.charge != 0) return !cfg.bosonic;
  return cfg.neutral_fermionic();
}

bool op_is_creator(const PairConfig& cfg, const FieldOp& op) {
  if (op.charge != 0) {
    if (cfg.bosonic || cfg.half_modes) return op.mode2 < 0;
    // Z-indexed fermions: psi^+_n creates for n <= -1, psi^-_n for n <= 0.
    return op.charge > 0 ? op.mode2 <= -2 : op.mode2 <= 0;
  }
  switch (cfg.neutral) {
    case NeutralField::phi: return cfg.half_modes ? op.mode2 < 0 : op.mode2 <= 0;
    case NeutralField::varphi: return op.mode2 <= 0;
    case NeutralField::chi: return op.mode2 < 0;
    default: throw std::invalid_argument("apply_mode: no neutral field in this config");
  }
}

// Contraction value of the annihilator (field a, mode m) against the matching
// creator (conjugate field, mode -m).
Rat contraction(const PairConfig& cfg, const FieldOp& a) {
  if (a.charge != 0) {
    if (!cfg.bosonic) return Rat(1);            // [psi^+_m, psi^-_n]_+ = delta
    return a.charge > 0 ? Rat(1) : Rat(-1);     // [gamma^+_m, gamma^-_n] = delta
  }
  switch (cfg.neutral) {
    case NeutralField::phi: return Rat(1);                          // delta
    case NeutralField::varphi: return Rat(neg_pow(a.mode2 / 2));    // (-1)^m delta
    case NeutralField::chi: return Rat(neg_pow((a.mode2 + 1) / 2)); // (-1)^{m+1/2} delta
    default: throw std::invalid_argument("apply_mode: no neutral field");
  }
}

// Number of fermionic creation operators strictly before the given slot in
// the canonical product order (flavor-major, + before -, neutral last).
int fermionic_prefix(const PairConfig& cfg, const FockState& s, int charge, int flavor) {
  int count = 0;
  if (!cfg.bosonic) {
    int full = (charge == 0) ? cfg.l : flavor - 1;
    for (int p = 0; p < full; ++p)
      count += (int)(s.charged[p][0].size() + s.charged[p][1].size());
    if (charge < 0) count += (int)s.charged[flavor - 1][0].size();
  }
  return count;
}

void apply_to_state(const PairConfig& cfg, const FieldOp& op, const FockState& s,
                    const Rat& coef, StateVector& out) {
  const bool fermionic = op_is_fermionic(cfg, op);
  const bool creator = op_is_creator(cfg, op);
  const int slot_charge = creator ? op.charge : -op.charge;  // annihilators contract the
                                                             // conjugate slot
  std::vector<int>* list;
  FockState t = s;
  if (op.charge != 0)
    list = &t.charged[op.flavor - 1][slot_charge > 0 ? 0 : 1];
  else
    list = &t.neutral;

  if (creator) {
    int target = op.mode2;
    // Neutral zero mode squares to 1/2 rather than vanishing.
    if (op.charge == 0 && target == 0 &&
        std::find(list->begin(), list->end(), 0) != list->end()) {
      int cross = fermionic ? fermionic_prefix(cfg, s, 0, 0) : 0;
      list->erase(std::find(list->begin(), list->end(), 0));
      out.add(t, coef * Rat(1, 2) * Rat(cross % 2 ? -1 : 1));
      return;
    }
    auto pos = list->begin();
    while (pos != list->end() && *pos > target) ++pos;
    if (fermionic && pos != list->end() && *pos == target) return;  // square of a fermion
    int cross = 0;
    if (fermionic) {
      cross = fermionic_prefix(cfg, s, op.charge, op.flavor) + (int)(pos - list->begin());
    }
    list->insert(pos, target);
    out.add(t, coef * Rat(cross % 2 ? -1 : 1));
    return;
  }

  // Annihilator: contract against the partner mode in the conjugate slot.
  int partner = -op.mode2;
  auto pos = std::find(list->begin(), list->end(), partner);
  if (pos == list->end()) return;  // passes everything and kills |0>
  Rat scal = contraction(cfg, op);
  if (fermionic) {
    int cross = fermionic_prefix(cfg, s, slot_charge, op.flavor) + (int)(pos - list->begin());
    if (cross % 2) scal = -scal;
    list->erase(pos);
    out.add(t, coef * scal);
  } else {
    long long mult = std::count(list->begin(), list->end(), partner);
    list->erase(pos);
    out.add(t, coef * scal * Rat(mult));
  }
}

}  // namespace

StateVector apply_mode(const PairConfig& cfg, const FieldOp& op, const StateVector& v) {
  if (op.charge != 0) {
    if (op.flavor < 1 || op.flavor > cfg.l)
      throw std::invalid_argument("apply_mode: flavor out of range");
    if (!parity_ok(op.mode2, cfg.charged_parity()))
      throw std::invalid_argument("apply_mode: mode parity mismatch for charged field");
  } else {
    if (!cfg.has_neutral())
      throw std::invalid_argument("apply_mode: config has no neutral field");
    if (!parity_ok(op.mode2, cfg.neutral_parity()))
      throw std::invalid_argument("apply_mode: mode parity mismatch for neutral field");
  }
  StateVector out;
  for (const auto& [s, c] : v.terms) apply_to_state(cfg, op, s, c, out);
  return out;
}

Rat vev_pair(const PairConfig& cfg, const FieldOp& a, const FieldOp& b) {
  StateVector w = apply_mode(cfg, a, apply_mode(cfg, b, vacuum(cfg)));
  auto it = w.terms.find(FockState(cfg.l));
  return it == w.terms.end() ? Rat(0) : it->second;
}

StateVector apply_normal_pair(const PairConfig& cfg, const FieldOp& a, const FieldOp& b,
                              const StateVector& v) {
  StateVector w = apply_mode(cfg, a, apply_mode(cfg, b, v));
  Rat vev = vev_pair(cfg, a, b);
  if (!vev.is_zero()) w -= vev * StateVector(v);
  return w;
}

namespace {

// All decreasing mode lists for one slot with degree budget d2max.
// Fermionic slots: strictly decreasing; bosonic: weakly decreasing.
void slot_lists(const std::vector<int>& modes_desc_by_degree, bool fermionic, int d2max,
                std::vector<std::vector<int>>& out, std::vector<int>& cur, size_t from,
                int used) {
  out.push_back(cur);
  for (size_t i = from; i < modes_desc_by_degree.size(); ++i) {
    int m2 = modes_desc_by_degree[i];
    int cost = -m2;
    if (used + cost > d2max) continue;
    cur.push_back(m2);
    slot_lists(modes_desc_by_degree, fermionic, d2max, out, cur, i + (fermionic ? 1 : 0),
               used + cost);
    cur.pop_back();
  }
}

std::vector<int> creation_modes(int parity, int lowest_allowed2, int d2max) {
  // Modes m2 with lowest_allowed2 >= m2 and degree -m2/2 <= d2max/2, listed in
  // decreasing order (canonical slot order).
  std::vector<int> modes;
  for (int m2 = lowest_allowed2; -m2 <= d2max; --m2)
    if (parity_ok(m2, parity)) modes.push_back(m2);
  return modes;
}

}  // namespace

std::vector<FockState> enumerate_states(const PairConfig& cfg, int d2max) {
  cfg.validate();
  if (d2max < 0) throw std::invalid_argument("enumerate_states: d2max < 0");

  // Per-slot candidate mode lists.
  std::vector<int> plus_modes, minus_modes;
  if (cfg.bosonic || cfg.half_modes) {
    plus_modes = minus_modes = creation_modes(cfg.charged_parity(), -1, d2max);
  } else {
    plus_modes = creation_modes(0, -2, d2max);
    minus_modes = creation_modes(0, 0, d2max);
  }
  std::vector<int> neutral_modes;
  if (cfg.has_neutral()) {
    int lowest = 0;
    if (cfg.neutral == NeutralField::chi || (cfg.neutral == NeutralField::phi && cfg.half_modes))
      lowest = -1;
    neutral_modes = creation_modes(cfg.neutral_parity(), lowest, d2max);
  }

  std::vector<std::vector<std::vector<int>>> slot_choices;  // per slot
  auto gen = [&](const std::vector<int>& modes, bool fermionic) {
    std::vector<std::vector<int>> lists;
    std::vector<int> cur;
    slot_lists(modes, fermionic, d2max, lists, cur, 0, 0);
    return lists;
  };
  for (int p = 0; p < cfg.l; ++p) {
    slot_choices.push_back(gen(plus_modes, !cfg.bosonic));
    slot_choices.push_back(gen(minus_modes, !cfg.bosonic));
  }
  if (cfg.has_neutral()) slot_choices.push_back(gen(neutral_modes, cfg.neutral_fermionic()));

  std::vector<FockState> out;
  FockState cur(cfg.l);
  auto rec = [&](auto&& self, size_t slot, int used) -> void {
    if (slot == slot_choices.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& lst : slot_choices[slot]) {
      int cost = 0;
      for (int m2 : lst) cost -= m2;
      if (used + cost > d2max) continue;
      if (slot < 2 * (size_t)cfg.l)
        cur.charged[slot / 2][slot % 2] = lst;
      else
        cur.neutral = lst;
      self(self, slot + 1, used + cost);
    }
    if (slot < 2 * (size_t)cfg.l)
      cur.charged[slot / 2][slot % 2].clear();
    else
      cur.neutral.clear();
  };
  rec(rec, 0, 0);

  std::sort(out.begin(), out.end(), [](const FockState& a, const FockState& b) {
    int da = a.degree2(), db = b.degree2();
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

long long graded_dimension(const PairConfig& cfg, int d2) {
  if (d2 < 0) return 0;
  long long n = 0;
  for (const auto& s : enumerate_states(cfg, d2))
    if (s.degree2() == d2) ++n;
  return n;
}

}  // namespace fockdual
