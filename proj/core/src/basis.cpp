#include "leibniz/basis.hpp"

#include <algorithm>

#include "leibniz/rr7.hpp"

namespace leibniz {

namespace {

struct Run {
  int var;
  int len;
};

std::vector<Run> runs_of(const Word &w) {
  std::vector<Run> rs;
  for (int v : w) {
    if (!rs.empty() && rs.back().var == v)
      ++rs.back().len;
    else
      rs.push_back({v, 1});
  }
  return rs;
}

/// Lead-exponent shape x_{j1}^{(m1)} x_{j2}^{(m2)} ... x_{jn}^{(mn)} with the
/// tail variables strictly ascending and distinct from j1.
struct LeadExpShape {
  int j1, m1;
  std::vector<Run> tail;
};

std::optional<LeadExpShape> parse_lead_exp(const Word &w) {
  auto rs = runs_of(w);
  LeadExpShape s{rs[0].var, rs[0].len, {}};
  int prev = 0;
  for (std::size_t i = 1; i < rs.size(); ++i) {
    if (rs[i].var == s.j1 || rs[i].var <= prev)
      return std::nullopt;
    prev = rs[i].var;
    s.tail.push_back(rs[i]);
  }
  return s;
}

/// Lead-once shape x_{j1} x_{j2}^{(m2)} [middles ascending] x_{j1}^{(t)}.
struct LeadOnceShape {
  int j1, j2, m2;
  std::vector<Run> middles;
  int t; // trailing copies of j1 (m_{j1} = 1 + t)
};

std::optional<LeadOnceShape> parse_lead_once(const Word &w) {
  if (w.size() < 2)
    return std::nullopt;
  auto rs = runs_of(w);
  if (rs[0].len != 1 || rs.size() < 2)
    return std::nullopt;
  LeadOnceShape s{rs[0].var, rs[1].var, rs[1].len, {}, 0};
  if (s.j2 == s.j1)
    return std::nullopt;
  std::size_t last = rs.size() - 1;
  bool trailing = last >= 2 && rs[last].var == s.j1;
  if (trailing)
    s.t = rs[last].len;
  std::size_t end = trailing ? last : rs.size();
  int prev = 0;
  for (std::size_t i = 2; i < end; ++i) {
    if (rs[i].var == s.j1 || rs[i].var == s.j2 || rs[i].var <= prev)
      return std::nullopt;
    prev = rs[i].var;
    s.middles.push_back(rs[i]);
  }
  return s;
}

bool all_middles_below(const LeadOnceShape &s, int bound) {
  for (auto &m : s.middles)
    if (m.var >= bound)
      return false;
  return true;
}

struct Caps {
  bool finite = false;
  int q = 0;
  bool char2 = false;
  RR7Case::Kind rr7 = RR7Case::Alpha0;
};

// --- B2-style sets (L2, and the n>=2 family of RR3) ---------------------

bool b2_family(const LeadOnceShape &s, const Caps &cp, bool rr3) {
  if (s.j2 >= s.j1)
    return false;
  if (!all_middles_below(s, s.j1))
    return false;
  if (!cp.finite)
    return true;
  const int q = cp.q;
  if (s.m2 < 1 || s.m2 > q)
    return false;
  for (auto &m : s.middles)
    if (m.len >= q)
      return false;
  if (s.t >= q)
    return false;
  if (!rr3) { // L2
    if (s.t == 0) {
      if (s.m2 >= q)
        return false;
      if (!s.middles.empty() && s.j2 > s.middles.front().var)
        return false; // j2 < j3 < ... < j_{n-1} < j1
    }
  } else { // RR3
    if (s.m2 == q && s.t == 0)
      return false;
    if (s.m2 == 1 && s.t == 0 && !s.middles.empty() &&
        s.j2 > s.middles.front().var)
      return false;
  }
  return true;
}

bool in_l2_basis(const Word &w, const Caps &cp) {
  if (w.size() == 1)
    return true; // x_i
  auto s = parse_lead_once(w);
  return s && b2_family(*s, cp, false);
}

bool in_l3_basis(const Word &w, const Caps &) {
  if (w.size() == 1)
    return true;
  if (w.size() == 2)
    return w[0] <= w[1]; // x_j x_k with j <= k
  return false;
}

bool in_rr3_basis(const Word &w, const Caps &cp) {
  if (w.size() == 1)
    return true;
  if (w.size() == 2) {
    // quadratic monomials x_j x_k; in characteristic 2, j >= k
    if (!cp.char2 || w[0] >= w[1])
      return true;
  }
  auto s = parse_lead_once(w);
  return s && b2_family(*s, cp, true);
}

// --- B4-style sets (L4/RR11, RR6, RR7, RR9) ------------------------------

bool in_l4_basis(const Word &w, const Caps &cp) {
  auto s = parse_lead_exp(w);
  if (!s)
    return false;
  if (!cp.finite)
    return true;
  if (s->m1 > cp.q)
    return false;
  for (auto &r : s->tail)
    if (r.len >= cp.q)
      return false;
  return true;
}

bool in_rr6_basis(const Word &w, const Caps &cp) {
  auto s = parse_lead_exp(w);
  if (!s)
    return false;
  if (!cp.finite)
    return true;
  const int q = cp.q;
  if (q % 2 == 1) {
    if (s->m1 > q)
      return false;
    for (auto &r : s->tail)
      if (r.len >= q)
        return false;
    return true;
  }
  // q even
  if (s->m1 >= 2 * q)
    return false;
  for (std::size_t i = 0; i < s->tail.size(); ++i) {
    int cap = i == 0 ? 2 * q - 1 : q;
    if (s->tail[i].len >= cap)
      return false;
  }
  if (s->m1 > 1 && !s->tail.empty() && s->tail[0].len >= q)
    return false;
  return true;
}

bool in_rr7_basis(const Word &w, const Caps &cp) {
  auto s = parse_lead_exp(w);
  if (!s)
    return false;
  if (!cp.finite)
    return true;
  const int q = cp.q;
  for (std::size_t i = 1; i < s->tail.size(); ++i)
    if (s->tail[i].len >= q)
      return false;
  int m2 = s->tail.empty() ? 1 : s->tail[0].len;
  if (cp.rr7 == RR7Case::Alpha0 || cp.rr7 == RR7Case::DistinctRootsInK)
    return s->m1 <= q && m2 < q;
  // double root or irreducible, alpha != 0
  if (s->m1 == 1)
    return m2 < 2 * q - 1;
  return s->m1 < 2 * q && m2 < q;
}

bool in_rr9_basis(const Word &w, const Caps &cp) {
  auto s = parse_lead_exp(w);
  if (!s)
    return false;
  if (!cp.finite)
    return true;
  const int q = cp.q;
  int n = 1 + int(s->tail.size());
  if (n == 1)
    return s->m1 <= q + 1;
  if (n == 2) {
    int m2 = s->tail[0].len;
    if (s->m1 > q || m2 > q)
      return false;
    if (s->m1 > 1 && m2 >= q)
      return false;
    if (s->m1 == 1 && m2 == 1 && s->j1 > s->tail[0].var)
      return false;
    return true;
  }
  if (s->m1 > q)
    return false;
  for (auto &r : s->tail)
    if (r.len >= q)
      return false;
  return true;
}

// --- RR2 ------------------------------------------------------------------

/// i-family x_{i1} x_{i2}^{(m_{i2})} [middles] x_{i1}^{(m_{i1}-1)}.
/// The W1 clauses are implemented as resolved against the rank oracle:
/// clause (ii) keeps "i1 below the later variables" but not the corollary's
/// literal "m_{i1} > 1", which contradicts the codimension 2n-1 already at
/// multilinear degree 5 (see decisions in the verification reports).
bool rr2_i_family(const LeadOnceShape &s, const Caps &cp) {
  int m1 = 1 + s.t;
  if (!s.middles.empty()) {
    int i3 = s.middles.front().var;
    if (s.j1 < s.j2 && s.j2 < i3)
      return false; // (i1,i2,i3) ascending
    // W1 = three smallest of {i1,i2,middles}
    std::vector<int> vars{s.j1, s.j2};
    for (auto &m : s.middles)
      vars.push_back(m.var);
    std::sort(vars.begin(), vars.end());
    int w1max = vars[std::min<std::size_t>(2, vars.size() - 1)];
    bool i1_in = s.j1 <= w1max;
    bool i2_in = s.j2 <= w1max;
    if (!i1_in) {
      if (m1 != 1)
        return false;
      for (auto &m : s.middles)
        if (s.j2 > m.var)
          return false;
    }
    if (!i2_in) {
      for (auto &m : s.middles)
        if (s.j1 > m.var)
          return false;
    }
  }
  if (!cp.finite)
    return true;
  const int q = cp.q;
  if (m1 > q || s.m2 > q)
    return false;
  for (auto &m : s.middles)
    if (m.len >= q)
      return false;
  if (m1 == 1 && s.m2 == 1)
    return false; // "if m_{i1} = 1 then m_{i2} > 1"
  if (s.middles.empty()) {
    if (m1 > 1 && s.m2 >= q)
      return false; // two-variable clause
  } else {
    int i3 = s.middles.front().var;
    if (s.j2 < s.j1 && s.j1 < i3)
      return false; // "i2 < i1 < i3 does not occur"
    // W1 = {i1, i2, i3} case
    std::vector<int> vars{s.j1, s.j2};
    for (auto &m : s.middles)
      vars.push_back(m.var);
    std::sort(vars.begin(), vars.end());
    if (vars.size() >= 3 &&
        ((s.j1 == vars[0] || s.j1 == vars[1] || s.j1 == vars[2]) &&
         (s.j2 == vars[0] || s.j2 == vars[1] || s.j2 == vars[2]) &&
         (i3 == vars[0] || i3 == vars[1] || i3 == vars[2]))) {
      if (s.j1 < s.j2 && s.j1 < i3 && m1 != 1)
        return false;
      if (s.j2 < i3 && i3 < s.j1 && m1 <= 1)
        return false;
      if (i3 < s.j1 && i3 < s.j2 && m1 > 1 && s.m2 >= q)
        return false;
    }
  }
  return true;
}

/// j-family x_{j1}^{(m1)} x_{j2}^{(m2)} ... with m1 >= 2 when three or more
/// variables occur (the theorem's second normal form has a nonlinear lead);
/// with m1 = 1 those words coincide with i-family words.
bool rr2_j_family(const LeadExpShape &s, const Caps &cp) {
  if (s.tail.size() >= 2) {
    if (s.m1 < 2)
      return false;
    int j2 = s.tail[0].var, j3 = s.tail[1].var;
    if (j2 < s.j1 && s.tail[1].len > 1 && s.j1 > j3)
      return false;
  } else if (s.tail.size() == 1) {
    if (s.tail[0].len > 1 && s.j1 > s.tail[0].var)
      return false; // quadratic family: m_{j2} > 1 forces j1 < j2
  }
  if (!cp.finite)
    return true;
  const int q = cp.q;
  if (s.m1 > q)
    return false;
  for (auto &r : s.tail)
    if (r.len >= q)
      return false;
  return true;
}

bool in_rr2_basis(const Word &w, const Caps &cp) {
  auto rs = runs_of(w);
  if (rs.size() == 1) { // x^(m)
    if (!cp.finite)
      return true;
    return rs[0].len <= cp.q;
  }
  if (auto s = parse_lead_once(w))
    if (rr2_i_family(*s, cp))
      return true;
  if (auto s = parse_lead_exp(w))
    if (rr2_j_family(*s, cp))
      return true;
  return false;
}

std::vector<Word> enumerate_filtered(const std::string &name,
                                     const Multidegree &d, const Caps &cp) {
  bool (*pred)(const Word &, const Caps &) = nullptr;
  if (name == "L2")
    pred = in_l2_basis;
  else if (name == "L3")
    pred = in_l3_basis;
  else if (name == "RR3")
    pred = in_rr3_basis;
  else if (name == "L4" || name == "RR11")
    pred = in_l4_basis;
  else if (name == "RR6")
    pred = in_rr6_basis;
  else if (name == "RR7")
    pred = in_rr7_basis;
  else if (name == "RR9")
    pred = in_rr9_basis;
  else if (name == "RR2")
    pred = in_rr2_basis;
  else
    throw domain_error("no basis corollary for '" + name + "'");
  std::vector<Word> out;
  for (auto &w : enumerate_words(d))
    if (pred(w, cp))
      out.push_back(w);
  return out;
}

} // namespace

bool has_basis_corollary(const std::string &name) {
  static const std::vector<std::string> names = {
      "L2", "L3", "L4", "RR2", "RR3", "RR6", "RR7", "RR9", "RR11"};
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<Word> claimed_basis(const std::string &name, const Field &field,
                                const Multidegree &d,
                                const std::optional<Scalar> &alpha) {
  Caps cp;
  cp.finite = field.is_finite();
  cp.q = cp.finite ? int(field.q()) : 0;
  cp.char2 = field.characteristic() == 2;
  if (name == "RR7" && cp.finite) {
    if (!alpha)
      throw domain_error("RR7 basis over a finite field needs alpha");
    cp.rr7 = rr7_classify(field, *alpha).kind;
  }
  return enumerate_filtered(name, d, cp);
}

std::vector<Word> claimed_basis_infinite_rules(const std::string &name,
                                               const Multidegree &d) {
  return enumerate_filtered(name, d, Caps{});
}

std::optional<long> codimension_formula(const std::string &name, int n,
                                        bool char2) {
  if (name == "L2")
    return n == 1 ? 1 : n - 1;
  if (name == "L3")
    return n <= 2 ? 1 : 0;
  if (name == "L4" || name == "RR6" || name == "RR7" || name == "RR9" ||
      name == "RR11")
    return n;
  if (name == "RR2")
    return n == 1 ? 1 : (n == 2 ? 2 : 2 * n - 1);
  if (name == "RR3")
    return n == 1 ? 1 : (n == 2 ? (char2 ? 1 : 2) : n - 1);
  return std::nullopt;
}

} // namespace leibniz
