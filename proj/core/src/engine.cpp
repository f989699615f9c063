#include "leibniz/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <set>

namespace leibniz {

Element zero_element(const AlgebraDef &A) {
  return Element(std::size_t(A.dim()), A.field().zero());
}

Element basis_element(const AlgebraDef &A, int i) {
  Element e = zero_element(A);
  e[std::size_t(i)] = A.field().one();
  return e;
}

Element multiply(const AlgebraDef &A, const Element &a, const Element &b) {
  const Field &F = A.field();
  const int d = A.dim();
  if (int(a.size()) != d || int(b.size()) != d)
    throw domain_error("multiply: dimension mismatch");
  Element out = zero_element(A);
  for (int i = 0; i < d; ++i) {
    if (F.is_zero(a[std::size_t(i)]))
      continue;
    for (int j = 0; j < d; ++j) {
      if (F.is_zero(b[std::size_t(j)]))
        continue;
      Scalar ab = F.mul(a[std::size_t(i)], b[std::size_t(j)]);
      for (int k = 0; k < d; ++k) {
        const Scalar &ck = A.c(i, j, k);
        if (!F.is_zero(ck))
          out[std::size_t(k)] = F.add(out[std::size_t(k)], F.mul(ab, ck));
      }
    }
  }
  return out;
}

bool element_is_zero(const AlgebraDef &A, const Element &e) {
  for (auto &x : e)
    if (!A.field().is_zero(x))
      return false;
  return true;
}

std::string element_to_string(const AlgebraDef &A, const Element &e) {
  const Field &F = A.field();
  std::string out;
  for (int k = 0; k < A.dim(); ++k) {
    const Scalar &c = e[std::size_t(k)];
    if (F.is_zero(c))
      continue;
    if (!out.empty())
      out += " + ";
    if (!F.is_one(c))
      out += F.to_string(c) + " ";
    out += "e" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

Element evaluate(const AlgebraDef &A, const LeibnizPoly &f,
                 const std::map<int, Element> &t) {
  const Field &F = A.field();
  Element acc = zero_element(A);
  for (auto &[w, c] : f.terms()) {
    auto at = [&](int v) -> const Element & {
      auto it = t.find(v);
      if (it == t.end())
        throw domain_error("evaluate: no assignment for x" + std::to_string(v));
      return it->second;
    };
    Element cur = at(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i)
      cur = multiply(A, cur, at(w[i]));
    for (int k = 0; k < A.dim(); ++k)
      acc[std::size_t(k)] = F.add(acc[std::size_t(k)],
                                  F.mul(c, cur[std::size_t(k)]));
  }
  return acc;
}

GenericElement multiply_generic(const AlgebraDef &A, const GenericElement &a,
                                const GenericElement &b) {
  const Field &F = A.field();
  const int d = A.dim();
  GenericElement out;
  out.assign(std::size_t(d), CommPoly(F));
  for (int i = 0; i < d; ++i) {
    if (a[std::size_t(i)].is_zero())
      continue;
    for (int j = 0; j < d; ++j) {
      if (b[std::size_t(j)].is_zero())
        continue;
      CommPoly ab = a[std::size_t(i)] * b[std::size_t(j)];
      for (int k = 0; k < d; ++k) {
        const Scalar &ck = A.c(i, j, k);
        if (!F.is_zero(ck))
          out[std::size_t(k)] = out[std::size_t(k)] + ab.scaled(ck);
      }
    }
  }
  return out;
}

GenericElement evaluate_generic(const AlgebraDef &A, const LeibnizPoly &f,
                                const std::map<int, GenericElement> &t) {
  const Field &F = A.field();
  GenericElement acc;
  acc.assign(std::size_t(A.dim()), CommPoly(F));
  for (auto &[w, c] : f.terms()) {
    auto at = [&](int v) -> const GenericElement & {
      auto it = t.find(v);
      if (it == t.end())
        throw domain_error("evaluate_generic: no assignment for x" +
                           std::to_string(v));
      return it->second;
    };
    GenericElement cur = at(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i)
      cur = multiply_generic(A, cur, at(w[i]));
    for (int k = 0; k < A.dim(); ++k)
      acc[std::size_t(k)] = acc[std::size_t(k)] + cur[std::size_t(k)].scaled(c);
  }
  return acc;
}

std::map<int, GenericElement> generic_point(const AlgebraDef &A,
                                            const std::vector<int> &vars) {
  const Field &F = A.field();
  std::map<int, GenericElement> t;
  int pos = 0;
  for (int v : vars) {
    GenericElement e;
    for (int k = 0; k < A.dim(); ++k)
      e.push_back(CommPoly::variable(F, pos * A.dim() + k));
    t.emplace(v, std::move(e));
    ++pos;
  }
  return t;
}

namespace {

bool is_multilinear_poly(const LeibnizPoly &f) {
  auto d = multidegree_of(f);
  if (!d)
    return false;
  for (auto &[v, m] : *d)
    if (m != 1)
      return false;
  return true;
}

/// Visit all tuples (vars -> elements of A).  visit returns false to stop.
template <typename Fn>
void for_each_tuple(const AlgebraDef &A, const std::vector<int> &vars,
                    bool basis_only, Fn &&visit) {
  const Field &F = A.field();
  std::vector<Element> pool;
  if (basis_only) {
    for (int i = 0; i < A.dim(); ++i)
      pool.push_back(basis_element(A, i));
  } else {
    std::vector<Scalar> elems = F.elements();
    std::vector<std::size_t> idx(std::size_t(A.dim()), 0);
    for (;;) {
      Element e;
      for (int k = 0; k < A.dim(); ++k)
        e.push_back(elems[idx[std::size_t(k)]]);
      pool.push_back(std::move(e));
      int pos = 0;
      while (pos < A.dim()) {
        if (++idx[std::size_t(pos)] < elems.size())
          break;
        idx[std::size_t(pos)] = 0;
        ++pos;
      }
      if (pos == A.dim())
        break;
    }
  }
  std::vector<std::size_t> choice(vars.size(), 0);
  for (;;) {
    std::map<int, Element> t;
    for (std::size_t i = 0; i < vars.size(); ++i)
      t.emplace(vars[i], pool[choice[i]]);
    if (!visit(t))
      return;
    std::size_t pos = 0;
    while (pos < vars.size()) {
      if (++choice[pos] < pool.size())
        break;
      choice[pos] = 0;
      ++pos;
    }
    if (pos == vars.size())
      break;
  }
}

unsigned long long ipow(unsigned long long b, unsigned e) {
  unsigned long long r = 1;
  while (e--) {
    if (r > (1ull << 62) / (b ? b : 1))
      return ~0ull;
    r *= b;
  }
  return r;
}

} // namespace

bool is_identity(const AlgebraDef &A, const LeibnizPoly &f,
                 unsigned long long cost_cap) {
  if (f.is_zero())
    return true;
  const Field &F = A.field();
  std::vector<int> vars = variables_of(f);
  unsigned long long weight = 0;
  for (auto &[w, c] : f.terms())
    weight += w.size();

  if (is_multilinear_poly(f)) {
    bool ok = true;
    for_each_tuple(A, vars, /*basis_only=*/true,
                   [&](const std::map<int, Element> &t) {
                     if (!element_is_zero(A, evaluate(A, f, t)))
                       ok = false;
                     return ok;
                   });
    return ok;
  }

  if (F.is_finite()) {
    unsigned long long tuples =
        ipow(ipow(F.q(), unsigned(A.dim())), unsigned(vars.size()));
    if (tuples != ~0ull && tuples * weight <= cost_cap) {
      bool ok = true;
      for_each_tuple(A, vars, /*basis_only=*/false,
                     [&](const std::map<int, Element> &t) {
                       if (!element_is_zero(A, evaluate(A, f, t)))
                         ok = false;
                       return ok;
                     });
      return ok;
    }
    // exact fallback: generic evaluation, reduced by x^q = x
    GenericElement v = evaluate_generic(A, f, generic_point(A, vars));
    for (auto &coord : v)
      if (!is_zero_function(coord))
        return false;
    return true;
  }

  GenericElement v = evaluate_generic(A, f, generic_point(A, vars));
  for (auto &coord : v)
    if (!coord.is_zero())
      return false;
  return true;
}

namespace {

bool multidegree_is_multilinear(const Multidegree &d) {
  for (auto &[v, m] : d)
    if (m != 1)
      return false;
  return true;
}

// Rows of the evaluation matrix for the component's words: multilinear
// components evaluate on basis tuples, everything else on the generic point
// (Frobenius-reduced over finite fields so rank equals function-space rank).
std::vector<std::vector<Scalar>> evaluation_rows(const AlgebraDef &A,
                                                 const Multidegree &d,
                                                 std::vector<Word> &words_out,
                                                 unsigned long long cost_cap) {
  const Field &F = A.field();
  words_out = enumerate_words(d);
  std::vector<int> vars;
  for (auto &[v, m] : d)
    vars.push_back(v);

  std::vector<std::vector<Scalar>> rows;
  if (multidegree_is_multilinear(d)) {
    unsigned long long tuples = ipow(unsigned(A.dim()), unsigned(vars.size()));
    unsigned long long est = tuples * words_out.size() * unsigned(A.dim());
    if (est > cost_cap)
      throw cost_cap_exceeded(est, cost_cap);
    rows.assign(words_out.size(), {});
    std::size_t wi = 0;
    for (auto &w : words_out) {
      auto &row = rows[wi++];
      LeibnizPoly p = word_poly(F, w);
      for_each_tuple(A, vars, /*basis_only=*/true,
                     [&](const std::map<int, Element> &t) {
                       Element e = evaluate(A, p, t);
                       row.insert(row.end(), e.begin(), e.end());
                       return true;
                     });
    }
    return rows;
  }

  if (!F.is_finite() && false)
    throw domain_error("unreachable");

  // generic evaluation; shared monomial index across all words
  auto point = generic_point(A, vars);
  std::vector<GenericElement> values;
  values.reserve(words_out.size());
  std::map<CommPoly::Expt, std::size_t> columns;
  for (auto &w : words_out) {
    GenericElement v = evaluate_generic(A, word_poly(F, w), point);
    if (F.is_finite())
      for (auto &coord : v)
        coord = frobenius_reduce(coord);
    for (auto &coord : v)
      for (auto &[e, c] : coord.terms())
        columns.emplace(e, 0);
    values.push_back(std::move(v));
  }
  std::size_t idx = 0;
  for (auto &[e, i] : columns)
    i = idx++;
  std::size_t width = columns.size() * std::size_t(A.dim());
  for (auto &v : values) {
    std::vector<Scalar> row(width, F.zero());
    for (int k = 0; k < A.dim(); ++k)
      for (auto &[e, c] : v[std::size_t(k)].terms())
        row[std::size_t(k) * columns.size() + columns.at(e)] = c;
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace

std::size_t codimension(const AlgebraDef &A, const Multidegree &d,
                        unsigned long long cost_cap) {
  std::vector<Word> words;
  auto rows = evaluation_rows(A, d, words, cost_cap);
  return matrix_rank(A.field(), rows);
}

std::size_t codimension_n(const AlgebraDef &A, int n,
                          unsigned long long cost_cap) {
  return codimension(A, multilinear(n), cost_cap);
}

RowSpace evaluation_kernel(const AlgebraDef &A, const Multidegree &d,
                           unsigned long long cost_cap) {
  const Field &F = A.field();
  std::vector<Word> words;
  auto rows = evaluation_rows(A, d, words, cost_cap);
  // kernel of the evaluation map: solve x rows = 0 by eliminating an
  // augmented matrix [rows | I] and collecting the identity-side of the
  // all-zero evaluation rows.
  std::size_t n = rows.size(), width = rows.empty() ? 0 : rows.front().size();
  RowSpace elim(F, width + n);
  std::vector<std::vector<Scalar>> reduced;
  RowSpace kernel(F, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> aug(width + n, F.zero());
    for (std::size_t j = 0; j < width; ++j)
      aug[j] = rows[i][j];
    aug[width + i] = F.one();
    auto res = elim.reduce(aug);
    bool eval_zero = true;
    for (std::size_t j = 0; j < width && eval_zero; ++j)
      if (!F.is_zero(res[j]))
        eval_zero = false;
    if (eval_zero)
      kernel.add(std::vector<Scalar>(res.begin() + long(width), res.end()));
    else
      elim.add(std::move(aug));
  }
  return kernel;
}

// ---------------------------------------------------------------------------
// T-ideal machinery

namespace {

bool leq(const Multidegree &a, const Multidegree &b) {
  for (auto &[v, m] : a) {
    auto it = b.find(v);
    if (it == b.end() || it->second < m)
      return false;
  }
  return true;
}

Multidegree minus_var(const Multidegree &d, int v) {
  Multidegree e = d;
  auto it = e.find(v);
  if (it->second == 1)
    e.erase(it);
  else
    --it->second;
  return e;
}

/// Full multilinearization of one variable of a multihomogeneous g: the part
/// of g(x -> y_1 + ... + y_m) in which every y_i occurs.  By inclusion and
/// exclusion this is an integer combination of substitution instances, hence
/// a member of <g>_T over any field.
LeibnizPoly polarize_variable(const LeibnizPoly &g, int var, int deg,
                              int fresh_start) {
  const Field &F = g.field();
  LeibnizPoly sum(F);
  std::map<int, LeibnizPoly> sigma;
  for (int v : variables_of(g))
    sigma.emplace(v, var_poly(F, v));
  LeibnizPoly repl(F);
  for (int i = 0; i < deg; ++i)
    repl = repl + var_poly(F, fresh_start + i);
  sigma.insert_or_assign(var, repl);
  LeibnizPoly expanded = substitute(g, sigma);
  // keep words containing every fresh variable exactly once
  LeibnizPoly out(F);
  for (auto &[w, c] : expanded.terms()) {
    Multidegree dw = multidegree_of_word(w);
    bool ok = true;
    for (int i = 0; i < deg && ok; ++i) {
      auto it = dw.find(fresh_start + i);
      ok = it != dw.end() && it->second == 1;
    }
    if (ok)
      out.add_term(w, c);
  }
  return out;
}

/// Multihomogeneous generators prepared for component work: the parts of
/// each generator (honest members over infinite fields; finite-field regular
/// generators stay whole and are skipped here), plus their polarizations.
std::vector<LeibnizPoly> component_generators(const Field &F,
                                              const std::vector<LeibnizPoly> &gens) {
  std::vector<LeibnizPoly> out;
  auto push_with_polarizations = [&](const LeibnizPoly &g) {
    out.push_back(g);
    // polarize every nonlinear variable, iteratively
    std::vector<LeibnizPoly> queue{g};
    while (!queue.empty()) {
      LeibnizPoly cur = queue.back();
      queue.pop_back();
      auto d = multidegree_of(cur);
      if (!d)
        continue;
      int fresh = 1;
      for (auto &[v, m] : *d)
        fresh = std::max(fresh, v + 1);
      for (auto &[v, m] : *d) {
        if (m < 2)
          continue;
        LeibnizPoly pol = polarize_variable(cur, v, m, fresh);
        if (!pol.is_zero()) {
          out.push_back(pol);
          queue.push_back(pol);
        }
        break; // one variable per pass; the queue handles the rest
      }
    }
  };
  for (auto &g : gens) {
    if (g.is_zero())
      continue;
    if (multidegree_of(g)) {
      push_with_polarizations(g);
    } else if (!F.is_finite()) {
      // over an infinite field the parts of an identity are identities
      for (auto &[d, part] : multihomogeneous_parts(g))
        push_with_polarizations(part);
    }
    // finite-field regular generators are handled by the graded region
  }
  return out;
}

/// All words over the variables of d whose multidegree is <= delta.
std::vector<Multidegree> sub_multidegrees(const Multidegree &d) {
  std::vector<Multidegree> out;
  std::vector<std::pair<int, int>> items(d.begin(), d.end());
  std::vector<int> cur(items.size(), 0);
  for (;;) {
    Multidegree e;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (cur[i] > 0)
        e[items[i].first] = cur[i];
    if (!e.empty())
      out.push_back(e);
    std::size_t pos = 0;
    while (pos < items.size()) {
      if (++cur[pos] <= items[pos].second)
        break;
      cur[pos] = 0;
      ++pos;
    }
    if (pos == items.size())
      break;
  }
  std::sort(out.begin(), out.end(), [](const Multidegree &a, const Multidegree &b) {
    int ta = total_degree(a), tb = total_degree(b);
    if (ta != tb)
      return ta < tb;
    return a < b;
  });
  return out;
}

/// Ways to write e as an ordered sum of k nonzero multidegrees.
void compositions(const Multidegree &e, int k,
                  std::vector<Multidegree> &stack,
                  std::vector<std::vector<Multidegree>> &out) {
  if (k == 1) {
    if (total_degree(e) > 0) {
      stack.push_back(e);
      out.push_back(stack);
      stack.pop_back();
    }
    return;
  }
  // enumerate nonzero f <= e for the first slot
  for (auto &f : sub_multidegrees(e)) {
    bool fits = true;
    Multidegree rest;
    for (auto &[v, m] : e) {
      auto it = f.find(v);
      int used = it == f.end() ? 0 : it->second;
      if (used > m) {
        fits = false;
        break;
      }
      if (m - used > 0)
        rest[v] = m - used;
    }
    if (!fits || total_degree(rest) < k - 1)
      continue;
    stack.push_back(f);
    compositions(rest, k - 1, stack, out);
    stack.pop_back();
  }
}

struct ComponentTable {
  const Field &F;
  std::map<Multidegree, std::vector<Word>> words;
  std::map<Multidegree, std::map<Word, std::size_t, WordLess>> index;
  std::map<Multidegree, RowSpace> spaces;

  explicit ComponentTable(const Field &f) : F(f) {}

  void ensure(const Multidegree &e) {
    if (words.count(e))
      return;
    auto ws = enumerate_words(e);
    std::map<Word, std::size_t, WordLess> ix;
    for (std::size_t i = 0; i < ws.size(); ++i)
      ix.emplace(ws[i], i);
    spaces.emplace(e, RowSpace(F, ws.size()));
    words.emplace(e, std::move(ws));
    index.emplace(e, std::move(ix));
  }

  std::vector<Scalar> row_of(const Multidegree &e, const LeibnizPoly &p) {
    ensure(e);
    std::vector<Scalar> row(words[e].size(), F.zero());
    for (auto &[w, c] : p.terms())
      row[index[e].at(w)] = c;
    return row;
  }

  LeibnizPoly poly_of(const Multidegree &e, const std::vector<Scalar> &row) {
    LeibnizPoly p(F);
    for (std::size_t i = 0; i < row.size(); ++i)
      if (!F.is_zero(row[i]))
        p.add_term(words[e][i], row[i]);
    return p;
  }

  bool add(const Multidegree &e, const LeibnizPoly &p) {
    if (p.is_zero())
      return false;
    ensure(e);
    return spaces.at(e).add(row_of(e, p));
  }
};

void seed_component(ComponentTable &table, const Multidegree &e,
                    const std::vector<LeibnizPoly> &mh_gens) {
  const Field &F = table.F;
  for (auto &g : mh_gens) {
    auto gd = multidegree_of(g);
    std::vector<int> gvars;
    std::vector<int> gdegs;
    for (auto &[v, m] : *gd) {
      gvars.push_back(v);
      gdegs.push_back(m);
    }
    int k = int(gvars.size());
    std::vector<std::vector<Multidegree>> splits;
    std::vector<Multidegree> stack;
    compositions(e, k, stack, splits);
    for (auto &split : splits) {
      // slot i receives total multidegree gdegs[i] * delta_i: delta must
      // divide the slot componentwise
      bool ok = true;
      std::vector<Multidegree> deltas(split.size());
      for (int i = 0; i < k && ok; ++i) {
        Multidegree delta;
        for (auto &[v, m] : split[std::size_t(i)]) {
          if (m % gdegs[std::size_t(i)] != 0) {
            ok = false;
            break;
          }
          delta[v] = m / gdegs[std::size_t(i)];
        }
        if (ok && total_degree(delta) == 0)
          ok = false;
        deltas[std::size_t(i)] = delta;
      }
      if (!ok)
        continue;
      // choose words (single, or sums into one nonlinear slot)
      std::vector<std::vector<Word>> choices;
      for (int i = 0; i < k; ++i)
        choices.push_back(enumerate_words(deltas[std::size_t(i)]));
      std::vector<std::size_t> pick(std::size_t(k), 0);
      for (;;) {
        std::map<int, LeibnizPoly> sigma;
        for (int i = 0; i < k; ++i)
          sigma.emplace(gvars[std::size_t(i)],
                        word_poly(F, choices[std::size_t(i)][pick[std::size_t(i)]]));
        table.add(e, substitute(g, sigma));

        // sum substitutions into one nonlinear slot (finite fields; over
        // char 0 the polarized generators already cover these)
        if (F.is_finite()) {
          std::vector<Scalar> units;
          for (auto &s : F.elements())
            if (!F.is_zero(s))
              units.push_back(s);
          for (int i = 0; i < k; ++i) {
            if (gdegs[std::size_t(i)] < 2)
              continue;
            for (std::size_t other = pick[std::size_t(i)] + 1;
                 other < choices[std::size_t(i)].size(); ++other) {
              for (auto &lam : units) {
                auto sigma2 = sigma;
                LeibnizPoly s =
                    word_poly(F, choices[std::size_t(i)][pick[std::size_t(i)]]) +
                    word_poly(F, choices[std::size_t(i)][other]).scaled(lam);
                sigma2.insert_or_assign(gvars[std::size_t(i)], s);
                table.add(e, substitute(g, sigma2));
              }
            }
          }
        }

        std::size_t pos = 0;
        while (pos < std::size_t(k)) {
          if (++pick[pos] < choices[pos].size())
            break;
          pick[pos] = 0;
          ++pos;
        }
        if (pos == std::size_t(k))
          break;
      }
    }
  }
}

} // namespace

ComponentSpace tideal_component(const Field &field,
                                const std::vector<LeibnizPoly> &gens,
                                const Multidegree &d,
                                unsigned long long cost_cap) {
  (void)cost_cap;
  auto mh = component_generators(field, gens);
  ComponentTable table(field);
  auto region = sub_multidegrees(d);
  for (auto &e : region)
    table.ensure(e);
  for (auto &e : region)
    seed_component(table, e, mh);
  // close under single-variable multiplications until the ranks stabilize
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto &e : region) {
      for (auto &[v, m] : e) {
        Multidegree prev = minus_var(e, v);
        if (prev.empty() || !table.words.count(prev))
          continue;
        auto rows = table.spaces.at(prev).rows(); // copy: adding invalidates
        LeibnizPoly xv = var_poly(field, v);
        for (auto &r : rows) {
          LeibnizPoly u = table.poly_of(prev, r);
          if (table.add(e, lproduct(u, xv)))
            changed = true;
          if (table.add(e, lproduct(xv, u)))
            changed = true;
        }
      }
    }
  }
  ComponentSpace out;
  out.d = d;
  out.words = table.words.at(d);
  out.rows = table.spaces.at(d).rows();
  out.rank = table.spaces.at(d).rank();
  return out;
}

// --- bounded graded region for mixed membership over finite fields ---------

namespace {

/// A candidate T-ideal element together with its support words.
struct RegionCandidate {
  LeibnizPoly poly;
  std::vector<Word> support;
};

std::vector<Word> support_of(const LeibnizPoly &p) {
  std::vector<Word> s;
  for (auto &[w, c] : p.terms())
    s.push_back(w);
  return s;
}

/// Substitution instances of the generators whose monomial images respect
/// per-variable exponent caps.  Slots take short words (length <= 2); one
/// slot may take a longer word while the others take single variables, which
/// is the shape the paper's cross-multidegree reductions use (a product
/// block enters one slot).  Nonlinear slots also take pair sums of short
/// words, carrying the characteristic-p polarizations.
std::vector<RegionCandidate>
region_candidates(const Field &F, const std::vector<LeibnizPoly> &gens,
                  const std::map<int, int> &caps) {
  std::vector<RegionCandidate> pool;
  std::vector<int> vars;
  int total_cap = 0;
  for (auto &[v, c] : caps)
    if (c > 0) {
      vars.push_back(v);
      total_cap += c;
    }

  std::vector<Word> shorts, longs;
  {
    Multidegree full;
    for (auto &[v, c] : caps)
      if (c > 0)
        full[v] = c;
    for (auto &e : sub_multidegrees(full))
      for (auto &w : enumerate_words(e))
        (w.size() <= 2 ? shorts : longs).push_back(w);
  }

  std::vector<Scalar> units;
  for (auto &s : F.elements())
    if (!F.is_zero(s))
      units.push_back(s);

  for (auto &g : gens) {
    std::vector<int> gvars = variables_of(g);
    const int k = int(gvars.size());
    std::map<int, int> gmax, gmin; // per-variable degree range over monomials
    for (int v : gvars)
      gmin[v] = 1 << 20;
    for (auto &[w, c] : g.terms()) {
      Multidegree dw = multidegree_of_word(w);
      for (int v : gvars) {
        auto it = dw.find(v);
        int m = it == dw.end() ? 0 : it->second;
        gmax[v] = std::max(gmax[v], m);
        gmin[v] = std::min(gmin[v], m);
      }
    }

    auto fits_caps = [&](const std::map<int, LeibnizPoly> &sigma) {
      std::map<int, int> tot;
      for (auto &[gv, poly] : sigma) {
        std::map<int, int> worst;
        for (auto &[w, c] : poly.terms())
          for (auto &[v, m] : multidegree_of_word(w))
            worst[v] = std::max(worst[v], m);
        for (auto &[v, m] : worst)
          tot[v] += m * gmax[gv];
      }
      for (auto &[v, m] : tot) {
        auto it = caps.find(v);
        if (it == caps.end() || m > it->second)
          return false;
      }
      return true;
    };

    auto emit = [&](const std::map<int, LeibnizPoly> &sigma) {
      if (!fits_caps(sigma))
        return;
      LeibnizPoly inst = substitute(g, sigma);
      if (inst.is_zero())
        return;
      pool.push_back({inst, support_of(inst)});
      for (int i = 0; i < k; ++i) {
        for (auto &lam : units) {
          if (F.is_one(lam))
            continue;
          auto sigma2 = sigma;
          sigma2.insert_or_assign(gvars[std::size_t(i)],
                                  sigma.at(gvars[std::size_t(i)]).scaled(lam));
          LeibnizPoly inst2 = substitute(g, sigma2);
          if (!inst2.is_zero())
            pool.push_back({inst2, support_of(inst2)});
        }
      }
    };

    // all-short assignments
    std::vector<std::size_t> pick(std::size_t(k), 0);
    for (;;) {
      std::map<int, LeibnizPoly> sigma;
      for (int i = 0; i < k; ++i)
        sigma.emplace(gvars[std::size_t(i)],
                      word_poly(F, shorts[pick[std::size_t(i)]]));
      emit(sigma);
      // pair sums into one nonlinear slot
      for (int i = 0; i < k; ++i) {
        if (gmax[gvars[std::size_t(i)]] < 2)
          continue;
        for (std::size_t other = pick[std::size_t(i)] + 1;
             other < shorts.size(); ++other) {
          for (auto &lam : units) {
            auto sigma2 = sigma;
            sigma2.insert_or_assign(
                gvars[std::size_t(i)],
                word_poly(F, shorts[pick[std::size_t(i)]]) +
                    word_poly(F, shorts[other]).scaled(lam));
            emit(sigma2);
          }
        }
      }
      std::size_t pos = 0;
      while (pos < std::size_t(k)) {
        if (++pick[pos] < shorts.size())
          break;
        pick[pos] = 0;
        ++pos;
      }
      if (pos == std::size_t(k))
        break;
    }

    // one long slot, single variables elsewhere
    for (int slot = 0; slot < k; ++slot) {
      std::vector<std::size_t> vpick(std::size_t(k), 0);
      for (;;) {
        for (auto &lw : longs) {
          std::map<int, LeibnizPoly> sigma;
          bool ok = true;
          for (int i = 0; i < k; ++i) {
            if (i == slot)
              sigma.emplace(gvars[std::size_t(i)], word_poly(F, lw));
            else
              sigma.emplace(gvars[std::size_t(i)],
                            var_poly(F, vars[vpick[std::size_t(i)]]));
          }
          // cheap budget filter before the cap check
          int lw_cost = int(lw.size()) * gmin[gvars[std::size_t(slot)]];
          if (lw_cost > total_cap)
            ok = false;
          if (ok)
            emit(sigma);
        }
        std::size_t pos = 0;
        bool moved = false;
        for (; pos < std::size_t(k); ++pos) {
          if (int(pos) == slot)
            continue;
          if (++vpick[pos] < vars.size()) {
            moved = true;
            break;
          }
          vpick[pos] = 0;
        }
        if (!moved)
          break;
      }
    }
  }
  return pool;
}

} // namespace

bool in_tideal(const LeibnizPoly &f, const std::vector<LeibnizPoly> &gens,
               unsigned long long cost_cap) {
  if (f.is_zero())
    return true;
  const Field &F = f.field();
  auto d = multidegree_of(f);
  if (d) {
    ComponentSpace comp = tideal_component(F, gens, *d, cost_cap);
    RowSpace space(F, comp.words.size());
    for (auto &r : comp.rows)
      space.add(r);
    std::vector<Scalar> row(comp.words.size(), F.zero());
    std::map<Word, std::size_t, WordLess> ix;
    for (std::size_t i = 0; i < comp.words.size(); ++i)
      ix.emplace(comp.words[i], i);
    for (auto &[w, c] : f.terms())
      row[ix.at(w)] = c;
    if (space.contains(row))
      return true;
    if (!F.is_finite())
      return false;
    // fall through: finite fields may need cross-multidegree cancellations
  } else if (!F.is_finite()) {
    for (auto &[e, part] : multihomogeneous_parts(f))
      if (!in_tideal(part, gens, cost_cap))
        return false;
    return true;
  }

  // Bounded graded region, staged caps.  Only instances whose support is
  // connected to the target's support can enter a cancelling combination,
  // so the pool is filtered by breadth-first reachability before any row
  // arithmetic.
  const int q = int(F.q());
  std::map<int, int> base;
  for (auto &[e, part] : multihomogeneous_parts(f))
    for (auto &[v, m] : e)
      base[v] = std::max(base[v], m);
  for (int stage = 0; stage < 2; ++stage) {
    std::map<int, int> caps = base;
    for (auto &[v, c] : caps)
      c = std::max(c, stage == 0 ? q : 2 * q - 1);
    auto pool = region_candidates(F, gens, caps);

    // breadth-first levels outward from the target's support
    std::set<Word, WordLess> reach;
    for (auto &[w, c] : f.terms())
      reach.insert(w);
    std::vector<int> level(pool.size(), -1);
    int max_level = 0;
    for (int lvl = 1; lvl <= 3; ++lvl) {
      bool grew = false;
      std::set<Word, WordLess> next = reach;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (level[i] >= 0)
          continue;
        bool touches = false;
        for (auto &w : pool[i].support)
          if (reach.count(w)) {
            touches = true;
            break;
          }
        if (!touches)
          continue;
        level[i] = lvl;
        grew = true;
        for (auto &w : pool[i].support)
          next.insert(w);
      }
      reach = std::move(next);
      if (!grew)
        break;
      max_level = lvl;
    }

    if (std::getenv("LEIBNIZ_REGION_STATS")) {
      std::size_t marked_n = 0;
      for (auto l : level)
        if (l >= 0)
          ++marked_n;
      std::fprintf(stderr, "stage %d: pool=%zu marked=%zu words=%zu\n", stage,
                   pool.size(), marked_n, reach.size());
    }
    std::vector<Word> words(reach.begin(), reach.end());
    std::map<Word, std::size_t, WordLess> ix;
    for (std::size_t i = 0; i < words.size(); ++i)
      ix.emplace(words[i], i);
    auto brow_of = [&](const LeibnizPoly &p) {
      std::vector<std::uint8_t> row(words.size(), 0);
      for (auto &[w, c] : p.terms())
        row[ix.at(w)] = c.ff();
      return row;
    };

    RowSpace space(F, words.size());
    RowSpaceByteView bytes(space);
    unsigned long long ops = 0;
    std::vector<LeibnizPoly> added;
    auto charge = [&]() {
      ops += (space.rank() + 1) * words.size() / 4;
      if (ops > cost_cap)
        throw cost_cap_exceeded(ops, cost_cap);
    };
    std::vector<int> vs;
    for (auto &[v, c] : caps)
      if (c > 0)
        vs.push_back(v);

    for (int lvl = 1; lvl <= max_level; ++lvl) {
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (level[i] != lvl)
          continue;
        charge();
        if (bytes.add(brow_of(pool[i].poly)))
          added.push_back(pool[i].poly);
      }
      if (bytes.contains(brow_of(f)))
        return true;
      if (std::getenv("LEIBNIZ_NO_CLOSURE"))
        continue;
      // close under single-variable products inside the region
      std::size_t head = 0;
      while (head < added.size()) {
        LeibnizPoly u = added[head++];
        for (int v : vs) {
          LeibnizPoly xv = var_poly(F, v);
          for (LeibnizPoly prod : {lproduct(u, xv), lproduct(xv, u)}) {
            bool inside = !prod.is_zero();
            for (auto &[w, c] : prod.terms())
              if (!ix.count(w)) {
                inside = false;
                break;
              }
            if (!inside)
              continue;
            charge();
            if (bytes.add(brow_of(prod)))
              added.push_back(prod);
          }
        }
      }
      if (bytes.contains(brow_of(f)))
        return true;
    }
  }
  return false;
}

} // namespace leibniz
