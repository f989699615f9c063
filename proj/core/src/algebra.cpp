#include "leibniz/algebra.hpp"

#include <algorithm>
#include <map>

namespace leibniz {

namespace {

struct Entry {
  int i, j, k;
  long num; // coefficient, with 0 standing for "alpha"
};

// Tables from the two- and three-dimensional classifications.  A num of 0
// marks the alpha slot.
struct TableDef {
  int dim;
  bool needs_alpha;
  bool alpha_nonzero;
  std::vector<Entry> entries;
};

const TableDef *table_for(const std::string &name) {
  static const std::map<std::string, TableDef> tables = {
      {"L2", {2, false, false, {{1, 2, 1, 1}, {2, 1, 1, -1}}}},
      {"L3", {2, false, false, {{2, 2, 1, 1}}}},
      {"L4", {2, false, false, {{1, 2, 1, 1}, {2, 2, 1, 1}}}},
      {"RR1",
       {3,
        false,
        false,
        {{1, 3, 1, -2}, {2, 2, 1, 1}, {3, 2, 2, 1}, {2, 3, 2, -1}}}},
      {"RR2", {3, true, true, {{1, 3, 1, 0}, {3, 2, 2, 1}, {2, 3, 2, -1}}}},
      {"RR3", {3, false, false, {{3, 3, 1, 1}, {3, 2, 2, 1}, {2, 3, 2, -1}}}},
      {"RR4", {3, true, false, {{2, 2, 1, 1}, {3, 3, 1, 0}, {2, 3, 1, 1}}}},
      {"RR5", {3, true, false, {{2, 2, 1, 1}, {3, 3, 1, 0}}}},
      {"RR6", {3, true, true, {{1, 3, 2, 1}, {2, 3, 1, 0}}}},
      {"RR7", {3, true, false, {{1, 3, 2, 1}, {2, 3, 1, 0}, {2, 3, 2, 1}}}},
      {"RR8", {3, false, false, {{3, 3, 1, 1}, {1, 3, 2, 1}}}},
      {"RR9", {3, false, false, {{3, 3, 1, 1}, {1, 3, 1, 1}, {1, 3, 2, 1}}}},
      {"RR10", {3, false, false, {{2, 3, 1, 1}}}},
      {"RR11", {3, false, false, {{1, 3, 1, 1}, {2, 3, 2, 1}}}},
  };
  auto it = tables.find(name);
  return it == tables.end() ? nullptr : &it->second;
}

using Vec = std::vector<Scalar>;

Vec basis_vec(const Field &F, int dim, int i) {
  Vec v(std::size_t(dim), F.zero());
  v[std::size_t(i)] = F.one();
  return v;
}

Vec mulvec(const AlgebraDef &A, const Vec &a, const Vec &b) {
  const Field &F = A.field();
  int d = A.dim();
  Vec out(std::size_t(d), F.zero());
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

bool vec_zero(const Field &F, const Vec &v) {
  for (auto &x : v)
    if (!F.is_zero(x))
      return false;
  return true;
}

Vec vec_sub(const Field &F, const Vec &a, const Vec &b) {
  Vec out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = F.sub(out[i], b[i]);
  return out;
}

} // namespace

std::string AlgebraDef::spec_string() const {
  if (!alpha_)
    return name_;
  return name_ + ":alpha=" + field_.to_string(*alpha_);
}

StructureFlags structure_check(const AlgebraDef &A) {
  const Field &F = A.field();
  int d = A.dim();
  StructureFlags fl;
  std::vector<Vec> e;
  for (int i = 0; i < d; ++i)
    e.push_back(basis_vec(F, d, i));

  fl.leibniz = true;
  for (int x = 0; x < d && fl.leibniz; ++x)
    for (int y = 0; y < d && fl.leibniz; ++y)
      for (int z = 0; z < d && fl.leibniz; ++z) {
        Vec lhs = mulvec(A, e[x], mulvec(A, e[y], e[z]));
        Vec rhs = vec_sub(F, mulvec(A, mulvec(A, e[x], e[y]), e[z]),
                          mulvec(A, mulvec(A, e[x], e[z]), e[y]));
        if (!vec_zero(F, vec_sub(F, lhs, rhs)))
          fl.leibniz = false;
      }

  fl.metabelian = true;
  for (int a = 0; a < d && fl.metabelian; ++a)
    for (int b = 0; b < d && fl.metabelian; ++b)
      for (int c = 0; c < d && fl.metabelian; ++c)
        for (int g = 0; g < d && fl.metabelian; ++g)
          if (!vec_zero(F, mulvec(A, mulvec(A, e[a], e[b]),
                                  mulvec(A, e[c], e[g]))))
            fl.metabelian = false;

  fl.lie = true;
  for (int a = 0; a < d && fl.lie; ++a) {
    if (!vec_zero(F, mulvec(A, e[a], e[a])))
      fl.lie = false;
    for (int b = 0; b < d && fl.lie; ++b) {
      // e_a e_b + e_b e_a = 0
      Vec sum = mulvec(A, e[a], e[b]);
      Vec ba = mulvec(A, e[b], e[a]);
      for (std::size_t i = 0; i < sum.size(); ++i)
        sum[i] = F.add(sum[i], ba[i]);
      if (!vec_zero(F, sum))
        fl.lie = false;
    }
  }
  return fl;
}

AlgebraDef make_algebra(const std::string &name, const Field &field,
                        const std::optional<Scalar> &alpha) {
  const TableDef *def = table_for(name);
  if (!def)
    throw domain_error("unknown algebra '" + name + "'");
  if (def->needs_alpha && !alpha)
    throw domain_error(name + " needs an alpha parameter");
  if (!def->needs_alpha && alpha)
    throw domain_error(name + " takes no alpha parameter");
  if (def->alpha_nonzero && field.is_zero(*alpha))
    throw domain_error(name + " requires alpha != 0");

  AlgebraDef A;
  A.name_ = name;
  A.dim_ = def->dim;
  A.field_ = field;
  A.alpha_ = alpha;
  A.table_.assign(std::size_t(def->dim * def->dim * def->dim), field.zero());
  for (auto &en : def->entries) {
    Scalar c = en.num == 0 ? *alpha : field.from_int(en.num);
    A.table_[std::size_t(((en.i - 1) * def->dim + (en.j - 1)) * def->dim +
                         (en.k - 1))] = c;
  }
  A.flags_ = structure_check(A);
  if (!A.flags_.leibniz)
    throw domain_error("internal: table of " + name +
                       " fails the Leibniz check");
  return A;
}

AlgebraDef parse_algebra_spec(const std::string &spec, const Field &field) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::optional<Scalar> alpha;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    if (rest.rfind("alpha=", 0) != 0)
      throw parse_error("malformed algebra spec '" + spec +
                        "' (expected <name> or <name>:alpha=<scalar>)");
    alpha = field.parse_scalar(rest.substr(6));
  }
  return make_algebra(name, field, alpha);
}

const std::vector<std::string> &catalog_names() {
  static const std::vector<std::string> names = {
      "L2",  "L3",  "L4",  "RR1", "RR2",  "RR3",  "RR4",
      "RR5", "RR6", "RR7", "RR8", "RR9", "RR10", "RR11"};
  return names;
}

bool algebra_needs_alpha(const std::string &name) {
  const TableDef *def = table_for(name);
  if (!def)
    throw domain_error("unknown algebra '" + name + "'");
  return def->needs_alpha;
}

} // namespace leibniz
