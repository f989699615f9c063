#include "leibniz/presentation.hpp"

#include "leibniz/parse.hpp"
#include "leibniz/rr7.hpp"

namespace leibniz {

namespace {

std::string subst_q(const std::string &tmpl, unsigned q) {
  // replace {q}, {q-1}, {q+1}, {2q-1} by concrete positive integers
  std::string out;
  for (std::size_t i = 0; i < tmpl.size();) {
    if (tmpl[i] != '{') {
      out += tmpl[i++];
      continue;
    }
    auto close = tmpl.find('}', i);
    std::string key = tmpl.substr(i + 1, close - i - 1);
    unsigned v = 0;
    if (key == "q")
      v = q;
    else if (key == "q-1")
      v = q - 1;
    else if (key == "q+1")
      v = q + 1;
    else if (key == "2q-1")
      v = 2 * q - 1;
    else
      throw domain_error("unknown template key {" + key + "}");
    out += std::to_string(v);
    i = close + 1;
  }
  return out;
}

} // namespace

Presentation presentation(const std::string &name, const Field &field,
                          const std::optional<Scalar> &alpha) {
  Presentation P;
  P.algebra = name;
  P.field = field;
  P.alpha = alpha;
  const bool fin = field.is_finite();
  const unsigned q = fin ? field.q() : 0;
  const bool char2 = field.characteristic() == 2;
  auto add = [&](const std::string &text) {
    P.generators.push_back(parse_poly(field, fin ? subst_q(text, q) : text));
  };

  if (name == "L2") {
    add("x1^2");
    add("(x1 x2) (x3 x4)");
    if (fin)
      add("x2 x1^({q}) x2^({q-1}) - x2 x1^({q}) + x2 x1 - x2 x1 x2^({q-1})");
    P.provenance = "basis theorem for L2";
  } else if (name == "L3") {
    add("x1 x2 - x2 x1");
    add("x1 x2 x3");
    P.provenance = "minimal basis for L3 (any field)";
  } else if (name == "L4" || name == "RR11") {
    add("x1 (x2 x3)");
    if (fin)
      add("x1 x2^({q}) - x1 x2");
    P.provenance = name == "L4" ? "basis theorem for L4"
                                : "RR11 theorem (same list as L4)";
  } else if (name == "RR2") {
    if (!alpha || field.is_zero(*alpha))
      throw domain_error("RR2 presentation needs alpha != 0");
    add("(x1 x2) (x3 x4)");
    add("x1 x2 x3 - x1 x3 x2 - x2 x1 x3 + x2 x3 x1 + x3 x1 x2 - x3 x2 x1");
    if (fin) {
      add("x1^({q+1}) - x1^2");
      add("x1 x2^(2) x3 - x3 x2^(2) x1 x3^({q-1}) + x3^({q}) x2^(2) x1 - "
          "x1 x3^({q}) x2^(2)");
      add("x1 x2^(2) x3 x1^({q-1}) - x1 x2^(2) x3 - x1 x3^({q}) x2^(2) "
          "x1^({q-1}) + x1 x3^({q}) x2^(2)");
      add("x1 x2^({q}) x1^({q-1}) - x1 x2 x1^({q-1}) - x1 x2^({q}) + x1 x2");
    }
    P.provenance = "RR2 basis theorems";
  } else if (name == "RR3") {
    if (char2) {
      add("x1 x2 + x2 x1");
      add("x1^2 x2");
      add("(x1 x2) (x3 x4)");
    } else {
      add("x1 x2 x3 + x2 x1 x3");
      add("x3 x1 x2 - x3 x2 x1 - x2 x1 x3");
      add("(x1 x2) (x3 x4)");
    }
    if (fin) {
      add("x1 x2 - x2 x1 + 2 x2 x1 x2^({q-1}) + 2 x2 x1^({q}) - "
          "2 x2 x1^({q}) x2^({q-1})");
      add("x1 x2 x3^({q}) - x1 x2 x3");
      add("x3 x1 x2 - x3 x1^({q}) x2 - x3 x1 x3^({q-1}) x2 + "
          "x3 x1^({q}) x3^({q-1}) x2");
    }
    P.provenance = "RR3 basis theorem";
  } else if (name == "RR4" || name == "RR10") {
    add("x1 x2 x3");
    P.provenance = "RR4/RR10 theorem (identities coincide)";
  } else if (name == "RR5") {
    add("x1 x2 - x2 x1");
    add("x1 x2 x3");
    P.provenance = "RR5 theorem";
  } else if (name == "RR6") {
    if (!alpha || field.is_zero(*alpha))
      throw domain_error("RR6 presentation needs alpha != 0");
    add("x1 (x2 x3)");
    if (fin) {
      if (q % 2 == 1) {
        // x1 x2^(q) - alpha^((q-1)/2) x1 x2
        Scalar coef = field.pow(*alpha, (q - 1) / 2);
        LeibnizPoly g = parse_poly(field, subst_q("x1 x2^({q})", q)) -
                        parse_poly(field, "x1 x2").scaled(coef);
        P.generators.push_back(g);
      } else {
        add("x1 x2^({2q-1}) - x1 x2");
        add("x1 x2^({q}) x3 - x1 x2 x3^({q})");
      }
    }
    P.provenance = "RR6 theorem";
  } else if (name == "RR7") {
    if (!alpha)
      throw domain_error("RR7 presentation needs alpha");
    add("x1 (x2 x3)");
    if (fin) {
      RR7Case cs = rr7_classify(field, *alpha);
      switch (cs.kind) {
      case RR7Case::Alpha0:
      case RR7Case::DistinctRootsInK:
        add("x1 x2^({q}) - x1 x2");
        break;
      case RR7Case::DoubleRoot:
        add("x1 x2 x3^({q}) - x1 x2^({q}) x3");
        add("x1 x2^({2q-1}) - 2 x1 x2^({q}) + x1 x2");
        break;
      case RR7Case::Irreducible: {
        add("x1 x2 x3^({q}) - x1 x2^({q}) x3");
        // x1 x2^(2q-1) - c x1 x2^(q) + x1 x2 with c = -(1+2a)/a
        LeibnizPoly g =
            parse_poly(field, subst_q("x1 x2^({2q-1}) + x1 x2", q)) -
            parse_poly(field, subst_q("x1 x2^({q})", q)).scaled(cs.c);
        P.generators.push_back(g);
        break;
      }
      }
    }
    P.provenance = "RR7 theorem (case analysis over finite fields)";
  } else if (name == "RR8") {
    add("x1 (x2 x3)");
    add("x1 x2 x3 - x2 x1 x3");
    if (fin && q == 2)
      add("x1^(2) x2 - x1 x2^(2)");
    P.provenance = "RR8 theorem";
  } else if (name == "RR9") {
    add("x1 (x2 x3)");
    if (fin)
      add("x1 x2^({q}) - x1 x2 - x2 x1^({q}) + x2 x1");
    P.provenance = "RR9 theorem";
  } else if (name == "RR1") {
    throw domain_error("RR1 is not metabelian; no presentation is claimed");
  } else {
    throw domain_error("unknown algebra '" + name + "'");
  }
  return P;
}

std::vector<std::string> presented_names(const Field &) {
  return {"L2",  "L3",  "L4",  "RR2", "RR3",  "RR4", "RR5",
          "RR6", "RR7", "RR8", "RR9", "RR10", "RR11"};
}

} // namespace leibniz
