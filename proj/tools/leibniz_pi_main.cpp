// leibniz-pi: verification campaigns for the polynomial identities of the
// low-dimensional metabelian Leibniz algebras.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "leibniz/images.hpp"
#include "leibniz/parse.hpp"
#include "leibniz/verify.hpp"

using namespace leibniz;

namespace {

struct CommonOpts {
  std::string algebra;
  std::string field = "Q";
  std::string poly;
  std::string gens;
  std::string format = "text";
  std::string out;
  int max_degree = 5;
  long n = 3;
  unsigned long long cost_cap = kDefaultCostCap;
  bool all = false;
};

void write_output(const CommonOpts &opt, const std::string &payload) {
  if (opt.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f)
    throw std::runtime_error("cannot open output file " + opt.out);
  f << payload;
}

std::vector<LeibnizPoly> load_gens(const std::string &spec, const Field &F) {
  // a catalog name (optionally with alpha) or a file of polynomials
  std::ifstream file(spec);
  if (!file) {
    AlgebraDef A = parse_algebra_spec(spec, F);
    return presentation(A.name(), F, A.alpha()).generators;
  }
  std::vector<LeibnizPoly> gens;
  std::string line;
  while (std::getline(file, line)) {
    std::string trimmed;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c)) || !trimmed.empty())
        trimmed += c;
    while (!trimmed.empty() &&
           std::isspace(static_cast<unsigned char>(trimmed.back())))
      trimmed.pop_back();
    if (trimmed.empty() || trimmed[0] == '#')
      continue;
    gens.push_back(parse_poly(F, trimmed));
  }
  return gens;
}

nlohmann::ordered_json catalog_entry(const AlgebraDef &A) {
  nlohmann::ordered_json j;
  j["name"] = A.name();
  j["dim"] = A.dim();
  auto table = nlohmann::ordered_json::array();
  for (int i = 0; i < A.dim(); ++i)
    for (int k = 0; k < A.dim(); ++k)
      for (int l = 0; l < A.dim(); ++l)
        if (!A.field().is_zero(A.c(i, k, l)))
          table.push_back({i + 1, k + 1, l + 1,
                           A.field().to_string(A.c(i, k, l))});
  j["table"] = table;
  j["flags"] = {{"leibniz", A.flags().leibniz},
                {"metabelian", A.flags().metabelian},
                {"lie", A.flags().lie}};
  return j;
}

/// The full matrix behind `verify --all`: every presented algebra over Q
/// (alpha in {1, 2, -1, 1/2}) and over GF(2), GF(3) (alpha over the field).
std::vector<VerificationReport> verify_all(int max_degree,
                                           unsigned long long cost_cap) {
  std::vector<VerificationReport> reports;
  auto run = [&](const std::string &name, const Field &F,
                 const std::optional<Scalar> &alpha) {
    reports.push_back(verify_presentation(name, F, alpha, max_degree, cost_cap));
  };
  std::vector<Field> fields = {Field::rationals(), Field::gf(2), Field::gf(3)};
  for (auto &F : fields) {
    for (auto &name : presented_names(F)) {
      if (!algebra_needs_alpha(name)) {
        run(name, F, std::nullopt);
        continue;
      }
      bool nonzero_only = name == "RR2" || name == "RR6";
      if (F.is_finite()) {
        for (auto &a : F.elements()) {
          if (nonzero_only && F.is_zero(a))
            continue;
          run(name, F, a);
        }
      } else {
        std::vector<Scalar> alphas = {F.from_int(1), F.from_int(2),
                                      F.from_int(-1), F.from_fraction(1, 2)};
        for (auto &a : alphas)
          run(name, F, a);
      }
    }
  }
  return reports;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"mechanical verification of the polynomial identities of two- "
               "and three-dimensional metabelian Leibniz algebras"};
  app.require_subcommand(1);

  CommonOpts opt;
  auto add_common = [&](CLI::App *cmd, bool wants_algebra) {
    if (wants_algebra)
      cmd->add_option("--algebra", opt.algebra,
                      "algebra spec: <name> or <name>:alpha=<scalar>");
    cmd->add_option("--field", opt.field, "field spec: Q | GF(p) | GF(p^k)");
    cmd->add_option("--format", opt.format, "json|csv|text");
    cmd->add_option("--out", opt.out, "output path (default stdout)");
    cmd->add_option("--cost-cap", opt.cost_cap,
                    "exhaustive-work budget in field operations");
  };

  auto *cmd_verify = app.add_subcommand("verify", "run the theorem verifier");
  add_common(cmd_verify, true);
  cmd_verify->add_option("--max-degree", opt.max_degree,
                         "component degree bound D (<= 7)");
  cmd_verify->add_flag("--all", opt.all, "run the full acceptance matrix");

  auto *cmd_codim = app.add_subcommand("codim", "multilinear codimension c_n");
  add_common(cmd_codim, true);
  cmd_codim->add_option("--n", opt.n, "multilinear degree n");

  auto *cmd_identity =
      app.add_subcommand("identity", "is the polynomial an identity?");
  add_common(cmd_identity, true);
  cmd_identity->add_option("--poly", opt.poly, "polynomial text");

  auto *cmd_member =
      app.add_subcommand("member", "T-ideal membership of a polynomial");
  add_common(cmd_member, false);
  cmd_member->add_option("--gens", opt.gens,
                         "generator source: algebra spec or file");
  cmd_member->add_option("--poly", opt.poly, "polynomial text");

  auto *cmd_image = app.add_subcommand("image", "image set classification");
  add_common(cmd_image, true);
  cmd_image->add_option("--poly", opt.poly, "polynomial text");

  auto *cmd_rr7 = app.add_subcommand("rr7-case", "RR7 root-case analysis");
  add_common(cmd_rr7, true);

  auto *cmd_catalog = app.add_subcommand("catalog", "dump the algebra zoo");
  add_common(cmd_catalog, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Field F = Field::parse(opt.field);

    if (cmd_verify->parsed()) {
      if (opt.max_degree < 1 || opt.max_degree > 7)
        throw parse_error("--max-degree must be in 1..7");
      std::vector<VerificationReport> reports;
      if (opt.all) {
        reports = verify_all(opt.max_degree, opt.cost_cap);
      } else {
        if (opt.algebra.empty())
          throw parse_error("verify needs --algebra or --all");
        AlgebraDef A = parse_algebra_spec(opt.algebra, F);
        reports.push_back(verify_presentation(A.name(), F, A.alpha(),
                                              opt.max_degree, opt.cost_cap));
      }
      std::string payload;
      for (auto &r : reports)
        payload += emit_report(r, parse_format(opt.format), 0);
      write_output(opt, payload);
      bool ok = true;
      for (auto &r : reports)
        ok = ok && r.overall();
      return ok ? 0 : 1;
    }

    if (cmd_codim->parsed()) {
      AlgebraDef A = parse_algebra_spec(opt.algebra, F);
      std::size_t c = codimension_n(A, int(opt.n), opt.cost_cap);
      write_output(opt, std::to_string(c) + "\n");
      return 0;
    }

    if (cmd_identity->parsed()) {
      AlgebraDef A = parse_algebra_spec(opt.algebra, F);
      LeibnizPoly f = parse_poly(F, opt.poly);
      bool ok = is_identity(A, f, opt.cost_cap);
      write_output(opt, ok ? "true\n" : "false\n");
      return ok ? 0 : 1;
    }

    if (cmd_member->parsed()) {
      auto gens = load_gens(opt.gens, F);
      LeibnizPoly f = parse_poly(F, opt.poly);
      bool ok = in_tideal(f, gens, opt.cost_cap);
      write_output(opt, ok ? "true\n" : "false\n");
      return ok ? 0 : 1;
    }

    if (cmd_image->parsed()) {
      AlgebraDef A = parse_algebra_spec(opt.algebra, F);
      LeibnizPoly f = parse_poly(F, opt.poly);
      ImageClass cls = classify_image(A, f, opt.cost_cap);
      ElementSet S = image_set(A, f, opt.cost_cap);
      std::ostringstream os;
      os << cls.to_string(F) << "\n";
      os << "image size " << S.size() << ":";
      for (auto &raw : S.raw) {
        Element e;
        for (auto x : raw)
          e.push_back(Scalar(x));
        os << " {" << element_to_string(A, e) << "}";
      }
      os << "\n";
      write_output(opt, os.str());
      return 0;
    }

    if (cmd_rr7->parsed()) {
      AlgebraDef A = parse_algebra_spec(opt.algebra, F);
      if (A.name() != "RR7")
        throw parse_error("rr7-case expects --algebra RR7:alpha=<scalar>");
      RR7Case cs = rr7_classify(F, *A.alpha());
      write_output(opt, cs.to_string(F) + "\n");
      return 0;
    }

    if (cmd_catalog->parsed()) {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      if (!opt.algebra.empty()) {
        j.push_back(catalog_entry(parse_algebra_spec(opt.algebra, F)));
      } else {
        for (auto &name : catalog_names()) {
          std::optional<Scalar> alpha;
          if (algebra_needs_alpha(name))
            alpha = F.one(); // representative member of the family
          j.push_back(catalog_entry(make_algebra(name, F, alpha)));
        }
      }
      write_output(opt, j.dump(2) + "\n");
      return 0;
    }
  } catch (const cost_cap_exceeded &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const parse_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
