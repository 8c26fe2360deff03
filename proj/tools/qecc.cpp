// qecc: build quantum error-correcting codes from cyclic-family classical
// codes and re-certify published generator-polynomial tables.
#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qecc/notation.hpp"
#include "qecc/search.hpp"
#include "qecc/table.hpp"

using namespace qecc;

namespace {

struct Common {
  std::uint64_t seed = 0;
  std::uint64_t distance_budget = 100'000'000;
  std::uint64_t enum_cap = 20'000'000;
  unsigned jobs = 0;

  DistanceBudget budget() const {
    DistanceBudget b;
    b.subset_budget = distance_budget;
    b.enumeration_cap = enum_cap;
    b.threads = jobs;
    return b;
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "seed for randomized steps");
  app->add_option("--distance-budget", c.distance_budget,
                  "column-subset evaluations allowed per distance certification");
  app->add_option("--enum-cap", c.enum_cap, "codeword-enumeration ceiling");
  app->add_option("--jobs", c.jobs, "worker threads (0 = hardware)");
}

Field field_of(const std::string& descriptor_or_q) {
  if (descriptor_or_q.find('^') != std::string::npos ||
      descriptor_or_q.find('/') != std::string::npos)
    return Field::from_descriptor(descriptor_or_q);
  return Field::of_order(std::uint32_t(std::stoul(descriptor_or_q)));
}

std::string classify(const LinearCode& c) {
  LinearCode du = dual(c);
  bool dc = code_contains(c, du), so = code_contains(du, c);
  if (dc && so) return "self-dual";
  if (dc) return "dual-containing";
  if (so) return "self-orthogonal";
  if (hull(c, DualKind::euclidean).dim() == 0) return "LCD";
  return "generic";
}

void print_code(const LinearCode& c, const DistanceBudget& budget) {
  min_distance(c, budget);
  std::cout << "code        " << c.params_string() << "_" << c.field().order() << "\n";
  LinearCode du = dual(c);
  min_distance(du, budget);
  std::cout << "dual        " << du.params_string() << "\n";
  std::cout << "class       " << classify(c) << "\n";
  std::cout << "hull dim    " << hull(c, DualKind::euclidean).dim();
  if (c.field().has_conjugation())
    std::cout << " (hermitian " << hull(c, DualKind::hermitian).dim() << ")";
  std::cout << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum codes from cyclic, constacyclic, quasi-twisted, polycyclic and "
               "generalized quasi-polycyclic codes over finite fields"};
  app.require_subcommand(1);
  Common common;

  // field
  std::string field_arg;
  auto* s_field = app.add_subcommand("field", "describe a finite field");
  s_field->add_option("field", field_arg, "order q or descriptor p^m/poly")->required();
  add_common(s_field, common);

  // factor
  std::string fac_poly;
  std::uint32_t fac_n = 0;
  std::string fac_lambda = "1";
  auto* s_factor = app.add_subcommand("factor", "factor a polynomial into irreducibles");
  s_factor->add_option("--field,-f", field_arg, "order q or descriptor")->required();
  s_factor->add_option("--poly", fac_poly, "coefficient string, highest degree first");
  s_factor->add_option("--xn", fac_n, "factor x^n - lambda instead");
  s_factor->add_option("--lambda", fac_lambda, "shift constant (element token)");
  add_common(s_factor, common);

  // code
  std::string code_g, code_f, code_lambda = "1", gqp_f, gqp_a, gqp_p;
  std::uint32_t code_n = 0;
  std::size_t gqp_rows = 0;
  auto* s_code = app.add_subcommand("code", "build a classical code and certify it");
  s_code->add_option("--field,-f", field_arg)->required();
  s_code->add_option("--n", code_n, "length (cyclic/constacyclic)");
  s_code->add_option("--g", code_g, "generator polynomial");
  s_code->add_option("--lambda", code_lambda, "shift constant");
  s_code->add_option("--modulus", code_f, "polycyclic modulus f");
  s_code->add_option("--gqp-f", gqp_f, "comma-separated block moduli");
  s_code->add_option("--gqp-a", gqp_a, "comma-separated block generators");
  s_code->add_option("--gqp-p", gqp_p, "comma-separated block scaling constants");
  s_code->add_option("--gqp-rows", gqp_rows, "generator shifts (0 = check-polynomial degree)");
  add_common(s_code, common);

  // css
  std::string css_g, css_gf, css_lambda = "1";
  std::uint32_t css_n = 0;
  auto* s_css = app.add_subcommand("css", "CSS construction from divisor pairs");
  s_css->add_option("--field,-f", field_arg)->required();
  s_css->add_option("--n", css_n, "length")->required();
  s_css->add_option("--g", css_g, "generator of C1")->required();
  s_css->add_option("--gf", css_gf, "generator of dual(C2); omitted = dual-containing case");
  s_css->add_option("--lambda", css_lambda, "shift constant");
  add_common(s_css, common);

  // ls
  std::string ls_g, ls_lambda = "1";
  std::uint32_t ls_n = 0;
  auto* s_ls = app.add_subcommand("ls", "stabilizer extension from a nearly "
                                        "Hermitian self-orthogonal code");
  s_ls->add_option("--field,-f", field_arg)->required();
  s_ls->add_option("--n", ls_n)->required();
  s_ls->add_option("--g", ls_g, "constacyclic generator over GF(q^2)")->required();
  s_ls->add_option("--lambda", ls_lambda);
  add_common(s_ls, common);

  // search
  std::string search_kind, search_lambda = "1", search_blocks;
  std::uint32_t search_n = 0, search_trials = 100;
  long long search_emax = 3;
  std::size_t search_top = 10;
  auto* s_search = app.add_subcommand("search", "enumerate construction ingredients");
  s_search->add_option("--kind", search_kind, "constacyclic | polycyclic | gqp | ls")->required();
  s_search->add_option("--field,-f", field_arg)->required();
  s_search->add_option("--n", search_n, "length");
  s_search->add_option("--lambda", search_lambda);
  s_search->add_option("--trials", search_trials, "random trials (polycyclic/gqp)");
  s_search->add_option("--blocks", search_blocks, "comma-separated gqp block degrees");
  s_search->add_option("--emax", search_emax, "largest hull defect kept (ls)");
  s_search->add_option("--top", search_top, "candidates to print");
  add_common(s_search, common);

  // verify
  std::string fixture = "data/tables.rows", json_out;
  int only_table = 0;
  auto* s_verify = app.add_subcommand("verify", "re-certify the published table rows");
  s_verify->add_option("--fixture", fixture, "fixture file (qecc-tables v1)");
  s_verify->add_option("--table", only_table, "restrict to one table id");
  s_verify->add_option("--json", json_out, "also write a machine-readable report");
  add_common(s_verify, common);

  CLI11_PARSE(app, argc, argv);
  DistanceBudget budget = common.budget();

  try {
    if (s_field->parsed()) {
      Field F = field_of(field_arg);
      std::cout << "descriptor  " << F.descriptor() << "\n"
                << "order       " << F.order() << "\n"
                << "char^deg    " << F.characteristic() << "^" << F.degree() << "\n";
      if (F.degree() > 1) {
        Poly def(F);
        std::vector<felem> c;
        for (auto x : F.defining_poly()) c.push_back(x);
        std::cout << "defining    " << format_poly(Poly(F, c)) << "\n";
        std::uint64_t ord = 1;
        while (F.pow(F.w_root(), (long long)ord) != 1) ++ord;
        std::cout << "ord(w)      " << ord << (ord == F.order() - 1 ? " (primitive)" : "")
                  << "\n";
      }
      return 0;
    }
    if (s_factor->parsed()) {
      Field F = field_of(field_arg);
      Poly p = fac_n ? Poly::x_pow_minus(F, fac_n, parse_poly(fac_lambda, F).coeff(0))
                     : parse_poly(fac_poly, F);
      auto fact = factorize(p, common.seed);
      std::cout << format_poly(p) << " =";
      if (fact.unit != 1) std::cout << " " << format_element(F, fact.unit) << " *";
      for (const auto& [f, e] : fact.factors) {
        std::cout << " (" << format_poly(f) << ")";
        if (e > 1) std::cout << "^" << e;
      }
      std::cout << "\n";
      std::cout << "monic divisors: " << DivisorSeq(fact).count() << "\n";
      return 0;
    }
    if (s_code->parsed()) {
      Field F = field_of(field_arg);
      if (!gqp_f.empty()) {
        std::vector<Poly> fl, al;
        std::istringstream fs(gqp_f), as(gqp_a), ps(gqp_p);
        std::string item;
        while (std::getline(fs, item, ',')) fl.push_back(parse_poly(item, F));
        while (std::getline(as, item, ',')) al.push_back(parse_poly(item, F));
        std::vector<felem> scal;
        while (std::getline(ps, item, ',')) scal.push_back(parse_poly(item, F).coeff(0));
        for (std::size_t i = 0; i < scal.size() && i < al.size(); ++i)
          al[i] = al[i] * scal[i];
        Poly h = gqp_check_poly(fl, al);
        std::cout << "check poly  " << format_poly(h) << "\n";
        LinearCode c = gqp_rows ? gqp_subcode(fl, al, gqp_rows) : gqp_code(fl, al);
        print_code(c, budget);
      } else if (!code_f.empty()) {
        LinearCode c = polycyclic_code(parse_poly(code_f, F), parse_poly(code_g, F));
        print_code(c, budget);
      } else {
        LinearCode c = constacyclic_code(code_n, FieldElement(F, parse_poly(code_lambda, F).coeff(0)),
                                         parse_poly(code_g, F));
        print_code(c, budget);
      }
      return 0;
    }
    if (s_css->parsed()) {
      Field F = field_of(field_arg);
      FieldElement lambda(F, parse_poly(css_lambda, F).coeff(0));
      LinearCode c1 = constacyclic_code(css_n, lambda, parse_poly(css_g, F));
      QuantumParams p = css_gf.empty()
                            ? css_dual_containing(c1, budget)
                            : css(c1, dual(constacyclic_code(css_n, lambda, parse_poly(css_gf, F))),
                                  budget);
      std::cout << p.to_string() << "  via " << p.provenance << "\n";
      return 0;
    }
    if (s_ls->parsed()) {
      Field F = field_of(field_arg);
      LinearCode c = constacyclic_code(ls_n, FieldElement(F, parse_poly(ls_lambda, F).coeff(0)),
                                       parse_poly(ls_g, F));
      QuantumParams p = lisonek_singh(c, budget);
      std::cout << p.to_string() << "  e=" << *p.e << "  via " << p.provenance << "\n";
      return 0;
    }
    if (s_search->parsed()) {
      Field F = field_of(field_arg);
      auto show = [&](const auto& res) {
        std::size_t shown = 0;
        for (const auto& c : res.ranked) {
          if (shown++ >= search_top) break;
          std::cout << c.params.to_string() << "  " << c.params.provenance << "\n";
        }
        std::cout << "(" << res.ranked.size() << " ranked, " << res.unresolved.size()
                  << " unresolved)\n";
      };
      felem lambda = parse_poly(search_lambda, F).coeff(0);
      if (search_kind == "constacyclic") {
        show(css_constacyclic_search(F, search_n, lambda, budget, common.seed));
      } else if (search_kind == "polycyclic") {
        show(polycyclic_search(F, search_n, search_trials, common.seed, budget));
      } else if (search_kind == "gqp") {
        std::vector<std::uint32_t> degs;
        std::istringstream bs(search_blocks);
        std::string item;
        while (std::getline(bs, item, ',')) degs.push_back(std::uint32_t(std::stoul(item)));
        show(gqp_search(F, degs, search_trials, common.seed, budget));
      } else if (search_kind == "ls") {
        show(ls_search(F, search_n, lambda, search_emax, budget, common.seed));
      } else {
        std::cerr << "unknown search kind " << search_kind << "\n";
        return 2;
      }
      return 0;
    }
    if (s_verify->parsed()) {
      auto rows = load_fixture(fixture);
      if (only_table) {
        std::vector<TableRow> sel;
        for (auto& r : rows)
          if (r.table_id == only_table) sel.push_back(r);
        rows = std::move(sel);
      }
      Report rep = reproduce_table(rows, budget, common.jobs);
      std::cout << rep.to_text();
      if (!json_out.empty()) {
        std::ofstream out(json_out);
        out << rep.to_json() << "\n";
      }
      return rep.exit_code();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
