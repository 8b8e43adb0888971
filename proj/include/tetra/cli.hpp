#pragma once

// Command-line front end. run_cli takes the arguments after the program name
// and returns the exit code: 0 success, 1 verification failure, 2 usage or
// parse error.

#include "tetra/expr.hpp"
#include "tetra/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace tetra::cli {

enum class Format { Text, Records };

namespace detail {

inline std::string record(std::initializer_list<std::pair<std::string, std::string>> kv) {
  std::string s;
  for (const auto& [k, v] : kv) {
    if (!s.empty()) s += '\t';
    s += k + "=" + v;
  }
  return s;
}

inline Perm4 parse_perm_arg(const std::string& s) {
  if (auto g = expr::detail::named_gen(s)) return *g;
  return Perm4::parse(s);
}

inline void write_components(std::ostream& os, Format f, const std::vector<std::pair<std::string, std::string>>& parts) {
  for (const auto& [label, value] : parts) {
    if (f == Format::Records)
      os << record({{"component", label}, {"value", value}}) << '\n';
    else
      os << label << ": " << value << '\n';
  }
}

inline std::vector<std::pair<std::string, std::string>> decompose(const std::string& input, const std::string& by) {
  std::vector<std::pair<std::string, std::string>> parts;
  const expr::Expr e = expr::parse(input);
  if (by == "kbasis") {
    auto v = expr::LoopEvaluator().eval(e);
    if (auto* r = std::get_if<RingElem>(&v)) {
      parts.emplace_back("A", to_k_basis(*r).to_string());
    } else {
      const auto& x = std::get<LoopElem>(v);
      for (int i = 0; i < 3; ++i) parts.emplace_back("u" + std::to_string(i), to_k_basis(x.c[static_cast<std::size_t>(i)]).to_string());
    }
    return parts;
  }
  const LoopElem x = expr::eval_loop(e);
  if (by == "grading") {
    auto g = grade_split(x);
    for (int i = 0; i < 3; ++i) parts.emplace_back("g" + std::to_string(i), g[static_cast<std::size_t>(i)].to_string());
  } else {
    auto o = omega_split(x);
    parts.emplace_back("Omega", o[0].to_string());
    parts.emplace_back("Omega'", o[1].to_string());
    parts.emplace_back("Omega''", o[2].to_string());
  }
  return parts;
}

inline void write_census(std::ostream& os, Format f, const Poly& q) {
  int closed = 0;
  for (const auto& spec : enumerate_ideal_specs(q, {Rat(1), Rat(-1), Rat(2, 3)})) {
    auto c = is_closed(spec);
    if (!c.closed) continue;
    ++closed;
    if (f == Format::Records)
      os << record({{"spec", spec.to_string()}, {"closed", "1"}}) << '\n';
    else
      os << spec.to_string() << '\n';
  }
  if (f == Format::Records)
    os << record({{"J", q.to_string()}, {"closed_count", std::to_string(closed)}}) << '\n';
  else
    os << "closed ideals: " << closed << '\n';
}

inline void write_check(std::ostream& os, Format f, const OnsagerIdealSpec& spec) {
  auto c = is_closed(spec);
  const bool ideal = is_ideal(spec);
  const std::string witness = c.witness ? quotient_vec_to_string(*c.witness) : "";
  if (f == Format::Records) {
    os << record({{"spec", spec.to_string()},
                  {"ideal", ideal ? "1" : "0"},
                  {"closed", c.closed ? "1" : "0"},
                  {"witness", witness}})
       << '\n';
    return;
  }
  os << spec.to_string() << '\n';
  os << "ideal: " << (ideal ? "yes" : "no") << '\n';
  os << "closed: " << (c.closed ? "yes" : "no") << '\n';
  if (c.witness) os << "witness: " << witness << '\n';
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations in the three-point sl2 loop algebra, its Onsager subalgebra and central extension",
               "tetra"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path, format_name = "text";
  app.add_option("--out", out_path, "Write output to this file");
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "records"}));

  std::string e1, context_name = "loop", by, in, perm, suite, jpoly, spec_text;
  std::vector<std::string> exprs;

  auto* eval = app.add_subcommand("eval", "Evaluate an expression to canonical form");
  eval->add_option("expr", e1)->required();
  eval->add_option("--context", context_name)->check(CLI::IsMember({"loop", "onsager", "extension"}));

  auto* dec = app.add_subcommand("decompose", "Split an element into labeled components");
  dec->add_option("expr", e1)->required();
  dec->add_option("--by", by)->required()->check(CLI::IsMember({"grading", "omega", "kbasis"}));

  auto* ideal = app.add_subcommand("ideal", "Ideals of the loop algebra");
  ideal->require_subcommand(1);
  auto* igen = ideal->add_subcommand("gen", "Ideal generated by elements");
  igen->add_option("exprs", exprs)->required();
  auto* imem = ideal->add_subcommand("member", "Membership in the ideal g I with I = (poly)");
  imem->add_option("expr", e1)->required();
  imem->add_option("--in", in)->required();

  auto* oid = app.add_subcommand("onsager-ideal", "Ideals of the Onsager algebra");
  oid->require_subcommand(1);
  auto* omem = oid->add_subcommand("member", "Membership in an ideal given by its spec");
  omem->add_option("expr", e1)->required();
  omem->add_option("--in", spec_text)->required();
  auto* ochk = oid->add_subcommand("check", "Ideal and closedness checks for a spec");
  ochk->add_option("spec", spec_text)->required();
  auto* oj = oid->add_subcommand("J", "Coordinate ideal J of the ideal generated by elements");
  oj->add_option("exprs", exprs)->required();

  auto* act = app.add_subcommand("act", "Apply a permutation of {0,1,2,3}");
  act->add_option("perm", perm)->required();
  act->add_option("expr", e1)->required();
  act->add_option("--context", context_name)->check(CLI::IsMember({"loop", "extension"}));

  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("suite", suite)->required()->check(
      CLI::IsMember({"tet", "z", "phi", "s4", "onsager", "nlrta", "extension", "all"}));

  std::vector<std::string> diag;
  auto* cen = app.add_subcommand("centroid", "Check whether v_i -> v_i p_i lies in the Onsager centroid");
  cen->add_option("p", diag)->required()->expected(3);

  auto* census = app.add_subcommand("census", "Enumerations");
  census->require_subcommand(1);
  auto* closed = census->add_subcommand("closed-ideals", "Closed ideals with a given J");
  closed->add_option("--J", jpoly)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  const Format fmt = format_name == "records" ? Format::Records : Format::Text;
  std::ostringstream buf;
  int code = 0;
  try {
    if (*eval) {
      auto r = expr::evaluate(expr::parse(e1), *expr::context_from_name(context_name));
      if (fmt == Format::Records) {
        for (const auto& [b, c] : r.records) buf << detail::record({{"basis", b}, {"coeff", c}}) << '\n';
      } else {
        buf << r.text << '\n';
      }
    } else if (*dec) {
      detail::write_components(buf, fmt, detail::decompose(e1, by));
    } else if (*igen) {
      std::vector<LoopElem> gens;
      for (const auto& s : exprs) gens.push_back(expr::eval_loop(expr::parse(s)));
      buf << ideal_generated(gens).to_string() << '\n';
    } else if (*imem) {
      GIdeal a{RingIdeal::generated_by(expr::parse_ring(in))};
      buf << (ideal_member_g(expr::eval_loop(expr::parse(e1)), a) ? "true" : "false") << '\n';
    } else if (*omem) {
      auto spec = expr::parse_ideal_spec(spec_text);
      buf << (ideal_member_O(expr::eval_onsager(expr::parse(e1)), spec) ? "true" : "false") << '\n';
    } else if (*ochk) {
      detail::write_check(buf, fmt, expr::parse_ideal_spec(spec_text));
    } else if (*oj) {
      std::vector<OnsagerElem> gens;
      for (const auto& s : exprs) gens.push_back(expr::eval_onsager(expr::parse(s)));
      buf << "J=" << extract_J(gens).to_string() << '\n';
    } else if (*act) {
      const Perm4 p = detail::parse_perm_arg(perm);
      const expr::Expr e = expr::Expr::apply(p, expr::parse(e1));
      buf << expr::evaluate(e, *expr::context_from_name(context_name)).text << '\n';
    } else if (*ver) {
      std::size_t total = 0, failed = 0;
      for (const auto& rep : run_suites(suite)) {
        total += rep.size();
        failed += rep.failures();
        if (fmt == Format::Records) {
          for (const auto& c : rep.checks())
            buf << detail::record({{"suite", rep.suite()},
                                   {"name", c.name},
                                   {"indices", c.indices},
                                   {"status", c.pass ? "PASS" : "FAIL"},
                                   {"residual", c.residual}})
                << '\n';
        } else {
          rep.write(buf);
        }
      }
      buf << "summary: " << total << " checks, " << failed << " failures\n";
      code = failed == 0 ? 0 : 1;
    } else if (*cen) {
      Report rep = diagonal_centroid_check({expr::parse_poly(diag[0]), expr::parse_poly(diag[1]), expr::parse_poly(diag[2])});
      rep.write(buf);
      code = rep.all_pass() ? 0 : 1;
    } else if (*closed) {
      Poly q = expr::parse_poly(jpoly);
      if (q.is_zero()) throw Error("J must be nonzero");
      detail::write_census(buf, fmt, q);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) {
      err << "error: cannot write " << out_path << '\n';
      return 2;
    }
    f << buf.str();
  } else {
    out << buf.str();
  }
  return code;
}

}  // namespace tetra::cli
