#include "qformlab/cli.hpp"

#include "qformlab/eisenstein.hpp"
#include "qformlab/etaq.hpp"
#include "qformlab/etasearch.hpp"
#include "qformlab/newforms.hpp"
#include "qformlab/quadforms.hpp"
#include "qformlab/spaces.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace qformlab::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::int64_t kMinCheckPrecision = kSturmBound + 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string character;
  std::int64_t precision = 60;
  bool precision_given = false;
  bool json = false;
  std::string form;
  std::int64_t n = -1;
  bool oracle = false;
  bool formula = false;
  int index = 0;
  std::string emit;
  std::string target;  // positional argument of eta-expand, ligozat-check, eisenstein, basis
};

std::vector<DirichletChar> selected_characters(const Options& o) {
  if (o.character.empty()) return supported_characters();
  const DirichletChar chi = DirichletChar::parse(o.character);
  const auto& all = supported_characters();
  if (std::find(all.begin(), all.end(), chi) == all.end()) throw UsageError("--char must be one of -3, -4, -8, -24");
  return {chi};
}

void require_check_precision(std::int64_t p) {
  if (p < kMinCheckPrecision) throw UsageError("--precision must be at least " + std::to_string(kMinCheckPrecision));
}

Json series_json(const QSeries<Rational>& f) {
  const bool q_mode = f.is_integral();
  Json terms = Json::array();
  const auto& c = f.stored();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    const std::int64_t e = f.valuation() + static_cast<std::int64_t>(i) * f.stride();
    terms.push_back({{"exponent", q_mode ? e / kGrade : e}, {"coefficient", c[i].to_string()}});
  }
  Json j;
  j["mode"] = q_mode ? "q" : "grade24";
  j["truncation"] = q_mode ? f.truncation() / kGrade : f.truncation();
  j["terms"] = terms;
  return j;
}

void print_series(std::ostream& out, const QSeries<Rational>& f) {
  const bool q_mode = f.is_integral();
  out << "# " << (q_mode ? "q-exponent" : "grade-24 exponent") << " coefficient; unknown from "
      << (q_mode ? "q^" + std::to_string(f.truncation() / kGrade) : "exponent " + std::to_string(f.truncation()))
      << '\n';
  write_series(out, f, q_mode);
}

int cmd_eta_expand(const Options& o, std::ostream& out) {
  const auto f = EtaQuotient::parse(o.target);
  if (o.precision < 1) throw UsageError("--precision must be positive");
  const std::int64_t trunc = kGrade * o.precision;
  if (trunc <= f.valuation24()) throw UsageError("--precision must exceed the order at infinity");
  const auto s = eta_quotient_expansion(f, trunc);
  if (o.json) {
    Json j{{"eta", f.to_string()}};
    j.update(series_json(s));
    out << j.dump(2) << '\n';
  } else {
    print_series(out, s);
  }
  return kExitOk;
}

int cmd_ligozat(const Options& o, std::ostream& out) {
  const auto f = EtaQuotient::parse(o.target);
  const auto rep = ligozat_check(f);
  const std::string chi = rep.character_discriminant ? std::to_string(*rep.character_discriminant) : "none";
  if (o.json) {
    Json orders = Json::object();
    for (const auto& [c, v] : rep.cusp_orders) orders[c.to_string()] = v.to_string();
    Json j{{"eta", f.to_string()},     {"weight", rep.weight.to_string()}, {"l1", rep.l1_ok},
           {"l2", rep.l2_ok},          {"l4", rep.l4_ok},                  {"holomorphic", rep.is_holomorphic},
           {"cusp_form", rep.is_cusp}, {"character", chi},                 {"cusp_orders", orders}};
    out << j.dump(2) << '\n';
  } else {
    out << f.to_string() << '\n'
        << "weight " << rep.weight << '\n'
        << "L1 " << (rep.l1_ok ? "ok" : "fail") << '\n'
        << "L2 " << (rep.l2_ok ? "ok" : "fail") << '\n'
        << "L4 " << (rep.l4_ok ? "ok" : "fail") << '\n';
    for (const auto& [c, v] : rep.cusp_orders) out << "order at " << c.to_string() << ' ' << v << '\n';
    out << "holomorphic " << (rep.is_holomorphic ? "yes" : "no") << '\n'
        << "cusp form " << (rep.is_cusp ? "yes" : "no") << '\n'
        << "character " << chi << '\n';
  }
  return rep.is_holomorphic ? kExitOk : kExitCheckFailed;
}

int cmd_eisenstein(const Options& o, std::ostream& out) {
  const auto spec = EisensteinSpec::parse(o.target);
  if (o.precision < 1) throw UsageError("--precision must be positive");
  const auto s = eisenstein3(spec, o.precision);
  if (o.json) {
    Json j{{"series", spec.to_string()}};
    j.update(series_json(s));
    out << j.dump(2) << '\n';
  } else {
    print_series(out, s);
  }
  return kExitOk;
}

int cmd_basis(const Options& o, std::ostream& out) {
  if (o.target != "dump" && o.target != "verify") throw UsageError("basis action must be dump or verify");
  const auto chars = selected_characters(o);
  Json j = Json::array();
  bool all_ok = true;
  for (const auto& chi : chars) {
    const auto basis = build_basis(chi);
    if (o.target == "dump") {
      if (o.json) {
        j.push_back({{"character", chi.name()}, {"elements", basis_names(basis)}});
      } else {
        if (chars.size() > 1) out << "[chi " << chi.name() << "]\n";
        for (const auto& name : basis_names(basis)) out << name << '\n';
      }
      continue;
    }
    require_check_precision(o.precision);
    const auto rep = verify_basis(basis, o.precision);
    all_ok = all_ok && rep.ok();
    if (o.json) {
      Json cusp = Json::array();
      for (const auto& c : rep.cusp_checks) cusp.push_back({{"eta", c.name}, {"ok", c.ok}});
      j.push_back({{"character", chi.name()},
                   {"size", rep.size},
                   {"rank", rep.rank},
                   {"expected_dimension", rep.expected_dimension},
                   {"distinct_valuations", rep.distinct_valuations},
                   {"cusp_elements", cusp},
                   {"ok", rep.ok()}});
    } else {
      out << "chi " << chi.name() << ": size " << rep.size << ", rank " << rep.rank << ", expected "
          << rep.expected_dimension << ", distinct valuations " << (rep.distinct_valuations ? "yes" : "no") << '\n';
      for (const auto& c : rep.cusp_checks) out << "  " << c.name << (c.ok ? " cusp form ok" : " FAILED") << '\n';
      out << (rep.ok() ? "PASS" : "FAIL") << '\n';
    }
  }
  if (o.json) out << j.dump(2) << '\n';
  return all_ok ? kExitOk : kExitCheckFailed;
}

std::vector<std::int64_t> parse_form(const std::string& text) {
  std::vector<std::int64_t> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v <= 0) throw std::invalid_argument(item);
      coeffs.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--form expects positive integers separated by commas");
    }
  }
  if (coeffs.empty()) throw UsageError("--form is empty");
  return coeffs;
}

int cmd_rep_count(const Options& o, std::ostream& out) {
  if (o.form.empty()) throw UsageError("rep-count needs --form");
  if (o.n < 0) throw UsageError("rep-count needs --n >= 0");
  const auto form = QuadForm::from_coefficients(parse_form(o.form));
  std::string value;
  std::string method = o.formula ? "formula" : "oracle";
  if (o.formula) {
    const auto l = form.exponent_vector();
    if (!l) throw UsageError("--formula needs six coefficients from {1,2,3,6}");
    value = rep_count_formula(derive_formula(*l), o.n).to_string();
  } else {
    value = rep_count_bruteforce(form, o.n).get_str();
  }
  if (o.json) {
    out << Json{{"form", o.form}, {"n", o.n}, {"method", method}, {"count", value}}.dump(2) << '\n';
  } else {
    out << value << '\n';
  }
  return kExitOk;
}

Json row_json(const FormulaRow& row) {
  const auto names = coefficient_names(row.character);
  Json coeffs = Json::object();
  std::size_t i = 0;
  for (const auto& c : row.eisenstein_coeffs) coeffs[names[i++]] = c.to_string();
  for (const auto& c : row.cusp_coeffs) coeffs[names[i++]] = c.to_string();
  const auto l = row.l.as_array();
  return {{"l", l}, {"character", row.character.name()}, {"coefficients", coeffs}};
}

void write_rows_text(std::ostream& out, const DirichletChar& chi, const std::vector<FormulaRow>& rows) {
  out << "[chi " << chi.name() << "]\nl1,l2,l3,l6";
  for (const auto& name : coefficient_names(chi)) out << ',' << name;
  out << '\n';
  for (const auto& row : rows) {
    out << row.l.to_string();
    for (const auto& c : row.eisenstein_coeffs) out << ',' << c;
    for (const auto& c : row.cusp_coeffs) out << ',' << c;
    out << '\n';
  }
}

std::int64_t derivation_precision(const Options& o) {
  const std::int64_t p = o.precision_given ? o.precision : kDerivePrecision;
  require_check_precision(p);
  return p;
}

int cmd_derive_table(const Options& o, std::ostream& out) {
  const auto chars = selected_characters(o);
  const std::int64_t p = derivation_precision(o);
  Json j = Json::array();
  for (const auto& chi : chars) {
    std::vector<FormulaRow> rows;
    for (const auto& l : all_exponent_vectors()) {
      if (classify(l) == chi) rows.push_back(derive_formula(l, p));
    }
    if (o.json) {
      for (const auto& r : rows) j.push_back(row_json(r));
    } else {
      write_rows_text(out, chi, rows);
    }
  }
  if (o.json) out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_verify_tables(const Options& o, std::ostream& out) {
  const std::int64_t p = derivation_precision(o);
  std::vector<FormulaRow> derived;
  for (const auto& l : all_exponent_vectors()) derived.push_back(derive_formula(l, p));
  const auto cmp = compare_tables(derived, bundled_tables());
  if (o.json) {
    Json disc = Json::array();
    for (const auto& d : cmp.discrepancies) {
      disc.push_back({{"l", d.l.as_array()},
                      {"column", d.column},
                      {"table", d.expected.to_string()},
                      {"derived", d.derived.to_string()}});
    }
    Json missing = Json::array();
    for (const auto& l : cmp.missing_rows) missing.push_back(l.as_array());
    out << Json{{"rows_compared", cmp.rows_compared}, {"missing_rows", missing}, {"discrepancies", disc},
                {"ok", cmp.ok()}}
               .dump(2)
        << '\n';
  } else {
    out << "rows compared " << cmp.rows_compared << '\n';
    for (const auto& l : cmp.missing_rows) out << "missing row " << l.to_string() << '\n';
    for (const auto& d : cmp.discrepancies) {
      out << "row " << d.l.to_string() << " column " << d.column << ": table " << d.expected << ", derived "
          << d.derived << '\n';
    }
    out << (cmp.ok() ? "PASS" : "FAIL") << '\n';
  }
  return cmp.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_verify_newforms(const Options& o, std::ostream& out) {
  const std::int64_t p = o.precision_given ? o.precision : kNewformPrecision;
  require_check_precision(p);
  std::vector<int> indices;
  if (o.index == 0) {
    indices = {1, 2, 3, 4, 5};
  } else if (o.index >= 1 && o.index <= 5) {
    indices = {o.index};
  } else {
    throw UsageError("--index must be 1..5");
  }
  bool all_ok = true;
  Json j = Json::array();
  for (const int i : indices) {
    const auto res = verify_newform(i, p);
    const bool ok = res.report.ok() && res.solve_back_ok;
    all_ok = all_ok && ok;
    std::vector<std::string> combo;
    for (const auto& c : res.spec.combo) combo.push_back(c.to_poly_string());
    if (o.json) {
      Json item{{"index", i},
                {"character", res.spec.character.name()},
                {"combo", combo},
                {"relations_checked", res.report.relations_checked},
                {"multiplicative", res.report.multiplicative},
                {"prime_squares", res.report.prime_squares},
                {"in_cusp_space", res.report.in_cusp_space},
                {"solve_back", res.solve_back_ok},
                {"ok", ok}};
      if (res.report.first_failure) item["first_failure"] = *res.report.first_failure;
      if (res.fallback) {
        std::vector<std::string> re;
        if (res.fallback->combo)
          for (const auto& c : *res.fallback->combo) re.push_back(c.to_poly_string());
        item["rederived_combo"] = re;
        item["differing_positions"] = res.fallback->differing_positions;
      }
      j.push_back(item);
    } else {
      out << "f" << i << " (chi " << res.spec.character.name() << "): " << res.report.relations_checked
          << " relations, " << (ok ? "PASS" : "FAIL") << '\n';
      if (res.report.first_failure) out << "  first failure: " << *res.report.first_failure << '\n';
      if (!res.solve_back_ok) out << "  solve-back does not reproduce the combination\n";
      if (res.fallback) {
        if (res.fallback->combo) {
          out << "  re-derived combination:";
          for (const auto& c : *res.fallback->combo) out << " [" << c.to_poly_string() << ']';
          out << '\n';
        } else {
          out << "  re-derivation found no unique combination\n";
        }
      }
    }
  }
  if (o.json) out << j.dump(2) << '\n';
  return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_census(const Options& o, std::ostream& out) {
  const auto chars = selected_characters(o);
  const std::int64_t p = o.precision_given ? o.precision : 61;
  require_check_precision(p);
  std::ofstream emit;
  if (!o.emit.empty()) {
    emit.open(o.emit);
    if (!emit) throw std::runtime_error("cannot open " + o.emit);
  }
  bool sound = true;
  Json j = Json::array();
  for (const auto& chi : chars) {
    auto res = enumerate_space(chi, false);
    std::size_t expressible = 0;
    for (const auto& f : res.members) {
      if (eisenstein_expressible(f, chi, p)) ++expressible;
    }
    sound = sound && res.soundness_ok;
    if (emit) {
      for (const auto& f : res.members) emit << f.to_string() << '\n';
    }
    if (o.json) {
      j.push_back({{"character", chi.name()},
                   {"members", res.members.size()},
                   {"eisenstein_expressible", expressible},
                   {"sound", res.soundness_ok}});
    } else {
      out << "chi " << chi.name() << ": " << res.members.size() << " eta quotients, " << expressible
          << " Eisenstein-expressible" << (res.soundness_ok ? "" : " (soundness check FAILED)") << '\n';
    }
  }
  if (o.json) out << j.dump(2) << '\n';
  return sound ? kExitOk : kExitCheckFailed;
}

int cmd_verify_remarks(const Options& o, std::ostream& out) {
  require_check_precision(o.precision);
  const auto rep = verify_remark_identities(o.precision);
  if (o.json) {
    Json j = Json::array();
    for (const auto& c : rep.checks) {
      Json item{{"identity", c.name}, {"ok", c.ok}};
      if (c.first_failure) item["first_failure"] = *c.first_failure;
      j.push_back(item);
    }
    out << Json{{"precision", o.precision}, {"identities", j}, {"ok", rep.ok()}}.dump(2) << '\n';
  } else {
    for (const auto& c : rep.checks) {
      out << (c.ok ? "ok   " : "FAIL ") << c.name;
      if (c.first_failure) out << " (first mismatch at q^" << *c.first_failure << ')';
      out << '\n';
    }
    out << (rep.ok() ? "PASS" : "FAIL") << '\n';
  }
  return rep.ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact weight-3 modular forms on Gamma_0(24): eta quotients, bases, formulas", "qformlab"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_char) {
    sub->add_option("--precision", o.precision, "number of q-coefficients (q^0 .. q^(N-1))");
    sub->add_flag("--json", o.json, "machine-readable output");
    if (with_char) sub->add_option("--char", o.character, "character discriminant: -3, -4, -8 or -24");
  };

  auto* eta_expand = app.add_subcommand("eta-expand", "q-expansion of an eta quotient");
  eta_expand->add_option("eta", o.target, "e.g. eta24[0,3,0,-4,-5,2,16,-6]")->required();
  add_common(eta_expand, false);

  auto* ligozat = app.add_subcommand("ligozat-check", "modularity conditions, cusp orders and character");
  ligozat->add_option("eta", o.target)->required();
  add_common(ligozat, false);

  auto* eis = app.add_subcommand("eisenstein", "q-expansion of E3[chi,psi,t]");
  eis->add_option("spec", o.target, "e.g. E3[-4,1,2]")->required();
  add_common(eis, false);

  auto* basis = app.add_subcommand("basis", "dump or verify the bundled bases");
  basis->add_option("action", o.target, "dump or verify")->required();
  add_common(basis, true);

  auto* rep = app.add_subcommand("rep-count", "representation number of a diagonal form");
  rep->add_option("--form", o.form, "coefficients, e.g. 1,1,1,1,3,3");
  rep->add_option("--n", o.n, "the represented integer");
  auto* oracle = rep->add_flag("--oracle", o.oracle, "brute-force enumeration (default)");
  auto* formula = rep->add_flag("--formula", o.formula, "derived modular-forms formula");
  oracle->excludes(formula);
  add_common(rep, false);

  auto* derive = app.add_subcommand("derive-table", "derive formula rows for one or all characters");
  add_common(derive, true);

  auto* vtables = app.add_subcommand("verify-tables", "compare derived rows with the bundled tables");
  add_common(vtables, false);

  auto* vnew = app.add_subcommand("verify-newforms", "Hecke checks for f1..f5");
  vnew->add_option("--index", o.index, "1..5 (default: all)");
  add_common(vnew, false);

  auto* census = app.add_subcommand("census", "enumerate holomorphic weight-3 eta quotients of level 24");
  census->add_option("--emit", o.emit, "write members, one per line");
  add_common(census, true);

  auto* remarks = app.add_subcommand("verify-remarks", "check the eta-quotient divisor-sum identities");
  add_common(remarks, false);

  std::vector<const char*> argv{"qformlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }
  for (const auto* sub : app.get_subcommands()) o.precision_given = sub->count("--precision") > 0;

  try {
    if (*eta_expand) return cmd_eta_expand(o, out);
    if (*ligozat) return cmd_ligozat(o, out);
    if (*eis) return cmd_eisenstein(o, out);
    if (*basis) return cmd_basis(o, out);
    if (*rep) return cmd_rep_count(o, out);
    if (*derive) return cmd_derive_table(o, out);
    if (*vtables) return cmd_verify_tables(o, out);
    if (*vnew) return cmd_verify_newforms(o, out);
    if (*census) return cmd_census(o, out);
    if (*remarks) return cmd_verify_remarks(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace qformlab::cli
