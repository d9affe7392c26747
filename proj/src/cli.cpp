#include "sinecone/cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "sinecone/catalog.hpp"
#include "sinecone/conemaps.hpp"
#include "sinecone/errors.hpp"
#include "sinecone/json_io.hpp"
#include "sinecone/radial.hpp"
#include "sinecone/rigidity.hpp"
#include "sinecone/stability.hpp"
#include "sinecone/symcheck.hpp"

namespace sinecone::cli {

namespace {

struct Source {
  std::string input;
  int sphere = 0;
  std::string product;
  bool override_hypotheses = false;
};

void add_source(CLI::App* app, Source& src) {
  auto* g = app->add_option_group("source");
  g->add_option("--input", src.input, "spectrum JSON file (looked up in SINECONE_DATA_DIR)");
  g->add_option("--sphere", src.sphere, "built-in round sphere S^n");
  g->add_option("--product", src.product, "product base: total dimension N or factor dimensions N1,N2");
  g->require_option(1);
  app->add_flag("--override", src.override_hypotheses, "accept bases outside the Obata/Killing bounds");
}

GeometricSpectrum load_source(const Source& src, const QuadReal& cutoff_hint, int extra, std::ostream& err) {
  GeometricSpectrum gs;
  if (!src.input.empty()) {
    LoadResult r = load_geometric_spectrum(src.input);
    for (const auto& w : r.warnings) err << Json{{"warning", w}}.dump() << "\n";
    gs = std::move(r.spectrum);
  } else if (src.sphere > 0) {
    int n = src.sphere;
    QuadReal c(Rational(cutoff_hint.ceil() + 2 * n + extra + 2));
    gs = sphere_geometric(n, c);
  } else {
    ProductMarker pm;
    auto comma = src.product.find(',');
    try {
      if (comma == std::string::npos) {
        pm = product_of_dimension(std::stoi(src.product));
      } else {
        pm.n1 = std::stoi(src.product.substr(0, comma));
        pm.n2 = std::stoi(src.product.substr(comma + 1));
      }
    } catch (const std::logic_error&) {
      fail(ErrorKind::ParseError, "--product expects N or N1,N2");
    }
    gs = product_geometric(pm);
  }
  if (src.override_hypotheses) gs.override_hypotheses = true;
  return gs;
}

std::string origins_text(const SpectralLine& line) {
  std::string s;
  for (const auto& o : line.origins) {
    if (!s.empty()) s += " ";
    s += std::string(block_name(o.block)) + "(" + std::to_string(o.i) + "," + std::to_string(o.j) + ")x" +
         std::to_string(o.mult);
  }
  return s;
}

void print_table(std::ostream& out, const std::string& title, const Spectrum& s) {
  out << "# " << title << "  (complete up to " << s.cutoff.str() << ")\n";
  out << std::left << std::setw(28) << "value" << std::setw(16) << "decimal" << std::setw(8) << "mult"
      << "origins\n";
  for (const auto& line : s.lines) {
    out << std::left << std::setw(28) << line.value.str() << std::setw(16) << line.value.to_decimal(6)
        << std::setw(8) << line.multiplicity << origins_text(line) << "\n";
  }
}

Json verdict_json(const Verdict& v, bool with_strict = true) {
  Json j{{"verdict", v.stable}};
  if (with_strict) j["strict"] = v.strict;
  if (v.witness) {
    j["witness_value"] = quad_to_json(v.witness->value);
    j["witness_decimal"] = v.witness->value.to_decimal(6);
    if (v.witness->origin) {
      const Origin& o = *v.witness->origin;
      j["witness_origin"] = Json{{"component", v.witness->component}, {"block", block_name(o.block)}, {"i", o.i}, {"j", o.j}};
    } else {
      j["witness_origin"] = Json{{"component", v.witness->component}};
    }
  } else {
    j["witness_value"] = nullptr;
    j["witness_origin"] = nullptr;
  }
  return j;
}

Json report_json(const StabilityReport& r) {
  Json j{{"n", r.n},
         {"eh", verdict_json(r.eh)},
         {"linear", verdict_json(r.linear)},
         {"tangential", verdict_json(r.tangential)},
         {"physical", verdict_json(r.physical, false)}};
  if (r.bounded_below) j["bounded_below"] = *r.bounded_below;
  Json th = Json::array();
  for (const auto& [name, v] : r.thresholds) {
    th.push_back(Json{{"name", name}, {"value", quad_to_json(v)}, {"decimal", v.to_decimal(6)}});
  }
  j["thresholds"] = th;
  return j;
}

void print_report(std::ostream& out, const std::string& title, const StabilityReport& r) {
  out << "# " << title << " (n=" << r.n << ")\n";
  auto row = [&](const char* name, const Verdict& v, bool strict) {
    out << std::left << std::setw(12) << name << std::setw(8) << (v.stable ? "yes" : "no");
    if (strict) out << std::setw(14) << (v.strict ? "strict: yes" : "strict: no");
    else out << std::setw(14) << "";
    if (v.witness) out << "witness " << v.witness->value.str() << " (" << v.witness->value.to_decimal(6) << ")";
    out << "\n";
  };
  row("EH", r.eh, true);
  row("linear", r.linear, true);
  row("tangential", r.tangential, true);
  row("physical", r.physical, false);
  if (r.bounded_below) out << "bounded below: " << (*r.bounded_below ? "yes" : "no") << "\n";
  for (const auto& [name, v] : r.thresholds) out << "threshold " << name << " = " << v.str() << " (" << v.to_decimal(6) << ")\n";
}

Json radial_json(const RadialReport& r) {
  Json modes = Json::array();
  for (const auto& m : r.modes) {
    modes.push_back(Json{{"j", m.j}, {"target", m.target}, {"computed", m.computed}, {"rel_error", m.error}, {"pass", m.pass}});
  }
  return Json{{"n", r.n},       {"coupling", rational_string(r.coupling)}, {"N", r.grid_points},
              {"eps", r.boundary_offset}, {"tol", r.tol}, {"modes", modes}, {"pass", r.pass}};
}

Json sym_json(const std::string& label, const SymReport& r) {
  Json ids = Json::array();
  for (const auto& id : r.identities) {
    ids.push_back(Json{{"identity", id.name}, {"checked", id.checked}, {"residual_zero", id.pass}});
  }
  return Json{{"check", label}, {"pass", r.pass}, {"identities", ids}};
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnboundedBelow:
    case ErrorKind::BelowHardyBound:
      return kUnboundedBelow;
    case ErrorKind::VerificationFailed:
    case ErrorKind::IdentityFailed:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::DecompositionFailed:
    case ErrorKind::SolverDisagreement:
    case ErrorKind::ConvergenceFailure:
      return kVerificationFailed;
    default:
      return kInvalidInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact cone spectra over closed Einstein bases", "sinecone"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));

  Source src;
  std::string cutoff_text;
  std::string op = "laplace";
  std::string blocks;
  int k = 1;
  int from = 4, to = 20;
  int rn = 3, modes = 4, grid = 4000, jmax = 4, kk = 2;
  std::string rc = "0", rblock = "function", kappa_text;
  double eps = 1e-6, tol = 1e-3;
  std::vector<double> eps_list{0.4, 0.2, 0.1, 0.05};
  bool demo = false;

  auto* spectrum = app.add_subcommand("spectrum", "cone spectrum of one operator");
  add_source(spectrum, src);
  spectrum->add_option("--operator", op)->check(CLI::IsMember({"laplace", "one-forms", "einstein"}));
  spectrum->add_option("--cutoff", cutoff_text, "integer, p/q or QuadReal JSON")->required();
  spectrum->add_option("--blocks", blocks,
                       "comma list; one-forms: exact, coclosed; einstein: conformal, delta-star, tt (default all)");

  auto* stability = app.add_subcommand("stability", "base classification, cone prediction and direct check");
  add_source(stability, src);
  stability->add_option("--cutoff", cutoff_text, "cone cutoff for the direct check");

  auto* rigidity = app.add_subcommand("rigidity", "infinitesimal Einstein deformations of the cone");
  add_source(rigidity, src);

  auto* vrad = app.add_subcommand("verify-radial", "finite-difference check of the closed forms");
  vrad->add_option("--n", rn);
  vrad->add_option("--c", rc, "coupling (rational)");
  vrad->add_option("--block", rblock)->check(CLI::IsMember({"function", "tt"}));
  vrad->add_option("--modes", modes);
  vrad->add_option("--N", grid);
  vrad->add_option("--eps", eps);
  vrad->add_option("--tol", tol);
  vrad->add_flag("--demo-rayleigh", demo, "Rayleigh quotients of a concentrating bump instead");
  vrad->add_option("--kappa", kappa_text);
  vrad->add_option("--eps-list", eps_list)->delimiter(',');

  auto* vsym = app.add_subcommand("verify-symbolic", "exact two-variable identities");
  vsym->add_option("--n", rn);
  vsym->add_option("--k", kk);
  vsym->add_option("--jmax", jmax);

  auto* iter = app.add_subcommand("iterate", "k-fold sine-cone spectra");
  add_source(iter, src);
  iter->add_option("--k", k);
  iter->add_option("--cutoff", cutoff_text)->required();
  bool partial = false;
  iter->add_flag("--partial", partial, "lower the cutoff of lists the base cannot support instead of failing");

  auto* scan = app.add_subcommand("scan-products", "IED and boundedness scan over product bases");
  scan->add_option("--from", from);
  scan->add_option("--to", to);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  const bool json = format == "json";

  try {
    if (spectrum->parsed()) {
      QuadReal cutoff = parse_quad(cutoff_text);
      GeometricSpectrum gs = load_source(src, cutoff, 0, err);
      Json blocks_json = Json::object();
      std::vector<std::pair<std::string, Spectrum>> parts;
      bool outside = false;
      if (op == "laplace") {
        parts.emplace_back("functions", map_functions(gs, cutoff));
      } else if (op == "one-forms") {
        OneFormParts sel{blocks.empty(), blocks.empty()};
        std::stringstream ss(blocks);
        for (std::string b; std::getline(ss, b, ',');) {
          if (b == "exact") sel.exact = true;
          else if (b == "coclosed") sel.coclosed = true;
          else fail(ErrorKind::ParseError, "unknown one-form part '" + b + "'");
        }
        auto r = map_one_forms(gs, cutoff, sel);
        outside = r.outside_hypotheses;
        if (r.exact_part) parts.emplace_back("exact", *r.exact_part);
        if (r.coclosed_part) parts.emplace_back("coclosed", *r.coclosed_part);
      } else {
        const bool all = blocks.empty();
        EinsteinBlocks sel{all, all, all};
        std::stringstream ss(blocks);
        for (std::string b; std::getline(ss, b, ',');) {
          if (b == "conformal") sel.conformal = true;
          else if (b == "delta-star") sel.delta_star = true;
          else if (b == "tt") sel.tt = true;
          else fail(ErrorKind::ParseError, "unknown block '" + b + "'");
        }
        auto r = map_einstein(gs, cutoff, sel);
        outside = r.outside_hypotheses;
        if (r.conformal_block) parts.emplace_back("conformal", *r.conformal_block);
        if (r.delta_star_block) parts.emplace_back("delta-star", *r.delta_star_block);
        if (r.tt_block) parts.emplace_back("tt", *r.tt_block);
        blocks_json["exceptional"] = Json{{"lambda1_eq_n", r.case_lambda1_eq_n}, {"mu1_eq_n_minus_1", r.case_mu1_eq_n_minus_1}};
      }
      if (json) {
        Json j{{"n", gs.n + 1}, {"operator", op}, {"cutoff", quad_to_json(cutoff)}};
        if (outside) j["tag"] = "outside paper hypotheses";
        for (const auto& [name, s] : parts) {
          blocks_json[name] = Json{{"cutoff", quad_to_json(s.cutoff)}, {"lines", spectrum_to_json(s)}};
        }
        j["blocks"] = blocks_json;
        out << j.dump(2) << "\n";
      } else {
        out << "# cone dimension " << gs.n + 1 << ", operator " << op << "\n";
        if (outside) out << "# outside paper hypotheses\n";
        for (const auto& [name, s] : parts) print_table(out, name, s);
      }
      return kOk;
    }

    if (stability->parsed()) {
      GeometricSpectrum gs = load_source(src, QuadReal(2 * (src.sphere + 2) + 1), 2 * src.sphere, err);
      QuadReal cutoff = cutoff_text.empty() ? default_cone_cutoff(gs) : parse_quad(cutoff_text);
      StabilityReport base = classify(gs);
      CrossCheck cc = cross_check(gs, cutoff);
      if (json) {
        Json j{{"base", report_json(base)},
               {"cone_predicted", report_json(cc.predicted)},
               {"cone_direct", report_json(cc.direct)},
               {"consistent", cc.consistent},
               {"discrepancies", cc.discrepancies}};
        out << j.dump(2) << "\n";
      } else {
        print_report(out, "base", base);
        print_report(out, "cone (predicted from base)", cc.predicted);
        print_report(out, "cone (direct from computed spectra)", cc.direct);
        out << "consistent: " << (cc.consistent ? "yes" : "no") << "\n";
        for (const auto& d : cc.discrepancies) out << "discrepancy: " << d << "\n";
      }
      return cc.consistent ? kOk : kVerificationFailed;
    }

    if (rigidity->parsed()) {
      GeometricSpectrum gs = load_source(src, QuadReal(0), 0, err);
      auto certs = find_ieds(gs);
      if (json) {
        Json arr = Json::array();
        for (const auto& c : certs) {
          arr.push_back(Json{{"kappa", quad_to_json(c.kappa)}, {"j", c.j}, {"bounded", c.bounded},
                             {"multiplicity", c.multiplicity}});
        }
        out << Json{{"n", gs.n + 1}, {"certificates", arr}}.dump(2) << "\n";
      } else {
        out << "# IED certificates on the cone of dimension " << gs.n + 1 << "\n";
        if (certs.empty()) out << "none\n";
        for (const auto& c : certs) {
          out << "kappa=" << c.kappa.str() << " j=" << c.j << " mult=" << c.multiplicity << " "
              << (c.bounded ? "bounded" : "unbounded-profile (L2)") << "\n";
        }
      }
      return kOk;
    }

    if (vrad->parsed()) {
      if (demo) {
        Rational kappa = parse_rational(kappa_text.empty() ? rc : kappa_text);
        auto q = rayleigh_unbounded_demo(rn, kappa, eps_list);
        if (json) {
          Json arr = Json::array();
          for (std::size_t i = 0; i < q.size(); ++i) arr.push_back(Json{{"eps", eps_list[i]}, {"quotient", q[i]}});
          out << Json{{"n", rn}, {"kappa", rational_string(kappa)}, {"quotients", arr}}.dump(2) << "\n";
        } else {
          out << "eps,quotient,eps2_times_quotient\n";
          out << std::setprecision(10);
          for (std::size_t i = 0; i < q.size(); ++i) {
            out << eps_list[i] << "," << q[i] << "," << eps_list[i] * eps_list[i] * q[i] << "\n";
          }
        }
        return kOk;
      }
      Rational c = parse_rational(rc);
      RadialBlock block = rblock == "tt" ? RadialBlock::TT : RadialBlock::Function;
      if (block == RadialBlock::TT && c < hardy_bound(rn)) {
        fail(ErrorKind::UnboundedBelow, "coupling " + rational_string(c) +
                                            " is below -(n-1)^2/4; the radial form has no lowest eigenvalue "
                                            "(see --demo-rayleigh)");
      }
      RadialProblem p{rn, c, block, grid, eps};
      std::vector<double> computed = solve_radial(p, modes);
      RadialReport r = compare_to_targets(computed, closed_form_targets(rn, c, modes), tol);
      r.n = rn;
      r.coupling = c;
      r.block = block;
      r.grid_points = grid;
      r.boundary_offset = eps;
      if (json) {
        out << radial_json(r).dump(2) << "\n";
      } else {
        out << "# n=" << rn << " block=" << rblock << " c=" << rational_string(c) << " N=" << grid << " eps=" << eps
            << "\n";
        out << std::setprecision(10);
        for (const auto& m : r.modes) {
          out << "j=" << m.j << " target=" << m.target << " computed=" << m.computed << " error=" << m.error
              << (m.pass ? " ok" : " FAIL") << "\n";
        }
      }
      throw_if_failed(r);
      return kOk;
    }

    if (vsym->parsed()) {
      std::vector<std::pair<std::string, SymReport>> reports;
      reports.emplace_back("commutators", check_commutators(rn));
      for (int j = 0; j <= jmax; ++j) {
        std::string tag = " j=" + std::to_string(j);
        build_harmonic_family(rn, kk, j);
        reports.emplace_back("decomposition" + tag, verify_decomposition(rn, kk, j));
        if (kk >= 1) reports.emplace_back("formulas1" + tag, verify_formulas1(rn, kk, j));
        if (kk >= 2) reports.emplace_back("formulas2" + tag, verify_formulas2(rn, kk, j));
        if (kk >= 2) reports.emplace_back("formulas3" + tag, verify_formulas3(rn, kk, j));
      }
      if (json) {
        Json arr = Json::array();
        for (const auto& [label, r] : reports) arr.push_back(sym_json(label, r));
        out << Json{{"n", rn}, {"k", kk}, {"jmax", jmax}, {"checks", arr}}.dump(2) << "\n";
      } else {
        for (const auto& [label, r] : reports) {
          for (const auto& id : r.identities) {
            out << label << ": " << id.name << " [" << id.checked << "] " << (id.pass ? "zero" : "NONZERO") << "\n";
          }
        }
      }
      return kOk;
    }

    if (iter->parsed()) {
      QuadReal cutoff = parse_quad(cutoff_text);
      GeometricSpectrum gs = load_source(src, cutoff, 2 * k, err);
      GeometricSpectrum res = iterate(gs, k, cutoff, partial);
      if (json) {
        out << geometric_to_json(res).dump(2) << "\n";
      } else {
        out << "# " << k << "-fold sine-cone, dimension " << res.n << "\n";
        print_table(out, "spec0", res.spec0);
        if (res.spec1D) print_table(out, "spec1D", *res.spec1D);
        if (res.specE_TT) print_table(out, "specE_TT", *res.specE_TT);
      }
      return kOk;
    }

    if (scan->parsed()) {
      auto rows = product_rigidity_scan(from, to);
      if (json) {
        Json arr = Json::array();
        for (const auto& r : rows) {
          Json j{{"n", r.n}, {"kappa", quad_to_json(r.kappa)}, {"ell_squared", r.ell_squared.get_str()},
                 {"ell_integral", r.ell_integral}};
          j["status"] = r.status == ScanStatus::UnboundedBelow ? "unbounded-below"
                        : r.status == ScanStatus::IED         ? "ied"
                                                              : "none";
          if (r.m1) j["m1"] = quad_to_json(*r.m1);
          if (r.certificate) j["j"] = r.certificate->j;
          arr.push_back(j);
        }
        out << Json{{"rows", arr}}.dump(2) << "\n";
      } else {
        out << std::left << std::setw(5) << "n" << std::setw(8) << "kappa" << std::setw(26) << "m1" << std::setw(18)
            << "status" << "(n-9)(n-1)\n";
        for (const auto& r : rows) {
          std::string status = r.status == ScanStatus::UnboundedBelow ? "unbounded-below"
                               : r.status == ScanStatus::IED ? "IED j=" + std::to_string(r.certificate->j)
                                                             : "none";
          out << std::left << std::setw(5) << r.n << std::setw(8) << r.kappa.str() << std::setw(26)
              << (r.m1 ? r.m1->str() : std::string("-")) << std::setw(18) << status << r.ell_squared.get_str()
              << (r.ell_integral ? " (square)" : "") << "\n";
        }
      }
      return kOk;
    }
  } catch (const Error& e) {
    err << Json{{"error", error_name(e.kind())}, {"message", e.what()}}.dump() << "\n";
    return exit_code_for(e.kind());
  }
  return kUsage;
}

}  // namespace sinecone::cli
