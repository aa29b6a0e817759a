#include "qtors/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qtors/families.hpp"
#include "qtors/forms.hpp"
#include "qtors/io.hpp"
#include "qtors/taurig.hpp"

namespace qtors {

namespace {

using nlohmann::json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_quiver(ss.str());
  } catch (const QuiverError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string join_dims(const IntVector& d) {
  std::string s;
  for (Index i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d(i));
  return s;
}

IntVector parse_dims(const std::string& text, int n) {
  std::vector<std::int64_t> xs;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      xs.push_back(std::stoll(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw InputError("not a dimension vector: " + text);
    }
  }
  if (static_cast<int>(xs.size()) != n)
    throw InputError("dimension vector " + text + " needs " + std::to_string(n) + " entries");
  IntVector d(n);
  for (int i = 0; i < n; ++i) d(i) = xs[i];
  return d;
}

void print_matrix(std::ostream& out, const std::string& name, const IntMatrix& m) {
  out << name << ":\n";
  for (Index r = 0; r < m.rows(); ++r) {
    out << " ";
    for (Index c = 0; c < m.cols(); ++c) out << ' ' << m(r, c);
    out << '\n';
  }
}

Catalog dynkin_catalog(const Quiver& q, std::uint64_t seed) {
  const QuiverClass c = classify(q);
  if (c.family != QuiverClass::Family::Dynkin)
    throw InputError("enumeration needs a Dynkin quiver (got " + c.name() + ")");
  return Catalog(q, seed);
}

std::string pair_text(const SttPair& p, const Catalog& cat) {
  std::string s = "{";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? " " : "") + cat.describe(p[k]);
  return s + "}";
}

int emit_report(std::ostream& out, const Report& r, const std::string& format) {
  if (format == "json")
    out << r.to_json().dump(2) << '\n';
  else
    out << r.to_text();
  return r.all_pass() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torsion classes of path algebras of quivers", "qtors"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  if (const char* env = std::getenv("QTORS_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: QTORS_SEED is not an integer\n";
      return 2;
    }
  }
  app.add_option("--seed", seed, "Seed for randomised searches (default 0 or QTORS_SEED)");

  std::string file, format = "text";
  auto text_formats = CLI::IsMember({"text", "json"});

  auto* classify_cmd = app.add_subcommand("classify", "Dynkin, extended Dynkin or wild");
  classify_cmd->add_option("file", file, "Quiver file")->required();
  classify_cmd->add_option("--out", format, "text or json")->check(text_formats);

  std::vector<std::string> dims;
  auto* forms_cmd = app.add_subcommand("forms", "Cartan and Coxeter matrices, Euler form");
  forms_cmd->add_option("file", file, "Quiver file")->required();
  forms_cmd->add_option("--dim", dims, "Dimension vector such as 1,0,2 (up to two)")->expected(0, 2);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Support tau-tilting pairs of a Dynkin quiver");
  enumerate_cmd->add_option("file", file, "Quiver file")->required();
  enumerate_cmd->add_option("--out", format, "text or json")->check(text_formats);

  std::string poset_format = "dot";
  auto* poset_cmd = app.add_subcommand("poset", "Poset of torsion classes of a Dynkin quiver");
  poset_cmd->add_option("file", file, "Quiver file")->required();
  poset_cmd->add_option("--out", poset_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  bool spotcheck = false;
  auto* lattice_cmd = app.add_subcommand("check-lattice", "Decide whether the torsion classes form a lattice");
  lattice_cmd->add_option("file", file, "Quiver file")->required();
  lattice_cmd->add_flag("--spotcheck", spotcheck, "Also test the torsion class axioms on every class");

  int kn = 2, depth = 6;
  auto* kronecker_cmd = app.add_subcommand("kronecker", "Preprojective and preinjective chains of the n-Kronecker quiver");
  kronecker_cmd->add_option("--n", kn, "Number of arrows")->check(CLI::Range(2, 64));
  kronecker_cmd->add_option("--depth", depth, "Modules per component")->check(CLI::Range(4, 12));
  kronecker_cmd->add_option("--out", format, "text or json")->check(text_formats);

  std::string abc, case_tag = "i";
  int tower = 0;
  auto* witness_cmd = app.add_subcommand("witness", "Brick pair with nonvanishing Ext on a wild three-vertex quiver");
  witness_cmd->add_option("file", file, "Quiver file (otherwise --abc)");
  witness_cmd->add_option("--abc", abc, "Multiplicities a,b,c");
  witness_cmd->add_option("--case", case_tag, "Orientation for --abc: i, ii, iii, iv, v, vi or simple")
      ->check(CLI::IsMember({"i", "ii", "iii", "iv", "v", "vi", "simple"}));
  witness_cmd->add_option("--tower", tower, "Build the extension tower to this length")->check(CLI::Range(1, 12));
  witness_cmd->add_option("--out", format, "text or json")->check(text_formats);

  int amax = 6, bmax = 6, cmax = 6;
  auto* scan_cmd = app.add_subcommand("euler-scan", "Closed form of the Euler form over a grid");
  scan_cmd->add_option("--amax", amax)->check(CLI::Range(2, 1000));
  scan_cmd->add_option("--bmax", bmax)->check(CLI::Range(1, 1000));
  scan_cmd->add_option("--cmax", cmax)->check(CLI::Range(0, 1000));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (classify_cmd->parsed()) {
      const Quiver q = load_quiver(file);
      const QuiverClass c = classify(q);
      const LatticeDecision d = decide_lattice_property(q);
      if (format == "json") {
        out << json{{"class", c.name()}, {"family", family_name(c.family)}, {"vertices", q.vertex_count()},
                    {"arrows", q.arrow_count()}, {"lattice", d.lattice}, {"certificate", d.certificate}}
                   .dump(2)
            << '\n';
      } else {
        out << "class: " << c.name() << "\nfamily: " << family_name(c.family) << "\nvertices: " << q.vertex_count()
            << "\narrows: " << q.arrow_count() << '\n';
      }
      return 0;
    }

    if (forms_cmd->parsed()) {
      const Quiver q = load_quiver(file);
      const FormsContext ctx(q);
      print_matrix(out, "cartan", ctx.cartan());
      print_matrix(out, "coxeter", ctx.coxeter());
      print_matrix(out, "coxeter inverse", ctx.coxeter_inverse());
      std::vector<IntVector> ds;
      for (const auto& t : dims) ds.push_back(parse_dims(t, q.vertex_count()));
      for (const auto& d : ds)
        out << "Phi(" << join_dims(d) << ") = (" << join_dims(tau_dimvec(ctx, d)) << "), Phi^-1(" << join_dims(d)
            << ") = (" << join_dims(tau_inverse_dimvec(ctx, d)) << ")\n";
      if (!ds.empty()) {
        const IntVector& x = ds.front();
        const IntVector& y = ds.back();
        const std::int64_t m = euler_form(ctx, x, y);
        const std::int64_t e = euler_form_expansion(q, x, y);
        out << "<(" << join_dims(x) << "),(" << join_dims(y) << ")> = " << m << '\n';
        if (m != e) {
          out << "expansion disagrees: " << e << '\n';
          return 1;
        }
      }
      return 0;
    }

    if (enumerate_cmd->parsed()) {
      const Quiver q = load_quiver(file);
      const Catalog cat = dynkin_catalog(q, seed);
      const auto cliques = enumerate_stt(cat, SttStrategy::CliqueSearch);
      const auto walk = enumerate_stt(cat, SttStrategy::MutationWalk);
      const bool agree = cliques == walk;
      if (format == "json") {
        json j = stt_list_to_json(cliques, cat);
        j["indecomposables"] = cat.size();
        j["strategies_agree"] = agree;
        out << j.dump(2) << '\n';
      } else {
        out << "indecomposables: " << cat.size() << "\nsupport tau-tilting pairs: " << cliques.size()
            << "\nclique search: " << cliques.size() << ", mutation walk: " << walk.size() << '\n';
        for (const auto& p : cliques) out << "  " << pair_text(p, cat) << '\n';
      }
      return agree ? 0 : 1;
    }

    if (poset_cmd->parsed()) {
      const Quiver q = load_quiver(file);
      const Catalog cat = dynkin_catalog(q, seed);
      const TorsionLattice l = torsion_lattice(cat);
      if (poset_format == "json")
        out << export_json(l.poset).dump(2) << '\n';
      else
        out << export_dot(l.poset, "torsion_classes");
      return 0;
    }

    if (lattice_cmd->parsed()) {
      const Quiver q = load_quiver(file);
      const LatticeDecision d = decide_lattice_property(q);
      if (d.quiver_class.family != QuiverClass::Family::Dynkin) {
        out << "lattice predicted: " << (d.lattice ? "true" : "false") << " (" << d.certificate << ")\n";
        return 0;
      }
      const Catalog cat(q, seed);
      const TorsionLattice l = torsion_lattice(cat);
      const LatticeReport r = lattice_report(l.poset);
      out << "lattice: " << (r.lattice ? "true" : "false") << " (" << d.certificate << "), elements: " << l.poset.size()
          << '\n';
      out << "top and bottom: " << (r.top && r.bottom ? "yes" : "no") << ", complete: " << (r.complete ? "yes" : "no")
          << '\n';
      if (!r.lattice && r.counterexample)
        out << "no bound for " << l.poset.label(r.counterexample->first) << " and "
            << l.poset.label(r.counterexample->second) << '\n';
      bool ok = r.lattice == d.lattice && r.complete;
      out << "agrees with the classification: " << (r.lattice == d.lattice ? "yes" : "no") << '\n';
      if (spotcheck) {
        std::size_t violations = 0;
        for (std::size_t i = 0; i < l.pairs.size(); ++i)
          violations += torsion_axiom_spotcheck(l.classes[i], module_summands(l.pairs[i]), cat).size();
        out << "torsion axiom violations: " << violations << '\n';
        ok = ok && violations == 0;
      }
      return ok ? 0 : 1;
    }

    if (kronecker_cmd->parsed()) {
      const KroneckerWindow w = kronecker_window(kn, depth);
      Report r = kronecker_chain_check(w);
      if (format == "text") {
        for (int i = 0; i < depth; ++i)
          out << "A_" << i + 1 << " = (" << join_dims(w.a[i].dims()) << ")  B_" << i + 1 << " = ("
              << join_dims(w.b[i].dims()) << ")\n";
      }
      return emit_report(out, r, format);
    }

    if (witness_cmd->parsed()) {
      WildWitness w;
      if (!file.empty()) {
        if (!abc.empty()) throw InputError("give either a quiver file or --abc");
        w = build_wild_witness(load_quiver(file));
      } else {
        if (abc.empty()) throw InputError("witness needs a quiver file or --abc a,b,c");
        const IntVector p = parse_dims(abc, 3);
        const WitnessCase kinds[] = {WitnessCase::I,  WitnessCase::II, WitnessCase::III,   WitnessCase::IV,
                                     WitnessCase::V,  WitnessCase::VI, WitnessCase::Simple};
        const char* tags[] = {"i", "ii", "iii", "iv", "v", "vi", "simple"};
        WitnessCase kind = WitnessCase::I;
        for (int k = 0; k < 7; ++k)
          if (case_tag == tags[k]) kind = kinds[k];
        try {
          w = build_wild_witness(kind, static_cast<int>(p(0)), static_cast<int>(p(1)), static_cast<int>(p(2)));
        } catch (const std::invalid_argument& e) {
          throw InputError(e.what());
        }
      }
      Report r = verify_witness(w);
      if (tower > 0) {
        const auto t = uniserial_tower(w, tower);
        r.append(tower_report(w, t));
        r.append(nonff_evidence(w, t));
      }
      if (format == "text") out << "quiver: " << quiver_to_json(w.quiver).dump() << '\n';
      return emit_report(out, r, format);
    }

    if (scan_cmd->parsed()) {
      const EulerScan s = euler_scan(amax, bmax, cmax);
      if (s.failures.empty()) {
        out << "all " << s.points << " points: closed form = matrix form, all negative\n";
        return 0;
      }
      out << s.failures.size() << " of " << s.points << " points fail:";
      for (const auto& f : s.failures) out << " (" << f[0] << "," << f[1] << "," << f[2] << ")";
      out << '\n';
      return 1;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const QuiverError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    err << "check failed: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace qtors
