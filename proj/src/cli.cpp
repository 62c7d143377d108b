#include "greenring/cli.hpp"

#include "greenring/error.hpp"
#include "greenring/io.hpp"
#include "greenring/radical.hpp"
#include "greenring/stable.hpp"
#include "greenring/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace greenring {
namespace {

struct Options {
  std::string datum;
  std::string left;
  std::string right;
  std::string suite = "all";
  std::string out;
  std::string compare;
  bool pretty = false;
  std::int64_t max_dim = 200;
};

class Reporter {
 public:
  Reporter(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  Json green(const GreenElement& x) const { return opt_.pretty ? Json(green_pretty(x)) : green_to_json(x); }

  void emit(const Json& j) const {
    const std::string text = opt_.pretty ? j.dump(2) : j.dump();
    if (opt_.out.empty()) {
      out_ << text << "\n";
      return;
    }
    std::ofstream f(opt_.out);
    if (!f) throw Error(ErrorKind::Io, "cannot write " + opt_.out);
    f << text << "\n";
  }

 private:
  const Options& opt_;
  std::ostream& out_;
};

Json axiom_json(const AxiomResult& a) {
  return Json{{"pass", a.pass}, {"checked", a.checked}, {"witness", a.witness}};
}

RingPtr load_ring(const Options& opt) {
  if (opt.datum.empty()) throw Error(ErrorKind::Parse, "--datum is required");
  return GreenRing::create(load_datum(opt.datum));
}

int cmd_describe(const Options& opt, const Reporter& rep) {
  const DatumPtr d = load_datum(opt.datum);
  const std::int64_t N = d->conductor();
  const Group& G = d->group();
  const CharacterTable& t = d->table();
  Json table = Json::array();
  for (const auto& row : t.values) {
    Json r = Json::array();
    for (const Cyclotomic& v : row) r.push_back(cyclotomic_to_json(v, N));
    table.push_back(r);
  }
  std::vector<std::string> reps;
  for (std::int64_t c = 0; c < t.num_classes(); ++c) reps.push_back(G.element_names()[t.class_reps[c]]);
  std::vector<std::int64_t> tau, star;
  for (std::int64_t i = 0; i < d->m(); ++i) {
    tau.push_back(d->tau(i) + 1);
    star.push_back(d->star(i) + 1);
  }
  Json j{{"group", Json{{"family", to_string(G.family())}, {"order", G.order()}, {"exponent", G.exponent()},
                        {"class_representatives", reps}, {"class_sizes", t.class_sizes}}},
         {"labels", t.labels},
         {"dims", t.dims},
         {"character_table", table},
         {"chi", t.labels[d->chi()]},
         {"g", G.element_names()[d->g()]},
         {"q", cyclotomic_to_json(d->q(), N)},
         {"n", d->n()},
         {"l", d->l()},
         {"m", d->m()},
         {"dim_h", d->dim_h()},
         {"conductor", N},
         {"tau", tau},
         {"star", star},
         {"antipode_trace", cyclotomic_to_json(d->antipode_trace(), N)}};
  if (!opt.compare.empty()) {
    const DatumPtr other = load_datum(opt.compare);
    const GaugeComparison gc = compare_gauge(*d, *other);
    Json g{{"trace_left", cyclotomic_to_json(gc.trace_left)},
           {"trace_right", cyclotomic_to_json(gc.trace_right)},
           {"traces_differ", gc.traces_differ}};
    g["cyclic_automorphism"] = gc.cyclic_automorphism ? Json(*gc.cyclic_automorphism) : Json(nullptr);
    j["gauge"] = g;
  }
  rep.emit(j);
  return ExitOk;
}

int cmd_tensor(const Options& opt, const Reporter& rep) {
  const RingPtr r = load_ring(opt);
  if (opt.left.empty() || opt.right.empty()) throw Error(ErrorKind::Parse, "tensor needs --left and --right");
  const BasisLabel a = parse_label(opt.left), b = parse_label(opt.right);
  const GreenElement p = GreenElement::basis(r, a.i, a.j) * GreenElement::basis(r, b.i, b.j);
  rep.emit(Json{{"result", opt.pretty ? Json(green_pretty(p)) : green_to_json(p).at("coeffs")}});
  return ExitOk;
}

int cmd_presentation(const Options& opt, const Reporter& rep) {
  const RingPtr r = load_ring(opt);
  const GroupDatum& d = r->datum();
  const std::int64_t a = d.tau(0) + 1;
  const auto resolve = [&](const DicksonPoly& p) {
    std::ostringstream os;
    os << p;
    std::string s = os.str();
    std::string out;
    for (char c : s) out += c == 'y' ? std::string("a") : std::string(1, c);
    return out;
  };
  Json gens = Json::array();
  for (std::int64_t j = 1; j <= d.n(); ++j)
    gens.push_back(Json{{"j", j}, {"F", resolve(dickson(j))}, {"image", rep.green(phi_eval(r, dickson(j)))}});
  Json terms = Json::array();
  for (const auto& [key, c] : presentation_relation(d.n()).terms) terms.push_back({key.first, key.second, bigint_to_json(c)});
  Json fusion = Json::array();
  for (std::int64_t i = 0; i < d.m(); ++i)
    for (std::int64_t j = 0; j < d.m(); ++j)
      for (std::int64_t k = 0; k < d.m(); ++k)
        if (!d.fusion(i, j, k).is_zero()) fusion.push_back({i + 1, j + 1, k + 1, bigint_to_json(d.fusion(i, j, k))});
  const bool vanishes = phi_eval(r, presentation_relation(d.n())).is_zero();
  rep.emit(Json{{"a", Json{{"simple", a}, {"label", d.table().labels[d.tau(0)]}}},
                {"z", "M[1,2]"},
                {"relation", Json{{"text", "(1 + a - z) F_" + std::to_string(d.n()) + "(a, z) = " + resolve(presentation_relation(d.n()))},
                                  {"terms", terms},
                                  {"vanishes", vanishes}}},
                {"generators", gens},
                {"structure_constants", fusion}});
  return vanishes ? ExitOk : ExitVerificationFailed;
}

int cmd_radical(const Options& opt, const Reporter& rep) {
  const RingPtr r = load_ring(opt);
  const RadicalReport rr = radical_report(r);
  Json roots = Json::array();
  for (const RootCount& rc : rr.roots)
    roots.push_back(Json{{"class", rc.class_index + 1}, {"distinct_roots", rc.distinct_roots}, {"omega3", rc.in_omega3}});
  rep.emit(Json{{"d1", rr.omega.d1},
                {"d2", rr.omega.d2},
                {"d3", rr.omega.d3},
                {"theta", rep.green(rr.theta)},
                {"generator", rep.green(rr.generator)},
                {"rank", rr.rank},
                {"nilpotency_checked", rr.nilpotency_checked},
                {"roots", roots},
                {"simple_quotient_count", rr.simple_quotient_count}});
  return rr.nilpotency_checked && rr.rank == rr.omega.d3 ? ExitOk : ExitVerificationFailed;
}

int cmd_stable(const Options& opt, const Reporter& rep) {
  const RingPtr r = load_ring(opt);
  const GreenRing& R = *r;
  const std::int64_t N = R.datum().conductor();
  const GroupLikeReport gl = grouplike_check(r);
  const BiFrobeniusData bf = bifrobenius_data(r);
  Json phi = Json::array(), delta = Json::array(), s = Json::array(), eps = Json::array();
  for (const Cyclotomic& c : bf.phi) phi.push_back(cyclotomic_to_json(c, N));
  for (std::size_t u = 0; u < bf.delta.size(); ++u) {
    const BasisLabel bu = stable_label(R, static_cast<Index>(u));
    Json terms = Json::array();
    const Coproduct& D = bf.delta[u];
    for (Index v = 0; v < D.rows(); ++v)
      for (Index w = 0; w < D.cols(); ++w) {
        if (D(v, w).is_zero()) continue;
        const BasisLabel bv = stable_label(R, v), bw = stable_label(R, w);
        terms.push_back({bv.i + 1, bv.j, bw.i + 1, bw.j, cyclotomic_to_json(D(v, w), N)});
      }
    delta.push_back(Json{{"b", {bu.i + 1, bu.j}}, {"terms", terms}});
    const BasisLabel bs = stable_label(R, bf.antipode[u]);
    s.push_back({bu.i + 1, bu.j, bs.i + 1, bs.j});
  }
  for (const Cyclotomic& e : epsilon_values(R)) eps.push_back(cyclotomic_to_json(e, N));
  const MonomialReport mono = bifrobenius_on_monomials(r);
  rep.emit(Json{{"grouplike", Json{{"G1", axiom_json(gl.g1)}, {"G2", axiom_json(gl.g2)}, {"G3", axiom_json(gl.g3)}}},
                {"bifrobenius", Json{{"phi", phi},
                                     {"delta", delta},
                                     {"t", stable_to_json(bf.t)},
                                     {"S", s},
                                     {"checks", Json{{"dual_pair", axiom_json(bf.dual_pair)},
                                                     {"counit", axiom_json(bf.counit)},
                                                     {"anti_algebra", axiom_json(bf.anti_algebra)},
                                                     {"anti_coalgebra", axiom_json(bf.anti_coalgebra)},
                                                     {"involutive", axiom_json(bf.involutive)}}},
                                     {"monomials", Json{{"expansion", axiom_json(mono.expansion)},
                                                        {"phi", axiom_json(mono.phi)},
                                                        {"delta", axiom_json(mono.delta)},
                                                        {"S", axiom_json(mono.antipode)},
                                                        {"t", axiom_json(mono.t)}}}}},
                {"epsilon_values", eps}});
  return gl.pass() && bf.pass() && mono.pass() ? ExitOk : ExitVerificationFailed;
}

std::vector<std::string> selected_suites(const std::string& spec) {
  if (spec == "all") return suite_names();
  std::vector<std::string> out;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item == "all") return suite_names();
    if (std::find(suite_names().begin(), suite_names().end(), item) == suite_names().end())
      throw Error(ErrorKind::Parse, "unknown suite \"" + item + "\"");
    out.push_back(item);
  }
  if (out.empty()) throw Error(ErrorKind::Parse, "no suite selected");
  return out;
}

int run_suites(const RingPtr& r, const std::vector<std::string>& names, std::int64_t max_dim, const Reporter& rep) {
  Json suites = Json::object();
  bool pass = true;
  for (const std::string& name : names) {
    const SuiteResult s = run_suite(name, r, max_dim);
    suites[name] = Json{{"pass", s.pass}, {"skipped", s.skipped}, {"checked", s.checked}, {"witness", s.witness}};
    pass = pass && s.pass;
  }
  rep.emit(Json{{"pass", pass}, {"suites", suites}});
  return pass ? ExitOk : ExitVerificationFailed;
}

int cmd_verify(const Options& opt, const Reporter& rep) {
  const std::vector<std::string> names = selected_suites(opt.suite);
  return run_suites(load_ring(opt), names, opt.max_dim, rep);
}

int cmd_oracle_check(const Options& opt, const Reporter& rep) {
  const RingPtr r = load_ring(opt);
  if (opt.left.empty()) return run_suites(r, {"oracle"}, opt.max_dim, rep);
  const DatumPtr& d = r->datum_ptr();
  const BasisLabel a = parse_label(opt.left);
  GreenElement expected = GreenElement::basis(r, a.i, a.j);
  ModuleRep mod = module_build(d, a.i, a.j);
  if (!opt.right.empty()) {
    const BasisLabel b = parse_label(opt.right);
    expected = expected * GreenElement::basis(r, b.i, b.j);
    mod = module_tensor(mod, module_build(d, b.i, b.j));
  }
  if (mod.dim() > opt.max_dim)
    throw Error(ErrorKind::Domain, "module dimension " + std::to_string(mod.dim()) + " exceeds --max-dim");
  const std::vector<Summand> s = module_decompose(mod);
  const bool match = summands_to_vector(s, r->n(), r->m()) == expected.coeffs();
  rep.emit(Json{{"summands", summands_to_json(s)}, {"expected", rep.green(expected)}, {"match", match}, {"dim", mod.dim()}});
  return match ? ExitOk : ExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Green rings of pointed rank-one Hopf algebras of nilpotent type"};
  app.name("greenring");
  app.require_subcommand(1);

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--datum", opt.datum, "datum file (JSON)")->required();
    sub->add_option("--out", opt.out, "write the report to this file");
    sub->add_flag("--pretty", opt.pretty, "indented JSON with M[i,j] rendered symbolically");
    sub->add_option("--max-dim", opt.max_dim, "oracle cutoff on dim H")->capture_default_str();
  };
  const auto pair = [&](CLI::App* sub, bool right) {
    sub->add_option("--left", opt.left, "basis label i,j");
    if (right) sub->add_option("--right", opt.right, "basis label i,j");
  };

  CLI::App* describe = app.add_subcommand("describe", "group datum, tau, star and antipode trace");
  common(describe);
  describe->add_option("--compare", opt.compare, "second datum for the antipode-trace comparison");
  CLI::App* tensor = app.add_subcommand("tensor", "product M[i,j] M[k,l] in the Green ring");
  common(tensor);
  pair(tensor, true);
  CLI::App* presentation = app.add_subcommand("presentation", "the presentation of the Green ring");
  common(presentation);
  CLI::App* radical = app.add_subcommand("radical", "Jacobson radical report");
  common(radical);
  CLI::App* stable = app.add_subcommand("stable", "stable Green ring and its bi-Frobenius structure");
  common(stable);
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  common(verify);
  verify->add_option("--suite", opt.suite, "suite name(s), comma separated, or all")->capture_default_str();
  CLI::App* oracle = app.add_subcommand("oracle-check", "decompose explicit modules with the brute-force oracle");
  common(oracle);
  pair(oracle, true);

  std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitOk;
  } catch (const CLI::ParseError& e) {
    out << error_to_json(ErrorKind::Parse, e.what()).dump() << "\n";
    return ExitInvalidInput;
  }

  const Reporter rep(opt, out);
  try {
    if (describe->parsed()) return cmd_describe(opt, rep);
    if (tensor->parsed()) return cmd_tensor(opt, rep);
    if (presentation->parsed()) return cmd_presentation(opt, rep);
    if (radical->parsed()) return cmd_radical(opt, rep);
    if (stable->parsed()) return cmd_stable(opt, rep);
    if (verify->parsed()) return cmd_verify(opt, rep);
    if (oracle->parsed()) return cmd_oracle_check(opt, rep);
  } catch (const Error& e) {
    out << error_to_json(e.kind(), e.what()).dump() << "\n";
    err << "error: " << e.what() << "\n";
    const bool internal = e.kind() == ErrorKind::InternalConsistency || e.kind() == ErrorKind::InconsistentModule;
    return internal ? ExitVerificationFailed : ExitInvalidInput;
  } catch (const std::exception& e) {
    out << error_to_json(ErrorKind::InternalConsistency, e.what()).dump() << "\n";
    err << "error: " << e.what() << "\n";
    return ExitInvalidInput;
  }
  return ExitInvalidInput;
}

}  // namespace greenring
