// Command-line front end: problem ingestion, sweeps, certification reports,
// and the worked-example reproduction.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "phiconv/convexsep.hpp"
#include "phiconv/expression.hpp"
#include "phiconv/problem_file.hpp"
#include "phiconv/report.hpp"

namespace {

using namespace phiconv;

// Exit codes: 0 success, 1 input error, 2 report contains Undecided
// verdicts, 3 theorem violation detected.
int g_exit = 0;

void note_decision(const IPDecision& d) {
  if (d.verdict == IPDecision::Verdict::Undecided && g_exit == 0) g_exit = 2;
}

void emit(const Report& rep, const std::string& out_path) {
  std::string text = rep.dump(2);
  text += "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot open output file '" + out_path + "'");
    out << text;
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot open output file '" + out_path + "'");
    out << text;
  }
}

struct SweepSpec {
  double lo = 0.0, hi = 0.0, step = 1.0;
};

SweepSpec parse_sweep(const std::string& flag) {
  SweepSpec s;
  if (std::sscanf(flag.c_str(), "%lf:%lf:%lf", &s.lo, &s.hi, &s.step) != 3 || !(s.step > 0.0))
    throw InputError("--alpha-sweep expects lo:hi:step with step > 0, got '" + flag + "'");
  return s;
}

int run_envelope(const std::string& file, const std::string& fn_name, const std::string& out) {
  Problem p = load_problem(file);
  const SampledFunction& f = p.fn(fn_name);
  MinorantDictionary dict = p.dictionary_for(f);
  double gap = phi_convexity_gap(f, dict);
  Report rep;
  rep["command"] = "envelope";
  rep["fn"] = fn_name;
  rep["grid"] = {{"low", to_report(f.low())}, {"high", to_report(f.high())}, {"step", f.step()}};
  rep["dictionary"] = {{"curvatures", dict.curvatures().size()}, {"slopes", dict.slopes().size()}};
  rep["gap"] = gap;
  emit(rep, out);
  return g_exit;
}

int run_subdiff(const std::string& file, const std::string& fn_name, const std::string& at,
                double eps, const std::string& phi_flag, const std::string& out) {
  Problem p = load_problem(file);
  const SampledFunction& f = p.fn(fn_name);
  Vector x = parse_vector(at);
  Report rep;
  rep["command"] = "subdiff";
  rep["fn"] = fn_name;
  rep["at"] = to_report(x);
  rep["eps"] = eps;
  if (!phi_flag.empty()) {
    QuadMinorant phi = parse_minorant(phi_flag);
    SubdiffQuery q(f, x, eps);
    rep["phi"] = to_report(phi);
    rep["member"] = subdiff_membership(q, phi);
  }
  MinorantDictionary dict = p.dictionary_for(f);
  auto members = subgradient_search(f, x, dict);
  Report found = Report::array();
  for (const auto& m : members) found.push_back(to_report(m));
  rep["search"] = {{"count", members.size()}, {"members", found}};
  emit(rep, out);
  return g_exit;
}

int run_intersect(const std::string& phi1_flag, const std::string& phi2_flag, double alpha,
                  std::optional<double> ball, const std::string& out) {
  QuadMinorant phi1 = parse_minorant(phi1_flag);
  QuadMinorant phi2 = parse_minorant(phi2_flag);
  IPDecision d = ball ? ip_decide_ball(phi1, phi2, alpha, *ball) : ip_decide_fullspace(phi1, phi2, alpha);
  note_decision(d);
  Report rep;
  rep["command"] = "intersect";
  rep["phi1"] = to_report(phi1);
  rep["phi2"] = to_report(phi2);
  rep["alpha"] = alpha;
  rep["region"] = ball ? Region{false, *ball}.name() : Region{true, 0.0}.name();
  rep["decision"] = to_report(d);
  emit(rep, out);
  return g_exit;
}

int run_br(const std::string& file, const std::string& fn_name, const std::string& at,
           const std::string& phi_flag, double eps, double lambda, const std::string& out) {
  Problem p = load_problem(file);
  const SampledFunction& f = p.fn(fn_name);
  BRResult br = bronsted_rockafellar(f, parse_vector(at), parse_minorant(phi_flag), eps, lambda);
  Report rep;
  rep["command"] = "br";
  rep["fn"] = fn_name;
  rep["at"] = to_report(parse_vector(at));
  rep["eps"] = eps;
  rep["lambda"] = lambda;
  rep["result"] = to_report(br);
  emit(rep, out);
  return g_exit;
}

int run_transfer(const std::string& file, const std::string& fn1, const std::string& fn2,
                 const std::string& phi1_flag, const std::string& phi2_flag, double alpha,
                 double gamma, double eta, const std::string& out) {
  Problem p = load_problem(file);
  TransferResult tr = ip_transfer_to_ball(p.fn(fn1), p.fn(fn2), parse_minorant(phi1_flag),
                                          parse_minorant(phi2_flag), alpha, gamma, eta);
  note_decision(tr.ball_decision);
  Report rep;
  rep["command"] = "transfer";
  rep["fn"] = fn1;
  rep["fn2"] = fn2;
  rep["alpha"] = alpha;
  rep["gamma"] = gamma;
  rep["eta"] = eta;
  rep["lambda1"] = tr.lambda1;
  rep["lambda2"] = tr.lambda2;
  rep["x1"] = to_report(tr.x1);
  rep["phi1_bar"] = to_report(tr.phi1_bar);
  rep["x2"] = to_report(tr.x2);
  rep["phi2_bar"] = to_report(tr.phi2_bar);
  rep["ball_decision"] = to_report(tr.ball_decision);
  emit(rep, out);
  return g_exit;
}

int run_minimax(const std::string& file, const std::string& sweep_flag, std::optional<double> ball,
                const std::string& mode, double eps, const std::string& format,
                const std::string& out) {
  if (ball && mode != "subgrad")
    throw InputError("--ball applies to the subgrad mode only (the other searches decide on the full space)");
  Problem p = load_problem(file);
  SaddleProblem sp = p.saddle_problem();
  SaddleValues sv = saddle_values(sp);
  MinorantDictionary dict = default_saddle_dictionary(sp);
  SweepSpec sweep = parse_sweep(sweep_flag);
  Region region{!ball.has_value(), ball.value_or(0.0)};

  struct Row {
    double alpha;
    std::optional<IPWitness> witness;
    std::string error;
    bool verify_ok = false;
  };
  std::vector<Row> rows;
  for (double alpha = sweep.lo; alpha <= sweep.hi + 1e-12; alpha += sweep.step) {
    Row row{alpha, std::nullopt, "", false};
    try {
      if (mode == "support")
        row.witness = support_ip_witness_search(sp, alpha, dict);
      else if (mode == "subgrad")
        row.witness = subgradient_ip_witness_search(sp, alpha, region, dict);
      else if (mode == "eps")
        row.witness = eps_subgradient_ip_witness_search(sp, alpha, eps, dict);
      else if (mode == "conv")
        row.witness = conv_minimax_witness(sp, alpha);
      else
        throw InputError("unknown mode '" + mode + "'");
      if (row.witness) {
        note_decision(row.witness->decision);
        row.verify_ok = verify_witness(sp, *row.witness);
      }
    } catch (const HypothesisViolation& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }

  if (format == "csv") {
    std::ostringstream csv;
    csv << "alpha,mode,region,verdict,witness_found,y1,y2,phi1,phi2,verify_ok\n";
    for (const Row& row : rows) {
      csv << row.alpha << "," << mode << "," << region.name() << ",";
      if (row.witness) {
        csv << row.witness->decision.verdict_name() << ",true,\"";
        for (std::size_t i = 0; i < row.witness->y1.size(); ++i) csv << (i ? " " : "") << row.witness->y1[i];
        csv << "\",\"";
        for (std::size_t i = 0; i < row.witness->y2.size(); ++i) csv << (i ? " " : "") << row.witness->y2[i];
        csv << "\",\"" << minorant_flag(row.witness->phi1) << "\",\"" << minorant_flag(row.witness->phi2)
            << "\"," << (row.verify_ok ? "true" : "false") << "\n";
      } else {
        csv << "none,false,,,,," << "false" << "\n";
      }
    }
    emit_text(csv.str(), out);
    return g_exit;
  }

  Report rep;
  rep["command"] = "minimax";
  rep["values"] = to_report(sv);
  // Refinement error estimate for the simplex sweep: lower at half step.
  double refined = saddle_lower(sp, 2 * sp.simplex_denominator());
  rep["lower_refinement_delta"] = refined - sv.lower;
  rep["mode"] = mode;
  rep["region"] = region.name();
  Report jrows = Report::array();
  for (const Row& row : rows) {
    Report r;
    r["alpha"] = row.alpha;
    r["witness_found"] = row.witness.has_value();
    r["witness"] = row.witness ? to_report(*row.witness) : Report(nullptr);
    r["verify_ok"] = row.verify_ok;
    if (!row.error.empty()) r["error"] = row.error;
    jrows.push_back(r);
  }
  rep["rows"] = jrows;
  emit(rep, out);
  return g_exit;
}

int run_paper_example(double gamma, double eta, const std::string& out) {
  Vector lo{{-10.0}}, hi{{10.0}};
  const double step = 0.01;
  Expression ef = Expression::parse("exp2(x1)", 1);
  Expression eg = Expression::parse("-abs(x1)+2", 1);
  SampledFunction f = SampledFunction::sample(lo, hi, step, [&](const Vector& x) { return ef.eval(x); });
  SampledFunction g = SampledFunction::sample(lo, hi, step, [&](const Vector& x) { return eg.eval(x); });

  const double alpha = 0.0;
  bool certified = ip_no_witness_certificate_1d(f, g, alpha);

  QuadMinorant phi1(0.0, Vector::zero(1), 0.0);   // constant 0 below 2^x
  QuadMinorant phi2(1.0, Vector::zero(1), 0.0);   // -x^2 below -|x|+2
  bool support_ok = support_membership(f, phi1).member && support_membership(g, phi2).member;
  IPDecision full = ip_decide_fullspace(phi1, phi2, alpha);

  TransferResult tr = ip_transfer_to_ball(f, g, phi1, phi2, alpha, gamma, eta);
  note_decision(tr.ball_decision);

  bool x1_ok = subdiff_membership(SubdiffQuery(f, tr.x1, 0.0), tr.phi1_bar);
  bool x2_ok = subdiff_membership(SubdiffQuery(g, tr.x2, 0.0), tr.phi2_bar);

  Report rep;
  rep["command"] = "paper-example";
  rep["f"] = "exp2(x1)";
  rep["g"] = "-abs(x1)+2";
  rep["box"] = {{"low", to_report(lo)}, {"high", to_report(hi)}, {"step", step}};
  rep["alpha"] = alpha;
  rep["gamma"] = gamma;
  rep["eta"] = eta;
  rep["support_pair"] = {{"phi1", to_report(phi1)},
                         {"phi2", to_report(phi2)},
                         {"in_support", support_ok},
                         {"fullspace_decision", to_report(full)}};
  rep["fullspace_certified"] = certified;
  rep["fullspace_witness"] = Report(nullptr);
  Report ball;
  ball["x1"] = to_report(tr.x1);
  ball["phi1_bar"] = to_report(tr.phi1_bar);
  ball["x2"] = to_report(tr.x2);
  ball["phi2_bar"] = to_report(tr.phi2_bar);
  ball["level"] = alpha - eta;
  ball["decision"] = to_report(tr.ball_decision);
  ball["reverified"] = x1_ok && x2_ok;
  rep["ball_witness"] = ball;
  rep["ball_verdict"] = tr.ball_decision.verdict_name();
  emit(rep, out);
  return g_exit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic-minorant convexity toolkit: support sets, subdifferentials, "
               "intersection-property decisions, and minimax certification on sampled grids"};
  app.require_subcommand(1);

  std::string file, fn_name, fn2_name, at, phi_flag, phi1_flag, phi2_flag, out, sweep, format = "json",
                                                                                 mode = "support";
  double sub_eps = 0.0, br_eps = 0.1, mm_eps = 0.1, lambda = 1.0, alpha = 0.0, gamma = 5.0, eta = 0.1;
  std::optional<double> ball;

  auto* env = app.add_subcommand("envelope", "Convexity-gap report for a function");
  env->add_option("file", file)->required();
  env->add_option("--fn", fn_name)->required();
  env->add_option("--out", out);

  auto* sub = app.add_subcommand("subdiff", "Subdifferential membership and search report");
  sub->add_option("file", file)->required();
  sub->add_option("--fn", fn_name)->required();
  sub->add_option("--at", at)->required();
  sub->add_option("--eps", sub_eps);
  sub->add_option("--phi", phi_flag);
  sub->add_option("--out", out);

  auto* inter = app.add_subcommand("intersect", "Intersection-property decision for two minorants");
  inter->add_option("--phi1", phi1_flag)->required();
  inter->add_option("--phi2", phi2_flag)->required();
  inter->add_option("--alpha", alpha)->required();
  inter->add_option("--ball", ball);
  inter->add_option("--out", out);

  auto* br = app.add_subcommand("br", "Approximate-to-exact subgradient trade with certified bounds");
  br->add_option("file", file)->required();
  br->add_option("--fn", fn_name)->required();
  br->add_option("--at", at)->required();
  br->add_option("--phi", phi_flag)->required();
  br->add_option("--eps", br_eps)->required();
  br->add_option("--lambda", lambda)->required();
  br->add_option("--out", out);

  auto* tr = app.add_subcommand("transfer", "Full-space support pair to ball subgradient pair");
  tr->add_option("file", file)->required();
  tr->add_option("--fn", fn_name)->required();
  tr->add_option("--fn2", fn2_name)->required();
  tr->add_option("--phi1", phi1_flag)->required();
  tr->add_option("--phi2", phi2_flag)->required();
  tr->add_option("--alpha", alpha)->required();
  tr->add_option("--gamma", gamma)->required();
  tr->add_option("--eta", eta)->required();
  tr->add_option("--out", out);

  auto* mm = app.add_subcommand("minimax", "Saddle values and per-alpha witness sweep");
  mm->add_option("file", file)->required();
  mm->add_option("--alpha-sweep", sweep)->required();
  mm->add_option("--ball", ball);
  mm->add_option("--mode", mode)->check(CLI::IsMember({"support", "subgrad", "eps", "conv"}));
  mm->add_option("--eps", mm_eps);
  mm->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  mm->add_option("--out", out);

  auto* pe = app.add_subcommand("paper-example", "Reproduce the worked 1-D example");
  pe->add_option("--gamma", gamma);
  pe->add_option("--eta", eta);
  pe->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (env->parsed()) return run_envelope(file, fn_name, out);
    if (sub->parsed()) return run_subdiff(file, fn_name, at, sub_eps, phi_flag, out);
    if (inter->parsed()) return run_intersect(phi1_flag, phi2_flag, alpha, ball, out);
    if (br->parsed()) return run_br(file, fn_name, at, phi_flag, br_eps, lambda, out);
    if (tr->parsed()) return run_transfer(file, fn_name, fn2_name, phi1_flag, phi2_flag, alpha, gamma, eta, out);
    if (mm->parsed()) return run_minimax(file, sweep, ball, mode, mm_eps, format, out);
    if (pe->parsed()) return run_paper_example(gamma, eta, out);
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 3;
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const HypothesisViolation& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
