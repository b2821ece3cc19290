// Copyright 2026 The qpf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpf/qpf.hpp"

namespace qpf::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr const char* kReportFormat = "qpf-report/1";
// Amplitudes at or below this magnitude are left out of state listings.
constexpr double kDisplayFloor = 1e-14;

constexpr const char* kFooter = R"(Angles:
  Any angle argument takes radians or a pi-expression built from numbers,
  'pi', + - * / and parentheses: 2pi/3, -pi/2, pi*(1/7), 0.25. Write a
  leading minus as --phi=-pi/2 so it is not read as an option.

Pulse files (compile output, playback input), one pulse per line:
  REGISTER <n>
  ROTATION <x|y|z> <angle> <target>
  OAT <x|y|z> <angle> <target>
  TWOBODYZZ <angle> <target> <target>
  GLOBALPHASE <angle>
  Lines are in time order; '#' starts a comment.

Graph files (state --graph):
  vertices <count>
  edges
  <u> <v> weight=<angle>     angular momentum graph (am-graph)
  <u> <v> mult=<0|1|2>       qutrit graph state (graph)
  Vertices are numbered from 1. A file may not mix weight= and mult= edges.

Environment:
  QPF_TOL   default comparison tolerance (otherwise 1e-10).

Exit status: 0 success, 1 verification failure, 2 usage or parse error.)";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

double parse_positive(const std::string& text, const std::string& what) {
  try {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size() && std::isfinite(v) && v > 0.0) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(what + " must be a positive number, got '" + text + "'");
}

double default_tolerance() {
  if (const char* env = std::getenv("QPF_TOL"); env != nullptr && *env != '\0') {
    return parse_positive(env, "QPF_TOL");
  }
  return kComposedTol;
}

double tolerance(const std::string& flag) {
  return flag.empty() ? default_tolerance() : parse_positive(flag, "--tol");
}

std::string fmt_complex(Complex z) {
  std::string s = format_real(z.real());
  s += z.imag() < 0.0 || std::signbit(z.imag()) ? "-" : "+";
  s += format_real(std::abs(z.imag()));
  return s + "i";
}

void print_matrix(std::ostream& out, const Matrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) out << (j ? "  " : "") << fmt_complex(m(i, j));
    out << '\n';
  }
}

bool is_diagonal(const Matrix& m) {
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (i != j && std::abs(m(i, j)) > kExactTol) return false;
    }
  }
  return true;
}

std::string diag_form(const Matrix& m) {
  std::string s = "diag(";
  for (Index i = 0; i < m.rows(); ++i) {
    if (i) s += ", ";
    const Complex z = m(i, i);
    if (std::abs(z - Complex(1.0, 0.0)) <= kExactTol) {
      s += "1";
    } else {
      s += "exp(i*" + format_real(std::arg(z)) + ")";
    }
  }
  return s + ")";
}

/// One-line summary of a matrix for the catalogue table.
std::string preview(const Matrix& m) {
  if (is_diagonal(m)) {
    std::ostringstream os;
    os << "diag(";
    for (Index i = 0; i < m.rows(); ++i) {
      const double a = std::arg(m(i, i)) / kTwoPi;
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.4g", std::abs(a) < kExactTol ? 0.0 : a);
      os << (i ? " " : "") << buf;
    }
    os << ") x 2pi";
    return os.str();
  }
  bool monomial = true;
  std::string map;
  for (Index j = 0; j < m.cols() && monomial; ++j) {
    Index hit = -1;
    for (Index i = 0; i < m.rows(); ++i) {
      if (std::abs(m(i, j)) > kExactTol) {
        if (hit >= 0 || std::abs(std::abs(m(i, j)) - 1.0) > kExactTol) monomial = false;
        hit = i;
      }
    }
    if (hit < 0) monomial = false;
    map += (j ? " " : "") + std::to_string(j) + ">" + std::to_string(hit);
  }
  if (monomial) return m.rows() <= 3 ? "monomial " + map : "monomial";
  return "dense";
}

std::vector<int> parse_targets(const std::vector<std::string>& raw) {
  std::vector<int> out;
  for (const auto& t : raw) {
    try {
      size_t used = 0;
      const int v = std::stoi(t, &used);
      if (used == t.size() && v >= 0) {
        out.push_back(v);
        continue;
      }
    } catch (const std::exception&) {
    }
    throw UsageError("target must be a nonnegative integer, got '" + t + "'");
  }
  return out;
}

std::string cost_line(const PulseCost& c) {
  return "rotation=" + std::to_string(c.rotation) + " oat=" + std::to_string(c.oat) +
         " two-body=" + std::to_string(c.two_body) + " global-phase=" +
         std::to_string(c.global_phase) + " physical=" + std::to_string(c.physical()) +
         " total=" + std::to_string(c.total());
}

// ---------------------------------------------------------------------------
// Reports.

struct ReportItem {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  Complex phase{0.0, 0.0};
  std::string notes;
};

json report_json(const std::string& command, double tol, const std::vector<ReportItem>& items) {
  json j;
  j["format"] = kReportFormat;
  j["tool_version"] = QPF_VERSION;
  j["command"] = command;
  j["tolerance"] = tol;
  int pass = 0;
  json arr = json::array();
  for (const auto& it : items) {
    pass += it.pass ? 1 : 0;
    json e;
    e["name"] = it.name;
    e["status"] = it.pass ? "pass" : "fail";
    e["residual"] = it.residual;
    e["phase"] = {{"re", it.phase.real()}, {"im", it.phase.imag()}};
    e["notes"] = it.notes;
    arr.push_back(std::move(e));
  }
  j["items"] = std::move(arr);
  j["summary"] = {{"pass", pass}, {"fail", static_cast<int>(items.size()) - pass}};
  return j;
}

// ---------------------------------------------------------------------------
// Commands.

struct GatesArgs {
  std::string show;
  std::string basis = "c";
  std::string cr_phi = "pi/7";
};

int cmd_gates(const GatesArgs& a, std::ostream& out) {
  const BasisConvention conv = BasisConvention::parse(a.basis);
  if (!a.show.empty()) {
    const GateId id = parse_gate(a.show);
    const Matrix m = reorder(gate(id).matrix(), BasisConvention::computational(), conv);
    out << gate_name(id) << " (" << conv.name() << " ordering)\n";
    print_matrix(out, m);
    if (is_diagonal(m)) out << diag_form(m) << '\n';
    return kExitOk;
  }
  out << "name arity clifford pulses(physical/total) preview\n";
  for (const GateId& id : catalogue({parse_angle(a.cr_phi)})) {
    const int arity = gate_arity(id.kind);
    const auto seq = compile(id, arity == 1 ? std::vector<int>{0} : std::vector<int>{0, 1});
    const PulseCost c = pulse_cost(seq);
    out << gate_name(id) << ' ' << arity << ' ' << (is_clifford(id.kind) ? "yes" : "no") << ' '
        << c.physical() << '/' << c.total() << ' '
        << preview(reorder(gate(id).matrix(), BasisConvention::computational(), conv)) << '\n';
  }
  return kExitOk;
}

struct CompileArgs {
  std::string gate;
  std::vector<std::string> targets;
  std::string output;
  int register_size = 0;
  std::string chi;
  std::string chi_cross;
};

int cmd_compile(const CompileArgs& a, std::ostream& out) {
  const GateId id = parse_gate(a.gate);
  const std::vector<int> targets = parse_targets(a.targets);
  const PulseSequence seq =
      a.register_size > 0 ? compile(id, targets, a.register_size) : compile(id, targets);
  const std::string text = to_text(seq);
  if (a.output.empty()) {
    out << text;
  } else {
    std::ofstream f(a.output, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + a.output + "'");
    f << text;
    if (!f) throw UsageError("failed writing '" + a.output + "'");
  }
  out << "# gate " << gate_name(id) << '\n';
  out << "# cost " << cost_line(pulse_cost(seq)) << '\n';
  if (id.kind == GateKind::X01 || id.kind == GateKind::X02) {
    out << "# word " << word_for(id.kind).describe() << '\n';
  }
  if (!a.chi.empty() || !a.chi_cross.empty()) {
    const double chi = a.chi.empty() ? 1.0 : parse_positive(a.chi, "--chi");
    const double chi_x = a.chi_cross.empty() ? chi : parse_positive(a.chi_cross, "--chi-cross");
    double total = 0.0;
    out << "# optical schedule (chi=" << format_real(chi) << ", chi'=" << format_real(chi_x)
        << ")\n";
    for (const auto& s : optical_schedule(seq, chi, chi_x)) {
      out << "#   " << s.element;
      for (int m : s.modes) out << ' ' << m;
      out << " angle=" << format_real(s.angle);
      if (s.duration > 0.0) out << " t=" << format_real(s.duration);
      out << '\n';
      total += s.duration;
    }
    out << "# total Kerr time " << format_real(total) << '\n';
  }
  return kExitOk;
}

struct PlaybackArgs {
  std::string file;
  std::string convention = "c";
  std::string compare;
  std::string backend = "spin";
  int cutoff = kDefaultCutoff;
  std::string tol;
};

int cmd_playback(const PlaybackArgs& a, std::ostream& out) {
  const double tol = tolerance(a.tol);
  const BasisConvention conv = BasisConvention::parse(a.convention);
  PulseSequence seq(1);
  try {
    seq = parse_pulses(read_file(a.file));
  } catch (const ParseError& e) {
    throw ParseError(a.file + ": " + e.what());
  }
  Matrix u;
  double leakage = 0.0;
  if (a.backend == "spin") {
    u = playback(seq, conv).matrix();
  } else {
    const SectorResult r = FockCircuit(seq, a.cutoff).sector_action();
    u = reorder(r.restricted, BasisConvention::computational(), conv);
    leakage = r.leakage;
  }
  out << "# register " << seq.register_size() << ", " << seq.size() << " pulses, backend "
      << a.backend << ", " << conv.name() << " ordering\n";
  if (a.backend == "fock") {
    out << "# cutoff " << a.cutoff << ", sector leakage " << format_real(leakage) << '\n';
  }
  print_matrix(out, u);
  if (a.compare.empty()) return kExitOk;

  const GateId id = parse_gate(a.compare);
  if (gate_arity(id.kind) != seq.register_size()) {
    throw UsageError("--compare " + gate_name(id) + " acts on " +
                     std::to_string(gate_arity(id.kind)) + " qutrit(s), register has " +
                     std::to_string(seq.register_size()));
  }
  const Matrix ref = reorder(gate(id).matrix(), BasisConvention::computational(), conv);
  const auto r = equal_up_to_phase(ref, u, tol);
  const bool pass = r.equal_up_to_phase && leakage <= tol;
  out << (pass ? "PASS" : "FAIL") << " compare " << gate_name(id)
      << " residual=" << format_real(r.max_residual) << " phase=" << fmt_complex(r.phase)
      << " tol=" << format_real(tol) << '\n';
  return pass ? kExitOk : kExitFail;
}

struct VerifyArgs {
  std::string scope = "all";
  std::string tol;
  std::string report;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const double tol = tolerance(a.tol);
  std::vector<ReportItem> items;
  if (a.scope == "spin" || a.scope == "all") {
    for (const auto& v : verify_all(tol)) {
      std::string notes = "cost " + cost_line(v.cost);
      if (!v.notes.empty()) notes += "; " + v.notes;
      items.push_back({"spin:" + v.name, v.pass, v.residual, v.phase, notes});
    }
  }
  if (a.scope == "fock" || a.scope == "all") {
    for (const auto& f : verify_fock(tol)) {
      std::string notes = "leakage " + format_real(f.leakage);
      if (!f.notes.empty()) notes += "; " + f.notes;
      items.push_back({f.name, f.pass, f.residual, f.phase, notes});
    }
  }
  int failed = 0;
  for (const auto& it : items) {
    failed += it.pass ? 0 : 1;
    out << (it.pass ? "PASS " : "FAIL ") << it.name << " residual=" << format_real(it.residual)
        << " phase=" << fmt_complex(it.phase) << " (" << it.notes << ")\n";
  }
  out << "summary: " << items.size() - static_cast<size_t>(failed) << " pass, " << failed
      << " fail (tol " << format_real(tol) << ")\n";
  if (!a.report.empty()) {
    const json j = report_json("verify --scope " + a.scope + " --tol " + format_real(tol), tol,
                               items);
    std::ofstream f(a.report, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + a.report + "'");
    f << j.dump(2) << '\n';
  }
  return failed == 0 ? kExitOk : kExitFail;
}

struct StateArgs {
  std::string kind;
  std::string graph;
  std::string phi;
  int cutoff = kDefaultCutoff;
};

std::string digits(Index i, int parties, const char* symbols) {
  std::string s(static_cast<size_t>(parties), '0');
  for (int p = parties - 1; p >= 0; --p) {
    s[static_cast<size_t>(p)] = symbols[i % 3];
    i /= 3;
  }
  return s;
}

void print_amplitudes(std::ostream& out, const MultiQutritState& s) {
  out << "# amplitudes, computational basis (index digits re im)\n";
  for (Index i = 0; i < s.amplitudes().size(); ++i) {
    const Complex z = s(i);
    if (std::abs(z) <= kDisplayFloor) continue;
    out << i << ' ' << digits(i, s.parties(), "012") << ' ' << format_real(z.real()) << ' '
        << format_real(z.imag()) << '\n';
  }
  const Vector am = s.in_convention(BasisConvention::angular_momentum());
  out << "# amplitudes, J_z eigenbasis m=+1,0,-1 (index m-labels re im)\n";
  for (Index i = 0; i < am.size(); ++i) {
    const Complex z = am(i);
    if (std::abs(z) <= kDisplayFloor) continue;
    out << i << ' ' << digits(i, s.parties(), "+0-") << ' ' << format_real(z.real()) << ' '
        << format_real(z.imag()) << '\n';
  }
}

void print_profile(std::ostream& out, const MultiQutritState& s) {
  if (s.parties() < 2) return;
  out << "# schmidt profile (threshold " << format_real(kSchmidtThreshold) << ")\n";
  for (const auto& c : schmidt_profile(s).cuts) {
    out << "cut " << c.label(s.parties()) << " rank " << c.rank << " gap "
        << format_real(c.gap_ratio) << (c.degenerate ? " degenerate" : "") << " sv";
    for (double v : c.singular_values) out << ' ' << format_real(v);
    out << '\n';
  }
}

void print_slocc(std::ostream& out, const std::vector<ProductTerm>& terms) {
  const SloccResult r = slocc_ghz_check(terms);
  out << "slocc ghz-class " << (r.ghz_equivalent ? "yes" : "no") << " gram";
  for (double g : r.gram_determinants) out << ' ' << format_real(g);
  if (r.ghz_equivalent) out << " witness-fidelity " << format_real(r.witness_fidelity);
  out << '\n';
}

WeightedGraph load_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

int cmd_state(const StateArgs& a, std::ostream& out) {
  if (a.kind == "plus2mode") {
    const FockState s = plus_state_two_modes(a.cutoff);
    out << "# compiled F on |1,1>, cutoff " << a.cutoff << '\n';
    out << to_table(s, kDisplayFloor);
    const auto [amps, leak] = SectorEmbedding(1).extract(s);
    out << "# encoded amplitudes q=0,1,2 (|1,1>, |2,0>, |0,2>)\n";
    for (Index q = 0; q < 3; ++q) {
      out << q << ' ' << format_real(amps(q).real()) << ' ' << format_real(amps(q).imag()) << '\n';
    }
    out << "leakage " << format_real(leak) << '\n';
    out << "fidelity-with-target "
        << format_real(fidelity(plus_state_two_modes_direct(a.cutoff).amplitudes(), s.amplitudes()))
        << '\n';
    out << "mode-split singular values";
    for (Index k = 0; k < 3; ++k) out << ' ' << format_real(two_mode_singular_values(s)(k));
    out << '\n';
    return kExitOk;
  }

  if (a.kind == "ghz") {
    const MultiQutritState s = ghz_state(3);
    print_amplitudes(out, s);
    print_profile(out, s);
    print_slocc(out, ghz_terms());
    return kExitOk;
  }

  if (a.kind == "graph") {
    const WeightedGraph g = a.graph.empty() ? ghz_graph() : load_graph(a.graph);
    const MultiQutritState s = graph_state(g);
    print_amplitudes(out, s);
    print_profile(out, s);
    if (g.vertices() == 3) {
      const double f = fidelity(ghz_state(3).amplitudes(), ghz_recover(s).amplitudes());
      out << "ghz-recovery-fidelity " << format_real(f) << '\n';
    }
    return kExitOk;
  }

  // am-graph
  std::optional<double> phi;
  if (!a.phi.empty()) phi = parse_angle(a.phi);
  WeightedGraph g = am_star_graph(0.0);
  if (a.graph.empty()) {
    if (!phi) throw UsageError("am-graph needs --phi or --graph");
    g = am_star_graph(*phi);
  } else {
    g = load_graph(a.graph);
    if (g.label() != EdgeLabel::weight && !g.edges().empty()) {
      throw ValidationError("am-graph needs weight= edges");
    }
    if (phi) {
      std::vector<Edge> edges = g.edges();
      for (auto& e : edges) e.weight = *phi;
      g = WeightedGraph(g.vertices(), EdgeLabel::weight, std::move(edges));
    }
  }
  const MultiQutritState s = am_graph_state(g);
  print_amplitudes(out, s);
  print_profile(out, s);
  if (g.vertices() == 3) {
    try {
      print_slocc(out, am_graph_terms(g));
    } catch (const UnsupportedFormError& e) {
      out << "slocc unsupported (" << e.what() << ")\n";
    }
  }
  return kExitOk;
}

struct SweepArgs {
  std::string phi_min = "0";
  std::string phi_max = "2pi";
  int steps = 25;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  if (a.steps < 2) throw UsageError("--steps must be at least 2");
  const double lo = parse_angle(a.phi_min);
  const double hi = parse_angle(a.phi_max);
  out << "phi,cut,rank,slocc\n";
  for (int k = 0; k < a.steps; ++k) {
    const double phi = k == a.steps - 1 ? hi : lo + (hi - lo) * k / (a.steps - 1);
    const MultiQutritState s = am_graph_state(am_star_graph(phi));
    const bool slocc = slocc_ghz_check(jghz_terms(phi)).ghz_equivalent;
    for (const auto& c : schmidt_profile(s).cuts) {
      out << format_real(phi) << ',' << c.label(3) << ',' << c.rank << ','
          << (slocc ? "true" : "false") << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Qutrit pulse compiler and dual-backend verifier.", "qpf"};
  app.require_subcommand(1);
  app.footer(kFooter);
  app.set_version_flag("--version", std::string(QPF_VERSION));

  GatesArgs ga;
  auto* gates = app.add_subcommand("gates", "List the gate catalogue or print one matrix.");
  gates->add_option("--show-matrix", ga.show, "Print the matrix of NAME (e.g. T, S(1,1,0), CR(z,pi/3))");
  gates->add_option("--basis", ga.basis, "Basis ordering: c (computational) or j (J_z eigenbasis)")
      ->check(CLI::IsMember({"c", "j"}));
  gates->add_option("--cr-phi", ga.cr_phi, "Angle used for the CR(z,phi) row");

  CompileArgs ca;
  auto* comp = app.add_subcommand("compile", "Lower a gate to pulses.");
  comp->add_option("gate", ca.gate, "Gate name")->required();
  comp->add_option("targets", ca.targets, "Target qutrits (control first)")->required();
  comp->add_option("-o,--output", ca.output, "Write the pulse file here instead of stdout");
  comp->add_option("--register", ca.register_size, "Register size (default: max target + 1)")
      ->check(CLI::PositiveNumber);
  comp->add_option("--chi", ca.chi, "Self-Kerr strength; prints pulse durations");
  comp->add_option("--chi-cross", ca.chi_cross, "Cross-Kerr strength (default: --chi)");

  PlaybackArgs pa;
  auto* play = app.add_subcommand("playback", "Multiply out a pulse file.");
  play->add_option("file", pa.file, "Pulse file")->required();
  play->add_option("--convention", pa.convention, "Output ordering: c or j")
      ->check(CLI::IsMember({"c", "j"}));
  play->add_option("--compare", pa.compare, "Compare against this catalogue gate");
  play->add_option("--backend", pa.backend, "spin or fock")->check(CLI::IsMember({"spin", "fock"}));
  play->add_option("--cutoff", pa.cutoff, "Fock cutoff per mode")->check(CLI::Range(2, 8));
  play->add_option("--tol", pa.tol, "Comparison tolerance");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Check every compiled gate on both backends.");
  ver->add_option("--scope", va.scope, "spin, fock or all")
      ->check(CLI::IsMember({"spin", "fock", "all"}));
  ver->add_option("--tol", va.tol, "Comparison tolerance");
  ver->add_option("--report", va.report, "Write a JSON report here");

  StateArgs sa;
  auto* st = app.add_subcommand("state", "Prepare a state and print diagnostics.");
  st->add_option("kind", sa.kind, "plus2mode, graph, am-graph or ghz")
      ->required()
      ->check(CLI::IsMember({"plus2mode", "graph", "am-graph", "ghz"}));
  st->add_option("--graph", sa.graph, "Graph file");
  st->add_option("--phi", sa.phi, "Edge weight for am-graph (overrides file weights)");
  st->add_option("--cutoff", sa.cutoff, "Fock cutoff for plus2mode")->check(CLI::Range(2, 8));

  SweepArgs wa;
  auto* sw = app.add_subcommand("sweep", "Schmidt ranks and GHZ-class flag of the star am-graph over phi.");
  sw->add_option("--phi-min", wa.phi_min, "First angle");
  sw->add_option("--phi-max", wa.phi_max, "Last angle");
  sw->add_option("--steps", wa.steps, "Number of angles (>= 2)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gates->parsed()) return cmd_gates(ga, out);
    if (comp->parsed()) return cmd_compile(ca, out);
    if (play->parsed()) return cmd_playback(pa, out);
    if (ver->parsed()) return cmd_verify(va, out);
    if (st->parsed()) return cmd_state(sa, out);
    if (sw->parsed()) return cmd_sweep(wa, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qpf::cli
