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

// Randomized property suites with hand-rolled generators. Every suite draws
// from its own std::mt19937_64 seeded from kPropertySeed, so suites are
// reproducible individually and in any order.

#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracle.hpp"
#include "qpf/qpf.hpp"

namespace props {

inline constexpr std::uint64_t kPropertySeed = 20261015;

struct Result {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
  void check(bool pass, const std::string& what) {
    ++cases;
    if (!pass) {
      if (failures == 0) first_failure = what;
      ++failures;
    }
  }
};

class Gen {
 public:
  explicit Gen(std::uint64_t salt) : rng_(kPropertySeed ^ (salt * 0x9E3779B97F4A7C15ULL)) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double angle() { return uniform(-4.0 * qpf::kPi, 4.0 * qpf::kPi); }
  qpf::Axis axis() { return qpf::kAxes[static_cast<size_t>(integer(0, 2))]; }

  Eigen::Vector3d unit_vector() {
    Eigen::Vector3d v;
    do {
      v = {uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
    } while (v.norm() < 1e-3);
    return v.normalized();
  }

  qpf::Vector qutrit_state() {
    qpf::Vector v(3);
    for (int i = 0; i < 3; ++i) v(i) = qpf::Complex(uniform(-1, 1), uniform(-1, 1));
    return v / v.norm();
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline qpf::Matrix along(const Eigen::Vector3d& n) {
  return n(0) * qpf::angular_momentum(qpf::Axis::x).matrix() +
         n(1) * qpf::angular_momentum(qpf::Axis::y).matrix() +
         n(2) * qpf::angular_momentum(qpf::Axis::z).matrix();
}

inline std::string num(double x) { return qpf::format_real(x); }

/// [n.J, m.J] = i (n x m).J, for random directions (covers the cyclic relations).
inline Result su2_commutators(int n = 100) {
  Result r{"su(2) commutators"};
  Gen g(1);
  for (int k = 0; k < n; ++k) {
    const auto a = g.unit_vector();
    const auto b = g.unit_vector();
    const qpf::Matrix ja = along(a);
    const qpf::Matrix jb = along(b);
    const qpf::Matrix lhs = ja * jb - jb * ja;
    const qpf::Matrix rhs = qpf::kI * along(a.cross(b));
    const double d = qpf::max_abs_diff(lhs, rhs);
    r.check(d <= qpf::kExactTol, "deviation " + num(d));
  }
  return r;
}

/// (n.J)^3 = n.J for random unit n.
inline Result j_cubed(int n = 100) {
  Result r{"J^3 = J"};
  Gen g(2);
  for (int k = 0; k < n; ++k) {
    const qpf::Matrix j = along(g.unit_vector());
    const double d = qpf::max_abs_diff(j * j * j, j);
    r.check(d <= qpf::kExactTol, "deviation " + num(d));
  }
  return r;
}

/// Rotation and OAT outputs are unitary, and match an eigendecomposition oracle.
inline Result unitarity(int n = 100) {
  Result r{"unitarity"};
  Gen g(3);
  for (int k = 0; k < n; ++k) {
    const qpf::Axis a = g.axis();
    const double phi = g.angle();
    const qpf::Matrix rot = qpf::rotation(a, phi).matrix();
    const qpf::Matrix tw = qpf::oat(a, phi).matrix();
    const char ax = qpf::axis_name(a);
    const double d1 = qpf::unitarity_defect(rot);
    const double d2 = qpf::unitarity_defect(tw);
    const double o1 = (rot - oracle::expi_hermitian(oracle::j(ax), phi)).cwiseAbs().maxCoeff();
    const oracle::M j = oracle::j(ax);
    const double o2 = (tw - oracle::expi_hermitian(j * j, phi)).cwiseAbs().maxCoeff();
    r.check(d1 <= qpf::kExactTol && d2 <= qpf::kExactTol && o1 <= 1e-11 && o2 <= 1e-11,
            "axis " + std::string(1, ax) + " phi " + num(phi));
  }
  return r;
}

/// R(l, a) R(l, b) = R(l, a + b).
inline Result rotation_additivity(int n = 100) {
  Result r{"rotation additivity"};
  Gen g(4);
  for (int k = 0; k < n; ++k) {
    const qpf::Axis a = g.axis();
    const double p = g.angle();
    const double q = g.angle();
    const double d = qpf::max_abs_diff(qpf::rotation(a, p).matrix() * qpf::rotation(a, q).matrix(),
                                       qpf::rotation(a, p + q).matrix());
    r.check(d <= qpf::kExactTol, "phi " + num(p) + " psi " + num(q) + " deviation " + num(d));
  }
  return r;
}

/// Shuffling edges does not change graph or angular momentum graph states.
inline Result edge_order_independence(int n = 100) {
  Result r{"edge-order independence"};
  Gen g(5);
  for (int k = 0; k < n; ++k) {
    const int v = g.integer(2, 4);
    std::vector<qpf::Edge> edges;
    const bool weighted = k % 2 == 0;
    for (int a = 0; a < v; ++a) {
      for (int b = a + 1; b < v; ++b) {
        if (g.integer(0, 3) == 0) continue;
        qpf::Edge e{a, b, 0.0, 0};
        if (weighted) {
          e.weight = g.angle();
        } else {
          e.multiplicity = g.integer(0, 2);
        }
        if (g.integer(0, 1)) std::swap(e.u, e.v);
        edges.push_back(e);
      }
    }
    auto shuffled = edges;
    std::shuffle(shuffled.begin(), shuffled.end(), g.engine());
    const auto label = weighted ? qpf::EdgeLabel::weight : qpf::EdgeLabel::multiplicity;
    const qpf::WeightedGraph g1(v, label, edges);
    const qpf::WeightedGraph g2(v, label, shuffled);
    const qpf::Vector s1 = weighted ? qpf::am_graph_state(g1).amplitudes() : qpf::graph_state(g1).amplitudes();
    const qpf::Vector s2 = weighted ? qpf::am_graph_state(g2).amplitudes() : qpf::graph_state(g2).amplitudes();
    const double d = (s1 - s2).cwiseAbs().maxCoeff();
    r.check(d <= qpf::kExactTol, std::to_string(v) + " vertices, deviation " + num(d));
  }
  return r;
}

inline qpf::Pulse random_pulse(Gen& g, int n) {
  const int kind = g.integer(0, n >= 2 ? 3 : 2);
  const int t = g.integer(0, n - 1);
  switch (kind) {
    case 0: return qpf::Pulse::rotation(g.axis(), g.angle(), t);
    case 1: return qpf::Pulse::oat(g.axis(), g.angle(), t);
    case 2: return qpf::Pulse::global_phase(g.angle());
    default: {
      int u = g.integer(0, n - 2);
      if (u >= t) ++u;
      return qpf::Pulse::two_body_zz(g.angle(), t, u);
    }
  }
}

inline qpf::PulseSequence random_sequence(Gen& g, int n, int len) {
  qpf::PulseSequence s(n);
  for (int i = 0; i < len; ++i) s.append(random_pulse(g, n));
  return s;
}

/// playback(s1 ++ s2) = playback(s2) playback(s1), and inverse() undoes a sequence.
inline Result composition(int n = 60) {
  Result r{"playback composition"};
  Gen g(6);
  for (int k = 0; k < n; ++k) {
    const int q = g.integer(1, 3);
    const auto s1 = random_sequence(g, q, g.integer(0, 5));
    const auto s2 = random_sequence(g, q, g.integer(0, 5));
    const qpf::Matrix lhs = qpf::playback(qpf::concat(s1, s2)).matrix();
    const qpf::Matrix rhs = qpf::playback(s2).matrix() * qpf::playback(s1).matrix();
    const qpf::Matrix id = qpf::playback(qpf::concat(s1, s1.inverse())).matrix();
    const double d1 = qpf::max_abs_diff(lhs, rhs);
    const double d2 = qpf::max_abs_diff(id, qpf::Matrix::Identity(id.rows(), id.cols()));
    r.check(d1 <= qpf::kComposedTol && d2 <= qpf::kComposedTol,
            std::to_string(q) + " qutrits, deviations " + num(d1) + " " + num(d2));
  }
  return r;
}

/// A local gate compiled onto qutrit k leaves every other qutrit's reduced
/// state untouched (random product inputs).
inline Result locality(int n = 60) {
  Result r{"compile locality"};
  Gen g(7);
  std::vector<qpf::GateId> locals;
  for (const auto& id : qpf::catalogue()) {
    if (qpf::gate_arity(id.kind) == 1) locals.push_back(id);
  }
  for (int k = 0; k < n; ++k) {
    const int q = g.integer(2, 3);
    const int t = g.integer(0, q - 1);
    const qpf::GateId id = locals[static_cast<size_t>(g.integer(0, static_cast<int>(locals.size()) - 1))];
    std::vector<qpf::Vector> parts;
    for (int p = 0; p < q; ++p) parts.push_back(g.qutrit_state());
    const qpf::Vector in = qpf::product_state(parts).amplitudes();
    const qpf::Vector out = qpf::playback(qpf::compile(id, {t}, q)).matrix() * in;
    // Expected: the catalogue gate on party t only.
    std::vector<qpf::Vector> expected = parts;
    expected[static_cast<size_t>(t)] = qpf::gate(id).matrix() * parts[static_cast<size_t>(t)];
    const qpf::Vector want = qpf::product_state(expected).amplitudes();
    const double f = qpf::fidelity(want, out);
    r.check(std::abs(f - 1.0) <= qpf::kComposedTol,
            qpf::gate_name(id) + " on " + std::to_string(t) + "/" + std::to_string(q) +
                " fidelity " + num(f));
  }
  return r;
}

/// Random single- and two-qutrit pulse programs give the same sector matrix on
/// the Fock backend as on the spin backend (same global phase).
inline Result dual_backend(int n = 40) {
  Result r{"dual-backend playback"};
  Gen g(8);
  for (int k = 0; k < n; ++k) {
    const int q = g.integer(1, 2);
    const auto s = random_sequence(g, q, g.integer(1, 4));
    const int cutoff = g.integer(2, 4);
    const qpf::Matrix spin = qpf::playback(s).matrix();
    const qpf::SectorResult fock = qpf::FockCircuit(s, cutoff).sector_action();
    const double d = qpf::max_abs_diff(spin, fock.restricted);
    r.check(d <= qpf::kComposedTol && fock.leakage <= qpf::kComposedTol,
            std::to_string(q) + " qutrits cutoff " + std::to_string(cutoff) + " deviation " + num(d));
  }
  return r;
}

/// reorder keeps spectra (as multisets) and unitarity.
inline Result reorder_spectra(int n = 40) {
  Result r{"reorder preserves spectra"};
  Gen g(9);
  for (int k = 0; k < n; ++k) {
    const int q = g.integer(1, 2);
    const qpf::Matrix u = qpf::playback(random_sequence(g, q, 3)).matrix();
    const qpf::Matrix ur =
        qpf::reorder(u, qpf::BasisConvention::angular_momentum(), qpf::BasisConvention::computational());
    auto sorted_eigs = [](const qpf::Matrix& m) {
      Eigen::ComplexEigenSolver<qpf::Matrix> es(m);
      std::vector<double> args;
      for (qpf::Index i = 0; i < m.rows(); ++i) args.push_back(std::arg(es.eigenvalues()(i)));
      std::sort(args.begin(), args.end());
      return args;
    };
    const auto e1 = sorted_eigs(u);
    const auto e2 = sorted_eigs(ur);
    double d = 0.0;
    for (size_t i = 0; i < e1.size(); ++i) {
      const double diff = std::abs(e1[i] - e2[i]);
      d = std::max(d, std::min(diff, std::abs(diff - qpf::kTwoPi)));
    }
    r.check(d <= 1e-9 && qpf::unitarity_defect(ur) <= qpf::kComposedTol, "spectral deviation " + num(d));
  }
  return r;
}

inline int run_cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = qpf::cli::run(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

/// Identical commands give byte-identical output; exit codes follow 0/1/2.
inline Result cli_contracts(const std::string& scratch_dir, int n = 40) {
  Result r{"CLI determinism and exit codes"};
  Gen g(10);
  const auto names = qpf::catalogue();
  for (int k = 0; k < n; ++k) {
    const qpf::GateId id = names[static_cast<size_t>(g.integer(0, static_cast<int>(names.size()) - 1))];
    const int arity = qpf::gate_arity(id.kind);
    std::vector<std::string> args{"compile", qpf::gate_name(id)};
    const int reg = g.integer(arity, 3);
    int t0 = g.integer(0, reg - 1);
    args.push_back(std::to_string(t0));
    if (arity == 2) {
      int t1 = g.integer(0, reg - 2);
      if (t1 >= t0) ++t1;
      args.push_back(std::to_string(t1));
    }
    args.push_back("--register");
    args.push_back(std::to_string(reg));
    std::string a;
    std::string b;
    const int c1 = run_cli(args, &a);
    const int c2 = run_cli(args, &b);
    r.check(c1 == 0 && c2 == 0 && a == b, "compile determinism for " + qpf::gate_name(id));
  }
  // Round trip: compile to a file, play it back against the catalogue.
  for (int k = 0; k < 10; ++k) {
    const qpf::GateId id = names[static_cast<size_t>(g.integer(0, static_cast<int>(names.size()) - 1))];
    const std::string path = scratch_dir + "/prop_" + std::to_string(k) + ".pulse";
    std::vector<std::string> args{"compile", qpf::gate_name(id), "0"};
    if (qpf::gate_arity(id.kind) == 2) args.push_back("1");
    args.push_back("-o");
    args.push_back(path);
    const int c1 = run_cli(args);
    const int c2 = run_cli({"playback", path, "--compare", qpf::gate_name(id)});
    r.check(c1 == 0 && c2 == 0, "round trip for " + qpf::gate_name(id));
  }
  std::string v1;
  std::string v2;
  r.check(run_cli({"verify", "--scope", "spin"}, &v1) == 0 && run_cli({"verify", "--scope", "spin"}, &v2) == 0 &&
              v1 == v2,
          "verify determinism");
  r.check(run_cli({"verify", "--scope", "spin", "--tol", "1e-30"}) == 1, "forced verification failure exits 1");
  r.check(run_cli({"gates", "--show-matrix", "BOGUS"}) == 2, "unknown gate exits 2");
  r.check(run_cli({"compile", "CZ", "0"}) == 2, "arity error exits 2");
  r.check(run_cli({"compile", "CZ", "1", "1"}) == 2, "repeated target exits 2");
  r.check(run_cli({"playback", scratch_dir + "/does-not-exist.pulse"}) == 2, "missing file exits 2");
  r.check(run_cli({"state", "am-graph"}) == 2, "am-graph without phi exits 2");
  r.check(run_cli({"sweep", "--steps", "1"}) == 2, "steps < 2 exits 2");
  r.check(run_cli({"frobnicate"}) == 2, "unknown verb exits 2");
  r.check(run_cli({}) == 2, "no verb exits 2");
  std::string s1;
  std::string s2;
  r.check(run_cli({"sweep"}, &s1) == 0 && run_cli({"sweep"}, &s2) == 0 && s1 == s2, "sweep determinism");
  std::string g1;
  std::string g2;
  r.check(run_cli({"state", "ghz"}, &g1) == 0 && run_cli({"state", "ghz"}, &g2) == 0 && g1 == g2,
          "state determinism");
  return r;
}

/// Every suite the acceptance binary counts toward the property criterion.
inline std::vector<Result> all_suites(const std::string& scratch_dir) {
  return {su2_commutators(),        j_cubed(),      unitarity(),    rotation_additivity(),
          edge_order_independence(), composition(),  locality(),     dual_backend(),
          reorder_spectra(),        cli_contracts(scratch_dir)};
}

}  // namespace props
