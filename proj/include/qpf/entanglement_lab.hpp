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

// Entangled-state preparation and diagnostics: the two-mode |+> state, qutrit
// graph states, j = 1 angular momentum graph states, bipartition Schmidt
// profiles and a GHZ-class (SLOCC) test for three-term product expansions.
//
// Multi-qutrit amplitudes are in the computational ordering, party 0 being
// the most significant digit. Graph text uses 1-based vertex labels.

#pragma once

#include <array>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "qpf/angle_expr.hpp"
#include "qpf/compiler.hpp"
#include "qpf/core.hpp"
#include "qpf/fock_backend.hpp"
#include "qpf/qutrit_gates.hpp"
#include "qpf/spin_algebra.hpp"

namespace qpf {

inline constexpr int kMaxGraphVertices = 4;
inline constexpr double kSchmidtThreshold = 1e-9;
inline constexpr double kSchmidtGapRatio = 1e3;

// ---------------------------------------------------------------------------
// Graphs.

enum class EdgeLabel { multiplicity, weight };

struct Edge {
  int u;  // 0-based
  int v;
  double weight = 0.0;  // radians, angular momentum graphs
  int multiplicity = 0;  // 0..2, qutrit graph states
};

class WeightedGraph {
 public:
  WeightedGraph(int vertices, EdgeLabel label, std::vector<Edge> edges)
      : vertices_(vertices), label_(label), edges_(std::move(edges)) {
    if (vertices < 1) throw ValidationError("graph needs at least one vertex");
    for (const auto& e : edges_) {
      if (e.u < 0 || e.v < 0 || e.u >= vertices || e.v >= vertices) {
        throw ValidationError("edge endpoint outside the vertex set");
      }
      if (e.u == e.v) throw ValidationError("edge endpoints must be distinct");
      if (label == EdgeLabel::multiplicity && (e.multiplicity < 0 || e.multiplicity > 2)) {
        throw ValidationError("edge multiplicity must be 0, 1 or 2");
      }
      if (label == EdgeLabel::weight) require_finite(e.weight, "edge weight");
    }
  }

  static WeightedGraph with_multiplicities(int vertices,
                                           const std::vector<std::array<int, 3>>& edges) {
    std::vector<Edge> es;
    for (const auto& [u, v, g] : edges) es.push_back(Edge{u, v, 0.0, g});
    return WeightedGraph(vertices, EdgeLabel::multiplicity, std::move(es));
  }

  static WeightedGraph with_weights(int vertices,
                                    const std::vector<std::tuple<int, int, double>>& edges) {
    std::vector<Edge> es;
    for (const auto& [u, v, w] : edges) es.push_back(Edge{u, v, w, 0});
    return WeightedGraph(vertices, EdgeLabel::weight, std::move(es));
  }

  int vertices() const { return vertices_; }
  EdgeLabel label() const { return label_; }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  int vertices_;
  EdgeLabel label_;
  std::vector<Edge> edges_;
};

/// The GHZ graph: edges {1,2}, {1,3} with multiplicity g.
inline WeightedGraph ghz_graph(int g = 1) {
  return WeightedGraph::with_multiplicities(3, {{0, 1, g}, {0, 2, g}});
}

/// Star graph on three vertices with both edges weighted phi.
inline WeightedGraph am_star_graph(double phi) {
  return WeightedGraph::with_weights(3, {{0, 1, phi}, {0, 2, phi}});
}

/// Graph file grammar (one statement per line, '#' starts a comment):
///
///   vertices <count>
///   edges
///   <u> <v> weight=<angle>     # angular momentum graph state
///   <u> <v> mult=<0|1|2>       # qutrit graph state
///
/// Vertex labels are 1-based. All edges of a file must use the same label
/// kind. <angle> accepts radians or pi-expressions such as 2pi/3.
inline WeightedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int vertices = -1;
  bool in_edges = false;
  std::optional<EdgeLabel> label;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    auto to_int = [&](const std::string& s) {
      try {
        size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
      } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'", lineno);
      }
    };
    if (tok[0] == "vertices") {
      if (tok.size() != 2) throw ParseError("'vertices' takes one count", lineno);
      if (vertices >= 0) throw ParseError("duplicate 'vertices' line", lineno);
      vertices = to_int(tok[1]);
      if (vertices < 1) throw ParseError("vertex count must be positive", lineno);
      continue;
    }
    if (tok[0] == "edges") {
      if (tok.size() != 1) throw ParseError("'edges' takes no arguments", lineno);
      in_edges = true;
      continue;
    }
    if (!in_edges) throw ParseError("unexpected '" + tok[0] + "' before 'edges'", lineno);
    if (tok.size() != 3) throw ParseError("edge lines read '<u> <v> weight=..|mult=..'", lineno);
    Edge e{to_int(tok[0]) - 1, to_int(tok[1]) - 1, 0.0, 0};
    const std::string& attr = tok[2];
    EdgeLabel kind;
    if (attr.rfind("weight=", 0) == 0) {
      kind = EdgeLabel::weight;
      try {
        e.weight = parse_angle(attr.substr(7));
      } catch (const ParseError& err) {
        throw ParseError(err.what(), lineno);
      }
    } else if (attr.rfind("mult=", 0) == 0) {
      kind = EdgeLabel::multiplicity;
      e.multiplicity = to_int(attr.substr(5));
      if (e.multiplicity < 0 || e.multiplicity > 2) {
        throw ParseError("multiplicity must be 0, 1 or 2", lineno);
      }
    } else {
      throw ParseError("edge attribute must be weight=<angle> or mult=<0|1|2>", lineno);
    }
    if (label && *label != kind) {
      throw ParseError("graph mixes weight= and mult= edges", lineno);
    }
    label = kind;
    edges.push_back(e);
    edge_lines.push_back(lineno);
  }
  if (vertices < 0) throw ParseError("missing 'vertices' line");
  for (size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.u < 0 || e.v < 0 || e.u >= vertices || e.v >= vertices) {
      throw ParseError("edge endpoint outside 1.." + std::to_string(vertices), edge_lines[i]);
    }
    if (e.u == e.v) throw ParseError("edge endpoints must be distinct", edge_lines[i]);
  }
  return WeightedGraph(vertices, label.value_or(EdgeLabel::multiplicity), std::move(edges));
}

// ---------------------------------------------------------------------------
// Multi-qutrit states.

class MultiQutritState {
 public:
  MultiQutritState(int parties, Vector amplitudes, double tol = kExactTol)
      : parties_(parties), amps_(std::move(amplitudes)) {
    if (parties < 1) throw ShapeError("state needs at least one party");
    if (amps_.size() != pow3(parties)) throw ShapeError("amplitude vector is not 3^parties long");
    if (!(std::abs(amps_.norm() - 1.0) <= tol)) {
      throw ValidationError("state is not normalized (norm " + std::to_string(amps_.norm()) + ")");
    }
  }

  int parties() const { return parties_; }
  const Vector& amplitudes() const { return amps_; }
  Complex operator()(Index i) const { return amps_(i); }

  /// Same amplitudes, listed in another per-party ordering.
  Vector in_convention(const BasisConvention& c) const {
    return reorder_state(amps_, BasisConvention::computational(), c);
  }

 private:
  int parties_;
  Vector amps_;
};

inline MultiQutritState product_state(const std::vector<Vector>& locals) {
  if (locals.empty()) throw ShapeError("product of zero states");
  Vector v = locals[0];
  for (size_t i = 1; i < locals.size(); ++i) v = kron(v, locals[i]);
  return MultiQutritState(static_cast<int>(locals.size()), std::move(v));
}

/// Applies a 3^k x 3^k gate to the listed parties (first listed = most significant).
inline Vector apply_gate(const Vector& amps, int parties, const Matrix& u,
                         const std::vector<int>& targets) {
  const int k = static_cast<int>(targets.size());
  if (u.rows() != pow3(k) || u.cols() != pow3(k)) throw ShapeError("gate size does not match targets");
  for (int t : targets) {
    if (t < 0 || t >= parties) throw RangeError("target party out of range");
  }
  const Index dim = pow3(parties);
  auto digit = [&](Index i, int p) { return static_cast<int>((i / pow3(parties - p - 1)) % 3); };
  Vector out = Vector::Zero(dim);
  for (Index i = 0; i < dim; ++i) {
    if (amps(i) == Complex(0.0, 0.0)) continue;
    Index local = 0;
    Index base = i;
    for (int t : targets) {
      const int d = digit(i, t);
      local = local * 3 + d;
      base -= d * pow3(parties - t - 1);
    }
    for (Index r = 0; r < u.rows(); ++r) {
      const Complex e = u(r, local);
      if (e == Complex(0.0, 0.0)) continue;
      Index j = base;
      Index rest = r;
      for (int q = k - 1; q >= 0; --q) {
        j += (rest % 3) * pow3(parties - targets[static_cast<size_t>(q)] - 1);
        rest /= 3;
      }
      out(j) += e * amps(i);
    }
  }
  return out;
}

inline MultiQutritState apply_gate(const MultiQutritState& s, const Matrix& u,
                                   const std::vector<int>& targets) {
  return MultiQutritState(s.parties(), apply_gate(s.amplitudes(), s.parties(), u, targets),
                          kComposedTol);
}

/// (|0...0> + |1...1> + |2...2>)/sqrt3.
inline MultiQutritState ghz_state(int parties) {
  Vector v = Vector::Zero(pow3(parties));
  Index step = 0;
  for (int p = 0; p < parties; ++p) step += pow3(p);
  for (int q = 0; q < 3; ++q) v(q * step) = 1.0 / std::sqrt(3.0);
  return MultiQutritState(parties, std::move(v));
}

inline double fidelity(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("fidelity: size mismatch");
  return std::norm(a.dot(b));
}

// ---------------------------------------------------------------------------
// Preparations.

/// Encoded |0_L> = |1,1> sent through the compiled Fourier pulses on the
/// two-mode backend: (|2,0> + |1,1> + |0,2>)/sqrt3.
inline FockState plus_state_two_modes(int cutoff = kDefaultCutoff) {
  const FockCircuit circuit(compile(GateId{GateKind::F, {}}, {0}, 1), cutoff);
  return circuit.apply(FockState::basis(circuit.space(), {1, 1}));
}

/// The same state written down directly.
inline FockState plus_state_two_modes_direct(int cutoff = kDefaultCutoff) {
  const FockSpace space(2, cutoff);
  Vector v = Vector::Zero(space.dim());
  const double r = 1.0 / std::sqrt(3.0);
  v(space.index({2, 0})) = r;
  v(space.index({1, 1})) = r;
  v(space.index({0, 2})) = r;
  return FockState(space, std::move(v));
}

/// Singular values of a two-mode state split as mode 0 | mode 1.
inline Eigen::VectorXd two_mode_singular_values(const FockState& s) {
  if (s.space().modes() != 2) throw ShapeError("two-mode split needs a two-mode state");
  const Index d = s.space().cutoff() + 1;
  Matrix m(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) m(i, j) = s.amplitudes()(i * d + j);
  }
  return Eigen::JacobiSVD<Matrix>(m).singularValues();
}

inline void check_graph_size(const WeightedGraph& g) {
  if (g.vertices() > kMaxGraphVertices) {
    throw CapacityError("graph states support at most " + std::to_string(kMaxGraphVertices) +
                        " vertices");
  }
}

/// prod_e CZ_e^{g_e} |+>^V.
inline MultiQutritState graph_state(const WeightedGraph& g) {
  check_graph_size(g);
  if (g.label() != EdgeLabel::multiplicity) {
    throw ValidationError("qutrit graph states need edge multiplicities, not weights");
  }
  std::vector<Vector> plus(static_cast<size_t>(g.vertices()), momentum_state(0));
  Vector v = product_state(plus).amplitudes();
  const Matrix cz = gate(GateKind::CZ).matrix();
  for (const auto& e : g.edges()) {
    for (int k = 0; k < e.multiplicity; ++k) v = apply_gate(v, g.vertices(), cz, {e.u, e.v});
  }
  return MultiQutritState(g.vertices(), std::move(v), kComposedTol);
}

/// F^dagger on parties 2 and 3.
inline MultiQutritState ghz_recover(const MultiQutritState& s) {
  if (s.parties() != 3) throw ShapeError("GHZ recovery acts on three parties");
  const Matrix fd = gate(GateKind::F).matrix().adjoint();
  return apply_gate(apply_gate(s, fd, {1}), fd, {2});
}

/// |x+> = (|m=1> + sqrt2 |m=0> + |m=-1>)/2, computational ordering.
inline Vector x_plus_state() {
  Vector m(3);
  m << 0.5, std::sqrt(2.0) / 2.0, 0.5;
  return reorder_state(m, BasisConvention::angular_momentum(), BasisConvention::computational());
}

/// exp(i phi J_z (x) J_z), computational ordering. Equals CZ at phi = 2pi/3.
inline UnitaryMatrix cr_z(double phi, const std::pair<int, int>& pair = {0, 1}) {
  if (pair.first == pair.second) throw ArityError("CR(z,phi) needs two distinct parties");
  return gate(GateId::cr_z(phi));
}

/// prod_e exp(i phi_e J_z^u J_z^v) |x+>^V.
inline MultiQutritState am_graph_state(const WeightedGraph& g) {
  check_graph_size(g);
  if (g.label() != EdgeLabel::weight && !g.edges().empty()) {
    throw ValidationError("angular momentum graph states need real edge weights");
  }
  std::vector<Vector> xs(static_cast<size_t>(g.vertices()), x_plus_state());
  Vector v = product_state(xs).amplitudes();
  for (const auto& e : g.edges()) {
    v = apply_gate(v, g.vertices(), cr_z(e.weight, {e.u, e.v}).matrix(), {e.u, e.v});
  }
  return MultiQutritState(g.vertices(), std::move(v), kComposedTol);
}

/// Pulse program for |J_G> starting from |m=+1> on every vertex:
/// R(y, -pi/2) per vertex (|m=+1> -> |x+>), then one coupling per edge.
inline PulseSequence am_graph_pulses(const WeightedGraph& g) {
  check_graph_size(g);
  if (g.label() != EdgeLabel::weight && !g.edges().empty()) {
    throw ValidationError("angular momentum graph states need real edge weights");
  }
  PulseSequence s(g.vertices());
  for (int v = 0; v < g.vertices(); ++v) s.append(Pulse::rotation(Axis::y, -kPi / 2.0, v));
  for (const auto& e : g.edges()) s.append(Pulse::two_body_zz(e.weight, e.u, e.v));
  return s;
}

/// am_graph_pulses replayed on the two-mode-per-qutrit Fock backend from
/// |2,0>^V and read back on the encoded sector (at most 2 vertices).
inline MultiQutritState am_graph_state_fock(const WeightedGraph& g,
                                            int cutoff = kDefaultCutoff) {
  const FockCircuit circuit(am_graph_pulses(g), cutoff);
  const SectorEmbedding& emb = circuit.embedding();
  Vector start = Vector::Zero(pow3(g.vertices()));
  Index all_plus = 0;  // computational digit 1 on every party is m = +1
  for (int v = 0; v < g.vertices(); ++v) all_plus = all_plus * 3 + 1;
  start(all_plus) = 1.0;
  const auto [amps, leak] = emb.extract(circuit.apply(emb.embed(start, circuit.space())));
  if (!(leak <= kComposedTol)) throw LeakageError("Fock preparation left the encoded sector", leak);
  return MultiQutritState(g.vertices(), amps, kComposedTol);
}

// ---------------------------------------------------------------------------
// Schmidt profiles.

struct SchmidtCut {
  unsigned mask;  // parties on side A (bit p = party p)
  int rank;
  std::vector<double> singular_values;  // descending
  double gap_ratio;   // smallest kept / largest dropped; +inf if none dropped
  bool degenerate;    // gap_ratio below kSchmidtGapRatio

  std::string label(int parties) const {
    std::string a;
    std::string b;
    for (int p = 0; p < parties; ++p) ((mask >> p) & 1U ? a : b) += std::to_string(p + 1);
    return a + "|" + b;
  }
};

struct SchmidtProfile {
  int parties = 0;
  std::vector<SchmidtCut> cuts;

  const SchmidtCut& cut(unsigned mask) const {
    for (const auto& c : cuts) {
      if (c.mask == mask) return c;
    }
    throw RangeError("no such bipartition");
  }
};

inline SchmidtCut schmidt_cut(const Vector& amps, int parties, unsigned mask,
                              double threshold = kSchmidtThreshold) {
  std::vector<int> side_a;
  std::vector<int> side_b;
  for (int p = 0; p < parties; ++p) ((mask >> p) & 1U ? side_a : side_b).push_back(p);
  if (side_a.empty() || side_b.empty()) throw RangeError("bipartition must be nontrivial");
  const Index rows = pow3(static_cast<int>(side_a.size()));
  const Index cols = pow3(static_cast<int>(side_b.size()));
  Matrix m = Matrix::Zero(rows, cols);
  for (Index i = 0; i < amps.size(); ++i) {
    Index r = 0;
    Index c = 0;
    for (int p : side_a) r = r * 3 + (i / pow3(parties - p - 1)) % 3;
    for (int p : side_b) c = c * 3 + (i / pow3(parties - p - 1)) % 3;
    m(r, c) = amps(i);
  }
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Matrix>(m).singularValues();
  SchmidtCut cut{mask, 0, {}, std::numeric_limits<double>::infinity(), false};
  double kept_min = std::numeric_limits<double>::infinity();
  double dropped_max = 0.0;
  for (Index k = 0; k < sv.size(); ++k) {
    cut.singular_values.push_back(sv(k));
    if (sv(k) > threshold) {
      ++cut.rank;
      kept_min = std::min(kept_min, sv(k));
    } else {
      dropped_max = std::max(dropped_max, sv(k));
    }
  }
  if (dropped_max > 0.0 && cut.rank > 0) cut.gap_ratio = kept_min / dropped_max;
  cut.degenerate = cut.gap_ratio < kSchmidtGapRatio;
  return cut;
}

/// Every bipartition with party 1 on side A (each cut listed once).
inline SchmidtProfile schmidt_profile(const MultiQutritState& s,
                                      double threshold = kSchmidtThreshold) {
  if (s.parties() < 2 || s.parties() > 4) throw ShapeError("Schmidt profiles need 2-4 parties");
  SchmidtProfile prof;
  prof.parties = s.parties();
  const unsigned full = (1U << s.parties()) - 1U;
  for (unsigned mask = 1; mask < full; ++mask) {
    if ((mask & 1U) == 0) continue;
    prof.cuts.push_back(schmidt_cut(s.amplitudes(), s.parties(), mask, threshold));
  }
  return prof;
}

// ---------------------------------------------------------------------------
// Three-term product expansions and GHZ-class equivalence.

struct ProductTerm {
  Complex coefficient;
  std::array<Vector, 3> factors;  // computational ordering
};

/// |J_GHZ> = (1/2)[|1>|phi>|phi> + sqrt2 |0>|x+>|x+> + |-1>|-phi>|-phi>], the
/// first party in its J_z eigenbasis and |phi> = R(z, phi)|x+>.
inline std::vector<ProductTerm> jghz_terms(double phi) {
  require_finite(phi, "phi");
  auto m_state = [](int slot) {
    Vector m = Vector::Zero(3);
    m(slot) = 1.0;
    return reorder_state(m, BasisConvention::angular_momentum(), BasisConvention::computational());
  };
  const Vector xp = x_plus_state();
  const Matrix rp = to_computational(rotation(Axis::z, phi).matrix());
  const Matrix rm = to_computational(rotation(Axis::z, -phi).matrix());
  const Vector up = rp * xp;
  const Vector down = rm * xp;
  return {
      ProductTerm{0.5, {m_state(0), up, up}},
      ProductTerm{std::sqrt(2.0) / 2.0, {m_state(1), xp, xp}},
      ProductTerm{0.5, {m_state(2), down, down}},
  };
}

/// Three-term expansion of a 3-vertex angular momentum graph state whose
/// edges all touch one center vertex: expanding the center in its J_z
/// eigenbasis turns every edge into a local z rotation on the leaf.
inline std::vector<ProductTerm> am_graph_terms(const WeightedGraph& g) {
  if (g.vertices() != 3) throw UnsupportedFormError("three-term expansion needs three vertices");
  if (g.label() != EdgeLabel::weight && !g.edges().empty()) {
    throw ValidationError("angular momentum graph states need real edge weights");
  }
  std::array<std::array<double, 3>, 3> w{};
  for (const auto& e : g.edges()) {
    w[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)] += e.weight;
    w[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)] += e.weight;
  }
  int center = -1;
  for (int c = 0; c < 3 && center < 0; ++c) {
    const int a = (c + 1) % 3;
    const int b = (c + 2) % 3;
    if (w[static_cast<size_t>(a)][static_cast<size_t>(b)] == 0.0) center = c;
  }
  if (center < 0) throw UnsupportedFormError("graph has no vertex touching every edge");
  const Vector xp = x_plus_state();
  const Vector xp_m = reorder_state(xp, BasisConvention::computational(),
                                    BasisConvention::angular_momentum());
  std::vector<ProductTerm> terms;
  for (int slot = 0; slot < 3; ++slot) {
    const double m = 1.0 - slot;  // slot order m = +1, 0, -1
    ProductTerm t{xp_m(slot), {}};
    for (int p = 0; p < 3; ++p) {
      if (p == center) {
        Vector e = Vector::Zero(3);
        e(slot) = 1.0;
        t.factors[static_cast<size_t>(p)] = reorder_state(e, BasisConvention::angular_momentum(),
                                                          BasisConvention::computational());
      } else {
        const double phi = m * w[static_cast<size_t>(center)][static_cast<size_t>(p)];
        t.factors[static_cast<size_t>(p)] = to_computational(rotation(Axis::z, phi).matrix()) * xp;
      }
    }
    terms.push_back(std::move(t));
  }
  return terms;
}

inline std::vector<ProductTerm> ghz_terms() {
  const double r = 1.0 / std::sqrt(3.0);
  std::vector<ProductTerm> t;
  for (int q = 0; q < 3; ++q) t.push_back(ProductTerm{r, {basis_state(q), basis_state(q), basis_state(q)}});
  return t;
}

inline Vector state_from_terms(const std::vector<ProductTerm>& terms) {
  Vector v = Vector::Zero(27);
  for (const auto& t : terms) {
    v += t.coefficient * kron(kron(t.factors[0], t.factors[1]), t.factors[2]);
  }
  return v;
}

struct SloccResult {
  bool ghz_equivalent = false;
  std::array<double, 3> gram_determinants{};  // per party
  std::array<Matrix, 3> witness;              // local maps, valid when equivalent
  double witness_fidelity = 0.0;              // with GHZ after applying the maps
};

/// For sum_k c_k |a_k>|b_k>|c_k>: GHZ-class iff each party's three vectors are
/// linearly independent (Gram determinant above `threshold`). The witness
/// maps send the k-th vectors to |k> and absorb the coefficients.
inline SloccResult slocc_ghz_check(const std::vector<ProductTerm>& terms,
                                   double threshold = kSchmidtThreshold) {
  if (terms.size() != 3) {
    throw UnsupportedFormError("GHZ-class test needs exactly three product terms, got " +
                               std::to_string(terms.size()));
  }
  SloccResult r;
  std::array<Matrix, 3> frames;
  bool independent = true;
  for (int p = 0; p < 3; ++p) {
    Matrix v(3, 3);
    for (int k = 0; k < 3; ++k) {
      const Vector& f = terms[static_cast<size_t>(k)].factors[static_cast<size_t>(p)];
      if (f.size() != 3) throw ShapeError("product factors must be qutrit vectors");
      v.col(k) = f / f.norm();
    }
    frames[static_cast<size_t>(p)] = v;
    const double gram = std::abs((v.adjoint() * v).determinant());
    r.gram_determinants[static_cast<size_t>(p)] = gram;
    independent = independent && gram > threshold;
  }
  for (const auto& t : terms) {
    if (std::abs(t.coefficient) <= threshold) independent = false;
  }
  r.ghz_equivalent = independent;
  if (!independent) return r;

  for (int p = 0; p < 3; ++p) {
    Matrix w = frames[static_cast<size_t>(p)].inverse();
    if (p == 0) {
      // Fold the coefficients and factor norms into the first party's map.
      Matrix scale = Matrix::Zero(3, 3);
      for (int k = 0; k < 3; ++k) {
        const auto& t = terms[static_cast<size_t>(k)];
        const double norms = t.factors[0].norm() * t.factors[1].norm() * t.factors[2].norm();
        scale(k, k) = 1.0 / (t.coefficient * norms);
      }
      w = scale * w;
    }
    w *= std::sqrt(3.0) / w.norm();
    r.witness[static_cast<size_t>(p)] = w;
  }
  const Matrix local = kron(kron(r.witness[0], r.witness[1]), r.witness[2]);
  Vector out = local * state_from_terms(terms);
  out /= out.norm();
  r.witness_fidelity = fidelity(ghz_state(3).amplitudes(), out);
  return r;
}

}  // namespace qpf
