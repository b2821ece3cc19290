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

// Lowering of catalogue gates to pulses over {rotation, one-axis twist,
// two-body J_z (x) J_z coupling, global phase}, and dense playback.
//
// A PulseSequence is in time order: pulses[0] acts first, so the unitary of
// [p0, p1, p2] is U(p2) U(p1) U(p0).

#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qpf/angle_expr.hpp"
#include "qpf/core.hpp"
#include "qpf/qutrit_gates.hpp"
#include "qpf/spin_algebra.hpp"

namespace qpf {

enum class PulseKind { Rotation, Oat, TwoBodyZZ, GlobalPhase };

inline std::string_view pulse_keyword(PulseKind k) {
  switch (k) {
    case PulseKind::Rotation: return "ROTATION";
    case PulseKind::Oat: return "OAT";
    case PulseKind::TwoBodyZZ: return "TWOBODYZZ";
    case PulseKind::GlobalPhase: return "GLOBALPHASE";
  }
  return "?";
}

/// Maps an angle into (-2pi, 2pi]. Every pulse generator has an integer
/// spectrum, so this never changes the emitted unitary.
inline double canonical_angle(double a) {
  require_finite(a, "pulse angle");
  if (a > -kTwoPi && a <= kTwoPi) return a;
  double r = std::fmod(a, kTwoPi);
  if (r <= -kTwoPi) r += kTwoPi;
  return r;
}

class Pulse {
 public:
  static Pulse rotation(Axis axis, double angle, int target) {
    return Pulse(PulseKind::Rotation, axis, angle, {target});
  }
  static Pulse oat(Axis axis, double angle, int target) {
    return Pulse(PulseKind::Oat, axis, angle, {target});
  }
  static Pulse two_body_zz(double angle, int a, int b) {
    if (a == b) throw ArityError("two-body coupling needs two distinct targets");
    return Pulse(PulseKind::TwoBodyZZ, Axis::z, angle, {a, b});
  }
  static Pulse global_phase(double angle) {
    return Pulse(PulseKind::GlobalPhase, Axis::z, angle, {});
  }

  PulseKind kind() const { return kind_; }
  Axis axis() const { return axis_; }
  double angle() const { return angle_; }
  const std::vector<int>& targets() const { return targets_; }

  /// Same pulse, opposite angle.
  Pulse inverse() const {
    Pulse p = *this;
    p.angle_ = canonical_angle(-angle_);
    return p;
  }

  friend bool operator==(const Pulse&, const Pulse&) = default;

 private:
  Pulse(PulseKind kind, Axis axis, double angle, std::vector<int> targets)
      : kind_(kind), axis_(axis), angle_(canonical_angle(angle)),
        targets_(std::move(targets)) {
    for (int t : targets_) {
      if (t < 0) throw RangeError("pulse target must be nonnegative");
    }
  }

  PulseKind kind_;
  Axis axis_;
  double angle_;
  std::vector<int> targets_;
};

class PulseSequence {
 public:
  explicit PulseSequence(int register_size) : register_size_(register_size) {
    if (register_size < 1) throw RangeError("register size must be at least 1");
  }

  PulseSequence& append(const Pulse& p) {
    for (int t : p.targets()) {
      if (t >= register_size_) {
        throw RangeError("pulse target " + std::to_string(t) +
                         " outside register of size " + std::to_string(register_size_));
      }
    }
    pulses_.push_back(p);
    return *this;
  }

  PulseSequence& append(const PulseSequence& other) {
    for (const auto& p : other.pulses()) append(p);
    return *this;
  }

  /// Reverse order, negated angles.
  PulseSequence inverse() const {
    PulseSequence out(register_size_);
    for (auto it = pulses_.rbegin(); it != pulses_.rend(); ++it) out.append(it->inverse());
    return out;
  }

  int register_size() const { return register_size_; }
  const std::vector<Pulse>& pulses() const { return pulses_; }
  size_t size() const { return pulses_.size(); }
  bool empty() const { return pulses_.empty(); }

  friend bool operator==(const PulseSequence&, const PulseSequence&) = default;

 private:
  int register_size_;
  std::vector<Pulse> pulses_;
};

/// seq1 then seq2.
inline PulseSequence concat(const PulseSequence& a, const PulseSequence& b) {
  PulseSequence out(std::max(a.register_size(), b.register_size()));
  out.append(a);
  out.append(b);
  return out;
}

struct PulseCost {
  int rotation = 0;
  int oat = 0;
  int two_body = 0;
  int global_phase = 0;

  int total() const { return rotation + oat + two_body + global_phase; }
  /// Pulses that cost physical time; global phases are bookkeeping.
  int physical() const { return rotation + oat + two_body; }

  friend bool operator==(const PulseCost&, const PulseCost&) = default;
};

inline PulseCost pulse_cost(const PulseSequence& seq) {
  PulseCost c;
  for (const auto& p : seq.pulses()) {
    switch (p.kind()) {
      case PulseKind::Rotation: ++c.rotation; break;
      case PulseKind::Oat: ++c.oat; break;
      case PulseKind::TwoBodyZZ: ++c.two_body; break;
      case PulseKind::GlobalPhase: ++c.global_phase; break;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Playback.

inline constexpr int kMaxPlaybackQutrits = 4;

/// 3x3 unitary of a single-qutrit pulse in the angular-momentum ordering.
inline Matrix local_pulse_matrix(const Pulse& p) {
  switch (p.kind()) {
    case PulseKind::Rotation: return rotation(p.axis(), p.angle()).matrix();
    case PulseKind::Oat: return oat(p.axis(), p.angle()).matrix();
    default: throw ArityError("not a single-qutrit pulse");
  }
}

/// I (x) ... (x) u (x) ... (x) I with u on qutrit `target` (0 = most significant).
inline Matrix embed_local(const Matrix& u, int target, int qutrits) {
  const Matrix left = Matrix::Identity(pow3(target), pow3(target));
  const Index right_dim = pow3(qutrits - target - 1);
  const Matrix right = Matrix::Identity(right_dim, right_dim);
  return kron(kron(left, u), right);
}

/// Diagonal of exp(i phi J_z^a J_z^b) over the register, angular-momentum order.
inline Vector two_body_zz_diagonal(double phi, int a, int b, int qutrits) {
  const Index dim = pow3(qutrits);
  Vector d(dim);
  for (Index i = 0; i < dim; ++i) {
    // slot 0 is m=+1, slot 2 is m=-1
    const int ma = 1 - static_cast<int>((i / pow3(qutrits - a - 1)) % 3);
    const int mb = 1 - static_cast<int>((i / pow3(qutrits - b - 1)) % 3);
    d(i) = cis(phi * ma * mb);
  }
  return d;
}

/// Multiplies the pulse unitaries in time order and returns the product in
/// the requested ordering.
inline UnitaryMatrix playback(const PulseSequence& seq,
                              const BasisConvention& convention = BasisConvention::computational()) {
  const int n = seq.register_size();
  if (n > kMaxPlaybackQutrits) {
    throw CapacityError("playback supports at most " + std::to_string(kMaxPlaybackQutrits) +
                        " qutrits, got " + std::to_string(n));
  }
  const Index dim = pow3(n);
  Matrix u = Matrix::Identity(dim, dim);
  for (const auto& p : seq.pulses()) {
    switch (p.kind()) {
      case PulseKind::Rotation:
      case PulseKind::Oat:
        u = embed_local(local_pulse_matrix(p), p.targets()[0], n) * u;
        break;
      case PulseKind::TwoBodyZZ:
        u = two_body_zz_diagonal(p.angle(), p.targets()[0], p.targets()[1], n).asDiagonal() * u;
        break;
      case PulseKind::GlobalPhase:
        u *= cis(p.angle());
        break;
    }
  }
  return UnitaryMatrix(reorder(u, BasisConvention::angular_momentum(), convention));
}

// ---------------------------------------------------------------------------
// Lowering.

namespace lowering {

/// F = U_oat(y,-pi/2) R(x,-alpha) U_oat(z,pi/2) e^{i pi/2}.
inline PulseSequence fourier(int t, int n) {
  PulseSequence s(n);
  s.append(Pulse::oat(Axis::z, kPi / 2.0, t));
  s.append(Pulse::rotation(Axis::x, -magic_angle(), t));
  s.append(Pulse::oat(Axis::y, -kPi / 2.0, t));
  s.append(Pulse::global_phase(kPi / 2.0));
  return s;
}

/// C^dagger = R(x, alpha) U_oat(y, pi/2); conjugating by C takes J_z to Theta_z.
inline PulseSequence theta_conjugator_dagger(int t, int n) {
  PulseSequence s(n);
  s.append(Pulse::oat(Axis::y, kPi / 2.0, t));
  s.append(Pulse::rotation(Axis::x, magic_angle(), t));
  return s;
}

/// C pulses (the undo of theta_conjugator_dagger).
inline PulseSequence theta_conjugator(int t, int n) {
  return theta_conjugator_dagger(t, n).inverse();
}

/// exp[(4 pi i/3) Theta_z] = C exp[(4 pi i/3) J_z] C^dagger.
inline PulseSequence shift(int t, int n) {
  PulseSequence s = theta_conjugator_dagger(t, n);
  s.append(Pulse::rotation(Axis::z, 4.0 * kPi / 3.0, t));
  s.append(theta_conjugator(t, n));
  return s;
}

/// exp[i theta Theta_z^2] = F exp[i theta J_z^2] F^dagger.
inline PulseSequence momentum_twist(double theta, int t, int n) {
  PulseSequence s = fourier(t, n).inverse();
  s.append(Pulse::oat(Axis::z, theta, t));
  s.append(fourier(t, n));
  return s;
}

/// CX via exp[(4 pi i/3) J_z^a Theta_z^b].
inline PulseSequence controlled_shift(int c, int t, int n) {
  PulseSequence s = theta_conjugator_dagger(t, n);
  s.append(Pulse::two_body_zz(4.0 * kPi / 3.0, c, t));
  s.append(theta_conjugator(t, n));
  return s;
}

/// CX via (I (x) F^dagger) CZ (I (x) F); F Z F^dagger = X^dagger here, so the
/// other ordering yields CX^dagger. The F sequences carry the extra OAT.
inline PulseSequence controlled_shift_via_fourier(int c, int t, int n) {
  PulseSequence s = fourier(t, n);
  s.append(Pulse::two_body_zz(2.0 * kPi / 3.0, c, t));
  s.append(fourier(t, n).inverse());
  return s;
}

}  // namespace lowering

inline PulseSequence compile(const GateId& id, const std::vector<int>& targets,
                             int register_size);

/// A product of catalogue gates in time order, standing in for a gate with no
/// direct pulse form.
struct GateWord {
  std::vector<GateKind> letters;  // time order
  Complex phase_correction{1.0, 0.0};

  std::string describe() const {
    // Operator-product spelling: last letter leftmost.
    std::string s;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      if (!s.empty()) s += " * ";
      s += gate_name(GateId{*it, std::nullopt});
    }
    return s;
  }
};

namespace detail {

inline const std::vector<GateKind>& word_alphabet() {
  static const std::vector<GateKind> kAlphabet{
      GateKind::Z,    GateKind::X,    GateKind::F,    GateKind::T,  GateKind::S110,
      GateKind::S120, GateKind::S101, GateKind::S102, GateKind::X12};
  return kAlphabet;
}

inline GateWord search_word(const Matrix& target, int max_len) {
  const auto& alphabet = word_alphabet();
  std::vector<Matrix> letter_u;
  std::vector<int> letter_cost;
  for (GateKind k : alphabet) {
    const auto seq = compile(GateId{k, std::nullopt}, {0}, 1);
    letter_u.push_back(playback(seq).matrix());
    letter_cost.push_back(pulse_cost(seq).total());
  }
  const int a = static_cast<int>(alphabet.size());
  for (int len = 1; len <= max_len; ++len) {
    int best_cost = -1;
    GateWord best;
    std::vector<int> idx(static_cast<size_t>(len), 0);
    for (;;) {
      Matrix u = Matrix::Identity(3, 3);
      int cost = 0;
      for (int i : idx) {
        u = letter_u[static_cast<size_t>(i)] * u;
        cost += letter_cost[static_cast<size_t>(i)];
      }
      const auto r = equal_up_to_phase(u, target, kComposedTol);
      if (r.equal_up_to_phase && (best_cost < 0 || cost < best_cost)) {
        best_cost = cost;
        best.letters.clear();
        for (int i : idx) best.letters.push_back(alphabet[static_cast<size_t>(i)]);
        best.phase_correction = r.phase;
      }
      int pos = len - 1;
      while (pos >= 0 && ++idx[static_cast<size_t>(pos)] == a) {
        idx[static_cast<size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    if (best_cost >= 0) return best;
  }
  throw CatalogueError("no word of length <= " + std::to_string(max_len) + " found");
}

}  // namespace detail

/// Shortest word (then fewest pulses, then catalogue order) over the directly
/// lowered local gates that reproduces `kind` up to phase.
inline const GateWord& word_for(GateKind kind) {
  static const std::map<GateKind, GateWord> kWords = [] {
    std::map<GateKind, GateWord> m;
    m[GateKind::X01] = detail::search_word(gate(GateKind::X01).matrix(), 3);
    m[GateKind::X02] = detail::search_word(gate(GateKind::X02).matrix(), 3);
    return m;
  }();
  const auto it = kWords.find(kind);
  if (it == kWords.end()) {
    throw CatalogueError(gate_name(GateId{kind, std::nullopt}) + " is lowered directly");
  }
  return it->second;
}

/// Lowers a catalogue gate onto `targets` of a register of `register_size`
/// qutrits. Two-qutrit gates take (control, target).
inline PulseSequence compile(const GateId& id, const std::vector<int>& targets,
                             int register_size) {
  const int arity = gate_arity(id.kind);
  if (static_cast<int>(targets.size()) != arity) {
    throw ArityError(gate_name(id) + " takes " + std::to_string(arity) + " target(s), got " +
                     std::to_string(targets.size()));
  }
  for (int t : targets) {
    if (t < 0 || t >= register_size) {
      throw RangeError("target " + std::to_string(t) + " outside register of size " +
                       std::to_string(register_size));
    }
  }
  if (arity == 2 && targets[0] == targets[1]) {
    throw ArityError(gate_name(id) + " needs two distinct targets");
  }
  const int t = targets[0];
  const int n = register_size;
  PulseSequence s(n);
  switch (id.kind) {
    case GateKind::Z:
      s.append(Pulse::rotation(Axis::z, kTwoPi / 3.0, t));
      break;
    case GateKind::T:
      s.append(Pulse::rotation(Axis::z, kTwoPi / 9.0, t));
      break;
    case GateKind::X12:
      s.append(Pulse::rotation(Axis::x, kPi, t));
      s.append(Pulse::global_phase(kPi));
      break;
    case GateKind::S110:
      s.append(Pulse::oat(Axis::z, 4.0 * kPi / 3.0, t));
      break;
    case GateKind::S120:
      s.append(Pulse::oat(Axis::z, 2.0 * kPi / 3.0, t));
      break;
    case GateKind::F:
      s.append(lowering::fourier(t, n));
      break;
    case GateKind::X:
      s.append(lowering::shift(t, n));
      break;
    case GateKind::S101:
      s.append(lowering::momentum_twist(2.0 * kPi / 3.0, t, n));
      break;
    case GateKind::S102:
      s.append(lowering::momentum_twist(4.0 * kPi / 3.0, t, n));
      break;
    case GateKind::X01:
    case GateKind::X02: {
      const GateWord& w = word_for(id.kind);
      for (GateKind letter : w.letters) s.append(compile(GateId{letter, {}}, {t}, n));
      const double correction = std::arg(w.phase_correction);
      if (std::abs(correction) > kExactTol) s.append(Pulse::global_phase(correction));
      break;
    }
    case GateKind::CZ:
      s.append(Pulse::two_body_zz(kTwoPi / 3.0, targets[0], targets[1]));
      break;
    case GateKind::CRz:
      if (!id.param) throw CatalogueError("CR(z,phi) needs an angle");
      s.append(Pulse::two_body_zz(*id.param, targets[0], targets[1]));
      break;
    case GateKind::CX:
      s.append(lowering::controlled_shift(targets[0], targets[1], n));
      break;
  }
  return s;
}

inline PulseSequence compile(const GateId& id, const std::vector<int>& targets) {
  int n = 1;
  for (int t : targets) n = std::max(n, t + 1);
  return compile(id, targets, n);
}

// ---------------------------------------------------------------------------
// Verification.

struct VerifyItem {
  GateId id;
  std::string name;
  bool pass = false;
  bool exact_phase = false;  // phase == 1 within tolerance
  double residual = 0.0;
  Complex phase{0.0, 0.0};
  PulseCost cost;
  std::string notes;
};

/// Default CR(z,phi) sample angles for verification sweeps.
inline std::vector<double> default_cr_samples() {
  return {kPi / 7.0, kTwoPi / 3.0, -1.3, 5.0, 11.0};
}

/// playback(compile(g)) against gate(g) for every catalogue entry.
inline std::vector<VerifyItem> verify_all(double tol = kComposedTol,
                                          const std::vector<double>& cr_angles = default_cr_samples()) {
  std::vector<VerifyItem> items;
  for (const GateId& id : catalogue(cr_angles)) {
    const int arity = gate_arity(id.kind);
    const std::vector<int> targets = arity == 1 ? std::vector<int>{0} : std::vector<int>{0, 1};
    const PulseSequence seq = compile(id, targets, arity);
    const auto r = equal_up_to_phase(gate(id).matrix(), playback(seq).matrix(), tol);
    VerifyItem item;
    item.id = id;
    item.name = gate_name(id);
    item.pass = r.equal_up_to_phase;
    item.residual = r.max_residual;
    item.phase = r.phase;
    item.exact_phase = r.phase_defined && std::abs(r.phase - 1.0) <= tol;
    item.cost = pulse_cost(seq);
    if (id.kind == GateKind::X01 || id.kind == GateKind::X02) {
      item.notes = "word: " + word_for(id.kind).describe();
    } else if (id.kind == GateKind::CX) {
      const auto alt = pulse_cost(lowering::controlled_shift_via_fourier(0, 1, 2));
      item.notes = "Theta_z route; Fourier route costs " + std::to_string(alt.physical()) +
                   " physical pulses";
    }
    items.push_back(std::move(item));
  }
  return items;
}

// ---------------------------------------------------------------------------
// Text interchange: one pulse per line, `KIND axis? angle targets...`.

inline std::string to_text(const PulseSequence& seq) {
  std::ostringstream os;
  os << "# qpf pulse sequence v1\n";
  os << "REGISTER " << seq.register_size() << "\n";
  for (const auto& p : seq.pulses()) {
    os << pulse_keyword(p.kind());
    if (p.kind() == PulseKind::Rotation || p.kind() == PulseKind::Oat) {
      os << ' ' << axis_name(p.axis());
    }
    os << ' ' << format_real(p.angle());
    for (int t : p.targets()) os << ' ' << t;
    os << '\n';
  }
  return os.str();
}

/// Parses the text form. A missing REGISTER line means max target + 1.
inline PulseSequence parse_pulses(std::string_view text) {
  struct Raw {
    PulseKind kind;
    Axis axis;
    double angle;
    std::vector<int> targets;
    int line;
  };
  std::vector<Raw> raws;
  int declared = 0;
  int max_target = -1;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
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
        if (used != s.size() || v < 0) throw std::invalid_argument(s);
        return v;
      } catch (const std::exception&) {
        throw ParseError("bad index '" + s + "'", lineno);
      }
    };
    auto to_angle = [&](const std::string& s) {
      try {
        return parse_angle(s);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno);
      }
    };
    const std::string& kw = tok[0];
    if (kw == "REGISTER") {
      if (tok.size() != 2) throw ParseError("REGISTER takes one count", lineno);
      declared = to_int(tok[1]);
      if (declared < 1) throw ParseError("register size must be positive", lineno);
      continue;
    }
    Raw r{PulseKind::GlobalPhase, Axis::z, 0.0, {}, lineno};
    size_t expected = 0;
    size_t pos = 1;
    if (kw == "ROTATION" || kw == "OAT") {
      r.kind = kw == "ROTATION" ? PulseKind::Rotation : PulseKind::Oat;
      if (tok.size() < 2) throw ParseError(kw + " needs an axis", lineno);
      try {
        r.axis = parse_axis(tok[1]);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno);
      }
      pos = 2;
      expected = 4;
    } else if (kw == "TWOBODYZZ") {
      r.kind = PulseKind::TwoBodyZZ;
      expected = 4;
    } else if (kw == "GLOBALPHASE") {
      r.kind = PulseKind::GlobalPhase;
      expected = 2;
    } else {
      throw ParseError("unknown pulse kind '" + kw + "'", lineno);
    }
    if (tok.size() != expected) {
      throw ParseError(kw + " expects " + std::to_string(expected - 1) + " fields", lineno);
    }
    r.angle = to_angle(tok[pos]);
    for (size_t i = pos + 1; i < tok.size(); ++i) {
      r.targets.push_back(to_int(tok[i]));
      max_target = std::max(max_target, r.targets.back());
    }
    raws.push_back(std::move(r));
  }
  const int n = declared > 0 ? declared : std::max(1, max_target + 1);
  PulseSequence seq(n);
  for (const auto& r : raws) {
    try {
      switch (r.kind) {
        case PulseKind::Rotation: seq.append(Pulse::rotation(r.axis, r.angle, r.targets[0])); break;
        case PulseKind::Oat: seq.append(Pulse::oat(r.axis, r.angle, r.targets[0])); break;
        case PulseKind::TwoBodyZZ:
          seq.append(Pulse::two_body_zz(r.angle, r.targets[0], r.targets[1]));
          break;
        case PulseKind::GlobalPhase: seq.append(Pulse::global_phase(r.angle)); break;
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what(), r.line);
    }
  }
  return seq;
}

}  // namespace qpf
