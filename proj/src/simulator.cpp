// Copyright 2026 The olsc Authors
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

#include "olsc/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace olsc {

namespace {

void check_pulse(const Pulse& p, std::size_t dim) {
  if (p.a == p.b || p.a >= dim || p.b >= dim) {
    throw std::invalid_argument("pulse levels (" + std::to_string(p.a) + "," +
                                std::to_string(p.b) + ") invalid for dimension " +
                                std::to_string(dim));
  }
}

std::string format_number(double x) {
  if (std::abs(x - std::round(x)) < kTolerance) {
    const long v = std::lround(x);
    return (v > 0 ? "+" : "") + std::to_string(v);
  }
  std::ostringstream os;
  os << std::showpos << x;
  return os.str();
}

std::string format_phase(std::complex<double> z) {
  if (std::abs(z.imag()) < kTolerance) return format_number(z.real());
  std::ostringstream os;
  os << "(" << z.real() << "," << z.imag() << ")";
  return os.str();
}

}  // namespace

Unitary pulse_unitary(const Pulse& p, std::size_t dim) {
  check_pulse(p, dim);
  const auto lo = static_cast<Eigen::Index>(std::min(p.a, p.b));
  const auto hi = static_cast<Eigen::Index>(std::max(p.a, p.b));
  Unitary u = Unitary::Identity(static_cast<Eigen::Index>(dim),
                                static_cast<Eigen::Index>(dim));
  u(lo, lo) = 0;
  u(hi, hi) = 0;
  u(lo, hi) = 1;
  u(hi, lo) = -1;
  return u;
}

Unitary sequence_unitary(const std::vector<Pulse>& pulses, std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  Unitary u = Unitary::Identity(n, n);
  for (const Pulse& p : pulses) {
    check_pulse(p, dim);
    // Right-multiplying by the pulse only touches two columns.
    const auto lo = static_cast<Eigen::Index>(std::min(p.a, p.b));
    const auto hi = static_cast<Eigen::Index>(std::max(p.a, p.b));
    Eigen::VectorXcd col_lo = u.col(lo);
    u.col(lo) = -u.col(hi);
    u.col(hi) = col_lo;
  }
  return u;
}

Unitary sequence_unitary(const PulseSequence& seq, std::size_t dim) {
  return sequence_unitary(seq.flatten(), dim);
}

bool is_unitary(const Unitary& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Unitary diff = u * u.adjoint() - Unitary::Identity(u.rows(), u.cols());
  return diff.cwiseAbs().maxCoeff() < tol;
}

Verdict verify_permutation(const Unitary& u, const Permutation& p,
                           const Labeling& labeling, double tol) {
  const auto dim = static_cast<Eigen::Index>(p.size());
  Verdict v;
  if (u.rows() != dim || u.cols() != dim || labeling.size() != p.size()) {
    v.mismatches.push_back("dimension mismatch: unitary is " +
                           std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                           ", operation has " + std::to_string(p.size()) + " states");
    return v;
  }
  const int n = p.n_qubits();
  v.realized.assign(p.size(), std::nullopt);
  v.phases.assign(p.size(), 0.0);
  for (Eigen::Index row = 0; row < dim; ++row) {
    const Level level = static_cast<Level>(row);
    const State label = labeling.label(level);
    std::optional<Eigen::Index> unit;
    bool clean = true;
    for (Eigen::Index col = 0; col < dim; ++col) {
      const double mag = std::abs(u(row, col));
      if (std::abs(mag - 1.0) < tol) {
        if (unit) clean = false;
        unit = col;
      } else if (mag >= tol) {
        clean = false;
      }
    }
    if (!unit || !clean) {
      v.mismatches.push_back("level " + std::to_string(level) + " (" +
                             format_ket(label, n) + ") is not carried to a single level");
      continue;
    }
    const State got = labeling.label(static_cast<Level>(*unit));
    v.realized[label] = got;
    v.phases[level] = u(row, *unit);
    if (got != p(label)) {
      v.mismatches.push_back(format_ket(label, n) + " -> " + format_ket(got, n) +
                             ", expected " + format_ket(p(label), n));
    }
  }
  v.pass = v.mismatches.empty();
  return v;
}

std::string format_verdict(const Verdict& v, const Labeling& labeling) {
  const int n = labeling.n_qubits();
  std::ostringstream os;
  os << "verdict: " << (v.pass ? "PASS" : "FAIL") << "\n";
  os << "phases:";
  for (const auto& z : v.phases) os << " " << format_phase(z);
  os << "\n";
  if (!v.pass) {
    os << "realized:\n";
    for (State s = 0; s < v.realized.size(); ++s) {
      os << "  " << format_ket(s, n) << " -> "
         << (v.realized[s] ? format_ket(*v.realized[s], n) : std::string("?")) << "\n";
    }
    os << "mismatches:\n";
    for (const auto& m : v.mismatches) os << "  " << m << "\n";
  }
  return os.str();
}

std::vector<double> equilibrium_populations(const Topology& t) {
  std::vector<double> pop(t.level_count());
  for (Level l = 0; l < pop.size(); ++l) pop[l] = t.twice_m(l) / 2.0;
  return pop;
}

std::vector<double> final_populations(const std::vector<double>& eq,
                                      const Permutation& p, const Labeling& labeling) {
  if (eq.size() != p.size() || labeling.size() != p.size()) {
    throw std::invalid_argument("population, operation and labeling sizes differ");
  }
  std::vector<double> out(eq.size());
  for (Level l = 0; l < eq.size(); ++l) {
    out[labeling.level(p(labeling.label(l)))] = eq[l];
  }
  return out;
}

std::vector<Stick> stick_spectrum(const std::vector<double>& pop, const Topology& t) {
  if (pop.size() != t.level_count()) {
    throw std::invalid_argument("population vector does not match the topology");
  }
  const int n = t.n_qubits();
  std::vector<Stick> sticks;
  for (const Edge& e : t.edges()) {
    Stick s;
    s.a = e.lo;
    s.b = e.hi;
    s.intensity = pop[e.lo] - pop[e.hi];
    if (t.kind() == TopologyKind::kQuadrupolarChain) {
      s.spin = 1;
      s.transition = format_m(t.twice_m(e.lo)) + "<->" + format_m(t.twice_m(e.hi));
    } else {
      const Level flip = e.lo ^ e.hi;
      for (int k = 1; k <= n; ++k) {
        const Level bit = Level{1} << (n - k);
        if (bit == flip) {
          s.spin = k;
        } else {
          s.transition += (e.lo & bit) ? 'b' : 'a';
        }
      }
      if (n == 1) s.transition = "-";
    }
    sticks.push_back(std::move(s));
  }
  std::stable_sort(sticks.begin(), sticks.end(), [](const Stick& x, const Stick& y) {
    return x.spin < y.spin;
  });
  return sticks;
}

std::string format_spectrum(const std::vector<Stick>& sticks) {
  std::ostringstream os;
  os << "# spin  transition  intensity\n";
  for (const Stick& s : sticks) {
    os << s.spin << "  " << s.transition << "  " << format_number(s.intensity) << "\n";
  }
  return os.str();
}

std::string render_sticks(const std::vector<Stick>& sticks) {
  if (sticks.empty()) return "";
  double top = 0;
  for (const Stick& s : sticks) top = std::max(top, std::abs(s.intensity));
  const int rows = static_cast<int>(std::ceil(top - kTolerance));
  std::ostringstream os;
  auto cell = [&](const Stick& s, int level) {
    if (level > 0) return s.intensity >= level - 0.5 ? '|' : ' ';
    return s.intensity <= level + 0.5 ? '|' : ' ';
  };
  for (int level = rows; level >= -rows; --level) {
    os << std::setw(3) << std::showpos << level << std::noshowpos << " ";
    int spin = sticks.front().spin;
    for (const Stick& s : sticks) {
      if (s.spin != spin) {
        os << ' ';
        spin = s.spin;
      }
      os << (level == 0 ? '-' : cell(s, level));
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace olsc
