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

// Command-line front end. Talks to the compiler through the C API only.
//
// Exit codes: 0 success, 1 usage or configuration error, 2 parse error,
// 3 synthesis failure, 4 verification FAIL.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "olsc/olsc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitSynthesis = 3;
constexpr int kExitVerifyFail = 4;

// Thrown to unwind to main with an exit code; the message is already printed.
struct Exit {
  int code;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using Perm = std::unique_ptr<olsc_permutation, Deleter<olsc_permutation, olsc_permutation_free>>;
using Topo = std::unique_ptr<olsc_topology, Deleter<olsc_topology, olsc_topology_free>>;
using Scheme = std::unique_ptr<olsc_scheme, Deleter<olsc_scheme, olsc_scheme_free>>;
using Seq = std::unique_ptr<olsc_sequence, Deleter<olsc_sequence, olsc_sequence_free>>;
using VerdictPtr = std::unique_ptr<olsc_verdict, Deleter<olsc_verdict, olsc_verdict_free>>;
using Enum = std::unique_ptr<olsc_enumerator, Deleter<olsc_enumerator, olsc_enumerator_free>>;

[[noreturn]] void die(int code, const std::string& message) {
  std::cerr << "olsc: " << message << "\n";
  throw Exit{code};
}

void check(olsc_status s, const std::string& context) {
  if (s == OLSC_OK) return;
  int code = kExitUsage;
  if (s == OLSC_ERR_PARSE) code = kExitParse;
  if (s == OLSC_ERR_SYNTHESIS || s == OLSC_ERR_UNREPAIRABLE) code = kExitSynthesis;
  die(code, context + ": " + olsc_last_error());
}

std::string take(char* s) {
  std::string out(s);
  olsc_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(kExitUsage, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die(kExitUsage, "cannot write " + path);
  out << text;
}

bool looks_like_file(const std::string& op) {
  return op.find('/') != std::string::npos || op.ends_with(".tt") ||
         std::ifstream(op).good();
}

bool needs_size(const std::string& op) {
  return op == "identity" || op.starts_with("swap:") || op.starts_with("swap(");
}

// Loads and composes the operations left to right. Swap and bare identity take
// their qubit count from the other operations, or from `qubits` if given.
Perm load_operation(const std::vector<std::string>& ops, int qubits) {
  if (ops.empty()) die(kExitUsage, "no operation given");
  std::vector<Perm> loaded(ops.size());
  int n = qubits;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (needs_size(ops[i])) continue;
    olsc_permutation* p = nullptr;
    if (looks_like_file(ops[i])) {
      check(olsc_permutation_parse(read_file(ops[i]).c_str(), &p), ops[i]);
    } else {
      check(olsc_permutation_builtin(ops[i].c_str(), 0, &p), ops[i]);
    }
    loaded[i].reset(p);
    const int q = olsc_permutation_qubits(p);
    if (n != 0 && n != q) {
      die(kExitUsage, ops[i] + " acts on " + std::to_string(q) + " qubits, expected " +
                          std::to_string(n));
    }
    n = q;
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (loaded[i]) continue;
    olsc_permutation* p = nullptr;
    check(olsc_permutation_builtin(ops[i].c_str(), n, &p), ops[i]);
    loaded[i].reset(p);
  }
  Perm result = std::move(loaded[0]);
  for (std::size_t i = 1; i < loaded.size(); ++i) {
    olsc_permutation* p = nullptr;
    check(olsc_permutation_compose(result.get(), loaded[i].get(), &p), "compose");
    result.reset(p);
  }
  return result;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

Topo make_topology(const std::string& kind, int n) {
  olsc_topology* t = nullptr;
  check(olsc_topology_new(kind == "hypercube" ? OLSC_TOPOLOGY_HYPERCUBE : OLSC_TOPOLOGY_CHAIN,
                          n, &t),
        "topology");
  return Topo(t);
}

std::uint32_t parse_label(const std::string& bits, int n) {
  if (bits.size() != static_cast<std::size_t>(n) ||
      bits.find_first_not_of("01") != std::string::npos) {
    die(kExitUsage, "bad label '" + bits + "' for " + std::to_string(n) + " qubits");
  }
  return static_cast<std::uint32_t>(std::stoul(bits, nullptr, 2));
}

struct SchemeOptions {
  std::string labeling = "ols";
  std::vector<std::string> swaps;
};

Scheme make_scheme(const olsc_topology* t, const olsc_permutation* p,
                   const std::string& topology, const SchemeOptions& opt) {
  const std::string& l = opt.labeling;
  if ((l == "gray" || l == "gray-reflected") && topology != "chain") {
    die(kExitUsage, "--labeling " + l + " needs --topology chain");
  }
  if (l == "pairswap" && topology != "hypercube") {
    die(kExitUsage, "--labeling pairswap needs --topology hypercube");
  }
  if (!opt.swaps.empty() && l != "pairswap") {
    die(kExitUsage, "--swap needs --labeling pairswap");
  }
  olsc_scheme* s = nullptr;
  if (!opt.swaps.empty()) {
    const int n = olsc_permutation_qubits(p);
    std::vector<std::uint32_t> flat;
    for (const std::string& sw : opt.swaps) {
      const auto colon = sw.find(':');
      if (colon == std::string::npos) die(kExitUsage, "--swap expects X:Y, got " + sw);
      flat.push_back(parse_label(sw.substr(0, colon), n));
      flat.push_back(parse_label(sw.substr(colon + 1), n));
    }
    check(olsc_scheme_pairswap_explicit(t, p, flat.data(), flat.size() / 2, &s), "labeling");
    return Scheme(s);
  }
  olsc_scheme_kind kind = OLSC_SCHEME_OLS;
  if (l == "cl") kind = OLSC_SCHEME_CONVENTIONAL;
  if (l == "gray") kind = OLSC_SCHEME_GRAY;
  if (l == "gray-reflected") kind = OLSC_SCHEME_GRAY_REFLECTED;
  if (l == "pairswap") kind = OLSC_SCHEME_PAIRSWAP;
  check(olsc_scheme_new(t, p, kind, &s), "labeling");
  return Scheme(s);
}

Seq synthesize(const olsc_permutation* p, const olsc_scheme* s, std::size_t depth_cap) {
  olsc_sequence* seq = nullptr;
  check(olsc_synthesize(p, s, depth_cap, &seq), "synthesis");
  return Seq(seq);
}

Seq schedule(const olsc_sequence* in) {
  olsc_sequence* out = nullptr;
  check(olsc_sequence_schedule(in, &out), "schedule");
  return Seq(out);
}

VerdictPtr verify(const olsc_sequence* seq, const olsc_permutation* p, const olsc_scheme* s) {
  olsc_verdict* v = nullptr;
  check(olsc_verify(seq, p, s, &v), "verify");
  return VerdictPtr(v);
}

const std::vector<std::string> kTopologies{"chain", "hypercube"};
const std::vector<std::string> kLabelings{"cl", "gray", "gray-reflected", "ols", "pairswap"};

struct Common {
  std::vector<std::string> ops;
  std::string topology = "chain";
  int qubits = 0;
};

void add_common(CLI::App* cmd, Common& c, bool ops_required) {
  auto* ops = cmd->add_option("operations", c.ops,
                              "Truth-table files or builtins (fulladder4, swap:i,j, "
                              "identity:N), composed left to right");
  if (ops_required) ops->required();
  cmd->add_option("-t,--topology", c.topology, "chain or hypercube")
      ->check(CLI::IsMember(kTopologies));
  cmd->add_option("-n,--qubits", c.qubits, "Qubit count for swap/identity builtins")
      ->check(CLI::Range(1, 10));
}

void add_scheme(CLI::App* cmd, SchemeOptions& s) {
  cmd->add_option("-l,--labeling", s.labeling, "cl, gray, gray-reflected, ols or pairswap")
      ->check(CLI::IsMember(kLabelings));
  cmd->add_option("--swap", s.swaps, "Label exchange X:Y applied to the conventional "
                                     "labeling (with --labeling pairswap)")
      ->allow_extra_args(false);
}

int cmd_compile(const Common& c, const SchemeOptions& so, std::size_t depth_cap,
                const std::string& out_prefix) {
  Perm p = load_operation(c.ops, c.qubits);
  const int n = olsc_permutation_qubits(p.get());
  Topo t = make_topology(c.topology, n);
  Scheme s = make_scheme(t.get(), p.get(), c.topology, so);
  Seq seq = synthesize(p.get(), s.get(), depth_cap);
  Seq sched = schedule(seq.get());
  VerdictPtr v = verify(sched.get(), p.get(), s.get());

  std::size_t min_pulses = 0;
  check(olsc_min_pulse_count(p.get(), &min_pulses), "analysis");
  char* buf = nullptr;
  check(olsc_count_optimal_labelings(p.get(), &buf), "analysis");
  const std::string optimal = take(buf);
  check(olsc_maximal_sets_format(p.get(), &buf), "analysis");
  const std::string sets = take(buf);
  check(olsc_scheme_format(s.get(), &buf), "labeling");
  const std::string labels = take(buf);
  check(olsc_sequence_format(sched.get(), &buf), "program");
  const std::string program = take(buf);

  std::ostringstream report;
  report << "operation: " << join(c.ops, " + ") << "\n"
         << "qubits: " << n << "\n"
         << "topology: " << c.topology << "\n"
         << "labeling: " << (so.swaps.empty() ? so.labeling : "pairswap-explicit") << "\n"
         << "provenance: " << olsc_scheme_provenance(s.get()) << "\n"
         << "maximal_sets: " << std::count(sets.begin(), sets.end(), '\n') << "\n"
         << "min_pulses: " << min_pulses << "\n"
         << "optimal_labelings: " << optimal << "\n"
         << "pulses: " << olsc_sequence_length(sched.get()) << "\n"
         << "rounds: " << olsc_sequence_rounds(sched.get()) << "\n"
         << "verify: " << (olsc_verdict_passed(v.get()) ? "PASS" : "FAIL") << "\n"
         << "\n## maximal sets\n" << sets
         << "\n## labeling\n" << labels
         << "\n## pulse program\n" << program;

  if (!out_prefix.empty()) {
    write_file(out_prefix + ".pulses", program);
    write_file(out_prefix + ".labels", labels);
    write_file(out_prefix + ".report", report.str());
  }
  std::cout << report.str();
  return olsc_verdict_passed(v.get()) ? kExitOk : kExitVerifyFail;
}

int cmd_compare(const Common& c, std::size_t depth_cap) {
  Perm p = load_operation(c.ops, c.qubits);
  const int n = olsc_permutation_qubits(p.get());
  Topo t = make_topology(c.topology, n);
  std::size_t min_pulses = 0;
  check(olsc_min_pulse_count(p.get(), &min_pulses), "analysis");

  std::vector<std::string> names{"ols", "cl"};
  if (c.topology == "chain") {
    names.push_back("gray");
    names.push_back("gray-reflected");
  }
  std::cout << "operation: " << join(c.ops, " + ") << "\n"
            << "qubits: " << n << "\n"
            << "topology: " << c.topology << "\n"
            << "min_pulses: " << min_pulses << "\n";
  std::ostringstream table;
  table << "\n# scheme  pulses  rounds  provenance\n";
  for (const std::string& name : names) {
    SchemeOptions so;
    so.labeling = name;
    Scheme s = make_scheme(t.get(), p.get(), c.topology, so);
    Seq seq = synthesize(p.get(), s.get(), depth_cap);
    Seq sched = schedule(seq.get());
    std::cout << name << ": " << olsc_sequence_length(seq.get()) << "\n";
    table << name << "  " << olsc_sequence_length(seq.get()) << "  "
          << olsc_sequence_rounds(sched.get()) << "  " << olsc_scheme_provenance(s.get())
          << "\n";
  }
  std::cout << table.str();
  return kExitOk;
}

int cmd_verify(const Common& c, const std::string& program_path,
               const std::string& labels_path) {
  Perm p = load_operation(c.ops, c.qubits);
  const int n = olsc_permutation_qubits(p.get());
  Topo t = make_topology(c.topology, n);
  olsc_scheme* s_raw = nullptr;
  check(olsc_scheme_parse(t.get(), p.get(), read_file(labels_path).c_str(), &s_raw),
        labels_path);
  Scheme s(s_raw);
  olsc_sequence* seq_raw = nullptr;
  check(olsc_sequence_parse(s.get(), read_file(program_path).c_str(), &seq_raw),
        program_path);
  Seq seq(seq_raw);
  VerdictPtr v = verify(seq.get(), p.get(), s.get());
  char* buf = nullptr;
  check(olsc_verdict_format(v.get(), &buf), "verify");
  std::cout << "pulses: " << olsc_sequence_length(seq.get()) << "\n" << take(buf);
  return olsc_verdict_passed(v.get()) ? kExitOk : kExitVerifyFail;
}

int cmd_spectrum(const Common& c, const SchemeOptions& so, bool ascii) {
  Perm p;
  int n = c.qubits;
  if (!c.ops.empty()) {
    p = load_operation(c.ops, c.qubits);
    n = olsc_permutation_qubits(p.get());
  }
  if (n == 0) die(kExitUsage, "spectrum needs an operation or --qubits");
  Topo t = make_topology(c.topology, n);
  Perm identity;
  if (!p) {
    olsc_permutation* raw = nullptr;
    check(olsc_permutation_builtin("identity", n, &raw), "identity");
    identity.reset(raw);
  }
  Scheme s = make_scheme(t.get(), p ? p.get() : identity.get(), c.topology, so);
  char* buf = nullptr;
  check(olsc_scheme_format(s.get(), &buf), "labeling");
  std::cout << "topology: " << c.topology << "\n"
            << "provenance: " << olsc_scheme_provenance(s.get()) << "\n"
            << "\n## labeling\n" << take(buf);
  check(olsc_spectrum_format(s.get(), nullptr, ascii ? 1 : 0, &buf), "spectrum");
  std::cout << "\n## equilibrium\n" << take(buf);
  if (p) {
    check(olsc_spectrum_format(s.get(), p.get(), ascii ? 1 : 0, &buf), "spectrum");
    std::cout << "\n## final\n" << take(buf);
  }
  return kExitOk;
}

int cmd_enumerate(const Common& c, std::uint64_t limit, bool count_only) {
  if (c.topology != "chain") die(kExitUsage, "enumerate needs --topology chain");
  Perm p = load_operation(c.ops, c.qubits);
  const int n = olsc_permutation_qubits(p.get());
  Topo t = make_topology(c.topology, n);
  olsc_enumerator* raw = nullptr;
  check(olsc_enumerator_new(t.get(), p.get(), &raw), "enumerate");
  Enum e(raw);
  char* buf = nullptr;
  check(olsc_count_optimal_labelings(p.get(), &buf), "analysis");
  std::cout << "expected: " << take(buf) << "\n";
  std::uint64_t count = 0;
  while (limit == 0 || count < limit) {
    olsc_scheme* s = nullptr;
    const olsc_status st = olsc_enumerator_next(e.get(), &s);
    if (st == OLSC_DONE) break;
    check(st, "enumerate");
    Scheme scheme(s);
    ++count;
    if (count_only) continue;
    check(olsc_scheme_format(scheme.get(), &buf), "labeling");
    // One line per scheme: labels in level order.
    std::istringstream rows(take(buf));
    std::string row;
    std::vector<std::string> labels;
    while (std::getline(rows, row)) {
      if (row.empty() || row[0] == '#') continue;
      labels.push_back(row.substr(row.find_last_of(' ') + 1));
    }
    std::cout << count << "  " << join(labels, " ") << "\n";
  }
  std::cout << "count: " << count << "\n";
  return kExitOk;
}

// Random round trips: compile, then verify, on both topologies.
int cmd_check(std::uint64_t seed, int count, int max_qubits) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int i = 0; i < count; ++i) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_qubits - 1));
    std::vector<std::uint32_t> map(std::size_t{1} << n);
    std::iota(map.begin(), map.end(), 0u);
    std::shuffle(map.begin(), map.end(), rng);
    olsc_permutation* raw = nullptr;
    check(olsc_permutation_from_map(n, map.data(), map.size(), &raw), "random table");
    Perm p(raw);
    std::size_t min_pulses = 0;
    check(olsc_min_pulse_count(p.get(), &min_pulses), "analysis");
    for (const std::string& topo : kTopologies) {
      Topo t = make_topology(topo, n);
      for (const char* labeling : {"ols", "cl"}) {
        SchemeOptions so;
        so.labeling = labeling;
        Scheme s = make_scheme(t.get(), p.get(), topo, so);
        Seq seq = synthesize(p.get(), s.get(), 0);
        VerdictPtr v = verify(seq.get(), p.get(), s.get());
        const bool length_ok = std::string(labeling) != "ols" ||
                               olsc_sequence_length(seq.get()) == min_pulses;
        if (!olsc_verdict_passed(v.get()) || !length_ok) {
          ++failures;
          std::cout << "FAIL table " << i << " " << topo << " " << labeling << "\n";
        }
      }
    }
  }
  std::cout << "checked: " << count << "\nfailures: " << failures << "\n";
  return failures == 0 ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"olsc: compile reversible truth tables to transition-selective pulse "
               "sequences"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(olsc_version()));

  Common common;
  SchemeOptions scheme;
  std::size_t depth_cap = 0;
  std::string out_prefix;
  std::string program_path;
  std::string labels_path;
  bool ascii = false;
  std::uint64_t limit = 10;
  bool count_only = false;
  std::uint64_t seed = 1;
  int count = 100;
  int max_qubits = 3;

  auto* compile = app.add_subcommand("compile", "Synthesize a pulse program");
  add_common(compile, common, true);
  add_scheme(compile, scheme);
  compile->add_option("--depth-cap", depth_cap, "Longest routed sequence to accept");
  compile->add_option("-o,--out", out_prefix,
                      "Write PREFIX.pulses, PREFIX.labels and PREFIX.report");

  auto* compare = app.add_subcommand("compare", "Pulse counts per labeling scheme");
  add_common(compare, common, true);
  compare->add_option("--depth-cap", depth_cap, "Longest routed sequence to accept");

  auto* verify_cmd = app.add_subcommand("verify", "Check a pulse program by simulation");
  add_common(verify_cmd, common, true);
  verify_cmd->add_option("--program", program_path, "Pulse program file")->required();
  verify_cmd->add_option("--labels", labels_path, "Labeling table file")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Equilibrium and final stick spectra");
  add_common(spectrum, common, false);
  add_scheme(spectrum, scheme);
  spectrum->add_flag("--ascii", ascii, "Append a stick plot");

  auto* enumerate = app.add_subcommand("enumerate", "List optimal chain labelings");
  add_common(enumerate, common, true);
  enumerate->add_option("--limit", limit, "Stop after this many (0 = all)");
  enumerate->add_flag("--count", count_only, "Print only the total");

  auto* check_cmd = app.add_subcommand("check", "Random compile/verify round trips");
  check_cmd->add_option("--seed", seed, "Random seed");
  check_cmd->add_option("--count", count, "Number of random tables")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--max-qubits", max_qubits, "Largest table size")
      ->check(CLI::Range(2, 4));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compile) return cmd_compile(common, scheme, depth_cap, out_prefix);
    if (*compare) return cmd_compare(common, depth_cap);
    if (*verify_cmd) return cmd_verify(common, program_path, labels_path);
    if (*spectrum) return cmd_spectrum(common, scheme, ascii);
    if (*enumerate) return cmd_enumerate(common, limit, count_only);
    if (*check_cmd) return cmd_check(seed, count, max_qubits);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitUsage;
}
