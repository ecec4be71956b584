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

#include "olsc/olsc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "olsc/error.hpp"
#include "olsc/formats.hpp"
#include "olsc/labeler.hpp"
#include "olsc/permutation.hpp"
#include "olsc/simulator.hpp"
#include "olsc/synthesizer.hpp"
#include "olsc/topology.hpp"

struct olsc_permutation {
  olsc::Permutation value;
};

struct olsc_topology {
  olsc::Topology value;
};

struct olsc_scheme {
  olsc::Topology topology;
  olsc::LabelingScheme value;
};

struct olsc_sequence {
  olsc::Topology topology;
  olsc::PulseSequence value;
};

struct olsc_verdict {
  olsc::Verdict value;
  olsc::Labeling labeling;
};

struct olsc_enumerator {
  olsc::Topology topology;
  olsc::OlsEnumerator value;
};

namespace {

thread_local std::string g_error;
thread_local std::size_t g_error_line = 0;

olsc_status fail(olsc_status status, const std::string& message, std::size_t line = 0) {
  g_error = message;
  g_error_line = line;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
olsc_status guarded(F&& body) {
  g_error.clear();
  g_error_line = 0;
  try {
    return body();
  } catch (const olsc::ParseError& e) {
    return fail(OLSC_ERR_PARSE, e.what(), e.line());
  } catch (const olsc::SynthesisError& e) {
    return fail(OLSC_ERR_SYNTHESIS, e.what());
  } catch (const olsc::UnrepairableChain& e) {
    return fail(OLSC_ERR_UNREPAIRABLE, e.what());
  } catch (const std::out_of_range& e) {
    return fail(OLSC_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(OLSC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(OLSC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(OLSC_ERR_INTERNAL, e.what());
  }
}

olsc_status null_argument() {
  return fail(OLSC_ERR_INVALID_ARGUMENT, "null argument");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

olsc::MaximalSetDecomposition decomposition_for(const olsc_topology* t,
                                                const olsc_permutation* p) {
  if (p == nullptr) {
    return olsc::maximal_sets(olsc::Permutation::identity(t->value.n_qubits()));
  }
  if (p->value.n_qubits() != t->value.n_qubits()) {
    throw std::invalid_argument("operation acts on " +
                                std::to_string(p->value.n_qubits()) +
                                " qubits but the topology has " +
                                std::to_string(t->value.n_qubits()));
  }
  return olsc::maximal_sets(p->value);
}

}  // namespace

extern "C" {

const char* olsc_version(void) { return "1.0.0"; }

const char* olsc_last_error(void) { return g_error.c_str(); }

size_t olsc_last_error_line(void) { return g_error_line; }

void olsc_string_free(char* s) { std::free(s); }

olsc_status olsc_permutation_parse(const char* text, olsc_permutation** out) {
  if (text == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new olsc_permutation{olsc::parse_truth_table(text)};
    return OLSC_OK;
  });
}

olsc_status olsc_permutation_builtin(const char* name, int n_qubits,
                                     olsc_permutation** out) {
  if (name == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new olsc_permutation{olsc::builtin_operation(name, n_qubits)};
    return OLSC_OK;
  });
}

olsc_status olsc_permutation_from_map(int n_qubits, const uint32_t* map, size_t len,
                                      olsc_permutation** out) {
  if (map == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new olsc_permutation{
        olsc::Permutation::from_map(n_qubits, std::vector<olsc::State>(map, map + len))};
    return OLSC_OK;
  });
}

olsc_status olsc_permutation_compose(const olsc_permutation* first,
                                     const olsc_permutation* second,
                                     olsc_permutation** out) {
  if (first == nullptr || second == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new olsc_permutation{olsc::compose(first->value, second->value)};
    return OLSC_OK;
  });
}

olsc_status olsc_permutation_apply(const olsc_permutation* p, uint32_t state,
                                   uint32_t* out) {
  if (p == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = p->value(state);
    return OLSC_OK;
  });
}

int olsc_permutation_qubits(const olsc_permutation* p) {
  return p == nullptr ? 0 : p->value.n_qubits();
}

olsc_status olsc_permutation_format(const olsc_permutation* p, char** out) {
  if (p == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = copy_string(olsc::format_truth_table(p->value));
    return OLSC_OK;
  });
}

void olsc_permutation_free(olsc_permutation* p) { delete p; }

olsc_status olsc_maximal_sets_format(const olsc_permutation* p, char** out) {
  if (p == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = copy_string(olsc::format_decomposition(olsc::maximal_sets(p->value)));
    return OLSC_OK;
  });
}

olsc_status olsc_min_pulse_count(const olsc_permutation* p, size_t* out) {
  if (p == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = olsc::min_pulse_count(olsc::maximal_sets(p->value));
    return OLSC_OK;
  });
}

olsc_status olsc_count_optimal_labelings(const olsc_permutation* p, char** out) {
  if (p == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = copy_string(
        olsc::count_optimal_labelings(olsc::maximal_sets(p->value)).str());
    return OLSC_OK;
  });
}

olsc_status olsc_topology_new(olsc_topology_kind kind, int n_qubits,
                              olsc_topology** out) {
  if (out == nullptr) return null_argument();
  return guarded([&] {
    olsc::TopologyKind k;
    switch (kind) {
      case OLSC_TOPOLOGY_CHAIN:
        k = olsc::TopologyKind::kQuadrupolarChain;
        break;
      case OLSC_TOPOLOGY_HYPERCUBE:
        k = olsc::TopologyKind::kSpinHalfHypercube;
        break;
      default:
        return fail(OLSC_ERR_INVALID_ARGUMENT, "unknown topology kind");
    }
    *out = new olsc_topology{olsc::Topology::build(k, n_qubits)};
    return OLSC_OK;
  });
}

size_t olsc_topology_edge_count(const olsc_topology* t) {
  return t == nullptr ? 0 : t->value.edges().size();
}

olsc_status olsc_topology_distance(const olsc_topology* t, uint32_t a, uint32_t b,
                                   int* out) {
  if (t == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = olsc::single_quantum_distance(t->value, a, b);
    return OLSC_OK;
  });
}

void olsc_topology_free(olsc_topology* t) { delete t; }

olsc_status olsc_scheme_new(const olsc_topology* t, const olsc_permutation* p,
                            olsc_scheme_kind kind, olsc_scheme** out) {
  if (t == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const auto& topo = t->value;
    const bool chain = topo.kind() == olsc::TopologyKind::kQuadrupolarChain;
    switch (kind) {
      case OLSC_SCHEME_CONVENTIONAL:
        *out = new olsc_scheme{topo, olsc::conventional_scheme(topo)};
        return OLSC_OK;
      case OLSC_SCHEME_GRAY:
      case OLSC_SCHEME_GRAY_REFLECTED:
        if (!chain) {
          return fail(OLSC_ERR_INVALID_ARGUMENT,
                      "Gray labeling is only defined for the quadrupolar chain");
        }
        *out = new olsc_scheme{
            topo, olsc::gray_scheme(topo, kind == OLSC_SCHEME_GRAY
                                              ? olsc::GrayCode::kTabulated
                                              : olsc::GrayCode::kReflected)};
        return OLSC_OK;
      case OLSC_SCHEME_OLS:
        *out = new olsc_scheme{topo, olsc::ols_scheme(decomposition_for(t, p), topo)};
        return OLSC_OK;
      case OLSC_SCHEME_PAIRSWAP:
        if (chain) {
          return fail(OLSC_ERR_INVALID_ARGUMENT,
                      "pair-swap relabeling is only defined for the hypercube");
        }
        *out = new olsc_scheme{
            topo, olsc::relabel_pairswap_spin_half(decomposition_for(t, p), topo)};
        return OLSC_OK;
    }
    return fail(OLSC_ERR_INVALID_ARGUMENT, "unknown scheme kind");
  });
}

olsc_status olsc_scheme_pairswap_explicit(const olsc_topology* t,
                                          const olsc_permutation* p,
                                          const uint32_t* swaps, size_t n_pairs,
                                          olsc_scheme** out) {
  if (t == nullptr || out == nullptr || (swaps == nullptr && n_pairs > 0)) {
    return null_argument();
  }
  return guarded([&] {
    std::vector<std::pair<olsc::State, olsc::State>> pairs;
    for (size_t i = 0; i < n_pairs; ++i) pairs.emplace_back(swaps[2 * i], swaps[2 * i + 1]);
    *out = new olsc_scheme{
        t->value, olsc::scheme_from_pair_swaps(t->value, pairs, decomposition_for(t, p))};
    return OLSC_OK;
  });
}

olsc_status olsc_scheme_parse(const olsc_topology* t, const olsc_permutation* p,
                              const char* text, olsc_scheme** out) {
  if (t == nullptr || text == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const auto& topo = t->value;
    olsc::Labeling labeling = olsc::parse_labeling_table(text);
    if (labeling.n_qubits() != topo.n_qubits()) {
      return fail(OLSC_ERR_INVALID_ARGUMENT, "labeling table size does not match");
    }
    olsc::Provenance provenance = olsc::Provenance::kRelabeledPairSwap;
    std::vector<olsc::SetPlacement> placements;
    if (labeling == olsc::conventional_labeling(topo)) {
      provenance = olsc::Provenance::kConventional;
    } else if (topo.kind() == olsc::TopologyKind::kQuadrupolarChain &&
               labeling == olsc::gray_labeling(topo)) {
      provenance = olsc::Provenance::kGray;
    } else if (auto placed = olsc::path_placements(decomposition_for(t, p), labeling, topo)) {
      provenance = olsc::Provenance::kOls;
      placements = std::move(*placed);
    }
    *out = new olsc_scheme{topo, {std::move(labeling), provenance, std::move(placements)}};
    return OLSC_OK;
  });
}

olsc_status olsc_scheme_format(const olsc_scheme* s, char** out) {
  if (s == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = copy_string(olsc::format_labeling_table(s->value.labeling, s->topology));
    return OLSC_OK;
  });
}

const char* olsc_scheme_provenance(const olsc_scheme* s) {
  return s == nullptr ? "" : olsc::provenance_name(s->value.provenance);
}

void olsc_scheme_free(olsc_scheme* s) { delete s; }

olsc_status olsc_synthesize(const olsc_permutation* p, const olsc_scheme* s,
                            size_t depth_cap, olsc_sequence** out) {
  if (p == nullptr || s == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    olsc::SearchLimits limits;
    if (depth_cap > 0) limits.depth_cap = depth_cap;
    *out = new olsc_sequence{s->topology,
                             olsc::synthesize(p->value, s->value, s->topology, limits)};
    return OLSC_OK;
  });
}

olsc_status olsc_sequence_schedule(const olsc_sequence* in, olsc_sequence** out) {
  if (in == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new olsc_sequence{in->topology, olsc::schedule_rounds(in->value)};
    return OLSC_OK;
  });
}

olsc_status olsc_sequence_parse(const olsc_scheme* s, const char* text,
                                olsc_sequence** out) {
  if (s == nullptr || text == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new olsc_sequence{
        s->topology, olsc::parse_pulse_program(text, s->topology, s->value.labeling)};
    return OLSC_OK;
  });
}

olsc_status olsc_sequence_format(const olsc_sequence* seq, char** out) {
  if (seq == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = copy_string(olsc::format_pulse_program(seq->value, seq->topology.n_qubits()));
    return OLSC_OK;
  });
}

size_t olsc_sequence_length(const olsc_sequence* seq) {
  return seq == nullptr ? 0 : seq->value.size();
}

size_t olsc_sequence_rounds(const olsc_sequence* seq) {
  return seq == nullptr ? 0 : seq->value.round_count();
}

void olsc_sequence_free(olsc_sequence* seq) { delete seq; }

olsc_status olsc_verify(const olsc_sequence* seq, const olsc_permutation* p,
                        const olsc_scheme* s, olsc_verdict** out) {
  if (seq == nullptr || p == nullptr || s == nullptr || out == nullptr) {
    return null_argument();
  }
  return guarded([&] {
    if (p->value.n_qubits() != s->topology.n_qubits()) {
      return fail(OLSC_ERR_INVALID_ARGUMENT, "operation and labeling sizes differ");
    }
    const auto u = olsc::sequence_unitary(seq->value, p->value.size());
    *out = new olsc_verdict{olsc::verify_permutation(u, p->value, s->value.labeling),
                            s->value.labeling};
    return OLSC_OK;
  });
}

int olsc_verdict_passed(const olsc_verdict* v) {
  return v != nullptr && v->value.pass ? 1 : 0;
}

olsc_status olsc_verdict_format(const olsc_verdict* v, char** out) {
  if (v == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = copy_string(olsc::format_verdict(v->value, v->labeling));
    return OLSC_OK;
  });
}

void olsc_verdict_free(olsc_verdict* v) { delete v; }

olsc_status olsc_spectrum_format(const olsc_scheme* s, const olsc_permutation* p,
                                 int ascii, char** out) {
  if (s == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    auto pop = olsc::equilibrium_populations(s->topology);
    if (p != nullptr) {
      if (p->value.n_qubits() != s->topology.n_qubits()) {
        return fail(OLSC_ERR_INVALID_ARGUMENT, "operation and labeling sizes differ");
      }
      pop = olsc::final_populations(pop, p->value, s->value.labeling);
    }
    const auto sticks = olsc::stick_spectrum(pop, s->topology);
    std::string text = olsc::format_spectrum(sticks);
    if (ascii != 0) text += olsc::render_sticks(sticks);
    *out = copy_string(text);
    return OLSC_OK;
  });
}

olsc_status olsc_enumerator_new(const olsc_topology* t, const olsc_permutation* p,
                                olsc_enumerator** out) {
  if (t == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new olsc_enumerator{t->value,
                               olsc::OlsEnumerator(decomposition_for(t, p), t->value)};
    return OLSC_OK;
  });
}

olsc_status olsc_enumerator_next(olsc_enumerator* e, olsc_scheme** out) {
  if (e == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    auto next = e->value.next();
    if (!next) {
      *out = nullptr;
      return OLSC_DONE;
    }
    *out = new olsc_scheme{e->topology, std::move(*next)};
    return OLSC_OK;
  });
}

void olsc_enumerator_free(olsc_enumerator* e) { delete e; }

}  // extern "C"
