#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monohs/graph.hpp"
#include "monohs/oracle.hpp"

namespace monohs {

struct AcceptanceConfig {
  // Corpus.
  bool canonical = true;
  std::size_t all_connected_max_n = 6;
  std::size_t gnp_count = 50;
  std::size_t gnp_min_n = 4;
  std::size_t gnp_max_n = 10;
  double gnp_p_min = 0.2;
  double gnp_p_max = 0.7;
  std::uint64_t seed = 20240601;
  std::vector<Graph> extra_graphs;

  oracle::Budget budget;

  // Per-criterion workloads.
  std::size_t separation_pairs = 200;
  std::size_t erm_exhaustive_max_n = 7;
  std::size_t erm_random_samples = 200;
  std::size_t compression_exhaustive_max_n = 7;
  std::size_t compression_random_samples = 500;
  std::size_t winnow_streams = 20;
  std::size_t winnow_stream_min_length = 40;
  std::size_t hull_exhaustive_max_n = 8;
  std::size_t hull_random_subsets = 1000;

  // Time limits in seconds.
  double enumeration_time_limit = 300.0;

  // Scale smoke test.
  bool run_scale = true;
  std::size_t scale_n = 200;
  double scale_p = 0.05;
  std::uint64_t scale_seed = 1;
  double scale_time_limit = 60.0;
  std::size_t scale_memory_limit_mb = 1024;

  // Criteria to run (1..12); empty runs all.
  std::vector<int> criteria;
  // Drops one halfspace from the brute-force family of the first corpus
  // graph so that the comparison criteria must fail.
  bool plant_failure = false;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceReport {
  std::size_t corpus_size = 0;
  std::vector<CriterionResult> results;
  bool all_pass() const;
};

std::vector<Graph> acceptance_corpus(const AcceptanceConfig& cfg);

// Throws BadInput on an empty corpus.
AcceptanceReport run_acceptance(const AcceptanceConfig& cfg);

// "PASS  3 phi-equivalence: ..." style line.
std::string format_result(const CriterionResult& r);

}  // namespace monohs
