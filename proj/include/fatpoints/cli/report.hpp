#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "fatpoints/linsys.hpp"

namespace fatpoints::cli {

enum class Format { json, text };

struct RunConfig {
  std::uint64_t prime = kMersenne61;
  std::vector<std::uint64_t> seeds = kDefaultSeeds;
  int trials = 3;
  std::optional<int> max_degree;
  int jet_degree = 2;
  Format format = Format::json;

  /// Seeds actually used: the first `trials` seeds, extended by a fixed
  /// stride when fewer were given. Throws ConfigError on a bad prime or trials < 1.
  std::vector<std::uint64_t> effective_seeds() const;
  MonteCarlo monte_carlo() const;
  nlohmann::json to_json() const;
};

inline constexpr const char* kSchemaVersion = "1";

struct Report {
  std::string command;
  nlohmann::json config;
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> citations;
  std::vector<std::string> warnings;
  std::string status = "ok";  // ok | check-failure | error
  std::string error;
  int exit_code = 0;

  nlohmann::json to_json() const;
  void write(std::ostream& out, Format format) const;
};

}  // namespace fatpoints::cli
