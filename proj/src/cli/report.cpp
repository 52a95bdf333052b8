#include "fatpoints/cli/report.hpp"

#include "fatpoints/errors.hpp"

namespace fatpoints::cli {

std::vector<std::uint64_t> RunConfig::effective_seeds() const {
  if (trials < 1) throw ConfigError("--trials must be >= 1");
  if (seeds.empty()) throw ConfigError("at least one seed is required");
  std::vector<std::uint64_t> out(seeds.begin(), seeds.begin() + std::min<std::size_t>(seeds.size(), trials));
  while (out.size() < static_cast<std::size_t>(trials)) out.push_back(out.back() + 0x9e3779b97f4a7c15ULL);
  return out;
}

MonteCarlo RunConfig::monte_carlo() const {
  MonteCarlo mc{PrimeField(prime), effective_seeds()};
  return mc;
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["prime"] = prime;
  j["seeds"] = effective_seeds();
  j["trials"] = trials;
  j["max_degree"] = max_degree ? nlohmann::json(*max_degree) : nlohmann::json(nullptr);
  j["jet_degree"] = jet_degree;
  j["format"] = format == Format::json ? "json" : "text";
  return j;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["config"] = config;
  j["status"] = status;
  if (!error.empty()) j["error"] = error;
  j["results"] = results;
  j["citations"] = citations;
  j["warnings"] = warnings;
  return j;
}

namespace {

void write_text(std::ostream& out, const nlohmann::json& v, const std::string& prefix) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      write_text(out, it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
    }
  } else if (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array())) {
    for (std::size_t i = 0; i < v.size(); ++i) write_text(out, v[i], prefix + "[" + std::to_string(i) + "]");
  } else {
    out << prefix << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace

void Report::write(std::ostream& out, Format format) const {
  if (format == Format::json) {
    out << to_json().dump(2) << "\n";
    return;
  }
  out << "command: " << command << "\n";
  out << "status: " << status << "\n";
  if (!error.empty()) out << "error: " << error << "\n";
  write_text(out, results, "");
  for (const auto& c : citations) out << "citation: " << c << "\n";
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  out << "seeds: " << config.value("seeds", nlohmann::json::array()).dump() << "  prime: "
      << config.value("prime", nlohmann::json(0)).dump() << "\n";
}

}  // namespace fatpoints::cli
