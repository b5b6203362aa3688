#pragma once

// Uniform result record for every verification campaign.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace agc {

struct Failure {
  std::string element;
  int index = -1;
  std::string lhs, rhs;
};

struct Report {
  std::string check;
  std::string type;
  int rank = 0;
  std::string mode;  // "symbolic" or "sampled"
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;
  bool pass = true;
  std::vector<Failure> failures;

  static constexpr std::size_t kMaxStored = 100;

  void fail(const std::string& element, int index, const std::string& lhs,
            const std::string& rhs) {
    pass = false;
    if (failures.size() < kMaxStored) failures.push_back({element, index, lhs, rhs});
  }

  void absorb(const Report& r) {
    sample_size += r.sample_size;
    if (!r.pass) pass = false;
    for (const auto& f : r.failures)
      if (failures.size() < kMaxStored) failures.push_back(f);
  }

  nlohmann::json to_json() const {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : failures)
      fs.push_back({{"element", f.element},
                    {"index", f.index},
                    {"lhs", f.lhs},
                    {"rhs", f.rhs}});
    return {{"check", check},     {"type", type}, {"rank", rank},
            {"mode", mode},       {"sample_size", sample_size},
            {"seed", seed},       {"pass", pass}, {"failures", fs}};
  }
};

}  // namespace agc
