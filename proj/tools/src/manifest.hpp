#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "serialization.hpp"

namespace freeclt::cli {

/// Reproducibility record written alongside every run.
class RunManifest {
 public:
  explicit RunManifest(std::vector<std::string> argv);

  /// Records the SHA-256 of an input file's bytes.
  void add_input(const std::string& path, const std::string& contents);
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void set_exit_code(int code) { exit_code_ = code; }

  /// Wall time is measured from construction to this call.
  Json finish() const;

 private:
  std::vector<std::string> argv_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::optional<std::uint64_t> seed_;
  int exit_code_ = 0;
  std::chrono::steady_clock::time_point start_;
};

std::string sha256_hex(const std::string& bytes);

}  // namespace freeclt::cli
