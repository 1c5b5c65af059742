#include "manifest.hpp"

#include <openssl/evp.h>

#include <cstdio>

namespace freeclt::cli {

RunManifest::RunManifest(std::vector<std::string> argv)
    : argv_(std::move(argv)), start_(std::chrono::steady_clock::now()) {}

void RunManifest::add_input(const std::string& path, const std::string& contents) {
  inputs_.emplace_back(path, sha256_hex(contents));
}

Json RunManifest::finish() const {
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  Json inputs = Json::array();
  for (const auto& [path, digest] : inputs_) inputs.push_back(Json{{"path", path}, {"sha256", digest}});
  Json out = Json::object();
  out["tool"] = "freeclt";
  out["version"] = FREECLT_VERSION;
  out["command_line"] = argv_;
  out["inputs"] = std::move(inputs);
  out["seed"] = seed_ ? Json(*seed_) : Json(nullptr);
  out["exit_code"] = exit_code_;
  out["wall_time_seconds"] = wall;
  return out;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  std::string hex;
  hex.reserve(2 * length);
  char buf[3];
  for (unsigned int i = 0; i < length; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace freeclt::cli
