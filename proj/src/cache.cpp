#include "instanton/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace instanton {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::string ResultCache::key(std::string_view command, std::string_view canonical_inputs) {
  std::string material = "schema=" + std::to_string(kSchemaVersion) + "\ncommand=";
  material += command;
  material += "\ninputs=";
  material += canonical_inputs;
  return sha256_hex(material);
}

std::optional<InvariantRecord> ResultCache::lookup(const std::string& key, std::ostream& warn) const {
  const auto path = path_for(key);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  try {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open");
    return record_from_json(nlohmann::json::parse(in));
  } catch (const std::exception& e) {
    warn << "warning: ignoring unreadable cache entry " << path.string() << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

void ResultCache::store(const std::string& key, const InvariantRecord& record, std::ostream& warn) const {
  static std::atomic<unsigned> counter{0};
  const auto path = path_for(key);
  const auto tmp = dir_ / (key + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++));
  try {
    std::filesystem::create_directories(dir_);
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << to_json(record).dump() << "\n";
      if (!out.flush()) throw std::runtime_error("write failed");
    }
    std::filesystem::rename(tmp, path);
  } catch (const std::exception& e) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    warn << "warning: could not write cache entry " << path.string() << ": " << e.what() << "\n";
  }
}

}  // namespace instanton
