#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "polyak/certificate.hpp"
#include "polyak/diagram.hpp"

namespace polyak {

std::uint64_t fnv1a(std::string_view bytes);
// 16 hex digits of fnv1a over the compact dump of j.
std::string fingerprint(const Json& j);

// On-disk store at <root>/<version>/<kind>/<skeleton>/<n>.json. Each file is an
// envelope carrying the payload checksum; a bad checksum, unreadable file or
// version mismatch counts as a miss. A default-constructed cache is disabled.
class Cache {
 public:
  Cache() = default;
  Cache(std::filesystem::path root, std::string version);

  bool enabled() const { return enabled_; }
  std::filesystem::path path_for(std::string_view kind, Skeleton skeleton, int n) const;

  std::optional<Json> get(std::string_view kind, Skeleton skeleton, int n) const;
  // Write failures print one warning and disable the cache.
  void put(std::string_view kind, Skeleton skeleton, int n, const Json& payload);

 private:
  std::filesystem::path root_;
  std::string version_;
  bool enabled_ = false;
  mutable std::mutex mutex_;
};

}  // namespace polyak
