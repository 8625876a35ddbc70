#include "polyak/cache.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "polyak/diagram.hpp"

namespace polyak {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string fingerprint(const Json& j) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(j.dump())));
  return buf;
}

Cache::Cache(std::filesystem::path root, std::string version)
    : root_(std::move(root)), version_(std::move(version)), enabled_(!root_.empty()) {}

std::filesystem::path Cache::path_for(std::string_view kind, Skeleton skeleton, int n) const {
  return root_ / version_ / std::string(kind) / std::string(to_string(skeleton)) / (std::to_string(n) + ".json");
}

std::optional<Json> Cache::get(std::string_view kind, Skeleton skeleton, int n) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!enabled_) return std::nullopt;
  std::ifstream in(path_for(kind, skeleton, n), std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  Json env = Json::parse(ss.str(), nullptr, false);
  if (env.is_discarded() || !env.is_object() || !env.contains("payload") || !env.contains("checksum")) return std::nullopt;
  if (env.value("version", "") != version_) return std::nullopt;
  if (env["checksum"] != fingerprint(env["payload"])) return std::nullopt;
  return env["payload"];
}

void Cache::put(std::string_view kind, Skeleton skeleton, int n, const Json& payload) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!enabled_) return;
  const auto path = path_for(kind, skeleton, n);
  Json env = Json::object();
  env["version"] = version_;
  env["kind"] = std::string(kind);
  env["skeleton"] = std::string(to_string(skeleton));
  env["order"] = n;
  env["checksum"] = fingerprint(payload);
  env["payload"] = payload;
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  auto tmp = path;
  tmp += ".tmp";
  bool ok = !ec;
  if (ok) {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << env.dump();
    ok = static_cast<bool>(out);
  }
  if (ok) {
    std::filesystem::rename(tmp, path, ec);
    ok = !ec;
  }
  if (!ok) {
    std::filesystem::remove(tmp, ec);
    std::cerr << "warning: cache directory " << root_.string() << " is not writable; continuing without cache\n";
    enabled_ = false;
  }
}

}  // namespace polyak
