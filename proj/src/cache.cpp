#include <klbm/cache.hpp>
#include <klbm/json_io.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace klbm::cache {

using nlohmann::json;

bool KLCache::Key::operator<(const Key& o) const {
  return std::tie(type, mu, family, kind, x, y) <
         std::tie(o.type, o.mu, o.family, o.kind, o.x, o.y);
}

std::string KLCache::default_path() {
  const char* p = std::getenv("KLBM_CACHE");
  return p ? std::string(p) : std::string();
}

KLCache::KLCache(std::string path) : path_(std::move(path)) {
  if (path_.empty()) return;
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  bool first = true;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error&) {
      // crash-safe appends: a torn final line is dropped with a warning
      std::cerr << "klbm: cache " << path_ << ": ignoring partial line " << lineno << "\n";
      break;
    }
    if (first) {
      first = false;
      if (!j.contains("schema") || j["schema"].get<int>() != schema_version)
        throw InvalidInput("cache: unsupported schema version in " + path_);
      continue;
    }
    Key k{j.at("type"), j.at("mu"), j.at("family"), j.at("kind"), j.at("x"), j.at("y")};
    entries_[k] = io::poly_from_json(j);
  }
}

std::optional<IntLaurentPoly> KLCache::lookup(const Key& k) const {
  auto it = entries_.find(k);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void KLCache::store(const Key& k, const IntLaurentPoly& p) {
  if (entries_.count(k)) return;
  entries_[k] = p;
  if (!path_.empty()) append_line(k, p);
}

void KLCache::append_line(const Key& k, const IntLaurentPoly& p) const {
  bool fresh = false;
  {
    std::ifstream probe(path_);
    fresh = !probe.good();
  }
  std::ofstream out(path_, std::ios::app);
  if (!out) {
    std::cerr << "klbm: cache " << path_ << ": cannot append\n";
    return;
  }
  if (fresh) {
    json header{{"schema", schema_version},
                {"kind", "klbm-kl-cache"},
                {"convention", hecke::KLTable::convention_descriptor()}};
    out << header.dump() << "\n";
  }
  json j = io::poly_to_json(p);
  j["type"] = k.type;
  j["mu"] = k.mu;
  j["family"] = k.family;
  j["kind"] = k.kind;
  j["x"] = k.x;
  j["y"] = k.y;
  out << j.dump() << "\n";
}

}  // namespace klbm::cache
