#pragma once

#include <klbm/hecke.hpp>

#include <map>
#include <optional>
#include <string>

namespace klbm::cache {

// Append-only JSON-lines cache of computed KL polynomials.  First line is a
// versioned header; a trailing partial line (crash during append) is ignored
// with a warning.  Re-reading a cache never changes a computed value: entries
// are pure memos, revalidated against a fresh computation in paranoid mode.
class KLCache {
 public:
  struct Key {
    std::string type;    // "A2~"
    std::string mu;      // "1,2"
    std::string family;  // "q" or "-1"
    std::string kind;    // "P" or "Q"
    std::string x, y;    // canonical words, comma-separated
    bool operator<(const Key& o) const;
  };

  static constexpr int schema_version = 1;

  // loads the file when it exists; empty path disables persistence
  explicit KLCache(std::string path);

  std::optional<IntLaurentPoly> lookup(const Key& k) const;
  // stores and appends to the backing file
  void store(const Key& k, const IntLaurentPoly& p);

  size_t size() const { return entries_.size(); }
  const std::string& path() const { return path_; }

  // environment variable honoured by the CLI
  static std::string default_path();

 private:
  void append_line(const Key& k, const IntLaurentPoly& p) const;

  std::string path_;
  std::map<Key, IntLaurentPoly> entries_;
};

}  // namespace klbm::cache
