#include "modetab/symbol.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace modetab {
namespace {

struct SymbolTable {
  std::mutex mutex;
  std::unordered_map<std::string, std::uint32_t> ids;
  std::deque<std::string> names;

  SymbolTable() {
    names.emplace_back();
    ids.emplace(std::string(), 0);
  }
};

SymbolTable& table() {
  static SymbolTable t;
  return t;
}

}  // namespace

std::uint32_t Symbol::intern(std::string_view name) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  auto it = t.ids.find(std::string(name));
  if (it != t.ids.end()) return it->second;
  auto id = static_cast<std::uint32_t>(t.names.size());
  t.names.emplace_back(name);
  t.ids.emplace(std::string(name), id);
  return id;
}

const std::string& Symbol::name() const {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  // deque elements never move, so the reference outlives the lock
  return t.names[id_];
}

}  // namespace modetab
