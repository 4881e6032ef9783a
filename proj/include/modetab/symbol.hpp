#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace modetab {

/// Interned atom/functor name. Cheap to copy and compare.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(std::string_view name) : id_(intern(name)) {}

  static Symbol from_id(std::uint32_t id) {
    Symbol s;
    s.id_ = id;
    return s;
  }

  std::uint32_t id() const { return id_; }
  const std::string& name() const;

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  friend bool operator!=(Symbol a, Symbol b) { return a.id_ != b.id_; }

 private:
  static std::uint32_t intern(std::string_view name);

  std::uint32_t id_ = 0;  // id 0 is the empty name
};

}  // namespace modetab

template <>
struct std::hash<modetab::Symbol> {
  std::size_t operator()(modetab::Symbol s) const noexcept { return s.id(); }
};
