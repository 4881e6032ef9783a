#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modetab/term.hpp"

namespace modetab {

enum class Mode : std::uint8_t { Index, First, Last, Min, Max, Sum, All };

std::string_view mode_name(Mode m);
std::optional<Mode> parse_mode(std::string_view name);

/// Predicate identity: name plus arity.
struct PredicateKey {
  Symbol name;
  std::uint32_t arity = 0;

  friend bool operator==(const PredicateKey&, const PredicateKey&) = default;
  std::string to_string() const { return name.name() + "/" + std::to_string(arity); }
};

struct PredicateKeyHash {
  std::size_t operator()(const PredicateKey& k) const {
    return (std::size_t(k.name.id()) << 8) ^ k.arity;
  }
};

struct ModeEntry {
  std::uint32_t position;  // 1-based argument position
  Mode mode;

  friend bool operator==(const ModeEntry&, const ModeEntry&) = default;
};

/// Per-predicate argument access order. Arguments are visited index
/// first, then min/max, then all, then the single sum/last argument,
/// then first; source order is kept within each group.
class ModeArray {
 public:
  ModeArray() = default;

  /// Compiles a `table p(m1,...,mn)` declaration. Throws ModeError when
  /// more than one argument uses sum or last.
  static ModeArray compile(const PredicateKey& pred, std::span<const Mode> source_modes);
  /// `table p/n`: every argument is an index argument, source order.
  static ModeArray traditional(std::uint32_t arity);

  std::span<const ModeEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool is_traditional() const { return traditional_; }
  /// Mode of the argument at 1-based `position`.
  Mode mode_of(std::uint32_t position) const;

  friend bool operator==(const ModeArray&, const ModeArray&) = default;

 private:
  std::vector<ModeEntry> entries_;
  bool traditional_ = false;
};

/// Group rank used for ordering: index < min/max < all < sum/last < first.
int mode_group(Mode m);

struct SubstEntry {
  Mode mode;
  std::uint32_t var_count;

  friend bool operator==(const SubstEntry&, const SubstEntry&) = default;
};

/// Per-call: how many fresh variables each reordered argument
/// contributed, in mode-array order.
using SubstitutionArray = std::vector<SubstEntry>;

SubstitutionArray build_substitution_array(const ModeArray& modes,
                                           std::span<const Term> call_args);

/// Drops zero-variable entries and merges adjacent entries of the same
/// mode. Both forms drive answer insertion identically.
SubstitutionArray compact(const SubstitutionArray& subst);

std::uint32_t total_vars(const SubstitutionArray& subst);

enum class Preference { KeepOld, Replace, Tie };

/// min: smaller candidate replaces; max: larger replaces.
Preference preferable(Mode mode, const Term& old_value, const Term& candidate);

}  // namespace modetab
