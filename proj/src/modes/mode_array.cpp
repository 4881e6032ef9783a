#include <algorithm>

#include "modetab/error.hpp"
#include "modetab/modes.hpp"
#include "modetab/token.hpp"

namespace modetab {

std::string_view mode_name(Mode m) {
  switch (m) {
    case Mode::Index: return "index";
    case Mode::First: return "first";
    case Mode::Last: return "last";
    case Mode::Min: return "min";
    case Mode::Max: return "max";
    case Mode::Sum: return "sum";
    case Mode::All: return "all";
  }
  return "?";
}

std::optional<Mode> parse_mode(std::string_view name) {
  for (Mode m : {Mode::Index, Mode::First, Mode::Last, Mode::Min, Mode::Max, Mode::Sum,
                 Mode::All}) {
    if (mode_name(m) == name) return m;
  }
  return std::nullopt;
}

int mode_group(Mode m) {
  switch (m) {
    case Mode::Index: return 0;
    case Mode::Min:
    case Mode::Max: return 1;
    case Mode::All: return 2;
    case Mode::Sum:
    case Mode::Last: return 3;
    case Mode::First: return 4;
  }
  return 5;
}

ModeArray ModeArray::compile(const PredicateKey& pred, std::span<const Mode> source_modes) {
  if (source_modes.empty()) {
    throw ModeError("table declaration for " + pred.to_string() + " has no modes");
  }
  if (source_modes.size() != pred.arity) {
    throw ModeError("table declaration for " + pred.to_string() + " lists " +
                    std::to_string(source_modes.size()) + " modes");
  }
  auto aggregates = std::count_if(source_modes.begin(), source_modes.end(),
                                  [](Mode m) { return m == Mode::Sum || m == Mode::Last; });
  if (aggregates > 1) {
    throw ModeError("table declaration for " + pred.to_string() +
                    " uses sum/last on more than one argument");
  }
  ModeArray out;
  for (std::uint32_t i = 0; i < source_modes.size(); ++i) {
    out.entries_.push_back({i + 1, source_modes[i]});
  }
  std::stable_sort(out.entries_.begin(), out.entries_.end(),
                   [](const ModeEntry& a, const ModeEntry& b) {
                     return mode_group(a.mode) < mode_group(b.mode);
                   });
  return out;
}

ModeArray ModeArray::traditional(std::uint32_t arity) {
  ModeArray out;
  out.traditional_ = true;
  for (std::uint32_t i = 0; i < arity; ++i) out.entries_.push_back({i + 1, Mode::Index});
  return out;
}

Mode ModeArray::mode_of(std::uint32_t position) const {
  for (const auto& e : entries_) {
    if (e.position == position) return e.mode;
  }
  throw ModeError("no argument at position " + std::to_string(position));
}

SubstitutionArray build_substitution_array(const ModeArray& modes,
                                           std::span<const Term> call_args) {
  if (call_args.size() != modes.size()) {
    throw ModeError("call has " + std::to_string(call_args.size()) + " arguments, mode array " +
                    std::to_string(modes.size()));
  }
  SubstitutionArray out;
  VarNumbering vars;
  TokenSeq scratch;
  for (const ModeEntry& e : modes.entries()) {
    std::size_t before = vars.size();
    scratch.clear();
    tokenize_into(call_args[e.position - 1], vars, scratch);
    out.push_back({e.mode, static_cast<std::uint32_t>(vars.size() - before)});
  }
  return out;
}

SubstitutionArray compact(const SubstitutionArray& subst) {
  SubstitutionArray out;
  for (const SubstEntry& e : subst) {
    if (e.var_count == 0) continue;
    if (!out.empty() && out.back().mode == e.mode) {
      out.back().var_count += e.var_count;
    } else {
      out.push_back(e);
    }
  }
  return out;
}

std::uint32_t total_vars(const SubstitutionArray& subst) {
  std::uint32_t n = 0;
  for (const auto& e : subst) n += e.var_count;
  return n;
}

Preference preferable(Mode mode, const Term& old_value, const Term& candidate) {
  if (mode != Mode::Min && mode != Mode::Max) {
    throw ModeError("preferable() applies to min/max only");
  }
  auto c = compare_ground(candidate, old_value);
  if (c == 0) return Preference::Tie;
  bool better = mode == Mode::Min ? c < 0 : c > 0;
  return better ? Preference::Replace : Preference::KeepOld;
}

}  // namespace modetab
