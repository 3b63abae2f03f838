#include "wfa/names.hpp"

#include "wfa/error.hpp"

namespace wfa {

NameIndex::NameIndex(std::vector<std::string> names) : names_(std::move(names)) {
  lookup_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!lookup_.emplace(names_[i], i).second)
      throw Error(ErrorCode::duplicate_name, "duplicate name '" + names_[i] + "'");
  }
}

std::optional<std::size_t> NameIndex::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t NameIndex::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorCode::unknown_name, "unknown name '" + std::string(name) + "'");
}

StateSet make_state_set(std::vector<std::string> names) {
  return std::make_shared<const NameIndex>(std::move(names));
}

bool same_states(const StateSet& a, const StateSet& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace wfa
