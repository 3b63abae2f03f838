#ifndef WFA_NAMES_HPP
#define WFA_NAMES_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wfa {

/// An ordered list of distinct names with O(1) lookup. Used for state sets
/// and for input/output alphabets; position is the identity used by every
/// vector, matrix and word.
class NameIndex {
 public:
  NameIndex() = default;
  explicit NameIndex(std::vector<std::string> names);  // throws duplicate_name

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws unknown_name

  friend bool operator==(const NameIndex& a, const NameIndex& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

using Alphabet = NameIndex;

// States are shared between an automaton and all of its vectors/matrices.
using StateSet = std::shared_ptr<const NameIndex>;

StateSet make_state_set(std::vector<std::string> names);

/// Same ordered names (pointer identity short-circuits).
bool same_states(const StateSet& a, const StateSet& b);

}  // namespace wfa

#endif  // WFA_NAMES_HPP
