#ifndef WFA_SRALGEBRA_HPP
#define WFA_SRALGEBRA_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wfa/error.hpp"
#include "wfa/names.hpp"
#include "wfa/semiring.hpp"

namespace wfa {

namespace detail {

inline void require_same_states(const StateSet& a, const StateSet& b, const char* op) {
  if (!same_states(a, b))
    throw Error(ErrorCode::index_mismatch,
                std::string(op) + ": operands are indexed by different state sets");
}

inline void require_states(const StateSet& s) {
  if (!s) throw Error(ErrorCode::invalid_argument, "null state set");
}

}  // namespace detail

/// A-vector over S. Absent entries are zero; exact zeros are never stored.
template <Semiring S>
class SrVector {
 public:
  using value_type = typename S::value_type;
  using entry_map = std::map<std::size_t, value_type>;

  explicit SrVector(StateSet states) : states_(std::move(states)) {
    detail::require_states(states_);
  }

  const StateSet& states() const noexcept { return states_; }
  std::size_t size() const noexcept { return states_->size(); }
  const entry_map& entries() const noexcept { return entries_; }

  value_type at(std::size_t i) const {
    auto it = entries_.find(i);
    return it == entries_.end() ? S::zero() : it->second;
  }
  value_type at(std::string_view state) const { return at(states_->index_of(state)); }

  void set(std::size_t i, value_type v) {
    if (i >= size())
      throw Error(ErrorCode::index_mismatch, "vector index out of range");
    if (is_zero<S>(v))
      entries_.erase(i);
    else
      entries_.insert_or_assign(i, std::move(v));
  }
  void set(std::string_view state, value_type v) { set(states_->index_of(state), std::move(v)); }

  friend bool operator==(const SrVector& a, const SrVector& b) {
    return same_states(a.states_, b.states_) && a.entries_ == b.entries_;
  }

 private:
  StateSet states_;
  entry_map entries_;
};

/// Square A x A matrix over S, stored as sparse rows.
template <Semiring S>
class SrMatrix {
 public:
  using value_type = typename S::value_type;
  using row_type = std::map<std::size_t, value_type>;

  explicit SrMatrix(StateSet states) : states_(std::move(states)) {
    detail::require_states(states_);
    rows_.resize(states_->size());
  }

  const StateSet& states() const noexcept { return states_; }
  std::size_t size() const noexcept { return rows_.size(); }
  const row_type& row(std::size_t i) const { return rows_.at(i); }

  value_type at(std::size_t i, std::size_t j) const {
    const auto& r = rows_.at(i);
    auto it = r.find(j);
    return it == r.end() ? S::zero() : it->second;
  }

  void set(std::size_t i, std::size_t j, value_type v) {
    if (i >= size() || j >= size())
      throw Error(ErrorCode::index_mismatch, "matrix index out of range");
    if (is_zero<S>(v))
      rows_[i].erase(j);
    else
      rows_[i].insert_or_assign(j, std::move(v));
  }

  bool is_zero_matrix() const {
    for (const auto& r : rows_)
      if (!r.empty()) return false;
    return true;
  }

  friend bool operator==(const SrMatrix& a, const SrMatrix& b) {
    return same_states(a.states_, b.states_) && a.rows_ == b.rows_;
  }

 private:
  StateSet states_;
  std::vector<row_type> rows_;
};

// Accumulates sparse sums; terms that are zero never reach it.
template <Semiring S>
class SparseAccumulator {
 public:
  using value_type = typename S::value_type;

  void add(std::size_t i, const value_type& v) {
    auto [it, inserted] = sums_.try_emplace(i, v);
    if (!inserted) it->second = S::add(it->second, v);
  }
  const std::map<std::size_t, value_type>& sums() const { return sums_; }

 private:
  std::map<std::size_t, value_type> sums_;
};

template <Semiring S>
SrMatrix<S> mat_mul(const SrMatrix<S>& m1, const SrMatrix<S>& m2) {
  detail::require_same_states(m1.states(), m2.states(), "mat_mul");
  SrMatrix<S> out(m1.states());
  for (std::size_t a = 0; a < m1.size(); ++a) {
    SparseAccumulator<S> acc;
    for (const auto& [c, v] : m1.row(a))
      for (const auto& [b, w] : m2.row(c)) acc.add(b, S::mul(v, w));
    for (const auto& [b, s] : acc.sums()) out.set(a, b, s);
  }
  return out;
}

template <Semiring S>
SrVector<S> vec_mat(const SrVector<S>& v, const SrMatrix<S>& m) {
  detail::require_same_states(v.states(), m.states(), "vec_mat");
  SparseAccumulator<S> acc;
  for (const auto& [a, va] : v.entries())
    for (const auto& [b, w] : m.row(a)) acc.add(b, S::mul(va, w));
  SrVector<S> out(v.states());
  for (const auto& [b, s] : acc.sums()) out.set(b, s);
  return out;
}

template <Semiring S>
SrVector<S> mat_vec(const SrMatrix<S>& m, const SrVector<S>& v) {
  detail::require_same_states(m.states(), v.states(), "mat_vec");
  SrVector<S> out(v.states());
  for (std::size_t a = 0; a < m.size(); ++a) {
    typename S::value_type sum = S::zero();
    for (const auto& [c, w] : m.row(a)) {
      auto it = v.entries().find(c);
      if (it != v.entries().end()) sum = S::add(sum, S::mul(w, it->second));
    }
    out.set(a, std::move(sum));
  }
  return out;
}

template <Semiring S>
typename S::value_type dot(const SrVector<S>& v1, const SrVector<S>& v2) {
  detail::require_same_states(v1.states(), v2.states(), "dot");
  typename S::value_type sum = S::zero();
  for (const auto& [a, x] : v1.entries()) {
    auto it = v2.entries().find(a);
    if (it != v2.entries().end()) sum = S::add(sum, S::mul(x, it->second));
  }
  return sum;
}

template <Semiring S>
SrVector<S> hadamard(const SrVector<S>& v1, const SrVector<S>& v2) {
  detail::require_same_states(v1.states(), v2.states(), "hadamard");
  SrVector<S> out(v1.states());
  for (const auto& [a, x] : v1.entries()) {
    auto it = v2.entries().find(a);
    if (it != v2.entries().end()) out.set(a, S::mul(x, it->second));
  }
  return out;
}

/// D(v): v on the diagonal, zero elsewhere.
template <Semiring S>
SrMatrix<S> diag(const SrVector<S>& v) {
  SrMatrix<S> out(v.states());
  for (const auto& [a, x] : v.entries()) out.set(a, a, x);
  return out;
}

template <Semiring S>
SrMatrix<S> identity_matrix(const StateSet& states) {
  detail::require_states(states);
  if (states->empty())
    throw Error(ErrorCode::invalid_argument, "identity_matrix: empty state list");
  SrMatrix<S> out(states);
  for (std::size_t a = 0; a < states->size(); ++a) out.set(a, a, S::one());
  return out;
}

/// The constant-one vector (the final weight vector used by behaviors).
template <Semiring S>
SrVector<S> all_ones(const StateSet& states) {
  detail::require_states(states);
  if (states->empty())
    throw Error(ErrorCode::invalid_argument, "all_ones: empty state list");
  SrVector<S> out(states);
  for (std::size_t a = 0; a < states->size(); ++a) out.set(a, S::one());
  return out;
}

/// Sum of all entries, i.e. v . all_ones.
template <Semiring S>
typename S::value_type sum_entries(const SrVector<S>& v) {
  typename S::value_type sum = S::zero();
  for (const auto& [a, x] : v.entries()) sum = S::add(sum, x);
  return sum;
}

}  // namespace wfa

#endif  // WFA_SRALGEBRA_HPP
