#ifndef WFA_SEMIRING_HPP
#define WFA_SEMIRING_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "wfa/error.hpp"

namespace wfa {

enum class SemiringId { boolean, godel, viterbi, tropical, naturals, rationals };

// A semiring (S, +, ., 0, 1) as a stateless trait type. `tolerance` is the
// absolute equality tolerance; zero means exact comparison.
template <class S>
concept Semiring = requires(const typename S::value_type& a,
                            const typename S::value_type& b) {
  typename S::value_type;
  { S::id } -> std::convertible_to<SemiringId>;
  { S::name } -> std::convertible_to<std::string_view>;
  { S::carrier } -> std::convertible_to<std::string_view>;
  { S::idempotent } -> std::convertible_to<bool>;
  { S::tolerance } -> std::convertible_to<double>;
  { S::zero() } -> std::same_as<typename S::value_type>;
  { S::one() } -> std::same_as<typename S::value_type>;
  { S::add(a, b) } -> std::same_as<typename S::value_type>;
  { S::mul(a, b) } -> std::same_as<typename S::value_type>;
  { S::equal(a, b) } -> std::same_as<bool>;
  { S::in_carrier(a) } -> std::same_as<bool>;
  { S::format(a) } -> std::same_as<std::string>;
};

namespace detail {

inline std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline bool near(double a, double b, double tol) {
  if (a == b) return true;
  if (std::isinf(a) || std::isinf(b)) return false;
  return std::abs(a - b) <= tol;
}

}  // namespace detail

// ({0,1}, or, and, 0, 1)
struct BooleanSemiring {
  using value_type = bool;
  static constexpr SemiringId id = SemiringId::boolean;
  static constexpr std::string_view name = "boolean";
  static constexpr std::string_view carrier = "{0,1}";
  static constexpr bool idempotent = true;
  static constexpr double tolerance = 0.0;

  static bool zero() { return false; }
  static bool one() { return true; }
  static bool add(bool a, bool b) { return a || b; }
  static bool mul(bool a, bool b) { return a && b; }
  static bool equal(bool a, bool b) { return a == b; }
  static bool in_carrier(bool) { return true; }
  static std::string format(bool v) { return v ? "1" : "0"; }
};

// ([0,1], max, min, 0, 1)
struct GodelSemiring {
  using value_type = double;
  static constexpr SemiringId id = SemiringId::godel;
  static constexpr std::string_view name = "godel";
  static constexpr std::string_view carrier = "[0,1]";
  static constexpr bool idempotent = true;
  static constexpr double tolerance = 1e-9;

  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double add(double a, double b) { return std::max(a, b); }
  static double mul(double a, double b) { return std::min(a, b); }
  static bool equal(double a, double b) { return detail::near(a, b, tolerance); }
  static bool in_carrier(double v) { return v >= 0.0 && v <= 1.0; }
  static std::string format(double v) { return detail::format_double(v); }
};

// ([0,1], max, *, 0, 1)
struct ViterbiSemiring {
  using value_type = double;
  static constexpr SemiringId id = SemiringId::viterbi;
  static constexpr std::string_view name = "viterbi";
  static constexpr std::string_view carrier = "[0,1]";
  static constexpr bool idempotent = true;
  static constexpr double tolerance = 1e-9;

  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double add(double a, double b) { return std::max(a, b); }
  static double mul(double a, double b) { return a * b; }
  static bool equal(double a, double b) { return detail::near(a, b, tolerance); }
  static bool in_carrier(double v) { return v >= 0.0 && v <= 1.0; }
  static std::string format(double v) { return detail::format_double(v); }
};

// (R u {+inf}, min, +, +inf, 0)
struct TropicalSemiring {
  using value_type = double;
  static constexpr SemiringId id = SemiringId::tropical;
  static constexpr std::string_view name = "tropical";
  static constexpr std::string_view carrier = "R u {+inf}";
  static constexpr bool idempotent = true;
  static constexpr double tolerance = 1e-9;

  static double zero() { return std::numeric_limits<double>::infinity(); }
  static double one() { return 0.0; }
  static double add(double a, double b) { return std::min(a, b); }
  static double mul(double a, double b) { return a + b; }
  static bool equal(double a, double b) { return detail::near(a, b, tolerance); }
  static bool in_carrier(double v) {
    return !std::isnan(v) && v != -std::numeric_limits<double>::infinity();
  }
  static std::string format(double v) { return detail::format_double(v); }
};

// (N, +, *, 0, 1) on 64-bit words; leaving the word range raises
// arithmetic_overflow instead of wrapping.
struct NaturalsSemiring {
  using value_type = std::uint64_t;
  static constexpr SemiringId id = SemiringId::naturals;
  static constexpr std::string_view name = "naturals";
  static constexpr std::string_view carrier = "N";
  static constexpr bool idempotent = false;
  static constexpr double tolerance = 0.0;

  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static value_type add(value_type a, value_type b) {
    value_type r;
    if (__builtin_add_overflow(a, b, &r))
      throw Error(ErrorCode::arithmetic_overflow, "naturals: addition overflow");
    return r;
  }
  static value_type mul(value_type a, value_type b) {
    value_type r;
    if (__builtin_mul_overflow(a, b, &r))
      throw Error(ErrorCode::arithmetic_overflow, "naturals: multiplication overflow");
    return r;
  }
  static bool equal(value_type a, value_type b) { return a == b; }
  static bool in_carrier(value_type) { return true; }
  static std::string format(value_type v) { return std::to_string(v); }
};

// (Q>=0, +, *, 0, 1), exact.
struct RationalsSemiring {
  using value_type = boost::multiprecision::cpp_rational;
  static constexpr SemiringId id = SemiringId::rationals;
  static constexpr std::string_view name = "rationals";
  static constexpr std::string_view carrier = "Q>=0";
  static constexpr bool idempotent = false;
  static constexpr double tolerance = 0.0;

  static value_type zero() { return value_type(0); }
  static value_type one() { return value_type(1); }
  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static bool equal(const value_type& a, const value_type& b) { return a == b; }
  static bool in_carrier(const value_type& v) { return v >= 0; }
  static std::string format(const value_type& v) { return v.str(); }
};

template <Semiring S>
bool is_zero(const typename S::value_type& v) {
  return v == S::zero();
}

template <Semiring S>
bool elem_eq(const typename S::value_type& a, const typename S::value_type& b) {
  return S::equal(a, b);
}

/// The n-th additive power n*s = s + ... + s (n summands), n >= 1.
/// Idempotent semirings return s directly; otherwise double-and-add.
template <Semiring S>
typename S::value_type nat_scale(std::uint64_t n, const typename S::value_type& s) {
  if (n == 0)
    throw Error(ErrorCode::invalid_argument, "nat_scale: n must be at least 1");
  if constexpr (S::idempotent) {
    return s;
  } else {
    typename S::value_type result = S::zero();
    typename S::value_type power = s;
    for (;;) {
      if (n & 1U) result = S::add(result, power);
      n >>= 1U;
      if (n == 0) break;
      power = S::add(power, power);
    }
    return result;
  }
}

struct SemiringInfo {
  SemiringId id;
  std::string_view name;
  std::string_view carrier;
  std::string zero;
  std::string one;
  bool idempotent;
  double tolerance;
};

template <Semiring S>
SemiringInfo info() {
  return {S::id, S::name, S::carrier, S::format(S::zero()), S::format(S::one()),
          S::idempotent, S::tolerance};
}

SemiringId semiring_from_name(std::string_view name);
std::string_view semiring_name(SemiringId id);
SemiringInfo semiring_info(SemiringId id);

template <class S>
struct SemiringTag {
  using type = S;
};

/// Calls f(SemiringTag<S>{}) for the trait type behind a runtime id.
template <class F>
decltype(auto) dispatch_semiring(SemiringId id, F&& f) {
  switch (id) {
    case SemiringId::boolean: return f(SemiringTag<BooleanSemiring>{});
    case SemiringId::godel: return f(SemiringTag<GodelSemiring>{});
    case SemiringId::viterbi: return f(SemiringTag<ViterbiSemiring>{});
    case SemiringId::tropical: return f(SemiringTag<TropicalSemiring>{});
    case SemiringId::naturals: return f(SemiringTag<NaturalsSemiring>{});
    case SemiringId::rationals: return f(SemiringTag<RationalsSemiring>{});
  }
  throw Error(ErrorCode::invalid_argument, "unknown semiring id");
}

inline constexpr SemiringId kAllSemirings[] = {
    SemiringId::boolean,  SemiringId::godel,    SemiringId::viterbi,
    SemiringId::tropical, SemiringId::naturals, SemiringId::rationals};

}  // namespace wfa

#endif  // WFA_SEMIRING_HPP
