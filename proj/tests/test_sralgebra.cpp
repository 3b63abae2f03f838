#include <catch_amalgamated.hpp>

#include "wfa/random.hpp"
#include "wfa/sralgebra.hpp"

using namespace wfa;

namespace {

using G = GodelSemiring;
using N = NaturalsSemiring;

StateSet two_states() { return make_state_set({"a", "b"}); }

template <Semiring S>
SrMatrix<S> matrix(const StateSet& states,
                   std::initializer_list<std::initializer_list<typename S::value_type>> rows) {
  SrMatrix<S> m(states);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& v : row) m.set(i, j++, v);
    ++i;
  }
  return m;
}

template <Semiring S>
SrVector<S> vector(const StateSet& states, std::initializer_list<typename S::value_type> values) {
  SrVector<S> v(states);
  std::size_t i = 0;
  for (const auto& x : values) v.set(i++, x);
  return v;
}

template <Semiring S>
void require_equal(const SrMatrix<S>& a, const SrMatrix<S>& b) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) CHECK(elem_eq<S>(a.at(i, j), b.at(i, j)));
}

template <Semiring S>
void require_equal(const SrVector<S>& a, const SrVector<S>& b) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(elem_eq<S>(a.at(i), b.at(i)));
}

}  // namespace

TEST_CASE("Goedel matrix product", "[sralgebra]") {
  auto st = two_states();
  auto m1 = matrix<G>(st, {{0.6, 0.5}, {0, 0.4}});
  auto m2 = matrix<G>(st, {{0.2, 0.2}, {0, 0.7}});
  require_equal(mat_mul(m1, m2), matrix<G>(st, {{0.2, 0.5}, {0, 0.4}}));
  CHECK(mat_mul(m1, identity_matrix<G>(st)) == m1);
  CHECK(mat_mul(SrMatrix<G>(st), m1).is_zero_matrix());
}

TEST_CASE("vector-matrix and matrix-vector products", "[sralgebra]") {
  auto st = two_states();
  auto delta = matrix<G>(st, {{0.7, 0.5}, {0, 0.8}});
  require_equal(vec_mat(vector<G>(st, {1, 0}), delta), vector<G>(st, {0.7, 0.5}));
  require_equal(mat_vec(delta, vector<G>(st, {0.2, 0.7})), vector<G>(st, {0.5, 0.7}));
  auto v = vector<G>(st, {0.3, 0.9});
  CHECK(vec_mat(v, identity_matrix<G>(st)) == v);
  CHECK(mat_vec(identity_matrix<G>(st), v) == v);
  CHECK(vec_mat(SrVector<G>(st), delta).entries().empty());
  CHECK(mat_vec(delta, SrVector<G>(st)).entries().empty());
}

TEST_CASE("dot and hadamard products", "[sralgebra]") {
  auto st = two_states();
  CHECK(dot(vector<G>(st, {1, 0}), vector<G>(st, {0.4, 0.9})) == 0.4);
  CHECK(dot(vector<G>(st, {0.4, 0.9}), SrVector<G>(st)) == 0.0);
  CHECK(dot(vector<N>(st, {1, 2}), vector<N>(st, {3, 4})) == 11);
  require_equal(hadamard(vector<G>(st, {0.6, 0.4}), vector<G>(st, {0.2, 0.7})),
                vector<G>(st, {0.2, 0.4}));
  auto v = vector<G>(st, {0.6, 0.4});
  CHECK(hadamard(v, all_ones<G>(st)) == v);
  CHECK(hadamard(v, SrVector<G>(st)).entries().empty());
}

TEST_CASE("diagonal embedding", "[sralgebra]") {
  auto st = two_states();
  auto d = diag(vector<G>(st, {0.6, 0.4}));
  CHECK(d == matrix<G>(st, {{0.6, 0}, {0, 0.4}}));
  require_equal(mat_mul(d, matrix<G>(st, {{0.7, 0.5}, {0, 0.8}})),
                matrix<G>(st, {{0.6, 0.5}, {0, 0.4}}));
  CHECK(diag(all_ones<G>(st)) == identity_matrix<G>(st));
}

TEST_CASE("identity and all-ones", "[sralgebra]") {
  auto st = two_states();
  CHECK(identity_matrix<G>(st) == matrix<G>(st, {{1, 0}, {0, 1}}));
  CHECK(all_ones<G>(st) == vector<G>(st, {1, 1}));
  auto bst = make_state_set({"a", "b"});
  CHECK(dot(all_ones<BooleanSemiring>(bst), all_ones<BooleanSemiring>(bst)) == true);
  CHECK_THROWS_AS(identity_matrix<G>(make_state_set({})), Error);
  CHECK_THROWS_AS(all_ones<G>(make_state_set({})), Error);
}

TEST_CASE("zero entries are never stored", "[sralgebra]") {
  auto st = two_states();
  SrVector<G> v(st);
  v.set(0, 0.5);
  v.set(0, 0.0);
  CHECK(v.entries().empty());
  SrVector<TropicalSemiring> t(st);
  t.set(1, TropicalSemiring::zero());
  CHECK(t.entries().empty());
}

TEST_CASE("index-set mismatches are errors", "[sralgebra]") {
  auto st = two_states();
  auto other = make_state_set({"b", "a"});
  auto check_mismatch = [](auto&& f) {
    try {
      f();
      FAIL("expected index_mismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::index_mismatch);
    }
  };
  check_mismatch([&] { mat_mul(identity_matrix<G>(st), identity_matrix<G>(other)); });
  check_mismatch([&] { vec_mat(all_ones<G>(st), identity_matrix<G>(other)); });
  check_mismatch([&] { mat_vec(identity_matrix<G>(st), all_ones<G>(other)); });
  check_mismatch([&] { dot(all_ones<G>(st), all_ones<G>(other)); });
  check_mismatch([&] { hadamard(all_ones<G>(st), all_ones<G>(other)); });
  // Equal names in a distinct object are the same index set.
  CHECK_NOTHROW(mat_mul(identity_matrix<G>(st), identity_matrix<G>(make_state_set({"a", "b"}))));
}

TEMPLATE_TEST_CASE("matrix product is associative", "[sralgebra][property]", GodelSemiring,
                   NaturalsSemiring, RationalsSemiring, TropicalSemiring) {
  using S = TestType;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    detail::WeightSource<S> src(seed);
    auto st = make_state_set(detail::numbered("q", 1 + seed % 4));
    SrMatrix<S> m1(st), m2(st), m3(st);
    src.fill(m1);
    src.fill(m2);
    src.fill(m3);
    require_equal(mat_mul(mat_mul(m1, m2), m3), mat_mul(m1, mat_mul(m2, m3)));
    SrVector<S> v(st);
    src.fill(v);
    require_equal(vec_mat(vec_mat(v, m1), m2), vec_mat(v, mat_mul(m1, m2)));
    require_equal(mat_vec(m1, mat_vec(m2, v)), mat_vec(mat_mul(m1, m2), v));
  }
}

TEMPLATE_TEST_CASE("diagonal scaling identities", "[sralgebra][property]", GodelSemiring,
                   ViterbiSemiring, NaturalsSemiring, RationalsSemiring, BooleanSemiring) {
  using S = TestType;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    detail::WeightSource<S> src(seed);
    auto st = make_state_set(detail::numbered("q", 1 + seed % 4));
    SrMatrix<S> m(st);
    SrVector<S> nu(st);
    src.fill(m);
    src.fill(nu);
    auto left = mat_mul(diag(nu), m);
    auto right = mat_mul(m, diag(nu));
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = 0; b < m.size(); ++b) {
        CHECK(elem_eq<S>(left.at(a, b), S::mul(nu.at(a), m.at(a, b))));
        CHECK(elem_eq<S>(right.at(a, b), S::mul(m.at(a, b), nu.at(b))));
      }
  }
}

TEMPLATE_TEST_CASE("dot matches an explicit loop", "[sralgebra][property]", GodelSemiring,
                   TropicalSemiring, NaturalsSemiring, RationalsSemiring) {
  using S = TestType;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    detail::WeightSource<S> src(seed);
    auto st = make_state_set(detail::numbered("q", 1 + seed % 4));
    SrVector<S> v1(st), v2(st);
    src.fill(v1);
    src.fill(v2);
    auto expected = S::zero();
    for (std::size_t a = 0; a < st->size(); ++a) expected = S::add(expected, S::mul(v1.at(a), v2.at(a)));
    CHECK(elem_eq<S>(dot(v1, v2), expected));
  }
}
