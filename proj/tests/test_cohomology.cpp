#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "postalg/catalog.hpp"
#include "postalg/cohomology.hpp"

using namespace postalg;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Scalar q(long n, long d = 1) { return Scalar(Q, n, d); }

Algebra sl2() { return make_classical_lie(LieFamily::sl, 2, Q); }

Representation trivial_rep(const Algebra& a, int mdim) {
  return Representation(
      a, std::vector<Matrix>(static_cast<std::size_t>(a.dim()),
                             Matrix(mdim, mdim, a.field())));
}

Representation adjoint_rep(const Algebra& a) {
  std::vector<Matrix> action;
  for (int i = 0; i < a.dim(); ++i) {
    action.push_back(a.table().left_action(unit_vec(a.dim(), i, a.field())));
  }
  return Representation(a, std::move(action));
}

Representation natural_sl2() {
  Matrix e(2, 2, Q), h(2, 2, Q), f(2, 2, Q);
  e.at(0, 1) = q(1);
  h.at(0, 0) = q(1);
  h.at(1, 1) = q(-1);
  f.at(1, 0) = q(1);
  return Representation(sl2(), {e, h, f});
}

Bimodule regular_bimodule(const Algebra& a) {
  std::vector<Matrix> left, right;
  for (int i = 0; i < a.dim(); ++i) {
    left.push_back(a.table().left_action(unit_vec(a.dim(), i, a.field())));
    right.push_back(a.table().right_action(unit_vec(a.dim(), i, a.field())));
  }
  return Bimodule(a, std::move(left), std::move(right));
}

RBOperator sl2_splitting(const Algebra& a) {
  Subspace s1 = Subspace::span({unit_vec(3, 0, Q), unit_vec(3, 1, Q)}, 3, Q);
  Subspace s2 = Subspace::span({unit_vec(3, 2, Q)}, 3, Q);
  return from_splitting(a, s1, s2);
}

}  // namespace

TEST_CASE("representation constructor enforces the module law") {
  CHECK_NOTHROW(adjoint_rep(sl2()));
  CHECK_NOTHROW(natural_sl2());
  // e and f actions swapped: not a representation.
  Matrix e(2, 2, Q), h(2, 2, Q), f(2, 2, Q);
  e.at(0, 1) = q(1);
  h.at(0, 0) = q(1);
  h.at(1, 1) = q(-1);
  f.at(1, 0) = q(1);
  CHECK_THROWS(Representation(sl2(), {f, h, e}));
}

TEST_CASE("Z1 and B1 for Lie modules") {
  SUBCASE("perfect algebra, trivial module: both vanish") {
    auto [z1, b1] = z1_b1_lie(trivial_rep(sl2(), 1));
    CHECK(z1.dim() == 0);
    CHECK(b1.dim() == 0);
  }
  SUBCASE("one-dimensional abelian algebra, trivial module") {
    Algebra ab(AlgebraKind::Lie, ProductTable(1, Q));
    auto [z1, b1] = z1_b1_lie(trivial_rep(ab, 1));
    CHECK(z1.dim() == 1);
    CHECK(b1.dim() == 0);
  }
  SUBCASE("sl2 adjoint: H1 = 0 by Whitehead, all cocycles inner") {
    auto [z1, b1] = z1_b1_lie(adjoint_rep(sl2()));
    CHECK(z1.dim() == 3);
    CHECK(b1.dim() == 3);
    CHECK(z1 == b1);
  }
  SUBCASE("sl2 natural module: H1 = 0") {
    auto [z1, b1] = z1_b1_lie(natural_sl2());
    CHECK(z1.dim() == b1.dim());
    CHECK(z1.dim() == 2);
  }
}

TEST_CASE("Z1 and B1 for Hochschild cohomology") {
  SUBCASE("M2 regular bimodule: all derivations inner, dimension 3") {
    auto [z1, b1] = z1_b1_assoc(regular_bimodule(make_matrix_algebra(2, Q)));
    CHECK(z1.dim() == 3);
    CHECK(b1.dim() == 3);
  }
  SUBCASE("one-dimensional unital algebra: Z1 = 0") {
    auto [z1, b1] = z1_b1_assoc(regular_bimodule(make_matrix_algebra(1, Q)));
    CHECK(z1.dim() == 0);
    CHECK(b1.dim() == 0);
  }
  SUBCASE("zero-product algebra with zero actions: every map is a cocycle") {
    Algebra z(AlgebraKind::Associative, ProductTable(1, Q));
    Bimodule bim(z, {Matrix(1, 1, Q)}, {Matrix(1, 1, Q)});
    auto [z1, b1] = z1_b1_assoc(bim);
    CHECK(z1.dim() == 1);
    CHECK(b1.dim() == 0);
  }
}

TEST_CASE("B1 is contained in Z1 on assorted modules") {
  std::vector<Representation> reps;
  reps.push_back(adjoint_rep(sl2()));
  reps.push_back(natural_sl2());
  reps.push_back(adjoint_rep(make_semidirect_sln_vn(2, Q)));
  for (const Representation& rep : reps) {
    auto [z1, b1] = z1_b1_lie(rep);
    CHECK(z1.contains(b1));
  }
  auto [z1a, b1a] = z1_b1_assoc(regular_bimodule(make_diagonal_algebra(2, Q)));
  CHECK(z1a.contains(b1a));
}

TEST_CASE("twist and pullback, Lie flavor") {
  Algebra n = sl2();
  Representation rep = adjoint_rep(n);
  // d = coboundary of h: d(x) = [x, h].
  Matrix dm(3, 3, Q);
  dm.at(0, 0) = q(-2);  // d(e) = -2e
  dm.at(2, 2) = q(2);   // d(f) = 2f
  Cocycle d{dm};
  REQUIRE(is_cocycle_lie(rep, d));

  SUBCASE("R = 0 kills everything") {
    RBOperator r{Matrix(3, 3, Q), q(1)};
    auto [trep, dr] = twist_and_pullback_lie(rep, r, d);
    CHECK(dr.map.is_zero());
    for (const Matrix& m : trep.action) CHECK(m.is_zero());
  }
  SUBCASE("R = -id negates") {
    RBOperator r{Matrix::identity(3, Q).scaled(q(-1)), q(1)};
    auto [trep, dr] = twist_and_pullback_lie(rep, r, d);
    CHECK(dr.map == -dm);
    for (int i = 0; i < 3; ++i) {
      CHECK(trep.action[static_cast<std::size_t>(i)] ==
            -rep.action[static_cast<std::size_t>(i)]);
    }
  }
  SUBCASE("splitting operator produces a valid twisted pair") {
    RBOperator r = sl2_splitting(n);
    auto [trep, dr] = twist_and_pullback_lie(rep, r, d);
    CHECK(is_cocycle_lie(trep, dr));
  }
  SUBCASE("non-cocycles are rejected with a witness") {
    Matrix bad(3, 3, Q);
    bad.at(1, 0) = q(1);  // d(e) = h is not a cocycle for the adjoint
    CHECK_THROWS_AS(
        twist_and_pullback_lie(rep, sl2_splitting(n), Cocycle{bad}),
        std::invalid_argument);
  }
}

TEST_CASE("pullback is linear in the cocycle") {
  Algebra n = sl2();
  Representation rep = adjoint_rep(n);
  RBOperator r = sl2_splitting(n);
  auto [z1, b1] = z1_b1_lie(rep);
  REQUIRE(z1.dim() >= 2);
  Cocycle d1 = unflatten_cocycle(z1.basis_vector(0), 3, 3, Q);
  Cocycle d2 = unflatten_cocycle(z1.basis_vector(1), 3, 3, Q);
  Cocycle sum{d1.map + d2.map};
  auto [t1, dr1] = twist_and_pullback_lie(rep, r, d1);
  auto [t2, dr2] = twist_and_pullback_lie(rep, r, d2);
  auto [ts, drs] = twist_and_pullback_lie(rep, r, sum);
  CHECK(drs.map == dr1.map + dr2.map);
}

TEST_CASE("twist and pullback, associative flavor") {
  Algebra b = make_matrix_algebra(2, Q);
  Bimodule bim = regular_bimodule(b);
  // Inner cocycle d(x) = x e12 - e12 x.
  Matrix dm(4, 4, Q);
  for (int i = 0; i < 4; ++i) {
    Vec ei = unit_vec(4, i, Q);
    Vec w = sub(b.multiply(ei, unit_vec(4, 1, Q)),
                b.multiply(unit_vec(4, 1, Q), ei));
    for (int r = 0; r < 4; ++r) dm.at(r, i) = w[static_cast<std::size_t>(r)];
  }
  Cocycle d{dm};
  REQUIRE(is_cocycle_assoc(bim, d));

  Subspace upper = Subspace::span(
      {unit_vec(4, 0, Q), unit_vec(4, 1, Q), unit_vec(4, 3, Q)}, 4, Q);
  Subspace lower = Subspace::span({unit_vec(4, 2, Q)}, 4, Q);
  RBOperator r = from_splitting(b, upper, lower);
  auto [tbim, dr] = twist_and_pullback_assoc(bim, r, d);
  CHECK(is_cocycle_assoc(tbim, dr));

  RBOperator rz{Matrix(4, 4, Q), q(1)};
  auto [tz, dz] = twist_and_pullback_assoc(bim, rz, d);
  CHECK(dz.map.is_zero());

  RBOperator rn{Matrix::identity(4, Q).scaled(q(-1)), q(1)};
  auto [tn, dn] = twist_and_pullback_assoc(bim, rn, d);
  CHECK(dn.map == -dm);
  for (int i = 0; i < 4; ++i) {
    CHECK(tn.left[static_cast<std::size_t>(i)] ==
          -bim.left[static_cast<std::size_t>(i)]);
    CHECK(tn.right[static_cast<std::size_t>(i)] ==
          -bim.right[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("whitehead split") {
  Algebra a = sl2();
  Representation rep = adjoint_rep(a);
  SUBCASE("recovers the generator of an inner cocycle") {
    Matrix dm(3, 3, Q);
    dm.at(0, 0) = q(-2);
    dm.at(2, 2) = q(2);
    Vec m = whitehead_split(rep, Cocycle{dm});
    CHECK(m == unit_vec(3, 1, Q));  // exactly h
  }
  SUBCASE("zero cocycle gives zero") {
    Vec m = whitehead_split(rep, Cocycle{Matrix(3, 3, Q)});
    CHECK(is_zero_vec(m));
  }
  SUBCASE("perfect semisimple algebra, trivial module: only d = 0") {
    Algebra two = direct_sum(a, a);
    auto [z1, b1] = z1_b1_lie(trivial_rep(two, 1));
    CHECK(z1.dim() == 0);
    Vec m = whitehead_split(trivial_rep(two, 1), Cocycle{Matrix(1, 6, Q)});
    CHECK(is_zero_vec(m));
  }
  SUBCASE("non-semisimple algebras are rejected") {
    Algebra ab(AlgebraKind::Lie, ProductTable(1, Q));
    CHECK_THROWS(whitehead_split(trivial_rep(ab, 1), Cocycle{Matrix(1, 1, Q)}));
  }
}

TEST_CASE("Lemma 4.4 mechanism across shipped operators") {
  Algebra n = sl2();
  Representation rep = adjoint_rep(n);
  auto [z1, b1] = z1_b1_lie(rep);
  std::vector<RBOperator> ops = {
      RBOperator{Matrix(3, 3, Q), q(1)},
      RBOperator{Matrix::identity(3, Q).scaled(q(-1)), q(1)},
      sl2_splitting(n)};
  for (const RBOperator& r : ops) {
    for (int i = 0; i < z1.dim(); ++i) {
      Cocycle d = unflatten_cocycle(z1.basis_vector(i), 3, 3, Q);
      auto [trep, dr] = twist_and_pullback_lie(rep, r, d);
      CHECK(is_cocycle_lie(trep, dr));
    }
  }
}
