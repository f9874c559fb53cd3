#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "postalg/catalog.hpp"
#include "postalg/post_structures.hpp"

using namespace postalg;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Scalar q(long n, long d = 1) { return Scalar(Q, n, d); }

Algebra sl2() { return make_classical_lie(LieFamily::sl, 2, Q); }

RBOperator zero_rb(const Algebra& a) {
  return RBOperator{Matrix(a.dim(), a.dim(), a.field()),
                    Scalar(a.field(), 1)};
}

RBOperator neg_id(const Algebra& a) {
  return RBOperator{
      Matrix::identity(a.dim(), a.field()).scaled(Scalar(a.field(), -1)),
      Scalar(a.field(), 1)};
}

RBOperator m2_splitting(const Algebra& m2) {
  Subspace upper = Subspace::span(
      {unit_vec(4, 0, Q), unit_vec(4, 1, Q), unit_vec(4, 3, Q)}, 4, Q);
  Subspace lower = Subspace::span({unit_vec(4, 2, Q)}, 4, Q);
  return from_splitting(m2, upper, lower);
}

RBOperator sl2_splitting(const Algebra& a) {
  Subspace s1 = Subspace::span({unit_vec(3, 0, Q), unit_vec(3, 1, Q)}, 3, Q);
  Subspace s2 = Subspace::span({unit_vec(3, 2, Q)}, 3, Q);
  return from_splitting(a, s1, s2);
}

}  // namespace

TEST_CASE("verify_post_lie on the degenerate and constructed cases") {
  Algebra n = sl2();
  SUBCASE("g = n with zero product passes") {
    PostLieStructure p(n, n, ProductTable(3, Q));
    CHECK(verify_post_lie(p).pass);
  }
  SUBCASE("zero product with g != n fails (post1) with a witness") {
    Algebra g = Algebra(AlgebraKind::Lie, sl2().table().scaled(q(2)),
                        sl2().labels());
    PostLieStructure p(g, n, ProductTable(3, Q));
    Report r = verify_post_lie(p);
    CHECK_FALSE(r.pass);
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations.front().identity == "post1");
  }
  SUBCASE("from_rb_lie output passes the full triple check") {
    PostLieStructure p = from_rb_lie(n, sl2_splitting(n));
    CHECK(verify_post_lie(p).pass);
  }
}

TEST_CASE("verify_post_assoc and the derived (postAs7)") {
  Algebra b = make_matrix_algebra(2, Q);
  SUBCASE("A = B with zero succ and prec passes") {
    PostAssocStructure p(b, b, ProductTable(4, Q), ProductTable(4, Q));
    CHECK(verify_post_assoc(p).pass);
  }
  SUBCASE("the M2 splitting structure passes, including (postAs7)") {
    PostAssocStructure p = from_rb_assoc(b, m2_splitting(b));
    Report r = verify_post_assoc(p);
    CHECK(r.pass);
  }
  SUBCASE("swapping succ and prec breaks an axiom among (postAs2)-(postAs6)") {
    PostAssocStructure p = from_rb_assoc(b, m2_splitting(b));
    PostAssocStructure swapped(p.A, p.B, p.prec, p.succ);
    Report r = verify_post_assoc(swapped);
    CHECK_FALSE(r.pass);
    bool in_2_to_6 = false;
    for (const Violation& v : r.violations) {
      if (v.identity >= "postAs2" && v.identity <= "postAs6") in_2_to_6 = true;
    }
    CHECK(in_2_to_6);
  }
}

TEST_CASE("from_rb_lie") {
  Algebra n = sl2();
  SUBCASE("R = 0 gives the zero product and g = n") {
    PostLieStructure p = from_rb_lie(n, zero_rb(n));
    CHECK(p.prod.is_zero());
    CHECK(p.g.table() == n.table());
  }
  SUBCASE("R = -id negates the bracket") {
    PostLieStructure p = from_rb_lie(n, neg_id(n));
    CHECK(p.prod == n.table().negated());
    CHECK(p.g.table() == n.table().negated());
  }
  SUBCASE("g equals the induced algebra bracket") {
    RBOperator r = sl2_splitting(n);
    PostLieStructure p = from_rb_lie(n, r);
    CHECK(p.g.table() == induced_algebra(n, r).table());
  }
  SUBCASE("non-operators are rejected") {
    RBOperator bad{Matrix::identity(3, Q), q(1)};
    CHECK_THROWS_AS(from_rb_lie(n, bad), VerificationError);
  }
}

TEST_CASE("from_rb_assoc") {
  Algebra b = make_matrix_algebra(2, Q);
  SUBCASE("R = 0 gives zero products and A = B") {
    PostAssocStructure p = from_rb_assoc(b, zero_rb(b));
    CHECK(p.succ.is_zero());
    CHECK(p.prec.is_zero());
    CHECK(p.A.table() == b.table());
  }
  SUBCASE("R = -id lands in the negation branch") {
    PostAssocStructure p = from_rb_assoc(b, neg_id(b));
    CHECK(p.succ == b.table().negated());
    CHECK(p.prec == b.table().negated());
    CHECK(p.A.table() == b.table().negated());
    CHECK(classify_matrix_case(p) == MatrixCase::NegationBranch);
  }
  SUBCASE("the splitting structure is nontrivial and A is not semisimple") {
    PostAssocStructure p = from_rb_assoc(b, m2_splitting(b));
    CHECK(p.A.table() == induced_algebra(b, m2_splitting(b)).table());
    CHECK_FALSE(is_semisimple(p.A));
    CHECK(radical_assoc(p.A).dim() > 0);
    CHECK(classify_matrix_case(p) == MatrixCase::Other);
  }
}

TEST_CASE("commutator descent matches from_rb_lie tensor for tensor") {
  Algebra b = make_matrix_algebra(2, Q);
  for (const RBOperator& r :
       {zero_rb(b), neg_id(b), m2_splitting(b)}) {
    PostAssocStructure pa = from_rb_assoc(b, r);
    PostLieStructure descended = commutator_descent(pa);
    PostLieStructure direct = from_rb_lie(commutator_algebra(b), r);
    CHECK(descended.prod == direct.prod);
    CHECK(descended.g.table() == direct.g.table());
    CHECK(descended.n.table() == direct.n.table());
    CHECK(verify_post_lie(descended).pass);
  }
}

TEST_CASE("descent of the zero structure is the zero post-Lie structure") {
  Algebra b = make_matrix_algebra(2, Q);
  PostAssocStructure p(b, b, ProductTable(4, Q), ProductTable(4, Q));
  PostLieStructure d = commutator_descent(p);
  CHECK(d.prod.is_zero());
  CHECK(d.g.table() == d.n.table());
}

TEST_CASE("D_x is a derivation of B^- for every basis x") {
  Algebra b = make_matrix_algebra(2, Q);
  for (const RBOperator& r :
       {zero_rb(b), neg_id(b), m2_splitting(b)}) {
    PostAssocStructure p = from_rb_assoc(b, r);
    for (int i = 0; i < b.dim(); ++i) {
      CHECK(derivation_map_check(p, unit_vec(4, i, Q)));
    }
  }
}

TEST_CASE("find_unit") {
  auto u = find_unit(make_matrix_algebra(2, Q));
  REQUIRE(u.has_value());
  CHECK(*u == add(unit_vec(4, 0, Q), unit_vec(4, 3, Q)));

  // Strictly upper-triangular: nilpotent, no unit.
  ProductTable nil(1, Q);
  CHECK_FALSE(find_unit(Algebra(AlgebraKind::Associative, nil)).has_value());

  auto u2 = find_unit(make_diagonal_algebra(2, Q));
  REQUIRE(u2.has_value());
  CHECK(*u2 == add(unit_vec(2, 0, Q), unit_vec(2, 1, Q)));
}

TEST_CASE("extract_rb round-trips every shipped instance exactly") {
  Algebra m2 = make_matrix_algebra(2, Q);
  Algebra d2 = make_diagonal_algebra(2, Q);
  struct Case {
    Algebra b;
    RBOperator r;
  };
  std::vector<Case> cases;
  cases.push_back({m2, zero_rb(m2)});
  cases.push_back({m2, neg_id(m2)});
  cases.push_back({m2, m2_splitting(m2)});
  cases.push_back({d2, from_splitting(d2,
                                      Subspace::span({unit_vec(2, 0, Q)}, 2, Q),
                                      Subspace::span({unit_vec(2, 1, Q)}, 2, Q))});
  for (const Case& c : cases) {
    PostAssocStructure p = from_rb_assoc(c.b, c.r);
    ExtractResult res = extract_rb(p);
    REQUIRE(res.rb.has_value());
    CHECK(res.rb->matrix == c.r.matrix);
    CHECK(res.report.pass);
  }
}

TEST_CASE("extract_rb needs a unit") {
  // Zero product algebra: no unit, so extraction is unsupported.
  Algebra z(AlgebraKind::Associative, ProductTable(2, Q));
  PostAssocStructure p(z, z, ProductTable(2, Q), ProductTable(2, Q));
  CHECK_THROWS_AS(extract_rb(p), std::invalid_argument);
}

TEST_CASE("classify_matrix_case branches") {
  Algebra b = make_matrix_algebra(2, Q);
  PostAssocStructure zero(b, b, ProductTable(4, Q), ProductTable(4, Q));
  CHECK(classify_matrix_case(zero) == MatrixCase::ZeroBranch);
  CHECK(classify_matrix_case(from_rb_assoc(b, neg_id(b))) ==
        MatrixCase::NegationBranch);
  CHECK(classify_matrix_case(from_rb_assoc(b, m2_splitting(b))) ==
        MatrixCase::Other);
}

TEST_CASE("(postAs7) holds whenever (postAs1)-(postAs6) hold, under fuzzing") {
  Algebra b = make_matrix_algebra(2, Q);
  PostAssocStructure base = from_rb_assoc(b, m2_splitting(b));
  std::mt19937 rng(8383);
  std::uniform_int_distribution<int> idx(0, 3);
  std::uniform_int_distribution<long> val(-2, 2);
  int still_valid = 0;
  for (int trial = 0; trial < 60; ++trial) {
    ProductTable succ = base.succ;
    succ.set(idx(rng), idx(rng), idx(rng), q(val(rng)));
    PostAssocStructure fuzzed(base.A, base.B, succ, base.prec);
    Report r = verify_post_assoc(fuzzed);
    bool axioms_1_to_6 = true;
    bool seven = true;
    for (const Violation& v : r.violations) {
      if (v.identity == "postAs7") {
        seven = false;
      } else {
        axioms_1_to_6 = false;
      }
    }
    if (axioms_1_to_6) {
      ++still_valid;
      CHECK(seven);  // Lemma: 1-6 imply 7
    }
  }
  // The fuzz must also hit genuinely broken structures.
  CHECK(still_valid < 60);
}
