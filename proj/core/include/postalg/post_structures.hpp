#pragma once

#include <optional>

#include "postalg/rota_baxter.hpp"

namespace postalg {

/// Two Lie brackets [,] (on g) and {,} (on n) on one space, tied together
/// by a bilinear product x.y.
struct PostLieStructure {
  Algebra g;
  Algebra n;
  ProductTable prod;

  PostLieStructure(Algebra g, Algebra n, ProductTable prod);
};

/// Two associative products * (on A) and o (on B) on one space, tied
/// together by the pair of products succ / prec.
struct PostAssocStructure {
  Algebra A;
  Algebra B;
  ProductTable succ;
  ProductTable prec;

  PostAssocStructure(Algebra A, Algebra B, ProductTable succ,
                     ProductTable prec);
};

/// (post1) on basis pairs, (post2) and (post3) on basis triples.
Report verify_post_lie(const PostLieStructure& p);

/// (postAs1) on pairs, (postAs2)-(postAs6) on triples, plus (postAs7),
/// which is implied by the others and reported separately.
Report verify_post_assoc(const PostAssocStructure& p);

/// x.y = {R(x), y}; the g bracket comes from (post1). Weight 1.
PostLieStructure from_rb_lie(const Algebra& n, const RBOperator& r);

/// x succ y = R(x) o y, x prec y = x o R(y); the A product comes from
/// (postAs1) and coincides with the induced algebra. Weight 1.
PostAssocStructure from_rb_assoc(const Algebra& b, const RBOperator& r);

/// g = A^-, n = B^-, x.y = x succ y - y prec x.
PostLieStructure commutator_descent(const PostAssocStructure& p);

/// True iff D_x(a) = x succ a - a prec x is a derivation of B^-.
bool derivation_map_check(const PostAssocStructure& p, const Vec& x);

/// The unique two-sided unit, if one exists.
std::optional<Vec> find_unit(const Algebra& b);

struct ExtractResult {
  std::optional<RBOperator> rb;  // set iff the structure is RB-derived
  Report report;                 // mismatch witnesses otherwise
};

/// R(x) = x succ 1_B, then checks that the whole structure is reproduced
/// and that R is a weight-1 Rota-Baxter operator. A mismatch means the
/// structure does not arise from any Rota-Baxter operator this way.
ExtractResult extract_rb(const PostAssocStructure& p);

enum class MatrixCase { ZeroBranch, NegationBranch, Other };

std::string matrix_case_name(MatrixCase c);

/// ZeroBranch: succ = prec = 0 and A = B. NegationBranch: * = succ = prec
/// = -o identically. Everything else is Other.
MatrixCase classify_matrix_case(const PostAssocStructure& p);

}  // namespace postalg
