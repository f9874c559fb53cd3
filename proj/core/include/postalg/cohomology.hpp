#pragma once

#include "postalg/rota_baxter.hpp"

namespace postalg {

/// Finite-dimensional module over a Lie algebra; the representation law
/// rho([x,y]) = [rho(x), rho(y)] is verified at construction.
struct Representation {
  Algebra alg;
  int mdim;
  std::vector<Matrix> action;  // rho(b_i)

  Representation(Algebra alg, std::vector<Matrix> action);

  Matrix act(const Vec& x) const;  // rho(x)
};

/// Bimodule over an associative algebra; left is an algebra map, right an
/// anti-map, and the two actions commute (verified at construction).
struct Bimodule {
  Algebra alg;
  int mdim;
  std::vector<Matrix> left;
  std::vector<Matrix> right;

  Bimodule(Algebra alg, std::vector<Matrix> left, std::vector<Matrix> right);

  Matrix act_left(const Vec& x) const;
  Matrix act_right(const Vec& x) const;
};

/// Linear map V -> M as an mdim x dim matrix; column i is d(b_i).
struct Cocycle {
  Matrix map;
};

/// d([x,y]) = x.d(y) - y.d(x) on all basis pairs.
bool is_cocycle_lie(const Representation& rep, const Cocycle& d);
/// Hochschild: d(xy) = d(x).y + x.d(y) on all basis pairs.
bool is_cocycle_assoc(const Bimodule& bim, const Cocycle& d);

/// Cocycles Z^1 and coboundaries B^1 as subspaces of the column-major
/// flattened coefficient space of dimension mdim * dim.
std::pair<Subspace, Subspace> z1_b1_lie(const Representation& rep);
std::pair<Subspace, Subspace> z1_b1_assoc(const Bimodule& bim);

Vec flatten_cocycle(const Cocycle& d);
Cocycle unflatten_cocycle(const Vec& v, int mdim, int dim,
                          const FieldSpec& field);

/// Twisted module x.m = R(x).m over g = from_rb_lie(n, r).g, together with
/// the pullback d_R = d o R; both are verified to satisfy their laws.
std::pair<Representation, Cocycle> twist_and_pullback_lie(
    const Representation& rep, const RBOperator& r, const Cocycle& d);

/// Associative mirror: x.m = R(x).m, m.x = m.R(x) over A, d_R = d o R.
std::pair<Bimodule, Cocycle> twist_and_pullback_assoc(const Bimodule& bim,
                                                      const RBOperator& r,
                                                      const Cocycle& d);

/// For semisimple g, solves d(x) = x.m (first Whitehead lemma guarantees
/// a solution); returns one such m.
Vec whitehead_split(const Representation& rep, const Cocycle& d);

}  // namespace postalg
