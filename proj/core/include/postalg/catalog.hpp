#pragma once

#include "postalg/algebra.hpp"

namespace postalg {

/// A named subalgebra of a concrete target, e.g. Der(O) inside so(7).
struct Embedding {
  std::string source_name;
  Algebra target;
  Subspace image;
};

/// M_n with matrix-unit basis e_ij (row-major), e_ij e_kl = delta_jk e_il.
Algebra make_matrix_algebra(int n, const FieldSpec& field);

enum class LieFamily { gl, sl, so, sp };

LieFamily lie_family_from_name(std::string_view name);

/// Standard matrix models: gl(n), sl(n), so(n) = antisymmetric matrices,
/// sp(n) for even n. Structure constants are computed from commutators.
Algebra make_classical_lie(LieFamily family, int n, const FieldSpec& field);

/// Cayley-Dickson doubling of the quaternions; basis e0..e7 with unit e0.
/// Nonassociative, kind General. Requires characteristic != 2.
Algebra make_octonions(const FieldSpec& field);

/// Derivation algebra of the octonions, as a 14-dimensional subalgebra of
/// so(7) acting on the imaginary units e1..e7. Rationals only.
Embedding make_g2(const FieldSpec& field);

/// sl(n) acting on its natural module V(n), V(n) abelian; dim n^2 - 1 + n.
Algebra make_semidirect_sln_vn(int n, const FieldSpec& field);

/// so(k) as the block of so(n) fixing the last n-k coordinates.
Embedding embed_so_stabilizer(int k, int n);
/// so(k) + so(2) block (coordinates 0..k-1 and k..k+1).
Embedding embed_so_stabilizer_plus_so2(int k, int n);

/// F^n with pointwise products e_i e_i = e_i (commutative semisimple).
Algebra make_diagonal_algebra(int n, const FieldSpec& field);

struct CatalogEntry {
  std::string name;
  int dim;
};

/// Registered constructor names with dimensions, alphabetical.
std::vector<CatalogEntry> catalog_list();

/// Resolves a registry name ("sl:2", "Mn:3", "g2", "so-stab:5+2:7", ...).
Algebra catalog_make(const std::string& name, const FieldSpec& field);

}  // namespace postalg
