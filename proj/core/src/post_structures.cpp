#include "postalg/post_structures.hpp"

#include <stdexcept>

namespace postalg {

namespace {

void require_same_space(int dim_a, const FieldSpec& fa, int dim_b,
                        const FieldSpec& fb, const char* what) {
  if (dim_a != dim_b || fa != fb) {
    throw std::invalid_argument(std::string(what) +
                                ": the two algebras must share dim and field");
  }
}

void require_verified(const Report& report, const char* what) {
  if (!report.pass) {
    throw VerificationError(std::string(what) +
                                " needs a valid structure: " + report.summary(),
                            report);
  }
}

}  // namespace

PostLieStructure::PostLieStructure(Algebra g_in, Algebra n_in,
                                   ProductTable prod_in)
    : g(std::move(g_in)), n(std::move(n_in)), prod(std::move(prod_in)) {
  require_same_space(g.dim(), g.field(), n.dim(), n.field(), "post-Lie");
  require_same_space(g.dim(), g.field(), prod.dim(), prod.field(), "post-Lie");
  if (g.kind() != AlgebraKind::Lie || n.kind() != AlgebraKind::Lie) {
    throw std::invalid_argument("post-Lie: g and n must be Lie algebras");
  }
}

PostAssocStructure::PostAssocStructure(Algebra a_in, Algebra b_in,
                                       ProductTable succ_in,
                                       ProductTable prec_in)
    : A(std::move(a_in)),
      B(std::move(b_in)),
      succ(std::move(succ_in)),
      prec(std::move(prec_in)) {
  require_same_space(A.dim(), A.field(), B.dim(), B.field(), "post-assoc");
  require_same_space(A.dim(), A.field(), succ.dim(), succ.field(),
                     "post-assoc");
  require_same_space(A.dim(), A.field(), prec.dim(), prec.field(),
                     "post-assoc");
  if (A.kind() != AlgebraKind::Associative ||
      B.kind() != AlgebraKind::Associative) {
    throw std::invalid_argument("post-assoc: A and B must be associative");
  }
}

Report verify_post_lie(const PostLieStructure& p) {
  const int n = p.g.dim();
  const FieldSpec& f = p.g.field();
  Report report;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // (post1): x.y - y.x = [x,y] - {x,y}
      Vec res = sub(p.prod.basis_product(i, j), p.prod.basis_product(j, i));
      res = sub(res, p.g.basis_product(i, j));
      res = add(res, p.n.basis_product(i, j));
      if (!is_zero_vec(res)) {
        report.add_violation("post1", {i, j}, std::move(res));
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    Vec ei = unit_vec(n, i, f);
    for (int j = 0; j < n; ++j) {
      Vec ej = unit_vec(n, j, f);
      for (int k = 0; k < n; ++k) {
        Vec ek = unit_vec(n, k, f);
        // (post2): [x,y].z = x.(y.z) - y.(x.z)
        Vec res = p.prod.multiply(p.g.basis_product(i, j), ek);
        res = sub(res, p.prod.multiply(ei, p.prod.basis_product(j, k)));
        res = add(res, p.prod.multiply(ej, p.prod.basis_product(i, k)));
        if (!is_zero_vec(res)) {
          report.add_violation("post2", {i, j, k}, std::move(res));
        }
        // (post3): x.{y,z} = {x.y, z} + {y, x.z}
        Vec lhs = p.prod.multiply(ei, p.n.basis_product(j, k));
        Vec rhs = p.n.multiply(p.prod.basis_product(i, j), ek);
        rhs = add(rhs, p.n.multiply(ej, p.prod.basis_product(i, k)));
        Vec res3 = sub(lhs, rhs);
        if (!is_zero_vec(res3)) {
          report.add_violation("post3", {i, j, k}, std::move(res3));
        }
      }
    }
  }
  report.sort_violations();
  return report;
}

Report verify_post_assoc(const PostAssocStructure& p) {
  const int n = p.A.dim();
  const FieldSpec& f = p.A.field();
  Report report;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // (postAs1): x*y - x o y = x succ y + x prec y
      Vec res = sub(p.A.basis_product(i, j), p.B.basis_product(i, j));
      res = sub(res, p.succ.basis_product(i, j));
      res = sub(res, p.prec.basis_product(i, j));
      if (!is_zero_vec(res)) {
        report.add_violation("postAs1", {i, j}, std::move(res));
      }
    }
  }
  auto check3 = [&](const char* identity,
                    const std::function<Vec(int, int, int)>& lhs,
                    const std::function<Vec(int, int, int)>& rhs) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
          Vec res = sub(lhs(i, j, k), rhs(i, j, k));
          if (!is_zero_vec(res)) {
            report.add_violation(identity, {i, j, k}, std::move(res));
          }
        }
      }
    }
  };
  auto e = [&f, n](int i) { return unit_vec(n, i, f); };
  check3(
      "postAs2",
      [&](int i, int j, int k) {
        return p.succ.multiply(p.A.basis_product(i, j), e(k));
      },
      [&](int i, int j, int k) {
        return p.succ.multiply(e(i), p.succ.basis_product(j, k));
      });
  check3(
      "postAs3",
      [&](int i, int j, int k) {
        return p.prec.multiply(e(i), p.A.basis_product(j, k));
      },
      [&](int i, int j, int k) {
        return p.prec.multiply(p.prec.basis_product(i, j), e(k));
      });
  check3(
      "postAs4",
      [&](int i, int j, int k) {
        return p.succ.multiply(e(i), p.B.basis_product(j, k));
      },
      [&](int i, int j, int k) {
        return p.B.multiply(p.succ.basis_product(i, j), e(k));
      });
  check3(
      "postAs5",
      [&](int i, int j, int k) {
        return p.prec.multiply(p.B.basis_product(i, j), e(k));
      },
      [&](int i, int j, int k) {
        return p.B.multiply(e(i), p.prec.basis_product(j, k));
      });
  check3(
      "postAs6",
      [&](int i, int j, int k) {
        return p.B.multiply(p.prec.basis_product(i, j), e(k));
      },
      [&](int i, int j, int k) {
        return p.B.multiply(e(i), p.succ.basis_product(j, k));
      });
  check3(
      "postAs7",
      [&](int i, int j, int k) {
        return p.prec.multiply(p.succ.basis_product(i, j), e(k));
      },
      [&](int i, int j, int k) {
        return p.succ.multiply(e(i), p.prec.basis_product(j, k));
      });
  report.sort_violations();
  return report;
}

PostLieStructure from_rb_lie(const Algebra& n, const RBOperator& r) {
  if (n.kind() != AlgebraKind::Lie) {
    throw std::invalid_argument("from_rb_lie needs a Lie algebra");
  }
  if (!r.weight.is_one()) {
    throw std::invalid_argument("from_rb_lie needs weight 1");
  }
  Report check = verify_rb(n, r);
  if (!check.pass) {
    throw VerificationError("from_rb_lie needs a Rota-Baxter operator",
                            std::move(check));
  }
  const int dim = n.dim();
  const FieldSpec& f = n.field();
  ProductTable prod = ProductTable::from_bilinear(dim, f, [&](int i, int j) {
    return n.multiply(r.matrix.col(i), unit_vec(dim, j, f));
  });
  // (post1): [x,y] = x.y - y.x + {x,y}; the Lie law is re-verified by the
  // Algebra constructor.
  ProductTable gtab = ProductTable::from_bilinear(dim, f, [&](int i, int j) {
    Vec w = sub(prod.basis_product(i, j), prod.basis_product(j, i));
    return add(w, n.basis_product(i, j));
  });
  PostLieStructure out(Algebra(AlgebraKind::Lie, std::move(gtab), n.labels()),
                       n, std::move(prod));
  Report self = verify_post_lie(out);
  if (!self.pass) {
    throw std::logic_error("from_rb_lie output failed verification: " +
                           self.summary());
  }
  return out;
}

PostAssocStructure from_rb_assoc(const Algebra& b, const RBOperator& r) {
  if (b.kind() != AlgebraKind::Associative) {
    throw std::invalid_argument("from_rb_assoc needs an associative algebra");
  }
  if (!r.weight.is_one()) {
    throw std::invalid_argument("from_rb_assoc needs weight 1");
  }
  Report check = verify_rb(b, r);
  if (!check.pass) {
    throw VerificationError("from_rb_assoc needs a Rota-Baxter operator",
                            std::move(check));
  }
  const int dim = b.dim();
  const FieldSpec& f = b.field();
  ProductTable succ = ProductTable::from_bilinear(dim, f, [&](int i, int j) {
    return b.multiply(r.matrix.col(i), unit_vec(dim, j, f));
  });
  ProductTable prec = ProductTable::from_bilinear(dim, f, [&](int i, int j) {
    return b.multiply(unit_vec(dim, i, f), r.matrix.col(j));
  });
  // (postAs1): x*y = x succ y + x prec y + x o y; this is exactly the
  // induced product, and associativity is re-verified by the constructor.
  ProductTable atab =
      succ.plus(prec).plus(b.table());
  PostAssocStructure out(
      Algebra(AlgebraKind::Associative, std::move(atab), b.labels()), b,
      std::move(succ), std::move(prec));
  Report self = verify_post_assoc(out);
  if (!self.pass) {
    throw std::logic_error("from_rb_assoc output failed verification: " +
                           self.summary());
  }
  return out;
}

PostLieStructure commutator_descent(const PostAssocStructure& p) {
  require_verified(verify_post_assoc(p), "commutator_descent");
  const int n = p.A.dim();
  ProductTable prod =
      ProductTable::from_bilinear(n, p.A.field(), [&](int i, int j) {
        return sub(p.succ.basis_product(i, j), p.prec.basis_product(j, i));
      });
  PostLieStructure out(commutator_algebra(p.A), commutator_algebra(p.B),
                       std::move(prod));
  Report self = verify_post_lie(out);
  if (!self.pass) {
    throw std::logic_error("commutator descent failed verification: " +
                           self.summary());
  }
  return out;
}

bool derivation_map_check(const PostAssocStructure& p, const Vec& x) {
  require_verified(verify_post_assoc(p), "derivation_map_check");
  const int n = p.B.dim();
  const FieldSpec& f = p.B.field();
  auto bracket = [&](const Vec& u, const Vec& v) {
    return sub(p.B.multiply(u, v), p.B.multiply(v, u));
  };
  auto d = [&](const Vec& a) {
    return sub(p.succ.multiply(x, a), p.prec.multiply(a, x));
  };
  for (int i = 0; i < n; ++i) {
    Vec ei = unit_vec(n, i, f);
    for (int j = 0; j < n; ++j) {
      Vec ej = unit_vec(n, j, f);
      Vec lhs = d(bracket(ei, ej));
      Vec rhs = add(bracket(d(ei), ej), bracket(ei, d(ej)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::optional<Vec> find_unit(const Algebra& b) {
  const int n = b.dim();
  if (n == 0) return std::nullopt;
  Matrix sys(2 * n * n, n, b.field());
  Vec rhs = zero_vec(2 * n * n, b.field());
  for (int i = 0; i < n; ++i) {
    Matrix right = b.table().right_action(unit_vec(n, i, b.field()));
    Matrix left = b.table().left_action(unit_vec(n, i, b.field()));
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        sys.at(i * n + r, c) = right.at(r, c);          // u . e_i = e_i
        sys.at(n * n + i * n + r, c) = left.at(r, c);   // e_i . u = e_i
      }
    }
    rhs[static_cast<std::size_t>(i * n + i)] = Scalar(b.field(), 1);
    rhs[static_cast<std::size_t>(n * n + i * n + i)] = Scalar(b.field(), 1);
  }
  return solve(sys, rhs);
}

ExtractResult extract_rb(const PostAssocStructure& p) {
  require_verified(verify_post_assoc(p), "extract_rb");
  auto unit = find_unit(p.B);
  if (!unit) {
    throw std::invalid_argument(
        "extract_rb: B has no two-sided unit (unsupported)");
  }
  const int n = p.B.dim();
  const FieldSpec& f = p.B.field();
  Matrix rmat(n, n, f);
  for (int i = 0; i < n; ++i) {
    Vec col = p.succ.multiply(unit_vec(n, i, f), *unit);
    for (int r = 0; r < n; ++r) rmat.at(r, i) = col[static_cast<std::size_t>(r)];
  }
  RBOperator rb{rmat, Scalar(f, 1)};
  Report report;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec res = sub(p.succ.basis_product(i, j),
                    p.B.multiply(rmat.col(i), unit_vec(n, j, f)));
      if (!is_zero_vec(res)) {
        report.add_violation("succ-reconstruction", {i, j}, std::move(res));
      }
      Vec res2 = sub(p.prec.basis_product(i, j),
                     p.B.multiply(unit_vec(n, i, f), rmat.col(j)));
      if (!is_zero_vec(res2)) {
        report.add_violation("prec-reconstruction", {i, j}, std::move(res2));
      }
    }
  }
  report.merge(verify_rb(p.B, rb));
  report.sort_violations();
  if (!report.pass) return ExtractResult{std::nullopt, std::move(report)};
  return ExtractResult{std::move(rb), std::move(report)};
}

std::string matrix_case_name(MatrixCase c) {
  switch (c) {
    case MatrixCase::ZeroBranch:
      return "zero";
    case MatrixCase::NegationBranch:
      return "negation";
    case MatrixCase::Other:
      return "other";
  }
  return "other";
}

MatrixCase classify_matrix_case(const PostAssocStructure& p) {
  require_verified(verify_post_assoc(p), "classify_matrix_case");
  if (p.succ.is_zero() && p.prec.is_zero() && p.A.table() == p.B.table()) {
    return MatrixCase::ZeroBranch;
  }
  ProductTable neg = p.B.table().negated();
  if (p.succ == neg && p.prec == neg && p.A.table() == neg) {
    return MatrixCase::NegationBranch;
  }
  return MatrixCase::Other;
}

}  // namespace postalg
