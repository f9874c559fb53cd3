#include "postalg/json_io.hpp"

#include <stdexcept>

namespace postalg {

namespace {

FieldSpec field_from_json(const json& j) {
  return FieldSpec::parse(j.get<std::string>());
}

ProductTable table_from_json(const json& sc, int dim, const FieldSpec& field) {
  std::vector<ScEntry> entries;
  for (const json& row : sc) {
    if (!row.is_array() || row.size() != 4) {
      throw std::invalid_argument("sc entry must be [i, j, k, value]");
    }
    entries.push_back(ScEntry{
        row[0].get<int>(), row[1].get<int>(), row[2].get<int>(),
        Scalar::from_string(field, row[3].get<std::string>())});
  }
  return ProductTable::from_entries(dim, field, entries);
}

json table_to_json(const ProductTable& t) {
  json sc = json::array();
  for (const ScEntry& e : t.entries()) {
    sc.push_back(json::array({e.i, e.j, e.k, e.c.str()}));
  }
  return sc;
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) entries.push_back(m.at(i, j).str());
  }
  return json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"field", m.field().name()},
              {"entries", entries}};
}

Matrix matrix_from_json(const json& j) {
  FieldSpec field = field_from_json(j.at("field"));
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  const json& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows * cols) {
    throw std::invalid_argument("matrix entry count mismatch");
  }
  Matrix m(rows, cols, field);
  int idx = 0;
  for (int i = 0; i < rows; ++i) {
    for (int jj = 0; jj < cols; ++jj) {
      m.set(i, jj,
            Scalar::from_string(field, entries[idx].get<std::string>()));
      ++idx;
    }
  }
  return m;
}

json subspace_to_json(const Subspace& s) { return matrix_to_json(s.basis()); }

Subspace subspace_from_json(const json& j) {
  return Subspace::row_space(matrix_from_json(j));
}

json algebra_to_json(const Algebra& a) {
  json out{{"dim", a.dim()},
           {"field", a.field().name()},
           {"kind", kind_name(a.kind())},
           {"sc", table_to_json(a.table())}};
  if (!a.labels().empty()) out["labels"] = a.labels();
  return out;
}

Algebra algebra_from_json(const json& j) {
  FieldSpec field = field_from_json(j.at("field"));
  int dim = j.at("dim").get<int>();
  AlgebraKind kind = kind_from_name(j.at("kind").get<std::string>());
  ProductTable t = table_from_json(j.at("sc"), dim, field);
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = j.at("labels").get<std::vector<std::string>>();
  }
  return Algebra(kind, std::move(t), std::move(labels));
}

json rb_to_json(const RBOperator& r) {
  return json{{"weight", r.weight.str()},
              {"matrix", matrix_to_json(r.matrix)}};
}

RBOperator rb_from_json(const json& j, const FieldSpec& field) {
  Matrix m = matrix_from_json(j.at("matrix"));
  if (m.field() != field) {
    throw std::invalid_argument("operator field differs from requested field");
  }
  Scalar weight =
      Scalar::from_string(field, j.at("weight").get<std::string>());
  return RBOperator{std::move(m), std::move(weight)};
}

json post_lie_to_json(const PostLieStructure& p) {
  return json{{"g", algebra_to_json(p.g)},
              {"n", algebra_to_json(p.n)},
              {"prod", table_to_json(p.prod)}};
}

PostLieStructure post_lie_from_json(const json& j) {
  Algebra g = algebra_from_json(j.at("g"));
  Algebra n = algebra_from_json(j.at("n"));
  ProductTable prod = table_from_json(j.at("prod"), g.dim(), g.field());
  return PostLieStructure(std::move(g), std::move(n), std::move(prod));
}

json post_assoc_to_json(const PostAssocStructure& p) {
  return json{{"A", algebra_to_json(p.A)},
              {"B", algebra_to_json(p.B)},
              {"succ", table_to_json(p.succ)},
              {"prec", table_to_json(p.prec)}};
}

PostAssocStructure post_assoc_from_json(const json& j) {
  Algebra a = algebra_from_json(j.at("A"));
  Algebra b = algebra_from_json(j.at("B"));
  ProductTable succ = table_from_json(j.at("succ"), a.dim(), a.field());
  ProductTable prec = table_from_json(j.at("prec"), a.dim(), a.field());
  return PostAssocStructure(std::move(a), std::move(b), std::move(succ),
                            std::move(prec));
}

json representation_to_json(const Representation& r) {
  json action = json::array();
  for (const Matrix& m : r.action) action.push_back(matrix_to_json(m));
  return json{{"alg", algebra_to_json(r.alg)},
              {"mdim", r.mdim},
              {"action", action}};
}

Representation representation_from_json(const json& j) {
  Algebra alg = algebra_from_json(j.at("alg"));
  std::vector<Matrix> action;
  for (const json& m : j.at("action")) action.push_back(matrix_from_json(m));
  Representation rep(std::move(alg), std::move(action));
  if (j.contains("mdim") && j.at("mdim").get<int>() != rep.mdim) {
    throw std::invalid_argument("mdim does not match action matrices");
  }
  return rep;
}

json bimodule_to_json(const Bimodule& b) {
  json left = json::array(), right = json::array();
  for (const Matrix& m : b.left) left.push_back(matrix_to_json(m));
  for (const Matrix& m : b.right) right.push_back(matrix_to_json(m));
  return json{{"alg", algebra_to_json(b.alg)},
              {"mdim", b.mdim},
              {"left", left},
              {"right", right}};
}

Bimodule bimodule_from_json(const json& j) {
  Algebra alg = algebra_from_json(j.at("alg"));
  std::vector<Matrix> left, right;
  for (const json& m : j.at("left")) left.push_back(matrix_from_json(m));
  for (const json& m : j.at("right")) right.push_back(matrix_from_json(m));
  Bimodule bim(std::move(alg), std::move(left), std::move(right));
  if (j.contains("mdim") && j.at("mdim").get<int>() != bim.mdim) {
    throw std::invalid_argument("mdim does not match action matrices");
  }
  return bim;
}

json decomposition_to_json(const Decomposition& d) {
  return json{{"ambient", algebra_to_json(d.ambient())},
              {"s1", subspace_to_json(d.s1())},
              {"s2", subspace_to_json(d.s2())}};
}

Decomposition decomposition_from_json(const json& j) {
  return Decomposition(algebra_from_json(j.at("ambient")),
                       subspace_from_json(j.at("s1")),
                       subspace_from_json(j.at("s2")));
}

json report_to_json(const Report& r) {
  json witnesses = json::array();
  for (const Violation& v : r.violations) {
    json residual = json::array();
    for (const Scalar& s : v.residual) residual.push_back(s.str());
    witnesses.push_back(json{{"identity", v.identity},
                             {"indices", v.indices},
                             {"residual", residual}});
  }
  return json{{"pass", r.pass}, {"witnesses", witnesses}};
}

json fingerprint_to_json(const Fingerprint& f) {
  json out{{"dim", f.dim},
           {"center_dim", f.center_dim},
           {"derived_dim", f.derived_dim}};
  out["semisimple"] = f.semisimple ? json(*f.semisimple) : json(nullptr);
  out["nilpotent"] = f.nilpotent ? json(*f.nilpotent) : json(nullptr);
  out["nilpotency_index"] =
      f.nilpotency_index ? json(*f.nilpotency_index) : json(nullptr);
  out["perfect"] = f.perfect ? json(*f.perfect) : json(nullptr);
  json cp = json::array();
  for (const Scalar& c : f.gram_char_poly) cp.push_back(c.str());
  out["gram_char_poly"] = cp;
  return out;
}

}  // namespace postalg
