// Command-line front end: parses JSON inputs or catalog names, dispatches to
// the library, and emits deterministic machine-readable reports.
//
// Exit codes: 0 = pass, 1 = a mathematical check failed (witnesses listed),
// 2 = bad input / unsupported field / unknown command.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "postalg/catalog.hpp"
#include "postalg/cohomology.hpp"
#include "postalg/json_io.hpp"
#include "postalg/post_structures.hpp"

using namespace postalg;

namespace {

struct RunReport {
  std::string verb;
  std::string status = "pass";  // pass | fail | error
  json payload = json::object();
  json witnesses = json::array();
  std::string diagnostic;
};

int emit(const RunReport& r, bool as_json) {
  if (as_json) {
    json out{{"verb", r.verb},
             {"status", r.status},
             {"payload", r.payload},
             {"witnesses", r.witnesses}};
    if (!r.diagnostic.empty()) out["diagnostic"] = r.diagnostic;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << r.verb << ": " << r.status << "\n";
    if (!r.diagnostic.empty()) std::cout << "  " << r.diagnostic << "\n";
    if (!r.payload.empty()) std::cout << "  payload: " << r.payload.dump() << "\n";
    if (!r.witnesses.empty()) {
      std::cout << "  " << r.witnesses.size() << " witness(es), first: "
                << r.witnesses.front().dump() << "\n";
    }
  }
  if (r.status == "pass") return 0;
  if (r.status == "fail") return 1;
  return 2;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

bool file_exists(const std::string& path) {
  std::ifstream in(path);
  return in.good();
}

Algebra load_algebra(const std::string& spec, const FieldSpec& field) {
  if (file_exists(spec)) return algebra_from_json(load_json_file(spec));
  return catalog_make(spec, field);
}

RBOperator load_rb(const std::string& path, const FieldSpec& field,
                   const std::string& weight_override) {
  RBOperator r = rb_from_json(load_json_file(path), field);
  if (!weight_override.empty()) {
    r.weight = Scalar::from_string(field, weight_override);
  }
  return r;
}

void fill_from_report(RunReport& out, const Report& report) {
  json rj = report_to_json(report);
  out.witnesses = rj["witnesses"];
  out.status = report.pass ? "pass" : "fail";
}

void fail_with_witness(RunReport& out, const std::string& identity,
                       std::vector<int> indices, const Vec& residual) {
  json res = json::array();
  for (const Scalar& s : residual) res.push_back(s.str());
  out.witnesses.push_back(
      json{{"identity", identity}, {"indices", indices}, {"residual", res}});
  out.status = "fail";
}

json decomposition_report_json(const Decomposition& d) {
  auto rep = verify_decomposition(d);
  return json{{"is_sum", rep.is_sum},
              {"is_proper", rep.is_proper},
              {"is_direct", rep.is_direct},
              {"intersection_dim", rep.intersection.dim()},
              {"s1_dim", d.s1().dim()},
              {"s2_dim", d.s2().dim()},
              {"ambient_dim", d.ambient().dim()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"postalg: structure-constant algebra workbench"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string field_name = "Q";
  long long budget = 100000000;
  app.add_flag("--json", as_json, "emit a JSON report");
  app.add_option("--field", field_name, "ground field: Q or Fp:<p>");
  app.add_option("--budget", budget, "candidate budget for searches");
  std::vector<std::string> features;
  app.add_option("--features", features, "feature flags (d4)");
  app.fallthrough();

  // verify-algebra
  auto* c_va = app.add_subcommand("verify-algebra", "check an algebra law");
  std::string va_algebra, va_law;
  c_va->add_option("--algebra", va_algebra, "catalog name or JSON file")
      ->required();
  c_va->add_option("--law", va_law, "lie or assoc (default: declared kind)");

  // verify-rb
  auto* c_vrb = app.add_subcommand("verify-rb", "check the Rota-Baxter law");
  std::string vrb_algebra, vrb_rb, vrb_weight;
  c_vrb->add_option("--algebra", vrb_algebra)->required();
  c_vrb->add_option("--rb", vrb_rb, "operator JSON file")->required();
  c_vrb->add_option("--weight", vrb_weight, "override the operator weight");

  // make-rb
  auto* c_mk = app.add_subcommand("make-rb", "emit an operator JSON");
  std::string mk_algebra, mk_weight = "1", mk_s1, mk_s2;
  bool mk_zero = false, mk_negid = false;
  c_mk->add_option("--algebra", mk_algebra)->required();
  c_mk->add_flag("--zero", mk_zero, "the zero operator");
  c_mk->add_flag("--neg-id", mk_negid, "-weight times the identity");
  c_mk->add_option("--s1", mk_s1, "subspace JSON file (splitting)");
  c_mk->add_option("--s2", mk_s2, "subspace JSON file (splitting)");
  c_mk->add_option("--weight", mk_weight);

  // induce
  auto* c_ind = app.add_subcommand("induce", "build the induced algebra");
  std::string ind_algebra, ind_rb, ind_weight;
  c_ind->add_option("--algebra", ind_algebra)->required();
  c_ind->add_option("--rb", ind_rb)->required();
  c_ind->add_option("--weight", ind_weight);

  // tower
  auto* c_tw = app.add_subcommand("tower", "iterate the induced product");
  std::string tw_algebra, tw_rb, tw_weight;
  int tw_steps = 1;
  c_tw->add_option("--algebra", tw_algebra)->required();
  c_tw->add_option("--rb", tw_rb)->required();
  c_tw->add_option("--steps", tw_steps)->required();
  c_tw->add_option("--weight", tw_weight);

  // search-rb
  auto* c_srb = app.add_subcommand("search-rb", "exhaustive prime-field search");
  std::string srb_algebra, srb_weight = "1";
  c_srb->add_option("--algebra", srb_algebra)->required();
  c_srb->add_option("--weight", srb_weight);

  // verify-post-lie / verify-post-assoc
  auto* c_vpl = app.add_subcommand("verify-post-lie", "check (post1)-(post3)");
  std::string vpl_input;
  c_vpl->add_option("--input", vpl_input)->required();
  auto* c_vpa =
      app.add_subcommand("verify-post-assoc", "check (postAs1)-(postAs7)");
  std::string vpa_input;
  c_vpa->add_option("--input", vpa_input)->required();

  // from-rb
  auto* c_frb = app.add_subcommand("from-rb", "operator to post-structure");
  std::string frb_algebra, frb_rb, frb_flavor = "lie", frb_weight;
  c_frb->add_option("--algebra", frb_algebra)->required();
  c_frb->add_option("--rb", frb_rb)->required();
  c_frb->add_option("--flavor", frb_flavor, "lie or assoc");
  c_frb->add_option("--weight", frb_weight);

  // extract-rb
  auto* c_erb = app.add_subcommand("extract-rb", "recover R from a structure");
  std::string erb_input;
  c_erb->add_option("--input", erb_input)->required();

  // descend
  auto* c_dsc =
      app.add_subcommand("descend", "post-associative to post-Lie");
  std::string dsc_input;
  c_dsc->add_option("--input", dsc_input)->required();

  // h1
  auto* c_h1 = app.add_subcommand("h1", "first cohomology dimensions");
  std::string h1_input, h1_flavor = "lie";
  c_h1->add_option("--input", h1_input)->required();
  c_h1->add_option("--flavor", h1_flavor, "lie or assoc");

  // decompose
  auto* c_dec = app.add_subcommand("decompose", "decomposition toolbox");
  c_dec->require_subcommand(1);
  auto* c_dec_v = c_dec->add_subcommand("verify", "verify a decomposition");
  std::string decv_input;
  c_dec_v->add_option("--input", decv_input)->required();
  auto* c_dec_i = c_dec->add_subcommand("instance", "named instance");
  std::string deci_name;
  c_dec_i->add_option("name", deci_name)->required();
  auto* c_dec_c = c_dec->add_subcommand("counterexample", "Example 4.10 shape");
  int decc_n = 2;
  c_dec_c->add_option("--n", decc_n)->required();
  auto* c_dec_n = c_dec->add_subcommand("nilsum", "Kegel nilpotency check");
  std::string decn_input;
  c_dec_n->add_option("--input", decn_input)->required();

  // catalog / fingerprint
  app.add_subcommand("catalog", "list registered constructors");
  auto* c_fp = app.add_subcommand("fingerprint", "basis-change invariants");
  std::string fp_algebra;
  c_fp->add_option("--algebra", fp_algebra)->required();

  CLI11_PARSE(app, argc, argv);

  RunReport out;
  try {
    FieldSpec field = FieldSpec::parse(field_name);
    bool d4 = std::find(features.begin(), features.end(), "d4") !=
              features.end();

    if (c_va->parsed()) {
      out.verb = "verify-algebra";
      json aj;
      if (file_exists(va_algebra)) {
        aj = load_json_file(va_algebra);
      } else {
        aj = algebra_to_json(catalog_make(va_algebra, field));
      }
      std::string declared = aj.at("kind").get<std::string>();
      std::string law = va_law.empty() ? declared : va_law;
      if (law == "general") {
        throw std::invalid_argument("pick a law with --law lie|assoc");
      }
      aj["kind"] = "general";  // load without constructor enforcement
      Algebra a = algebra_from_json(aj);
      Report rep = check_identities(
          a, law == "lie" ? LawKind::Lie : LawKind::Associativity);
      out.payload = json{{"law", law}, {"dim", a.dim()}};
      fill_from_report(out, rep);
    } else if (c_vrb->parsed()) {
      out.verb = "verify-rb";
      Algebra a = load_algebra(vrb_algebra, field);
      RBOperator r = load_rb(vrb_rb, a.field(), vrb_weight);
      Report rep = verify_rb(a, r);
      out.payload = json{{"weight", r.weight.str()}, {"dim", a.dim()}};
      fill_from_report(out, rep);
    } else if (c_mk->parsed()) {
      out.verb = "make-rb";
      Algebra a = load_algebra(mk_algebra, field);
      Scalar w = Scalar::from_string(a.field(), mk_weight);
      RBOperator r{Matrix(a.dim(), a.dim(), a.field()), w};
      if (mk_zero) {
        // already zero
      } else if (mk_negid) {
        r.matrix = Matrix::identity(a.dim(), a.field()).scaled(-w);
      } else if (!mk_s1.empty() && !mk_s2.empty()) {
        Subspace s1 = subspace_from_json(load_json_file(mk_s1));
        Subspace s2 = subspace_from_json(load_json_file(mk_s2));
        r = from_splitting(a, s1, s2);
      } else {
        throw std::invalid_argument(
            "pick one of --zero, --neg-id, or --s1/--s2");
      }
      out.payload = rb_to_json(r);
    } else if (c_ind->parsed()) {
      out.verb = "induce";
      Algebra a = load_algebra(ind_algebra, field);
      RBOperator r = load_rb(ind_rb, a.field(), ind_weight);
      out.payload = algebra_to_json(induced_algebra(a, r));
    } else if (c_tw->parsed()) {
      out.verb = "tower";
      Algebra a = load_algebra(tw_algebra, field);
      RBOperator r = load_rb(tw_rb, a.field(), tw_weight);
      Tower t = tower(a, r, tw_steps);
      json levels = json::array();
      for (const Algebra& lv : t.levels) levels.push_back(algebra_to_json(lv));
      out.payload = json{{"steps", t.steps()}, {"levels", levels}};
      if (r.weight.is_one()) {
        json chains = json::array();
        for (int i = 1; i <= t.steps(); ++i) {
          Report rep = kernel_chain(t, i);
          chains.push_back(json{{"i", i}, {"pass", rep.pass}});
          if (!rep.pass) fill_from_report(out, rep);
        }
        out.payload["kernel_chains"] = chains;
      }
    } else if (c_srb->parsed()) {
      out.verb = "search-rb";
      Algebra a = load_algebra(srb_algebra, field);
      SearchOptions opts;
      opts.budget = budget;
      auto sols =
          search_rb_exhaustive(a, Scalar::from_string(a.field(), srb_weight),
                               opts);
      json list = json::array();
      int spectrum_ok = 0;
      for (const RBOperator& r : sols) {
        list.push_back(rb_to_json(r));
        if (spectrum_check(r)) ++spectrum_ok;
      }
      out.payload = json{{"count", static_cast<long long>(sols.size())},
                         {"spectrum_ok", spectrum_ok},
                         {"operators", list}};
    } else if (c_vpl->parsed()) {
      out.verb = "verify-post-lie";
      PostLieStructure p = post_lie_from_json(load_json_file(vpl_input));
      fill_from_report(out, verify_post_lie(p));
    } else if (c_vpa->parsed()) {
      out.verb = "verify-post-assoc";
      PostAssocStructure p = post_assoc_from_json(load_json_file(vpa_input));
      fill_from_report(out, verify_post_assoc(p));
    } else if (c_frb->parsed()) {
      out.verb = "from-rb";
      Algebra a = load_algebra(frb_algebra, field);
      RBOperator r = load_rb(frb_rb, a.field(), frb_weight);
      if (frb_flavor == "lie") {
        out.payload = post_lie_to_json(from_rb_lie(a, r));
      } else if (frb_flavor == "assoc") {
        out.payload = post_assoc_to_json(from_rb_assoc(a, r));
      } else {
        throw std::invalid_argument("--flavor must be lie or assoc");
      }
    } else if (c_erb->parsed()) {
      out.verb = "extract-rb";
      PostAssocStructure p = post_assoc_from_json(load_json_file(erb_input));
      ExtractResult res = extract_rb(p);
      if (res.rb) {
        out.payload = rb_to_json(*res.rb);
      } else {
        out.payload = json{{"rb_derived", false}};
        fill_from_report(out, res.report);
      }
    } else if (c_dsc->parsed()) {
      out.verb = "descend";
      PostAssocStructure p = post_assoc_from_json(load_json_file(dsc_input));
      out.payload = post_lie_to_json(commutator_descent(p));
    } else if (c_h1->parsed()) {
      out.verb = "h1";
      if (h1_flavor == "lie") {
        Representation rep =
            representation_from_json(load_json_file(h1_input));
        auto [z1, b1] = z1_b1_lie(rep);
        out.payload = json{{"z1_dim", z1.dim()},
                           {"b1_dim", b1.dim()},
                           {"h1_dim", z1.dim() - b1.dim()}};
      } else if (h1_flavor == "assoc") {
        Bimodule bim = bimodule_from_json(load_json_file(h1_input));
        auto [z1, b1] = z1_b1_assoc(bim);
        out.payload = json{{"z1_dim", z1.dim()},
                           {"b1_dim", b1.dim()},
                           {"h1_dim", z1.dim() - b1.dim()}};
      } else {
        throw std::invalid_argument("--flavor must be lie or assoc");
      }
    } else if (c_dec->parsed()) {
      if (c_dec_v->parsed()) {
        out.verb = "decompose-verify";
        Decomposition d =
            decomposition_from_json(load_json_file(decv_input));
        out.payload = decomposition_report_json(d);
        if (!out.payload["is_sum"].get<bool>()) {
          Subspace sum = subspace_sum(d.s1(), d.s2());
          for (int i = 0; i < d.ambient().dim(); ++i) {
            Vec e = unit_vec(d.ambient().dim(), i, d.ambient().field());
            if (!sum.contains(e)) {
              fail_with_witness(out, "sum-deficient", {i}, e);
              break;
            }
          }
        }
      } else if (c_dec_i->parsed()) {
        out.verb = "decompose-instance";
        Decomposition d = onishchik_instance(deci_name, d4);
        out.payload = decomposition_report_json(d);
        out.payload["name"] = deci_name;
      } else if (c_dec_c->parsed()) {
        out.verb = "decompose-counterexample";
        Decomposition d = counterexample(decc_n);
        out.payload = decomposition_report_json(d);
        out.payload["ambient_perfect"] = is_perfect_lie(d.ambient());
        out.payload["ambient_semisimple"] = is_semisimple(d.ambient());
      } else {
        out.verb = "decompose-nilsum";
        Decomposition d =
            decomposition_from_json(load_json_file(decn_input));
        NilpotentSumReport r = nilpotent_sum_check(d);
        auto nil_json = [](const NilpotencyResult& n) {
          json j{{"nilpotent", n.nilpotent}};
          if (n.nilpotent) j["index"] = n.index;
          return j;
        };
        out.payload = json{{"is_sum", r.is_sum},
                           {"component1", nil_json(r.component1)},
                           {"component2", nil_json(r.component2)},
                           {"ambient", nil_json(r.ambient)},
                           {"alarm", r.alarm}};
        if (r.alarm) {
          fail_with_witness(out, "kegel-alarm", {}, {});
        }
      }
    } else if (app.get_subcommand("catalog")->parsed()) {
      out.verb = "catalog";
      json list = json::array();
      for (const CatalogEntry& e : catalog_list()) {
        list.push_back(json{{"name", e.name}, {"dim", e.dim}});
      }
      out.payload = json{{"entries", list}};
    } else if (c_fp->parsed()) {
      out.verb = "fingerprint";
      Algebra a = load_algebra(fp_algebra, field);
      out.payload = fingerprint_to_json(invariant_fingerprint(a));
    }
  } catch (const VerificationError& e) {
    fill_from_report(out, e.report());
    out.status = "fail";
    out.diagnostic = e.what();
  } catch (const SubstructureError& e) {
    out.status = "fail";
    out.diagnostic = e.what();
    fail_with_witness(out, "closure", {e.witness_i(), e.witness_j()},
                      e.residual());
  } catch (const std::exception& e) {
    out.status = "error";
    out.diagnostic = e.what();
  }
  return emit(out, as_json);
}
