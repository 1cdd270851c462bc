#pragma once

#include <algorithm>
#include <array>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thc/document.hpp"
#include "thc/leibniz.hpp"
#include "thc/lifting.hpp"
#include "thc/saturation.hpp"
#include "thc/situation.hpp"
#include "thc/verify.hpp"

// Command surface. Exit codes: 0 the command's checks passed (or the
// computation succeeded), 1 a verification failed, 2 the input was bad.
// With --machine every check becomes one tab-separated record
//   check-id <TAB> status <TAB> witness
// where status is pass/fail for checks and ok for informational records, and
// the witness column is '-' when empty. Output is ASCII and deterministic.

namespace thc::cli {

struct Report {
  std::ostream& out;
  bool machine = false;

  void rec(const std::string& id, const std::string& status, const std::string& witness) const {
    if (machine) out << id << '\t' << status << '\t' << (witness.empty() ? "-" : witness) << '\n';
  }
  void line(const std::string& text) const {
    if (!machine) out << text << '\n';
  }
};

template <class T, class C>
VerifyPools<T> pools_from_doc(const Document& doc) {
  VerifyPools<T> pools;
  const auto& objs = DocAccess<C>::objects(doc);
  const auto& mors = DocAccess<C>::morphisms(doc);
  for (const auto& name : doc.object_names) {
    const auto& x = objs.at(name);
    pools.objects_a.push_back(x);
    pools.objects_s.push_back(x);
    pools.objects_b.push_back(x);
  }
  for (const auto& name : doc.morphism_names) {
    const auto& m = mors.at(name);
    pools.morphisms_a.push_back(m);
    pools.morphisms_s.push_back(m);
    pools.morphisms_b.push_back(m);
  }
  return pools;
}

template <class C>
Universe<C> universe_from_doc(const Document& doc) {
  std::vector<typename C::Object> objects;
  for (const auto& name : doc.object_names) objects.push_back(DocAccess<C>::objects(doc).at(name));
  std::vector<typename C::Morphism> morphisms;
  for (const auto& name : doc.morphism_names)
    morphisms.push_back(DocAccess<C>::morphisms(doc).at(name));
  return make_universe<C>(objects, morphisms);
}

template <class C>
MorphismClass<C> doc_class(const Document& doc, const Universe<C>& u, const std::string& name) {
  auto it = doc.classes.find(name);
  if (it == doc.classes.end()) fail("doc-name", "unknown class '" + name + "'");
  std::vector<typename C::Morphism> members;
  for (const auto& member : it->second) members.push_back(doc_morphism<C>(doc, member));
  return class_of(u, members);
}

template <class Inst>
int cmd_verify(const Document& doc, const Report& rep) {
  using C = typename Inst::CatB;
  VerificationReport vr;
  if (const auto* row = doc.find_param("corrupt-transpose-left")) {
    if (row->tokens.size() != 6)
      detail::doc_fail(row->line, "doc-params", "corrupt-transpose-left takes: a k b rank1 rank2");
    const auto& objs = DocAccess<C>::objects(doc);
    auto obj = [&](const std::string& name) {
      auto it = objs.find(name);
      if (it == objs.end()) detail::doc_fail(row->line, "doc-name", "unknown object '" + name + "'");
      return it->second;
    };
    SwapTransposeLeft<Inst> broken{Inst{},
                                   obj(row->tokens[1]),
                                   obj(row->tokens[2]),
                                   obj(row->tokens[3]),
                                   detail::doc_int(row->line, row->tokens[4]),
                                   detail::doc_int(row->line, row->tokens[5])};
    vr = verify_thc(broken, pools_from_doc<SwapTransposeLeft<Inst>, C>(doc));
  } else {
    vr = verify_thc(Inst{}, pools_from_doc<Inst, C>(doc));
  }

  rep.line("verify-thc instance=" + instance_name(doc.instance) +
           " objects=" + std::to_string(doc.object_names.size()) +
           " morphisms=" + std::to_string(doc.morphism_names.size()));
  rep.line("checks: " + std::to_string(vr.checks.size()) +
           "  cases: " + std::to_string(vr.total_cases()));
  for (const auto& c : vr.checks) {
    rep.rec(c.id, c.ok ? "pass" : "fail", c.witness);
    if (!c.ok) rep.line("FAIL " + c.id + (c.witness.empty() ? "" : "  witness: " + c.witness));
  }
  bool ok = vr.passed();
  rep.rec("result", ok ? "pass" : "fail", "");
  rep.line(std::string("result: ") + (ok ? "PASS" : "FAIL"));
  return ok ? 0 : 1;
}

template <class Inst>
int cmd_leibniz(const Document& doc, const std::string& which, const std::string& first,
                const std::string& second, const Report& rep) {
  using C = typename Inst::CatB;
  Inst inst{};
  auto arrow = [&](const std::string& name) { return ArrowObject<C>{doc_morphism<C>(doc, name)}; };

  typename C::Morphism result, leg1, leg2;
  typename C::Object apex;
  std::string leg1_id, leg2_id;
  if (which == "prod") {
    auto r = pushout_product(inst, arrow(first), arrow(second));
    result = r.result.morphism;
    leg1 = r.mediator.inj_first;
    leg2 = r.mediator.inj_second;
    apex = C::dom(result);
    leg1_id = "inj-first";
    leg2_id = "inj-second";
  } else if (which == "lhom") {
    auto r = pullback_lhom(inst, arrow(first), arrow(second));
    result = r.result.morphism;
    leg1 = r.mediator.proj_first;
    leg2 = r.mediator.proj_second;
    apex = C::cod(result);
    leg1_id = "proj-first";
    leg2_id = "proj-second";
  } else {
    auto r = pullback_rhom(inst, arrow(first), arrow(second));
    result = r.result.morphism;
    leg1 = r.mediator.proj_first;
    leg2 = r.mediator.proj_second;
    apex = C::cod(result);
    leg1_id = "proj-first";
    leg2_id = "proj-second";
  }

  bool iso = C::is_iso(result);
  rep.line("leibniz " + which + " " + first + "=" + C::describe(doc_morphism<C>(doc, first)) + " " +
           second + "=" + C::describe(doc_morphism<C>(doc, second)));
  rep.line("result: " + C::describe(result));
  rep.line("apex: " + C::describe_object(apex));
  rep.line(leg1_id + ": " + C::describe(leg1));
  rep.line(leg2_id + ": " + C::describe(leg2));
  rep.line(std::string("iso: ") + (iso ? "yes" : "no"));
  rep.rec("result", "ok", C::describe(result));
  rep.rec("apex", "ok", C::describe_object(apex));
  rep.rec(leg1_id, "ok", C::describe(leg1));
  rep.rec(leg2_id, "ok", C::describe(leg2));
  rep.rec("iso", "ok", iso ? "yes" : "no");
  return 0;
}

template <class Inst>
int cmd_lift(const Document& doc, const std::vector<std::string>& names, const Report& rep) {
  using C = typename Inst::CatB;
  Inst inst{};
  auto mor = [&](const std::string& name) { return doc_morphism<C>(doc, name); };
  if (names.empty()) fail("cli-usage", "lift needs a mode: solve, transfer or equiv");
  const std::string& mode = names[0];

  if (mode == "solve") {
    if (names.size() != 5) fail("cli-usage", "lift solve takes: left right top bottom");
    auto p = make_lifting_problem<C>(ArrowObject<C>{mor(names[1])}, ArrowObject<C>{mor(names[2])},
                                     mor(names[3]), mor(names[4]));
    auto sols = solve_all(p);
    rep.line("lift solve left=" + C::describe(p.left.morphism) +
             " right=" + C::describe(p.right.morphism));
    rep.line("top: " + C::describe(p.top));
    rep.line("bottom: " + C::describe(p.bottom));
    rep.line("solutions: " + std::to_string(sols.size()));
    for (std::size_t i = 0; i < sols.size(); ++i) {
      rep.line(std::to_string(i + 1) + ": " + C::describe(sols[i].diagonal));
      rep.rec("solution-" + std::to_string(i + 1), "ok", C::describe(sols[i].diagonal));
    }
    rep.rec("solutions", "ok", std::to_string(sols.size()));
    return 0;
  }

  if (mode == "transfer") {
    if (names.size() != 6) fail("cli-usage", "lift transfer takes: f u g top bottom");
    ArrowObject<C> f{mor(names[1])}, u{mor(names[2])}, g{mor(names[3])};
    auto prod = pushout_product(inst, f, u);
    auto p = make_lifting_problem<C>(prod.result, g, mor(names[4]), mor(names[5]));
    auto lp = phi_problem(inst, f, u, g, p);
    auto rp = phi_r_problem(inst, f, u, g, p);
    rep.line("lift transfer f=" + C::describe(f.morphism) + " u=" + C::describe(u.morphism) +
             " g=" + C::describe(g.morphism));
    rep.line("base: left=" + C::describe(p.left.morphism) +
             " right=" + C::describe(p.right.morphism));
    rep.line("lhom: left=" + C::describe(lp.left.morphism) +
             " right=" + C::describe(lp.right.morphism));
    rep.line("rhom: left=" + C::describe(rp.left.morphism) +
             " right=" + C::describe(rp.right.morphism));
    auto sols = solve_all(p);
    rep.line("solutions: " + std::to_string(sols.size()));
    rep.rec("solutions", "ok", std::to_string(sols.size()));
    for (std::size_t i = 0; i < sols.size(); ++i) {
      auto beta = transfer_solution_to_lhom(inst, f, u, g, p, sols[i]);
      auto gamma = transfer_solution_to_rhom(inst, f, u, g, p, sols[i]);
      std::string row = "base=" + C::describe(sols[i].diagonal) +
                        " lhom=" + C::describe(beta.diagonal) +
                        " rhom=" + C::describe(gamma.diagonal);
      rep.line(std::to_string(i + 1) + ": " + row);
      rep.rec("transfer-" + std::to_string(i + 1), "ok", row);
    }
    return 0;
  }

  if (mode == "equiv") {
    if (names.size() != 4) fail("cli-usage", "lift equiv takes: f u g");
    auto er = check_tri_equivalence(inst, ArrowObject<C>{mor(names[1])},
                                    ArrowObject<C>{mor(names[2])}, ArrowObject<C>{mor(names[3])});
    rep.line("lift equiv f=" + names[1] + " u=" + names[2] + " g=" + names[3]);
    rep.line(std::string("prod-side: ") + (er.prod_side ? "true" : "false"));
    rep.line(std::string("lhom-side: ") + (er.lhom_side ? "true" : "false"));
    rep.line(std::string("rhom-side: ") + (er.rhom_side ? "true" : "false"));
    rep.line(std::string("agree: ") + (er.agree() ? "yes" : "no"));
    rep.rec("llp-prod", "ok", er.prod_side ? "true" : "false");
    rep.rec("llp-lhom", "ok", er.lhom_side ? "true" : "false");
    rep.rec("llp-rhom", "ok", er.rhom_side ? "true" : "false");
    rep.rec("agreement", er.agree() ? "pass" : "fail", "");
    return er.agree() ? 0 : 1;
  }

  fail("cli-usage", "unknown lift mode '" + mode + "'");
}

template <class Inst>
int cmd_saturate(const Document& doc, const std::string& name, const Report& rep) {
  using C = typename Inst::CatB;
  auto universe = universe_from_doc<C>(doc);
  auto cls = doc_class<C>(doc, universe, name);
  auto sat = saturate(cls);
  rep.line("saturate " + name);
  rep.line("universe: objects=" + std::to_string(universe.objects.size()) +
           " morphisms=" + std::to_string(universe.morphisms.size()));
  rep.line("input: " + std::to_string(cls.count()));
  rep.line("saturated: " + std::to_string(sat.count()));
  rep.rec("universe", "ok",
          "objects=" + std::to_string(universe.objects.size()) +
              " morphisms=" + std::to_string(universe.morphisms.size()));
  rep.rec("input", "ok", std::to_string(cls.count()));
  rep.rec("saturated", "ok", std::to_string(sat.count()));
  int i = 0;
  for (auto id : sat.ids()) {
    ++i;
    rep.line("  " + C::describe(universe.morphisms[id]));
    rep.rec("member-" + std::to_string(i), "ok", C::describe(universe.morphisms[id]));
  }
  return 0;
}

template <class Inst>
int cmd_wfs(const Document& doc, const std::string& e_name, const std::string& m_name,
            const Report& rep) {
  using C = typename Inst::CatB;
  auto universe = universe_from_doc<C>(doc);
  auto e = doc_class<C>(doc, universe, e_name);
  auto m = doc_class<C>(doc, universe, m_name);
  auto r = is_wfs(e, m);
  rep.line("wfs e=" + e_name + " m=" + m_name);
  auto put = [&](const std::string& id, bool ok, const std::vector<std::string>& msgs) {
    rep.rec(id, ok ? "pass" : "fail", msgs.empty() ? "" : msgs.front());
    rep.line(id + ": " + (ok ? "pass" : "fail"));
    for (const auto& msg : msgs) rep.line("  " + msg);
  };
  put("factorization", r.factorization_ok, r.factorization_failures);
  put("left-complement", r.left_is_complement, r.left_mismatches);
  put("right-complement", r.right_is_complement, r.right_mismatches);
  bool ok = r.passed();
  rep.rec("result", ok ? "pass" : "fail", "");
  rep.line(std::string("result: ") + (ok ? "PASS" : "FAIL"));
  return ok ? 0 : 1;
}

template <class Inst>
int cmd_closure(const Document& doc, const std::array<std::string, 4>& names, const Report& rep) {
  using C = typename Inst::CatB;
  auto universe = universe_from_doc<C>(doc);
  auto a = doc_class<C>(doc, universe, names[0]);
  auto s = doc_class<C>(doc, universe, names[1]);
  auto e = doc_class<C>(doc, universe, names[2]);
  auto m = doc_class<C>(doc, universe, names[3]);
  auto r = check_closure_theorem(Inst{}, a, s, e, m);

  rep.line("closure a=" + names[0] + " s=" + names[1] + " e=" + names[2] + " m=" + names[3]);
  auto put = [&](const std::string& id, bool ok, const std::vector<std::string>& fails,
                 const std::vector<std::string>& escapes) {
    rep.rec(id, ok ? "pass" : "fail", fails.empty() ? "" : fails.front());
    rep.line(id + ": " + (ok ? "pass" : "fail") +
             (escapes.empty() ? "" : " escapes=" + std::to_string(escapes.size())));
    for (const auto& msg : fails) rep.line("  fail: " + msg);
    for (const auto& msg : escapes) rep.line("  escape: " + msg);
    if (!escapes.empty()) rep.rec(id + "-escapes", "ok", std::to_string(escapes.size()));
  };
  put("wfs", r.wfs.passed(), {}, {});
  if (!r.wfs.passed()) {
    for (const auto& msg : r.wfs.factorization_failures) rep.line("  fail: " + msg);
    for (const auto& msg : r.wfs.left_mismatches) rep.line("  fail: " + msg);
    for (const auto& msg : r.wfs.right_mismatches) rep.line("  fail: " + msg);
  }
  put("hypothesis", r.hypothesis_ok, r.hypothesis_failures, r.hypothesis_escapes);
  put("conclusion", r.conclusion_ok, r.conclusion_failures, r.conclusion_escapes);
  put("k-containment", r.k_containment_ok, r.k_failures, {});
  put("h-containment", r.h_containment_ok, r.h_failures, {});
  rep.line("saturated-a: " + std::to_string(r.saturated_a_count));
  rep.line("saturated-s: " + std::to_string(r.saturated_s_count));
  rep.rec("saturated-a", "ok", std::to_string(r.saturated_a_count));
  rep.rec("saturated-s", "ok", std::to_string(r.saturated_s_count));
  bool ok = r.passed();
  rep.rec("result", ok ? "pass" : "fail", "");
  rep.line(std::string("result: ") + (ok ? "PASS" : "FAIL"));
  return ok ? 0 : 1;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  std::string input_path, instance_flag;
  bool machine = false;

  CLI::App app{"finite two-variable adjunctions: Leibniz constructions, lifting, saturation"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", input_path, "input document path")->required();
    sub->add_flag("--machine", machine, "emit tab-separated check records");
    sub->add_option("--instance", instance_flag, "instance kind")
        ->check(CLI::IsMember({"finset", "poset"}));
  };

  auto* verify_cmd = app.add_subcommand("verify-thc", "check the adjunction laws on the pools");
  add_common(verify_cmd);

  std::string which, first, second;
  auto* leibniz_cmd = app.add_subcommand("leibniz", "pushout product and pullback homs");
  add_common(leibniz_cmd);
  leibniz_cmd->add_option("which", which, "prod | lhom | rhom")
      ->required()
      ->check(CLI::IsMember({"prod", "lhom", "rhom"}));
  leibniz_cmd->add_option("first", first, "first morphism name")->required();
  leibniz_cmd->add_option("second", second, "second morphism name")->required();

  std::vector<std::string> lift_names;
  auto* lift_cmd = app.add_subcommand("lift", "solve | transfer | equiv");
  add_common(lift_cmd);
  lift_cmd->add_option("names", lift_names, "mode followed by morphism names");

  std::string class_name;
  auto* saturate_cmd = app.add_subcommand("saturate", "saturated closure of a morphism class");
  add_common(saturate_cmd);
  saturate_cmd->add_option("class", class_name, "class name")->required();

  std::string e_name, m_name;
  auto* wfs_cmd = app.add_subcommand("wfs", "weak factorization system check");
  add_common(wfs_cmd);
  wfs_cmd->add_option("e", e_name, "left class name")->required();
  wfs_cmd->add_option("m", m_name, "right class name")->required();

  std::string a_name, s_name, ce_name, cm_name;
  auto* closure_cmd = app.add_subcommand("closure", "saturation closure of the product hypothesis");
  add_common(closure_cmd);
  closure_cmd->add_option("a", a_name, "first factor class")->required();
  closure_cmd->add_option("s", s_name, "second factor class")->required();
  closure_cmd->add_option("e", ce_name, "left class of the system")->required();
  closure_cmd->add_option("m", cm_name, "right class of the system")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: cli-usage: " << e.what() << "\n";
    return 2;
  }

  try {
    std::optional<InstanceKind> kind_override;
    if (instance_flag == "finset") kind_override = InstanceKind::finset;
    if (instance_flag == "poset") kind_override = InstanceKind::poset;

    std::ifstream in(input_path, std::ios::binary);
    if (!in) fail("doc-io", "cannot read '" + input_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    Document doc = parse_document(buf.str(), kind_override);

    Report rep{out, machine};
    auto dispatch = [&](auto inst_tag) -> int {
      using Inst = decltype(inst_tag);
      if (verify_cmd->parsed()) return cmd_verify<Inst>(doc, rep);
      if (leibniz_cmd->parsed()) return cmd_leibniz<Inst>(doc, which, first, second, rep);
      if (lift_cmd->parsed()) return cmd_lift<Inst>(doc, lift_names, rep);
      if (saturate_cmd->parsed()) return cmd_saturate<Inst>(doc, class_name, rep);
      if (wfs_cmd->parsed()) return cmd_wfs<Inst>(doc, e_name, m_name, rep);
      return cmd_closure<Inst>(doc, {a_name, s_name, ce_name, cm_name}, rep);
    };
    return doc.instance == InstanceKind::finset ? dispatch(FinSetCartesian{})
                                                : dispatch(PosetCartesian{});
  } catch (const Error& e) {
    err << "error: " << e.code() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace thc::cli
