#pragma once

// Command-line front end. run_cli is separate from main so tests can drive it.
//
// exit codes: 0 all checks pass, 1 a mathematical check failed, 2 input or
// parse error, 3 NOT_SPLIT / LAMBDA_NOT_SYMMETRIC, 4 INDETERMINATE or UNKNOWN
// verdict present under --strict.

#include <ltk/io.hpp>
#include <ltk/ltk.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace ltk::cli {

enum Exit { Ok = 0, CheckFailed = 1, InputError = 2, NotSplitExit = 3, Undecided = 4 };

struct Options {
  std::string file;
  std::string masa;
  std::string out;
  std::string masa_out;
  std::string name;
  bool auto_masa = false;
  bool json = false;
  bool strict = false;
  bool force = false;
  bool no_reduce = false;
  std::size_t from = 0, to = 0;
};

class Outcome {
 public:
  void fail() { failed_ = true; }
  void undecided() { undecided_ = true; }
  [[nodiscard]] int code(bool strict) const {
    if (failed_) return CheckFailed;
    if (strict && undecided_) return Undecided;
    return Ok;
  }

 private:
  bool failed_ = false;
  bool undecided_ = false;
};

inline int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotSplit:
    case ErrorCode::LambdaNotSymmetric:
    case ErrorCode::Lambda0NotSymmetric: return NotSplitExit;
    case ErrorCode::IdentityFailure:
    case ErrorCode::NotLeibniz: return CheckFailed;
    default: return InputError;
  }
}

inline const char* pass_word(bool b) { return b ? "PASS" : "FAIL"; }

inline std::string roots_line(const std::vector<Root>& rs) {
  std::string s;
  for (const auto& r : rs) s += (s.empty() ? "" : " ") + root_str(r);
  return s.empty() ? "(none)" : s;
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline TripleSystem load_system(const std::string& path) { return parse_triple(read_file(path)); }

struct Frame {
  TripleSystem t;
  std::shared_ptr<const ReducedEmbedding> emb;
  std::vector<Vec> masa;
  MasaReport masa_report;
  std::string masa_source;
  std::shared_ptr<const SplitStructure> split;
};

inline Json masa_json(const Frame& f) {
  Json pairs = Json::array(), reduced = Json::array();
  for (const auto& v : f.masa) {
    reduced.push_back(vec_json(v));
    pairs.push_back(vec_json(f.emb->lift0(v)));
  }
  return Json{{"source", f.masa_source}, {"report", masa_report_json(f.masa_report)}, {"reduced", reduced}, {"pairs", pairs}};
}

/// Loads T, reduces its embedding and fixes a MASA. Returns false when the
/// MASA hypothesis fails and --force was not given.
inline bool prepare(const Options& o, Frame& f, Outcome& oc) {
  f.t = load_system(o.file);
  f.emb = std::make_shared<const ReducedEmbedding>(reduce(standard_embedding(f.t)));
  if (o.auto_masa == !o.masa.empty()) throw Error(ErrorCode::BadParam, "give exactly one of --masa FILE or --auto");
  if (o.auto_masa) {
    auto found = masa_search(f.emb->quotient);
    f.masa = found.basis;
    f.masa_report = found.report;
    f.masa_source = found.note.empty() ? "auto" : "auto:" + found.note;
  } else {
    f.masa = resolve_masa(parse_masa(read_file(o.masa)), f.t, *f.emb);
    f.masa_report = masa_verify(f.emb->quotient, f.masa);
    f.masa_source = "file";
  }
  switch (f.masa_report.verdict) {
    case MasaVerdict::Verified: break;
    case MasaVerdict::Indeterminate: oc.undecided(); break;
    default:
      oc.fail();
      if (!o.force) return false;
  }
  try {
    f.split = std::make_shared<const SplitStructure>(f.t, f.emb, f.masa);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotCommuting) throw Error(ErrorCode::NotSplit, "MASA operators on T do not commute");
    throw;
  }
  return true;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  TripleSystem t = load_system(o.file);
  auto i1 = verify_identity_1(t), i2 = verify_identity_2(t), d = verify_derived_identity(t);
  Subspace j = J_ideal(t);
  bool j_ideal = is_ideal(t, j), j_inner = kills_in_inner_slots(t, j);
  bool lie = j.is_zero();
  bool ids = i1.pass && i2.pass && d.pass;
  auto simp = is_simple(t);
  Outcome oc;
  if (!ids || !j_ideal || !j_inner) oc.fail();
  if (simp.verdict == Simplicity::Unknown) oc.undecided();
  if (o.json) {
    Json r;
    r["command"] = "verify";
    r["system"] = Json{{"name", t.name()}, {"dim", t.dim()}};
    r["identities"] = pass_word(ids);
    r["identity_1"] = identity_json(i1);
    r["identity_2"] = identity_json(i2);
    r["derived_identity"] = identity_json(d);
    r["J"] = Json{{"dim", j.dim()}, {"basis", subspace_json(j)["basis"]}, {"is_ideal", j_ideal}, {"kills_inner_slots", j_inner}};
    r["lie"] = lie;
    r["simplicity"] = simplicity_json(simp);
    emit(out, r);
  } else {
    out << "identities: " << pass_word(ids) << ", J: dim " << j.dim() << ", lie: " << (lie ? "true" : "false") << "\n";
    if (!ids)
      out << "  identity 1: " << i1.violations << " violations, identity 2: " << i2.violations << ", derived: " << d.violations << "\n";
    if (!j_ideal || !j_inner) out << "  J ideal: " << pass_word(j_ideal) << ", {T,T,J}={T,J,T}=0: " << pass_word(j_inner) << "\n";
    out << "simple: " << simplicity_name(simp.verdict) << " (" << simp.reason << "), J: dim " << simp.dim_j << "\n";
  }
  return oc.code(o.strict);
}

inline int cmd_embed(const Options& o, std::ostream& out) {
  TripleSystem t = load_system(o.file);
  auto g = standard_embedding(t);
  Subspace radical = bracket_radical(g);
  Subspace n0 = action_kernel(g);
  Outcome oc;
  Json r;
  r["command"] = "embed";
  r["system"] = Json{{"name", t.name()}, {"dim", t.dim()}};
  r["mode"] = o.no_reduce ? "unreduced" : "reduced";
  r["dim_l1"] = g.n;
  r["dim_l0_unreduced"] = g.dim0;
  r["bracket_radical_dim"] = radical.dim();
  r["action_kernel_dim"] = n0.dim();
  EmbeddingReport rep;
  if (o.no_reduce) {
    rep = verify_embedding(g);
  } else {
    auto red = reduce(g);
    rep = verify_embedding(red.quotient);
    r["dim_l0_reduced"] = red.quotient.dim0;
    r["well_defined"] = red.well_defined;
    if (!red.well_defined) oc.fail();
  }
  if (!rep.pass()) oc.fail();
  r["leibniz"] = leibniz_json(rep.leibniz);
  r["grading"] = rep.grading;
  if (o.json) {
    emit(out, r);
  } else {
    out << "L1: dim " << g.n << ", L0: dim " << g.dim0;
    if (!o.no_reduce) out << " (reduced " << r["dim_l0_reduced"].get<std::size_t>() << ")";
    out << "\n";
    out << "bracket radical: dim " << radical.dim() << ", action kernel: dim " << n0.dim() << "\n";
    out << "leibniz: " << pass_word(rep.leibniz.pass) << " (" << rep.leibniz.violations << " violations), grading: " << pass_word(rep.grading)
        << "\n";
  }
  return oc.code(o.strict);
}

inline int cmd_roots(const Options& o, std::ostream& out) {
  Frame f;
  Outcome oc;
  if (!prepare(o, f, oc)) {
    if (o.json)
      emit(out, Json{{"command", "roots"}, {"masa", masa_json(f)}});
    else
      out << "masa: " << masa_verdict_name(f.masa_report.verdict) << " (use --force to continue)\n";
    return oc.code(o.strict);
  }
  const auto& s = *f.split;
  auto sr = verify_split(s);
  auto cr = verify_containments(s);
  if (!cr.pass() || !sr.clause('d').pass || !sr.clause('e').pass) oc.fail();
  int code = oc.code(o.strict);
  if (!sr.is_split() || !sr.clause('f').pass) code = NotSplitExit;
  if (o.json) {
    Json r;
    r["command"] = "roots";
    r["system"] = Json{{"name", s.system().name()}, {"dim", s.system().dim()}};
    r["masa"] = masa_json(f);
    r["t0"] = subspace_json(s.t0());
    r["lambda1"] = roots_json(s);
    r["lambda0"] = lambda0_json(s);
    r["split"] = split_json(sr);
    r["containments"] = containment_json(cr);
    emit(out, r);
  } else {
    out << "masa: " << masa_verdict_name(f.masa_report.verdict) << ", rank " << s.rank() << "\n";
    out << "T0: dim " << s.t0().dim() << "\n";
    out << "Lambda1: " << roots_line(s.lambda1()) << "\n";
    out << "Lambda0: " << roots_line(s.lambda0()) << "\n";
    for (const auto& c : sr.clauses) out << "  " << pass_word(c.pass) << " " << c.name << (c.detail.empty() ? "" : " [" + c.detail + "]") << "\n";
    out << "split: " << (sr.is_split() ? "yes" : "no") << "\n";
    out << "containments: " << pass_word(cr.pass()) << " (" << cr.nonzero << " nonzero of " << cr.checked << ")\n";
  }
  return code;
}

inline int cmd_connect(const Options& o, std::ostream& out) {
  Frame f;
  Outcome oc;
  if (!prepare(o, f, oc)) {
    out << "masa: " << masa_verdict_name(f.masa_report.verdict) << " (use --force to continue)\n";
    return oc.code(o.strict);
  }
  const auto& s = *f.split;
  auto l1 = s.lambda1();
  if (o.from >= l1.size() || o.to >= l1.size())
    throw Error(ErrorCode::NotARoot, "root index out of range (" + std::to_string(l1.size()) + " roots)");
  const Root &a = l1[o.from], &b = l1[o.to];
  auto chain = connect(s, a, b);
  bool ok = !chain || verify_chain(s, chain->entries, a, b);
  if (!ok) oc.fail();
  if (o.json) {
    Json r;
    r["command"] = "connect";
    r["system"] = Json{{"name", s.system().name()}, {"dim", s.system().dim()}};
    r["from"] = vec_json(a);
    r["to"] = vec_json(b);
    r["chain"] = chain_json(chain);
    r["chain_verified"] = ok;
    emit(out, r);
  } else {
    out << root_str(a) << " -> " << root_str(b) << ": ";
    if (!chain) {
      out << "NONE\n";
    } else {
      out << roots_line(chain->entries) << " (ends at " << (chain->ends_at_negative ? "-beta" : "beta") << ", " << (ok ? "verified" : "INVALID")
          << ")\n";
    }
  }
  return oc.code(o.strict);
}

inline int cmd_decompose(const Options& o, std::ostream& out) {
  Frame f;
  Outcome oc;
  if (!prepare(o, f, oc)) {
    out << "masa: " << masa_verdict_name(f.masa_report.verdict) << " (use --force to continue)\n";
    return oc.code(o.strict);
  }
  auto rep = decompose(f.split);
  auto lemmas = verify_connection_lemmas(*f.split);
  if (!rep.pass() || !lemmas.pass()) oc.fail();
  if (rep.simplicity.implication == "SKIPPED") oc.undecided();
  if (o.json) {
    Json r = decomposition_json(rep, masa_json(f), &lemmas);
    emit(out, r);
  } else {
    const auto& s = *f.split;
    out << "system: " << s.system().name() << ", dim " << s.system().dim() << "\n";
    out << "masa: " << masa_verdict_name(f.masa_report.verdict) << ", rank " << s.rank() << "\n";
    out << "T0: dim " << s.t0().dim() << ", xi0: dim " << rep.xi0.dim() << ", U: dim " << rep.u.dim() << "\n";
    out << "classes: " << rep.classes.size() << "\n";
    for (std::size_t i = 0; i < rep.classes.size(); ++i) {
      const auto& c = rep.classes[i];
      out << "  [" << i << "] " << roots_line(c.class_roots) << ": T0 part dim " << c.t0_part.dim() << ", V part dim " << c.v_part.dim()
          << ", ideal " << pass_word(c.ideal_verified) << "\n";
    }
    out << "U + sum I = T: " << pass_word(rep.sum_equals_T) << "\n";
    bool cv = std::all_of(rep.cross_vanishing.begin(), rep.cross_vanishing.end(), [](const CrossCheck& c) { return c.pass; });
    out << "cross vanishing: " << pass_word(cv) << " (" << rep.cross_vanishing.size() << " checks)\n";
    out << "connection lemmas: " << pass_word(lemmas.pass()) << " (" << lemmas.checked << " checks)\n";
    out << "simple: " << simplicity_name(rep.simplicity.report.verdict) << ", single class: " << rep.simplicity.implication << "\n";
    out << "direct sum: " << rep.direct_sum.verdict << (rep.direct_sum.reason.empty() ? "" : " (" + rep.direct_sum.reason + ")") << "\n";
  }
  return oc.code(o.strict);
}

inline int cmd_ann(const Options& o, std::ostream& out) {
  TripleSystem t = load_system(o.file);
  Subspace ann = annihilator(t);
  Subspace ttt = triple_span(t);
  if (o.json) {
    emit(out, Json{{"command", "ann"},
                   {"system", Json{{"name", t.name()}, {"dim", t.dim()}}},
                   {"annihilator", subspace_json(ann)},
                   {"ttt", subspace_json(ttt)}});
  } else {
    out << "Ann(T): dim " << ann.dim() << ", {T,T,T}: dim " << ttt.dim() << " of " << t.dim() << "\n";
  }
  return Ok;
}

inline int cmd_gen(const Options& o, std::ostream& out) {
  CatalogueEntry e = catalogue(o.name);
  write_file(o.out, serialize_triple(e.system));
  if (!o.masa_out.empty()) write_file(o.masa_out, serialize_masa(e.masa, e.system.name()));
  if (o.json)
    emit(out, Json{{"command", "gen"}, {"name", e.system.name()}, {"dim", e.system.dim()}, {"out", o.out}});
  else
    out << "wrote " << o.out << (o.masa_out.empty() ? "" : " and " + o.masa_out) << "\n";
  return Ok;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leibniz triple system toolkit", "ltk"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_flag("--json", o.json, "machine-readable output");
    c->add_flag("--strict", o.strict, "exit 4 when an UNKNOWN or INDETERMINATE verdict is present");
  };
  auto masa_opts = [&](CLI::App* c) {
    c->add_option("--masa", o.masa, "MASA file (ltk-masa-v1)");
    c->add_flag("--auto", o.auto_masa, "search for a MASA");
    c->add_flag("--force", o.force, "continue when the MASA check fails");
  };
  auto* verify = app.add_subcommand("verify", "identities, J and the Lie test");
  verify->add_option("file", o.file)->required();
  common(verify);
  auto* embed = app.add_subcommand("embed", "standard embedding");
  embed->add_option("file", o.file)->required();
  embed->add_flag("--no-reduce", o.no_reduce, "check the unreduced algebra");
  common(embed);
  auto* roots = app.add_subcommand("roots", "root spaces and split verification");
  roots->add_option("file", o.file)->required();
  masa_opts(roots);
  common(roots);
  auto* conn = app.add_subcommand("connect", "connection between two roots");
  conn->add_option("file", o.file)->required();
  masa_opts(conn);
  conn->add_option("--from", o.from, "index into the sorted root list")->required();
  conn->add_option("--to", o.to, "index into the sorted root list")->required();
  common(conn);
  auto* dec = app.add_subcommand("decompose", "class ideals and decomposition");
  dec->add_option("file", o.file)->required();
  masa_opts(dec);
  common(dec);
  auto* ann = app.add_subcommand("ann", "annihilator");
  ann->add_option("file", o.file)->required();
  common(ann);
  auto* gen = app.add_subcommand("gen", "write a catalogue system");
  gen->add_option("name", o.name)->required();
  gen->add_option("--out", o.out)->required();
  gen->add_option("--masa-out", o.masa_out, "also write the canonical MASA");
  common(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return InputError;
  }
  try {
    if (*verify) return cmd_verify(o, out);
    if (*embed) return cmd_embed(o, out);
    if (*roots) return cmd_roots(o, out);
    if (*conn) return cmd_connect(o, out);
    if (*dec) return cmd_decompose(o, out);
    if (*ann) return cmd_ann(o, out);
    if (*gen) return cmd_gen(o, out);
  } catch (const Error& e) {
    if (o.json) emit(out, Json{{"error", Json{{"code", error_name(e.code())}, {"message", e.message()}}}});
    err << e.what() << "\n";
    return exit_for(e.code());
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return InputError;
  }
  return InputError;
}

}  // namespace ltk::cli
