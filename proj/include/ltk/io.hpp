#pragma once

// ltk-triple-v1 and ltk-masa-v1 files, and JSON forms of the reports.
//
// Triple file:
//   {"format": "ltk-triple-v1", "name": "sl2", "dim": 3, "basis": ["e","f","h"],
//    "products": [{"args": [0,1,0], "out": {"0": "-2"}}, ...]}
// MASA file, pair coordinates (the default):
//   {"format": "ltk-masa-v1", "coords": "pairs",
//    "vectors": [{"entries": [{"left": 0, "right": 1, "coeff": "1"}]}]}
// MASA file, reduced coordinates (catalogue systems only, "system" required):
//   {"format": "ltk-masa-v1", "coords": "reduced", "system": "sl2", "vectors": [["0","1","0"]]}

#include <ltk/catalogue.hpp>
#include <ltk/decompose.hpp>
#include <ltk/masa.hpp>

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace ltk {

using Json = nlohmann::ordered_json;

namespace detail {

inline void only_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, where + ": expected an object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) throw Error(ErrorCode::Parse, where + ": unknown key \"" + k + "\"");
  }
}

inline const Json& need(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::Parse, where + ": missing key \"" + key + "\"");
  return *it;
}

inline std::size_t as_index(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) throw Error(ErrorCode::Parse, where + ": expected a non-negative integer");
  return j.get<std::size_t>();
}

inline std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw Error(ErrorCode::Parse, where + ": expected a string");
  return j.get<std::string>();
}

inline Rational as_rational(const Json& j, const std::string& where) {
  std::string s = as_string(j, where);
  try {
    return Rational::parse(s);
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, where + ": " + e.message());
  }
}

inline std::size_t parse_key_index(const std::string& k, const std::string& where) {
  if (k.empty() || k.size() > 9 || (k.size() > 1 && k[0] == '0')) throw Error(ErrorCode::Parse, where + ": bad basis index \"" + k + "\"");
  std::size_t v = 0;
  for (char c : k) {
    if (c < '0' || c > '9') throw Error(ErrorCode::Parse, where + ": bad basis index \"" + k + "\"");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
  out << text;
}

// ---- triple systems

inline Json triple_to_json(const TripleSystem& t) {
  Json j;
  j["format"] = "ltk-triple-v1";
  j["name"] = t.name();
  j["dim"] = t.dim();
  j["basis"] = t.labels();
  Json prods = Json::array();
  for (const auto& [args, sv] : t.nonzero_entries()) {
    Json out = Json::object();
    for (const auto& [l, c] : sv->terms) out[std::to_string(l)] = c.str();
    prods.push_back(Json{{"args", {args[0], args[1], args[2]}}, {"out", out}});
  }
  j["products"] = prods;
  return j;
}

inline std::string serialize_triple(const TripleSystem& t) { return triple_to_json(t).dump(2) + "\n"; }

inline TripleSystem triple_from_json(const Json& j) {
  const std::string w = "ltk-triple-v1";
  detail::only_keys(j, {"format", "name", "dim", "basis", "products"}, w);
  if (detail::as_string(detail::need(j, "format", w), w + ".format") != "ltk-triple-v1")
    throw Error(ErrorCode::Parse, "format must be \"ltk-triple-v1\"");
  std::string name = detail::as_string(detail::need(j, "name", w), w + ".name");
  std::size_t n = detail::as_index(detail::need(j, "dim", w), w + ".dim");
  if (n > 64) throw Error(ErrorCode::Parse, "dim above 64 is not supported");
  const Json& basis = detail::need(j, "basis", w);
  if (!basis.is_array() || basis.size() != n) throw Error(ErrorCode::Parse, "basis must list dim labels");
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const auto& b : basis) {
    labels.push_back(detail::as_string(b, w + ".basis"));
    if (!seen.insert(labels.back()).second) throw Error(ErrorCode::Parse, "duplicate basis label \"" + labels.back() + "\"");
  }
  TripleSystem t(n, name, labels);
  const Json& prods = detail::need(j, "products", w);
  if (!prods.is_array()) throw Error(ErrorCode::Parse, "products must be an array");
  std::set<std::array<std::size_t, 3>> done;
  for (std::size_t p = 0; p < prods.size(); ++p) {
    std::string pw = w + ".products[" + std::to_string(p) + "]";
    const Json& e = prods[p];
    detail::only_keys(e, {"args", "out"}, pw);
    const Json& args = detail::need(e, "args", pw);
    if (!args.is_array() || args.size() != 3) throw Error(ErrorCode::Parse, pw + ".args must have three indices");
    std::array<std::size_t, 3> a{};
    for (std::size_t k = 0; k < 3; ++k) {
      a[k] = detail::as_index(args[k], pw + ".args");
      if (a[k] >= n) throw Error(ErrorCode::Parse, pw + ".args index out of range");
    }
    if (!done.insert(a).second) throw Error(ErrorCode::Parse, pw + ": duplicate args");
    const Json& out = detail::need(e, "out", pw);
    if (!out.is_object()) throw Error(ErrorCode::Parse, pw + ".out must be an object");
    Vec v(n);
    for (const auto& [k, c] : out.items()) {
      std::size_t l = detail::parse_key_index(k, pw + ".out");
      if (l >= n) throw Error(ErrorCode::Parse, pw + ".out index out of range");
      v[l] = detail::as_rational(c, pw + ".out");
    }
    if (!is_zero(v)) t.set(a[0], a[1], a[2], v);
  }
  return t;
}

inline TripleSystem parse_triple(const std::string& text) { return triple_from_json(detail::parse_text(text)); }

// ---- MASA files

struct MasaFile {
  std::string coords = "pairs";      // "pairs" | "reduced"
  std::optional<std::string> system;
  std::vector<std::vector<std::array<std::size_t, 2>>> pair_index;  // pairs mode
  std::vector<std::vector<Rational>> pair_coeff;
  std::vector<Vec> reduced;          // reduced mode
};

inline Json masa_to_json(const PairMasa& m, const std::string& system = {}) {
  Json j;
  j["format"] = "ltk-masa-v1";
  j["coords"] = "pairs";
  if (!system.empty()) j["system"] = system;
  Json vs = Json::array();
  for (const auto& v : m.vectors) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.n; ++i)
      for (std::size_t k = 0; k < m.n; ++k)
        if (!v[i * m.n + k].is_zero()) entries.push_back(Json{{"left", i}, {"right", k}, {"coeff", v[i * m.n + k].str()}});
    vs.push_back(Json{{"entries", entries}});
  }
  j["vectors"] = vs;
  return j;
}

inline std::string serialize_masa(const PairMasa& m, const std::string& system = {}) { return masa_to_json(m, system).dump(2) + "\n"; }

inline MasaFile masa_from_json(const Json& j) {
  const std::string w = "ltk-masa-v1";
  detail::only_keys(j, {"format", "coords", "system", "vectors"}, w);
  if (detail::as_string(detail::need(j, "format", w), w + ".format") != "ltk-masa-v1")
    throw Error(ErrorCode::Parse, "format must be \"ltk-masa-v1\"");
  MasaFile m;
  if (j.contains("coords")) m.coords = detail::as_string(j["coords"], w + ".coords");
  if (m.coords != "pairs" && m.coords != "reduced") throw Error(ErrorCode::Parse, "coords must be \"pairs\" or \"reduced\"");
  if (j.contains("system")) m.system = detail::as_string(j["system"], w + ".system");
  const Json& vs = detail::need(j, "vectors", w);
  if (!vs.is_array()) throw Error(ErrorCode::Parse, "vectors must be an array");
  for (std::size_t p = 0; p < vs.size(); ++p) {
    std::string vw = w + ".vectors[" + std::to_string(p) + "]";
    if (m.coords == "pairs") {
      detail::only_keys(vs[p], {"entries"}, vw);
      const Json& es = detail::need(vs[p], "entries", vw);
      if (!es.is_array()) throw Error(ErrorCode::Parse, vw + ".entries must be an array");
      std::vector<std::array<std::size_t, 2>> idx;
      std::vector<Rational> coeff;
      for (const auto& e : es) {
        detail::only_keys(e, {"left", "right", "coeff"}, vw);
        idx.push_back({detail::as_index(detail::need(e, "left", vw), vw + ".left"), detail::as_index(detail::need(e, "right", vw), vw + ".right")});
        coeff.push_back(detail::as_rational(detail::need(e, "coeff", vw), vw + ".coeff"));
      }
      m.pair_index.push_back(std::move(idx));
      m.pair_coeff.push_back(std::move(coeff));
    } else {
      if (!vs[p].is_array()) throw Error(ErrorCode::Parse, vw + " must be an array of rationals");
      Vec v;
      for (const auto& c : vs[p]) v.push_back(detail::as_rational(c, vw));
      m.reduced.push_back(std::move(v));
    }
  }
  if (m.coords == "reduced" && !m.system) throw Error(ErrorCode::Parse, "reduced coordinates require \"system\"");
  return m;
}

inline MasaFile parse_masa(const std::string& text) { return masa_from_json(detail::parse_text(text)); }

/// Pair-coordinate vectors for a system of dimension n; indices checked, independence checked.
inline PairMasa resolve_pairs(const MasaFile& m, std::size_t n) {
  if (m.coords != "pairs") throw Error(ErrorCode::BadParam, "MASA file is not in pair coordinates");
  PairMasa out{n, {}};
  EchelonBuilder<Rational> bld(n * n);
  for (std::size_t p = 0; p < m.pair_index.size(); ++p) {
    Vec v(n * n);
    for (std::size_t e = 0; e < m.pair_index[p].size(); ++e) {
      auto [i, k] = m.pair_index[p][e];
      if (i >= n || k >= n) throw Error(ErrorCode::Parse, "MASA pair index out of range");
      v[i * n + k] += m.pair_coeff[p][e];
    }
    if (!bld.add(v)) throw Error(ErrorCode::BadParam, "MASA vectors are linearly dependent");
    out.vectors.push_back(std::move(v));
  }
  return out;
}

/// Reduced L0 coordinates for the given embedding. Reduced files are accepted
/// only when `t` is the catalogue system named in the file.
inline std::vector<Vec> resolve_masa(const MasaFile& m, const TripleSystem& t, const ReducedEmbedding& emb) {
  if (m.coords == "pairs") return masa_from_pairs(emb, resolve_pairs(m, t.dim()).vectors);
  if (*m.system != t.name()) throw Error(ErrorCode::BadParam, "MASA file names system \"" + *m.system + "\" but the input is \"" + t.name() + "\"");
  if (!(catalogue(*m.system).system == t)) throw Error(ErrorCode::BadParam, "reduced coordinates need the unmodified catalogue system");
  EchelonBuilder<Rational> bld(emb.quotient.dim0);
  for (const auto& v : m.reduced) {
    if (v.size() != emb.quotient.dim0) throw Error(ErrorCode::DimensionMismatch, "reduced MASA vector has wrong length");
    if (!bld.add(v)) throw Error(ErrorCode::BadParam, "MASA vectors are linearly dependent");
  }
  return m.reduced;
}

// ---- report fragments

inline Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline Json subspace_json(const Subspace& s) {
  Json b = Json::array();
  for (const auto& v : s.basis()) b.push_back(vec_json(v));
  return Json{{"dim", s.dim()}, {"basis", b}};
}

inline Json identity_json(const IdentityReport& r) {
  Json w = Json::array();
  for (const auto& x : r.witnesses) w.push_back(Json{{"identity", x.identity}, {"args", x.args}});
  return Json{{"pass", r.pass}, {"violations", r.violations}, {"witnesses", w}};
}

inline Json leibniz_json(const LeibnizReport& r) {
  Json w = Json::array();
  for (const auto& x : r.witnesses) w.push_back(Json{x.y, x.z, x.x});
  return Json{{"pass", r.pass}, {"violations", r.violations}, {"witnesses", w}};
}

inline Json simplicity_json(const SimplicityReport& r) {
  return Json{{"verdict", simplicity_name(r.verdict)}, {"reason", r.reason}, {"dim_j", r.dim_j}, {"witness", subspace_json(r.witness)}};
}

inline Json masa_report_json(const MasaReport& r) {
  Json j{{"verdict", masa_verdict_name(r.verdict)}, {"centralizer_dim", r.centralizer_dim}};
  j["abelian_witness"] = r.abelian_witness ? Json{r.abelian_witness->first, r.abelian_witness->second} : Json(nullptr);
  j["maximal_witness"] = r.maximal_witness ? vec_json(*r.maximal_witness) : Json(nullptr);
  j["note"] = r.note;
  return j;
}

inline Json roots_json(const SplitStructure& s) {
  Json a = Json::array();
  for (const auto& [r, sp] : s.roots()) a.push_back(Json{{"root", vec_json(r)}, {"space", subspace_json(sp)}});
  return a;
}

inline Json lambda0_json(const SplitStructure& s) {
  Json a = Json::array();
  for (const auto& d : s.lambda0()) a.push_back(Json{{"root", vec_json(d)}, {"dim", s.l0_space(d).dim()}});
  return a;
}

inline Json split_json(const SplitReport& r) {
  Json c = Json::array();
  for (const auto& cl : r.clauses) c.push_back(Json{{"clause", cl.name}, {"pass", cl.pass}, {"detail", cl.detail}});
  return Json{{"is_split", r.is_split()}, {"clauses", c}, {"lambda1_symmetric", r.lambda1_symmetric}, {"lambda0_symmetric", r.lambda0_symmetric}};
}

inline Json containment_json(const ContainmentReport& r) {
  Json f = Json::array();
  for (const auto& c : r.checks)
    if (!c.pass) {
      Json args = Json::array();
      for (const auto& a : c.args) args.push_back(vec_json(a));
      f.push_back(Json{{"part", c.part}, {"args", args}});
    }
  return Json{{"pass", r.pass()}, {"checked", r.checked}, {"nonzero", r.nonzero}, {"failures", f}};
}

inline Json lemma_json(const LemmaReport& r) {
  Json f = Json::array();
  for (const auto& c : r.failures) {
    Json args = Json::array();
    for (const auto& a : c.args) args.push_back(vec_json(a));
    f.push_back(Json{{"check", c.name}, {"args", args}});
  }
  return Json{{"pass", r.pass()}, {"checked", r.checked}, {"failures", f}};
}

inline Json chain_json(const std::optional<ConnectionChain>& c) {
  if (!c) return Json(nullptr);
  Json e = Json::array();
  for (const auto& r : c->entries) e.push_back(vec_json(r));
  return Json{{"entries", e}, {"endpoint", c->ends_at_negative ? "-beta" : "beta"}};
}

/// Keys follow the documented order; the split and lemma sections come last.
inline Json decomposition_json(const DecompositionReport& rep, const Json& masa, const LemmaReport* lemmas = nullptr) {
  const SplitStructure& s = *rep.split;
  Json j;
  j["system"] = Json{{"name", s.system().name()}, {"dim", s.system().dim()}};
  j["masa"] = masa;
  j["t0"] = subspace_json(s.t0());
  j["roots"] = roots_json(s);
  j["lambda0"] = lambda0_json(s);
  Json cls = Json::array();
  for (const auto& c : rep.classes) {
    Json r = Json::array();
    for (const auto& a : c.class_roots) r.push_back(vec_json(a));
    cls.push_back(Json{{"roots", r}, {"t0_part", subspace_json(c.t0_part)}, {"v_part", subspace_json(c.v_part)}, {"ideal_verified", c.ideal_verified}});
  }
  j["classes"] = cls;
  j["xi0"] = subspace_json(rep.xi0);
  j["u"] = subspace_json(rep.u);
  j["sum_equals_T"] = rep.sum_equals_T;
  Json cv = Json::array();
  for (const auto& c : rep.cross_vanishing) cv.push_back(Json{{"classes", {c.first, c.second}}, {"family", c.family}, {"pass", c.pass}});
  j["cross_vanishing"] = cv;
  Json simp = simplicity_json(rep.simplicity.report);
  simp["single_class_implication"] = rep.simplicity.implication;
  j["simplicity"] = simp;
  const auto& d = rep.direct_sum;
  j["direct_sum"] = Json{{"verdict", d.verdict}, {"ann_zero", d.ann_zero}, {"ann_dim", d.ann_dim}, {"ttt_full", d.ttt_full}, {"ttt_dim", d.ttt_dim}, {"reason", d.reason}};
  j["split"] = split_json(rep.split_report);
  if (lemmas) j["connection_lemmas"] = lemma_json(*lemmas);
  return j;
}

}  // namespace ltk
