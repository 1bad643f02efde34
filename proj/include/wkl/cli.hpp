#pragma once

// Job configuration, subcommand dispatch and report rendering for the `wkl`
// command-line tool. Everything here is deterministic: lists come out in a
// fixed order and every number is an integer or an exact fraction string.

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "wkl/affweyl.hpp"
#include "wkl/characters.hpp"
#include "wkl/coxeter.hpp"
#include "wkl/errors.hpp"
#include "wkl/hecke.hpp"
#include "wkl/liecore.hpp"
#include "wkl/qseries.hpp"
#include "wkl/sugawara.hpp"
#include "wkl/wstruct.hpp"

namespace wkl::cli {

inline constexpr const char* kSchema = "wkl/1";

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> s{"roots",          "classify",       "orbit",       "blocks",
                                          "kl",             "antispherical",  "character-verma",
                                          "character-simple", "ds-transform", "psi-s",
                                          "sugawara-check", "jumps",          "vacuum-char"};
  return s;
}

// ---------------------------------------------------------------------------
// Configuration

/// A validated job. Fields that a subcommand does not use are ignored, but
/// keys outside this list are rejected.
struct JobConfig {
  char family = 'A';
  int rank = 1;
  std::optional<Rational> k;
  std::optional<RatVec> lambda;
  long N = 10;
  int ball = 6;
  // Convention flags, echoed in every report header.
  ParabolicKind parabolic = ParabolicKind::Antispherical;
  EnergySign energy_sign = EnergySign::Conformal;
  bool w0_twist = false;
  FlowConvention flow = FlowConvention::Standard;
  // Subcommand parameters.
  bool affine = false;
  std::optional<std::string> word;
  ModuleKind module = ModuleKind::Simple;
  std::optional<Rational> n;
  std::optional<Rational> m;
  std::optional<long> h;
  int max_u = 6;
  std::vector<IntVec> coweights;
  std::vector<int> modes{-2, -1, 0, 1, 2};
  std::vector<Rational> levels;
  int depth = 5;
  int f0_bound = 1;
};

inline const std::set<std::string>& known_keys() {
  static const std::set<std::string> k{"type",     "rank",   "k",       "lambda",    "N",      "ball",
                                       "parabolic", "energy_sign", "w0_twist", "flow", "affine", "word",
                                       "module",   "n",      "m",       "h",         "u_degree", "coweights",
                                       "modes",    "levels", "depth",   "f0_bound"};
  return k;
}

namespace detail {

[[noreturn]] inline void field_error(const std::string& key, const std::string& what) {
  throw ConfigError("config field '" + key + "': " + what);
}

inline Rational rational_field(const std::string& key, const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
      field_error(key, e.what());
    }
  }
  field_error(key, "expected an integer or an exact fraction string such as \"-3/2\"");
}

inline long int_field(const std::string& key, const nlohmann::json& v) {
  if (v.is_number_integer()) return v.get<long>();
  if (v.is_string()) {
    try {
      std::size_t used = 0;
      long x = std::stol(v.get<std::string>(), &used);
      if (used == v.get<std::string>().size()) return x;
    } catch (const std::exception&) {
    }
  }
  field_error(key, "expected an integer");
}

inline long positive_int_field(const std::string& key, const nlohmann::json& v, long min = 1) {
  long x = int_field(key, v);
  if (x < min) field_error(key, "must be >= " + std::to_string(min));
  return x;
}

inline bool bool_field(const std::string& key, const nlohmann::json& v) {
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_string() && (v == "true" || v == "false")) return v == "true";
  field_error(key, "expected true or false");
}

inline std::string string_field(const std::string& key, const nlohmann::json& v) {
  if (!v.is_string()) field_error(key, "expected a string");
  return v.get<std::string>();
}

inline RatVec rational_list(const std::string& key, const nlohmann::json& v) {
  RatVec out;
  if (v.is_string()) {
    std::stringstream ss(v.get<std::string>());
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(rational_field(key, nlohmann::json(tok)));
  } else if (v.is_array()) {
    for (const auto& x : v) out.push_back(rational_field(key, x));
  } else if (v.is_number_integer()) {
    out.push_back(Rational(v.get<long>()));
  } else {
    field_error(key, "expected a list of exact fractions");
  }
  return out;
}

inline IntVec int_list(const std::string& key, const nlohmann::json& v) {
  IntVec out;
  if (v.is_array()) {
    for (const auto& x : v) out.push_back(int_field(key, x));
  } else if (v.is_number_integer()) {
    out.push_back(v.get<long>());
  } else {
    field_error(key, "expected a list of integers");
  }
  return out;
}

}  // namespace detail

inline JobConfig parse_config(const nlohmann::json& j) {
  using namespace detail;
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, v] : j.items())
    if (!known_keys().count(key)) throw ConfigError("unknown config key '" + key + "'");
  JobConfig c;
  if (j.contains("type")) {
    std::string t = string_field("type", j["type"]);
    if (t.size() != 1 || std::string("ABCDEFG").find(t[0]) == std::string::npos)
      field_error("type", "expected one of A B C D E F G");
    c.family = t[0];
  }
  if (j.contains("rank")) c.rank = static_cast<int>(positive_int_field("rank", j["rank"]));
  if (j.contains("k")) c.k = rational_field("k", j["k"]);
  if (j.contains("lambda")) c.lambda = rational_list("lambda", j["lambda"]);
  if (j.contains("N")) c.N = positive_int_field("N", j["N"], 0);
  if (j.contains("ball")) c.ball = static_cast<int>(positive_int_field("ball", j["ball"]));
  if (j.contains("parabolic")) c.parabolic = parse_parabolic_kind(string_field("parabolic", j["parabolic"]));
  if (j.contains("energy_sign")) c.energy_sign = parse_energy_sign(string_field("energy_sign", j["energy_sign"]));
  if (j.contains("w0_twist")) c.w0_twist = bool_field("w0_twist", j["w0_twist"]);
  if (j.contains("flow")) c.flow = parse_flow_convention(string_field("flow", j["flow"]));
  if (j.contains("affine")) c.affine = bool_field("affine", j["affine"]);
  if (j.contains("word")) c.word = string_field("word", j["word"]);
  if (j.contains("module")) {
    std::string m = string_field("module", j["module"]);
    if (m == "Verma") c.module = ModuleKind::Verma;
    else if (m == "Simple") c.module = ModuleKind::Simple;
    else if (m == "DualVerma") c.module = ModuleKind::DualVerma;
    else field_error("module", "expected Verma, Simple or DualVerma");
  }
  if (j.contains("n")) c.n = rational_field("n", j["n"]);
  if (j.contains("m")) c.m = rational_field("m", j["m"]);
  if (j.contains("h")) c.h = positive_int_field("h", j["h"]);
  if (j.contains("u_degree")) c.max_u = static_cast<int>(positive_int_field("u_degree", j["u_degree"], 0));
  if (j.contains("coweights")) {
    const auto& v = j["coweights"];
    if (!v.is_array()) field_error("coweights", "expected a list of integer lists");
    for (const auto& x : v) c.coweights.push_back(int_list("coweights", x));
  }
  if (j.contains("modes")) {
    c.modes.clear();
    for (long x : int_list("modes", j["modes"])) c.modes.push_back(static_cast<int>(x));
  }
  if (j.contains("levels")) c.levels = rational_list("levels", j["levels"]);
  if (j.contains("depth")) c.depth = static_cast<int>(positive_int_field("depth", j["depth"], 0));
  if (j.contains("f0_bound")) c.f0_bound = static_cast<int>(positive_int_field("f0_bound", j["f0_bound"], 0));
  return c;
}

/// Reads a JSON config file; parse errors carry the line and column.
inline nlohmann::json read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1 + std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n');
    throw ConfigError(path + ":" + std::to_string(line) + ": malformed JSON: " + e.what());
  }
}

/// Applies a `key=value` override. The value is read as JSON when it parses,
/// otherwise as a plain string.
inline void apply_override(nlohmann::json& j, const std::string& assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw ConfigError("override must look like key=value: '" + assignment + "'");
  std::string key = assignment.substr(0, eq), value = assignment.substr(eq + 1);
  nlohmann::json v;
  try {
    v = nlohmann::json::parse(value);
  } catch (const nlohmann::json::parse_error&) {
    v = value;
  }
  if (v.is_number_float()) v = value;  // keep decimals exact: parse them as fractions later
  j[key] = v;
}

// ---------------------------------------------------------------------------
// Reports

struct Report {
  std::string command;
  nlohmann::json conventions;
  nlohmann::json config;
  nlohmann::json result;
  std::optional<std::string> tsv_body;  // header line plus rows, for tabular results
};

inline nlohmann::json series_json(const QSeries& s) {
  nlohmann::json j = s.to_json();
  j["text"] = s.str();
  return j;
}

inline nlohmann::json config_echo(const JobConfig& c) {
  nlohmann::json j;
  j["type"] = std::string(1, c.family);
  j["rank"] = c.rank;
  if (c.k) j["k"] = to_string(*c.k);
  if (c.lambda) j["lambda"] = weight_json(*c.lambda);
  j["N"] = c.N;
  j["ball"] = c.ball;
  j["affine"] = c.affine;
  if (c.word) j["word"] = *c.word;
  j["module"] = to_string(c.module);
  if (c.n) j["n"] = to_string(*c.n);
  if (c.m) j["m"] = to_string(*c.m);
  if (c.h) j["h"] = *c.h;
  j["u_degree"] = c.max_u;
  if (!c.coweights.empty()) j["coweights"] = c.coweights;
  j["modes"] = c.modes;
  if (!c.levels.empty()) {
    nlohmann::json ls = nlohmann::json::array();
    for (const auto& l : c.levels) ls.push_back(to_string(l));
    j["levels"] = ls;
  }
  j["depth"] = c.depth;
  j["f0_bound"] = c.f0_bound;
  return j;
}

inline nlohmann::json conventions_json(const JobConfig& c) {
  return {{"parabolic", to_string(c.parabolic)},
          {"energy_sign", to_string(c.energy_sign)},
          {"w0_twist", c.w0_twist},
          {"flow", to_string(c.flow)},
          {"weights", "fundamental-weight coordinates"},
          {"level", "k = kappa / kappa_b"}};
}

namespace detail {

inline const Rational& need_k(const JobConfig& c) {
  if (!c.k) throw ConfigError("config field 'k' is required for this subcommand");
  return *c.k;
}

inline LevelWeight need_level_weight(const JobConfig& c, const RootSystem& rs) {
  if (!c.lambda) throw ConfigError("config field 'lambda' is required for this subcommand");
  if (static_cast<int>(c.lambda->size()) != rs.rank())
    throw ConfigError("config field 'lambda': expected " + std::to_string(rs.rank()) + " coordinates");
  return LevelWeight{*c.lambda, Level{need_k(c)}};
}

inline nlohmann::json central_json(const CentralCharLabel& chi) {
  return {{"rep", weight_json(chi.rep)}, {"k", to_string(chi.level.k)}, {"w0_twist", chi.w0_twist}};
}

inline CoxeterMatrix group_matrix(const JobConfig& c, const RootSystem& rs) {
  if (c.affine) return affine_coxeter_matrix(rs.cartan(), rs.theta(), rs.theta_check());
  return coxeter_matrix_from_cartan(rs.cartan());
}

inline std::string tsv_join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace detail

inline Report run(const std::string& command, const JobConfig& c) {
  using namespace detail;
  if (std::find(subcommands().begin(), subcommands().end(), command) == subcommands().end())
    throw ConfigError("unknown subcommand '" + command + "'");
  RootSystem rs = build_root_system(c.family, c.rank);
  Report rep{command, conventions_json(c), config_echo(c), nlohmann::json::object(), std::nullopt};
  nlohmann::json& r = rep.result;

  if (command == "roots") {
    r = to_json(rs);
    r["cartan"] = rs.cartan();
    r["positive_roots"] = rs.positive_roots();
    r["positive_coroots"] = rs.positive_coroots();
    r["theta"] = rs.theta();
    r["theta_check"] = rs.theta_check();
    r["rho_rhocheck"] = to_string(rs.rho_rhocheck());
    r["rhocheck_norm"] = to_string(rs.rhocheck_norm());
    r["weyl_group_order"] = rs.weyl_group_order();
  } else if (command == "classify") {
    LevelWeight lw = need_level_weight(c, rs);
    auto cl = classify_weight(rs, lw, c.ball);
    nlohmann::json walls = nlohmann::json::array();
    for (const auto& w : cl.walls_in_ball) walls.push_back(coroot_json(w));
    auto sys = integral_system(rs, lw, std::max(4, c.ball));
    nlohmann::json simple = nlohmann::json::array();
    for (const auto& s : sys.simple) simple.push_back(coroot_json(s));
    r = {{"antidominant", cl.antidominant},
         {"dominant", cl.dominant},
         {"regular", cl.regular},
         {"level_sign", lw.level.is_critical(rs) ? "critical" : lw.level.is_negative(rs) ? "negative" : "positive"},
         {"simple_pairings", weight_json(cl.simple_pairings)},
         {"walls_in_ball", walls},
         {"integral_simple_coroots", simple}};
  } else if (command == "orbit") {
    LevelWeight lw = need_level_weight(c, rs);
    auto o = orbit_and_representative(rs, lw, c.ball);
    nlohmann::json orbit = nlohmann::json::array();
    for (const auto& e : o.orbit) orbit.push_back({{"weight", weight_json(e.lam)}, {"word", e.word}});
    r = {{"orbit", orbit},
         {"antidominant", o.antidominant},
         {"dominant", o.dominant},
         {"representative", o.representative ? nlohmann::json(*o.representative) : nlohmann::json(nullptr)},
         {"truncated", o.truncated},
         {"provably_none", o.provably_none},
         {"regular", o.regular},
         {"length_bound", o.length_bound}};
  } else if (command == "blocks") {
    LevelWeight lw = need_level_weight(c, rs);
    auto b = block_decomposition(rs, lw, c.ball);
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& bl : b.blocks) {
      nlohmann::json labels = nlohmann::json::array();
      for (const auto& w : bl.labels) labels.push_back(w.word_string());
      blocks.push_back({{"representative", bl.representative.word_string()}, {"labels", labels},
                        {"key", weight_json(bl.key)}});
    }
    r = {{"blocks", blocks}, {"block_count", b.blocks.size()}, {"cosets_in_ball", b.minimal_reps.size()},
         {"truncated", b.truncated}, {"length_bound", b.length_bound}};
  } else if (command == "kl") {
    BruhatBall ball(group_matrix(c, rs), c.ball);
    KLTable kl(ball);
    const std::string conv = "ordinary(q)";
    std::vector<std::string> lines{kl_tsv_header()};
    nlohmann::json rows = nlohmann::json::array();
    for (int w = 0; w < ball.size(); ++w)
      for (int y = 0; y < ball.size(); ++y) {
        if (!ball.leq(y, w)) continue;
        KLRow row{ball.word_string(y), ball.word_string(w), kl.polynomial(y, w), conv};
        lines.push_back(kl_tsv_row(row));
        rows.push_back({{"y", row.y_word}, {"w", row.w_word}, {"polynomial", row.poly.coefficient_list()},
                        {"text", row.poly.str("q")}});
      }
    rep.tsv_body = tsv_join(lines);
    r = {{"group", c.affine ? "affine" : "finite"}, {"ball_size", ball.size()}, {"rows", rows}};
  } else if (command == "antispherical") {
    BruhatBall ball(affine_coxeter_matrix(rs.cartan(), rs.theta(), rs.theta_check()), c.ball);
    std::vector<int> J;
    for (int i = 1; i <= rs.rank(); ++i) J.push_back(i);
    ParabolicModule mod(ball, J, c.parabolic);
    std::vector<int> targets = c.word ? std::vector<int>{ball.parse_word(*c.word)} : mod.minimal_elements();
    std::vector<std::string> lines{kl_tsv_header()};
    nlohmann::json rows = nlohmann::json::array();
    for (int w : targets) {
      if (!mod.is_minimal(w)) throw DomainError("'" + ball.word_string(w) + "' is not a minimal coset representative");
      for (int y : mod.minimal_elements()) {
        if (!ball.leq(y, w)) continue;
        KLRow row{ball.word_string(y), ball.word_string(w), mod.coefficient(y, w), to_string(c.parabolic)};
        lines.push_back(kl_tsv_row(row));
        rows.push_back({{"y", row.y_word}, {"w", row.w_word}, {"polynomial", row.poly.coefficient_list()},
                        {"text", row.poly.str("v")}});
      }
    }
    rep.tsv_body = tsv_join(lines);
    r = {{"rows", rows}, {"minimal_elements_in_ball", mod.minimal_elements().size()}};
  } else if (command == "character-verma") {
    LevelWeight lw = need_level_weight(c, rs);
    auto chi = hc_project(rs, lw.lam, lw.level, c.w0_twist);
    auto e = energy_offsets(rs, chi);
    r = {{"chi", central_json(chi)},
         {"conformal_weight", to_string(e.conformal_weight)},
         {"E_delta", to_string(e.e_delta)},
         {"E_M", to_string(e.e_m)},
         {"series", series_json(ch_verma_W(rs, chi, c.N))},
         {"oprime_series", series_json(ch_verma_Oprime(rs, chi, c.N))}};
  } else if (command == "character-simple") {
    LevelWeight lw = need_level_weight(c, rs);
    SimpleCharacterEngine engine(rs, lw, c.ball, c.parabolic, c.w0_twist);
    const auto& ball = engine.ball();
    std::vector<int> targets =
        c.word ? std::vector<int>{ball.parse_word(*c.word)} : engine.module().minimal_elements();
    nlohmann::json chars = nlohmann::json::array();
    for (int w : targets) {
      auto ch = engine.character(w, c.N);
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& t : ch.terms)
        terms.push_back({{"y", t.y_word}, {"y_affine", t.y_affine_word}, {"weight", weight_json(t.weight)},
                         {"coefficient", t.coefficient.get_str()}});
      chars.push_back({{"w", ch.w_word}, {"terms", terms}, {"character", series_json(ch.character)},
                       {"nonnegative", ch.character.is_nonnegative()}});
    }
    nlohmann::json simple = nlohmann::json::array();
    for (const auto& s : engine.system().simple) simple.push_back(coroot_json(s));
    r = {{"integral_simple_coroots", simple}, {"characters", chars}};
  } else if (command == "ds-transform") {
    LevelWeight lw = need_level_weight(c, rs);
    auto chi = hc_project(rs, lw.lam, lw.level, c.w0_twist);
    auto in = ch_verma_Oprime(rs, chi, c.N);
    auto out = ds_transform(in, rs);
    auto expected = ch_verma_W(rs, chi, c.N);
    r = {{"input", series_json(in)}, {"output", series_json(out)}, {"w_verma", series_json(expected)},
         {"prefactor_exponent", to_string(ds_prefactor_exponent(rs))}, {"matches_w_verma", out == expected}};
  } else if (command == "psi-s") {
    LevelWeight lw = need_level_weight(c, rs);
    ModuleLabel in{c.module, ModuleSide::KacMoody, lw.lam, std::nullopt, lw.level};
    auto img = psi_s_label(rs, in, c.w0_twist);
    nlohmann::json out = nullptr;
    if (img) out = {{"kind", to_string(img->kind)}, {"side", to_string(img->side)}, {"chi", central_json(*img->chi)}};
    r = {{"input", {{"kind", to_string(in.kind)}, {"side", to_string(in.side)}, {"weight", weight_json(lw.lam)}}},
         {"image", out},
         {"zero", !img.has_value()}};
  } else if (command == "sugawara-check") {
    if (!c.lambda) throw ConfigError("config field 'lambda' is required for this subcommand");
    std::vector<Rational> levels = c.levels;
    if (levels.empty()) levels.push_back(need_k(c));
    std::vector<IntVec> coweights = c.coweights;
    if (coweights.empty()) coweights = {IntVec(rs.rank(), 1)};
    nlohmann::json table = nlohmann::json::array();
    std::vector<std::string> lines{"coweight\tn\tk\tmax_depth\tvectors\tresult"};
    bool all = true;
    for (const auto& k : levels) {
      auto mod = build_truncated_verma(rs, *c.lambda, k, c.depth, c.f0_bound);
      for (const auto& x : coweights)
        for (int n : c.modes) {
          auto d = check_dss(mod, x, n, c.flow);
          all = all && d.passed;
          table.push_back(to_json(d));
          std::string xs;
          for (std::size_t i = 0; i < x.size(); ++i) xs += (i ? "," : "") + std::to_string(x[i]);
          lines.push_back(xs + "\t" + std::to_string(n) + "\t" + to_string(k) + "\t" + std::to_string(d.max_depth) +
                          "\t" + std::to_string(d.vectors_checked) + "\t" + (d.passed ? "PASS" : "FAIL"));
        }
      for (const auto& x : coweights) {
        auto u = check_unit_image(mod, x, c.flow);
        all = all && u.passed;
        table.push_back({{"check", "unit-image"}, {"k", to_string(k)}, {"coweight", x},
                         {"expected", to_string(u.expected)}, {"passed", u.passed}});
      }
    }
    rep.tsv_body = tsv_join(lines);
    r = {{"checks", table}, {"all_passed", all}};
  } else if (command == "jumps") {
    if (!c.n) throw ConfigError("config field 'n' is required for this subcommand");
    long h = c.h ? *c.h : rs.coxeter_number();
    r = {{"h", h}, {"n", to_string(*c.n)}, {"jump", to_string(ideal_jump(*c.n, h))}};
    if (c.m) {
      nlohmann::json windows = nlohmann::json::array();
      for (const auto& w : generator_windows(*c.n, *c.m, rs))
        windows.push_back({{"degree", w.degree}, {"lo", to_string(w.lo)}, {"hi", to_string(w.hi)}});
      r["windows"] = windows;
    }
  } else if (command == "vacuum-char") {
    if (!c.n) throw ConfigError("config field 'n' is required for this subcommand");
    if (!is_integer(*c.n) || sgn(*c.n) < 0) throw ConfigError("config field 'n': expected a nonnegative integer");
    long n = c.n->get_num().get_si();
    auto ch = vacuum_graded_character(rs, n, c.N, c.max_u, c.energy_sign);
    r = ch.to_json();
    r["vanishing_violations"] = ch.vanishing_violations().size();
    rep.tsv_body = ch.to_csv();
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Rendering

enum class Format { Json, Tsv, Pretty };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "tsv") return Format::Tsv;
  if (s == "pretty") return Format::Pretty;
  throw ConfigError("format must be json, tsv or pretty, got '" + s + "'");
}

namespace detail {

inline void flatten(const nlohmann::json& j, const std::string& prefix, std::vector<std::string>& out) {
  if (j.is_object()) {
    if (j.empty()) out.push_back(prefix + ": {}");
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    if (j.empty()) out.push_back(prefix + ": []");
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.push_back(prefix + ": " + (j.is_string() ? j.get<std::string>() : j.dump()));
  }
}

}  // namespace detail

/// Canonical text of a report. JSON objects are key-sorted, so output is
/// byte-identical for a fixed config.
inline std::string emit_report(const Report& r, Format f) {
  if (f == Format::Json) {
    nlohmann::json j{{"schema", kSchema},
                     {"command", r.command},
                     {"conventions", r.conventions},
                     {"config", r.config},
                     {"result", r.result}};
    return j.dump(2) + "\n";
  }
  std::string header = "# schema " + std::string(kSchema) + "\n# command " + r.command + "\n";
  for (const auto& [k, v] : r.conventions.items())
    header += "# " + k + " " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  if (f == Format::Tsv) {
    if (r.tsv_body) return header + *r.tsv_body;
    std::string body = "key\tvalue\n";
    std::vector<std::string> lines;
    detail::flatten(r.result, "", lines);
    for (auto& l : lines) {
      auto colon = l.find(": ");
      body += l.substr(0, colon) + "\t" + l.substr(colon + 2) + "\n";
    }
    return header + body;
  }
  std::vector<std::string> lines;
  detail::flatten(r.result, "", lines);
  std::string body;
  for (const auto& l : lines) body += l + "\n";
  return header + body;
}

}  // namespace wkl::cli
