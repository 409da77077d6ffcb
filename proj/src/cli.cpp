#include "bptk/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bptk/andrews_curtis.hpp"
#include "bptk/bistellar.hpp"
#include "bptk/canonical.hpp"
#include "bptk/coset_enumeration.hpp"
#include "bptk/dehn.hpp"
#include "bptk/errors.hpp"
#include "bptk/filling.hpp"
#include "bptk/tower.hpp"
#include "bptk/triangulation.hpp"

namespace bptk::cli {

namespace {

using Json = nlohmann::ordered_json;

// Not found within caps.
struct Capped {};

struct Caps {
  std::uint64_t max_cosets = 1'000'000;
  std::uint64_t max_len = 64;
  std::uint64_t max_states = 1'000'000;
  std::uint64_t max_vertices = 10;
  std::uint64_t max_depth = 12;
};

struct CapFlags {
  std::optional<std::uint64_t> max_cosets, max_len, max_states, max_vertices, max_depth;
};

Caps default_caps(const std::string& command) {
  Caps c;
  if (command == "present ac-search" || command.rfind("fill ", 0) == 0) c.max_len = 16;
  if (command == "present power-check") c.max_len = 32;
  return c;
}

std::uint64_t env_cap(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  std::size_t used = 0;
  unsigned long long x = 0;
  try {
    x = std::stoull(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(v).size() || v[0] == '-') throw ParseError(std::string("environment variable ") + name + " is not a positive integer");
  return x;
}

Caps resolve_caps(const std::string& command, const CapFlags& f) {
  Caps c = default_caps(command);
  c.max_cosets = f.max_cosets.value_or(env_cap("BPTK_MAX_COSETS", c.max_cosets));
  c.max_len = f.max_len.value_or(env_cap("BPTK_MAX_LEN", c.max_len));
  c.max_states = f.max_states.value_or(env_cap("BPTK_MAX_STATES", c.max_states));
  c.max_vertices = f.max_vertices.value_or(env_cap("BPTK_MAX_VERTICES", c.max_vertices));
  c.max_depth = f.max_depth.value_or(env_cap("BPTK_MAX_DEPTH", c.max_depth));
  for (const auto v : {c.max_cosets, c.max_len, c.max_states, c.max_vertices, c.max_depth}) {
    if (v == 0) throw ParseError("caps must be positive");
  }
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read \"" + path + "\"");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json word_json(const Word& w, const Alphabet& a) { return to_string(w, a); }

Json dehn_json(const DehnProbeResult& r, const Alphabet& a) {
  Json j;
  j["word"] = to_string(r.word, a);
  j["word_length"] = r.word.length();
  j["applications"] = r.applications ? Json(*r.applications) : Json(nullptr);
  Json steps = Json::array();
  for (const auto& s : r.certificate) {
    steps.push_back({{"relator", s.relator},
                     {"inverse", s.inverse},
                     {"rotation", s.rotation},
                     {"position", s.position},
                     {"result", word_json(s.result, a)}});
  }
  j["certificate"] = steps;
  j["explored"] = r.explored;
  j["states"] = r.states;
  j["capped"] = r.capped;
  j["reason"] = r.reason;
  return j;
}

Json simplices_json(const std::vector<Simplex>& s) {
  Json arr = Json::array();
  for (const auto& f : s) arr.push_back(f);
  return arr;
}

Json triangulation_json(const Triangulation& t) {
  return {{"dim", t.dim()}, {"f_vector", t.f_vector()}, {"euler", t.euler()}, {"facets", simplices_json(t.facets())}};
}

Json move_json(const BistellarMove& m) {
  return {{"removed", m.removed}, {"added", m.added}, {"text", to_string(m)}};
}

// Flat "key: value" lines for text output.
std::string text_of(const Json& result) {
  std::string out;
  for (auto it = result.begin(); it != result.end(); ++it) {
    out += it.key() + ": " + (it->is_string() ? it->get<std::string>() : it->dump()) + "\n";
  }
  return out;
}

struct Options {
  std::string format;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  bool timing = false;
  std::string out_path;
  CapFlags caps;

  std::optional<std::uint64_t> n;
  std::string file;
  std::string target;
  std::optional<unsigned> m;
  std::string word;
  std::optional<std::uint64_t> wn;
  std::string loop;
  std::optional<std::uint64_t> max_loop_len;
  std::string n_list;
  std::string kind;
  std::optional<unsigned> dim;
  std::string level = "pseudomanifold";
  std::string move;
  std::string file_b;
  std::uint64_t steps = 0;
  std::string value;
  std::string a, b;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--seed", o.seed, "random seed");
  sub->add_flag("--timing", o.timing, "add wall time to the record");
  sub->add_option("--out", o.out_path, "write output to a file");
  sub->add_option("--max-cosets", o.caps.max_cosets);
  sub->add_option("--max-len", o.caps.max_len);
  sub->add_option("--max-states", o.caps.max_states);
  sub->add_option("--max-vertices", o.caps.max_vertices);
  sub->add_option("--max-depth", o.caps.max_depth);
}

void add_presentation_source(CLI::App* sub, Options& o) {
  auto* n = sub->add_option("--n", o.n, "use P_n");
  auto* f = sub->add_option("--file", o.file, "presentation file");
  n->excludes(f);
}

struct Outcome {
  Json inputs = Json::object();
  Json result = Json::object();
  std::vector<std::string> positional;  // canonical argv after the command words
  std::vector<std::string> flags;       // canonical command-specific flags
  std::optional<std::string> text;      // overrides text_of(result)
  std::optional<std::string> csv;
  bool found = true;
  bool invalid = false;
};

Presentation load_presentation(const Options& o, Outcome& oc) {
  if (o.n) {
    oc.inputs["n"] = *o.n;
    oc.flags.insert(oc.flags.end(), {"--n", std::to_string(*o.n)});
    return build_Pn(*o.n);
  }
  if (!o.file.empty()) {
    oc.inputs["file"] = o.file;
    oc.flags.insert(oc.flags.end(), {"--file", o.file});
    return parse_presentation(read_file(o.file));
  }
  throw ParseError("give --n or --file");
}

Triangulation load_triangulation(const std::string& path) { return parse_triangulation(read_file(path)); }

void present_gen(const Options& o, const Caps&, Outcome& oc) {
  if (!o.n) throw ParseError("--n is required");
  const auto p = build_Pn(*o.n);
  oc.inputs["n"] = *o.n;
  oc.flags = {"--n", std::to_string(*o.n)};
  oc.text = to_text(p);
  Json rels = Json::array();
  Json lens = Json::array();
  for (const auto& r : p.relators()) {
    rels.push_back(to_string(r, p.alphabet()));
    lens.push_back(r.length());
  }
  oc.result["generators"] = p.alphabet().symbols();
  oc.result["relators"] = rels;
  oc.result["relator_lengths"] = lens;
  oc.result["v_length"] = build_v(*o.n).length();
}

void present_verify(const Options& o, const Caps& c, Outcome& oc) {
  const auto p = load_presentation(o, oc);
  const auto r = coset_enumerate(p, c.max_cosets);
  oc.result["order"] = r.order ? Json(*r.order) : Json(nullptr);
  oc.result["trivial"] = r.order && *r.order == 1;
  oc.result["cosets_defined"] = r.cosets_defined;
  oc.result["max_live"] = r.max_live;
  oc.result["coincidences"] = r.coincidences;
  oc.result["deductions"] = r.deductions;
  oc.result["capped"] = !r.order;
  oc.found = r.order.has_value();
}

void present_ac(const Options& o, const Caps& c, Outcome& oc) {
  const auto p = load_presentation(o, oc);
  Presentation target = trivial_presentation(p.alphabet());
  if (!o.target.empty()) {
    oc.inputs["target"] = o.target;
    oc.flags.insert(oc.flags.end(), {"--target", o.target});
    target = parse_presentation(read_file(o.target));
  }
  const auto r = ac_search(p, target, {c.max_depth, c.max_len, c.max_states, o.threads});
  Json moves = Json::array();
  for (const auto& m : r.moves) moves.push_back(to_string(m, p.alphabet()));
  oc.result["found"] = r.found;
  oc.result["depth"] = r.depth;
  oc.result["moves"] = moves;
  oc.result["states"] = r.states;
  oc.result["explored_depth"] = r.explored_depth;
  oc.result["reason"] = r.reason;
  oc.found = r.found;
}

void present_power(const Options& o, const Caps& c, Outcome& oc) {
  if (!o.m) throw ParseError("--m is required");
  oc.inputs["m"] = *o.m;
  oc.flags = {"--m", std::to_string(*o.m)};
  const auto r = power_check(*o.m, {c.max_len, c.max_states, o.threads});
  oc.result["m"] = r.m;
  oc.result["exponent"] = r.exponent;
  const Json probe = dehn_json(r.probe, baumslag_gersten().alphabet());
  for (const auto& [k, v] : probe.items()) oc.result[k] = v;
  oc.found = r.probe.applications.has_value();
}

void dehn_probe_cmd(const Options& o, const Caps& c, Outcome& oc) {
  Presentation p = baumslag_gersten();
  if (!o.file.empty()) {
    oc.inputs["file"] = o.file;
    oc.flags.insert(oc.flags.end(), {"--file", o.file});
    p = parse_presentation(read_file(o.file));
  }
  Word w;
  if (o.wn) {
    if (!o.word.empty()) throw ParseError("give only one of --word and --wn");
    oc.inputs["wn"] = *o.wn;
    oc.flags.insert(oc.flags.end(), {"--wn", std::to_string(*o.wn)});
    w = build_w(*o.wn);
    if (p.num_generators() < 2) throw ParseError("w_n needs generators x and t");
  } else if (!o.word.empty()) {
    oc.inputs["word"] = o.word;
    oc.flags.insert(oc.flags.end(), {"--word", o.word});
    w = parse_word(o.word, p.alphabet());
  } else {
    throw ParseError("give --word or --wn");
  }
  const auto r = dehn_probe(p, w, {c.max_len, c.max_states, o.threads});
  oc.result = dehn_json(r, p.alphabet());
  oc.found = r.applications.has_value();
}

FillCaps fill_caps(const Caps& c) { return {c.max_len, c.max_states}; }

void fill_length(const Options& o, const Caps& c, Outcome& oc) {
  const auto p = load_presentation(o, oc);
  if (o.loop.empty()) throw ParseError("--loop is required");
  oc.inputs["loop"] = o.loop;
  oc.flags.insert(oc.flags.end(), {"--loop", o.loop});
  const auto x = presentation_complex(p);
  const auto loop = parse_loop(o.loop, p.alphabet());
  const auto r = filling_length(loop, x, c.max_len, c.max_states);
  oc.result["loop"] = to_string(loop, p.alphabet());
  oc.result["length"] = loop.length();
  oc.result["fl"] = r.fl ? Json(*r.fl) : Json(nullptr);
  oc.result["lower_bound"] = r.lower_bound;
  oc.result["states"] = r.states;
  oc.result["capped"] = r.capped;
  oc.result["reason"] = r.reason;
  oc.found = r.fl.has_value();
}

void fill_ratio(const Options& o, const Caps& c, Outcome& oc) {
  const auto p = load_presentation(o, oc);
  const auto k = o.max_loop_len.value_or(4);
  oc.inputs["max_loop_len"] = k;
  oc.flags.insert(oc.flags.end(), {"--max-loop-len", std::to_string(k)});
  const auto x = presentation_complex(p);
  const auto r = fl_ratio(x, k, fill_caps(c));
  oc.result["numerator"] = r.numerator;
  oc.result["denominator"] = r.denominator;
  oc.result["ratio"] = static_cast<double>(r.numerator) / static_cast<double>(r.denominator);
  oc.result["witness"] = r.witness ? Json(to_string(*r.witness, p.alphabet())) : Json(nullptr);
  oc.result["loops"] = r.loops;
  oc.result["capped_loops"] = r.capped;
  oc.result["partial"] = r.partial();
  oc.found = !r.partial();
}

void fill_growth(const Options& o, const Caps& c, Outcome& oc) {
  if (o.n_list.empty()) throw ParseError("--n-list is required");
  std::vector<std::uint64_t> ns;
  std::stringstream ss(o.n_list);
  std::string item;
  std::string canon;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v == 0) throw ParseError("bad entry \"" + item + "\" in --n-list");
    ns.push_back(v);
    canon += (canon.empty() ? "" : ",") + std::to_string(v);
  }
  oc.inputs["n_list"] = ns;
  oc.flags = {"--n-list", canon};
  const auto rows = growth_probe(ns, fill_caps(c));
  oc.result["rows"] = Json::parse(growth_json(rows));
  oc.csv = growth_csv(rows);
  oc.text = growth_csv(rows);
  oc.found = std::none_of(rows.begin(), rows.end(), [](const GrowthRow& r) { return r.capped; });
}

void tri_gen(const Options& o, const Caps&, Outcome& oc) {
  if (o.kind != "boundary") throw ParseError("only \"boundary\" can be generated");
  if (!o.dim) throw ParseError("--dim is required");
  const auto t = boundary_of_simplex(*o.dim + 1);
  oc.positional = {o.kind};
  oc.inputs["kind"] = o.kind;
  oc.inputs["dim"] = *o.dim;
  oc.flags = {"--dim", std::to_string(*o.dim)};
  oc.text = to_text(t);
  oc.result = triangulation_json(t);
}

void tri_validate(const Options& o, const Caps&, Outcome& oc) {
  const auto t = load_triangulation(o.file);
  oc.positional = {o.file};
  oc.inputs["file"] = o.file;
  oc.inputs["level"] = o.level;
  oc.flags = {"--level", o.level};
  const auto r = validate(t, o.level == "links" ? ValidationLevel::links : ValidationLevel::pseudomanifold);
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"rule", x.rule}, {"face", x.face}, {"detail", x.detail}});
  oc.result["valid"] = r.valid;
  oc.result["violations"] = v;
  oc.result["undetermined"] = r.undetermined;
  oc.result["f_vector"] = t.f_vector();
  oc.result["euler"] = t.euler();
  oc.invalid = !r.valid;
  oc.found = r.undetermined.empty();
}

void tri_moves(const Options& o, const Caps& c, Outcome& oc) {
  const auto t = load_triangulation(o.file);
  oc.positional = {o.file};
  oc.inputs["file"] = o.file;
  Json arr = Json::array();
  for (const auto& m : enumerate_moves(t, c.max_vertices)) {
    Json j = move_json(m);
    j["facets_removed"] = m.facets_removed();
    j["facets_added"] = m.facets_added();
    arr.push_back(j);
  }
  oc.result["moves"] = arr;
  std::string text;
  for (const auto& m : enumerate_moves(t, c.max_vertices)) text += to_string(m) + "\n";
  oc.text = text;
}

void tri_apply(const Options& o, const Caps&, Outcome& oc) {
  const auto t = load_triangulation(o.file);
  if (o.move.empty()) throw ParseError("--move is required");
  const auto m = parse_move(o.move);
  oc.positional = {o.file};
  oc.inputs["file"] = o.file;
  oc.inputs["move"] = to_string(m);
  oc.flags = {"--move", to_string(m)};
  const auto r = apply_move(t, m);
  oc.text = to_text(r);
  oc.result = triangulation_json(r);
}

void tri_bfs(const Options& o, const Caps& c, Outcome& oc) {
  const auto a = load_triangulation(o.file);
  const auto b = load_triangulation(o.file_b);
  oc.positional = {o.file, o.file_b};
  oc.inputs["a"] = o.file;
  oc.inputs["b"] = o.file_b;
  const auto r = bfs_distance(a, b, {c.max_vertices, c.max_states, o.threads});
  oc.result["distance"] = r.distance ? Json(*r.distance) : Json(nullptr);
  oc.result["radius"] = r.radius;
  if (!r.distance) oc.result["lower_bound"] = r.radius + 1;
  oc.result["states"] = r.states;
  oc.result["capped"] = r.capped;
  oc.result["reason"] = r.reason;
  oc.found = r.distance.has_value();
}

void tri_walk(const Options& o, const Caps& c, Outcome& oc) {
  const auto t = load_triangulation(o.file);
  oc.positional = {o.file};
  oc.inputs["file"] = o.file;
  oc.inputs["steps"] = o.steps;
  oc.flags = {"--steps", std::to_string(o.steps)};
  const auto r = random_walk(t, o.steps, o.seed, c.max_vertices);
  Json moves = Json::array();
  for (const auto& m : r.moves) moves.push_back(to_string(m));
  oc.result["steps_taken"] = r.moves.size();
  oc.result["moves"] = moves;
  oc.result["f_trace"] = r.f_trace;
  oc.result["final"] = triangulation_json(r.final);
  std::string csv = "step";
  for (std::size_t i = 0; i <= t.dim(); ++i) csv += ",f" + std::to_string(i);
  csv += "\n";
  for (std::size_t s = 0; s < r.f_trace.size(); ++s) {
    csv += std::to_string(s);
    for (const auto f : r.f_trace[s]) csv += "," + std::to_string(f);
    csv += "\n";
  }
  oc.csv = csv;
  oc.text = to_text(r.final);
}

void tower_eval(const Options& o, const Caps&, Outcome& oc) {
  TowerValue v = E(0);
  if (o.m) {
    if (!o.value.empty()) throw ParseError("give only one of --m and --value");
    oc.inputs["m"] = *o.m;
    oc.flags = {"--m", std::to_string(*o.m)};
    v = E(*o.m);
  } else if (!o.value.empty()) {
    oc.inputs["value"] = o.value;
    oc.flags = {"--value", o.value};
    v = parse_tower(o.value);
  } else {
    throw ParseError("give --m or --value");
  }
  oc.result["value"] = v.to_string();
  oc.result["exact"] = v.is_exact();
  oc.result["height"] = v.height();
  if (v.is_exact()) oc.result["bits"] = v.value() == 0 ? 0 : boost::multiprecision::msb(v.value()) + 1;
  oc.text = v.to_string() + "\n";
}

void tower_cmp(const Options& o, const Caps&, Outcome& oc) {
  const auto a = parse_tower(o.a);
  const auto b = parse_tower(o.b);
  oc.positional = {o.a, o.b};
  oc.inputs["a"] = o.a;
  oc.inputs["b"] = o.b;
  const auto c = compare(a, b);
  const std::string rel = c < 0 ? "<" : c > 0 ? ">" : "=";
  oc.result["relation"] = rel;
  oc.result["a"] = a.to_string();
  oc.result["b"] = b.to_string();
  oc.text = o.a + " " + rel + " " + o.b + "\n";
}

using Handler = void (*)(const Options&, const Caps&, Outcome&);

struct Leaf {
  std::string group;
  std::string name;
  Handler handler;
  std::string default_format;
  CLI::App* app = nullptr;
};

int emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return 0;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw ParseError("cannot write \"" + o.out_path + "\"");
  f << text;
  return 0;
}

int run_leaf(const Leaf& leaf, Options& o, std::ostream& out) {
  const std::string command = leaf.group + " " + leaf.name;
  const Caps caps = resolve_caps(command, o.caps);
  if (o.format.empty()) o.format = leaf.default_format;
  Outcome oc;
  const auto t0 = std::chrono::steady_clock::now();
  leaf.handler(o, caps, oc);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::vector<std::string> argv{leaf.group, leaf.name};
  argv.insert(argv.end(), oc.positional.begin(), oc.positional.end());
  argv.insert(argv.end(), oc.flags.begin(), oc.flags.end());
  const std::vector<std::pair<std::string, std::uint64_t>> cap_list{{"max_cosets", caps.max_cosets},
                                                                    {"max_len", caps.max_len},
                                                                    {"max_states", caps.max_states},
                                                                    {"max_vertices", caps.max_vertices},
                                                                    {"max_depth", caps.max_depth}};
  Json cap_json = Json::object();
  for (const auto& [k, v] : cap_list) {
    cap_json[k] = v;
    std::string flag = "--" + k;
    std::replace(flag.begin(), flag.end(), '_', '-');
    argv.insert(argv.end(), {flag, std::to_string(v)});
  }
  argv.insert(argv.end(), {"--seed", std::to_string(o.seed), "--threads", std::to_string(o.threads), "--format", o.format});
  if (o.timing) argv.push_back("--timing");
  if (!o.out_path.empty()) argv.insert(argv.end(), {"--out", o.out_path});

  Json config;
  config["command"] = command;
  config["caps"] = cap_json;
  config["seed"] = o.seed;
  config["threads"] = o.threads;
  config["format"] = o.format;
  config["timing"] = o.timing;
  config["inputs"] = oc.inputs;
  config["output"] = o.out_path.empty() ? Json(nullptr) : Json(o.out_path);
  config["argv"] = argv;
  if (o.timing) oc.result["wall_time_s"] = wall;

  if (o.format == "json") {
    Json record;
    record["config"] = config;
    record["result"] = oc.result;
    emit(record.dump(2) + "\n", o, out);
  } else if (o.format == "csv") {
    if (!oc.csv) throw ParseError("csv output is not available for \"" + command + "\"");
    emit(*oc.csv, o, out);
  } else {
    emit(oc.text ? *oc.text : text_of(oc.result), o, out);
  }
  if (oc.invalid) return 1;
  return oc.found ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toolkit for balanced presentations, Dehn probes, filling length and bistellar moves", "bptk"};
  app.require_subcommand(0, 1);
  std::string config_path;
  app.add_option("--config", config_path, "re-run from the config echoed in a JSON record");

  Options o;
  std::vector<Leaf> leaves{
      {"present", "gen", present_gen, "text"},
      {"present", "verify-trivial", present_verify, "json"},
      {"present", "ac-search", present_ac, "json"},
      {"present", "power-check", present_power, "json"},
      {"dehn", "probe", dehn_probe_cmd, "json"},
      {"fill", "length", fill_length, "json"},
      {"fill", "ratio", fill_ratio, "json"},
      {"fill", "growth", fill_growth, "json"},
      {"tri", "gen", tri_gen, "text"},
      {"tri", "validate", tri_validate, "json"},
      {"tri", "moves", tri_moves, "json"},
      {"tri", "apply", tri_apply, "text"},
      {"tri", "bfs", tri_bfs, "json"},
      {"tri", "walk", tri_walk, "json"},
      {"tower", "eval", tower_eval, "json"},
      {"tower", "cmp", tower_cmp, "json"},
  };
  std::map<std::string, CLI::App*> groups;
  for (auto& leaf : leaves) {
    if (!groups.count(leaf.group)) {
      groups[leaf.group] = app.add_subcommand(leaf.group);
      groups[leaf.group]->require_subcommand(1);
    }
    auto* sub = groups[leaf.group]->add_subcommand(leaf.name);
    leaf.app = sub;
    add_common(sub, o);
    const std::string cmd = leaf.group + " " + leaf.name;
    if (cmd == "present gen") sub->add_option("--n", o.n, "index n >= 1");
    if (cmd == "present verify-trivial" || cmd == "present ac-search" || cmd == "fill length" || cmd == "fill ratio") {
      add_presentation_source(sub, o);
    }
    if (cmd == "present ac-search") sub->add_option("--target", o.target, "target presentation file");
    if (cmd == "present power-check") sub->add_option("--m", o.m, "0, 1 or 2 in practice");
    if (cmd == "dehn probe") {
      sub->add_option("--word", o.word, "word to probe");
      sub->add_option("--wn", o.wn, "probe w_n = [v_n, x]");
      sub->add_option("--file", o.file, "presentation file (default: Baumslag-Gersten)");
    }
    if (cmd == "fill length") sub->add_option("--loop", o.loop, "edge word, not reduced");
    if (cmd == "fill ratio") sub->add_option("--max-loop-len", o.max_loop_len, "longest loop enumerated (default 4)");
    if (cmd == "fill growth") sub->add_option("--n-list", o.n_list, "comma-separated n values");
    if (cmd == "tri gen") {
      sub->add_option("kind", o.kind, "boundary")->required();
      sub->add_option("--dim", o.dim, "manifold dimension d (gives the boundary of the (d+1)-simplex)");
    }
    if (cmd == "tri validate" || cmd == "tri moves" || cmd == "tri apply" || cmd == "tri walk") {
      sub->add_option("file", o.file, "triangulation file")->required();
    }
    if (cmd == "tri validate") sub->add_option("--level", o.level)->check(CLI::IsMember({"pseudomanifold", "links"}));
    if (cmd == "tri apply") sub->add_option("--move", o.move, "\"A -> B\"");
    if (cmd == "tri walk") sub->add_option("--steps", o.steps);
    if (cmd == "tri bfs") {
      sub->add_option("a", o.file, "first triangulation file")->required();
      sub->add_option("b", o.file_b, "second triangulation file")->required();
    }
    if (cmd == "tower eval") {
      sub->add_option("--m", o.m, "E(m)");
      sub->add_option("--value", o.value, "N, E5, E(5) or 2^k");
    }
    if (cmd == "tower cmp") {
      sub->add_option("a", o.a)->required();
      sub->add_option("b", o.b)->required();
    }
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    if (!config_path.empty()) {
      if (app.get_subcommands().size() > 0) throw ParseError("--config cannot be combined with a subcommand");
      Json j;
      try {
        j = Json::parse(read_file(config_path));
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("config: ") + e.what());
      }
      const Json& cfg = j.contains("config") ? j["config"] : j;
      if (!cfg.contains("argv") || !cfg["argv"].is_array()) throw ParseError("config has no argv");
      std::vector<std::string> again;
      for (const auto& a : cfg["argv"]) again.push_back(a.get<std::string>());
      return run(again, out, err);
    }
    for (const auto& leaf : leaves) {
      if (leaf.app->parsed()) return run_leaf(leaf, o, out);
    }
    err << app.help();
    return 1;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace bptk::cli
