#include "gizatullin/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gizatullin/classify.hpp"
#include "gizatullin/errors.hpp"
#include "gizatullin/rigidity.hpp"

namespace giz {

using Json = nlohmann::ordered_json;

namespace {

Rational read_rational(const nlohmann::json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw ParseError("expected a rational as a string, got " + v.dump());
}

QDivisor read_divisor(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  const auto& arr = doc.at(key);
  if (!arr.is_array()) throw ParseError(std::string("'") + key + "' must be an array");
  std::vector<std::pair<Point, Rational>> terms;
  for (const auto& entry : arr) {
    if (!entry.is_array() || entry.size() != 2) {
      throw ParseError(std::string("entries of '") + key + "' must be [point, coefficient]");
    }
    terms.emplace_back(read_rational(entry[0]), read_rational(entry[1]));
  }
  return QDivisor(terms);
}

}  // namespace

DpdPair parse_pair_document(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(std::string("input is not JSON: ") + ex.what());
  }
  if (!doc.is_object()) throw ParseError("input must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "d_plus" && key != "d_minus") throw ParseError("unknown key '" + key + "'");
  }
  return DpdPair(read_divisor(doc, "d_plus"), read_divisor(doc, "d_minus"));
}

DpdPair read_pair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_pair_document(buf.str());
}

namespace {

Json divisor_json(const QDivisor& d) {
  Json arr = Json::array();
  for (const auto& [p, c] : d.terms()) arr.push_back({p.str(), c.str()});
  return arr;
}

}  // namespace

std::string write_pair_document(const DpdPair& pair) {
  Json doc;
  doc["d_plus"] = divisor_json(pair.d_plus());
  doc["d_minus"] = divisor_json(pair.d_minus());
  return doc.dump() + "\n";
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string zigzag_str(const Zigzag& z) {
  std::string s = "[[";
  for (std::size_t k = 0; k < z.size(); ++k) s += (k ? "," : "") + std::to_string(z[k]);
  return s + "]]";
}

std::string opt_point(const std::optional<Point>& p) { return p ? p->str() : "none"; }

// fiber index i is the extended divisor's C_{i+2}
std::string c_name(std::size_t fiber_index) { return "C_" + std::to_string(fiber_index + 2); }

Json feathers_json(const ExtendedDivisor& ext) {
  Json arr = Json::array();
  for (const auto& af : ext.fiber().feathers()) {
    arr.push_back({{"name", af.name},
                   {"at", c_name(af.index)},
                   {"bridge", af.feather.bridge},
                   {"box", af.feather.box}});
  }
  return arr;
}

void print_feathers(std::ostream& out, const ExtendedDivisor& ext) {
  for (const auto& af : ext.fiber().feathers()) {
    out << "feather " << af.name << " at " << c_name(af.index) << ": bridge "
        << af.feather.bridge << " box " << render_chain(af.feather.box) << "\n";
  }
}

struct Options {
  bool json = false;
  std::string file;
  bool reversed = false;
  std::string dot;
  std::int64_t a = 0;
  std::int64_t b = 0;
};

int cmd_analyze(const Options& o, std::ostream& out) {
  const DpdPair pair = read_pair_file(o.file);
  const auto g = gizatullin_points(pair);
  if (!g) throw NotGizatullin("a fractional part is supported at two or more points");
  const bool toric = is_toric(pair);
  const auto sing = singular_points(pair);
  Json j;
  j["d_plus"] = divisor_json(pair.d_plus());
  j["d_minus"] = divisor_json(pair.d_minus());
  j["gizatullin"] = true;
  j["p_plus"] = opt_point(g->p_plus);
  j["p_minus"] = opt_point(g->p_minus);
  j["toric"] = toric;
  j["smooth"] = sing.empty();
  Json sj = Json::array();
  for (const auto& s : sing) sj.push_back({{"point", s.p.str()}, {"delta", s.delta}, {"e", s.e}});
  j["singular_points"] = sj;
  Zigzag z;
  if (toric) {
    const ToricType t = toric_type(pair);
    j["toric_type"] = {t.d, t.e};
    z = toric_zigzag(t.d, t.e);
  } else {
    z = boundary_zigzag(pair);
    j["w_s"] = parabolic_weight(pair);
  }
  j["zigzag"] = z;
  if (o.json) {
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << "D_+: " << pair.d_plus().str() << "\n";
  out << "D_-: " << pair.d_minus().str() << "\n";
  out << "gizatullin: yes\n";
  out << "p_+: " << opt_point(g->p_plus) << "\n";
  out << "p_-: " << opt_point(g->p_minus) << "\n";
  if (toric) {
    const ToricType t = toric_type(pair);
    out << "toric: yes (d,e)=(" << t.d << "," << t.e << ")\n";
  } else {
    out << "toric: no\n";
  }
  out << "smooth: " << yes_no(sing.empty()) << "\n";
  out << "singular points:";
  if (sing.empty()) out << " none";
  for (const auto& s : sing) out << " " << s.p << ":(" << s.delta << "," << s.e << ")";
  out << "\n";
  out << "zigzag: " << zigzag_str(z) << "\n";
  if (!toric) out << "w_s: " << parabolic_weight(pair) << "\n";
  return exit_ok;
}

int cmd_extended(const Options& o, std::ostream& out, std::ostream& err) {
  DpdPair pair = read_pair_file(o.file);
  if (o.reversed) pair = pair.swapped();
  const ExtendedDivisor ext = extended_divisor(pair);
  if (!o.dot.empty()) {
    std::ofstream dot(o.dot);
    if (!dot) {
      err << "error: cannot write " << o.dot << "\n";
      return exit_failure;
    }
    dot << to_dot(ext.tree());
  }
  if (o.json) {
    Json j;
    j["reversed"] = o.reversed;
    j["zigzag"] = ext.zigzag();
    j["s"] = ext.s_index();
    j["extended"] = render_ascii(ext);
    j["feathers"] = feathers_json(ext);
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << "zigzag: " << zigzag_str(ext.zigzag()) << "\n";
  out << "s: " << ext.s_index() << "\n";
  out << "extended: " << render_ascii(ext) << "\n";
  print_feathers(out, ext);
  return exit_ok;
}

int cmd_rigidity(const Options& o, std::ostream& out) {
  DpdPair pair = read_pair_file(o.file);
  if (o.reversed) pair = pair.swapped();
  const ExtendedDivisor ext = extended_divisor(pair);
  const FiberGraph& f = ext.fiber();
  const RigidityReport r = is_rigid(f);
  auto fname = [&](std::size_t j) { return f.feathers()[j].name; };
  if (o.json) {
    Json j;
    j["reversed"] = o.reversed;
    j["extended"] = render_ascii(ext);
    j["distinguished"] = r.distinguished;
    j["all_bridges_minus_one"] = r.all_bridges_minus_one;
    Json mothers = Json::object();
    for (std::size_t k = 0; k < r.mothers.size(); ++k) mothers[fname(k)] = c_name(r.mothers[k]);
    j["mothers"] = mothers;
    Json jumps = Json::array();
    for (const auto& jp : r.jumps) {
      jumps.push_back({{"feather", fname(jp.feather)},
                       {"from", c_name(jp.from)},
                       {"to", c_name(jp.to)}});
    }
    j["jumps"] = jumps;
    Json gens = Json::array();
    for (const auto& g : r.generalizations) {
      gens.push_back({{"feather", fname(g.feather)},
                      {"from", c_name(g.from)},
                      {"to", c_name(g.to)}});
    }
    j["generalizations"] = gens;
    j["stable_generalization"] = r.stable_generalization;
    j["stable_specialization"] = r.stable_specialization;
    j["rigid"] = r.rigid;
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << "extended: " << render_ascii(ext) << "\n";
  out << "distinguished: " << yes_no(r.distinguished) << "\n";
  out << "all bridges -1: " << yes_no(r.all_bridges_minus_one) << "\n";
  out << "mothers:";
  if (r.mothers.empty()) out << " none";
  for (std::size_t k = 0; k < r.mothers.size(); ++k) {
    out << " " << fname(k) << "->" << c_name(r.mothers[k]);
  }
  out << "\njumps:";
  if (r.jumps.empty()) out << " none";
  for (const auto& jp : r.jumps) {
    out << " " << fname(jp.feather) << ":" << c_name(jp.from) << "->"
        << c_name(jp.to);
  }
  out << "\ngeneralization:";
  if (r.generalizations.empty()) out << " none";
  for (const auto& g : r.generalizations) {
    out << " " << fname(g.feather) << ":" << c_name(g.from) << "->"
        << c_name(g.to);
  }
  out << "\nrigid: " << yes_no(r.rigid) << "\n";
  return exit_ok;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const DpdPair pair = read_pair_file(o.file);
  const ClassificationReport r = classify(pair);
  auto map_str = [](const std::optional<AffineMap>& m) { return m ? m->str() : std::string("none"); };
  if (o.json) {
    Json j;
    j["alpha_plus"] = r.alpha_plus;
    j["alpha_plus_fiber"] = r.alpha_plus_fiber;
    j["alpha_star"] = r.alpha_star;
    j["beta"] = r.beta;
    j["toric"] = r.toric;
    j["cstar"] = to_string(r.cstar.verdict);
    j["inverse_conjugate"] = r.cstar.inverse_conjugate ? Json(r.cstar.inverse_conjugate->str()) : Json();
    j["fibrations"] = to_string(r.fibrations.count);
    j["psi"] = r.fibrations.psi ? Json(r.fibrations.psi->str()) : Json();
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << "alpha_plus: " << yes_no(r.alpha_plus) << "\n";
  out << "alpha_plus (fiber form): " << yes_no(r.alpha_plus_fiber) << "\n";
  out << "alpha_star: " << yes_no(r.alpha_star) << "\n";
  out << "beta: " << yes_no(r.beta) << "\n";
  out << "toric: " << yes_no(r.toric) << "\n";
  out << "cstar: " << to_string(r.cstar.verdict) << "\n";
  out << "inverse conjugate: " << map_str(r.cstar.inverse_conjugate) << "\n";
  out << "fibrations: " << to_string(r.fibrations.count) << "\n";
  out << "psi: " << map_str(r.fibrations.psi) << "\n";
  return exit_ok;
}

int cmd_toric(const Options& o, std::ostream& out) {
  const Zigzag z = toric_zigzag(o.a, o.b);
  const int classes = toric_classes(o.a, o.b);
  if (o.json) {
    Json j;
    j["d"] = o.a;
    j["e"] = o.b;
    j["zigzag"] = z;
    j["classes"] = classes;
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << "toric (d,e)=(" << o.a << "," << o.b << ")\n";
  out << "zigzag: " << zigzag_str(z) << "\n";
  out << "classes: " << classes << "\n";
  return exit_ok;
}

int cmd_dg(const Options& o, std::ostream& out) {
  const DanilovGizatullin dg = danilov_gizatullin(o.a, o.b);
  if (o.json) {
    Json j;
    j["d_plus"] = divisor_json(dg.pair.d_plus());
    j["d_minus"] = divisor_json(dg.pair.d_minus());
    j["zigzag"] = dg.ext.zigzag();
    j["s"] = dg.ext.s_index();
    j["extended"] = render_ascii(dg.ext);
    j["feathers"] = feathers_json(dg.ext);
    out << j.dump(2) << "\n";
    return exit_ok;
  }
  out << "D_+: " << dg.pair.d_plus().str() << "\n";
  out << "D_-: " << dg.pair.d_minus().str() << "\n";
  out << "zigzag: " << zigzag_str(dg.ext.zigzag()) << "\n";
  out << "extended: " << render_ascii(dg.ext) << "\n";
  print_feathers(out, dg.ext);
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boundary zigzags, extended divisors and rigidity for Gizatullin C*-surfaces",
               "gizatullin"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");

  auto* analyze = app.add_subcommand("analyze", "validity, flags, singular points and zigzag");
  analyze->add_option("file", o.file, "input JSON")->required();
  auto* extended = app.add_subcommand("extended", "extended divisor");
  extended->add_option("file", o.file, "input JSON")->required();
  extended->add_flag("--reversed", o.reversed, "swap D_+ and D_-");
  extended->add_option("--dot", o.dot, "write the divisor as a DOT file");
  auto* rigidity = app.add_subcommand("rigidity", "distinguished and rigidity analysis");
  rigidity->add_option("file", o.file, "input JSON")->required();
  rigidity->add_flag("--reversed", o.reversed, "swap D_+ and D_-");
  auto* classify_cmd = app.add_subcommand("classify", "uniqueness and fibration classes");
  classify_cmd->add_option("file", o.file, "input JSON")->required();
  auto* toric = app.add_subcommand("toric", "toric surface V_{d,e}");
  toric->add_option("d", o.a)->required();
  toric->add_option("e", o.b)->required();
  auto* dg = app.add_subcommand("dg", "Danilov-Gizatullin pair for (k, r)");
  dg->add_option("k", o.a)->required();
  dg->add_option("r", o.b)->required();

  std::vector<std::string> argv_store{"gizatullin"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_invalid;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (extended->parsed()) return cmd_extended(o, out, err);
    if (rigidity->parsed()) return cmd_rigidity(o, out);
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (toric->parsed()) return cmd_toric(o, out);
    if (dg->parsed()) return cmd_dg(o, out);
  } catch (const NotGizatullin& ex) {
    err << "error: not a Gizatullin surface: " << ex.what() << "\n";
    return exit_not_gizatullin;
  } catch (const ToricInput& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_toric;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_invalid;
  } catch (const std::overflow_error& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_invalid;
  }
  return exit_failure;
}

}  // namespace giz
