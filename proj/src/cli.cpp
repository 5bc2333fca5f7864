#include "binoidal/cli.hpp"

#include "binoidal/algebra.hpp"
#include "binoidal/constructions.hpp"
#include "binoidal/dot.hpp"
#include "binoidal/dsl.hpp"
#include "binoidal/error.hpp"
#include "binoidal/grading.hpp"
#include "binoidal/kernels.hpp"
#include "binoidal/rewrite.hpp"
#include "binoidal/simplicial.hpp"
#include "binoidal/spectrum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

namespace binoidal::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Settings {
  bool json = false;
  bool force = false;
  bool dot = false;
  bool oracle = false;
  std::size_t budget = kDefaultCompletionBudget;
  std::size_t degree = kDefaultWitnessDegree;
  int threads = 0;
  std::uint64_t q = 0;
  std::string format = "generic";
};

struct Output {
  Json result;
  std::string text;
  int code = kOk;
};

struct Context {
  const Settings& settings;
  std::vector<std::string> args;

  Presentation presentation(std::size_t i = 0) const { return parse_presentation(args.at(i)); }
  SimplicialComplex complex(std::size_t i = 0) const { return parse_complex(args.at(i)); }
  RewriteSystem rewrite(const Presentation& p) const { return RewriteSystem::complete(p, settings.budget); }
  Spectrum spectrum(const Presentation& p) const { return Spectrum::compute(p, {settings.force, settings.threads}); }
};

using Handler = std::function<Output(const Context&)>;

struct Verb {
  std::string name;
  std::string help;
  std::vector<std::string> positionals;
  bool variadic = false;
  Handler handler;
};

Json prime_names(const Spectrum& s, GenMask prime) {
  Json out = Json::array();
  for (std::size_t i = 0; i < s.rank(); ++i)
    if (prime >> i & 1) out.push_back(s.generators()[i]);
  return out;
}

Json big(const mpz_class& x) {
  if (x.fits_ulong_p()) return Json(x.get_ui());
  return Json(x.get_str());
}

Json group_json(const AbelianGroupData& g) {
  Json factors = Json::array();
  for (const auto& d : g.invariant_factors) factors.push_back(big(d));
  return Json{{"rank", g.rank}, {"factors", factors}};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string tuple_text(const std::vector<std::uint64_t>& v) {
  std::vector<std::string> parts;
  for (auto x : v) parts.push_back(std::to_string(x));
  return "(" + join(parts, ", ") + ")";
}

std::string complex_faces_text(const SimplicialComplex& c, const std::vector<GenMask>& sets) {
  std::vector<std::string> parts;
  for (GenMask s : sets) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < c.num_vertices(); ++i)
      if (s >> i & 1) names.push_back(c.vertices()[i]);
    parts.push_back("{" + join(names, ",") + "}");
  }
  return join(parts, ", ");
}

Json complex_json(const SimplicialComplex& c) {
  Json facets = Json::array();
  for (GenMask f : c.facets()) {
    Json face = Json::array();
    for (std::size_t i = 0; i < c.num_vertices(); ++i)
      if (f >> i & 1) face.push_back(c.vertices()[i]);
    facets.push_back(face);
  }
  return Json{{"vertices", c.vertices()}, {"facets", facets}};
}

Output presentation_output(const Presentation& p) {
  const std::string text = to_string(p);
  return {Json{{"presentation", text}}, text + "\n"};
}

Json report_json(const SeparationReport& rep, const std::optional<Grading>& grading, const Presentation& p) {
  Json j;
  j["grading"] = grading ? Json(*grading) : Json(nullptr);
  j["verdict"] = to_string(rep.verdict);
  if (rep.witness)
    j["witness"] = {{"f", format_word(rep.witness->f, p.generators())}, {"g", format_word(rep.witness->g, p.generators())}};
  else
    j["witness"] = nullptr;
  j["certified"] = rep.verdict != SeparationVerdict::Unknown;
  j["applicable_theorem"] = rep.applicable_theorem;
  return j;
}

std::string report_text(const SeparationReport& rep, const std::optional<Grading>& grading, const Presentation& p) {
  std::ostringstream os;
  os << "verdict: " << to_string(rep.verdict) << '\n';
  os << "grading: " << (grading ? tuple_text(*grading) : "none") << '\n';
  if (rep.witness)
    os << "witness: f = " << format_word(rep.witness->f, p.generators())
       << ", g = " << format_word(rep.witness->g, p.generators()) << '\n';
  return os.str();
}

std::vector<Verb> verbs() {
  std::vector<Verb> v;

  v.push_back({"spec", "prime spectrum (--dot for the Hasse diagram)", {"presentation"}, false, [](const Context& c) {
                 const auto p = c.presentation();
                 const auto s = c.spectrum(p);
                 Output o;
                 Json primes = Json::array(), heights = Json::array(), hasse = Json::array();
                 std::ostringstream os;
                 os << s.size() << " primes\n";
                 for (GenMask a : s.primes()) {
                   primes.push_back(prime_names(s, a));
                   heights.push_back(s.height(a));
                   os << s.format_prime(a) << "  height " << s.height(a) << '\n';
                 }
                 for (const auto& [i, j] : s.hasse_edges()) hasse.push_back(Json::array({i, j}));
                 o.result = Json{{"count", s.size()}, {"dim", s.dim()}, {"primes", primes}, {"heights", heights},
                                 {"hasse", hasse}};
                 o.text = os.str();
                 if (c.settings.dot) {
                   o.text = spectrum_dot(s);
                   o.result["dot"] = o.text;
                 }
                 return o;
               }});

  v.push_back({"dim", "Krull dimension", {"presentation"}, false, [](const Context& c) {
                 const int d = c.spectrum(c.presentation()).dim();
                 return Output{Json(d), std::to_string(d) + "\n"};
               }});

  v.push_back({"fvector", "F-vector of the spectrum", {"presentation"}, false, [](const Context& c) {
                 const auto f = f_vector(c.spectrum(c.presentation()));
                 return Output{Json(f), tuple_text(f) + "\n"};
               }});

  v.push_back({"minimal-primes", "minimal prime ideals", {"presentation"}, false, [](const Context& c) {
                 const auto s = c.spectrum(c.presentation());
                 Output o{Json::array(), ""};
                 for (GenMask a : minimal_primes(s)) {
                   o.result.push_back(prime_names(s, a));
                   o.text += s.format_prime(a) + "\n";
                 }
                 return o;
               }});

  v.push_back({"predicates", "zero, integral, positive, reduced, group, boolean, units", {"presentation"}, false,
               [](const Context& c) {
                 const auto p = c.presentation();
                 const auto s = c.spectrum(p);
                 const auto pr = predicates(p, s, c.rewrite(p));
                 Json units = prime_names(s, pr.units);
                 Output o;
                 o.result = Json{{"zero", pr.zero},         {"integral", pr.integral}, {"positive", pr.positive},
                                 {"reduced", pr.reduced},   {"group", pr.binoid_group}, {"boolean", pr.boolean},
                                 {"units", units}};
                 std::ostringstream os;
                 for (const auto& [k, val] : o.result.items()) os << k << ": " << val.dump() << '\n';
                 o.text = os.str();
                 return o;
               }});

  v.push_back({"bool", "booleanization table (--dot for its Hasse diagram)", {"presentation"}, false,
               [](const Context& c) {
                 const auto p = c.presentation();
                 const auto s = c.spectrum(p);
                 const auto b = booleanize(s);
                 Output o;
                 Json elements = Json::array(), gens = Json::object(), pulled = Json::array();
                 for (std::size_t i = 0; i < b.size(); ++i) elements.push_back(boolean_element_label(b, s, i));
                 for (std::size_t i = 0; i < p.rank(); ++i) gens[p.generators()[i]] = b.generator_image[i];
                 std::vector<GenMask> back;
                 for (const auto& prime : boolean_spectrum(b)) {
                   back.push_back(pullback_prime(b, prime));
                   pulled.push_back(prime_names(s, back.back()));
                 }
                 std::sort(back.begin(), back.end(), subset_order_less);
                 o.result = Json{{"size", b.size()},        {"identity", b.identity}, {"absorbing", b.absorbing},
                                 {"elements", elements},    {"generators", gens},     {"table", b.table},
                                 {"spectrum", pulled},      {"spectrum_matches", back == s.primes()}};
                 std::ostringstream os;
                 os << b.size() << " elements\n";
                 for (std::size_t i = 0; i < b.size(); ++i) os << "e" << i << " = " << elements[i].get<std::string>() << '\n';
                 for (const auto& row : b.table) {
                   std::vector<std::string> cells;
                   for (auto x : row) cells.push_back("e" + std::to_string(x));
                   os << join(cells, " ") << '\n';
                 }
                 o.text = os.str();
                 if (c.settings.dot) {
                   o.text = boolean_dot(b, s);
                   o.result["dot"] = o.text;
                 }
                 return o;
               }});

  v.push_back({"gb", "reduced rewriting system, one rule per line", {"presentation"}, false, [](const Context& c) {
                 const auto p = c.presentation();
                 const auto rs = c.rewrite(p);
                 Json rules = Json::array();
                 for (const auto& r : rs.rules())
                   rules.push_back({{"lhs", format_word(r.lhs, p.generators())}, {"rhs", format_word(r.rhs, p.generators())}});
                 return Output{Json{{"rules", rules}}, rs.to_string()};
               }});

  v.push_back({"nf", "normal form of a word", {"presentation", "word"}, false, [](const Context& c) {
                 const auto p = c.presentation();
                 const auto nf = format_word(c.rewrite(p).normal_form(parse_word(c.args.at(1), p)), p.generators());
                 return Output{Json(nf), nf + "\n"};
               }});

  v.push_back({"eq", "decide whether two words are equal", {"presentation", "u", "v"}, false, [](const Context& c) {
                 const auto p = c.presentation();
                 const bool e = c.rewrite(p).equal(parse_word(c.args.at(1), p), parse_word(c.args.at(2), p));
                 return Output{Json(e), e ? "true\n" : "false\n"};
               }});

  v.push_back({"hilbert", "Hilbert-Samuel value H(n, M)", {"n", "presentation"}, false, [](const Context& c) {
                 std::uint64_t n = 0;
                 try {
                   n = std::stoull(c.args.at(0));
                 } catch (...) {
                   throw InvalidInput("n must be a positive integer");
                 }
                 const auto h = hilbert_samuel(c.rewrite(c.presentation(1)), n);
                 return Output{Json(h), std::to_string(h) + "\n"};
               }});

  v.push_back({"grading", "positive N-grading, if one exists", {"presentation"}, false, [](const Context& c) {
                 const auto p = c.presentation();
                 const auto rs = c.rewrite(p);
                 const auto g = find_positive_grading(rs);
                 const auto rep = is_separated(rs, c.settings.degree);
                 return Output{report_json(rep, g, p), "grading: " + (g ? tuple_text(*g) : std::string("none")) + "\n"};
               }});

  v.push_back({"separated", "separatedness verdict with witness or grading", {"presentation"}, false,
               [](const Context& c) {
                 const auto p = c.presentation();
                 const auto rep = is_separated(c.rewrite(p), c.settings.degree);
                 Output o{report_json(rep, rep.grading, p), report_text(rep, rep.grading, p)};
                 if (rep.verdict == SeparationVerdict::Unknown) o.code = kUndecided;
                 return o;
               }});

  v.push_back({"sepdim", "separated dimension", {"presentation"}, false, [](const Context& c) {
                 const auto p = c.presentation();
                 const auto sd = sepdim(p, c.settings.degree, c.settings.budget);
                 std::vector<std::string> ws;
                 for (const auto& w : sd.witnesses) ws.push_back(format_word(w, p.generators()));
                 Output o;
                 o.result = Json{{"value", sd.value}, {"certified", sd.certified}, {"witnesses", ws}};
                 o.text = std::to_string(sd.value) + (sd.certified ? " (certified)" : " (upper bound)") + "\n";
                 return o;
               }});

  v.push_back({"count-points", "number of F_q-points (--q N, --oracle)", {"presentation"}, false,
               [](const Context& c) {
                 const auto p = c.presentation();
                 if (c.settings.q == 0) throw InvalidInput("count-points needs --q");
                 const auto pc = count_points(p, c.settings.q);
                 const auto s = Spectrum::compute(p);
                 Json per = Json::array();
                 std::ostringstream os;
                 os << "count " << pc.total.get_str() << '\n';
                 for (const auto& pp : pc.per_prime) {
                   Json g = group_json(pp.group);
                   per.push_back(
                       {{"prime", prime_names(s, pp.prime)}, {"rank", g["rank"]}, {"factors", g["factors"]}, {"count", big(pp.count)}});
                   os << s.format_prime(pp.prime) << "  " << to_string(pp.group) << "  " << pp.count.get_str() << '\n';
                 }
                 Output o;
                 o.result = Json{{"q", pc.q}, {"count", big(pc.total)}, {"per_prime", per}};
                 if (c.settings.oracle) {
                   const auto brute = brute_force_count(p, c.settings.q, c.settings.threads);
                   o.result["oracle"] = brute;
                   os << "oracle " << brute << '\n';
                 }
                 o.text = os.str();
                 return o;
               }});

  v.push_back({"export-algebra", "binoid algebra K[M] (--format generic|macaulay2|singular)", {"presentation"}, false,
               [](const Context& c) {
                 const auto text = export_algebra(c.presentation(), parse_algebra_format(c.settings.format));
                 return Output{Json{{"format", c.settings.format}, {"text", text}}, text + "\n"};
               }});

  v.push_back({"hypersurface-connected", "connectedness of K-spec for one relation", {"presentation"}, false,
               [](const Context& c) {
                 const auto p = c.presentation();
                 const auto v = hypersurface_connectedness(p);
                 Output o;
                 o.result = Json{{"verdict", to_string(v.verdict)},
                                 {"case", to_string(v.relation_case)},
                                 {"witness", v.idempotent_witness ? Json(format_word(*v.idempotent_witness, p.generators()))
                                                                  : Json(nullptr)},
                                 {"field", "characteristic 0, algebraically closed"}};
                 o.text = std::string(to_string(v.verdict)) + " (" + to_string(v.relation_case) + ")";
                 if (v.idempotent_witness) o.text += ", idempotent " + format_word(*v.idempotent_witness, p.generators());
                 o.text += "\n";
                 return o;
               }});

  v.push_back({"classify-one-gen", "type of a one-generated binoid", {"presentation"}, false, [](const Context& c) {
                 const auto k = classify_one_generated(c.presentation());
                 static const std::map<OneGeneratedKind, const char*> names{{OneGeneratedKind::Free, "Free"},
                                                                            {OneGeneratedKind::CyclicGroup, "CyclicGroup"},
                                                                            {OneGeneratedKind::Loop, "Loop"},
                                                                            {OneGeneratedKind::Truncated, "Truncated"}};
                 Output o;
                 o.result = Json{{"kind", names.at(k.kind)}, {"label", k.label()}, {"r", k.r}, {"s", k.s}};
                 if (k.kind == OneGeneratedKind::Loop || k.kind == OneGeneratedKind::CyclicGroup)
                   o.result["length"] = k.length();
                 o.text = k.label() + "\n";
                 return o;
               }});

  v.push_back({"smash", "smash product of two presentations", {"a", "b"}, false,
               [](const Context& c) { return presentation_output(smash(c.presentation(0), c.presentation(1))); }});

  v.push_back({"product", "direct product of presentations", {"presentations"}, true, [](const Context& c) {
                 std::vector<Presentation> ps;
                 for (std::size_t i = 0; i < c.args.size(); ++i) ps.push_back(c.presentation(i));
                 return presentation_output(product(ps));
               }});

  v.push_back({"biunion", "bipointed union of two positive presentations", {"a", "b"}, false, [](const Context& c) {
                 return presentation_output(bipointed_union(c.presentation(0), c.presentation(1)));
               }});

  v.push_back({"quotient", "Rees quotient by the ideal generated by words", {"presentation", "words"}, true,
               [](const Context& c) {
                 const auto p = c.presentation();
                 std::vector<Word> ideal;
                 for (std::size_t i = 1; i < c.args.size(); ++i) ideal.push_back(parse_word(c.args[i], p));
                 return presentation_output(rees_quotient(p, ideal));
               }});

  v.push_back({"simplicial:fvector", "f-vector and dimension of a complex", {"complex"}, false, [](const Context& c) {
                 const auto cx = c.complex();
                 const auto f = f_vector(cx, c.settings.force);
                 return Output{Json{{"fvector", f}, {"dim", cx.dimension()}},
                               tuple_text(f) + "\ndim " + std::to_string(cx.dimension()) + "\n"};
               }});

  v.push_back({"simplicial:binoid", "simplicial binoid of a complex", {"complex"}, false, [](const Context& c) {
                 return presentation_output(simplicial_binoid(c.complex(), c.settings.force));
               }});

  v.push_back({"simplicial:cup", "union binoid of a complex", {"complex"}, false, [](const Context& c) {
                 return presentation_output(delta_cup_binoid(c.complex(), c.settings.force));
               }});

  v.push_back({"simplicial:nonfaces", "minimal nonfaces", {"complex"}, false, [](const Context& c) {
                 const auto cx = c.complex();
                 const auto nf = minimal_nonfaces(cx, c.settings.force);
                 Json out = Json::array();
                 for (GenMask s : nf) {
                   Json face = Json::array();
                   for (std::size_t i = 0; i < cx.num_vertices(); ++i)
                     if (s >> i & 1) face.push_back(cx.vertices()[i]);
                   out.push_back(face);
                 }
                 return Output{out, complex_faces_text(cx, nf) + "\n"};
               }});

  v.push_back({"simplicial:components", "connected components", {"complex"}, false, [](const Context& c) {
                 Output o{Json::array(), ""};
                 for (const auto& comp : connected_components(c.complex())) {
                   o.result.push_back(complex_json(comp));
                   o.text += to_string(comp) + "\n";
                 }
                 return o;
               }});

  v.push_back({"simplicial:sr", "Stanley-Reisner ideal (--format)", {"complex"}, false, [](const Context& c) {
                 const auto text = sr_ideal(c.complex(), "X", parse_algebra_format(c.settings.format), c.settings.force);
                 return Output{Json{{"format", c.settings.format}, {"text", text}}, text + "\n"};
               }});

  v.push_back({"simplicial:cap", "intersection versus union binoid classification", {"complex"}, false,
               [](const Context& c) {
                 const auto cl = cap_classification(c.complex());
                 Json comps = Json::array();
                 std::ostringstream os;
                 for (std::size_t i = 0; i < cl.components.size(); ++i) {
                   comps.push_back({{"complex", complex_json(cl.components[i])}, {"shape", to_string(cl.shapes[i])}});
                   os << to_string(cl.shapes[i]) << "  " << to_string(cl.components[i]) << '\n';
                 }
                 os << "isomorphic: " << (cl.isomorphic ? "yes" : "no") << '\n';
                 return Output{Json{{"components", comps}, {"isomorphic", cl.isomorphic}}, os.str()};
               }});

  v.push_back({"simplicial:recognize", "recover the complex of a simplicial binoid", {"presentation"}, false,
               [](const Context& c) {
                 const auto p = c.presentation();
                 const auto r = recognize_simplicial(p, c.rewrite(p));
                 if (!r.complex) return Output{Json{{"complex", nullptr}, {"failure", r.failure}}, "none: " + r.failure + "\n"};
                 return Output{Json{{"complex", complex_json(*r.complex)}, {"failure", nullptr}}, to_string(*r.complex) + "\n"};
               }});

  v.push_back({"simplicial:union", "disjoint union of two complexes", {"a", "b"}, false, [](const Context& c) {
                 const auto u = disjoint_union(c.complex(0), c.complex(1));
                 return Output{complex_json(u), to_string(u) + "\n"};
               }});

  v.push_back({"simplicial:product", "join of two complexes", {"a", "b"}, false, [](const Context& c) {
                 const auto u = product(c.complex(0), c.complex(1));
                 return Output{complex_json(u), to_string(u) + "\n"};
               }});

  return v;
}

std::string resolve_input(const std::string& arg, std::istream& in) {
  if (arg != "-") return arg;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Settings settings;
  CLI::App app{"Computations with finitely generated commutative binoids", "binoidal"};
  app.require_subcommand(1, 1);
  app.add_flag("--json", settings.json, "print {command, input, result} as JSON");
  app.add_flag("--force", settings.force, "lift the enumeration size limits");
  app.add_option("--budget", settings.budget, "completion budget (critical pairs)")->check(CLI::PositiveNumber);
  app.add_option("--degree", settings.degree, "degree bound of the witness search");
  app.add_option("--threads", settings.threads, "OpenMP threads for the kernels")->check(CLI::NonNegativeNumber);

  const auto table = verbs();
  std::map<CLI::App*, const Verb*> by_app;
  std::vector<std::string> positionals;
  // CLI11 rejects ':' in names, so simplicial:x is the child x of simplicial.
  CLI::App* simplicial = app.add_subcommand("simplicial", "simplicial complex commands (also spelled simplicial:x)");
  simplicial->require_subcommand(1, 1);
  simplicial->fallthrough();
  for (const auto& verb : table) {
    const auto colon = verb.name.find(':');
    CLI::App* sub = colon == std::string::npos
                        ? app.add_subcommand(verb.name, verb.help)
                        : simplicial->add_subcommand(verb.name.substr(colon + 1), verb.help);
    sub->fallthrough();
    auto* opt = sub->add_option(verb.positionals.front(), positionals, "input")->required();
    if (verb.variadic)
      opt->expected(1, -1);
    else
      opt->expected(static_cast<int>(verb.positionals.size()));
    if (verb.name == "spec" || verb.name == "bool") sub->add_flag("--dot", settings.dot, "emit Graphviz DOT");
    if (verb.name == "count-points") {
      sub->add_option("--q", settings.q, "field size (a prime power)")->required();
      sub->add_flag("--oracle", settings.oracle, "also count by brute force (q prime)");
    }
    if (verb.name == "export-algebra" || verb.name == "simplicial:sr")
      sub->add_option("--format", settings.format, "generic, macaulay2 or singular");
    by_app[sub] = &verb;
  }

  std::vector<std::string> split;
  for (const auto& a : args) {
    const bool verb_token = a.rfind("simplicial:", 0) == 0 &&
                            std::any_of(table.begin(), table.end(), [&](const Verb& v) { return v.name == a; });
    if (verb_token) {
      split.push_back("simplicial");
      split.push_back(a.substr(a.find(':') + 1));
    } else {
      split.push_back(a);
    }
  }
  std::vector<std::string> reversed(split.rbegin(), split.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (chosen == simplicial) chosen = simplicial->get_subcommands().front();
  const Verb* verb = by_app.at(chosen);
  struct ThreadOverride {
    explicit ThreadOverride(int n) { kernels::set_default_threads(n); }
    ~ThreadOverride() { kernels::set_default_threads(0); }
  } threads_guard(settings.threads);

  try {
    Context ctx{settings, {}};
    for (const auto& a : positionals) ctx.args.push_back(resolve_input(a, in));
    if (verb->variadic && ctx.args.size() < verb->positionals.size())
      throw InvalidInput(verb->name + " needs at least " + std::to_string(verb->positionals.size()) + " arguments");
    Output o = verb->handler(ctx);
    if (settings.json) {
      Json envelope;
      envelope["command"] = verb->name;
      envelope["input"] = ctx.args.size() == 1 ? Json(ctx.args.front()) : Json(ctx.args);
      envelope["result"] = o.result;
      out << envelope.dump(2) << '\n';
    } else {
      out << o.text;
    }
    return o.code;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUndecided;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

} // namespace binoidal::cli
