#pragma once

// Command-line front end. run() is the whole program minus process setup,
// so tests can drive it with argument vectors and string streams.

#include "coxlink/chords.hpp"
#include "coxlink/core.hpp"
#include "coxlink/coxeter.hpp"
#include "coxlink/graphs.hpp"
#include "coxlink/growth.hpp"
#include "coxlink/intpoly.hpp"
#include "coxlink/roots.hpp"
#include "coxlink/search.hpp"
#include "coxlink/seifert.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace coxlink::cli {

enum Exit { kOk = 0, kDomain = 1, kInternal = 2, kInvariant = 3 };

inline int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::domain:
    case ErrorCode::parse:
    case ErrorCode::unsupported: return kDomain;
    case ErrorCode::invariant: return kInvariant;
    default: return kInternal;
  }
}

struct Context {
  bool json = false;
  std::optional<double> tol;
  std::ostream* out = nullptr;

  double tol_or(double fallback) const { return tol.value_or(fallback); }
  void emit(const nlohmann::json& j, const std::string& text) const {
    if (json)
      *out << j.dump(2) << "\n";
    else
      *out << text;
  }
};

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline nlohmann::json parse_json(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON in " + what + ": " + e.what(), e.byte);
  }
}

// A JSON argument is inline when it starts with '{' or '[', else a path.
inline nlohmann::json load_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '['))
    return parse_json(arg, "argument");
  return parse_json(read_text(arg), "'" + arg + "'");
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ParseError("expected a comma-separated integer list, got '" + text + "'", text.find(tok));
    }
  }
  return out;
}

// Graphs come as a JSON file, inline JSON, or family:NAME[:p1,p2,...].
inline CoxeterGraph load_graph(const std::string& arg) {
  if (arg.rfind("family:", 0) == 0) {
    const std::string rest = arg.substr(7);
    const auto colon = rest.find(':');
    const std::string name = rest.substr(0, colon);
    const std::vector<int> params = colon == std::string::npos ? std::vector<int>{} : parse_int_list(rest.substr(colon + 1));
    return family(name, params);
  }
  return graph_from_json(load_json(arg));
}

// Diagrams come as a word ("+1 +2 -1 -2"), inline JSON, or a file holding
// either form.
inline ChordDiagram load_diagram(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] != '+' && arg[0] != '-' && arg[0] != '{' && std::filesystem::exists(arg))
    text = read_text(arg);
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') return diagram_from_json(parse_json(text, "diagram"));
  return parse_diagram(text);
}

inline Ordering load_order(const std::optional<std::string>& text, int n) {
  if (!text) return Ordering::identity(n);
  std::vector<int> seq = parse_int_list(*text);
  for (auto& v : seq) --v;
  if (static_cast<int>(seq.size()) != n)
    throw DomainError("--order lists " + std::to_string(seq.size()) + " vertices, graph has " + std::to_string(n));
  return Ordering::from_sequence(seq);
}

inline nlohmann::json number(double v, double tol) { return {{"value", v}, {"tol", tol}}; }

inline std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

template <class T>
std::string matrix_text(const Matrix<T>& m) {
  std::ostringstream s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) s << (c ? " " : "") << std::setw(3) << m(r, c);
    s << "\n";
  }
  return s.str();
}

inline nlohmann::json poly_json(const IntPolynomial& p) {
  nlohmann::json j = to_json(p);
  j["text"] = to_string(p);
  return j;
}

// ---------------------------------------------------------------------------

inline void cmd_mahler(const Context& ctx, const std::string& text) {
  const IntPolynomial p = parse_poly(text);
  const double tol = ctx.tol_or(kDefaultRootTol);
  const double m = mahler_measure(p, tol);
  ctx.emit({{"polynomial", poly_json(p)}, {"mahler_measure", number(m, tol)}}, fmt(m) + "\n");
}

inline void cmd_roots(const Context& ctx, const std::string& text) {
  const IntPolynomial p = parse_poly(text);
  const RootSet rs = find_roots(p, ctx.tol_or(kDefaultRootTol));
  nlohmann::json roots = nlohmann::json::array();
  std::ostringstream t;
  for (const auto& z : rs.roots) {
    roots.push_back({z.real(), z.imag()});
    t << fmt(z.real()) << (z.imag() < 0 ? " - " : " + ") << fmt(std::fabs(z.imag())) << "i\n";
  }
  ctx.emit({{"polynomial", poly_json(p)}, {"roots", roots}, {"radius", rs.radius}}, t.str());
}

inline void cmd_salem(const Context& ctx, const std::string& text) {
  const IntPolynomial p = parse_poly(text);
  const double tol = ctx.tol_or(kDefaultModulusTol);
  const bool s = is_salem(p, tol);
  const bool recip = is_reciprocal(p);
  const bool cyc = is_cyclotomic_product(p);
  ctx.emit({{"polynomial", poly_json(p)}, {"salem", s}, {"reciprocal", recip}, {"cyclotomic_product", cyc}, {"tol", tol}},
           std::string("salem: ") + (s ? "yes" : "no") + "\nreciprocal: " + (recip ? "yes" : "no") +
               "\ncyclotomic product: " + (cyc ? "yes" : "no") + "\n");
}

inline void cmd_classify(const Context& ctx, const std::string& graph) {
  const Classification c = classify(load_graph(graph));
  ctx.emit(to_json(c), std::string(to_string(c.kind)) + "\n");
}

inline void cmd_element(const Context& ctx, const std::string& graph, const std::optional<std::string>& order) {
  const CoxeterGraph g = load_graph(graph);
  const Ordering ord = load_order(order, g.size());
  if (g.simply_laced()) {
    const IntMatrix c = coxeter_element_exact(g, ord);
    ctx.emit({{"order", to_json(ord)}, {"exact", true}, {"matrix", matrix_to_json(c)}}, matrix_text(c));
  } else {
    const Matrix<double> c = coxeter_element(g, ord);
    ctx.emit({{"order", to_json(ord)}, {"exact", false}, {"matrix", matrix_to_json(c)}}, matrix_text(c));
  }
}

inline void cmd_charpoly(const Context& ctx, const std::string& graph, const std::optional<std::string>& order) {
  const CoxeterGraph g = load_graph(graph);
  const Ordering ord = load_order(order, g.size());
  const IntPolynomial p = char_poly_coxeter(g, ord);
  ctx.emit({{"order", to_json(ord)}, {"charpoly", poly_json(p)}}, to_string(p) + "\n");
}

inline void cmd_spectral(const Context& ctx, const std::string& graph, const std::optional<std::string>& order) {
  const CoxeterGraph g = load_graph(graph);
  const Ordering ord = load_order(order, g.size());
  const double tol = ctx.tol_or(kDefaultRootTol);
  const double r = spectral_radius(g, ord, tol);
  ctx.emit({{"order", to_json(ord)}, {"spectral_radius", number(r, tol)}, {"certified", g.simply_laced()}},
           fmt(r) + "\n");
}

inline void cmd_delta(const Context& ctx, const std::vector<int>& ps) {
  const TupleSignature sig(ps);
  const IntPolynomial d = delta(sig);
  const double tol = ctx.tol_or(kDefaultRootTol);
  const GrowthRate gr = growth_rate(sig, tol);
  const nlohmann::json j{{"signature", to_json(sig)},
                         {"delta", poly_json(d)},
                         {"csv", to_csv(d)},
                         {"chi", to_string(orbifold_chi(sig))},
                         {"excess", to_string(excess(sig))},
                         {"growth_rate", number(gr.value, tol)},
                         {"salem", gr.salem}};
  // The text form is the same JSON document.
  ctx.emit(j, j.dump(2) + "\n");
}

inline void cmd_alexander(const Context& ctx, const std::string& arg) {
  const nlohmann::json j = load_json(arg);
  SeifertMatrix m;
  nlohmann::json extra;
  if (j.is_array()) {
    m = seifert_from_json(j);
  } else {
    const OrderedChordSystem sys = system_from_json(j);
    m = seifert_matrix(sys);
    extra = to_json(sys);
  }
  const IntPolynomial a = alexander(m);
  nlohmann::json out{{"seifert", to_json(m)}, {"alexander", poly_json(a)}, {"alexander_at_minus_t", poly_json(a.negate_variable())}};
  if (!extra.is_null()) out["system"] = extra;
  ctx.emit(out, matrix_text(m.matrix()) + "alexander: " + to_string(a) + "\n");
}

inline void cmd_realize(const Context& ctx, const std::string& graph, std::uint64_t budget, bool all) {
  const CoxeterGraph g = load_graph(graph);
  if (all) {
    const auto ds = realize_all(g, budget);
    nlohmann::json arr = nlohmann::json::array();
    std::string text;
    for (const auto& d : ds) {
      arr.push_back(to_json(d));
      text += to_string(d) + "\n";
    }
    ctx.emit({{"realizable", !ds.empty()}, {"diagrams", arr}}, ds.empty() ? "not realizable\n" : text);
    return;
  }
  const auto d = realize(g, budget);
  if (!d) {
    ctx.emit({{"realizable", false}}, "not realizable\n");
    return;
  }
  ctx.emit({{"realizable", true}, {"diagram", to_json(*d)}, {"text", to_string(*d)}}, to_string(*d) + "\n");
}

inline void cmd_obstruct(const Context& ctx, const std::string& graph) {
  const auto w = obstruction(load_graph(graph));
  if (!w) {
    ctx.emit({{"witness", nullptr}}, "no witness\n");
    return;
  }
  auto one_based = [](const std::vector<int>& v) {
    std::vector<int> out = v;
    for (auto& x : out) ++x;
    return out;
  };
  std::ostringstream t;
  t << "hub " << w->hub + 1 << ", independent";
  for (int v : w->independent) t << " " << v + 1;
  t << ", cycle";
  for (int v : w->cycle) t << " " << v + 1;
  t << "\n";
  ctx.emit({{"witness", {{"hub", w->hub + 1}, {"independent", one_based(w->independent)}, {"cycle", one_based(w->cycle)}}}},
           t.str());
}

inline void cmd_positive(const Context& ctx, const std::string& arg, bool classes) {
  const ChordDiagram d = load_diagram(arg);
  const OrderedChordSystem sys = make_positive(d);
  nlohmann::json out{{"system", to_json(sys)}, {"seifert", to_json(seifert_matrix(sys))}};
  std::ostringstream t;
  t << "word: " << to_string(sys.diagram()) << "\norder:";
  for (int c : sys.sequence()) t << " " << c + 1;
  t << "\n";
  if (classes) {
    const auto po = enumerate_positive_orderings(d);
    out["classes"] = po.classes.size();
    out["structures"] = po.structures;
    out["positive_systems"] = po.positive_systems;
    t << "classes: " << po.classes.size() << "\n";
  }
  ctx.emit(out, t.str());
}

inline std::string report_text(const SearchReport& r) {
  std::ostringstream t;
  t << r.family << "\nexamined: " << r.examined << "\nminimizer: " << r.minimizer.dump() << "\nmin: " << fmt(r.min_value)
    << "\nrunner-up: " << fmt(r.runner_up) << "\n";
  return t.str();
}

inline void cmd_lehmer_verify(const Context& ctx) {
  const IntPolynomial pl = lehmer_polynomial();
  const IntPolynomial d = delta(TupleSignature{2, 3, 7});
  const IntPolynomial e10 = char_poly_coxeter(star_graph({2, 3, 7}), Ordering::identity(10));
  const IntPolynomial pretzel = pretzel_alexander(TupleSignature{2, 3, 7});
  const IntPolynomial link = alexander(seifert_matrix(star_positive_system({2, 3, 7})));
  const double tol = ctx.tol_or(kDefaultRootTol);
  const double m = mahler_measure(pl, tol);
  const nlohmann::json checks{{"delta_237_is_lehmer", d == pl},
                              {"e10_charpoly_is_lehmer", e10 == pl},
                              {"pretzel_237_is_lehmer_at_minus_x", equal_up_to_unit(pretzel, pl.negate_variable())},
                              {"star_237_link_alexander_is_pretzel", equal_up_to_unit(link, pretzel)},
                              {"lehmer_is_salem", is_salem(pl)}};
  bool ok = true;
  for (const auto& [k, v] : checks.items()) ok = ok && v.get<bool>();
  const nlohmann::json out{{"checks", checks}, {"ok", ok}, {"mahler_measure", number(m, tol)}};
  std::ostringstream t;
  for (const auto& [k, v] : checks.items()) t << k << ": " << (v.get<bool>() ? "ok" : "FAILED") << "\n";
  t << "mahler measure: " << fmt(m) << "\n";
  ctx.emit(out, t.str());
  if (!ok) throw InvariantViolation("a Lehmer identity failed");
}

// ---------------------------------------------------------------------------

inline nlohmann::json error_json(const std::string& code, const std::string& message, const nlohmann::json& location) {
  return {{"error", {{"code", code}, {"message", message}, {"location", location}}}};
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter links, Lehmer's number and related computations", "coxlink"};
  app.require_subcommand(1);
  std::string format = "text";
  double tol_value = 0;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  auto* tol_opt = app.add_option("--tol", tol_value, "numerical tolerance override")->check(CLI::PositiveNumber);

  Context ctx;
  ctx.out = &out;
  std::function<void()> action;

  std::string poly, graph, file;
  std::optional<std::string> order;
  std::vector<int> ps;
  std::uint64_t budget = kDefaultRealizeBudget;
  bool all = false, classes = false;
  int kmax = 4, pmax = 16, nmax = 10;

  auto* c = app.add_subcommand("mahler", "Mahler measure of a polynomial");
  c->add_option("poly", poly, "polynomial (symbolic in x or CSV coefficients)")->required();
  c->callback([&] { action = [&] { cmd_mahler(ctx, poly); }; });

  c = app.add_subcommand("roots", "certified complex roots of a polynomial");
  c->add_option("poly", poly)->required();
  c->callback([&] { action = [&] { cmd_roots(ctx, poly); }; });

  c = app.add_subcommand("salem", "Salem, reciprocal and cyclotomic tests");
  c->add_option("poly", poly)->required();
  c->callback([&] { action = [&] { cmd_salem(ctx, poly); }; });

  c = app.add_subcommand("classify", "spherical, affine or indefinite");
  c->add_option("graph", graph, "graph JSON file, inline JSON, or family:NAME:params")->required();
  c->callback([&] { action = [&] { cmd_classify(ctx, graph); }; });

  for (const char* name : {"element", "charpoly", "spectral"}) {
    c = app.add_subcommand(name, std::string(name) == "element"    ? "Coxeter element matrix"
                                 : std::string(name) == "charpoly" ? "characteristic polynomial of the Coxeter element"
                                                                   : "spectral radius of the Coxeter element");
    c->add_option("graph", graph)->required();
    c->add_option("--order", order, "vertex order, e.g. 3,1,2 (default 1..n)");
    const std::string n = name;
    c->callback([&, n] {
      action = [&, n] {
        if (n == "element") cmd_element(ctx, graph, order);
        if (n == "charpoly") cmd_charpoly(ctx, graph, order);
        if (n == "spectral") cmd_spectral(ctx, graph, order);
      };
    });
  }

  c = app.add_subcommand("delta", "growth denominator of T_{p1..pk}");
  c->add_option("p", ps, "p_1 ... p_k")->required();
  c->callback([&] { action = [&] { cmd_delta(ctx, ps); }; });

  c = app.add_subcommand("alexander", "Alexander polynomial of a chord system or Seifert matrix");
  c->add_option("input", file, "JSON file or inline JSON")->required();
  c->callback([&] { action = [&] { cmd_alexander(ctx, file); }; });

  c = app.add_subcommand("realize", "chord diagram with the given incidence graph");
  c->add_option("graph", graph)->required();
  c->add_option("--budget", budget, "search node budget");
  c->add_flag("--all", all, "list every realization up to rotation and reflection");
  c->callback([&] { action = [&] { cmd_realize(ctx, graph, budget, all); }; });

  c = app.add_subcommand("obstruct", "search for a non-realizability witness");
  c->add_option("graph", graph)->required();
  c->callback([&] { action = [&] { cmd_obstruct(ctx, graph); }; });

  c = app.add_subcommand("positive", "positive ordering of a chord diagram");
  c->add_option("diagram", file, "word such as \"+1 +2 -1 -2\", JSON, or a file")->required();
  c->add_flag("--classes", classes, "also count positive orderings up to equivalence");
  c->callback([&] { action = [&] { cmd_positive(ctx, file, classes); }; });

  auto* search = app.add_subcommand("search", "exhaustive searches");
  search->require_subcommand(1);
  c = search->add_subcommand("tuples", "smallest Mahler measure of delta(p_1..p_k)");
  c->add_option("--kmax", kmax)->check(CLI::Range(3, 8));
  c->add_option("--pmax", pmax)->check(CLI::Range(7, 200));
  c->callback([&] {
    action = [&] {
      const auto r = min_mahler_delta(kmax, pmax, ctx.tol_or(kDefaultModulusTol));
      ctx.emit(to_json(r), report_text(r));
    };
  });
  c = search->add_subcommand("trees", "smallest spectral radius over indefinite trees");
  c->add_option("--nmax", nmax)->check(CLI::Range(1, 10));
  c->callback([&] {
    action = [&] {
      const auto r = min_spectral_radius(nmax, GraphMode::trees, ctx.tol_or(kDefaultModulusTol));
      ctx.emit(to_json(r), report_text(r));
    };
  });
  c = search->add_subcommand("graphs", "smallest spectral radius over indefinite connected graphs");
  c->add_option("--nmax", nmax)->check(CLI::Range(1, 7));
  c->callback([&] {
    action = [&] {
      const auto r = min_spectral_radius(nmax, GraphMode::all_graphs, ctx.tol_or(kDefaultModulusTol));
      ctx.emit(to_json(r), report_text(r));
    };
  });
  c = search->add_subcommand("orderings", "Alexander polynomials over positive orderings");
  c->add_option("diagram", file)->required();
  c->callback([&] {
    action = [&] {
      const auto s = ordering_invariance_scan(load_diagram(file));
      std::ostringstream t;
      t << s.family << "\npositive systems: " << s.examined << "\nclasses: " << s.groups.size() << "\n";
      for (const auto& g : s.groups) t << "  " << to_string(g.alexander) << "\n";
      ctx.emit(to_json(s), t.str());
    };
  });

  c = app.add_subcommand("lehmer-verify", "check the Lehmer identities across modules");
  c->callback([&] { action = [&] { cmd_lehmer_verify(ctx); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (format == "json")
      out << error_json("usage", e.what(), nullptr).dump(2) << "\n";
    else
      err << "error: " << e.what() << "\n";
    return kDomain;
  }
  ctx.json = format == "json";
  if (*tol_opt) ctx.tol = tol_value;

  try {
    action();
    return kOk;
  } catch (const Error& e) {
    nlohmann::json location = nullptr;
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) location = {{"position", pe->position}};
    if (ctx.json)
      out << error_json(to_string(e.code()), e.what(), location).dump(2) << "\n";
    else
      err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    if (ctx.json)
      out << error_json("internal", e.what(), nullptr).dump(2) << "\n";
    else
      err << "error (internal): " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace coxlink::cli
