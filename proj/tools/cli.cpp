#include "cli.hpp"
#include "server.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "honeycomb/feasibility.hpp"
#include "honeycomb/horn.hpp"
#include "honeycomb/io.hpp"
#include "honeycomb/lattice.hpp"
#include "honeycomb/overlay.hpp"
#include "honeycomb/render.hpp"
#include "honeycomb/service.hpp"
#include "honeycomb/spectral.hpp"

namespace honeycomb::cli {

namespace {

using io::Json;

struct Flags {
  std::string lam, mu, nu;
  bool json = false;
  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::size_t limit = 0;
  bool origin = false;
  int port = 8080;
  std::string host = "127.0.0.1";
  int n = 0;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::string> honeycomb_files, diagram_files;
  std::string a_file, b_file, csv, out_file;
};

Spectrum spectrum(const std::string& text, const char* name) {
  if (text.empty()) throw Error(ErrorCode::PARSE_ERROR, std::string("--") + name + " is required");
  try {
    return Spectrum::parse(text);
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::PARSE_ERROR, std::string("--") + name + ": " + e.what());
  }
}

// (lam, mu, nu) read from the flags in the sum convention.
struct SumTriple {
  Spectrum lam, mu, nu;
  Spectrum triple_nu() const { return nu.negated(); }
};

SumTriple triple(const Flags& f) {
  SumTriple t{spectrum(f.lam, "lam"), spectrum(f.mu, "mu"), spectrum(f.nu, "nu")};
  require_same_size(t.lam, t.mu, t.nu);
  return t;
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::PARSE_ERROR, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::PARSE_ERROR, path + ": " + e.what());
  }
}

Honeycomb read_honeycomb(const std::string& path) { return io::honeycomb_from_json(read_json(path)); }

void print_honeycomb(std::ostream& out, const Honeycomb& h, bool json) {
  if (json) {
    out << io::to_json(h).dump() << '\n';
    return;
  }
  const auto& g = h.graph();
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    out << g.edges()[e].key << " = " << h.coord(e);
    if (g.edges()[e].internal()) out << "  (length " << edge_length(h, e) << ')';
    out << '\n';
  }
}

int decision(std::ostream& out, bool answer, bool json) {
  if (json) {
    out << Json{{"feasible", answer}}.dump() << '\n';
  } else {
    out << (answer ? "true" : "false") << '\n';
  }
  return answer ? 0 : 1;
}

int cmd_feasible(const Flags& f, std::ostream& out) {
  const auto t = triple(f);
  return decision(out, decide_sum(t.lam, t.mu, t.nu), f.json);
}

int cmd_triple(const Flags& f, std::ostream& out) {
  const Spectrum lam = spectrum(f.lam, "lam"), mu = spectrum(f.mu, "mu"), nu = spectrum(f.nu, "nu");
  require_same_size(lam, mu, nu);
  return decision(out, decide_triple(lam, mu, nu), f.json);
}

int cmd_lrcoeff(const Flags& f, std::ostream& out) {
  const auto t = triple(f);
  io::LrReport rep;
  rep.multiplicity = tensor_multiplicity(t.lam, t.mu, t.nu);
  if (!f.json) {
    out << rep.multiplicity.get_str() << '\n';
    return 0;
  }
  const std::size_t limit = f.limit == 0 ? 10 : f.limit;
  if (rep.multiplicity > 0) rep.witnesses = enumerate_integral(t.lam, t.mu, t.triple_nu(), limit);
  out << io::to_json(rep).dump() << '\n';
  return 0;
}

int cmd_enumerate(const Flags& f, std::ostream& out) {
  const auto t = triple(f);
  const auto list = enumerate_integral(t.lam, t.mu, t.triple_nu(), f.limit == 0 ? 100 : f.limit);
  if (f.json) {
    Json arr = Json::array();
    for (const auto& h : list) arr.push_back(io::to_json(h));
    out << arr.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < list.size(); ++i) {
      out << "# honeycomb " << i + 1 << '\n';
      print_honeycomb(out, list[i], false);
    }
    out << list.size() << " honeycomb(s)\n";
  }
  return 0;
}

int cmd_horn(const Flags& f, std::ostream& out) {
  if (f.n < 1) throw Error(ErrorCode::PARSE_ERROR, "--n must be at least 1");
  if (f.n > 8) throw Error(ErrorCode::TOO_LARGE, "--n is limited to 8");
  const auto list = horn_inequalities(f.n);
  if (f.json) {
    Json arr = Json::array();
    for (const auto& h : list) arr.push_back(io::to_json(h));
    out << arr.dump() << '\n';
  } else {
    for (const auto& h : list) out << h.str() << '\n';
  }
  return 0;
}

int cmd_lift(const Flags& f, std::ostream& out) {
  const auto t = triple(f);
  if (!decide_sum(t.lam, t.mu, t.nu)) {
    if (f.json) out << Json{{"feasible", false}}.dump() << '\n';
    else out << "infeasible\n";
    return 1;
  }
  const auto b = make_boundary(t.lam, t.mu, t.triple_nu());
  const bool integral = t.lam.is_integral() && t.mu.is_integral() && t.nu.is_integral();
  const Honeycomb h = integral ? integral_largest_lift(b, f.seed).honeycomb
                               : largest_lift_detailed(b, superharmonic_weights(build_graph(static_cast<int>(t.lam.size())), f.seed)).honeycomb;
  print_honeycomb(out, h, f.json);
  return 0;
}

int cmd_saturation(const Flags& f, std::ostream& out) {
  const auto t = triple(f);
  const auto rep = check_saturation(t.lam, t.mu, t.triple_nu(), f.seed);
  if (f.json) {
    out << io::to_json(rep).dump() << '\n';
  } else {
    out << "feasible: " << (rep.feasible ? "true" : "false") << '\n'
        << "integral witness: " << (rep.integral_witness ? "yes" : "none") << '\n'
        << "agrees: " << (rep.agrees ? "true" : "false") << '\n';
  }
  return rep.feasible ? 0 : 1;
}

int cmd_overlay(const Flags& f, std::ostream& out) {
  const auto a = read_honeycomb(f.a_file), b = read_honeycomb(f.b_file);
  const auto an = analyze_overlay(a, b);
  std::optional<FacetInequality> facet;
  if (an.verdict == OverlayVerdict::ALL_A_CW) facet = facet_inequality(a, b);
  if (f.json) {
    out << Json{{"analysis", io::overlay_to_json(an, a.graph(), b.graph())},
                {"facet", facet ? io::to_json(*facet) : Json(nullptr)}}
               .dump()
        << '\n';
  } else {
    out << "verdict: " << to_string(an.verdict) << '\n' << "intersections: " << an.intersections.size() << '\n';
    if (facet) out << "facet: " << facet->str() << '\n';
  }
  return 0;
}

int cmd_shrink(const Flags& f, std::ostream& out) {
  print_honeycomb(out, shrink(read_honeycomb(f.a_file), read_honeycomb(f.b_file)), f.json);
  return 0;
}

int cmd_sample(const Flags& f, std::ostream& out) {
  const Spectrum lam = spectrum(f.lam, "lam"), mu = spectrum(f.mu, "mu");
  if (lam.size() != mu.size()) throw Error(ErrorCode::DIMENSION_MISMATCH, "--lam and --mu differ in length");
  if (f.trials == 0) throw Error(ErrorCode::PARSE_ERROR, "--trials must be at least 1");
  const auto rep = monte_carlo_check(lam, mu, f.trials, f.seed, f.threads, !f.csv.empty());
  if (!f.csv.empty()) {
    std::ofstream csv(f.csv);
    if (!csv) throw Error(ErrorCode::PARSE_ERROR, "cannot write " + f.csv);
    for (std::size_t i = 0; i < lam.size(); ++i) csv << (i ? "," : "") << "nu" << i + 1;
    csv << '\n';
    csv.precision(17);
    for (const auto& s : rep.samples) {
      for (std::size_t i = 0; i < s.size(); ++i) csv << (i ? "," : "") << s[i];
      csv << '\n';
    }
  }
  if (f.json) {
    out << io::to_json(rep).dump() << '\n';
  } else {
    out << "trials: " << rep.trials << '\n'
        << "violations: " << rep.violations.size() << '\n'
        << "max infeasibility margin: " << rep.max_infeasibility_margin << '\n';
  }
  return rep.violations.empty() ? 0 : 1;
}

int cmd_volume(const Flags& f, std::ostream& out) {
  const auto t = triple(f);
  if (!decide_sum(t.lam, t.mu, t.nu)) {
    if (f.json) out << Json{{"feasible", false}}.dump() << '\n';
    else out << "infeasible\n";
    return 1;
  }
  const Rat v = fiber_volume(t.lam, t.mu, t.triple_nu());
  if (f.json) out << Json{{"feasible", true}, {"volume", io::to_json(v)}}.dump() << '\n';
  else out << v << '\n';
  return 0;
}

int cmd_render(const Flags& f, std::ostream& out) {
  std::vector<Diagram> layers;
  for (const auto& p : f.honeycomb_files) layers.push_back(to_diagram(read_honeycomb(p)));
  for (const auto& p : f.diagram_files) layers.push_back(io::diagram_from_json(read_json(p)));
  if (!f.lam.empty() || !f.mu.empty() || !f.nu.empty()) {
    const auto t = triple(f);
    if (!decide_sum(t.lam, t.mu, t.nu)) throw Error(ErrorCode::INFEASIBLE_TRIPLE, "no honeycomb to render");
    const auto b = make_boundary(t.lam, t.mu, t.triple_nu());
    const auto w = superharmonic_weights(build_graph(static_cast<int>(t.lam.size())), f.seed);
    layers.push_back(to_diagram(largest_lift_detailed(b, w).honeycomb));
  }
  if (layers.empty()) throw Error(ErrorCode::PARSE_ERROR, "give --honeycomb, --diagram or --lam/--mu/--nu");
  RenderOptions opt;
  opt.origin = f.origin;
  const std::string svg = render_svg(layers, opt);
  if (f.out_file.empty()) {
    out << svg;
  } else {
    std::ofstream file(f.out_file);
    if (!file) throw Error(ErrorCode::PARSE_ERROR, "cannot write " + f.out_file);
    file << svg;
  }
  return 0;
}

int cmd_serve(const Flags& f, std::ostream& out) {
  httplib::Server server;
  mount_api(server);
  out << "listening on http://" << f.host << ':' << f.port << '\n' << std::flush;
  if (!server.listen(f.host, f.port)) throw Error(ErrorCode::PARSE_ERROR, "cannot bind port " + std::to_string(f.port));
  return 0;
}

}  // namespace

void mount_api(httplib::Server& server) {
  auto forward = [](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> query;
    for (const auto& [k, v] : req.params) query.emplace(k, v);
    const auto r = handle_api(req.method, req.path, query, req.body);
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  server.Get(R"(/api/.*)", forward);
  server.Post(R"(/api/.*)", forward);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Honeycombs, Horn inequalities and Littlewood-Richardson coefficients"};
  app.require_subcommand(1);
  Flags f;
  using Cmd = int (*)(const Flags&, std::ostream&);
  std::vector<std::pair<CLI::App*, Cmd>> commands;

  auto spectra = [&](CLI::App* c, bool with_nu) {
    c->add_option("--lam", f.lam, "comma separated rationals, weakly decreasing");
    c->add_option("--mu", f.mu, "comma separated rationals, weakly decreasing");
    if (with_nu) c->add_option("--nu", f.nu, "comma separated rationals, weakly decreasing");
  };
  auto common = [&](CLI::App* c) {
    c->add_flag("--json", f.json, "JSON output");
    c->add_option("--seed", f.seed, "seed for weights and samples");
  };
  auto add = [&](const char* name, const char* help, Cmd fn) {
    auto* c = app.add_subcommand(name, help);
    common(c);
    commands.emplace_back(c, fn);
    return c;
  };

  spectra(add("feasible", "is there H_lam + H_mu = H_nu? (exit 1 if not)", cmd_feasible), true);
  spectra(add("triple", "is there a honeycomb with boundary (lam, mu, nu)? (exit 1 if not)", cmd_triple), true);
  auto* lr = add("lrcoeff", "Littlewood-Richardson coefficient c^nu_{lam,mu}", cmd_lrcoeff);
  spectra(lr, true);
  lr->add_option("--limit", f.limit, "witnesses in JSON output (default 10)");
  auto* en = add("enumerate", "integral honeycombs for lam (+) mu ~ nu", cmd_enumerate);
  spectra(en, true);
  en->add_option("--limit", f.limit, "at most this many (default 100)");
  add("horn", "Horn inequalities for size n", cmd_horn)->add_option("--n", f.n, "size")->required();
  spectra(add("lift", "largest lift of lam (+) mu ~ nu (exit 1 if infeasible)", cmd_lift), true);
  spectra(add("saturation", "integral lift check (exit 1 if infeasible)", cmd_saturation), true);
  for (auto [name, help, fn] : {std::tuple{"overlay", "classify the overlay of two honeycombs", cmd_overlay},
                                std::tuple{"shrink", "shrink a clockwise overlay", cmd_shrink}}) {
    auto* c = add(name, help, fn);
    c->add_option("--a", f.a_file, "honeycomb JSON file (- for stdin)")->required();
    c->add_option("--b", f.b_file, "honeycomb JSON file")->required();
  }
  auto* sm = add("sample", "Monte-Carlo check with random Hermitian matrices (exit 1 on violations)", cmd_sample);
  spectra(sm, false);
  sm->add_option("--trials", f.trials, "number of samples");
  sm->add_option("--threads", f.threads, "worker threads");
  sm->add_option("--csv", f.csv, "write sampled spectra here");
  spectra(add("volume", "exact fiber volume for n <= 4 (exit 1 if infeasible)", cmd_volume), true);
  auto* rd = add("render", "SVG picture", cmd_render);
  spectra(rd, true);
  rd->add_option("--honeycomb", f.honeycomb_files, "honeycomb JSON file (repeatable)");
  rd->add_option("--diagram", f.diagram_files, "diagram JSON file (repeatable)");
  rd->add_flag("--origin", f.origin, "mark the origin");
  rd->add_option("--out", f.out_file, "output file (default stdout)");
  auto* sv = add("serve", "HTTP API on localhost", cmd_serve);
  sv->add_option("--port", f.port, "port");
  sv->add_option("--host", f.host, "bind address");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }
  for (auto& [c, fn] : commands) {
    if (!c->parsed()) continue;
    try {
      return fn(f, out);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::INFEASIBLE_TRIPLE) {
        err << e.what() << '\n';
        return 1;
      }
      err << e.what() << '\n';
      return 2;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
  }
  return 2;
}

}  // namespace honeycomb::cli
