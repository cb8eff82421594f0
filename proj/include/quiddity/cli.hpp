#pragma once

// The `quiddity` command line. run() takes the arguments after the program
// name and returns the exit code: 0 success, 1 mathematical negative (not a
// quiddity cycle, rule not applicable, no cluster, ...), 2 usage error.
//
// JSON arguments are given inline, as @path to read a file, or as - for
// standard input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "quiddity/quiddity.hpp"

namespace quiddity::cli {

namespace detail {

inline json read_json(const std::string& arg, std::istream& in) {
  std::string text;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else if (!arg.empty() && arg[0] == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) throw error(errc::usage, "cannot read " + arg.substr(1));
    text.assign(std::istreambuf_iterator<char>(f), {});
  } else {
    text = arg;
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw error(errc::usage, std::string("invalid JSON: ") + e.what());
  }
}

inline int exit_code(errc code) {
  switch (code) {
    case errc::usage:
    case errc::unsupported:
    case errc::overflow: return 2;
    default: return 1;
  }
}

inline std::string family_symbol(RingDescriptor ring) {
  switch (ring.kind) {
    case RingKind::gaussian_integers: return "G";
    case RingKind::eisenstein_integers: return "E";
    default: return "N";
  }
}

struct Options {
  std::string input;
  std::string format;  // empty: json, pretty for enumerate
  std::string rule;
  long at = 1;
  std::string param;
  std::string ring;
  long height = 0;
  bool orbits = false;
  unsigned jobs = 0;
  std::string out_file;
  bool certify = false;
  std::size_t count = 10;
  std::string fixtures = QUIDDITY_FIXTURES_DIR;
};

inline void print(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

inline int verify_cycle(const Options& o, std::istream& in, std::ostream& out) {
  const Cycle c = cycle_from_json(read_json(o.input, in));
  const bool yes = is_quiddity(c);
  out << "QUIDDITY: " << (yes ? "yes" : "no") << "\n";
  return yes ? 0 : 1;
}

inline int frieze(const Options& o, std::istream& in, std::ostream& out) {
  const FriezePattern f = frieze_from_cycle(cycle_from_json(read_json(o.input, in)));
  if (o.format == "pretty") {
    out << render_staircase(f);
  } else {
    print(out, to_json(f));
  }
  return 0;
}

inline int verify_frieze(const Options& o, std::istream& in, std::ostream& out) {
  const json j = read_json(o.input, in);
  FriezeWindow w;
  if (j.contains("cycle")) {
    const FriezePattern f = frieze_from_json(j);
    w = window_from_frieze(f, f.period());
  } else {
    w = window_from_json(j);
  }
  const VerifyReport r = verify(w);
  out << "SL2: " << (r.sl2_ok ? "ok" : "fail") << "\n";
  out << "TAME: " << (r.tame_ok ? "ok" : "fail") << "\n";
  for (const auto& f : r.failures)
    out << "  " << f.size << "x" << f.size << " block at row " << f.row + 1 << ", column " << f.col << "\n";
  return r.sl2_ok && r.tame_ok ? 0 : 1;
}

inline int transform(const Options& o, std::istream& in, std::ostream& out) {
  const Cycle c = cycle_from_json(read_json(o.input, in));
  auto param = [&] {
    if (o.param.empty()) throw error(errc::usage, "rule " + o.rule + " needs --param");
    return element_from_json(read_json(o.param, in), c.ring());
  };
  SignedCycle result{c, 1};
  if (o.rule == "expand_one") result = expand_one(c, o.at);
  else if (o.rule == "contract_one") result = contract_one(c, o.at);
  else if (o.rule == "expand_minus_one") result = expand_minus_one(c, o.at);
  else if (o.rule == "contract_minus_one") result = contract_minus_one(c, o.at);
  else if (o.rule == "contract_zero") result = contract_zero(c, o.at);
  else if (o.rule == "contract_uv") result.cycle = contract_uv(c, o.at);
  else if (o.rule == "rescale_lambda") result.cycle = rescale_lambda(c, o.at, param());
  else if (o.rule == "shift_zero") result.cycle = shift_zero(c, o.at, param());
  else if (o.rule == "scale_alternating") result.cycle = scale_alternating(c, param());
  else throw error(errc::usage, "unknown rule " + o.rule);
  if (o.format == "pretty") {
    out << result.cycle << "  sign " << (result.sign > 0 ? "+1" : "-1") << "\n";
  } else {
    print(out, to_json(result.cycle));
  }
  return 0;
}

inline int bound(const Options& o, std::ostream& out) {
  const RingDescriptor ring = RingDescriptor::from_tag(o.ring);
  const Rational b = quiddity_bound(1, o.height);
  out << "B=" << b.get_str() << "\n";
  out << "B^2=" << Rational(b * b).get_str() << "\n";
  if (ring.is_discrete()) {
    out << "candidates=" << candidate_entries(ring, o.height).size() << "\n";
  } else {
    out << "candidates=infinite\n";
  }
  return 0;
}

inline int reduce(const Options& o, std::istream& in, std::ostream& out) {
  const ReductionTrace t = reduce_to_base(cycle_from_json(read_json(o.input, in)));
  if (o.format == "pretty") {
    out << t.start << "\n";
    for (const auto& s : t.steps) {
      out << "  " << to_string(s.tag);
      for (long k : s.indices) out << " " << k;
      out << " -> " << s.after << "\n";
    }
  } else {
    print(out, to_json(t));
  }
  if (o.certify) {
    const bool ok = certify(t);
    out << "CERTIFIED: " << (ok ? "yes" : "no") << "\n";
    return ok ? 0 : 1;
  }
  return 0;
}

inline int label_to_cycle(const Options& o, std::istream& in, std::ostream& out) {
  const Labelling l = labelling_from_json(read_json(o.input, in));
  if (!is_admissible(l)) {
    out << "NOT ADMISSIBLE\n";
    return 1;
  }
  const Cycle c = cycle_from_labelling(l);
  if (o.format == "pretty") {
    out << c << "\n";
  } else {
    print(out, to_json(c));
  }
  return 0;
}

inline int cycle_to_label(const Options& o, std::istream& in, std::ostream& out) {
  const Labelling l = labelling_from_cycle(cycle_from_json(read_json(o.input, in)));
  if (o.format == "pretty") {
    for (const auto& [t, v] : l.pieces()) out << triangle_key(t) << ": " << v.get_str() << "\n";
  } else {
    print(out, to_json(l));
  }
  return 0;
}

inline int cluster(const Options& o, std::istream& in, std::ostream& out) {
  const auto c = find_zero_free_cluster(cycle_from_json(read_json(o.input, in)));
  if (!c) {
    out << "NONE\n";
    return 1;
  }
  if (o.format == "pretty") {
    for (std::size_t k = 0; k < c->labels.size(); ++k) {
      auto [i, j] = c->triangulation.diagonals()[k];
      out << "(" << i << ", " << j << "): " << c->labels[k] << "\n";
    }
  } else {
    print(out, to_json(*c));
  }
  return 0;
}

inline int enumerate(const Options& o, std::ostream& out) {
  const RingDescriptor ring = RingDescriptor::from_tag(o.ring);
  EnumerationOptions opt;
  opt.jobs = o.jobs;
  const EnumerationResult r = count_nonzero(ring, o.height, opt);
  if (!o.out_file.empty()) {
    std::ofstream f(o.out_file);
    if (!f) throw error(errc::usage, "cannot write " + o.out_file);
    f << to_json(r).dump() << "\n";
  }
  if (o.format == "json") {
    if (o.out_file.empty()) print(out, to_json(r));
  } else {
    const std::string sym = family_symbol(ring);
    out << "ring " << ring.tag() << "\n";
    out << "n      " << r.height << "\n";
    out << sym << "_n    " << r.total << "\n";
    if (o.orbits) out << sym << "'_n   " << r.orbit_count << "\n";
  }
  out << "total=" << r.total;
  if (o.orbits) out << " orbits=" << r.orbit_count;
  out << "\n";
  return 0;
}

inline int unit_family_cmd(const Options& o, std::ostream& out) {
  const RingDescriptor ring = RingDescriptor::from_tag(o.ring);
  const auto fam = unit_family(ring, o.height, o.count);
  if (o.format == "pretty") {
    for (const auto& [t, c] : fam) out << "t=" << t << "  " << c << "\n";
  } else {
    json arr = json::array();
    for (const auto& [t, c] : fam) arr.push_back(json{{"t", to_json(t)}, {"cycle", to_json(c)}});
    print(out, arr);
  }
  return 0;
}

// Recomputes every fixture frieze from its cycle and compares entry by entry.
inline int examples(const Options& o, std::ostream& out) {
  std::vector<std::filesystem::path> files;
  if (!std::filesystem::is_directory(o.fixtures)) throw error(errc::usage, "no fixtures directory " + o.fixtures);
  for (const auto& e : std::filesystem::directory_iterator(o.fixtures))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  int bad = 0;
  for (const auto& p : files) {
    std::ifstream f(p);
    const json j = json::parse(f);
    const FriezePattern stored = frieze_from_json(quiddity::detail::field(j, "frieze"));
    const FriezePattern computed = frieze_from_cycle(stored.cycle());
    std::size_t diffs = 0;
    for (std::size_t r = 0; r < stored.rows().size(); ++r)
      for (std::size_t c = 0; c < stored.rows()[r].size(); ++c)
        if (!(stored.rows()[r][c] == computed.rows()[r][c])) {
          if (diffs++ < 5)
            out << "  row " << r + 1 << " column " << c << ": expected " << stored.rows()[r][c] << ", computed "
                << computed.rows()[r][c] << "\n";
        }
    out << (diffs ? "DIFF " : "ok   ") << p.stem().string() << "\n";
    bad += diffs != 0;
  }
  out << files.size() - static_cast<std::size_t>(bad) << "/" << files.size() << " examples match\n";
  return bad ? 1 : 0;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
  CLI::App app{"Tame frieze patterns and quiddity cycles"};
  app.require_subcommand(1);
  detail::Options o;

  auto format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
  };
  auto input = [&](CLI::App* sub, const std::string& names) {
    sub->add_option(names, o.input, "JSON input, @file or -")->required();
  };

  auto* verify_cycle = app.add_subcommand("verify-cycle", "check that a cycle is a quiddity cycle");
  input(verify_cycle, "--cycle,cycle");
  auto* frieze = app.add_subcommand("frieze", "frieze pattern of a quiddity cycle");
  input(frieze, "--cycle,cycle");
  format(frieze);
  auto* verify_frieze = app.add_subcommand("verify-frieze", "check the 2x2 and 3x3 conditions of a window");
  input(verify_frieze, "--window,window");
  auto* transform = app.add_subcommand("transform", "apply a local rule");
  input(transform, "--cycle,cycle");
  transform->add_option("--rule", o.rule)->required();
  transform->add_option("--at", o.at);
  transform->add_option("--param", o.param, "ring element as JSON");
  format(transform);
  auto* bound = app.add_subcommand("bound", "entry bound for a height");
  bound->add_option("--ring", o.ring)->required();
  bound->add_option("--height", o.height)->required()->check(CLI::PositiveNumber);
  auto* reduce = app.add_subcommand("reduce", "reduce an integer quiddity cycle to (0, 0)");
  input(reduce, "--cycle,cycle");
  reduce->add_flag("--certify", o.certify);
  format(reduce);
  auto* label_to_cycle = app.add_subcommand("label-to-cycle", "quiddity cycle of an admissible labelling");
  input(label_to_cycle, "--labelling,labelling");
  format(label_to_cycle);
  auto* cycle_to_label = app.add_subcommand("cycle-to-label", "admissible labelling of an integer quiddity cycle");
  input(cycle_to_label, "--cycle,cycle");
  format(cycle_to_label);
  auto* cluster = app.add_subcommand("cluster", "cluster without zero labels");
  input(cluster, "--cycle,cycle");
  format(cluster);
  auto* enumerate = app.add_subcommand("enumerate", "count non-zero friezes of a height");
  enumerate->add_option("--ring", o.ring)->required();
  enumerate->add_option("--height", o.height)->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--orbits", o.orbits);
  enumerate->add_option("--jobs", o.jobs);
  enumerate->add_option("--out", o.out_file);
  format(enumerate);
  auto* unit_family = app.add_subcommand("unit-family", "infinite family from divisors of 2");
  unit_family->add_option("--ring", o.ring)->required();
  unit_family->add_option("--height", o.height)->required()->check(CLI::PositiveNumber);
  unit_family->add_option("--count", o.count);
  format(unit_family);
  auto* examples = app.add_subcommand("examples", "recompute the fixture friezes");
  examples->add_option("--fixtures", o.fixtures);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  if (o.format.empty()) o.format = enumerate->parsed() ? "pretty" : "json";

  try {
    if (verify_cycle->parsed()) return detail::verify_cycle(o, in, out);
    if (frieze->parsed()) return detail::frieze(o, in, out);
    if (verify_frieze->parsed()) return detail::verify_frieze(o, in, out);
    if (transform->parsed()) return detail::transform(o, in, out);
    if (bound->parsed()) return detail::bound(o, out);
    if (reduce->parsed()) return detail::reduce(o, in, out);
    if (label_to_cycle->parsed()) return detail::label_to_cycle(o, in, out);
    if (cycle_to_label->parsed()) return detail::cycle_to_label(o, in, out);
    if (cluster->parsed()) return detail::cluster(o, in, out);
    if (enumerate->parsed()) return detail::enumerate(o, out);
    if (unit_family->parsed()) return detail::unit_family_cmd(o, out);
    if (examples->parsed()) return detail::examples(o, out);
  } catch (const error& e) {
    err << e.what() << "\n";
    return detail::exit_code(e.code());
  } catch (const json::exception& e) {
    err << "usage: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace quiddity::cli
