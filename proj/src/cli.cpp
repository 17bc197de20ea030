#include "oseq/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oseq/complex.hpp"
#include "oseq/constructions.hpp"
#include "oseq/errors.hpp"
#include "oseq/search.hpp"
#include "text_util.hpp"

namespace oseq {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::uint64_t> parse_list(std::string_view text, const std::string& what) {
  std::vector<std::uint64_t> out;
  for (auto part : detail::split_char(text, ',')) out.push_back(detail::parse_uint(part, what));
  return out;
}

Weights parse_weights(std::string_view text) {
  Weights out;
  for (auto w : parse_list(text, "weight")) {
    if (w == 0 || w > kMaxVertices) throw InputError("weights must lie in 1..64");
    out.push_back(static_cast<std::uint32_t>(w));
  }
  return out;
}

RankRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) throw InputError("range must look like a..b");
  return {detail::parse_uint(text.substr(0, dots), "range start"),
          detail::parse_uint(text.substr(dots + 2), "range end")};
}

std::optional<std::uint64_t> env_max_candidates() {
  const char* v = std::getenv("OSEQ_MAX_CANDIDATES");
  if (!v || !*v) return std::nullopt;
  return detail::parse_uint(v, "OSEQ_MAX_CANDIDATES");
}

std::size_t to_size(std::uint64_t v) { return static_cast<std::size_t>(v); }

struct HvectorArgs {
  std::string path;
  bool cover = false;
  bool json = false;
};

int cmd_hvector(const HvectorArgs& a, std::ostream& out) {
  SimplicialComplex c = parse_complex(read_file(a.path)).complex;
  if (a.cover) c = dual(Matroid::from_complex(std::move(c))).complex();
  const FVector f = f_vector_complex(c);
  const HVector h = h_vector(f);
  if (a.json) {
    out << "{\"f\":[" << f.to_csv() << "],\"h\":[";
    for (std::size_t i = 0; i < h.size(); ++i) out << (i ? "," : "") << h[i];
    out << "]}\n";
  } else {
    out << "f=" << f.to_string() << "\n" << "h=" << format_h(h) << "\n";
  }
  return kExitOk;
}

struct EnumerateArgs {
  std::uint64_t vars = 0, socle_degree = 0, type = 0;
  std::string range;
  std::size_t jobs = 1;
  bool no_shortcut = false;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
  if (a.socle_degree > kMaxDegree) throw OverflowError("socle degree too large");
  const auto count = count_socle_space(to_size(a.vars), static_cast<std::uint32_t>(a.socle_degree), a.type);
  err << "N=" << count.monomials << " monomials, C(N," << a.type << ")=" << count.socles << " socles\n";
  SearchConfig cfg;
  cfg.jobs = a.jobs;
  cfg.lex_shortcut = !a.no_shortcut;
  cfg.max_candidates = env_max_candidates();
  if (!a.range.empty()) cfg.range = parse_range(a.range);
  const auto start = std::chrono::steady_clock::now();
  const auto res = enumerate_pure_o_sequences(to_size(a.vars), static_cast<std::uint32_t>(a.socle_degree),
                                              a.type, cfg);
  const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
  for (const auto& f : res.f_vectors) out << f.to_csv() << "\n";
  err << "examined " << res.stats.examined << ", skipped " << res.stats.skipped << ", "
      << res.f_vectors.size() << " distinct f-vectors in " << secs.count() << " s\n";
  if (res.limit_reached) {
    err << "stopped at the candidate limit; the list is incomplete\n";
    return kExitNegative;
  }
  return kExitOk;
}

struct CheckArgs {
  std::string path;
  std::string order;
  std::string method = "guided";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> insert_position;
  std::size_t jobs = 1;
  bool json = false;
};

void print_outcome(const SearchOutcome& o, bool json, std::ostream& out) {
  if (json) {
    out << to_json(o) << "\n";
  } else if (o.ideal) {
    out << format_order_ideal(*o.ideal);
  }
}

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  const Matroid m = Matroid::from_complex(parse_complex(read_file(a.path)).complex);
  SearchConfig cfg;
  cfg.jobs = a.jobs;
  cfg.max_candidates = env_max_candidates();
  if (a.seed) {
    cfg.order = ChoiceOrder::SeededRandom;
    cfg.seed = *a.seed;
  }
  if (a.insert_position) {
    if (*a.insert_position == 0) throw InputError("--insert-position is 1-based");
    cfg.insertion_position = *a.insert_position - 1;
  }

  if (a.method == "enumerate") {
    const HVector h = cover_h_vector(m);
    const FVector target(std::vector<std::uint64_t>(h.begin(), h.end()));
    const auto o = is_pure_o_sequence(target, cfg);
    print_outcome(o, a.json, out);
    if (o.status == SearchStatus::Realized) {
      err << "realized " << target.to_string() << " with " << o.ideal->generators().size() << " generators\n";
      return kExitOk;
    }
    if (o.status == SearchStatus::LimitReached) {
      err << "candidate limit reached after " << o.stats.examined << " nodes; inconclusive\n";
    } else {
      err << "full socle space exhausted: " << target.to_string() << " is not a pure O-sequence (" << o.note << ")\n";
    }
    return kExitNegative;
  }
  if (a.method != "guided") throw InputError("--method must be guided or enumerate");

  std::vector<std::vector<std::size_t>> orders;
  if (!a.order.empty()) {
    std::vector<std::size_t> order;
    for (auto i : parse_list(a.order, "class index")) {
      if (i == 0) throw InputError("class indices in --order are 1-based");
      order.push_back(to_size(i - 1));
    }
    orders.push_back(std::move(order));
  } else {
    orders = feasible_orderings(m, std::numeric_limits<std::size_t>::max());
  }
  SearchOutcome last;
  std::uint64_t examined = 0;
  for (const auto& order : orders) {
    last = guided_search(m, order, cfg);
    examined += last.stats.examined;
    if (last.status == SearchStatus::Realized) {
      print_outcome(last, a.json, out);
      err << "realized with class order";
      for (auto i : order) err << " " << i + 1;
      err << " (" << examined << " nodes)\n";
      return kExitOk;
    }
    if (last.status == SearchStatus::LimitReached) break;
    if (orders.size() == 1) err << last.note << "\n";
  }
  if (a.json) out << to_json(last) << "\n";
  if (last.status == SearchStatus::LimitReached) {
    err << "candidate limit reached; inconclusive\n";
  } else {
    err << "guided search exhausted " << orders.size()
        << " class order(s) without a match; this does not prove h is not a pure O-sequence\n";
  }
  return kExitNegative;
}

struct FilterArgs {
  std::string h;
  std::uint32_t b_max = 1;
  std::optional<std::size_t> classes;
  std::optional<std::size_t> rank;
};

int cmd_filter(const FilterArgs& a, std::ostream& out) {
  HVector h;
  for (auto part : detail::split_char(a.h, ',')) h.push_back(detail::parse_int(part, "h entry"));
  if (a.classes.has_value() != a.rank.has_value()) throw InputError("--classes and --rank go together");
  std::optional<TypeHint> hint;
  if (a.classes) hint = TypeHint{*a.classes, *a.rank};
  const auto report = filter_checks(h, a.b_max, hint);
  for (const auto& line : report.lines) {
    out << (line.pass ? "PASS " : "FAIL ") << line.name << ": " << line.detail << "\n";
  }
  return report.all_pass() ? kExitOk : kExitNegative;
}

struct ConstructArgs {
  std::string family;
  std::vector<std::string> params;
  std::string output;
  bool json = false;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  auto need = [&](std::size_t n, const char* usage) {
    if (a.params.size() != n) throw InputError(std::string("usage: construct ") + usage);
  };
  auto num = [&](std::size_t i) { return to_size(detail::parse_uint(a.params[i], "parameter")); };
  std::string text;
  std::optional<SimplicialComplex> complex;
  if (a.family == "uniform") {
    need(2, "uniform <d> <n>");
    complex = uniform(num(0), num(1)).complex();
  } else if (a.family == "schubert") {
    need(2, "schubert <n> <s1,s2,...>");
    std::vector<std::size_t> s;
    for (auto v : parse_list(a.params[1], "bound")) s.push_back(to_size(v));
    complex = schubert(num(0), s).complex();
  } else if (a.family == "delta-t") {
    need(4, "delta-t <d> <p> <a1,...,ap> <t>");
    complex = delta_t(num(0), num(1), parse_weights(a.params[2]), num(3)).complex();
  } else if (a.family == "complete") {
    need(3, "complete <d> <p> <a1,...,ap>");
    complex = complete_matroid(num(0), num(1), parse_weights(a.params[2])).complex();
  } else if (a.family == "fano") {
    need(0, "fano");
    complex = fano().complex();
  } else if (a.family == "fano-series") {
    if (a.params.size() > 1) throw InputError("usage: construct fano-series [a1,...,a8]");
    complex = fano_series_extension().complex();
    if (!a.params.empty()) complex = expand_weighted(*complex, parse_weights(a.params[0]));
  } else if (a.family == "gamma-t") {
    need(4, "gamma-t <d> <p> <a1,...,ap> <t>");
    text = format_order_ideal(gamma_t(num(0), num(1), parse_weights(a.params[2]), num(3)));
  } else {
    throw InputError("unknown family '" + a.family +
                     "' (uniform, schubert, delta-t, complete, fano, fano-series, gamma-t)");
  }
  if (complex) text = a.json ? format_complex_json(*complex) : format_complex(*complex);
  if (a.output.empty()) {
    out << text;
  } else {
    std::ofstream file(a.output, std::ios::binary);
    if (!file || !(file << text)) throw InputError("cannot write " + a.output);
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Face numbers of matroids and searches for pure O-sequences", "oseq"};
  app.require_subcommand(1);

  HvectorArgs hv;
  auto* hvector = app.add_subcommand("hvector", "f- and h-vector of a complex file");
  hvector->add_option("path", hv.path, "complex or matroid file")->required();
  hvector->add_flag("--cover", hv.cover, "use the dual matroid (cover ideal side)");
  hvector->add_flag("--json", hv.json);

  EnumerateArgs en;
  auto* enumerate = app.add_subcommand("enumerate", "all pure O-sequences with given d, s, t");
  enumerate->add_option("--vars", en.vars)->required();
  enumerate->add_option("--socle-degree", en.socle_degree)->required();
  enumerate->add_option("--type", en.type)->required();
  enumerate->add_option("--range", en.range, "half-open colex rank interval a..b");
  enumerate->add_option("--jobs", en.jobs)->check(CLI::PositiveNumber);
  enumerate->add_flag("--no-shortcut", en.no_shortcut, "scan socles the lex shortcut would skip");

  CheckArgs ck;
  auto* check = app.add_subcommand("check", "is the cover h-vector of a matroid a pure O-sequence");
  check->add_option("path", ck.path, "matroid file")->required();
  check->add_option("--order", ck.order, "1-based parallel class order, e.g. 1,2,4,3");
  check->add_option("--method", ck.method, "guided or enumerate");
  check->add_option("--seed", ck.seed, "randomize the guided choice order");
  check->add_option("--insert-position", ck.insert_position, "1-based block for the glued classes");
  check->add_option("--jobs", ck.jobs)->check(CLI::PositiveNumber);
  check->add_flag("--json", ck.json);

  FilterArgs fl;
  auto* filter = app.add_subcommand("filter", "necessary conditions on an h-vector");
  filter->set_help_flag("--help", "print this help and exit");
  filter->add_option("--h", fl.h, "comma-separated entries")->required();
  filter->add_option("--b-max", fl.b_max, "Brown-Colbourn bases 1..b");
  filter->add_option("--classes", fl.classes, "number of parallel classes p");
  filter->add_option("--rank", fl.rank, "rank d");

  ConstructArgs co;
  auto* construct = app.add_subcommand("construct", "write a named matroid or order ideal");
  construct->add_option("family", co.family)->required();
  construct->add_option("params", co.params);
  construct->add_option("-o,--output", co.output);
  construct->add_flag("--json", co.json);

  std::vector<const char*> argv{"oseq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*hvector) return cmd_hvector(hv, out);
    if (*enumerate) return cmd_enumerate(en, out, err);
    if (*check) return cmd_check(ck, out, err);
    if (*filter) return cmd_filter(fl, out);
    if (*construct) return cmd_construct(co, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace oseq
