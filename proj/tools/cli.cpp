#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "listcomb/algebra.hpp"
#include "listcomb/compression.hpp"
#include "listcomb/covers.hpp"
#include "listcomb/dims.hpp"
#include "listcomb/format.hpp"
#include "listcomb/io.hpp"
#include "listcomb/learning.hpp"
#include "listcomb/verify.hpp"

namespace listcomb::cli {

namespace fs = std::filesystem;

namespace {

struct Config {
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_dir;
  std::size_t jobs = 0;
  Caps caps;
};

std::uint64_t effective_seed(const Config& cfg) {
  if (cfg.seed_given) return cfg.seed;
  if (const char* env = std::getenv("LISTCOMB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw FormatError(std::string("LISTCOMB_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return cfg.seed;
}

// Writes `text` to <out>/<name> when --out was given.
void save(const Config& cfg, const std::string& name, const std::string& text) {
  if (cfg.out_dir.empty()) return;
  io::write_text_file(fs::path(cfg.out_dir) / name, text);
}

void emit(std::ostream& out, const Config& cfg, const std::string& name, const std::string& text) {
  out << text << std::flush;
  save(cfg, name, text);
}

std::string dim_json(const std::string& kind, std::size_t k, const DimensionResult& r, const ConceptClass& cls) {
  io::Json j;
  j["dimension"] = kind;
  j["k"] = k;
  j["value"] = r.value;
  if (r.witness) {
    io::Json w;
    io::Json pts = io::Json::array();
    for (auto p : r.witness->points) pts.push_back(cls.domain().name(p));
    w["points"] = pts;
    if (r.witness->pivot) {
      io::Json piv = io::Json::array();
      for (auto y : *r.witness->pivot) piv.push_back(cls.labels().name(y));
      w["pivot"] = piv;
    }
    if (!r.witness->selectors.empty()) w["selectors"] = r.witness->selectors;
    if (!r.witness->label_pairs.empty()) {
      io::Json pairs = io::Json::array();
      for (auto [a, b] : r.witness->label_pairs) pairs.push_back({cls.labels().name(a), cls.labels().name(b)});
      w["label_pairs"] = pairs;
    }
    if (!r.witness->cube.empty()) {
      io::Json cube = io::Json::array();
      for (const auto& t : r.witness->cube) {
        io::Json row = io::Json::array();
        for (auto y : t) row.push_back(cls.labels().name(y));
        cube.push_back(row);
      }
      w["cube"] = cube;
    }
    j["witness"] = w;
  }
  return io::dump(j);
}

std::vector<std::size_t> parse_ns(const std::string& text) {
  std::vector<std::size_t> ns;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(part, &used);
      if (used != part.size() || v == 0) throw std::invalid_argument(part);
      ns.push_back(v);
    } catch (const std::exception&) {
      throw FormatError("bad sample size '" + part + "' in --ns");
    }
  }
  if (ns.empty()) throw FormatError("--ns is empty");
  return ns;
}

Marginal read_marginal(const fs::path& path, const ConceptClass& cls) {
  const io::Json j = io::read_json_file(path);
  if (!j.contains("marginal") || !j["marginal"].is_array())
    throw FormatError(path.string() + ": expected {\"marginal\": [[point, weight], ..]}");
  Marginal m;
  double total = 0.0;
  for (const auto& e : j["marginal"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_number())
      throw FormatError(path.string() + ": each marginal entry must be [point, weight]");
    const double w = e[1].get<double>();
    if (w < 0) throw FormatError(path.string() + ": negative weight");
    m.weights.emplace_back(cls.domain().at(e[0].get<std::string>()), w);
    total += w;
  }
  if (std::abs(total - 1.0) > DiscreteDistribution::kNormalizationTolerance)
    throw FormatError(path.string() + ": marginal weights must sum to 1");
  return m;
}

std::vector<Sample> read_sample_dir(const fs::path& dir, const ConceptClass& cls) {
  if (!fs::is_directory(dir)) throw FormatError("not a directory: '" + dir.string() + "'");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto& p = entry.path();
    if (p.extension() == ".json" && p.filename() != "scheme.json") files.push_back(p);
  }
  std::sort(files.begin(), files.end());
  std::vector<Sample> samples;
  for (const auto& f : files) samples.push_back(io::read_sample(f, cls));
  return samples;
}

CompressionScheme scheme_from_dir(const fs::path& dir, const ConceptClass& cls) {
  const io::Json j = io::read_json_file(dir / "scheme.json");
  const std::string kind = j.value("kind", std::string{});
  if (kind == "consistent-subsample") return consistent_subsample_scheme(cls);
  if (kind == "boost") {
    BoostConfig bc;
    bc.d = j.value("d", std::size_t{1});
    bc.seed = j.value("seed", std::uint64_t{0});
    bc.epsilon = j.value("epsilon", 0.0);
    return boost_scheme(erm(cls), cls, bc);
  }
  throw FormatError((dir / "scheme.json").string() + ": unknown scheme kind '" + kind + "'");
}

// Lemma-id order of the families, so streaming them in this order keeps the
// combined output sorted.
std::vector<Family> report_order(std::vector<Family> families) {
  auto key = [](Family f) {
    switch (f) {
      case Family::kCoding:
        return "coding";
      case Family::kDirectSum:
        return "direct-sum";
      case Family::kDisambiguation:
        return "disambiguation";
      case Family::kGraphDs:
        return "graph-vs-ds";
      case Family::kProductDims:
        return "product";
      case Family::kSsp:
        return "ssp";
    }
    return "";
  };
  std::sort(families.begin(), families.end(),
            [&](Family a, Family b) { return std::string(key(a)) < std::string(key(b)); });
  return families;
}

int run_verify(const std::string& which, std::size_t trials, const Config& cfg, std::ostream& out,
               std::ostream& err) {
  std::vector<Family> families = which == "all" ? all_families() : std::vector<Family>{family_from_name(which)};
  families = report_order(families);
  const std::uint64_t seed = effective_seed(cfg);
  std::size_t jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, families.size());

  std::vector<std::future<std::vector<VerificationReport>>> pending(families.size());
  std::size_t launched = 0;
  auto launch = [&] {
    const Family f = families[launched];
    pending[launched++] = std::async(std::launch::async, [f, trials, seed] {
      auto r = run_family(f, trials, seed);
      sort_reports(r);
      return r;
    });
  };
  while (launched < jobs) launch();

  std::vector<VerificationReport> all;
  std::string csv = "lemma_id,instance,lhs,rhs,pass\n";
  out << csv;
  for (std::size_t i = 0; i < families.size(); ++i) {
    auto block = pending[i].get();
    if (launched < families.size()) launch();
    std::string rows = reports_csv(block);
    rows.erase(0, rows.find('\n') + 1);
    out << rows << std::flush;
    csv += rows;
    all.insert(all.end(), block.begin(), block.end());
  }
  const std::string summary = reports_summary(all);
  err << summary;
  save(cfg, "verify.csv", csv);
  save(cfg, "verify-summary.txt", summary);
  return all_pass(all) ? kOk : kVerificationFailed;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite list-learning toolkit: dimensions, covers, products, compression, curves, checks", "listcomb"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--seed", cfg.seed, "Master seed (default: LISTCOMB_SEED or 0)")
      ->each([&](const std::string&) { cfg.seed_given = true; });
  app.add_option("--out", cfg.out_dir, "Also write results into this directory");
  app.add_option("--jobs", cfg.jobs, "Worker threads (0 = logical cores)");
  app.add_option("--exact-cover-cap", cfg.caps.exact_cover, "Largest class for exact covers")
      ->check(CLI::PositiveNumber);
  app.add_option("--product-cap", cfg.caps.product_domain, "Largest product domain")->check(CLI::PositiveNumber);

  std::function<int()> action;

  // dim
  auto* dim = app.add_subcommand("dim", "Exact dimension of a class");
  std::string dim_kind, class_path;
  std::size_t dim_k = 0, max_size = 0;
  dim->add_option("kind", dim_kind, "vc-graph | ds | natarajan | littlestone")
      ->required()
      ->check(CLI::IsMember({"vc-graph", "ds", "natarajan", "littlestone"}));
  dim->add_option("class", class_path, "Class file")->required();
  dim->add_option("--k", dim_k, "List size for DS (default: the class's k)")->check(CLI::PositiveNumber);
  dim->add_option("--max-size", max_size, "Largest subset examined (0 = all)");
  dim->callback([&] {
    action = [&] {
      const ConceptClass cls = io::read_class(class_path);
      const SearchLimits limits{max_size};
      if (dim_kind == "littlestone") {
        const std::size_t v = littlestone_dimension(cls);
        out << v << '\n';
        save(cfg, "dim.json", io::dump(io::Json{{"dimension", dim_kind}, {"k", 1}, {"value", v}}));
        return int{kOk};
      }
      DimensionResult r;
      std::size_t k = cls.k();
      if (dim_kind == "ds") {
        if (dim_k > 0) k = dim_k;
        r = ds_dimension(cls, k, limits);
      } else if (dim_kind == "vc-graph") {
        r = graph_dimension(cls, limits);
      } else {
        r = natarajan_dimension(cls, limits);
      }
      out << r.value << '\n';
      save(cfg, "dim.json", dim_json(dim_kind, k, r, cls));
      return int{kOk};
    };
  });

  // cover
  auto* cover = app.add_subcommand("cover", "Minimal k-list cover");
  std::size_t cover_k = 1, restrict_n = 0;
  bool greedy = false;
  cover->add_option("class", class_path, "Class file")->required();
  cover->add_option("--k", cover_k, "List size of the cover")->required()->check(CLI::PositiveNumber);
  auto* exact_flag = cover->add_flag("--exact", "Branch and bound (default)");
  cover->add_flag("--greedy", greedy, "Greedy upper bound")->excludes(exact_flag);
  cover->add_option("--restrict", restrict_n, "Report C(n, k): worst case over n-point subsets");
  cover->callback([&] {
    action = [&] {
      const ConceptClass cls = io::read_class(class_path);
      const CoverMode mode = greedy ? CoverMode::kGreedy : CoverMode::kExact;
      if (restrict_n > 0) {
        const std::size_t c = covering_size(cls, restrict_n, cover_k, mode, cfg.caps);
        emit(out, cfg, "cover.txt", std::to_string(c) + "\n");
        return int{kOk};
      }
      const CoverResult r = min_cover(cls, cover_k, mode, cfg.caps);
      io::Json j;
      j["k"] = cover_k;
      j["size"] = r.size;
      j["optimal"] = r.optimal;
      j["cover"] = io::class_to_json(io::hypotheses_as_class(r.hypotheses, cls.domain(), cls.labels(), cover_k,
                                                             "cover"));
      emit(out, cfg, "cover.json", io::dump(j));
      return int{kOk};
    };
  });

  // product
  auto* prod = app.add_subcommand("product", "Direct sum of two classes, or the r-th power of one");
  std::string second_path;
  std::size_t power_r = 0;
  prod->add_option("a", class_path, "First class")->required();
  prod->add_option("b", second_path, "Second class (omit with --power)");
  prod->add_option("--power", power_r, "Power of the first class")->check(CLI::PositiveNumber);
  prod->callback([&] {
    action = [&] {
      const ConceptClass a = io::read_class(class_path);
      ConceptClass result;
      if (power_r > 0) {
        if (!second_path.empty()) throw FormatError("--power takes a single class");
        result = power(a, power_r, cfg.caps);
      } else {
        if (second_path.empty()) throw FormatError("product needs two classes or --power");
        result = product(a, io::read_class(second_path), cfg.caps).materialized;
      }
      emit(out, cfg, "product.json", io::dump(io::class_to_json(result)));
      return int{kOk};
    };
  });

  // disambiguate
  auto* dis = app.add_subcommand("disambiguate", "Complete a partial 1-list class");
  std::string dis_kind;
  dis->add_option("kind", dis_kind, "free | minimal")->required()->check(CLI::IsMember({"free", "minimal"}));
  dis->add_option("class", class_path, "Class file")->required();
  dis->callback([&] {
    action = [&] {
      const ConceptClass cls = io::read_class(class_path);
      const ConceptClass r = dis_kind == "free" ? free_disambiguation(cls) : minimal_disambiguation(cls);
      emit(out, cfg, "disambiguated.json", io::dump(io::class_to_json(r)));
      return int{kOk};
    };
  });

  // compress
  auto* comp = app.add_subcommand("compress", "Sample compression");
  comp->require_subcommand(1);
  auto* boost = comp->add_subcommand("boost", "Logarithmic scheme from the class's ERM");
  std::string sample_path;
  double epsilon = 0.0;
  std::size_t block_d = 0, retries = 64;
  boost->add_option("class", class_path, "Class file")->required();
  boost->add_option("sample", sample_path, "Realizable sample file")->required();
  boost->add_option("--epsilon", epsilon, "Game slack, below 1/(2(k+1)); default 1/(4(k+1))");
  boost->add_option("--d", block_d, "Block length (default: smallest that works)");
  boost->add_option("--retries", retries, "Draws tried before giving up")->check(CLI::PositiveNumber);
  boost->add_option("--seed", cfg.seed, "Master seed")->each([&](const std::string&) { cfg.seed_given = true; });
  boost->callback([&] {
    action = [&] {
      const ConceptClass cls = io::read_class(class_path);
      const Sample s = io::read_sample(sample_path, cls);
      const LearningRule rule = erm(cls);
      BoostConfig bc;
      bc.epsilon = epsilon > 0.0 ? epsilon : default_epsilon(rule.k);
      bc.seed = effective_seed(cfg);
      bc.retry_budget = retries;
      if (block_d > 0) {
        bc.d = block_d;
      } else {
        const auto d = minimal_block_length(rule, s, bc.epsilon, std::max<std::size_t>(s.size(), 1), bc);
        if (!d) throw BoostFailure("no block length up to |S| brings the game value below epsilon");
        bc.d = *d;
      }
      const BoostResult r = boost_compress(rule, cls, s, bc);
      const SchemeDescriptor desc{"boost", rule.k, r.d, r.blocks, 0, r.seed};
      emit(out, cfg, "compressed.json", io::dump(compressed_to_json(desc, r.compressed, cls)));
      err << "d=" << r.d << " blocks=" << r.blocks << " attempts=" << r.attempts
          << " game_value=" << format_number(r.game_value) << " pool=" << r.pool_size
          << " misses=" << miss_count(r.reconstruction, s) << '\n';
      return int{kOk};
    };
  });

  auto* val = comp->add_subcommand("validate", "Check a scheme on every sample in a directory");
  std::string scheme_dir, mode_name = "realizable";
  val->add_option("scheme-dir", scheme_dir, "Directory with scheme.json and sample files")->required();
  val->add_option("class", class_path, "Class file")->required();
  val->add_option("--mode", mode_name, "realizable | agnostic")->check(CLI::IsMember({"realizable", "agnostic"}));
  val->callback([&] {
    action = [&] {
      const ConceptClass cls = io::read_class(class_path);
      CompressionScheme scheme = scheme_from_dir(scheme_dir, cls);
      const auto samples = read_sample_dir(scheme_dir, cls);
      ValidationMode mode = ValidationMode::kRealizable;
      if (mode_name == "agnostic") {
        // Realizable scheme run on the largest realizable subsample.
        mode = ValidationMode::kAgnostic;
        auto inner = scheme.compress;
        scheme.compress = [inner, cls](const Sample& s) { return inner(max_realizable_subsample(s, cls)); };
      }
      const ValidationReport r = validate_scheme(scheme, cls, mode, samples);
      std::ostringstream text;
      text << "checked=" << r.checked << " skipped=" << r.skipped << " max_length=" << r.max_length
           << " loss_violations=" << r.loss_violations.size() << " shape_violations=" << r.shape_violations.size()
           << '\n';
      emit(out, cfg, "validation.txt", text.str());
      return r.ok() ? int{kOk} : int{kVerificationFailed};
    };
  });

  // curve
  auto* curve = app.add_subcommand("curve", "Learning curves");
  std::string curve_kind, dist_path, ns_text = "25,100,400";
  std::size_t trials = 1000;
  bool exact = false;
  curve->add_option("kind", curve_kind, "learn | uc | fixed-marginal")
      ->required()
      ->check(CLI::IsMember({"learn", "uc", "fixed-marginal"}));
  curve->add_option("class", class_path, "Class file")->required();
  curve->add_option("distribution", dist_path, "Distribution file (marginal file for fixed-marginal)")->required();
  curve->add_option("--ns", ns_text, "Comma-separated sample sizes");
  curve->add_option("--trials", trials, "Monte Carlo trials per size")->check(CLI::PositiveNumber);
  curve->add_flag("--exact", exact, "Enumerate every sample instead of sampling (learn only)");
  curve->callback([&] {
    action = [&] {
      const ConceptClass cls = io::read_class(class_path);
      const auto ns = parse_ns(ns_text);
      const std::uint64_t seed = effective_seed(cfg);
      std::vector<LearningCurvePoint> points;
      if (curve_kind == "learn") {
        const DiscreteDistribution dist = io::distribution_from_json(io::read_json_file(dist_path), cls);
        points = learning_curve(erm(cls), dist, ns, trials, seed, exact ? CurveMode::kExact : CurveMode::kMonteCarlo);
      } else if (curve_kind == "uc") {
        const DiscreteDistribution dist = io::distribution_from_json(io::read_json_file(dist_path), cls);
        for (std::size_t n : ns) points.push_back(uniform_convergence_rate(cls, dist, n, trials, seed));
      } else {
        const Marginal marginal = read_marginal(dist_path, cls);
        for (const auto& p : fixed_marginal_curve(cls, marginal, ns, trials, seed)) points.push_back(p.point);
      }
      emit(out, cfg, "curve.csv", curve_csv(points));
      return int{kOk};
    };
  });

  // verify
  auto* ver = app.add_subcommand("verify", "Machine-check the finite inequalities on random instances");
  std::string family = "all";
  std::size_t verify_trials = 100;
  ver->add_option("family", family, "ssp | coding | graph-ds | product-dims | direct-sum | disambiguation | all")
      ->required()
      ->check(CLI::IsMember({"ssp", "coding", "graph-ds", "product-dims", "direct-sum", "disambiguation", "all"}));
  ver->add_option("--trials", verify_trials, "Instances per family")->check(CLI::PositiveNumber);
  ver->add_option("--seed", cfg.seed, "Master seed")->each([&](const std::string&) { cfg.seed_given = true; });
  ver->callback([&] { action = [&] { return run_verify(family, verify_trials, cfg, out, err); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, eo;
    const int code = app.exit(e, o, eo);
    out << o.str();
    err << eo.str();
    return code == 0 ? int{kOk} : int{kUsage};
  }

  try {
    return action();
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const BoostFailure& e) {
    err << "boost failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace listcomb::cli
