#include "ringlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ringlab/verify.hpp"

namespace ringlab {

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OrderCapExceeded:
    case ErrorKind::LatticeCapExceeded: return kExitCap;
    case ErrorKind::IoError: return kExitIo;
    default: return kExitValidation;
  }
}

struct Options {
  std::optional<std::size_t> order_cap;
  std::size_t lattice_cap = LatticeCaps{}.max_order;
  std::string format = "text";
  std::optional<std::string> output;
};

std::size_t effective_order_cap(const Options& opts, std::size_t fallback) {
  if (opts.order_cap) return *opts.order_cap;
  if (const char* env = std::getenv("RINGLAB_CAP")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw RingError(ErrorKind::InvalidArgument, std::string("RINGLAB_CAP must be a positive integer, got ") + env);
  }
  return fallback;
}

LatticeCaps lattice_caps(const Options& opts) {
  LatticeCaps caps;
  caps.max_order = opts.lattice_cap;
  return caps;
}

// Writes to --output when given, otherwise to `out`.
void emit(const Options& opts, std::ostream& out, const std::string& text) {
  if (!opts.output) {
    out << text;
    return;
  }
  std::ofstream file(*opts.output);
  if (!file || !(file << text)) throw RingError(ErrorKind::IoError, "cannot write " + *opts.output);
}

std::string file_stem(std::size_t index, const std::string& provenance) {
  std::ostringstream name;
  name << std::setw(3) << std::setfill('0') << index << '_';
  for (char ch : provenance) name << (std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' ? ch : '_');
  return name.str();
}

void dump_catalog(const std::vector<RingCatalogEntry>& catalog, const std::filesystem::path& dir, std::ostream& out) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw RingError(ErrorKind::IoError, "cannot create " + dir.string() + ": " + ec.message());
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    save_ring_file(dir / (file_stem(i, catalog[i].provenance) + ".json"), catalog[i].ring, catalog[i].provenance);
  }
  out << "wrote " << catalog.size() << " ring files to " << dir.string() << '\n';
}

int cmd_analyze(const std::string& source, const Options& opts, std::ostream& out, std::ostream& err) {
  const std::size_t cap = effective_order_cap(opts, kDefaultOrderCap);
  FiniteRing ring = [&] {
    if (source.starts_with("file:")) {
      auto checked = load_ring_file_checked(source.substr(5));
      if (auto* v = std::get_if<RingViolation>(&checked)) {
        throw RingError(ErrorKind::ValidationFailed, v->describe());
      }
      FiniteRing r = std::get<FiniteRing>(std::move(checked));
      if (r.order() > cap) throw RingError(ErrorKind::OrderCapExceeded, "order " + std::to_string(r.order()));
      return r;
    }
    return ring_from_source(source, cap);
  }();
  const RingAnalysis analysis(std::move(ring), lattice_caps(opts));
  if (opts.format == "json") {
    emit(opts, out, analyze_report(analysis).dump(2) + "\n");
  } else if (opts.format == "csv") {
    emit(opts, out, predicates_to_csv({compute_predicates(analysis)}));
  } else {
    emit(opts, out, analyze_report_text(analysis));
  }
  (void)err;
  return kExitOk;
}

std::vector<RingCatalogEntry> build_catalog(const Options& opts) {
  CatalogOptions copts;
  copts.order_cap = effective_order_cap(opts, copts.order_cap);
  return default_catalog(copts);
}

int cmd_verify(const std::string& theorems, unsigned jobs, const Options& opts, const std::optional<std::string>& dump,
               std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.order_cap = effective_order_cap(opts, config.order_cap);
  config.lattice = lattice_caps(opts);
  config.jobs = jobs;
  std::stringstream ids(theorems);
  for (std::string id; std::getline(ids, id, ',');) {
    if (!id.empty()) config.theorems.push_back(id);
  }
  const auto catalog = build_catalog(opts);
  if (dump) dump_catalog(catalog, *dump, err);
  const auto verdicts = run_verification(catalog, config);

  if (opts.format == "json") {
    emit(opts, out, verdicts_to_json(verdicts).dump(2) + "\n");
  } else if (opts.format == "csv") {
    emit(opts, out, verdicts_to_csv(verdicts));
  } else {
    emit(opts, out, verdicts_to_text(verdicts));
  }
  bool ok = true;
  for (const auto& v : verdicts) {
    if (v.overall) continue;
    ok = false;
    const VerdictRow* bad = v.first_disagreement();
    err << v.theorem << " disagrees on " << bad->ring;
    for (std::size_t i = 0; i < bad->witness.size(); ++i) {
      err << (i ? ", " : " at ") << bad->witness[i];
      if (i < bad->witness_names.size()) err << " <" << bad->witness_names[i] << '>';
    }
    err << '\n';
  }
  return ok ? kExitOk : kExitDisagreement;
}

int cmd_catalog_list(const std::string& filter, const Options& opts, std::ostream& out) {
  if (!filter.empty()) {
    const auto& names = predicate_names();
    if (std::find(names.begin(), names.end(), filter) == names.end()) {
      throw RingError(ErrorKind::InvalidArgument, "unknown predicate " + filter);
    }
  }
  const auto catalog = build_catalog(opts);
  const LatticeCaps caps = lattice_caps(opts);
  const auto vectors = parallel_map<PredicateVector>(catalog.size(), 0, [&](std::size_t i) {
    const RingAnalysis analysis(catalog[i].ring, caps);
    return compute_predicates(analysis);
  });

  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (filter.empty() || vectors[i].value(filter)) keep.push_back(i);
  }

  if (opts.format == "json") {
    Json list = Json::array();
    for (std::size_t i : keep) {
      Json item;
      item["provenance"] = catalog[i].provenance;
      item["order"] = catalog[i].ring.order();
      item["predicates"] = predicates_to_json(vectors[i])["predicates"];
      list.push_back(std::move(item));
    }
    emit(opts, out, list.dump(2) + "\n");
  } else if (opts.format == "csv") {
    std::vector<PredicateVector> rows;
    for (std::size_t i : keep) rows.push_back(vectors[i]);
    emit(opts, out, predicates_to_csv(rows));
  } else {
    std::ostringstream text;
    for (std::size_t i : keep) {
      const auto& pv = vectors[i];
      text << std::left << std::setw(44) << catalog[i].provenance << std::right << std::setw(5)
           << catalog[i].ring.order() << "  " << (pv.value("commutative") ? "comm" : "noncomm")
           << (pv.value("uniquely_clean") ? " uc" : "") << (pv.value("uniquely_pi_clean") ? " upc" : "")
           << (pv.value("abelian") ? " abelian" : "") << (pv.value("local") ? " local" : "")
           << (pv.value("potent") ? " potent" : "") << '\n';
    }
    text << keep.size() << " entries\n";
    emit(opts, out, text.str());
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, Options& opts) {
  cmd->add_option("--order-cap", opts.order_cap, "Largest ring order to construct")->check(CLI::PositiveNumber);
  cmd->add_option("--lattice-cap", opts.lattice_cap, "Largest ring order for ideal-lattice work")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--output", opts.output, "Write the report to this file");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"ringlab: decide clean-family predicates on small finite rings"};
  app.name("ringlab");
  app.require_subcommand(0, 1);

  Options opts;
  std::optional<std::string> top_dump;
  app.add_option("--dump-catalog", top_dump, "Write every catalog ring to this directory");

  auto* analyze = app.add_subcommand("analyze", "Report predicates, radicals and spectrum of one ring");
  std::string source;
  analyze->add_option("--ring", source, "Ring source, e.g. zmod:3 or file:ring.json")->required();
  add_common(analyze, opts);

  auto* verify = app.add_subcommand("verify", "Run verification suites over the catalog");
  std::string theorems;
  unsigned jobs = 0;
  std::optional<std::string> verify_dump;
  verify->add_option("--theorems", theorems, "Comma-separated suite ids (default: all)");
  verify->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  verify->add_option("--dump-catalog", verify_dump, "Also write every catalog ring to this directory");
  add_common(verify, opts);

  auto* catalog = app.add_subcommand("catalog", "List or dump the default catalog");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List catalog entries");
  std::string filter;
  list->add_option("--filter", filter, "Only entries where this predicate holds");
  add_common(list, opts);
  auto* dump = catalog->add_subcommand("dump", "Write one ring file per entry");
  std::string dump_dir;
  dump->add_option("--dir", dump_dir, "Output directory")->required();
  add_common(dump, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*analyze) return cmd_analyze(source, opts, out, err);
    if (*verify) return cmd_verify(theorems, jobs, opts, verify_dump ? verify_dump : top_dump, out, err);
    if (*list) return cmd_catalog_list(filter, opts, out);
    if (*dump) {
      dump_catalog(build_catalog(opts), dump_dir, out);
      return kExitOk;
    }
    if (top_dump) {
      dump_catalog(build_catalog(opts), *top_dump, out);
      return kExitOk;
    }
    out << app.help();
    return kExitOk;
  } catch (const RingError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace ringlab
