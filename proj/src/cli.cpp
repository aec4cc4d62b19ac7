#include "skein/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "skein/braid.hpp"
#include "skein/corpus.hpp"
#include "skein/diagram.hpp"
#include "skein/kauffman.hpp"
#include "skein/lmt.hpp"
#include "skein/transfer.hpp"

namespace skein {

namespace {

/// key=value lines in porcelain mode, aligned "key: value" otherwise.
class Printer {
 public:
  Printer(std::ostream& out, bool porcelain) : out_(out), porcelain_(porcelain) {}

  void field(std::string_view key, std::string_view label, const std::string& value) {
    if (porcelain_) {
      out_ << key << '=' << value << '\n';
    } else {
      out_ << std::left << std::setw(22) << (std::string(label) + ":") << value << '\n';
    }
  }

  bool porcelain() const { return porcelain_; }
  std::ostream& stream() { return out_; }

 private:
  std::ostream& out_;
  bool porcelain_;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Diagram load_diagram(const std::string& path) {
  Diagram d = parse_pd(read_input(path));
  if (d.empty()) throw ParseError("diagram has no components", 0, 0);
  return d;
}

OrientationMask orientation_for(const Diagram& d, const std::string& text) {
  if (text.empty()) return reference_orientation(d);
  OrientationMask o = OrientationMask::parse(text);
  if (o.size() != d.component_count()) {
    throw ParseError("orientation mask has " + std::to_string(o.size()) + " bits but the diagram has " +
                         std::to_string(d.component_count()) + " components",
                     0, 0);
  }
  return o;
}

struct ComputeArgs {
  std::string path;
  bool oriented = false;
  bool specialize = false;
  std::string orientation;
};

void cmd_compute(const ComputeArgs& args, Printer& p, KauffmanEngine& engine) {
  const Diagram d = load_diagram(args.path);
  const LaurentAZ lambda = lambda_poly(d, engine);
  p.field("crossings", "crossings", std::to_string(d.crossing_count()));
  p.field("components", "components", std::to_string(d.component_count()));
  p.field("lambda", "Lambda(D)", format_poly(lambda));
  if (args.oriented || !args.orientation.empty()) {
    const OrientationMask o = orientation_for(d, args.orientation);
    const LaurentAZ f = f_oriented(d, o, engine);
    p.field("orientation", "orientation", o.to_string());
    p.field("writhe", "writhe", std::to_string(writhe(d, o)));
    p.field("f_oriented", "F(L)", format_poly(f));
    if (args.specialize) p.field("f_specialized", "F(L) at z=-a-1/a", format_poly(substitute_z(f)));
  } else if (args.specialize) {
    p.field("lambda_specialized", "Lambda(D) at z=-a-1/a", format_poly(substitute_z(lambda)));
  }
}

void cmd_gtau(const std::string& path, Printer& p) {
  const Diagram d = load_diagram(path);
  p.field("components", "components", std::to_string(d.component_count()));
  p.field("g_tau", "g_tau(L)", format_poly(g_tau(d)));
}

void cmd_lmt(const std::string& path, const std::string& orientation, Printer& p) {
  const Diagram d = load_diagram(path);
  const OrientationMask o = orientation_for(d, orientation);
  p.field("components", "components", std::to_string(d.component_count()));
  p.field("orientation", "orientation", o.to_string());
  p.field("lmt_rhs", "sublink sum", format_poly(lmt_rhs(d, o)));
}

struct VerifyArgs {
  std::string path;
  std::string orientation;
  bool corpus = false;
  int random = 0;
  int max_crossings = 8;
  std::uint64_t seed = 42;
};

struct Subject {
  std::string name;
  std::string braid;
  Diagram diagram;
};

std::vector<Subject> verify_subjects(const VerifyArgs& args) {
  std::vector<Subject> subjects;
  if (!args.path.empty()) subjects.push_back({args.path, {}, load_diagram(args.path)});
  if (args.corpus) {
    for (const auto& entry : corpus()) subjects.push_back({std::string(entry.name), std::string(entry.braid), parse_pd(entry.pd_text)});
  }
  if (args.random > 0) {
    std::mt19937_64 rng(args.seed);
    RandomBraidOptions options;
    options.max_crossings = args.max_crossings;
    for (int i = 0; i < args.random; ++i) {
      const BraidWord b = random_braid(rng, options);
      std::ostringstream name;
      name << "random-" << std::setw(4) << std::setfill('0') << i;
      subjects.push_back({name.str(), format_braid(b), braid_closure(b)});
    }
  }
  return subjects;
}

int cmd_verify(const VerifyArgs& args, Printer& p, KauffmanEngine& engine) {
  const auto subjects = verify_subjects(args);
  if (subjects.empty()) throw ParseError("nothing to verify: give a file, --corpus or --random N", 0, 0);

  std::size_t checks = 0;
  std::size_t failures = 0;
  std::size_t failed_diagrams = 0;
  auto& out = p.stream();
  for (const auto& s : subjects) {
    const OrientationMask o = args.path == s.name ? orientation_for(s.diagram, args.orientation)
                                                  : reference_orientation(s.diagram);
    const auto reports = verify_all(s.diagram, o, s.name, engine);
    std::size_t failed_here = 0;
    for (const auto& r : reports) failed_here += r.pass ? 0 : 1;
    checks += reports.size();
    failures += failed_here;
    failed_diagrams += failed_here > 0 ? 1 : 0;

    if (p.porcelain()) {
      out << "diagram=" << s.name << '\n';
      if (!s.braid.empty()) out << "braid=" << s.braid << '\n';
      out << "checks=" << reports.size() << '\n' << "failed=" << failed_here << '\n';
    } else {
      out << (failed_here == 0 ? "PASS " : "FAIL ") << s.name;
      if (!s.braid.empty()) out << " [" << s.braid << "]";
      out << " (" << reports.size() << " checks)\n";
    }
    for (const auto& r : reports) {
      if (r.pass) continue;
      if (p.porcelain()) {
        out << "fail=" << claim_name(r.claim) << ' ' << r.detail << " lhs=" << r.lhs << " rhs=" << r.rhs << '\n';
      } else {
        out << "  " << claim_name(r.claim) << ' ' << r.detail << ": " << r.lhs << " != " << r.rhs << '\n';
      }
    }
  }

  if (p.porcelain()) {
    out << "diagrams=" << subjects.size() << '\n'
        << "checks=" << checks << '\n'
        << "failures=" << failures << '\n'
        << "status=" << (failures == 0 ? "pass" : "fail") << '\n';
  } else if (failures == 0) {
    out << "all " << subjects.size() << " diagrams passed (" << checks << " checks)\n";
  } else {
    out << failed_diagrams << " of " << subjects.size() << " diagrams failed (" << failures << " of " << checks
        << " checks)\n";
  }
  return failures == 0 ? kExitOk : kExitVerificationFailed;
}

void cmd_corpus_list(Printer& p) {
  auto& out = p.stream();
  for (const auto& entry : corpus()) {
    if (p.porcelain()) {
      out << "entry=" << entry.name << '\n';
    } else {
      out << std::left << std::setw(22) << entry.name << " com=" << entry.expected_com << "  " << entry.notes << '\n';
    }
  }
}

void cmd_corpus_show(const std::string& name, std::ostream& out) {
  const CorpusEntry* entry = find_corpus_entry(name);
  if (entry == nullptr) throw ParseError("no corpus entry named '" + name + "'", 0, 0);
  out << "# " << entry->name << ": " << entry->notes << '\n';
  if (!entry->braid.empty()) out << "# braid " << entry->braid << '\n';
  out << entry->pd_text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kauffman polynomial engine and sublink linking-number checks for framed link diagrams", "skein"};
  app.require_subcommand(1);
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain, "machine-readable key=value output");

  ComputeArgs compute_args;
  auto* compute = app.add_subcommand("compute", "Kauffman polynomial of a PD diagram");
  compute->add_option("path", compute_args.path, "PD file, or - for standard input")->required();
  compute->add_flag("--oriented", compute_args.oriented, "also print F of the 0-framed oriented link");
  compute->add_flag("--specialize", compute_args.specialize, "also print the value at z = -a - a^-1");
  compute->add_option("--orientation", compute_args.orientation, "orientation bitstring, one bit per component");

  std::string gtau_path;
  auto* gtau = app.add_subcommand("gtau", "sum over all orientations of (-1)^com a^writhe");
  gtau->add_option("path", gtau_path, "PD file, or - for standard input")->required();

  std::string lmt_path;
  std::string lmt_orientation;
  auto* lmt = app.add_subcommand("lmt", "sublink linking-number generating function");
  lmt->add_option("path", lmt_path, "PD file, or - for standard input")->required();
  lmt->add_option("--orientation", lmt_orientation, "orientation bitstring, one bit per component");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check the specialization formula and its lemmas");
  verify->add_option("path", verify_args.path, "PD file, or - for standard input");
  verify->add_option("--orientation", verify_args.orientation, "orientation bitstring for the file");
  verify->add_flag("--corpus", verify_args.corpus, "verify every built-in corpus entry");
  verify->add_option("--random", verify_args.random, "number of random braid closures")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-crossings", verify_args.max_crossings, "crossing bound for random diagrams")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_args.seed, "seed for random diagrams");

  auto* corpus_cmd = app.add_subcommand("corpus", "built-in diagrams");
  corpus_cmd->require_subcommand(1);
  auto* corpus_list = corpus_cmd->add_subcommand("list", "list entries");
  std::string show_name;
  auto* corpus_show = corpus_cmd->add_subcommand("show", "print an entry as PD text");
  corpus_show->add_option("name", show_name, "entry name")->required();

  for (auto* sub : {compute, gtau, lmt, verify, corpus_cmd}) sub->fallthrough();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  Printer printer(out, porcelain);
  KauffmanEngine engine(options_from_environment());
  try {
    if (*compute) cmd_compute(compute_args, printer, engine);
    if (*gtau) cmd_gtau(gtau_path, printer);
    if (*lmt) cmd_lmt(lmt_path, lmt_orientation, printer);
    if (*verify) return cmd_verify(verify_args, printer, engine);
    if (*corpus_list) cmd_corpus_list(printer);
    if (*corpus_show) cmd_corpus_show(show_name, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const DiagramError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  } catch (const ArithmeticError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
  return kExitOk;
}

}  // namespace skein
