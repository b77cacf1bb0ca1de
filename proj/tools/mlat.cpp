// Command-line surface for the monoid invariant engine: classify monoids by
// type and lattice shape, print functor images, emit Hasse and eggbox
// diagrams, and run the verification suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mlat/corpus.hpp"
#include "mlat/counting.hpp"
#include "mlat/functor_monoid.hpp"
#include "mlat/greens.hpp"
#include "mlat/lattice.hpp"
#include "mlat/monoid.hpp"
#include "mlat/report.hpp"
#include "mlat/verify.hpp"

namespace {

using namespace mlat;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct SourceOptions {
  std::string file;
  std::string builtin;
  std::string product;
  bool adjoin_zero = false;
  unsigned tn_bound = kDefaultTransformationBound;
};

void add_source_options(CLI::App* cmd, SourceOptions& src) {
  auto* file = cmd->add_option("--file", src.file, "monoid table document (JSON)");
  auto* builtin = cmd->add_option("--builtin", src.builtin,
                                  "builtin monoid name[:param], e.g. cyclic:2, chain:2, "
                                  "nat, bicyclic, bicyclic0, sing1:3, tn:3");
  auto* product = cmd->add_option("--product", src.product,
                                  "comma-separated builtin tokens, e.g. cyclic:2,nat,bicyclic");
  cmd->add_flag("--adjoin-zero", src.adjoin_zero, "adjoin a new absorbing zero (outermost)");
  cmd->add_option("--tn-bound", src.tn_bound, "cap for tn:<n> (default 5)");
  file->excludes(builtin)->excludes(product);
  builtin->excludes(product);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open `" + path + "`");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Monoid resolve_source(const SourceOptions& src) {
  std::optional<Monoid> m;
  if (!src.file.empty()) {
    m = Monoid::finite(load_finite_monoid(read_file(src.file)));
  } else if (!src.builtin.empty()) {
    m = Monoid::builtin(src.builtin, src.tn_bound);
  } else if (!src.product.empty()) {
    std::vector<Monoid> factors;
    std::stringstream ss(src.product);
    std::string token;
    while (std::getline(ss, token, ',')) {
      if (!token.empty()) {
        factors.push_back(Monoid::builtin(token, src.tn_bound));
      }
    }
    m = Monoid::direct_product(std::move(factors));
  } else {
    throw BadParams("no source given: use --file, --builtin or --product");
  }
  if (src.adjoin_zero) {
    m = Monoid::adjoin_zero(*m);
  }
  return *m;
}

OutputFormat parse_format(const std::string& fmt) {
  if (fmt == "dot") {
    return OutputFormat::Dot;
  }
  if (fmt == "text") {
    return OutputFormat::Text;
  }
  throw UnknownFormat("unknown format `" + fmt + "` (expected dot or text)");
}

void write_document(const std::string& out_path, const std::string& doc) {
  if (out_path.empty()) {
    std::cout << doc;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw Error("cannot write `" + out_path + "`");
  }
  out << doc;
}

int finish(const RunReport& report, bool json) {
  std::cout << (json ? report.to_json() : report.to_text());
  return report.exit_status();
}

int cmd_classify(const SourceOptions& src, bool json) {
  const Monoid m = resolve_source(src);
  const ShapeReport shape = classify_shape(m);
  RunReport report;
  report.command = "classify";
  report.note("monoid", shape.monoid_description);
  report.note("type", shape.type.to_string());
  report.note("stable", shape.stable ? "true" : "false");
  report.add("|L|", std::to_string(shape.expected_plain),
             std::to_string(shape.actual_plain));
  report.add("|L+|", std::to_string(shape.expected_enhanced),
             std::to_string(shape.actual_enhanced));
  report.note("shape", std::string(shape.stable ? "stable " : "unstable ") + "L" +
                           shape.type.to_string() + " / L+" + shape.type.to_string());
  return finish(report, json);
}

int cmd_lattice(const SourceOptions& src, bool enhanced, const std::string& fmt,
                const std::string& out_path, bool json) {
  const Monoid m = resolve_source(src);
  const InvariantLattice lat = build_lattice(m, enhanced);
  const std::string doc = emit_hasse(lat, parse_format(fmt));
  RunReport report;
  report.command = enhanced ? "lattice --enhanced" : "lattice";
  report.note("monoid", m.describe());
  report.note("shape", lat.shape_id());
  report.note("nodes", std::to_string(lat.nodes.size()));
  report.note("edges", std::to_string(lat.hasse.size()));
  if (out_path.empty() && !json) {
    std::cout << doc;
    std::cerr << "nodes: " << lat.nodes.size() << ", edges: " << lat.hasse.size() << "\n";
    return kExitPass;
  }
  write_document(out_path, doc);
  return finish(report, json);
}

int cmd_functor(const std::string& functor_token, const SourceOptions& src, bool json) {
  const auto x = parse_functor(functor_token);
  if (!x) {
    throw BadParams("unknown functor `" + functor_token + "`");
  }
  const Monoid m = resolve_source(src);
  const Handle h = m.apply(*x);
  RunReport report;
  report.command = "functor " + std::string(functor_name(*x));
  report.note("monoid", m.describe());
  report.note("image", m.describe_handle(h));
  const auto size = m.handle_size(h);
  report.note("size", size ? std::to_string(*size) : "infinite");
  return finish(report, json);
}

int cmd_greens(const SourceOptions& src, bool fplus, const std::string& fmt,
               const std::string& out_path, bool json) {
  FiniteMonoid table = fplus ? build_functor_monoid() : [&] {
    const Monoid m = resolve_source(src);
    if (!m.is_finite()) {
      throw BackendUnsupported("Green's structure needs a finite universe; `" +
                               m.describe() + "` is infinite");
    }
    return m.materialize();
  }();
  const GreensData g = greens(table);
  const std::string doc = emit_eggbox(table, g, parse_format(fmt));
  RunReport report;
  report.command = fplus ? "greens --fplus" : "greens";
  report.note("order", std::to_string(table.order()));
  report.note("D-classes", std::to_string(g.d.count));
  report.note("J-classes", std::to_string(g.j.count));
  report.note("L-classes", std::to_string(g.l.count));
  report.note("R-classes", std::to_string(g.r.count));
  report.note("H-classes", std::to_string(g.h.count));
  if (out_path.empty() && !json) {
    std::cout << doc;
    std::cerr << "order: " << table.order() << ", D-classes: " << g.d.count << "\n";
    return kExitPass;
  }
  write_document(out_path, doc);
  return finish(report, json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monoid invariant toolkit: idempotent/unit submonoid functors, "
               "lattice invariants, Green's structure and verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "machine-readable reports");

  SourceOptions classify_src;
  auto* classify = app.add_subcommand("classify", "type, stability and lattice shape");
  add_source_options(classify, classify_src);

  SourceOptions lattice_src;
  bool lattice_enhanced = false;
  std::string lattice_fmt = "text";
  std::string lattice_out;
  auto* lattice = app.add_subcommand("lattice", "emit the Hasse diagram of the invariant lattice");
  add_source_options(lattice, lattice_src);
  lattice->add_flag("--enhanced", lattice_enhanced, "use all fifteen functors");
  lattice->add_option("--format", lattice_fmt, "dot or text (default text)");
  lattice->add_option("--out", lattice_out, "write the document to a file");

  SourceOptions functor_src;
  std::string functor_token;
  auto* functor = app.add_subcommand("functor", "print the image of one functor");
  functor->add_option("functor", functor_token, "one of O E G GL GR GLR F FL FR FLR Q P PL PR I")
      ->required();
  add_source_options(functor, functor_src);

  SourceOptions greens_src;
  bool greens_fplus = false;
  std::string greens_fmt = "text";
  std::string greens_out;
  auto* greens_cmd = app.add_subcommand("greens", "emit the eggbox diagram");
  add_source_options(greens_cmd, greens_src);
  greens_cmd->add_flag("--fplus", greens_fplus, "use the fifteen-functor composition monoid");
  greens_cmd->add_option("--format", greens_fmt, "dot or text (default text)");
  greens_cmd->add_option("--out", greens_out, "write the document to a file");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "lemmas, fplus, shapes or all (default all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*classify) {
      return cmd_classify(classify_src, json);
    }
    if (*lattice) {
      return cmd_lattice(lattice_src, lattice_enhanced, lattice_fmt, lattice_out, json);
    }
    if (*functor) {
      return cmd_functor(functor_token, functor_src, json);
    }
    if (*greens_cmd) {
      return cmd_greens(greens_src, greens_fplus, greens_fmt, greens_out, json);
    }
    if (*verify) {
      const RunReport report = verify_suite(suite);
      std::cout << (json ? report.to_json() : report.to_text());
      return report.exit_status();
    }
  } catch (const NotAssociative& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MalformedTable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NoIdentity& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BadParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownFamily& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownFormat& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BackendUnsupported& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
