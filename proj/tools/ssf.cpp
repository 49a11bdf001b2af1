// Command-line front end: classify, verify, h2, extension-report, catalog.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ssf/catalog.hpp"
#include "ssf/cohomology.hpp"
#include "ssf/errors.hpp"
#include "ssf/extension.hpp"
#include "ssf/group_algorithms.hpp"
#include "ssf/group_io.hpp"
#include "ssf/group_spec.hpp"
#include "ssf/report.hpp"
#include "ssf/spaceform.hpp"
#include "ssf/verify.hpp"

namespace {

enum ExitCode { kOk = 0, kFailed = 1, kUsage = 2, kIo = 3, kBound = 4 };

struct UsageError : ssf::Error {
  using ssf::Error::Error;
};

struct FileError : ssf::Error {
  using ssf::Error::Error;
};

struct GroupSource {
  std::string spec;
  std::string file;
};

ssf::FiniteGroup resolve_group(const GroupSource& src, std::string& name) {
  if (!src.file.empty()) {
    name = src.file;
    try {
      return ssf::load_group(src.file);
    } catch (const ssf::BoundError&) {
      throw;
    } catch (const ssf::Error& e) {
      throw FileError(e.what());
    }
  }
  if (src.spec.empty()) throw UsageError("one of --group or --group-file is required");
  try {
    const auto spec = ssf::GroupSpec::parse(src.spec);
    name = spec.str();
    return ssf::make_group(spec);
  } catch (const ssf::BoundError&) {
    throw;
  } catch (const ssf::Error& e) {
    throw UsageError(e.what());
  }
}

std::optional<bool> parse_alpha(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "true") return true;
  if (s == "false") return false;
  throw UsageError("--alpha-vanishes expects true or false");
}

int run_classify(int n, const GroupSource& src, const std::string& alpha,
                 const std::string& format) {
  std::string name;
  const auto g = resolve_group(src, name);
  const ssf::SpaceFormInstance inst(n, g, parse_alpha(alpha));
  const auto verdict = ssf::classify(inst);
  const auto report = ssf::make_report(inst, name, verdict);
  if (format == "json") {
    std::cout << ssf::to_json(report) << '\n';
  } else {
    std::cout << ssf::to_text(report);
  }
  return kOk;
}

int run_verify(std::size_t max_order, const std::vector<std::string>& wanted) {
  if (max_order > ssf::kDefaultCatalogBound) {
    throw ssf::BoundError("--max-order is limited to " +
                          std::to_string(ssf::kDefaultCatalogBound));
  }
  const auto& all = ssf::suite_names();
  for (const auto& w : wanted) {
    if (std::find(all.begin(), all.end(), w) == all.end()) {
      throw UsageError("unknown suite '" + w + "'");
    }
  }
  const auto& names = wanted.empty() ? all : wanted;
  bool ok = true;
  std::cout << std::left << std::setw(22) << "suite" << std::setw(6) << "result" << std::right
            << std::setw(8) << "groups" << std::setw(9) << "checks" << std::setw(10) << "seconds"
            << "  description\n";
  for (const auto& name : names) {
    const auto r = ssf::run_suite(name, max_order);
    ok = ok && r.pass;
    std::cout << std::left << std::setw(22) << r.name << std::setw(6)
              << (r.pass ? "PASS" : "FAIL") << std::right << std::setw(8) << r.groups
              << std::setw(9) << r.checks << std::setw(10) << std::fixed << std::setprecision(3)
              << r.seconds << "  " << r.description << '\n';
    for (std::size_t i = 0; i < r.failures.size() && i < 20; ++i) {
      std::cout << "    " << r.failures[i] << '\n';
    }
  }
  return ok ? kOk : kFailed;
}

int run_h2(const GroupSource& src) {
  std::string name;
  const auto g = resolve_group(src, name);
  const auto h2 = ssf::cocycle_space(g);
  std::cout << "group: " << name << " (order " << g.order() << ")\n"
            << "cocycle dimension: " << h2.cocycle_dim() << '\n'
            << "coboundary dimension: " << h2.coboundary_dim() << '\n'
            << "H^2 dimension: " << h2.h2_dim() << '\n'
            << "classes: " << h2.classes.size() << '\n';
  return kOk;
}

int run_extension_report(const GroupSource& src, std::size_t index, const std::string& dump) {
  std::string name;
  const auto g = resolve_group(src, name);
  const auto h2 = ssf::cocycle_space(g);
  if (index >= h2.classes.size()) {
    throw UsageError("class index " + std::to_string(index) + " out of range (" +
                     std::to_string(h2.classes.size()) + " classes)");
  }
  const auto& f = h2.classes[index].representative;
  const auto ext = ssf::build_extension(g, f);
  if (!dump.empty()) {
    std::ofstream out(dump);
    if (!out) throw FileError("cannot write " + dump);
    ssf::write_cocycle(out, f);
  }
  std::cout << "group: " << name << ", class " << index << " of " << h2.classes.size()
            << (ssf::is_split(g, f) ? " (split)" : " (non-split)") << '\n';
  std::cout << "z = " << ext.total().label(ssf::ExtensionGroup::z()) << " (index "
            << ssf::ExtensionGroup::z() << ")\n";
  std::cout << "total group table:\n";
  ssf::write_group(std::cout, ext.total());
  std::cout << "preimage orders:\n";
  const auto profile = ssf::preimage_order_profile(ext);
  for (ssf::Elem a = 0; a < g.order(); ++a) {
    std::cout << "  " << g.label(a) << " (order " << g.element_order(a) << "): {"
              << profile[a].first << ", " << profile[a].second << "}\n";
  }
  return kOk;
}

int run_catalog(std::size_t max_order) {
  for (const auto& e : ssf::generate_catalog(max_order)) {
    std::cout << std::left << std::setw(14) << e.spec << std::right << std::setw(4)
              << e.group.order() << " ";
    for (std::size_t i = 0; i < e.tags.size(); ++i) std::cout << (i ? "," : "") << e.tags[i];
    std::cout << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-group criteria for PSC moduli of spherical space forms"};
  app.require_subcommand(1);

  int dimension = 0;
  GroupSource classify_src;
  std::string alpha;
  std::string format = "text";
  auto* classify = app.add_subcommand("classify", "Decide the PSC moduli verdict for (n, G)");
  classify->add_option("-n,--dimension", dimension, "Manifold dimension")->required();
  auto* grp = classify->add_option("-g,--group", classify_src.spec, "Group spec, e.g. C3xQ8");
  auto* grp_file =
      classify->add_option("--group-file", classify_src.file, "Cayley table file");
  grp->excludes(grp_file);
  classify->add_option("--alpha-vanishes", alpha, "Alpha invariant of the universal cover vanishes")
      ->check(CLI::IsMember({"true", "false"}));
  classify->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  std::size_t verify_max = 24;
  std::vector<std::string> suites;
  auto* verify = app.add_subcommand("verify", "Run the machine-checked property suites");
  verify->add_option("--max-order", verify_max, "Largest group order to examine");
  verify->add_option("--suite", suites, "Suite name (repeatable); default all");

  GroupSource h2_src;
  auto* h2 = app.add_subcommand("h2", "Cocycle/coboundary dimensions and class count");
  auto* h2_spec = h2->add_option("spec", h2_src.spec, "Group spec");
  h2->add_option("--group-file", h2_src.file, "Cayley table file")->excludes(h2_spec);

  GroupSource ext_src;
  std::size_t class_index = 0;
  std::string dump;
  auto* ext = app.add_subcommand("extension-report", "Total group of one H^2 class");
  ext->add_option("spec", ext_src.spec, "Group spec")->required();
  ext->add_option("class-index", class_index, "Index into the sorted class list")->required();
  ext->add_option("--cocycle-out", dump, "Write the class representative to this file");

  std::size_t catalog_max = 16;
  auto* catalog = app.add_subcommand("catalog", "List the bundled group families");
  catalog->add_option("--max-order", catalog_max, "Largest order")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify) return run_classify(dimension, classify_src, alpha, format);
    if (*verify) return run_verify(verify_max, suites);
    if (*h2) return run_h2(h2_src);
    if (*ext) return run_extension_report(ext_src, class_index, dump);
    if (*catalog) return run_catalog(catalog_max);
  } catch (const ssf::BoundError& e) {
    std::cerr << "bound exceeded: " << e.what() << '\n';
    return kBound;
  } catch (const FileError& e) {
    std::cerr << "file error: " << e.what() << '\n';
    return kIo;
  } catch (const ssf::IoError& e) {
    std::cerr << "file error: " << e.what() << '\n';
    return kIo;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const ssf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
