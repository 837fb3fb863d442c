#include "slcg/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "slcg/error.hpp"
#include "slcg/functors.hpp"
#include "slcg/io.hpp"
#include "slcg/suites.hpp"

namespace slcg::cli {

namespace {

struct Output {
  nlohmann::json body;
  int code = 0;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::GuardExceeded:
      return 3;
    case ErrorKind::AssertionFailed:
    case ErrorKind::HypothesisFailed:
      return 1;
    default:
      return 2;
  }
}

Output verdict(nlohmann::json report) {
  const bool holds = report.value("holds", true);
  return {std::move(report), holds ? 0 : 1};
}

void render_text(const nlohmann::json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

std::vector<std::string> split_labels(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const auto comma = item.find(',', start);
      const auto piece = item.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!piece.empty()) out.push_back(piece);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

ConvexGroup load_cg(const std::string& path) {
  const auto doc = io::parse(path);
  if (doc.kind != "convex-group") {
    throw Error(ErrorKind::SchemaError, "expected a convex-group document", {{"field", "kind"}, {"got", doc.kind}});
  }
  return io::convex_group_from_json(doc.payload);
}

std::vector<GroupHom> load_homs(const std::vector<std::string>& paths, const std::function<FiniteGroup(std::size_t)>& src,
                                const std::function<FiniteGroup(std::size_t)>& dst) {
  std::vector<GroupHom> homs;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto doc = io::parse(paths[i]);
    const auto s = src(i);
    const auto t = dst(i);
    homs.push_back(validate_hom(io::map_from_json(doc.payload, s.carrier(), t.carrier()), s, t));
  }
  return homs;
}

std::uint64_t default_guard() {
  if (const char* env = std::getenv("WORKBENCH_MAX_ENUM")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::SchemaError, "WORKBENCH_MAX_ENUM must be a non-negative integer",
                  {{"field", "WORKBENCH_MAX_ENUM"}});
    }
  }
  return kDefaultEnumGuard;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite stratified L-convex groups: validation, constructions and theorem checks", "slcg"};
  app.fallthrough();
  app.require_subcommand(1);

  std::uint64_t guard = 0;
  bool guard_given = false;
  std::string format = "json";
  std::string out_path;
  app.add_option_function<std::uint64_t>(
      "--max-enum", [&](std::uint64_t v) { guard = v, guard_given = true; }, "Bound on |L|^|X| for enumerations");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "Write the report to a file");

  std::function<Output()> action;
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  bool exhaustive = false;
  auto options = [&] { return suites::Options{seed, cases, exhaustive, guard}; };

  // validate
  std::string file;
  auto* validate = app.add_subcommand("validate", "Validate a document and print its canonical form");
  validate->add_option("file", file)->required();
  validate->callback([&] { action = [&] { return Output{io::canonical(io::parse(file))}; }; });

  // gen structure
  auto* gen = app.add_subcommand("gen", "Generate structures");
  gen->require_subcommand(1);
  std::string subbase_path;
  bool stratified = false;
  auto* gen_structure = gen->add_subcommand("structure", "Structure generated by a subbase");
  gen_structure->add_option("--subbase", subbase_path)->required();
  gen_structure->add_flag("--stratified", stratified);
  gen_structure->callback([&] {
    action = [&] {
      const auto doc = io::parse(subbase_path);
      CarrierPtr carrier;
      AlgebraPtr algebra;
      const auto sets = io::subbase_from_json(doc.payload, carrier, algebra);
      return Output{io::to_json(generate(carrier, algebra, sets, stratified))};
    };
  });

  // construct
  auto* construct = app.add_subcommand("construct", "Group-level constructions");
  construct->require_subcommand(1);
  std::vector<std::string> inputs;
  std::vector<std::string> hom_paths;
  std::vector<std::string> labels;
  std::string group_path;

  auto* product = construct->add_subcommand("product", "Product of two convex groups");
  product->add_option("inputs", inputs)->required()->expected(2);
  product->callback([&] {
    action = [&] { return Output{io::to_json(product_group(load_cg(inputs[0]), load_cg(inputs[1])))}; };
  });

  auto* join = construct->add_subcommand("join", "Join of convex groups on one group");
  join->add_option("inputs", inputs)->required();
  join->callback([&] {
    action = [&] {
      std::vector<ConvexGroup> groups;
      for (const auto& p : inputs) groups.push_back(load_cg(p));
      return Output{io::to_json(join_group(groups))};
    };
  });

  auto* initial = construct->add_subcommand("initial", "Initial lift along homomorphisms");
  initial->add_option("--group", group_path, "Source group")->required();
  initial->add_option("--hom", hom_paths, "Homomorphisms, one per target");
  initial->add_option("--target", inputs, "Target convex groups");
  initial->callback([&] {
    action = [&] {
      const auto source = io::group_from_json(io::parse(group_path).payload);
      std::vector<ConvexGroup> targets;
      for (const auto& p : inputs) targets.push_back(load_cg(p));
      if (targets.size() != hom_paths.size()) throw Error(ErrorKind::Mismatch, "one --target per --hom required");
      const auto homs = load_homs(
          hom_paths, [&](std::size_t) { return source; }, [&](std::size_t i) { return targets[i].group; });
      const auto algebra = targets.empty() ? chain(2) : targets.front().structure.algebra_ptr();
      return Output{io::to_json(initial_group_structure(source, algebra, homs, targets))};
    };
  });

  auto* final_lift = construct->add_subcommand("final", "Final lift along surjective homomorphisms");
  final_lift->add_option("--group", group_path, "Target group")->required();
  final_lift->add_option("--hom", hom_paths, "Homomorphisms, one per source")->required();
  final_lift->add_option("--source", inputs, "Source convex groups")->required();
  final_lift->callback([&] {
    action = [&] {
      const auto target = io::group_from_json(io::parse(group_path).payload);
      std::vector<ConvexGroup> sources;
      for (const auto& p : inputs) sources.push_back(load_cg(p));
      if (sources.size() != hom_paths.size()) throw Error(ErrorKind::Mismatch, "one --source per --hom required");
      const auto homs = load_homs(
          hom_paths, [&](std::size_t i) { return sources[i].group; }, [&](std::size_t) { return target; });
      const auto algebra = sources.front().structure.algebra_ptr();
      return Output{io::to_json(final_group_structure(target, algebra, homs, sources, guard))};
    };
  });

  auto* sub = construct->add_subcommand("subspace", "Subspace on a subgroup");
  sub->add_option("input", file)->required();
  sub->add_option("--subset", labels, "Subgroup elements (comma-separated labels)")->required();
  sub->callback([&] {
    action = [&] {
      const auto cg = load_cg(file);
      return Output{io::to_json(subgroup_space(cg, io::subset_from_labels(*cg.group.carrier(), split_labels(labels))))};
    };
  });

  auto* quo = construct->add_subcommand("quotient", "Quotient by a normal subgroup");
  quo->add_option("input", file)->required();
  quo->add_option("--normal", labels, "Normal subgroup elements (comma-separated labels)")->required();
  quo->callback([&] {
    action = [&] {
      const auto cg = load_cg(file);
      const auto q = quotient_group_space(cg, io::subset_from_labels(*cg.group.carrier(), split_labels(labels)), guard);
      auto body = io::to_json(q.space);
      body["complement_ctc"] = q.complement_ctc.to_json();
      return Output{std::move(body), q.complement_ctc.holds ? 0 : 1};
    };
  });

  // check
  auto* check = app.add_subcommand("check", "Property checks");
  check->require_subcommand(1);
  auto* check_slcg = check->add_subcommand("slcg", "Is the document a stratified L-convex group");
  check_slcg->add_option("file", file)->required();
  check_slcg->callback([&] { action = [&] { return verdict(load_cg(file).verified.to_json()); }; });

  auto* check_cg = check->add_subcommand("cg", "Is the document a crisp convex group");
  check_cg->add_option("file", file)->required();
  check_cg->callback([&] {
    action = [&] {
      const auto doc = io::parse(file);
      const auto& j = doc.payload;
      if (doc.kind != "convex-group" || !j.contains("group") || !j.contains("structure")) {
        throw Error(ErrorKind::SchemaError, "expected a convex-group document", {{"field", "kind"}});
      }
      const auto group = io::group_from_json(j["group"]);
      return verdict(is_cg(group, io::crisp_from_json(j["structure"], group.carrier())).to_json());
    };
  });

  std::string theorem;
  auto* check_theorem = check->add_subcommand("theorem", "Run a theorem suite over seeded instances");
  check_theorem->add_option("name", theorem)->required()->check(CLI::IsMember(suites::theorem_names()));
  check_theorem->add_option("--seed", seed);
  check_theorem->add_option("--cases", cases);
  check_theorem->add_flag("--exhaustive", exhaustive);
  check_theorem->callback([&] { action = [&] { return verdict(suites::run_theorem(theorem, options())); }; });

  // functor
  auto* functor = app.add_subcommand("functor", "Apply omega or rho");
  functor->require_subcommand(1);
  std::string algebra_path;
  auto* f_omega = functor->add_subcommand("omega", "Embed a crisp structure");
  f_omega->add_option("file", file)->required();
  f_omega->add_option("--algebra", algebra_path)->required();
  f_omega->callback([&] {
    action = [&] {
      const auto crisp = io::crisp_from_json(io::parse(file).payload);
      const auto algebra = io::algebra_from_json(io::parse(algebra_path).payload);
      return Output{io::to_json(omega(crisp, algebra))};
    };
  });
  auto* f_rho = functor->add_subcommand("rho", "Reflect a convex-group document to a crisp structure");
  f_rho->add_option("file", file)->required();
  f_rho->add_option("--algebra", algebra_path);
  f_rho->callback([&] {
    action = [&] {
      const auto doc = io::parse(file);
      if (doc.kind != "convex-group") {
        throw Error(ErrorKind::SchemaError, "expected a convex-group document", {{"field", "kind"}});
      }
      const auto group = io::group_from_json(doc.payload["group"]);
      const auto structure = io::structure_from_json(doc.payload["structure"], group.carrier());
      if (!algebra_path.empty()) {
        const auto algebra = io::algebra_from_json(io::parse(algebra_path).payload);
        if (!same_algebra(algebra, structure.algebra_ptr())) {
          throw Error(ErrorKind::AlgebraMismatch, "--algebra differs from the structure's algebra");
        }
      }
      return Output{io::to_json(rho(group, structure))};
    };
  });

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force cross-checks");
  oracle_cmd->require_subcommand(1);
  std::string what;
  auto* compare = oracle_cmd->add_subcommand("compare", "Compare an algorithm with its oracle");
  compare->add_option("what", what)->required()->check(CLI::IsMember({"generate", "rho", "lcp"}));
  compare->add_option("--seed", seed);
  compare->add_option("--cases", cases);
  compare->callback([&] { action = [&] { return verdict(suites::oracle_compare(what, options())); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  Output result;
  try {
    if (!guard_given) guard = default_guard();
    result = action();
  } catch (const Error& e) {
    result = {{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}, {"witness", e.witness()}},
              exit_code(e.kind())};
  } catch (const std::exception& e) {
    result = {{{"error", "InternalError"}, {"message", e.what()}, {"witness", nullptr}}, 2};
  }

  std::string text;
  if (format == "text") {
    std::ostringstream os;
    render_text(result.body, "", os);
    text = os.str();
  } else {
    text = io::serialize(result.body);
  }
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << out_path << "\n";
      return 2;
    }
    f << text;
  }
  return result.code;
}

}  // namespace slcg::cli
