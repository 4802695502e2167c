#include "toric/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "toric/errors.hpp"
#include "toric/ideal_file.hpp"
#include "toric/oracle.hpp"
#include "toric/toric_sum.hpp"

namespace toric::cli {

namespace {

struct Options {
  std::string file;
  std::size_t max_degree = 0;  // 0: derive from the generators
  bool certify = false;
  bool allow_degenerate = false;
  std::string ideal;
  std::string pin;
};

std::string join_ids(const std::vector<IdealBlock>& blocks, const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += blocks[idx[i]].name;
  }
  return out;
}

DegreeBound degree_bound(const std::vector<IdealBlock>& blocks, std::size_t requested) {
  if (requested > 0) return DegreeBound(requested);
  std::size_t max_gen = 1;
  for (const auto& b : blocks)
    if (b.generators)
      for (const auto& g : *b.generators) max_gen = std::max<std::size_t>(max_gen, g.degree());
  return DegreeBound(max_gen + 2);
}

int cmd_dim(const std::vector<IdealBlock>& blocks, std::ostream& out) {
  for (const auto& b : blocks) out << b.name << ": dim(rank)=" << dimension(b.parametrization) << "\n";
  return kSuccess;
}

int cmd_homog(const std::vector<IdealBlock>& blocks, std::ostream& out) {
  for (const auto& b : blocks) {
    out << b.name << ": ";
    if (auto cert = homogeneity_certificate(b.parametrization)) {
      out << "omega =";
      for (const auto& w : cert->omega) out << " " << w.get_str();
      out << "\n";
    } else {
      out << "not homogeneous\n";
    }
  }
  return kSuccess;
}

int cmd_kernel(const std::vector<IdealBlock>& blocks, const Options& opt, std::ostream& out) {
  const DegreeBound bound = degree_bound(blocks, opt.max_degree);
  for (const auto& b : blocks) {
    const auto binomials = enumerate_kernel_binomials(b.parametrization, bound);
    out << b.name << " (degree <= " << bound.max_degree << "): " << binomials.size() << " binomials\n";
    for (const auto& bin : binomials) out << "  " << format_binomial(b.parametrization.vars(), bin) << "\n";
  }
  return kSuccess;
}

int cmd_normalize(const std::vector<IdealBlock>& blocks, const Options& opt, std::ostream& out,
                  std::ostream& err) {
  const auto it = std::find_if(blocks.begin(), blocks.end(), [&](const IdealBlock& b) { return b.name == opt.ideal; });
  if (it == blocks.end()) {
    err << "error: no ideal named '" << opt.ideal << "'\n";
    return kUsage;
  }
  const auto var = it->parametrization.vars().find(opt.pin);
  if (!var) {
    err << "error: ideal " << opt.ideal << " has no variable '" << opt.pin << "'\n";
    return kUsage;
  }
  const PinResult pin = normalize_pin(it->parametrization, *var);
  IdealBlock shown{it->name, pin.parametrization, std::nullopt, it->line};
  out << format_ideal_block(shown);
  out << "q=" << pin.q.get_str() << "\n";
  out << "pinned " << opt.pin << " -> " << pin.parametrization.params()[pin.pinned_param] << "^" << pin.q.get_str()
      << "\n";
  return kSuccess;
}

int cmd_graph(const std::vector<IdealBlock>& blocks, std::ostream& out) {
  std::vector<FamilyMember> members;
  for (const auto& b : blocks) members.push_back({b.name, b.parametrization.vars()});
  const IdealFamilyGraph g = build_family_graph(members);
  out << "k=" << g.vertex_count() << " r=" << g.component_count() << "\n";
  for (const auto& e : g.edges()) out << "edge " << blocks[e.a].name << " -- " << blocks[e.b].name << " via " << e.shared << "\n";
  for (std::size_t c = 0; c < g.components().size(); ++c) {
    const auto& comp = g.components()[c];
    out << "component " << c + 1 << ": ";
    if (comp.is_tree)
      out << "tree {" << join_ids(blocks, comp.vertices) << "}\n";
    else
      out << "cycle {" << join_ids(blocks, comp.cycle_vertices) << "}\n";
  }
  return g.is_forest() ? kSuccess : kRejected;
}

int cmd_sum(const std::vector<IdealBlock>& blocks, const Options& opt, std::ostream& out) {
  std::vector<NamedParametrization> members;
  for (const auto& b : blocks) members.push_back({b.name, b.parametrization});
  const FamilySumReport report = sum_family(members);

  for (const auto& m : report.merges) out << m << "\n";
  out << format_ideal_block(IdealBlock{"SUM", report.result, std::nullopt, 0});
  out << "dim(rank)=" << report.rank_dimension << "\n";
  out << "predicted(thm)=" << report.iterated_prediction << "\n";
  out << "predicted(formula)=" << report.printed_formula;
  if (report.formulas_disagree) out << "  [disagrees with dim(rank)=" << report.rank_dimension << "]";
  out << "\n";
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";

  if (!opt.certify) return kSuccess;
  const DegreeBound bound = degree_bound(blocks, opt.max_degree);
  std::vector<Binomial> gens;
  for (const auto& b : blocks) {
    const auto own = b.generators ? *b.generators : enumerate_kernel_binomials(b.parametrization, bound);
    for (const auto& g : own) gens.push_back(embed_by_name(b.parametrization.vars(), g, report.result.vars()));
  }
  const CertificationVerdict verdict = certify_generators(report.result, gens, bound);
  out << "verdict: " << to_string(verdict.status) << " (degree " << verdict.degree_checked
      << (verdict.exact ? "" : ", up to search bound") << ")\n";
  if (verdict.witness) out << "witness: " << format_binomial(report.result.vars(), *verdict.witness) << "\n";
  return verdict.status == VerdictStatus::equal_up_to_degree ? kSuccess : kRejected;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric ideal parametrizations and sums of toric ideals", "toric"};
  app.require_subcommand(1);
  Options opt;

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("FILE", opt.file, "ideal file")->required();
    sub->add_flag("--allow-degenerate", opt.allow_degenerate, "admit variables mapping to 1");
  };
  auto* dim = app.add_subcommand("dim", "rank dimension of each ideal");
  add_file(dim);
  auto* homog = app.add_subcommand("homog", "homogeneity certificate of each ideal");
  add_file(homog);
  auto* kernel = app.add_subcommand("kernel", "kernel binomials up to a degree");
  add_file(kernel);
  kernel->add_option("--max-degree", opt.max_degree, "largest degree enumerated")->check(CLI::PositiveNumber);
  auto* normalize = app.add_subcommand("normalize", "maximal-rank parametrization pinning one variable");
  add_file(normalize);
  normalize->add_option("--ideal", opt.ideal, "ideal block name")->required();
  normalize->add_option("--pin", opt.pin, "variable to pin")->required();
  auto* graph = app.add_subcommand("graph", "graph of the ideal family");
  add_file(graph);
  auto* sum = app.add_subcommand("sum", "parametrization of the sum of all ideals in the file");
  add_file(sum);
  sum->add_flag("--certify", opt.certify, "check the sum against the generators with the oracle");
  sum->add_option("--max-degree", opt.max_degree, "certification degree")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    const ParseOptions parse_options{opt.allow_degenerate ? Degeneracy::allow : Degeneracy::reject};
    const auto blocks = read_ideal_file(opt.file, parse_options);
    if (dim->parsed()) return cmd_dim(blocks, out);
    if (homog->parsed()) return cmd_homog(blocks, out);
    if (kernel->parsed()) return cmd_kernel(blocks, opt, out);
    if (normalize->parsed()) return cmd_normalize(blocks, opt, out, err);
    if (graph->parsed()) return cmd_graph(blocks, out);
    if (sum->parsed()) return cmd_sum(blocks, opt, out);
  } catch (const ParseError& e) {
    err << "error: " << opt.file << ": " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kRejected;
  }
  return kUsage;
}

} // namespace toric::cli
