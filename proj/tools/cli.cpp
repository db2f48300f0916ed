#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polaritylab/canon.hpp"
#include "polaritylab/claims.hpp"
#include "polaritylab/decomposition.hpp"
#include "polaritylab/generate.hpp"
#include "polaritylab/graph6.hpp"
#include "polaritylab/obstructions.hpp"
#include "polaritylab/polarity.hpp"

namespace polaritylab::cli {

namespace {

using nlohmann::json;

constexpr int kDefaultMaxN = 8;

struct Options {
  int max_n = kDefaultMaxN;
  int workers = 1;
  std::string format = "text";
  bool quiet = false;
  std::string class_name;
  std::string spec;
  std::string claim = "all";
  std::string catalog_id;
  std::string sidecar;
  int s = 2;
  std::vector<std::string> graphs;
};

struct Context {
  const Options& opt;
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  Execution exec;
  int cap;

  bool json_output() const { return opt.format == "json"; }
  void emit(const json& record) const { out << record.dump() << '\n'; }
};

json to_json(VertexSet s) { return s.to_vector(); }

std::vector<std::string> input_lines(const Context& ctx) {
  if (!ctx.opt.graphs.empty()) return ctx.opt.graphs;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(ctx.in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

// Runs `handle` on every decoded input line; returns the worst exit code.
// Decode failures are reported inline with `bad_input` as their code.
int for_each_graph(const Context& ctx, int bad_input, const std::function<int(const std::string&, const Graph&)>& handle) {
  int code = ExitCode::ok;
  for (const std::string& line : input_lines(ctx)) {
    int line_code = ExitCode::ok;
    try {
      const Graph g = graph6_decode(line);
      line_code = handle(line, g);
    } catch (const Error& e) {
      line_code = e.code() == ErrorCode::cap_exceeded ? ExitCode::cap : bad_input;
      if (ctx.json_output())
        ctx.emit({{"input", line}, {"error", std::string(to_string(e.code()))}, {"message", e.what()}});
      else
        ctx.out << line << " error " << e.what() << '\n';
    }
    code = std::max(code, line_code);
  }
  return code;
}

json certificate_json(const ClassCertificate& cert) {
  static constexpr const char* kKinds[] = {"p4", "double-p4-five-set", "wide-extension", "c5"};
  json out{{"kind", kKinds[static_cast<int>(cert.kind)]}, {"vertices", to_json(cert.vertices)}};
  if (cert.kind == ClassCertificate::Kind::wide_extension) out["extension"] = to_json(cert.extension);
  return out;
}

json tree_json(const DecompTree& tree) {
  json nodes = json::array();
  for (const auto& node : tree.nodes) {
    json n{{"kind", std::string(to_string(node.kind))}, {"vertices", to_json(node.vertices)}, {"children", node.children}};
    if (node.kind == DecompTree::Kind::spider) {
      n["spider"] = node.spider.kind == SpiderKind::thin ? "thin" : "thick";
      n["legs"] = to_json(node.spider.legs);
      n["body"] = to_json(node.spider.body);
      n["head"] = to_json(node.spider.head);
    }
    if (node.kind == DecompTree::Kind::ext_graph || node.kind == DecompTree::Kind::ext_spider) {
      n["extension"] = std::string(to_string(node.ext));
      n["extension_vertices"] = to_json(node.ext_vertices);
    }
    if (node.kind == DecompTree::Kind::ext_spider) n["midpoints"] = to_json(node.midpoints);
    nodes.push_back(std::move(n));
  }
  return nodes;
}

ClassId class_arg(const Context& ctx) { return parse_class_id(ctx.opt.class_name); }

void print_graph_list(const Context& ctx, const std::vector<KeyedGraph>& graphs) {
  for (const auto& g : graphs) {
    if (ctx.json_output())
      ctx.emit({{"graph6", graph6_encode(g.graph)}, {"order", g.graph.order()}, {"canonical", g.key.hex()}});
    else
      ctx.out << graph6_encode(g.graph) << '\n';
  }
}

int cmd_classify(const Context& ctx) {
  static constexpr ClassId kIds[] = {ClassId::cograph, ClassId::p4_sparse, ClassId::p4_extendible, ClassId::six_two};
  return for_each_graph(ctx, ExitCode::negative, [&](const std::string& line, const Graph& g) {
    std::vector<bool> member;
    for (ClassId id : kIds) member.push_back(is_member(g, id));
    const std::size_t p4s = list_induced_p4s(g).size();
    if (ctx.json_output()) {
      ctx.emit({{"input", line}, {"classes", member}, {"p4_count", p4s}, {"canonical", canonical_key(g).hex()}});
    } else {
      ctx.out << line;
      for (std::size_t i = 0; i < 4; ++i) ctx.out << ' ' << to_string(kIds[i]) << '=' << (member[i] ? "true" : "false");
      ctx.out << " p4s=" << p4s << '\n';
    }
    return ExitCode::ok;
  });
}

int cmd_recognize(const Context& ctx) {
  const ClassId id = class_arg(ctx);
  return for_each_graph(ctx, ExitCode::usage, [&](const std::string& line, const Graph& g) {
    const auto cert = class_certificate(g, id);
    const bool verdict = !cert.has_value();
    if (ctx.json_output()) {
      json record{{"input", line}, {"verdict", verdict}, {"canonical", canonical_key(g).hex()}};
      if (cert && !ctx.opt.quiet) record["certificate"] = certificate_json(*cert);
      ctx.emit(record);
    } else {
      ctx.out << line << (verdict ? " true" : " false");
      if (cert && !ctx.opt.quiet) ctx.out << " certificate: " << to_string(*cert);
      ctx.out << '\n';
    }
    return verdict ? ExitCode::ok : ExitCode::negative;
  });
}

int cmd_decompose(const Context& ctx) {
  const ClassId id = class_arg(ctx);
  return for_each_graph(ctx, ExitCode::usage, [&](const std::string& line, const Graph& g) {
    if (auto cert = class_certificate(g, id)) {
      if (ctx.json_output()) {
        json record{{"input", line}, {"verdict", false}, {"canonical", canonical_key(g).hex()}};
        if (!ctx.opt.quiet) record["certificate"] = certificate_json(*cert);
        ctx.emit(record);
      } else {
        ctx.out << line << " false";
        if (!ctx.opt.quiet) ctx.out << " certificate: " << to_string(*cert);
        ctx.out << '\n';
      }
      return ExitCode::negative;
    }
    const DecompTree tree = build_decomposition(g, id);
    if (ctx.json_output()) {
      json record{{"input", line}, {"verdict", true}, {"canonical", canonical_key(g).hex()}};
      if (!ctx.opt.quiet) record["witness"] = tree_json(tree);
      ctx.emit(record);
    } else {
      ctx.out << line << " true\n";
      if (!ctx.opt.quiet) ctx.out << render(tree);
    }
    return ExitCode::ok;
  });
}

int cmd_polar(const Context& ctx) {
  const PolarSpec spec = parse_polar_spec(ctx.opt.spec);
  return for_each_graph(ctx, ExitCode::usage, [&](const std::string& line, const Graph& g) {
    const auto p = find_polar_partition(g, spec);
    if (ctx.json_output()) {
      json record{{"input", line}, {"verdict", p.has_value()}, {"canonical", canonical_key(g).hex()}};
      if (p && !ctx.opt.quiet) record["witness"] = {{"a", to_json(p->a)}, {"b", to_json(p->b)}};
      ctx.emit(record);
    } else {
      ctx.out << line << (p ? " true" : " false");
      if (p && !ctx.opt.quiet) ctx.out << " A=" << json(to_json(p->a)).dump() << " B=" << json(to_json(p->b)).dump();
      ctx.out << '\n';
    }
    return p ? ExitCode::ok : ExitCode::negative;
  });
}

void write_sidecar(const Context& ctx, const std::vector<KeyedGraph>& graphs, const PolarSpec& spec) {
  if (ctx.opt.sidecar.empty()) return;
  std::ofstream file(ctx.opt.sidecar);
  if (!file) throw Error(ErrorCode::bad_parameter, "cannot write " + ctx.opt.sidecar);
  file << obstruction_sidecar(graphs_of(graphs), spec);
}

int cmd_obstructions_enumerate(const Context& ctx) {
  const PolarSpec spec = parse_polar_spec(ctx.opt.spec);
  std::vector<KeyedGraph> found;
  if (ctx.opt.class_name == "all")
    found = filter_minimal_obstructions(enumerate_graphs(ctx.opt.max_n, ctx.exec, ctx.cap), spec, ctx.exec);
  else
    found = enumerate_minimal_obstructions(class_arg(ctx), spec, ctx.opt.max_n, ctx.exec, ctx.cap);
  print_graph_list(ctx, found);
  write_sidecar(ctx, found, spec);
  return ExitCode::ok;
}

int cmd_obstructions_construct(const Context& ctx) {
  const auto found = construct_s1_obstructions(class_arg(ctx), ctx.opt.s, ctx.opt.max_n);
  print_graph_list(ctx, found);
  write_sidecar(ctx, found, PolarSpec::sk_polar(ctx.opt.s, 1));
  return ExitCode::ok;
}

int cmd_obstructions_catalog(const Context& ctx) {
  if (ctx.opt.catalog_id.empty()) {
    for (const CatalogId& id : all_catalog_ids()) ctx.out << to_string(id) << '\n';
    return ExitCode::ok;
  }
  const CatalogId id = parse_catalog_id(ctx.opt.catalog_id);
  const auto graphs = catalog_list(id);
  print_graph_list(ctx, graphs);
  if (auto property = catalog_property(id)) write_sidecar(ctx, graphs, property->second);
  return ExitCode::ok;
}

int cmd_obstructions_check(const Context& ctx) {
  const PolarSpec spec = parse_polar_spec(ctx.opt.spec);
  return for_each_graph(ctx, ExitCode::usage, [&](const std::string& line, const Graph& g) {
    const ObstructionReport report = is_minimal_obstruction(g, spec);
    const char* status = report.is_minimal ? "minimal" : report.is_obstruction ? "not-minimal" : "not-obstruction";
    if (ctx.json_output()) {
      json record{{"input", line},
                  {"verdict", report.is_minimal},
                  {"obstruction", report.is_obstruction},
                  {"canonical", report.canonical.hex()}};
      if (report.is_minimal && !ctx.opt.quiet) {
        json witness = json::array();
        for (const auto& [v, p] : report.deletion_witnesses)
          witness.push_back({{"deleted", v}, {"a", to_json(p.a)}, {"b", to_json(p.b)}});
        record["witness"] = std::move(witness);
      }
      ctx.emit(record);
    } else {
      ctx.out << line << ' ' << status << '\n';
    }
    return report.is_minimal ? ExitCode::ok : ExitCode::negative;
  });
}

int cmd_verify(const Context& ctx, bool explicit_max_n) {
  std::vector<std::string_view> ids;
  if (ctx.opt.claim == "all")
    ids = claim_ids();
  else
    ids.push_back(ctx.opt.claim);
  int code = ExitCode::ok;
  for (std::string_view id : ids) {
    const std::optional<int> n = explicit_max_n ? std::optional<int>(ctx.opt.max_n) : std::nullopt;
    const ClaimReport report = verify_claim(id, n, ctx.exec, ctx.cap);
    if (ctx.json_output()) {
      json record{{"claim", report.id},       {"n_max", report.n_max},     {"verdict", report.passed},
                  {"checked", report.checked}, {"summary", report.summary}};
      if (!ctx.opt.quiet) record["counterexamples"] = report.counterexamples;
      ctx.emit(record);
    } else {
      ctx.out << (report.passed ? "PASS " : "FAIL ") << report.id << " n<=" << report.n_max << ": " << report.summary
              << '\n';
      if (!ctx.opt.quiet)
        for (const auto& c : report.counterexamples) ctx.out << "  " << c << '\n';
    }
    if (!report.passed) code = ExitCode::negative;
  }
  return code;
}

int cmd_gen(const Context& ctx) {
  if (ctx.opt.class_name == "all")
    print_graph_list(ctx, enumerate_graphs(ctx.opt.max_n, ctx.exec, ctx.cap));
  else
    print_graph_list(ctx, generate_class(class_arg(ctx), ctx.opt.max_n, ctx.exec, ctx.cap));
  return ExitCode::ok;
}

int enumeration_ceiling(std::ostream& err) {
  const char* env = std::getenv("POLARITYLAB_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationCap;
  const std::string_view text(env);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 1 || value > Graph::kMaxOrder) {
    err << "ignoring invalid POLARITYLAB_MAX_N='" << text << "'\n";
    return kDefaultEnumerationCap;
  }
  return value;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  opt.workers = available_cores();

  CLI::App app{"Exact toolkit for P4-sparse and P4-extendible graphs and their polarity obstructions", "polaritylab"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--max-n", opt.max_n, "Largest order to enumerate")->check(CLI::Range(1, Graph::kMaxOrder));
  app.add_option("--workers", opt.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--quiet", opt.quiet, "Omit witnesses and certificates");

  const auto classes = CLI::IsMember({"cograph", "p4sparse", "p4extendible", "62"});
  const auto classes_or_all = CLI::IsMember({"cograph", "p4sparse", "p4extendible", "62", "all"});
  const auto decomposable = CLI::IsMember({"p4sparse", "p4extendible"});
  auto add_inputs = [&](CLI::App* sub) { sub->add_option("graphs", opt.graphs, "graph6 strings (default: stdin)"); };

  auto* classify = app.add_subcommand("classify", "Class membership of each input graph");
  add_inputs(classify);

  auto* recognize = app.add_subcommand("recognize", "Membership test with certificate");
  recognize->add_option("--class", opt.class_name)->required()->check(classes);
  add_inputs(recognize);

  auto* decompose = app.add_subcommand("decompose", "Decomposition tree");
  decompose->add_option("--class", opt.class_name)->required()->check(decomposable);
  add_inputs(decompose);

  auto* polar = app.add_subcommand("polar", "Find an (s,k)-polar style partition");
  polar->add_option("--spec", opt.spec)->required();
  add_inputs(polar);

  auto* obstructions = app.add_subcommand("obstructions", "Minimal obstruction tools");
  obstructions->require_subcommand(1);
  auto* enumerate = obstructions->add_subcommand("enumerate", "Minimal obstructions among class members");
  enumerate->add_option("--class", opt.class_name)->required()->check(classes_or_all);
  enumerate->add_option("--spec", opt.spec)->required();
  enumerate->add_option("--sidecar", opt.sidecar, "Write a JSON sidecar to this file");
  auto* construct = obstructions->add_subcommand("construct", "Recursive (s,1)-polar obstruction construction");
  construct->add_option("--class", opt.class_name)->required()->check(decomposable);
  construct->add_option("--s", opt.s)->required()->check(CLI::Range(2, 15));
  construct->add_option("--sidecar", opt.sidecar, "Write a JSON sidecar to this file");
  auto* catalog = obstructions->add_subcommand("catalog", "Reference obstruction lists (no id: list ids)");
  catalog->add_option("--id", opt.catalog_id);
  catalog->add_option("--sidecar", opt.sidecar, "Write a JSON sidecar to this file");
  auto* check = obstructions->add_subcommand("check", "Minimal obstruction test with deletion witnesses");
  check->add_option("--spec", opt.spec)->required();
  add_inputs(check);

  auto* verify = app.add_subcommand("verify", "Run claim checks");
  verify->add_option("--claim", opt.claim, "Claim id or 'all'");

  auto* gen = app.add_subcommand("gen", "Generate class members (or all graphs) up to --max-n");
  gen->add_option("--class", opt.class_name)->required()->check(classes_or_all);

  std::vector<std::string> argv_storage{"polaritylab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  const int cap = enumeration_ceiling(err);
  const bool explicit_max_n = app.count("--max-n") > 0;
  if (opt.max_n > cap) {
    err << "CapExceeded: --max-n " << opt.max_n << " exceeds the enumeration cap " << cap << '\n';
    return ExitCode::cap;
  }
  set_worker_count(opt.workers);
  const Context ctx{opt, in, out, err, opt.workers == 1 ? Execution::serial : Execution::parallel, cap};

  try {
    if (*classify) return cmd_classify(ctx);
    if (*recognize) return cmd_recognize(ctx);
    if (*decompose) return cmd_decompose(ctx);
    if (*polar) return cmd_polar(ctx);
    if (*enumerate) return cmd_obstructions_enumerate(ctx);
    if (*construct) return cmd_obstructions_construct(ctx);
    if (*catalog) return cmd_obstructions_catalog(ctx);
    if (*check) return cmd_obstructions_check(ctx);
    if (*verify) return cmd_verify(ctx, explicit_max_n);
    if (*gen) return cmd_gen(ctx);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == ErrorCode::cap_exceeded ? ExitCode::cap : ExitCode::usage;
  }
  return ExitCode::usage;
}

}  // namespace polaritylab::cli
