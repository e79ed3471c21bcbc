#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "graft/verify.hpp"

namespace {

using namespace graft;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ValidationError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& bytes) {
  if (path.empty() || path == "-") {
    std::cout << bytes;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::ValidationError, "cannot open '" + path + "' for writing");
  out << bytes;
}

GraftDocument load_document(const std::string& path) {
  return parse_graft_document(read_input(path));
}

struct ToothArg {
  Label name;
  std::string file;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimum joins and comb decompositions of bipartite grafts"};
  app.require_subcommand(1);
  std::string input = "-", output;
  app.add_option("-o,--output", output, "output file (default stdout)")
      ->capture_default_str();

  auto* minjoin = app.add_subcommand("minjoin", "compute a minimum join");
  std::string minjoin_input = "-";
  bool use_oracle = false;
  minjoin->add_option("input", minjoin_input, "graft document (JSON)");
  minjoin->add_flag("--oracle", use_oracle, "use exhaustive enumeration");

  auto* dist = app.add_subcommand("dist", "distance table from a vertex");
  std::string dist_input = "-", dist_from;
  dist->add_option("input", dist_input, "graft document (JSON)");
  dist->add_option("--from", dist_from, "source vertex label")->required();

  auto* primal = app.add_subcommand("primal", "primality test and root profile");
  std::string primal_input = "-", primal_root;
  primal->add_option("input", primal_input, "graft document (JSON)");
  primal->add_option("--root", primal_root, "root vertex label")->required();

  auto* decompose_cmd =
      app.add_subcommand("decompose", "comb decomposition along a maximal set");
  std::string dec_input = "-", dec_seed;
  bool dec_certify = false;
  decompose_cmd->add_option("input", dec_input, "bipartite graft document");
  decompose_cmd->add_option("--seed-vertex", dec_seed, "growth seed label")
      ->required();
  decompose_cmd->add_flag("--certify", dec_certify,
                          "attach recursive certificates to primal teeth");

  auto* synth = app.add_subcommand("synthesize", "glue tooth grafts into a comb");
  std::string synth_skeleton;
  std::vector<std::string> synth_teeth, synth_attach;
  synth->add_option("--skeleton", synth_skeleton, "comb document (with classes)")
      ->required();
  synth->add_option("--tooth", synth_teeth,
                    "NAME=FILE, tooth document with a \"root\" field or "
                    "NAME=FILE:ROOT");
  synth->add_option("--attach", synth_attach,
                    "SPINE,TOOTH,TARGET attachment override");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  int max_n = 6;
  int trials = 50;
  std::uint64_t seed = 1;
  verify_cmd->add_option("--suite", suite, "one of: joins distances extreme "
                                           "combic fringe rootlize decompose "
                                           "synthesis primal appendix all");
  verify_cmd->add_option("--max-n", max_n, "vertex bound")
      ->envname("GRAFT_MAX_N");
  verify_cmd->add_option("--trials", trials, "random trials per checker");
  verify_cmd->add_option("--seed", seed, "base seed")->envname("GRAFT_SEED");

  auto* gen = app.add_subcommand("gen", "generate a random graft document");
  RandomGraftParams gen_params;
  gen->add_option("--n", gen_params.vertex_count, "vertices")->required();
  gen->add_option("--m", gen_params.edge_count, "edges")->required();
  gen->add_option("--terminal-density", gen_params.terminal_density,
                  "terminal sampling density");
  gen->add_option("--seed", gen_params.seed, "seed")->envname("GRAFT_SEED");
  gen->add_flag("--bipartite", gen_params.bipartite, "two-colored output");

  auto* export_cmd = app.add_subcommand("export", "DOT rendering");
  std::string export_input = "-", export_seed;
  bool export_dot = false;
  export_cmd->add_option("input", export_input, "graft document (JSON)");
  export_cmd->add_flag("--dot", export_dot, "emit DOT (the only format)");
  export_cmd->add_option("--seed-vertex", export_seed,
                         "also decompose and color the regions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (minjoin->parsed()) {
      const Graft g = document_to_graft(load_document(minjoin_input));
      const Join j = use_oracle ? min_join_bruteforce(g) : min_join(g);
      write_output(output, emit_join(g, j));
    } else if (dist->parsed()) {
      const Graft g = document_to_graft(load_document(dist_input));
      const Join f = min_join(g);
      write_output(output, emit_distance_table(
                               g, f_distance_from(g, f, g.graph().index_of(dist_from))));
    } else if (primal->parsed()) {
      const Graft g = document_to_graft(load_document(primal_input));
      const VertexIx r = g.graph().index_of(primal_root);
      const Join f = min_join(g);
      write_output(output, emit_root_profile(g, root_profile(g, f, r)));
    } else if (decompose_cmd->parsed()) {
      const BipartiteGraft g = document_to_bipartite(load_document(dec_input));
      const Join f = min_join(g.graft());
      const VertexSet x = grow_maximal_bipartitic_extreme(
          g, f, g.graph().index_of(dec_seed));
      const CathedralDecomposition dec = decompose(g, f, x);
      if (dec_certify) {
        std::map<Label, PrimalCertificate> owned;
        std::map<Label, const PrimalCertificate*> refs;
        for (const Tooth& tooth : dec.teeth) {
          const Label name = contracted_label(g.graph(), tooth.original_vertices);
          owned.emplace(name,
                        primal_decompose(tooth_as_bipartite(g, tooth), tooth.root));
          refs[name] = &owned.at(name);
        }
        write_output(output, emit_decomposition(g, dec, f, &refs));
      } else {
        write_output(output, emit_decomposition(g, dec, f));
      }
    } else if (synth->parsed()) {
      SynthesisSpec spec;
      spec.comb = document_to_bipartite(load_document(synth_skeleton));
      for (const std::string& raw : synth_teeth) {
        const auto eq = raw.find('=');
        if (eq == std::string::npos)
          fail(Errc::ValidationError, "--tooth expects NAME=FILE");
        const Label name = raw.substr(0, eq);
        std::string file = raw.substr(eq + 1);
        Label root_label;
        if (const auto colon = file.rfind(':'); colon != std::string::npos) {
          root_label = file.substr(colon + 1);
          file = file.substr(0, colon);
        }
        ToothSpec tooth;
        tooth.graft = document_to_bipartite(load_document(file));
        if (root_label.empty())
          fail(Errc::ValidationError,
               "--tooth " + name + " needs FILE:ROOT to name the tooth root");
        tooth.root = tooth.graph().index_of(root_label);
        spec.teeth.emplace(name, std::move(tooth));
      }
      // default attachments: lexicographically least zero-part vertex
      std::map<Label, Label> default_target;
      for (const auto& [name, tooth] : spec.teeth) {
        const Join tf = min_join(tooth.graft.graft());
        const RootProfile tp = root_profile(tooth.graft.graft(), tf, tooth.root);
        default_target[name] = tooth.graph().label(tp.zero_part.front());
      }
      std::map<std::pair<Label, Label>, Label> overrides;
      for (const std::string& raw : synth_attach) {
        std::stringstream ss(raw);
        std::string a, b, c;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ',') ||
            !std::getline(ss, c))
          fail(Errc::ValidationError, "--attach expects SPINE,TOOTH,TARGET");
        overrides[{a, b}] = c;
      }
      for (const Edge& e : spec.comb.graph().edges()) {
        const VertexIx spine_end = spec.comb.in_class_a(e.u) ? e.u : e.v;
        const VertexIx tooth_end = spec.comb.in_class_a(e.u) ? e.v : e.u;
        const Label spine_label = spec.comb.graph().label(spine_end);
        const Label tooth_label = spec.comb.graph().label(tooth_end);
        auto it = overrides.find({spine_label, tooth_label});
        spec.attachments[e.id] =
            it != overrides.end() ? it->second : default_target.at(tooth_label);
      }
      const BipartiteGraft result = synthesize(spec);
      write_output(output, serialize_document(document_from(result)));
    } else if (verify_cmd->parsed()) {
      verify::Options opts;
      opts.max_n = max_n;
      opts.trials = trials;
      opts.seed = seed;
      const verify::VerificationReport report =
          verify::run_verify_suite(suite, opts);
      write_output(output, verify::report_to_json(report));
      return report.ok() ? 0 : 1;
    } else if (gen->parsed()) {
      write_output(output, serialize_document(gen_random_graft(gen_params)));
    } else if (export_cmd->parsed()) {
      const GraftDocument doc = load_document(export_input);
      if (!export_seed.empty()) {
        const BipartiteGraft g = document_to_bipartite(doc);
        const Join f = min_join(g.graft());
        const VertexSet x = grow_maximal_bipartitic_extreme(
            g, f, g.graph().index_of(export_seed));
        write_output(output, emit_dot(g, decompose(g, f, x), f));
      } else {
        write_output(output, emit_dot(document_to_graft(doc)));
      }
    }
  } catch (const GraftError& e) {
    if (e.code() == Errc::UnknownSuite || e.code() == Errc::InfeasibleParameters) {
      std::cerr << "usage error: " << e.what() << "\n";
      return 2;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
