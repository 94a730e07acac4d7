// Command-line front end: annotate simplicial complexes with homology
// coordinates, answer cycle queries, and compute optimal bases and cycles.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "homcoord/annotate.hpp"
#include "homcoord/complex.hpp"
#include "homcoord/errors.hpp"
#include "homcoord/opthom.hpp"
#include "homcoord/optbasis.hpp"
#include "homcoord/queries.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace homcoord;

struct Options {
  std::string complex_path;
  std::string cycle_path;
  std::string cycle_path2;
  std::vector<std::string> cycle_paths;
  int dim = 1;
  bool json_output = false;
  bool largest_component = false;
  bool all_classes = false;
  int threads = 1;
  std::size_t g_cap = 14;
  unsigned seed = 0;  // reserved; every algorithm is deterministic
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SimplicialComplex load_complex(const Options& opt) {
  ParseOptions po;
  po.largest_component = opt.largest_component;
  return parse_complex(read_file(opt.complex_path), po);
}

Chain load_chain(const std::string& path, const SimplicialComplex& k, int fallback_dim) {
  return parse_chain(read_file(path), k, fallback_dim);
}

json simplex_json(const SimplicialComplex& k, int p, SimplexId id) {
  json out = json::array();
  for (VertexId v : k.simplex(p, id)) out.push_back(v);
  return out;
}

json chain_json(const SimplicialComplex& k, const Chain& z) {
  json out = json::array();
  z.members.for_each_set(
      [&](std::size_t id) { out.push_back(simplex_json(k, z.dim, static_cast<SimplexId>(id))); });
  return out;
}

void print_simplex(std::ostream& os, const SimplicialComplex& k, int p, SimplexId id) {
  const auto s = k.simplex(p, id);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ' ';
    os << s[i];
  }
}

// Emits " s0 | s1 | ..." (leading space) or nothing for the empty chain, so
// callers can print a bare "label:" prefix without trailing whitespace.
void print_chain(std::ostream& os, const SimplicialComplex& k, const Chain& z) {
  bool first = true;
  z.members.for_each_set([&](std::size_t id) {
    os << (first ? " " : " | ");
    first = false;
    print_simplex(os, k, z.dim, static_cast<SimplexId>(id));
  });
}

std::string class_string(std::uint32_t h, std::size_t g) {
  std::string s(g, '0');
  for (std::size_t i = 0; i < g; ++i)
    if ((h >> i) & 1) s[i] = '1';
  return s;
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

int cmd_betti(const Options& opt) {
  const SimplicialComplex k = load_complex(opt);
  const int value = betti(k, opt.dim);
  if (opt.json_output)
    emit({{"command", "betti"}, {"dim", opt.dim}, {"value", value}});
  else
    std::cout << value << '\n';
  return 0;
}

int cmd_annotate(const Options& opt) {
  const SimplicialComplex k = load_complex(opt);
  const AnnotationIndex idx = build_annotation_index(k, opt.dim);
  if (opt.json_output) {
    json anns = json::array();
    for (SimplexId id = 0; id < k.size(opt.dim); ++id)
      anns.push_back({{"simplex", simplex_json(k, opt.dim, id)},
                      {"bits", idx.annotation(id).to_string()}});
    json basis = json::array();
    for (const Chain& h : idx.basis) basis.push_back(chain_json(k, h));
    emit({{"command", "annotate"},
          {"dim", opt.dim},
          {"g", idx.g},
          {"annotations", anns},
          {"basis", basis}});
    return 0;
  }
  std::cout << "dim " << opt.dim << '\n' << "g " << idx.g << '\n';
  for (SimplexId id = 0; id < k.size(opt.dim); ++id) {
    std::cout << "ann ";
    print_simplex(std::cout, k, opt.dim, id);
    const std::string bits = idx.annotation(id).to_string();
    std::cout << ' ' << (bits.empty() ? "-" : bits) << '\n';
  }
  for (std::size_t i = 0; i < idx.basis.size(); ++i) {
    std::cout << "basis " << i << ":";
    print_chain(std::cout, k, idx.basis[i]);
    std::cout << '\n';
  }
  return 0;
}

int cmd_query(const Options& opt, const std::string& mode) {
  const SimplicialComplex k = load_complex(opt);
  const AnnotationIndex idx = build_annotation_index(k, opt.dim);
  if (mode == "null") {
    const bool value = is_null_homologous(k, idx, load_chain(opt.cycle_path, k, opt.dim));
    if (opt.json_output)
      emit({{"command", "query"}, {"mode", "null"}, {"value", value}});
    else
      std::cout << (value ? "true" : "false") << '\n';
    return 0;
  }
  if (mode == "homologous") {
    const Chain z1 = load_chain(opt.cycle_path, k, opt.dim);
    const Chain z2 = load_chain(opt.cycle_path2, k, opt.dim);
    const bool value = are_homologous(k, idx, z1, z2);
    if (opt.json_output)
      emit({{"command", "query"}, {"mode", "homologous"}, {"value", value}});
    else
      std::cout << (value ? "true" : "false") << '\n';
    return 0;
  }
  std::vector<Chain> cycles;
  cycles.reserve(opt.cycle_paths.size());
  for (const auto& path : opt.cycle_paths) cycles.push_back(load_chain(path, k, opt.dim));
  const auto selected = max_independent_subset(k, idx, cycles);
  if (opt.json_output) {
    emit({{"command", "query"}, {"mode", "independent"}, {"selected", selected}});
  } else {
    for (std::size_t i = 0; i < selected.size(); ++i) {
      if (i) std::cout << ' ';
      std::cout << selected[i];
    }
    std::cout << '\n';
  }
  return 0;
}

int cmd_basis(const Options& opt) {
  const SimplicialComplex k = load_complex(opt);
  const AnnotationIndex idx = build_annotation_index(k, 1);
  const HomologyBasisResult r = shortest_homology_basis(k, idx, opt.threads);
  if (opt.json_output) {
    json cycles = json::array();
    for (const auto& bc : r.cycles)
      cycles.push_back({{"weight", bc.candidate.weight},
                        {"annotation", bc.candidate.annotation.to_string()},
                        {"edges", chain_json(k, bc.cycle)}});
    emit({{"command", "basis"},
          {"g", idx.g},
          {"total_weight", r.total_weight},
          {"cycles", cycles}});
    return 0;
  }
  std::cout << "g " << idx.g << '\n'
            << "total_weight " << format_weight(r.total_weight) << '\n';
  for (std::size_t i = 0; i < r.cycles.size(); ++i) {
    const auto& bc = r.cycles[i];
    std::cout << "cycle " << i << " weight " << format_weight(bc.candidate.weight) << " ann "
              << bc.candidate.annotation.to_string() << ":";
    print_chain(std::cout, k, bc.cycle);
    std::cout << '\n';
  }
  return 0;
}

int cmd_shortest_cycle(const Options& opt) {
  const SimplicialComplex k = load_complex(opt);
  const AnnotationIndex idx = build_annotation_index(k, 1);
  OptHomOptions oo;
  oo.g_cap = opt.g_cap;
  oo.threads = opt.threads;
  if (opt.all_classes) {
    const auto all = all_class_optima(k, idx, oo);
    if (opt.json_output) {
      json classes = json::array();
      for (std::size_t h = 0; h < all.size(); ++h)
        classes.push_back({{"class", class_string(static_cast<std::uint32_t>(h), idx.g)},
                           {"weight", all[h].weight},
                           {"cycle", chain_json(k, all[h].cycle)}});
      emit({{"command", "shortest-cycle"}, {"g", idx.g}, {"classes", classes}});
      return 0;
    }
    std::cout << "g " << idx.g << '\n';
    for (std::size_t h = 0; h < all.size(); ++h) {
      std::cout << "class " << class_string(static_cast<std::uint32_t>(h), idx.g) << " weight "
                << format_weight(all[h].weight) << " cycle:";
      print_chain(std::cout, k, all[h].cycle);
      std::cout << '\n';
    }
    return 0;
  }
  const Chain z = load_chain(opt.cycle_path, k, 1);
  const OptimalCycle r = shortest_homologous_cycle(k, idx, z, oo);
  const std::string cls = annotate_cycle(k, idx, z).to_string();
  if (opt.json_output) {
    emit({{"command", "shortest-cycle"},
          {"class", cls},
          {"weight", r.weight},
          {"cycle", chain_json(k, r.cycle)}});
    return 0;
  }
  std::cout << "class " << cls << '\n' << "weight " << format_weight(r.weight) << '\n'
            << "cycle:";
  print_chain(std::cout, k, r.cycle);
  std::cout << '\n';
  return 0;
}

void add_common(CLI::App* sub, Options& opt, bool with_dim) {
  sub->add_option("complex", opt.complex_path, "complex file")->required();
  sub->add_flag("--json", opt.json_output, "emit JSON instead of text");
  sub->add_flag("--largest-component", opt.largest_component,
                "keep the largest component of a disconnected 1-skeleton");
  sub->add_option("--threads", opt.threads, "worker threads for per-source sweeps")
      ->default_val(1);
  sub->add_option("--seed", opt.seed, "reserved; all algorithms are deterministic");
  if (with_dim) sub->add_option("--dim", opt.dim, "simplex dimension p")->default_val(1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homology coordinates for weighted simplicial complexes"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* betti_cmd = app.add_subcommand("betti", "print the p-th Betti number");
  add_common(betti_cmd, opt, true);

  CLI::App* annotate_cmd =
      app.add_subcommand("annotate", "annotate every p-simplex with its homology coordinates");
  add_common(annotate_cmd, opt, true);

  CLI::App* query_cmd = app.add_subcommand("query", "homology queries against an annotation");
  query_cmd->require_subcommand(1);
  CLI::App* null_cmd = query_cmd->add_subcommand("null", "is the cycle null homologous?");
  add_common(null_cmd, opt, true);
  null_cmd->add_option("cycle", opt.cycle_path, "cycle file")->required();
  CLI::App* hom_cmd = query_cmd->add_subcommand("homologous", "are the two cycles homologous?");
  add_common(hom_cmd, opt, true);
  hom_cmd->add_option("cycle1", opt.cycle_path, "first cycle file")->required();
  hom_cmd->add_option("cycle2", opt.cycle_path2, "second cycle file")->required();
  CLI::App* ind_cmd =
      query_cmd->add_subcommand("independent", "maximal homology-independent subset");
  add_common(ind_cmd, opt, true);
  ind_cmd->add_option("cycles", opt.cycle_paths, "cycle files")->required()->expected(-1);

  CLI::App* basis_cmd = app.add_subcommand("basis", "shortest homology basis of H_1");
  add_common(basis_cmd, opt, false);

  CLI::App* sc_cmd =
      app.add_subcommand("shortest-cycle", "shortest cycle homologous to the input");
  add_common(sc_cmd, opt, false);
  CLI::Option* sc_cycle = sc_cmd->add_option("--cycle", opt.cycle_path, "cycle file");
  CLI::Option* sc_all =
      sc_cmd->add_flag("--all-classes", opt.all_classes, "optimum for every class");
  sc_cycle->excludes(sc_all);
  sc_cmd->add_option("--g-cap", opt.g_cap, "covering-graph width cap")->default_val(14);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*betti_cmd) return cmd_betti(opt);
    if (*annotate_cmd) return cmd_annotate(opt);
    if (*query_cmd) {
      if (*null_cmd) return cmd_query(opt, "null");
      if (*hom_cmd) return cmd_query(opt, "homologous");
      return cmd_query(opt, "independent");
    }
    if (*basis_cmd) return cmd_basis(opt);
    if (*sc_cmd) {
      if (!opt.all_classes && opt.cycle_path.empty())
        throw Error("shortest-cycle needs --cycle <file> or --all-classes");
      return cmd_shortest_cycle(opt);
    }
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
