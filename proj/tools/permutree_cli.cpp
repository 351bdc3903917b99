// Command-line front end for the delta-permutree calculus: lattice
// enumeration, meet/join on pair sets, vector tables, geometric
// realizations, corner lookup, and the oracle verification suite.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 resource guard.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permutree/permutree.hpp"

namespace {

using namespace permutree;

struct DeltaInput {
  Decoration delta{std::vector<Kind>{Kind::None}};
  bool normalized = false;
};

DeltaInput load_delta(const std::string& word) {
  auto [delta, changed] = Decoration::normalize(word);
  if (changed)
    std::cerr << "note: decoration normalized to '" << delta.word()
              << "' (endpoint letters forced to n)\n";
  return {delta, changed};
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + output_path);
  out << text;
}

std::string dump_json(const io::ordered_json& j) { return j.dump(2) + "\n"; }

int run(int argc, char** argv) {
  CLI::App app{"delta-permutree lattices, meets and joins, and their cube embeddings"};
  app.require_subcommand(1);

  std::string delta_word, output_path, format;
  int max_n = 10;
  bool verbose = false;

  auto add_common = [&](CLI::App* cmd, bool delta_required = true) {
    auto* opt = cmd->add_option("--delta", delta_word, "decoration word over {n,d,u,b}");
    if (delta_required) opt->required();
    cmd->add_option("--output,-o", output_path, "output path (default: stdout)");
    cmd->add_option("--max-n", max_n, "enumeration size guard")->capture_default_str();
    cmd->add_flag("--verbose,-v", verbose, "progress notes on stderr");
  };

  auto guarded_enumerate = [&](const Decoration& delta) {
    int n = delta.size();
    unsigned long long bound = 1;
    for (int i = 2; i <= n; ++i) bound *= static_cast<unsigned long long>(i);
    if (bound > 1000000ull)
      std::cerr << "note: up to " << bound << " nodes, roughly "
                << bound * (static_cast<unsigned long long>(n) * 8 + 48) / (1024 * 1024)
                << " MiB; raise --max-n deliberately\n";
    Lattice lat = enumerate_lattice(delta, {max_n});
    if (verbose)
      std::cerr << "enumerated " << lat.nodes.size() << " nodes, " << lat.covers.size()
                << " covers for " << delta.word() << "\n";
    return lat;
  };

  // enumerate
  auto* cmd_enumerate = app.add_subcommand("enumerate", "enumerate the rotation lattice");
  add_common(cmd_enumerate);
  cmd_enumerate->add_option("--format", format, "json|dot (default json)");
  cmd_enumerate->callback([&] {
    if (format.empty()) format = "json";
    DeltaInput in = load_delta(delta_word);
    Lattice lat = guarded_enumerate(in.delta);
    if (format == "json")
      emit(dump_json(io::lattice_to_json(lat, in.normalized)), output_path);
    else if (format == "dot")
      emit(io::lattice_to_dot(lat), output_path);
    else
      throw CLI::ValidationError("--format", "enumerate supports json|dot");
  });

  // meet / join
  std::string left_text, right_text;
  for (const char* name : {"meet", "join"}) {
    auto* cmd = app.add_subcommand(name, std::string(name) + " of two inversion sets");
    add_common(cmd);
    cmd->add_option("--left", left_text, "pair list i-j,i-j,... (empty = bottom)")->required();
    cmd->add_option("--right", right_text, "pair list i-j,i-j,...")->required();
    bool is_meet = std::string(name) == "meet";
    cmd->callback([&, is_meet] {
      DeltaInput in = load_delta(delta_word);
      int n = in.delta.size();
      PairSet left = PairSet::parse(n, left_text);
      PairSet right = PairSet::parse(n, right_text);
      for (const PairSet* e : {&left, &right})
        if (auto v = is_valid_inversion_set(*e, in.delta); !v.ok)
          throw CLI::ValidationError("--left/--right",
                                     "not a valid inversion set: " + v.violation);
      PairSet result = is_meet ? meet(left, right, in.delta) : join(left, right, in.delta);
      emit(result.to_string() + "\n", output_path);
    });
  }

  // vectors
  auto* cmd_vectors = app.add_subcommand("vectors", "CSV of b, c and a per node");
  add_common(cmd_vectors);
  cmd_vectors->add_option("--format", format, "csv (default)");
  cmd_vectors->callback([&] {
    if (format.empty()) format = "csv";
    if (format != "csv") throw CLI::ValidationError("--format", "vectors supports csv");
    DeltaInput in = load_delta(delta_word);
    emit(io::vectors_to_csv(guarded_enumerate(in.delta)), output_path);
  });

  // geometry
  std::string from_lattice_path;
  auto* cmd_geometry = app.add_subcommand("geometry", "polytope and cubical realizations");
  add_common(cmd_geometry, /*delta_required=*/false);
  cmd_geometry->add_option("--format", format, "json|off (default json)");
  cmd_geometry->add_option("--from-lattice", from_lattice_path,
                           "reuse a lattice JSON emitted by enumerate");
  cmd_geometry->callback([&] {
    if (format.empty()) format = "json";
    std::optional<Lattice> lat;
    bool normalized = false;
    if (!from_lattice_path.empty()) {
      std::ifstream infile(from_lattice_path, std::ios::binary);
      if (!infile) throw std::runtime_error("cannot open " + from_lattice_path);
      io::ordered_json j = io::ordered_json::parse(infile);
      lat = io::lattice_from_json(j);
      normalized = j.value("normalized", false);
      if (!delta_word.empty() && load_delta(delta_word).delta.word() != lat->delta.word())
        throw CLI::ValidationError("--delta", "does not match the lattice file");
    } else {
      if (delta_word.empty()) throw CLI::RequiredError("--delta or --from-lattice");
      DeltaInput in = load_delta(delta_word);
      normalized = in.normalized;
      lat = guarded_enumerate(in.delta);
    }
    std::vector<Permutree> trees = lattice_trees(*lat);
    PolytopeRealization poly = build_polytope(*lat, trees);
    CubicalRealization cube = build_cubical(*lat, trees);
    if (format == "json")
      emit(dump_json(io::geometry_to_json(*lat, poly, cube, normalized)), output_path);
    else if (format == "off")
      emit(io::cubical_to_off(cube), output_path);
    else
      throw CLI::ValidationError("--format", "geometry supports json|off");
  });

  // corners
  auto* cmd_corners = app.add_subcommand("corners", "corner -> extremal node table");
  add_common(cmd_corners);
  cmd_corners->add_option("--format", format, "json|csv (default json)");
  cmd_corners->callback([&] {
    if (format.empty()) format = "json";
    DeltaInput in = load_delta(delta_word);
    Lattice lat = guarded_enumerate(in.delta);
    CubicalRealization cube = build_cubical(lat);
    if (format == "json")
      emit(dump_json(io::corners_to_json(lat, cube, in.normalized)), output_path);
    else if (format == "csv")
      emit(io::corners_to_csv(lat, cube), output_path);
    else
      throw CLI::ValidationError("--format", "corners supports json|csv");
  });

  // verify
  int sweep_n = 0;
  auto* cmd_verify = app.add_subcommand("verify", "oracle conformance suite");
  add_common(cmd_verify, /*delta_required=*/false);
  cmd_verify->add_option("--n", sweep_n, "with --delta all: vertex count of the sweep");
  bool verify_failed = false;
  cmd_verify->callback([&] {
    if (delta_word.empty()) throw CLI::RequiredError("--delta");
    io::ordered_json out;
    if (delta_word == "all") {
      if (sweep_n < 1) throw CLI::ValidationError("--n", "required with --delta all");
      out["n"] = sweep_n;
      out["results"] = io::ordered_json::array();
      bool all_pass = true;
      int interior = sweep_n > 2 ? sweep_n - 2 : 0;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (2 * interior)); ++mask) {
        std::vector<Kind> entries(static_cast<std::size_t>(sweep_n), Kind::None);
        for (int b = 0; b < interior; ++b)
          entries[static_cast<std::size_t>(b) + 1] =
              static_cast<Kind>((mask >> (2 * b)) & 3u);
        oracle::ConformanceReport rep = oracle::run_conformance(Decoration(entries), {max_n});
        all_pass = all_pass && rep.pass;
        out["results"].push_back(io::report_to_json(rep));
      }
      out["pass"] = all_pass;
      verify_failed = !all_pass;
    } else {
      DeltaInput in = load_delta(delta_word);
      oracle::ConformanceReport rep = oracle::run_conformance(in.delta, {max_n});
      out = io::report_to_json(rep);
      verify_failed = !rep.pass;
    }
    emit(dump_json(out), output_path);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return verify_failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
