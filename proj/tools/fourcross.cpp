// Command line front end. Results go to stdout, diagnostics to stderr.
// Exit codes: 0 = YES (or plain success), 1 = NO, 2 = usage or input error.

#include "fourcross/fourcross.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace fourcross;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

FileFormat pick_format(const std::string& flag, const std::string& path,
                       const std::string& content) {
  if (flag == "json") return FileFormat::json;
  if (flag == "csv") return FileFormat::csv;
  return sniff_format(path, content);
}

// Output format by destination extension; JSON when writing to a pipe.
FileFormat output_format(const std::string& path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") return FileFormat::csv;
  return FileFormat::json;
}

PointSet load_instance(const std::string& path, const std::string& format_flag) {
  const std::string text = read_input(path);
  return parse_instance(text, pick_format(format_flag, path, text));
}

int report_cross(const std::optional<Cross>& cross) {
  if (cross) {
    std::cout << "YES\n" << cross_to_json(*cross);
    return 0;
  }
  std::cout << "NO\n";
  return 1;
}

int report_bool(bool yes) {
  std::cout << (yes ? "YES\n" : "NO\n");
  return yes ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"4-colored cross decision tool: find four differently colored points, "
               "one per open quadrant of an axis-parallel cross"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string in_path = "-";
  std::string out_path = "-";
  std::string format_flag;
  std::string method = "centers";
  std::string problem;
  std::string kind_name;
  std::string kinds_csv = "uniform";
  std::string algo_name = "decide";
  bool with_witness = false;
  GenSpec gen_spec;
  std::uint64_t gen_n = 0;
  ScalingOptions scaling;

  auto* cmd_decide = app.add_subcommand("decide", "Decide an instance; prints YES plus a witness, or NO");
  cmd_decide->add_option("file", in_path, "instance file, - for stdin");
  cmd_decide->add_option("--format", format_flag, "input format override")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_decide->callback([&] { exit_code = report_cross(decide(load_instance(in_path, format_flag))); });

  auto* cmd_oracle = app.add_subcommand("oracle", "Decide by brute force enumeration");
  cmd_oracle->add_option("file", in_path, "instance file, - for stdin");
  cmd_oracle->add_option("--method", method, "centers or subsets")
      ->check(CLI::IsMember({"centers", "subsets"}));
  cmd_oracle->add_option("--format", format_flag, "input format override")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_oracle->callback([&] {
    const auto ps = load_instance(in_path, format_flag);
    exit_code = report_cross(method == "centers" ? oracle_centers(ps) : oracle_subsets(ps));
  });

  auto* cmd_gen = app.add_subcommand("gen", "Generate a seeded instance");
  cmd_gen->add_option("--kind", kind_name, "uniform, grid, monotone, planted or coug_chain")
      ->required();
  cmd_gen->add_option("--n", gen_n, "point count")->required();
  cmd_gen->add_option("--k", gen_spec.k, "color count");
  cmd_gen->add_option("--seed", gen_spec.seed, "seed");
  cmd_gen->add_option("--bbox", gen_spec.bbox, "coordinate bound");
  cmd_gen->add_option("-o,--output", out_path, "output file, - for stdout");
  cmd_gen->callback([&] {
    const auto kind = parse_gen_kind(kind_name);
    if (!kind) throw std::runtime_error("unknown kind " + kind_name);
    gen_spec.kind = *kind;
    gen_spec.n = static_cast<std::size_t>(gen_n);
    if (gen_spec.kind == GenKind::coug_chain) {
      write_output(out_path, serialize_coug(generate_coug(gen_spec), output_format(out_path)));
    } else {
      write_output(out_path, serialize_instance(generate_points(gen_spec), output_format(out_path)));
    }
  });

  auto* cmd_reduce = app.add_subcommand("reduce", "Apply one reduction step");
  std::string which;
  cmd_reduce->add_option("step", which, "coug2cns or cns24cc")
      ->required()
      ->check(CLI::IsMember({"coug2cns", "cns24cc"}));
  cmd_reduce->add_option("-i,--input", in_path, "input file, - for stdin");
  cmd_reduce->add_option("-o,--output", out_path, "output file, - for stdout");
  cmd_reduce->add_option("--format", format_flag, "input format override")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_reduce->callback([&] {
    const std::string text = read_input(in_path);
    const auto fmt = pick_format(format_flag, in_path, text);
    PointSet out;
    if (which == "coug2cns") {
      out.points = reduce_coug_to_cns(parse_coug(text, fmt)).points;
    } else {
      CnsInstance cns{parse_instance(text, fmt).points};
      out = reduce_cns_to_4cc(cns);
    }
    write_output(out_path, serialize_instance(out, output_format(out_path)));
  });

  auto* cmd_solve = app.add_subcommand("solve", "Solve a gap or negative-slope instance directly");
  cmd_solve->add_option("--problem", problem, "2coug or 2cns")
      ->required()
      ->check(CLI::IsMember({"2coug", "2cns"}));
  cmd_solve->add_option("file", in_path, "instance file, - for stdin");
  cmd_solve->add_option("--format", format_flag, "input format override")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_solve->callback([&] {
    const std::string text = read_input(in_path);
    const auto fmt = pick_format(format_flag, in_path, text);
    if (problem == "2coug") {
      exit_code = report_bool(solve_2coug(parse_coug(text, fmt)));
    } else {
      CnsInstance cns{parse_instance(text, fmt).points};
      exit_code = report_bool(solve_2cns(cns));
    }
  });

  auto* cmd_bench = app.add_subcommand("bench", "Time an algorithm over doubling sizes");
  cmd_bench->add_option("--kinds", kinds_csv, "comma separated generator kinds");
  cmd_bench->add_option("--min-n", scaling.min_n, "smallest size");
  cmd_bench->add_option("--max-n", scaling.max_n, "largest size");
  cmd_bench->add_option("--reps", scaling.reps, "timed repetitions per size");
  cmd_bench->add_option("--algo", algo_name, "decide, oracle_centers, oracle_subsets or reduce");
  cmd_bench->add_option("--k", scaling.k, "color count");
  cmd_bench->add_option("--seed", scaling.seed, "seed");
  cmd_bench->add_option("-o,--output", out_path, "CSV report file, - for stdout");
  cmd_bench->callback([&] {
    scaling.families.clear();
    std::stringstream ss(kinds_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const auto kind = parse_gen_kind(item);
      if (!kind) throw std::runtime_error("unknown kind " + item);
      scaling.families.push_back(*kind);
    }
    const auto algo = parse_bench_algo(algo_name);
    if (!algo) throw std::runtime_error("unknown algo " + algo_name);
    scaling.algo = *algo;
    write_output(out_path, run_scaling(scaling).to_csv());
  });

  auto* cmd_plot = app.add_subcommand("plot", "Render an instance as SVG");
  cmd_plot->add_option("file", in_path, "instance file, - for stdin");
  cmd_plot->add_flag("--witness", with_witness, "decide and highlight a witness cross");
  cmd_plot->add_option("--format", format_flag, "input format override")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd_plot->add_option("-o,--output", out_path, "SVG file, - for stdout");
  cmd_plot->callback([&] {
    const auto ps = load_instance(in_path, format_flag);
    std::optional<Cross> cross;
    if (with_witness) {
      cross = decide(ps);
      if (!cross) std::cerr << "no cross exists; plotting points only\n";
    }
    write_output(out_path, emit_svg(ps, cross));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
