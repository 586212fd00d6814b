// Command-line front end for the graph-product operator toolkit.
//
// Every command reads a graph (--graph) and, where operators are involved, a
// representation (--rep), runs one analysis, and prints a text report or, with
// --json, a deterministic JSON document. Exit codes: 0 on success/pass, 1 on a
// mathematical failure (a tuple that is not regular, a grid sweep that fails),
// 2 on input or usage errors.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpd/dilation.hpp"
#include "gpd/graph.hpp"
#include "gpd/json_io.hpp"
#include "gpd/kernel.hpp"
#include "gpd/linalg.hpp"
#include "gpd/property_p.hpp"
#include "gpd/reduction.hpp"
#include "gpd/representation.hpp"
#include "gpd/word.hpp"

namespace {

using namespace gpd;

struct Options {
  std::string graph_path;
  std::string rep_path;
  double tol = 1e-9;
  int depth = 3;
  int grid = 101;
  int guard = SimpleGraph::kDefaultMaxVertices;
  std::uint64_t seed = 0;
  bool json = false;
  bool top_only = false;
  std::vector<std::string> words;
};

std::string format_complex(const Complex& z) {
  std::ostringstream os;
  os << std::setprecision(10);
  const double re = z.real();
  const double im = z.imag();
  if (im == 0.0) {
    os << re;
  } else if (re == 0.0) {
    os << im << "i";
  } else {
    os << re << (im < 0.0 ? "-" : "+") << std::abs(im) << "i";
  }
  return os.str();
}

void print_matrix(std::ostream& os, const Matrix& m) {
  std::vector<std::string> cells(static_cast<size_t>(m.rows() * m.cols()));
  std::vector<size_t> width(static_cast<size_t>(m.cols()), 0);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      std::string& cell = cells[static_cast<size_t>(i * m.cols() + j)];
      cell = format_complex(m(i, j));
      width[static_cast<size_t>(j)] =
          std::max(width[static_cast<size_t>(j)], cell.size());
    }
  }
  for (int i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (int j = 0; j < m.cols(); ++j) {
      const std::string& cell = cells[static_cast<size_t>(i * m.cols() + j)];
      os << ' ' << std::string(width[static_cast<size_t>(j)] - cell.size(), ' ')
         << cell;
    }
    os << " ]\n";
  }
}

Json operator_matrix_to_json(const OperatorMatrix& m) {
  Json out;
  out["row_labels"] = m.row_labels();
  out["col_labels"] = m.col_labels();
  out["block_dim"] = m.block_dim();
  out["matrix"] = matrix_to_json(m.data());
  return out;
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> word_strings(const std::vector<Word>& words,
                                      const SimpleGraph& g) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const Word& w : words) out.push_back(w.to_string(g));
  return out;
}

void emit(const Json& report) { std::cout << report.dump(2) << "\n"; }

Json report_header(const std::string& command, const Options& opt) {
  Json out;
  out["command"] = command;
  out["seed"] = opt.seed;
  return out;
}

SimpleGraph require_graph(const Options& opt) {
  if (opt.graph_path.empty()) {
    throw std::invalid_argument("--graph is required for this command");
  }
  return load_graph_file(opt.graph_path);
}

Representation require_rep(const Options& opt, const SimpleGraph& g) {
  if (opt.rep_path.empty()) {
    throw std::invalid_argument("--rep is required for this command");
  }
  Representation rep = load_representation_file(opt.rep_path, g);
  const RepresentationReport report = rep.validate(1e-9);
  if (!report.commuting_on_edges) {
    throw std::invalid_argument(
        "the loaded tuple does not commute along the graph edges (largest "
        "commutator norm " +
        std::to_string(report.max_commutator) +
        "); it does not represent the graph product");
  }
  return rep;
}

std::vector<Word> parse_words(const Options& opt, const SimpleGraph& g) {
  std::vector<Word> out;
  out.reserve(opt.words.size());
  for (const std::string& text : opt.words) out.push_back(parse_word(text, g));
  return out;
}

int run_normal_form(const Options& opt) {
  const SimpleGraph g = require_graph(opt);
  const Word w = parse_word(opt.words.at(0), g);
  if (opt.json) {
    Json report = report_header("normal-form", opt);
    report["input"] = opt.words.at(0);
    report["normal_form"] = w.to_string(g);
    report["degree"] = w.degree();
    report["block_count"] = w.block_count();
    emit(report);
  } else {
    std::cout << w.to_string(g) << "\n";
  }
  return 0;
}

int run_blocks(const Options& opt) {
  const SimpleGraph g = require_graph(opt);
  const Word w = parse_word(opt.words.at(0), g);
  const BlockVertexData data = block_vertex_data(w, g);

  std::vector<std::string> initial;
  for (VertexId v : w.initial_vertices()) initial.push_back(g.label(v));

  if (opt.json) {
    Json report = report_header("blocks", opt);
    report["input"] = opt.words.at(0);
    report["normal_form"] = w.to_string(g);
    report["degree"] = w.degree();
    Json blocks = Json::array();
    for (const Word::Block& block : w.blocks()) {
      Json one = Json::array();
      for (const Syllable& s : block) {
        Json syl;
        syl["vertex"] = g.label(s.vertex);
        syl["exponent"] = s.exponent;
        one.push_back(std::move(syl));
      }
      blocks.push_back(std::move(one));
    }
    report["blocks"] = std::move(blocks);
    report["initial_vertices"] = initial;
    report["potential"] = data.potential;
    emit(report);
  } else {
    std::cout << "normal form: " << w.to_string(g) << "\n";
    int index = 0;
    for (const Word::Block& block : w.blocks()) {
      std::vector<Syllable> alone(block.begin(), block.end());
      std::cout << "block " << ++index << ": "
                << Word::from_syllables(alone, g).to_string(g) << "\n";
    }
    std::cout << "degree: " << w.degree() << "\n";
    std::cout << "initial vertices: " << join(initial, ", ") << "\n";
    std::cout << "potential: " << data.potential << "\n";
  }
  return 0;
}

int run_kernel(const Options& opt) {
  const SimpleGraph g = require_graph(opt);
  const Representation rep = require_rep(opt, g);
  const std::vector<Word> words = parse_words(opt, g);
  const Matrix k = kernel(rep, words.at(0), words.at(1));

  if (opt.json) {
    Json report = report_header("kernel", opt);
    report["p"] = words.at(0).to_string(g);
    report["q"] = words.at(1).to_string(g);
    report["dim"] = rep.dim();
    report["matrix"] = matrix_to_json(k);
    emit(report);
  } else {
    std::cout << "K(" << words.at(0).to_string(g) << ", "
              << words.at(1).to_string(g) << ") =\n";
    print_matrix(std::cout, k);
  }
  return 0;
}

int run_gram(const Options& opt) {
  const SimpleGraph g = require_graph(opt);
  const Representation rep = require_rep(opt, g);
  const std::vector<Word> words = parse_words(opt, g);
  const OperatorMatrix m = gram(rep, words);
  const PsdVerdict verdict = psd_check(m.data(), opt.tol);

  if (opt.json) {
    Json report = report_header("gram", opt);
    report["labels"] = m.row_labels();
    report["gram"] = operator_matrix_to_json(m);
    report["min_eigenvalue"] = verdict.min_eigenvalue;
    report["positive"] = verdict.positive;
    emit(report);
  } else {
    std::cout << "words: " << join(m.row_labels(), ", ") << "\n";
    print_matrix(std::cout, m.data());
    std::cout << "min eigenvalue: " << std::setprecision(10)
              << verdict.min_eigenvalue << "\n";
    std::cout << "positive semidefinite: " << (verdict.positive ? "yes" : "no")
              << "\n";
  }
  return 0;
}

int run_check_regular(const Options& opt) {
  const SimpleGraph g = require_graph(opt);
  const Representation rep = require_rep(opt, g);
  const RegularityVerdict verdict =
      check_regular(rep, opt.tol, opt.guard, opt.top_only);

  if (opt.json) {
    Json report = report_header("check-regular", opt);
    report["tol"] = verdict.tol;
    report["top_only"] = opt.top_only;
    report["regular"] = verdict.regular;
    Json subsets = Json::array();
    for (const SubsetRecord& r : verdict.records) {
      Json one;
      one["subset"] = g.format_vertex_set(r.subset);
      one["min_eigenvalue"] = r.min_eigenvalue;
      one["positive"] = r.positive;
      subsets.push_back(std::move(one));
    }
    report["subsets"] = std::move(subsets);
    emit(report);
  } else {
    std::cout << std::left << std::setw(18) << "subset"
              << std::setw(18) << "min eigenvalue" << "positive\n";
    for (const SubsetRecord& r : verdict.records) {
      std::cout << std::left << std::setw(18) << g.format_vertex_set(r.subset)
                << std::setw(18) << std::setprecision(8) << r.min_eigenvalue
                << (r.positive ? "yes" : "no") << "\n";
    }
    std::cout << "verdict: " << (verdict.regular ? "regular" : "not regular");
    if (opt.top_only) {
      std::cout << " (top subset only; this does not certify regularity)";
    }
    std::cout << "\n";
  }
  return verdict.regular ? 0 : 1;
}

int run_factor_cliques(const Options& opt) {
  const SimpleGraph g = require_graph(opt);
  const Representation rep = require_rep(opt, g);
  const OperatorMatrix factor = cholesky_factor_cliques(rep, opt.tol);

  std::vector<Word> clique_words;
  for (const VertexSet& u : g.cliques()) {
    clique_words.push_back(clique_word(u, g));
  }
  const OperatorMatrix target = gram(rep, clique_words);
  const double residual =
      frobenius_norm(target.data() -
                     factor.data() * factor.data().adjoint());

  if (opt.json) {
    Json report = report_header("factor-cliques", opt);
    report["tol"] = opt.tol;
    report["labels"] = factor.row_labels();
    report["factor"] = operator_matrix_to_json(factor);
    report["gram"] = operator_matrix_to_json(target);
    report["residual"] = residual;
    emit(report);
  } else {
    std::cout << "cliques: " << join(factor.row_labels(), ", ") << "\n";
    std::cout << "factor =\n";
    print_matrix(std::cout, factor.data());
    std::cout << "reconstruction residual (Frobenius): "
              << std::setprecision(10) << residual << "\n";
  }
  return 0;
}

int run_reduce_set(const Options& opt) {
  const SimpleGraph g = require_graph(opt);
  const std::vector<Word> input = canonical_word_set(parse_words(opt, g));
  const ReductionTrace trace = reduce_to_single_blocks(input, g);

  if (opt.json) {
    Json report = report_header("reduce-set", opt);
    report["initial"] = word_strings(trace.initial, g);
    report["initial_potential"] = set_potential(trace.initial, g);
    Json steps = Json::array();
    for (const ReductionStep& s : trace.steps) {
      Json one;
      one["vertex"] = g.label(s.lambda);
      one["output"] = word_strings(s.output, g);
      one["potential"] = s.potential_after;
      steps.push_back(std::move(one));
    }
    report["steps"] = std::move(steps);
    report["final"] = word_strings(trace.final_set, g);
    report["all_single_block"] = trace.all_single_block(g);
    emit(report);
  } else {
    std::cout << std::left << std::setw(6) << "step" << std::setw(8)
              << "vertex" << std::setw(6) << "|F|" << "potential\n";
    std::cout << std::left << std::setw(6) << 0 << std::setw(8) << "-"
              << std::setw(6) << trace.initial.size()
              << set_potential(trace.initial, g) << "\n";
    int index = 0;
    for (const ReductionStep& s : trace.steps) {
      std::cout << std::left << std::setw(6) << ++index << std::setw(8)
                << g.label(s.lambda) << std::setw(6) << s.output.size()
                << s.potential_after << "\n";
    }
    std::cout << "final set: " << join(word_strings(trace.final_set, g), ", ")
              << "\n";
    std::cout << "all single block: "
              << (trace.all_single_block(g) ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_dilate(const Options& opt) {
  const SimpleGraph g = require_graph(opt);
  const Representation rep = require_rep(opt, g);
  const TruncatedDilation dil = build_truncated_dilation(rep, opt.depth);
  const DilationReport report = verify_dilation(dil, rep);

  if (opt.json) {
    Json out = report_header("dilate", opt);
    out["depth"] = dil.depth;
    out["tol"] = dil.tol;
    out["ball_size"] = dil.ball.size();
    out["rank"] = dil.rank;
    out["gram_min_eigenvalue"] = dil.gram_min_eigenvalue;
    out["gram_norm"] = dil.gram_norm;
    out["compression_residual"] = report.compression_residual;
    out["kernel_residual"] = report.kernel_residual;
    out["isometry_residual"] = report.isometry_residual;
    emit(out);
  } else {
    std::cout << "depth: " << dil.depth << "\n";
    std::cout << "ball size: " << dil.ball.size() << " words\n";
    std::cout << "rank: " << dil.rank << "\n";
    std::cout << std::setprecision(10);
    std::cout << "gram min eigenvalue: " << dil.gram_min_eigenvalue << "\n";
    std::cout << "compression residual: " << report.compression_residual
              << "\n";
    std::cout << "kernel residual: " << report.kernel_residual << "\n";
    std::cout << "isometry residual: " << report.isometry_residual << "\n";
  }
  return 0;
}

int run_check_nica(const Options& opt) {
  const SimpleGraph g = require_graph(opt);
  const Representation rep = require_rep(opt, g);
  const TruncatedDilation dil = build_truncated_dilation(rep, opt.depth);
  const NicaReport report = verify_nica(dil, rep);

  if (opt.json) {
    Json out = report_header("check-nica", opt);
    out["depth"] = dil.depth;
    out["rank"] = dil.rank;
    out["orthogonality"] = {{"pairs", report.orthogonality_pairs},
                            {"residual", report.orthogonality_residual}};
    out["commutation"] = {{"pairs", report.commutation_pairs},
                          {"residual", report.commutation_residual}};
    out["kernel_shift"] = {{"cases", report.kernel_shift_cases},
                           {"residual", report.kernel_shift_residual}};
    emit(out);
  } else {
    std::cout << std::left << std::setw(16) << "family" << std::setw(8)
              << "cases" << "residual\n";
    std::cout << std::setprecision(10);
    std::cout << std::left << std::setw(16) << "orthogonality" << std::setw(8)
              << report.orthogonality_pairs << report.orthogonality_residual
              << "\n";
    std::cout << std::left << std::setw(16) << "commutation" << std::setw(8)
              << report.commutation_pairs << report.commutation_residual
              << "\n";
    std::cout << std::left << std::setw(16) << "kernel shift" << std::setw(8)
              << report.kernel_shift_cases << report.kernel_shift_residual
              << "\n";
  }
  return 0;
}

int run_check_property_p(const Options& opt) {
  const SimpleGraph g = require_graph(opt);
  const Representation rep = require_rep(opt, g);
  const PropertyPReport report = check_property_p(rep, opt.grid, opt.tol);

  if (opt.json) {
    Json out = report_header("check-property-p", opt);
    out["grid"] = opt.grid;
    out["tol"] = report.tol;
    out["holds_on_grid"] = report.holds_on_grid;
    if (report.empirical_threshold.has_value()) {
      out["empirical_threshold"] = *report.empirical_threshold;
    } else {
      out["empirical_threshold"] = nullptr;
    }
    Json points = Json::array();
    for (const GridPoint& p : report.points) {
      Json one;
      one["r"] = p.r;
      one["min_eigenvalue"] = p.min_eigenvalue;
      one["positive"] = p.positive;
      points.push_back(std::move(one));
    }
    out["points"] = std::move(points);
    emit(out);
  } else {
    std::cout << std::left << std::setw(10) << "r" << std::setw(18)
              << "min eigenvalue" << "positive\n";
    for (const GridPoint& p : report.points) {
      std::cout << std::left << std::setw(10) << std::setprecision(4) << p.r
                << std::setw(18) << std::setprecision(8) << p.min_eigenvalue
                << (p.positive ? "yes" : "no") << "\n";
    }
    std::cout << "holds on grid: " << (report.holds_on_grid ? "yes" : "no")
              << "\n";
    std::cout << "empirical threshold: ";
    if (report.empirical_threshold.has_value()) {
      std::cout << std::setprecision(10) << *report.empirical_threshold;
    } else {
      std::cout << "none";
    }
    std::cout << "\n";
  }
  return report.holds_on_grid ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gpdil: normal forms, Toeplitz kernels, regularity certificates, "
      "truncated isometric dilations, and clique-polynomial positivity for "
      "operator tuples over graph products"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--graph", opt.graph_path,
                 "graph JSON file: {\"vertices\": [...], \"edges\": [...]}");
  app.add_option("--rep", opt.rep_path,
                 "representation JSON file: {\"dim\": d, \"generators\": ...}");
  app.add_option("--tol", opt.tol, "positivity tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--depth", opt.depth, "dilation truncation degree")
      ->check(CLI::PositiveNumber);
  app.add_option("--grid", opt.grid, "grid points on [0, 1]")
      ->check(CLI::Range(2, 1000001));
  app.add_option("--guard", opt.guard,
                 "largest vertex count the subset sweep accepts");
  app.add_option("--seed", opt.seed, "seed echoed into reports");
  app.add_flag("--json", opt.json, "emit a JSON report instead of text");

  CLI::App* normal_form =
      app.add_subcommand("normal-form", "normal form of a word");
  normal_form->add_option("word", opt.words, "word to normalize")
      ->expected(1)
      ->required();

  CLI::App* blocks =
      app.add_subcommand("blocks", "block decomposition of a word");
  blocks->add_option("word", opt.words, "word to decompose")
      ->expected(1)
      ->required();

  CLI::App* kernel_cmd =
      app.add_subcommand("kernel", "kernel matrix K(p, q) of two words");
  kernel_cmd->add_option("words", opt.words, "the two words p and q")
      ->expected(2)
      ->required();

  CLI::App* gram_cmd = app.add_subcommand(
      "gram", "kernel Gram matrix over a list of words, with positivity");
  gram_cmd->add_option("words", opt.words, "words spanning the Gram matrix")
      ->required();

  CLI::App* check_regular_cmd = app.add_subcommand(
      "check-regular",
      "sweep vertex subsets for alternating clique-sum positivity");
  check_regular_cmd->add_flag(
      "--top-only", opt.top_only,
      "test only the full vertex set (exploration; certifies nothing else)");

  app.add_subcommand("factor-cliques",
                     "triangular factorization of the clique Gram matrix");

  CLI::App* reduce_cmd = app.add_subcommand(
      "reduce-set", "reduce a word set to single-block words");
  reduce_cmd->add_option("words", opt.words, "words forming the set")
      ->required();

  app.add_subcommand("dilate",
                     "build the truncated isometric dilation and verify the "
                     "compression identities");
  app.add_subcommand("check-nica",
                     "verify range orthogonality, commutation, and the kernel "
                     "shift law on the truncated dilation");
  app.add_subcommand("check-property-p",
                     "sweep the clique polynomial over a grid on [0, 1]");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (normal_form->parsed()) return run_normal_form(opt);
    if (blocks->parsed()) return run_blocks(opt);
    if (kernel_cmd->parsed()) return run_kernel(opt);
    if (gram_cmd->parsed()) return run_gram(opt);
    if (check_regular_cmd->parsed()) return run_check_regular(opt);
    if (app.get_subcommand("factor-cliques")->parsed()) {
      return run_factor_cliques(opt);
    }
    if (reduce_cmd->parsed()) return run_reduce_set(opt);
    if (app.get_subcommand("dilate")->parsed()) return run_dilate(opt);
    if (app.get_subcommand("check-nica")->parsed()) return run_check_nica(opt);
    if (app.get_subcommand("check-property-p")->parsed()) {
      return run_check_property_p(opt);
    }
    std::cerr << "error: no command\n";
    return 2;
  } catch (const std::domain_error& e) {
    // A mathematically meaningful negative answer (not regular, no
    // factorization, no dilation).
    if (opt.json) {
      Json out;
      out["error"] = e.what();
      out["mathematical_failure"] = true;
      emit(out);
    } else {
      std::cerr << "mathematical failure: " << e.what() << "\n";
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
