#include <iostream>

#include "CLI11.hpp"

#include "commands.hpp"
#include "clusel/error.hpp"

using namespace clusel::cli;

namespace {

void data_options(CLI::App* app, DataOptions& d, bool required = true) {
  auto* opt = app->add_option("data", d.path, "numeric CSV file");
  if (required) opt->required();
  opt->check(CLI::ExistingFile);
  app->add_flag("--header", d.header, "first line is a header");
  app->add_option("--delimiter", d.delimiter, "field separator")->default_str(",");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dataset profiling, cluster validity indices and algorithm selection."};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "random seed")->default_val(0);
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->default_val("table");
  app.add_option("--kb", g.kb_path, "knowledge base JSON (default: bundled seed)");

  ProfileOptions prof;
  auto* profile = app.add_subcommand("profile", "size, dimension, noise and convexity profile");
  data_options(profile, prof.data);
  profile->add_option("--k", prof.k, "clusters for the convexity estimate")->check(CLI::PositiveNumber);
  profile->add_flag("--convexity", prof.convexity, "run the convexity estimate (needs --k)");
  profile->add_option("--tau", prof.tau, "convexity threshold")->default_val(0.7);
  profile->add_option("--alpha", prof.alpha, "fixed alpha instead of the smallest connecting one");
  profile->add_flag("--pca2d", prof.pca2d, "project onto two principal components first");
  profile->add_option("--dump-boundary", prof.dump_boundary, "write alpha-shape boundary points as CSV");

  RecommendOptions rec;
  DataOptions rec_data;
  std::vector<std::string> answers;
  std::string k_known, convex, size, noise, high_dim, shapes, preprocess;
  auto* recommend = app.add_subcommand("recommend", "decision-tree or filter based recommendation");
  data_options(recommend, rec_data, false);
  recommend->add_option("--k", rec.k, "clusters for the convexity auto-fill")->check(CLI::PositiveNumber);
  recommend->add_option("--tree", rec.tree, "auto, algorithms, indices or both")
      ->check(CLI::IsMember({"auto", "algorithms", "indices", "both"}));
  recommend->add_option("--answer", answers, "question=value, repeatable");
  recommend->add_flag("--k-known{yes}", k_known, "number of clusters known (=no to deny)");
  recommend->add_option("--convex", convex, "clusters convex: yes/no/any");
  recommend->add_option("--size", size, "small/medium/large/any");
  recommend->add_option("--noise", noise, "noise present: yes/no/any");
  recommend->add_option("--high-dim", high_dim, "high-dimensional: yes/no/any");
  recommend->add_option("--shapes", shapes, "arbitrary, compact or any")
      ->check(CLI::IsMember({"arbitrary", "compact", "convex", "any"}));
  recommend->add_flag("--no-preprocess{no},--preprocess{yes}", preprocess,
                      "whether noise may be removed before validation");
  recommend->add_option("--filter", rec.filters, "dimension=value, repeatable; filter mode");
  recommend->add_flag("--interactive", rec.interactive, "ask open questions on the terminal");
  recommend->add_option("--answers-file", rec.answers_file, "JSON answers to replay");
  recommend->add_option("--record", rec.record_file, "write the answers given to a JSON file");

  ValidateOptions val;
  std::string index_list;
  auto* validate = app.add_subcommand("validate", "evaluate validity indices for a labelling");
  data_options(validate, val.data);
  validate->add_option("labels", val.labels_path, "one integer label per line, negative = noise")
      ->required()
      ->check(CLI::ExistingFile);
  validate->add_option("--indices", index_list,
                       "comma separated: silhouette,dunn,sdbw,cdbw,dbcv (default all)");
  validate->add_flag("--standardize", val.standardize, "z-score columns first");

  RankOptions rank;
  auto* rank_cmd = app.add_subcommand("rank-complexity", "rank algorithms by steps per sample");
  data_options(rank_cmd, rank.data);
  rank_cmd->add_option("--k", rank.k_grid, "cluster counts (default 2 100 1000)")
      ->check(CLI::PositiveNumber);

  std::string experiment;
  std::size_t table_n = 300;
  auto* reproduce = app.add_subcommand("reproduce", "rerun a reference experiment");
  reproduce->add_option("experiment", experiment, "table1")
      ->required()
      ->check(CLI::IsMember({"table1"}));
  reproduce->add_option("--n", table_n, "two-ring sample size")->default_val(300);

  ExportOptions exp;
  auto* export_kb = app.add_subcommand("export-kb", "write the canonical knowledge base JSON");
  export_kb->add_option("output", exp.path, "target file")->required();
  export_kb->add_option("--parity-fixtures", exp.parity_fixtures, "also write filter/wizard fixtures");
  export_kb->add_option("--fixture-count", exp.fixture_count, "random criteria sets")->default_val(20);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    Output out;
    if (*profile) {
      if (prof.convexity && !prof.k) {
        std::cerr << "usage error: --convexity needs --k\n";
        return 1;
      }
      out = cmd_profile(g, prof);
    } else if (*recommend) {
      if (!rec_data.path.empty()) rec.data = rec_data;
      for (const auto& a : answers) add_answer(rec, a);
      if (!k_known.empty()) add_answer(rec, "k_known=" + k_known);
      if (!convex.empty()) add_answer(rec, "convex=" + convex);
      if (!size.empty()) add_answer(rec, "size=" + size);
      if (!noise.empty()) add_answer(rec, "noise=" + noise);
      if (!high_dim.empty()) add_answer(rec, "high_dim=" + high_dim);
      if (!shapes.empty()) {
        add_answer(rec, "arbitrary_shapes=" + std::string(shapes == "arbitrary" ? "yes"
                                                          : shapes == "any"     ? "any"
                                                                                : "no"));
      }
      if (!preprocess.empty()) add_answer(rec, "noise_preprocessing_ok=" + preprocess);
      out = cmd_recommend(g, rec, std::cin, std::cerr);
    } else if (*validate) {
      std::size_t at = 0;
      while (at < index_list.size()) {
        auto comma = index_list.find(',', at);
        if (comma == std::string::npos) comma = index_list.size();
        if (comma > at) val.indices.push_back(index_list.substr(at, comma - at));
        at = comma + 1;
      }
      out = cmd_validate(g, val);
    } else if (*rank_cmd) {
      out = cmd_rank_complexity(g, rank);
    } else if (*reproduce) {
      out = cmd_reproduce_table1(g, table_n);
    } else if (*export_kb) {
      out = cmd_export_kb(g, exp);
    }
    if (g.format == "json") {
      std::cout << out.json.dump(2) << "\n";
    } else {
      std::cout << out.table;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e);
  }
}
