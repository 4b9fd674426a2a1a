// pidc: descriptor expansions and the shared/union information measures over
// exact discrete distributions, from TSV files or the built-in example
// corpus.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pidc/corpus.hpp"
#include "pidc/expansion.hpp"
#include "pidc/io.hpp"
#include "pidc/multiple.hpp"
#include "pidc/pid.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
  std::string file;
  std::string example;
  bool as_json = false;
  int threads = 0;
  std::size_t max_alphabet = pidc::kDefaultAlphabetCap;
  bool renormalize = false;
  std::string target_col;
  std::string prob_col;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_target) {
  cmd->add_option("file", o.file, "Tab-separated distribution file");
  cmd->add_option("--example", o.example, "Load a built-in example distribution instead");
  cmd->add_flag("--json", o.as_json, "Emit machine-readable JSON");
  cmd->add_option("--threads", o.threads, "Worker threads (default: all cores)");
  cmd->add_option("--max-alphabet", o.max_alphabet,
                  "Cap on positive-mass target symbols for the descriptor search")
      ->envname("PIDC_MAX_ALPHABET");
  cmd->add_flag("--renormalize", o.renormalize, "Accept masses that do not sum to one");
  cmd->add_option("--prob", o.prob_col, "Probability column (default: 'p', else last)");
  if (with_target)
    cmd->add_option("--target", o.target_col,
                    "Target column (default: last non-probability column)");
}

pidc::JointDistribution load_input(const CommonOpts& o, bool joint_target) {
  if (!o.example.empty()) return pidc::canonical_example(o.example).distribution;
  if (o.file.empty())
    pidc::raise(pidc::errc::parse_error, "no input; pass a file or --example NAME");
  pidc::TsvOptions t;
  t.target_column = o.target_col;
  t.prob_column = o.prob_col;
  t.renormalize = o.renormalize;
  t.target_is_joint = joint_target;
  return pidc::load_distribution_file(o.file, t);
}

pidc::SearchConfig search_config(const CommonOpts& o) {
  return {o.max_alphabet, o.threads};
}

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

pidc::Descriptor load_descriptor(const std::string& arg, const pidc::JointDistribution& d) {
  if (arg.empty()) return pidc::Descriptor::shannon(d.target_size());
  std::string text = arg;
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return pidc::parse_descriptor_text(text, d);
}

json descriptor_json(const pidc::Descriptor& desc, const pidc::JointDistribution& d) {
  json levels = json::array();
  for (std::size_t l = 1; l <= desc.depth(); ++l) {
    json blocks = json::array();
    for (const auto& block : desc.level(l).blocks()) {
      json members = json::array();
      for (uint16_t atom : block) members.push_back(d.target_alphabet()[atom]);
      blocks.push_back(members);
    }
    levels.push_back(blocks);
  }
  return levels;
}

int cmd_expand(const CommonOpts& o, const std::string& descriptor_arg,
               const std::string& source_arg) {
  pidc::JointDistribution d = load_input(o, false);
  pidc::Descriptor desc = load_descriptor(descriptor_arg, d);

  pidc::SourceSet a = pidc::SourceSet::all(d.source_count());
  if (!source_arg.empty()) {
    std::vector<int> idx;
    std::istringstream in(source_arg);
    std::string tok;
    while (std::getline(in, tok, ',')) idx.push_back(std::stoi(tok));
    a = pidc::SourceSet::from_indices(idx);
  }

  pidc::Expansion ex = pidc::expand(d, a, desc);
  if (o.as_json) {
    json terms = json::array();
    for (const auto& t : ex.terms)
      terms.push_back({{"level", t.level},
                       {"event", pidc::format_event(t.event, d)},
                       {"weight", t.weight},
                       {"value", t.value}});
    json out{{"terms", terms}, {"total", ex.total}, {"descriptor", descriptor_json(desc, d)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::printf("%-6s %-24s %10s %10s\n", "level", "event", "weight", "value");
  for (const auto& t : ex.terms)
    std::printf("%-6zu %-24s %10s %10s\n", t.level, pidc::format_event(t.event, d).c_str(),
                fixed4(t.weight).c_str(), fixed4(t.value).c_str());
  std::printf("total  %s\n", fixed4(ex.total).c_str());
  return 0;
}

int cmd_decompose(const CommonOpts& o) {
  pidc::JointDistribution d = load_input(o, false);
  pidc::DecompositionResult r = pidc::decompose_two_sources(d, search_config(o));
  if (o.as_json) {
    json raw = json::object();
    for (const auto& [node, mu] : r.raw_mu) raw[pidc::format_antichain(node)] = mu;
    json out{{"total", r.total},
             {"redundant", r.redundant},
             {"unique1", r.unique1},
             {"unique2", r.unique2},
             {"synergy", r.synergy},
             {"shared", r.shared},
             {"union", r.union_value},
             {"raw_mu", raw},
             {"descriptor", descriptor_json(r.minimizing_descriptor, d)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::printf("total      %s\n", fixed4(r.total).c_str());
  std::printf("redundant  %s\n", fixed4(r.redundant).c_str());
  std::printf("unique1    %s\n", fixed4(r.unique1).c_str());
  std::printf("unique2    %s\n", fixed4(r.unique2).c_str());
  std::printf("synergy    %s\n", fixed4(r.synergy).c_str());
  std::printf("descriptor %s\n",
              pidc::format_descriptor(r.minimizing_descriptor, d, " ; ").c_str());
  return 0;
}

int cmd_shared(const CommonOpts& o, const std::string& collection_arg) {
  pidc::JointDistribution d = load_input(o, false);
  pidc::Antichain coll = pidc::parse_antichain(collection_arg, d.source_count());
  pidc::MeasureResult r = pidc::shared_info(d, coll, search_config(o));
  if (o.as_json) {
    json out{{"collection", pidc::format_antichain(coll)},
             {"shared", r.value},
             {"descriptor", descriptor_json(r.descriptor, d)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::printf("shared     %s\n", fixed4(r.value).c_str());
  std::printf("descriptor %s\n", pidc::format_descriptor(r.descriptor, d, " ; ").c_str());
  return 0;
}

int cmd_multi(const CommonOpts& o) {
  pidc::JointDistribution d = load_input(o, true);
  double v = pidc::multiple_information(d, search_config(o));
  if (o.as_json) {
    std::cout << json{{"multiple_information", v}}.dump(2) << "\n";
    return 0;
  }
  std::printf("multiple   %s\n", fixed4(v).c_str());
  return 0;
}

int exit_code_for(pidc::errc code) {
  switch (code) {
    case pidc::errc::alphabet_too_large:
    case pidc::errc::too_many_sources:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Descriptor expansions and shared/union information measures"};
  app.require_subcommand(1);

  CommonOpts expand_opts, decompose_opts, shared_opts, multi_opts;
  std::string descriptor_arg, source_arg, collection_arg = "";

  CLI::App* expand = app.add_subcommand("expand", "Expand I(A;Y) over a descriptor");
  add_common(expand, expand_opts, true);
  expand->add_option("--descriptor", descriptor_arg,
                     "Descriptor file or inline text (default: Shannon descriptor)");
  expand->add_option("--source", source_arg, "Source indices, e.g. 1,2 (default: all)");

  CLI::App* decompose =
      app.add_subcommand("decompose", "Two-source decomposition at the minimizing descriptor");
  add_common(decompose, decompose_opts, true);

  CLI::App* shared = app.add_subcommand("shared", "Shared information of a source collection");
  add_common(shared, shared_opts, true);
  shared->add_option("--collection", collection_arg, "Antichain, e.g. {1}{2}")->required();

  CLI::App* multi = app.add_subcommand("multi", "Multiple information of the sources");
  add_common(multi, multi_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (expand->parsed()) return cmd_expand(expand_opts, descriptor_arg, source_arg);
    if (decompose->parsed()) return cmd_decompose(decompose_opts);
    if (shared->parsed()) return cmd_shared(shared_opts, collection_arg);
    if (multi->parsed()) return cmd_multi(multi_opts);
  } catch (const pidc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
