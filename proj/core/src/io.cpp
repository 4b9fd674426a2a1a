#include "pidc/io.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace pidc {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ')) s.pop_back();
  std::size_t b = 0;
  while (b < s.size() && s[b] == ' ') ++b;
  return s.substr(b);
}

double parse_mass(const std::string& token) {
  char* end = nullptr;
  double v = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0')
    raise(errc::parse_error, "bad probability value '" + token + "'");
  return v;
}

}  // namespace

JointDistribution load_distribution_tsv(std::istream& in, const TsvOptions& opts) {
  std::string line;
  if (!std::getline(in, line)) raise(errc::parse_error, "empty distribution file");
  std::vector<std::string> header = split(strip(line), '\t');
  for (auto& h : header) h = strip(h);
  if (header.size() < 2) raise(errc::parse_error, "need at least one variable and a probability column");

  auto column = [&](const std::string& name) -> int {
    auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : static_cast<int>(it - header.begin());
  };

  int prob_col;
  if (!opts.prob_column.empty()) {
    prob_col = column(opts.prob_column);
    if (prob_col < 0) raise(errc::parse_error, "no column named '" + opts.prob_column + "'");
  } else {
    prob_col = column("p");
    if (prob_col < 0) prob_col = static_cast<int>(header.size()) - 1;
  }

  int target_col = -1;
  if (!opts.target_is_joint) {
    if (!opts.target_column.empty()) {
      target_col = column(opts.target_column);
      if (target_col < 0) raise(errc::parse_error, "no column named '" + opts.target_column + "'");
      if (target_col == prob_col)
        raise(errc::parse_error, "target and probability columns coincide");
    } else {
      for (int i = static_cast<int>(header.size()) - 1; i >= 0; --i)
        if (i != prob_col) {
          target_col = i;
          break;
        }
    }
  }

  std::vector<int> source_cols;
  for (int i = 0; i < static_cast<int>(header.size()); ++i)
    if (i != prob_col && i != target_col) source_cols.push_back(i);
  if (source_cols.empty()) raise(errc::parse_error, "no source columns");

  std::vector<Record> records;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip(line);
    if (s.empty()) continue;
    std::vector<std::string> cells = split(s, '\t');
    if (cells.size() != header.size())
      raise(errc::parse_error, "line " + std::to_string(lineno) + " has " +
                                   std::to_string(cells.size()) + " cells, header has " +
                                   std::to_string(header.size()));
    for (auto& c : cells) c = strip(c);
    Record r;
    for (int i : source_cols) r.sources.push_back(cells[static_cast<std::size_t>(i)]);
    r.mass = parse_mass(cells[static_cast<std::size_t>(prob_col)]);
    if (opts.target_is_joint)
      r.target = make_tuple_symbol(r.sources);
    else
      r.target = cells[static_cast<std::size_t>(target_col)];
    records.push_back(std::move(r));
  }

  DistributionOptions dopts;
  dopts.renormalize = opts.renormalize;
  for (int i : source_cols) dopts.source_names.push_back(header[static_cast<std::size_t>(i)]);
  return JointDistribution::load(records, dopts);
}

JointDistribution load_distribution_file(const std::string& path, const TsvOptions& opts) {
  std::ifstream in(path);
  if (!in) raise(errc::parse_error, "cannot open '" + path + "'");
  return load_distribution_tsv(in, opts);
}

Descriptor parse_descriptor_text(const std::string& text, const JointDistribution& d) {
  const std::size_t n = d.target_size();
  std::vector<Partition> levels{Partition::discrete(n)};

  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ';', '\n');
  std::istringstream in(normalized);
  std::string line;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty()) continue;
    std::vector<std::vector<uint16_t>> blocks;
    for (const std::string& block_text : split(line, '|')) {
      std::vector<uint16_t> block;
      for (const std::string& member : split(block_text, ',')) {
        std::string symbol = strip(member);
        int idx = d.target_index(symbol);
        if (idx < 0)
          raise(errc::parse_error, "'" + symbol + "' is not a target symbol");
        block.push_back(static_cast<uint16_t>(idx));
      }
      blocks.push_back(std::move(block));
    }
    levels.emplace_back(std::move(blocks), n);
  }
  if (levels.size() == 1 && n > 1) levels.push_back(Partition::trivial(n));
  return Descriptor::validate(std::move(levels));
}

std::string format_descriptor(const Descriptor& desc, const JointDistribution& d,
                              const std::string& level_separator) {
  std::ostringstream out;
  for (std::size_t l = 1; l <= desc.depth(); ++l) {
    if (l > 1) out << level_separator;
    const auto& blocks = desc.level(l).blocks();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (b) out << '|';
      for (std::size_t i = 0; i < blocks[b].size(); ++i) {
        if (i) out << ',';
        out << d.target_alphabet()[blocks[b][i]];
      }
    }
  }
  return out.str();
}

Antichain parse_antichain(const std::string& text, int source_count) {
  std::vector<uint32_t> masks;
  std::size_t i = 0;
  std::string s = strip(text);
  while (i < s.size()) {
    if (s[i] != '{') raise(errc::parse_error, "expected '{' in antichain '" + s + "'");
    std::size_t close = s.find('}', i);
    if (close == std::string::npos) raise(errc::parse_error, "unbalanced '{' in '" + s + "'");
    std::vector<int> indices;
    for (const std::string& tok : split(s.substr(i + 1, close - i - 1), ',')) {
      std::string t = strip(tok);
      char* end = nullptr;
      long v = std::strtol(t.c_str(), &end, 10);
      if (end == t.c_str() || *end != '\0' || v < 1 || v > source_count)
        raise(errc::parse_error, "bad source index '" + t + "'");
      indices.push_back(static_cast<int>(v));
    }
    masks.push_back(SourceSet::from_indices(indices).mask);
    i = close + 1;
  }
  if (masks.empty()) raise(errc::empty_collection, "no source sets in '" + s + "'");
  return normalize_antichain(masks);
}

std::string format_antichain(const Antichain& a) {
  std::ostringstream out;
  for (uint32_t m : a.sets) {
    out << '{';
    bool first = true;
    for (int i = 0; i < 32; ++i)
      if (m & (1u << i)) {
        if (!first) out << ',';
        out << (i + 1);
        first = false;
      }
    out << '}';
  }
  return out.str();
}

std::string format_event(const Event& event, const JointDistribution& d) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < event.atoms.size(); ++i) {
    if (i) out << ',';
    out << d.target_alphabet()[event.atoms[i]];
  }
  out << '}';
  return out.str();
}

}  // namespace pidc
