#pragma once

#include <iosfwd>
#include <string>

#include "pidc/descriptor.hpp"
#include "pidc/distribution.hpp"
#include "pidc/lattice.hpp"

namespace pidc {

/// Column selection for tab-separated distribution files. The header row
/// names the columns; one column carries the probability mass, one the
/// target, the rest are sources.
struct TsvOptions {
  std::string target_column;  // default: last non-probability column
  std::string prob_column;    // default: column named "p", else last column
  bool renormalize = false;
  /// Treat every non-probability column as a source and synthesize the
  /// target as the tuple of source values.
  bool target_is_joint = false;
};

JointDistribution load_distribution_tsv(std::istream& in, const TsvOptions& opts = {});
JointDistribution load_distribution_file(const std::string& path, const TsvOptions& opts = {});

/// Descriptor text format: one level per line (or ';'-separated), blocks
/// separated by '|', members by ','. Level 0 (all singletons) is implicit.
/// Example for a four-symbol target:
///   y1,y2|y3,y4
///   y1,y2,y3,y4
Descriptor parse_descriptor_text(const std::string& text, const JointDistribution& d);
std::string format_descriptor(const Descriptor& desc, const JointDistribution& d,
                              const std::string& level_separator = "\n");

/// Antichain text syntax: "{1}{2}" for {{1},{2}}, "{1,2}" for {{1,2}}.
Antichain parse_antichain(const std::string& text, int source_count);
std::string format_antichain(const Antichain& a);

std::string format_event(const Event& event, const JointDistribution& d);

}  // namespace pidc
