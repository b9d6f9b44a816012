#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sxp/partition.hpp"
#include "sxp/symfunc.hpp"

namespace sxp {

// Partition literals as used by the CLI and reports: "[6,5,5,5,2]", "[]",
// skew shapes "[6,5,5,5,2]/[3,2]" (a bare partition means inner empty).
std::string to_literal(const Partition& p);
std::string to_literal(const SkewShape& s);

Partition partition_from_literal(const std::string& text);     // throws parse_error
SkewShape skew_from_literal(const std::string& text);

// Expansion terms in output order: descending lexicographic index partitions.
std::vector<std::pair<Partition, Int>> ordered_terms(const SchurExpansion& e);

} // namespace sxp
