#pragma once

// Line-oriented JSON dumps for ceer tables, partitions and reductions.
//
//   {"bound":4096}            optional header
//   {"a":1,"b":2,"s":3}        one record per enumerated pair
//
// Partitions are written one class per line as a sorted JSON array.

#include <iosfwd>
#include <string>

#include "ceerlab/ceer.hpp"

namespace ceerlab {

void dump_pairs(std::ostream& out, const CeerTable& table);
CeerTable load_pairs(std::istream& in, Natural default_bound = kDefaultBound);

void dump_classes(std::ostream& out, const Partition& partition);

/// {"n":i,"v":f(i),"s":stage} records, with an optional {"bound":n} header
/// carrying the totality bound.
void dump_reduction(std::ostream& out, const ReductionFn& f);
ReductionFn load_reduction(std::istream& in);

CeerTable load_pairs_file(const std::string& path,
                          Natural default_bound = kDefaultBound);
ReductionFn load_reduction_file(const std::string& path);

}  // namespace ceerlab
