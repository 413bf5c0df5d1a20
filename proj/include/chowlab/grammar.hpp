#pragma once

#include <string>
#include <string_view>

#include "chowlab/grassmann.hpp"

namespace chowlab {

// Textual grammars used by the command line:
//   ring:    G(k,n), G(k,n)^m, products joined with 'x', e.g. G(2,4)^3
//   bundle:  taut(i) | triv(r) | dual(e) | sum(e,e) | tensor(e,e)
//            | wedge(p,e) | sym(p,e)
//   class:   product of factors joined with '*', each factor one of
//            an integer, c(d, bundle), sigma[parts|parts|...], h(i)
// Tautological leaves are written without a rank; ranks bind when the
// expression meets a ring.

GrassmannProduct parse_ring(std::string_view text);
BundleExpr parse_bundle(std::string_view text);
SchubertClass parse_class(std::string_view text, const GrassmannProduct& ring);

std::string format_ring(const GrassmannProduct& ring);
std::string format_partition(const Partition& p);            // [4,3,2,1]
std::string format_tuple(const PartitionTuple& t);           // [2,1|,|1]
std::string format_class(const SchubertClass& c);            // 9*sigma[4,3,2,1] + ...
std::string format_multischur(const MultiSchur& m);

}  // namespace chowlab
