// Regeneration of the five summary tables from the engine: rank-1 rows,
// the #R > 1 families, the generic length-2 rows, and the worked-case
// constituent tables.
#pragma once

#include <string>

namespace triality::tables {

// which in 1..5; format "csv" or "md". In non-Galois mode the two
// norm-kernel families disappear from tables 4 and 5.
std::string emit(int which, const std::string& format, bool galois = true);

}  // namespace triality::tables
