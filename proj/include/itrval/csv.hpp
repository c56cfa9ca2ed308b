#pragma once

#include <iosfwd>
#include <string>

#include "itrval/dataset.hpp"

namespace itrval {

// Cohort CSV: header `id,y,a,x1,..,xp`, UTF-8, comma separated, `\n` rows.
// An empty cell in an x-column means the covariate is missing; empty y or a
// cells are rejected (rows with missing outcome or arm are not representable).
Dataset read_csv(const std::string& path);
Dataset read_csv_stream(std::istream& in, const std::string& origin);

// Floats are written with the shortest decimal representation that round
// trips, so write_csv followed by read_csv reproduces the dataset exactly.
void write_csv(const Dataset& data, const std::string& path);
void write_csv_stream(const Dataset& data, std::ostream& out);

// Shortest round-trip decimal formatting for a double.
std::string format_double(double value);

}  // namespace itrval
