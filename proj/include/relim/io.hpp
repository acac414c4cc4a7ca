#ifndef RELIM_IO_HPP
#define RELIM_IO_HPP

#include <string>
#include <string_view>

#include "relim/coding.hpp"
#include "relim/limit.hpp"
#include "relim/structure.hpp"

namespace relim {

// Line-oriented whitespace-separated text formats. '#' starts a comment,
// blank lines are ignored. Serialization is canonical (sorted tuples and
// cells), so parse(serialize(x)) == x and equal values serialize to
// identical bytes.

// Structure files:
//   lang R/2 S/1
//   size 3
//   R 1 2
//   S 3
Structure parse_structure(std::string_view text);
std::string serialize_structure(const Structure& s);

// Coded hypergraph families:
//   lang R/3
//   size 9
//   edge R 1,2|3 4 9
DHypFamily parse_dhyp(std::string_view text);
std::string serialize_dhyp(const DHypFamily& d);

// Step limits, one selected cell signature per line; colors follow the
// subset family order of the partition's class positions, '*' means every
// color at that position:
//   lang R/2
//   resolution 2
//   cell R 1|2 * * 2
StepLimit parse_limit(std::string_view text);
std::string serialize_limit(const StepLimit& f);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace relim

#endif
