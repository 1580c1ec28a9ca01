#pragma once

#include <string>

#include "pafp/instance.hpp"

namespace pafp {

// Line-oriented text format:
//
//   c free-form comment ('#' also starts a comment)
//   p pafp <n> <m> <f>
//   s <v>
//   t <v>
//   a <u> <v>     (m arc lines)
//   f <u> <v>     (f pair lines)
//
// Tokens are whitespace-separated decimal integers; the order of 'a'/'f'
// lines is irrelevant; duplicates are deduplicated silently. parse_instance
// rejects (with the offending line number) malformed headers, wrong line
// counts, unknown line types, loops, pairs with equal endpoints,
// out-of-range vertices, and source == target.
PafpInstance parse_instance(const std::string& text);

// Canonical form: one comment line, header, terminals, then arcs and pairs
// each sorted ascending. parse_instance(serialize_instance(i)) == i.
std::string serialize_instance(const PafpInstance& inst);

// Reads and parses a file; parse_error messages are prefixed with the path.
PafpInstance load_instance_file(const std::string& path);

}  // namespace pafp
