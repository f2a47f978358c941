#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "jnt/perm.hpp"

namespace jnt {

// Parses a group spec string and builds the group.
//
//   sym:n  alt:n  trivial:n  wreath:a,b  stab:i1-i2,j1-j2,...
//   agl:n,q  agammal:n,q  pgl:n,q  pgammal:n,q  psl:n,q
//   psu:q  pgu:q  pgammau:q
//   gens:@file      one permutation per line in cycle notation
//   gens:N:c1;c2    inline generators on N points
//
// n is the vector dimension and q may be written as 9 or 3^2. For stab and
// gens the degree defaults to the largest point mentioned plus one; a
// degree hint (the code's v) overrides it. Points outside every stab range
// are fixed. Throws DomainError on malformed input.
PermGroup parse_group_spec(const std::string& text, std::optional<std::size_t> degree = std::nullopt);

}  // namespace jnt
