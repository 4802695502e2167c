#ifndef TORIC_IDEAL_FILE_HPP
#define TORIC_IDEAL_FILE_HPP

// Line-oriented ideal/family files:
//
//   # comment
//   ideal I1
//   vars z1 z2 x
//   params t s
//   row 1 -1 0
//   row 1 1 1
//   gen z1*z2 - x^2
//
// Variable names shared between blocks identify shared variables; parameter
// names are local to their block.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toric/monomial.hpp"
#include "toric/parametrization.hpp"

namespace toric {

struct IdealBlock {
  std::string name;
  Parametrization parametrization;
  std::optional<std::vector<Binomial>> generators;  // absent without `gen` lines
  std::size_t line = 0;                             // line of the `ideal` header
};

struct ParseOptions {
  Degeneracy degeneracy = Degeneracy::reject;
};

/// Throws ParseError with the offending 1-based line number.
std::vector<IdealBlock> parse_ideal_file(std::string_view text, const ParseOptions& options = {});
std::vector<IdealBlock> read_ideal_file(const std::filesystem::path& path, const ParseOptions& options = {});

std::string format_ideal_block(const IdealBlock& block);
std::string format_ideal_file(std::span<const IdealBlock> blocks);

} // namespace toric

#endif
