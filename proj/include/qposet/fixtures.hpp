#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qposet/ortho.hpp"

namespace qposet {

/// A named structure with the classification it must satisfy when loaded.
struct FixtureSpec {
  std::string name;
  std::string description;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;  // (lo, hi) by element name
  std::vector<std::pair<std::string, std::string>> swaps;   // involution 2-cycles; others are fixed
  std::vector<std::pair<std::string, bool>> expected;       // class name -> verdict
  std::size_t expected_size = 0;
};

/// Registered fixtures: chain2, b4, b8, mo2, fig1, fig2, fig3, fig4.
const std::vector<FixtureSpec>& fixture_specs();
std::vector<std::string> fixture_names();

/// Builds the named fixture and runs its load-time assertions. Throws
/// Error{PreconditionViolated} naming the fixture and the violated class on mismatch,
/// Error{InvalidArgument} for an unknown name.
OrthoPoset fixture(const std::string& name);

}  // namespace qposet
