#pragma once

#include <span>
#include <string>

#include "gbkit/ideal.hpp"
#include "gbkit/oscillator.hpp"

namespace gbkit::svg {

/// Self-contained SVG of a monomial staircase: unit grid over
/// [0, width] x [0, height], cells inside the ideal shaded, minimal
/// generators marked and labelled. `variables` names the two axes.
std::string staircase(const StaircaseDiagram& diagram, const VariableContext& variables,
                      int cell_size = 40);

struct PlotSize {
  int width = 800;
  int height = 400;
};

/// Line plot of an oscillator trajectory with both envelope curves drawn
/// dashed, labelled axes, viewBox scaling.
std::string oscillator(std::span<const oscillator::Sample> samples, PlotSize size = {});

}  // namespace gbkit::svg
