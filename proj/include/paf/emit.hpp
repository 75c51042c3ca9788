#ifndef PAF_EMIT_HPP
#define PAF_EMIT_HPP

#include <string>
#include <vector>

#include "paf/experiment.hpp"

namespace paf {

// CSV layout: header "iteration,<label>,<label>,..."; one row per
// iteration; a curve truncated by divergence leaves its trailing cells
// empty. Values print with 17 significant digits so a re-parse reproduces
// them exactly.
void write_curves_csv(const std::vector<LearningCurve>& curves, const std::string& path);
std::vector<LearningCurve> read_curves_csv(const std::string& path);

// Simple line plot of the learning curves (iteration vs MSD in dB).
void write_curves_svg(const std::vector<LearningCurve>& curves, const std::string& path,
                      const std::string& title);

void write_text_file(const std::string& text, const std::string& path);

}  // namespace paf

#endif
