#ifndef PAF_COMPLEXITY_HPP
#define PAF_COMPLEXITY_HPP

#include <string>
#include <vector>

namespace paf {

enum class Algo { pnlms, plms, dplms, dmplms, dwmplms };

Algo algo_from_name(const std::string& name);  // throws on unknown id

// Critical-path term: count * unit delay.
enum class Unit { mult, add, cmp, div, f_eval };
struct PathTerm {
    Unit unit;
    long count;
};

struct StepCost {
    std::string name;
    long mult = 0, div = 0, add = 0, cmp = 0;  // per-iteration unit counts
    std::vector<PathTerm> critical_path;
};

// Per-iteration area/time breakdown for a length-L filter (L a power of
// two; inner products run on log2(L)-deep adder trees). For the
// un-pipelined algorithms the iteration critical path is the sum over
// steps including the gain-sum tree; for the delayed architectures the
// retimed loop limits at one multiplier.
struct ComplexityReport {
    Algo algo;
    int taps = 0;
    std::vector<StepCost> steps;
    std::vector<PathTerm> total_critical_path;
    long registers = 0;  // extra pipeline/delay-line registers (delayed forms)
};

ComplexityReport complexity_report(Algo algo, int taps, int delay = 5);

std::string path_to_string(const std::vector<PathTerm>& path);
std::string format_complexity_table(const ComplexityReport& r);

}  // namespace paf

#endif
