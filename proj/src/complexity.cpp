#include "paf/complexity.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace paf {

Algo algo_from_name(const std::string& name) {
    if (name == "pnlms") return Algo::pnlms;
    if (name == "plms") return Algo::plms;
    if (name == "dplms") return Algo::dplms;
    if (name == "dmplms") return Algo::dmplms;
    if (name == "dwmplms") return Algo::dwmplms;
    throw std::invalid_argument("unknown algorithm id: " + name);
}

namespace {

long log2i(int taps) {
    if (taps < 1 || (taps & (taps - 1)) != 0)
        throw std::invalid_argument("complexity_report: taps must be a power of two");
    return static_cast<long>(std::bit_width(static_cast<unsigned>(taps)) - 1);
}

const char* unit_name(Unit u) {
    switch (u) {
        case Unit::mult: return "T_mult";
        case Unit::add: return "T_add";
        case Unit::cmp: return "T_cmp";
        case Unit::div: return "T_div";
        case Unit::f_eval: return "T_F_eval";
    }
    return "?";
}

}  // namespace

ComplexityReport complexity_report(Algo algo, int taps, int delay) {
    const long L = taps;
    const long lg = log2i(taps);
    ComplexityReport r;
    r.algo = algo;
    r.taps = taps;

    switch (algo) {
        case Algo::pnlms:
            // One full iteration closes the loop: every step is on the
            // critical path. The gain row's own summation tree rides in the
            // iteration total.
            r.steps = {
                {"filter output", L, 0, L, 0, {{Unit::mult, 1}, {Unit::add, lg}}},
                {"weighted normalization", 2 * L, 0, L, 0, {{Unit::mult, 2}, {Unit::add, 1 + lg}}},
                {"weight update", 2 * L, 1, L, 0, {{Unit::mult, 1}, {Unit::add, 1}}},
                {"gain calculation", 2, 1, L, 2 * L,
                 {{Unit::cmp, 2 * lg}, {Unit::mult, 1}, {Unit::div, 1}, {Unit::f_eval, 1}}},
            };
            r.total_critical_path = {{Unit::mult, 5}, {Unit::add, 2 + 3 * lg},
                                     {Unit::cmp, 2 * lg}, {Unit::div, 1}, {Unit::f_eval, 1}};
            break;

        case Algo::plms:
            // max-free gain, no weighted normalization
            r.steps = {
                {"filter output", L, 0, L, 0, {{Unit::mult, 1}, {Unit::add, lg}}},
                {"weight update", 2 * L, 0, L, 0, {{Unit::mult, 1}, {Unit::add, 1}}},
                {"gain calculation", L, 1, 2 * L, 0,
                 {{Unit::f_eval, 1}, {Unit::add, 1 + lg}, {Unit::div, 1}, {Unit::mult, 1}}},
            };
            r.total_critical_path = {{Unit::mult, 3}, {Unit::add, 2 + 2 * lg},
                                     {Unit::div, 1}, {Unit::f_eval, 1}};
            break;

        case Algo::dplms:
            r.steps = {
                {"filter output", L, 0, L, 0, {{Unit::mult, 1}, {Unit::add, lg}}},
                {"weight update", 2 * L, 0, L, 0, {{Unit::mult, 1}, {Unit::add, 1}}},
                {"gain calculation", L, 1, 2 * L, 0,
                 {{Unit::f_eval, 1}, {Unit::add, 1 + lg}, {Unit::div, 1}, {Unit::mult, 1}}},
            };
            // retimed across the M-deep pipeline
            r.total_critical_path = {{Unit::mult, 1}};
            r.registers = static_cast<long>(delay) * L;
            break;

        case Algo::dmplms:
            // log-domain gradient: no divider, no gradient multipliers
            r.steps = {
                {"filter output", L, 0, L, 0, {{Unit::mult, 1}, {Unit::add, lg}}},
                {"gain (F + gamma sum)", 0, 0, 2 * L, 0, {{Unit::f_eval, 1}, {Unit::add, 1 + lg}}},
                {"E calculation", 1, 0, 1, 0, {{Unit::mult, 1}, {Unit::add, 1}}},
                {"weight update (LNS)", 0, 0, 3 * L, 0, {{Unit::add, 3}}},
            };
            r.total_critical_path = {{Unit::mult, 1}};
            r.registers = static_cast<long>(delay) * L;
            break;

        case Algo::dwmplms:
            r.steps = {
                {"sliding haar (per phase)", 0, 0, 12, 0, {{Unit::add, 3}}},
                {"filter output (scaled tree)", L, 0, L, 0, {{Unit::mult, 1}, {Unit::add, lg}}},
                {"power normalization", 0, 0, 2 * L, 0, {{Unit::add, 2}}},
                {"gain (F + gamma sum)", 0, 0, 2 * L, 0, {{Unit::f_eval, 1}, {Unit::add, 1 + lg}}},
                {"E calculation", 1, 0, 1, 0, {{Unit::mult, 1}, {Unit::add, 1}}},
                {"weight update (LNS)", 0, 0, 4 * L, 0, {{Unit::add, 4}}},
            };
            r.total_critical_path = {{Unit::mult, 1}};
            // M-deep pipeline plus the even+odd transform register files:
            // (L-2)/2 first-level, (L-4)/2 second-level and 2 (L-8)/2
            // third-level lines per phase
            r.registers = static_cast<long>(delay) * L +
                          2 * ((L - 2) / 2 + (L - 4) / 2 + 2 * ((L - 8) / 2));
            break;
    }
    return r;
}

std::string path_to_string(const std::vector<PathTerm>& path) {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : path) {
        if (t.count == 0) continue;
        if (!first) os << " + ";
        if (t.count != 1) os << t.count << "*";
        os << unit_name(t.unit);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string format_complexity_table(const ComplexityReport& r) {
    static const char* names[] = {"pnlms", "plms", "dplms", "dmplms", "dwmplms"};
    std::ostringstream os;
    os << "algorithm: " << names[static_cast<int>(r.algo)] << "   taps: " << r.taps << "\n";
    os << "step                           mult     div     add     cmp   critical path\n";
    os << "---------------------------------------------------------------------------\n";
    char buf[160];
    for (const auto& s : r.steps) {
        std::snprintf(buf, sizeof buf, "%-28s %6ld  %6ld  %6ld  %6ld   %s\n", s.name.c_str(),
                      s.mult, s.div, s.add, s.cmp, path_to_string(s.critical_path).c_str());
        os << buf;
    }
    os << "---------------------------------------------------------------------------\n";
    os << "iteration critical path: " << path_to_string(r.total_critical_path) << "\n";
    if (r.registers > 0) os << "delay/transform registers: " << r.registers << "\n";
    return os.str();
}

}  // namespace paf
