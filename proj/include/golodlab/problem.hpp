#ifndef GOLODLAB_PROBLEM_HPP
#define GOLODLAB_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "golodlab/polynomial.hpp"

namespace golod {

// Parsed input document. Key-value lines:
//   ring: x,y,z
//   weights: 1,1,2        (optional, defaults to all 1)
//   ideal: x^2, x*y, y^2
//   power: 2              (optional, defaults to 1)
//   truncate: 5           (optional)
//   command: golod-certify  (optional, corpus runner only)
// '#' starts a comment; blank lines ignored.
struct ProblemSpec {
    RingPtr ring;
    std::vector<Polynomial> ideal;   // the input generators I
    int power = 1;                   // k; effective ideal is I^power
    std::optional<int> truncate;
    std::optional<std::string> command;
};

ProblemSpec parse_problem(const std::string& text);
ProblemSpec load_problem(const std::string& path);

}  // namespace golod

#endif
