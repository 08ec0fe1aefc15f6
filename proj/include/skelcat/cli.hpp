#pragma once

#include <iosfwd>

#include "skelcat/instances.hpp"

namespace skelcat {

// exit codes: 0 pass / solutions found, 1 suite failure, 2 schema or IO
// error, 3 no solutions
struct CliOptions {
    std::string path;
    std::vector<std::string> suites;  // empty = all applicable
    Tolerance tol;
    std::string tier = "auto";  // auto | dimension | structure
    std::string emit = "text";  // text | json
    std::string out;            // empty = stdout
    int jobs = 1;
    unsigned seed = 1;
    bool lenient = false;
    std::string target = "pivotal";  // pivotal | module-pivotal (solve)
};

// names of every suite cmd_check knows, in execution order
const std::vector<std::string>& known_suites();

int cmd_check(const CliOptions& opt, std::ostream& err);
int cmd_solve(const CliOptions& opt, std::ostream& err);

}  // namespace skelcat
