#include <cstdlib>
#include <iostream>

#include "acceptance_suite.hpp"

// acceptance [id ...]: all criteria by default
int main(int argc, char ** argv)
{
    std::vector<acceptance::criterion_result> rs;
    if (argc == 1)
        rs = acceptance::run_all(std::cout);
    for (int a = 1; a < argc; a++) {
        rs.push_back(acceptance::run_criterion(std::atoi(argv[a])));
        std::cout << acceptance::format_line(rs.back()) << std::endl;
    }
    int failed = 0;
    for (auto const & r : rs)
        failed += !r.pass;
    std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : std::string("acceptance: all criteria pass"))
              << std::endl;
    return failed ? 1 : 0;
}
