#ifndef HMF_ACCEPTANCE_SUITE_HPP
#define HMF_ACCEPTANCE_SUITE_HPP

#include <ostream>
#include <string>
#include <vector>

namespace acceptance {

struct criterion_result {
    int id = 0;
    bool pass = false;
    std::string summary;
    double seconds = 0;
};

criterion_result run_criterion(int id);
// runs 1..9 and prints one line per criterion as it finishes
std::vector<criterion_result> run_all(std::ostream & out);
std::string format_line(criterion_result const & r);

} // namespace acceptance

#endif
