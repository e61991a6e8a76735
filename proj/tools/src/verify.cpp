#include "mcsdag/cli/cli.hpp"

#include "mcsdag/oracle.hpp"
#include "mcsdag/query.hpp"

namespace mcsdag::cli {

VerifyReport verify_mdag(const Mdag& g, std::string_view x, std::string_view y,
                         std::uint64_t cap) {
    const oracle::MaximalityChecker checker(x, y);
    const MdagQuery query(g);
    VerifyReport report;
    std::string previous;
    auto cursor = query.cursor();
    while (auto em = cursor.next()) {
        if (report.checked == cap) {
            report.truncated = true;
            break;
        }
        const std::string_view s = em->text;
        const bool sorted = report.checked == 0 || previous < s;
        const bool maximal = checker.is_maximal(s);
        if (!sorted) {
            ++report.out_of_order;
        }
        if (!maximal) {
            ++report.not_maximal;
        }
        if ((!sorted || !maximal) && report.first_failure.empty()) {
            report.first_failure = std::string(s);
        }
        previous.assign(s);
        ++report.checked;
    }
    return report;
}

} // namespace mcsdag::cli
