// Table-verification registry: every numeric table of local reduction data,
// twist/Frobenius behavior, Swan conductors and group-scheme identities that
// the library is expected to reproduce, runnable as named check suites.

#ifndef NERON_REGISTRY_HPP
#define NERON_REGISTRY_HPP

#include <string>
#include <vector>

namespace neron {

struct CaseResult {
    std::string id;
    bool pass;
    std::string computed;
    std::string expected;
};

struct VerifyReport {
    std::string table;
    std::vector<CaseResult> cases;

    int total() const { return static_cast<int>(cases.size()); }
    int passed() const;
    bool all_pass() const { return passed() == total(); }
    std::string summary() const;
};

// registered table ids, in canonical order
std::vector<std::string> registry_tables();

// run one table; unknown id raises DomainError
VerifyReport verify(const std::string& table_id, unsigned long seed = 12345);

std::vector<VerifyReport> verify_all(unsigned long seed = 12345);

}  // namespace neron

#endif
