#ifndef CLC_SUITES_HPP
#define CLC_SUITES_HPP

#include <string>
#include <vector>

#include "clc/serialize.hpp"

namespace clc {

struct SuiteOptions {
    bool budget = false;    // include the large table rows (r in {6, 7})
    std::string data_dir;   // location of expectations.json; empty = default
};

struct SuiteAssertion {
    std::string id;
    std::string anchor;
    Json expected;
    Json actual;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteAssertion> assertions;
    std::vector<std::string> notes;
    bool pass = true;
};

const std::vector<std::string>& suite_names();

/// Run one reproduction suite against the expectations file. Unknown suite
/// names throw BadSpec.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

Json suite_report_to_json(const SuiteReport& report);

/// --data flag > CLC_DATA_DIR env > compiled-in default > ./data
std::string resolve_data_dir(const std::string& explicit_dir);

}  // namespace clc

#endif
