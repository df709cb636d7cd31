#pragma once

// Named, re-runnable verification suites.  Each suite binds one claim about
// finite instances to the operations that decide it and to the expected
// outcome; a full run over the built-in corpus doubles as the regression
// gate (any failure is build-breaking).  Suites declare ring prerequisites
// and report "skipped" when a ring does not satisfy them.

#include <chrono>
#include <functional>

#include "finmod/domains.hpp"
#include "finmod/ringprops.hpp"

namespace finmod {

struct CheckResult {
    std::string claim;
    std::string expected;
    std::string observed;
    bool pass = false;
    std::string witness;  // reproduction hint for failures
};

struct SuiteReport {
    std::string suite_id;
    std::string title;
    std::string ring;
    u64 bound = 0;
    u64 seed = 0;
    bool skipped = false;
    std::string skip_reason;
    std::vector<CheckResult> checks;
    double wall_time_s = 0.0;
    unsigned passed_count() const;
    unsigned failed_count() const;
    bool ok() const { return skipped || failed_count() == 0; }
};

struct Suite {
    std::string id;
    std::string title;
    // empty string = applicable; otherwise the skip reason
    std::function<std::string(const RingPtr&)> gate;
    std::function<void(const RingPtr&, const Catalog&, SuiteReport&)> run;
};

const std::vector<Suite>& suite_registry();
bool suite_exists(const std::string& id);

// Throws InapplicableSuite when the gate rejects the ring.
SuiteReport run_suite(const std::string& suite_id, const RingPtr& ring, const Catalog& cat);
// Every registered suite against one ring; inapplicable ones come back as
// skipped reports.  jobs > 1 runs suites concurrently; the report order is
// the registry order either way.
std::vector<SuiteReport> run_all_suites(const RingPtr& ring, const Catalog& cat,
                                        unsigned jobs = 1);

std::string suite_report_json(const SuiteReport& rep);
std::string suite_report_table(const SuiteReport& rep);

}  // namespace finmod
