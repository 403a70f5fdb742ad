#pragma once

#include "gca/ring.hpp"

#include <functional>
#include <string>
#include <vector>

namespace gca {

enum class Status { Pass, Fail, Skipped, Error };

std::string statusName(Status s);

/// One verdict. Residual ring elements are kept so an independent
/// evaluation oracle can reproduce the verdict at sample points;
/// checks whose outcome is not residual-shaped leave them empty.
struct CheckEntry {
    std::string id;
    std::string anchor;
    Status status = Status::Pass;
    std::string witness;
    std::vector<RingElem> residuals;

    bool residualsAllZero() const;
};

struct Report {
    std::vector<CheckEntry> entries;

    bool ok() const;
    int failCount() const;
    void add(CheckEntry e) { entries.push_back(std::move(e)); }
    void merge(const Report& r);
    const CheckEntry* find(const std::string& id) const;
};

/// Entry whose pass/fail is "all residuals are the zero ring element".
CheckEntry residualEntry(std::string id, std::string anchor,
                         std::vector<RingElem> residuals, std::string failWitness);

enum class ExecMode { Serial, Parallel };

/// Runs count independent jobs and merges their entries in index order,
/// so the report does not depend on scheduling. The serial path is the
/// reference; the parallel one uses OpenMP when available.
Report runEntryBatch(ExecMode mode, std::size_t count,
                     const std::function<CheckEntry(std::size_t)>& make);

/// Same contract for plain result values.
void runBatch(ExecMode mode, std::size_t count, const std::function<void(std::size_t)>& job);

} // namespace gca
