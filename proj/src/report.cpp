#include "gca/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gca {

std::string statusName(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
        case Status::Error: return "error";
    }
    return "?";
}

bool CheckEntry::residualsAllZero() const {
    for (const auto& r : residuals)
        if (!r.isZero()) return false;
    return true;
}

bool Report::ok() const {
    for (const auto& e : entries)
        if (e.status == Status::Fail || e.status == Status::Error) return false;
    return true;
}

int Report::failCount() const {
    int n = 0;
    for (const auto& e : entries)
        if (e.status == Status::Fail || e.status == Status::Error) ++n;
    return n;
}

void Report::merge(const Report& r) {
    entries.insert(entries.end(), r.entries.begin(), r.entries.end());
}

const CheckEntry* Report::find(const std::string& id) const {
    for (const auto& e : entries)
        if (e.id == id) return &e;
    return nullptr;
}

CheckEntry residualEntry(std::string id, std::string anchor,
                         std::vector<RingElem> residuals, std::string failWitness) {
    CheckEntry e;
    e.id = std::move(id);
    e.anchor = std::move(anchor);
    e.residuals = std::move(residuals);
    if (e.residualsAllZero()) {
        e.status = Status::Pass;
    } else {
        e.status = Status::Fail;
        e.witness = std::move(failWitness);
    }
    return e;
}

void runBatch(ExecMode mode, std::size_t count, const std::function<void(std::size_t)>& job) {
#ifdef _OPENMP
    if (mode == ExecMode::Parallel) {
        #pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            job(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < count; ++i) job(i);
}

Report runEntryBatch(ExecMode mode, std::size_t count,
                     const std::function<CheckEntry(std::size_t)>& make) {
    std::vector<CheckEntry> out(count);
    runBatch(mode, count, [&](std::size_t i) {
        try {
            out[i] = make(i);
        } catch (const std::exception& ex) {
            CheckEntry e;
            e.id = "item" + std::to_string(i);
            e.status = Status::Error;
            e.witness = ex.what();
            out[i] = std::move(e);
        }
    });
    Report r;
    r.entries = std::move(out);
    return r;
}

} // namespace gca
