#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <thread>

#include "gstx/identities.hpp"

namespace gstx::identities {

namespace {

template <class T>
const std::vector<T>* find_list(const std::vector<std::pair<std::string, std::vector<T>>>& lists,
                                const std::string& key) {
    for (const auto& [k, v] : lists)
        if (k == key) return &v;
    return nullptr;
}

// "ID.key" override first, then the shared list.
template <class T>
const std::vector<T>* lookup(const std::vector<std::pair<std::string, std::vector<T>>>& overrides,
                             const std::vector<T>* shared, const std::string& id,
                             const std::string& key) {
    if (const auto* o = find_list(overrides, id + "." + key)) return o;
    return shared;
}

unsigned worker_count(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("GSTX_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return static_cast<unsigned>(n);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

struct Task {
    std::size_t entry;
    Inputs inputs;
};

IdentityReport run_one(const IdentityCatalogEntry& e, const Inputs& in, const QuadConfig& cfg,
                       std::optional<double> tol) {
    IdentityReport r;
    r.id = e.id;
    r.citation = e.citation;
    r.inputs = in;
    r.tol = tol.value_or(e.default_tol);
    r.audit_only = e.audit_only;
    try {
        return check_identity(e.id, in, cfg, tol);
    } catch (const IdentityNonConvergence& ex) {
        return ex.report();
    } catch (const ConstraintViolation& ex) {
        r.status = Status::Skipped;
        r.message = std::string("ConstraintViolation: ") + ex.what();
    } catch (const std::exception& ex) {
        r.status = Status::Error;
        r.message = ex.what();
    }
    return r;
}

}  // namespace

std::vector<Inputs> expand_grid(const GridSpec& grid, const IdentityCatalogEntry& entry) {
    std::vector<std::string> keys = entry.params;
    if (entry.needs_y) keys.push_back("y");

    std::vector<const std::vector<double>*> lists;
    for (const std::string& k : keys) {
        const auto* l = lookup(grid.overrides, find_list(grid.values, k), entry.id, k);
        if (l == nullptr || l->empty()) return {};
        lists.push_back(l);
    }
    const std::vector<std::string> none{""};
    const std::vector<std::string>* fs = &none;
    const std::vector<std::string>* gs = &none;
    if (entry.uses_f) fs = lookup(grid.fn_overrides, &grid.f, entry.id, "f");
    if (entry.uses_g) gs = lookup(grid.fn_overrides, &grid.g, entry.id, "g");
    if (fs->empty() || gs->empty()) return {};

    std::map<std::string, FunctionSlot> parsed;
    const auto slot = [&](const std::string& text) {
        auto it = parsed.find(text);
        if (it == parsed.end()) it = parsed.emplace(text, FunctionSlot::from_expr(text)).first;
        return it->second;
    };

    std::vector<Inputs> points;
    std::vector<std::size_t> idx(lists.size(), 0);
    for (;;) {
        Inputs base;
        for (std::size_t i = 0; i < keys.size(); ++i) {
            const double v = (*lists[i])[idx[i]];
            if (keys[i] == "y")
                base.y = v;
            else
                *base.params.field(keys[i]) = v;
        }
        for (const std::string& f : *fs) {
            for (const std::string& g : *gs) {
                Inputs in = base;
                if (entry.uses_f) in.f = slot(f);
                if (entry.uses_g) in.g = slot(g);
                points.push_back(std::move(in));
            }
        }
        // Odometer over the parameter lists, last key fastest.
        std::size_t i = lists.size();
        while (i > 0) {
            --i;
            if (++idx[i] < lists[i]->size()) break;
            idx[i] = 0;
            if (i == 0) return points;
        }
        if (lists.empty()) return points;
    }
}

SuiteResult run_suite(const GridSpec& grid, const QuadConfig& cfg, unsigned threads) {
    cfg.validate();
    const std::vector<IdentityCatalogEntry>& catalog = list_identities();
    if (grid.identities) {
        for (const std::string& id : *grid.identities)
            if (find_identity(id) == nullptr) throw DomainError("unknown identity '" + id + "'");
    }

    std::vector<Task> tasks;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const IdentityCatalogEntry& e = catalog[i];
        if (grid.identities &&
            std::find(grid.identities->begin(), grid.identities->end(), e.id) == grid.identities->end())
            continue;
        for (Inputs& in : expand_grid(grid, e)) tasks.push_back({i, std::move(in)});
    }

    SuiteResult result;
    result.typo_audit = run_typo_audit(cfg);
    result.reports.resize(tasks.size());

    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) {
            const IdentityCatalogEntry& e = catalog[tasks[k].entry];
            std::optional<double> tol;
            for (const auto& [id, t] : grid.tol)
                if (id == e.id) tol = t;
            result.reports[k] = run_one(e, tasks[k].inputs, cfg, tol);
        }
    };
    const unsigned n = std::min<std::size_t>(worker_count(threads), std::max<std::size_t>(tasks.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
    work();
    for (std::thread& t : pool) t.join();

    SuiteSummary& s = result.summary;
    for (const IdentityReport& r : result.reports) {
        ++s.total;
        if (r.status == Status::Skipped)
            ++s.skipped;
        else if (r.audit_only)
            ++s.audited;
        else if (r.status == Status::Passed)
            ++s.passed;
        else
            ++s.failed;
    }
    return result;
}

}  // namespace gstx::identities
